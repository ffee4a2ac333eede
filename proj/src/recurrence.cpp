#include "amplikit/recurrence.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace amplikit {

AmplitudePair iterate_pair(const IterationMatrix& m, int k) {
    if (k < 0) throw IndexOutOfRange("step index must be nonnegative");
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    for (int step = 0; step < k; ++step) {
        const Complex na = m.alpha * a + m.lambda * b;
        const Complex nb = m.beta * a + m.delta * b;
        a = na;
        b = nb;
    }
    return AmplitudePair{a, b, k};
}

Complex iterate_b(const IterationMatrix& m, int k) {
    if (k < 1) throw IndexOutOfRange("three-term recurrence needs k >= 1");
    Complex prev = m.beta;                       // b_1
    if (k == 1) return prev;
    Complex cur = m.beta * (m.alpha + m.delta);  // b_2
    const Complex s = m.alpha + m.delta;
    const Complex q = m.beta * m.lambda - m.alpha * m.delta;
    for (int step = 2; step < k; ++step) {
        const Complex next = s * cur + q * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::int64_t binomial(int n, int r) {
    if (n < 0 || r < 0) {
        throw IndexOutOfRange("binomial arguments must be nonnegative: C(" +
                              std::to_string(n) + ", " + std::to_string(r) + ")");
    }
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::int64_t acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;  // exact: each prefix is itself a binomial
    }
    return acc;
}

std::int64_t binomial_weight_l(int k, int i, int j) {
    if (j < 0 || i < 0 || i > k - 1 - 2 * j) {
        throw IndexOutOfRange("l-weight index outside summation range");
    }
    return binomial(i + j, j) * binomial(k - i - j - 1, j);
}

std::int64_t binomial_weight_t(int k, int i, int j) {
    if (j < 1 || i < 0 || i > k - 2 * j) {
        throw IndexOutOfRange("t-weight index outside summation range");
    }
    return binomial(i + j - 1, j - 1) * binomial(k - i - j, j);
}

namespace {

// The (beta lambda)-polynomial is numerically vicious: its monomials grow
// past 1e26 at k = 40 and cancel back to order one, so the oracle carries
// 256 bits internally and rounds only at the boundary.
constexpr mpfr_prec_t kOraclePrec = 256;
constexpr mpfr_rnd_t R = MPFR_RNDN;

struct BigComplex {
    mpfr_t re, im;

    BigComplex() {
        mpfr_init2(re, kOraclePrec);
        mpfr_init2(im, kOraclePrec);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    explicit BigComplex(Complex z) : BigComplex() {
        mpfr_set_d(re, z.real(), R);
        mpfr_set_d(im, z.imag(), R);
    }
    BigComplex(const BigComplex& o) : BigComplex() {
        mpfr_set(re, o.re, R);
        mpfr_set(im, o.im, R);
    }
    BigComplex(BigComplex&& o) noexcept : BigComplex() {
        mpfr_swap(re, o.re);
        mpfr_swap(im, o.im);
    }
    BigComplex& operator=(BigComplex o) {
        mpfr_swap(re, o.re);
        mpfr_swap(im, o.im);
        return *this;
    }
    ~BigComplex() {
        mpfr_clear(re);
        mpfr_clear(im);
    }

    Complex round() const {
        return Complex{mpfr_get_d(re, R), mpfr_get_d(im, R)};
    }
};

struct Scratch {
    mpfr_t t1, t2, t3;
    Scratch() {
        mpfr_init2(t1, kOraclePrec);
        mpfr_init2(t2, kOraclePrec);
        mpfr_init2(t3, kOraclePrec);
    }
    ~Scratch() {
        mpfr_clear(t1);
        mpfr_clear(t2);
        mpfr_clear(t3);
    }
};

// out = a * b; out must not alias a or b.
void cmul(BigComplex& out, const BigComplex& a, const BigComplex& b,
          Scratch& s) {
    mpfr_mul(s.t1, a.re, b.re, R);
    mpfr_mul(s.t2, a.im, b.im, R);
    mpfr_sub(out.re, s.t1, s.t2, R);
    mpfr_mul(s.t1, a.re, b.im, R);
    mpfr_mul(s.t2, a.im, b.re, R);
    mpfr_add(out.im, s.t1, s.t2, R);
}

// acc += w * x
void accumulate_scaled(BigComplex& acc, std::int64_t w, const BigComplex& x,
                       Scratch& s) {
    mpfr_mul_si(s.t1, x.re, static_cast<long>(w), R);
    mpfr_add(acc.re, acc.re, s.t1, R);
    mpfr_mul_si(s.t1, x.im, static_cast<long>(w), R);
    mpfr_add(acc.im, acc.im, s.t1, R);
}

void cadd(BigComplex& acc, const BigComplex& x) {
    mpfr_add(acc.re, acc.re, x.re, R);
    mpfr_add(acc.im, acc.im, x.im, R);
}

// acc += a * b
void accumulate_product(BigComplex& acc, const BigComplex& a,
                        const BigComplex& b, Scratch& s) {
    mpfr_mul(s.t1, a.re, b.re, R);
    mpfr_mul(s.t2, a.im, b.im, R);
    mpfr_sub(s.t3, s.t1, s.t2, R);
    mpfr_add(acc.re, acc.re, s.t3, R);
    mpfr_mul(s.t1, a.re, b.im, R);
    mpfr_mul(s.t2, a.im, b.re, R);
    mpfr_add(s.t3, s.t1, s.t2, R);
    mpfr_add(acc.im, acc.im, s.t3, R);
}

double distance(const BigComplex& a, const BigComplex& b, Scratch& s) {
    mpfr_sub(s.t1, a.re, b.re, R);
    mpfr_sub(s.t2, a.im, b.im, R);
    mpfr_hypot(s.t3, s.t1, s.t2, R);
    return mpfr_get_d(s.t3, R);
}

std::vector<BigComplex> powers(Complex base, int count, Scratch& s) {
    std::vector<BigComplex> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    out.emplace_back(Complex{1.0, 0.0});
    const BigComplex big_base(base);
    for (int e = 1; e <= count; ++e) {
        BigComplex next;
        cmul(next, out.back(), big_base, s);
        out.push_back(std::move(next));
    }
    return out;
}

struct BigPolyCoefficients {
    std::vector<BigComplex> c;  // j = 0..floor((k-1)/2)
    std::vector<BigComplex> d;  // j = 0..floor(k/2), d[0] = alpha^k
};

BigPolyCoefficients big_poly_coefficients(Complex alpha, Complex delta, int k,
                                          Scratch& s) {
    const std::vector<BigComplex> ap = powers(alpha, k, s);
    const std::vector<BigComplex> dp = powers(delta, k, s);
    BigPolyCoefficients out;
    out.c.resize(static_cast<std::size_t>((k - 1) / 2) + 1);
    out.d.resize(static_cast<std::size_t>(k / 2) + 1);
    BigComplex term;
    for (int j = 0; j <= (k - 1) / 2; ++j) {
        const int degree = k - 1 - 2 * j;
        BigComplex acc;
        for (int n = 0; n <= degree; ++n) {
            const int i = degree - n;
            cmul(term, ap[n], dp[i], s);
            accumulate_scaled(acc, binomial_weight_l(k, i, j), term, s);
        }
        out.c[j] = std::move(acc);
    }
    out.d[0] = ap[k];
    for (int j = 1; j <= k / 2; ++j) {
        const int degree = k - 2 * j;
        BigComplex acc;
        for (int n = 0; n <= degree; ++n) {
            const int i = degree - n;
            cmul(term, ap[n], dp[i], s);
            accumulate_scaled(acc, binomial_weight_t(k, i, j), term, s);
        }
        out.d[j] = std::move(acc);
    }
    return out;
}

void check_poly_step(int k, int cap) {
    if (k < 1) throw IndexOutOfRange("polynomial form needs k >= 1");
    if (k > cap) {
        throw StepTooLarge("polynomial form supports k <= " +
                           std::to_string(kMaxPolynomialStep));
    }
}

}  // namespace

PolyCoefficients compute_poly_coefficients(Complex alpha, Complex delta, int k) {
    check_poly_step(k, kMaxPolynomialStep + 1);
    Scratch s;
    const BigPolyCoefficients big = big_poly_coefficients(alpha, delta, k, s);
    PolyCoefficients out;
    out.k = k;
    out.c.reserve(big.c.size());
    out.d.reserve(big.d.size());
    for (const BigComplex& v : big.c) out.c.push_back(v.round());
    for (const BigComplex& v : big.d) out.d.push_back(v.round());
    return out;
}

Complex polynomial_b(const IterationMatrix& m, int k) {
    check_poly_step(k, kMaxPolynomialStep);
    Scratch s;
    const BigPolyCoefficients coeff =
        big_poly_coefficients(m.alpha, m.delta, k, s);
    const BigComplex bl(m.beta * m.lambda);
    // Horner in (beta lambda), highest coefficient first.
    BigComplex r = coeff.c.back();
    for (std::size_t j = coeff.c.size(); j-- > 1;) {
        BigComplex shifted;
        cmul(shifted, r, bl, s);
        cadd(shifted, coeff.c[j - 1]);
        r = std::move(shifted);
    }
    BigComplex b;
    cmul(b, r, BigComplex(m.beta), s);
    return b.round();
}

bool coefficient_induction_check(int k) {
    if (k < 2 || k > kMaxPolynomialStep) {
        throw IndexOutOfRange("induction check supports 2 <= k <= 40");
    }

    // Exact weight identity at every valid (i, j) of this step.
    for (int j = 1; j <= k / 2; ++j) {
        if (binomial_weight_t(k, 0, j) != binomial_weight_l(k + 1, 0, j)) {
            return false;
        }
        for (int i = 1; i <= k - 2 * j; ++i) {
            const std::int64_t lhs =
                binomial_weight_t(k, i, j) + binomial_weight_l(k, i - 1, j);
            if (lhs != binomial_weight_l(k + 1, i, j)) return false;
        }
    }

    // d_kj + delta c_kj = c_{(k+1)j} on random unit-modulus samples, with
    // the comparison done before anything is rounded to double.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(k));
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    Scratch s;
    for (int sample = 0; sample < 4; ++sample) {
        const Complex alpha = std::polar(1.0, angle(rng));
        const Complex delta = std::polar(1.0, angle(rng));
        const BigComplex big_delta(delta);
        const BigPolyCoefficients at_k =
            big_poly_coefficients(alpha, delta, k, s);
        const BigPolyCoefficients at_k1 =
            big_poly_coefficients(alpha, delta, k + 1, s);
        for (int j = 0; j <= k / 2; ++j) {
            BigComplex lhs = at_k.d[j];
            if (j < static_cast<int>(at_k.c.size())) {
                accumulate_product(lhs, big_delta, at_k.c[j], s);
            }
            const BigComplex& rhs = at_k1.c[j];
            const double gap = distance(lhs, rhs, s);
            const double scale = std::max(1.0, std::abs(rhs.round()));
            if (gap > 1e-10 * scale) return false;
        }
    }
    return true;
}

}  // namespace amplikit
