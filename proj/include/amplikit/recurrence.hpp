#pragma once

#include <cstdint>

#include "amplikit/core.hpp"

namespace amplikit {

// The polynomial evaluator keeps the binomial weights as exact 64-bit
// integers; they stay below C(41,20) ~ 2.7e11 for every step up to here.
inline constexpr int kMaxPolynomialStep = 40;

/// (a_k, b_k) from the coupled recurrence
///   a_{k+1} = alpha a_k + lambda b_k,  b_{k+1} = beta a_k + delta b_k,
/// seeded (a_0, b_0) = (1, 0).
AmplitudePair iterate_pair(const IterationMatrix& m, int k);

/// b_k from the decoupled three-term recurrence
///   b_{k+1} = (alpha+delta) b_k + (beta lambda - alpha delta) b_{k-1},
/// seeded b_1 = beta, b_2 = beta(alpha+delta). Requires k >= 1.
Complex iterate_b(const IterationMatrix& m, int k);

/// C(n, r) exactly in 64 bits. IndexOutOfRange on negative arguments.
std::int64_t binomial(int n, int r);

/// l^{(j)}_{ki} = C(i+j, j) C(k-i-j-1, j).
/// Valid for j >= 0 and 0 <= i <= k-1-2j.
std::int64_t binomial_weight_l(int k, int i, int j);

/// t^{(j)}_{ki} = C(i+j-1, j-1) C(k-i-j, j).
/// Valid for j >= 1 and 0 <= i <= k-2j.
std::int64_t binomial_weight_t(int k, int i, int j);

/// Evaluated coefficients of the (beta lambda)-polynomial forms at step k:
///   b_k = beta sum_j c[j] (beta lambda)^j,  j = 0..floor((k-1)/2)
///   a_k =      sum_j d[j] (beta lambda)^j,  j = 0..floor(k/2), d[0] = alpha^k
struct PolyCoefficients {
    int k = 0;
    std::vector<Complex> c;
    std::vector<Complex> d;
};

PolyCoefficients compute_poly_coefficients(Complex alpha, Complex delta, int k);

/// b_k evaluated through the polynomial form. Requires 1 <= k <= 40;
/// throws StepTooLarge beyond that.
Complex polynomial_b(const IterationMatrix& m, int k);

/// Checks, at step k (2 <= k <= 40):
///  - the exact integer identity t^{(j)}_{ki} + l^{(j)}_{k(i-1)} = l^{(j)}_{(k+1)i}
///    (with the i = 0 edge t^{(j)}_{k0} = l^{(j)}_{(k+1)0}) for every valid (i, j), and
///  - d_kj + delta c_kj = c_{(k+1)j} numerically on seeded random unit-modulus
///    (alpha, delta) samples.
bool coefficient_induction_check(int k);

}  // namespace amplikit
