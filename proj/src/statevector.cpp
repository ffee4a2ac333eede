#include "amplikit/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "amplikit/closed_form.hpp"
#include "amplikit/operator_builder.hpp"
#include "amplikit/recurrence.hpp"

namespace amplikit {

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw IndexOutOfRange("basis index exceeds dimension");
    StateVector s;
    s.amps.assign(dim, Complex{0.0, 0.0});
    s.amps[index] = Complex{1.0, 0.0};
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const Complex& v : amps) acc += std::norm(v);
    return std::sqrt(acc);
}

void WalshHadamard::apply(StateVector& state) const {
    const std::size_t n = state.dim();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t base = 0; base < n; base += half << 1) {
            for (std::size_t i = 0; i < half; ++i) {
                const Complex u = state.amps[base + i];
                const Complex v = state.amps[base + i + half];
                state.amps[base + i] = (u + v) * inv_sqrt2;
                state.amps[base + i + half] = (u - v) * inv_sqrt2;
            }
        }
    }
}

Complex WalshHadamard::entry(std::size_t row, std::size_t col) const {
    const double scale = std::pow(2.0, -0.5 * qubits);
    const int parity = std::popcount(row & col) & 1;
    return Complex{parity ? -scale : scale, 0.0};
}

DenseUnitary::DenseUnitary(std::size_t dim, std::vector<Complex> entries)
    : n(dim), a(std::move(entries)) {
    if (a.size() != n * n) {
        throw IndexOutOfRange("dense unitary entry count does not match size");
    }
    // U* U = I, checked column against column.
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex dot{0.0, 0.0};
            for (std::size_t r = 0; r < n; ++r) {
                dot += std::conj(a[r * n + i]) * a[r * n + j];
            }
            const double expect = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(dot - expect));
        }
    }
    if (worst > 1e-10) {
        throw NumericalDomain("matrix is not unitary (deviation " +
                              std::to_string(worst) + ")");
    }
}

void DenseUnitary::apply(StateVector& state) const {
    if (state.dim() != n) throw IndexOutOfRange("dimension mismatch");
    std::vector<Complex> out(n, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < n; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < n; ++c) acc += a[r * n + c] * state.amps[c];
        out[r] = acc;
    }
    state.amps = std::move(out);
}

void DenseUnitary::apply_inverse(StateVector& state) const {
    if (state.dim() != n) throw IndexOutOfRange("dimension mismatch");
    std::vector<Complex> out(n, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < n; ++r) {
        const Complex v = state.amps[r];
        for (std::size_t c = 0; c < n; ++c) out[c] += std::conj(a[r * n + c]) * v;
    }
    state.amps = std::move(out);
}

std::size_t unitary_dim(const UnitaryOp& u) {
    return std::visit([](const auto& op) { return op.dim(); }, u);
}

void apply_unitary(StateVector& state, const UnitaryOp& u) {
    std::visit([&](const auto& op) { op.apply(state); }, u);
}

void apply_unitary_inverse(StateVector& state, const UnitaryOp& u) {
    std::visit([&](const auto& op) { op.apply_inverse(state); }, u);
}

Complex unitary_entry(const UnitaryOp& u, std::size_t row, std::size_t col) {
    return std::visit([&](const auto& op) { return op.entry(row, col); }, u);
}

namespace {

Complex parse_complex_token(const std::string& token) {
    if (token.empty()) throw MalformedInput("empty matrix entry");
    std::string s = token;
    bool imaginary_suffix = false;
    if (s.back() == 'j' || s.back() == 'i') {
        imaginary_suffix = true;
        s.pop_back();
    }
    // split at the last +/- that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
        }
    }
    auto to_double = [&](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        char* end = nullptr;
        const double v = std::strtod(part.c_str(), &end);
        if (end != part.c_str() + part.size()) {
            throw MalformedInput("bad matrix entry '" + token + "'");
        }
        return v;
    };
    if (!imaginary_suffix) {
        if (split != std::string::npos) {
            throw MalformedInput("bad matrix entry '" + token + "'");
        }
        return Complex{to_double(s), 0.0};
    }
    if (split == std::string::npos) return Complex{0.0, to_double(s)};
    return Complex{to_double(s.substr(0, split)), to_double(s.substr(split))};
}

}  // namespace

DenseUnitary load_unitary(std::istream& in) {
    std::size_t n = 0;
    if (!(in >> n) || n == 0) {
        throw MalformedInput("unitary file must start with its dimension");
    }
    if (n > (std::size_t{1} << kMaxQubits)) {
        throw IndexOutOfRange("unitary dimension exceeds the 2^14 cap");
    }
    std::vector<Complex> entries;
    entries.reserve(n * n);
    std::string token;
    for (std::size_t i = 0; i < n * n; ++i) {
        if (!(in >> token)) {
            throw MalformedInput("unitary file ended after " +
                                 std::to_string(i) + " entries");
        }
        entries.push_back(parse_complex_token(token));
    }
    return DenseUnitary(n, std::move(entries));
}

DenseUnitary load_unitary_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open unitary file '" + path + "'");
    return load_unitary(in);
}

void save_unitary(const DenseUnitary& u, std::ostream& out) {
    out << u.n << "\n";
    for (std::size_t r = 0; r < u.n; ++r) {
        for (std::size_t c = 0; c < u.n; ++c) {
            const Complex v = u.entry(r, c);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", v.real(), v.imag());
            out << (c ? " " : "") << buf;
        }
        out << "\n";
    }
}

DenseUnitary random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0 || dim > (std::size_t{1} << kMaxQubits)) {
        throw IndexOutOfRange("random unitary dimension out of range");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    for (auto& col : cols) {
        for (auto& v : col) v = Complex{gauss(rng), gauss(rng)};
    }
    // Modified Gram-Schmidt, run twice for orthogonality at the 1e-13 level.
    for (std::size_t j = 0; j < dim; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < j; ++i) {
                Complex proj{0.0, 0.0};
                for (std::size_t r = 0; r < dim; ++r) {
                    proj += std::conj(cols[i][r]) * cols[j][r];
                }
                for (std::size_t r = 0; r < dim; ++r) {
                    cols[j][r] -= proj * cols[i][r];
                }
            }
        }
        double len = 0.0;
        for (const Complex& v : cols[j]) len += std::norm(v);
        len = std::sqrt(len);
        if (len < 1e-12) {
            throw NumericalDomain("gaussian draw was rank deficient");
        }
        for (Complex& v : cols[j]) v /= len;
    }
    std::vector<Complex> entries(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) entries[r * dim + c] = cols[c][r];
    }
    return DenseUnitary(dim, std::move(entries));
}

Complex SearchInstance::overlap() const {
    return unitary_entry(unitary, tau_index, gamma_index);
}

PhaseConfig SearchInstance::config() const {
    return make_config(theta, phi, overlap());
}

SearchInstance make_instance(int qubits, std::size_t gamma_index,
                             std::size_t tau_index, double theta, double phi,
                             UnitaryOp unitary) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw IndexOutOfRange("qubit count must lie in [1, 14]");
    }
    const std::size_t dim = std::size_t{1} << qubits;
    if (gamma_index >= dim || tau_index >= dim) {
        throw IndexOutOfRange("basis index exceeds 2^n");
    }
    if (unitary_dim(unitary) != dim) {
        throw IndexOutOfRange("unitary dimension does not match qubit count");
    }
    SearchInstance inst;
    inst.qubits = qubits;
    inst.gamma_index = gamma_index;
    inst.tau_index = tau_index;
    inst.theta = theta;
    inst.phi = phi;
    inst.unitary = std::move(unitary);
    return inst;
}

void apply_phase_operator(StateVector& state, std::size_t index, double angle) {
    if (index >= state.dim()) throw IndexOutOfRange("phase index out of range");
    // 1 - 2cos(x)e^{ix} = -e^{i2x}
    state.amps[index] *= -std::polar(1.0, 2.0 * angle);
}

void apply_Q(StateVector& state, const SearchInstance& inst) {
    apply_unitary(state, inst.unitary);
    apply_phase_operator(state, inst.tau_index, inst.phi);
    apply_unitary_inverse(state, inst.unitary);
    apply_phase_operator(state, inst.gamma_index, inst.theta);
    for (Complex& v : state.amps) v = -v;
}

ExtractedPair extract_pair(const StateVector& state, const SearchInstance& inst) {
    const Complex utg = inst.overlap();
    const double p2 = std::norm(utg);
    const double det = 1.0 - p2;  // Gram determinant
    if (std::abs(det) < 1e-12) {
        throw SingularGram("|gamma> and U^-1|tau> are numerically parallel");
    }
    const std::size_t n = state.dim();
    // c1 = <gamma|state>, c2 = <U^-1 tau|state> = sum_i U_{tau,i} state_i
    const Complex c1 = state.amps[inst.gamma_index];
    Complex c2{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        c2 += unitary_entry(inst.unitary, inst.tau_index, i) * state.amps[i];
    }
    ExtractedPair out;
    out.a = (c1 - std::conj(utg) * c2) / det;
    out.b = (c2 - utg * c1) / det;

    double res2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex rem = state.amps[i];
        if (i == inst.gamma_index) rem -= out.a;
        rem -= out.b * std::conj(unitary_entry(inst.unitary, inst.tau_index, i));
        res2 += std::norm(rem);
    }
    out.residual = std::sqrt(res2);
    return out;
}

AmplitudeTrace run_trace(const SearchInstance& inst, int k_max) {
    if (k_max < 1) throw IndexOutOfRange("k_max must be positive");
    const PhaseConfig cfg = inst.config();
    const IterationMatrix m = build_iteration_matrix(cfg);

    StateVector state = StateVector::basis(std::size_t{1} << inst.qubits,
                                           inst.gamma_index);
    AmplitudeTrace trace;
    trace.samples.reserve(static_cast<std::size_t>(k_max) + 1);

    AmplitudePair model{Complex{1.0, 0.0}, Complex{0.0, 0.0}, 0};
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) {
            apply_Q(state, inst);
            const Complex na = m.alpha * model.a + m.lambda * model.b;
            const Complex nb = m.beta * model.a + m.delta * model.b;
            model = AmplitudePair{na, nb, k};
        }
        TraceSample sample;
        sample.k = k;
        sample.recurrence = model;
        const ExtractedPair ext = extract_pair(state, inst);
        sample.extracted = AmplitudePair{ext.a, ext.b, k};
        double residual = ext.residual;
        residual = std::max(residual, std::abs(ext.a - model.a));
        residual = std::max(residual, std::abs(ext.b - model.b));
        if (!cfg.degenerate) {
            const double closed =
                amplitude_closed(cfg, static_cast<double>(k)).b_norm;
            sample.b_closed = closed;
            residual = std::max(residual, std::abs(std::abs(ext.b) - closed));
        }
        sample.residual = residual;
        trace.samples.push_back(sample);
    }
    return trace;
}

}  // namespace amplikit
