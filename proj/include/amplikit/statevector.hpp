#pragma once

#include <cstdint>
#include <iosfwd>
#include <variant>

#include "amplikit/core.hpp"

namespace amplikit {

// Dense matrices above this qubit count do not fit desk-scale memory.
inline constexpr int kMaxQubits = 14;

struct StateVector {
    std::vector<Complex> amps;

    static StateVector basis(std::size_t dim, std::size_t index);
    std::size_t dim() const { return amps.size(); }
    double norm() const;
};

/// n-fold tensor product of the single-qubit Hadamard; self-inverse.
struct WalshHadamard {
    int qubits = 0;

    std::size_t dim() const { return std::size_t{1} << qubits; }
    void apply(StateVector& state) const;
    void apply_inverse(StateVector& state) const { apply(state); }
    Complex entry(std::size_t row, std::size_t col) const;
};

/// Explicit matrix, row-major. Construction verifies U* U = I to 1e-10.
struct DenseUnitary {
    std::size_t n = 0;
    std::vector<Complex> a;  // a[row * n + col]

    DenseUnitary() = default;
    DenseUnitary(std::size_t dim, std::vector<Complex> entries);

    std::size_t dim() const { return n; }
    void apply(StateVector& state) const;
    void apply_inverse(StateVector& state) const;  // conjugate transpose
    Complex entry(std::size_t row, std::size_t col) const {
        return a[row * n + col];
    }
};

using UnitaryOp = std::variant<WalshHadamard, DenseUnitary>;

std::size_t unitary_dim(const UnitaryOp& u);
void apply_unitary(StateVector& state, const UnitaryOp& u);
void apply_unitary_inverse(StateVector& state, const UnitaryOp& u);
Complex unitary_entry(const UnitaryOp& u, std::size_t row, std::size_t col);

/// Text format: first line N, then N rows of N entries "re+imj".
DenseUnitary load_unitary(std::istream& in);
DenseUnitary load_unitary_file(const std::string& path);
void save_unitary(const DenseUnitary& u, std::ostream& out);

/// Orthonormalized complex Gaussian matrix; deterministic per seed.
DenseUnitary random_unitary(std::size_t dim, std::uint64_t seed);

struct SearchInstance {
    int qubits = 0;
    std::size_t gamma_index = 0;
    std::size_t tau_index = 0;
    double theta = 0.0;
    double phi = 0.0;
    UnitaryOp unitary;

    Complex overlap() const;     // U_{tau gamma}
    PhaseConfig config() const;  // make_config over the overlap
};

SearchInstance make_instance(int qubits, std::size_t gamma_index,
                             std::size_t tau_index, double theta, double phi,
                             UnitaryOp unitary);

/// Multiplies the amplitude at index by -e^{i2 angle} (the action of
/// I - 2cos(angle) e^{i angle} |x><x| on |x>).
void apply_phase_operator(StateVector& state, std::size_t index, double angle);

/// One application of Q = -I_gamma U^-1 I_tau U.
void apply_Q(StateVector& state, const SearchInstance& inst);

struct ExtractedPair {
    Complex a{};
    Complex b{};
    double residual = 0.0;  // norm of the out-of-plane component
};

/// Coefficients of state ~ a|gamma> + b U^-1|tau>, solved through the
/// 2x2 Gram system of the non-orthogonal pair (overlap conj(U_tg)).
ExtractedPair extract_pair(const StateVector& state, const SearchInstance& inst);

/// Simulates k_max applications of Q, extracting (a_k, b_k) at every step
/// and lining them up against the 2x2 recurrence and the sine form.
AmplitudeTrace run_trace(const SearchInstance& inst, int k_max);

}  // namespace amplikit
