#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "eacws/statevector.hpp"
#include "eacws/word_ops.hpp"

namespace eacws {

struct KLViolation {
    std::size_t error_a = 0, error_b = 0;  // indices into the checked error set
    std::size_t row = 0, col = 0;          // codeword indices
    std::complex<double> value;
    bool diagonal = false;  // true: inconsistent diagonal, false: nonzero off-diagonal
};

struct KLReport {
    bool pass = false;
    // First violation found comes first; capped, see kMaxViolations.
    std::vector<KLViolation> violations;
    // C[a][b] = <w_0| Ea^dagger Eb |w_0>; Hermitian.
    std::vector<std::vector<std::complex<double>>> c_matrix;
    double tolerance = 0.0;
};

struct DistanceReport {
    std::size_t certified = 0;  // exact distance, or d_target+1 as a lower bound
    bool exact = false;
    std::optional<PauliOperator> witness;  // undetectable error of weight == certified
};

// Applies each post operator to the encoded base state. Throws when the
// resulting set is not orthonormal, naming the codeword pair.
std::vector<StateVector> codeword_states(const std::vector<WordOperatorPair>& table,
                                         const StateVector& encoded_base);

// Recovery condition for the error set: <w_i|Ea^dagger Eb|w_j> = C_ab delta_ij
// with C independent of i, j.
KLReport kl_check(const std::vector<StateVector>& states,
                  const std::vector<PauliOperator>& errors,
                  double tol = 1e-9);

// Scans weights 1..d_target for an undetectable error. The first hit fixes the
// exact distance; a clean scan certifies distance >= d_target+1 (exact=false).
// `support` restricts error positions (default: all n+c qubits).
DistanceReport certify_distance(const std::vector<StateVector>& states,
                                QubitLayout layout,
                                std::size_t d_target,
                                const std::vector<std::size_t>* support = nullptr,
                                double tol = 1e-9);

inline constexpr std::size_t kMaxViolations = 4096;

}  // namespace eacws
