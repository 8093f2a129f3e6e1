#pragma once

#include <string>
#include <vector>

#include "gatewitness/matrix.hpp"
#include "gatewitness/states.hpp"

namespace gatewitness {

// Lower/upper estimate of the process fidelity derived from classical
// fidelities. Bounds are reported raw: a lower bound may be negative
// (vacuous) and is flagged, never clamped.
struct ProcessBounds {
    double lower = 0.0;
    double upper = 1.0;
    std::vector<std::string> inputs_used;

    bool vacuous() const noexcept { return lower < 0.0; }
};

// From one complementary pair of classical fidelities:
// lower = f_n + f_k - 1, upper = min(f_n, f_k).
ProcessBounds process_bounds_pair(double f_n, double f_k);

// Same, but validates that the two input bases are mutually unbiased and
// refuses the pairing otherwise.
ProcessBounds process_bounds_pair(double f_n, double f_k, const ProductBasis& basis_n,
                                  const ProductBasis& basis_k);

// From all four local controlled-NOT / reverse controlled-NOT fidelities:
// upper = min of the four, lower = max(f_zz, f_zy) + max(f_xx, f_yx) - 1.
ProcessBounds process_bounds_four(double f_zz, double f_xx, double f_zy, double f_yx);

// Lower bound on every other classical fidelity of the same device,
// f_n + f_k - 1 for a complementary pair. May be negative (vacuous).
double classical_fidelity_lower_bound(double f_n, double f_k);

// Lower bound on each of the four entanglement-generation fidelities from
// the four local fidelities: max(f_zz, f_zy) + max(f_xx, f_yx) - 1.
double ent_fidelity_lower_bound(double f_zz, double f_xx, double f_zy, double f_yx);

// Concurrence guaranteed by a maximally-entangled-state fidelity: 2 f - 1.
double concurrence_lower_from_fidelity(double f_ent);

// Guaranteed entanglement capability from the four local fidelities:
// 2 max(f_zz, f_zy) + 2 max(f_xx, f_yx) - 3. Positive only when the average
// of the two maxima exceeds 3/4.
double gate_entanglement_capability(double f_zz, double f_xx, double f_zy, double f_yx);

// Wootters concurrence of a two-qubit density matrix:
// C = max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of the
// eigenvalues of rho (Y(x)Y) rho* (Y(x)Y). Computed through the equivalent
// Hermitian form sqrt(rho) rho~ sqrt(rho); tiny negative eigenvalues are
// clipped to zero before the square roots.
double wootters_concurrence(const ComplexMatrix& rho);

}  // namespace gatewitness
