#include "gatewitness/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "gatewitness/channel.hpp"
#include "gatewitness/errors.hpp"

namespace gatewitness {

namespace {

// Accepts tiny floating-point overshoot from analytic pipelines and clamps
// it away; anything beyond 1e-12 is a real range error.
double unit_interval(double f, const char* what) {
    if (!(f >= -1e-12 && f <= 1.0 + 1e-12)) {
        throw ArgumentError(std::string(what) + " must be in [0, 1]");
    }
    return std::min(1.0, std::max(0.0, f));
}

// Eigenvalues below this are eigensolver noise; sqrt would amplify them from
// O(eps) to O(sqrt(eps)) and wreck pure-state concurrences.
constexpr double kSqrtClip = 1e-13;

// sum_k sqrt(lambda_k) |v_k><v_k| over the eigenvalues above the clip.
ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    const HermitianEigensystem sys = hermitian_eigensystem(m);
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (sys.values[k] < kSqrtClip) continue;
        ComplexMatrix v(n, 1);
        for (std::size_t i = 0; i < n; ++i) v(i, 0) = sys.vectors(i, k);
        out = out + Complex{std::sqrt(sys.values[k]), 0.0} * outer(v);
    }
    return out;
}

}  // namespace

ProcessBounds process_bounds_pair(double f_n, double f_k) {
    f_n = unit_interval(f_n, "fidelity");
    f_k = unit_interval(f_k, "fidelity");
    return ProcessBounds{f_n + f_k - 1.0, std::min(f_n, f_k), {}};
}

ProcessBounds process_bounds_pair(double f_n, double f_k, const ProductBasis& basis_n,
                                  const ProductBasis& basis_k) {
    if (!mutually_unbiased(basis_n, basis_k)) {
        throw ArgumentError("bases " + basis_n.label() + " and " + basis_k.label() +
                            " are not complementary (mutually unbiased)");
    }
    ProcessBounds b = process_bounds_pair(f_n, f_k);
    b.inputs_used = {"F_" + basis_n.label(), "F_" + basis_k.label()};
    return b;
}

ProcessBounds process_bounds_four(double f_zz, double f_xx, double f_zy, double f_yx) {
    f_zz = unit_interval(f_zz, "fidelity");
    f_xx = unit_interval(f_xx, "fidelity");
    f_zy = unit_interval(f_zy, "fidelity");
    f_yx = unit_interval(f_yx, "fidelity");
    const double lower = std::max(f_zz, f_zy) + std::max(f_xx, f_yx) - 1.0;
    const double upper = std::min(std::min(f_zz, f_xx), std::min(f_zy, f_yx));
    return ProcessBounds{lower, upper, {}};
}

double classical_fidelity_lower_bound(double f_n, double f_k) {
    f_n = unit_interval(f_n, "fidelity");
    f_k = unit_interval(f_k, "fidelity");
    return f_n + f_k - 1.0;
}

double ent_fidelity_lower_bound(double f_zz, double f_xx, double f_zy, double f_yx) {
    f_zz = unit_interval(f_zz, "fidelity");
    f_xx = unit_interval(f_xx, "fidelity");
    f_zy = unit_interval(f_zy, "fidelity");
    f_yx = unit_interval(f_yx, "fidelity");
    return std::max(f_zz, f_zy) + std::max(f_xx, f_yx) - 1.0;
}

double concurrence_lower_from_fidelity(double f_ent) {
    f_ent = unit_interval(f_ent, "entanglement fidelity");
    return 2.0 * f_ent - 1.0;
}

double gate_entanglement_capability(double f_zz, double f_xx, double f_zy, double f_yx) {
    // 2 max(f_zz, f_zy) + 2 max(f_xx, f_yx) - 3, reported raw like every
    // other bound (a negative value means no entanglement is guaranteed).
    return 2.0 * ent_fidelity_lower_bound(f_zz, f_xx, f_zy, f_yx) - 1.0;
}

double wootters_concurrence(const ComplexMatrix& rho) {
    require_density_matrix(rho, 4);
    const ComplexMatrix yy = kron(pauli(Axis::Y), pauli(Axis::Y));
    ComplexMatrix conj(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) conj(i, j) = std::conj(rho(i, j));
    }
    const ComplexMatrix rho_tilde = yy * conj * yy;
    // Hermitize rho before the square root; inputs are accepted at 1e-9.
    const ComplexMatrix h = (rho + dagger(rho)) * Complex{0.5, 0.0};
    const ComplexMatrix root = psd_sqrt(h);
    ComplexMatrix m = root * rho_tilde * root;
    m = (m + dagger(m)) * Complex{0.5, 0.0};
    const auto eigs = hermitian_eigenvalues(m);  // descending
    double c = 0.0;
    for (std::size_t k = 0; k < eigs.size(); ++k) {
        if (eigs[k] < -1e-10) {
            throw InternalError("concurrence intermediate has a large negative eigenvalue");
        }
        const double l = eigs[k] < kSqrtClip ? 0.0 : std::sqrt(eigs[k]);
        c += k == 0 ? l : -l;
    }
    return std::max(0.0, c);
}

}  // namespace gatewitness
