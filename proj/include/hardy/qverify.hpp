#pragma once

// Double-precision q-series for E2, L, R, log eta, log theta, log theta4,
// straight-segment quadrature in the upper half plane, and numerical checks
// of the transformation laws and cycle-integral formulas behind the
// partial-quotient evaluators.

#include <complex>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hardy/cfe.hpp"
#include "hardy/core.hpp"

namespace hardy {

using Complex = std::complex<double>;

// A point with positive imaginary part. Construction checks im > 0.
class HalfPlanePoint {
public:
    HalfPlanePoint(double re, double im);
    HalfPlanePoint(Complex z) : HalfPlanePoint(z.real(), z.imag()) {}

    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    Complex z() const { return z_; }

private:
    Complex z_;
};

struct SeriesParams {
    int terms = 200;      // E2 and the products are cut after e(N z); L and R after e^{pi i 2N z}
    int quad_nodes = 64;  // Gauss-Legendre nodes per panel
    double tol = 1e-8;

    void validate() const; // throws std::invalid_argument
};

struct CocycleReport {
    Complex lhs;
    Complex rhs;
    double abs_error = 0;
    bool pass = false;
    bool evaluated = true; // false when the formula is undefined for the input
    std::string note;
};

// (a z + b) / (c z + d)
Complex act(const Mat2 &m, Complex z);

// z = -d/c + i/|c|, so that A.z = a/c + i/|c| sits as high as z does;
// for c = 0, z = i. The series lose accuracy below im about 20/(pi N).
HalfPlanePoint balanced_basepoint(const Mat2 &a);

// Estimated size of the dropped series tail at z; a message when it is
// not below p.tol.
std::optional<std::string> truncation_warning(const HalfPlanePoint &z, const SeriesParams &p);

// 1 - 24 sum sigma1(n) e(nz)
Complex e2_eval(const HalfPlanePoint &z, const SeriesParams &p);
// 1 + 24 sum sigma1_odd(n) e^{pi i n z}
Complex L_eval(const HalfPlanePoint &z, const SeriesParams &p);
// L(z + 1)
Complex R_eval(const HalfPlanePoint &z, const SeriesParams &p);

// Sums of principal logarithms of the product factors, which gives the
// branch that is continuous on the half plane and vanishes at i infinity.
Complex log_eta(const HalfPlanePoint &z, const SeriesParams &p);
Complex log_theta(const HalfPlanePoint &z, const SeriesParams &p);
Complex log_theta4(const HalfPlanePoint &z, const SeriesParams &p);

struct QuadratureResult {
    Complex value;
    double error_estimate = 0;
    int panels = 0;
    bool converged = true;
};

using SeriesFn = std::function<Complex(const HalfPlanePoint &, const SeriesParams &)>;

// Integral of f along the straight segment z0 -> z1 by adaptive composite
// Gauss-Legendre quadrature. Gives up refining (converged = false) past
// 2^16 panels.
QuadratureResult segment_integral(const SeriesFn &f, const HalfPlanePoint &z0, const HalfPlanePoint &z1,
                                  const SeriesParams &p);

// The same integral along z0 -> re z0 + iH -> re z1 + iH -> z1 with
// H = max(1, im z0, im z1). The truncated series are holomorphic, so the
// value does not depend on the path, and the vertical legs avoid long
// stretches close to the real axis. All checks below integrate this way.
QuadratureResult path_integral(const SeriesFn &f, const HalfPlanePoint &z0, const HalfPlanePoint &z1,
                               const SeriesParams &p);

// (cz + d)^-2 E2(A.z) against E2(z) + (6/pi i) c/(cz + d).
CocycleReport check_e2_quasimodular(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p);

// The following need c > 0 (std::domain_error otherwise) and membership
// in the relevant group.
CocycleReport check_eta_transform(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p);
CocycleReport check_theta_transform(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p);
CocycleReport check_theta4_transform(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p);

// Correction term of the E2 cycle integral over A = A_0 A_1 ... A_n with
// A_k = (a_k, (-1)^{k+1}; (-1)^k, 0):
//   SignProducts:     sum (-1)^k a_k + 3 sum_{k>=1} sign(c_k d_k)
//   PartialQuotients: sum (-1)^k a_k - 3 sum_{k>=1} (-1)^k sign(a_k),
//                     for a_1 != 0 and |a_2|, ..., |a_n| >= 2.
enum class CycleForm { SignProducts, PartialQuotients };

// Matrix A_0 ... A_n for the list a_0, ..., a_n.
Mat2 cycle_word_matrix(const std::vector<Integer> &a);

// Needs an odd n >= 1. Words with c = 0, a vanishing c_k or d_k, or
// violating the PartialQuotients hypotheses come back with evaluated = false.
CocycleReport check_cycle_integral_e2(const std::vector<Integer> &a, const HalfPlanePoint &z, const SeriesParams &p,
                                      CycleForm form = CycleForm::SignProducts);

// Integral of E2 - R over A = T^{2c0} S T^{2c1} S ... T^{2cn} S against
// (6/pi i) log((cz + d)/(sign(c) i)) - 3 sum sign(c_k).
CocycleReport check_cocycle_theta(const ContinuedFraction &theta_cf, const HalfPlanePoint &z, const SeriesParams &p);

// Integral of E2 - L over A = T^{2a0} V^{a1} T^{2a2} ... V^{an} against
// (6/pi i) log(...) - 3(a1 + a3 + ... + an) - 3 sum (-1)^k sign(a_k).
CocycleReport check_cocycle_theta4(const ContinuedFraction &g02_cf, const HalfPlanePoint &z, const SeriesParams &p);

// log theta(A.z) - log theta(z) against (pi i/12) * integral of (E2 - R),
// and the theta4 / L version.
CocycleReport check_log_integral_theta(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p);
CocycleReport check_log_integral_theta4(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p);

// phi(A) = integral of L from z to A.z (A in Gamma^0(2)); psi(B) = the same
// with R (B in the theta group).
Complex phi(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p);
Complex psi(const Mat2 &b, const HalfPlanePoint &z, const SeriesParams &p);

// h(AB) against h(A) + h(B), h = phi for Gamma02 and psi for Theta.
CocycleReport check_homomorphism(GroupTag tag, const Mat2 &a, const Mat2 &b, const HalfPlanePoint &z,
                                 const SeriesParams &p);

// h(A) at two basepoints.
CocycleReport check_basepoint_independence(GroupTag tag, const Mat2 &a, const HalfPlanePoint &z1,
                                           const HalfPlanePoint &z2, const SeriesParams &p);

// Central difference of log theta4 against (pi i/12)(E2 - L).
CocycleReport check_log_derivative_theta4(const HalfPlanePoint &z, const SeriesParams &p);

// L from its own series against 2 E2(z) - E2(z/2).
CocycleReport check_doubling(const HalfPlanePoint &z, const SeriesParams &p);

// Random product of at most max_len generator powers (exponents in
// [-3, 3]) of the given group: T, S for SL2; T^2, S for Theta; T^2, V for
// Gamma02.
Mat2 random_group_word(std::mt19937_64 &rng, GroupTag tag, int max_len);

} // namespace hardy
