#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wintgen/ambient.hpp"
#include "wintgen/fundamental_form.hpp"
#include "wintgen/invariants.hpp"

namespace wintgen {

enum class InequalityId {
    prop1_rho_n,          // rho + rho_N <= |H|^2 + correction, any conformally flat ambient
    thm1_rho_perp,        // rho + rho_perp <= |H|^2 + correction
    cor_minimal_rho_n,    // minimal submanifold: rho + rho_N <= correction
    cor_minimal_rho_perp, // minimal submanifold: rho + rho_perp <= correction
    quasi_cor1,           // rho + rho_N <= |H|^2 + p + (2q/n)|V^T|^2
    quasi_cor2,           // rho + rho_perp <= |H|^2 + p + (2q/n)|V^T|^2
    quasi_tangent,        // V tangent: rho + rho_N <= |H|^2 + p + 2q/n
    quasi_normal,         // V normal: rho + rho_N <= |H|^2 + p
    grw_tangent,          // d/dt tangent: rho + rho_perp <= |H|^2 + p(1-2/n) - (2/n) f''/f
    grw_normal,           // d/dt normal: rho + rho_perp <= |H|^2 + (c - f'^2)/f^2
    wintgen_surface,      // n = 2: G <= |H|^2 - |G_perp| + c
    ddvv_spaceform,       // rho <= |H|^2 - rho_perp + c
};

std::string_view to_string(InequalityId id);
std::optional<InequalityId> inequality_from_string(std::string_view name);
const std::vector<InequalityId>& all_inequalities();

inline constexpr double kDefaultGapTol = 1e-8;

// One inequality evaluation; gap = rhs - lhs, so validity means gap >= 0.
struct GapResult {
    InequalityId id = InequalityId::ddvv_spaceform;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    bool equality = false;  // |gap| <= tol
    double tol = kDefaultGapTol;
};

// Evaluates one inequality. Throws std::invalid_argument when the model
// variant or the dimensions are incompatible with the requested id, or when
// a minimal-only id is given a non-minimal h (|H|^2 > tol).
GapResult gap(const SecondFundamentalForm& h, const AmbientModel& model, int m, InequalityId which,
              double tol = kDefaultGapTol);

enum class TTangency { tangent, normal };

// Warped-product corollary (rho_perp form). The right-hand side is computed
// both from the corollary formula and through the associated-functions
// route; a mismatch beyond 1e-12 raises std::logic_error.
GapResult grw_gap(const SecondFundamentalForm& h, const GRW& g, int m, TTangency tangency,
                  double tol = kDefaultGapTol);

// Inequality ids the given (model, h, m) combination supports; minimal-only
// ids are included when |H|^2 <= tol.
std::vector<InequalityId> applicable_inequalities(const AmbientModel& model,
                                                  const SecondFundamentalForm& h, int m,
                                                  double tol = kDefaultGapTol);

// Builds the h whose shape operators realize the equality pattern exactly:
// A_1 = alpha1 I + beta (E_12 + E_21), A_2 = alpha2 I + beta (E_11 - E_22),
// A_3 = alpha3 I, A_4 = ... = 0. Requires n >= 3 and codim >= 3.
SecondFundamentalForm canonical_equality_h(int n, int codim, double alpha1, double alpha2,
                                           double alpha3, double beta);

struct EqualityCertificate {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;
    double beta = 0.0;
    Eigen::MatrixXd tangent_rotation;  // n x n orthogonal
    Eigen::MatrixXd normal_rotation;   // codim x codim orthogonal
    double residual = 0.0;             // squared distance to the canonical pattern
};

struct DetectOptions {
    int restarts = 20;
    int max_iterations = 500;
    double improvement_tol = 1e-12;
    std::uint64_t seed = 2026;
};

// When gap(prop1) <= tol, searches SO(n) x SO(codim) for frames carrying the
// shape operators to the canonical equality pattern and returns the best
// certificate found; returns nullopt when the gap gate fails.
std::optional<EqualityCertificate> detect_equality(const SecondFundamentalForm& h,
                                                   const AmbientModel& model, int m,
                                                   double tol = kDefaultGapTol,
                                                   const DetectOptions& options = {});

// Pattern residual of a fixed frame pair (used by detect_equality and the
// optimizer); fits (alpha1, alpha2, alpha3, beta) in closed form.
double equality_pattern_residual(const SecondFundamentalForm& h,
                                 const Eigen::MatrixXd& tangent_rotation,
                                 const Eigen::MatrixXd& normal_rotation, double* alpha1 = nullptr,
                                 double* alpha2 = nullptr, double* alpha3 = nullptr,
                                 double* beta = nullptr);

}  // namespace wintgen
