#pragma once

#include "wintgen/ambient.hpp"
#include "wintgen/fundamental_form.hpp"

namespace wintgen {

// Normal scalar curvature K_N from the components of h:
// sum over r<s, i<j of ( sum_k h^r_{jk} h^s_{ik} - h^r_{ik} h^s_{jk} )^2.
double k_n_from_components(const SecondFundamentalForm& h);

// K_N = -1/4 sum_{r,s} trace([A_r, A_s]^2); independent route used as the
// oracle for k_n_from_components.
double k_n_from_commutators(const ShapeOperatorSet& a);

// tau_perp = sqrt( sum_{r<s} sum_{i<j} <[A_r,A_s] e_i, e_j>^2 ) = sqrt(K_N),
// the normal-connection curvature route.
double tau_perp_via_ricci_equation(const ShapeOperatorSet& a);

// Scalar curvature tau of the induced metric from the conformally flat Gauss
// equation:
//   tau = (n-1)/(m-2) sum_j Ric(e_j,e_j) - n(n-1) tau~ /((m-1)(m-2))
//         + sum_r sum_{i<j} ( h^r_ii h^r_jj - (h^r_ij)^2 ).
// Requires m >= 4 and m > n.
double scalar_curvature_gauss(const SecondFundamentalForm& h, const AmbientModel& model, int m);

struct InvariantReport {
    int n = 0;
    int codim = 0;
    double rho = 0.0;       // 2 tau / (n(n-1))
    double rho_n = 0.0;     // 2 sqrt(K_N) / (n(n-1))
    double rho_perp = 0.0;  // 2 tau_perp / (n(n-1))
    double h_norm_sq = 0.0; // |H|^2
    double k_n = 0.0;
    double tau = 0.0;
    double tau_perp = 0.0;

    // Internal consistency: k_n >= 0, rho_n = 2 sqrt(k_n)/(n(n-1)),
    // rho_perp = rho_n within tol. Throws std::logic_error on failure.
    void validate(double tol = 1e-12) const;
};

InvariantReport full_report(const SecondFundamentalForm& h, const AmbientModel& model, int m);

// Surface (n = 2) invariants: Gauss curvature G and normal curvature G_perp.
// G_perp is the signed commutator component <[A_1,A_2] e_1, e_2> when
// codim = 2; for codim >= 3 there is no classical signed quantity, so
// sqrt(K_N) is reported and normal_signed is false (also false for codim 1,
// where the value is 0).
struct SurfaceInvariants {
    double gauss = 0.0;
    double normal = 0.0;
    bool normal_signed = false;
};

SurfaceInvariants surface_invariants(const SecondFundamentalForm& h, double c);

}  // namespace wintgen
