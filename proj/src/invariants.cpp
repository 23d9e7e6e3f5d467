#include "wintgen/invariants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wintgen {

double k_n_from_components(const SecondFundamentalForm& h) {
    const int n = h.n();
    const int p = h.codim();
    double total = 0.0;
    for (int r = 0; r < p; ++r)
        for (int s = r + 1; s < p; ++s)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    double inner = 0.0;
                    for (int k = 0; k < n; ++k)
                        inner += h(r, j, k) * h(s, i, k) - h(r, i, k) * h(s, j, k);
                    total += inner * inner;
                }
    return total;
}

double k_n_from_commutators(const ShapeOperatorSet& a) {
    const int p = a.codim();
    double total = 0.0;
    for (int r = 0; r < p; ++r)
        for (int s = 0; s < p; ++s) {
            const Eigen::MatrixXd c = a.ops[r] * a.ops[s] - a.ops[s] * a.ops[r];
            total += -0.25 * (c * c).trace();
        }
    return total;
}

double tau_perp_via_ricci_equation(const ShapeOperatorSet& a) {
    const int n = a.n();
    const int p = a.codim();
    double total = 0.0;
    for (int r = 0; r < p; ++r)
        for (int s = r + 1; s < p; ++s) {
            const Eigen::MatrixXd c = a.ops[r] * a.ops[s] - a.ops[s] * a.ops[r];
            // <[A_r,A_s] e_i, e_j> is the (j,i) entry
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) total += c(j, i) * c(j, i);
        }
    return std::sqrt(total);
}

namespace {

// sum_r sum_{i<j} ( h^r_ii h^r_jj - (h^r_ij)^2 )
double extrinsic_quadratic(const SecondFundamentalForm& h) {
    double e = 0.0;
    for (int r = 0; r < h.codim(); ++r)
        for (int i = 0; i < h.n(); ++i)
            for (int j = i + 1; j < h.n(); ++j)
                e += h(r, i, i) * h(r, j, j) - h(r, i, j) * h(r, i, j);
    return e;
}

}  // namespace

double scalar_curvature_gauss(const SecondFundamentalForm& h, const AmbientModel& model, int m) {
    const int n = h.n();
    if (m < 4)
        throw std::invalid_argument("scalar_curvature_gauss: requires m >= 4, got " +
                                    std::to_string(m));
    if (m != n + h.codim())
        throw std::invalid_argument("scalar_curvature_gauss: m must equal n + codim");
    const AmbientScalars amb = ambient_scalars(model, n, m);
    return (n - 1) * amb.ric_tangent_trace / (m - 2) -
           static_cast<double>(n) * (n - 1) * amb.tau /
               (static_cast<double>(m - 1) * (m - 2)) +
           extrinsic_quadratic(h);
}

void InvariantReport::validate(double tol) const {
    if (k_n < 0.0) throw std::logic_error("InvariantReport: K_N must be nonnegative");
    const double nn1 = static_cast<double>(n) * (n - 1);
    if (std::abs(rho_n - 2.0 * std::sqrt(k_n) / nn1) > tol)
        throw std::logic_error("InvariantReport: rho_N does not match K_N");
    if (std::abs(rho_perp - rho_n) > tol)
        throw std::logic_error("InvariantReport: rho_perp deviates from rho_N");
}

InvariantReport full_report(const SecondFundamentalForm& h, const AmbientModel& model, int m) {
    InvariantReport rep;
    rep.n = h.n();
    rep.codim = h.codim();
    const double nn1 = static_cast<double>(rep.n) * (rep.n - 1);
    rep.tau = scalar_curvature_gauss(h, model, m);
    rep.rho = 2.0 * rep.tau / nn1;
    rep.k_n = k_n_from_components(h);
    rep.rho_n = 2.0 * std::sqrt(rep.k_n) / nn1;
    rep.tau_perp = tau_perp_via_ricci_equation(shape_operators(h));
    rep.rho_perp = 2.0 * rep.tau_perp / nn1;
    rep.h_norm_sq = mean_curvature(h).norm_sq;
    return rep;
}

SurfaceInvariants surface_invariants(const SecondFundamentalForm& h, double c) {
    if (h.n() != 2)
        throw std::invalid_argument("surface_invariants: defined for n = 2, got n = " +
                                    std::to_string(h.n()));
    SurfaceInvariants s;
    s.gauss = c + extrinsic_quadratic(h);
    if (h.codim() == 2) {
        const Eigen::MatrixXd comm =
            h.matrix(0) * h.matrix(1) - h.matrix(1) * h.matrix(0);
        s.normal = comm(1, 0);  // <[A_1,A_2] e_1, e_2>
        s.normal_signed = true;
    } else if (h.codim() > 2) {
        s.normal = std::sqrt(k_n_from_components(h));
        s.normal_signed = false;
    }
    return s;
}

}  // namespace wintgen
