#include "wintgen/ambient.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace wintgen {
namespace {

void check_dims(int n, int m, bool needs_m4, const char* who) {
    if (n < 2) throw std::invalid_argument(std::string(who) + ": tangent dimension n must be >= 2");
    if (m <= n) throw std::invalid_argument(std::string(who) + ": ambient dimension m must exceed n");
    if (needs_m4 && m < 4)
        throw std::invalid_argument(std::string(who) + ": this ambient model requires m >= 4");
}

// Shared quasi-constant path. SpaceForm and GRW are routed through here with
// the appropriate (p, q, |V^T|^2) so that the q = 0 reduction is bit-exact.
AmbientScalars quasi_scalars(double p, double q, double vt_sq, int n, int m) {
    AmbientScalars s;
    s.ric_tangent_trace = n * ((m - 1) * p + q) + (m - 2) * q * vt_sq;
    s.tau = 0.5 * (m * ((m - 1) * p + q) + (m - 2) * q);
    return s;
}

double quasi_correction(double p, double q, double vt_sq, int n) {
    return p + (2.0 * q / n) * vt_sq;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

void QuasiConstant::validate(double tol) const {
    const double total = v_tangential_norm_sq() + v_normal_norm_sq;
    if (v_normal_norm_sq < -tol || v_normal_norm_sq > 1.0 + tol)
        throw std::invalid_argument("QuasiConstant: |V^N|^2 must lie in [0, 1]");
    if (std::abs(total - 1.0) > tol)
        throw std::invalid_argument("QuasiConstant: V must be unit, |V^T|^2 + |V^N|^2 = " +
                                    std::to_string(total));
}

std::pair<double, double> grw_associated_functions(const GRW& g) {
    if (g.f == 0.0) throw std::domain_error("grw_associated_functions: f must be nonzero");
    const double p = (g.c - g.f_prime * g.f_prime) / (g.f * g.f);
    const double q = -(g.f_second / g.f + p);
    return {p, q};
}

CurvatureTensor quasi_constant_curvature_tensor(double p, double q, const Eigen::VectorXd& psi) {
    const int m = static_cast<int>(psi.size());
    if (std::abs(psi.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("quasi_constant_curvature_tensor: psi must be a unit vector");
    CurvatureTensor r(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    const double gbc = (b == c) ? 1.0 : 0.0;
                    const double gad = (a == d) ? 1.0 : 0.0;
                    const double gac = (a == c) ? 1.0 : 0.0;
                    const double gbd = (b == d) ? 1.0 : 0.0;
                    const double v = p * (gbc * gad - gac * gbd) +
                                     q * (gad * psi(b) * psi(c) - gac * psi(b) * psi(d) +
                                          gbc * psi(a) * psi(d) - gbd * psi(a) * psi(c));
                    r.set(a, b, c, d, v);
                }
    return r;
}

std::pair<RicciTensor, double> ricci_and_scalar_of_quasi_constant(double p, double q, int m) {
    if (m < 2) throw std::invalid_argument("ricci_and_scalar_of_quasi_constant: m must be >= 2");
    Eigen::MatrixXd ric = ((m - 1) * p + q) * Eigen::MatrixXd::Identity(m, m);
    ric(0, 0) += (m - 2) * q;  // psi = e_1 in the V-frame
    const double tau = 0.5 * (m * ((m - 1) * p + q) + (m - 2) * q);
    return {RicciTensor{std::move(ric)}, tau};
}

CurvatureTensor grw_curvature_tensor(const GRW& g, int m, const Eigen::VectorXd& t_direction) {
    if (g.f == 0.0) throw std::domain_error("grw_curvature_tensor: f must be nonzero");
    if (t_direction.size() != m)
        throw std::invalid_argument("grw_curvature_tensor: t_direction has wrong dimension");
    if (std::abs(t_direction.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("grw_curvature_tensor: t_direction must be unit");

    const Eigen::VectorXd& t = t_direction;
    const double big_p = (g.c - g.f_prime * g.f_prime) / (g.f * g.f);
    const double big_q = g.f_second / g.f + big_p;
    CurvatureTensor r(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    const double gbc = (b == c) ? 1.0 : 0.0;
                    const double gad = (a == d) ? 1.0 : 0.0;
                    const double gac = (a == c) ? 1.0 : 0.0;
                    const double gbd = (b == d) ? 1.0 : 0.0;
                    const double v = big_p * (gbc * gad - gac * gbd) -
                                     big_q * (-gac * t(b) * t(d) + gbc * t(a) * t(d) +
                                              gad * t(b) * t(c) - gbd * t(a) * t(c));
                    r.set(a, b, c, d, v);
                }
    return r;
}

AmbientScalars ambient_scalars(const AmbientModel& model, int n, int m) {
    return std::visit(
        [&](const auto& mo) -> AmbientScalars {
            using T = std::decay_t<decltype(mo)>;
            if constexpr (std::is_same_v<T, SpaceForm>) {
                check_dims(n, m, false, "ambient_scalars");
                return quasi_scalars(mo.c, 0.0, 0.0, n, m);
            } else if constexpr (std::is_same_v<T, QuasiConstant>) {
                check_dims(n, m, true, "ambient_scalars");
                mo.validate();
                return quasi_scalars(mo.p, mo.q, mo.v_tangential_norm_sq(), n, m);
            } else if constexpr (std::is_same_v<T, GRW>) {
                check_dims(n, m, true, "ambient_scalars");
                const auto [p, q] = grw_associated_functions(mo);
                return quasi_scalars(p, q, mo.t_tangent_norm_sq, n, m);
            } else {
                check_dims(n, m, true, "ambient_scalars");
                return AmbientScalars{mo.ric_tangent_trace, mo.tau};
            }
        },
        model);
}

double ambient_correction(const AmbientModel& model, int n, int m) {
    return std::visit(
        [&](const auto& mo) -> double {
            using T = std::decay_t<decltype(mo)>;
            if constexpr (std::is_same_v<T, SpaceForm>) {
                check_dims(n, m, false, "ambient_correction");
                return quasi_correction(mo.c, 0.0, 0.0, n);
            } else if constexpr (std::is_same_v<T, QuasiConstant>) {
                check_dims(n, m, true, "ambient_correction");
                mo.validate();
                return quasi_correction(mo.p, mo.q, mo.v_tangential_norm_sq(), n);
            } else if constexpr (std::is_same_v<T, GRW>) {
                check_dims(n, m, true, "ambient_correction");
                const auto [p, q] = grw_associated_functions(mo);
                return quasi_correction(p, q, mo.t_tangent_norm_sq, n);
            } else {
                check_dims(n, m, true, "ambient_correction");
                return 2.0 * mo.ric_tangent_trace / (static_cast<double>(n) * (m - 2)) -
                       2.0 * mo.tau / (static_cast<double>(m - 1) * (m - 2));
            }
        },
        model);
}

std::optional<CurvatureTensor> model_curvature_tensor(const AmbientModel& model, int n, int m) {
    return std::visit(
        [&](const auto& mo) -> std::optional<CurvatureTensor> {
            using T = std::decay_t<decltype(mo)>;
            if constexpr (std::is_same_v<T, SpaceForm>) {
                return CurvatureTensor::constant_curvature(m, mo.c);
            } else if constexpr (std::is_same_v<T, QuasiConstant>) {
                check_dims(n, m, true, "model_curvature_tensor");
                mo.validate();
                if (mo.v_tangential.size() != n)
                    throw std::invalid_argument("model_curvature_tensor: V^T has wrong dimension");
                Eigen::VectorXd psi = Eigen::VectorXd::Zero(m);
                psi.head(n) = mo.v_tangential;
                psi(n) = std::sqrt(std::max(0.0, mo.v_normal_norm_sq));
                return quasi_constant_curvature_tensor(mo.p, mo.q, psi);
            } else if constexpr (std::is_same_v<T, GRW>) {
                check_dims(n, m, true, "model_curvature_tensor");
                Eigen::VectorXd t = Eigen::VectorXd::Zero(m);
                const double vt_sq = std::clamp(mo.t_tangent_norm_sq, 0.0, 1.0);
                t(0) = std::sqrt(vt_sq);
                t(n) = std::sqrt(1.0 - vt_sq);
                return grw_curvature_tensor(mo, m, t);
            } else {
                return mo.curvature;
            }
        },
        model);
}

std::string ambient_label(const AmbientModel& model) {
    return std::visit(
        [](const auto& mo) -> std::string {
            using T = std::decay_t<decltype(mo)>;
            if constexpr (std::is_same_v<T, SpaceForm>) {
                return "spaceform:c=" + fmt(mo.c);
            } else if constexpr (std::is_same_v<T, QuasiConstant>) {
                return "quasi:p=" + fmt(mo.p) + ",q=" + fmt(mo.q) +
                       ",vt2=" + fmt(mo.v_tangential_norm_sq());
            } else if constexpr (std::is_same_v<T, GRW>) {
                return "grw:c=" + fmt(mo.c) + ",f=" + fmt(mo.f) + ",f'=" + fmt(mo.f_prime) +
                       ",f''=" + fmt(mo.f_second) + ",t2=" + fmt(mo.t_tangent_norm_sq);
            } else {
                return "explicit:ricT=" + fmt(mo.ric_tangent_trace) + ",tau=" + fmt(mo.tau);
            }
        },
        model);
}

}  // namespace wintgen
