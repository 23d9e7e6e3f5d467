#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include <Eigen/Dense>

#include "wintgen/curvature.hpp"

namespace wintgen {

// Ambient space of constant sectional curvature c.
struct SpaceForm {
    double c = 0.0;
};

// Ambient whose curvature is built from functions (p, q) and a distinguished
// unit direction V. Only the split of V across the submanifold's tangent and
// normal spaces enters the inequalities, so that split is what we store.
struct QuasiConstant {
    double p = 0.0;
    double q = 0.0;
    Eigen::VectorXd v_tangential;    // components of V^T in the tangent frame
    double v_normal_norm_sq = 0.0;   // |V^N|^2

    double v_tangential_norm_sq() const { return v_tangential.squaredNorm(); }

    // |V^T|^2 + |V^N|^2 must equal 1 (V is unit); throws otherwise.
    void validate(double tol = 1e-8) const;
};

// Warped-product ambient I x_f M^{m-1}(c), evaluated pointwise: the caller
// supplies f, f', f'' at the point of interest. t_tangent_norm_sq is the
// squared norm of the tangential part of the warping direction d/dt along
// the submanifold (1 when d/dt is tangent, 0 when normal).
struct GRW {
    double c = 0.0;
    double f = 1.0;
    double f_prime = 0.0;
    double f_second = 0.0;
    double t_tangent_norm_sq = 1.0;
};

// Ambient described by the two scalars the inequalities consume. A full
// curvature tensor may be attached when available; it is only used by the
// conformal-flatness diagnostics.
struct ExplicitAmbient {
    double ric_tangent_trace = 0.0;  // sum_j Ric(e_j, e_j) over the tangent frame
    double tau = 0.0;
    std::optional<CurvatureTensor> curvature;
};

using AmbientModel = std::variant<SpaceForm, QuasiConstant, GRW, ExplicitAmbient>;

// (p, q) of the warped product: p = (c - f'^2)/f^2, q = -(f''/f + p).
std::pair<double, double> grw_associated_functions(const GRW& g);

// Curvature tensor from (p, q) and the unit direction psi (dim = psi.size()).
CurvatureTensor quasi_constant_curvature_tensor(double p, double q, const Eigen::VectorXd& psi);

// Ricci and scalar curvature of the quasi-constant ambient, expressed in a
// frame whose first axis is V: Ric = [(m-1)p + q] g + (m-2) q psi psi^T and
// 2 tau = m[(m-1)p + q] + (m-2)q.
std::pair<RicciTensor, double> ricci_and_scalar_of_quasi_constant(double p, double q, int m);

// Curvature tensor of the warped product, with d/dt along t_direction
// (unit, dim = t_direction.size() = m).
CurvatureTensor grw_curvature_tensor(const GRW& g, int m, const Eigen::VectorXd& t_direction);

// The two ambient scalars every inequality consumes, for a submanifold with
// tangent dimension n inside an m-dimensional ambient.
struct AmbientScalars {
    double ric_tangent_trace = 0.0;
    double tau = 0.0;
};
AmbientScalars ambient_scalars(const AmbientModel& model, int n, int m);

// The scalar added to |H|^2 on the right-hand side of the inequalities:
// 2/(n(m-2)) sum_j Ric(e_j,e_j) - 2 tau / ((m-1)(m-2)). Closed forms per
// variant: SpaceForm -> c, QuasiConstant -> p + (2q/n)|V^T|^2, GRW via its
// associated functions.
double ambient_correction(const AmbientModel& model, int n, int m);

// Full ambient curvature tensor when the model determines one; for
// QuasiConstant/GRW the normal part of the distinguished direction is
// placed along the first normal axis. ExplicitAmbient yields its attached
// tensor or nullopt.
std::optional<CurvatureTensor> model_curvature_tensor(const AmbientModel& model, int n, int m);

// Short label for reports, e.g. "spaceform:c=0".
std::string ambient_label(const AmbientModel& model);

}  // namespace wintgen
