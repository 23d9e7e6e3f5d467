#include "wintgen/curvature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wintgen {

CurvatureTensor::CurvatureTensor(int dim) : dim_(dim) {
    if (dim < 2) throw std::invalid_argument("CurvatureTensor: dim must be >= 2");
    comp_.assign(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0);
}

CurvatureTensor CurvatureTensor::constant_curvature(int dim, double c) {
    CurvatureTensor r(dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int cc = 0; cc < dim; ++cc)
                for (int d = 0; d < dim; ++d) {
                    const double gbc = (b == cc) ? 1.0 : 0.0;
                    const double gad = (a == d) ? 1.0 : 0.0;
                    const double gac = (a == cc) ? 1.0 : 0.0;
                    const double gbd = (b == d) ? 1.0 : 0.0;
                    r.comp_[r.index(a, b, cc, d)] = c * (gbc * gad - gac * gbd);
                }
    return r;
}

void CurvatureTensor::set(int a, int b, int c, int d, double value) {
    comp_[index(a, b, c, d)] = value;
}

void CurvatureTensor::set_symmetrized(int a, int b, int c, int d, double value) {
    set(a, b, c, d, value);
    set(b, a, c, d, -value);
    set(a, b, d, c, -value);
    set(b, a, d, c, value);
    set(c, d, a, b, value);
    set(d, c, a, b, -value);
    set(c, d, b, a, -value);
    set(d, c, b, a, value);
}

void CurvatureTensor::validate(double tol) const {
    const auto& r = *this;
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b)
            for (int c = 0; c < dim_; ++c)
                for (int d = 0; d < dim_; ++d) {
                    if (std::abs(r(a, b, c, d) + r(b, a, c, d)) > tol)
                        throw std::invalid_argument("CurvatureTensor: antisymmetry in first pair fails");
                    if (std::abs(r(a, b, c, d) + r(a, b, d, c)) > tol)
                        throw std::invalid_argument("CurvatureTensor: antisymmetry in second pair fails");
                    if (std::abs(r(a, b, c, d) - r(c, d, a, b)) > tol)
                        throw std::invalid_argument("CurvatureTensor: pair-exchange symmetry fails");
                    if (std::abs(r(a, b, c, d) + r(b, c, a, d) + r(c, a, b, d)) > tol)
                        throw std::invalid_argument("CurvatureTensor: first Bianchi identity fails");
                }
}

double CurvatureTensor::max_abs() const {
    double m = 0.0;
    for (double v : comp_) m = std::max(m, std::abs(v));
    return m;
}

RicciTensor CurvatureTensor::ricci() const {
    Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(dim_, dim_);
    for (int b = 0; b < dim_; ++b)
        for (int c = 0; c < dim_; ++c) {
            double s = 0.0;
            for (int a = 0; a < dim_; ++a) s += (*this)(a, b, c, a);
            ric(b, c) = s;
        }
    return RicciTensor{std::move(ric)};
}

double CurvatureTensor::scalar() const { return 0.5 * ricci().trace(); }

CurvatureTensor weyl_tensor(const CurvatureTensor& r, const RicciTensor& ricci, double tau) {
    const int m = r.dim();
    if (m < 3)
        throw std::invalid_argument("weyl_tensor: requires dim >= 3, got " + std::to_string(m));
    if (ricci.dim() != m) throw std::invalid_argument("weyl_tensor: Ricci dimension mismatch");

    const Eigen::MatrixXd& ric = ricci.components;
    CurvatureTensor w(m);
    const double tau_coef = 2.0 * tau / (static_cast<double>(m - 1) * (m - 2));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    const double gbc = (b == c) ? 1.0 : 0.0;
                    const double gad = (a == d) ? 1.0 : 0.0;
                    const double gac = (a == c) ? 1.0 : 0.0;
                    const double gbd = (b == d) ? 1.0 : 0.0;
                    double v = r(a, b, c, d);
                    v -= (ric(b, c) * gad - ric(a, c) * gbd + ric(a, d) * gbc - ric(b, d) * gac) /
                         (m - 2);
                    v += tau_coef * (gbc * gad - gac * gbd);
                    w.set(a, b, c, d, v);
                }
    return w;
}

bool is_conformally_flat(const CurvatureTensor& r, double tol) {
    if (r.dim() < 4)
        throw std::invalid_argument(
            "is_conformally_flat: the Weyl criterion requires dim >= 4, got " +
            std::to_string(r.dim()));
    const RicciTensor ric = r.ricci();
    return weyl_tensor(r, ric, 0.5 * ric.trace()).max_abs() <= tol;
}

}  // namespace wintgen
