#include "wintgen/fundamental_form.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wintgen {

SecondFundamentalForm::SecondFundamentalForm(int n, int codim) : n_(n), codim_(codim) {
    if (n < 2) throw std::invalid_argument("SecondFundamentalForm: n must be >= 2");
    if (codim < 1) throw std::invalid_argument("SecondFundamentalForm: codim must be >= 1");
    comp_.assign(codim, Eigen::MatrixXd::Zero(n, n));
}

SecondFundamentalForm SecondFundamentalForm::from_matrices(std::vector<Eigen::MatrixXd> components,
                                                           double sym_tol) {
    if (components.empty())
        throw std::invalid_argument("SecondFundamentalForm: need at least one normal direction");
    const int n = static_cast<int>(components.front().rows());
    SecondFundamentalForm h(n, static_cast<int>(components.size()));
    for (std::size_t r = 0; r < components.size(); ++r) {
        const Eigen::MatrixXd& a = components[r];
        if (a.rows() != n || a.cols() != n)
            throw std::invalid_argument("SecondFundamentalForm: component " + std::to_string(r) +
                                        " is not n x n");
        const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
        if (asym > sym_tol)
            throw std::invalid_argument("SecondFundamentalForm: component " + std::to_string(r) +
                                        " asymmetric by " + std::to_string(asym));
        h.comp_[r] = 0.5 * (a + a.transpose());
    }
    return h;
}

void SecondFundamentalForm::set(int r, int i, int j, double value) {
    comp_.at(r)(i, j) = value;
    comp_.at(r)(j, i) = value;
}

double SecondFundamentalForm::norm() const {
    double s = 0.0;
    for (const auto& a : comp_) s += a.squaredNorm();
    return std::sqrt(s);
}

SecondFundamentalForm SecondFundamentalForm::scaled(double factor) const {
    SecondFundamentalForm out = *this;
    for (auto& a : out.comp_) a *= factor;
    return out;
}

ShapeOperatorSet shape_operators(const SecondFundamentalForm& h) {
    ShapeOperatorSet set;
    set.ops.reserve(h.codim());
    for (int r = 0; r < h.codim(); ++r) set.ops.push_back(h.matrix(r));
    return set;
}

MeanCurvature mean_curvature(const SecondFundamentalForm& h) {
    MeanCurvature mc;
    mc.components.resize(h.codim());
    for (int r = 0; r < h.codim(); ++r) mc.components(r) = h.matrix(r).trace() / h.n();
    mc.norm_sq = mc.components.squaredNorm();
    return mc;
}

}  // namespace wintgen
