#pragma once

#include <vector>

#include <Eigen/Dense>

namespace wintgen {

// Ricci tensor in an orthonormal frame.
struct RicciTensor {
    Eigen::MatrixXd components;

    int dim() const { return static_cast<int>(components.rows()); }
    double trace() const { return components.trace(); }
};

// Dense Riemann curvature tensor over orthonormal-frame index quadruples,
// sign convention R(X,Y,Y,X) = sectional curvature of span{X,Y}. Dimensions
// stay desk-scale (m <= 8 or so), so O(m^4) storage is the simple and
// testable choice.
class CurvatureTensor {
  public:
    explicit CurvatureTensor(int dim);

    // R = c * (g . g) wedge pattern, the constant-curvature tensor
    static CurvatureTensor constant_curvature(int dim, double c);

    int dim() const { return dim_; }

    double operator()(int a, int b, int c, int d) const {
        return comp_[index(a, b, c, d)];
    }

    // Raw write of a single slot; the caller is responsible for symmetry.
    void set(int a, int b, int c, int d, double value);

    // Writes value across the full symmetry orbit of (a,b,c,d):
    // antisymmetric in (a,b) and in (c,d), symmetric under pair exchange.
    void set_symmetrized(int a, int b, int c, int d, double value);

    // Throws std::invalid_argument if antisymmetry, pair symmetry or the
    // first Bianchi identity fail beyond tol.
    void validate(double tol = 1e-10) const;

    double max_abs() const;

    // Ric(b,c) = sum_a R(a,b,c,a)
    RicciTensor ricci() const;

    // Scalar curvature normalized as the sum of sectional curvatures over
    // index pairs: tau = trace(Ric) / 2.
    double scalar() const;

  private:
    int index(int a, int b, int c, int d) const {
        return ((a * dim_ + b) * dim_ + c) * dim_ + d;
    }

    int dim_;
    std::vector<double> comp_;
};

// Weyl conformal curvature tensor of (R, Ric, tau); requires dim >= 3.
// The inputs are trusted to be mutually consistent.
CurvatureTensor weyl_tensor(const CurvatureTensor& r, const RicciTensor& ricci, double tau);

// True iff the Weyl tensor of r (Ricci and tau derived internally) vanishes
// within tol. The criterion requires dim >= 4.
bool is_conformally_flat(const CurvatureTensor& r, double tol = 1e-10);

}  // namespace wintgen
