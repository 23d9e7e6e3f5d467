#pragma once

#include <vector>

#include <Eigen/Dense>

namespace wintgen {

// Second fundamental form of an n-dimensional submanifold with codim normal
// directions, stored as one symmetric n x n component matrix per normal
// direction. Frames are orthonormal throughout, so these matrices are
// simultaneously the shape operators; h is the single source of truth and
// shape operators are always derived from it.
class SecondFundamentalForm {
  public:
    SecondFundamentalForm(int n, int codim);  // zero form

    // Validates sizes and symmetry (asymmetry <= sym_tol), then symmetrizes
    // exactly.
    static SecondFundamentalForm from_matrices(std::vector<Eigen::MatrixXd> components,
                                               double sym_tol = 1e-9);

    int n() const { return n_; }
    int codim() const { return codim_; }

    double operator()(int r, int i, int j) const { return comp_[r](i, j); }

    // Writes both (i,j) and (j,i).
    void set(int r, int i, int j, double value);

    const Eigen::MatrixXd& matrix(int r) const { return comp_[r]; }

    // sqrt(sum_{r,i,j} h(r,i,j)^2), off-diagonals counted twice
    double norm() const;

    SecondFundamentalForm scaled(double factor) const;

  private:
    int n_;
    int codim_;
    std::vector<Eigen::MatrixXd> comp_;
};

// The shape operators A_r; A_r(i,j) = h(r,i,j) in orthonormal frames.
struct ShapeOperatorSet {
    std::vector<Eigen::MatrixXd> ops;

    int n() const { return ops.empty() ? 0 : static_cast<int>(ops.front().rows()); }
    int codim() const { return static_cast<int>(ops.size()); }
};

ShapeOperatorSet shape_operators(const SecondFundamentalForm& h);

// Mean curvature vector: H^r = trace(A_r)/n, norm_sq = sum_r (H^r)^2.
struct MeanCurvature {
    Eigen::VectorXd components;
    double norm_sq = 0.0;
};

MeanCurvature mean_curvature(const SecondFundamentalForm& h);

}  // namespace wintgen
