#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "rdo/model.hpp"

namespace rdo {

/// Sample mean and (n - 1)-denominator standard deviation. Needs >= 2 values.
MomentEstimate empirical_moments(const Eigen::Ref<const Eigen::VectorXd>& values);

/// Probabilists' Hermite polynomial He_order(z) by three-term recurrence.
template <typename Scalar>
Scalar hermite_eval(unsigned order, Scalar z) {
    Scalar prev(1);
    if (order == 0) return prev;
    Scalar cur = z;
    for (unsigned n = 1; n < order; ++n) {
        Scalar next = z * cur - Scalar(n) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Exponents of one tensor-product Hermite term, one per input variable.
using MultiIndex = std::vector<unsigned>;

/// All multi-indices with total degree <= degree, graded by total degree and
/// reverse-lexicographic within a degree: for d = 2, degree 2 the order is
/// (0,0) (1,0) (0,1) (2,0) (1,1) (0,2).
std::vector<MultiIndex> total_degree_basis(std::size_t dim, unsigned degree);

/// prod_j alpha_j!, the squared norm of a Hermite tensor term under N(0, I).
double hermite_norm_squared(const MultiIndex& alpha);

/// Non-intrusive polynomial chaos surrogate in standard normal variables.
struct PceModel {
    unsigned degree = 0;
    std::size_t dim = 0;
    std::vector<MultiIndex> basis;
    Eigen::VectorXd coefficients;
    Eigen::VectorXd basis_norms;
    double residual_norm = 0.0;
    std::size_t n_samples = 0;

    /// Coefficient of `alpha`, zero if alpha is outside the basis.
    double coefficient(const MultiIndex& alpha) const;

    /// Evaluate the expansion at standardized point xi.
    double operator()(const Eigen::Ref<const Eigen::VectorXd>& xi) const;
};

/// Least-squares fit of `values` on the total-degree Hermite basis evaluated at
/// the rows of `std_samples` (standard normal coordinates).
/// Throws UnderdeterminedSystem when rows < basis size and ConditioningError
/// when the design matrix is numerically rank deficient.
PceModel pce_fit(const Eigen::Ref<const Eigen::MatrixXd>& std_samples,
                 const Eigen::Ref<const Eigen::VectorXd>& values, unsigned degree);

/// Mean is the constant coefficient; variance is sum c_a^2 |psi_a|^2 over the
/// non-constant terms.
MomentEstimate pce_moments(const PceModel& m);

}  // namespace rdo
