#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "rdo/model.hpp"
#include "rdo/random.hpp"

namespace rdo {

/// Independent normal noise on each design variable.
struct UncertaintySpec {
    Eigen::VectorXd std;

    UncertaintySpec() = default;
    explicit UncertaintySpec(Eigen::VectorXd per_dim_std) : std(std::move(per_dim_std)) {
        if (std.size() == 0) throw InvalidInput("uncertainty: no dimensions");
        if (!(std.array() > 0.0).all() || !std.allFinite())
            throw InvalidInput("uncertainty: every std must be positive and finite");
    }

    static UncertaintySpec isotropic(Eigen::Index dim, double s) {
        return UncertaintySpec(Eigen::VectorXd::Constant(dim, s));
    }

    Eigen::Index dim() const { return std.size(); }
};

/// Perturbed copies of a nominal design; one row per sample.
struct SampleBatch {
    Eigen::MatrixXd points;
    DesignPoint origin;
    std::uint64_t stream_index = 0;

    Eigen::Index size() const { return points.rows(); }

    /// (points - origin) / std, row-wise: the standard normal variables that
    /// generated each row.
    Eigen::MatrixXd standardized(const UncertaintySpec& spec) const;
};

/// Random-pairing Latin hypercube on [0, 1)^d: for each column every stratum
/// [i/n, (i+1)/n) holds exactly one sample, placed uniformly inside it, and
/// columns are paired by independent permutations.
Eigen::MatrixXd lhs_unit(std::size_t n, std::size_t d, Stream& rng);

/// LHS mapped through the normal quantile: row i, column j is
/// design_j + std_j * z_ij. Samples are not clipped to any bounds.
SampleBatch sample_around(const DesignPoint& design, const UncertaintySpec& spec, std::size_t n, Stream& rng);

}  // namespace rdo
