#include "rdo/sampling.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "rdo/normal.hpp"

namespace rdo {

Eigen::MatrixXd SampleBatch::standardized(const UncertaintySpec& spec) const {
    if (spec.dim() != points.cols()) throw InvalidInput("standardized: dimension mismatch");
    Eigen::MatrixXd z = points.rowwise() - origin.transpose();
    return z.array().rowwise() / spec.std.transpose().array();
}

Eigen::MatrixXd lhs_unit(std::size_t n, std::size_t d, Stream& rng) {
    if (n == 0 || d == 0) throw InvalidInput("lhs_unit: need at least one sample and one dimension");
    const auto rows = static_cast<Eigen::Index>(n);
    const auto cols = static_cast<Eigen::Index>(d);
    const double dn = static_cast<double>(n);
    Eigen::MatrixXd u(rows, cols);
    std::vector<std::size_t> perm(n);
    for (Eigen::Index j = 0; j < cols; ++j) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        for (Eigen::Index i = 0; i < rows; ++i) {
            const auto stratum = static_cast<double>(perm[static_cast<std::size_t>(i)]);
            double v = (stratum + rng.uniform_open()) / dn;
            // Rounding may push v across a stratum edge; pull it back.
            while (std::floor(v * dn) > stratum) v = std::nextafter(v, 0.0);
            while (std::floor(v * dn) < stratum) v = std::nextafter(v, 1.0);
            u(i, j) = v;
        }
    }
    return u;
}

SampleBatch sample_around(const DesignPoint& design, const UncertaintySpec& spec, std::size_t n, Stream& rng) {
    if (spec.dim() != design.size()) throw InvalidInput("sample_around: uncertainty and design dimensions differ");
    Eigen::MatrixXd u = lhs_unit(n, static_cast<std::size_t>(design.size()), rng);
    SampleBatch batch;
    batch.origin = design;
    batch.points.resize(u.rows(), u.cols());
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            batch.points(i, j) = design[j] + spec.std[j] * inverse_normal_cdf(u(i, j));
        }
    }
    return batch;
}

}  // namespace rdo
