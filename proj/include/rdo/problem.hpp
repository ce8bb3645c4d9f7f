#pragma once

#include <functional>

#include "rdo/model.hpp"
#include "rdo/sampling.hpp"

namespace rdo {

using Objective = std::function<double(const DesignPoint&)>;

/// Optimize the mean response while keeping its standard deviation, under
/// the given input noise, strictly below `std_constraint`.
struct RobustProblem {
    Objective objective;
    Sense sense = Sense::maximize_mean;
    UncertaintySpec uncertainty;
    double std_constraint = 0.1;
    Bounds bounds;

    RobustProblem(Objective f, Sense s, UncertaintySpec u, double cap, Bounds b)
        : objective(std::move(f)), sense(s), uncertainty(std::move(u)), std_constraint(cap), bounds(std::move(b)) {
        validate();
    }

    Eigen::Index dim() const { return bounds.dim(); }

    void validate() const {
        if (!objective) throw InvalidInput("robust problem: missing objective");
        if (!(std_constraint > 0.0) || !std::isfinite(std_constraint))
            throw InvalidInput("robust problem: std constraint must be positive");
        if (uncertainty.dim() != bounds.dim())
            throw InvalidInput("robust problem: uncertainty and bounds dimensions differ");
    }

    /// The two-peak benchmark: maximize the mean of the standard two-peak
    /// function over [-5, 5]^2 with N(0, 0.1^2) noise on each variable and a
    /// std cap of 0.1.
    static RobustProblem two_peak(double noise_std = 0.1, double std_constraint = 0.1) {
        auto f = TwoPeakFunction<double>::standard();
        return RobustProblem([f](const DesignPoint& p) { return f(p); }, Sense::maximize_mean,
                             UncertaintySpec::isotropic(2, noise_std), std_constraint, Bounds::cube(2, -5.0, 5.0));
    }
};

}  // namespace rdo
