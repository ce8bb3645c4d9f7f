#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "rdo/error.hpp"

namespace rdo {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A candidate design; one coordinate per decision variable.
using DesignPoint = Eigen::VectorXd;

/// Axis-aligned search box. Nominal designs must lie inside it.
struct Bounds {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;

    Bounds() = default;
    Bounds(Eigen::VectorXd lower, Eigen::VectorXd upper) : lo(std::move(lower)), hi(std::move(upper)) {
        if (lo.size() == 0 || lo.size() != hi.size())
            throw InvalidInput("bounds: lower and upper must have the same nonzero length");
        if (!(lo.array() < hi.array()).all() || !lo.allFinite() || !hi.allFinite())
            throw InvalidInput("bounds: every dimension needs finite lo < hi");
    }

    /// Same interval [lo, hi] on each of `dim` dimensions.
    static Bounds cube(Eigen::Index dim, double lower, double upper) {
        return Bounds(Eigen::VectorXd::Constant(dim, lower), Eigen::VectorXd::Constant(dim, upper));
    }

    Eigen::Index dim() const { return lo.size(); }
    Eigen::VectorXd width() const { return hi - lo; }

    bool contains(const DesignPoint& p) const {
        return p.size() == dim() && (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
    }
};

/// k * exp(-|p - c|^2 / (2 sigma^2)).
template <typename Scalar>
struct GaussianBump {
    Scalar height;
    Vector<Scalar> center;
    Scalar width;

    GaussianBump(Scalar k, Vector<Scalar> c, Scalar sigma) : height(k), center(std::move(c)), width(sigma) {
        if (!(width > Scalar(0))) throw InvalidInput("gaussian bump: width must be positive");
        if (center.size() == 0) throw InvalidInput("gaussian bump: empty center");
    }

    Eigen::Index dim() const { return center.size(); }

    template <typename Derived>
    Scalar operator()(const Eigen::MatrixBase<Derived>& p) const {
        if (p.size() != center.size()) throw InvalidInput("gaussian bump: dimension mismatch");
        const Scalar r2 = (p - center).squaredNorm();
        return height * std::exp(-r2 / (Scalar(2) * width * width));
    }
};

/// Weighted sum of two Gaussian bumps: a sharp tall peak and a broad lower one.
template <typename Scalar>
struct TwoPeakFunction {
    std::array<GaussianBump<Scalar>, 2> bumps;

    /// Sharp peak of height 11 at (2, 2) with width 0.5, broad peak of
    /// height 10 at (-2, -2) with width 2.
    static TwoPeakFunction standard() {
        Vector<Scalar> c1(2), c2(2);
        c1 << Scalar(2), Scalar(2);
        c2 << Scalar(-2), Scalar(-2);
        return TwoPeakFunction{{GaussianBump<Scalar>(Scalar(11), c1, Scalar(0.5)),
                                GaussianBump<Scalar>(Scalar(10), c2, Scalar(2))}};
    }

    template <typename Derived>
    Scalar operator()(const Eigen::MatrixBase<Derived>& p) const {
        return bumps[0](p) + bumps[1](p);
    }
};

template <typename Scalar, typename Derived>
Scalar two_peak_eval(const TwoPeakFunction<Scalar>& f, const Eigen::MatrixBase<Derived>& p) {
    if (p.size() != 2) throw InvalidInput("two_peak_eval: expects a two-dimensional point");
    return f(p);
}

/// Exact mean of one bump under isotropic normal input N(mu, s^2 I):
/// k (sigma^2 / (sigma^2 + s^2))^(d/2) exp(-|mu - c|^2 / (2 (sigma^2 + s^2))).
template <typename Scalar, typename Derived>
Scalar bump_mean_oracle(const GaussianBump<Scalar>& b, const Eigen::MatrixBase<Derived>& mu, Scalar s) {
    if (!(s > Scalar(0))) throw InvalidInput("bump_mean_oracle: noise std must be positive");
    if (mu.size() != b.dim()) throw InvalidInput("bump_mean_oracle: dimension mismatch");
    const Scalar w2 = b.width * b.width;
    const Scalar total = w2 + s * s;
    const Scalar d = static_cast<Scalar>(b.dim());
    return b.height * std::pow(w2 / total, d / Scalar(2)) *
           std::exp(-(mu - b.center).squaredNorm() / (Scalar(2) * total));
}

template <typename Scalar, typename Derived>
Scalar two_peak_mean_oracle(const TwoPeakFunction<Scalar>& f, const Eigen::MatrixBase<Derived>& mu, Scalar s) {
    return bump_mean_oracle(f.bumps[0], mu, s) + bump_mean_oracle(f.bumps[1], mu, s);
}

/// Direction in which the mean response is optimized.
enum class Sense { maximize_mean, minimize_mean };

/// Which estimator produced a MomentEstimate. `nominal` marks a single
/// noise-free evaluation (deterministic optimization).
enum class Estimator { empirical, pce, nominal };

std::string_view to_string(Estimator e);

struct MomentEstimate {
    double mean = 0.0;
    double std = 0.0;
    std::size_t n_samples = 0;
    Estimator estimator = Estimator::empirical;
};

/// Robust feasibility: the response spread must stay strictly below the cap.
inline bool is_feasible(double std, double std_constraint) { return std < std_constraint; }

struct EvaluatedDesign {
    DesignPoint design;
    MomentEstimate moments;
    bool feasible = false;
};

inline EvaluatedDesign classify(DesignPoint design, const MomentEstimate& moments, double std_constraint) {
    return EvaluatedDesign{std::move(design), moments, is_feasible(moments.std, std_constraint)};
}

struct MonteCarloMoments {
    double mean;
    double std;
    double mean_standard_error;
};

/// Brute-force ground truth: sample mean and std of f over n iid draws from
/// N(mu, s^2 I). Uses the standard library's normal distribution so it shares
/// no code with the stratified sampler. Requires n >= 100000.
template <typename Fn>
MonteCarloMoments mc_moments_oracle(const Fn& f, const DesignPoint& mu, double s, std::size_t n,
                                    std::uint64_t seed);

template <typename Fn>
double mc_std_oracle(const Fn& f, const DesignPoint& mu, double s, std::size_t n, std::uint64_t seed) {
    return mc_moments_oracle(f, mu, s, n, seed).std;
}

}  // namespace rdo

#include "rdo/detail/mc_oracle.ipp"
