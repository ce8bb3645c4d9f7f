#pragma once

#include <random>

namespace rdo {

template <typename Fn>
MonteCarloMoments mc_moments_oracle(const Fn& f, const DesignPoint& mu, double s, std::size_t n,
                                    std::uint64_t seed) {
    if (n < 100000) throw InvalidInput("mc_moments_oracle: needs at least 1e5 draws");
    if (!(s > 0.0)) throw InvalidInput("mc_moments_oracle: noise std must be positive");
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    DesignPoint p(mu.size());
    // Welford's running moments.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < mu.size(); ++j) p[j] = mu[j] + s * gauss(engine);
        const double v = f(p);
        const double delta = v - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (v - mean);
    }
    const double var = m2 / static_cast<double>(n - 1);
    const double sd = std::sqrt(var > 0.0 ? var : 0.0);
    return {mean, sd, sd / std::sqrt(static_cast<double>(n))};
}

}  // namespace rdo
