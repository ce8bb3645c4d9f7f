#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "rdo/normal.hpp"
#include "rdo/sampling.hpp"

using namespace rdo;

namespace {

// Reference quantile: Newton refinement of the candidate against a long double
// erfc-based CDF. Independent of the rational approximation being checked.
long double reference_quantile(long double p, long double start) {
    long double z = start;
    for (int i = 0; i < 4; ++i) {
        const long double cdf = 0.5L * std::erfc(-z / std::sqrt(2.0L));
        const long double pdf = std::exp(-0.5L * z * z) / std::sqrt(2.0L * 3.14159265358979323846264338327950288L);
        z -= (cdf - p) / pdf;
    }
    return z;
}

std::vector<int> strata_occupancy(const Eigen::MatrixXd& u, Eigen::Index col) {
    const auto n = u.rows();
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto s = static_cast<Eigen::Index>(std::floor(u(i, col) * static_cast<double>(n)));
        REQUIRE(s >= 0);
        REQUIRE(s < n);
        ++count[static_cast<std::size_t>(s)];
    }
    return count;
}

}  // namespace

TEST_CASE("inverse normal cdf examples") {
    CHECK(inverse_normal_cdf(0.5) == 0.0);
    CHECK(std::abs(inverse_normal_cdf(0.8413447460685429) - 1.0) < 1e-8);
    CHECK_THROWS_AS(inverse_normal_cdf(0.0), InvalidInput);
    CHECK_THROWS_AS(inverse_normal_cdf(1.0), InvalidInput);
    CHECK_THROWS_AS(inverse_normal_cdf(-0.2), InvalidInput);
    CHECK_THROWS_AS(inverse_normal_cdf(std::nan("")), InvalidInput);
}

TEST_CASE("inverse normal cdf is antisymmetric") {
    // Dyadic p keeps 1 - p exact.
    for (int k = 1; k < 1024; ++k) {
        const double p = k / 1024.0;
        CHECK(std::abs(inverse_normal_cdf(p) + inverse_normal_cdf(1.0 - p)) <= 1e-12);
    }
}

TEST_CASE("inverse normal cdf absolute error below 1e-9 on [1e-12, 1 - 1e-12]") {
    double worst = 0.0;
    std::vector<double> ps;
    for (double e = -12.0; e < -0.31; e += 0.01) ps.push_back(std::pow(10.0, e));
    for (double p = 0.3; p < 0.7; p += 0.001) ps.push_back(p);
    for (double p : std::vector<double>(ps)) ps.push_back(1.0 - p);
    for (double p : ps) {
        const double z = inverse_normal_cdf(p);
        const long double ref = reference_quantile(p, z);
        worst = std::max(worst, static_cast<double>(std::abs(z - ref)));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("normal cdf inverts the quantile") {
    // Above z = 5 the double nearest Phi(z) no longer pins z down to 1e-9.
    for (double z = -8.0; z <= 5.0; z += 0.25) CHECK(inverse_normal_cdf(normal_cdf(z)) == doctest::Approx(z).epsilon(1e-9));
}

TEST_CASE("lhs single sample") {
    Stream rng(3);
    const auto u = lhs_unit(1, 3, rng);
    REQUIRE(u.rows() == 1);
    REQUIRE(u.cols() == 3);
    CHECK((u.array() >= 0.0).all());
    CHECK((u.array() < 1.0).all());
}

TEST_CASE("lhs stratification examples") {
    Stream rng(42);
    const auto u = lhs_unit(50, 2, rng);
    for (Eigen::Index j = 0; j < 2; ++j) {
        std::vector<double> col(u.col(j).data(), u.col(j).data() + 50);
        std::sort(col.begin(), col.end());
        for (int i = 0; i < 50; ++i) CHECK(static_cast<int>(std::floor(col[static_cast<std::size_t>(i)] * 50)) == i);
    }
    Stream rng4(9);
    CHECK(strata_occupancy(lhs_unit(4, 1, rng4), 0) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("lhs rejects empty shapes") {
    Stream rng(0);
    CHECK_THROWS_AS(lhs_unit(0, 2, rng), InvalidInput);
    CHECK_THROWS_AS(lhs_unit(5, 0, rng), InvalidInput);
}

TEST_CASE("lhs stratification property over random shapes") {
    Stream meta(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + meta.below(200);
        const std::size_t d = 1 + meta.below(5);
        Stream rng(meta.next());
        const auto u = lhs_unit(n, d, rng);
        for (Eigen::Index j = 0; j < u.cols(); ++j) {
            const auto occ = strata_occupancy(u, j);
            CHECK(std::all_of(occ.begin(), occ.end(), [](int c) { return c == 1; }));
        }
    }
}

TEST_CASE("lhs is deterministic per stream key") {
    Stream a(5, 17, Stream::Purpose::sampling);
    Stream b(5, 17, Stream::Purpose::sampling);
    Stream c(5, 18, Stream::Purpose::sampling);
    const auto ua = lhs_unit(30, 3, a);
    const auto ub = lhs_unit(30, 3, b);
    const auto uc = lhs_unit(30, 3, c);
    CHECK(ua == ub);
    CHECK(ua != uc);
}

TEST_CASE("sample_around") {
    const Eigen::Vector2d design(-2.0, -2.0);

    SUBCASE("vanishing noise collapses onto the design") {
        Stream rng(1);
        const auto b = sample_around(design, UncertaintySpec::isotropic(2, 1e-12), 50, rng);
        CHECK(((b.points.rowwise() - design.transpose()).array().abs() <= 1e-10).all());
    }
    SUBCASE("per-dimension spread at n = 50") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Stream rng(seed);
            const auto b = sample_around(design, UncertaintySpec::isotropic(2, 0.1), 50, rng);
            for (Eigen::Index j = 0; j < 2; ++j) {
                const auto col = b.points.col(j);
                const double mean = col.mean();
                const double sd = std::sqrt((col.array() - mean).square().sum() / 49.0);
                CHECK(sd >= 0.07);
                CHECK(sd <= 0.13);
            }
        }
    }
    SUBCASE("two samples straddle the design in every dimension") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            Stream rng(seed);
            const auto b = sample_around(design, UncertaintySpec::isotropic(2, 0.1), 2, rng);
            for (Eigen::Index j = 0; j < 2; ++j)
                CHECK((b.points(0, j) - design[j]) * (b.points(1, j) - design[j]) < 0.0);
        }
    }
    SUBCASE("affine equivariance") {
        const Eigen::Vector2d shift(3.25, -1.5);
        Stream r1(8, 4, Stream::Purpose::sampling);
        Stream r2(8, 4, Stream::Purpose::sampling);
        const auto a = sample_around(design, UncertaintySpec::isotropic(2, 0.1), 40, r1);
        const auto b = sample_around(design + shift, UncertaintySpec::isotropic(2, 0.1), 40, r2);
        CHECK(((b.points.rowwise() - shift.transpose()) - a.points).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("means converge to the design") {
        Stream rng(77);
        const auto b = sample_around(design, UncertaintySpec::isotropic(2, 0.1), 20000, rng);
        CHECK(std::abs(b.points.col(0).mean() + 2.0) < 1e-3);
        CHECK(std::abs(b.points.col(1).mean() + 2.0) < 1e-3);
    }
    SUBCASE("dimension mismatch") {
        Stream rng(0);
        CHECK_THROWS_AS(sample_around(design, UncertaintySpec::isotropic(3, 0.1), 10, rng), InvalidInput);
    }
    SUBCASE("standardized rows recover the normal draws") {
        Stream rng(3);
        const UncertaintySpec spec(Eigen::Vector2d(0.1, 0.4));
        const auto b = sample_around(design, spec, 25, rng);
        const auto z = b.standardized(spec);
        CHECK(((z.array().rowwise() * spec.std.transpose().array()).matrix().rowwise() + design.transpose() - b.points)
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
}

TEST_CASE("uncertainty spec validation") {
    CHECK_THROWS_AS(UncertaintySpec::isotropic(2, 0.0), InvalidInput);
    CHECK_THROWS_AS(UncertaintySpec(Eigen::Vector2d(0.1, -0.1)), InvalidInput);
}

TEST_CASE("stream integer draws are in range and roughly uniform") {
    Stream rng(12);
    std::vector<int> hist(7, 0);
    for (int i = 0; i < 70000; ++i) ++hist[rng.below(7)];
    for (int h : hist) CHECK(std::abs(h - 10000) < 500);
}
