#include <doctest.h>

#include <cmath>

#include "rdo/normal.hpp"
#include "rdo/sampling.hpp"
#include "rdo/uq.hpp"

using namespace rdo;

namespace {

Eigen::MatrixXd standard_lhs(std::size_t n, std::size_t d, std::uint64_t seed) {
    Stream rng(seed);
    const UncertaintySpec unit = UncertaintySpec::isotropic(static_cast<Eigen::Index>(d), 1.0);
    return sample_around(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d)), unit, n, rng).points;
}

}  // namespace

TEST_CASE("empirical moments examples") {
    const auto c = empirical_moments(Eigen::Vector4d(7, 7, 7, 7));
    CHECK(c.mean == 7.0);
    CHECK(c.std == 0.0);
    CHECK(c.n_samples == 4);
    CHECK(c.estimator == Estimator::empirical);

    const auto two = empirical_moments(Eigen::Vector2d(0, 2));
    CHECK(two.mean == doctest::Approx(1.0));
    CHECK(two.std == doctest::Approx(std::sqrt(2.0)));

    CHECK_THROWS_AS(empirical_moments(Eigen::VectorXd::Constant(1, 3.0)), InvalidInput);
    CHECK_THROWS_AS(empirical_moments(Eigen::VectorXd()), InvalidInput);
}

TEST_CASE("empirical moments are permutation invariant and affine equivariant") {
    Stream rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(60));
        Eigen::VectorXd v(n);
        for (auto& x : v) x = 10.0 * rng.normal();
        Eigen::VectorXd r = v.reverse();
        const auto a = empirical_moments(v);
        const auto b = empirical_moments(r);
        CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-12));
        CHECK(a.std == doctest::Approx(b.std).epsilon(1e-12));

        const double scale = -3.5;
        const double shift = 2.25;
        const auto t = empirical_moments((scale * v.array() + shift).matrix());
        CHECK(t.mean == doctest::Approx(scale * a.mean + shift).epsilon(1e-12));
        CHECK(t.std == doctest::Approx(std::abs(scale) * a.std).epsilon(1e-12));
    }
}

TEST_CASE("hermite polynomials") {
    CHECK(hermite_eval(0, 3.0) == 1.0);
    CHECK(hermite_eval(1, 3.0) == 3.0);
    CHECK(hermite_eval(2, 3.0) == 8.0);
    CHECK(hermite_eval(3, 2.0) == 2.0);
    CHECK(hermite_eval(4, 1.0) == -2.0);
}

TEST_CASE("total degree basis order") {
    const auto b = total_degree_basis(2, 2);
    const std::vector<MultiIndex> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    CHECK(b == expected);
    CHECK(total_degree_basis(3, 3).size() == 20);
    CHECK(hermite_norm_squared({2, 3}) == 12.0);
}

TEST_CASE("pce fit recovers polynomials exactly") {
    const Eigen::MatrixXd xi = standard_lhs(50, 2, 4);

    SUBCASE("affine") {
        const Eigen::VectorXd y = (3.0 + 2.0 * xi.col(0).array()).matrix();
        const auto m = pce_fit(xi, y, 2);
        CHECK(std::abs(m.coefficient({0, 0}) - 3.0) < 1e-10);
        CHECK(std::abs(m.coefficient({1, 0}) - 2.0) < 1e-10);
        CHECK(std::abs(m.coefficient({0, 1})) < 1e-10);
        const auto mo = pce_moments(m);
        CHECK(std::abs(mo.mean - 3.0) < 1e-10);
        CHECK(std::abs(mo.std - 2.0) < 1e-10);
        CHECK(mo.estimator == Estimator::pce);
    }
    SUBCASE("square") {
        const Eigen::VectorXd y = xi.col(0).array().square().matrix();
        const auto mo = pce_moments(pce_fit(xi, y, 2));
        CHECK(std::abs(mo.mean - 1.0) < 1e-10);
        CHECK(std::abs(mo.std - std::sqrt(2.0)) < 1e-10);
    }
    SUBCASE("surrogate interpolates the data") {
        const Eigen::VectorXd y = (1.0 + xi.col(0).array() * xi.col(1).array()).matrix();
        const auto m = pce_fit(xi, y, 2);
        CHECK(m.residual_norm < 1e-10);
        for (Eigen::Index i = 0; i < xi.rows(); ++i) CHECK(std::abs(m(xi.row(i).transpose()) - y[i]) < 1e-10);
    }
}

TEST_CASE("pce moments from coefficients") {
    PceModel m;
    m.degree = 2;
    m.dim = 2;
    m.basis = total_degree_basis(2, 2);
    m.basis_norms = Eigen::VectorXd(6);
    for (std::size_t i = 0; i < 6; ++i) m.basis_norms[static_cast<Eigen::Index>(i)] = hermite_norm_squared(m.basis[i]);

    m.coefficients = Eigen::VectorXd::Zero(6);
    m.coefficients[0] = 5.0;
    CHECK(pce_moments(m).mean == 5.0);
    CHECK(pce_moments(m).std == 0.0);

    m.coefficients << 3, 2, 0, 0, 0, 0;
    CHECK(pce_moments(m).mean == 3.0);
    CHECK(pce_moments(m).std == doctest::Approx(2.0));

    // xi1^2 = He2(xi1) + 1.
    m.coefficients << 1, 0, 0, 1, 0, 0;
    CHECK(pce_moments(m).mean == 1.0);
    CHECK(pce_moments(m).std == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("pce fit errors") {
    const Eigen::MatrixXd few = standard_lhs(5, 2, 1);
    CHECK_THROWS_AS(pce_fit(few, Eigen::VectorXd::Zero(5), 2), UnderdeterminedSystem);

    const Eigen::MatrixXd same = Eigen::MatrixXd::Constant(10, 2, 0.3);
    CHECK_THROWS_AS(pce_fit(same, Eigen::VectorXd::Zero(10), 2), ConditioningError);

    CHECK_THROWS_AS(pce_fit(few, Eigen::VectorXd::Zero(4), 1), InvalidInput);
}

TEST_CASE("pce and empirical moments agree on the two-peak batch") {
    const auto f = TwoPeakFunction<double>::standard();
    const UncertaintySpec spec = UncertaintySpec::isotropic(2, 0.1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Stream rng(seed, 0, Stream::Purpose::sampling);
        const auto batch = sample_around(Eigen::Vector2d(-2, -2), spec, 50, rng);
        Eigen::VectorXd y(batch.size());
        for (Eigen::Index i = 0; i < batch.size(); ++i) y[i] = f(batch.points.row(i).transpose());
        const auto emp = empirical_moments(y);
        const auto pce = pce_moments(pce_fit(batch.standardized(spec), y, 2));
        CHECK(std::abs(pce.mean - emp.mean) < 0.05);
        CHECK(std::abs(pce.mean - emp.mean) < 3.0 * emp.std / std::sqrt(50.0));
        CHECK(pce.std >= 0.0);
    }
}

TEST_CASE("pce reproduces analytic moments of random polynomials") {
    Stream rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 1 + rng.below(3);
        const unsigned degree = 1 + static_cast<unsigned>(rng.below(3));
        const auto basis = total_degree_basis(d, degree);
        Eigen::VectorXd c(static_cast<Eigen::Index>(basis.size()));
        for (auto& x : c) x = rng.normal();

        const Eigen::MatrixXd xi = standard_lhs(2 * basis.size() + 5, d, rng.next());
        Eigen::VectorXd y = Eigen::VectorXd::Zero(xi.rows());
        double variance = 0.0;
        for (std::size_t a = 0; a < basis.size(); ++a) {
            for (Eigen::Index i = 0; i < xi.rows(); ++i) {
                double term = c[static_cast<Eigen::Index>(a)];
                for (std::size_t j = 0; j < d; ++j) term *= hermite_eval(basis[a][j], xi(i, static_cast<Eigen::Index>(j)));
                y[i] += term;
            }
            if (a > 0) variance += c[static_cast<Eigen::Index>(a)] * c[static_cast<Eigen::Index>(a)] * hermite_norm_squared(basis[a]);
        }
        const auto mo = pce_moments(pce_fit(xi, y, degree));
        CHECK(std::abs(mo.mean - c[0]) < 1e-6);
        CHECK(std::abs(mo.std - std::sqrt(variance)) < 1e-6);
    }
}
