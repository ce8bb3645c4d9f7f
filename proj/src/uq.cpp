#include "rdo/uq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rdo {

MomentEstimate empirical_moments(const Eigen::Ref<const Eigen::VectorXd>& values) {
    const Eigen::Index n = values.size();
    if (n < 2) throw InvalidInput("empirical_moments: need at least two values");
    const double mean = values.mean();
    const double ss = (values.array() - mean).square().sum();
    return {mean, std::sqrt(ss / static_cast<double>(n - 1)), static_cast<std::size_t>(n), Estimator::empirical};
}

namespace {

// Fill `out` with every multi-index of exactly `total` spread over positions
// [pos, dim), larger leading exponents first.
void exact_degree(std::size_t pos, unsigned total, MultiIndex& current, std::vector<MultiIndex>& out) {
    if (pos + 1 == current.size()) {
        current[pos] = total;
        out.push_back(current);
        current[pos] = 0;
        return;
    }
    for (unsigned k = total + 1; k-- > 0;) {
        current[pos] = k;
        exact_degree(pos + 1, total - k, current, out);
    }
    current[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> total_degree_basis(std::size_t dim, unsigned degree) {
    if (dim == 0) throw InvalidInput("total_degree_basis: zero dimensions");
    std::vector<MultiIndex> out;
    MultiIndex current(dim, 0);
    for (unsigned total = 0; total <= degree; ++total) exact_degree(0, total, current, out);
    return out;
}

double hermite_norm_squared(const MultiIndex& alpha) {
    double norm = 1.0;
    for (unsigned a : alpha)
        for (unsigned k = 2; k <= a; ++k) norm *= static_cast<double>(k);
    return norm;
}

double PceModel::coefficient(const MultiIndex& alpha) const {
    const auto it = std::find(basis.begin(), basis.end(), alpha);
    return it == basis.end() ? 0.0 : coefficients[std::distance(basis.begin(), it)];
}

namespace {

double basis_term(const MultiIndex& alpha, const Eigen::Ref<const Eigen::VectorXd>& xi) {
    double v = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j)
        if (alpha[j] != 0) v *= hermite_eval(alpha[j], xi[static_cast<Eigen::Index>(j)]);
    return v;
}

}  // namespace

double PceModel::operator()(const Eigen::Ref<const Eigen::VectorXd>& xi) const {
    if (static_cast<std::size_t>(xi.size()) != dim) throw InvalidInput("pce: dimension mismatch");
    double acc = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) acc += coefficients[static_cast<Eigen::Index>(k)] * basis_term(basis[k], xi);
    return acc;
}

PceModel pce_fit(const Eigen::Ref<const Eigen::MatrixXd>& std_samples,
                 const Eigen::Ref<const Eigen::VectorXd>& values, unsigned degree) {
    if (std_samples.rows() != values.size()) throw InvalidInput("pce_fit: sample and value counts differ");
    if (std_samples.cols() == 0) throw InvalidInput("pce_fit: zero dimensions");

    PceModel m;
    m.degree = degree;
    m.dim = static_cast<std::size_t>(std_samples.cols());
    m.basis = total_degree_basis(m.dim, degree);
    m.n_samples = static_cast<std::size_t>(values.size());
    const auto terms = static_cast<Eigen::Index>(m.basis.size());
    if (std_samples.rows() < terms)
        throw UnderdeterminedSystem("pce_fit: " + std::to_string(std_samples.rows()) + " samples for " +
                                    std::to_string(terms) + " basis terms");

    Eigen::MatrixXd psi(std_samples.rows(), terms);
    for (Eigen::Index i = 0; i < std_samples.rows(); ++i) {
        const Eigen::VectorXd xi = std_samples.row(i).transpose();
        for (Eigen::Index k = 0; k < terms; ++k) psi(i, k) = basis_term(m.basis[static_cast<std::size_t>(k)], xi);
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(psi);
    if (qr.rank() < terms)
        throw ConditioningError("pce_fit: design matrix rank " + std::to_string(qr.rank()) + " < " +
                                std::to_string(terms));
    m.coefficients = qr.solve(values);
    m.residual_norm = (psi * m.coefficients - values).norm();
    m.basis_norms.resize(terms);
    for (Eigen::Index k = 0; k < terms; ++k) m.basis_norms[k] = hermite_norm_squared(m.basis[static_cast<std::size_t>(k)]);
    return m;
}

MomentEstimate pce_moments(const PceModel& m) {
    if (m.coefficients.size() == 0) throw InvalidInput("pce_moments: model has no coefficients");
    // basis[0] is the all-zero multi-index.
    double var = 0.0;
    for (Eigen::Index k = 1; k < m.coefficients.size(); ++k) var += m.coefficients[k] * m.coefficients[k] * m.basis_norms[k];
    return {m.coefficients[0], std::sqrt(var), m.n_samples, Estimator::pce};
}

}  // namespace rdo
