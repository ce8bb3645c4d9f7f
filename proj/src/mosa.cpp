#include "rdo/mosa.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "rdo/sampling.hpp"
#include "rdo/uq.hpp"

namespace rdo {

void AnnealingSchedule::validate() const {
    if (!(t_initial > 0.0) || !std::isfinite(t_initial)) throw ConfigError("t_initial must be positive");
    if (!(t_final > 0.0)) throw ConfigError("t_final must be positive");
    if (!(t_final < t_initial)) throw ConfigError("t_final must be below t_initial");
    if (!(cooling > 0.0 && cooling < 1.0)) throw ConfigError("cooling must lie in (0, 1)");
}

std::size_t AnnealingSchedule::levels() const {
    return static_cast<std::size_t>(std::ceil(std::log(t_final / t_initial) / std::log(cooling))) + 1;
}

std::size_t AnnealingSchedule::resolved_steps(std::size_t eval_budget) const {
    if (steps_per_temperature > 0) return steps_per_temperature;
    const std::size_t n = levels();
    return std::max<std::size_t>(1, (eval_budget + n - 1) / n);
}

double AnnealingSchedule::temperature(std::size_t proposal, std::size_t eval_budget) const {
    const auto level = static_cast<double>(proposal / resolved_steps(eval_budget));
    return t_initial * std::pow(cooling, level);
}

void RunConfig::validate() const {
    if (eval_budget < 1) throw ConfigError("evals must be at least 1");
    if (mode == Mode::robust && samples_per_design < 2) throw ConfigError("samples must be at least 2 in robust mode");
    if (!(step_scale >= 0.0) || !std::isfinite(step_scale)) throw ConfigError("step_scale must be non-negative");
    if (!(step_decay >= 0.0) || !std::isfinite(step_decay)) throw ConfigError("step_decay must be non-negative");
    if (weights.size() != 2) throw ConfigError("weights must have two entries");
    if (!(weights.array() >= 0.0).all() || std::abs(weights.sum() - 1.0) > 1e-12)
        throw ConfigError("weights must be non-negative and sum to 1");
    schedule.validate();
}

DesignPoint neighbor(const DesignPoint& current, double step_scale, const Bounds& bounds, Stream& rng) {
    if (current.size() != bounds.dim()) throw InvalidInput("neighbor: dimension mismatch");
    DesignPoint next = current;
    if (step_scale == 0.0) return next;
    for (Eigen::Index j = 0; j < current.size(); ++j) {
        const double width = bounds.hi[j] - bounds.lo[j];
        const double raw = current[j] + step_scale * width * rng.normal() - bounds.lo[j];
        // Fold onto [0, width]: reflection at both walls has period 2 * width.
        double folded = std::fmod(raw, 2.0 * width);
        if (folded < 0.0) folded += 2.0 * width;
        if (folded > width) folded = 2.0 * width - folded;
        next[j] = bounds.lo[j] + folded;
    }
    return next;
}

void EnergyScale::observe(const ObjectiveVector& obj) {
    if (lo_.size() == 0) {
        lo_ = obj;
        hi_ = obj;
        return;
    }
    if (obj.size() != lo_.size()) throw InvalidInput("energy scale: objective length mismatch");
    lo_ = lo_.cwiseMin(obj);
    hi_ = hi_.cwiseMax(obj);
}

double EnergyScale::energy(const ObjectiveVector& obj, const Eigen::VectorXd& weights) const {
    if (obj.size() != weights.size()) throw InvalidInput("energy: weight count differs from objective count");
    if (lo_.size() == 0) return 0.0;
    double e = 0.0;
    for (Eigen::Index i = 0; i < obj.size(); ++i) {
        const double range = hi_[i] - lo_[i];
        if (range > 0.0) e += weights[i] * (obj[i] - lo_[i]) / range;
    }
    return e;
}

double energy(const ObjectiveVector& objs, const Eigen::VectorXd& weights, const EnergyScale& scale) {
    return scale.energy(objs, weights);
}

bool accept(const EvaluatedDesign& current, double current_energy, const EvaluatedDesign& candidate,
            double candidate_energy, double temperature, Stream& rng) {
    if (!(temperature > 0.0)) throw InvalidInput("accept: temperature must be positive");
    if (candidate.feasible != current.feasible) return candidate.feasible;
    if (!candidate.feasible) return candidate.moments.std < current.moments.std;
    const double delta = candidate_energy - current_energy;
    if (delta <= 0.0) return true;
    return rng.uniform() < std::exp(-delta / temperature);
}

EvaluatedDesign evaluate_design(const RobustProblem& problem, const RunConfig& cfg, const DesignPoint& design,
                                std::uint64_t eval_index) {
    if (cfg.mode == Mode::deterministic) {
        const double v = problem.objective(design);
        return classify(design, MomentEstimate{v, 0.0, 1, Estimator::nominal}, problem.std_constraint);
    }
    Stream rng(cfg.seed, eval_index, Stream::Purpose::sampling);
    SampleBatch batch = sample_around(design, problem.uncertainty, cfg.samples_per_design, rng);
    batch.stream_index = eval_index;
    Eigen::VectorXd values(batch.size());
    for (Eigen::Index i = 0; i < batch.size(); ++i) values[i] = problem.objective(batch.points.row(i).transpose());

    MomentEstimate m;
    if (cfg.estimator == Estimator::pce) {
        m = pce_moments(pce_fit(batch.standardized(problem.uncertainty), values, cfg.pce_degree));
    } else {
        m = empirical_moments(values);
    }
    return classify(design, m, problem.std_constraint);
}

namespace {

ObjectiveVector annealing_objectives(const EvaluatedDesign& e, Sense sense, Mode mode) {
    ObjectiveVector full = objective_vector(e.moments, sense);
    return mode == Mode::deterministic ? ObjectiveVector(full.head(1)) : full;
}

}  // namespace

RunResult run(const RobustProblem& problem, const RunConfig& cfg) {
    problem.validate();
    cfg.validate();
    const auto start_time = std::chrono::steady_clock::now();

    RunResult result;
    result.config = cfg;
    result.archive = ParetoArchive(problem.sense);
    result.trace.reserve(cfg.eval_budget);

    const Eigen::VectorXd weights =
        cfg.mode == Mode::deterministic ? Eigen::VectorXd::Ones(1) : cfg.weights;
    const Bounds& box = problem.bounds;

    Stream init_rng(cfg.seed, 0, Stream::Purpose::initial_design);
    DesignPoint start(box.dim());
    for (Eigen::Index j = 0; j < box.dim(); ++j) start[j] = box.lo[j] + (box.hi[j] - box.lo[j]) * init_rng.uniform();

    EnergyScale scale;
    EvaluatedDesign current = evaluate_design(problem, cfg, start, 0);
    ObjectiveVector current_obj = annealing_objectives(current, problem.sense, cfg.mode);
    scale.observe(current_obj);
    result.trace.push_back(current);
    result.archive.insert(current);

    const std::size_t steps = cfg.schedule.resolved_steps(cfg.eval_budget);
    std::size_t accepted_in_level = 0;
    std::size_t proposed_in_level = 0;

    for (std::size_t k = 1; k < cfg.eval_budget; ++k) {
        const std::size_t proposal = k - 1;
        const double temperature = cfg.schedule.temperature(proposal, cfg.eval_budget);
        const double step = cfg.step_scale * std::pow(temperature / cfg.schedule.t_initial, cfg.step_decay);

        Stream move_rng(cfg.seed, k, Stream::Purpose::proposal);
        EvaluatedDesign candidate = evaluate_design(problem, cfg, neighbor(current.design, step, box, move_rng), k);
        const ObjectiveVector candidate_obj = annealing_objectives(candidate, problem.sense, cfg.mode);
        scale.observe(candidate_obj);
        result.trace.push_back(candidate);
        result.archive.insert(candidate);

        Stream accept_rng(cfg.seed, k, Stream::Purpose::acceptance);
        const bool ok = accept(current, scale.energy(current_obj, weights), candidate,
                               scale.energy(candidate_obj, weights), temperature, accept_rng);
        if (ok) {
            current = std::move(candidate);
            current_obj = candidate_obj;
            ++accepted_in_level;
        }
        ++proposed_in_level;
        if (proposed_in_level == steps || k + 1 == cfg.eval_budget) {
            result.acceptance_rate.push_back(static_cast<double>(accepted_in_level) /
                                             static_cast<double>(proposed_in_level));
            accepted_in_level = 0;
            proposed_in_level = 0;
        }
    }

    // Best design: archive extreme in robust mode, trace extreme otherwise.
    std::optional<std::size_t> best_index;
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
        const EvaluatedDesign& e = result.trace[i];
        if (!e.feasible) continue;
        const double key = objective_vector(e.moments, problem.sense)[0];
        if (!best_index) {
            best_index = i;
            continue;
        }
        const EvaluatedDesign& b = result.trace[*best_index];
        const double best_key = objective_vector(b.moments, problem.sense)[0];
        if (key < best_key || (cfg.mode == Mode::robust && key == best_key && e.moments.std < b.moments.std))
            best_index = i;
    }
    if (best_index) {
        result.best = result.trace[*best_index];
        result.best_index = best_index;
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return result;
}

}  // namespace rdo
