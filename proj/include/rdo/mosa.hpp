#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rdo/archive.hpp"
#include "rdo/model.hpp"
#include "rdo/problem.hpp"
#include "rdo/random.hpp"

namespace rdo {

/// Geometric cooling T_k = t_initial * cooling^k, k = 0, 1, ...
struct AnnealingSchedule {
    double t_initial = 1.0;
    double t_final = 1e-3;
    double cooling = 0.95;
    /// Evaluations spent at each temperature; 0 spreads the budget so the last
    /// level reaches t_final.
    std::size_t steps_per_temperature = 0;

    void validate() const;

    /// Number of temperature levels between t_initial and t_final.
    std::size_t levels() const;

    std::size_t resolved_steps(std::size_t eval_budget) const;

    /// Temperature in effect for the given 0-based proposal number.
    double temperature(std::size_t proposal, std::size_t eval_budget) const;
};

enum class Mode { robust, deterministic };

struct RunConfig {
    std::size_t eval_budget = 600;
    std::size_t samples_per_design = 50;
    std::uint64_t seed = 0;
    Estimator estimator = Estimator::empirical;
    unsigned pce_degree = 2;
    /// Proposal std as a fraction of each bound's width, at t_initial.
    double step_scale = 1.0;
    /// The proposal std shrinks as (T / t_initial)^step_decay; 0 keeps it fixed.
    double step_decay = 0.0;
    AnnealingSchedule schedule;
    Mode mode = Mode::robust;
    /// Energy weights on the normalized [mean, std] objectives.
    Eigen::VectorXd weights = Eigen::Vector2d(0.5, 0.5);

    /// Throws ConfigError describing the first invalid field.
    void validate() const;
};

struct RunResult {
    /// Every evaluated design in evaluation order; entry 0 is the start point.
    std::vector<EvaluatedDesign> trace;
    ParetoArchive archive;
    /// Robust mode: archive member with the best mean. Deterministic mode:
    /// trace entry with the best value. Empty if no feasible design was seen.
    std::optional<EvaluatedDesign> best;
    /// Index of `best` in `trace`.
    std::optional<std::size_t> best_index;
    RunConfig config;
    /// Fraction of proposals accepted at each temperature level.
    std::vector<double> acceptance_rate;
    double wall_seconds = 0.0;
};

/// Isotropic normal step with std step_scale * (hi - lo) per dimension,
/// reflected back into the box.
DesignPoint neighbor(const DesignPoint& current, double step_scale, const Bounds& bounds, Stream& rng);

/// Running per-objective min/max used to scale objectives onto [0, 1].
class EnergyScale {
public:
    void observe(const ObjectiveVector& obj);

    /// sum_i w_i (obj_i - min_i) / (max_i - min_i); a degenerate range
    /// contributes zero.
    double energy(const ObjectiveVector& obj, const Eigen::VectorXd& weights) const;

    bool empty() const { return lo_.size() == 0; }

private:
    Eigen::VectorXd lo_;
    Eigen::VectorXd hi_;
};

/// Scalar energy of normalized objectives; see EnergyScale::energy.
double energy(const ObjectiveVector& objs, const Eigen::VectorXd& weights, const EnergyScale& scale);

/// Feasibility-first Metropolis rule.
///  - feasible candidate vs infeasible current: accept
///  - infeasible candidate vs feasible current: reject
///  - both infeasible: accept iff the candidate's std is lower
///  - both feasible: accept if candidate_energy <= current_energy, otherwise
///    with probability exp(-(candidate_energy - current_energy) / temperature)
bool accept(const EvaluatedDesign& current, double current_energy, const EvaluatedDesign& candidate,
            double candidate_energy, double temperature, Stream& rng);

/// Moment estimate of the problem's objective at `design` using
/// `samples_per_design` LHS points drawn from the evaluation's own stream.
/// In deterministic mode the objective is evaluated once without noise.
EvaluatedDesign evaluate_design(const RobustProblem& problem, const RunConfig& cfg, const DesignPoint& design,
                                std::uint64_t eval_index);

/// Anneal for exactly cfg.eval_budget design evaluations.
RunResult run(const RobustProblem& problem, const RunConfig& cfg);

}  // namespace rdo
