#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "rdo/model.hpp"

namespace rdo {

/// Objectives in minimization form, e.g. [-mean, std] when maximizing the mean.
using ObjectiveVector = Eigen::VectorXd;

/// Pareto dominance for minimization: a <= b everywhere and a < b somewhere.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

ObjectiveVector objective_vector(const MomentEstimate& m, Sense sense);

enum class InsertOutcome { inserted, dominated, infeasible_rejected };

/// Non-dominated set of (objectives, payload) pairs. When two entries share an
/// objective vector the one inserted first is kept.
template <typename Payload>
class ParetoSet {
public:
    struct Entry {
        ObjectiveVector objectives;
        Payload payload;
    };

    /// Returns true if the entry was added; members it dominates are dropped.
    bool insert(const ObjectiveVector& obj, Payload payload) {
        if (!obj.allFinite()) throw InvalidInput("pareto set: non-finite objective");
        if (!entries_.empty() && entries_.front().objectives.size() != obj.size())
            throw InvalidInput("pareto set: objective length mismatch");
        for (const auto& e : entries_) {
            if (dominates(e.objectives, obj) || e.objectives == obj) return false;
        }
        std::erase_if(entries_, [&](const Entry& e) { return dominates(obj, e.objectives); });
        entries_.push_back(Entry{obj, std::move(payload)});
        return true;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<Entry> entries_;
};

/// Archive of feasible, mutually non-dominated evaluated designs.
class ParetoArchive {
public:
    explicit ParetoArchive(Sense sense = Sense::maximize_mean) : sense_(sense) {}

    InsertOutcome insert(const EvaluatedDesign& e);

    std::vector<EvaluatedDesign> members() const;
    std::size_t size() const { return set_.size(); }
    bool empty() const { return set_.empty(); }
    Sense sense() const { return sense_; }

    /// Member with the best mean (largest when maximizing); nullptr if empty.
    const EvaluatedDesign* best() const;

private:
    Sense sense_;
    ParetoSet<EvaluatedDesign> set_;
};

/// Brute-force O(m^2) non-dominated filter with first-occurrence tie-break.
/// Returns indices into `objs` in input order.
std::vector<std::size_t> non_dominated_indices(const std::vector<ObjectiveVector>& objs);

}  // namespace rdo
