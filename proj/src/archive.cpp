#include "rdo/archive.hpp"

namespace rdo {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size()) throw InvalidInput("dominates: objective vectors differ in length");
    bool strictly_better = false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly_better = true;
    }
    return strictly_better;
}

ObjectiveVector objective_vector(const MomentEstimate& m, Sense sense) {
    ObjectiveVector v(2);
    v << (sense == Sense::maximize_mean ? -m.mean : m.mean), m.std;
    return v;
}

InsertOutcome ParetoArchive::insert(const EvaluatedDesign& e) {
    if (!e.feasible) return InsertOutcome::infeasible_rejected;
    return set_.insert(objective_vector(e.moments, sense_), e) ? InsertOutcome::inserted : InsertOutcome::dominated;
}

std::vector<EvaluatedDesign> ParetoArchive::members() const {
    std::vector<EvaluatedDesign> out;
    out.reserve(set_.size());
    for (const auto& e : set_.entries()) out.push_back(e.payload);
    return out;
}

const EvaluatedDesign* ParetoArchive::best() const {
    // Non-dominated members have distinct first objectives, so the minimum is unique.
    const ParetoSet<EvaluatedDesign>::Entry* best = nullptr;
    for (const auto& e : set_.entries())
        if (best == nullptr || e.objectives[0] < best->objectives[0]) best = &e;
    return best ? &best->payload : nullptr;
}

std::vector<std::size_t> non_dominated_indices(const std::vector<ObjectiveVector>& objs) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < objs.size() && !drop; ++j) {
            if (j == i) continue;
            if (dominates(objs[j], objs[i])) drop = true;
            else if (j < i && objs[j] == objs[i]) drop = true;
        }
        if (!drop) keep.push_back(i);
    }
    return keep;
}

}  // namespace rdo
