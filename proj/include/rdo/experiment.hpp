#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "rdo/config.hpp"
#include "rdo/mosa.hpp"

namespace rdo {

/// Write designs.csv, archive.csv and run.json for one finished run.
///
/// designs.csv: eval_index,x,y,mean,std,feasible (x1..xd replace x,y when the
/// problem is not two-dimensional). archive.csv drops eval_index. Reals are
/// written with 9 significant digits, booleans as true/false. Throws IoError.
void export_scatter(const RunResult& result, const ExperimentConfig& cfg, std::uint64_t seed,
                    const std::filesystem::path& out_dir);

/// One CSV row (without eval_index) in the exported format.
std::string format_design_row(const EvaluatedDesign& e);

/// e.g. "seed=0 best=(-1.88536564,-2.098774) mean=9.94514507 std=0.0558817896 feasible=262/600".
std::string summary_line(const RunResult& result, std::uint64_t seed);

/// Default output root: $RDO_OUTPUT_ROOT, else "results".
std::filesystem::path default_output_root();

/// Run every seed of `cfg`, writing <output>/seed_<s>/ per seed and one
/// summary line per run to `log`. Returns 0 on success, 2 on a runtime or I/O
/// failure (the failing seed's directory is removed).
int run_experiment(const ExperimentConfig& cfg, std::ostream& log, std::ostream& err);

}  // namespace rdo
