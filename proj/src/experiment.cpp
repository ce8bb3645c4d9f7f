#include "rdo/experiment.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

namespace rdo {
namespace {

std::string g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string coordinate_header(Eigen::Index dim) {
    if (dim == 2) return "x,y";
    std::string h;
    for (Eigen::Index j = 0; j < dim; ++j) h += (j ? ",x" : "x") + std::to_string(j + 1);
    return h;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

nlohmann::json design_json(const EvaluatedDesign& e) {
    return {{"design", std::vector<double>(e.design.data(), e.design.data() + e.design.size())},
            {"mean", e.moments.mean},
            {"std", e.moments.std},
            {"n_samples", e.moments.n_samples},
            {"estimator", std::string(to_string(e.moments.estimator))},
            {"feasible", e.feasible}};
}

}  // namespace

std::string format_design_row(const EvaluatedDesign& e) {
    std::string row;
    for (Eigen::Index j = 0; j < e.design.size(); ++j) row += g9(e.design[j]) + ",";
    row += g9(e.moments.mean) + "," + g9(e.moments.std) + "," + (e.feasible ? "true" : "false");
    return row;
}

void export_scatter(const RunResult& result, const ExperimentConfig& cfg, std::uint64_t seed,
                    const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
    const Eigen::Index dim = static_cast<Eigen::Index>(cfg.dim());

    std::string designs = "eval_index," + coordinate_header(dim) + ",mean,std,feasible\n";
    for (std::size_t i = 0; i < result.trace.size(); ++i)
        designs += std::to_string(i) + "," + format_design_row(result.trace[i]) + "\n";
    write_file(out_dir / "designs.csv", designs);

    std::string archive = coordinate_header(dim) + ",mean,std,feasible\n";
    for (const auto& m : result.archive.members()) archive += format_design_row(m) + "\n";
    write_file(out_dir / "archive.csv", archive);

    ExperimentConfig echo = cfg;
    echo.seeds = {seed};
    nlohmann::json j;
    j["seed"] = seed;
    j["config"] = write_config(echo);
    j["mode"] = to_string(cfg.run.mode);
    j["evaluations"] = result.trace.size();
    j["feasible_count"] =
        std::count_if(result.trace.begin(), result.trace.end(), [](const EvaluatedDesign& e) { return e.feasible; });
    j["archive_size"] = result.archive.size();
    if (result.best) {
        j["best"] = design_json(*result.best);
        j["best"]["eval_index"] = *result.best_index;
        j["best"]["row"] = format_design_row(*result.best);
    } else {
        j["best"] = nullptr;
    }
    j["acceptance_rate"] = result.acceptance_rate;
    j["wall_seconds"] = result.wall_seconds;
    write_file(out_dir / "run.json", j.dump(2) + "\n");
}

std::string summary_line(const RunResult& result, std::uint64_t seed) {
    std::ostringstream out;
    const auto feasible =
        std::count_if(result.trace.begin(), result.trace.end(), [](const EvaluatedDesign& e) { return e.feasible; });
    out << "seed=" << seed << " best=";
    if (result.best) {
        out << "(";
        for (Eigen::Index j = 0; j < result.best->design.size(); ++j)
            out << (j ? "," : "") << g9(result.best->design[j]);
        out << ") mean=" << g9(result.best->moments.mean) << " std=" << g9(result.best->moments.std);
    } else {
        out << "none";
    }
    out << " feasible=" << feasible << "/" << result.trace.size();
    return out.str();
}

std::filesystem::path default_output_root() {
    if (const char* env = std::getenv("RDO_OUTPUT_ROOT"); env != nullptr && *env != '\0') return env;
    return "results";
}

int run_experiment(const ExperimentConfig& cfg, std::ostream& log, std::ostream& err) {
    const std::filesystem::path root = cfg.output_dir.empty() ? default_output_root() : std::filesystem::path(cfg.output_dir);
    const RobustProblem problem = cfg.make_problem();
    for (const auto seed : cfg.seeds) {
        const std::filesystem::path dir = root / ("seed_" + std::to_string(seed));
        try {
            RunConfig rc = cfg.run;
            rc.seed = seed;
            const RunResult result = run(problem, rc);
            export_scatter(result, cfg, seed, dir);
            log << summary_line(result, seed) << '\n';
        } catch (const std::exception& e) {
            err << "error: seed " << seed << ": " << e.what() << '\n';
            std::error_code ec;
            std::filesystem::remove_all(dir, ec);
            return 2;
        }
    }
    return 0;
}

}  // namespace rdo
