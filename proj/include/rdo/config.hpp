#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rdo/mosa.hpp"
#include "rdo/problem.hpp"

namespace rdo {

/// One Gaussian term of a user-defined bump-sum objective.
struct BumpSpec {
    double height = 0.0;
    double width = 1.0;
    Eigen::VectorXd center;

    bool operator==(const BumpSpec& o) const {
        return height == o.height && width == o.width && center == o.center;
    }
};

/// Everything needed to run one or more seeded experiments.
///
/// File format: one `key = value` per line, `#` starts a comment. Unknown or
/// repeated keys are rejected (`bump` may repeat). Vector values are
/// whitespace separated. See configs/two_peak.cfg for every key.
struct ExperimentConfig {
    /// "two-peak" or "bumps" (then `bumps` holds the terms).
    std::string problem = "two-peak";
    std::vector<BumpSpec> bumps;
    Sense sense = Sense::maximize_mean;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    Eigen::VectorXd noise_std;
    double std_constraint = 0.1;
    RunConfig run;
    std::vector<std::uint64_t> seeds{0};
    std::string output_dir;

    std::size_t dim() const { return static_cast<std::size_t>(lower.size()); }

    /// Build the problem this config describes.
    RobustProblem make_problem() const;

    /// Cross-field checks; throws ConfigError naming the offending key.
    void validate() const;

    bool operator==(const ExperimentConfig& o) const;
};

/// Parse and validate config text. `source` prefixes error messages.
ExperimentConfig parse_config_text(const std::string& text, const std::string& source = "<config>");

/// Read and parse a config file; a missing or unreadable file is a ConfigError.
ExperimentConfig parse_config(const std::filesystem::path& path);

/// Serialize with every default spelled out; parse_config_text inverts it.
std::string write_config(const ExperimentConfig& cfg);

/// Parse "0..19", "1,4,9" or "7".
std::vector<std::uint64_t> parse_seed_list(const std::string& text);

std::string to_string(Sense s);
std::string to_string(Mode m);

}  // namespace rdo
