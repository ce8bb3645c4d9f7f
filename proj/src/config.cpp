#include "rdo/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "rdo/uq.hpp"

namespace rdo {
namespace {

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys = {
        "problem", "bump",    "sense",     "bounds",     "std",        "constraint", "estimator",
        "pce_degree", "evals", "samples",  "seeds",      "mode",       "step_scale", "step_decay",
        "t_initial", "t_final", "cooling", "steps_per_temperature", "weights", "output"};
    return keys;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::string suggestion_for(const std::string& key) {
    std::string best;
    std::size_t best_d = std::numeric_limits<std::size_t>::max();
    for (const auto& k : known_keys()) {
        std::size_t d = edit_distance(key, k);
        if (key.rfind(k, 0) == 0 || k.rfind(key, 0) == 0) d = std::min<std::size_t>(d, 1);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best_d <= 3 ? best : std::string();
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

class Context {
public:
    Context(std::string source, std::size_t line, std::string key)
        : source_(std::move(source)), line_(line), key_(std::move(key)) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError(source_ + ":" + std::to_string(line_) + ": key '" + key_ + "': " + what);
    }

    double real(const std::string& tok) const {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v))
            fail("expected a real number, got '" + tok + "'");
        return v;
    }

    std::uint64_t count(const std::string& tok) const {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            fail("expected a non-negative integer, got '" + tok + "'");
        return v;
    }

    Eigen::VectorXd reals(const std::string& value) const {
        const auto toks = split_ws(value);
        if (toks.empty()) fail("expected at least one number");
        Eigen::VectorXd v(static_cast<Eigen::Index>(toks.size()));
        for (std::size_t i = 0; i < toks.size(); ++i) v[static_cast<Eigen::Index>(i)] = real(toks[i]);
        return v;
    }

    double single_real(const std::string& value) const {
        const auto toks = split_ws(value);
        if (toks.size() != 1) fail("expected exactly one number");
        return real(toks[0]);
    }

    std::uint64_t single_count(const std::string& value) const {
        const auto toks = split_ws(value);
        if (toks.size() != 1) fail("expected exactly one integer");
        return count(toks[0]);
    }

private:
    std::string source_;
    std::size_t line_;
    std::string key_;
};

std::string format_real(double v) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
    return out.str();
}

std::string format_reals(const Eigen::VectorXd& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += format_real(v[i]);
    }
    return s;
}

struct Located {
    std::string value;
    std::size_t line;
};

}  // namespace

std::string to_string(Sense s) { return s == Sense::maximize_mean ? "maximize" : "minimize"; }
std::string to_string(Mode m) { return m == Mode::robust ? "robust" : "deterministic"; }

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    const std::string t = trim(text);
    auto parse_one = [&](const std::string& tok) {
        std::uint64_t v = 0;
        const std::string s = trim(tok);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw ConfigError("seeds: '" + s + "' is not a non-negative integer");
        return v;
    };
    std::vector<std::uint64_t> out;
    if (const auto dots = t.find(".."); dots != std::string::npos) {
        const auto first = parse_one(t.substr(0, dots));
        const auto last = parse_one(t.substr(dots + 2));
        if (last < first) throw ConfigError("seeds: empty range '" + t + "'");
        for (std::uint64_t s = first; s <= last; ++s) out.push_back(s);
        return out;
    }
    std::istringstream in(t);
    for (std::string tok; std::getline(in, tok, ',');) out.push_back(parse_one(tok));
    if (out.empty()) throw ConfigError("seeds: no seeds given");
    return out;
}

RobustProblem ExperimentConfig::make_problem() const {
    Objective f;
    if (problem == "two-peak") {
        auto tp = TwoPeakFunction<double>::standard();
        f = [tp](const DesignPoint& p) { return tp(p); };
    } else {
        std::vector<GaussianBump<double>> terms;
        for (const auto& b : bumps) terms.emplace_back(b.height, b.center, b.width);
        f = [terms](const DesignPoint& p) {
            double acc = 0.0;
            for (const auto& t : terms) acc += t(p);
            return acc;
        };
    }
    return RobustProblem(std::move(f), sense, UncertaintySpec(noise_std), std_constraint, Bounds(lower, upper));
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string& key, const std::string& what) {
        throw ConfigError("key '" + key + "': " + what);
    };
    if (problem != "two-peak" && problem != "bumps") fail("problem", "must be 'two-peak' or 'bumps'");
    if (problem == "two-peak" && !bumps.empty()) fail("bump", "only allowed with problem = bumps");
    if (problem == "bumps" && bumps.empty()) fail("bump", "problem = bumps needs at least one bump line");
    if (lower.size() == 0 || lower.size() != upper.size()) fail("bounds", "dimension mismatch");
    if (!(lower.array() < upper.array()).all()) fail("bounds", "every lower bound must be below its upper bound");
    if (problem == "two-peak" && lower.size() != 2) fail("bounds", "the two-peak problem is two-dimensional");
    for (const auto& b : bumps) {
        if (b.center.size() != lower.size()) fail("bump", "center dimension differs from bounds dimension");
        if (!(b.width > 0.0)) fail("bump", "width must be positive");
    }
    if (noise_std.size() != lower.size()) fail("std", "needs one value or one per dimension");
    if (!(noise_std.array() > 0.0).all()) fail("std", "must be positive");
    if (!(std_constraint > 0.0)) fail("constraint", "must be positive");
    if (seeds.empty()) fail("seeds", "no seeds given");
    if (run.eval_budget < 1) fail("evals", "must be at least 1");
    if (run.mode == Mode::robust && run.samples_per_design < 2) fail("samples", "must be at least 2 in robust mode");
    if (run.estimator == Estimator::pce) {
        const auto terms = total_degree_basis(dim(), run.pce_degree).size();
        if (run.mode == Mode::robust && run.samples_per_design < terms)
            fail("samples", "pce degree " + std::to_string(run.pce_degree) + " needs at least " +
                                std::to_string(terms) + " samples");
    }
    if (!(run.step_scale >= 0.0)) fail("step_scale", "must be non-negative");
    if (!(run.step_decay >= 0.0)) fail("step_decay", "must be non-negative");
    if (!(run.schedule.t_initial > 0.0)) fail("t_initial", "must be positive");
    if (!(run.schedule.t_final > 0.0 && run.schedule.t_final < run.schedule.t_initial))
        fail("t_final", "must be positive and below t_initial");
    if (!(run.schedule.cooling > 0.0 && run.schedule.cooling < 1.0)) fail("cooling", "must lie in (0, 1)");
    if (run.weights.size() != 2 || !(run.weights.array() >= 0.0).all() || std::abs(run.weights.sum() - 1.0) > 1e-12)
        fail("weights", "need two non-negative weights summing to 1");
}

bool ExperimentConfig::operator==(const ExperimentConfig& o) const {
    return problem == o.problem && bumps == o.bumps && sense == o.sense && lower == o.lower && upper == o.upper &&
           noise_std == o.noise_std && std_constraint == o.std_constraint && seeds == o.seeds &&
           output_dir == o.output_dir && run.eval_budget == o.run.eval_budget &&
           run.samples_per_design == o.run.samples_per_design && run.estimator == o.run.estimator &&
           run.pce_degree == o.run.pce_degree && run.step_scale == o.run.step_scale &&
           run.step_decay == o.run.step_decay && run.mode == o.run.mode && run.weights == o.run.weights &&
           run.schedule.t_initial == o.run.schedule.t_initial && run.schedule.t_final == o.run.schedule.t_final &&
           run.schedule.cooling == o.run.schedule.cooling &&
           run.schedule.steps_per_temperature == o.run.schedule.steps_per_temperature;
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& source) {
    std::map<std::string, Located> values;
    std::vector<Located> bump_lines;

    std::istringstream in(text);
    std::size_t lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) {
            std::string msg = source + ":" + std::to_string(lineno) + ": unknown key '" + key + "'";
            if (const auto s = suggestion_for(key); !s.empty()) msg += "; did you mean '" + s + "'?";
            throw ConfigError(msg);
        }
        if (value.empty()) Context(source, lineno, key).fail("missing value");
        if (key == "bump") {
            bump_lines.push_back({value, lineno});
            continue;
        }
        if (values.count(key))
            Context(source, lineno, key).fail("repeated (first set on line " + std::to_string(values[key].line) + ")");
        values[key] = {value, lineno};
    }

    ExperimentConfig cfg;
    auto ctx = [&](const std::string& key) { return Context(source, values.at(key).line, key); };
    auto has = [&](const std::string& key) { return values.count(key) > 0; };
    auto val = [&](const std::string& key) { return values.at(key).value; };

    if (!has("problem")) throw ConfigError(source + ": missing required key 'problem'");
    cfg.problem = val("problem");
    if (cfg.problem != "two-peak" && cfg.problem != "bumps") ctx("problem").fail("must be 'two-peak' or 'bumps'");

    for (const auto& b : bump_lines) {
        Context c(source, b.line, "bump");
        const Eigen::VectorXd nums = c.reals(b.value);
        if (nums.size() < 3) c.fail("expected: height width center...");
        BumpSpec spec;
        spec.height = nums[0];
        spec.width = nums[1];
        if (!(spec.width > 0.0)) c.fail("width must be positive");
        spec.center = nums.tail(nums.size() - 2);
        cfg.bumps.push_back(std::move(spec));
    }

    Eigen::Index dim = 2;
    if (cfg.problem == "bumps" && !cfg.bumps.empty()) dim = cfg.bumps.front().center.size();

    if (has("bounds")) {
        const Eigen::VectorXd b = ctx("bounds").reals(val("bounds"));
        if (b.size() == 2) {
            cfg.lower = Eigen::VectorXd::Constant(dim, b[0]);
            cfg.upper = Eigen::VectorXd::Constant(dim, b[1]);
        } else if (b.size() == 2 * dim) {
            cfg.lower.resize(dim);
            cfg.upper.resize(dim);
            for (Eigen::Index j = 0; j < dim; ++j) {
                cfg.lower[j] = b[2 * j];
                cfg.upper[j] = b[2 * j + 1];
            }
        } else {
            ctx("bounds").fail("expected 'lo hi' or one 'lo hi' pair per dimension");
        }
        if (!(cfg.lower.array() < cfg.upper.array()).all()) ctx("bounds").fail("lower bound must be below upper bound");
    } else {
        cfg.lower = Eigen::VectorXd::Constant(dim, -5.0);
        cfg.upper = Eigen::VectorXd::Constant(dim, 5.0);
    }

    if (has("std")) {
        const Eigen::VectorXd s = ctx("std").reals(val("std"));
        if (!(s.array() > 0.0).all()) ctx("std").fail("must be positive");
        if (s.size() == 1) cfg.noise_std = Eigen::VectorXd::Constant(dim, s[0]);
        else if (s.size() == dim) cfg.noise_std = s;
        else ctx("std").fail("expected one value or one per dimension");
    } else {
        cfg.noise_std = Eigen::VectorXd::Constant(dim, 0.1);
    }

    if (has("sense")) {
        const auto v = val("sense");
        if (v == "maximize") cfg.sense = Sense::maximize_mean;
        else if (v == "minimize") cfg.sense = Sense::minimize_mean;
        else ctx("sense").fail("must be 'maximize' or 'minimize'");
    }
    if (has("constraint")) {
        cfg.std_constraint = ctx("constraint").single_real(val("constraint"));
        if (!(cfg.std_constraint > 0.0)) ctx("constraint").fail("must be positive");
    }
    if (has("estimator")) {
        const auto v = val("estimator");
        if (v == "empirical") cfg.run.estimator = Estimator::empirical;
        else if (v == "pce") cfg.run.estimator = Estimator::pce;
        else ctx("estimator").fail("must be 'empirical' or 'pce'");
    }
    if (has("pce_degree")) cfg.run.pce_degree = static_cast<unsigned>(ctx("pce_degree").single_count(val("pce_degree")));
    if (has("evals")) {
        cfg.run.eval_budget = ctx("evals").single_count(val("evals"));
        if (cfg.run.eval_budget < 1) ctx("evals").fail("must be at least 1");
    }
    if (has("samples")) cfg.run.samples_per_design = ctx("samples").single_count(val("samples"));
    if (has("seeds")) {
        try {
            cfg.seeds = parse_seed_list(val("seeds"));
        } catch (const ConfigError& e) {
            ctx("seeds").fail(e.what());
        }
    }
    if (has("mode")) {
        const auto v = val("mode");
        if (v == "robust") cfg.run.mode = Mode::robust;
        else if (v == "deterministic") cfg.run.mode = Mode::deterministic;
        else ctx("mode").fail("must be 'robust' or 'deterministic'");
    }
    if (has("step_scale")) {
        cfg.run.step_scale = ctx("step_scale").single_real(val("step_scale"));
        if (cfg.run.step_scale < 0.0) ctx("step_scale").fail("must be non-negative");
    }
    if (has("step_decay")) {
        cfg.run.step_decay = ctx("step_decay").single_real(val("step_decay"));
        if (cfg.run.step_decay < 0.0) ctx("step_decay").fail("must be non-negative");
    }
    if (has("t_initial")) cfg.run.schedule.t_initial = ctx("t_initial").single_real(val("t_initial"));
    if (has("t_final")) cfg.run.schedule.t_final = ctx("t_final").single_real(val("t_final"));
    if (has("cooling")) cfg.run.schedule.cooling = ctx("cooling").single_real(val("cooling"));
    if (has("steps_per_temperature"))
        cfg.run.schedule.steps_per_temperature = ctx("steps_per_temperature").single_count(val("steps_per_temperature"));
    if (has("weights")) {
        cfg.run.weights = ctx("weights").reals(val("weights"));
        if (cfg.run.weights.size() != 2) ctx("weights").fail("expected two weights");
    }
    if (has("output")) cfg.output_dir = val("output");

    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(source + ": " + e.what());
    }
    return cfg;
}

ExperimentConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string() + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path.string());
}

std::string write_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "problem = " << cfg.problem << '\n';
    for (const auto& b : cfg.bumps)
        out << "bump = " << format_real(b.height) << ' ' << format_real(b.width) << ' ' << format_reals(b.center)
            << '\n';
    out << "sense = " << to_string(cfg.sense) << '\n';
    out << "bounds =";
    for (Eigen::Index j = 0; j < cfg.lower.size(); ++j)
        out << ' ' << format_real(cfg.lower[j]) << ' ' << format_real(cfg.upper[j]);
    out << '\n';
    out << "std = " << format_reals(cfg.noise_std) << '\n';
    out << "constraint = " << format_real(cfg.std_constraint) << '\n';
    out << "estimator = " << to_string(cfg.run.estimator) << '\n';
    out << "pce_degree = " << cfg.run.pce_degree << '\n';
    out << "evals = " << cfg.run.eval_budget << '\n';
    out << "samples = " << cfg.run.samples_per_design << '\n';
    out << "seeds =";
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) out << (i ? "," : " ") << cfg.seeds[i];
    out << '\n';
    out << "mode = " << to_string(cfg.run.mode) << '\n';
    out << "step_scale = " << format_real(cfg.run.step_scale) << '\n';
    out << "step_decay = " << format_real(cfg.run.step_decay) << '\n';
    out << "t_initial = " << format_real(cfg.run.schedule.t_initial) << '\n';
    out << "t_final = " << format_real(cfg.run.schedule.t_final) << '\n';
    out << "cooling = " << format_real(cfg.run.schedule.cooling) << '\n';
    out << "steps_per_temperature = " << cfg.run.schedule.steps_per_temperature << '\n';
    out << "weights = " << format_reals(cfg.run.weights) << '\n';
    if (!cfg.output_dir.empty()) out << "output = " << cfg.output_dir << '\n';
    return out.str();
}

}  // namespace rdo
