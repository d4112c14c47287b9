#include "opinion/config.hpp"

#include <charconv>
#include <istream>

#include "opinion/agents.hpp"
#include "opinion/errors.hpp"
#include "opinion/format.hpp"

namespace opinion {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(const std::string& where, const std::string& message) {
    throw ValidationError(where + ": " + message);
}

double parse_double(std::string_view text, const std::string& where, std::string_view key) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || p != end)
        fail(where, "cannot parse '" + std::string(text) + "' as a number for " + std::string(key));
    return v;
}

std::uint64_t parse_u64(std::string_view text, const std::string& where, std::string_view key) {
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    const auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || p != end)
        fail(where,
             "cannot parse '" + std::string(text) + "' as an unsigned integer for " + std::string(key));
    return v;
}

int parse_int(std::string_view text, const std::string& where, std::string_view key) {
    int v = 0;
    const char* end = text.data() + text.size();
    const auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || p != end)
        fail(where, "cannot parse '" + std::string(text) + "' as an integer for " + std::string(key));
    return v;
}

bool parse_bool(std::string_view text, const std::string& where, std::string_view key) {
    if (text == "true") return true;
    if (text == "false") return false;
    fail(where, "cannot parse '" + std::string(text) + "' as true/false for " + std::string(key));
}

std::vector<double> parse_values(std::string_view text, const std::string& where) {
    std::vector<double> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        out.push_back(parse_double(item, where, "values"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

bool known_vary(std::string_view vary) {
    return vary == "none" || vary == "init-prop" || vary == "bc" || vary == "seeding" ||
           vary == "alpha" || vary == "sigma2";
}

// Section each bare key belongs to; key names are globally unique so flag
// overrides can omit the section.
constexpr std::pair<std::string_view, std::string_view> kKeySections[] = {
    {"source", "graph"},          {"nodes", "graph"},
    {"edges_per_node", "graph"},  {"prune_threshold", "graph"},
    {"b", "model"},               {"c", "model"},
    {"omega1", "model"},          {"omega2", "model"},
    {"omega3", "model"},          {"alpha", "model"},
    {"beta", "model"},            {"mu", "model"},
    {"sigma2", "model"},          {"strategy", "seeding"},
    {"fraction", "seeding"},      {"leader_count", "seeding"},
    {"epsilon", "relaxation"},    {"window", "relaxation"},
    {"max_steps", "relaxation"},  {"replications", "experiment"},
    {"vary", "experiment"},       {"values", "experiment"},
    {"resample_expertise", "experiment"},
    {"seed", "run"},              {"output_dir", "run"},
};

std::string_view section_of(std::string_view key) {
    for (const auto& [k, section] : kKeySections)
        if (k == key) return section;
    return {};
}

void set_value(RunConfig& cfg, std::string_view section, std::string_view key,
               std::string_view value, const std::string& where) {
    if (section_of(key) != section)
        fail(where, "unknown key '" + std::string(key) + "' in section [" + std::string(section) + "]");
    if (section == "graph") {
        if (key == "source") {
            if (value.empty()) fail(where, "source must not be empty");
            cfg.graph_source = std::string(value);
        } else if (key == "nodes") {
            cfg.graph_nodes = parse_u64(value, where, key);
        } else if (key == "edges_per_node") {
            cfg.graph_edges_per_node = parse_u64(value, where, key);
        } else {
            cfg.prune_threshold = parse_u64(value, where, key);
        }
    } else if (section == "model") {
        const double v = parse_double(value, where, key);
        if (key == "b") cfg.params.b = v;
        else if (key == "c") cfg.params.c = v;
        else if (key == "omega1") cfg.params.omega1 = v;
        else if (key == "omega2") cfg.params.omega2 = v;
        else if (key == "omega3") cfg.params.omega3 = v;
        else if (key == "alpha") cfg.params.alpha = v;
        else if (key == "beta") cfg.params.beta = v;
        else if (key == "mu") cfg.params.mu = v;
        else cfg.params.sigma2 = v;
    } else if (section == "seeding") {
        if (key == "strategy") {
            try {
                cfg.seeding.kind = seed_kind_from_string(value);
            } catch (const ValidationError& e) {
                fail(where, e.what());
            }
        } else if (key == "fraction") {
            cfg.seeding.fraction = parse_double(value, where, key);
        } else {
            cfg.seeding.leader_count = parse_u64(value, where, key);
        }
    } else if (section == "relaxation") {
        if (key == "epsilon") cfg.relaxation.epsilon = parse_double(value, where, key);
        else if (key == "window") cfg.relaxation.window = parse_int(value, where, key);
        else cfg.relaxation.max_steps = parse_int(value, where, key);
    } else if (section == "experiment") {
        if (key == "replications") {
            cfg.replications = parse_u64(value, where, key);
        } else if (key == "vary") {
            if (!known_vary(value))
                fail(where, "unknown vary mode '" + std::string(value) +
                                "' (expected none, init-prop, bc, seeding, alpha, or sigma2)");
            cfg.vary = std::string(value);
        } else if (key == "values") {
            cfg.values = parse_values(value, where);
        } else {
            cfg.resample_expertise = parse_bool(value, where, key);
        }
    } else {  // run
        if (key == "seed") cfg.master_seed = parse_u64(value, where, key);
        else cfg.output_dir = std::string(value);
    }
}

}  // namespace

RunConfig parse_config_file(std::istream& in, const std::string& origin) {
    RunConfig cfg;
    std::string line;
    std::string section;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = origin + ":" + std::to_string(line_no);
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#' || body.front() == ';') continue;
        if (body.front() == '[') {
            if (body.back() != ']') fail(where, "unterminated section header");
            const std::string_view name = trim(body.substr(1, body.size() - 2));
            if (name != "graph" && name != "model" && name != "seeding" &&
                name != "relaxation" && name != "experiment" && name != "run")
                fail(where, "unknown section [" + std::string(name) + "]");
            section = std::string(name);
            continue;
        }
        const std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) fail(where, "expected key=value");
        const std::string_view key = trim(body.substr(0, eq));
        const std::string_view value = trim(body.substr(eq + 1));
        if (key.empty()) fail(where, "expected key=value");
        if (section.empty()) fail(where, "key '" + std::string(key) + "' appears before any section");
        set_value(cfg, section, key, value, where);
    }
    return cfg;
}

void apply_overrides(RunConfig& cfg,
                     const std::vector<std::pair<std::string, std::string>>& overrides) {
    for (const auto& [key, value] : overrides) {
        const std::string_view section = section_of(key);
        if (section.empty()) throw ValidationError("unknown option '" + key + "'");
        set_value(cfg, section, key, value, "option " + key);
    }
}

std::string serialize_config(const RunConfig& cfg, bool include_output_dir) {
    std::string out;
    out += "[graph]\n";
    out += "source=" + cfg.graph_source + "\n";
    out += "nodes=" + std::to_string(cfg.graph_nodes) + "\n";
    out += "edges_per_node=" + std::to_string(cfg.graph_edges_per_node) + "\n";
    out += "prune_threshold=" + std::to_string(cfg.prune_threshold) + "\n";
    out += "\n[model]\n";
    out += "b=" + format_exact(cfg.params.b) + "\n";
    out += "c=" + format_exact(cfg.params.c) + "\n";
    out += "omega1=" + format_exact(cfg.params.omega1) + "\n";
    out += "omega2=" + format_exact(cfg.params.omega2) + "\n";
    out += "omega3=" + format_exact(cfg.params.omega3) + "\n";
    out += "alpha=" + format_exact(cfg.params.alpha) + "\n";
    out += "beta=" + format_exact(cfg.params.beta) + "\n";
    out += "mu=" + format_exact(cfg.params.mu) + "\n";
    out += "sigma2=" + format_exact(cfg.params.sigma2) + "\n";
    out += "\n[seeding]\n";
    out += "strategy=" + std::string(to_string(cfg.seeding.kind)) + "\n";
    out += "fraction=" + format_exact(cfg.seeding.fraction) + "\n";
    out += "leader_count=" + std::to_string(cfg.seeding.leader_count) + "\n";
    out += "\n[relaxation]\n";
    out += "epsilon=" + format_exact(cfg.relaxation.epsilon) + "\n";
    out += "window=" + std::to_string(cfg.relaxation.window) + "\n";
    out += "max_steps=" + std::to_string(cfg.relaxation.max_steps) + "\n";
    out += "\n[experiment]\n";
    out += "replications=" + std::to_string(cfg.replications) + "\n";
    out += "vary=" + cfg.vary + "\n";
    out += "values=";
    for (std::size_t i = 0; i < cfg.values.size(); ++i) {
        if (i > 0) out += ",";
        out += format_exact(cfg.values[i]);
    }
    out += "\n";
    out += std::string("resample_expertise=") + (cfg.resample_expertise ? "true" : "false") + "\n";
    out += "\n[run]\n";
    out += "seed=" + std::to_string(cfg.master_seed) + "\n";
    if (include_output_dir) out += "output_dir=" + cfg.output_dir + "\n";
    return out;
}

void validate(const RunConfig& cfg) {
    cfg.params.validate();
    cfg.relaxation.validate();
    if (!(cfg.seeding.fraction > 0.0) || !(cfg.seeding.fraction < 1.0))
        throw ValidationError("fraction must lie strictly between 0 and 1");
    if (cfg.replications < 1) throw ValidationError("replications must be >= 1");
    if (cfg.prune_threshold < 1) throw ValidationError("prune_threshold must be >= 1");
    if (cfg.graph_source.empty()) throw ValidationError("source must not be empty");
    if (cfg.graph_source == "generate") {
        if (cfg.graph_edges_per_node < 1 || cfg.graph_nodes <= cfg.graph_edges_per_node)
            throw ValidationError("nodes must exceed edges_per_node, which must be >= 1");
        // For a generated graph N is known up front, so the top-K bound is too.
        const bool top_k = cfg.seeding.kind != SeedKind::kRandom || cfg.vary == "seeding";
        if (top_k && cfg.seeding.leader_count > seeded_count(cfg.seeding.fraction, cfg.graph_nodes))
            throw ValidationError(
                "leader_count exceeds the seeded count round(fraction * nodes)");
    }
    if (!known_vary(cfg.vary))
        throw ValidationError("unknown vary mode '" + cfg.vary + "'");
    if (cfg.vary == "seeding" && !cfg.values.empty())
        throw ValidationError("the seeding sweep has fixed strategies; values must be empty");
    if (cfg.vary != "none" && cfg.vary != "seeding" && !cfg.values.empty()) {
        for (std::size_t i = 0; i < cfg.values.size(); ++i) {
            const double v = cfg.values[i];
            if (i > 0 && !(v > cfg.values[i - 1]))
                throw ValidationError("values must be strictly increasing");
            if (cfg.vary == "init-prop" && !(v > 0.0 && v < 1.0))
                throw ValidationError("init-prop values must lie strictly between 0 and 1");
            if ((cfg.vary == "bc" || cfg.vary == "alpha" || cfg.vary == "sigma2") && !(v > 0.0))
                throw ValidationError(cfg.vary + " values must be > 0");
        }
    }
}

std::uint64_t config_fingerprint(const RunConfig& cfg) {
    return fnv1a64(serialize_config(cfg, false));
}

std::vector<double> default_sweep_values(const std::string& vary) {
    if (vary == "init-prop") return {0.55, 0.60, 0.65, 0.70, 0.75, 0.80};
    if (vary == "bc") {
        std::vector<double> ratios;
        for (int i = 1; i <= 12; ++i) ratios.push_back(0.25 * i);
        return ratios;
    }
    if (vary == "alpha") return {0.5, 1.0, 2.0};
    if (vary == "sigma2") return {0.1, 0.25, 1.0};
    if (vary == "seeding" || vary == "none") return {};
    throw ValidationError("unknown vary mode '" + vary + "'");
}

}  // namespace opinion
