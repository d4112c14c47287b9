#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "opinion/params.hpp"

namespace opinion {

/// Everything a run needs, resolvable from a sectioned key=value file plus
/// flag overrides. Defaults match the reference parameterization.
struct RunConfig {
    // [graph]
    std::string graph_source = "generate";  // "generate" or an edge-list path
    std::size_t graph_nodes = 5000;
    std::size_t graph_edges_per_node = 4;
    std::size_t prune_threshold = 1;

    // [model]
    ModelParams params;

    // [seeding]
    SeedingStrategy seeding;

    // [relaxation]
    RelaxationCriterion relaxation;

    // [experiment]
    std::size_t replications = 100;
    std::string vary = "none";  // none|init-prop|bc|seeding|alpha|sigma2
    std::vector<double> values;  // sweep grid; empty uses the built-in grid
    bool resample_expertise = true;

    // [run]
    std::uint64_t master_seed = 1;
    std::string output_dir = "out";

    bool operator==(const RunConfig&) const = default;
};

/// Parses the sectioned key=value format. Unknown sections or keys, or
/// unparsable values, raise ValidationError naming the file line.
RunConfig parse_config_file(std::istream& in, const std::string& origin);

/// Applies flag overrides ("b" -> "3") on top of a parsed config. Keys are
/// the same as the file keys; section prefixes are not needed because key
/// names are unique.
void apply_overrides(RunConfig& cfg,
                     const std::vector<std::pair<std::string, std::string>>& overrides);

/// Canonical serialization; parse(serialize(c)) == c. The output directory
/// can be excluded so fingerprints do not depend on where results land.
std::string serialize_config(const RunConfig& cfg, bool include_output_dir = true);

/// Cross-field invariant checks (named errors, e.g. leader_count vs
/// fraction); call after overrides.
void validate(const RunConfig& cfg);

/// FNV-1a of the canonical serialization without the output directory.
std::uint64_t config_fingerprint(const RunConfig& cfg);

/// The built-in sweep grid for a `vary` mode, used when `values` is empty.
std::vector<double> default_sweep_values(const std::string& vary);

}  // namespace opinion
