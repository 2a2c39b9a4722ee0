#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "ntc/graph.hpp"
#include "ntc/lattice.hpp"
#include "ntc/rational.hpp"
#include "ntc/verify.hpp"

namespace ntc {

using nlohmann::json;

// Every report carries this schema tag. Reports are deterministic:
// identical inputs produce byte-identical serialized documents (object keys
// sorted, lists in documented orders, no wall-clock data).
inline constexpr const char* kReportSchema = "ntc.report/v1";

// Cycle coefficients keyed by vertex id, values as exact decimal strings
// ("2", "-7/5"). Keys sort alphabetically in the serialized document; the
// coordinate order of the underlying vector is the vertex input order.
json cycle_to_json(const WeightedDualGraph& g, const QVec& z);
json cycle_to_json(const WeightedDualGraph& g, const ZVec& z);

// A cycle bound file: {"coeffs": {"E0": 3, ...}} with every vertex id
// present exactly once and nonnegative integer values.
ZVec load_bound_file(const std::filesystem::path& path, const WeightedDualGraph& g);

// Report builders behind each CLI command. `source` is the user-supplied
// file path, echoed verbatim into the report.
json report_graph_check(const WeightedDualGraph& g, const std::string& source);
json report_graph_analyze(const WeightedDualGraph& g, const std::string& source,
                          std::optional<long long> r);
json report_graph_dual(const WeightedDualGraph& g, const std::string& source,
                       const std::string& vertex_id);
json report_graph_fundamental(const WeightedDualGraph& g, const std::string& source);
json report_graph_enum(const WeightedDualGraph& g, const std::string& source,
                       const std::string& mode, const std::optional<ZVec>& bound);
json report_graph_chimin(const WeightedDualGraph& g, const std::string& source,
                         const std::optional<ZVec>& bound);
json report_brieskorn(long long a, long long b, long long c);
json report_brieskorn_scan(long long max_abc);
json report_homog_classify(long long d);
json report_homog_power(long long d, long long n);
json report_homog_il(long long d);
json report_verify(const std::vector<CheckResult>& results, const VerifyOptions& opts);

// Plain-text rendering of any report for --human: a deterministic
// key/value walk of the document.
std::string render_human(const json& report);

}  // namespace ntc
