#include "ntc/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ntc/brieskorn.hpp"
#include "ntc/homogeneous.hpp"
#include "ntc/reduction.hpp"

namespace ntc {

namespace {

constexpr const char* kCmWarning =
    "Gorenstein verdict assumes the normal tangent cone is Cohen-Macaulay";

json envelope(const char* command) {
  json doc = json::object();
  doc["schema"] = kReportSchema;
  doc["command"] = command;
  return doc;
}

// The unique r with (r-1) z^2 + K.z = 0, when it is an integer >= 1;
// null otherwise. z^2 < 0 guarantees uniqueness.
json solving_r(const Rat& zsq, const Rat& kz) {
  if (zsq >= 0) return nullptr;
  const Rat r0 = Rat(1) + kz / (-zsq);
  if (!is_integer(r0) || r0 < 1) return nullptr;
  return static_cast<long long>(r0.numerator());
}

json cycle_entry(const IntersectionLattice& lat, const QVec& z) {
  json item = json::object();
  item["cycle"] = cycle_to_json(lat.graph(), z);
  item["chi"] = to_string(lat.chi(z));
  item["solving_r"] = solving_r(lat.pairing(z, z), lat.k_dot(z));
  return item;
}

}  // namespace

json cycle_to_json(const WeightedDualGraph& g, const QVec& z) {
  if (z.size() != g.size()) throw std::invalid_argument("cycle length mismatch");
  json obj = json::object();
  for (std::size_t i = 0; i < z.size(); ++i) obj[g.vertices[i].id] = to_string(z[i]);
  return obj;
}

json cycle_to_json(const WeightedDualGraph& g, const ZVec& z) {
  return cycle_to_json(g, to_rational(z));
}

ZVec load_bound_file(const std::filesystem::path& path, const WeightedDualGraph& g) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read bound file: " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("bound file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_object() ||
      doc.size() != 1) {
    throw std::invalid_argument("bound file must be {\"coeffs\": {id: value, ...}}");
  }
  const json& coeffs = doc["coeffs"];
  ZVec out(g.size(), Int(0));
  std::vector<bool> seen(g.size(), false);
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    const std::size_t i = g.index_of(it.key());  // throws on unknown id
    if (!it.value().is_number_integer()) {
      throw std::invalid_argument("bound for " + it.key() + " must be an integer");
    }
    const long long v = it.value().get<long long>();
    if (v < 0) throw std::invalid_argument("bound for " + it.key() + " must be >= 0");
    out[i] = v;
    seen[i] = true;
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!seen[i]) {
      throw std::invalid_argument("bound file is missing vertex " + g.vertices[i].id);
    }
  }
  return out;
}

json report_graph_check(const WeightedDualGraph& g, const std::string& source) {
  json doc = envelope("graph check");
  doc["source"] = source;
  if (!g.name.empty()) doc["name"] = g.name;
  doc["vertices"] = g.size();
  doc["edges"] = g.edges.size();
  doc["arrows"] = g.arrows.size();
  doc["connected"] = true;          // load would have failed otherwise
  doc["negative_definite"] = true;  // likewise
  doc["valid"] = true;
  return doc;
}

json report_graph_analyze(const WeightedDualGraph& g, const std::string& source,
                          std::optional<long long> r) {
  const IntersectionLattice lat(g);
  const QVec z = lat.cycle_from_arrows();
  const Rat zsq = lat.pairing(z, z);
  const Rat kz = lat.k_dot(z);

  json doc = envelope("graph analyze");
  doc["source"] = source;
  doc["cycle"] = cycle_to_json(g, z);
  doc["cycle_integral"] = is_integral(z);
  doc["antinef"] = lat.is_antinef(z);
  doc["zsq"] = to_string(zsq);
  doc["kz"] = to_string(kz);
  doc["chi"] = to_string(lat.chi(z));
  doc["e0"] = to_string(-zsq);
  doc["canonical_cycle"] = cycle_to_json(g, lat.canonical_cycle());
  doc["canonical_integral"] = is_integral(lat.canonical_cycle());

  json criterion = json::object();
  criterion["solving_r"] = solving_r(zsq, kz);
  if (r) {
    if (*r < 1) throw std::invalid_argument("r must be >= 1");
    criterion["given_r"] = *r;
    criterion["holds_at_given_r"] = Rat(*r - 1) * zsq + kz == Rat(0);
  }
  const json& rs = criterion["solving_r"];
  criterion["class"] = rs.is_null() ? json(nullptr)
                                    : json(to_string(classify_by_br(rs.get<long long>())));
  doc["criterion"] = std::move(criterion);
  doc["warnings"] = json::array({kCmWarning});
  return doc;
}

json report_graph_dual(const WeightedDualGraph& g, const std::string& source,
                       const std::string& vertex_id) {
  const IntersectionLattice lat(g);
  const std::size_t j = g.index_of(vertex_id);
  const QVec& dual = lat.dual_cycle(j);

  json doc = envelope("graph dual");
  doc["source"] = source;
  doc["vertex"] = vertex_id;
  doc["dual"] = cycle_to_json(g, dual);
  doc["integral"] = is_integral(dual);
  doc["zsq"] = to_string(lat.pairing(dual, dual));
  return doc;
}

json report_graph_fundamental(const WeightedDualGraph& g, const std::string& source) {
  const IntersectionLattice lat(g);
  const ZVec zf = lat.fundamental_cycle();
  const QVec zq = to_rational(zf);

  json doc = envelope("graph fundamental");
  doc["source"] = source;
  doc["fundamental"] = cycle_to_json(g, zf);
  doc["chi"] = to_string(lat.chi(zq));
  doc["zsq"] = to_string(lat.pairing(zq, zq));
  doc["kz"] = to_string(lat.k_dot(zq));
  return doc;
}

json report_graph_enum(const WeightedDualGraph& g, const std::string& source,
                       const std::string& mode, const std::optional<ZVec>& bound) {
  const IntersectionLattice lat(g);
  json doc = envelope("graph enum");
  doc["source"] = source;
  doc["mode"] = mode;
  json warnings = json::array();

  std::vector<ZVec> cycles;
  if (mode == "below") {
    if (!bound) throw std::invalid_argument("mode below needs --bound FILE");
    doc["threshold"] = cycle_to_json(g, *bound);
    cycles = lat.enumerate_antinef_below(*bound);
  } else if (mode == "zk") {
    const auto res = lat.enumerate_antinef_not_exceeding_canonical();
    doc["threshold"] = cycle_to_json(g, lat.canonical_cycle());
    cycles = res.cycles;
    if (res.degenerate_warning) {
      warnings.push_back("canonical cycle has no positive coefficient; list is empty");
    }
  } else {
    throw std::invalid_argument("mode must be below or zk");
  }

  json items = json::array();
  for (const ZVec& z : cycles) items.push_back(cycle_entry(lat, to_rational(z)));
  doc["count"] = items.size();
  doc["cycles"] = std::move(items);
  warnings.push_back(kCmWarning);
  doc["warnings"] = std::move(warnings);
  return doc;
}

json report_graph_chimin(const WeightedDualGraph& g, const std::string& source,
                         const std::optional<ZVec>& bound) {
  const IntersectionLattice lat(g);
  ZVec box;
  if (bound) {
    box = *bound;
  } else {
    // Default search box: twice the canonical cycle (clamped to >= 0),
    // plus the fundamental cycle.
    const ZVec zf = lat.fundamental_cycle();
    const QVec& zk = lat.canonical_cycle();
    for (std::size_t i = 0; i < g.size(); ++i) {
      Int c = 2 * ceil_rat(zk[i]);
      if (c < 0) c = 0;
      box.push_back(c + zf[i]);
    }
  }
  const auto res = lat.chi_min(box);

  json doc = envelope("graph chimin");
  doc["source"] = source;
  doc["bound"] = cycle_to_json(g, box);
  doc["minimum"] = to_string(res.value);
  doc["witness"] = cycle_to_json(g, res.witness);
  return doc;
}

json report_brieskorn(long long a, long long b, long long c) {
  const BrieskornType t = make_brieskorn(a, b, c);
  const BrieskornInvariants inv = invariants(t);
  const BSequence bs = b_sequence(t);
  const GorensteinVerdict verdict = is_gorenstein(t);
  const QSequence q = q_profile(t);
  const Rat chi = Rat(Int(inv.zsq) + inv.kz) * Rat(-1, 2);

  json doc = envelope("brieskorn");
  doc["type"] = json{{"a", a}, {"b", b}, {"c", c}};
  doc["d"] = inv.d;
  doc["n"] = inv.n;
  doc["r"] = inv.r;
  doc["zsq"] = inv.zsq;
  doc["kz"] = inv.kz;
  doc["chi"] = to_string(chi);
  doc["b_sequence"] = bs.b;
  doc["L_colengths"] = L_colengths(bs);
  doc["q_differences"] = q.differences();
  doc["br"] = json{{"formula", inv.r}, {"direct", br_direct(t)}, {"q", q.br()}};
  doc["class"] = to_string(classify_by_br(inv.r));
  doc["gorenstein"] = json{{"arith", verdict.arith},
                           {"cycle", verdict.cycle},
                           {"symmetric", verdict.symmetric},
                           {"value", verdict.value()}};
  doc["eqbb"] = eqbb_check(bs, chi);
  return doc;
}

json report_brieskorn_scan(long long max_abc) {
  const CorollaryReport rep = corollary_suite(max_abc);
  json doc = envelope("brieskorn scan");
  doc["max"] = max_abc;
  doc["types_checked"] = rep.types_checked;
  doc["violations"] = rep.violations;
  doc["clean"] = rep.violations.empty();
  return doc;
}

json report_homog_classify(long long d) {
  const HomogModel m = model(d);
  const Classification cls = classify(d);
  json doc = envelope("homog classify");
  doc["d"] = d;
  doc["model"] = json{{"genus", m.g},  {"csq", m.Csq}, {"kc", m.KC},
                      {"pg", m.pg},    {"br_m", m.br_m}};
  doc["labels"] = cls.labels;
  doc["verified"] = cls.verified;
  doc["warnings"] = json::array({kCmWarning});
  return doc;
}

json report_homog_power(long long d, long long n) {
  const PowerReport rep = power_report(d, n);
  json doc = envelope("homog power");
  doc["d"] = d;
  doc["n"] = n;
  doc["colength"] = rep.colength;
  doc["q"] = rep.q;
  doc["gorenstein"] = rep.gorenstein;
  doc["br"] = rep.br;
  doc["warnings"] = json::array({kCmWarning});
  return doc;
}

json report_homog_il(long long d) {
  const ILReport rep = il_report(d);
  json doc = envelope("homog il");
  doc["d"] = d;
  doc["chi"] = rep.chi;
  doc["q"] = rep.q;
  if (rep.zsq) doc["zsq"] = *rep.zsq;
  if (rep.colength) doc["colength"] = *rep.colength;
  if (rep.colength2) doc["colength2"] = *rep.colength2;
  return doc;
}

json report_verify(const std::vector<CheckResult>& results, const VerifyOptions& opts) {
  json doc = envelope("verify-paper");
  doc["fixtures"] = opts.fixture_dir.string();
  doc["max"] = opts.sweep_max;
  json checks = json::array();
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    checks.push_back(json{{"number", r.number}, {"id", r.id}, {"pass", r.pass},
                          {"details", r.details}});
    if (r.pass) ++passed;
  }
  doc["checks"] = std::move(checks);
  doc["passed"] = passed;
  doc["failed"] = results.size() - passed;
  doc["all_pass"] = passed == results.size();
  return doc;
}

namespace {

void render_node(const json& node, const std::string& indent, std::ostringstream& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        out << indent << it.key() << ":\n";
        render_node(it.value(), indent + "  ", out);
      } else {
        out << indent << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (node.is_array()) {
    for (const json& item : node) {
      if (item.is_object() || item.is_array()) {
        out << indent << "-\n";
        render_node(item, indent + "  ", out);
      } else {
        out << indent << "- " << item.dump() << "\n";
      }
    }
    if (node.empty()) out << indent << "(empty)\n";
  } else {
    out << indent << node.dump() << "\n";
  }
}

}  // namespace

std::string render_human(const json& report) {
  std::ostringstream out;
  render_node(report, "", out);
  return out.str();
}

}  // namespace ntc
