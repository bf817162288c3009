#include "edgering/report.hpp"

#include <sstream>
#include <stdexcept>

namespace edgering {

using nlohmann::json;

namespace {

json cycle_json(const OddCycle& c) {
  json out = json::array();
  for (int v : c.vertices) out.push_back(v + 1);
  return out;
}

OddCycle cycle_from_json(const json& j) {
  OddCycle c;
  for (const json& v : j) c.vertices.push_back(v.get<int>() - 1);
  return c;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

Report make_report(std::string input, const Graph& g, ClassificationReport classification) {
  Report r;
  r.input = std::move(input);
  r.d = g.order();
  r.n = g.size();
  r.classification = std::move(classification);
  return r;
}

json to_json(const FacetDescriptor& f) {
  if (f.is_regular_vertex()) return {{"kind", "regular_vertex"}, {"vertex", f.vertex() + 1}};
  return {{"kind", "fundamental"}, {"set", f.set().labels()}};
}

FacetDescriptor facet_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "regular_vertex") return FacetDescriptor::regular_vertex(j.at("vertex").get<int>() - 1);
  if (kind == "fundamental") {
    VertexSet t;
    for (const json& v : j.at("set")) t.insert(v.get<int>() - 1);
    return FacetDescriptor::fundamental(t);
  }
  throw std::invalid_argument("unknown facet kind: " + kind);
}

json to_json(const Report& r) {
  const ClassificationReport& c = r.classification;
  json out;
  out["input"] = r.input;
  out["d"] = r.d;
  out["n"] = r.n;
  out["bipartite"] = c.bipartite;
  out["normal"] = c.normal;
  out["r1"] = c.r1;
  out["notes"] = c.notes;
  out["r1_violations"] = json::array();
  for (const FacetDescriptor& f : c.r1_violations) out["r1_violations"].push_back(to_json(f));
  if (c.occ_violation) out["occ_violation"] = {cycle_json(c.occ_violation->first), cycle_json(c.occ_violation->second)};
  if (r.facets) {
    out["facets"] = json::array();
    for (const FacetRow& row : *r.facets) {
      json entry = to_json(row.facet);
      entry["coeffs"] = row.form.coeffs;
      entry["denom"] = row.form.denom;
      if (row.condition_one) entry["condition_one"] = *row.condition_one;
      if (row.condition_two) entry["condition_two"] = *row.condition_two;
      out["facets"].push_back(std::move(entry));
    }
  }
  if (r.oracle_r1) out["oracle_r1"] = *r.oracle_r1;
  if (r.agreement) out["agreement"] = *r.agreement;
  return out;
}

Report report_from_json(const json& j) {
  Report r;
  r.input = j.at("input").get<std::string>();
  r.d = j.at("d").get<int>();
  r.n = j.at("n").get<int>();
  ClassificationReport& c = r.classification;
  c.bipartite = j.at("bipartite").get<bool>();
  c.normal = j.at("normal").get<bool>();
  c.r1 = j.at("r1").get<bool>();
  c.notes = j.at("notes").get<std::string>();
  for (const json& f : j.at("r1_violations")) c.r1_violations.push_back(facet_from_json(f));
  if (j.contains("occ_violation")) {
    const json& pair = j.at("occ_violation");
    c.occ_violation = OddCyclePair{cycle_from_json(pair.at(0)), cycle_from_json(pair.at(1))};
  }
  if (j.contains("facets")) {
    r.facets.emplace();
    for (const json& entry : j.at("facets")) {
      FacetRow row{facet_from_json(entry), {}, std::nullopt, std::nullopt};
      row.form.coeffs = entry.at("coeffs").get<std::vector<std::int64_t>>();
      row.form.denom = entry.at("denom").get<int>();
      if (entry.contains("condition_one")) row.condition_one = entry.at("condition_one").get<bool>();
      if (entry.contains("condition_two")) row.condition_two = entry.at("condition_two").get<bool>();
      r.facets->push_back(std::move(row));
    }
  }
  if (j.contains("oracle_r1")) r.oracle_r1 = j.at("oracle_r1").get<bool>();
  if (j.contains("agreement")) r.agreement = j.at("agreement").get<bool>();
  return r;
}

std::string render_text(const Report& r) {
  const ClassificationReport& c = r.classification;
  std::ostringstream out;
  out << "input: " << r.input << '\n';
  out << "d: " << r.d << '\n';
  out << "n: " << r.n << '\n';
  out << "bipartite: " << yes_no(c.bipartite) << '\n';
  out << "normal: " << yes_no(c.normal) << '\n';
  out << "R1: " << yes_no(c.r1) << '\n';
  out << "r1_violations:";
  if (c.r1_violations.empty()) out << " none";
  for (const FacetDescriptor& f : c.r1_violations) out << ' ' << f.to_string();
  out << '\n';
  if (c.occ_violation) {
    out << "occ_violation: " << c.occ_violation->first.to_string() << ' ' << c.occ_violation->second.to_string() << '\n';
  }
  out << "notes: " << c.notes << '\n';
  if (r.facets) {
    for (const FacetRow& row : *r.facets) {
      out << "facet " << row.facet.to_string() << " coeffs:";
      for (auto x : row.form.coeffs) out << ' ' << x;
      out << " denom: " << row.form.denom;
      if (row.condition_one) out << " condition_one: " << (*row.condition_one ? "pass" : "fail");
      if (row.condition_two) out << " condition_two: " << (*row.condition_two ? "pass" : "fail");
      out << '\n';
    }
  }
  if (r.oracle_r1) out << "oracle R1: " << yes_no(*r.oracle_r1) << '\n';
  if (r.agreement) out << "agreement: " << (*r.agreement ? "OK" : "MISMATCH") << '\n';
  return out.str();
}

}  // namespace edgering
