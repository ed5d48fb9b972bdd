#include "nct/io.hpp"

#include <sstream>

namespace nct {

namespace {

std::string kind_string(SubgroupKind k) {
  switch (k) {
    case SubgroupKind::Intransitive: return "intransitive";
    case SubgroupKind::Imprimitive: return "imprimitive";
    case SubgroupKind::Affine: return "affine";
    case SubgroupKind::PrimitiveWildcard: return "primitive";
    case SubgroupKind::Alternating: return "alternating";
  }
  return "?";
}

}  // namespace

json to_json(const SubgroupClass& c) {
  json j;
  j["kind"] = kind_string(c.kind());
  if (c.kind() == SubgroupKind::Intransitive || c.kind() == SubgroupKind::Imprimitive ||
      c.kind() == SubgroupKind::Affine)
    j["param"] = c.param();
  else
    j["param"] = nullptr;
  return j;
}

json to_json(const CoveringFamily& f) {
  json j;
  j["n"] = f.n;
  j["group"] = to_string(f.group);
  j["provenance"] = to_string(f.provenance);
  j["members"] = json::array();
  for (const auto& m : f.members) j["members"].push_back(to_json(m));
  return j;
}

json family_report_row(const CoveringFamily& f, const CoverageReport& rep) {
  json j;
  j["n"] = f.n;
  j["group"] = to_string(f.group);
  j["provenance"] = to_string(f.provenance);
  j["covered"] = rep.covered;
  j["family_size"] = rep.family_size;
  j["required_types"] = rep.required_types;
  j["uncovered_count"] = static_cast<long long>(rep.uncovered_types.size());
  std::string sample;
  for (size_t i = 0; i < rep.uncovered_types.size() && i < 5; ++i) {
    if (i) sample += ' ';
    sample += rep.uncovered_types[i].to_string();
  }
  j["uncovered_sample"] = sample;
  return j;
}

json bracket_row(const GammaBracket& br) {
  json j;
  j["n"] = br.n;
  j["group"] = to_string(br.group);
  j["lower"] = br.lower;
  j["lower_sound"] = br.lower_sound;
  j["lower_certified"] = br.lower_certified;
  j["upper"] = br.upper;
  if (br.closed_form)
    j["closed_form"] = br.closed_form->value;
  else
    j["closed_form"] = nullptr;
  j["witness_size_lower"] = static_cast<int>(br.lower_witness.chosen.size());
  j["witness_size_upper"] = br.upper_witness.size();
  j["upper_provenance"] = to_string(br.upper_witness.provenance);
  return j;
}

json catalog_row(int n, const CatalogEntry& e, bool valid) {
  json j;
  j["n"] = n;
  j["line"] = e.line;
  j["type"] = e.exceptional_type.to_string();
  j["q"] = e.q;
  j["d"] = e.d;
  j["d1"] = e.d1;
  j["d2"] = e.d2;
  j["p"] = e.p;
  j["m"] = e.m;
  j["k1"] = e.k1;
  j["k2"] = e.k2;
  j["valid"] = valid;
  return j;
}

json extremal_row(const ExtremalProblem& p, const ExtremalResult& r) {
  json j;
  j["n"] = p.n;
  j["variant"] = to_string(p.variant);
  j["maximum"] = r.maximum;
  j["certified"] = r.certified;
  j["method"] = r.method;
  j["nodes"] = r.nodes;
  j["witness"] = r.witness.characteristic_string();
  return j;
}

json triples_summary_row(const RestrictedTriplesReport& rep) {
  json j;
  j["n"] = rep.n;
  j["kind"] = "restricted-triples";
  j["count"] = static_cast<long long>(rep.hits.size());
  j["ceiling"] = rep.ceiling;
  j["within_ceiling"] = static_cast<long long>(rep.hits.size()) <= rep.ceiling;
  return j;
}

json cubes_summary_row(const DegenerateCubesReport& rep) {
  json j;
  j["n"] = rep.n;
  j["kind"] = "degenerate-cubes";
  j["count"] = static_cast<long long>(rep.hits.size());
  j["ceiling"] = rep.ceiling;
  j["within_ceiling"] = static_cast<long long>(rep.hits.size()) <= rep.ceiling;
  return j;
}

namespace {
template <typename Tag>
std::string tags_string(const std::vector<Tag>& tags) {
  std::string s;
  for (size_t i = 0; i < tags.size(); ++i) {
    if (i) s += '+';
    s += to_string(tags[i]);
  }
  return s;
}
}  // namespace

json triple_hit_row(int n, const RestrictedTripleHit& hit) {
  json j;
  j["n"] = n;
  j["kind"] = "restricted-triples";
  j["h"] = hit.h;
  j["x"] = hit.x;
  j["tags"] = tags_string(hit.tags);
  return j;
}

json cube_hit_row(int n, const DegenerateCubeHit& hit) {
  json j;
  j["n"] = n;
  j["kind"] = "degenerate-cubes";
  j["h"] = hit.h;
  j["x"] = hit.x;
  j["tags"] = tags_string(hit.tags);
  return j;
}

json limits_row(const GammaBracket& br) {
  json j;
  j["n"] = br.n;
  j["group"] = to_string(br.group);
  j["lower"] = br.lower;
  j["upper"] = br.upper;
  j["lower_ratio"] = static_cast<double>(br.lower) / br.n;
  j["upper_ratio"] = static_cast<double>(br.upper) / br.n;
  j["lower_sound"] = br.lower_sound;
  return j;
}

const std::vector<std::string>& bracket_columns() {
  static const std::vector<std::string> cols = {
      "n",           "group",       "lower",        "lower_sound",
      "lower_certified", "upper",   "closed_form",  "witness_size_lower",
      "witness_size_upper", "upper_provenance"};
  return cols;
}

const std::vector<std::string>& verify_columns() {
  static const std::vector<std::string> cols = {"n",           "group",          "provenance",
                                                "covered",     "family_size",    "required_types",
                                                "uncovered_count", "uncovered_sample"};
  return cols;
}

const std::vector<std::string>& catalog_columns() {
  static const std::vector<std::string> cols = {"n", "line", "type", "q",  "d",  "d1",
                                                "d2", "p",   "m",    "k1", "k2", "valid"};
  return cols;
}

const std::vector<std::string>& extremal_columns() {
  static const std::vector<std::string> cols = {"n",      "variant", "maximum", "certified",
                                                "method", "nodes",   "witness"};
  return cols;
}

const std::vector<std::string>& triples_columns() {
  static const std::vector<std::string> cols = {"n", "kind", "count", "ceiling",
                                                "within_ceiling"};
  return cols;
}

const std::vector<std::string>& hit_columns() {
  static const std::vector<std::string> cols = {"n", "kind", "h", "x", "tags"};
  return cols;
}

const std::vector<std::string>& limits_columns() {
  static const std::vector<std::string> cols = {"n",           "group",       "lower", "upper",
                                                "lower_ratio", "upper_ratio", "lower_sound"};
  return cols;
}

namespace {

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      quoted += '"';
      return quoted;
    }
    return s;
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(10);
    os << v.get<double>();
    return os.str();
  }
  return v.dump();
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const std::vector<json>& rows) {
  os << "# " << kSchemaVersion << "\n";
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) os << ',';
    os << columns[i];
  }
  os << '\n';
  for (const json& row : rows) {
    for (size_t i = 0; i < columns.size(); ++i) {
      if (i) os << ',';
      auto it = row.find(columns[i]);
      os << (it != row.end() ? csv_cell(*it) : "");
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<json>& rows) {
  json arr = json::array();
  for (const json& r : rows) arr.push_back(r);
  os << arr.dump(2) << '\n';
}

}  // namespace nct
