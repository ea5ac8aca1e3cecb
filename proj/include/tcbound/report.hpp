#ifndef TCBOUND_REPORT_HPP
#define TCBOUND_REPORT_HPP

#include "tcbound/catalog.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace tcbound {

using Json = nlohmann::ordered_json;

inline std::vector<std::string> assertion_tokens(const Assertions& a) {
  std::vector<std::string> out;
  if (a.is_contractible) out.push_back("contractible");
  if (a.is_simply_connected && !a.is_contractible)
    out.push_back("simply-connected");
  if (a.is_h_group && !a.is_contractible) out.push_back("h-group");
  if (a.asserted_connectivity)
    out.push_back("connectivity:" + std::to_string(*a.asserted_connectivity));
  if (a.is_fibration) out.push_back("fibration");
  if (a.admits_section) out.push_back("section");
  if (a.admits_homotopy_section) out.push_back("homotopy-section");
  if (a.has_categorical_fibre) out.push_back("categorical-fibre");
  if (a.is_universal_cover)
    out.push_back("universal-cover");
  else if (a.is_covering)
    out.push_back(a.covering_sheets
                      ? "covering:" + std::to_string(*a.covering_sheets)
                      : "covering");
  return out;
}

inline Json interval_json(const BoundInterval& b) {
  Json j;
  j["lo"] = b.lo;
  if (b.hi == kInf)
    j["hi"] = "inf";
  else
    j["hi"] = b.hi;
  j["trace"] = Json::array();
  for (const auto& ra : b.trace) {
    Json t;
    t["rule"] = ra.rule;
    t["kind"] = ra.kind == RuleApplication::kLower   ? "lower"
                : ra.kind == RuleApplication::kUpper ? "upper"
                                                     : "exact";
    t["value"] = bound_str(ra.value);
    t["citation"] = ra.citation;
    if (!ra.inputs.empty()) t["inputs"] = ra.inputs;
    j["trace"].push_back(t);
  }
  return j;
}

inline Json nil_json(const NilIndex& n) {
  Json j;
  j["value"] = n.value;
  j["witness"] = n.witness;  // kernel-basis indices of a longest nonzero product
  return j;
}

inline Json complex_json(const SimplicialComplex& x) {
  Json j;
  j["vertices"] = x.vertices;
  Json facets = Json::array();
  for (const auto& f : x.facets) facets.push_back(x.simplex_names(f));
  j["facets"] = facets;
  j["dim"] = x.dim;
  j["euler_characteristic"] = x.euler_characteristic();
  return j;
}

inline Json space_body_json(const SimplicialComplex& x, const SpaceSpec& spec,
                            const SpaceReport& rep) {
  Json j;
  j["complex"] = complex_json(x);
  j["assertions"] = assertion_tokens(spec.assertions);
  Json conn;
  conn["homological"] = rep.conn.connectivity;
  conn["promoted"] = rep.promoted_conn;
  conn["betti"] = rep.conn.betti;
  Json tor = Json::array();
  for (std::size_t d = 0; d < rep.conn.torsion.size(); ++d)
    for (const auto& t : rep.conn.torsion[d])
      tor.push_back(Json{{"degree", d}, {"order", t.str()}});
  conn["torsion"] = tor;
  j["connectivity"] = conn;
  Json fields = Json::array();
  for (const auto& fr : rep.fields) {
    Json f;
    f["field"] = fr.field.name();
    f["dims"] = fr.dims;
    f["cup_length"] = nil_json(fr.cup_len);
    f["zcl"] = nil_json(fr.zero_div);
    fields.push_back(f);
  }
  j["fields"] = fields;
  j["cat"] = interval_json(rep.cat);
  j["tc"] = interval_json(rep.tc);
  return j;
}

inline Json space_report_json(const std::string& name,
                              const SimplicialComplex& x,
                              const SpaceSpec& spec, const SpaceReport& rep) {
  Json j;
  j["schema"] = "tcbound-report/1";
  j["kind"] = "space";
  j["name"] = name;
  Json body = space_body_json(x, spec, rep);
  for (auto& [key, val] : body.items()) j[key] = val;
  return j;
}

inline Json map_report_json(const std::string& name, const SimplicialMap& f,
                            const MapSpec& spec, const MapReport& rep) {
  Json j;
  j["schema"] = "tcbound-report/1";
  j["kind"] = "map";
  j["name"] = name;
  Json vm;
  for (std::size_t i = 0; i < f.domain.vertices.size(); ++i)
    vm[f.domain.vertices[i]] = f.codomain.vertices[f.vertex_map[i]];
  j["vertex_map"] = vm;
  j["assertions"] = assertion_tokens(spec.map_assertions);
  j["domain"] = space_body_json(f.domain, spec.domain, rep.domain);
  j["codomain"] = space_body_json(f.codomain, spec.codomain, rep.codomain);
  j["sec"] = interval_json(rep.sec);
  Json fields = Json::array();
  for (const auto& mfr : rep.fields) {
    Json mf;
    mf["field"] = mfr.field.name();
    mf["nil_ker"] = nil_json(mfr.nil_ker);
    mf["fstar_injective"] = mfr.fstar_injective;
    fields.push_back(mf);
  }
  j["fields"] = fields;
  j["tc_map"] = interval_json(rep.tc_map);
  Json notes = Json::array();
  if (rep.section_corollary) notes.push_back("f admits a continuous section");
  j["notes"] = notes;
  return j;
}

// ---- markdown rendering ----

inline std::string interval_markdown(const std::string& title,
                                     const BoundInterval& b) {
  std::ostringstream os;
  os << "### " << title << ": " << b.str() << "\n\n";
  os << "| rule | kind | value | citation |\n|---|---|---|---|\n";
  for (const auto& ra : b.trace)
    os << "| " << ra.rule << " | "
       << (ra.kind == RuleApplication::kLower   ? "lower"
           : ra.kind == RuleApplication::kUpper ? "upper"
                                                : "exact")
       << " | " << bound_str(ra.value) << " | " << ra.citation << " |\n";
  os << "\n";
  return os.str();
}

inline std::string space_report_markdown(const std::string& name,
                                         const SimplicialComplex& x,
                                         const SpaceSpec& spec,
                                         const SpaceReport& rep) {
  std::ostringstream os;
  os << "# Space report: " << name << "\n\n";
  os << "- dim " << x.dim << ", " << x.vertices.size() << " vertices, chi = "
     << x.euler_characteristic() << "\n";
  os << "- connectivity: homological " << rep.conn.connectivity
     << ", promoted " << rep.promoted_conn << "\n";
  auto toks = assertion_tokens(spec.assertions);
  if (!toks.empty()) {
    os << "- assertions:";
    for (const auto& t : toks) os << " " << t;
    os << "\n";
  }
  os << "\n| field | dims | cup-length | zcl |\n|---|---|---|---|\n";
  for (const auto& fr : rep.fields) {
    os << "| " << fr.field.name() << " | ";
    for (std::size_t i = 0; i < fr.dims.size(); ++i)
      os << (i ? " " : "") << fr.dims[i];
    os << " | " << fr.cup_len.value << " | " << fr.zero_div.value << " |\n";
  }
  os << "\n" << interval_markdown("cat", rep.cat)
     << interval_markdown("TC", rep.tc);
  return os.str();
}

inline std::string map_report_markdown(const std::string& name,
                                       const SimplicialMap& f,
                                       const MapSpec& spec,
                                       const MapReport& rep) {
  std::ostringstream os;
  os << "# Map report: " << name << "\n\n";
  auto toks = assertion_tokens(spec.map_assertions);
  if (!toks.empty()) {
    os << "- assertions:";
    for (const auto& t : toks) os << " " << t;
    os << "\n";
  }
  os << "- domain: dim " << f.domain.dim << ", " << f.domain.vertices.size()
     << " vertices; cat " << rep.domain.cat.str() << ", TC "
     << rep.domain.tc.str() << "\n";
  os << "- codomain: dim " << f.codomain.dim << ", "
     << f.codomain.vertices.size() << " vertices; cat "
     << rep.codomain.cat.str() << ", TC " << rep.codomain.tc.str() << "\n\n";
  os << "| field | nil Ker(1,f)* | f* injective |\n|---|---|---|\n";
  for (const auto& mfr : rep.fields)
    os << "| " << mfr.field.name() << " | " << mfr.nil_ker.value << " | "
       << (mfr.fstar_injective ? "yes" : "no") << " |\n";
  os << "\n" << interval_markdown("sec", rep.sec)
     << interval_markdown("TC(f)", rep.tc_map);
  if (rep.section_corollary)
    os << "Since TC(f) = 1, f admits a continuous section.\n";
  return os.str();
}

// ---- input parsing ----

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw ParseError("invalid file '" + path + "': " + e.what());
  }
}

/// Complex file: { "vertices": [string] (optional), "facets": [[string]] }.
/// Listed vertices missing from every facet become isolated 0-simplices.
inline SimplicialComplex parse_complex(const Json& j) {
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
    throw ParseError("complex file needs a 'facets' array");
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw ParseError("each facet must be an array");
    std::vector<std::string> facet;
    for (const auto& v : f) {
      if (!v.is_string()) throw ParseError("vertices must be strings");
      facet.push_back(v.get<std::string>());
    }
    facets.push_back(facet);
  }
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw ParseError("'vertices' must be an array");
    for (const auto& v : j["vertices"]) {
      if (!v.is_string()) throw ParseError("vertices must be strings");
      facets.push_back({v.get<std::string>()});
    }
  }
  return build_complex(facets);
}

/// Space argument: catalog name or path to a complex file.
inline SpaceEntry load_space(const std::string& arg) {
  const auto names = catalog_space_names();
  if (std::find(names.begin(), names.end(), arg) != names.end())
    return builtin_space(arg);
  SpaceEntry e;
  e.name = arg;
  e.complex = parse_complex(load_json_file(arg));
  return e;
}

/// Map file: { "domain": <path|builtin>, "codomain": <path|builtin>,
///             "vertex_map": {string: string}, "assertions": [string] }.
inline MapEntry parse_map_file(const std::string& path) {
  Json j = load_json_file(path);
  for (const char* key : {"domain", "codomain", "vertex_map"})
    if (!j.contains(key))
      throw ParseError("map file needs '" + std::string(key) + "'");
  MapEntry e;
  e.name = path;
  SpaceEntry dom = load_space(j["domain"].get<std::string>());
  SpaceEntry cod = load_space(j["codomain"].get<std::string>());
  std::map<std::string, std::string> vm;
  for (const auto& [k, v] : j["vertex_map"].items())
    vm[k] = v.get<std::string>();
  e.map = validate_map(vm, dom.complex, cod.complex);
  e.spec.domain = dom.spec;
  e.spec.codomain = cod.spec;
  if (j.contains("assertions"))
    for (const auto& t : j["assertions"])
      e.spec.map_assertions =
          parse_assertion(e.spec.map_assertions, t.get<std::string>());
  return e;
}

inline FieldSpec parse_field(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(c));
  if (s == "q") return FieldSpec::rationals();
  if (s.size() > 1 && s[0] == 'f') {
    try {
      return FieldSpec::prime(std::stoll(s.substr(1)));
    } catch (const std::invalid_argument&) {
      throw ParseError("unknown field '" + s + "'");
    }
  }
  throw ParseError("unknown field '" + s + "' (use q or f<p>)");
}

}  // namespace tcbound

#endif
