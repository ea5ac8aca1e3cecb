#include "tcbound/report.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace tcbound;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInconsistent = 4;
constexpr int kExitNotSurjective = 5;

std::vector<FieldSpec> resolve_fields(const std::vector<std::string>& flags) {
  if (flags.empty())
    return {FieldSpec::rationals(), FieldSpec::prime(2)};
  std::vector<FieldSpec> out;
  for (const auto& f : flags) {
    FieldSpec spec = parse_field(f);
    if (std::find(out.begin(), out.end(), spec) == out.end())
      out.push_back(spec);
  }
  return out;
}

bool is_space_token(const std::string& t) {
  return t == "contractible" || t == "simply-connected" || t == "h-group" ||
         t.rfind("connectivity:", 0) == 0;
}

int run_space(const std::string& input, const std::vector<std::string>& fields,
              const std::vector<std::string>& asserts,
              const std::string& format) {
  SpaceEntry e = load_space(input);
  for (const auto& t : asserts)
    e.spec.assertions = parse_assertion(e.spec.assertions, t);
  SpaceReport rep = analyze_space(e.complex, e.spec, resolve_fields(fields));
  if (format == "json")
    std::cout << space_report_json(e.name, e.complex, e.spec, rep).dump(2)
              << "\n";
  else
    std::cout << space_report_markdown(e.name, e.complex, e.spec, rep);
  return 0;
}

int run_map(const std::string& input, const std::vector<std::string>& fields,
            const std::vector<std::string>& asserts,
            const std::string& format) {
  const auto names = catalog_map_names();
  MapEntry e;
  bool is_builtin =
      std::find(names.begin(), names.end(), input) != names.end() ||
      input.rfind("identity:", 0) == 0 || input.rfind("constant:", 0) == 0;
  if (is_builtin)
    e = builtin_map(input);
  else
    e = parse_map_file(input);
  for (const auto& t : asserts) {
    // bare space-level facts: contractible/simply-connected describe the
    // domain ("X"), h-group the codomain ("Y"); prefixes override
    if (t.rfind("domain:", 0) == 0)
      e.spec.domain.assertions =
          parse_assertion(e.spec.domain.assertions, t.substr(7));
    else if (t.rfind("codomain:", 0) == 0)
      e.spec.codomain.assertions =
          parse_assertion(e.spec.codomain.assertions, t.substr(9));
    else if (t == "h-group")
      e.spec.codomain.assertions =
          parse_assertion(e.spec.codomain.assertions, t);
    else if (is_space_token(t))
      e.spec.domain.assertions = parse_assertion(e.spec.domain.assertions, t);
    else
      e.spec.map_assertions = parse_assertion(e.spec.map_assertions, t);
  }
  MapReport rep = analyze_map(e.map, e.spec, resolve_fields(fields));
  if (format == "json")
    std::cout << map_report_json(e.name, e.map, e.spec, rep).dump(2) << "\n";
  else
    std::cout << map_report_markdown(e.name, e.map, e.spec, rep);
  return 0;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + v[i];
  return out;
}

int run_catalog_list() {
  for (const auto& n : catalog_space_names()) {
    SpaceEntry e = builtin_space(n);
    std::cout << "space " << n << " | dim " << e.complex.dim << ", "
              << e.complex.vertices.size() << " vertices, chi "
              << e.complex.euler_characteristic();
    auto toks = assertion_tokens(e.spec.assertions);
    if (!toks.empty()) std::cout << " | assert " << join(toks);
    if (e.spec.known_cat)
      std::cout << " | cat = " << e.spec.known_cat->value << " ("
                << e.spec.known_cat->citation << ")";
    if (e.spec.known_tc)
      std::cout << " | TC = " << e.spec.known_tc->value << " ("
                << e.spec.known_tc->citation << ")";
    std::cout << "\n";
  }
  for (const auto& n : catalog_map_names()) {
    MapEntry e = builtin_map(n);
    std::cout << "map " << n << " | " << e.map.domain.vertices.size() << " -> "
              << e.map.codomain.vertices.size() << " vertices";
    auto toks = assertion_tokens(e.spec.map_assertions);
    if (!toks.empty()) std::cout << " | assert " << join(toks);
    if (e.spec.known_tcf)
      std::cout << " | TC(f) = " << e.spec.known_tcf->value << " ("
                << e.spec.known_tcf->citation << ")";
    std::cout << "\n";
  }
  return 0;
}

int run_catalog_show(const std::string& name) {
  const auto spaces = catalog_space_names();
  if (std::find(spaces.begin(), spaces.end(), name) != spaces.end()) {
    SpaceEntry e = builtin_space(name);
    std::cout << "space " << name << ": " << e.description << "\n";
    std::cout << "dim " << e.complex.dim << ", chi "
              << e.complex.euler_characteristic() << "\n";
    std::cout << "facets:\n";
    for (const auto& f : e.complex.facets) {
      std::cout << " ";
      for (const auto& v : e.complex.simplex_names(f)) std::cout << " " << v;
      std::cout << "\n";
    }
    return 0;
  }
  MapEntry e = builtin_map(name);  // throws on unknown
  std::cout << "map " << name << ": " << e.description << "\n";
  std::cout << "vertex map:\n";
  for (std::size_t i = 0; i < e.map.domain.vertices.size(); ++i)
    std::cout << "  " << e.map.domain.vertices[i] << " -> "
              << e.map.codomain.vertices[e.map.vertex_map[i]] << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified bounds for the topological complexity of "
               "simplicial maps"};
  app.require_subcommand(1);

  std::string input, builtin, format = "markdown", show_name;
  std::vector<std::string> fields, asserts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "path to an input file");
    cmd->add_option("--builtin", builtin, "catalog entry name");
    cmd->add_option("--field", fields,
                    "coefficient field, q or f<p> (repeatable; default q,f2)");
    cmd->add_option("--assert", asserts,
                    "homotopy-level assertion: contractible | "
                    "simply-connected | h-group | connectivity:<n> | "
                    "fibration | section | homotopy-section | "
                    "categorical-fibre | covering:<k> | universal-cover; "
                    "prefix with domain:/codomain: to target a side of a map");
    cmd->add_option("--format", format, "markdown or json")
        ->check(CLI::IsMember({"markdown", "json"}));
  };

  CLI::App* space = app.add_subcommand("space", "analyze a complex");
  add_common(space);
  CLI::App* map = app.add_subcommand("map", "analyze a simplicial map");
  add_common(map);
  CLI::App* catalog = app.add_subcommand("catalog", "built-in entries");
  CLI::App* list = catalog->add_subcommand("list", "list all entries");
  CLI::App* show = catalog->add_subcommand("show", "show one entry");
  show->add_option("name", show_name, "entry name")->required();
  catalog->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    std::string arg = !builtin.empty() ? builtin : input;
    if (space->parsed()) {
      if (arg.empty()) throw ParseError("space: missing input or --builtin");
      return run_space(arg, fields, asserts, format);
    }
    if (map->parsed()) {
      if (arg.empty()) throw ParseError("map: missing input or --builtin");
      return run_map(arg, fields, asserts, format);
    }
    if (list->parsed()) return run_catalog_list();
    if (show->parsed()) return run_catalog_show(show_name);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotSurjectiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotSurjective;
  } catch (const InconsistentAssertions& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
