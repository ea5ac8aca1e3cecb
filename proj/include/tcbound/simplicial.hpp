#ifndef TCBOUND_SIMPLICIAL_HPP
#define TCBOUND_SIMPLICIAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcbound {

// A simplex is a strictly increasing list of vertex indices into the
// complex's vertex table. Vertices are strings ordered lexicographically,
// which fixes all cochain-level sign conventions.
using Simplex = std::vector<int>;

struct ComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SimplicialComplex {
 public:
  std::vector<std::string> vertices;              // sorted, unique
  std::vector<std::vector<Simplex>> simplices;    // per dimension, sorted
  std::vector<Simplex> facets;                    // maximal simplices, sorted
  int dim = -1;

  int vertex_index(const std::string& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v)
      throw ComplexError("unknown vertex '" + v + "'");
    return static_cast<int>(it - vertices.begin());
  }

  bool has_simplex(const Simplex& s) const {
    int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > dim) return false;
    const auto& list = simplices[d];
    return std::binary_search(list.begin(), list.end(), s);
  }

  int simplex_index(const Simplex& s) const {
    int d = static_cast<int>(s.size()) - 1;
    const auto& list = simplices[d];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) throw ComplexError("simplex not found");
    return static_cast<int>(it - list.begin());
  }

  std::size_t simplex_count(int d) const {
    return (d >= 0 && d <= dim) ? simplices[d].size() : 0;
  }

  std::size_t total_simplices() const {
    std::size_t n = 0;
    for (const auto& level : simplices) n += level.size();
    return n;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dim; ++d)
      chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(simplices[d].size());
    return chi;
  }

  std::vector<std::string> simplex_names(const Simplex& s) const {
    std::vector<std::string> out;
    for (int v : s) out.push_back(vertices[v]);
    return out;
  }

  int component_count() const {
    if (vertices.empty()) return 0;
    std::vector<int> parent(vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    if (dim >= 1)
      for (const auto& e : simplices[1]) parent[find(e[0])] = find(e[1]);
    std::set<int> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
  }

  bool is_connected() const { return component_count() == 1; }

  /// True when the complex is a full simplex on its vertex set (the one case
  /// where contractibility is decided rather than asserted).
  bool is_full_simplex() const {
    return facets.size() == 1 && facets[0].size() == vertices.size();
  }
};

/// Builds the downward closure of the given facets. Vertex order is
/// lexicographic on the identifiers; input sets that turn out non-maximal are
/// pruned from the facet list.
inline SimplicialComplex build_complex(
    const std::vector<std::vector<std::string>>& facets) {
  SimplicialComplex k;
  std::set<std::string> vset;
  for (const auto& f : facets) {
    if (f.empty()) throw ComplexError("empty facet");
    std::set<std::string> s(f.begin(), f.end());
    if (s.size() != f.size())
      throw ComplexError("duplicate vertex inside a facet");
    vset.insert(s.begin(), s.end());
  }
  k.vertices.assign(vset.begin(), vset.end());

  std::set<Simplex> closure;
  std::vector<Simplex> facet_ix;
  for (const auto& f : facets) {
    Simplex s;
    for (const auto& v : f) s.push_back(k.vertex_index(v));
    std::sort(s.begin(), s.end());
    facet_ix.push_back(s);
    // all nonempty subsets
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      Simplex sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) sub.push_back(s[i]);
      closure.insert(sub);
    }
  }

  for (const auto& s : closure)
    k.dim = std::max(k.dim, static_cast<int>(s.size()) - 1);
  k.simplices.assign(k.dim + 1, {});
  for (const auto& s : closure)
    k.simplices[s.size() - 1].push_back(s);

  // maximal simplices
  std::sort(facet_ix.begin(), facet_ix.end());
  facet_ix.erase(std::unique(facet_ix.begin(), facet_ix.end()), facet_ix.end());
  for (const auto& s : facet_ix) {
    bool maximal = true;
    for (const auto& t : facet_ix) {
      if (t.size() <= s.size()) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) k.facets.push_back(s);
  }
  return k;
}

inline SimplicialComplex skeleton(const SimplicialComplex& x, int k) {
  if (k < 0) throw ComplexError("skeleton: negative dimension");
  if (k >= x.dim) return x;
  std::vector<std::vector<std::string>> facets;
  for (int d = 0; d <= k; ++d)
    for (const auto& s : x.simplices[d]) facets.push_back(x.simplex_names(s));
  return build_complex(facets);
}

/// Staircase triangulation of |X| x |Y|: vertices are pairs, maximal
/// simplices are the monotone chains from (x_0,y_0) to (x_p,y_q) over each
/// facet pair.
inline SimplicialComplex product_complex(const SimplicialComplex& x,
                                         const SimplicialComplex& y) {
  if (x.vertices.empty() || y.vertices.empty())
    throw ComplexError("product of an empty complex");
  auto pair_name = [&](int a, int b) {
    return "(" + x.vertices[a] + "|" + y.vertices[b] + ")";
  };
  std::vector<std::vector<std::string>> facets;
  for (const auto& sx : x.facets)
    for (const auto& sy : y.facets) {
      const int p = static_cast<int>(sx.size()) - 1;
      const int q = static_cast<int>(sy.size()) - 1;
      // enumerate lattice paths: permutations of p x-steps and q y-steps
      std::vector<std::string> chain;
      std::vector<int> dirs(p, 1);
      dirs.resize(p + q, 0);
      std::sort(dirs.begin(), dirs.end());
      do {
        chain.clear();
        int i = 0, j = 0;
        chain.push_back(pair_name(sx[0], sy[0]));
        for (int dstep : dirs) {
          if (dstep)
            ++i;
          else
            ++j;
          chain.push_back(pair_name(sx[i], sy[j]));
        }
        facets.push_back(chain);
      } while (std::next_permutation(dirs.begin(), dirs.end()));
    }
  return build_complex(facets);
}

struct MapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimplicialMap {
  SimplicialComplex domain;
  SimplicialComplex codomain;
  std::vector<int> vertex_map;  // domain vertex index -> codomain vertex index
  bool surjective_on_simplices = false;

  Simplex image_simplex(const Simplex& s) const {
    Simplex img;
    for (int v : s) img.push_back(vertex_map[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
  }
};

inline SimplicialMap validate_map(
    const std::map<std::string, std::string>& vertex_map,
    const SimplicialComplex& x, const SimplicialComplex& y) {
  SimplicialMap f;
  f.domain = x;
  f.codomain = y;
  f.vertex_map.resize(x.vertices.size());
  for (std::size_t i = 0; i < x.vertices.size(); ++i) {
    auto it = vertex_map.find(x.vertices[i]);
    if (it == vertex_map.end())
      throw MapError("vertex_map not total: missing '" + x.vertices[i] + "'");
    f.vertex_map[i] = y.vertex_index(it->second);
  }
  std::set<Simplex> hit;
  for (int d = 0; d <= x.dim; ++d)
    for (const auto& s : x.simplices[d]) {
      Simplex img = f.image_simplex(s);
      if (!y.has_simplex(img))
        throw MapError("not simplicial: image of a simplex is not a simplex");
      hit.insert(img);
    }
  f.surjective_on_simplices = (hit.size() == y.total_simplices());
  return f;
}

inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  // g after f
  std::map<std::string, std::string> vm;
  for (std::size_t i = 0; i < f.domain.vertices.size(); ++i) {
    int mid = f.vertex_map[i];
    vm[f.domain.vertices[i]] = g.codomain.vertices[g.vertex_map[mid]];
  }
  return validate_map(vm, f.domain, g.codomain);
}

/// User-declared homotopy-level facts the engine cannot decide from a
/// triangulation. Space facts live on the domain/codomain, map facts on the
/// map itself.
struct Assertions {
  // spaces
  bool is_contractible = false;
  bool is_simply_connected = false;
  bool is_h_group = false;
  std::optional<int> asserted_connectivity;
  // maps
  bool is_fibration = false;
  bool admits_section = false;
  bool admits_homotopy_section = false;
  bool has_categorical_fibre = false;
  bool is_covering = false;
  std::optional<int> covering_sheets;
  bool is_universal_cover = false;

  void normalize() {
    if (is_contractible) {
      is_simply_connected = true;
      is_h_group = true;  // trivially, up to homotopy
    }
    if (is_universal_cover) is_covering = true;
  }
};

inline Assertions parse_assertion(Assertions a, const std::string& tok) {
  if (tok == "contractible")
    a.is_contractible = true;
  else if (tok == "simply-connected")
    a.is_simply_connected = true;
  else if (tok == "h-group")
    a.is_h_group = true;
  else if (tok == "fibration")
    a.is_fibration = true;
  else if (tok == "section")
    a.admits_section = true;
  else if (tok == "homotopy-section")
    a.admits_homotopy_section = true;
  else if (tok == "categorical-fibre")
    a.has_categorical_fibre = true;
  else if (tok == "universal-cover")
    a.is_universal_cover = true;
  else if (tok.rfind("covering:", 0) == 0) {
    a.is_covering = true;
    a.covering_sheets = std::stoi(tok.substr(9));
  } else if (tok == "covering")
    a.is_covering = true;
  else if (tok.rfind("connectivity:", 0) == 0)
    a.asserted_connectivity = std::stoi(tok.substr(13));
  else
    throw std::invalid_argument("unknown assertion '" + tok + "'");
  a.normalize();
  return a;
}

}  // namespace tcbound

#endif
