#ifndef TCBOUND_CATALOG_HPP
#define TCBOUND_CATALOG_HPP

#include "tcbound/bounds.hpp"

#include <map>
#include <string>
#include <vector>

namespace tcbound {

struct SpaceEntry {
  std::string name;
  std::string description;
  SimplicialComplex complex;
  SpaceSpec spec;
};

struct MapEntry {
  std::string name;
  std::string description;
  SimplicialMap map;
  MapSpec spec;
};

namespace detail {

inline SimplicialComplex circle_complex() {
  return build_complex({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline SimplicialComplex sphere_complex(int n) {
  // boundary of the (n+1)-simplex: all (n+1)-subsets of n+2 vertices
  std::vector<std::string> verts;
  for (int i = 0; i < n + 2; ++i) verts.push_back("s" + std::to_string(i));
  std::vector<std::vector<std::string>> facets;
  for (int omit = 0; omit < n + 2; ++omit) {
    std::vector<std::string> f;
    for (int i = 0; i < n + 2; ++i)
      if (i != omit) f.push_back(verts[i]);
    facets.push_back(f);
  }
  return build_complex(facets);
}

inline SimplicialComplex rp2_complex() {
  // 6-vertex 2-neighborly triangulation of the projective plane
  std::vector<std::vector<int>> t = {{1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                                     {1, 4, 6}, {1, 5, 6}, {2, 3, 6},
                                     {2, 4, 5}, {2, 5, 6}, {3, 4, 5},
                                     {3, 4, 6}};
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : t)
    facets.push_back({"r" + std::to_string(f[0]), "r" + std::to_string(f[1]),
                      "r" + std::to_string(f[2])});
  return build_complex(facets);
}

inline std::vector<std::vector<int>> torus_triangles() {
  std::vector<std::vector<int>> t;
  for (int i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return t;
}

inline SimplicialComplex torus_complex() {
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : torus_triangles())
    facets.push_back({"t" + std::to_string(f[0]), "t" + std::to_string(f[1]),
                      "t" + std::to_string(f[2])});
  return build_complex(facets);
}

inline SimplicialComplex klein_bottle_complex() {
  // 4x4 grid on a square, vertical sides wrapped plainly, horizontal seam
  // glued with a flip
  const int n = 4, m = 4;
  auto name = [&](int i, int j) {
    j = ((j % m) + m) % m;
    if (i == n) {
      i = 0;
      j = (m - j) % m;
    }
    return "k" + std::to_string(i) + "_" + std::to_string(j);
  };
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      facets.push_back({name(i, j), name(i + 1, j), name(i + 1, j + 1)});
      facets.push_back({name(i, j), name(i, j + 1), name(i + 1, j + 1)});
    }
  return build_complex(facets);
}

inline SimplicialComplex wedge_complex() {
  return build_complex({{"a", "b"}, {"b", "w"}, {"a", "w"},
                        {"c", "w"}, {"c", "d"}, {"d", "w"}});
}

inline SimplicialComplex genus2_complex() {
  // connected sum of two 7-vertex tori: drop the triangle {0,1,3} from each
  // and glue the resulting boundary triangles, sharing vertices 0, 1, 3
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : torus_triangles()) {
    if (f == std::vector<int>{0, 1, 3}) continue;
    std::vector<std::string> a, b;
    for (int v : f) {
      a.push_back("a" + std::to_string(v));
      b.push_back((v == 0 || v == 1 || v == 3 ? "a" : "b") +
                  std::to_string(v));
    }
    facets.push_back(a);
    facets.push_back(b);
  }
  return build_complex(facets);
}

inline SimplicialComplex point_complex() { return build_complex({{"p"}}); }

}  // namespace detail

/// Double cover classified by a non-trivial mod-2 1-cocycle: vertices are
/// (v, sheet); a facet {v0 < ... < vk} lifts to {(vi, s + z({v0,vi}))}.
struct DoubleCover {
  SimplicialComplex total;
  SimplicialMap proj;
};

inline DoubleCover double_cover(const SimplicialComplex& y) {
  if (y.dim < 1) throw ComplexError("double_cover: no edges to twist");
  FpCtx ctx{2};
  auto deltas = coboundary_matrices(y, ctx);
  auto z1 = rank_kernel_image(deltas[1]).kernel;  // cocycles in C^1
  EchelonSpan<Fp> coboundaries;
  for (Eigen::Index c = 0; c < deltas[0].cols(); ++c)
    coboundaries.add(deltas[0].col(c));
  Vec<Fp> z;
  for (Eigen::Index c = 0; c < z1.cols(); ++c)
    if (coboundaries.add(z1.col(c))) {
      z = z1.col(c);
      break;
    }
  if (z.size() == 0)
    throw ComplexError("double_cover: no non-trivial mod-2 cocycle");

  auto zval = [&](int u, int v) -> int {
    if (u == v) return 0;
    Simplex e = {std::min(u, v), std::max(u, v)};
    return is_zero(z(y.simplex_index(e))) ? 0 : 1;
  };
  auto lift_name = [&](int v, int s) {
    return y.vertices[v] + "." + std::to_string(s);
  };
  std::vector<std::vector<std::string>> facets;
  std::map<std::string, std::string> down;
  for (const auto& f : y.facets)
    for (int s = 0; s < 2; ++s) {
      std::vector<std::string> lift;
      for (int v : f) {
        int sheet = (s + zval(f[0], v)) % 2;
        lift.push_back(lift_name(v, sheet));
        down[lift_name(v, sheet)] = y.vertices[v];
      }
      facets.push_back(lift);
    }
  DoubleCover out;
  out.total = build_complex(facets);
  if (!out.total.is_connected())
    throw ComplexError("double_cover: cover is disconnected");
  out.proj = validate_map(down, out.total, y);
  return out;
}

inline std::vector<std::string> catalog_space_names() {
  return {"point",        "circle",  "sphere2", "sphere3",
          "sphere4",      "rp2",     "torus",   "klein_bottle",
          "wedge_two_circles", "genus2_surface"};
}

inline SpaceEntry builtin_space(const std::string& name) {
  SpaceEntry e;
  e.name = name;
  if (name == "point") {
    e.complex = detail::point_complex();
    e.description = "a single vertex";
    e.spec.assertions.is_contractible = true;
  } else if (name == "circle") {
    e.complex = detail::circle_complex();
    e.description = "hollow triangle";
    e.spec.assertions.is_h_group = true;
    e.spec.known_tc =
        KnownValue{2, "TC of the circle (odd-dimensional sphere) equals 2"};
  } else if (name == "sphere2" || name == "sphere3" || name == "sphere4") {
    int n = name[6] - '0';
    e.complex = detail::sphere_complex(n);
    e.description = "boundary of the " + std::to_string(n + 1) + "-simplex";
    e.spec.assertions.is_simply_connected = true;
    e.spec.assertions.asserted_connectivity = n - 1;
    e.spec.known_tc = KnownValue{
        n % 2 == 1 ? 2 : 3,
        std::string("TC of a sphere equals 2 in odd dimensions and 3 in "
                    "even dimensions")};
  } else if (name == "rp2") {
    e.complex = detail::rp2_complex();
    e.description = "6-vertex projective plane";
  } else if (name == "torus") {
    e.complex = detail::torus_complex();
    e.description = "7-vertex torus";
    e.spec.assertions.is_h_group = true;
  } else if (name == "klein_bottle") {
    e.complex = detail::klein_bottle_complex();
    e.description = "16-vertex Klein bottle (twisted 4x4 grid)";
  } else if (name == "wedge_two_circles") {
    e.complex = detail::wedge_complex();
    e.description = "two hollow triangles joined at a vertex";
    e.spec.known_tc = KnownValue{3, "TC of a wedge of two circles equals 3"};
  } else if (name == "genus2_surface") {
    e.complex = detail::genus2_complex();
    e.description = "connected sum of two 7-vertex tori (11 vertices)";
    e.spec.known_cat =
        KnownValue{3, "LS-category of a closed genus-2 surface equals 3"};
    e.spec.known_tc = KnownValue{5, "TC of a closed genus-2 surface equals 5"};
  } else {
    throw std::invalid_argument("unknown catalog space '" + name + "'");
  }
  e.spec.assertions.normalize();
  return e;
}

inline std::vector<std::string> catalog_map_names() {
  std::vector<std::string> names = {"circle_double_cover", "s2_to_rp2",
                                    "torus_projection", "wedge_cover"};
  for (const auto& s : catalog_space_names()) names.push_back("identity:" + s);
  for (const auto& s : catalog_space_names()) names.push_back("constant:" + s);
  return names;
}

inline MapEntry builtin_map(const std::string& name) {
  MapEntry e;
  e.name = name;
  if (name.rfind("identity:", 0) == 0) {
    SpaceEntry s = builtin_space(name.substr(9));
    std::map<std::string, std::string> vm;
    for (const auto& v : s.complex.vertices) vm[v] = v;
    e.map = validate_map(vm, s.complex, s.complex);
    e.description = "identity map on " + s.name;
    e.spec.domain = s.spec;
    e.spec.codomain = s.spec;
    e.spec.map_assertions.is_fibration = true;
    e.spec.map_assertions.admits_section = true;
  } else if (name.rfind("constant:", 0) == 0) {
    SpaceEntry s = builtin_space(name.substr(9));
    SpaceEntry pt = builtin_space("point");
    std::map<std::string, std::string> vm;
    for (const auto& v : s.complex.vertices) vm[v] = "p";
    e.map = validate_map(vm, s.complex, pt.complex);
    e.description = "constant map " + s.name + " -> point";
    e.spec.domain = s.spec;
    e.spec.codomain = pt.spec;
    e.spec.map_assertions.is_fibration = true;
    e.spec.map_assertions.admits_section = true;
  } else if (name == "circle_double_cover") {
    SpaceEntry circle = builtin_space("circle");
    DoubleCover dc = double_cover(circle.complex);
    e.map = dc.proj;
    e.description = "hexagon winding twice around the triangle";
    e.spec.domain.assertions.is_h_group = true;  // the cover is again a circle
    e.spec.codomain = circle.spec;
    e.spec.map_assertions.is_fibration = true;
    e.spec.map_assertions.is_covering = true;
    e.spec.map_assertions.covering_sheets = 2;
  } else if (name == "s2_to_rp2") {
    SpaceEntry rp2 = builtin_space("rp2");
    DoubleCover dc = double_cover(rp2.complex);
    e.map = dc.proj;
    e.description =
        "icosahedral 2-sphere double-covering the 6-vertex projective plane";
    e.spec.domain.assertions.is_simply_connected = true;
    e.spec.codomain = rp2.spec;
    e.spec.map_assertions.is_universal_cover = true;
    e.spec.map_assertions.is_fibration = true;
    e.spec.map_assertions.covering_sheets = 2;
  } else if (name == "torus_projection") {
    SpaceEntry circle = builtin_space("circle");
    SimplicialComplex torus9 =
        product_complex(circle.complex, circle.complex);
    std::map<std::string, std::string> vm;
    for (const auto& v : torus9.vertices)
      vm[v] = v.substr(1, v.find('|') - 1);  // "(x|y)" -> "x"
    e.map = validate_map(vm, torus9, circle.complex);
    e.description = "9-vertex product torus projecting onto its first circle";
    e.spec.domain.assertions.is_h_group = true;
    e.spec.codomain = circle.spec;
    e.spec.map_assertions.is_fibration = true;
    e.spec.map_assertions.admits_section = true;
  } else if (name == "wedge_cover") {
    SpaceEntry wedge = builtin_space("wedge_two_circles");
    // Eulerian path w a b w c d w inside the universal cover of the wedge
    auto path = build_complex({{"p0", "p1"}, {"p1", "p2"}, {"p2", "p3"},
                               {"p3", "p4"}, {"p4", "p5"}, {"p5", "p6"}});
    std::map<std::string, std::string> vm = {
        {"p0", "w"}, {"p1", "a"}, {"p2", "b"}, {"p3", "w"},
        {"p4", "c"}, {"p5", "d"}, {"p6", "w"}};
    e.map = validate_map(vm, path, wedge.complex);
    e.description =
        "contractible stretch of the universal cover over the wedge";
    e.spec.domain.assertions.is_contractible = true;
    e.spec.codomain = wedge.spec;
    e.spec.map_assertions.is_fibration = true;
    e.spec.known_tcf = KnownValue{
        2, "TC of the universal covering of a wedge of two circles equals 2"};
  } else {
    throw std::invalid_argument("unknown catalog map '" + name + "'");
  }
  e.spec.map_assertions.normalize();
  e.spec.domain.assertions.normalize();
  e.spec.codomain.assertions.normalize();
  return e;
}

}  // namespace tcbound

#endif
