// End-to-end checks with per-case time budgets.  Prints one line per case and
// exits with the number of failures.
#include "tcbound/catalog.hpp"
#include "tcbound/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace tcbound;

namespace {

const std::vector<FieldSpec> kFields = {FieldSpec::rationals(),
                                        FieldSpec::prime(2)};
int failures = 0;

void run_case(const char* name, double budget_s, bool (*fn)()) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    err = e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  if (dt > budget_s) {
    ok = false;
    err = "time budget exceeded";
  }
  std::printf("%-4s %-52s %7.2fs%s%s\n", ok ? "PASS" : "FAIL", name, dt,
              err.empty() ? "" : "  ", err.c_str());
  if (!ok) ++failures;
}

int kernel_dim(const std::vector<Mat<Fp>>& k) {
  int n = 0;
  for (const auto& m : k) n += static_cast<int>(m.cols());
  return n;
}

bool has_rule(const BoundInterval& b, const std::string& rule, int value) {
  for (const auto& ra : b.trace)
    if (ra.rule == rule && ra.value == value) return true;
  return false;
}

bool sphere_cover_of_projective_plane() {
  auto e = builtin_map("s2_to_rp2");
  auto rep = analyze_map(e.map, e.spec, kFields);
  return rep.tc_map.lo == 3 && rep.tc_map.hi == 4 &&
         has_rule(rep.tc_map, "R11", 4);
}

bool wedge_and_its_universal_cover_restriction() {
  auto w = builtin_space("wedge_two_circles");
  SpaceSpec plain;
  plain.assertions = w.spec.assertions;
  auto wr = analyze_space(w.complex, plain, kFields);
  if (wr.tc.lo != 3 || wr.tc.hi != 3) return false;
  auto e = builtin_map("wedge_cover");
  e.spec.known_tcf.reset();
  auto rep = analyze_map(e.map, e.spec, kFields);
  bool saw_r8 = false;
  for (const auto& ra : rep.tc_map.trace)
    if (ra.rule == "R8") saw_r8 = true;
  return rep.tc_map.lo == 2 && rep.tc_map.hi == 2 && saw_r8;
}

bool genus2_invariants_from_rules_alone() {
  auto e = builtin_space("genus2_surface");
  SpaceSpec plain;
  plain.assertions = e.spec.assertions;
  auto rep = analyze_space(e.complex, plain, kFields);
  return rep.cat.lo == 3 && rep.cat.hi == 3 && rep.tc.lo == 5 &&
         rep.tc.hi == 5;
}

bool identity_and_constant_consistency() {
  for (const auto& n : catalog_space_names()) {
    auto s = builtin_space(n);
    auto srep = analyze_space(s.complex, s.spec, kFields);
    auto id = builtin_map("identity:" + n);
    auto idrep = analyze_map(id.map, id.spec, kFields);
    if (idrep.tc_map.lo != srep.tc.lo || idrep.tc_map.hi != srep.tc.hi)
      return false;
    auto c = builtin_map("constant:" + n);
    auto crep = analyze_map(c.map, c.spec, kFields);
    if (crep.tc_map.lo != 1 || crep.tc_map.hi != 1) return false;
  }
  return true;
}

bool circle_double_cover_with_oracle() {
  auto e = builtin_map("circle_double_cover");
  auto rep = analyze_map(e.map, e.spec, kFields);
  if (rep.fields[0].nil_ker.value != 2) return false;
  if (rep.tc_map.lo != 2 || rep.tc_map.hi != 2) return false;
  FpCtx f2{2};
  auto hx = cup_ring(e.map.domain, f2);
  auto hy = cup_ring(e.map.codomain, f2);
  auto oc = one_cross_f_hom(e.map, f2, hx, hy);
  auto kern = hom_kernel(oc.hom);
  return brute_nil_check(oc.tensor.ring, kern).value == 2;
}

bool oracle_agrees_on_all_small_kernels() {
  FpCtx f2{2};
  bool saw_rp2 = false;
  for (const auto& n : catalog_space_names()) {
    auto h = cup_ring(builtin_space(n).complex, f2);
    auto dh = diagonal_hom(h);
    auto kern = hom_kernel(dh.hom);
    if (kernel_dim(kern) > 16) continue;
    auto engine = nil_index(dh.tensor.ring, kern);
    if (engine.value != brute_nil_check(dh.tensor.ring, kern).value)
      return false;
    if (n == "rp2") {
      if (engine.value != 4) return false;
      saw_rp2 = true;
    }
  }
  return saw_rp2;
}

bool kunneth_across_the_catalog() {
  const long long kMaxSimplices = 10000;
  auto total = [](const SimplicialComplex& x) {
    long long n = 0;
    for (int d = 0; d <= x.dim; ++d) n += x.simplex_count(d);
    return n;
  };
  auto names = catalog_space_names();
  int checked = 0;
  for (const auto& a : names)
    for (const auto& b : names) {
      auto x = builtin_space(a).complex;
      auto y = builtin_space(b).complex;
      if (total(product_complex(x, y)) > kMaxSimplices) continue;
      for (auto f : kFields)
        if (!kunneth_check(x, y, f).equal) return false;
      ++checked;
    }
  return checked >= 20;
}

bool ring_axioms_and_functoriality() {
  for (const auto& n : catalog_space_names())
    for (auto f : kFields) {
      bool ok = with_field(f, [&](auto ctx) {
        return ring_axioms_check(cup_ring(builtin_space(n).complex, ctx).ring)
            .ok;
      });
      if (!ok) return false;
    }

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> nfac(2, 6), fsize(1, 4), vert(0, 7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<std::string>> facets;
    int nf = nfac(rng);
    for (int i = 0; i < nf; ++i) {
      std::set<std::string> s;
      int sz = fsize(rng);
      while (static_cast<int>(s.size()) < sz)
        s.insert("v" + std::to_string(vert(rng)));
      facets.push_back({s.begin(), s.end()});
    }
    auto x = build_complex(facets);
    for (auto f : kFields) {
      bool ok = with_field(f, [&](auto ctx) {
        return ring_axioms_check(cup_ring(x, ctx).ring).ok;
      });
      if (!ok) return false;
    }
  }

  // induced_ring_hom verifies multiplicativity internally; check it composes
  RationalCtx q{};
  auto circle = detail::circle_complex();
  auto g = double_cover(circle);
  auto f = double_cover(g.total);
  auto comp = compose(g.proj, f.proj);
  auto hx = cup_ring(f.total, q);
  auto hm = cup_ring(g.total, q);
  auto hy = cup_ring(circle, q);
  auto fs = induced_ring_hom(f.proj, q, hx, hm);
  auto gs = induced_ring_hom(g.proj, q, hm, hy);
  auto cs = induced_ring_hom(comp, q, hx, hy);
  for (int k = 0; k <= 1; ++k) {
    Mat<Rational> fg = mat_mul(fs.mats[k], gs.mats[k]);
    for (Eigen::Index i = 0; i < fg.rows(); ++i)
      for (Eigen::Index j = 0; j < fg.cols(); ++j)
        if (fg(i, j) != cs.mats[k](i, j)) return false;
  }
  return true;
}

bool interval_sanity_and_cover_tower() {
  for (const auto& n : catalog_space_names()) {
    auto e = builtin_space(n);
    auto rep = analyze_space(e.complex, e.spec, kFields);
    for (const BoundInterval* b : {&rep.cat, &rep.tc}) {
      if (b->lo > b->hi) return false;
      for (const auto& ra : b->trace)
        if (!implemented_rules().count(ra.rule)) return false;
    }
  }
  for (const auto& n : catalog_map_names()) {
    auto e = builtin_map(n);
    auto rep = analyze_map(e.map, e.spec, kFields);
    if (rep.tc_map.lo > rep.tc_map.hi) return false;
    for (const auto& ra : rep.tc_map.trace)
      if (!implemented_rules().count(ra.rule)) return false;
  }

  // tower over the circle: identity, double cover, composed 4-fold cover
  auto circle = builtin_space("circle");
  auto dc2 = double_cover(circle.complex);
  auto dc4 = double_cover(dc2.total);
  std::vector<SimplicialMap> tower;
  {
    std::map<std::string, std::string> vm;
    for (const auto& v : circle.complex.vertices) vm[v] = v;
    tower.push_back(validate_map(vm, circle.complex, circle.complex));
  }
  tower.push_back(dc2.proj);
  tower.push_back(compose(dc2.proj, dc4.proj));
  int sheets[] = {1, 2, 4};
  int prev_lo = kInf, prev_hi = kInf;
  for (int i = 0; i < 3; ++i) {
    MapSpec spec;
    spec.domain.assertions.is_h_group = true;  // every total space is a circle
    spec.codomain = circle.spec;
    spec.map_assertions.is_fibration = true;
    if (sheets[i] > 1) {
      spec.map_assertions.is_covering = true;
      spec.map_assertions.covering_sheets = sheets[i];
    }
    auto rep = analyze_map(tower[i], spec, kFields);
    if (rep.tc_map.lo > prev_lo || rep.tc_map.hi > prev_hi) return false;
    if (rep.tc_map.lo != 2 || rep.tc_map.hi != 2) return false;
    prev_lo = rep.tc_map.lo;
    prev_hi = rep.tc_map.hi;
  }
  return true;
}

}  // namespace

int main() {
  run_case("sphere cover of the projective plane: [3,4], R11", 5,
           sphere_cover_of_projective_plane);
  run_case("wedge TC [3,3]; cover restriction [2,2] via R8", 5,
           wedge_and_its_universal_cover_restriction);
  run_case("genus-2 surface: cat [3,3], TC [5,5] from rules", 120,
           genus2_invariants_from_rules_alone);
  run_case("identity maps match TC of the space; constants [1,1]", 30,
           identity_and_constant_consistency);
  run_case("circle double cover: nil 2, [2,2], oracle confirms", 2,
           circle_double_cover_with_oracle);
  run_case("brute-force nil oracle agrees on all small kernels", 60,
           oracle_agrees_on_all_small_kernels);
  run_case("Kunneth dimensions across catalog products", 60,
           kunneth_across_the_catalog);
  run_case("ring axioms: catalog, random complexes, functoriality", 120,
           ring_axioms_and_functoriality);
  run_case("interval sanity and covering-tower monotonicity", 10,
           interval_sanity_and_cover_tower);
  std::printf("%d failure(s)\n", failures);
  return failures;
}
