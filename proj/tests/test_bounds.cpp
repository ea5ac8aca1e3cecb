#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcbound/catalog.hpp"

using namespace tcbound;

namespace {
const RationalCtx Q{};
const FpCtx F2{2};
const std::vector<FieldSpec> kFields = {FieldSpec::rationals(),
                                        FieldSpec::prime(2)};

SimplicialMap identity_map(const SimplicialComplex& x) {
  std::map<std::string, std::string> vm;
  for (const auto& v : x.vertices) vm[v] = v;
  return validate_map(vm, x, x);
}
}  // namespace

TEST_CASE("nil_index: zero ideal and zcl examples") {
  auto hp = cup_ring(detail::point_complex(), Q);
  CHECK(zcl(hp).value == 1);
  CHECK(cup_length(hp).value == 1);

  auto hc = cup_ring(detail::circle_complex(), Q);
  auto z = zcl(hc);
  CHECK(z.value == 2);
  CHECK(z.witness.size() == 1);

  auto hs = cup_ring(detail::sphere_complex(2), Q);
  CHECK(zcl(hs).value == 3);  // the square of the diagonal class survives

  auto ht = cup_ring(detail::torus_complex(), Q);
  auto zt = zcl(ht);
  CHECK(zt.value == 3);
  CHECK(zt.witness.size() == 2);

  auto hw = cup_ring(detail::wedge_complex(), Q);
  CHECK(zcl(hw).value == 3);
}

TEST_CASE("nil_index rejects degree-0 input") {
  auto h = cup_ring(detail::circle_complex(), Q);
  std::vector<Mat<Rational>> k;
  k.push_back(Mat<Rational>::Constant(1, 1, Rational(1)));
  CHECK_THROWS(nil_index(h.ring, k));
}

TEST_CASE("cup_length examples") {
  CHECK(cup_length(cup_ring(detail::torus_complex(), Q)).value == 3);
  CHECK(cup_length(cup_ring(detail::rp2_complex(), F2)).value == 3);
  CHECK(cup_length(cup_ring(detail::circle_complex(), Q)).value == 2);
}

TEST_CASE("nil_ker_one_f: identity collapse, constant, double cover") {
  for (const char* name :
       {"circle", "sphere2", "rp2", "torus", "wedge_two_circles"}) {
    auto x = builtin_space(name).complex;
    auto id = identity_map(x);
    for (auto f : kFields) {
      int nk = with_field(f, [&](auto ctx) {
                 auto h = cup_ring(x, ctx);
                 return nil_ker_one_f(id, ctx, h, h).value;
               });
      int z = with_field(f, [&](auto ctx) {
                return zcl(cup_ring(x, ctx)).value;
              });
      CHECK(nk == z);
    }
  }

  auto s2 = detail::sphere_complex(2);
  auto pt = detail::point_complex();
  std::map<std::string, std::string> vm;
  for (const auto& v : s2.vertices) vm[v] = "p";
  auto c = validate_map(vm, s2, pt);
  CHECK(nil_ker_one_f(c, Q, cup_ring(s2, Q), cup_ring(pt, Q)).value == 1);

  auto dc = double_cover(detail::circle_complex());
  CHECK(nil_ker_one_f(dc.proj, Q, cup_ring(dc.total, Q),
                      cup_ring(detail::circle_complex(), Q))
            .value == 2);
}

TEST_CASE("cat bounds") {
  SpaceSpec sc;
  sc.assertions.is_simply_connected = true;
  auto s2 = analyze_space(detail::sphere_complex(2), sc, kFields);
  CHECK(s2.cat.lo == 2);
  CHECK(s2.cat.hi == 2);

  auto t = analyze_space(detail::torus_complex(), SpaceSpec{}, kFields);
  CHECK(t.cat.lo == 3);
  CHECK(t.cat.hi == 3);

  auto p = analyze_space(detail::point_complex(), SpaceSpec{}, kFields);
  CHECK(p.cat.lo == 1);
  CHECK(p.cat.hi == 1);
  CHECK(p.tc.lo == 1);
  CHECK(p.tc.hi == 1);
}

TEST_CASE("tc space bounds") {
  SpaceSpec hg;
  hg.assertions.is_h_group = true;
  auto c = analyze_space(detail::circle_complex(), hg, kFields);
  CHECK(c.tc.lo == 2);
  CHECK(c.tc.hi == 2);

  SpaceSpec sc;
  sc.assertions.is_simply_connected = true;
  auto s2 = analyze_space(detail::sphere_complex(2), sc, kFields);
  CHECK(s2.tc.lo == 3);
  CHECK(s2.tc.hi == 3);

  auto w = analyze_space(detail::wedge_complex(), SpaceSpec{}, kFields);
  CHECK(w.tc.lo == 3);
  CHECK(w.tc.hi == 3);
}

TEST_CASE("connectivity promotion needs the simply-connected assertion") {
  // without it, homological connectivity is capped at 0
  auto plain = analyze_space(detail::sphere_complex(2), SpaceSpec{}, kFields);
  CHECK(plain.promoted_conn == 0);
  CHECK(plain.conn.connectivity == 1);
  // asserted connectivity below the homological value is rejected
  SpaceSpec bad;
  bad.assertions.asserted_connectivity = 0;
  CHECK_THROWS_AS(analyze_space(detail::sphere_complex(2), bad, kFields),
                  InconsistentAssertions);
}

TEST_CASE("sec bounds") {
  auto circle = detail::circle_complex();
  auto id = identity_map(circle);
  Assertions with_section;
  with_section.admits_section = true;
  auto s = sec_bounds(id, with_section);
  CHECK(s.lo == 1);
  CHECK(s.hi == 1);

  auto dc = double_cover(circle);
  auto s2 = sec_bounds(dc.proj, Assertions{});
  CHECK(s2.lo == 1);
  CHECK(s2.hi == 2);  // skeleton filtration over a 1-dimensional base
}

TEST_CASE("tc map bounds: constant to a point under a fibration assertion") {
  auto e = builtin_map("constant:sphere2");
  auto rep = analyze_map(e.map, e.spec, kFields);
  CHECK(rep.tc_map.lo == 1);
  CHECK(rep.tc_map.hi == 1);
  CHECK(rep.section_corollary);
}

TEST_CASE("tc map bounds: double cover of circles") {
  auto e = builtin_map("circle_double_cover");
  auto rep = analyze_map(e.map, e.spec, kFields);
  CHECK(rep.tc_map.lo == 2);
  CHECK(rep.tc_map.hi == 2);
  CHECK(rep.fields[0].nil_ker.value == 2);
  bool saw_r9 = false;
  for (const auto& ra : rep.tc_map.trace)
    if (ra.rule == "R9" && ra.value == 2) saw_r9 = true;
  CHECK(saw_r9);
}

TEST_CASE("tc map bounds: sphere double cover of the projective plane") {
  auto e = builtin_map("s2_to_rp2");
  auto rep = analyze_map(e.map, e.spec, kFields);
  CHECK(rep.tc_map.lo == 3);
  CHECK(rep.tc_map.hi == 4);
  bool saw_r11 = false;
  for (const auto& ra : rep.tc_map.trace)
    if (ra.rule == "R11" && ra.value == 4) saw_r11 = true;
  CHECK(saw_r11);
}

TEST_CASE("non-surjective maps are rejected") {
  auto circle = detail::circle_complex();
  auto path = build_complex({{"x", "y"}});
  auto incl = validate_map({{"x", "a"}, {"y", "b"}}, path, circle);
  CHECK_THROWS_AS(analyze_map(incl, MapSpec{}, kFields), NotSurjectiveError);
}

TEST_CASE("conflicting exact constraints raise an inconsistency") {
  auto e = builtin_map("circle_double_cover");
  e.spec.known_tcf = KnownValue{7, "deliberately wrong"};
  try {
    analyze_map(e.map, e.spec, kFields);
    FAIL("expected InconsistentAssertions");
  } catch (const InconsistentAssertions& err) {
    CHECK(err.rule_lo == "tcf.known");
    CHECK(!err.rule_hi.empty());
  }
}

TEST_CASE("product interval arithmetic") {
  BoundInterval one;
  one.apply({"x", "", "", RuleApplication::kExact, 1});
  BoundInterval two;
  two.apply({"x", "", "", RuleApplication::kExact, 2});
  BoundInterval wide;
  wide.apply({"x", "", "", RuleApplication::kLower, 2});
  wide.apply({"x", "", "", RuleApplication::kUpper, 3});

  auto a = product_map_bounds(one, one);
  CHECK(a.lo == 1);
  CHECK(a.hi == 1);
  auto b = product_map_bounds(two, two);
  CHECK(b.lo == 2);
  CHECK(b.hi == 3);
  auto c = product_map_bounds(wide, one);
  CHECK(c.lo == 2);
  CHECK(c.hi == 3);
}

TEST_CASE("every trace rule is implemented and intervals are ordered") {
  for (const auto& n : catalog_space_names()) {
    auto e = builtin_space(n);
    auto rep = analyze_space(e.complex, e.spec, kFields);
    for (const BoundInterval* b : {&rep.cat, &rep.tc}) {
      CHECK(b->lo <= b->hi);
      for (const auto& ra : b->trace)
        CHECK(implemented_rules().count(ra.rule) == 1);
    }
  }
}
