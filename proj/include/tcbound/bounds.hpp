#ifndef TCBOUND_BOUNDS_HPP
#define TCBOUND_BOUNDS_HPP

#include "tcbound/cohomology.hpp"

#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace tcbound {

constexpr int kInf = std::numeric_limits<int>::max();

inline std::string bound_str(int v) {
  return v == kInf ? "inf" : std::to_string(v);
}

struct RuleApplication {
  enum Kind { kLower, kUpper, kExact };
  std::string rule;
  std::string citation;
  std::string inputs;
  Kind kind = kLower;
  int value = 1;
};

struct InconsistentAssertions : std::runtime_error {
  std::string rule_lo, rule_hi;
  InconsistentAssertions(const std::string& a, const std::string& b)
      : std::runtime_error("inconsistent assertions: rules " + a + " and " + b +
                           " produce an empty interval"),
        rule_lo(a),
        rule_hi(b) {}
};

struct NotSurjectiveError : std::runtime_error {
  NotSurjectiveError()
      : std::runtime_error(
            "map is not surjective on simplices; TC(f) is undefined") {}
};

/// Integer interval [lo, hi] plus the ledger of rules that produced it.
struct BoundInterval {
  int lo = 1;
  int hi = kInf;
  std::vector<RuleApplication> trace;
  std::string lo_rule = "R13";
  std::string hi_rule = "";

  /// Intersects with the rule's constraint; throws when the interval empties.
  /// Returns true when the interval actually tightened.
  bool apply(const RuleApplication& ra) {
    bool changed = false;
    if (ra.kind != RuleApplication::kUpper && ra.value > lo) {
      lo = ra.value;
      lo_rule = ra.rule;
      changed = true;
    }
    if (ra.kind != RuleApplication::kLower && ra.value < hi) {
      hi = ra.value;
      hi_rule = ra.rule;
      changed = true;
    }
    trace.push_back(ra);
    if (lo > hi) throw InconsistentAssertions(lo_rule, hi_rule);
    return changed;
  }

  bool is_exact() const { return lo == hi; }
  std::string str() const {
    return "[" + bound_str(lo) + ", " + bound_str(hi) + "]";
  }
};

/// All rule identifiers the engine can emit; traces are checked against this.
inline const std::set<std::string>& implemented_rules() {
  static const std::set<std::string> rules = {
      "cat.contractible", "cat.cup",      "cat.dim",   "cat.dim_conn",
      "cat.known",        "tc.contractible", "tc.cat", "tc.zcl",
      "tc.cat_product",   "tc.dim_conn", "tc.h_group", "tc.known",
      "sec.base",         "sec.section", "sec.skeleton",
      "R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10", "R11",
      "R12", "R13", "tcf.known"};
  return rules;
}

/// Nilpotency index of a graded ideal in the convention where nil is the
/// minimal n with every n-fold product zero; nil of the zero ideal is 1.
struct NilIndex {
  int value = 1;
  std::vector<int> witness;  // basis indices of a longest nonzero product
};

/// Iterates V_1 = K, V_{i+1} = span{ v . k }, terminating when products pass
/// the top degree. Basis products suffice by multilinearity (the field-2
/// oracle cross-checks this reasoning exhaustively).
template <class S>
NilIndex nil_index(const GradedRing<S>& r, const std::vector<Mat<S>>& k) {
  if (!k.empty() && k[0].cols() > 0)
    throw std::invalid_argument("nil_index: subspace contains degree-0 elements");

  struct Elem {
    GradedVec<S> v;
    std::vector<int> wit;
  };
  std::vector<Elem> kb;
  {
    int flat = 0;
    for (int d = 1; d < static_cast<int>(k.size()); ++d)
      for (Eigen::Index c = 0; c < k[d].cols(); ++c, ++flat) {
        GradedVec<S> v = gv_zero(r);
        v.comp[d] = k[d].col(c);
        kb.push_back({std::move(v), {flat}});
      }
  }

  std::vector<Elem> cur;
  {
    EchelonSpan<S> span;
    for (auto& e : kb)
      if (span.add(e.v.flatten())) cur.push_back(e);
  }
  if (cur.empty()) return NilIndex{1, {}};

  int n = 1;
  for (;;) {
    std::vector<Elem> next;
    EchelonSpan<S> span;
    for (const auto& e : cur)
      for (const auto& kelem : kb) {
        GradedVec<S> p = gv_mul(r, e.v, kelem.v);
        if (p.is_zero_vec()) continue;
        if (span.add(p.flatten())) {
          std::vector<int> wit = e.wit;
          wit.push_back(kelem.wit[0]);
          next.push_back({std::move(p), std::move(wit)});
        }
      }
    if (next.empty()) return NilIndex{n + 1, cur[0].wit};
    cur = std::move(next);
    ++n;
  }
}

/// nil of the ideal of positive-degree classes (the cup-length bound for cat).
template <class S>
NilIndex cup_length(const CohomologyData<S>& h) {
  const GradedRing<S>& r = h.ring;
  std::vector<Mat<S>> k;
  S zero = r.one - r.one;
  for (int d = 0; d <= r.top_degree(); ++d) {
    if (d == 0) {
      k.push_back(Mat<S>::Constant(r.dims[0], 0, zero));
      continue;
    }
    Mat<S> id = Mat<S>::Constant(r.dims[d], r.dims[d], zero);
    for (Eigen::Index i = 0; i < id.rows(); ++i) id(i, i) = r.one;
    k.push_back(std::move(id));
  }
  return nil_index(r, k);
}

/// Delta^*: H^*(X) (x) H^*(X) -> H^*(X), u (x) v -> u.v, built directly from
/// structure constants.
template <class S>
struct DiagonalHom {
  TensorRing<S> tensor;
  RingHom<S> hom;
};

template <class S>
DiagonalHom<S> diagonal_hom(const CohomologyData<S>& h) {
  DiagonalHom<S> out;
  const GradedRing<S>& r = h.ring;
  out.tensor = tensor_ring(r, r);
  out.hom.source = &out.tensor.ring;
  out.hom.target = &r;
  const GradedRing<S>& rt = out.tensor.ring;
  S zero = r.one - r.one;
  for (int d = 0; d <= rt.top_degree(); ++d) {
    const int rows = d <= r.top_degree() ? r.dims[d] : 0;
    Mat<S> m = Mat<S>::Constant(rows, rt.dims[d], zero);
    for (int c = 0; c < rt.dims[d]; ++c) {
      if (rows == 0) continue;
      const auto& e = out.tensor.elems[rt.offset[d] + c];
      const Vec<S>& p = r.prod[r.global_index(e.deg_a, e.ia)]
                              [r.global_index(e.deg_b, e.ib)];
      for (Eigen::Index t = 0; t < p.size(); ++t) m(t, c) += p(t);
    }
    out.hom.mats.push_back(std::move(m));
  }
  return out;
}

/// Zero-divisor cup-length: nil(Ker Delta^*) inside H^*(X) (x) H^*(X).
template <class S>
NilIndex zcl(const CohomologyData<S>& h) {
  DiagonalHom<S> d = diagonal_hom(h);
  return nil_index(d.tensor.ring, hom_kernel(d.hom));
}

/// nil(Ker (1,f)^*) inside H^*(X) (x) H^*(Y).
template <class Ctx>
NilIndex nil_ker_one_f(const SimplicialMap& f, const Ctx& ctx,
                       const CohomologyData<typename Ctx::Scalar>& hx,
                       const CohomologyData<typename Ctx::Scalar>& hy) {
  auto oc = one_cross_f_hom(f, ctx, hx, hy);
  return nil_index(oc.tensor.ring, hom_kernel(oc.hom));
}

struct KnownValue {
  int value = 0;
  std::string citation;
};

struct SpaceSpec {
  Assertions assertions;
  std::optional<KnownValue> known_cat;
  std::optional<KnownValue> known_tc;
};

struct FieldReport {
  FieldSpec field;
  std::vector<int> dims;
  NilIndex cup_len;
  NilIndex zero_div;
};

struct SpaceReport {
  std::vector<FieldReport> fields;
  ConnectivityReport conn;
  int promoted_conn = 0;
  bool contractible = false;
  BoundInterval cat;
  BoundInterval tc;
};

/// Homological connectivity promoted to homotopy connectivity only under a
/// simple-connectivity assertion (Hurewicz); otherwise capped at 0.
inline int promoted_connectivity(const ConnectivityReport& c,
                                 const Assertions& a) {
  if (a.asserted_connectivity && *a.asserted_connectivity < c.connectivity)
    throw InconsistentAssertions("connectivity:" +
                                     std::to_string(*a.asserted_connectivity),
                                 "homology");
  int base = a.is_simply_connected ? c.connectivity
                                   : std::min(c.connectivity, 0);
  if (a.asserted_connectivity) base = std::max(base, *a.asserted_connectivity);
  return base;
}

inline SpaceReport analyze_space(const SimplicialComplex& x,
                                 const SpaceSpec& spec,
                                 const std::vector<FieldSpec>& fields) {
  if (!x.is_connected())
    throw ComplexError("analysis requires a connected complex");
  SpaceReport rep;
  Assertions a = spec.assertions;
  if (x.is_full_simplex()) a.is_contractible = true;
  a.normalize();
  rep.contractible = a.is_contractible;
  rep.conn = integral_connectivity(x);
  rep.promoted_conn = promoted_connectivity(rep.conn, a);

  for (const auto& f : fields) {
    FieldReport fr = with_field(f, [&](auto ctx) {
      auto h = cup_ring(x, ctx);
      FieldReport out;
      out.field = ctx.field();
      out.dims = h.ring.dims;
      out.cup_len = cup_length(h);
      out.zero_div = zcl(h);
      return out;
    });
    rep.fields.push_back(std::move(fr));
  }

  const int d = x.dim;
  const int c = rep.promoted_conn + 1;

  // cat(X)
  if (a.is_contractible) {
    rep.cat.apply({"cat.contractible", "cat(X) = 1 iff X is contractible",
                   "asserted/auto", RuleApplication::kExact, 1});
  } else {
    for (const auto& fr : rep.fields)
      rep.cat.apply({"cat.cup", "cat(X) >= nil H~*(X)",
                     "field " + fr.field.name() + ", nil = " +
                         std::to_string(fr.cup_len.value),
                     RuleApplication::kLower, fr.cup_len.value});
    rep.cat.apply({"cat.dim", "cat(X) <= dim(X) + 1",
                   "dim = " + std::to_string(d), RuleApplication::kUpper,
                   d + 1});
    rep.cat.apply({"cat.dim_conn", "cat(X) <= floor(dim(X)/(conn(X)+1)) + 1",
                   "dim = " + std::to_string(d) +
                       ", conn = " + std::to_string(rep.promoted_conn),
                   RuleApplication::kUpper, d / c + 1});
  }
  if (spec.known_cat)
    rep.cat.apply({"cat.known", spec.known_cat->citation, "catalog",
                   RuleApplication::kExact, spec.known_cat->value});

  // TC(X)
  if (a.is_contractible) {
    rep.tc.apply({"tc.contractible", "TC(X) = 1 iff X is contractible",
                  "asserted/auto", RuleApplication::kExact, 1});
  } else {
    rep.tc.apply({"tc.cat", "TC(X) >= cat(X)", "cat lo " + bound_str(rep.cat.lo),
                  RuleApplication::kLower, rep.cat.lo});
    for (const auto& fr : rep.fields)
      rep.tc.apply({"tc.zcl", "TC(X) >= nil(Ker Delta^*)",
                    "field " + fr.field.name() + ", nil = " +
                        std::to_string(fr.zero_div.value),
                    RuleApplication::kLower, fr.zero_div.value});
    if (rep.cat.hi != kInf)
      rep.tc.apply({"tc.cat_product",
                    "TC(X) <= cat(X x X) <= 2 cat(X) - 1",
                    "cat hi " + bound_str(rep.cat.hi), RuleApplication::kUpper,
                    2 * rep.cat.hi - 1});
    rep.tc.apply({"tc.dim_conn", "TC(X) <= floor(2 dim(X)/(conn(X)+1)) + 1",
                  "dim = " + std::to_string(d) +
                      ", conn = " + std::to_string(rep.promoted_conn),
                  RuleApplication::kUpper, 2 * d / c + 1});
    if (a.is_h_group) {
      rep.tc.apply({"tc.h_group", "TC(X) = cat(X) for an H-group",
                    "cat " + rep.cat.str(), RuleApplication::kLower,
                    rep.cat.lo});
      rep.tc.apply({"tc.h_group", "TC(X) = cat(X) for an H-group",
                    "cat " + rep.cat.str(), RuleApplication::kUpper,
                    rep.cat.hi});
    }
  }
  if (spec.known_tc)
    rep.tc.apply({"tc.known", spec.known_tc->citation, "catalog",
                  RuleApplication::kExact, spec.known_tc->value});
  return rep;
}

inline BoundInterval sec_bounds(const SimplicialMap& f, const Assertions& ma) {
  BoundInterval sec;
  sec.apply({"sec.base", "sec(f) >= 1", "", RuleApplication::kLower, 1});
  if (ma.admits_section) {
    sec.apply({"sec.section", "sec(f) = 1 when f admits a section", "asserted",
               RuleApplication::kUpper, 1});
  } else {
    // The skeleton filtration |L^(0)| c ... c |L^(dim Y)| has dim(Y)+1
    // stages, each difference being a disjoint union of open simplices over
    // which a simplicial surjection has a section.
    sec.apply({"sec.skeleton",
               "sec(f) <= dim(Y) + 1 for a simplicial surjection (skeleton "
               "filtration with dim(Y)+1 stages)",
               "dim Y = " + std::to_string(f.codomain.dim),
               RuleApplication::kUpper, f.codomain.dim + 1});
  }
  return sec;
}

struct MapFieldReport {
  FieldSpec field;
  NilIndex nil_ker;
  bool fstar_injective = false;
};

struct MapReport {
  SpaceReport domain;
  SpaceReport codomain;
  BoundInterval sec;
  std::vector<MapFieldReport> fields;
  int zcl_codomain_q = 0;  // rational zero-divisor bound of Y, for R12
  BoundInterval tc_map;
  bool section_corollary = false;  // set when the final interval is [1,1]
};

struct MapSpec {
  Assertions map_assertions;
  SpaceSpec domain;
  SpaceSpec codomain;
  std::optional<KnownValue> known_tcf;
};

inline MapReport analyze_map(const SimplicialMap& f, const MapSpec& spec,
                             const std::vector<FieldSpec>& fields) {
  if (!f.surjective_on_simplices) throw NotSurjectiveError();
  MapReport rep;
  Assertions ma = spec.map_assertions;
  ma.normalize();

  rep.domain = analyze_space(f.domain, spec.domain, fields);
  rep.codomain = analyze_space(f.codomain, spec.codomain, fields);
  rep.sec = sec_bounds(f, ma);

  for (const auto& field : fields) {
    MapFieldReport mfr = with_field(field, [&](auto ctx) {
      auto hx = cup_ring(f.domain, ctx);
      auto hy = cup_ring(f.codomain, ctx);
      MapFieldReport out;
      out.field = ctx.field();
      out.nil_ker = nil_ker_one_f(f, ctx, hx, hy);
      auto fstar = induced_ring_hom(f, ctx, hx, hy);
      out.fstar_injective = true;
      for (int k = 1; k <= hy.ring.top_degree(); ++k) {
        if (hy.ring.dims[k] == 0) continue;
        if (rank_kernel_image(fstar.mats[k]).rank != hy.ring.dims[k]) {
          out.fstar_injective = false;
          break;
        }
      }
      return out;
    });
    rep.fields.push_back(std::move(mfr));
  }
  rep.zcl_codomain_q = with_field(FieldSpec::rationals(), [&](auto ctx) {
    return zcl(cup_ring(f.codomain, ctx)).value;
  });

  const BoundInterval& catX = rep.domain.cat;
  const BoundInterval& catY = rep.codomain.cat;
  const BoundInterval& tcX = rep.domain.tc;
  const BoundInterval& tcY = rep.codomain.tc;
  const int dX = f.domain.dim, dY = f.codomain.dim;
  const int cX = rep.domain.promoted_conn, cY = rep.codomain.promoted_conn;

  Assertions da = spec.domain.assertions;
  if (f.domain.is_full_simplex()) da.is_contractible = true;
  da.normalize();
  Assertions ya = spec.codomain.assertions;
  if (f.codomain.is_full_simplex()) ya.is_contractible = true;
  ya.normalize();

  std::vector<RuleApplication> apps;
  auto add = [&](RuleApplication ra) { apps.push_back(std::move(ra)); };

  add({"R13", "TC(f) >= 1; TC(f) = 1 implies f admits a continuous section",
       "", RuleApplication::kLower, 1});
  add({"R1", "TC(f) >= cat(Y) for any map", "cat(Y) " + catY.str(),
       RuleApplication::kLower, catY.lo});
  add({"R2", "TC(f) >= sec(f) for any map", "sec(f) " + rep.sec.str(),
       RuleApplication::kLower, rep.sec.lo});
  if (ma.has_categorical_fibre)
    add({"R3", "TC(f) >= cat(X) when a fibre of f is categorical in X",
         "cat(X) " + catX.str(), RuleApplication::kLower, catX.lo});
  if (catX.hi != kInf && rep.sec.hi != kInf)
    add({"R4", "TC(f) <= cat(X) + cat(X)*sec(f) - 1 for any map",
         "cat(X) hi " + bound_str(catX.hi) + ", sec hi " +
             bound_str(rep.sec.hi),
         RuleApplication::kUpper, catX.hi * (rep.sec.hi + 1) - 1});
  if (catX.hi != kInf)
    add({"R5",
         "TC(f) <= cat(X)*(dim(Y)+2) - 1 for simplicial f (skeleton bound "
         "sec(f) <= dim(Y)+1 fed into R4)",
         "cat(X) hi " + bound_str(catX.hi) + ", dim Y = " + std::to_string(dY),
         RuleApplication::kUpper, catX.hi * (dY + 2) - 1});
  if (ma.admits_section) {
    add({"R6", "if f admits a section, TC(Y) <= TC(f) <= TC(X)",
         "TC(Y) " + tcY.str(), RuleApplication::kLower, tcY.lo});
    if (tcX.hi != kInf)
      add({"R6", "if f admits a section, TC(Y) <= TC(f) <= TC(X)",
           "TC(X) " + tcX.str(), RuleApplication::kUpper, tcX.hi});
  } else if (ma.admits_homotopy_section) {
    add({"R6", "if f admits a homotopy section, TC(f) >= TC(Y)",
         "TC(Y) " + tcY.str(), RuleApplication::kLower, tcY.lo});
  }
  if (ma.is_fibration) {
    add({"R7", "if f is a fibration, cat(Y) <= TC(f) <= min{TC(Y), cat(X x Y)}",
         "cat(Y) " + catY.str(), RuleApplication::kLower, catY.lo});
    if (tcY.hi != kInf)
      add({"R7",
           "if f is a fibration, cat(Y) <= TC(f) <= min{TC(Y), cat(X x Y)}",
           "TC(Y) hi " + bound_str(tcY.hi), RuleApplication::kUpper, tcY.hi});
    if (catX.hi != kInf && catY.hi != kInf)
      add({"R7",
           "if f is a fibration, cat(Y) <= TC(f) <= min{TC(Y), cat(X x Y)}",
           "cat(X x Y) <= cat(X)+cat(Y)-1 = " +
               bound_str(catX.hi + catY.hi - 1),
           RuleApplication::kUpper, catX.hi + catY.hi - 1});
  }
  if (ma.is_fibration && (da.is_contractible || ya.is_h_group)) {
    add({"R8",
         "if f is a fibration and X is contractible or Y is an H-group, "
         "TC(f) = cat(Y)",
         "cat(Y) " + catY.str(), RuleApplication::kLower, catY.lo});
    if (catY.hi != kInf)
      add({"R8",
           "if f is a fibration and X is contractible or Y is an H-group, "
           "TC(f) = cat(Y)",
           "cat(Y) " + catY.str(), RuleApplication::kUpper, catY.hi});
  }
  for (const auto& mfr : rep.fields)
    add({"R9", "TC(f) >= nil(Ker (1,f)^*)",
         "field " + mfr.field.name() + ", nil = " +
             std::to_string(mfr.nil_ker.value),
         RuleApplication::kLower, mfr.nil_ker.value});
  for (const auto& mfr : rep.fields) {
    if (!mfr.fstar_injective) continue;
    // zcl over the same field, taken from the codomain space report
    for (const auto& fr : rep.codomain.fields)
      if (fr.field == mfr.field)
        add({"R10",
             "if f^* is injective over a field, TC(f) >= nil(Ker Delta_Y^*)",
             "field " + mfr.field.name() + ", zcl(Y) = " +
                 std::to_string(fr.zero_div.value),
             RuleApplication::kLower, fr.zero_div.value});
  }
  if (ma.is_fibration) {
    int qx = dX / (cX + 1), qy = dY / (cY + 1);
    add({"R11",
         "if f is a fibration, TC(f) <= min{floor(dim X/(conn X+1)), "
         "floor(dim Y/(conn Y+1))} + floor(dim Y/(conn Y+1)) + 1 "
         "(applied as printed; the repeated Y term may be a typo)",
         "dX/(cX+1) = " + std::to_string(qx) + ", dY/(cY+1) = " +
             std::to_string(qy),
         RuleApplication::kUpper, std::min(qx, qy) + qy + 1});
  }
  if (ma.is_fibration && ma.is_covering && ma.covering_sheets &&
      spec.codomain.known_tc &&
      spec.codomain.known_tc->value == rep.zcl_codomain_q) {
    add({"R12",
         "if f is a finite-sheeted covering and TC(Y) equals the rational "
         "zero-divisor bound, TC(f) = TC(Y)",
         "TC(Y) = " + std::to_string(spec.codomain.known_tc->value) +
             " = zcl(Y;Q), sheets = " + std::to_string(*ma.covering_sheets),
         RuleApplication::kExact, spec.codomain.known_tc->value});
  }
  if (spec.known_tcf)
    add({"tcf.known", spec.known_tcf->citation, "catalog",
         RuleApplication::kExact, spec.known_tcf->value});

  // Fixed-point: constraints are static intersections, so this settles after
  // one pass; the loop guards the bound stated for it.
  bool changed = true;
  int passes = 0;
  bool first = true;
  while (changed && passes < static_cast<int>(apps.size()) + 2) {
    changed = false;
    for (const auto& ra : apps) {
      std::size_t before = rep.tc_map.trace.size();
      bool c = rep.tc_map.apply(ra);
      if (!first) rep.tc_map.trace.resize(before);  // record each rule once
      changed = changed || c;
    }
    first = false;
    ++passes;
  }
  if (rep.tc_map.lo == 1 && rep.tc_map.hi == 1) rep.section_corollary = true;

  return rep;
}

/// max{TC(f), TC(f')} <= TC(f x f') <= TC(f) + TC(f') - 1.
inline BoundInterval product_map_bounds(const BoundInterval& a,
                                        const BoundInterval& b) {
  BoundInterval out;
  out.apply({"product", "max{TC(f),TC(f')} <= TC(f x f') <= TC(f)+TC(f')-1",
             a.str() + " x " + b.str(), RuleApplication::kLower,
             std::max(a.lo, b.lo)});
  if (a.hi != kInf && b.hi != kInf)
    out.apply({"product", "max{TC(f),TC(f')} <= TC(f x f') <= TC(f)+TC(f')-1",
               a.str() + " x " + b.str(), RuleApplication::kUpper,
               a.hi + b.hi - 1});
  return out;
}

}  // namespace tcbound

#endif
