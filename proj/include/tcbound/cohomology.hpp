#ifndef TCBOUND_COHOMOLOGY_HPP
#define TCBOUND_COHOMOLOGY_HPP

#include "tcbound/linalg.hpp"
#include "tcbound/simplicial.hpp"

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace tcbound {

/// delta[k] maps k-cochains to (k+1)-cochains; rows are (k+1)-simplices,
/// columns k-simplices, signs from the global vertex order. delta[dim] has
/// zero rows.
template <class Ctx>
std::vector<Mat<typename Ctx::Scalar>> coboundary_matrices(
    const SimplicialComplex& x, const Ctx& ctx) {
  using S = typename Ctx::Scalar;
  std::vector<Mat<S>> deltas;
  for (int k = 0; k <= x.dim; ++k) {
    const Eigen::Index rows = static_cast<Eigen::Index>(x.simplex_count(k + 1));
    const Eigen::Index cols = static_cast<Eigen::Index>(x.simplex_count(k));
    Mat<S> d = Mat<S>::Constant(rows, cols, ctx.from_int(0));
    for (Eigen::Index r = 0; r < rows; ++r) {
      const Simplex& tau = x.simplices[k + 1][static_cast<std::size_t>(r)];
      for (std::size_t i = 0; i < tau.size(); ++i) {
        Simplex face = tau;
        face.erase(face.begin() + static_cast<long>(i));
        Eigen::Index c = x.simplex_index(face);
        d(r, c) += ctx.from_int(i % 2 == 0 ? 1 : -1);
      }
    }
    deltas.push_back(std::move(d));
  }
  return deltas;
}

/// Integer boundary matrices; bd[k] maps k-chains to (k-1)-chains, k >= 1.
inline std::vector<MatZ> boundary_matrices(const SimplicialComplex& x) {
  std::vector<MatZ> bds;
  for (int k = 1; k <= x.dim; ++k) {
    MatZ b = MatZ::Zero(static_cast<Eigen::Index>(x.simplex_count(k - 1)),
                        static_cast<Eigen::Index>(x.simplex_count(k)));
    for (std::size_t c = 0; c < x.simplex_count(k); ++c) {
      const Simplex& tau = x.simplices[k][c];
      for (std::size_t i = 0; i < tau.size(); ++i) {
        Simplex face = tau;
        face.erase(face.begin() + static_cast<long>(i));
        b(x.simplex_index(face), static_cast<Eigen::Index>(c)) +=
            Integer(i % 2 == 0 ? 1 : -1);
      }
    }
    bds.push_back(std::move(b));
  }
  return bds;
}

template <class S>
struct GradedVectorSpace {
  FieldSpec field;
  int top = -1;
  std::vector<int> dims;        // h_k
  std::vector<Mat<S>> reps;     // n_k x h_k canonical cocycle representatives
  std::vector<Mat<S>> solver;   // n_k x (h_k + b_k): [reps | coboundary basis]

  /// Coordinates of a cocycle's class in the canonical basis.
  Vec<S> express(int deg, const Vec<S>& cochain) const {
    if (deg > top || dims[deg] == 0) return Vec<S>();
    auto sol = solve<S>(solver[deg], cochain);
    if (!sol)
      throw std::logic_error("express: cochain is not a cocycle of this complex");
    return sol->head(dims[deg]);
  }
};

template <class Ctx>
GradedVectorSpace<typename Ctx::Scalar> cohomology_basis(
    const SimplicialComplex& x, const Ctx& ctx) {
  using S = typename Ctx::Scalar;
  GradedVectorSpace<S> h;
  h.field = ctx.field();
  h.top = x.dim;
  auto deltas = coboundary_matrices(x, ctx);
  for (int k = 0; k <= x.dim; ++k) {
    auto zk = rank_kernel_image(deltas[k]);
    Mat<S> image;  // coboundaries in degree k
    if (k > 0)
      image = rank_kernel_image(deltas[k - 1]).image;
    else
      image = Mat<S>::Constant(deltas[k].cols(), 0, ctx.from_int(0));

    EchelonSpan<S> span;
    for (Eigen::Index c = 0; c < image.cols(); ++c) span.add(image.col(c));
    std::vector<Eigen::Index> chosen;
    for (Eigen::Index c = 0; c < zk.kernel.cols(); ++c)
      if (span.add(zk.kernel.col(c))) chosen.push_back(c);

    const Eigen::Index n = deltas[k].cols();
    Mat<S> r = Mat<S>::Constant(n, static_cast<Eigen::Index>(chosen.size()),
                                ctx.from_int(0));
    for (std::size_t i = 0; i < chosen.size(); ++i)
      r.col(static_cast<Eigen::Index>(i)) = zk.kernel.col(chosen[i]);
    Mat<S> sol(n, r.cols() + image.cols());
    sol.leftCols(r.cols()) = r;
    sol.rightCols(image.cols()) = image;
    h.dims.push_back(static_cast<int>(chosen.size()));
    h.reps.push_back(std::move(r));
    h.solver.push_back(std::move(sol));
  }
  return h;
}

/// Betti numbers only, via sparse elimination; used where product complexes
/// get large and no representatives are needed.
inline std::vector<int> cohomology_dims(const SimplicialComplex& x,
                                        const FieldSpec& f) {
  return with_field(f, [&](auto ctx) {
    using S = typename decltype(ctx)::Scalar;
    std::vector<Eigen::Index> rank(x.dim + 2, 0);
    for (int k = 0; k <= x.dim; ++k) {
      const std::size_t rows_n = x.simplex_count(k + 1);
      std::vector<std::vector<std::pair<Eigen::Index, S>>> rows(rows_n);
      for (std::size_t r = 0; r < rows_n; ++r) {
        const Simplex& tau = x.simplices[k + 1][r];
        for (std::size_t i = 0; i < tau.size(); ++i) {
          Simplex face = tau;
          face.erase(face.begin() + static_cast<long>(i));
          rows[r].emplace_back(x.simplex_index(face),
                               ctx.from_int(i % 2 == 0 ? 1 : -1));
        }
        std::sort(rows[r].begin(), rows[r].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        // merge duplicate columns (possible when faces coincide)
        std::vector<std::pair<Eigen::Index, S>> merged;
        for (auto& e : rows[r]) {
          if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
          else
            merged.push_back(e);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& e) { return is_zero(e.second); }),
                     merged.end());
        rows[r] = std::move(merged);
      }
      rank[k + 1] =
          sparse_rank(std::move(rows), static_cast<Eigen::Index>(x.simplex_count(k)));
    }
    std::vector<int> dims;
    for (int k = 0; k <= x.dim; ++k) {
      Eigen::Index n = static_cast<Eigen::Index>(x.simplex_count(k));
      dims.push_back(static_cast<int>(n - rank[k + 1] - rank[k]));
    }
    return dims;
  });
}

/// Graded-commutative ring given by per-degree dimensions and structure
/// constants over the canonical basis. Basis elements are indexed globally in
/// (degree, index) order; products landing above the top degree are zero.
template <class S>
struct GradedRing {
  FieldSpec field;
  S one;                        // scalar 1 of the field
  std::vector<int> dims;        // per degree
  std::vector<int> offset;      // global index of first element per degree
  std::vector<std::string> labels;
  // prod[g][h]: coordinates in degree deg(g)+deg(h); empty above top degree
  std::vector<std::vector<Vec<S>>> prod;
  Vec<S> unit;                  // coordinates in degree 0

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  int total_dim() const { return offset.back(); }
  int global_index(int deg, int i) const { return offset[deg] + i; }
  int degree_of(int g) const {
    int d = 0;
    while (offset[d + 1] <= g) ++d;
    return d;
  }
  int index_in_degree(int g) const { return g - offset[degree_of(g)]; }

  void init_offsets() {
    offset.assign(1, 0);
    for (int d : dims) offset.push_back(offset.back() + d);
  }
};

/// Element of a graded ring: one coordinate vector per degree.
template <class S>
struct GradedVec {
  std::vector<Vec<S>> comp;

  bool is_zero_vec() const {
    for (const auto& c : comp)
      for (Eigen::Index i = 0; i < c.size(); ++i)
        if (!is_zero(c(i))) return false;
    return true;
  }
  Vec<S> flatten() const {
    Eigen::Index n = 0;
    for (const auto& c : comp) n += c.size();
    Vec<S> out(n);
    Eigen::Index at = 0;
    for (const auto& c : comp)
      for (Eigen::Index i = 0; i < c.size(); ++i) out(at++) = c(i);
    return out;
  }
};

template <class S>
GradedVec<S> gv_zero(const GradedRing<S>& r) {
  GradedVec<S> v;
  for (int d = 0; d <= r.top_degree(); ++d)
    v.comp.push_back(Vec<S>::Constant(r.dims[d], r.one - r.one));
  return v;
}

template <class S>
GradedVec<S> gv_basis(const GradedRing<S>& r, int g) {
  GradedVec<S> v = gv_zero(r);
  v.comp[r.degree_of(g)](r.index_in_degree(g)) = r.one;
  return v;
}

template <class S>
GradedVec<S> gv_mul(const GradedRing<S>& r, const GradedVec<S>& a,
                    const GradedVec<S>& b) {
  GradedVec<S> out = gv_zero(r);
  for (int da = 0; da <= r.top_degree(); ++da)
    for (Eigen::Index i = 0; i < a.comp[da].size(); ++i) {
      if (is_zero(a.comp[da](i))) continue;
      for (int db = 0; da + db <= r.top_degree(); ++db)
        for (Eigen::Index j = 0; j < b.comp[db].size(); ++j) {
          if (is_zero(b.comp[db](j))) continue;
          const Vec<S>& c =
              r.prod[r.global_index(da, static_cast<int>(i))]
                    [r.global_index(db, static_cast<int>(j))];
          S f = a.comp[da](i) * b.comp[db](j);
          for (Eigen::Index k = 0; k < c.size(); ++k)
            out.comp[da + db](k) += f * c(k);
        }
    }
  return out;
}

template <class S>
GradedVec<S> gv_unit(const GradedRing<S>& r) {
  GradedVec<S> v = gv_zero(r);
  v.comp[0] = r.unit;
  return v;
}

/// Cochain-level cup product of representatives via front/back faces of
/// ordered simplices.
template <class Ctx>
Vec<typename Ctx::Scalar> cup_cochain(const SimplicialComplex& x, const Ctx& ctx,
                                      int p, const Vec<typename Ctx::Scalar>& u,
                                      int q, const Vec<typename Ctx::Scalar>& v) {
  using S = typename Ctx::Scalar;
  const Eigen::Index n = static_cast<Eigen::Index>(x.simplex_count(p + q));
  Vec<S> w = Vec<S>::Constant(n, ctx.from_int(0));
  for (Eigen::Index s = 0; s < n; ++s) {
    const Simplex& sigma = x.simplices[p + q][static_cast<std::size_t>(s)];
    Simplex front(sigma.begin(), sigma.begin() + p + 1);
    Simplex back(sigma.begin() + p, sigma.end());
    w(s) = u(x.simplex_index(front)) * v(x.simplex_index(back));
  }
  return w;
}

template <class S>
struct CohomologyData {
  GradedVectorSpace<S> basis;
  GradedRing<S> ring;
};

/// Cohomology ring with structure constants computed by evaluating the
/// cochain cup product of canonical representatives and expressing the result
/// back in the canonical basis.
template <class Ctx>
CohomologyData<typename Ctx::Scalar> cup_ring(const SimplicialComplex& x,
                                              const Ctx& ctx) {
  using S = typename Ctx::Scalar;
  CohomologyData<S> out;
  out.basis = cohomology_basis(x, ctx);
  GradedRing<S>& r = out.ring;
  r.field = ctx.field();
  r.one = ctx.from_int(1);
  r.dims = out.basis.dims;
  r.init_offsets();
  for (int d = 0; d <= r.top_degree(); ++d)
    for (int i = 0; i < r.dims[d]; ++i) {
      std::ostringstream name;
      name << "x" << d;
      if (r.dims[d] > 1) name << "_" << i;
      r.labels.push_back(d == 0 ? "1" : name.str());
    }

  const int n = r.total_dim();
  r.prod.assign(n, std::vector<Vec<S>>(n));
  for (int p = 0; p <= r.top_degree(); ++p)
    for (int i = 0; i < r.dims[p]; ++i)
      for (int q = 0; q <= r.top_degree(); ++q)
        for (int j = 0; j < r.dims[q]; ++j) {
          int g = r.global_index(p, i), h = r.global_index(q, j);
          if (p + q > r.top_degree()) continue;
          Vec<S> w = cup_cochain(x, ctx, p, out.basis.reps[p].col(i), q,
                                 out.basis.reps[q].col(j));
          r.prod[g][h] = out.basis.express(p + q, w);
        }

  Vec<S> ones = Vec<S>::Constant(static_cast<Eigen::Index>(x.simplex_count(0)),
                                 ctx.from_int(1));
  r.unit = out.basis.express(0, ones);
  return out;
}

/// Graded ring homomorphism as per-degree matrices over the source's degrees.
template <class S>
struct RingHom {
  const GradedRing<S>* source = nullptr;
  const GradedRing<S>* target = nullptr;
  std::vector<Mat<S>> mats;  // mats[k]: target.dims[k] x source.dims[k]

  Vec<S> apply_degree(int k, const Vec<S>& coords) const {
    if (k >= static_cast<int>(mats.size()) || mats[k].rows() == 0)
      return Vec<S>::Constant(
          k <= target->top_degree() ? target->dims[k] : 0,
          target->one - target->one);
    return mat_vec(mats[k], coords);
  }

  GradedVec<S> apply(const GradedVec<S>& v) const {
    GradedVec<S> out = gv_zero(*target);
    for (int k = 0; k < static_cast<int>(v.comp.size()); ++k) {
      Vec<S> img = apply_degree(k, v.comp[k]);
      if (k <= target->top_degree())
        for (Eigen::Index i = 0; i < img.size(); ++i) out.comp[k](i) += img(i);
    }
    return out;
  }
};

/// Pullback of a cochain along a simplicial map, with the sign of the
/// permutation that sorts the image vertices.
template <class Ctx>
Vec<typename Ctx::Scalar> pullback_cochain(const SimplicialMap& f, const Ctx& ctx,
                                           int k,
                                           const Vec<typename Ctx::Scalar>& v) {
  using S = typename Ctx::Scalar;
  const SimplicialComplex& x = f.domain;
  const SimplicialComplex& y = f.codomain;
  const Eigen::Index n = static_cast<Eigen::Index>(x.simplex_count(k));
  Vec<S> out = Vec<S>::Constant(n, ctx.from_int(0));
  for (Eigen::Index s = 0; s < n; ++s) {
    const Simplex& sigma = x.simplices[k][static_cast<std::size_t>(s)];
    std::vector<int> img;
    for (int vtx : sigma) img.push_back(f.vertex_map[vtx]);
    // degenerate if any two vertices collide
    std::vector<int> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      continue;
    int inversions = 0;
    for (std::size_t a = 0; a < img.size(); ++a)
      for (std::size_t b = a + 1; b < img.size(); ++b)
        if (img[a] > img[b]) ++inversions;
    S sign = ctx.from_int(inversions % 2 == 0 ? 1 : -1);
    out(s) = sign * v(y.simplex_index(sorted));
  }
  return out;
}

/// f^*: H^*(Y) -> H^*(X). Multiplicativity and unitality are verified on the
/// basis; a failure means an engine bug, not bad input.
template <class Ctx>
RingHom<typename Ctx::Scalar> induced_ring_hom(
    const SimplicialMap& f, const Ctx& ctx,
    const CohomologyData<typename Ctx::Scalar>& hx,
    const CohomologyData<typename Ctx::Scalar>& hy) {
  using S = typename Ctx::Scalar;
  RingHom<S> hom;
  hom.source = &hy.ring;
  hom.target = &hx.ring;
  for (int k = 0; k <= hy.ring.top_degree(); ++k) {
    const int rows = k <= hx.ring.top_degree() ? hx.ring.dims[k] : 0;
    Mat<S> m = Mat<S>::Constant(rows, hy.ring.dims[k], ctx.from_int(0));
    for (int j = 0; j < hy.ring.dims[k]; ++j) {
      Vec<S> pulled = pullback_cochain(f, ctx, k, hy.basis.reps[k].col(j));
      if (rows > 0) m.col(j) = hx.basis.express(k, pulled);
    }
    hom.mats.push_back(std::move(m));
  }

  // multiplicative + unital check on cohomology
  const GradedRing<S>& ry = hy.ring;
  for (int g = 0; g < ry.total_dim(); ++g)
    for (int h = 0; h < ry.total_dim(); ++h) {
      GradedVec<S> lhs = hom.apply(gv_mul(ry, gv_basis(ry, g), gv_basis(ry, h)));
      GradedVec<S> rhs = gv_mul(hx.ring, hom.apply(gv_basis(ry, g)),
                                hom.apply(gv_basis(ry, h)));
      for (int d = 0; d <= hx.ring.top_degree(); ++d)
        for (Eigen::Index i = 0; i < lhs.comp[d].size(); ++i)
          if (lhs.comp[d](i) != rhs.comp[d](i))
            throw std::logic_error("induced_ring_hom: not multiplicative");
    }
  GradedVec<S> u = hom.apply(gv_unit(ry));
  GradedVec<S> ux = gv_unit(hx.ring);
  for (Eigen::Index i = 0; i < u.comp[0].size(); ++i)
    if (u.comp[0](i) != ux.comp[0](i))
      throw std::logic_error("induced_ring_hom: not unital");
  return hom;
}

/// H^*(A) (x) H^*(B) with the Koszul-signed product
/// (a(x)b)(a'(x)b') = (-1)^{|b||a'|} (aa')(x)(bb').
/// Basis within each degree is ordered by (A-degree, A-index, B-index).
template <class S>
struct TensorBasisElem {
  int deg_a, ia, deg_b, ib;
};

template <class S>
struct TensorRing {
  GradedRing<S> ring;
  std::vector<TensorBasisElem<S>> elems;  // by global index
};

template <class S>
TensorRing<S> tensor_ring(const GradedRing<S>& a, const GradedRing<S>& b) {
  if (a.field != b.field)
    throw std::invalid_argument("tensor_ring: field mismatch");
  TensorRing<S> t;
  GradedRing<S>& r = t.ring;
  r.field = a.field;
  r.one = a.one;
  const int top = a.top_degree() + b.top_degree();
  r.dims.assign(top + 1, 0);
  for (int d = 0; d <= top; ++d)
    for (int da = 0; da <= std::min(d, a.top_degree()); ++da) {
      int db = d - da;
      if (db > b.top_degree()) continue;
      for (int i = 0; i < a.dims[da]; ++i)
        for (int j = 0; j < b.dims[db]; ++j) {
          t.elems.push_back({da, i, db, j});
          r.dims[d]++;
          r.labels.push_back(a.labels[a.global_index(da, i)] + "(x)" +
                             b.labels[b.global_index(db, j)]);
        }
    }
  r.init_offsets();

  const int n = r.total_dim();
  // position lookup: (da, ia, db, ib) -> index within its degree
  auto pos_in_degree = [&](int da, int ia, int db, int ib) {
    int d = da + db;
    int at = 0;
    for (int g = r.offset[d]; g < r.offset[d + 1]; ++g, ++at) {
      const auto& e = t.elems[g];
      if (e.deg_a == da && e.ia == ia && e.deg_b == db && e.ib == ib) return at;
    }
    throw std::logic_error("tensor_ring: basis lookup failed");
  };

  S zero = a.one - a.one;
  r.prod.assign(n, std::vector<Vec<S>>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const auto& e = t.elems[g];
      const auto& f = t.elems[h];
      int d = e.deg_a + e.deg_b + f.deg_a + f.deg_b;
      if (d > top) continue;
      Vec<S> out = Vec<S>::Constant(r.dims[d], zero);
      const int dA = e.deg_a + f.deg_a, dB = e.deg_b + f.deg_b;
      if (dA <= a.top_degree() && dB <= b.top_degree()) {
        const Vec<S>& pa =
            a.prod[a.global_index(e.deg_a, e.ia)][a.global_index(f.deg_a, f.ia)];
        const Vec<S>& pb =
            b.prod[b.global_index(e.deg_b, e.ib)][b.global_index(f.deg_b, f.ib)];
        bool negate = (e.deg_b % 2 == 1) && (f.deg_a % 2 == 1);
        for (Eigen::Index ia2 = 0; ia2 < pa.size(); ++ia2) {
          if (is_zero(pa(ia2))) continue;
          for (Eigen::Index ib2 = 0; ib2 < pb.size(); ++ib2) {
            if (is_zero(pb(ib2))) continue;
            S c = pa(ia2) * pb(ib2);
            if (negate) c = -c;
            out(pos_in_degree(dA, static_cast<int>(ia2), dB,
                              static_cast<int>(ib2))) += c;
          }
        }
      }
      r.prod[g][h] = std::move(out);
    }

  // unit = unit_A (x) unit_B
  r.unit = Vec<S>::Constant(r.dims[0], zero);
  for (int i = 0; i < a.dims[0]; ++i)
    for (int j = 0; j < b.dims[0]; ++j)
      r.unit(pos_in_degree(0, i, 0, j)) = a.unit(i) * b.unit(j);
  return t;
}

template <class S>
Vec<S> unit_vec(Eigen::Index n, Eigen::Index i, const S& one, const S& zero) {
  Vec<S> v = Vec<S>::Constant(n, zero);
  v(i) = one;
  return v;
}

/// (1,f)^*: H^*(X) (x) H^*(Y) -> H^*(X), sending u (x) v to u . f^*(v).
template <class S>
struct OneCrossF {
  TensorRing<S> tensor;   // H^*(X) (x) H^*(Y)
  RingHom<S> hom;         // into H^*(X); source points at tensor.ring
  RingHom<S> fstar;       // f^*: H^*(Y) -> H^*(X)
};

template <class Ctx>
OneCrossF<typename Ctx::Scalar> one_cross_f_hom(
    const SimplicialMap& f, const Ctx& ctx,
    const CohomologyData<typename Ctx::Scalar>& hx,
    const CohomologyData<typename Ctx::Scalar>& hy) {
  using S = typename Ctx::Scalar;
  OneCrossF<S> out;
  out.fstar = induced_ring_hom(f, ctx, hx, hy);
  out.tensor = tensor_ring(hx.ring, hy.ring);
  out.hom.source = &out.tensor.ring;
  out.hom.target = &hx.ring;

  const GradedRing<S>& rx = hx.ring;
  const GradedRing<S>& rt = out.tensor.ring;
  for (int d = 0; d <= rt.top_degree(); ++d) {
    const int rows = d <= rx.top_degree() ? rx.dims[d] : 0;
    Mat<S> m = Mat<S>::Constant(rows, rt.dims[d], ctx.from_int(0));
    for (int c = 0; c < rt.dims[d]; ++c) {
      if (rows == 0) continue;
      const auto& e = out.tensor.elems[rt.offset[d] + c];
      // f^*(v_j) in degree deg_b of X
      Vec<S> fv = out.fstar.apply_degree(
          e.deg_b, unit_vec<S>(hy.ring.dims[e.deg_b], e.ib, ctx.from_int(1),
                               ctx.from_int(0)));
      // u_i . f^*(v_j)
      for (Eigen::Index k = 0; k < fv.size(); ++k) {
        if (is_zero(fv(k))) continue;
        const Vec<S>& p = rx.prod[rx.global_index(e.deg_a, e.ia)]
                                 [rx.global_index(e.deg_b, static_cast<int>(k))];
        for (Eigen::Index t = 0; t < p.size(); ++t)
          m(t, c) += fv(k) * p(t);
      }
    }
    out.hom.mats.push_back(std::move(m));
  }
  return out;
}

/// Per-degree kernel bases of a ring homomorphism, positive degrees only.
/// A nonzero degree-0 kernel signals malformed input (a unital homomorphism
/// between rings of connected spaces is injective in degree 0).
template <class S>
std::vector<Mat<S>> hom_kernel(const RingHom<S>& h) {
  std::vector<Mat<S>> kernels;
  for (int k = 0; k < static_cast<int>(h.mats.size()); ++k) {
    Mat<S> m = h.mats[k];
    if (m.rows() == 0) {
      // everything in this degree maps to zero
      Mat<S> id = Mat<S>::Constant(h.source->dims[k], h.source->dims[k],
                                   h.source->one - h.source->one);
      for (Eigen::Index i = 0; i < id.rows(); ++i) id(i, i) = h.source->one;
      kernels.push_back(std::move(id));
      continue;
    }
    kernels.push_back(rank_kernel_image(m).kernel);
  }
  if (!kernels.empty() && kernels[0].cols() > 0)
    throw std::logic_error("hom_kernel: kernel contains a degree-0 element");
  return kernels;
}

struct ConnectivityReport {
  int connectivity = 0;  // largest c with reduced integral homology 0 up to c
  std::vector<int> betti;                         // integral Betti numbers
  std::vector<std::vector<Integer>> torsion;      // per degree, factors > 1
};

/// Homological connectivity over Z via Smith normal form. Requires a
/// connected complex.
inline ConnectivityReport integral_connectivity(const SimplicialComplex& x) {
  if (!x.is_connected())
    throw ComplexError("integral_connectivity: complex is disconnected");
  ConnectivityReport rep;
  auto bds = boundary_matrices(x);
  std::vector<Eigen::Index> rank(x.dim + 2, 0);
  std::vector<std::vector<Integer>> tor(x.dim + 1);
  for (int k = 1; k <= x.dim; ++k) {
    auto snf = smith_normal_form(bds[k - 1]);
    rank[k] = static_cast<Eigen::Index>(snf.factors.size());
    for (const auto& d : snf.factors)
      if (d > 1) tor[k - 1].push_back(d);
  }
  for (int k = 0; k <= x.dim; ++k) {
    Eigen::Index n = static_cast<Eigen::Index>(x.simplex_count(k));
    rep.betti.push_back(static_cast<int>(n - rank[k] - rank[k + 1]));
    rep.torsion.push_back(tor[k]);
  }
  int c = 0;
  while (c < x.dim) {
    int next = c + 1;
    bool reduced_zero = rep.betti[next] == 0 && rep.torsion[next].empty();
    if (!reduced_zero) break;
    c = next;
  }
  rep.connectivity = c;
  return rep;
}

}  // namespace tcbound

#endif
