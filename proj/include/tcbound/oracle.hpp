#ifndef TCBOUND_ORACLE_HPP
#define TCBOUND_ORACLE_HPP

#include "tcbound/bounds.hpp"

#include <set>
#include <string>
#include <vector>

namespace tcbound {

/// Exhaustive nilpotency check over F2. Enumerates ALL nonzero elements of K
/// (not just basis vectors) and all of their products, so it validates the
/// basis-product shortcut used by nil_index. Works on flattened coordinate
/// bit-vectors and multiplies via the structure constants directly;
/// deliberately shares no code with nil_index.
inline NilIndex brute_nil_check(const GradedRing<Fp>& r,
                                const std::vector<Mat<Fp>>& k) {
  if (r.field != FieldSpec::prime(2))
    throw std::invalid_argument("brute_nil_check: field must be F2");
  using Bits = std::vector<unsigned char>;
  const int n = r.total_dim();

  // degree-respecting product from structure constants
  auto mul = [&](const Bits& a, const Bits& b) {
    Bits out(n, 0);
    for (int g = 0; g < n; ++g) {
      if (!a[g]) continue;
      for (int h = 0; h < n; ++h) {
        if (!b[h]) continue;
        const Vec<Fp>& p = r.prod[g][h];
        if (p.size() == 0) continue;  // lands above the top degree
        int base = r.offset[r.degree_of(g) + r.degree_of(h)];
        for (Eigen::Index t = 0; t < p.size(); ++t)
          if (!is_zero(p(t))) out[base + t] ^= 1;
      }
    }
    return out;
  };
  auto nonzero = [](const Bits& a) {
    for (unsigned char c : a)
      if (c) return true;
    return false;
  };

  // flatten the K basis
  std::vector<Bits> basis;
  for (int d = 1; d < static_cast<int>(k.size()); ++d)
    for (Eigen::Index c = 0; c < k[d].cols(); ++c) {
      Bits v(n, 0);
      for (Eigen::Index i = 0; i < k[d].rows(); ++i)
        v[r.offset[d] + i] = is_zero(k[d](i, c)) ? 0 : 1;
      basis.push_back(v);
    }
  if (basis.size() > 16)
    throw std::invalid_argument("brute_nil_check: K too large to enumerate");

  // every nonzero element of K
  std::set<Bits> elems;
  for (std::size_t mask = 1; mask < (std::size_t(1) << basis.size()); ++mask) {
    Bits v(n, 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (mask & (std::size_t(1) << i))
        for (int t = 0; t < n; ++t) v[t] ^= basis[i][t];
    if (nonzero(v)) elems.insert(v);
  }
  if (elems.empty()) return NilIndex{1, {}};

  std::set<Bits> cur = elems;
  int len = 1;
  while (len <= r.top_degree() + 1) {
    std::set<Bits> next;
    for (const auto& v : cur)
      for (const auto& e : elems) {
        Bits p = mul(v, e);
        if (nonzero(p)) next.insert(p);
      }
    if (next.empty()) break;
    cur = std::move(next);
    ++len;
  }
  return NilIndex{len + 1, {}};
}

struct KunnethReport {
  bool equal = false;
  std::vector<int> product_dims;
  std::vector<int> tensor_dims;
};

/// Compares cohomology of the product triangulation against the graded
/// tensor product of the factors, degree by degree.
inline KunnethReport kunneth_check(const SimplicialComplex& x,
                                   const SimplicialComplex& y,
                                   const FieldSpec& f) {
  KunnethReport rep;
  SimplicialComplex p = product_complex(x, y);
  rep.product_dims = cohomology_dims(p, f);
  std::vector<int> dx = cohomology_dims(x, f);
  std::vector<int> dy = cohomology_dims(y, f);
  rep.tensor_dims.assign(dx.size() + dy.size() - 1, 0);
  for (std::size_t i = 0; i < dx.size(); ++i)
    for (std::size_t j = 0; j < dy.size(); ++j)
      rep.tensor_dims[i + j] += dx[i] * dy[j];
  while (rep.tensor_dims.size() > 1 && rep.tensor_dims.back() == 0)
    rep.tensor_dims.pop_back();
  std::vector<int> pd = rep.product_dims;
  while (pd.size() > 1 && pd.back() == 0) pd.pop_back();
  rep.equal = (pd == rep.tensor_dims);
  return rep;
}

struct RingAxiomReport {
  bool ok = true;
  std::string detail;  // offending triple/pair when not ok
};

/// Associativity on all basis triples, graded commutativity on all pairs,
/// and the unit law, in exact arithmetic.
template <class S>
RingAxiomReport ring_axioms_check(const GradedRing<S>& r) {
  RingAxiomReport rep;
  const int n = r.total_dim();
  auto label = [&](int g) {
    return g < static_cast<int>(r.labels.size()) ? r.labels[g]
                                                 : std::to_string(g);
  };
  for (int g = 0; g < n && rep.ok; ++g)
    for (int h = 0; h < n && rep.ok; ++h) {
      GradedVec<S> bg = gv_basis(r, g), bh = gv_basis(r, h);
      // graded commutativity: b*a = (-1)^{|a||b|} a*b
      GradedVec<S> ab = gv_mul(r, bg, bh);
      GradedVec<S> ba = gv_mul(r, bh, bg);
      bool odd = (r.degree_of(g) % 2 == 1) && (r.degree_of(h) % 2 == 1);
      for (int d = 0; d <= r.top_degree(); ++d)
        for (Eigen::Index i = 0; i < ab.comp[d].size(); ++i) {
          S want = odd ? S(-ba.comp[d](i)) : ba.comp[d](i);
          if (!(ab.comp[d](i) == want)) {
            rep.ok = false;
            rep.detail = "graded commutativity fails on (" + label(g) + ", " +
                         label(h) + ")";
          }
        }
      for (int e = 0; e < n && rep.ok; ++e) {
        GradedVec<S> lhs = gv_mul(r, ab, gv_basis(r, e));
        GradedVec<S> rhs = gv_mul(r, bg, gv_mul(r, bh, gv_basis(r, e)));
        for (int d = 0; d <= r.top_degree(); ++d)
          for (Eigen::Index i = 0; i < lhs.comp[d].size(); ++i)
            if (!(lhs.comp[d](i) == rhs.comp[d](i))) {
              rep.ok = false;
              rep.detail = "associativity fails on (" + label(g) + ", " +
                           label(h) + ", " + label(e) + ")";
            }
      }
    }
  for (int g = 0; g < n && rep.ok; ++g) {
    GradedVec<S> u = gv_mul(r, gv_unit(r), gv_basis(r, g));
    GradedVec<S> b = gv_basis(r, g);
    for (int d = 0; d <= r.top_degree(); ++d)
      for (Eigen::Index i = 0; i < u.comp[d].size(); ++i)
        if (!(u.comp[d](i) == b.comp[d](i))) {
          rep.ok = false;
          rep.detail = "unit law fails on " + label(g);
        }
  }
  return rep;
}

}  // namespace tcbound

#endif
