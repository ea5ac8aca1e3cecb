#ifndef TCBOUND_LINALG_HPP
#define TCBOUND_LINALG_HPP

#include "tcbound/scalar.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace tcbound {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatZ = Mat<Integer>;
using MatQ = Mat<Rational>;

template <class S>
bool is_zero(const S& x) {
  return x == S(0);
}
inline bool is_zero(const Fp& x) { return x.p == 0 ? x.v == 0 : Fp(x.v, x.p).v == 0; }

/// In-place reduced row echelon form. Pivot choice is the first nonzero entry
/// in each column, scanned top to bottom, which makes the result (and all
/// bases derived from it) deterministic.
template <class S>
std::vector<Eigen::Index> rref(Mat<S>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pr = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (!is_zero(m(r, col))) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row) m.row(pr).swap(m.row(row));
    S inv = S(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      S f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
struct RankKernelImage {
  Eigen::Index rank = 0;
  Mat<S> kernel;  // cols are a canonical basis of the null space
  Mat<S> image;   // cols are a canonical (echelon) basis of the column space
};

template <class S>
RankKernelImage<S> rank_kernel_image(const Mat<S>& m) {
  RankKernelImage<S> out;
  Mat<S> r = m;
  std::vector<Eigen::Index> pivots = rref(r);
  out.rank = static_cast<Eigen::Index>(pivots.size());

  std::vector<Eigen::Index> free_cols;
  {
    std::vector<bool> is_pivot(m.cols(), false);
    for (Eigen::Index c : pivots) is_pivot[c] = true;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  out.kernel = Mat<S>::Zero(m.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    out.kernel(free_cols[j], static_cast<Eigen::Index>(j)) = S(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      out.kernel(pivots[i], static_cast<Eigen::Index>(j)) =
          -r(static_cast<Eigen::Index>(i), free_cols[j]);
  }

  Mat<S> t = m.transpose();
  std::vector<Eigen::Index> tp = rref(t);
  out.image = Mat<S>::Zero(m.rows(), static_cast<Eigen::Index>(tp.size()));
  for (std::size_t i = 0; i < tp.size(); ++i)
    out.image.col(static_cast<Eigen::Index>(i)) =
        t.row(static_cast<Eigen::Index>(i)).transpose();
  return out;
}

/// Solves A x = b exactly; returns the canonical solution with all free
/// variables set to zero, or nullopt when the system is inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b) {
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Eigen::Index> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec<S> x = Vec<S>::Zero(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x(pivots[i]) = aug(static_cast<Eigen::Index>(i), a.cols());
  return x;
}

/// Sparse rank for the large coboundary matrices, where only dimensions are
/// needed. Rows are kept as sorted (col, value) lists; the pivot row for each
/// column is the shortest available one, which keeps fill-in low on
/// incidence-type matrices.
template <class S>
Eigen::Index sparse_rank(std::vector<std::vector<std::pair<Eigen::Index, S>>> rows,
                         Eigen::Index cols) {
  std::vector<char> used(rows.size(), 0);
  Eigen::Index rank = 0;
  // pivot_of_col[c] = index of the row used to eliminate column c
  std::vector<Eigen::Index> pivot_of_col(cols, -1);
  std::vector<S> work(cols, S(0));
  std::vector<char> nz(cols, 0);

  auto leading = [](const std::vector<std::pair<Eigen::Index, S>>& r) {
    return r.front().first;
  };

  // Process rows in order of increasing length for less fill.
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a].size() < rows[b].size();
  });

  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    std::size_t ri = order[oi];
    if (rows[ri].empty()) continue;
    // scatter
    std::vector<Eigen::Index> touched;
    for (auto& [c, v] : rows[ri]) {
      work[c] = v;
      nz[c] = 1;
      touched.push_back(c);
    }
    // eliminate against existing pivots, lowest column first
    for (;;) {
      Eigen::Index lead = -1;
      for (Eigen::Index c : touched)
        if (nz[c] && !is_zero(work[c]) && (lead < 0 || c < lead) &&
            pivot_of_col[c] >= 0)
          lead = c;
      if (lead < 0) break;
      const auto& prow = rows[static_cast<std::size_t>(pivot_of_col[lead])];
      S f = work[lead] / prow.front().second;
      for (auto& [c, v] : prow) {
        if (!nz[c]) {
          work[c] = S(0);
          nz[c] = 1;
          touched.push_back(c);
        }
        work[c] = work[c] - f * v;
      }
    }
    // gather the reduced row
    std::vector<std::pair<Eigen::Index, S>> red;
    std::sort(touched.begin(), touched.end());
    for (Eigen::Index c : touched) {
      if (!is_zero(work[c])) red.emplace_back(c, work[c]);
      work[c] = S(0);
      nz[c] = 0;
    }
    rows[ri] = std::move(red);
    if (!rows[ri].empty()) {
      pivot_of_col[leading(rows[ri])] = static_cast<Eigen::Index>(ri);
      ++rank;
    }
  }
  return rank;
}

/// Incremental echelon span: add() reduces a vector against the rows held so
/// far and keeps it when independent. Used for canonical subspace spans and
/// membership tests.
template <class S>
class EchelonSpan {
 public:
  /// Returns true when v was independent of the current span.
  bool add(Vec<S> v) {
    reduce(v);
    Eigen::Index lead = leading(v);
    if (lead < 0) return false;
    S inv = S(1) / v(lead);
    for (Eigen::Index i = lead; i < v.size(); ++i) v(i) = v(i) * inv;
    auto pos = std::lower_bound(leads_.begin(), leads_.end(), lead);
    rows_.insert(rows_.begin() + (pos - leads_.begin()), std::move(v));
    leads_.insert(pos, lead);
    return true;
  }

  bool contains(Vec<S> v) const {
    reduce(v);
    return leading(v) < 0;
  }

  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

 private:
  void reduce(Vec<S>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S& c = v(leads_[i]);
      if (is_zero(c)) continue;
      S f = c;
      for (Eigen::Index j = leads_[i]; j < v.size(); ++j)
        v(j) = v(j) - f * rows_[i](j);
    }
  }
  static Eigen::Index leading(const Vec<S>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!is_zero(v(i))) return i;
    return -1;
  }
  std::vector<Vec<S>> rows_;
  std::vector<Eigen::Index> leads_;
};

// Eigen's matrix-product expressions probe scalar conversions in a way the
// multiprecision scalars cannot survive, so products are spelled out.
template <class S>
Mat<S> mat_mul(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out = Mat<S>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class S>
Vec<S> mat_vec(const Mat<S>& a, const Vec<S>& x) {
  Vec<S> out = Vec<S>::Zero(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      if (!is_zero(a(i, k))) out(i) += a(i, k) * x(k);
  return out;
}

struct SmithNormalForm {
  std::vector<Integer> factors;  // d1 | d2 | ... | dr, all positive
  MatZ u, v;                     // u * m * v is the diagonal form
};

/// Smith normal form over Z with full transform tracking. Pivot is the
/// smallest-magnitude nonzero entry of the remaining block (ties broken by
/// position), which keeps intermediate growth down at catalog scale.
inline SmithNormalForm smith_normal_form(const MatZ& m_in) {
  SmithNormalForm out;
  MatZ m = m_in;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  out.u = MatZ::Identity(rows, rows);
  out.v = MatZ::Identity(cols, cols);

  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // locate pivot
    Eigen::Index pr = -1, pc = -1;
    Integer best = 0;
    for (Eigen::Index r = t; r < rows; ++r)
      for (Eigen::Index c = t; c < cols; ++c) {
        if (m(r, c) == 0) continue;
        Integer a = abs(m(r, c));
        if (pr < 0 || a < best) {
          best = a;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;
    m.row(pr).swap(m.row(t));
    out.u.row(pr).swap(out.u.row(t));
    m.col(pc).swap(m.col(t));
    out.v.col(pc).swap(out.v.col(t));

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (Eigen::Index r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        Integer q = m(r, t) / m(t, t);
        if (q != 0) {
          m.row(r) -= q * m.row(t);
          out.u.row(r) -= q * out.u.row(t);
        }
        if (m(r, t) != 0) {
          m.row(r).swap(m.row(t));
          out.u.row(r).swap(out.u.row(t));
          dirty = true;
        }
      }
      for (Eigen::Index c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        Integer q = m(t, c) / m(t, t);
        if (q != 0) {
          m.col(c) -= q * m.col(t);
          out.v.col(c) -= q * out.v.col(t);
        }
        if (m(t, c) != 0) {
          m.col(c).swap(m.col(t));
          out.v.col(c).swap(out.v.col(t));
          dirty = true;
        }
      }
    }

    // enforce divisibility of the remaining block by the pivot
    bool fixed = false;
    for (Eigen::Index r = t + 1; r < rows && !fixed; ++r)
      for (Eigen::Index c = t + 1; c < cols && !fixed; ++c)
        if (m(r, c) % m(t, t) != 0) {
          m.row(t) += m.row(r);
          out.u.row(t) += out.u.row(r);
          fixed = true;
        }
    if (fixed) continue;  // redo elimination at the same t

    if (m(t, t) < 0) {
      m.row(t) = -m.row(t);
      out.u.row(t) = -out.u.row(t);
    }
    ++t;
  }
  for (Eigen::Index i = 0; i < t; ++i) out.factors.push_back(m(i, i));
  return out;
}

}  // namespace tcbound

#endif
