#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcbound/cohomology.hpp"

#include <random>

using namespace tcbound;

namespace {

MatQ rational(std::initializer_list<std::initializer_list<long>> rows) {
  MatQ m(rows.size(), rows.begin()->size());
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (long v : row) m(r, c++) = Rational(v);
    ++r;
  }
  return m;
}

MatZ integral(std::initializer_list<std::initializer_list<long>> rows) {
  MatZ m(rows.size(), rows.begin()->size());
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (long v : row) m(r, c++) = Integer(v);
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("rank/kernel/image basics over Q") {
  MatQ id = rational({{1, 0}, {0, 1}});
  auto rki = rank_kernel_image(id);
  CHECK(rki.rank == 2);
  CHECK(rki.kernel.cols() == 0);
  CHECK(rki.image.cols() == 2);

  MatQ m = rational({{1, 2, 3}, {2, 4, 6}});
  auto r2 = rank_kernel_image(m);
  CHECK(r2.rank == 1);
  CHECK(r2.rank + r2.kernel.cols() == m.cols());
  // kernel vectors annihilate the matrix
  Mat<Rational> prod = mat_mul(m, r2.kernel);
  for (Eigen::Index i = 0; i < prod.rows(); ++i)
    for (Eigen::Index j = 0; j < prod.cols(); ++j)
      CHECK(prod(i, j) == Rational(0));
}

TEST_CASE("rank over a prime field differs from Q") {
  Mat<Fp> m(1, 1);
  m(0, 0) = Fp(2, 2);
  auto rki = rank_kernel_image(m);
  CHECK(rki.rank == 0);
  CHECK(rki.kernel.cols() == 1);

  Mat<Fp> m5(2, 2);
  m5(0, 0) = Fp(2, 5);
  m5(0, 1) = Fp(1, 5);
  m5(1, 0) = Fp(4, 5);
  m5(1, 1) = Fp(2, 5);
  CHECK(rank_kernel_image(m5).rank == 1);
}

TEST_CASE("coboundary of the triangle circle has rank 2") {
  auto circle = build_complex({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto deltas = coboundary_matrices(circle, RationalCtx{});
  CHECK(rank_kernel_image(deltas[0]).rank == 2);
}

TEST_CASE("solve: canonical solutions and inconsistency") {
  MatQ a = rational({{1, 2}, {2, 4}});
  Vec<Rational> b(2);
  b << Rational(3), Rational(6);
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  Vec<Rational> ax = mat_vec(a, *x);
  CHECK(ax(0) == b(0));
  CHECK(ax(1) == b(1));

  b(1) = Rational(7);
  CHECK(!solve(a, b).has_value());
}

TEST_CASE("smith normal form: examples") {
  auto one = smith_normal_form(integral({{2}}));
  REQUIRE(one.factors.size() == 1);
  CHECK(one.factors[0] == 2);

  MatZ z = MatZ::Constant(2, 3, Integer(0));
  CHECK(smith_normal_form(z).factors.empty());

  auto s = smith_normal_form(integral({{2, 4}, {6, 10}}));
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0] == 2);
  CHECK(s.factors[1] % s.factors[0] == 0);
}

TEST_CASE("smith normal form: transforms reproduce the diagonal") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ent(-6, 6);
  for (int trial = 0; trial < 25; ++trial) {
    int r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    MatZ m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Integer(ent(rng));
    auto s = smith_normal_form(m);
    MatZ d = mat_mul(mat_mul(s.u, m), s.v);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) {
        Integer want = 0;
        if (i == j && i < static_cast<Eigen::Index>(s.factors.size()))
          want = s.factors[i];
        CHECK(d(i, j) == want);
      }
    for (std::size_t i = 1; i < s.factors.size(); ++i)
      CHECK(s.factors[i] % s.factors[i - 1] == 0);

    // rank over Q equals the number of invariant factors
    MatQ mq(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) mq(i, j) = Rational(m(i, j));
    CHECK(rank_kernel_image(mq).rank ==
          static_cast<Eigen::Index>(s.factors.size()));
  }
}

TEST_CASE("boundary of rp2 has exactly one invariant factor 2") {
  auto rp2 = build_complex({{"r1", "r2", "r3"}, {"r1", "r2", "r4"},
                            {"r1", "r3", "r5"}, {"r1", "r4", "r6"},
                            {"r1", "r5", "r6"}, {"r2", "r3", "r6"},
                            {"r2", "r4", "r5"}, {"r2", "r5", "r6"},
                            {"r3", "r4", "r5"}, {"r3", "r4", "r6"}});
  auto bds = boundary_matrices(rp2);
  auto s = smith_normal_form(bds[1]);  // 15 x 10 edge-boundary of triangles
  int twos = 0;
  for (const auto& f : s.factors) {
    CHECK((f == 1 || f == 2));
    if (f == 2) ++twos;
  }
  CHECK(twos == 1);
}

TEST_CASE("sparse rank agrees with dense rank") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> ent(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    int r = 2 + trial % 5, c = 2 + (trial / 5) % 5;
    MatQ m(r, c);
    std::vector<std::vector<std::pair<Eigen::Index, Rational>>> rows(r);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) {
        int v = ent(rng);
        m(i, j) = Rational(v);
        if (v != 0) rows[i].push_back({j, Rational(v)});
      }
    CHECK(sparse_rank(rows, c) == rank_kernel_image(m).rank);
  }
}

TEST_CASE("echelon span tracks independence incrementally") {
  EchelonSpan<Rational> span;
  Vec<Rational> v1(3), v2(3), v3(3);
  v1 << Rational(1), Rational(0), Rational(1);
  v2 << Rational(2), Rational(0), Rational(2);
  v3 << Rational(0), Rational(1), Rational(0);
  CHECK(span.add(v1));
  CHECK(!span.add(v2));
  CHECK(span.add(v3));
  CHECK(span.rank() == 2);
}

TEST_CASE("determinism: repeated reductions are identical") {
  MatQ m = rational({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}, {3, 5, 8}});
  auto a = rank_kernel_image(m);
  auto b = rank_kernel_image(m);
  CHECK(a.rank == b.rank);
  for (Eigen::Index i = 0; i < a.image.rows(); ++i)
    for (Eigen::Index j = 0; j < a.image.cols(); ++j)
      CHECK(a.image(i, j) == b.image(i, j));
}
