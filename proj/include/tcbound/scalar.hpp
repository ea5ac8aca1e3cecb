#ifndef TCBOUND_SCALAR_HPP
#define TCBOUND_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcbound {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of a prime field F_p with the modulus carried per value.
/// A value with p == 0 is an unreduced integer literal (as produced by
/// Scalar(0)/Scalar(1) in generic code); it picks up the modulus of the
/// other operand on the first binary operation.
struct Fp {
  std::int64_t v = 0;
  std::int64_t p = 0;

  Fp() = default;
  Fp(std::int64_t x) : v(x) {}
  Fp(std::int64_t x, std::int64_t mod) : v(x), p(mod) { reduce(); }

  void reduce() {
    if (p > 0) {
      v %= p;
      if (v < 0) v += p;
    }
  }

  static std::int64_t join_mod(const Fp& a, const Fp& b) {
    if (a.p != 0 && b.p != 0 && a.p != b.p)
      throw std::invalid_argument("Fp: mixed moduli " + std::to_string(a.p) +
                                  " and " + std::to_string(b.p));
    return a.p != 0 ? a.p : b.p;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    return Fp(a.v + b.v, join_mod(a, b));
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    return Fp(a.v - b.v, join_mod(a, b));
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    return Fp(a.v * b.v, join_mod(a, b));
  }
  Fp operator-() const { return Fp(-v, p); }

  friend Fp operator/(const Fp& a, const Fp& b) {
    std::int64_t m = join_mod(a, b);
    if (m == 0) {
      if (b.v == 1) return a;
      if (b.v == -1) return -a;
      throw std::domain_error("Fp: division without a modulus");
    }
    Fp bb(b.v, m);
    if (bb.v == 0) throw std::domain_error("Fp: division by zero");
    return Fp(a.v, m) * bb.inverse();
  }

  Fp inverse() const {
    // extended Euclid
    std::int64_t a = v % p, b = p, x0 = 1, x1 = 0;
    if (a < 0) a += p;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    if (a != 1) throw std::domain_error("Fp: non-invertible element");
    return Fp(x0, p);
  }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::int64_t m = join_mod(a, b);
    if (m == 0) return a.v == b.v;
    return Fp(a.v, m).v == Fp(b.v, m).v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Coefficient field: the rationals or a prime field F_p.
struct FieldSpec {
  std::int64_t p = 0;  // 0 means Q

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::int64_t p) {
    if (!is_prime(p))
      throw std::invalid_argument("FieldSpec: " + std::to_string(p) +
                                  " is not prime");
    return FieldSpec{p};
  }

  bool is_rational() const { return p == 0; }
  std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p == b.p;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) {
    return a.p != b.p;
  }
};

/// Scalar factories passed through the cohomology layer, so that F_p values
/// are born with the right modulus.
struct RationalCtx {
  using Scalar = Rational;
  Scalar from_int(std::int64_t x) const { return Rational(x); }
  FieldSpec field() const { return FieldSpec::rationals(); }
};

struct FpCtx {
  using Scalar = Fp;
  std::int64_t p;
  Scalar from_int(std::int64_t x) const { return Fp(x, p); }
  FieldSpec field() const { return FieldSpec::prime(p); }
};

/// Runtime field dispatch onto the two scalar lanes.
template <class Fn>
decltype(auto) with_field(const FieldSpec& f, Fn&& fn) {
  if (f.is_rational()) return fn(RationalCtx{});
  return fn(FpCtx{f.p});
}

inline std::string to_string(const Rational& x) {
  return x.str();
}
inline std::string to_string(const Fp& x) {
  return std::to_string(x.p != 0 ? Fp(x.v, x.p).v : x.v);
}

}  // namespace tcbound

namespace Eigen {
template <>
struct NumTraits<tcbound::Fp> {
  using Real = tcbound::Fp;
  using NonInteger = tcbound::Fp;
  using Literal = tcbound::Fp;
  using Nested = tcbound::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return tcbound::Fp(0); }
  static inline Real dummy_precision() { return tcbound::Fp(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
