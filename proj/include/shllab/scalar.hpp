// Scalar abstraction shared by every evaluator in the library.
//
// Heavy math is templated on the scalar type T, which is either `Rat`
// (exact) or `Cplx` (complex double for quadrature work).  `scalar_traits`
// records which regime a type belongs to; `from_rat` embeds exact parameters
// into either regime.  `Scalar` is the small tagged runtime value used at the
// CLI/report boundary: it refuses mixed-mode arithmetic with a loud error
// instead of silently coercing.
#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <variant>

#include "shllab/rational.hpp"

namespace shllab {

using Cplx = std::complex<double>;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool is_exact = true;
  static const char* name() { return "rational"; }
};

template <>
struct scalar_traits<Cplx> {
  static constexpr bool is_exact = false;
  static const char* name() { return "complex"; }
};

template <class T>
T from_rat(const Rat& r);

template <>
inline Rat from_rat<Rat>(const Rat& r) {
  return r;
}

template <>
inline Cplx from_rat<Cplx>(const Rat& r) {
  return Cplx(rat_double(r), 0.0);
}

// |x| as a double, for pivot selection and error reporting.
inline double abs_double(const Rat& x) { return std::abs(rat_double(x)); }
inline double abs_double(const Cplx& x) { return std::abs(x); }

// x^e for integer e of either sign (e < 0 requires invertible x).
template <class T>
T spow(const T& base, long e) {
  if (e == 0) return T(1);
  T b = base;
  if (e < 0) {
    if (abs_double(b) == 0.0 && scalar_traits<T>::is_exact)
      throw std::domain_error("spow: negative power of zero");
    b = T(1) / b;
    e = -e;
  }
  T acc(1);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

// Tagged runtime scalar for configuration and report plumbing.  Exact values
// serialize as "p/q" strings, floating values as [re, im] pairs.
class Scalar {
 public:
  Scalar() : value_(Rat(0)) {}
  explicit Scalar(Rat r) : value_(std::move(r)) {}
  explicit Scalar(Cplx c) : value_(c) {}

  bool exact() const { return std::holds_alternative<Rat>(value_); }
  const Rat& as_rat() const {
    if (!exact()) throw std::domain_error("Scalar: floating value read as exact");
    return std::get<Rat>(value_);
  }
  Cplx as_cplx() const {
    return exact() ? from_rat<Cplx>(std::get<Rat>(value_)) : std::get<Cplx>(value_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return a.combine(b, [](const auto& x, const auto& y) { return x + y; });
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return a.combine(b, [](const auto& x, const auto& y) { return x - y; });
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return a.combine(b, [](const auto& x, const auto& y) { return x * y; });
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a.combine(b, [](const auto& x, const auto& y) { return x / y; });
  }

  std::string str() const {
    if (exact()) return rat_str(as_rat());
    Cplx c = as_cplx();
    return "[" + std::to_string(c.real()) + "," + std::to_string(c.imag()) + "]";
  }

 private:
  template <class Op>
  Scalar combine(const Scalar& other, Op op) const {
    if (exact() != other.exact())
      throw std::invalid_argument(
          "Scalar: mixed exact/floating arithmetic is not defined; convert "
          "explicitly first");
    if (exact()) return Scalar(op(as_rat(), other.as_rat()));
    return Scalar(op(as_cplx(), other.as_cplx()));
  }

  std::variant<Rat, Cplx> value_;
};

}  // namespace shllab
