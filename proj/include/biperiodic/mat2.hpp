#pragma once

// 2x2 matrices over an exact scalar ring (Rational or QuadElement).

#include <concepts>
#include <ostream>
#include <utility>

#include "biperiodic/quad.hpp"
#include "biperiodic/rational.hpp"

namespace biperiodic {

template <class S>
concept ExactScalar = requires(const S& x, const S& y) {
  { x + y } -> std::convertible_to<S>;
  { x - y } -> std::convertible_to<S>;
  { x * y } -> std::convertible_to<S>;
  { -x } -> std::convertible_to<S>;
  { one_like(x) } -> std::convertible_to<S>;
  { zero_like(x) } -> std::convertible_to<S>;
  { x == y } -> std::convertible_to<bool>;
};

/// Row-major [[e11, e12], [e21, e22]].
template <ExactScalar S>
struct Mat2 {
  S e11, e12, e21, e22;

  /// Identity matrix whose scalars live in the same ring as `like`.
  static Mat2 identity(const S& like) {
    return {one_like(like), zero_like(like), zero_like(like), one_like(like)};
  }

  [[nodiscard]] S det() const { return e11 * e22 - e12 * e21; }
  [[nodiscard]] S trace() const { return e11 + e22; }

  template <class F>
  [[nodiscard]] auto map(F&& f) const -> Mat2<decltype(f(e11))> {
    return {f(e11), f(e12), f(e21), f(e22)};
  }

  Mat2& operator+=(const Mat2& rhs) {
    e11 = e11 + rhs.e11;
    e12 = e12 + rhs.e12;
    e21 = e21 + rhs.e21;
    e22 = e22 + rhs.e22;
    return *this;
  }

  Mat2& operator-=(const Mat2& rhs) {
    e11 = e11 - rhs.e11;
    e12 = e12 - rhs.e12;
    e21 = e21 - rhs.e21;
    e22 = e22 - rhs.e22;
    return *this;
  }

  Mat2 operator-() const { return {-e11, -e12, -e21, -e22}; }

  friend Mat2 operator+(Mat2 lhs, const Mat2& rhs) { return lhs += rhs; }
  friend Mat2 operator-(Mat2 lhs, const Mat2& rhs) { return lhs -= rhs; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
            x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
  }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.e11 == y.e11 && x.e12 == y.e12 && x.e21 == y.e21 && x.e22 == y.e22;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.e11 << ", " << m.e12 << "], [" << m.e21 << ", " << m.e22 << "]]";
  }
};

/// Scalar multiple c*A, for any c whose product with S stays in S
/// (e.g. a Rational times a QuadElement matrix).
template <class C, ExactScalar S>
  requires requires(const C& c, const S& s) {
    { c * s } -> std::convertible_to<S>;
  }
Mat2<S> operator*(const C& c, const Mat2<S>& m) {
  return {c * m.e11, c * m.e12, c * m.e21, c * m.e22};
}

template <ExactScalar S>
S det(const Mat2<S>& m) {
  return m.det();
}

/// Binary exponentiation; pow(A, 0) is the identity.
template <ExactScalar S>
Mat2<S> pow(Mat2<S> base, unsigned long exponent) {
  Mat2<S> result = Mat2<S>::identity(base.e11);
  while (exponent != 0) {
    if ((exponent & 1UL) != 0) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

template <ExactScalar S>
bool is_zero(const Mat2<S>& m) {
  return is_zero(m.e11) && is_zero(m.e12) && is_zero(m.e21) && is_zero(m.e22);
}

using RatMat = Mat2<Rational>;
using QuadMat = Mat2<QuadElement>;

/// Embeds a rational matrix into Q[sqrt(disc)].
inline QuadMat lift(const RatMat& m, const Rational& disc) {
  return m.map([&](const Rational& r) { return QuadElement::from_rational(r, disc); });
}

}  // namespace biperiodic
