#pragma once

/**
 * @file quad.hpp
 * @brief Elements x + y*sqrt(D) of the ring Q[sqrt(D)] for a fixed rational D.
 *
 * sqrt(D) stays symbolic even when D happens to be a rational square, so all
 * arithmetic follows one code path. normalized() folds a square discriminant
 * back into the rational part, and equality compares normalized forms.
 */

#include <ostream>
#include <string>

#include "biperiodic/errors.hpp"
#include "biperiodic/rational.hpp"

namespace biperiodic {

class QuadElement {
 public:
  QuadElement(Rational rat, Rational irr, Rational disc)
      : rat_(std::move(rat)), irr_(std::move(irr)), disc_(std::move(disc)) {}

  static QuadElement from_rational(Rational value, Rational disc) {
    return {std::move(value), Rational(0), std::move(disc)};
  }

  /// The element 0 + 1*sqrt(D).
  static QuadElement root(Rational disc) { return {Rational(0), Rational(1), std::move(disc)}; }

  [[nodiscard]] const Rational& rat() const { return rat_; }
  [[nodiscard]] const Rational& irr() const { return irr_; }
  [[nodiscard]] const Rational& disc() const { return disc_; }

  [[nodiscard]] QuadElement conj() const { return {rat_, -irr_, disc_}; }

  /// x^2 - y^2 D, i.e. this * conj(this).
  [[nodiscard]] Rational norm() const { return rat_ * rat_ - irr_ * irr_ * disc_; }

  [[nodiscard]] QuadElement inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw DivisionByZero();
    const Rational inv = n.inverse();
    return {rat_ * inv, -(irr_ * inv), disc_};
  }

  /// Replaces (x, y, r^2) by (x + y*r, 0, r^2) when D is a rational square.
  [[nodiscard]] QuadElement normalized() const {
    if (irr_.is_zero()) return *this;
    if (auto r = disc_.exact_sqrt()) return {rat_ + irr_ * *r, Rational(0), disc_};
    return *this;
  }

  [[nodiscard]] bool is_rational() const { return normalized().irr_.is_zero(); }

  QuadElement operator-() const { return {-rat_, -irr_, disc_}; }

  QuadElement& operator+=(const QuadElement& rhs) {
    require_same_disc(rhs);
    rat_ += rhs.rat_;
    irr_ += rhs.irr_;
    return *this;
  }

  QuadElement& operator-=(const QuadElement& rhs) {
    require_same_disc(rhs);
    rat_ -= rhs.rat_;
    irr_ -= rhs.irr_;
    return *this;
  }

  QuadElement& operator*=(const QuadElement& rhs) {
    require_same_disc(rhs);
    Rational x = rat_ * rhs.rat_ + irr_ * rhs.irr_ * disc_;
    Rational y = rat_ * rhs.irr_ + rhs.rat_ * irr_;
    rat_ = std::move(x);
    irr_ = std::move(y);
    return *this;
  }

  QuadElement& operator*=(const Rational& rhs) {
    rat_ *= rhs;
    irr_ *= rhs;
    return *this;
  }

  QuadElement& operator/=(const QuadElement& rhs) { return *this *= rhs.inverse(); }

  friend QuadElement operator+(QuadElement lhs, const QuadElement& rhs) { return lhs += rhs; }
  friend QuadElement operator-(QuadElement lhs, const QuadElement& rhs) { return lhs -= rhs; }
  friend QuadElement operator*(QuadElement lhs, const QuadElement& rhs) { return lhs *= rhs; }
  friend QuadElement operator/(QuadElement lhs, const QuadElement& rhs) { return lhs /= rhs; }

  friend QuadElement operator*(const Rational& lhs, QuadElement rhs) { return rhs *= lhs; }
  friend QuadElement operator*(QuadElement lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QuadElement operator+(QuadElement lhs, const Rational& rhs) {
    lhs.rat_ += rhs;
    return lhs;
  }
  friend QuadElement operator-(QuadElement lhs, const Rational& rhs) {
    lhs.rat_ -= rhs;
    return lhs;
  }

  friend bool operator==(const QuadElement& lhs, const QuadElement& rhs) {
    if (lhs.disc_ != rhs.disc_) return false;
    const QuadElement l = lhs.normalized();
    const QuadElement r = rhs.normalized();
    return l.rat_ == r.rat_ && l.irr_ == r.irr_;
  }

  friend bool operator==(const QuadElement& lhs, const Rational& rhs) {
    const QuadElement l = lhs.normalized();
    return l.irr_.is_zero() && l.rat_ == rhs;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadElement& q) {
    return os << q.rat_ << " + " << q.irr_ << "*sqrt(" << q.disc_ << ")";
  }

 private:
  void require_same_disc(const QuadElement& rhs) const {
    if (disc_ != rhs.disc_) throw MismatchedDiscriminant();
  }

  Rational rat_;
  Rational irr_;
  Rational disc_;
};

inline QuadElement one_like(const QuadElement& q) { return QuadElement::from_rational(Rational(1), q.disc()); }
inline QuadElement zero_like(const QuadElement& q) { return QuadElement::from_rational(Rational(0), q.disc()); }
inline bool is_zero(const QuadElement& q) { return q == Rational(0); }

/// Binary exponentiation; pow(x, 0) is 1 + 0*sqrt(D).
inline QuadElement pow(QuadElement base, unsigned long exponent) {
  QuadElement result = one_like(base);
  while (exponent != 0) {
    if ((exponent & 1UL) != 0) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

}  // namespace biperiodic
