#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Every value is kept in canonical form: the denominator is positive, the
 * numerator and denominator are coprime, and zero is stored as 0/1. Because
 * canonicalization runs after every operation, structural equality is the
 * same as numerical equality.
 */

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "biperiodic/errors.hpp"

namespace biperiodic {

class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral T>
  Rational(T value) : num_(static_cast<long>(value)), den_(1) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(mpz_class value) : num_(std::move(value)), den_(1) {}

  Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  template <std::integral T, std::integral U>
  Rational(T num, U den) : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

  /// Parses "p/q", "p", with an optional leading sign on p. Whitespace is not
  /// accepted. Throws std::invalid_argument on malformed text and
  /// DivisionByZero for a zero denominator.
  static Rational parse(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
      if (s.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      }
      return true;
    };
    auto to_mpz = [](std::string_view s) {
      if (!s.empty() && s[0] == '+') s.remove_prefix(1);
      return mpz_class(std::string(s), 10);
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      if (!valid_int(text, true)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
      return Rational(to_mpz(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    return {to_mpz(num), to_mpz(den)};
  }

  [[nodiscard]] const mpz_class& num() const { return num_; }
  [[nodiscard]] const mpz_class& den() const { return den_; }

  [[nodiscard]] bool is_zero() const { return sgn(num_) == 0; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }
  [[nodiscard]] int sign() const { return sgn(num_); }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return {den_, num_};
  }

  /// Integer power; negative exponents invert first.
  [[nodiscard]] Rational pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Rational out;
    mpz_pow_ui(out.num_.get_mpz_t(), num_.get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.den_.get_mpz_t(), den_.get_mpz_t(), static_cast<unsigned long>(exponent));
    return out;  // coprime bases stay coprime under powers
  }

  /// The exact rational square root, if one exists.
  [[nodiscard]] std::optional<Rational> exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (mpz_perfect_square_p(num_.get_mpz_t()) == 0 || mpz_perfect_square_p(den_.get_mpz_t()) == 0) {
      return std::nullopt;
    }
    return Rational(mpz_class(sqrt(num_)), mpz_class(sqrt(den_)));
  }

  /// "p/q", or "p" when the value is an integer.
  [[nodiscard]] std::string to_string() const {
    if (is_integer()) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
  }

  Rational operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
  }

  Rational& operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
      num_ += rhs.num_;
    } else {
      num_ = num_ * rhs.den_ + rhs.num_ * den_;
      den_ *= rhs.den_;
    }
    canonicalize();
    return *this;
  }

  Rational& operator-=(const Rational& rhs) {
    if (den_ == rhs.den_) {
      num_ -= rhs.num_;
    } else {
      num_ = num_ * rhs.den_ - rhs.num_ * den_;
      den_ *= rhs.den_;
    }
    canonicalize();
    return *this;
  }

  Rational& operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    canonicalize();
    return *this;
  }

  Rational& operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    // rhs may alias *this
    mpz_class rnum = rhs.num_;
    num_ *= rhs.den_;
    den_ *= rnum;
    canonicalize();
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(mpz_class(lhs.num_ * rhs.den_), mpz_class(rhs.num_ * lhs.den_));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  void canonicalize() {
    if (sgn(den_) == 0) throw DivisionByZero();
    if (sgn(num_) == 0) {
      den_ = 1;
      return;
    }
    if (sgn(den_) < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
      mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  mpz_class num_;
  mpz_class den_;
};

inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace biperiodic
