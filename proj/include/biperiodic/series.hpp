#pragma once

/**
 * @file series.hpp
 * @brief Formal series with matrix coefficients and the Lucas-matrix
 *        summation identities built on them.
 *
 * TruncatedSeries<C> is a power series kept modulo x^N. LaurentPoly<C> is a
 * finite sum of C-coefficients times x^k, k possibly negative; identities of
 * rational functions are checked on it by clearing denominators and
 * comparing coefficient maps, which is a complete check rather than a
 * sampled one.
 *
 * All identities share the denominator 1 - (ab+2)x^2 + x^4.
 */

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "biperiodic/mat2.hpp"
#include "biperiodic/matrix_seq.hpp"
#include "biperiodic/sequences.hpp"

namespace biperiodic {

/// Scalar polynomial, coefficient k of x^k at position k.
using Poly = std::vector<Rational>;

template <class C>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order, C{}) {}

  TruncatedSeries(std::vector<C> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) { coeffs_.resize(order, C{}); }

  [[nodiscard]] std::size_t order() const { return coeffs_.size(); }
  [[nodiscard]] const C& operator[](std::size_t k) const { return coeffs_.at(k); }
  [[nodiscard]] const std::vector<C>& coeffs() const { return coeffs_; }

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs.require_same_order(rhs);
    for (std::size_t k = 0; k < lhs.order(); ++k) lhs.coeffs_[k] = lhs.coeffs_[k] + rhs.coeffs_[k];
    return lhs;
  }

  /// Cauchy product modulo x^N; coefficient k only reads coefficients 0..k.
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    lhs.require_same_order(rhs);
    TruncatedSeries out(lhs.order());
    for (std::size_t k = 0; k < out.order(); ++k) {
      C acc{};
      for (std::size_t i = 0; i <= k; ++i) acc = acc + lhs.coeffs_[i] * rhs.coeffs_[k - i];
      out.coeffs_[k] = std::move(acc);
    }
    return out;
  }

  /// this / den, where den is a scalar polynomial with invertible constant term.
  [[nodiscard]] TruncatedSeries divided_by(const Poly& den) const {
    if (den.empty() || den.front().is_zero()) throw DivisionByZero();
    const Rational lead_inv = den.front().inverse();
    TruncatedSeries out(order());
    for (std::size_t k = 0; k < order(); ++k) {
      C acc = coeffs_[k];
      for (std::size_t j = 1; j < den.size() && j <= k; ++j) {
        if (!den[j].is_zero()) acc = acc - den[j] * out.coeffs_[k - j];
      }
      out.coeffs_[k] = lead_inv * acc;
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) { return x.coeffs_ == y.coeffs_; }

 private:
  void require_same_order(const TruncatedSeries& rhs) const {
    if (order() != rhs.order()) throw std::invalid_argument("truncated series orders differ");
  }

  std::vector<C> coeffs_;
};

template <class C>
class LaurentPoly {
 public:
  LaurentPoly() = default;

  /// c * x^exponent
  static LaurentPoly monomial(long exponent, C c) {
    LaurentPoly p;
    p.add_term(exponent, std::move(c));
    return p;
  }

  static LaurentPoly from_poly(const std::vector<C>& coeffs, long shift = 0) {
    LaurentPoly p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(static_cast<long>(k) + shift, coeffs[k]);
    return p;
  }

  [[nodiscard]] const std::map<long, C>& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }

  [[nodiscard]] C coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(long exponent, const C& c) {
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) it->second = it->second + c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  /// Multiplies by x^k.
  [[nodiscard]] LaurentPoly shifted(long k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

 private:
  std::map<long, C> terms_;  // no zero coefficients stored
};

/// Product of Laurent polynomials whose coefficient product A*B lands in R
/// (scalar * matrix, matrix * matrix, ...).
template <class A, class B>
auto operator*(const LaurentPoly<A>& x, const LaurentPoly<B>& y) -> LaurentPoly<decltype(A{} * B{})> {
  using R = decltype(A{} * B{});
  LaurentPoly<R> out;
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) out.add_term(ex + ey, cx * cy);
  }
  return out;
}

/// Which version of a summation identity to evaluate. `original` is the
/// formula as usually quoted; `corrected` carries the brute-force-derived
/// fix (see the notes on each function).
enum class Form { original, corrected };

inline const char* to_string(Form f) { return f == Form::original ? "original" : "corrected"; }

/// 1 - (ab+2)x^2 + x^4
inline Poly lucas_denominator(const SeqParams& p) {
  return {Rational(1), Rational(0), -(p.ab() + Rational(2)), Rational(0), Rational(1)};
}

namespace detail {

/// Matrix of cubic polynomials [[P, Q], [(a/b)Q, R]] as a list of matrix coefficients.
inline std::vector<RatMat> matrix_poly(const SeqParams& p, const Poly& top_left, const Poly& top_right,
                                       const Poly& bottom_right) {
  const Rational ratio = p.a() / p.b();
  std::vector<RatMat> out;
  for (std::size_t k = 0; k < top_left.size(); ++k) {
    out.push_back(RatMat{top_left[k], top_right[k], ratio * top_right[k], bottom_right[k]});
  }
  return out;
}

}  // namespace detail

/// Sum_{i>=0} L_i x^i = [[A2, B2], [(a/b)B2, C2]] / (1 - (ab+2)x^2 + x^4), expanded to `order` terms:
///   A2 = a + (a^2 + 2a/b)x + a x^2 - (2a/b)x^3
///   B2 = 2 + a x - (ab+2)x^2 + a x^3
///   C2 = -a + (2a/b)x + (3+ab)a x^2 - (a^2 + 2a/b)x^3
inline TruncatedSeries<RatMat> lucas_generating_series(const SeqParams& p, std::size_t order) {
  if (order == 0) throw std::invalid_argument("order must be >= 1");
  const Rational& a = p.a();
  const Rational two_a_b = Rational(2) * a / p.b();
  const Poly a2 = {a, a * a + two_a_b, a, -two_a_b};
  const Poly b2 = {Rational(2), a, -(p.ab() + Rational(2)), a};
  const Poly c2 = {-a, two_a_b, (Rational(3) + p.ab()) * a, -(a * a + two_a_b)};
  return TruncatedSeries<RatMat>(detail::matrix_poly(p, a2, b2, c2), order).divided_by(lucas_denominator(p));
}

inline bool verify_generating_function(const SeqParams& p, std::size_t order) {
  const auto series = lucas_generating_series(p, order);
  const auto terms = lucas_matrix_terms(p, static_cast<long>(order));
  for (std::size_t k = 0; k < order; ++k) {
    if (!(series[k] == terms[k])) return false;
  }
  return true;
}

/// Sum_{k>=0} L_k x^{-k} = x / (1 - (ab+2)x^2 + x^4) * [[D, E], [(a/b)E, F]], as a series in t = 1/x.
///
/// original:
///   D = a x^3 + (a^2 + 2a/b)x^2 - a x + 2a/b
///   E = 2x^3 + a x^2 + (ab+2)x + a
///   F = -a x^3 + (2a/b)x^2 - (a^2 b + 3a)x + a^2 + 2a/b
/// corrected (the x^1 coefficients change sign, and so do the x^0 ones of D, F):
///   D = a x^3 + (a^2 + 2a/b)x^2 + a x - 2a/b
///   E = 2x^3 + a x^2 - (ab+2)x + a
///   F = -a x^3 + (2a/b)x^2 + (a^2 b + 3a)x - a^2 - 2a/b
///
/// With x = 1/t, x*P(x) / den(x) = rev4(x*P) / rev4(den), where rev4 reverses
/// coefficients at degree 4; den is palindromic, so only the numerator moves.
inline TruncatedSeries<RatMat> inverse_power_series(const SeqParams& p, std::size_t order, Form form) {
  if (order == 0) throw std::invalid_argument("order must be >= 1");
  const Rational& a = p.a();
  const Rational two_a_b = Rational(2) * a / p.b();
  const Rational sign = form == Form::original ? Rational(1) : Rational(-1);
  // ascending coefficients x^0..x^3
  const Poly d = {sign * two_a_b, sign * -a, a * a + two_a_b, a};
  const Poly e = {a, sign * (p.ab() + Rational(2)), a, Rational(2)};
  const Poly f = {sign * (a * a + two_a_b), sign * -(a * a * p.b() + Rational(3) * a), two_a_b, -a};
  // x * (c0 + c1 x + c2 x^2 + c3 x^3) reversed at degree 4 -> c3 + c2 t + c1 t^2 + c0 t^3
  auto reversed = [](const Poly& c) { return Poly{c[3], c[2], c[1], c[0]}; };
  const Poly den = lucas_denominator(p);
  const Poly den_rev(den.rbegin(), den.rend());
  return TruncatedSeries<RatMat>(detail::matrix_poly(p, reversed(d), reversed(e), reversed(f)), order)
      .divided_by(den_rev);
}

inline bool verify_infinite_inverse_sum(const SeqParams& p, std::size_t order, Form form = Form::corrected) {
  const auto series = inverse_power_series(p, order, form);
  const auto terms = lucas_matrix_terms(p, static_cast<long>(order));
  for (std::size_t k = 0; k < order; ++k) {
    if (!(series[k] == terms[k])) return false;
  }
  return true;
}

/// Both sides of
///   Sum_{k=0}^{n} L_k x^{-k} = 1/(1 - (ab+2)x^2 + x^4) * {
///       L_{n-1}/x^{n-1} - L_{n+1}/x^{n-3} + L_n/x^n - L_{n+2}/x^{n+2}
///     + x^4 L_0 + x^3 L_1 - x^2[(ab+1)L_0 - bL_1] - x(L_1 - aL_0) }
/// after multiplying through by (1 - (ab+2)x^2 + x^4). The corrected form
/// replaces L_{n+2}/x^{n+2} with L_{n+2}/x^{n-2}. L_{-1} comes from the
/// closed form.
inline std::pair<LaurentPoly<RatMat>, LaurentPoly<RatMat>> finite_inverse_sum_sides(const SequenceTable& t, long n,
                                                                                   Form form) {
  detail::require_nonnegative(n);
  const SeqParams& p = t.params();
  auto lucas_at = [&](long k) { return lucas_matrix_closed(t, k); };
  using LP = LaurentPoly<RatMat>;

  LP sum;
  for (long k = 0; k <= n; ++k) sum.add_term(-k, lucas_at(k));
  const LaurentPoly<Rational> den = LaurentPoly<Rational>::from_poly(lucas_denominator(p));
  LP lhs = den * sum;

  const RatMat l0 = lucas_at(0);
  const RatMat l1 = lucas_at(1);
  LP rhs;
  rhs.add_term(-(n - 1), lucas_at(n - 1));
  rhs.add_term(-(n - 3), -lucas_at(n + 1));
  rhs.add_term(-n, lucas_at(n));
  rhs.add_term(form == Form::original ? -(n + 2) : -(n - 2), -lucas_at(n + 2));
  rhs.add_term(4, l0);
  rhs.add_term(3, l1);
  rhs.add_term(2, -((p.ab() + Rational(1)) * l0 - p.b() * l1));
  rhs.add_term(1, -(l1 - p.a() * l0));
  return {std::move(lhs), std::move(rhs)};
}

inline bool verify_finite_inverse_sum(const SequenceTable& t, long n, Form form = Form::corrected) {
  auto [lhs, rhs] = finite_inverse_sum_sides(t, n, form);
  return lhs == rhs;
}

inline bool verify_finite_inverse_sum(const SeqParams& p, long n, Form form = Form::corrected) {
  return verify_finite_inverse_sum(SequenceTable(p), n, form);
}

/// Sum_{k=0}^{n-1} L_k = (1/ab) { b^e(n) a^{1-e(n)} L_n + b^{1-e(n)} a^e(n) L_{n-1} - bL_1 + abL_0 - aL_0 }
inline RatMat lucas_partial_sum(const SequenceTable& t, long n) {
  if (n < 1) throw std::out_of_range("partial sum needs n >= 1");
  const SeqParams& p = t.params();
  const int e = eps(n);
  const RatMat l0 = lucas_matrix_closed(t, 0);
  const RatMat l1 = lucas_matrix_closed(t, 1);
  const RatMat inner = p.b().pow(e) * p.a().pow(1 - e) * lucas_matrix_closed(t, n) +
                       p.b().pow(1 - e) * p.a().pow(e) * lucas_matrix_closed(t, n - 1) - p.b() * l1 + p.ab() * l0 -
                       p.a() * l0;
  return p.ab().inverse() * inner;
}

inline RatMat lucas_partial_sum(const SeqParams& p, long n) { return lucas_partial_sum(SequenceTable(p), n); }

/// Sum_{k=0}^{n-1} L_k by adding recurrence terms.
inline RatMat lucas_direct_sum(const SeqParams& p, long n) {
  RatMat acc{};
  for (const RatMat& m : lucas_matrix_terms(p, n)) acc += m;
  return acc;
}

}  // namespace biperiodic
