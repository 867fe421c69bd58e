#pragma once

/**
 * @file matrix_seq.hpp
 * @brief Bi-periodic Fibonacci (F_n) and Lucas (L_n) matrix sequences.
 *
 * Each sequence is available three independent ways:
 *  - recurrence: iterate from the two initial matrices;
 *  - closed form: assemble the matrix entrywise from the scalar q_n / l_n;
 *  - Binet: evaluate powers of alpha, beta in Q[sqrt(D)] and fold back to Q.
 *
 * The Fibonacci matrices follow the parity of q_n (coefficient a at even n,
 * b at odd n); the Lucas matrices follow l_n (a at odd n, b at even n).
 *
 *   F_n = [[(b/a)^e(n) q_{n+1}, (b/a) q_n], [q_n, (b/a)^e(n) q_{n-1}]]
 *   L_n = [[(a/b)^e(n) l_{n+1}, l_n], [(a/b) l_n, (a/b)^e(n) l_{n-1}]]
 */

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biperiodic/errors.hpp"
#include "biperiodic/mat2.hpp"
#include "biperiodic/sequences.hpp"

namespace biperiodic {

enum class Source { Recurrence, ClosedForm, Binet };

inline const char* to_string(Source s) {
  switch (s) {
    case Source::Recurrence: return "rec";
    case Source::ClosedForm: return "closed";
    case Source::Binet: return "binet";
  }
  return "?";
}

struct MatSeqTerm {
  long index;
  RatMat matrix;
  Source source;
};

namespace detail {

inline void require_nonnegative(long n) {
  if (n < 0) throw std::out_of_range("index must be nonnegative, got " + std::to_string(n));
}

inline RatMat scalar_identity() { return RatMat::identity(Rational(1)); }

/// Folds a Q[sqrt(D)] matrix back into Q, failing loudly on any residue.
inline RatMat rationalize(const QuadMat& m) {
  return m.map([](const QuadElement& q) {
    const QuadElement n = q.normalized();
    if (!n.irr().is_zero()) {
      throw IrrationalResidue("Binet evaluation left irrational part " + n.irr().to_string() + "*sqrt(" +
                              n.disc().to_string() + ")");
    }
    return n.rat();
  });
}

inline void require_binet(const SeqParams& p) {
  if (!p.binet_allowed()) throw BinetDegenerate();
}

}  // namespace detail

/// F_0 = I and F_1 = [[b, b/a], [1, 0]], read off the closed form at n = 0, 1.
inline std::pair<RatMat, RatMat> fib_matrix_initial(const SeqParams& p) {
  return {detail::scalar_identity(), RatMat{p.b(), p.b() / p.a(), Rational(1), Rational(0)}};
}

/// L_0 = [[a, 2], [2a/b, -a]] and L_1 = [[a^2 + 2a/b, a], [a^2/b, 2a/b]].
inline std::pair<RatMat, RatMat> lucas_matrix_initial(const SeqParams& p) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational two_a_b = Rational(2) * a / b;
  return {RatMat{a, Rational(2), two_a_b, -a}, RatMat{a * a + two_a_b, a, a * a / b, two_a_b}};
}

/// F_0 .. F_{count-1} by recurrence.
inline std::vector<RatMat> fib_matrix_terms(const SeqParams& p, long count) {
  std::vector<RatMat> out;
  if (count <= 0) return out;
  auto [f0, f1] = fib_matrix_initial(p);
  out.reserve(static_cast<std::size_t>(count));
  out.push_back(std::move(f0));
  if (count > 1) out.push_back(std::move(f1));
  for (long k = 2; k < count; ++k) out.push_back(detail::fib_coeff(p, k) * out[k - 1] + out[k - 2]);
  return out;
}

/// L_0 .. L_{count-1} by recurrence.
inline std::vector<RatMat> lucas_matrix_terms(const SeqParams& p, long count) {
  std::vector<RatMat> out;
  if (count <= 0) return out;
  auto [l0, l1] = lucas_matrix_initial(p);
  out.reserve(static_cast<std::size_t>(count));
  out.push_back(std::move(l0));
  if (count > 1) out.push_back(std::move(l1));
  for (long k = 2; k < count; ++k) out.push_back(detail::lucas_coeff(p, k) * out[k - 1] + out[k - 2]);
  return out;
}

inline RatMat fib_matrix_rec(const SeqParams& p, long n) {
  detail::require_nonnegative(n);
  return fib_matrix_terms(p, n + 1).back();
}

inline RatMat lucas_matrix_rec(const SeqParams& p, long n) {
  detail::require_nonnegative(n);
  return lucas_matrix_terms(p, n + 1).back();
}

/// Closed form; valid for every integer n, negative ones included.
inline RatMat fib_matrix_closed(const SequenceTable& t, long n) {
  const SeqParams& p = t.params();
  const Rational ratio = p.b() / p.a();
  const Rational s = eps(n) != 0 ? ratio : Rational(1);
  const Rational qn = t.fibonacci(n);
  return {s * t.fibonacci(n + 1), ratio * qn, qn, s * t.fibonacci(n - 1)};
}

inline RatMat lucas_matrix_closed(const SequenceTable& t, long n) {
  const SeqParams& p = t.params();
  const Rational ratio = p.a() / p.b();
  const Rational s = eps(n) != 0 ? ratio : Rational(1);
  const Rational ln = t.lucas(n);
  return {s * t.lucas(n + 1), ln, ratio * ln, s * t.lucas(n - 1)};
}

inline RatMat fib_matrix_closed(const SeqParams& p, long n) { return fib_matrix_closed(SequenceTable(p), n); }
inline RatMat lucas_matrix_closed(const SeqParams& p, long n) { return lucas_matrix_closed(SequenceTable(p), n); }

/// Binet form of F_n, split by parity:
///   n even: [ (aF_1 + (alpha - ab)F_0) alpha^n - (aF_1 + (beta - ab)F_0) beta^n ] / ((ab)^{n/2} (alpha - beta))
///   n odd:  [ (alpha F_1 + bF_0) alpha^{n-1} - (beta F_1 + bF_0) beta^{n-1} ] / ((ab)^{(n-1)/2} (alpha - beta))
inline RatMat fib_matrix_binet(const SeqParams& p, long n) {
  detail::require_nonnegative(n);
  detail::require_binet(p);
  const Rational& d = p.disc();
  const QuadElement alpha = p.alpha();
  const QuadElement beta = p.beta();
  auto [f0r, f1r] = fib_matrix_initial(p);
  const QuadMat f0 = lift(f0r, d);
  const QuadMat f1 = lift(f1r, d);

  const long h = floor_half(n);
  const QuadElement scale = (p.ab().pow(h) * (alpha - beta)).inverse();

  QuadMat plus = f0, minus = f0;
  unsigned long power = 0;
  if (eps(n) == 0) {
    plus = p.a() * f1 + (alpha - p.ab()) * f0;
    minus = p.a() * f1 + (beta - p.ab()) * f0;
    power = static_cast<unsigned long>(n);
  } else {
    plus = alpha * f1 + p.b() * f0;
    minus = beta * f1 + p.b() * f0;
    power = static_cast<unsigned long>(n - 1);
  }
  const QuadMat numerator = pow(alpha, power) * plus - pow(beta, power) * minus;
  return detail::rationalize(scale * numerator);
}

/// Binet form of F_n as a single expression:
///   F_n = A_1 (alpha^n - beta^n) + B_1 (alpha^{2h+2} - beta^{2h+2}),  h = floor(n/2)
///   A_1 = M / ((ab)^h (alpha - beta)),  M = F_1 - bF_0 (n odd), aF_1 - (1 + ab)F_0 (n even)
///   B_1 = b^e(n) F_0 / ((ab)^{h+1} (alpha - beta))
inline RatMat fib_matrix_binet_unified(const SeqParams& p, long n) {
  detail::require_nonnegative(n);
  detail::require_binet(p);
  const Rational& d = p.disc();
  const QuadElement alpha = p.alpha();
  const QuadElement beta = p.beta();
  auto [f0, f1] = fib_matrix_initial(p);
  const long h = floor_half(n);
  const QuadElement diff = alpha - beta;

  const RatMat m = eps(n) != 0 ? f1 - p.b() * f0 : p.a() * f1 - (Rational(1) + p.ab()) * f0;
  const QuadMat a1 = (p.ab().pow(h) * diff).inverse() * lift(m, d);
  const QuadMat b1 = (p.ab().pow(h + 1) * diff).inverse() * lift(p.b().pow(eps(n)) * f0, d);

  const auto un = static_cast<unsigned long>(n);
  const auto ue = static_cast<unsigned long>(2 * h + 2);
  const QuadMat value = (pow(alpha, un) - pow(beta, un)) * a1 + (pow(alpha, ue) - pow(beta, ue)) * b1;
  return detail::rationalize(value);
}

/// L_n = A alpha^n - B beta^n with
///   A = (bL_1 + (alpha - ab)L_0) / (b^e(n) (ab)^{floor(n/2)} (alpha - beta)), B likewise with beta.
inline RatMat lucas_matrix_binet(const SeqParams& p, long n) {
  detail::require_nonnegative(n);
  detail::require_binet(p);
  const Rational& d = p.disc();
  const QuadElement alpha = p.alpha();
  const QuadElement beta = p.beta();
  auto [l0r, l1r] = lucas_matrix_initial(p);
  const QuadMat l0 = lift(l0r, d);
  const QuadMat bl1 = lift(p.b() * l1r, d);

  const QuadElement denom_inv = (p.b().pow(eps(n)) * p.ab().pow(floor_half(n)) * (alpha - beta)).inverse();
  const QuadMat a_num = bl1 + (alpha - p.ab()) * l0;
  const QuadMat b_num = bl1 + (beta - p.ab()) * l0;

  const auto un = static_cast<unsigned long>(n);
  const QuadMat value = (denom_inv * pow(alpha, un)) * a_num - (denom_inv * pow(beta, un)) * b_num;
  return detail::rationalize(value);
}

inline MatSeqTerm fib_matrix(const SeqParams& p, long n, Source source) {
  switch (source) {
    case Source::Recurrence: return {n, fib_matrix_rec(p, n), source};
    case Source::ClosedForm: return {n, fib_matrix_closed(p, n), source};
    case Source::Binet: return {n, fib_matrix_binet(p, n), source};
  }
  throw std::invalid_argument("unknown source");
}

inline MatSeqTerm lucas_matrix(const SeqParams& p, long n, Source source) {
  switch (source) {
    case Source::Recurrence: return {n, lucas_matrix_rec(p, n), source};
    case Source::ClosedForm: return {n, lucas_matrix_closed(p, n), source};
    case Source::Binet: return {n, lucas_matrix_binet(p, n), source};
  }
  throw std::invalid_argument("unknown source");
}

/// det L_n = (ab + 4)(-a/b)^{1 + e(n)}
inline Rational lucas_det(const SeqParams& p, long n) {
  return (p.ab() + Rational(4)) * (-(p.a() / p.b())).pow(1 + eps(n));
}

/// (b/a)^{e(n+1)} l_{n+1} l_{n-1} - (b/a)^{e(n)} l_n^2 = (ab + 4)(-1)^{n+1}
inline bool cassini_lucas(const SequenceTable& t, long n) {
  const SeqParams& p = t.params();
  const Rational ratio = p.b() / p.a();
  const Rational ln = t.lucas(n);
  const Rational lhs = ratio.pow(eps(n + 1)) * t.lucas(n + 1) * t.lucas(n - 1) - ratio.pow(eps(n)) * ln * ln;
  const Rational rhs = (p.ab() + Rational(4)) * Rational(eps(n + 1) != 0 ? -1 : 1);
  return lhs == rhs;
}

inline bool cassini_lucas(const SeqParams& p, long n) { return cassini_lucas(SequenceTable(p), n); }

}  // namespace biperiodic
