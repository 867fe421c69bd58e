#pragma once

/**
 * @file sequences.hpp
 * @brief Scalar bi-periodic Fibonacci (q_n) and Lucas (l_n) sequences.
 *
 *   q_0 = 0, q_1 = 1, q_n = a q_{n-1} + q_{n-2} (n even), b q_{n-1} + q_{n-2} (n odd)
 *   l_0 = 2, l_1 = a, l_n = a l_{n-1} + l_{n-2} (n odd),  b l_{n-1} + l_{n-2} (n even)
 *
 * Negative indices run the same recurrences backwards,
 * x_{n-2} = x_n - c(n) x_{n-1}, which gives q_{-1} = 1 and l_{-1} = -a.
 *
 * The scalar kernels iterate linearly on purpose: the matrix-power route
 * lives in matrix_seq.hpp, and these stay simple enough to serve as its
 * oracle.
 */

#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "biperiodic/errors.hpp"
#include "biperiodic/quad.hpp"
#include "biperiodic/rational.hpp"

namespace biperiodic {

/// 1 for odd n, 0 for even n (sign of n ignored).
constexpr int eps(long n) { return static_cast<int>(n % 2 != 0); }

/// floor(n / 2) with floor semantics for negative n.
constexpr long floor_half(long n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

/// Validated (a, b) with the derived quantities every formula needs.
class SeqParams {
 public:
  SeqParams(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero()) throw InvalidParameter("parameter a must be nonzero");
    if (b_.is_zero()) throw InvalidParameter("parameter b must be nonzero");
    ab_ = a_ * b_;
    disc_ = ab_ * (ab_ + Rational(4));
  }

  [[nodiscard]] const Rational& a() const { return a_; }
  [[nodiscard]] const Rational& b() const { return b_; }
  [[nodiscard]] const Rational& ab() const { return ab_; }

  /// D = a^2 b^2 + 4ab = ab(ab + 4).
  [[nodiscard]] const Rational& disc() const { return disc_; }

  /// alpha = (ab + sqrt(D)) / 2
  [[nodiscard]] QuadElement alpha() const { return {ab_ / Rational(2), Rational(1, 2), disc_}; }
  /// beta = (ab - sqrt(D)) / 2
  [[nodiscard]] QuadElement beta() const { return {ab_ / Rational(2), Rational(-1, 2), disc_}; }

  /// False exactly when ab = -4, where alpha = beta.
  [[nodiscard]] bool binet_allowed() const { return !disc_.is_zero(); }

  friend bool operator==(const SeqParams& x, const SeqParams& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  Rational a_;
  Rational b_;
  Rational ab_;
  Rational disc_;
};

namespace detail {

// Walks x_k = c(k) x_{k-1} + x_{k-2} from (x_0, x_1) to index n, in either
// direction. `coeff` maps an index k to c(k).
template <class Coeff>
Rational walk_recurrence(Rational x0, Rational x1, Coeff coeff, long n) {
  if (n == 0) return x0;
  if (n > 0) {
    Rational prev = std::move(x0), cur = std::move(x1);
    for (long k = 2; k <= n; ++k) {
      Rational next = coeff(k) * cur + prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // hi = x_k, lo = x_{k-1}; step down to (x_{k-1}, x_{k-2})
  Rational hi = std::move(x1), lo = std::move(x0);
  for (long k = 1; k - 1 > n; --k) {
    Rational below = hi - coeff(k) * lo;
    hi = std::move(lo);
    lo = std::move(below);
  }
  return lo;
}

inline const Rational& fib_coeff(const SeqParams& p, long k) { return eps(k) == 0 ? p.a() : p.b(); }
inline const Rational& lucas_coeff(const SeqParams& p, long k) { return eps(k) == 1 ? p.a() : p.b(); }

}  // namespace detail

/// q_n, non-memoized.
inline Rational fibonacci(const SeqParams& p, long n) {
  return detail::walk_recurrence(Rational(0), Rational(1), [&](long k) -> const Rational& { return detail::fib_coeff(p, k); }, n);
}

/// l_n, non-memoized.
inline Rational lucas(const SeqParams& p, long n) {
  return detail::walk_recurrence(Rational(2), p.a(), [&](long k) -> const Rational& { return detail::lucas_coeff(p, k); }, n);
}

/// Memoized q_n / l_n for one parameter pair.
///
/// Lookups of already-filled indices take a shared lock; extending the table
/// takes an exclusive one, so concurrent callers never observe a partial fill.
class SequenceTable {
 public:
  explicit SequenceTable(SeqParams params)
      : params_(std::move(params)),
        fib_{{Rational(0), Rational(1)}, {}},
        lucas_{{Rational(2), params_.a()}, {}} {}

  [[nodiscard]] const SeqParams& params() const { return params_; }

  [[nodiscard]] Rational fibonacci(long n) const {
    return fetch(fib_, n, [this](long k) -> const Rational& { return detail::fib_coeff(params_, k); });
  }

  [[nodiscard]] Rational lucas(long n) const {
    return fetch(lucas_, n, [this](long k) -> const Rational& { return detail::lucas_coeff(params_, k); });
  }

 private:
  struct Cache {
    std::vector<Rational> forward;   // index k at position k
    std::vector<Rational> backward;  // index -k at position k - 1
  };

  template <class Coeff>
  Rational fetch(Cache& cache, long n, Coeff coeff) const {
    {
      std::shared_lock lock(mutex_);
      if (const Rational* hit = lookup(cache, n)) return *hit;
    }
    std::unique_lock lock(mutex_);
    if (n >= 0) {
      auto& f = cache.forward;
      while (static_cast<long>(f.size()) <= n) {
        const long k = static_cast<long>(f.size());
        f.push_back(coeff(k) * f[k - 1] + f[k - 2]);
      }
    } else {
      auto& b = cache.backward;
      auto at = [&](long k) -> const Rational& { return k >= 0 ? cache.forward[k] : b[-k - 1]; };
      while (-static_cast<long>(b.size()) > n) {
        // next missing index m = -(size + 1); x_m = x_{m+2} - c(m+2) x_{m+1}
        const long m = -static_cast<long>(b.size()) - 1;
        b.push_back(at(m + 2) - coeff(m + 2) * at(m + 1));
      }
    }
    return *lookup(cache, n);
  }

  static const Rational* lookup(const Cache& cache, long n) {
    if (n >= 0) return n < static_cast<long>(cache.forward.size()) ? &cache.forward[n] : nullptr;
    const long pos = -n - 1;
    return pos < static_cast<long>(cache.backward.size()) ? &cache.backward[pos] : nullptr;
  }

  SeqParams params_;
  mutable Cache fib_;
  mutable Cache lucas_;
  mutable std::shared_mutex mutex_;
};

/// l_n = q_{n-1} + q_{n+1}
inline bool check_lucas_from_fib(const SequenceTable& t, long n) {
  return t.lucas(n) == t.fibonacci(n - 1) + t.fibonacci(n + 1);
}

/// (ab + 4) q_n = l_{n+1} + l_{n-1}
inline bool check_fib_from_lucas(const SequenceTable& t, long n) {
  return (t.params().ab() + Rational(4)) * t.fibonacci(n) == t.lucas(n + 1) + t.lucas(n - 1);
}

inline bool check_lucas_from_fib(const SeqParams& p, long n) { return check_lucas_from_fib(SequenceTable(p), n); }
inline bool check_fib_from_lucas(const SeqParams& p, long n) { return check_fib_from_lucas(SequenceTable(p), n); }

}  // namespace biperiodic
