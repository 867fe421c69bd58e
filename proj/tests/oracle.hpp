#pragma once

// Test-only reference implementations. They use Boost's cpp_rational instead
// of the GMP-backed Rational, plain loops instead of memo tables, and
// repeated multiplication instead of binary powering, so they share no code
// path with the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "biperiodic/mat2.hpp"
#include "biperiodic/rational.hpp"

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using Mat = std::array<Q, 4>;  // e11, e12, e21, e22

inline Q q_of(const biperiodic::Rational& r) {
  return Q(boost::multiprecision::cpp_int(r.num().get_str()), boost::multiprecision::cpp_int(r.den().get_str()));
}

inline Mat mat_of(const biperiodic::RatMat& m) { return {q_of(m.e11), q_of(m.e12), q_of(m.e21), q_of(m.e22)}; }

inline Mat mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}
inline Mat add(const Mat& x, const Mat& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]}; }
inline Mat scale(const Q& c, const Mat& x) { return {c * x[0], c * x[1], c * x[2], c * x[3]}; }
inline Mat identity() { return {Q(1), Q(0), Q(0), Q(1)}; }
inline Mat naive_pow(const Mat& x, int m) {
  Mat r = identity();
  for (int i = 0; i < m; ++i) r = mul(r, x);
  return r;
}

inline bool is_odd(long n) { return n % 2 != 0; }

// q_n from an explicit table covering [lo, hi] with lo <= -1, hi >= 1.
inline std::map<long, Q> fib_table(const Q& a, const Q& b, long lo, long hi) {
  std::map<long, Q> t{{0, Q(0)}, {1, Q(1)}};
  for (long n = 2; n <= hi; ++n) t[n] = (is_odd(n) ? b : a) * t[n - 1] + t[n - 2];
  for (long n = -1; n >= lo; --n) t[n] = t[n + 2] - (is_odd(n + 2) ? b : a) * t[n + 1];
  return t;
}

inline std::map<long, Q> lucas_table(const Q& a, const Q& b, long lo, long hi) {
  std::map<long, Q> t{{0, Q(2)}, {1, a}};
  for (long n = 2; n <= hi; ++n) t[n] = (is_odd(n) ? a : b) * t[n - 1] + t[n - 2];
  for (long n = -1; n >= lo; --n) t[n] = t[n + 2] - (is_odd(n + 2) ? a : b) * t[n + 1];
  return t;
}

// Matrix recurrences driven only by the initial matrices.
inline std::vector<Mat> fib_mats(const Q& a, const Q& b, long count) {
  std::vector<Mat> v{identity(), Mat{b, b / a, Q(1), Q(0)}};
  for (long n = 2; n < count; ++n) v.push_back(add(scale(is_odd(n) ? b : a, v[n - 1]), v[n - 2]));
  v.resize(count);
  return v;
}

inline std::vector<Mat> lucas_mats(const Q& a, const Q& b, long count) {
  std::vector<Mat> v{Mat{a, Q(2), 2 * a / b, -a}, Mat{a * a + 2 * a / b, a, a * a / b, 2 * a / b}};
  for (long n = 2; n < count; ++n) v.push_back(add(scale(is_odd(n) ? a : b, v[n - 1]), v[n - 2]));
  v.resize(count);
  return v;
}

// Random small rationals for property tests.
class RationalGen {
 public:
  explicit RationalGen(unsigned seed) : rng_(seed) {}

  biperiodic::Rational any() {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 25);
    return {num(rng_), den(rng_)};
  }

  biperiodic::Rational nonzero() {
    for (;;) {
      auto r = any();
      if (!r.is_zero()) return r;
    }
  }

  biperiodic::RatMat matrix() { return {any(), any(), any(), any()}; }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
