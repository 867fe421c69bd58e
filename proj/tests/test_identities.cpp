#include <catch_amalgamated.hpp>

#include <algorithm>

#include "biperiodic/identities.hpp"
#include "oracle.hpp"

using namespace biperiodic;

namespace {

RatMat mat(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

SeqParams params(long a, long b) { return {Rational(a), Rational(b)}; }

const IdentityCheck& find(const std::vector<IdentityCheck>& checks, const std::string& name) {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const IdentityCheck& c) { return c.name == name; });
  REQUIRE(it != checks.end());
  return *it;
}

bool all_required_hold(const std::vector<IdentityCheck>& checks) {
  return std::none_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.unexplained_failure(); });
}

}  // namespace

TEST_CASE("unit products at a = b = 1, n = 1") {
  const SequenceTable t(params(1, 1));
  const auto checks = unit_product_identities(t, 1);
  const auto& c = find(checks, "L0*F[n] = (b/a)^e(n)*L[n]");
  CHECK(std::get<RatMat>(c.lhs) == mat(3, 1, 1, 2));
  CHECK(std::get<RatMat>(c.rhs) == lucas_matrix_rec(params(1, 1), 1));
  // with a = b every check, the usually quoted middle term included, holds
  for (const auto& check : checks) CHECK(check.holds);
}

TEST_CASE("unit products over the grid") {
  for (const SeqParams& p : default_grid()) {
    const SequenceTable t(p);
    CHECK(all_required_hold(unit_product_identities(t, 2)));
    CHECK(all_required_hold(unit_product_identities(t, 0)));
  }
  const SequenceTable t(params(2, 3));
  CHECK(all_required_hold(unit_product_identities(t, 7)));
}

TEST_CASE("the quoted middle term of F1*L[n] fails exactly for odd n with a^2 != b^2") {
  for (const SeqParams& p : default_grid()) {
    const SequenceTable t(p);
    const bool symmetric = p.a() * p.a() == p.b() * p.b();
    for (long n = 0; n <= 9; ++n) {
      const auto checks = unit_product_identities(t, n);
      const auto& original = find(checks, "F1*L[n] = (b/a)^e(n)*(F[n+2]+F[n])");
      const auto& corrected = find(checks, "F1*L[n] = (a/b)^e(n)*(F[n+2]+F[n]) [corrected]");
      CHECK(original.defect == defects::kUnitProductMiddle);
      CHECK(original.holds == (eps(n) == 0 || symmetric));
      CHECK(corrected.holds);
      CHECK(corrected.defect.empty());
    }
  }
}

TEST_CASE("scalar shadow of L0*F[n]") {
  // entry (1,2): a (b/a) q_n + 2 (b/a)^e(n) q_{n-1} = (b/a)^e(n) l_n
  for (const SeqParams& p : default_grid()) {
    const SequenceTable t(p);
    const Rational ba = p.b() / p.a();
    for (long n = -5; n <= 20; ++n) {
      const RatMat product = lucas_matrix_closed(t, 0) * fib_matrix_closed(t, n);
      const Rational shadow = p.a() * ba * t.fibonacci(n) + Rational(2) * ba.pow(eps(n)) * t.fibonacci(n - 1);
      CHECK(product.e12 == shadow);
      CHECK(shadow == ba.pow(eps(n)) * t.lucas(n));
    }
  }
}

TEST_CASE("pairwise products") {
  const SequenceTable unit(params(1, 1));
  const auto at_zero = product_identities(unit, 0, 0);
  const auto& squares = find(at_zero, "L[m]*L[n] = (a/b)^(2-e(m+1)e(n+1))*(ab+4)*F[m+n]");
  CHECK(std::get<RatMat>(squares.lhs) == mat(5, 0, 0, 5));
  CHECK(squares.holds);
  const auto& with_identity = find(at_zero, "F[m]*F[n] = (b/a)^e(mn)*F[m+n]");
  CHECK(with_identity.holds);

  const SequenceTable t(params(1, 2));
  const auto checks = product_identities(t, 3, 4);
  CHECK(checks.size() == 6);
  for (const auto& c : checks) CHECK(c.holds);
}

TEST_CASE("powers and shifted products") {
  const SequenceTable unit(params(1, 1));
  const auto powers = power_identities(unit, 2, 3);
  const auto& v = find(powers, "L0^m*F[mn] = (b/a)^(floor((m+1)/2)e(n))*L[n]^m");
  CHECK(v.holds);
  CHECK(std::get<RatMat>(v.rhs) == lucas_matrix_rec(params(1, 1), 3) * lucas_matrix_rec(params(1, 1), 3));

  for (const SeqParams& p : default_grid()) {
    const SequenceTable t(p);
    for (long n = 0; n <= 6; ++n) {
      for (const auto& c : power_identities(t, 1, n)) CHECK(c.holds);
      for (const auto& c : power_identities(t, 0, n)) CHECK(c.holds);
      for (const auto& c : shifted_product_identities(t, n, n)) CHECK(c.holds);
    }
  }
}

TEST_CASE("products agree with an independent matrix oracle") {
  // F[m]F[n] against oracle matrices computed with a different rational type
  for (const SeqParams& p : default_grid()) {
    const auto fo = oracle::fib_mats(oracle::q_of(p.a()), oracle::q_of(p.b()), 13);
    const SequenceTable t(p);
    const auto checks = product_identities(t, 5, 7);
    const auto& c = find(checks, "F[m]*F[n] = (b/a)^e(mn)*F[m+n]");
    CHECK(oracle::mat_of(std::get<RatMat>(c.lhs)) == oracle::mul(fo[5], fo[7]));
  }
}

TEST_CASE("full suite over the default grid, indices up to 10") {
  const SuiteReport report = run_full_suite(default_grid(), {.max_index = 10});
  CHECK(report.params.size() == 49);
  CHECK(report.checks_run > 0);
  CHECK(report.failures.empty());
  CHECK(report.skipped.empty());
  CHECK(report.ok());

  std::vector<std::string> names;
  for (const auto& e : report.expected_failures) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"(b/a)^e(n)*(F[n+2]+F[n]) = (b/a)^e(n+1)*L[n+1]",
                                          "F1*L[n] = (b/a)^e(n)*(F[n+2]+F[n])", "finite inverse-power sum",
                                          "inverse-power series coeff[n] = L[n]"});
}

TEST_CASE("suite output does not depend on the thread count") {
  const auto grid = default_grid();
  const std::vector<SeqParams> subset(grid.begin(), grid.begin() + 9);
  const SuiteReport one = run_full_suite(subset, {.max_index = 5, .threads = 1});
  const SuiteReport many = run_full_suite(subset, {.max_index = 5, .threads = 6});
  CHECK(one.checks_run == many.checks_run);
  CHECK(one.expected_failures == many.expected_failures);
  CHECK(one.failures.size() == many.failures.size());
}

TEST_CASE("degenerate grid point") {
  const SuiteReport report = run_full_suite({params(2, -2)}, {.max_index = 8});
  CHECK(report.failures.empty());
  REQUIRE(report.skipped.size() == 2);
  CHECK(report.skipped[0].name == "fib_matrix_binet[a=2,b=-2]");
  CHECK(report.skipped[0].reason == "ab = -4 degenerate");
  CHECK(report.skipped[1].name == "lucas_matrix_binet[a=2,b=-2]");
}

TEST_CASE("boundary grids") {
  const SuiteReport empty = run_full_suite({}, {.max_index = 10});
  CHECK(empty.checks_run == 0);
  CHECK(empty.failures.empty());
  CHECK(empty.expected_failures.empty());

  const SuiteReport zero = run_full_suite({params(1, 1)}, {.max_index = 0});
  const SuiteReport one = run_full_suite({params(1, 1)}, {.max_index = 1});
  CHECK(zero.checks_run > 0);
  CHECK(zero.checks_run < one.checks_run);
  CHECK(zero.failures.empty());
}
