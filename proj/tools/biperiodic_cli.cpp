// biperiodic: terms, tables, series expansions and the identity suite for
// bi-periodic Fibonacci and Lucas sequences.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "biperiodic/biperiodic.hpp"
#include "biperiodic/report.hpp"

namespace {

using namespace biperiodic;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Kind { fib, lucas, fib_matrix, lucas_matrix };
enum class Format { json, csv, plain };
enum class SourceChoice { rec, closed, binet, all };

const std::map<std::string, Kind> kKinds = {
    {"fib", Kind::fib}, {"lucas", Kind::lucas}, {"fib-matrix", Kind::fib_matrix}, {"lucas-matrix", Kind::lucas_matrix}};
const std::map<std::string, Format> kFormats = {{"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};
const std::map<std::string, SourceChoice> kSources = {
    {"rec", SourceChoice::rec}, {"closed", SourceChoice::closed}, {"binet", SourceChoice::binet}, {"all", SourceChoice::all}};

struct RunConfig {
  std::string a = "1";
  std::string b = "1";
  Kind kind = Kind::lucas;
  long n = 0;
  std::optional<long> n_max;
  long order = 40;
  std::optional<Format> format;
  std::string grid;
  SourceChoice source = SourceChoice::rec;
  unsigned threads = 0;
  bool inverse = false;
  Form form = Form::corrected;
  bool timestamps = false;
};

SeqParams parse_params(const RunConfig& c) {
  Rational a, b;
  try {
    a = Rational::parse(c.a);
    b = Rational::parse(c.b);
  } catch (const DivisionByZero&) {
    throw UsageError("parameter has a zero denominator");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  try {
    return {a, b};
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
}

template <class V>
std::vector<std::string> keys(const std::map<std::string, V>& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

bool is_matrix(Kind k) { return k == Kind::fib_matrix || k == Kind::lucas_matrix; }

std::vector<Source> sources_for(SourceChoice s) {
  switch (s) {
    case SourceChoice::rec: return {Source::Recurrence};
    case SourceChoice::closed: return {Source::ClosedForm};
    case SourceChoice::binet: return {Source::Binet};
    case SourceChoice::all: return {Source::Recurrence, Source::ClosedForm, Source::Binet};
  }
  return {};
}

// One output row: an index, the route that produced it, and the value.
struct Row {
  long index;
  std::optional<Source> source;
  CheckValue value;
};

std::vector<Row> compute_rows(const RunConfig& c, const SeqParams& p, long from, long to) {
  const SequenceTable table(p);
  std::vector<Row> rows;
  for (long n = from; n <= to; ++n) {
    if (!is_matrix(c.kind)) {
      // scalar kernels have a single evaluation route
      rows.push_back({n, std::nullopt, c.kind == Kind::fib ? table.fibonacci(n) : table.lucas(n)});
      continue;
    }
    for (Source s : sources_for(c.source)) {
      if (s == Source::Binet && !p.binet_allowed()) throw UsageError("ab = -4 degenerate: Binet form undefined");
      if (s != Source::ClosedForm && n < 0) {
        throw UsageError(std::string(to_string(s)) + " source needs n >= 0 (closed accepts negative n)");
      }
      const RatMat m = c.kind == Kind::fib_matrix ? fib_matrix(p, n, s).matrix : lucas_matrix(p, n, s).matrix;
      rows.push_back({n, s, m});
    }
  }
  return rows;
}

std::string plain_value(const CheckValue& v) {
  std::ostringstream os;
  std::visit([&](const auto& x) { os << x; }, v);
  return os.str();
}

// `single`: one index was requested. Rows carry a source column only when
// every route was requested.
void render_rows(const std::vector<Row>& rows, const RunConfig& c, Format format, bool single, std::ostream& out) {
  const bool matrix = is_matrix(c.kind);
  const bool with_source = matrix && c.source == SourceChoice::all;
  switch (format) {
    case Format::plain:
      for (const Row& r : rows) {
        if (!single) out << r.index << ": ";
        if (with_source) out << to_string(*r.source) << ": ";
        out << plain_value(r.value) << '\n';
      }
      break;
    case Format::csv:
      out << "index" << (with_source ? ",source" : "") << (matrix ? ",e11,e12,e21,e22" : ",value") << '\n';
      for (const Row& r : rows) {
        out << r.index;
        if (with_source) out << ',' << to_string(*r.source);
        if (const auto* m = std::get_if<RatMat>(&r.value)) {
          out << ',' << m->e11 << ',' << m->e12 << ',' << m->e21 << ',' << m->e22;
        } else {
          out << ',' << std::get<Rational>(r.value);
        }
        out << '\n';
      }
      break;
    case Format::json: {
      json j;
      if (single && !with_source) {
        j = to_json_value(rows.front().value);
      } else if (single) {
        j = json::object();
        for (const Row& r : rows) j[to_string(*r.source)] = to_json_value(r.value);
      } else {
        j = json::array();
        for (const Row& r : rows) {
          json row = {{"index", r.index}, {"value", to_json_value(r.value)}};
          if (with_source) row["source"] = to_string(*r.source);
          j.push_back(std::move(row));
        }
      }
      out << j.dump() << '\n';
      break;
    }
  }
}

int cmd_term(const RunConfig& c) {
  const SeqParams p = parse_params(c);
  render_rows(compute_rows(c, p, c.n, c.n), c, c.format.value_or(Format::plain), true, std::cout);
  return kOk;
}

int cmd_table(const RunConfig& c) {
  const SeqParams p = parse_params(c);
  const long last = c.n_max.value_or(c.n);
  if (last < c.n) throw UsageError("n-max must be >= n");
  render_rows(compute_rows(c, p, c.n, last), c, c.format.value_or(Format::csv), false, std::cout);
  return kOk;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int cmd_verify(const RunConfig& c, bool pair_given) {
  if (c.format && *c.format != Format::json) throw UsageError("verify only writes json");
  std::vector<SeqParams> grid;
  if (!c.grid.empty()) {
    if (pair_given) throw UsageError("--grid and --a/--b are mutually exclusive");
    grid = default_grid();
  } else if (pair_given) {
    grid = {parse_params(c)};
  } else {
    grid = default_grid();
  }
  const long n_max = c.n_max.value_or(12);
  if (n_max < 0) throw UsageError("n-max must be >= 0");

  const std::string started = c.timestamps ? utc_now() : "";
  const SuiteReport report = run_full_suite(grid, {.max_index = n_max, .threads = c.threads});
  json j = to_json(report);
  if (c.timestamps) {
    j["started_at"] = started;
    j["finished_at"] = utc_now();
  }
  std::cout << j.dump(2) << '\n';
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_series(const RunConfig& c) {
  if (c.order < 1) throw UsageError("order must be >= 1");
  if (c.form == Form::original && !c.inverse) throw UsageError("--form applies to --inverse only");
  const SeqParams p = parse_params(c);
  const auto order = static_cast<std::size_t>(c.order);
  const auto series = c.inverse ? inverse_power_series(p, order, c.form) : lucas_generating_series(p, order);
  const auto terms = lucas_matrix_terms(p, c.order);

  bool all_match = true;
  const Format format = c.format.value_or(Format::plain);
  json rows = json::array();
  if (format == Format::csv) {
    std::cout << "index,c11,c12,c21,c22,l11,l12,l21,l22,match\n";
  }
  for (std::size_t k = 0; k < order; ++k) {
    const bool match = series[k] == terms[k];
    all_match = all_match && match;
    const RatMat& s = series[k];
    const RatMat& t = terms[k];
    switch (format) {
      case Format::plain:
        std::cout << k << ": coefficient " << s << "  L[" << k << "] " << t << "  match=" << (match ? "true" : "false")
                  << '\n';
        break;
      case Format::csv:
        std::cout << k << ',' << s.e11 << ',' << s.e12 << ',' << s.e21 << ',' << s.e22 << ',' << t.e11 << ',' << t.e12
                  << ',' << t.e21 << ',' << t.e22 << ',' << (match ? "true" : "false") << '\n';
        break;
      case Format::json:
        rows.push_back({{"index", k}, {"coefficient", to_json_value(s)}, {"term", to_json_value(t)}, {"match", match}});
        break;
    }
  }
  if (format == Format::json) std::cout << rows.dump() << '\n';
  return all_match ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bi-periodic Fibonacci and Lucas sequences, matrix sequences and identity checks"};
  app.require_subcommand(1);
  RunConfig c;
  std::string kind_name = "lucas";
  std::string source_name = "rec";
  std::string format_name;
  std::string form_name = "corrected";

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--a", c.a, "parameter a, as p/q or an integer")->capture_default_str();
    sub->add_option("--b", c.b, "parameter b, as p/q or an integer")->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "output format")->check(CLI::IsMember(keys(kFormats)));
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", kind_name, "sequence kind")
        ->check(CLI::IsMember(keys(kKinds)))
        ->capture_default_str();
    sub->add_option("--source", source_name, "evaluation route for matrix kinds")
        ->check(CLI::IsMember(keys(kSources)))
        ->capture_default_str();
  };

  CLI::App* term = app.add_subcommand("term", "print a single term");
  add_pair(term);
  add_kind(term);
  add_format(term);
  term->add_option("--n", c.n, "index")->capture_default_str();

  CLI::App* table = app.add_subcommand("table", "print terms n..n-max");
  add_pair(table);
  add_kind(table);
  add_format(table);
  table->add_option("--n", c.n, "first index")->capture_default_str();
  table->add_option("--n-max", c.n_max, "last index (defaults to --n)");

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite and print a JSON report");
  add_pair(verify);
  add_format(verify);
  verify->add_option("--grid", c.grid, "parameter grid preset")->check(CLI::IsMember({"default"}));
  verify->add_option("--n-max", c.n_max, "largest index checked (default 12)");
  verify->add_option("--threads", c.threads, "worker threads, 0 for one per core")->capture_default_str();
  verify->add_flag("--timestamps", c.timestamps, "add started_at/finished_at to the report");

  CLI::App* series = app.add_subcommand("series", "expand a Lucas matrix series and compare with the recurrence");
  add_pair(series);
  add_format(series);
  series->add_option("--order", c.order, "number of coefficients")->capture_default_str();
  series->add_flag("--inverse", c.inverse, "expand the inverse-power series in t = 1/x instead");
  series->add_option("--form", form_name, "inverse-power numerators: corrected, or original (known to mismatch)")
      ->check(CLI::IsMember({"corrected", "original"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  c.kind = kKinds.at(kind_name);
  c.source = kSources.at(source_name);
  if (!format_name.empty()) c.format = kFormats.at(format_name);
  c.form = form_name == "original" ? Form::original : Form::corrected;

  try {
    if (term->parsed()) return cmd_term(c);
    if (table->parsed()) return cmd_table(c);
    if (verify->parsed()) return cmd_verify(c, verify->count("--a") + verify->count("--b") > 0);
    if (series->parsed()) return cmd_series(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BinetDegenerate& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
