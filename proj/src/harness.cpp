#include "bstrata/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "bstrata/diagram_grid.hpp"
#include "bstrata/egf.hpp"
#include "bstrata/enumeration.hpp"
#include "bstrata/pipe_dreams.hpp"
#include "json.hpp"

namespace bstrata {

using Json = nlohmann::ordered_json;

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Deep enough that a handful of workers get balanced work, shallow enough
// that the prefix list stays small.
constexpr int kSplitDepth = 16;

int require_n(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError(cfg.subcommand + ": --n is required");
  if (*cfg.n < 1) throw UsageError("--n must be >= 1");
  return *cfg.n;
}

int require_max_n(const RunConfig& cfg) {
  const std::optional<int> m = cfg.max_n ? cfg.max_n : cfg.n;
  if (!m) throw UsageError(cfg.subcommand + ": --max-n is required");
  if (*m < 0) throw UsageError("--max-n must be >= 0");
  return *m;
}

// "t^2 + 3t + 2" for integral polynomials.
std::string pretty_poly(const PolyT& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const BigRational c = p.coefficient(d);
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::string mag = BigRational(abs(c)).get_str();
    if (d == 0 || mag != "1") out += mag;
    if (d >= 1) out += "t";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Plain aligned table with a header row.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out += c + 1 == cells.size() ? cells[c] : pad(cells[c], width[c] + 2);
    }
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& row : rows) out += line(row);
  return out;
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += ',';
      out += cells[c];
    }
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& row : rows) out += line(row);
  return out;
}

// ------------------------------------------------------ verification

VerifyCheck check_lw(int n) {
  const ReducedWord word = build_reduced_word(n);
  VerifyCheck check{"lw", n, 0, true, std::nullopt};
  const std::uint64_t subsets = std::uint64_t{1} << word.length();
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const Diagram d(n, bits);
    const bool by_definition = is_cauchon(word, d);
    const bool by_lw = is_cauchon_lw(diagram_to_staircase(word, d));
    ++check.checked;
    if (by_definition != by_lw) {
      check.passed = false;
      check.counterexample = Counterexample{
          d.to_hex(), by_definition ? "cauchon" : "not cauchon",
          by_lw ? "cauchon" : "not cauchon"};
      break;
    }
  }
  return check;
}

VerifyCheck check_tau(int n) {
  const ReducedWord word = build_reduced_word(n);
  const SignedPermutation w_inv = inverse(word.product());
  VerifyCheck check{"tau", n, 0, true, std::nullopt};
  enumerate_cauchon(word, [&](const Diagram& d, const SignedPermutation& wd) {
    if (!check.passed) return;
    ++check.checked;
    const SignedPermutation expected = compose(wd, w_inv);
    const SignedPermutation actual = tau_of_diagram(word, d);
    if (expected != actual) {
      check.passed = false;
      check.counterexample =
          Counterexample{d.to_hex(), cycle_notation(expected),
                         cycle_notation(actual)};
    }
  });
  return check;
}

void compare_dimensions(const ReducedWord& word, const Diagram& d,
                        VerifyCheck& check) {
  ++check.checked;
  const int by_cycles = stratum_dimension(word, d);
  const int by_kernel = kernel_dimension(tau_of_diagram(word, d));
  if (by_cycles != by_kernel) {
    check.passed = false;
    check.counterexample =
        Counterexample{d.to_hex(), str(by_kernel), str(by_cycles)};
  }
}

VerifyCheck check_kernel_exhaustive(int n) {
  const ReducedWord word = build_reduced_word(n);
  VerifyCheck check{"kernel", n, 0, true, std::nullopt};
  enumerate_cauchon(word, [&](const Diagram& d, const SignedPermutation&) {
    if (check.passed) compare_dimensions(word, d, check);
  });
  return check;
}

VerifyCheck check_kernel_sampled(int n, std::uint64_t seed) {
  const ReducedWord word = build_reduced_word(n);
  VerifyCheck check{"kernel_sampled", n, 0, true, std::nullopt};
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
  for (int s = 0; s < kKernelSamples && check.passed; ++s) {
    compare_dimensions(word, sample_cauchon(word, rng), check);
  }
  return check;
}

VerifyCheck check_bruhat(int n) {
  const ReducedWord word = build_reduced_word(n);
  VerifyCheck check{"bruhat", n, 0, true, std::nullopt};
  std::set<SignedPermutation> images;
  enumerate_cauchon(word, [&](const Diagram& d, const SignedPermutation& wd) {
    ++check.checked;
    if (!images.insert(wd).second && check.passed) {
      check.passed = false;
      check.counterexample =
          Counterexample{d.to_hex(), "injective", "repeated " + wd.to_string()};
    }
  });
  if (check.passed) {
    const auto interval = bruhat_interval(word.product());
    if (interval != images) {
      check.passed = false;
      check.counterexample =
          Counterexample{"interval", str(static_cast<std::uint64_t>(interval.size())),
                         str(static_cast<std::uint64_t>(images.size()))};
    }
  }
  return check;
}

template <class Series>
VerifyCheck compare_series(const std::string& name, const Series& expected,
                           const Series& actual) {
  VerifyCheck check{name, std::nullopt, 0, true, std::nullopt};
  for (int k = 0; k <= expected.order(); ++k) {
    ++check.checked;
    if (!(expected[k] == actual[k])) {
      check.passed = false;
      std::ostringstream e, a;
      if constexpr (std::is_same_v<Series, TSeries>) {
        e << expected[k].to_string();
        a << actual[k].to_string();
      } else {
        e << expected[k].get_str();
        a << actual[k].get_str();
      }
      check.counterexample =
          Counterexample{"coefficient " + str(k), e.str(), a.str()};
      break;
    }
  }
  return check;
}

std::vector<VerifyCheck> series_checks() {
  std::vector<VerifyCheck> out;
  out.push_back(compare_series("d_closed_vs_sum", d_series_direct(12),
                               d_series(12)));

  VerifyCheck stir{"stirling_recurrence_vs_alternating", std::nullopt, 0, true, std::nullopt};
  for (int n = 0; n <= 20 && stir.passed; ++n) {
    for (int j = 0; j <= n; ++j) {
      ++stir.checked;
      const BigInt a = stirling(n, j);
      const BigInt b = stirling_alternating_sum(n, j);
      if (a != b) {
        stir.passed = false;
        stir.counterexample = Counterexample{
            "S(" + str(n) + "," + str(j) + ")", b.get_str(), a.get_str()};
        break;
      }
    }
  }
  out.push_back(stir);

  const TSeries d20 = d_series(20);
  out.push_back(compare_series("log_exp_inverse", d20,
                               series_log(series_exp(d20))));
  const TSeries h20 = h_series(20);
  out.push_back(compare_series("exp_log_inverse", h20,
                               series_exp(series_log(h20))));
  out.push_back(compare_series("h_exp_vs_closed", h_series_closed(20), h20));

  // (2 - e^x)^{-1/2} = sum_j C(2j,j) (e^x - 1)^j / 4^j
  const int order = 20;
  QSeries e_minus_one = series_exp_x(order);
  e_minus_one[0] = 0;
  QSeries binomial_sum(order);
  QSeries power(order);
  power[0] = 1;
  for (int j = 0; j <= order; ++j) {
    BigRational c(binomial(2 * j, j), BigInt(1) << (2 * j));
    c.canonicalize();
    binomial_sum = series_add(binomial_sum, series_scale(power, c));
    power = series_mul(power, e_minus_one);
  }
  out.push_back(compare_series(
      "half_power_binomial", binomial_sum,
      series_pow(series_two_minus_exp(order), BigRational(-1, 2))));

  // (2 - e^x)^{-(1+t)/2} at t = 1 is 1/(2 - e^x), the Fubini numbers.
  QSeries fub(order);
  for (int n = 0; n <= order; ++n) fub[n] = BigRational(fubini(n));
  out.push_back(compare_series(
      "pow_half_linear_at_t1",
      fub,
      specialize(series_pow_half_linear(lift(series_two_minus_exp(order)), -1),
                 1)));

  VerifyCheck totals{"totals_two_fubini", std::nullopt, 0, true, std::nullopt};
  const StrataCounts counts(25);
  for (int n = 1; n <= 25; ++n) {
    ++totals.checked;
    if (counts.totals(n) != 2 * fubini(n)) {
      totals.passed = false;
      totals.counterexample = Counterexample{
          "n=" + str(n), BigInt(2 * fubini(n)).get_str(),
          counts.totals(n).get_str()};
      break;
    }
  }
  out.push_back(totals);

  VerifyCheck shape{"polynomials_integral_nonnegative", std::nullopt, 0, true, std::nullopt};
  const StrataPolynomials polys(20);
  for (int n = 0; n <= 20; ++n) {
    ++shape.checked;
    const PolyT& p = polys.polynomial(n);
    const bool ok = p.is_integral() && p.degree() <= n &&
                    std::all_of(p.coefficients().begin(), p.coefficients().end(),
                                [](const BigRational& q) { return q >= 0; });
    if (!ok) {
      shape.passed = false;
      shape.counterexample =
          Counterexample{"n=" + str(n), "nonnegative integers, degree <= n",
                         p.to_string()};
      break;
    }
  }
  out.push_back(shape);
  return out;
}

Json counterexample_json(const Counterexample& c) {
  return Json{{"diagram", c.diagram},
              {"expected", c.expected},
              {"actual", c.actual}};
}

}  // namespace

// ------------------------------------------------------ enumeration

DimensionHistogram enumerate_histogram(int n, int jobs, bool with_dimensions) {
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
  const ReducedWord word = build_reduced_word(n);
  const std::vector<SearchPrefix> prefixes = split_prefixes(word, kSplitDepth);

  using Local = std::array<std::uint64_t, kMaxRank + 2>;
  std::vector<Local> locals(static_cast<std::size_t>(jobs), Local{});
  std::atomic<std::size_t> next{0};

  auto worker = [&](Local& local) {
    for (std::size_t p = next++; p < prefixes.size(); p = next++) {
      if (with_dimensions) {
        enumerate_from(word, prefixes[p],
                       [&](const Diagram& d, const SignedPermutation&) {
                         ++local[stratum_dimension(word, d)];
                       });
      } else {
        local[kMaxRank + 1] += count_from(word, prefixes[p]);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker, std::ref(locals[j]));
    worker(locals[0]);
  }

  DimensionHistogram h;
  h.n = n;
  h.has_dimensions = with_dimensions;
  for (const Local& local : locals) {
    for (int d = 0; d <= kMaxRank; ++d) {
      if (local[d]) h.counts[d] += local[d];
      h.total += local[d];
    }
    h.total += local[kMaxRank + 1];
  }
  return h;
}

Diagram sample_cauchon(const ReducedWord& word, std::mt19937_64& rng) {
  const int t = word.length();
  for (;;) {
    SignedPermutation v = identity(word.rank());
    std::uint64_t bits = 0;
    int k = t;
    for (; k >= 1; --k) {
      const int i = word.letter(k);
      if (!v.ascends_at(i)) break;
      if (rng() & 1U) {
        v.right_multiply_simple(i);
        bits |= std::uint64_t{1} << (k - 1);
      }
    }
    if (k == 0) return Diagram(word.rank(), bits);
  }
}

// ------------------------------------------------------ verification

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport run_verify(const std::string& suite, std::optional<int> n,
                        std::uint64_t seed) {
  static const std::set<std::string> kSuites{"all", "lw", "tau", "kernel",
                                             "bruhat", "series"};
  if (!kSuites.contains(suite)) throw UsageError("unknown suite '" + suite + "'");
  if (n && (*n < 1 || *n > kMaxDiagramRank)) {
    throw UsageError("--n must lie in [1, " + str(kMaxDiagramRank) + "]");
  }
  auto ranks = [&](int lo, int hi, int cap, const char* name) {
    if (n && *n > cap) {
      throw UsageError(std::string("suite ") + name + " supports n <= " +
                       str(cap));
    }
    std::vector<int> out;
    if (n) {
      out.push_back(*n);
    } else {
      for (int r = lo; r <= hi; ++r) out.push_back(r);
    }
    return out;
  };
  const bool all = suite == "all";

  VerifyReport report{suite, {}};
  if (all || suite == "lw")
    for (int r : ranks(1, 5, 6, "lw")) report.checks.push_back(check_lw(r));
  if (all || suite == "tau")
    for (int r : ranks(1, 5, 8, "tau")) report.checks.push_back(check_tau(r));
  if (all || suite == "kernel") {
    for (int r : ranks(1, 5, kMaxDiagramRank, "kernel"))
      report.checks.push_back(r <= 5 ? check_kernel_exhaustive(r)
                                     : check_kernel_sampled(r, seed));
    if (!n) {
      report.checks.push_back(check_kernel_sampled(6, seed));
      report.checks.push_back(check_kernel_sampled(7, seed));
    }
  }
  if (all || suite == "bruhat")
    for (int r : ranks(1, 4, 5, "bruhat")) report.checks.push_back(check_bruhat(r));
  if (all || suite == "series")
    for (auto& c : series_checks()) report.checks.push_back(std::move(c));
  return report;
}

// ------------------------------------------------------ rendering

std::string render_histogram(const DimensionHistogram& h, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: {
      Json j{{"command", "enumerate"}, {"n", str(h.n)}, {"total", str(h.total)}};
      if (h.has_dimensions) {
        Json rows = Json::array();
        for (const auto& [d, c] : h.counts)
          rows.push_back(Json{{"dimension", str(d)}, {"count", str(c)}});
        j["histogram"] = rows;
      } else {
        j["counts_only"] = true;
      }
      return dump(j);
    }
    case OutputFormat::csv:
    case OutputFormat::table: {
      std::vector<std::vector<std::string>> rows;
      if (!h.has_dimensions) {
        rows.push_back({str(h.n), str(h.total)});
        return f == OutputFormat::csv ? render_csv({"n", "total"}, rows)
                                      : render_table({"n", "total"}, rows);
      }
      for (const auto& [d, c] : h.counts) rows.push_back({str(h.n), str(d), str(c)});
      if (f == OutputFormat::csv) return render_csv({"n", "dimension", "count"}, rows);
      return render_table({"n", "dimension", "count"}, rows) +
             "total " + str(h.total) + "\n";
    }
  }
  return {};
}

std::string render_verify(const VerifyReport& r, OutputFormat f) {
  if (f == OutputFormat::json) {
    Json checks = Json::array();
    std::optional<Counterexample> first;
    for (const auto& c : r.checks) {
      Json j{{"name", c.name}};
      if (c.n) j["n"] = str(*c.n);
      j["checked"] = str(c.checked);
      j["passed"] = c.passed;
      if (c.counterexample) {
        j["counterexample"] = counterexample_json(*c.counterexample);
        if (!first) first = c.counterexample;
      }
      checks.push_back(j);
    }
    Json j{{"command", "verify"}, {"suite", r.suite}, {"passed", r.passed()},
           {"checks", checks}};
    if (first) j["first_counterexample"] = counterexample_json(*first);
    return dump(j);
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.checks) {
    std::vector<std::string> row{c.name, c.n ? str(*c.n) : "",
                                 str(c.checked), c.passed ? "pass" : "FAIL", ""};
    if (c.counterexample) {
      row.back() = c.counterexample->diagram + ": expected " +
                   c.counterexample->expected + ", got " +
                   c.counterexample->actual;
    }
    rows.push_back(std::move(row));
  }
  const std::vector<std::string> header{"check", "n", "checked", "result",
                                        "counterexample"};
  return f == OutputFormat::csv ? render_csv(header, rows)
                                : render_table(header, rows);
}

// ------------------------------------------------------ commands

CommandOutput cmd_enumerate(const RunConfig& cfg) {
  const int n = require_n(cfg);
  const int cap = cfg.unsafe_no_cap ? kMaxDiagramRank
                                    : (cfg.counts_only ? kCountsOnlyCap : kDimensionCap);
  if (n > cap) {
    throw UsageError("n = " + str(n) + " exceeds the enumeration cap " +
                     str(cap) +
                     (cfg.unsafe_no_cap ? "" : " (see --unsafe-no-cap)"));
  }
  const DimensionHistogram h = enumerate_histogram(n, cfg.jobs, !cfg.counts_only);
  return {kExitOk, render_histogram(h, cfg.format)};
}

CommandOutput cmd_gf(const RunConfig& cfg) {
  const int max_n = require_max_n(cfg);
  const int order = cfg.order.value_or(std::max(kDefaultGfOrder, max_n));
  if (order < max_n) {
    throw UsageError("--order " + str(order) + " is smaller than --max-n " +
                     str(max_n));
  }
  const StrataPolynomials polys(order);
  std::vector<std::vector<std::string>> rows;
  Json list = Json::array();
  for (int n = 0; n <= max_n; ++n) {
    const PolyT& p = polys.polynomial(n);
    Json j{{"n", str(n)}, {"coefficients", p.integer_strings()}};
    std::vector<std::string> row{str(n), pretty_poly(p)};
    if (cfg.evaluate) {
      const std::string total = p.evaluate(1).get_str();
      const std::string primitive = p.evaluate(0).get_str();
      j["total"] = total;
      j["primitive"] = primitive;
      row.push_back(total);
      row.push_back(primitive);
    }
    list.push_back(j);
    rows.push_back(std::move(row));
  }
  switch (cfg.format) {
    case OutputFormat::json:
      return {kExitOk, dump(Json{{"command", "gf"},
                                 {"order", str(order)},
                                 {"normalization", "x^n/n!"},
                                 {"polynomials", list}})};
    case OutputFormat::csv: {
      std::vector<std::vector<std::string>> csv_rows;
      for (int n = 0; n <= max_n; ++n) {
        const auto coeffs = polys.polynomial(n).integer_strings();
        for (std::size_t d = 0; d < coeffs.size(); ++d)
          csv_rows.push_back({str(n), str(static_cast<int>(d)), coeffs[d]});
      }
      return {kExitOk, render_csv({"n", "dimension", "count"}, csv_rows)};
    }
    case OutputFormat::table: {
      std::vector<std::string> header{"n", "p_n(t)"};
      if (cfg.evaluate) {
        header.push_back("p_n(1)");
        header.push_back("p_n(0)");
      }
      return {kExitOk, render_table(header, rows)};
    }
  }
  return {};
}

CommandOutput cmd_verify(const RunConfig& cfg) {
  const VerifyReport report = run_verify(cfg.suite, cfg.n, cfg.seed);
  return {report.passed() ? kExitOk : kExitVerifyFailed,
          render_verify(report, cfg.format)};
}

CommandOutput cmd_diagram(const RunConfig& cfg) {
  const int n = require_n(cfg);
  if (n > kMaxDiagramRank) {
    throw UsageError("diagram rank must be <= " + str(kMaxDiagramRank));
  }
  if (!cfg.bits) throw UsageError("diagram: --bits is required");
  const ReducedWord word = build_reduced_word(n);
  std::optional<Diagram> parsed;
  try {
    parsed = Diagram::from_hex(n, *cfg.bits);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--bits: ") + e.what());
  }
  const Diagram d = *parsed;
  const CauchonScan scan = scan_cauchon(word, d);
  if (scan.failing_step) {
    const int step = *scan.failing_step;
    const int k = word.length() - step + 1;
    throw UsageError("diagram " + d.to_hex() +
                     " is not Cauchon: ascent condition fails at step l = " +
                     str(step) + " (position " + str(k) + ", letter s_" +
                     str(word.letter(k)) + ")");
  }

  const SymmetricGrid grid = symmetric_grid(diagram_to_staircase(word, d));
  const SignedPermutation t = tau(grid);
  const CycleClassification cls = classify_cycles(t);
  const int kernel = kernel_dimension(t);
  const SignedPermutation wd = w_delta(word, d);

  auto group_cycles = [](const GroupedCycle& g) {
    std::string out;
    for (const auto& c : g.cycles) {
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i]);
      }
      out += ')';
    }
    return out;
  };

  if (cfg.format == OutputFormat::json) {
    Json members = Json::array();
    for (int k : d.positions()) members.push_back(str(k));
    Json groups = Json::array();
    for (const auto& g : cls.cycles) {
      groups.push_back(Json{{"type", std::string(1, cycle_kind_code(g.kind))},
                            {"cycles", group_cycles(g)},
                            {"size", str(g.size)},
                            {"parity", g.even() ? "even" : "odd"},
                            {"contributes", g.contributes}});
    }
    Json j{{"command", "diagram"},
           {"n", str(n)},
           {"bits", d.to_hex()},
           {"members", members},
           {"w_delta", wd.to_string()},
           {"grid", Json{{"n", str(n)}, {"rows", grid.ascii_rows()}}},
           {"tau", Json{{"window", t.to_string()}, {"cycles", cycle_notation(t)}}},
           {"grouped_cycles", groups},
           {"dimension", Json{{"cycles", str(cls.dimension)},
                              {"kernel", str(kernel)}}}};
    return {kExitOk, dump(j)};
  }

  std::vector<std::vector<std::string>> rows;
  for (const auto& g : cls.cycles) {
    rows.push_back({std::string(1, cycle_kind_code(g.kind)), group_cycles(g),
                    str(g.size), g.even() ? "even" : "odd",
                    g.contributes ? "yes" : "no"});
  }
  const std::vector<std::string> header{"type", "cycles", "size", "parity",
                                        "contributes"};
  if (cfg.format == OutputFormat::csv) return {kExitOk, render_csv(header, rows)};

  std::string out = "diagram " + d.to_hex() + " (n = " + str(n) + ")\n";
  out += grid.to_ascii();
  out += "w_delta " + wd.to_string() + "\n";
  out += "tau     " + cycle_notation(t) + "\n\n";
  out += render_table(header, rows) + "\n";
  out += "dimension (cycles) " + str(cls.dimension) + "\n";
  out += "dimension (kernel) " + str(kernel) + "\n";
  return {kExitOk, out};
}

CommandOutput cmd_primitive_ratio(const RunConfig& cfg) {
  const int max_n = require_max_n(cfg);
  const int order = cfg.order.value_or(std::max(kDefaultRatioOrder, max_n));
  if (max_n > order) {
    throw UsageError("--max-n " + str(max_n) + " exceeds --order " + str(order));
  }
  const StrataCounts counts(order);
  std::vector<std::vector<std::string>> rows;
  bool decreasing = true;
  for (int n = 1; n <= max_n; ++n) {
    const BigRational ratio = counts.primitive_ratio(n);
    if (n > 1 && !(ratio < counts.primitive_ratio(n - 1))) decreasing = false;
    rows.push_back({str(n), counts.totals(n).get_str(),
                    counts.primitive_count(n).get_str(), ratio.get_str(),
                    to_decimal(ratio, 6)});
  }
  const std::vector<std::string> header{"n", "total", "primitive", "ratio",
                                        "decimal"};
  switch (cfg.format) {
    case OutputFormat::json: {
      Json list = Json::array();
      for (const auto& row : rows) {
        list.push_back(Json{{"n", row[0]},
                            {"total", row[1]},
                            {"primitive", row[2]},
                            {"ratio", row[3]},
                            {"decimal", row[4]}});
      }
      return {kExitOk, dump(Json{{"command", "primitive-ratio"},
                                 {"order", str(order)},
                                 {"strictly_decreasing", decreasing},
                                 {"rows", list}})};
    }
    case OutputFormat::csv:
      return {kExitOk, render_csv(header, rows)};
    case OutputFormat::table:
      return {kExitOk, render_table(header, rows) + "strictly decreasing: " +
                           (decreasing ? "yes" : "no") + "\n"};
  }
  return {};
}

CommandOutput run_command(const RunConfig& cfg) {
  try {
    if (cfg.jobs < 1) throw UsageError("--jobs must be >= 1");
    if (cfg.subcommand == "enumerate") return cmd_enumerate(cfg);
    if (cfg.subcommand == "gf") return cmd_gf(cfg);
    if (cfg.subcommand == "verify") return cmd_verify(cfg);
    if (cfg.subcommand == "diagram") return cmd_diagram(cfg);
    if (cfg.subcommand == "primitive-ratio") return cmd_primitive_ratio(cfg);
    throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
  } catch (const UsageError& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace bstrata
