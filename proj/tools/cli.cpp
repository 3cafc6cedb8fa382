#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "knotqc/burau.hpp"
#include "knotqc/diagram.hpp"
#include "knotqc/errors.hpp"
#include "knotqc/estimator.hpp"
#include "knotqc/gauss.hpp"

namespace knotqc::cli {

using json = nlohmann::json;

namespace {

std::string escape_line(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '\n') {
      out += "\\n";
    } else if (ch == '\\') {
      out += "\\\\";
    } else {
      out += ch;
    }
  }
  return out;
}

double number(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ParseError("not a number: '" + s + "'");
  return v;
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

std::string InvariantReport::to_text() const {
  std::ostringstream out;
  out << "command=" << escape_line(command) << '\n';
  if (!input.empty()) out << "input=" << escape_line(input) << '\n';
  if (!invariant.empty()) out << "invariant=" << escape_line(invariant) << '\n';
  if (!value.empty()) out << "value=" << escape_line(value) << '\n';
  for (const auto& [k, v] : meta) out << k << '=' << escape_line(v) << '\n';
  for (const auto& row : rows) out << "row=" << json(row).dump() << '\n';
  out << "elapsed_ms=" << format_double(elapsed_ms) << '\n';
  json j = {{"command", command}, {"input", input},           {"invariant", invariant},
            {"value", value},     {"elapsed_ms", elapsed_ms}, {"meta", meta},
            {"rows", rows}};
  out << "json=" << j.dump() << '\n';
  return out.str();
}

InvariantReport InvariantReport::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::string> payload;
  while (std::getline(in, line)) {
    if (line.rfind("json=", 0) == 0) payload = line.substr(5);
  }
  if (!payload) throw ParseError("report has no json= line");
  try {
    const json j = json::parse(*payload);
    InvariantReport r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.invariant = j.at("invariant").get<std::string>();
    r.value = j.at("value").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.meta = j.at("meta").get<std::map<std::string, std::string>>();
    r.rows = j.at("rows").get<std::vector<std::map<std::string, std::string>>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty complex number");
  if (s.rfind("unit:", 0) == 0) {
    const auto slash = s.find('/', 5);
    if (slash == std::string::npos) throw ParseError("expected unit:p/q");
    const double p = number(std::string_view(s).substr(5, slash - 5));
    const double q = number(std::string_view(s).substr(slash + 1));
    if (q == 0.0) throw ParseError("unit:p/q needs q != 0");
    return std::polar(1.0, 2.0 * std::numbers::pi * p / q);
  }
  if (s.back() != 'i') return {number(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') split = k;
  }
  const std::string re = s.substr(0, split);
  std::string im = s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : number(re), number(im)};
}

std::string format_complex(std::complex<double> z) {
  std::string out = format_double(z.real());
  if (z.imag() != 0.0) {
    const std::string im = format_double(z.imag());
    out += (im.front() == '-' ? im : "+" + im) + "i";
  }
  return out;
}

SkeinBudget default_budget() {
  SkeinBudget budget;
  if (const char* env = std::getenv("KNOT_BUDGET"); env != nullptr && *env != '\0') {
    std::uint64_t nodes = 0;
    const std::string_view text(env);
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), nodes);
    if (ec != std::errc() || end != text.data() + text.size() || nodes == 0) {
      throw ParseError("KNOT_BUDGET must be a positive integer");
    }
    budget.max_nodes = nodes;
  }
  return budget;
}

namespace {

std::vector<int> cyclic_canonical(std::vector<int> w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<int> core(w.begin() + static_cast<std::ptrdiff_t>(lo),
                        w.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<int> best = core;
  for (std::size_t r = 1; r < core.size(); ++r) {
    std::rotate(core.begin(), core.begin() + 1, core.end());
    best = std::min(best, core);
  }
  return best;
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 64);
    return h;
  }
};

}  // namespace

std::vector<TableGroup> knot_table(int strands, int max_length, const SkeinBudget& budget) {
  if (strands < 1 || max_length < 0) throw std::invalid_argument("table needs n >= 1, L >= 0");
  if (strands > kTableMaxStrands || max_length > kTableMaxLength) {
    throw BudgetExceeded("table guard: n <= " + std::to_string(kTableMaxStrands) +
                         ", L <= " + std::to_string(kTableMaxLength));
  }
  std::vector<int> alphabet;
  for (int i = 1; i < strands; ++i) alphabet.push_back(i);
  for (int i = 1; i < strands; ++i) alphabet.push_back(-i);

  std::vector<TableGroup> groups;
  std::unordered_map<std::string, std::size_t> by_jones;
  // Closures of conjugate words coincide, so Jones is cached per cyclic class.
  std::unordered_map<std::vector<int>, std::string, VectorHash> class_jones;
  SkeinEngine engine(budget);

  std::vector<int> word;
  auto visit = [&]() {
    const BraidWord b(strands, word);
    if (closure_components(b) != 1) return;
    const auto key = cyclic_canonical(word);
    auto it = class_jones.find(key);
    if (it == class_jones.end()) {
      const auto poly = engine.homfly(to_link_code(closure_to_diagram(BraidWord(strands, key))));
      it = class_jones.emplace(key, to_string(specialize_jones(poly))).first;
    }
    auto [g, fresh] = by_jones.try_emplace(it->second, groups.size());
    if (fresh) groups.push_back({it->second, b, 0});
    ++groups[g->second].size;
  };
  // Length-major so that each group's representative is a shortest word.
  for (int length = 0; length <= max_length; ++length) {
    auto extend = [&](auto&& self) -> void {
      if (static_cast<int>(word.size()) == length) {
        visit();
        return;
      }
      for (int e : alphabet) {
        if (!word.empty() && word.back() == -e) continue;
        word.push_back(e);
        self(self);
        word.pop_back();
      }
    };
    if (strands == 1 && length > 0) break;
    extend(extend);
  }
  return groups;
}

std::vector<BenchRow> skein_bench(int max_crossings, const SkeinBudget& budget) {
  if (max_crossings < 1) throw std::invalid_argument("bench needs --max-crossings >= 1");
  std::vector<BenchRow> rows;
  for (int c = 1; c <= max_crossings; ++c) {
    const LinkCode code = to_link_code(closure_to_diagram(BraidWord(2, std::vector<int>(c, 1))));
    BenchRow row;
    row.crossings = c;

    SkeinBudget plain_budget = budget;
    plain_budget.memo_enabled = false;
    plain_budget.max_crossings = std::max(budget.max_crossings, c);
    SkeinEngine plain(plain_budget);
    Stopwatch plain_clock;
    try {
      plain.homfly(code);
      row.plain_nodes = plain.last_stats().nodes;
      row.plain_leaves = plain.last_stats().leaves;
    } catch (const BudgetExceeded&) {
      row.plain_exhausted = true;
    }
    row.plain_ms = plain_clock.ms();

    SkeinBudget memo_budget = plain_budget;
    memo_budget.memo_enabled = true;
    SkeinEngine memo(memo_budget);
    Stopwatch memo_clock;
    memo.homfly(code);
    row.memo_ms = memo_clock.ms();
    row.memo_nodes = memo.last_stats().nodes;
    rows.push_back(row);
  }
  return rows;
}

namespace {

// "@path" reads the value from a file, trailing whitespace dropped.
std::string resolve(const std::string& value) {
  if (value.empty() || value.front() != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw ParseError("cannot read " + value.substr(1));
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

void add_budget_meta(InvariantReport& r, const SkeinBudget& b) {
  r.meta["budget.max_crossings"] = std::to_string(b.max_crossings);
  r.meta["budget.max_nodes"] = std::to_string(b.max_nodes);
}

void add_calibration_meta(InvariantReport& r, const Calibration& c) {
  r.meta["calibration.chirality"] = c.chirality == Chirality::Mirror ? "mirror" : "direct";
  r.meta["calibration.alpha"] = format_complex(c.alpha);
  r.meta["calibration.delta"] = format_complex(c.delta);
}

struct InvariantArgs {
  std::optional<std::string> braid;
  std::optional<std::string> gauss;
  std::optional<std::string> pd;
  std::string invariant = "homfly";
  std::string t;
  int k = 0;
  std::uint64_t budget = 0;
};

InvariantReport cmd_invariant(const InvariantArgs& a, SkeinBudget budget) {
  if (a.budget != 0) budget.max_nodes = a.budget;
  if (int(a.braid.has_value()) + int(a.gauss.has_value()) + int(a.pd.has_value()) != 1) {
    throw ParseError("give exactly one of --braid, --gauss, --pd");
  }

  InvariantReport r;
  r.command = "invariant";
  r.invariant = a.invariant;
  Stopwatch clock;

  std::optional<BraidWord> braid;
  std::function<LaurentPoly2()> homfly_value;
  if (a.braid) {
    braid = parse_braid(resolve(*a.braid));
    r.input = to_string(*braid);
    homfly_value = [&] { return homfly_braid(*braid, budget); };
  } else if (a.gauss) {
    const GaussCode code = parse_gauss(resolve(*a.gauss));
    r.input = "gauss:" + to_string(code);
    homfly_value = [code, &budget] { return homfly(code, budget); };
  } else {
    const PDDiagram d = parse_pd(resolve(*a.pd));
    r.input = "pd:" + escape_line(to_string(d));
    homfly_value = [d, &budget] { return homfly(d, budget); };
  }

  if (a.invariant == "homfly") {
    r.value = to_string(homfly_value());
  } else if (a.invariant == "jones") {
    r.value = to_string(specialize_jones(homfly_value()));
  } else if (a.invariant == "jones-at") {
    if (a.t.empty()) throw ParseError("jones-at needs --t");
    const auto t = parse_complex(a.t);
    r.meta["t"] = format_complex(t);
    r.value = format_complex(jones_at(specialize_jones(homfly_value()), t));
  } else if (a.invariant == "coeff") {
    r.meta["k"] = std::to_string(a.k);
    r.value = to_string(coeff_z(homfly_value(), a.k), "a");
  } else if (a.invariant == "burau") {
    if (!braid) throw ParseError("burau needs --braid");
    if (a.t.empty()) {
      r.value = to_string(burau_symbolic(*braid));
    } else {
      const auto t = parse_complex(a.t);
      r.meta["t"] = format_complex(t);
      const auto m = burau_numeric(*braid, t);
      for (Eigen::Index row = 0; row < m.rows(); ++row) {
        r.value += '[';
        for (Eigen::Index col = 0; col < m.cols(); ++col) {
          if (col != 0) r.value += ", ";
          r.value += format_complex(m(row, col));
        }
        r.value += "]\n";
      }
    }
  } else {
    throw ParseError("unknown invariant '" + a.invariant + "'");
  }
  add_budget_meta(r, budget);
  r.elapsed_ms = clock.ms();
  return r;
}

struct RealizableArgs {
  std::string gauss;
  bool is_unsigned = false;
};

InvariantReport cmd_realizable(const RealizableArgs& a, int& exit_code) {
  InvariantReport r;
  r.command = "realizable";
  r.invariant = "realizable";
  Stopwatch clock;
  const std::string text = resolve(a.gauss);
  bool ok = false;
  if (a.is_unsigned) {
    const auto entries = parse_unsigned_gauss(text);
    r.input = "unsigned:" + text;
    r.meta["crossings"] = std::to_string(entries.size() / 2);
    ok = realizable_unsigned(entries);
  } else {
    const GaussCode code = parse_gauss(text);
    r.input = "gauss:" + to_string(code);
    const CarrierSurface s = carrier_surface(code);
    r.meta["crossings"] = std::to_string(code.crossing_count());
    r.meta["faces"] = std::to_string(s.faces);
    r.meta["chi"] = std::to_string(s.euler_characteristic());
    ok = realizable(code);
  }
  r.value = ok ? "true" : "false";
  exit_code = ok ? kOk : kNegative;
  r.elapsed_ms = clock.ms();
  return r;
}

struct EstimateArgs {
  std::string braid;
  double epsilon = 0.1;
  double delta = 0.05;
  std::uint64_t seed = 1;
  bool check = false;
  unsigned threads = 0;
  std::uint64_t budget = 0;
};

InvariantReport cmd_estimate(const EstimateArgs& a, SkeinBudget budget) {
  if (a.budget != 0) budget.max_nodes = a.budget;
  InvariantReport r;
  r.command = "estimate";
  r.invariant = "jones-estimate";
  Stopwatch clock;
  const BraidWord b = parse_braid(resolve(a.braid));
  r.input = to_string(b);
  EstimatorOptions options;
  options.threads = a.threads;
  JonesEstimate est;
  try {
    est = jones_estimate(b, a.epsilon, a.delta, a.seed, options);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  r.value = format_complex(est.estimate);
  r.meta["t"] = format_complex(fibonacci_jones_point());
  r.meta["epsilon"] = format_double(est.epsilon);
  r.meta["delta"] = format_double(est.delta);
  r.meta["seed"] = std::to_string(est.seed);
  r.meta["samples_per_part"] = std::to_string(est.samples_per_part);
  r.meta["samples"] = std::to_string(est.total_samples);
  r.meta["scale"] = format_double(est.scale);
  r.meta["trace_estimate"] = format_complex(est.trace_estimate);
  add_calibration_meta(r, est.calibration);
  if (a.check) {
    add_budget_meta(r, budget);
    try {
      const auto exact = jones_at(b, fibonacci_jones_point(), budget);
      const double error = std::abs(exact - est.estimate);
      r.meta["exact"] = format_complex(exact);
      r.meta["error"] = format_double(error);
      r.meta["within_bound"] = error <= est.epsilon * est.scale ? "true" : "false";
    } catch (const BudgetExceeded&) {
      r.meta["exact"] = "budget-exceeded";
    }
  }
  r.elapsed_ms = clock.ms();
  return r;
}

InvariantReport cmd_table(int strands, int max_length, SkeinBudget budget) {
  InvariantReport r;
  r.command = "table";
  r.invariant = "jones";
  r.input = "n=" + std::to_string(strands) + " L=" + std::to_string(max_length);
  Stopwatch clock;
  const auto groups = knot_table(strands, max_length, budget);
  std::size_t words = 0;
  for (const auto& g : groups) {
    words += g.size;
    r.rows.push_back({{"jones", g.jones},
                      {"representative", to_string(g.representative)},
                      {"size", std::to_string(g.size)}});
  }
  r.value = std::to_string(groups.size());
  r.meta["groups"] = std::to_string(groups.size());
  r.meta["knot_words"] = std::to_string(words);
  add_budget_meta(r, budget);
  r.elapsed_ms = clock.ms();
  return r;
}

InvariantReport cmd_bench(int max_crossings, SkeinBudget budget) {
  InvariantReport r;
  r.command = "bench";
  r.invariant = "homfly";
  r.input = "sigma_1^c, c=1.." + std::to_string(max_crossings);
  Stopwatch clock;
  for (const auto& row : skein_bench(max_crossings, budget)) {
    r.rows.push_back(
        {{"crossings", std::to_string(row.crossings)},
         {"plain_nodes", row.plain_exhausted ? "exhausted" : std::to_string(row.plain_nodes)},
         {"plain_leaves", row.plain_exhausted ? "exhausted" : std::to_string(row.plain_leaves)},
         {"memo_nodes", std::to_string(row.memo_nodes)},
         {"plain_ms", format_double(row.plain_ms)},
         {"memo_ms", format_double(row.memo_ms)},
         {"bound", format_double(std::ldexp(1.0, row.crossings))}});
  }
  r.value = std::to_string(r.rows.size());
  add_budget_meta(r, budget);
  r.elapsed_ms = clock.ms();
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot invariants and a Fibonacci-anyon Jones estimator", "knotqc"};
  app.require_subcommand(1);

  InvariantArgs inv;
  auto* sub_inv = app.add_subcommand("invariant", "Exact invariant of a braid closure or code");
  sub_inv->add_option("--braid", inv.braid, "Braid word, e.g. \"n=3 1 -2 1\"");
  sub_inv->add_option("--gauss", inv.gauss, "Signed Gauss code, e.g. O1+U2+O3+U1+O2+U3+");
  sub_inv->add_option("--pd", inv.pd, "PD code text (X a b c d sign lines)");
  sub_inv->add_option("--invariant", inv.invariant, "homfly|jones|jones-at|coeff|burau")
      ->check(CLI::IsMember({"homfly", "jones", "jones-at", "coeff", "burau"}));
  sub_inv->add_option("--t", inv.t, "Complex evaluation point: a+bi or unit:p/q");
  sub_inv->add_option("--k", inv.k, "z-power for coeff");
  sub_inv->add_option("--budget", inv.budget, "Skein node budget");

  RealizableArgs real;
  auto* sub_real = app.add_subcommand("realizable", "Planarity of a Gauss code");
  sub_real->add_option("--gauss", real.gauss, "Gauss code")->required();
  sub_real->add_flag("--unsigned", real.is_unsigned, "Code carries no crossing signs");

  EstimateArgs est;
  auto* sub_est = app.add_subcommand("estimate", "Monte-Carlo Jones estimate at e^{2 pi i/5}");
  sub_est->add_option("--braid", est.braid, "Braid word")->required();
  sub_est->add_option("--epsilon", est.epsilon, "Additive error (relative to scale)");
  sub_est->add_option("--delta", est.delta, "Failure probability");
  sub_est->add_option("--seed", est.seed, "RNG seed");
  sub_est->add_flag("--check", est.check, "Also compute the exact value");
  sub_est->add_option("--threads", est.threads, "Worker threads (0 = all cores)");
  sub_est->add_option("--budget", est.budget, "Skein node budget for --check");

  int table_strands = 2;
  int table_length = 4;
  auto* sub_table = app.add_subcommand("table", "Group knot closures by Jones polynomial");
  sub_table->add_option("--strands", table_strands, "Strand count (<= 4)");
  sub_table->add_option("--maxlen", table_length, "Maximum word length (<= 10)");

  int bench_crossings = 16;
  auto* sub_bench = app.add_subcommand("bench", "Memoized vs plain skein recursion");
  sub_bench->add_option("--max-crossings", bench_crossings, "Largest c in sigma_1^c");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    const SkeinBudget budget = default_budget();
    InvariantReport report;
    int code = kOk;
    if (*sub_inv) {
      report = cmd_invariant(inv, budget);
    } else if (*sub_real) {
      report = cmd_realizable(real, code);
    } else if (*sub_est) {
      report = cmd_estimate(est, budget);
    } else if (*sub_table) {
      report = cmd_table(table_strands, table_length, budget);
    } else {
      report = cmd_bench(bench_crossings, budget);
    }
    out << report.to_text();
    return code;
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << '\n';
    return kResourceError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  }
}

}  // namespace knotqc::cli
