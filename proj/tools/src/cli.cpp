#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cackit/bounds.hpp"
#include "cackit/cac.hpp"
#include "cackit/channel.hpp"
#include "cackit/code_io.hpp"
#include "cackit/constructions.hpp"
#include "cackit/number_theory.hpp"
#include "cackit/oracle.hpp"
#include "json.hpp"

namespace cackit::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Thrown for bad flag values that CLI11 cannot catch by itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  std::uint64_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    Range r{std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    if (r.lo > r.hi) throw UsageError(std::string(flag) + ": empty range " + text);
    return r;
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + ": expected a..b, got " + text);
  }
}

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CACKIT_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
    }
  }
  return n;
}

std::string join(const std::vector<std::uint64_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

json code_json(const Cac& code) { return json::parse(to_json(code)); }

json violation_json(const Violation& v) { return {{"subset", v.subset}, {"offsets", v.offsets}, {"user", v.user}}; }

// ---- payload builders, shared by the commands and repro ----

json bound_json(const BoundReport& r) {
  return {{"length", r.length},     {"weight", r.weight}, {"method", std::string(to_string(r.method))},
          {"S", r.eligible},        {"credits", r.credits}, {"witness", r.witness},
          {"F", r.f},               {"bound", r.bound}};
}

std::string bound_csv_header() { return "L,w,bound,F,S\n"; }

std::string bound_csv_row(const BoundReport& r) {
  return std::to_string(r.length) + "," + std::to_string(r.weight) + "," + std::to_string(r.bound) + "," +
         std::to_string(r.f) + "," + join(r.eligible, ';') + "\n";
}

json construct_summary(const std::string& method, const Cac& code) {
  json doc{{"method", method}, {"length", code.length()}, {"weight", code.weight()}, {"size", code.size()}};
  const auto tags = code.generators();
  if (std::all_of(tags.begin(), tags.end(), [](const auto& g) { return g.has_value(); })) {
    doc["generators"] = code.generator_set();
  }
  const ResidueSet uncovered = uncovered_differences(code);
  doc["uncovered"] = std::vector<Residue>(uncovered.begin(), uncovered.end());
  return doc;
}

json verify_json(const Cac& code, bool with_classes) {
  const Verdict v = verify_cac(code);
  json doc{{"ok", v.ok()}, {"length", code.length()}, {"weight", code.weight()}, {"size", code.size()}};
  if (v.conflict) {
    doc["conflict"] = {{"first", v.conflict->first},
                       {"second", v.conflict->second},
                       {"difference", v.conflict->difference},
                       {"first_codeword", std::vector<Residue>(code[v.conflict->first].elements().begin(),
                                                               code[v.conflict->first].elements().end())},
                       {"second_codeword", std::vector<Residue>(code[v.conflict->second].elements().begin(),
                                                                code[v.conflict->second].elements().end())}};
  }
  if (with_classes) {
    const ExceptionalReport report = classify(code);
    json words = json::array();
    for (const auto& c : report.codewords) {
      json w{{"index", c.index}, {"exceptional", c.exceptional}, {"diff_size", c.diff_size}};
      if (c.exceptional) {
        w["stabilizer"] = {{"generator", c.stabilizer.generator}, {"order", c.stabilizer.order()}};
        w["completion_size"] = c.completion_size;
        w["delta"] = c.delta;
      }
      words.push_back(std::move(w));
    }
    doc["classes"] = std::move(words);
    doc["exceptional_count"] = report.exceptional_count();
    if (code.weight() >= 2) {
      const Rational rhs = theorem2_rhs(code, report);
      doc["size_bound"] = {
          {"numerator", rhs.numerator}, {"denominator", rhs.denominator}, {"floor", rhs.floor()}};
    }
  }
  return doc;
}

Cac code_15_3() {
  std::vector<Codeword> w;
  for (auto e : {std::vector<Residue>{0, 5, 10}, {0, 1, 2}, {0, 7, 11}, {0, 6, 12}}) {
    w.emplace_back(ResidueSet(15, e));
  }
  return Cac(15, 3, std::move(w));
}

Cac code_26_4() {
  std::vector<Codeword> w;
  for (auto e : {std::vector<Residue>{0, 1, 2, 3}, {0, 4, 8, 12}, {0, 5, 10, 15}, {0, 6, 13, 19}}) {
    w.emplace_back(ResidueSet(26, e));
  }
  return Cac(26, 4, std::move(w));
}

Cac code_5883_7() { return construct_c3(construct_c2(53, 2, 3), 3, construct_c2(37, 2, 3)); }

std::string table_csv(Range weights, Range lengths, BoundMethod method) {
  std::string out = bound_csv_header();
  for (std::uint64_t w = weights.lo; w <= weights.hi; ++w) {
    for (std::uint64_t L = lengths.lo; L <= lengths.hi; ++L) {
      if (L < w) continue;
      out += bound_csv_row(bound_report(L, w, method));
    }
  }
  return out;
}

// Representatives L = 2^p 3^q 7^r * 11 of the 18 exponent classes for w = 6.
std::string f_classes_csv() {
  std::string out = "L,p,q,r,F,bound\n";
  for (unsigned r : {0u, 1u}) {
    for (unsigned q : {0u, 1u, 2u}) {
      for (unsigned p : {0u, 1u, 3u}) {
        std::uint64_t L = 11;
        for (unsigned i = 0; i < p; ++i) L *= 2;
        for (unsigned i = 0; i < q; ++i) L *= 3;
        for (unsigned i = 0; i < r; ++i) L *= 7;
        out += std::to_string(L) + "," + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
               "," + std::to_string(compute_f(L, 6).value) + "," + std::to_string(theorem4_bound(L, 6)) + "\n";
      }
    }
  }
  return out;
}

struct OptimalRow {
  std::uint64_t length, weight, size, prime;
};
constexpr OptimalRow kOptimalRows[] = {{15, 3, 4, 3},   {35, 4, 6, 5},   {45, 5, 6, 5},
                                     {63, 5, 8, 7},   {77, 6, 8, 7},   {91, 7, 8, 7},
                                     {165, 8, 12, 11}, {187, 9, 12, 11}, {221, 9, 14, 13}};

std::string thm9_rows_csv() {
  std::string out = "L,w,M,bound,constructed\n";
  for (const auto& row : kOptimalRows) {
    const Cac code = theorem9_family(row.prime, row.weight);
    if (!verify_cac(code).ok()) throw std::logic_error("thm9 code failed verification");
    out += std::to_string(row.length) + "," + std::to_string(row.weight) + "," + std::to_string(row.size) + "," +
           std::to_string(theorem4_bound(row.length, row.weight)) + "," + std::to_string(code.size()) + "\n";
  }
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

struct ReproItem {
  std::string name;
  std::function<std::string()> make;
};

std::vector<ReproItem> repro_items() {
  return {
      {"classify_15_3.json", [] { return dump(verify_json(code_15_3(), true)); }},
      {"classify_26_4.json", [] { return dump(verify_json(code_26_4(), true)); }},
      {"c1_421_6.json", [] { return dump(construct_summary("c1", construct_c1(421, 6))); }},
      {"c2_111_7.json", [] { return dump(construct_summary("c2", construct_c2(37, 2, 3))); }},
      {"c3_5883_7.json", [] { return dump(construct_summary("c3", code_5883_7())); }},
      {"thm8_259_4.json", [] { return dump(construct_summary("thm8", theorem8_family(37, 4, construct_c1(37, 4)))); }},
      {"f_w6_classes.csv", [] { return f_classes_csv(); }},
      {"thm9_optimal.csv", [] { return thm9_rows_csv(); }},
      {"bounds_w3_7.csv", [] { return table_csv({3, 7}, {20, 240}, BoundMethod::theorem4); }},
  };
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---- commands ----

struct Options {
  // bound / table
  std::uint64_t length = 0, weight = 0;
  std::string method = "theorem4";
  std::string format = "json";
  std::string weights, lengths;
  // construct
  std::string construction;
  std::uint64_t p = 0, f = 0, s = 0, w = 0;
  std::vector<std::uint64_t> more_primes;
  std::string inner1, inner2, inner, out_file;
  // verify / simulate / search
  std::string file;
  bool classify = false;
  std::string prove_file;
  std::uint64_t budget = 0;
  std::string symmetry = "auto";
  std::size_t active = 0;
  bool exhaustive = false;
  std::uint64_t trials = 0, seed = 0;
  // repro
  std::string golden_dir;
  bool update = false;
};

int cmd_bound(const Options& o, std::ostream& out) {
  if (o.length < o.weight || o.weight < 2) throw UsageError("need L >= w >= 2");
  const BoundReport r = bound_report(o.length, o.weight, parse_bound_method(o.method));
  if (o.format == "csv") {
    out << bound_csv_header() << bound_csv_row(r);
  } else {
    out << dump(bound_json(r));
  }
  return kOk;
}

Cac build_construction(const Options& o) {
  const std::string& m = o.construction;
  auto need = [&](std::uint64_t v, const char* flag) {
    if (v == 0) throw UsageError("--method " + m + " needs " + flag);
  };
  if (m == "c1") {
    need(o.p, "--p"), need(o.w, "--w");
    return build(params::C1{o.p, o.w});
  }
  if (m == "c2") {
    need(o.p, "--p"), need(o.f, "--f"), need(o.s, "--s");
    return build(params::C2{o.p, o.f, o.s});
  }
  if (m == "c3") {
    if (o.inner1.empty() || o.inner2.empty()) throw UsageError("--method c3 needs --inner1 and --inner2");
    need(o.s, "--s");
    return build(params::C3{read_cac_file(o.inner1), o.s, read_cac_file(o.inner2)});
  }
  if (m == "cor7") {
    need(o.p, "--p");
    return build(params::Cor7{o.p, o.more_primes});
  }
  if (m == "thm8") {
    need(o.p, "--p"), need(o.w, "--w");
    std::optional<Cac> inner;
    if (!o.inner.empty()) inner = read_cac_file(o.inner);
    return build(params::Thm8{o.p, o.w, std::move(inner)});
  }
  if (m == "thm9") {
    need(o.p, "--p"), need(o.w, "--w");
    return build(params::Thm9{o.p, o.w});
  }
  throw UsageError("unknown construction method " + m);
}

int cmd_construct(const Options& o, std::ostream& out) {
  const Cac code = build_construction(o);
  if (!o.out_file.empty()) write_cac_file(code, o.out_file);
  out << dump(construct_summary(o.construction, code));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Cac code = read_cac_file(o.file);
  const json doc = verify_json(code, o.classify);
  out << dump(doc);
  if (!doc["ok"].get<bool>()) {
    const auto& c = doc["conflict"];
    err << "not a CAC: codewords " << c["first"] << " and " << c["second"] << " share difference "
        << c["difference"] << "\n";
    return kFailure;
  }
  return kOk;
}

std::optional<bool> symmetry_flag(const std::string& s) {
  if (s == "on") return true;
  if (s == "off") return false;
  return std::nullopt;
}

int cmd_search(const Options& o, std::ostream& out) {
  std::optional<std::uint64_t> budget;
  if (o.budget > 0) budget = o.budget;
  if (!o.prove_file.empty()) {
    const Cac code = read_cac_file(o.prove_file);
    if (!verify_cac(code).ok()) throw UsageError(o.prove_file + " is not a CAC");
    const OptimalityResult r = prove_optimal(code, budget);
    json doc{{"length", code.length()},
             {"weight", code.weight()},
             {"size", code.size()},
             {"verdict", std::string(to_string(r.verdict))},
             {"by_bound", r.by_bound},
             {"nodes", r.nodes}};
    if (r.larger) doc["larger"] = code_json(*r.larger);
    out << dump(doc);
    return kOk;
  }
  if (o.length < o.weight || o.weight < 2) throw UsageError("need L >= w >= 2");
  SearchConfig cfg;
  cfg.length = o.length;
  cfg.weight = o.weight;
  cfg.node_budget = budget;
  cfg.symmetry = symmetry_flag(o.symmetry);
  const SearchResult r = max_cac(cfg);
  out << dump({{"length", o.length},
               {"weight", o.weight},
               {"M", r.best},
               {"proof_status", std::string(to_string(r.status))},
               {"nodes", r.nodes},
               {"witness", code_json(r.witness)}});
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const Cac code = read_cac_file(o.file);
  if (o.active == 0 || o.active > code.size()) {
    throw UsageError("--active must lie in [1, " + std::to_string(code.size()) + "]");
  }
  if (o.exhaustive) {
    const ExhaustiveOutcome r = o.budget > 0 ? exhaustive_check(code, o.active, o.budget)
                                             : exhaustive_check(code, o.active);
    json doc{{"verdict", r.non_blocking ? "non_blocking" : "violated"},
             {"checks", r.checks},
             {"k", o.active},
             {"violations", json::array()}};
    if (r.violation) doc["violations"].push_back(violation_json(*r.violation));
    out << dump(doc);
    return r.non_blocking ? kOk : kFailure;
  }
  if (o.trials == 0) throw UsageError("simulate needs --exhaustive or --trials N");
  const TrialSummary s = random_trials(code, o.active, o.trials, o.seed, thread_cap());
  out << dump(json::parse(report_json(s)));
  return s.non_blocking() ? kOk : kFailure;
}

int cmd_table(const Options& o, std::ostream& out) {
  const Range w = parse_range(o.weights, "--weights");
  const Range L = parse_range(o.lengths, "--lengths");
  if (w.lo < 2) throw UsageError("--weights must start at 2 or more");
  const BoundMethod method = parse_bound_method(o.method);
  if (method == BoundMethod::corollary_w3 && (w.lo != 3 || w.hi != 3)) throw UsageError("method w3 needs --weights 3");
  if (method == BoundMethod::corollary_w6 && (w.lo != 6 || w.hi != 6)) throw UsageError("method w6 needs --weights 6");
  if (o.format == "json") {
    json rows = json::array();
    for (std::uint64_t ww = w.lo; ww <= w.hi; ++ww) {
      for (std::uint64_t LL = L.lo; LL <= L.hi; ++LL) {
        if (LL >= ww) rows.push_back(bound_json(bound_report(LL, ww, method)));
      }
    }
    out << dump(rows);
  } else {
    out << table_csv(w, L, method);
  }
  return kOk;
}

int cmd_repro(const Options& o, std::ostream& out, std::ostream& err) {
  const fs::path dir = o.golden_dir;
  if (o.update) fs::create_directories(dir);
  json items = json::array();
  bool all_match = true;
  for (const auto& item : repro_items()) {
    const std::string text = item.make();
    const fs::path path = dir / item.name;
    std::string status;
    if (o.update) {
      std::ofstream(path, std::ios::binary) << text;
      status = "written";
    } else if (!fs::exists(path)) {
      status = "missing";
    } else {
      status = read_text(path) == text ? "match" : "mismatch";
    }
    if (status == "missing" || status == "mismatch") {
      all_match = false;
      err << item.name << ": " << status << "\n";
    }
    items.push_back({{"name", item.name}, {"status", status}});
  }
  out << dump({{"ok", all_match}, {"items", items}});
  return all_match ? kOk : kFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conflict-avoiding code toolkit", "cackit"};
  app.require_subcommand(1);
  Options o;

  auto* bound = app.add_subcommand("bound", "Upper bound on the size of an (L, w) code");
  bound->add_option("--length,-L", o.length, "Code length L")->required();
  bound->add_option("--weight,-w", o.weight, "Codeword weight w")->required();
  bound->add_option("--method", o.method, "theorem4 | theorem5 | w3 | w6")
      ->check(CLI::IsMember({"theorem4", "theorem5", "w3", "w6"}));
  bound->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* construct = app.add_subcommand("construct", "Build and verify a code");
  construct->add_option("--method", o.construction, "c1 | c2 | c3 | cor7 | thm8 | thm9")
      ->required()
      ->check(CLI::IsMember({"c1", "c2", "c3", "cor7", "thm8", "thm9"}));
  construct->add_option("--p", o.p, "Prime p");
  construct->add_option("--w", o.w, "Weight w");
  construct->add_option("--f", o.f, "Index parameter f (c2)");
  construct->add_option("--s", o.s, "Multiplier s (c2, c3)");
  construct->add_option("--more-primes", o.more_primes, "Further primes for the nested cor7 family")
      ->delimiter(',');
  construct->add_option("--inner1", o.inner1, "Code file for the first inner code (c3)");
  construct->add_option("--inner2", o.inner2, "Code file for the second inner code (c3)");
  construct->add_option("--inner", o.inner, "Code file for the inner (p, w) code (thm8)");
  construct->add_option("--out", o.out_file, "Write the code to this file");

  auto* verify = app.add_subcommand("verify", "Check a code file");
  verify->add_option("file", o.file, "Code file")->required();
  verify->add_flag("--classify", o.classify, "Report exceptional codewords and the size bound");

  auto* search = app.add_subcommand("search", "Exhaustive search for a maximum code");
  search->add_option("--length,-L", o.length, "Code length L");
  search->add_option("--weight,-w", o.weight, "Codeword weight w");
  search->add_option("--prove-optimal", o.prove_file, "Decide whether this code is maximum");
  search->add_option("--budget", o.budget, "Node budget (0 = unlimited)");
  search->add_option("--symmetry", o.symmetry, "on | off | auto")->check(CLI::IsMember({"on", "off", "auto"}));

  auto* simulate = app.add_subcommand("simulate", "Collision-channel simulation");
  simulate->add_option("file", o.file, "Code file")->required();
  simulate->add_option("--active,-k", o.active, "Number of active users")->required();
  auto* exh = simulate->add_flag("--exhaustive", o.exhaustive, "All subsets and relative offsets");
  auto* trials = simulate->add_option("--trials", o.trials, "Random trials");
  simulate->add_option("--seed", o.seed, "Seed for random trials");
  simulate->add_option("--budget", o.budget, "Combination budget for --exhaustive");
  exh->excludes(trials);

  auto* table = app.add_subcommand("table", "Bound table over ranges of w and L");
  table->add_option("--weights", o.weights, "a..b")->required();
  table->add_option("--lengths", o.lengths, "c..d")->required();
  table->add_option("--method", o.method, "theorem4 | theorem5 | w3 | w6")
      ->check(CLI::IsMember({"theorem4", "theorem5", "w3", "w6"}));
  table->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"json", "csv"}));

  auto* repro = app.add_subcommand("repro", "Regenerate the reference outputs and diff against golden files");
  repro->add_option("--golden-dir", o.golden_dir, "Directory of golden files")->required();
  repro->add_flag("--update", o.update, "Rewrite the golden files");

  std::vector<const char*> argv{"cackit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (table->parsed() && table->count("--format") == 0) o.format = "csv";

  try {
    if (bound->parsed()) return cmd_bound(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (search->parsed()) return cmd_search(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (repro->parsed()) return cmd_repro(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CodeFormatError& e) {
    err << "cannot read code: " << e.what() << "\n";
    return kUsage;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return kFailure;
  } catch (const EnvelopeError& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const BudgetError& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace cackit::cli
