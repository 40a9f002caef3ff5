// Command-line front end: poly, roots, verify, scan, asym.
//
// Exit codes: 0 all checks pass, 1 substantive failure, 2 usage or
// configuration error, 3 numerical non-convergence.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xherm/serialize.hpp"
#include "xherm/xherm.hpp"

namespace {

using namespace xherm;
namespace fs = std::filesystem;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string partition;
  long bits = kDefaultBits;
  std::string format = "json";
  std::string output;
  int workers = 1;
};

long default_bits() {
  const char* env = std::getenv("XHERM_BITS");
  if (!env || !*env) return kDefaultBits;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 64) throw UsageError(std::string("XHERM_BITS must be an integer >= 64 (got '") + env + "')");
  return v;
}

// "3..12", "50,100,200", "-2..2", or a mix such as "3..5,9".
std::vector<int> parse_int_list(const std::string& spec, const char* what) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string tok;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError(std::string("bad ") + what + " '" + spec + "'");
    return v;
  };
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw UsageError(std::string("bad ") + what + " '" + spec + "'");
    auto dots = tok.find("..", 1);
    if (dots == std::string::npos) {
      out.push_back(to_int(tok));
      continue;
    }
    int a = to_int(tok.substr(0, dots)), b = to_int(tok.substr(dots + 2));
    if (b < a) throw UsageError(std::string("empty range in ") + what + " '" + spec + "'");
    for (int v = a; v <= b; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

Partition get_partition(const std::string& spec) {
  bool sorted = true;
  Partition p = parse_partition(spec, &sorted);
  if (!sorted) std::cerr << "warning: partition parts sorted to " << p.to_string() << "\n";
  return p;
}

std::string set_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

void require_degree(const Partition& lambda, int n) {
  DegreeSequence ds(lambda);
  if (n < ds.min_degree())
    throw UsageError("degree " + std::to_string(n) + " is outside the domain n >= |lambda| - r = " +
                     std::to_string(ds.min_degree()) + " for partition " + lambda.to_string());
  if (!ds.contains(n))
    throw UsageError("forbidden degree " + std::to_string(n) + " for partition " + lambda.to_string() +
                     "; forbidden degrees: " + set_string(ds.forbidden_in_domain()));
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("format '" + f + "' is not supported by this command");
}

class Sink {
 public:
  explicit Sink(const std::string& path, bool append = false) {
    if (!path.empty() && path != "-") {
      file_.open(path, append ? std::ios::app : std::ios::trunc);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

PrecisionConfig precision(const Common& c) {
  if (c.bits < 64) throw UsageError("--bits must be at least 64");
  PrecisionConfig p;
  p.bits = c.bits;
  return p;
}

void add_common(CLI::App* sub, Common& c, bool partition = true) {
  if (partition) sub->add_option("-p,--partition", c.partition, "partition, comma-separated parts (\"\" = empty)");
  sub->add_option("--bits", c.bits, "working precision in bits (default: $XHERM_BITS or 256)");
  sub->add_option("-f,--format", c.format, "output format: json | csv | plot-data");
  sub->add_option("-o,--output", c.output, "output file (default: stdout)");
  sub->add_option("-j,--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
}

// ---------------------------------------------------------------------------

int cmd_poly(const Common& c, std::optional<int> degree) {
  check_format(c.format, {"json", "csv"});
  const Partition lambda = get_partition(c.partition);
  IntPoly p;
  json j;
  j["partition"] = partition_json(lambda);
  if (degree) {
    require_degree(lambda, *degree);
    p = ExceptionalFamily(lambda).polynomial(*degree);
    j["kind"] = "exceptional_hermite";
    j["n"] = *degree;
  } else {
    p = generalized_hermite(lambda);
    j["kind"] = "generalized_hermite";
  }
  j["degree"] = p.degree();
  j["coefficients"] = coefficients_json(p);
  Sink out(c.output);
  if (c.format == "csv") {
    out.os() << "k,coefficient\n";
    for (int k = 0; k <= p.degree(); ++k) out.os() << k << "," << p[k].get_str() << "\n";
  } else {
    out.os() << j.dump() << "\n";
  }
  return 0;
}

int cmd_roots(const Common& c, int degree, int digits) {
  check_format(c.format, {"json", "csv", "plot-data"});
  const Partition lambda = get_partition(c.partition);
  require_degree(lambda, degree);
  const PrecisionConfig cfg = precision(c);
  ExceptionalFamily fam(lambda);
  const CertifiedRoots r = certified_roots(fam, degree, cfg);
  Sink out(c.output);
  if (c.format == "csv") {
    out.os() << roots_csv(r, digits);
  } else if (c.format == "plot-data") {
    std::vector<std::complex<double>> reg, exc;
    for (const auto& x : r.roots.regular) reg.emplace_back(x.x.to_double(), 0.0);
    for (const auto& z : r.roots.exceptional) exc.push_back(z.z.to_complex());
    out.os() << series_csv({{"regular", reg}, {"exceptional", exc}});
  } else {
    out.os() << roots_json(lambda, degree, r, digits).dump() << "\n";
  }
  if (r.certified) return 0;
  std::cerr << "error: zeros of P_" << degree << " not certified after " << r.escalations
            << " precision escalation(s): " << r.roots.diagnostic << "regular " << r.classification.regular_count
            << " (expected " << r.classification.expected_regular << ", Sturm " << r.sturm_count << ")\n";
  return r.roots.converged ? kExitFail : kExitNonConvergence;
}

struct VerifyOptions {
  std::string degrees;
  std::string checks = "ode,pd,residue,window";
  std::optional<int> window;
  int quad_points = 200;
  double tol = 1e-10;
};

int cmd_verify(const Common& c, const VerifyOptions& o) {
  check_format(c.format, {"json", "csv"});
  const Partition lambda = get_partition(c.partition);
  const std::vector<int> degrees = parse_int_list(o.degrees, "degree list");
  const PrecisionConfig cfg = precision(c);
  std::vector<std::string> checks;
  {
    std::stringstream ss(o.checks);
    std::string t;
    while (std::getline(ss, t, ',')) {
      if (t == "perfect_derivative") t = "pd";
      if (t == "residues") t = "residue";
      if (t == "orthogonality") t = "orth";
      if (t == "interlacing") t = "interlace";
      if (t != "ode" && t != "pd" && t != "residue" && t != "window" && t != "orth" && t != "interlace")
        throw UsageError("unknown check '" + t + "' (known: ode, pd, residue, window, orth, interlace)");
      checks.push_back(t);
    }
  }
  if (checks.empty()) throw UsageError("no checks selected");
  const ExceptionalFamily fam(lambda);
  const DegreeSequence& ds = fam.degrees();

  struct Task {
    std::string check;
    int n;
    int m;
  };
  std::vector<Task> tasks;
  std::vector<json> skipped;
  std::vector<int> admissible;
  for (int n : degrees) {
    if (ds.contains(n)) {
      admissible.push_back(n);
      continue;
    }
    std::string why = n < ds.min_degree() ? "outside the domain n >= " + std::to_string(ds.min_degree())
                                          : "forbidden degree; forbidden degrees: " + set_string(ds.forbidden_in_domain());
    skipped.push_back({{"identity", "*"}, {"partition", partition_json(lambda)}, {"n", n}, {"outcome", "skipped"},
                       {"note", why}});
  }
  for (const auto& ch : checks) {
    if (ch == "pd" || ch == "orth") {
      if (ch == "orth" && !lambda.is_even()) {
        skipped.push_back({{"identity", "orthogonality"}, {"partition", partition_json(lambda)}, {"outcome", "skipped"},
                           {"note", "partition is not even"}});
        continue;
      }
      for (std::size_t i = 0; i + 1 < admissible.size(); ++i) tasks.push_back({ch, admissible[i], admissible[i + 1]});
      continue;
    }
    for (int n : admissible) {
      if (ch == "interlace") {
        const int s = lambda.size() + lambda.length();
        if (!lambda.is_even() || n <= s) {
          skipped.push_back({{"identity", "interlacing"}, {"partition", partition_json(lambda)}, {"n", n},
                             {"outcome", "skipped"},
                             {"note", !lambda.is_even() ? "partition is not even" : "needs n > |lambda| + r"}});
          continue;
        }
      }
      tasks.push_back({ch, n, 0});
    }
  }

  const std::vector<json> results = parallel_map(tasks, c.workers, [&](const Task& t) -> json {
    if (t.check == "ode") return verdict_json(check_ode(fam, t.n));
    if (t.check == "pd") return verdict_json(check_perfect_derivative(fam, t.n, t.m));
    if (t.check == "residue") return verdict_json(check_residues(fam, t.n, cfg.bits));
    if (t.check == "window") return verdict_json(check_hermite_window(fam, t.n, o.window));
    if (t.check == "orth") return orthogonality_json(check_orthogonality(fam, t.n, t.m, o.quad_points, o.tol, cfg.bits));
    return interlacing_json(check_interlacing(fam, t.n, cfg));
  });

  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"inconclusive", 0}, {"skipped", 0}};
  Sink out(c.output);
  if (c.format == "csv") out.os() << "identity,partition,n,m,outcome,note\n";
  auto emit = [&](const json& j) {
    counts[j["outcome"].get<std::string>()]++;
    if (c.format == "csv") {
      std::string note = j.value("note", "");
      for (char& ch : note)
        if (ch == ',') ch = ';';
      out.os() << j["identity"].get<std::string>() << ",\"" << lambda.to_string() << "\","
               << (j.contains("n") ? std::to_string(j["n"].get<int>()) : "") << ","
               << (j.contains("m") ? std::to_string(j["m"].get<int>()) : "") << "," << j["outcome"].get<std::string>()
               << "," << note << "\n";
    } else {
      out.os() << j.dump() << "\n";
    }
  };
  for (const auto& j : skipped) emit(j);
  for (const auto& j : results) emit(j);
  json summary = {{"summary", {{"pass", counts["pass"]},
                               {"fail", counts["fail"]},
                               {"inconclusive", counts["inconclusive"]},
                               {"skipped", counts["skipped"]}}}};
  if (c.format == "csv") std::cerr << summary.dump() << "\n";
  else out.os() << summary.dump() << "\n";
  return counts["fail"] > 0 ? kExitFail : 0;
}

// ---------------------------------------------------------------------------
// scan with a resume file recording the last completed partition.

constexpr const char* kResumeFormat = "xherm-scan-resume";

struct ResumeState {
  std::size_t completed = 0;
  std::map<std::string, long> counts{{"all-simple", 0}, {"simple-except-origin", 0}, {"counterexample", 0}};
};

ResumeState load_resume(const std::string& path, int max_size, const std::vector<Partition>& parts) {
  auto corrupt = [&](const std::string& why) {
    return UsageError("refusing to resume from '" + path + "': " + why + "; rerun with --fresh to start over");
  };
  std::ifstream in(path);
  if (!in) throw corrupt("cannot read file");
  json j;
  try {
    in >> j;
  } catch (const std::exception&) {
    throw corrupt("not valid JSON");
  }
  ResumeState st;
  try {
    if (j.at("format").get<std::string>() != kResumeFormat || j.at("version").get<int>() != 1)
      throw corrupt("unknown format");
    if (j.at("max_size").get<int>() != max_size)
      throw corrupt("recorded for --max-size " + std::to_string(j.at("max_size").get<int>()));
    const long done = j.at("completed").get<long>();
    if (done < 0 || static_cast<std::size_t>(done) > parts.size()) throw corrupt("completed count out of range");
    st.completed = static_cast<std::size_t>(done);
    const auto last = j.at("last_completed").get<std::vector<int>>();
    if (st.completed > 0 && parts[st.completed - 1].parts() != last)
      throw corrupt("last completed partition does not match the enumeration");
    if (st.completed == 0 && !last.empty()) throw corrupt("inconsistent last completed partition");
    long total = 0;
    for (auto& [k, v] : st.counts) {
      v = j.at("counts").at(k).get<long>();
      if (v < 0) throw corrupt("negative count");
      total += v;
    }
    if (static_cast<std::size_t>(total) != st.completed) throw corrupt("counts do not add up");
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw corrupt("missing or malformed fields");
  }
  return st;
}

void save_resume(const std::string& path, int max_size, const std::vector<Partition>& parts, const ResumeState& st) {
  json j = {{"format", kResumeFormat},
            {"version", 1},
            {"max_size", max_size},
            {"completed", st.completed},
            {"last_completed", st.completed > 0 ? parts[st.completed - 1].parts() : std::vector<int>{}},
            {"counts", st.counts}};
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw UsageError("cannot write resume file '" + tmp + "'");
    f << j.dump() << "\n";
  }
  fs::rename(tmp, path);
}

int cmd_scan(const Common& c, int max_size, const std::string& resume, bool fresh) {
  check_format(c.format, {"json"});
  if (max_size < 1) throw UsageError("--max-size must be at least 1");
  const std::vector<Partition> parts = partitions_up_to(max_size);
  ResumeState st;
  if (!resume.empty() && !fresh && fs::exists(resume)) st = load_resume(resume, max_size, parts);
  const std::size_t start = st.completed;
  Sink out(c.output, start > 0);
  const std::size_t chunk = static_cast<std::size_t>(std::max(64, 16 * c.workers));
  for (std::size_t at = start; at < parts.size(); at += chunk) {
    std::vector<Partition> batch(parts.begin() + static_cast<long>(at),
                                 parts.begin() + static_cast<long>(std::min(parts.size(), at + chunk)));
    for (const ScanVerdict& v : parallel_map(batch, c.workers, scan_partition)) {
      out.os() << scan_json(v).dump() << "\n";
      st.counts[to_string(v.verdict)]++;
      if (v.verdict == ScanOutcome::kCounterexample)
        std::cerr << "COUNTEREXAMPLE: gcd(H, H') for partition " << v.lambda.to_string() << " is "
                  << v.gcd.to_string() << "\n";
    }
    out.os().flush();
    st.completed = at + batch.size();
    if (!resume.empty()) save_resume(resume, max_size, parts, st);
  }
  json summary = {{"summary",
                   {{"max_size", max_size},
                    {"partitions", parts.size()},
                    {"resumed_from", start},
                    {"all-simple", st.counts["all-simple"]},
                    {"simple-except-origin", st.counts["simple-except-origin"]},
                    {"counterexample", st.counts["counterexample"]}}}};
  out.os() << summary.dump() << "\n";
  return st.counts["counterexample"] > 0 ? kExitFail : 0;
}

// ---------------------------------------------------------------------------

struct AsymOptions {
  bool figure1 = false;
  std::string theorem;
  std::string ks = "-2..2";
  std::string ns;
  std::string parity = "both";
  std::string plot_data;
  double xmax = 4.0;
  double step = 0.05;
};

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::trunc);
  if (!f) throw UsageError("cannot write '" + p.string() + "'");
  f << content;
}

void prefetch(RootCache& cache, const Partition& lambda, const std::vector<int>& degrees, const PrecisionConfig& cfg,
              int workers) {
  parallel_map(degrees, workers, [&](int n) {
    cache.roots(lambda, n, cfg);
    return 0;
  });
}

int cmd_asym(const Common& c, const AsymOptions& o) {
  check_format(c.format, {"json", "csv", "plot-data"});
  const PrecisionConfig cfg = precision(c);
  RootCache& cache = default_root_cache();
  Sink out(c.output);
  if (!o.plot_data.empty()) fs::create_directories(o.plot_data);

  if (o.figure1) {
    const Partition lambda = c.partition.empty() ? Partition{4, 4, 2, 2} : get_partition(c.partition);
    const int n = o.ns.empty() ? 40 : parse_int_list(o.ns, "degree list").front();
    require_degree(lambda, n);
    const ZeroOverlay ov = zero_overlay(lambda, n, cfg, cache);
    const auto r = cache.roots(lambda, n, cfg);
    if (!o.plot_data.empty()) {
      write_file(fs::path(o.plot_data) / "hermite_lambda_zeros.csv", xy_csv(ov.hermite_lambda));
      write_file(fs::path(o.plot_data) / "pn_zeros.csv", xy_csv(ov.pn));
    }
    if (c.format == "plot-data" || c.format == "csv") {
      out.os() << series_csv({{"hermite_lambda", ov.hermite_lambda}, {"pn", ov.pn}});
      return 0;
    }
    auto pts = [](const std::vector<std::complex<double>>& v) {
      json a = json::array();
      for (const auto& z : v) a.push_back({number(z.real()), number(z.imag())});
      return a;
    };
    json j = {{"figure", "zeros_overlay"},
              {"partition", partition_json(lambda)},
              {"n", n},
              {"regular_count", r->classification.regular_count},
              {"exceptional_count", r->classification.exceptional_count},
              {"hermite_lambda_zeros", pts(ov.hermite_lambda)},
              {"pn_zeros", pts(ov.pn)}};
    int rc = 0;
    if (lambda.is_even() && !lambda.empty() && scan_partition(lambda).verdict == ScanOutcome::kAllSimple &&
        n >= lambda.size() + lambda.part(1)) {
      AttractionReport a = exceptional_attraction(lambda, {n}, cfg, cache);
      j["matching"] = attraction_json(a);
      if (!a.bijective()) rc = kExitFail;
    }
    out.os() << j.dump() << "\n";
    return rc;
  }

  if (o.theorem.empty()) throw UsageError("asym needs --figure1 or --theorem mh|spacing|semicircle|attraction|balance");
  const Partition lambda = get_partition(c.partition);
  auto emit_table = [&](const ConvergenceTable& t, json extra = json::object()) {
    if (!o.plot_data.empty()) write_file(fs::path(o.plot_data) / (t.quantity + ".csv"), table_csv(t));
    if (c.format == "json") {
      json j = table_json(t);
      for (auto& [k, v] : extra.items()) j[k] = v;
      out.os() << j.dump() << "\n";
    } else {
      out.os() << table_csv(t);
    }
  };

  if (o.theorem == "mh") {
    const std::vector<int> ns = parse_int_list(o.ns.empty() ? "50,200,800" : o.ns, "n list");
    std::vector<Parity> pars;
    if (o.parity == "even" || o.parity == "both") pars.push_back(Parity::kEven);
    if (o.parity == "odd" || o.parity == "both") pars.push_back(Parity::kOdd);
    if (pars.empty()) throw UsageError("--parity must be even, odd or both");
    for (Parity par : pars) {
      for (int n : ns) mh_scaling(lambda, n, par);  // validates before any work
      ConvergenceTable t = mh_table(lambda, ns, par, o.xmax, o.step, cfg.bits);
      json consts = json::array();
      for (const auto& row : t.rows) consts.push_back(mh_scaling(lambda, row.n, par).to_string());
      emit_table(t, {{"limit", std::string("H_lambda(0) ") + (par == Parity::kEven ? "cos x" : "sin x")},
                     {"h_lambda_0", generalized_hermite(lambda)[0].get_str()},
                     {"constants", consts}});
    }
    return 0;
  }
  if (o.theorem == "spacing") {
    const std::vector<int> ns = parse_int_list(o.ns.empty() ? "50,100,200" : o.ns, "n list");
    const std::vector<int> ks = parse_int_list(o.ks, "k range");
    std::vector<int> degs;
    for (int n : ns) {
      require_large_degree(lambda, 2 * n);
      require_large_degree(lambda, 2 * n + 1);
      degs.push_back(2 * n);
      degs.push_back(2 * n + 1);
    }
    prefetch(cache, lambda, degs, cfg, c.workers);
    emit_table(zero_spacing_table(lambda, ks, ns, cfg, cache));
    return 0;
  }
  if (o.theorem == "semicircle") {
    const std::vector<int> ns = parse_int_list(o.ns.empty() ? "100,200,400" : o.ns, "n list");
    for (int n : ns)
      if (!lambda.empty()) require_large_degree(lambda, n);
    prefetch(cache, lambda, ns, cfg, c.workers);
    ConvergenceTable t;
    t.quantity = "semicircle_ks_distance";
    t.lambda = lambda;
    json deficiency = json::array();
    for (int n : ns) {
      SemicircleReport s = semicircle_distance(lambda, n, cfg, cache);
      t.rows.push_back({n, 0, "", s.distance, 0.0, s.distance});
      deficiency.push_back(number(s.deficiency));
    }
    emit_table(t, {{"deficiency", deficiency}});
    return 0;
  }
  if (o.theorem == "attraction") {
    const std::vector<int> ns = parse_int_list(o.ns.empty() ? "20,40,80,160" : o.ns, "n list");
    for (int n : ns) require_large_degree(lambda, n);
    prefetch(cache, lambda, ns, cfg, c.workers);
    AttractionReport a = exceptional_attraction(lambda, ns, cfg, cache);
    if (!o.plot_data.empty()) write_file(fs::path(o.plot_data) / (a.table.quantity + ".csv"), table_csv(a.table));
    if (c.format == "json") out.os() << attraction_json(a).dump() << "\n";
    else out.os() << table_csv(a.table);
    if (!a.bijective()) {
      for (const auto& r : a.rows)
        if (!r.anomaly.empty()) std::cerr << "matching anomaly at n = " << r.n << ": " << r.anomaly << "\n";
      return kExitFail;
    }
    return 0;
  }
  if (o.theorem == "balance") {
    const std::vector<int> ns = parse_int_list(o.ns.empty() ? "40" : o.ns, "n list");
    for (int n : ns) require_degree(lambda, n);
    if (!lambda.is_even()) throw UsageError("balance needs an even partition");
    if (scan_partition(lambda).verdict != ScanOutcome::kAllSimple)
      throw UsageError("balance needs H_lambda with simple zeros");
    prefetch(cache, lambda, ns, cfg, c.workers);
    ConvergenceTable t;
    t.quantity = "zero_balance_residual";
    t.lambda = lambda;
    json zs = json::array();
    int rc = 0;
    for (int n : ns) {
      const auto res = zero_balance_residuals(lambda, n, cfg, cache);
      for (std::size_t j = 0; j < res.size(); ++j) {
        t.rows.push_back({n, static_cast<int>(j), "", res[j].residual, 0.0, res[j].residual});
        zs.push_back({{"n", n}, {"j", j}, {"z", {number(res[j].z.real()), number(res[j].z.imag())}},
                      {"collision", res[j].collision}});
        if (res[j].collision) rc = kExitFail;
      }
    }
    emit_table(t, {{"zeros", zs}});
    return rc;
  }
  throw UsageError("unknown --theorem '" + o.theorem + "' (mh, spacing, semicircle, attraction, balance)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional Hermite polynomials: exact construction, zeros, identities, asymptotics"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all subcommand help");

  Common common;
  try {
    common.bits = default_bits();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto* poly = app.add_subcommand("poly", "exact coefficients of H_lambda, or of P_n with --degree");
  add_common(poly, common);
  std::optional<int> poly_degree;
  poly->add_option("-n,--degree", poly_degree, "degree n of P_n");

  auto* roots = app.add_subcommand("roots", "certified zeros of P_n split into regular and exceptional");
  add_common(roots, common);
  int roots_degree = 0;
  int digits = 40;
  roots->add_option("-n,--degree", roots_degree, "degree n of P_n")->required();
  roots->add_option("--digits", digits, "significant digits per coordinate")->check(CLI::Range(5, 10000));

  auto* verify = app.add_subcommand("verify", "exact identity checks over a degree grid (JSON lines)");
  add_common(verify, common);
  VerifyOptions vo;
  verify->add_option("-d,--degrees,--degree", vo.degrees, "degrees: 3..12, 5,7,9 or a single n")->required();
  verify->add_option("-c,--checks", vo.checks, "comma list of ode, pd, residue, window, orth, interlace");
  verify->add_option("--window", vo.window, "Hermite window width s (default |lambda| + r)");
  verify->add_option("--quad-points", vo.quad_points, "initial Gauss-Hermite rule size for orth")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", vo.tol, "tolerance for orth");

  auto* scan = app.add_subcommand("scan", "gcd(H_lambda, H_lambda') over all partitions up to a size");
  add_common(scan, common, false);
  int max_size = 0;
  std::string resume;
  bool fresh = false;
  scan->add_option("-m,--max-size", max_size, "largest |lambda|")->required();
  scan->add_option("--resume", resume, "resume file (JSON record of the last completed partition)");
  scan->add_flag("--fresh", fresh, "ignore an existing resume file and start over");

  auto* asym = app.add_subcommand("asym", "asymptotic tables and the zero overlay preset");
  add_common(asym, common);
  AsymOptions ao;
  asym->add_flag("--figure1", ao.figure1, "zeros of H_lambda and P_n for lambda = (4,4,2,2), n = 40");
  asym->add_option("-t,--theorem", ao.theorem, "mh | spacing | semicircle | attraction | balance");
  asym->add_option("-k,--k", ao.ks, "k range for spacing (default -2..2)");
  asym->add_option("-n,--n", ao.ns,
                   "n list; half-degree index for mh and spacing (P_2n, P_2n+1), degree for the others");
  asym->add_option("--parity", ao.parity, "mh parity: even | odd | both");
  asym->add_option("--xmax", ao.xmax, "mh grid half-width");
  asym->add_option("--step", ao.step, "mh grid step")->check(CLI::PositiveNumber);
  asym->add_option("--plot-data", ao.plot_data, "directory for CSV series files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*poly) return cmd_poly(common, poly_degree);
    if (*roots) return cmd_roots(common, roots_degree, digits);
    if (*verify) return cmd_verify(common, vo);
    if (*scan) return cmd_scan(common, max_size, resume, fresh);
    if (*asym) return cmd_asym(common, ao);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
