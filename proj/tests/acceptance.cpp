// Acceptance gate: one PASS/FAIL line per criterion at pinned tolerances.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "xherm/xherm.hpp"

using namespace xherm;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

int g_failed = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Result()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    r.pass = false;
    r.detail += "; over runtime budget";
  }
  if (!r.pass) ++g_failed;
  std::printf("%s %2d %-22s %s [%.1f s / %.0f s]\n", r.pass ? "PASS" : "FAIL", id, name, r.detail.c_str(), secs,
              budget_s);
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

PrecisionConfig cfg256() {
  PrecisionConfig c;
  c.bits = 256;
  return c;
}

Result figure1() {
  const Partition lambda{4, 4, 2, 2};
  const auto r = default_root_cache().roots(lambda, 40, cfg256());
  const AttractionReport a = exceptional_attraction(lambda, {40}, cfg256());
  const double d = a.rows.at(0).max_distance;
  const bool counts = r->classification.regular_count == 28 && r->classification.exceptional_count == 12;
  const bool ok = counts && a.bijective() && a.rows[0].pairs.size() == 12 && d < 0.35;
  return {ok, "real " + std::to_string(r->classification.regular_count) + ", non-real " +
                  std::to_string(r->classification.exceptional_count) + ", bijective " +
                  (a.bijective() ? "yes" : "no") + ", max distance " + fmt("%.4f", d) + " (< 0.35)"};
}

Result identities() {
  std::map<std::string, int> fails, runs;
  std::map<std::string, std::string> first_fail;
  std::mt19937_64 rng(20240601);
  for (const Partition& lambda : even_partitions_up_to(8)) {
    const ExceptionalFamily fam(lambda);
    const std::vector<int> ns = fam.degrees().admissible(0, 30);
    auto record = [&](const IdentityVerdict& v) {
      ++runs[v.identity];
      if (v.outcome != Outcome::kPass) {
        if (fails[v.identity]++ == 0) first_fail[v.identity] = lambda.to_string() + " n=" + std::to_string(v.n);
      }
    };
    for (int n : ns) {
      record(check_ode(fam, n));
      record(check_residues(fam, n));
      record(check_hermite_window(fam, n));
    }
    // 50 random pairs n != m from the admissible degrees <= 30.
    std::uniform_int_distribution<std::size_t> pick(0, ns.size() - 1);
    for (int t = 0; t < 50 && ns.size() > 1; ++t) {
      std::size_t i = pick(rng), j = pick(rng);
      while (j == i) j = pick(rng);
      record(check_perfect_derivative(fam, ns[i], ns[j]));
    }
  }
  std::string d;
  bool ok = true;
  for (const char* id : {"ode", "perfect_derivative", "residue", "hermite_window"}) {
    const std::string key = id;
    const int r = runs.count(key) ? runs[key] : 0;
    const int f = fails.count(key) ? fails[key] : 0;
    if (!d.empty()) d += ", ";
    d += key + " " + std::to_string(r - f) + "/" + std::to_string(r);
    if (f) {
      ok = false;
      d += " (first failure " + first_fail[key] + ")";
    }
  }
  return {ok, d};
}

Result bookkeeping() {
  int checked = 0;
  for (const Partition& lambda : partitions_up_to(8, 0)) {
    const DegreeSequence ds(lambda);
    const ExceptionalFamily fam(lambda);
    if (static_cast<int>(ds.forbidden().size()) != lambda.size())
      return {false, "forbidden-set size for " + lambda.to_string()};
    if (!lambda.empty() && ds.max_forbidden() != lambda.size() + lambda.part(1) - 1)
      return {false, "max forbidden degree for " + lambda.to_string()};
    for (int n = ds.min_degree(); n <= ds.max_forbidden() + 6; ++n) {
      if (ds.contains(n)) {
        if (fam.polynomial(n).degree() != n) return {false, "deg P_n for " + lambda.to_string()};
      } else if (!exceptional_hermite(lambda, n).is_zero()) {
        return {false, "P_n not zero at forbidden n = " + std::to_string(n) + " for " + lambda.to_string()};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (lambda, n) cases, all partitions with |lambda| <= 8"};
}

Result mehler_heine() {
  const ExceptionalFamily fam(Partition{1, 1});
  std::vector<double> e;
  for (int n : {50, 200, 800}) e.push_back(mh_sup_error(fam, n, Parity::kEven, 4.0, 0.05, 256).sup);
  const bool ok = e[1] < e[0] && e[2] < e[1] && e[2] < 0.05;
  return {ok, "sup error " + fmt("%.4g", e[0]) + ", " + fmt("%.4g", e[1]) + ", " + fmt("%.4g", e[2]) +
                  " at 2n = 100, 400, 1600 (< 0.05 at 1600)"};
}

Result zero_spacing() {
  const std::vector<int> ns{50, 100, 200};
  const ConvergenceTable t = zero_spacing_table(Partition{2, 2}, {-2, -1, 0, 1, 2}, ns, cfg256());
  std::map<std::pair<int, std::string>, std::vector<double>> series;
  double worst = 0, odd0 = -1;
  for (const auto& row : t.rows) {
    series[{row.k, row.label}].push_back(row.error);
    if (row.n == 200) worst = std::max(worst, row.error);
    if (row.label == "odd" && row.k == 0) odd0 = std::max(odd0, row.error);
  }
  int worst_inv = 0;
  for (const auto& [key, v] : series) {
    int inv = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] >= v[i - 1] && !(v[i] == 0 && v[i - 1] == 0)) ++inv;
    worst_inv = std::max(worst_inv, inv);
  }
  const bool ok = worst_inv <= 1 && worst < 0.05 && odd0 == 0.0;
  return {ok, "max error at n=200 " + fmt("%.4g", worst) + " (< 0.05), most inversions per series " +
                  std::to_string(worst_inv) + ", odd k=0 error " + fmt("%g", odd0)};
}

Result semicircle() {
  std::string d;
  bool ok = true;
  for (const Partition& lambda : {Partition{1, 1}, Partition{2, 2}, Partition{4, 4, 2, 2}}) {
    const double a = semicircle_distance(lambda, 100, cfg256()).distance;
    const double b = semicircle_distance(lambda, 400, cfg256()).distance;
    ok = ok && b < a && b < 0.08;
    if (!d.empty()) d += "; ";
    d += lambda.to_string() + " d(100) " + fmt("%.4f", a) + " d(400) " + fmt("%.4f", b);
  }
  return {ok, d + " (d(400) < 0.08)"};
}

Result attraction() {
  const AttractionReport a = exceptional_attraction(Partition{1, 1}, {20, 40, 80, 160}, cfg256());
  const double slope = a.table.fit ? a.table.fit->slope : 0;
  const bool ok = a.table.fit && slope <= -0.4 && a.half_plane() && a.bijective();
  std::string d = "slope " + fmt("%.3f", slope) + " (<= -0.4), half-plane " + (a.half_plane() ? "yes" : "no");
  for (const auto& r : a.rows) d += ", d(" + std::to_string(r.n) + ") " + fmt("%.4f", r.max_distance);
  return {ok, d};
}

Result zero_balance() {
  const auto res = zero_balance_residuals(Partition{4, 4, 2, 2}, 40, cfg256());
  double worst = 0;
  bool collision = false;
  for (const auto& z : res) {
    worst = std::max(worst, z.residual);
    collision = collision || z.collision;
  }
  return {res.size() == 12 && worst < 1e-8 && !collision,
          std::to_string(res.size()) + " zeros, max residual " + fmt("%.3g", worst) + " (< 1e-8)"};
}

Result veselov() {
  std::map<ScanOutcome, int> counts;
  std::string ce;
  for (const ScanVerdict& v : veselov_scan(10, 4)) {
    ++counts[v.verdict];
    if (v.verdict == ScanOutcome::kCounterexample) ce += " COUNTEREXAMPLE " + v.lambda.to_string();
  }
  const int bad = counts[ScanOutcome::kCounterexample];
  return {bad == 0, std::to_string(counts[ScanOutcome::kAllSimple]) + " all-simple, " +
                        std::to_string(counts[ScanOutcome::kSimpleExceptOrigin]) + " simple-except-origin, " +
                        std::to_string(bad) + " counterexample" + ce};
}

Result interlacing() {
  int checked = 0, skipped = 0;
  std::string d;
  for (const Partition& lambda : even_partitions_up_to(6)) {
    const ExceptionalFamily fam(lambda);
    for (int n : {20, 40, 60}) {
      if (!fam.degrees().contains(n)) continue;
      const InterlacingReport r = check_interlacing(fam, n, cfg256());
      if (r.skipped) {
        ++skipped;
        continue;
      }
      ++checked;
      if (!r.pass())
        return {false, lambda.to_string() + " n=" + std::to_string(n) + " occupied " + std::to_string(r.occupied) +
                           " < " + std::to_string(r.required)};
    }
  }
  return {true, std::to_string(checked) + " cases pass, " + std::to_string(skipped) +
                    " skipped (lambda = (): P_n = H_n shares every endpoint)"};
}

Result classical() {
  const Partition none;
  const ExceptionalFamily fam(none);
  // Exact: ODE and the Mehler-Heine constants as rationals.
  for (int n = 0; n <= 30; ++n)
    if (!check_ode(fam, n).pass()) return {false, "classical ODE fails at n = " + std::to_string(n)};
  for (int n = 1; n <= 60; ++n) {
    for (Parity p : {Parity::kEven, Parity::kOdd}) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
      const mpq_class want(n % 2 ? -1 : 1, f << static_cast<mp_bitcnt_t>(2 * n + (p == Parity::kOdd ? 1 : 0)));
      const MHScaling s = mh_scaling(none, n, p);
      if (s.rational_part() != want || s.radicand_n != (p == Parity::kEven) || s.sqrt_n_power != 0)
        return {false, "MH constant mismatch at n = " + std::to_string(n)};
    }
  }
  // Numeric: every zero real, and equal to the Gauss-Hermite nodes.
  double node_gap = 0;
  for (int n : {5, 20, 60}) {
    const auto r = default_root_cache().roots(none, n, cfg256());
    if (r->classification.regular_count != n) return {false, "H_" + std::to_string(n) + " has non-real zeros"};
    const auto rule = gauss_hermite<BigFloat>(n, 256);
    for (int i = 0; i < n; ++i) {
      BigFloat g = r->roots.regular[static_cast<std::size_t>(i)].x - rule.nodes[static_cast<std::size_t>(i)];
      node_gap = std::max(node_gap, std::abs(g.to_double()));
    }
  }
  const double orth = check_orthogonality(none, 7, 12).normalized;
  const double mh0 = std::abs(mh_scaled_eval(none, 800, Parity::kEven, BigFloat(0.0, 256)).to_double() - 1);
  const bool ok = node_gap < 1e-10 && orth < 1e-10;
  return {ok, "ODE n<=30 exact, MH constants n<=60 exact, zeros vs Gauss-Hermite nodes " + fmt("%.2g", node_gap) +
                  ", orthogonality " + fmt("%.2g", orth) + ", |MH(0) - 1| at 2n=1600 " + fmt("%.2g", mh0)};
}

}  // namespace

int main() {
  criterion(1, "figure1", 30, figure1);
  criterion(2, "identity-suite", 300, identities);
  criterion(3, "degree-bookkeeping", 600, bookkeeping);
  criterion(4, "mehler-heine", 120, mehler_heine);
  criterion(5, "zero-spacing", 300, zero_spacing);
  criterion(6, "semicircle", 600, semicircle);
  criterion(7, "attraction", 180, attraction);
  criterion(8, "zero-balance", 60, zero_balance);
  criterion(9, "veselov-scan", 600, veselov);
  criterion(10, "interlacing", 300, interlacing);
  criterion(11, "classical-regression", 600, classical);
  std::printf("%d of 11 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
