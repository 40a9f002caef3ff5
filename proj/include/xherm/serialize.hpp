#ifndef XHERM_SERIALIZE_HPP
#define XHERM_SERIALIZE_HPP

// JSON and CSV forms of the library's results. Exact integers are always
// decimal strings; multiprecision reals are decimal strings with enough
// digits to round-trip at their precision.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "xherm/asymptotics.hpp"
#include "xherm/roots.hpp"
#include "xherm/verify.hpp"

namespace xherm {

using json = nlohmann::ordered_json;

// Finite doubles as numbers; -0 is written as 0.
inline json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v == 0 ? 0.0 : v;
}

inline std::string decimal(const BigFloat& x, int digits = 0) {
  if (x.is_zero()) return "0";
  return x.to_string(digits);
}

inline json coefficients_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

inline json partition_json(const Partition& l) { return l.parts(); }

inline json poly_json(const IntPoly& p) {
  json j;
  j["degree"] = p.is_zero() ? json(nullptr) : json(p.degree());
  j["coefficients"] = coefficients_json(p);
  return j;
}

inline json roots_json(const Partition& lambda, int n, const CertifiedRoots& c, int digits = 40) {
  json j;
  j["partition"] = partition_json(lambda);
  j["n"] = n;
  j["precision_bits"] = c.roots.precision_bits;
  j["certified"] = c.certified;
  j["regular_count"] = c.classification.regular_count;
  j["exceptional_count"] = c.classification.exceptional_count;
  j["expected_regular"] = c.classification.expected_regular;
  j["sturm_count"] = c.sturm_count >= 0 ? json(c.sturm_count) : json(nullptr);
  j["escalations"] = c.escalations;
  j["diagnostic"] = c.roots.diagnostic;
  json reg = json::array();
  for (const auto& r : c.roots.regular)
    reg.push_back({{"re", decimal(r.x, digits)}, {"im", "0"}, {"residual", decimal(r.residual, 6)}});
  json exc = json::array();
  for (const auto& e : c.roots.exceptional)
    exc.push_back({{"re", decimal(e.z.re(), digits)}, {"im", decimal(e.z.im(), digits)},
                   {"residual", decimal(e.residual, 6)}});
  j["regular"] = std::move(reg);
  j["exceptional"] = std::move(exc);
  return j;
}

inline std::string roots_csv(const CertifiedRoots& c, int digits = 40) {
  std::ostringstream os;
  os << "re,im,kind,residual\n";
  for (const auto& r : c.roots.regular) os << decimal(r.x, digits) << ",0,regular," << decimal(r.residual, 6) << "\n";
  for (const auto& e : c.roots.exceptional)
    os << decimal(e.z.re(), digits) << "," << decimal(e.z.im(), digits) << ",exceptional," << decimal(e.residual, 6)
       << "\n";
  return os.str();
}

inline json verdict_json(const IdentityVerdict& v) {
  json j;
  j["identity"] = v.identity;
  j["partition"] = partition_json(v.lambda);
  j["n"] = v.n;
  if (v.m) j["m"] = *v.m;
  j["outcome"] = to_string(v.outcome);
  j["vacuous"] = v.vacuous;
  j["witness"] = poly_json(v.witness);
  std::string note = v.note;
  while (!note.empty() && (note.back() == ' ' || note.back() == ';')) note.pop_back();
  j["note"] = note;
  if (!v.contour.empty()) {
    json a = json::array();
    for (const auto& c : v.contour)
      a.push_back({{"center", {number(c.center.real()), number(c.center.imag())}},
                   {"residue", {number(c.residue.real()), number(c.residue.imag())}},
                   {"radius", number(c.radius)},
                   {"relative", number(c.relative)}});
    j["contour"] = std::move(a);
  }
  return j;
}

inline json orthogonality_json(const OrthogonalityReport& r) {
  json h = json::array();
  for (auto [pts, v] : r.history) h.push_back({{"points", pts}, {"value", number(v)}});
  return {{"identity", "orthogonality"}, {"partition", partition_json(r.lambda)}, {"n", r.n}, {"m", r.m},
          {"outcome", r.pass() ? "pass" : "fail"}, {"normalized", number(r.normalized)}, {"points", r.points},
          {"converged", r.converged}, {"tolerance", number(r.tolerance)}, {"history", std::move(h)}};
}

inline json interlacing_json(const InterlacingReport& r) {
  return {{"identity", "interlacing"}, {"partition", partition_json(r.lambda)}, {"n", r.n},
          {"outcome", r.skipped ? "skipped" : (r.pass() ? "pass" : "fail")}, {"intervals", r.intervals},
          {"occupied", r.occupied}, {"required", r.required}, {"note", r.note}};
}

inline json scan_json(const ScanVerdict& v) {
  return {{"partition", partition_json(v.lambda)}, {"size", v.lambda.size()}, {"verdict", to_string(v.verdict)},
          {"gcd", coefficients_json(v.gcd)}, {"origin_multiplicity", v.origin_multiplicity}};
}

inline json table_json(const ConvergenceTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = {{"n", r.n}, {"k", r.k}};
    if (!r.label.empty()) row["label"] = r.label;
    row["observed"] = number(r.observed);
    row["target"] = number(r.target);
    row["error"] = number(r.error);
    rows.push_back(std::move(row));
  }
  json j = {{"quantity", t.quantity}, {"partition", partition_json(t.lambda)}, {"rows", std::move(rows)}};
  if (t.fit) j["fit"] = {{"slope", number(t.fit->slope)}, {"intercept", number(t.fit->intercept)},
                         {"residual", number(t.fit->residual)}};
  return j;
}

inline std::string table_csv(const ConvergenceTable& t) {
  std::ostringstream os;
  os.precision(17);
  os << "quantity,n,k,label,observed,target,error\n";
  for (const auto& r : t.rows)
    os << t.quantity << "," << r.n << "," << r.k << "," << r.label << "," << r.observed << "," << r.target << ","
       << r.error << "\n";
  return os.str();
}

inline json attraction_json(const AttractionReport& a) {
  json j = table_json(a.table);
  j["bijective"] = a.bijective();
  j["half_plane"] = a.half_plane();
  j["sup_scaled_distance"] = number(a.sup_scaled);
  j["min_scaled_distance"] = number(a.min_scaled);
  json rows = json::array();
  for (const auto& r : a.rows) {
    json pairs = json::array();
    for (const auto& p : r.pairs)
      pairs.push_back({{"hermite_zero", {number(p.hermite_zero.real()), number(p.hermite_zero.imag())}},
                       {"pn_zero", {number(p.pn_zero.real()), number(p.pn_zero.imag())}},
                       {"distance", number(p.distance)}});
    rows.push_back({{"n", r.n}, {"max_distance", number(r.max_distance)}, {"mutual_nearest", r.mutual_nearest},
                    {"half_plane", r.half_plane}, {"anomaly", r.anomaly}, {"pairs", std::move(pairs)}});
  }
  j["matchings"] = std::move(rows);
  return j;
}

// "series,x,y" rows for external plotting.
inline std::string series_csv(const std::vector<std::pair<std::string, std::vector<std::complex<double>>>>& series) {
  std::ostringstream os;
  os.precision(17);
  os << "series,x,y\n";
  for (const auto& [name, pts] : series)
    for (const auto& z : pts) os << name << "," << z.real() << "," << (z.imag() == 0 ? 0.0 : z.imag()) << "\n";
  return os.str();
}

inline std::string xy_csv(const std::vector<std::complex<double>>& pts) {
  std::ostringstream os;
  os.precision(17);
  os << "x,y\n";
  for (const auto& z : pts) os << z.real() << "," << (z.imag() == 0 ? 0.0 : z.imag()) << "\n";
  return os.str();
}

}  // namespace xherm

#endif  // XHERM_SERIALIZE_HPP
