#include "pfsm/report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "pfsm/errors.hpp"
#include "pfsm/parse.hpp"

namespace pfsm {

namespace {

std::string kind_name(Scalar::Kind k) {
  switch (k) {
    case Scalar::Kind::Rational:
      return "rational";
    case Scalar::Kind::Surd:
      return "surd";
    case Scalar::Kind::Algebraic:
      return "algebraic";
    case Scalar::Kind::Float:
      return "float";
  }
  return "";
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json longs(const std::vector<long>& v) {
  Json a = Json::array();
  for (long x : v) a.push_back(x);
  return a;
}

std::vector<long> longs_from(const Json& j) {
  std::vector<long> v;
  for (const auto& x : j) v.push_back(x.get<long>());
  return v;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json to_json(const Scalar& x, int precision) {
  Json j;
  j["kind"] = kind_name(x.kind());
  j["value"] = x.to_string();
  j["decimal"] = x.decimal(precision);
  return j;
}

Scalar scalar_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  std::string value = j.at("value").get<std::string>();
  if (kind == "float") return parse_scalar(value, NumberMode::Float);
  return parse_scalar(value, NumberMode::Exact);
}

Json to_json(const AlgebraicReal& r, int precision) {
  Json j;
  if (r.is_rational()) {
    j["rational"] = to_string(r.rational_value());
  } else {
    j["minpoly"] = to_string(r.minpoly, "x");
    j["interval"] = {to_string(r.lo), to_string(r.hi)};
  }
  j["decimal"] = Scalar::from_root(r).decimal(precision);
  return j;
}

Json to_json(const BandSet& s, int precision) {
  Json j;
  Json bands = Json::array();
  for (const auto& b : s.bands) bands.push_back({{"lo", to_json(b.lo, precision)}, {"hi", to_json(b.hi, precision)}});
  j["bands"] = bands;
  Json merged = Json::array();
  for (bool m : s.merged) merged.push_back(m);
  j["merged"] = merged;
  j["warnings"] = s.warnings;
  return j;
}

BandSet bands_from_json(const Json& j) {
  BandSet s;
  for (const auto& b : j.at("bands")) s.bands.push_back({scalar_from_json(b.at("lo")), scalar_from_json(b.at("hi"))});
  for (const auto& m : j.at("merged")) s.merged.push_back(m.get<bool>());
  for (const auto& w : j.at("warnings")) s.warnings.push_back(w.get<std::string>());
  return s;
}

Json to_json(const OneSidedSpectrum& s, int precision) {
  Json j = to_json(s.bands, precision);
  Json d = Json::array();
  for (const auto& e : s.dirichlet) {
    Json x = to_json(e.energy, precision);
    x["shift"] = e.shift;
    x["orientation"] = e.reversed ? "reversed" : "forward";
    d.push_back(x);
  }
  j["dirichlet_eigenvalues"] = d;
  Json r = Json::array();
  for (const auto& e : s.rejected) r.push_back(to_json(e, precision));
  j["rejected_candidates"] = r;
  return j;
}

Json to_json(const Mat2& m, int precision) {
  return Json::array({Json::array({to_json(m.m11, precision), to_json(m.m12, precision)}),
                      Json::array({to_json(m.m21, precision), to_json(m.m22, precision)})});
}

Json to_json(const FsmReport& r, int precision) {
  Json j;
  j["invertible_two_sided"] = r.invertible_two_sided;
  j["trace_at_zero"] = to_json(r.trace_at_zero, precision);
  j["failing_forward_shifts"] = longs(r.failing_forward_shifts);
  j["failing_reversed_shifts"] = longs(r.failing_reversed_shifts);
  j["applicable_two_sided"] = r.applicable_two_sided;
  j["applicable_one_sided"] = r.applicable_one_sided;
  j["bad_left_residues"] = longs(r.bad_left_residues);
  j["bad_right_residues"] = longs(r.bad_right_residues);
  j["warnings"] = r.warnings;
  return j;
}

FsmReport fsm_report_from_json(const Json& j) {
  FsmReport r;
  r.invertible_two_sided = j.at("invertible_two_sided").get<bool>();
  r.trace_at_zero = scalar_from_json(j.at("trace_at_zero"));
  r.failing_forward_shifts = longs_from(j.at("failing_forward_shifts"));
  r.failing_reversed_shifts = longs_from(j.at("failing_reversed_shifts"));
  r.applicable_two_sided = j.at("applicable_two_sided").get<bool>();
  r.applicable_one_sided = j.at("applicable_one_sided").get<bool>();
  r.bad_left_residues = longs_from(j.at("bad_left_residues"));
  r.bad_right_residues = longs_from(j.at("bad_right_residues"));
  for (const auto& w : j.at("warnings")) r.warnings.push_back(w.get<std::string>());
  return r;
}

Json to_json(const SearchRecord& r, int precision) {
  Json j;
  Json w = Json::array();
  for (int b : r.word) w.push_back(b);
  j["word"] = w;
  const auto& m = r.monodromy;
  j["monodromy"] = Json::array({Json::array({to_string(m.m11, "lambda"), to_string(m.m12, "lambda")}),
                                Json::array({to_string(m.m21, "lambda"), to_string(m.m22, "lambda")})});
  j["m21_poly"] = to_string(m.m21, "lambda");
  j["trace_poly"] = to_string(m.trace(), "lambda");
  j["parity"] = r.parity == Parity::Even ? "even" : r.parity == Parity::Odd ? "odd" : "zero";
  j["m21_identically_zero"] = r.m21_identically_zero;
  Json zeros = Json::array();
  for (const auto& z : r.zeros) {
    Json x = to_json(z.root, precision);
    x["value"] = z.lambda.to_string();
    x["trace"] = to_json(z.trace, precision);
    x["trace_squared_minus_4_sign"] = z.trace_sign;
    x["m11_squared_minus_1_sign"] = z.m11_sign;
    x["counterexample"] = z.counterexample;
    zeros.push_back(x);
  }
  j["zeros"] = zeros;
  Json ce = Json::array();
  for (const auto& x : r.counterexample_lambdas) ce.push_back(to_json(x, precision));
  j["counterexamples"] = ce;
  Json rce = Json::array();
  for (const auto& x : r.rational_counterexample_lambdas) rce.push_back(to_json(x, precision));
  j["rational_counterexamples"] = rce;
  j["extrapolated"] = r.extrapolated;
  return j;
}

Json to_json(const FamilyResult& r, int precision) {
  Json j;
  j["period"] = r.period;
  j["rational_only"] = r.rational_only;
  j["deduplicated"] = r.deduplicated;
  j["words_checked"] = r.words_checked;
  j["summary"] = r.all_fsm_simple() ? "all FSM-simple" : "counterexamples found";
  j["extrapolated"] = r.extrapolated;
  Json recs = Json::array();
  for (const auto& x : r.records) recs.push_back(to_json(x, precision));
  j["records"] = recs;
  return j;
}

Json to_json(const ConvergenceReport& r) {
  Json j;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["n"] = e.n;
    x["l"] = e.l;
    x["r"] = e.r;
    x["size"] = e.r - e.l + 1;
    x["sigma_min_inv"] = number_or_null(e.inverse_norm);
    if (!std::isnan(e.error)) x["error"] = number_or_null(e.error);
    entries.push_back(x);
  }
  j["entries"] = entries;
  j["ceiling"] = r.ceiling;
  j["verdict"] = r.stable ? "stable" : "unstable";
  j["witness"] = longs(r.witness);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const Interlacing& r) {
  Json j;
  j["holds"] = r.holds;
  j["dirichlet"] = r.dirichlet;
  j["floquet"] = r.floquet;
  j["witness"] = r.witness;
  return j;
}

Json sweep_to_json(const std::vector<SweepRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json x;
    x["lambda"] = r.lambda;
    x["type"] = r.type == SweepRowType::Band ? "band" : "dirichlet";
    x["j"] = r.type == SweepRowType::Band ? Json(nullptr) : Json(r.shift);
    x["orientation"] = r.type == SweepRowType::Band ? Json(nullptr) : Json(r.reversed ? "reversed" : "forward");
    x["e_lo"] = r.e_lo;
    x["e_hi"] = r.e_hi;
    a.push_back(x);
  }
  return a;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "lambda,type,j,orientation,e_lo,e_hi\n";
  for (const auto& r : rows) {
    bool band = r.type == SweepRowType::Band;
    out << format_double(r.lambda) << "," << (band ? "band" : "dirichlet") << ","
        << (band ? "" : std::to_string(r.shift)) << "," << (band ? "" : (r.reversed ? "reversed" : "forward")) << ","
        << format_double(r.e_lo) << "," << format_double(r.e_hi) << "\n";
  }
}

void write_convergence_csv(std::ostream& out, const ConvergenceReport& r) {
  out << "n,l,r,sigma_min_inv,error\n";
  for (const auto& e : r.entries)
    out << e.n << "," << e.l << "," << e.r << "," << format_double(e.inverse_norm) << ","
        << (std::isnan(e.error) ? "" : format_double(e.error)) << "\n";
}

void write_search_table(std::ostream& out, const std::vector<SearchRecord>& records) {
  std::vector<std::vector<std::string>> rows{{"w", "M", "zeros of M21", "tr(M)", "at zeros"}};
  for (const auto& r : records) {
    const auto& m = r.monodromy;
    std::string mat = "[[" + to_string(m.m11, "lambda") + ", " + to_string(m.m12, "lambda") + "], [" +
                      to_string(m.m21, "lambda") + ", " + to_string(m.m22, "lambda") + "]]";
    std::vector<std::string> zeros, traces;
    for (const auto& z : r.zeros) {
      zeros.push_back(z.lambda.to_string());
      traces.push_back(z.trace.to_string());
    }
    std::string zero_text = r.m21_identically_zero ? "all lambda" : zeros.empty() ? "none" : join(zeros, ", ");
    rows.push_back({to_string(r.word), mat, zero_text, to_string(m.trace(), "lambda"), join(traces, ", ")});
  }
  write_aligned(out, rows);
}

void write_bands_table(std::ostream& out, const BandSet& s, int precision) {
  std::vector<std::vector<std::string>> rows{{"band", "lo", "hi", "lo (decimal)", "hi (decimal)"}};
  for (std::size_t i = 0; i < s.bands.size(); ++i) {
    const auto& b = s.bands[i];
    rows.push_back({std::to_string(i + 1), b.lo.to_string(), b.hi.to_string(), b.lo.decimal(precision),
                    b.hi.decimal(precision)});
  }
  write_aligned(out, rows);
  for (const auto& w : s.warnings) out << "warning: " << w << "\n";
}

void write_convergence_table(std::ostream& out, const ConvergenceReport& r) {
  std::vector<std::vector<std::string>> rows{{"n", "l", "r", "sigma_min_inv", "error"}};
  for (const auto& e : r.entries)
    rows.push_back({std::to_string(e.n), std::to_string(e.l), std::to_string(e.r), format_double(e.inverse_norm),
                    std::isnan(e.error) ? "" : format_double(e.error)});
  write_aligned(out, rows);
  out << "verdict: " << (r.stable ? "stable" : "unstable") << " (ceiling " << format_double(r.ceiling) << ")\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
}

}  // namespace pfsm
