#include "pfsm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>

#include "pfsm/errors.hpp"
#include "pfsm/fsm.hpp"
#include "pfsm/parse.hpp"
#include "pfsm/report.hpp"
#include "pfsm/search.hpp"
#include "pfsm/solver.hpp"
#include "pfsm/spectrum.hpp"

namespace pfsm {

namespace {

struct Options {
  std::string potential;
  std::string word;
  std::string lambda;
  bool exact = false;
  bool use_float = false;
  long period = 0;
  bool rational_only = false;
  bool dedupe = false;
  unsigned threads = 1;
  double phi = 0.0;
  std::string grid;
  bool bands_only = false;
  long sections = 100;
  std::string plan = "symmetric";
  std::string bad_left;
  std::string bad_right;
  std::string rhs = "unit:0";
  double ceiling = 1e8;
  std::string format;
  int precision = 12;
  bool merge = false;
};

NumberMode number_mode(const Options& o) {
  if (o.exact && o.use_float) throw ParseError("--exact and --float are mutually exclusive");
  if (o.exact) return NumberMode::Exact;
  if (o.use_float) return NumberMode::Float;
  return NumberMode::Auto;
}

Potential read_potential(const Options& o) {
  NumberMode mode = number_mode(o);
  bool has_word = !o.word.empty(), has_lambda = !o.lambda.empty();
  if (!o.potential.empty()) {
    if (has_word || has_lambda) throw ParseError("give either --potential or --word with --lambda, not both");
    std::vector<Scalar> v;
    for (const auto& tok : split_top_level(o.potential)) v.push_back(parse_scalar(tok, mode));
    if (v.empty()) throw ParseError("empty potential");
    return Potential(v);
  }
  if (!has_word || !has_lambda) throw ParseError("missing input: give --potential, or --word with --lambda");
  return Potential::scaled_word(parse_word(o.word), parse_scalar(o.lambda, mode));
}

std::vector<long> parse_residues(const std::string& text) {
  std::vector<long> out;
  if (text.empty()) return out;
  for (const auto& tok : split_top_level(text)) {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad residue '" + tok + "'");
    }
  }
  return out;
}

double parse_double(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad " + what + " '" + tok + "'");
  }
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == ':') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  if (parts.size() != 3) throw ParseError("--grid expects lo:hi:steps");
  double lo = parse_double(parts[0], "grid bound"), hi = parse_double(parts[1], "grid bound");
  double steps_d = parse_double(parts[2], "grid step count");
  long steps = static_cast<long>(steps_d);
  if (steps < 1 || static_cast<double>(steps) != steps_d) throw ParseError("grid step count must be a positive integer");
  if (!(hi >= lo)) throw ParseError("grid needs lo <= hi");
  std::vector<double> grid;
  for (long i = 0; i <= steps; ++i) grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps));
  return grid;
}

RhsSpec parse_rhs(const std::string& text) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  RhsSpec spec;
  if (kind == "unit") {
    spec.kind = RhsSpec::Kind::Unit;
    spec.index = arg.empty() ? 0 : parse_residues(arg).at(0);
  } else if (kind == "decay") {
    spec.kind = RhsSpec::Kind::Decaying;
    if (!arg.empty()) spec.rate = parse_double(arg, "decay rate");
    if (!(spec.rate > 0)) throw ParseError("decay rate must be positive");
  } else {
    throw ParseError("--rhs expects unit:i or decay:rate");
  }
  return spec;
}

std::string format_or(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw ParseError("format '" + f + "' is not available for this command");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_spectrum(const Options& o, std::ostream& out) {
  Potential p = read_potential(o);
  BandSet s = spectrum_bands(p);
  if (o.merge) s = merge_touching(s);
  std::string f = format_or(o, "json", {"json", "table"});
  if (f == "table") {
    write_bands_table(out, s, o.precision);
  } else {
    Json j;
    j["potential"] = p.to_string();
    j["spectrum"] = to_json(s, o.precision);
    emit(out, j);
  }
  return 0;
}

int cmd_one_sided(const Options& o, std::ostream& out) {
  Potential p = read_potential(o);
  OneSidedSpectrum s = one_sided_spectrum(p);
  if (o.merge) s.bands = merge_touching(s.bands);
  std::string f = format_or(o, "json", {"json", "table"});
  if (f == "table") {
    write_bands_table(out, s.bands, o.precision);
    for (const auto& d : s.dirichlet)
      out << "dirichlet eigenvalue: " << d.energy.to_string() << " (" << d.energy.decimal(o.precision) << ")\n";
    for (const auto& r : s.rejected) out << "rejected candidate: " << r.to_string() << " (" << r.decimal(o.precision) << ")\n";
  } else {
    Json j;
    j["potential"] = p.to_string();
    j["one_sided_spectrum"] = to_json(s, o.precision);
    emit(out, j);
  }
  return 0;
}

int cmd_fsm_check(const Options& o, std::ostream& out) {
  format_or(o, "json", {"json"});
  if (o.potential.empty() && !o.word.empty() && o.lambda.empty()) {
    SearchRecord rec = counterexample_lambdas(parse_word(o.word), o.rational_only);
    emit(out, to_json(rec, o.precision));
    return rec.counterexample_lambdas.empty() ? kExitApplicable : kExitNotApplicable;
  }
  Potential p = read_potential(o);
  FsmReport r = fsm_report(p);
  emit(out, to_json(r, o.precision));
  if (!r.invertible_two_sided) return kExitNotInvertible;
  return r.applicable_two_sided ? kExitApplicable : kExitNotApplicable;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.period < 1) throw ParseError("search needs --period K >= 1");
  SearchOptions opts;
  opts.rational_only = o.rational_only;
  opts.dedupe = o.dedupe;
  opts.threads = o.threads;
  opts.max_period = max_period_from_env();
  std::string f = format_or(o, "json", {"json", "table"});
  if (f == "table") {
    std::vector<SearchRecord> all = analyze_all_words(o.period, opts);
    write_search_table(out, all);
    std::size_t bad = 0;
    for (const auto& r : all) bad += r.counterexample_lambdas.empty() ? 0 : 1;
    out << (bad == 0 ? "all FSM-simple" : std::to_string(bad) + " word(s) with counterexamples") << "\n";
    if (o.period > 9) out << "note: period above 9 is extrapolated\n";
  } else {
    emit(out, to_json(classify_family(o.period, opts), o.precision));
  }
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.word.empty()) throw ParseError("sweep needs --word");
  if (o.grid.empty()) throw ParseError("sweep needs --grid lo:hi:steps");
  std::vector<SweepRow> rows = band_diagram_sweep(parse_word(o.word), parse_grid(o.grid), !o.bands_only);
  std::string f = format_or(o, "csv", {"csv", "json"});
  if (f == "csv")
    write_sweep_csv(out, rows);
  else
    emit(out, sweep_to_json(rows));
  return 0;
}

CutoffPlan read_plan(const Options& o, const Potential& p) {
  long k = static_cast<long>(p.period());
  if (o.sections < 1) throw ParseError("--sections must be at least 1");
  if (o.plan == "symmetric") return make_plan(PlanMode::Symmetric, o.sections, k);
  if (o.plan == "one-sided" || o.plan == "one_sided") return make_plan(PlanMode::OneSided, o.sections, k);
  if (o.plan != "adapted") throw ParseError("--plan expects symmetric, adapted or one-sided");
  std::vector<long> left = parse_residues(o.bad_left), right = parse_residues(o.bad_right);
  if (o.bad_left.empty() && o.bad_right.empty()) {
    FsmReport r = fsm_report(p);
    left = r.bad_left_residues;
    right = r.bad_right_residues;
  }
  return make_plan(PlanMode::Adapted, o.sections, k, left, right);
}

void emit_report(const Options& o, std::ostream& out, const Potential& p, const CutoffPlan& plan,
                 const ConvergenceReport& r) {
  std::string f = format_or(o, "json", {"json", "table", "csv"});
  if (f == "table") {
    write_convergence_table(out, r);
  } else if (f == "csv") {
    write_convergence_csv(out, r);
  } else {
    Json j;
    j["potential"] = p.to_string();
    j["plan"] = to_string(plan.mode);
    j["bad_left_residues"] = plan.bad_left;
    j["bad_right_residues"] = plan.bad_right;
    j["report"] = to_json(r);
    emit(out, j);
  }
}

int cmd_solve(const Options& o, std::ostream& out) {
  Potential p = read_potential(o);
  CutoffPlan plan = read_plan(o, p);
  ConvergenceReport r = convergence_study(p, parse_rhs(o.rhs), plan, o.ceiling);
  emit_report(o, out, p, plan, r);
  return 0;
}

int cmd_probe(const Options& o, std::ostream& out) {
  Potential p = read_potential(o);
  CutoffPlan plan = read_plan(o, p);
  ConvergenceReport r = stability_probe(p, plan, o.ceiling);
  emit_report(o, out, p, plan, r);
  return 0;
}

int cmd_interlace(const Options& o, std::ostream& out) {
  format_or(o, "json", {"json"});
  Potential p = read_potential(o);
  Interlacing r = check_interlacing(p, o.phi);
  emit(out, to_json(r));
  return r.holds ? 0 : 1;
}

void add_input(CLI::App* c, Options& o) {
  c->add_option("--potential", o.potential, "one period v(0),...,v(K-1), comma separated");
  c->add_option("--word", o.word, "0/1 word, e.g. 1,1,0,1,0");
  c->add_option("--lambda", o.lambda, "coupling constant for --word");
  c->add_flag("--exact", o.exact, "keep decimals exact (dyadic only)");
  c->add_flag("--float", o.use_float, "evaluate in double precision");
}

void add_output(CLI::App* c, Options& o) {
  c->add_option("--format", o.format, "json, table or csv");
  c->add_option("--precision", o.precision, "digits in decimal renderings")->check(CLI::Range(1, 200));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite sections of periodic discrete Schroedinger operators", "pfsm"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "band edges of the two-sided operator");
  add_input(spectrum, o);
  add_output(spectrum, o);
  spectrum->add_flag("--merge", o.merge, "coalesce bands that share an endpoint");

  auto* one_sided = app.add_subcommand("one-sided", "spectrum of the compression to n >= 0");
  add_input(one_sided, o);
  add_output(one_sided, o);
  one_sided->add_flag("--merge", o.merge, "coalesce bands that share an endpoint");

  auto* fsm = app.add_subcommand("fsm-check", "invertibility and finite section applicability");
  add_input(fsm, o);
  add_output(fsm, o);
  fsm->add_flag("--rational-only", o.rational_only, "symbolic mode: rational counterexamples only");

  auto* search = app.add_subcommand("search", "classify all {0,lambda} potentials of one period");
  search->add_option("--period", o.period, "period K")->required();
  search->add_flag("--rational-only", o.rational_only, "only rational lambda count as counterexamples");
  search->add_flag("--dedupe", o.dedupe, "one word per rotation/reversal orbit");
  search->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1U, 256U));
  add_output(search, o);

  auto* sweep = app.add_subcommand("sweep", "band diagram over a lambda grid");
  sweep->add_option("--word", o.word, "0/1 word")->required();
  sweep->add_option("--grid", o.grid, "lo:hi:steps")->required();
  sweep->add_flag("--bands-only", o.bands_only, "omit Dirichlet rows");
  add_output(sweep, o);

  auto* solve = app.add_subcommand("solve", "finite section solves against a reference solution");
  auto* probe = app.add_subcommand("probe", "inverse-norm estimates of the finite sections");
  for (auto* c : {solve, probe}) {
    add_input(c, o);
    add_output(c, o);
    c->add_option("--sections", o.sections, "number of sections N");
    c->add_option("--plan", o.plan, "symmetric, adapted or one-sided");
    c->add_option("--bad-left", o.bad_left, "residues mod K avoided by left cut-offs (adapted)");
    c->add_option("--bad-right", o.bad_right, "residues mod K avoided by right cut-offs (adapted)");
    c->add_option("--ceiling", o.ceiling, "stability ceiling for 1/sigma_min");
  }
  solve->add_option("--rhs", o.rhs, "unit:i or decay:rate");

  auto* interlace = app.add_subcommand("interlace", "Dirichlet/Floquet interlacing check");
  add_input(interlace, o);
  add_output(interlace, o);
  interlace->add_option("--phi", o.phi, "Floquet phase");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (one_sided->parsed()) return cmd_one_sided(o, out);
    if (fsm->parsed()) return cmd_fsm_check(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (probe->parsed()) return cmd_probe(o, out);
    if (interlace->parsed()) return cmd_interlace(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace pfsm
