// angsum: command-line front end for the lattice-sum library.
//
// Exit codes: 0 success, 1 a verification suite failed, 2 usage error,
// 4 unexpected internal error; numerical failures use angsum::exit_code().

#include <angsum/contour.hpp>
#include <angsum/io/config.hpp>
#include <angsum/latsum.hpp>
#include <angsum/structure.hpp>
#include <angsum/zeros.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

namespace {

using namespace angsum;
using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Formatting

std::string real_str(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string real_str(const quad& x) {
  std::ostringstream o;
  o.precision(34);
  o << x;
  return o.str();
}

template <class R>
std::string complex_str(const cplx<R>& z) {
  std::string im = real_str(z.imag());
  if (im[0] != '-') im = "+" + im;
  return real_str(z.real()) + im + "i";
}

std::string slug(const zeros::FamilyId& f) {
  switch (f.kind) {
    case zeros::FamilyKind::ZETA: return "zeta";
    case zeros::FamilyKind::LMINUS4: return "lminus4";
    case zeros::FamilyKind::C01: return "c01";
    case zeros::FamilyKind::C14M: return "c1" + std::to_string(4 * f.m);
  }
  return "family";
}

// "a+bi", "a-bi", "a", "bi", "i"
template <class R>
ComplexPoint<R> parse_point(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '*') s += c;
  static const std::regex full(R"(^([+-]?[0-9.]+(?:[eE][+-]?[0-9]+)?)?(?:([+-])([0-9.]+(?:[eE][+-]?[0-9]+)?)?i)?$)");
  static const std::regex imag_only(R"(^([+-]?[0-9.]*(?:[eE][+-]?[0-9]+)?)i$)");
  std::smatch m;
  auto num = [&](const std::string& v) -> R {
    try {
      return R(std::stod(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_argument, "cannot parse complex point '" + text + "'");
    }
  };
  auto exact = [&](const std::string& v) -> R {
    if constexpr (std::is_same_v<R, quad>) {
      (void)num(v);  // validates
      return R(v);
    } else {
      return num(v);
    }
  };
  if (std::regex_match(s, m, imag_only) && !s.empty()) {
    std::string v = m[1].str();
    if (v.empty() || v == "+") v = "1";
    if (v == "-") v = "-1";
    return {R(0), exact(v)};
  }
  if (!s.empty() && std::regex_match(s, m, full)) {
    const R re = m[1].matched ? exact(m[1].str()) : R(0);
    R im = 0;
    if (m[2].matched) {
      im = m[3].matched ? exact(m[3].str()) : R(1);
      if (m[2].str() == "-") im = -im;
    }
    return {re, im};
  }
  throw Error(ErrorKind::invalid_argument, "cannot parse complex point '" + text + "'");
}

void emit(const io::RunConfig& rc, const json& j, const std::vector<std::pair<std::string, std::string>>& rows) {
  if (rc.format == "json") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : rows) std::cout << k << ": " << v << '\n';
}

void note(const std::string& msg) { std::cerr << msg << '\n'; }

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::vector<std::string> what;
  std::string s;
};

template <class R>
void eval_sum(const io::RunConfig& rc, const latsum::SumSpec& spec, const ComplexPoint<R>& s) {
  const auto cfg = rc.eval_config();
  const auto red = latsum::reduce(spec);
  const std::string name = std::string(spec.kind == latsum::SumKind::COS ? "C" : "S") + "(" +
                           std::to_string(spec.n) + "," + std::to_string(spec.m) + ")";
  json j;
  j["quantity"] = name;
  j["s"] = complex_str(s.z());
  if (red.structural_zero()) {
    j["value"] = "0";
    j["note"] = "structural zero: no angular harmonic survives the square-lattice symmetry";
    emit(rc, j, {{"quantity", name}, {"s", complex_str(s.z())}, {"value", "0 (exact)"}, {"note", j["note"]}});
    return;
  }
  int Mmax = 0;
  for (const auto& [M, w] : red.c1) Mmax = std::max(Mmax, M);
  // bookkeeping of the Kober evaluation underneath; C(0,1) itself is closed form
  const int nmin = cfg.closed_form_c01 ? 1 : 0;
  int P = 0;
  long kev = 0;
  if (Mmax / 2 >= nmin)
    for (const auto& p : latsum::kober_orders<R>(nmin, Mmax / 2, s.z(), cfg))
      P = std::max(P, p.P_used), kev += p.k_evaluations;
  const cplx<R> v = latsum::evaluate(spec, s, cfg);
  R err;
  if constexpr (std::is_same_v<R, double>) {
    const ComplexPoint<quad> sq(quad(s.sigma()), quad(s.t()));
    const cplx<quad> ref = latsum::evaluate(spec, sq, latsum::EvalConfig::native<quad>());
    err = static_cast<double>(cabs(ref - cplx<quad>(quad(v.real()), quad(v.imag()))));
  } else {
    err = R(cfg.prec.rel_tol) * cabs(v);
  }
  j["value"] = complex_str(v);
  j["error_estimate"] = real_str(err);
  j["truncation_P"] = P;
  j["k_evaluations"] = kev;
  emit(rc, j,
       {{"quantity", name},
        {"s", complex_str(s.z())},
        {"value", complex_str(v)},
        {"error estimate", real_str(err)},
        {"truncation P", std::to_string(P)},
        {"K evaluations", std::to_string(kev)}});
}

template <class R>
void eval_structure(const io::RunConfig& rc, const std::string& what, const ComplexPoint<R>& s) {
  const auto cfg = rc.eval_config();
  const int m = rc.m;
  json j;
  j["quantity"] = what;
  j["m"] = m;
  j["s"] = complex_str(s.z());
  std::vector<std::pair<std::string, std::string>> rows{{"quantity", what}, {"m", std::to_string(m)},
                                                        {"s", complex_str(s.z())}};
  cplx<R> v;
  if (what == "delta3") v = structure::delta3(m, s, cfg);
  else if (what == "delta4") v = structure::delta4(m, s, cfg);
  else if (what == "f") v = structure::f2m(m, s.z());
  else if (what == "phi") v = structure::phi2m(m, s.z());
  else if (what == "c01") v = latsum::c01(s, cfg.prec);
  else if (what == "c14m") v = latsum::c14m(m, s, cfg);
  else throw Error(ErrorKind::invalid_argument, "unknown quantity '" + what + "'");
  j["value"] = complex_str(v);
  rows.push_back({"value", complex_str(v)});
  if (what == "delta3" && s.sigma() == R(0.5) && s.t() != R(0)) {
    // on the critical line Im/Re = -tan phi_{2m,c}(t)
    using std::tan;
    const R ratio = v.imag() / v.real(), expect = -tan(structure::phi2m_c(m, s.t()));
    j["im_over_re"] = real_str(ratio);
    j["minus_tan_phi"] = real_str(expect);
    rows.push_back({"Im/Re", real_str(ratio)});
    rows.push_back({"-tan phi_2m,c(t)", real_str(expect)});
  }
  emit(rc, j, rows);
}

void cmd_eval(const io::RunConfig& rc, const EvalArgs& a) {
  if (a.what.empty()) throw Error(ErrorKind::invalid_argument, "eval needs a quantity");
  if (a.s.empty()) throw Error(ErrorKind::invalid_argument, "eval needs --s");
  std::string head = a.what[0];
  const bool is_sum = head == "C" || head == "S";
  for (auto& c : head) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto run = [&]<class R>() {
    const auto s = parse_point<R>(a.s);
    if (is_sum) {
      if (a.what.size() != 3) throw Error(ErrorKind::invalid_argument, "usage: eval C|S n m --s a+bi");
      const latsum::SumSpec spec(a.what[0] == "C" ? latsum::SumKind::COS : latsum::SumKind::SIN,
                                 std::stoi(a.what[1]), std::stoi(a.what[2]));
      eval_sum<R>(rc, spec, s);
    } else {
      if (a.what.size() != 1) throw Error(ErrorKind::invalid_argument, "structure quantities take no indices");
      eval_structure<R>(rc, head, s);
    }
  };
  if (rc.use_quad()) run.template operator()<quad>();
  else run.template operator()<double>();
}

// ---------------------------------------------------------------------------
// verify

constexpr double kIdentityTol = 1e-20;
constexpr double kFunctionalTol = 1e-20;
constexpr double kPhaseTol = 1e-8;
constexpr std::uint64_t kSeed = 20240611;

std::vector<double> critical_grid(double lo, double hi, int n) {
  std::vector<double> ts(n);
  for (int i = 0; i < n; ++i) ts[i] = lo + (hi - lo) * i / (n - 1);
  return ts;
}

json verify_identities(bool& ok) {
  const auto cfg = latsum::EvalConfig::native<quad>();
  std::mt19937_64 gen(kSeed);
  std::uniform_real_distribution<double> us(-2, 3), ut(-40, 40);
  json pts = json::array();
  double worst = 0;
  for (int k = 0; k < 10; ++k) {
    const ComplexPoint<quad> s(quad(us(gen)), quad(ut(gen)));
    json p;
    p["s"] = complex_str(cplx<double>(double(s.sigma()), double(s.t())));
    json res;
    for (const auto& r : latsum::identity_suite(s, cfg)) {
      res[r.name] = double(r.residual);
      worst = std::max(worst, double(r.residual));
    }
    p["residuals"] = res;
    pts.push_back(p);
  }
  json j;
  j["suite"] = "identities";
  j["tolerance"] = kIdentityTol;
  j["max_residual"] = worst;
  j["pass"] = worst < kIdentityTol;
  j["points"] = pts;
  ok = ok && worst < kIdentityTol;
  return j;
}

json verify_functional(bool& ok) {
  const auto cfg = latsum::EvalConfig::native<quad>();
  std::mt19937_64 gen(kSeed + 1);
  std::uniform_real_distribution<double> us(-2, 3), ut(-40, 40);
  json per = json::object();
  double worst = 0;
  for (int m = 0; m <= 3; ++m) {
    double w = 0;
    for (int k = 0; k < 20; ++k) {
      const ComplexPoint<quad> s(quad(us(gen)), quad(ut(gen)));
      w = std::max(w, double(latsum::functional_equation_residual(m, s, cfg)));
    }
    per["m=" + std::to_string(m)] = w;
    worst = std::max(worst, w);
  }
  json j;
  j["suite"] = "functional-equations";
  j["tolerance"] = kFunctionalTol;
  j["max_residual"] = per;
  j["pass"] = worst < kFunctionalTol;
  ok = ok && worst < kFunctionalTol;
  return j;
}

json verify_phase_relations(int m, bool& ok) {
  const auto cfg = latsum::EvalConfig::native<double>();
  const auto rep = structure::phase_relations(m, critical_grid(9.5, 30.5, 301), cfg);
  const bool pass = rep.max_cot_sum < kPhaseTol && rep.max_cot_diff < kPhaseTol && rep.max_sine_form < kPhaseTol;
  json j;
  j["suite"] = "phase-relations";
  j["m"] = m;
  j["grid"] = "t = 9.5..30.5, 301 points";
  j["tolerance"] = kPhaseTol;
  j["max_cot_sum"] = rep.max_cot_sum;
  j["max_cot_diff"] = rep.max_cot_diff;
  j["max_sine_form"] = rep.max_sine_form;
  j["pass"] = pass;
  ok = ok && pass;
  return j;
}

json verify_theorem5(int m, bool& ok) {
  const auto cfg = latsum::EvalConfig::native<double>();
  const auto rep = structure::theorem5_checks(m, critical_grid(9.5, 30.5, 301), cfg);
  json j;
  j["suite"] = "theorem5";
  j["m"] = m;
  j["max_sine_form"] = rep.max_sine_form;
  j["c14_zeros"] = rep.c14_zeros.size();
  j["max_c14_phase"] = rep.max_c14_phase;
  j["max_c14_derivative"] = rep.max_c14_derivative;
  j["c01_zeros"] = rep.c01_zeros.size();
  j["max_c01_phase"] = rep.max_c01_phase;
  j["max_c01_derivative"] = rep.max_c01_derivative;
  j["min_derivative_ratio"] = rep.min_derivative_ratio;
  j["min_derivative_at"] = rep.min_derivative_at;
  j["delta3_prime_half"] = rep.delta3_prime_half;
  j["violations"] = rep.violations;
  j["pass"] = rep.ok();
  ok = ok && rep.ok();
  return j;
}

int cmd_verify(const io::RunConfig& rc, const std::string& suite) {
  bool ok = true;
  json out = json::array();
  const int m = std::max(rc.m, 1);
  const bool all = suite == "all";
  if (all || suite == "identities") out.push_back(verify_identities(ok));
  if (all || suite == "functional-equations") out.push_back(verify_functional(ok));
  if (all || suite == "phase-relations") out.push_back(verify_phase_relations(m, ok));
  if (all || suite == "theorem5") out.push_back(verify_theorem5(m, ok));
  if (out.empty()) throw Error(ErrorKind::invalid_argument, "unknown suite '" + suite + "'");
  json j;
  j["pass"] = ok;
  j["suites"] = out;
  std::cout << j.dump(2) << '\n';
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// zeros, gaps, cells, contour, table

std::vector<zeros::ZeroRecord> zeros_of(const zeros::FamilyId& f, double lo, double hi,
                                        const latsum::EvalConfig& cfg) {
  note("locating " + f.label() + " zeros on (" + real_str(lo) + ", " + real_str(hi) + "]");
  return zeros::find_zeros(f, lo, hi, cfg);
}

void write_and_report(const io::RunConfig& rc, const std::string& name, const std::string& content) {
  note("wrote " + io::write_output(rc, name, content));
}

void table1(const io::RunConfig& rc, double t_max) {
  const auto cfg = latsum::EvalConfig::native<double>();
  zeros::CensusInput in;
  in.zeta = zeros_of(zeros::FamilyId::zeta(), 0, t_max, cfg);
  in.lminus4 = zeros_of(zeros::FamilyId::lminus4(), 0, t_max, cfg);
  in.c14 = zeros_of(zeros::FamilyId::c14m(1), 0, t_max, cfg);
  in.c18 = zeros_of(zeros::FamilyId::c14m(2), 0, t_max, cfg);
  in.c112 = zeros_of(zeros::FamilyId::c14m(3), 0, t_max, cfg);
  const auto rows = zeros::census_table(in, t_max);
  const std::string csv = zeros::census_csv(rows);
  if (rc.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json j;
      j["t"] = r.label;
      j["prediction"] = r.prediction;
      j["counts"] = r.prediction ? json(std::vector<long>(r.n.begin(), r.n.begin() + 4)) : json(r.n);
      arr.push_back(j);
    }
    write_and_report(rc, "table1.json", arr.dump(2) + "\n");
  } else {
    write_and_report(rc, "table1.csv", csv);
  }
  std::cout << csv;
}

void cmd_zeros(const io::RunConfig& rc, const std::vector<std::string>& families, bool t1) {
  if (t1) {
    table1(rc, rc.t_max);
    return;
  }
  const auto cfg = rc.eval_config();
  for (const auto& name : families.empty() ? std::vector<std::string>{"c14"} : families) {
    const auto f = zeros::FamilyId::parse(name);
    const auto zs = zeros_of(f, rc.t_min, rc.t_max, cfg);
    if (rc.format == "json")
      write_and_report(rc, "zeros_" + slug(f) + ".json", zeros::zeros_json(zs).dump(2) + "\n");
    else
      write_and_report(rc, "zeros_" + slug(f) + ".csv", zeros::zeros_csv(zs));
    std::cout << f.label() << ": " << zs.size() << " zeros on (" << real_str(rc.t_min) << ", "
              << real_str(rc.t_max) << "]\n";
  }
}

void cmd_gaps(const io::RunConfig& rc, const std::vector<std::string>& families) {
  const auto cfg = rc.eval_config();
  json out = json::array();
  for (const auto& name : families.empty() ? std::vector<std::string>{"c14", "c01"} : families) {
    const auto f = zeros::FamilyId::parse(name);
    const auto g = zeros::gap_stats(zeros_of(f, rc.t_min, rc.t_max, cfg));
    std::ostringstream csv;
    csv << "bin_lo,bin_hi,count,density,wigner\n";
    for (std::size_t i = 0; i < g.counts.size(); ++i)
      csv << zeros::format_fixed(g.edges[i], 4) << ',' << zeros::format_fixed(g.edges[i + 1], 4) << ','
          << g.counts[i] << ',' << zeros::format_fixed(g.density[i], 6) << ','
          << zeros::format_fixed(g.surmise[i], 6) << '\n';
    write_and_report(rc, "gaps_" + slug(f) + ".csv", csv.str());
    const double dw = g.sup_distance(zeros::wigner_unitary);
    const double de = g.sup_distance([](double S) { return std::exp(-S); });
    json j;
    j["family"] = f.label();
    j["zeros"] = g.gaps.size() + 1;
    j["raw_mean_gap"] = g.raw_mean;
    j["first_bin_mass"] = g.first_bin_mass();
    j["sup_distance_wigner"] = dw;
    j["sup_distance_exponential"] = de;
    out.push_back(j);
  }
  std::cout << out.dump(2) << '\n';
}

void cells_table(const io::RunConfig& rc, int m, double t_max, const std::string& file) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "cells need m >= 1");
  const auto cfg = latsum::EvalConfig::native<double>();
  // zero lists reach past t_max so the closing boundary can be matched
  const double reach = t_max + 30;
  std::vector<double> poles, zs;
  for (const auto& z : zeros_of(zeros::FamilyId::c01(), 0, reach, cfg)) poles.push_back(z.t);
  for (const auto& z : zeros_of(zeros::FamilyId::c14m(m), 0, reach, cfg)) zs.push_back(z.t);
  note("tracing phase-zero lines of Delta4 for m = " + std::to_string(m));
  const auto c = contour::cells(m, t_max, cfg, poles, zs);
  const std::string csv = contour::cells_csv(c.cells);
  if (rc.format == "json") {
    json arr = json::array();
    for (const auto& r : c.cells) {
      json j;
      j["cell"] = r.index;
      j["zeros"] = r.zero_count;
      j["poles"] = r.pole_count;
      j["length"] = r.length;
      j["lowest_pole"] = r.lowest_pole;
      j["begins_with_pole"] = r.begins_with_pole;
      arr.push_back(j);
    }
    json j;
    j["m"] = m;
    j["t_max"] = t_max;
    j["cells"] = arr;
    j["mean_length"] = c.mean_length;
    j["sd_length"] = c.sd_length;
    j["alternating"] = c.alternating;
    j["classified"] = c.classified;
    j["classified_agree"] = c.classified_agree;
    write_and_report(rc, file + ".json", j.dump(2) + "\n");
  } else {
    write_and_report(rc, file + ".csv", csv);
  }
  std::cout << csv;
  std::printf("mean length %.3f, s.d. %.3f, alternation %s, winding agrees %d/%d\n", c.mean_length, c.sd_length,
              c.alternating ? "yes" : "no", c.classified_agree, c.classified);
}

void cmd_contour(const io::RunConfig& rc, int fig) {
  const auto cfg = latsum::EvalConfig::native<double>();
  std::optional<contour::Resolution> res;
  if (rc.ns > 0) res = contour::Resolution{rc.ns, rc.nt};
  for (auto P : contour::figure_panels(fig)) {
    if (!rc.region.empty()) {
      const auto r = io::RunConfig::parse_region(rc.region);
      P.region = {r[0], r[1], r[2], r[3]};
    }
    note("rendering " + P.name);
    const auto out = contour::render_panel(P, cfg, res);
    if (rc.format == "json") {
      json arr = json::array();
      for (const auto& pl : out.lines) {
        json j;
        j["kind"] = contour::to_string(pl.kind);
        j["level"] = pl.level;
        j["start"] = contour::to_string(pl.start);
        j["end"] = contour::to_string(pl.end);
        json pts = json::array();
        for (const auto& p : pl.points) pts.push_back({p.sigma, p.t});
        j["points"] = pts;
        arr.push_back(j);
      }
      write_and_report(rc, P.name + ".json", arr.dump() + "\n");
    } else {
      write_and_report(rc, P.name + ".csv", out.csv);
    }
    write_and_report(rc, P.name + ".svg", out.svg);
    std::cout << P.name << ": " << out.lines.size() << " polylines\n";
  }
}

int cmd_table(const io::RunConfig& rc, int which) {
  switch (which) {
    case 1: table1(rc, 300); return 0;
    case 2: cells_table(rc, 1, 205, "table2"); return 0;
    case 3: cells_table(rc, 2, 101, "table3"); return 0;
  }
  throw Error(ErrorKind::invalid_argument, "tables are 1, 2 or 3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Angular lattice sums: evaluation, verification, zero and cell censuses, contour export"};
  app.require_subcommand(1);
  app.fallthrough();

  io::RunConfig rc;
  std::string config_file, s_text, region;
  std::optional<int> prec, P, m, threads;
  std::optional<double> tmin, tmax;
  std::optional<std::string> out, format, res;

  app.add_option("--config", config_file, "key = value configuration file")->check(CLI::ExistingFile);
  app.add_option("--prec", prec, "working digits (<= 16 double, otherwise quad)");
  app.add_option("--P", P, "truncation P of the Macdonald double sum (0 = automatic)");
  app.add_option("--m", m, "angular index m");
  app.add_option("--tmin", tmin, "lower ordinate");
  app.add_option("--tmax", tmax, "upper ordinate");
  app.add_option("--threads", threads, "thread count");
  app.add_option("--out", out, "output directory (default $" + std::string(io::kOutDirEnv) + " or .)");
  app.add_option("--format", format, "csv | json | svg");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate C n m, S n m, delta3, delta4, f, phi, c01 or c14m at --s");
  eval->add_option("quantity", ea.what, "C|S n m, or a structure function name")->required();
  eval->add_option("--s", ea.s, "complex point, e.g. 0.5+10i")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "identities | functional-equations | phase-relations | theorem5 | all");

  std::vector<std::string> families;
  bool t1 = false;
  auto* zcmd = app.add_subcommand("zeros", "locate critical-line zeros");
  zcmd->add_option("--family", families, "zeta, l-4, c01, c14, c18, c112, ...");
  zcmd->add_flag("--table1", t1, "interval census of zeta, L-4, C(1,4), C(1,8), C(1,12)");

  auto* gcmd = app.add_subcommand("gaps", "rescaled gap statistics");
  gcmd->add_option("--family", families, "families to analyse (default c14 and c01)");

  auto* ccmd = app.add_subcommand("cells", "phase-cell census of Delta4");

  int fig = 0;
  auto* kcmd = app.add_subcommand("contour", "null and phase contours of a figure window");
  kcmd->add_option("--fig", fig, "figure number")->required();
  kcmd->add_option("--res", res, "resolution NSxNT");
  kcmd->add_option("--region", region, "smin,smax,tmin,tmax");

  int table = 0;
  auto* tcmd = app.add_subcommand("table", "reproduce a numbered table");
  tcmd->add_option("number", table, "1, 2 or 3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc_code = app.exit(e);
    return rc_code == 0 ? 0 : 2;
  }

  try {
    if (!config_file.empty()) rc = io::load_config(config_file, rc);
    if (prec) rc.precision_digits = *prec;
    if (P) rc.truncation_P = *P;
    if (m) rc.m = *m;
    if (tmin) rc.t_min = *tmin;
    if (tmax) rc.t_max = *tmax;
    if (threads) rc.threads = *threads;
    if (out) rc.out_dir = *out;
    if (format) rc.format = *format;
    if (!region.empty()) rc.region = region;
    if (res) {
      int a = 0, b = 0;
      char x = 0;
      std::istringstream in(*res);
      if (!(in >> a >> x >> b) || x != 'x') throw Error(ErrorKind::invalid_argument, "resolution must be NSxNT");
      rc.ns = a;
      rc.nt = b;
    }
    rc.validate();

    if (*eval) cmd_eval(rc, ea);
    else if (*verify) return cmd_verify(rc, suite);
    else if (*zcmd) cmd_zeros(rc, families, t1);
    else if (*gcmd) cmd_gaps(rc, families);
    else if (*ccmd) cells_table(rc, rc.m, rc.t_max, "cells_m" + std::to_string(rc.m));
    else if (*kcmd) cmd_contour(rc, fig);
    else if (*tcmd) return cmd_table(rc, table);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
