// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
// Detail lines are indented. Exit status is the number of failed criteria.
#include <angsum/contour.hpp>
#include <angsum/latsum.hpp>
#include <angsum/structure.hpp>
#include <angsum/zeros.hpp>

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace angsum;
using latsum::EvalConfig;
using PD = ComplexPoint<double>;
using PQ = ComplexPoint<quad>;

namespace {

const EvalConfig kD = EvalConfig::native<double>();
const EvalConfig kQ = EvalConfig::native<quad>();

struct Outcome {
  bool pass = true;
  std::vector<std::string> detail;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { detail.push_back("     " + what); }
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double as_double(quad x) { return static_cast<double>(x); }

// Zero lists shared by the census, cell and gap criteria.
struct ZeroLists {
  std::vector<zeros::ZeroRecord> zeta, lminus4, c14, c18, c112, c01;
};

const ZeroLists& zero_lists() {
  static const ZeroLists z = [] {
    ZeroLists out;
    out.zeta = zeros::find_zeros(zeros::FamilyId::zeta(), 0, 300, kD);
    out.lminus4 = zeros::find_zeros(zeros::FamilyId::lminus4(), 0, 300, kD);
    out.c14 = zeros::find_zeros(zeros::FamilyId::c14m(1), 0, 300, kD);
    out.c18 = zeros::find_zeros(zeros::FamilyId::c14m(2), 0, 300, kD);
    out.c112 = zeros::find_zeros(zeros::FamilyId::c14m(3), 0, 300, kD);
    out.c01 = zeros::merge_zero_lists(out.zeta, out.lminus4, zeros::FamilyId::c01());
    return out;
  }();
  return z;
}

std::vector<double> ordinates(const std::vector<zeros::ZeroRecord>& zs) {
  std::vector<double> t;
  for (const auto& z : zs) t.push_back(z.t);
  return t;
}

// ---------------------------------------------------------------------------
// 1. interval census to t = 300

// Printed counts per 10-unit interval: zeta, L-4, C(1,4), C(1,8), C(1,12).
constexpr int kTable1[30][5] = {
    {0, 1, 2, 2, 3},    {1, 4, 5, 5, 5},    {2, 5, 6, 7, 7},    {3, 4, 8, 8, 8},    {4, 6, 8, 8, 8},
    {3, 5, 9, 9, 9},    {4, 6, 9, 10, 10},  {4, 6, 11, 10, 10}, {4, 7, 11, 11, 10}, {4, 6, 10, 10, 12},
    {4, 7, 11, 11, 10}, {5, 7, 12, 12, 12}, {5, 7, 12, 12, 12}, {5, 7, 12, 12, 12}, {4, 7, 12, 12, 11},
    {6, 7, 12, 12, 13}, {6, 7, 13, 13, 12}, {6, 8, 13, 13, 13}, {5, 8, 13, 12, 14}, {5, 7, 13, 14, 13},
    {6, 8, 13, 12, 13}, {5, 8, 14, 15, 14}, {6, 8, 13, 13, 13}, {6, 8, 14, 14, 14}, {6, 8, 14, 14, 13},
    {6, 8, 13, 14, 15}, {6, 8, 15, 14, 13}, {6, 8, 14, 14, 15}, {6, 8, 15, 15, 14}, {6, 9, 14, 13, 15}};
// Printed cumulative rows 0-100, 0-200, 0-300.
constexpr int kTable1Totals[3][5] = {{29, 50, 79, 80, 82}, {80, 122, 202, 203, 204}, {137, 203, 341, 341, 343}};

Outcome table1_census() {
  Outcome o;
  const auto& Z = zero_lists();
  const std::vector<int> n[5] = {zeros::window_counts(Z.zeta, 300), zeros::window_counts(Z.lminus4, 300),
                                 zeros::window_counts(Z.c14, 300), zeros::window_counts(Z.c18, 300),
                                 zeros::window_counts(Z.c112, 300)};
  const char* name[5] = {"zeta", "L-4", "C(1,4)", "C(1,8)", "C(1,12)"};
  int cells = 0, agree = 0;
  for (int i = 0; i < 30; ++i)
    for (int f = 0; f < 5; ++f) {
      ++cells;
      if (n[f][i] == kTable1[i][f]) {
        ++agree;
      } else {
        o.check(false, fmt("%s on %d-%d: %d zeros, printed %d", name[f], 10 * i, 10 * i + 10, n[f][i], kTable1[i][f]));
      }
    }
  o.check(agree == cells, fmt("%d of %d interval counts match", agree, cells));
  for (int b = 0; b < 3; ++b) {
    std::string row = fmt("0-%d:", 100 * (b + 1));
    for (int f = 0; f < 5; ++f) {
      long tot = 0;
      for (int i = 0; i < 10 * (b + 1); ++i) tot += n[f][i];
      row += fmt(" %ld (printed %d)", tot, kTable1Totals[b][f]);
    }
    o.info(row);
  }
  return o;
}

// ---------------------------------------------------------------------------
// 2. functional equation of the completed sums, quad

Outcome functional_equation() {
  Outcome o;
  std::mt19937 gen(2);
  std::uniform_real_distribution<double> us(-2, 3), ut(-40, 40);
  quad worst[4] = {0, 0, 0, 0};
  for (int k = 0; k < 20; ++k) {
    const PQ s(quad(us(gen)), quad(ut(gen)));
    for (int m = 0; m <= 3; ++m)
      worst[m] = std::max(worst[m], latsum::functional_equation_residual(m, s, kQ));
  }
  for (int m = 0; m <= 3; ++m)
    o.check(worst[m] < quad(1e-20), fmt("m=%d: max relative residual %.2e < 1e-20", m, as_double(worst[m])));
  return o;
}

// ---------------------------------------------------------------------------
// 3. Kober, ray and direct sums of C(1,4)

Outcome representations() {
  Outcome o;
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> us(1.5, 6), ut(-20, 20);
  int bad_ray = 0, bad_direct = 0;
  double worst_ray = 0, worst_direct = 0;
  for (int k = 0; k < 30; ++k) {
    const PD s(us(gen), ut(gen));
    const cplx<double> kober = latsum::c14m(1, s, kD);
    // Kober in double is good to ~1e-13 relative
    const double ek = 1e-12 * std::max(1.0, std::abs(kober));
    const auto ray = latsum::ray_sum(latsum::RayForm::C14m, 1, s, 600);
    const auto dir = latsum::direct_sum(latsum::SumSpec(latsum::SumKind::COS, 1, 4), s, 600);
    const double dr = std::abs(ray.value - kober), dd = std::abs(dir.value - kober);
    if (dr > ray.tail_bound + ek) ++bad_ray;
    if (dd > dir.tail_bound + ek) ++bad_direct;
    worst_ray = std::max(worst_ray, dr / (ray.tail_bound + ek));
    worst_direct = std::max(worst_direct, dd / (dir.tail_bound + ek));
  }
  o.check(bad_ray == 0, fmt("ray sums within tail bound at %d/30 points (max |diff|/bound %.3f)", 30 - bad_ray, worst_ray));
  o.check(bad_direct == 0,
          fmt("direct sums within tail bound at %d/30 points (max |diff|/bound %.3f)", 30 - bad_direct, worst_direct));
  return o;
}

// ---------------------------------------------------------------------------
// 4. poles and real-axis crossings of Delta3, m = 1

Outcome pole_structure() {
  Outcome o;
  const double d = 1e-4;
  auto re = [](double x) { return structure::delta3(1, PD(x, 0), kD).real(); };
  // symmetric combinations cancel the next Laurent term
  const double a1 = (re(1 + d) + re(1 - d)) * d * d / 2;
  const double a0 = (re(d) - re(-d)) * d / 2;
  const double a2 = (re(2 + d) - re(2 - d)) * d / 2;
  const struct {
    const char* what;
    double got, printed;
  } res[] = {{"double pole at s=1", a1, -1.59643}, {"pole at s=0", a0, -0.798212}, {"pole at s=2", a2, 1.16981}};
  for (const auto& r : res)
    o.check(std::abs(r.got / r.printed - 1) < 1e-3, fmt("%s: %.9f vs %.6g (1e-3 relative)", r.what, r.got, r.printed));

  const auto rc = contour::real_axis_crossings(1, -2.9, 5, kD);
  const double printed[] = {-2.65568, 0.29782, 1.67735, 4.21422};
  for (double p : printed) {
    double best = 1e300, at = 0;
    for (double x : rc.im_null)
      if (std::abs(x - p) < best) best = std::abs(x - p), at = x;
    o.check(best < 1e-3, fmt("crossing %.5f found at %.9f (1e-3)", p, at));
  }
  o.check(rc.im_null.size() == 4, fmt("%zu crossings on (-2.9, 5)", rc.im_null.size()));
  return o;
}

// ---------------------------------------------------------------------------
// 5. Delta3'(1/2) and the absence of Delta3' zeros on the critical line

Outcome derivative_at_half() {
  Outcome o;
  const double v = structure::delta3_derivative(1, PQ(quad(0.5), 0), kQ).real().convert_to<double>();
  o.check(std::abs(v - 0.918604) < 1e-4, fmt("Delta3'(1/2) = %.12f, printed 0.918604 (1e-4)", v));

  // a zero on the line would show as a minimum of |Delta3'| at the noise floor
  const auto scan = contour::derivative_scan(1, 0.1, 40, kD);
  o.check(scan.min_ratio > 1e-10, fmt("%d local minima of |Delta3'| on (0, 40], smallest ratio %.2e at t=%.3f (> 1e-10)",
                                      scan.local_minima, scan.min_ratio, scan.at_t));
  // each turning point of log|Delta3| between line zeros has its Delta3' zero
  // off the line, where the quadratic expansion puts it
  const auto line = contour::critical_line_nulls(1, 0.1, 40, kD);
  int centres = 0, off = 0;
  double closest = 1e300, worst_sep = 0;
  for (std::size_t k = 0; k + 1 < line.re_null.size(); ++k) {
    const double a = line.re_null[k], b = line.re_null[k + 1];
    if (contour::turning_points_between(1, a, b, kD) != 1) continue;
    const auto hc = contour::hyperbolic_center(1, a, b, kD);
    ++centres;
    const double dn = hc.newton.sigma - 0.5, de = hc.center.sigma - 0.5;
    const double at = std::abs(structure::delta3_derivative(1, PD(hc.newton.sigma, hc.newton.t), kD));
    const double on = std::abs(structure::delta3_derivative(1, PD(0.5, hc.newton.t), kD));
    closest = std::min(closest, std::abs(dn));
    worst_sep = std::max(worst_sep, at / on);
    if (dn != 0 && std::abs(dn / de - 1) < 0.1 && at < 1e-6 * on && hc.newton.t > a && hc.newton.t < b) ++off;
  }
  o.check(centres > 0 && off == centres,
          fmt("%d/%d hyperbolic centres off the line (closest |sigma - 1/2| = %.2e, |Delta3'| there at most %.1e of "
              "its value on the line)",
              off, centres, closest, worst_sep));
  return o;
}

// ---------------------------------------------------------------------------
// 6. phi_2 at the exceptional point and unmatched null crossings

Outcome exceptional_point() {
  Outcome o;
  const cplx<quad> p = structure::phi2m(1, cplx<quad>(quad(0.5), sqrt(quad(3)) / 2));
  const double err = std::fabs(as_double(cabs(p - cplx<quad>(pi<quad>() / 2))));
  o.check(err < 1e-10, fmt("|phi_2(1/2 + i sqrt3/2) - pi/2| = %.2e < 1e-10", err));
  const auto line = contour::critical_line_nulls(1, 0.02, 20, kD);
  std::vector<double> odd = line.re_only;
  odd.insert(odd.end(), line.im_only.begin(), line.im_only.end());
  std::string list;
  for (double t : odd) list += fmt(" %.8f", t);
  o.check(odd.size() == 1 && std::abs(odd[0] - std::sqrt(3.0) / 2) < 1e-6,
          "unmatched Re/Im crossings on (0, 20]:" + list + " (only sqrt3/2 expected)");
  o.info(fmt("%zu Re-null and %zu Im-null crossings", line.re_null.size(), line.im_null.size()));
  return o;
}

// ---------------------------------------------------------------------------
// 7-8. cells of Delta4

struct CellRow {
  int zeros;
  double length, lowest;
};

const std::vector<CellRow> kTable2 = {
    {3, 8.11, 6.02},    {5, 9.15, 14.13},   {7, 9.66, 23.28},   {6, 7.98, 32.94},   {8, 8.85, 40.92},
    {9, 10.65, 49.77},  {8, 7.95, 60.42},   {9, 8.77, 68.37},   {10, 10.29, 77.14}, {10, 8.71, 87.43},
    {9, 8.19, 96.14},   {11, 9.99, 104.33}, {10, 8.63, 114.32}, {10, 8.14, 122.95}, {12, 10.16, 131.09},
    {11, 9.05, 141.25}, {10, 8.41, 150.30}, {11, 8.47, 158.71}, {13, 10.52, 167.18}, {11, 7.90, 177.70},
    {11, 8.63, 185.60}, {13, 9.99, 194.23}};
const std::vector<CellRow> kTable3 = {
    {1, 4.22, 6.02},  {2, 3.89, 10.24}, {2, 4.16, 14.13}, {2, 3.16, 18.29}, {3, 4.28, 21.45}, {2, 3.93, 25.73},
    {3, 3.28, 29.66}, {3, 4.65, 32.94}, {3, 3.33, 37.59}, {4, 4.68, 40.92}, {4, 4.17, 45.60}, {3, 3.20, 49.77},
    {3, 3.96, 52.97}, {4, 3.90, 56.93}, {4, 4.28, 60.83}, {3, 3.26, 65.11}, {4, 3.79, 68.37}, {4, 4.54, 72.16},
    {4, 3.51, 76.70}, {5, 4.53, 80.21}, {3, 2.89, 84.74}, {4, 4.61, 87.63}, {5, 3.90, 92.24}, {4, 4.00, 96.14}};

const contour::CellCensus& census(int m) {
  static const contour::CellCensus c1 =
      contour::cells(1, 205, kD, ordinates(zero_lists().c01), ordinates(zero_lists().c14));
  static const contour::CellCensus c2 =
      contour::cells(2, 101, kD, ordinates(zero_lists().c01), ordinates(zero_lists().c18));
  return m == 1 ? c1 : c2;
}

void compare_cells(Outcome& o, int m, const std::vector<CellRow>& table) {
  const auto& C = census(m);
  o.check(C.cells.size() >= table.size(), fmt("m=%d: %zu cells traced, %zu printed", m, C.cells.size(), table.size()));
  int exact = 0, within = 0, balanced = 0, pole_first = 0;
  const std::size_t n = std::min(C.cells.size(), table.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& c = C.cells[k];
    const auto& r = table[k];
    if (c.zero_count == r.zeros && c.pole_count == r.zeros) ++exact;
    else o.check(false, fmt("m=%d cell %zu: %d zeros, %d poles, printed %d", m, k + 1, c.zero_count, c.pole_count, r.zeros));
    if (std::abs(c.length - r.length) <= 0.05 && std::abs(c.lowest_pole - r.lowest) <= 0.05) ++within;
    else o.check(false, fmt("m=%d cell %zu: length %.3f lowest pole %.3f, printed %.2f %.2f", m, k + 1, c.length,
                             c.lowest_pole, r.length, r.lowest));
    balanced += c.zero_count == c.pole_count;
    pole_first += c.begins_with_pole;
  }
  o.check(exact == int(table.size()), fmt("m=%d: counts exact in %d/%zu cells", m, exact, table.size()));
  o.check(within == int(table.size()), fmt("m=%d: length and lowest pole within 0.05 in %d/%zu cells", m, within, table.size()));
  o.check(balanced == int(n) && pole_first == int(n),
          fmt("m=%d: zeros = poles in %d/%zu, begins with a pole in %d/%zu", m, balanced, n, pole_first, n));
  o.info(fmt("m=%d: mean length %.3f, s.d. %.3f", m, C.mean_length, C.sd_length));
}

Outcome cell_tables() {
  Outcome o;
  compare_cells(o, 1, kTable2);
  compare_cells(o, 2, kTable3);
  return o;
}

Outcome alternation() {
  Outcome o;
  for (int m : {1, 2}) {
    const auto& C = census(m);
    o.check(C.alternating, fmt("m=%d: phase-zero lines end P, Z, P, Z ... with rising ordinates", m));
    o.check(C.classified > 0 && C.classified == C.classified_agree,
            fmt("m=%d: terminus winding agrees with the zero lists at %d/%d termini", m, C.classified_agree, C.classified));
  }
  const auto rep = zeros::interleaving_report(zero_lists().c01, zero_lists().c14);
  const std::vector<std::pair<char, double>> printed = {{'P', 45.6},  {'Z', 45.9}, {'Z', 46.9},
                                                        {'Z', 47.71}, {'P', 47.74}, {'P', 48.0},
                                                        {'Z', 49.2},  {'P', 49.72}, {'P', 49.77}};
  std::vector<zeros::Feature> w;
  for (const auto& f : rep.features)
    if (f.t > 45 && f.t < 50) w.push_back(f);
  bool ok = w.size() == printed.size();
  std::string seq;
  for (std::size_t i = 0; i < w.size(); ++i) {
    seq += fmt(" %c%.3f", w[i].type, w[i].t);
    if (ok) ok = w[i].type == printed[i].first && std::abs(w[i].t - printed[i].second) <= 0.05;
  }
  o.check(ok, "features on (45, 50):" + seq + " (0.05)");
  return o;
}

// ---------------------------------------------------------------------------
// 9. identity suite, quad

Outcome identities() {
  Outcome o;
  std::mt19937 gen(9);
  std::uniform_real_distribution<double> us(-2, 3), ut(-30, 30);
  quad worst = 0;
  std::string worst_name;
  std::size_t count = 0;
  for (int k = 0; k < 10; ++k) {
    const PQ s(quad(us(gen)), quad(ut(gen)));
    for (const auto& r : latsum::identity_suite(s, kQ)) {
      ++count;
      if (r.residual > worst) worst = r.residual, worst_name = r.name;
    }
  }
  o.check(worst < quad(1e-20), fmt("%zu residuals at 10 points, max %.2e (%s) < 1e-20", count, as_double(worst),
                                   worst_name.c_str()));
  return o;
}

// ---------------------------------------------------------------------------
// 10. large-t phase and the far-left argument of Delta4

Outcome asymptotics() {
  Outcome o;
  for (int m : {1, 2}) {
    // least-squares slope of log|phi - 2m^2/t| against log t
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int N = 25;
    for (int k = 0; k < N; ++k) {
      const quad t = 100 * pow(quad(10), quad(k) / (N - 1));
      const quad d = abs_(structure::phi2m_c(m, t) - quad(2 * m * m) / t);
      const double x = std::log(as_double(t)), y = std::log(as_double(d));
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double slope = -(N * sxy - sx * sy) / (N * sxx - sx * sx);
    o.check(slope >= 2.8 && slope <= 3.2, fmt("m=%d: decay exponent %.4f in [2.8, 3.2]", m, slope));

    double worst = 0;
    for (double t = 20; t <= 60; t += 2) {
      const double sig = -20;
      const double predicted = 4.0 * m * m * t / ((sig - 0.5) * (sig - 0.5) + t * t);
      const double got = std::arg(structure::delta4(m, PD(sig, t), kD));
      worst = std::max(worst, std::abs(got / predicted - 1));
    }
    o.check(worst < 0.1, fmt("m=%d: arg Delta4 at sigma=-20, t in [20,60] within %.4f of 4m^2 t/|s-1/2|^2 (0.1)", m, worst));
  }
  return o;
}

// ---------------------------------------------------------------------------
// 11. C(2m,1;1/2+2i) approaching 2 zeta(1+4i)

Outcome limit_property() {
  Outcome o;
  const PD s(0.5, 2);
  double prev = 1e300;
  bool mono = true;
  std::string row;
  for (int m : {5, 10, 25, 50, 100}) {
    const double d = latsum::limit_check(m, s, kD).difference;
    mono = mono && d < prev;
    prev = d;
    row += fmt(" m=%d:%.6f", m, d);
  }
  o.check(mono, "|C(2m,1) - 2 zeta(1+4i)| strictly decreasing:" + row);
  return o;
}

// ---------------------------------------------------------------------------
// 12. gap statistics below t = 300

Outcome gaps() {
  Outcome o;
  const auto& Z = zero_lists();
  o.check(Z.c14.size() == 341, fmt("%zu C(1,4) zeros below 300", Z.c14.size()));
  const auto g14 = zeros::gap_stats(Z.c14), g01 = zeros::gap_stats(Z.c01);
  const double m14 = g14.first_bin_mass(), m01 = g01.first_bin_mass();
  o.check(m14 < m01, fmt("mass of S < 0.25: C(1,4) %.4f < C(0,1) %.4f", m14, m01));
  const double dw = g14.sup_distance(zeros::wigner_unitary), de = g14.sup_distance([](double S) { return std::exp(-S); });
  o.check(dw < de, fmt("C(1,4) sup distance to Wigner %.4f < to exponential %.4f", dw, de));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Table 1 zero census to t = 300", table1_census},
      {"functional equation of completed sums < 1e-20", functional_equation},
      {"Kober, ray and direct sums agree", representations},
      {"pole structure and real-axis crossings of Delta3", pole_structure},
      {"Delta3'(1/2) and critical-line Delta3' zeros", derivative_at_half},
      {"exceptional point of phi_2", exceptional_point},
      {"cell censuses (Tables 2 and 3)", cell_tables},
      {"zero/pole alternation and feature list", alternation},
      {"identity suite < 1e-20", identities},
      {"phase asymptotics and far-left argument", asymptotics},
      {"limit in higher powers", limit_property},
      {"gap statistics", gaps},
  };
  int failed = 0, k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.check(false, std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& d : o.detail) std::printf("    %s\n", d.c_str());
    std::printf("%s  %2d  %s  (%.1f s)\n", o.pass ? "PASS" : "FAIL", k, name, secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria pass\n", int(criteria.size()) - failed, criteria.size());
  return failed;
}
