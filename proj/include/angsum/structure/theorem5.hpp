// Numerical checks of the critical-line phase relations between the rescaled
// sums C~ and S~, and of the non-vanishing of Delta3' between zeros.
#pragma once

#include <angsum/structure/functions.hpp>
#include <angsum/zeros/find.hpp>

#include <string>
#include <vector>

namespace angsum::structure {

// Distance of x from the nearest multiple of `period`.
inline double wrap_mod(double x, double period) { return std::abs(x - period * std::round(x / period)); }

// ---------------------------------------------------------------------------
// Pointwise relations on the critical line.

struct PhaseRelationRow {
  double t = 0;
  double cot_sum = 0;  // cot Tc + cot Ts + 2 cot phi, relative
  double cot_diff = 0; // |cot Tc - cot Ts| - 2|C14m| / (|C01| |sin phi|), relative
  double sine_form = 0;// |2 sin Tc sin Ts + tan phi sin(Tc + Ts)| / (2 + |tan phi|)
};

struct PhaseRelationReport {
  std::vector<PhaseRelationRow> rows;
  double max_cot_sum = 0, max_cot_diff = 0, max_sine_form = 0;
};

inline PhaseRelationReport phase_relations(int m, const std::vector<double>& ts, const EvalConfig& cfg) {
  PhaseRelationReport rep;
  for (double t : ts) {
    if (!(t > 0)) throw Error(ErrorKind::invalid_argument, "phase relations need t > 0");
    const ComplexPoint<double> s(0.5, t);
    const auto r = rescaled(m, s, cfg);
    const auto p = sum_pair(m, s.z(), cfg);
    const double phi = phi2m_c(m, t);
    const double cc = 1 / std::tan(r.theta_c), cs = 1 / std::tan(r.theta_s), cp = 1 / std::tan(phi);
    PhaseRelationRow row;
    row.t = t;
    row.cot_sum = std::abs(cc + cs + 2 * cp) / (std::abs(cc) + std::abs(cs) + 2 * std::abs(cp));
    const double rhs = 2 * std::abs(p.c14m) / (std::abs(p.c01) * std::abs(std::sin(phi)));
    row.cot_diff = std::abs(std::abs(cc - cs) - rhs) / std::max(rhs, std::abs(cc - cs));
    // Scaled by the bound on the two terms rather than their size: both vanish
    // together where sin Tc = sin Ts = 0, and a relative residual there
    // measures only the conditioning of the phases.
    const double tp = std::tan(phi);
    const double a = 2 * std::sin(r.theta_c) * std::sin(r.theta_s), b = tp * std::sin(r.theta_c + r.theta_s);
    row.sine_form = std::abs(a + b) / (2 + std::abs(tp));
    rep.max_cot_sum = std::max(rep.max_cot_sum, row.cot_sum);
    rep.max_cot_diff = std::max(rep.max_cot_diff, row.cot_diff);
    rep.max_sine_form = std::max(rep.max_sine_form, row.sine_form);
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Relations at zeros and the derivative of Delta3.

struct ZeroPhaseCheck {
  double t = 0;
  double phase = 0;       // C(1,4m) zero: max dist of Tc + phi, Ts + phi from pi Z
                          // C(0,1) zero: dist of Tc - Ts - pi from 2 pi Z, and of Tc from pi Z
  double derivative = 0;  // relative residual of the derivative relation
};

struct Theorem5Options {
  double sine_form_tol = 1e-10;
  double phase_tol = 1e-6;
  double derivative_tol = 1e-4;
  double derivative_ratio_floor = 1e-10;  // min |Delta3'| relative to its local max
  double h = 1e-5;                        // central-difference step in t
  double value_tol = 1e-4;
};

// The value of Delta3'(1/2) stated for m = 1.
constexpr double kStatedDelta3PrimeHalf = 0.918604;

struct Theorem5Report {
  int m = 1;
  double max_sine_form = 0;
  std::vector<ZeroPhaseCheck> c14_zeros, c01_zeros;
  double max_c14_phase = 0, max_c14_derivative = 0, max_c01_phase = 0, max_c01_derivative = 0;
  double min_derivative_ratio = 1e300, min_derivative_at = 0;
  double delta3_prime_half = 0;  // real for real s
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

// d/dt arg f(1/2 + it) by a central difference of the argument ratio.
template <class F>
double arg_rate(F&& f, double t, double h) {
  return std::arg(f(t + h) / f(t - h)) / (2 * h);
}

}  // namespace detail

inline Theorem5Report theorem5_checks(int m, const std::vector<double>& ts, const EvalConfig& cfg,
                                      const Theorem5Options& opt = {}) {
  if (ts.size() < 2) throw Error(ErrorKind::invalid_argument, "need at least two grid points");
  Theorem5Report rep;
  rep.m = m;
  auto note = [&](const std::string& s) { rep.violations.push_back(s); };

  // (a) the sine form of the phase relation on the grid
  rep.max_sine_form = phase_relations(m, ts, cfg).max_sine_form;
  if (rep.max_sine_form > opt.sine_form_tol) note("sine-form residual " + std::to_string(rep.max_sine_form));

  const double t_lo = *std::min_element(ts.begin(), ts.end()), t_hi = *std::max_element(ts.begin(), ts.end());
  zeros::FindOptions fo;
  fo.audit = false;
  auto ct = [&](double t) { return rescaled(m, ComplexPoint<double>(0.5, t), cfg).c_tilde; };
  auto st = [&](double t) { return rescaled(m, ComplexPoint<double>(0.5, t), cfg).s_tilde; };
  const double pi = std::numbers::pi;

  // (b) zeros of C(1,4m): Tc = Ts = -phi mod pi, Tc' + Ts' = -2 phi'
  for (const auto& z : zeros::find_zeros(zeros::FamilyId::c14m(m), t_lo, t_hi, cfg, fo)) {
    const auto r = rescaled(m, ComplexPoint<double>(0.5, z.t), cfg);
    const double phi = phi2m_c(m, z.t), dphi = phi2m_c_prime(m, z.t);
    ZeroPhaseCheck c;
    c.t = z.t;
    c.phase = std::max(wrap_mod(r.theta_c + phi, pi), wrap_mod(r.theta_s + phi, pi));
    const double dc = detail::arg_rate(ct, z.t, opt.h), ds = detail::arg_rate(st, z.t, opt.h);
    c.derivative = std::abs(dc + ds + 2 * dphi) / std::max(std::abs(dc) + std::abs(ds), std::abs(2 * dphi));
    rep.max_c14_phase = std::max(rep.max_c14_phase, c.phase);
    rep.max_c14_derivative = std::max(rep.max_c14_derivative, c.derivative);
    rep.c14_zeros.push_back(c);
  }
  if (rep.max_c14_phase > opt.phase_tol) note("C(1,4m) zero phase residual " + std::to_string(rep.max_c14_phase));
  if (rep.max_c14_derivative > opt.derivative_tol)
    note("C(1,4m) zero derivative residual " + std::to_string(rep.max_c14_derivative));

  // (c) zeros of C(0,1): Tc = pi + Ts = 0 mod pi, Ts' = -Tc'
  for (const auto& z : zeros::find_zeros(zeros::FamilyId::c01(), t_lo, t_hi, cfg, fo)) {
    const auto r = rescaled(m, ComplexPoint<double>(0.5, z.t), cfg);
    ZeroPhaseCheck c;
    c.t = z.t;
    c.phase = std::max(wrap_mod(r.theta_c - r.theta_s - pi, 2 * pi), wrap_mod(r.theta_c, pi));
    const double dc = detail::arg_rate(ct, z.t, opt.h), ds = detail::arg_rate(st, z.t, opt.h);
    c.derivative = std::abs(dc + ds) / std::max(std::abs(dc) + std::abs(ds), 1e-300);
    rep.max_c01_phase = std::max(rep.max_c01_phase, c.phase);
    rep.max_c01_derivative = std::max(rep.max_c01_derivative, c.derivative);
    rep.c01_zeros.push_back(c);
  }
  if (rep.max_c01_phase > opt.phase_tol) note("C(0,1) zero phase residual " + std::to_string(rep.max_c01_phase));
  if (rep.max_c01_derivative > opt.derivative_tol)
    note("C(0,1) zero derivative residual " + std::to_string(rep.max_c01_derivative));

  // (d) |Delta3'| on the grid against its largest value within +-0.5
  std::vector<double> mag(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i)
    mag[i] = std::abs(delta3_derivative(m, ComplexPoint<double>(0.5, ts[i]), cfg));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    double local = 0;
    for (std::size_t j = 0; j < ts.size(); ++j)
      if (std::abs(ts[j] - ts[i]) <= 0.5) local = std::max(local, mag[j]);
    const double ratio = local > 0 ? mag[i] / local : 0.0;
    if (ratio < rep.min_derivative_ratio) rep.min_derivative_ratio = ratio, rep.min_derivative_at = ts[i];
  }
  if (rep.min_derivative_ratio < opt.derivative_ratio_floor)
    note("Delta3' nearly vanishes at t = " + std::to_string(rep.min_derivative_at));

  rep.delta3_prime_half = delta3_derivative(m, ComplexPoint<double>(0.5, 0.0), cfg).real();
  if (m == 1 && std::abs(rep.delta3_prime_half - kStatedDelta3PrimeHalf) > opt.value_tol)
    note("Delta3'(1/2) = " + std::to_string(rep.delta3_prime_half) + ", stated value " +
         std::to_string(kStatedDelta3PrimeHalf));
  return rep;
}

}  // namespace angsum::structure
