// Predictor-corrector tracing of constant-phase lines of Delta4 from far to
// the right, classification of where they end, and the cell census built on
// the lines that end at poles.
#pragma once

#include <angsum/contour/marching.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace angsum::contour {

// Leading large-sigma behaviour Delta4 ~ 1 + coeff * base^{-s}, from the first
// lattice shell where cos(4 m theta) differs from 1.
struct Delta4Asymptote {
  int m = 1;
  double base = 0, coeff = 0;
  cplx<double> operator()(const cplx<double>& s) const { return 1.0 + coeff * std::exp(-s * std::log(base)); }
  // ordinate spacing of successive phase-zero starts
  double spacing() const { return std::numbers::pi / std::log(base); }
};

inline Delta4Asymptote delta4_asymptote(int m) {
  const auto& T = structure::shell_table(m);
  for (std::size_t n = 2; n < T.a.size(); ++n) {
    const double d = T.a[n] - T.r2[n];
    if (std::abs(d) > 1e-9) return {m, double(n), d / T.r2[1]};
  }
  throw Error(ErrorKind::invalid_argument, "no shell separates C(1,4m) from C(0,1)");
}

// Winding number of Delta4 around a circle of radius r: +1 for a simple zero,
// -1 for a simple pole.
inline int winding_number(int m, const cplx<double>& s0, const EvalConfig& cfg, double r = 1e-3, int N = 16) {
  double total = 0;
  auto at = [&](int q) {
    return structure::delta4(m, ComplexPoint<double>(s0 + std::polar(r, 2 * std::numbers::pi * q / N)), cfg);
  };
  cplx<double> prev = at(0);
  for (int q = 1; q <= N; ++q) {
    const cplx<double> cur = at(q % N);
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

enum class Terminus { pole, zero, real_axis, boundary, self_return };

inline const char* to_string(Terminus k) {
  switch (k) {
    case Terminus::pole: return "pole";
    case Terminus::zero: return "zero";
    case Terminus::real_axis: return "real-axis";
    case Terminus::boundary: return "boundary";
    case Terminus::self_return: return "self-return";
  }
  return "?";
}

struct TraceOptions {
  double sigma_far = 25;
  double level = 0;            // arg Delta4 along the line
  int direction = -1;          // initial heading in sigma
  double h_max = 0.5;
  double stop_distance = 2e-4; // stop once the estimated distance to a singularity is this small
  double phase_tol = 1e-9;     // corrector target
  double accept_tol = 1e-6;    // contract on every accepted point
  double asymptote_tol = 1e-4;
  double winding_radius = 1e-3;
  double sigma_min = -10;
  double t_margin = 40;        // allowed excursion in t from the start
  double max_turn = 0.2;       // tangent turn allowed per step, radians
  int max_steps = 4000;
};

struct PhaseTrace {
  ContourPolyline line;
  Terminus end = Terminus::boundary;
  cplx<double> terminus;      // estimated singular point (or last point)
  int winding = 0;
  double winding_radius = 0;  // radius at which the winding was resolved
  double max_phase_error = 0;
  int steps = 0;
};

namespace detail {

struct H {
  cplx<double> value;  // Delta4
  cplx<double> dlog;   // Delta4' / Delta4
};

// Delta4 and its log-derivative; the derivative uses the Delta4 - 1 samples so
// that it stays accurate where Delta4 is within rounding of 1.
inline H eval_h(int m, const cplx<double>& s, double r, const EvalConfig& cfg) {
  const auto c = structure::delta4_full(m, ComplexPoint<double>(s), cfg);
  const int N = 4;  // error O((r/dist)^4), ample for a tangent and a chord
  cplx<double> d(0);
  for (int q = 0; q < N; ++q) {
    const cplx<double> w = std::polar(1.0, 2 * std::numbers::pi * q / N);
    d += structure::delta4_full(m, ComplexPoint<double>(s + r * w), cfg).minus_one / w;
  }
  d /= N * r;
  return {c.value, d / c.value};
}

inline double phase_of(int m, const cplx<double>& s, double level, const EvalConfig& cfg) {
  return wrap_pi(structure::log_delta4(m, ComplexPoint<double>(s), cfg).imag() - level);
}

}  // namespace detail

inline PhaseTrace trace_phase_line(int m, double t_start, const EvalConfig& cfg, const TraceOptions& opt = {}) {
  if (opt.direction != 1 && opt.direction != -1) throw Error(ErrorKind::invalid_argument, "direction is +1 or -1");
  PhaseTrace tr;
  tr.line.kind = ContourKind::PHASE_LEVEL;
  tr.line.level = opt.level;

  const auto asym = delta4_asymptote(m);
  cplx<double> s(opt.sigma_far, t_start);
  const double dev = std::abs(structure::delta4(m, ComplexPoint<double>(s), cfg) - asym(s));
  if (!(dev < opt.asymptote_tol))
    throw Error(ErrorKind::boundary_trace_failure,
                "asymptote check failed at sigma_far: deviation " + std::to_string(dev));

  double r = 1e-2;
  // Chord Newton transverse to the line. Close to a zero or pole the phase
  // carries rounding noise; once the iteration stagnates below the accepted-
  // point contract, the best point is kept.
  auto correct = [&](cplx<double> p, const cplx<double>& dlog, double& g) {
    const double n2 = std::norm(dlog);
    cplx<double> best = p;
    double gbest = 1e300;
    int stale = 0;
    for (int it = 0; it < 20; ++it) {
      g = detail::phase_of(m, p, opt.level, cfg);
      stale = std::abs(g) < 0.5 * gbest ? 0 : stale + 1;
      if (std::abs(g) < gbest) gbest = std::abs(g), best = p;
      if (gbest < opt.phase_tol || stale >= 3) break;
      p -= cplx<double>(0, 1) * std::conj(dlog) * g / n2;
    }
    g = gbest;
    return gbest < opt.phase_tol || (stale >= 3 && gbest < opt.accept_tol) ? std::optional<cplx<double>>(best)
                                                                          : std::optional<cplx<double>>();
  };

  // settle the start onto the level by moving in t only
  detail::H h = detail::eval_h(m, s, r, cfg);
  {
    double g = 0;
    for (int it = 0; it < 20; ++it) {
      g = detail::phase_of(m, s, opt.level, cfg);
      if (std::abs(g) < opt.phase_tol) break;
      // d(arg)/dt = Re h'
      s += cplx<double>(0, -g / h.dlog.real());
    }
    if (std::abs(g) >= opt.accept_tol)
      throw Error(ErrorKind::boundary_trace_failure, "start point does not settle on the phase level");
    tr.max_phase_error = std::abs(g);
  }
  tr.line.points.push_back({s.real(), s.imag()});
  tr.line.start = EndKind::boundary;

  const cplx<double> start = s;
  cplx<double> dir_prev(opt.direction, 0);
  h = detail::eval_h(m, s, r, cfg);
  double L_prev = opt.h_max;
  for (;;) {
    if (tr.steps >= opt.max_steps) {
      tr.end = Terminus::boundary;
      break;
    }
    const double dist = 1.0 / std::abs(h.dlog);
    cplx<double> d = std::conj(h.dlog) / std::abs(h.dlog);
    if ((d * std::conj(dir_prev)).real() < 0) d = -d;
    double L = std::min({opt.h_max, 0.25 * dist, 2 * L_prev});
    r = std::min(1e-2, 0.075 * dist);
    // A step is kept only if the tangent turns little and |h'| changes by at
    // most a factor 2; larger steps can land on a neighbouring phase line.
    double g = 0;
    detail::H hn;
    for (;;) {
      const auto next = correct(s + L * d, h.dlog, g);
      if (next) {
        hn = detail::eval_h(m, *next, r, cfg);
        cplx<double> dn = std::conj(hn.dlog) / std::abs(hn.dlog);
        if ((dn * std::conj(d)).real() < 0) dn = -dn;
        const double turn = std::abs(std::arg(dn * std::conj(d)));
        const double ratio = std::abs(hn.dlog) / std::abs(h.dlog);
        if (turn < opt.max_turn && ratio > 0.5 && ratio < 2) {
          s = *next;
          d = dn;
          break;
        }
      }
      L *= 0.5;
      if (L < 1e-12) {
        tr.terminus = s;
        throw Error(ErrorKind::step_collapse, "phase line stalled at " + std::to_string(s.real()) + " + " +
                                                  std::to_string(s.imag()) + "i");
      }
    }
    h = hn;
    L_prev = L;
    dir_prev = d;
    ++tr.steps;
    tr.max_phase_error = std::max(tr.max_phase_error, std::abs(g));
    tr.line.points.push_back({s.real(), s.imag()});

    if (s.imag() * t_start <= 0) {
      tr.end = Terminus::real_axis;
      tr.terminus = s;
      break;
    }
    if (s.real() < opt.sigma_min || s.real() > opt.sigma_far + 1 || std::abs(s.imag() - t_start) > opt.t_margin) {
      tr.end = Terminus::boundary;
      tr.terminus = s;
      break;
    }
    if (tr.steps > 10 && std::abs(s - start) < opt.h_max) {
      tr.end = Terminus::self_return;
      tr.terminus = s;
      break;
    }
    const double nd = 1.0 / std::abs(h.dlog);
    r = std::min(1e-2, 0.1 * nd);
    if (nd < opt.stop_distance) {
      h = detail::eval_h(m, s, r, cfg);
      // h' ~ +1/(s - s0) at a zero, -1/(s - s0) at a pole; take the candidate ahead
      const cplx<double> as_zero = s - 1.0 / h.dlog, as_pole = s + 1.0 / h.dlog;
      const bool ahead_zero = ((as_zero - s) * std::conj(d)).real() > 0;
      tr.terminus = ahead_zero ? as_zero : as_pole;
      // polish by Newton on Delta4, or on 1/Delta4 for a pole
      {
        auto f = [&](const cplx<double>& z) {
          const auto v = structure::delta4(m, ComplexPoint<double>(z), cfg);
          return ahead_zero ? v : 1.0 / v;
        };
        cplx<double> z = tr.terminus;
        for (int it = 0; it < 8; ++it) {
          const cplx<double> step = f(z) / structure::circle_derivative<double>(f, z, 1e-5);
          z -= step;
          if (std::abs(step) < 1e-13) break;
        }
        if (std::abs(z - tr.terminus) < 10 * opt.stop_distance) tr.terminus = z;
      }
      for (double rad = opt.winding_radius; rad > 1e-7; rad *= 0.1) {
        tr.winding = winding_number(m, tr.terminus, cfg, rad);
        tr.winding_radius = rad;
        if (tr.winding != 0) break;
      }
      tr.end = tr.winding > 0 ? Terminus::zero : tr.winding < 0 ? Terminus::pole : Terminus::boundary;
      tr.line.points.push_back({tr.terminus.real(), tr.terminus.imag()});
      break;
    }
  }
  tr.line.end = (tr.end == Terminus::pole || tr.end == Terminus::zero)
                    ? (std::abs(tr.terminus.real() - 0.5) < 1e-6 ? EndKind::critical_line : EndKind::singularity)
                    : tr.end == Terminus::self_return ? EndKind::closed
                                                      : EndKind::boundary;
  return tr;
}

// ---------------------------------------------------------------------------
// Cells: the strips between successive phase-zero lines that end at poles.

struct CellRecord {
  int index = 0;
  int zero_count = 0, pole_count = 0;
  double length = 0, lowest_pole = 0;
  bool begins_with_pole = false;
};

struct CellCensus {
  int m = 1;
  std::vector<CellRecord> cells;
  std::vector<PhaseTrace> traces;  // one per start n = 1, 2, ...
  std::vector<double> boundaries;  // pole ordinates bounding cells
  double mean_length = 0, sd_length = 0;
  bool alternating = true;   // terminus types follow P, Z, P, Z with increasing ordinates
  int classified = 0;        // termini identified against the zero lists
  int classified_agree = 0;  // ... whose winding type matches the list they fall in
};

inline std::string cells_csv(const std::vector<CellRecord>& cs) {
  std::ostringstream o;
  o << "cell,zeros,poles,length,lowest_pole\n";
  char buf[96];
  for (const auto& c : cs) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%.2f,%.2f\n", c.index, c.zero_count, c.pole_count, c.length,
                  c.lowest_pole);
    o << buf;
  }
  return o.str();
}

// `poles` are the C(0,1) zero ordinates and `zeros` the C(1,4m) zero ordinates,
// both sorted and covering at least (0, t_max]. Every phase-zero start up to
// the first pole terminus beyond t_max is traced.
inline CellCensus cells(int m, double t_max, const EvalConfig& cfg, const std::vector<double>& poles,
                        const std::vector<double>& zeros, const TraceOptions& opt = {}, double match = 1e-5) {
  if (!(t_max > 0)) throw Error(ErrorKind::invalid_argument, "t_max must be positive");
  CellCensus out;
  out.m = m;
  const auto asym = delta4_asymptote(m);
  auto nearest = [](const std::vector<double>& v, double t) {
    double best = 1e300;
    for (double x : v) best = std::min(best, std::abs(x - t));
    return best;
  };
  double last_t = 0;
  bool started = false;
  for (int n = 1;; ++n) {
    PhaseTrace tr = trace_phase_line(m, n * asym.spacing(), cfg, opt);
    const double t = tr.terminus.imag();
    const bool on_line = tr.line.end == EndKind::critical_line;
    const bool feature = tr.end == Terminus::pole || tr.end == Terminus::zero;
    // The lowest lines may run down to the real axis instead; they bound no cell.
    if (!started && tr.end == Terminus::real_axis) {
      out.traces.push_back(std::move(tr));
      continue;
    }
    started = true;
    if (feature) {
      const char type = tr.end == Terminus::pole ? 'P' : 'Z';
      if (type != (n % 2 ? 'P' : 'Z') || t <= last_t) out.alternating = false;
      last_t = t;
      if (on_line && t <= t_max + 10) {
        ++out.classified;
        const bool in_p = nearest(poles, t) < match, in_z = nearest(zeros, t) < match;
        if ((type == 'P' && in_p && !in_z) || (type == 'Z' && in_z && !in_p)) ++out.classified_agree;
      }
    } else {
      out.alternating = false;
    }
    if (tr.end == Terminus::pole) {
      if (!on_line)
        throw Error(ErrorKind::boundary_trace_failure, "start " + std::to_string(n) + " ends at a pole off the critical line, " +
                                                           std::to_string(tr.terminus.real()) + " + " + std::to_string(t) + "i");
      // snap to the listed pole
      double snap = t, d = 1e300;
      for (double x : poles)
        if (std::abs(x - t) < d) d = std::abs(x - t), snap = x;
      if (d > match) throw Error(ErrorKind::boundary_trace_failure, "pole terminus not in the C(0,1) zero list");
      out.boundaries.push_back(snap);
    } else if (n % 2 == 1) {
      throw Error(ErrorKind::boundary_trace_failure,
                  "start " + std::to_string(n) + " ended as " + to_string(tr.end) + " instead of a pole");
    }
    out.traces.push_back(std::move(tr));
    if (!out.boundaries.empty() && out.boundaries.back() > t_max && n % 2 == 0) break;
    if (n > 100000) throw Error(ErrorKind::boundary_trace_failure, "runaway trace loop");
  }

  const double eps = 1e-7;
  for (std::size_t k = 0; k + 1 < out.boundaries.size(); ++k) {
    const double a = out.boundaries[k], b = out.boundaries[k + 1];
    if (b > t_max) break;
    CellRecord c;
    c.index = static_cast<int>(k) + 1;
    c.lowest_pole = a;
    c.length = b - a;
    double first_z = 1e300, first_p = 1e300;
    for (double x : poles)
      if (x >= a - eps && x < b - eps) ++c.pole_count, first_p = std::min(first_p, x);
    for (double x : zeros)
      if (x >= a - eps && x < b - eps) ++c.zero_count, first_z = std::min(first_z, x);
    c.begins_with_pole = first_p < first_z;
    out.cells.push_back(c);
  }
  if (!out.cells.empty()) {
    double s1 = 0, s2 = 0;
    for (const auto& c : out.cells) s1 += c.length, s2 += c.length * c.length;
    const double n = double(out.cells.size());
    out.mean_length = s1 / n;
    out.sd_length = out.cells.size() > 1 ? std::sqrt(std::max(0.0, (s2 - s1 * s1 / n) / (n - 1))) : 0.0;
  }
  return out;
}

}  // namespace angsum::contour
