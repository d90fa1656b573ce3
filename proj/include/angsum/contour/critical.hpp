// Delta3 near the real axis and the critical line: null-line crossings,
// tangent slopes, extrema of log|Delta3| between zeros and the off-line
// hyperbolic centres where Delta3' vanishes.
#pragma once

#include <angsum/contour/field.hpp>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>

namespace angsum::contour {

namespace detail {

template <class F>
std::vector<double> sign_change_roots(F&& f, double a, double b, double step, double xtol = 1e-12) {
  std::vector<double> out;
  double x0 = a, f0 = f(a);
  while (x0 < b) {
    const double x1 = std::min(b, x0 + step), f1 = f(x1);
    if (f0 == 0) {
      out.push_back(x0);
    } else if ((f0 < 0) != (f1 < 0) && f1 != 0) {
      boost::uintmax_t it = 100;
      auto tol = [&](double u, double v) { return std::abs(u - v) < xtol; };
      const auto br = boost::math::tools::toms748_solve(f, x0, x1, f0, f1, tol, it);
      out.push_back(0.5 * (br.first + br.second));
    }
    x0 = x1;
    f0 = f1;
  }
  return out;
}

}  // namespace detail

struct RealAxisCrossings {
  std::vector<double> re_null;  // real zeros of Delta3(sigma)
  std::vector<double> im_null;  // branch points of Im-null lines: Delta3'(sigma) = 0
};

// Scans [s_lo, s_hi] avoiding a window of `guard` around each real pole.
inline RealAxisCrossings real_axis_crossings(int m, double s_lo, double s_hi, const EvalConfig& cfg,
                                             double step = 0.01, double guard = 0.03) {
  auto poles = real_singularities({FieldFunc::DELTA3, m});
  // Gamma(s)^2 cannot be evaluated at the negative integers either
  for (double k = -1; k >= s_lo - 1; --k) poles.push_back(k);
  std::sort(poles.begin(), poles.end());
  std::vector<std::pair<double, double>> pieces;
  double a = s_lo;
  for (double p : poles) {
    if (p - guard > a && p - guard < s_hi) pieces.push_back({a, p - guard});
    a = std::max(a, p + guard);
  }
  if (a < s_hi) pieces.push_back({a, s_hi});

  auto f = [&](double x) { return structure::delta3(m, ComplexPoint<double>(x, 0), cfg).real(); };
  auto fp = [&](double x) {
    double r = 1e-2;
    for (double p : poles) r = std::min(r, 0.3 * std::abs(x - p));
    return structure::delta3_derivative(m, ComplexPoint<double>(x, 0), cfg, r).real();
  };
  RealAxisCrossings out;
  for (const auto& [lo, hi] : pieces) {
    for (double x : detail::sign_change_roots(f, lo, hi, step)) out.re_null.push_back(x);
    for (double x : detail::sign_change_roots(fp, lo, hi, step, 1e-10)) out.im_null.push_back(x);
  }
  return out;
}

struct CriticalLineNulls {
  std::vector<double> re_null, im_null;
  std::vector<double> re_only, im_only;  // ordinates without a partner within `match`
};

inline CriticalLineNulls critical_line_nulls(int m, double t_lo, double t_hi, const EvalConfig& cfg,
                                             double step = 0.01, double match = 1e-6) {
  auto d3 = [&](double t) { return structure::delta3(m, ComplexPoint<double>(0.5, t), cfg); };
  CriticalLineNulls out;
  out.re_null = detail::sign_change_roots([&](double t) { return d3(t).real(); }, t_lo, t_hi, step);
  out.im_null = detail::sign_change_roots([&](double t) { return d3(t).imag(); }, t_lo, t_hi, step);
  auto unmatched = [&](const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> u;
    for (double x : a) {
      bool hit = false;
      for (double y : b) hit = hit || std::abs(x - y) < match;
      if (!hit) u.push_back(x);
    }
    return u;
  };
  out.re_only = unmatched(out.re_null, out.im_null);
  out.im_only = unmatched(out.im_null, out.re_null);
  return out;
}

struct NullSlope {
  double measured = 0;   // dt/dsigma of the Re-null line through (1/2, t0)
  double tangent = 0;    // tan phi_{2m,c}(t0)
  double asymptotic = 0; // 2 m^2 / t0
};

inline NullSlope re_null_slope(int m, double t0, const EvalConfig& cfg, double delta = 1e-3, double window = 0.05) {
  auto root_at = [&](double sigma) {
    auto f = [&](double t) { return structure::delta3(m, ComplexPoint<double>(sigma, t), cfg).real(); };
    const auto r = detail::sign_change_roots(f, t0 - window, t0 + window, window, 1e-13);
    if (r.size() != 1) throw Error(ErrorKind::no_sign_change, "Re-null line not isolated near t0");
    return r.front();
  };
  NullSlope s;
  s.measured = (root_at(0.5 + delta) - root_at(0.5 - delta)) / (2 * delta);
  s.tangent = std::tan(structure::phi2m_c(m, t0));
  s.asymptotic = 2.0 * m * m / t0;
  return s;
}

// log|Delta3(1/2 + it)| = 2 Re log Gamma(s) - log pi + log|C(0,1)| + log|C(1,4m)|, since |F| = 1 there.
inline double log_abs_delta3_critical(int m, double t, const EvalConfig& cfg) {
  const cplx<double> s(0.5, t);
  const auto p = structure::sum_pair(m, s, cfg);
  return 2 * specfun::log_gamma(s, cfg.prec).real() - std::log(std::numbers::pi) + std::log(std::abs(p.c01)) +
         std::log(std::abs(p.c14m));
}

// Number of turning points of log|Delta3| (zeros of d arg Delta3 / d sigma)
// strictly between two consecutive zeros.
inline int turning_points_between(int m, double ta, double tb, const EvalConfig& cfg, double step = 0.02) {
  const double gap = tb - ta, margin = std::min(1e-3, 0.05 * gap);
  const int n = std::max(8, static_cast<int>(std::ceil((gap - 2 * margin) / step)));
  std::vector<double> v(n + 1);
  for (int k = 0; k <= n; ++k) v[k] = log_abs_delta3_critical(m, ta + margin + (gap - 2 * margin) * k / n, cfg);
  int turns = 0;
  double prev = v[1] - v[0];
  for (int k = 1; k < n; ++k) {
    const double d = v[k + 1] - v[k];
    if ((d < 0) != (prev < 0)) ++turns;
    prev = d;
  }
  return turns;
}

struct HyperbolicCenter {
  int m = 1;
  double t_star = 0;      // maximum of log|Delta3| on the critical line
  double second_deriv = 0;  // d^2/dt^2 log|Delta3| at t_star
  Point center;           // from the quadratic expansion
  Point newton;           // zero of Delta3' by Newton iteration
  double phase_at_center = 0;
  int newton_iterations = 0;
};

inline HyperbolicCenter hyperbolic_center(int m, double ta, double tb, const EvalConfig& cfg) {
  if (!(tb > ta)) throw Error(ErrorKind::invalid_argument, "need tb > ta");
  auto L = [&](double t) { return log_abs_delta3_critical(m, t, cfg); };
  const double margin = 1e-3 * (tb - ta);
  const double a = ta + margin, b = tb - margin;
  boost::uintmax_t it = 100;
  const auto mx = boost::math::tools::brent_find_minima([&](double t) { return -L(t); }, a, b, 50, it);
  const double ts = mx.first;
  // the maximum must be interior: derivative changes sign across it
  const double hh = 1e-4;
  if (!(L(ts - hh) < L(ts) && L(ts + hh) < L(ts)) || ts - a < 1e-6 || b - ts < 1e-6)
    throw Error(ErrorKind::no_sign_change, "no interior turning point of log|Delta3|");
  HyperbolicCenter hc;
  hc.m = m;
  hc.t_star = ts;
  const double h = 1e-3;
  hc.second_deriv = (-L(ts + 2 * h) + 16 * L(ts + h) - 30 * L(ts) + 16 * L(ts - h) - L(ts - 2 * h)) / (12 * h * h);
  const double A = hc.second_deriv, m2 = double(m) * m, t2 = ts * ts;
  const double den = 0.25 * A * A + 4 * m2 * m2 / (t2 * t2 * t2);
  hc.center = {0.5 + (m2 / (2 * t2)) * A / den, ts + (2 * m2 * m2 / (t2 * t2 * ts)) / den};

  // Newton on Delta3' with f' and f'' from one circle of samples.
  cplx<double> s(hc.center.sigma, hc.center.t);
  const int N = 16;
  for (int k = 0; k < 40; ++k) {
    const double r = 1e-2;
    cplx<double> d1(0), d2(0);
    for (int q = 0; q < N; ++q) {
      const cplx<double> w = std::polar(1.0, 2 * std::numbers::pi * q / N);
      const cplx<double> f = structure::delta3(m, ComplexPoint<double>(s + r * w), cfg);
      d1 += f / w;
      d2 += f / (w * w);
    }
    d1 /= N * r;
    d2 *= 2.0 / (N * r * r);
    const cplx<double> step = d1 / d2;
    s -= step;
    hc.newton_iterations = k + 1;
    if (std::abs(step) < 1e-10) break;
  }
  hc.newton = {s.real(), s.imag()};
  hc.phase_at_center = std::arg(structure::delta3(m, ComplexPoint<double>(s), cfg));
  return hc;
}

struct DerivativeScan {
  double min_ratio = 1e300;  // min over local minima of |Delta3'| / max |Delta3'| within +-0.5
  double at_t = 0;
  int local_minima = 0;
};

// Looks for zeros of Delta3' on the critical line by refining every local
// minimum of |Delta3'| on a grid.
inline DerivativeScan derivative_scan(int m, double t_lo, double t_hi, const EvalConfig& cfg, double step = 0.05) {
  auto g = [&](double t) { return std::abs(structure::delta3_derivative(m, ComplexPoint<double>(0.5, t), cfg)); };
  std::vector<double> ts, vs;
  for (double t = t_lo; t <= t_hi + 1e-12; t += step) {
    ts.push_back(t);
    vs.push_back(g(t));
  }
  DerivativeScan out;
  for (std::size_t k = 1; k + 1 < ts.size(); ++k) {
    if (!(vs[k] <= vs[k - 1] && vs[k] <= vs[k + 1])) continue;
    ++out.local_minima;
    boost::uintmax_t it = 60;
    const auto mn = boost::math::tools::brent_find_minima(g, ts[k - 1], ts[k + 1], 40, it);
    double scale = 0;
    for (std::size_t q = 0; q < ts.size(); ++q)
      if (std::abs(ts[q] - mn.first) <= 0.5) scale = std::max(scale, vs[q]);
    const double ratio = mn.second / scale;
    if (ratio < out.min_ratio) {
      out.min_ratio = ratio;
      out.at_t = mn.first;
    }
  }
  return out;
}

}  // namespace angsum::contour
