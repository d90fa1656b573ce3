// Macdonald function K_nu(x) for complex order and positive argument.
//
// K_nu(x) = 1/2 \int_{-inf}^{inf} exp(nu u - x cosh u) du. For large Im nu the
// real-line integrand cancels down to e^{-pi |Im nu| / 2}, so the line is
// shifted to Im u = beta, near the saddle of the k = 1 term and at most
// pi/2 - kappa/|Im nu|. The trapezoid rule on that line converges
// geometrically; steps are halved until successive sums agree.
//
// The table form evaluates K at x = k x0 for k = 1..kmax from one set of
// nodes: exp(-k x0 cosh u) = q(u)^k.
#pragma once

#include <angsum/core.hpp>

#include <algorithm>
#include <vector>

namespace angsum::specfun {

template <class R>
struct KTable {
  // K_nu(k x0) * exp(pi |Im nu| / 2), index k - 1.
  std::vector<cplx<R>> values;
  // Log of the magnitude scale each value is accurate relative to.
  std::vector<R> log_scale;
  long node_evaluations = 0;
};

namespace detail {

template <class R>
struct KLine {
  R a, b;       // canonical order a + ib, a >= 0, b >= 0
  R beta, c, sb;  // line height and its cos / sin
};

template <class R>
R envelope(const KLine<R>& L, R x, R v) {
  using std::cosh;
  return L.a * v - x * L.c * cosh(v);
}

template <class R>
R envelope_peak(const KLine<R>& L, R x) {
  using std::asinh;
  return asinh(L.a / (x * L.c));
}

// Point on the `dir` side of the peak where the envelope has dropped by `drop`.
template <class R>
R envelope_edge(const KLine<R>& L, R x, R drop, int dir) {
  const R v0 = envelope_peak(L, x);
  const R target = envelope(L, x, v0) - drop;
  R lo = 0, hi = R(0.5);
  while (envelope(L, x, v0 + dir * hi) > target && hi < R(200)) {
    lo = hi;
    hi *= 2;
  }
  for (int i = 0; i < 60; ++i) {
    const R mid = (lo + hi) / 2;
    (envelope(L, x, v0 + dir * mid) > target ? lo : hi) = mid;
  }
  return v0 + dir * hi;
}

}  // namespace detail

template <class R>
KTable<R> macdonald_k_scaled_table(cplx<R> nu, R x0, int kmax,
                                   const Precision& prec = Precision::native<R>()) {
  using std::cos;
  using std::cosh;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  if (!(x0 > 0)) throw Error(ErrorKind::nonpositive_argument, "Macdonald K needs x > 0");
  if (kmax < 1) return {};

  if (nu.real() < 0) nu = -nu;
  const bool conj_out = nu.imag() < 0;
  if (conj_out) nu = std::conj(nu);

  const double tol_d = prec.rel_tol;
  const R tol = R(tol_d);
  const double kappa_d = std::clamp(0.25 * std::log(1.0 / tol_d), 5.0, 10.0);
  const R kappa = R(kappa_d);
  const R drop = R(std::log(1.0 / tol_d) + 5.0);
  const R half_pi = pi<R>() / 2;

  detail::KLine<R> L{nu.real(), nu.imag(), 0, 1, 0};
  {
    R beta = casinh(nu / x0).imag();
    if (L.b > 0) beta = std::min(beta, half_pi - kappa / L.b);
    if (beta < 0) beta = 0;
    L.beta = beta;
    L.c = cos(beta);
    L.sb = sin(beta);
  }
  const R a = L.a, b = L.b;
  const R shift = half_pi * b - b * L.beta;  // log-magnitude offset of the scaled integrand

  // Per-k scale: envelope peak times its Laplace width.
  std::vector<R> log_scale(kmax);
  for (int k = 1; k <= kmax; ++k) {
    const R x = x0 * k;
    const R v = detail::envelope_peak(L, x);
    const R curv = x * L.c * cosh(v);
    log_scale[k - 1] = detail::envelope(L, x, v) + shift + log(sqrt(2 * pi<R>() / curv) + R(1e-3));
  }
  // Suffix minima drive the per-node early exit.
  std::vector<R> cut2(kmax);
  {
    R m = log_scale[kmax - 1];
    for (int k = kmax; k >= 1; --k) {
      m = std::min(m, log_scale[k - 1]);
      const R lc = m + log(tol * R(1e-3));
      const R lmin = log(std::numeric_limits<R>::min()) + 10;
      cut2[k - 1] = lc < lmin ? R(0) : exp(2 * lc);
    }
  }

  // Integration range: union of every k's significant region.
  R vlo = 0, vhi = 0;
  {
    bool first = true;
    for (int k = 1;; k = std::min(kmax, 2 * k)) {
      const R x = x0 * k;
      const R lo = detail::envelope_edge(L, x, drop, -1);
      const R hi = detail::envelope_edge(L, x, drop, +1);
      vlo = first ? lo : std::min(vlo, lo);
      vhi = first ? hi : std::max(vhi, hi);
      first = false;
      if (k == kmax) break;
    }
  }
  const R center = detail::envelope_peak(L, x0);

  // Analyticity strip available to the trapezoid rule.
  R strip = std::min(half_pi - L.beta, R(1));
  if (b > 0) strip = std::min(strip, drop / b);
  R h = 4 * pi<R>() * strip / (drop + kappa);

  std::vector<cplx<R>> sum(kmax, cplx<R>(0)), prev(kmax);
  KTable<R> out;
  out.log_scale = log_scale;

  auto add_node = [&](R v) {
    const R ch = cosh(v), sh = sinh(v);
    const cplx<R> log_g(a * v + shift, b * v + a * L.beta);
    const cplx<R> log_q(-x0 * ch * L.c, -x0 * sh * L.sb);
    cplx<R> p = cexp(log_g + log_q);
    const cplx<R> q = cexp(log_q);
    ++out.node_evaluations;
    for (int k = 0; k < kmax; ++k) {
      sum[k] += p;
      p *= q;
      if (std::norm(p) < cut2[k]) break;
    }
  };

  const long jlo = static_cast<long>(std::floor(static_cast<double>((vlo - center) / h))) - 1;
  const long jhi = static_cast<long>(std::ceil(static_cast<double>((vhi - center) / h))) + 1;
  for (long j = jlo; j <= jhi; ++j) add_node(center + R(j) * h);

  const long max_nodes = 4000000;
  for (int level = 1;; ++level) {
    prev = sum;
    const R hn = h / 2;
    const long jl = static_cast<long>(std::floor(static_cast<double>((vlo - center) / hn))) - 1;
    const long jh = static_cast<long>(std::ceil(static_cast<double>((vhi - center) / hn))) + 1;
    for (long j = jl; j <= jh; ++j) {
      if (j % 2 == 0) continue;
      add_node(center + R(j) * hn);
    }
    bool ok = true;
    for (int k = 0; k < kmax && ok; ++k) {
      const cplx<R> coarse = prev[k] * h, fine = sum[k] * hn;
      const R scale = std::max(cabs(fine), exp(log_scale[k]));
      if (cabs(fine - coarse) > tol * scale) ok = false;
    }
    h = hn;
    if (ok && level >= 2) break;
    if (out.node_evaluations > max_nodes)
      throw Error(ErrorKind::nonconvergent_truncation, "Macdonald quadrature did not converge");
  }

  out.values.resize(kmax);
  for (int k = 0; k < kmax; ++k) {
    cplx<R> v = sum[k] * h / R(2);
    out.values[k] = conj_out ? std::conj(v) : v;
  }
  return out;
}

// Large-argument expansion sqrt(pi/2x) e^{-x} sum_k a_k(nu)/x^k; returns false
// when the terms do not fall below tolerance while still decreasing.
template <class R>
bool macdonald_k_asymptotic(const cplx<R>& nu, R x, const Precision& prec, cplx<R>& out) {
  using std::exp;
  using std::sqrt;
  const cplx<R> mu = R(4) * nu * nu;
  cplx<R> term(1), sum(1);
  R prev = 1;
  for (int k = 1; k < 60; ++k) {
    const R odd = R(2 * k - 1);
    term *= (mu - odd * odd) / (R(8 * k) * x);
    const R mag = cabs(term);
    sum += term;
    if (mag < R(prec.rel_tol) * R(1e-2) * cabs(sum)) {
      out = sqrt(pi<R>() / (2 * x)) * exp(-x) * sum;
      return true;
    }
    if (mag > prev) return false;
    prev = mag;
  }
  return false;
}

template <class R>
cplx<R> macdonald_k(const cplx<R>& nu, R x, const Precision& prec = Precision::native<R>()) {
  using std::exp;
  if (!(x > 0)) throw Error(ErrorKind::nonpositive_argument, "Macdonald K needs x > 0");
  cplx<R> value;
  if (x > std::max(R(40), 4 * std::norm(nu)) && macdonald_k_asymptotic(nu, x, prec, value))
    return value;
  const auto table = macdonald_k_scaled_table(nu, x, 1, prec);
  return table.values[0] * exp(-pi<R>() * abs_(nu.imag()) / 2);
}

// K_{nu+1} = K_{nu-1} + (2 nu / x) K_nu, applied along a whole table.
template <class R>
std::vector<cplx<R>> macdonald_recur_up(const std::vector<cplx<R>>& k_minus,
                                        const std::vector<cplx<R>>& k_mid,
                                        const cplx<R>& nu_mid, R x0) {
  std::vector<cplx<R>> out(k_mid.size());
  for (std::size_t i = 0; i < k_mid.size(); ++i)
    out[i] = k_minus[i] + (R(2) * nu_mid / (x0 * R(i + 1))) * k_mid[i];
  return out;
}

}  // namespace angsum::specfun
