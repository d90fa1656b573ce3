// Functional-equation layer: the Gamma ratio F_{2m} and its half-log phase,
// the rescaled pair (C~, S~), the product Delta3 and the quotient Delta4.
#pragma once

#include <angsum/latsum.hpp>

#include <functional>
#include <memory>
#include <mutex>
#include <optional>

namespace angsum::structure {

using latsum::EvalConfig;

// F_{2m}(s) = prod_{j=1}^{2m} (j - s) / (j - 1 + s).
template <class R>
cplx<R> f2m(int m, const cplx<R>& s) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "m must be >= 1");
  cplx<R> num(1), den(1);
  for (int j = 1; j <= 2 * m; ++j) {
    num *= R(j) - s;
    den *= R(j - 1) + s;
  }
  if (den == cplx<R>(0)) throw Error(ErrorKind::pole_of_f, "F has poles at s = 0, -1, ..., -(2m-1)");
  return num / den;
}

// phi_{2m,c}(t): the continuous real phase on the critical line, equal to
// sum_j atan((j - 1/2)/t) for t > 0 (limit m pi at 0+), odd in t.
template <class R>
R phi2m_c(int m, R t) {
  using std::atan;
  if (m < 1) throw Error(ErrorKind::invalid_argument, "m must be >= 1");
  if (t == 0) throw Error(ErrorKind::branch_ambiguity, "phi_{2m,c} jumps from m pi to -m pi at t = 0");
  const R a = abs_(t);
  R acc = 0;
  for (int j = 1; j <= 2 * m; ++j) acc += atan((R(j) - R(0.5)) / a);
  return t > 0 ? acc : -acc;
}

// d phi_{2m,c} / dt.
template <class R>
R phi2m_c_prime(int m, R t) {
  R acc = 0;
  for (int j = 1; j <= 2 * m; ++j) {
    const R a = R(j) - R(0.5);
    acc -= a / (a * a + t * t);
  }
  return acc;
}

// phi_{2m}(s) = (1/2i) log F_{2m}(s), continued from the critical-line branch:
// log F is summed factor by factor (cuts only on the real axis) and shifted by
// m pi sgn(t), so phi -> 2 m^2 i / (s - 1/2) for large |s| off the real axis.
template <class R>
cplx<R> phi2m(int m, const cplx<R>& s) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "m must be >= 1");
  cplx<R> logF(0);
  for (int j = 1; j <= 2 * m; ++j) {
    const cplx<R> a = R(j) - s, b = R(j - 1) + s;
    if (b == cplx<R>(0)) throw Error(ErrorKind::pole_of_f, "phi at a pole of F");
    if (a == cplx<R>(0)) throw Error(ErrorKind::pole_of_f, "phi at a zero of F");
    logF += clog(a) - clog(b);
  }
  const R shift = s.imag() > 0 ? R(m) * pi<R>() : s.imag() < 0 ? -R(m) * pi<R>() : R(0);
  return cplx<R>(0, R(-0.5)) * logF + shift;
}

template <class R>
struct PhaseFactor {
  int m = 1;
  cplx<R> F, phi;
  std::optional<R> phi_c;  // set on the critical line
};

template <class R>
PhaseFactor<R> phase_factor(int m, const ComplexPoint<R>& s) {
  PhaseFactor<R> p;
  p.m = m;
  p.F = f2m(m, s.z());
  p.phi = phi2m(m, s.z());
  if (s.sigma() == R(0.5) && s.t() != 0) p.phi_c = phi2m_c(m, s.t());
  return p;
}

// Continuous branch of an angle sampled along t, from values known modulo
// `period`. The step is halved until consecutive raw values differ by less
// than period / 4 after reduction.
template <class R>
std::vector<std::pair<R, R>> unwrap_sweep(const std::function<R(R)>& angle, R t0, R t1, R step, R period,
                                          R min_step = R(1e-9)) {
  using std::floor;
  if (!(step > 0) || !(t1 > t0)) throw Error(ErrorKind::invalid_argument, "sweep needs t1 > t0 and step > 0");
  std::vector<std::pair<R, R>> out;
  R t = t0, prev = angle(t0);
  out.emplace_back(t, prev);
  while (t < t1) {
    R h = std::min(step, t1 - t);
    for (;;) {
      const R raw = angle(t + h);
      R d = raw - prev;
      d -= period * floor(d / period + R(0.5));
      if (abs_(d) < period / 4) {
        t += h;
        prev += d;
        out.emplace_back(t, prev);
        break;
      }
      h /= 2;
      if (h < min_step) throw Error(ErrorKind::branch_ambiguity, "angle jumps faster than the sweep resolves");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sums shared by the structure functions at one point.

template <class R>
struct SumPair {
  cplx<R> c01, c14m;
};

template <class R>
SumPair<R> sum_pair(int m, const cplx<R>& s, const EvalConfig& cfg) {
  const auto basis = latsum::c2n1_basis<R>(2 * m, s, cfg);
  return {basis[0], latsum::c14m_from_basis(m, basis)};
}

template <class R>
struct RescaledPair {
  cplx<R> c_tilde, s_tilde;
  R theta_c = 0, theta_s = 0, mod_c = 0, mod_s = 0;
};

// C~ = Gamma(s) / (2 pi^s sqrt F) [C01 + C14m], S~ likewise with the minus sign.
template <class R>
RescaledPair<R> rescaled(int m, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  using std::log;
  const cplx<R> z = s.z();
  const cplx<R> F = f2m(m, z);
  if (F.real() < 0 && abs_(F.imag()) <= 8 * std::numeric_limits<R>::epsilon() * cabs(F))
    throw Error(ErrorKind::on_branch_cut, "sqrt F on its cut (F real negative)");
  if (z == cplx<R>(1)) throw Error(ErrorKind::pole_of_sum, "s = 1");
  const auto p = sum_pair(m, z, cfg);
  const cplx<R> pref = cexp(specfun::log_gamma(z, cfg.prec) - z * log(pi<R>())) / (R(2) * csqrt(F));
  RescaledPair<R> r;
  r.c_tilde = pref * (p.c01 + p.c14m);
  r.s_tilde = pref * (p.c01 - p.c14m);
  r.theta_c = carg(r.c_tilde);
  r.theta_s = carg(r.s_tilde);
  r.mod_c = cabs(r.c_tilde);
  r.mod_s = cabs(r.s_tilde);
  return r;
}

// Gamma(s)^2 / (pi^{2s} F_{2m}(s)), with the Gamma poles at s = 0, -1, ...
// cancelled against the zeros of 1/F where they coincide.
template <class R>
cplx<R> delta3_prefactor(int m, const cplx<R>& s, const Precision& prec) {
  using std::log;
  cplx<R> inv_f(1);
  for (int j = 1; j <= 2 * m; ++j) {
    const cplx<R> a = R(j) - s;
    if (a == cplx<R>(0)) throw Error(ErrorKind::pole_of_delta3, "1/F has poles at s = 1, ..., 2m");
    inv_f *= (R(j - 1) + s) / a;
  }
  if (specfun::detail::is_nonpositive_integer(s))
    throw Error(ErrorKind::pole_of_delta3, "Gamma(s)^2 is singular at s = 0, -1, ...; only s = 0 is a true pole");
  return cexp(R(2) * specfun::log_gamma(s, prec) - R(2) * s * log(pi<R>())) * inv_f;
}

// Delta3 = Gamma(s)^2 / (pi^{2s} F) C(0,1) C(1,4m), never via C~^2 - S~^2.
template <class R>
cplx<R> delta3(int m, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  const cplx<R> z = s.z();
  if (z == cplx<R>(1)) throw Error(ErrorKind::pole_of_delta3, "double pole at s = 1");
  const cplx<R> pref = delta3_prefactor(m, z, cfg.prec);
  const auto p = sum_pair(m, z, cfg);
  return pref * p.c01 * p.c14m;
}

// Complex derivative of an analytic function by the trapezoid rule on a small
// circle: f'(s) = (1/N r) sum_k f(s + r w^k) w^{-k}, error O(r^N).
template <class R, class F>
cplx<R> circle_derivative(F&& f, const cplx<R>& s, R r, int N = 8) {
  using std::cos;
  using std::sin;
  cplx<R> acc(0);
  for (int k = 0; k < N; ++k) {
    const R a = 2 * pi<R>() * k / N;
    const cplx<R> w(cos(a), sin(a));
    acc += f(s + r * w) / w;
  }
  return acc / (R(N) * r);
}

// Default radius balances the O(r^8) rule error against rounding / r.
template <class R>
cplx<R> delta3_derivative(int m, const ComplexPoint<R>& s, const EvalConfig& cfg, R radius = R(0)) {
  if (radius == 0) radius = std::is_same_v<R, double> ? R(1e-2) : R(1e-3);
  return circle_derivative<R>([&](const cplx<R>& z) { return delta3(m, ComplexPoint<R>(z), cfg); }, s.z(),
                              radius);
}

// Large-sigma form for m = 1: the Gamma prefactor times
// 16 (1 + 4^{-s} + 36 * 5^{-2s-2}).
template <class R>
cplx<R> delta3_truncated(const ComplexPoint<R>& s, const Precision& prec = Precision::native<R>()) {
  using std::log;
  const cplx<R> z = s.z();
  const cplx<R> series =
      R(1) + rpow(log(R(4)), -z) + R(36) * rpow(log(R(5)), R(-2) * z - R(2));
  return delta3_prefactor(1, z, prec) * R(16) * series;
}

// Left side of the large-|s| null-line condition for m = 1:
// Im[2s log(s/pi) - 2s - log s + 25/(6s) + 2/s^2], equal to (n + 1/2) pi on
// Re-null lines and n pi on Im-null lines.
template <class R>
R null_line_constraint(const ComplexPoint<R>& s) {
  using std::log;
  const cplx<R> z = s.z();
  const cplx<R> v = R(2) * z * clog(z / pi<R>()) - R(2) * z - clog(z) + R(25) / (R(6) * z) + R(2) / (z * z);
  return v.imag();
}

// ---------------------------------------------------------------------------
// Delta4 = C(1,4m) / C(0,1).

template <class R>
struct Delta4Value {
  cplx<R> value;      // Delta4
  cplx<R> minus_one;  // Delta4 - 1, accurate even when tiny
  bool from_series = false;
};

// Shell tables for the large-sigma path, built once per m.
inline const latsum::ShellTable& shell_table(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<latsum::ShellTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<latsum::ShellTable>(m, 120);
  return *slot;
}

// Above this abscissa Delta4 - 1 comes from the Dirichlet shell series.
constexpr double kShellSigma = 5.0;

template <class R>
Delta4Value<R> delta4_full(int m, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "m must be >= 1");
  const cplx<R> z = s.z();
  if (z == cplx<R>(1)) return {cplx<R>(0), cplx<R>(-1), false};  // zero from the pole of C(0,1)
  Delta4Value<R> out;
  if (s.sigma() >= R(kShellSigma)) {
    const cplx<R> c0 = latsum::c01(s, cfg.prec);
    out.minus_one = shell_table(m).numerator_minus(z).value / c0;
    out.value = R(1) + out.minus_one;
    out.from_series = true;
    return out;
  }
  const auto p = sum_pair(m, z, cfg);
  if (p.c01 == cplx<R>(0)) throw Error(ErrorKind::pole_of_delta4, "zero of C(0,1)");
  out.value = p.c14m / p.c01;
  out.minus_one = out.value - R(1);
  return out;
}

template <class R>
cplx<R> delta4(int m, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  return delta4_full(m, s, cfg).value;
}

// log Delta4 with the small-deviation form log1p(Delta4 - 1) at large sigma.
template <class R>
cplx<R> log_delta4(int m, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  const auto v = delta4_full(m, s, cfg);
  if (v.value == cplx<R>(0)) throw Error(ErrorKind::pole_of_delta4, "log of a zero of Delta4");
  const cplx<R> e = v.minus_one;
  if (cabs(e) < R(1e-3)) {
    // log(1 + e) = e - e^2/2 + e^3/3 - ...
    cplx<R> term = e, acc(0);
    for (int k = 1; k < 30; ++k) {
      acc += term / R(k);
      term *= -e;
      if (cabs(term) < std::numeric_limits<R>::epsilon() * cabs(acc)) break;
    }
    return acc;
  }
  return clog(v.value);
}

// ---------------------------------------------------------------------------
// Argument differences on the critical line from the Gamma factors of the
// functional equation: arg C(1,4l) - arg C(1,4m) = Im[lgamma(s+2m) - lgamma(s+2l)]
// (l = 0 is C(0,1)), against (m - l) pi + 2 (l^2 - m^2)/t.

template <class R>
struct ArgDiff {
  R exact = 0, asymptotic = 0;
};

template <class R>
ArgDiff<R> arg_diff(int l, int m, R t, const Precision& prec = Precision::native<R>()) {
  if (l < 0 || m < 0) throw Error(ErrorKind::invalid_argument, "orders must be >= 0");
  if (!(t > 0)) throw Error(ErrorKind::invalid_argument, "t must be > 0");
  const cplx<R> s(R(0.5), t);
  ArgDiff<R> d;
  if (l == m) return d;
  d.exact = (specfun::log_gamma(s + R(2 * m), prec) - specfun::log_gamma(s + R(2 * l), prec)).imag();
  d.asymptotic = R(m - l) * pi<R>() + 2 * R(l * l - m * m) / t;
  return d;
}

}  // namespace angsum::structure
