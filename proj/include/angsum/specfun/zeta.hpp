// Riemann zeta and the Catalan beta function L_{-4} by Euler-Maclaurin, with
// the functional equations used to the left of the critical line.
#pragma once

#include <angsum/specfun/gamma.hpp>

#include <boost/math/special_functions/factorials.hpp>

namespace angsum::specfun {

namespace detail {

// B_{2k}/(2k)! for k = 0..79.
template <class R>
const std::vector<R>& bernoulli_over_factorial() {
  static const std::vector<R> table = [] {
    const auto& b = bernoulli_table<R>();
    std::vector<R> out(b.size());
    R fact = 1;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k > 0) fact *= R(2 * k - 1) * R(2 * k);
      out[k] = b[k] / fact;
    }
    return out;
  }();
  return table;
}

// (e^w - 1)/w, accurate for small |w|.
template <class R>
cplx<R> expm1_over(const cplx<R>& w) {
  if (cabs(w) > R(0.25)) return (cexp(w) - R(1)) / w;
  cplx<R> term(1), sum(1);
  for (int k = 2; k < 60; ++k) {
    term *= w / R(k);
    sum += term;
    if (cabs(term) < std::numeric_limits<R>::epsilon() * R(1e-2)) break;
  }
  return sum;
}

// Euler-Maclaurin tail sum_{k>=1} B_{2k}/(2k)! (s)_{2k-1} 4^{2k-1}
//   [A^{-s-2k+1} - B^{-s-2k+1}]   (B absent when `two_term` is false, scale 1).
template <class R>
cplx<R> em_corrections(const cplx<R>& s, R scale, R a, R b, bool two_term, R eps) {
  using std::log;
  const auto& bf = bernoulli_over_factorial<R>();
  const R la = log(a), lb = two_term ? log(b) : R(0);
  // k = 1 factors
  cplx<R> poch = s;  // (s)_{2k-1}
  cplx<R> pa = rpow(la, -s - R(1));
  cplx<R> pb = two_term ? rpow(lb, -s - R(1)) : cplx<R>(0);
  R scale_pow = scale;  // scale^{2k-1}
  const R ia2 = 1 / (a * a), ib2 = two_term ? 1 / (b * b) : R(0);
  cplx<R> sum(0);
  R prev = std::numeric_limits<R>::max();
  for (int k = 1; k < static_cast<int>(bf.size()); ++k) {
    const cplx<R> term = bf[k] * poch * scale_pow * (pa - pb);
    const R mag = cabs(term);
    sum += term;
    if (mag <= eps * cabs(sum) || mag == 0) break;
    if (mag > prev && k > 4) break;  // asymptotic series started to diverge
    prev = mag;
    poch *= (s + R(2 * k - 1)) * (s + R(2 * k));
    pa *= ia2;
    if (two_term) pb *= ib2;
    scale_pow *= scale * scale;
  }
  return sum;
}

template <class R>
bool near_zero(const cplx<R>& s, R r) {
  return cabs(s) < r;
}

}  // namespace detail

template <class R>
cplx<R> riemann_zeta(const cplx<R>& s, const Precision& prec = Precision::native<R>());

namespace detail {

template <class R>
cplx<R> zeta_em(const cplx<R>& s, const Precision& prec) {
  using std::ceil;
  using std::log;
  const R t = abs_(s.imag());
  const long n = std::max<long>(20, static_cast<long>(ceil(1.5 * static_cast<double>(t))));
  cplx<R> sum(0);
  for (long k = 1; k < n; ++k) sum += rpow(log(R(k)), -s);
  const R N = R(n);
  const R ln = log(N);
  sum += rpow(ln, R(1) - s) / (s - R(1));
  sum += rpow(ln, -s) / R(2);
  sum += em_corrections<R>(s, R(1), N, N, false, R(prec.rel_tol) * R(1e-3));
  return sum;
}

}  // namespace detail

template <class R>
cplx<R> riemann_zeta(const cplx<R>& s, const Precision& prec) {
  using std::log;
  using std::round;
  if (s == cplx<R>(1)) throw Error(ErrorKind::pole_at_one, "zeta(1)");
  if (s.real() >= R(0.5) || detail::near_zero(s, R(0.25))) return detail::zeta_em(s, prec);
  // Trivial zeros: negative even integers.
  if (s.imag() == 0 && s.real() == round(s.real()) && static_cast<long>(round(s.real())) % 2 == 0)
    return cplx<R>(0);
  const cplx<R> one_minus = R(1) - s;
  const cplx<R> log_factor = s * log(R(2)) + (s - R(1)) * log(pi<R>()) +
                             log_sin(pi<R>() * s / R(2)) + log_gamma(one_minus, prec);
  return cexp(log_factor) * detail::zeta_em(one_minus, prec);
}

namespace detail {

// sum_{x>=0} (4x+1)^{-s} - (4x+3)^{-s} by Euler-Maclaurin in x.
template <class R>
cplx<R> beta_em(const cplx<R>& s, const Precision& prec) {
  using std::ceil;
  using std::log;
  const R t = abs_(s.imag());
  const long n = std::max<long>(20, static_cast<long>(ceil(0.5 * static_cast<double>(t))) + 10);
  cplx<R> sum(0);
  for (long x = 0; x < n; ++x) {
    sum += rpow(log(R(4 * x + 1)), -s) - rpow(log(R(4 * x + 3)), -s);
  }
  const R a = R(4 * n + 1), b = R(4 * n + 3);
  const R la = log(a), lb = log(b);
  // integral_N^inf = (a^{1-s} - b^{1-s}) / (4(s-1)), regular at s = 1
  const cplx<R> u = R(1) - s;
  const R l = la - lb;
  sum -= rpow(lb, u) * l * expm1_over(u * l) / R(4);
  sum += (rpow(la, -s) - rpow(lb, -s)) / R(2);
  sum += em_corrections<R>(s, R(4), a, b, true, R(prec.rel_tol) * R(1e-3));
  return sum;
}

}  // namespace detail

// L_{-4}(s) = sum_{k>=0} (-1)^k (2k+1)^{-s}.
template <class R>
cplx<R> beta_catalan(const cplx<R>& s, const Precision& prec = Precision::native<R>()) {
  using std::log;
  using std::round;
  if (s.real() >= R(0.5)) return detail::beta_em(s, prec);
  // Trivial zeros at negative odd integers.
  if (s.imag() == 0 && s.real() == round(s.real()) && static_cast<long>(round(s.real())) % 2 != 0)
    return cplx<R>(0);
  const cplx<R> one_minus = R(1) - s;
  const cplx<R> log_factor = (s - R(0.5)) * log(pi<R>() / 4) +
                             log_gamma(R(1) - s / R(2), prec) -
                             log_gamma((R(1) + s) / R(2), prec);
  return cexp(log_factor) * detail::beta_em(one_minus, prec);
}

// Independent route: Cohen-Villegas-Zagier acceleration of the alternating
// series. Accurate for Re s > 0 and moderate |Im s|; used to cross-validate
// beta_catalan.
template <class R>
cplx<R> beta_catalan_alternating(const cplx<R>& s, int terms = 0) {
  using std::log;
  using std::sqrt;
  using std::pow;
  if (terms <= 0) {
    const double digits = -std::log10(static_cast<double>(std::numeric_limits<R>::epsilon()));
    terms = static_cast<int>(1.31 * digits + 1.2 * static_cast<double>(abs_(s.imag()))) + 10;
  }
  const int n = terms;
  R d = pow(3 + sqrt(R(8)), n);
  d = (d + 1 / d) / 2;
  R b = -1, c = -d;
  cplx<R> sum(0);
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * rpow(log(R(2 * k + 1)), -s);
    b = b * R(k + n) * R(k - n) / (R(k) + R(0.5)) / R(k + 1);
  }
  return sum / d;
}

}  // namespace angsum::specfun
