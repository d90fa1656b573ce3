// Relations among the C(2l,1) basis: the binomial recurrence, the reduction
// of odd orders, mixed power sums, the m -> infinity limit and the
// Abel-regularised sum over m of C(1,4m).
#pragma once

#include <angsum/latsum/direct.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <map>

namespace angsum::latsum {

using rational = boost::multiprecision::cpp_rational;

// Linear combination sum_l coeff[l] C(2l, 1; s).
using Combination = std::map<int, rational>;

inline rational binomial(int n, int k) {
  rational b = 1;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

// C(4n-2, 1) = 1/2 sum_{l=0}^{2n-2} binom(2n-1, l) (-1)^l C(2l, 1).
inline Combination odd_order_expansion(int l) {
  const int n = (l + 1) / 2;  // 2l = 4n - 2
  Combination c;
  for (int j = 0; j <= 2 * n - 2; ++j) {
    const rational sign = (j % 2 == 0) ? 1 : -1;
    c[j] += sign * binomial(2 * n - 1, j) / 2;
  }
  return c;
}

// Rewrite a combination in terms of C(2l, 1) with l even only.
inline Combination reduce_to_even(Combination c) {
  for (auto it = c.rbegin(); it != c.rend();) {
    const int l = it->first;
    if (l % 2 == 1 && it->second != 0) {
      const rational w = it->second;
      c.erase(l);
      for (const auto& [j, v] : odd_order_expansion(l)) c[j] += w * v;
      it = c.rbegin();
      continue;
    }
    ++it;
  }
  for (auto it = c.begin(); it != c.end();) it = (it->second == 0) ? c.erase(it) : std::next(it);
  return c;
}

// C(1, 4m) over the C(2l, 1) basis, optionally reduced to even l.
inline Combination c14m_combination(int m, bool reduced) {
  Combination c;
  const auto w = chebyshev_basis_weights(4 * m);
  for (std::size_t j = 0; j < w.size(); ++j)
    if (w[j] != 0) c[static_cast<int>(j)] = rational(w[j]);
  return reduced ? reduce_to_even(c) : c;
}

// sum' p1^{2a} p2^{2b} / r^{2(s+a+b)} = sum_j binom(b, j) (-1)^j C(2(a+j), 1).
inline Combination mixed_power_combination(int a, int b, bool reduced) {
  if (a < 0 || b < 0) throw Error(ErrorKind::invalid_argument, "powers must be >= 0");
  Combination c;
  for (int j = 0; j <= b; ++j) c[a + j] += ((j % 2 == 0) ? 1 : -1) * binomial(b, j);
  return reduced ? reduce_to_even(c) : c;
}

template <class R>
R to_real(const rational& q) {
  return boost::multiprecision::numerator(q).template convert_to<R>() /
         boost::multiprecision::denominator(q).template convert_to<R>();
}

template <class R>
cplx<R> apply(const Combination& c, const std::vector<cplx<R>>& basis) {
  cplx<R> acc(0);
  for (const auto& [l, w] : c) {
    if (l >= static_cast<int>(basis.size())) throw Error(ErrorKind::invalid_argument, "basis too short");
    acc += to_real<R>(w) * basis[l];
  }
  return acc;
}

inline int max_order(const Combination& c) { return c.empty() ? 0 : c.rbegin()->first; }

template <class R>
cplx<R> mixed_power_sum(int a, int b, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  const auto c = mixed_power_combination(a, b, false);
  return latsum::apply(c, c2n1_basis<R>(max_order(c), s.z(), cfg));
}

// Residual |lhs - rhs| / max(|terms|).
template <class R>
R relative_residual(const cplx<R>& lhs, const cplx<R>& rhs) {
  const R scale = std::max({cabs(lhs), cabs(rhs), std::numeric_limits<R>::min()});
  return cabs(lhs - rhs) / scale;
}

template <class R>
struct RecurrenceResiduals {
  int n = 0;
  bool even = false;
  R recurrence = 0;  // the even-n identity, or the odd-n expression for C(4n-2, 1)
  R order6 = 0;      // C(6,1) = 3/2 C(4,1) - 1/4 C(0,1)
  R order10 = 0;     // C(10,1) = 1/2 C(0,1) - 5/2 C(4,1) + 5/2 C(8,1)
};

template <class R>
RecurrenceResiduals<R> recurrence_check(int n, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be >= 1");
  const int top = std::max(2 * n - 1, 5);
  const auto basis = c2n1_basis<R>(top, s.z(), cfg);
  RecurrenceResiduals<R> out;
  out.n = n;
  out.even = n % 2 == 0;
  if (out.even) {
    // sum_{l=0}^{2n-1} binom(2n, l) (-1)^l C(2l, 1) = 0
    cplx<R> acc(0);
    R scale = 0;
    for (int l = 0; l <= 2 * n - 1; ++l) {
      const cplx<R> term = to_real<R>(binomial(2 * n, l)) * basis[l];
      acc += (l % 2 == 0) ? term : -term;
      scale = std::max(scale, cabs(term));
    }
    out.recurrence = cabs(acc) / scale;
  } else {
    out.recurrence = relative_residual(basis[2 * n - 1], latsum::apply(odd_order_expansion(2 * n - 1), basis));
  }
  out.order6 = relative_residual(basis[3], R(1.5) * basis[2] - basis[0] / R(4));
  out.order10 = relative_residual(basis[5], basis[0] / R(2) - R(2.5) * basis[2] + R(2.5) * basis[4]);
  return out;
}

template <class R>
struct LimitCheck {
  cplx<R> sum, limit;
  R difference;
};

// C(2m,1;s) against its m -> infinity limit 2 zeta(2s).
template <class R>
LimitCheck<R> limit_check(int m, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "m must be >= 1");
  LimitCheck<R> out;
  out.sum = c2n1_kober(m, s, cfg).total;
  out.limit = R(2) * specfun::riemann_zeta(R(2) * s.z(), cfg.prec);
  out.difference = cabs(out.sum - out.limit);
  return out;
}

// sum_{m=1}^{M} x^m C(1,4m;s) summed over the lattice with the closed kernel
// sum_m x^m cos(4 m theta) = Re[z (1 - z^M) / (1 - z)], z = x e^{4 i theta}.
// The four axis rays have kernel x (1 - x^M)/(1 - x) and are returned apart.
template <class R>
struct AbelSum {
  cplx<R> lhs{0};           // full Abel-weighted sum
  cplx<R> axis_part{0};     // contribution of the axis rays, 4 zeta(2s) x (1 - x^M)/(1 - x)
  cplx<R> stated_rhs{0};    // pi zeta(2s) - C(0,1;s)/2
  cplx<R> regular_limit{0}; // 2 zeta(2s) - C(0,1;s)/2, the x -> 1 limit of lhs - axis_part
  R tail_bound = 0;
};

template <class R>
AbelSum<R> sum_rule_abel(const ComplexPoint<R>& s, R x, long M, long radius = 400) {
  using std::atan2;
  using std::cos;
  using std::log;
  using std::pow;
  using std::sin;
  if (!(s.sigma() > 1)) throw Error(ErrorKind::divergent_region, "the sum rule needs Re s > 1");
  if (!(x >= 0 && x < 1)) throw Error(ErrorKind::invalid_argument, "Abel x must lie in [0, 1)");
  if (M < 1) throw Error(ErrorKind::invalid_argument, "M must be >= 1");
  const Precision prec = Precision::native<R>();
  AbelSum<R> out;
  const R xM = pow(x, R(M));
  cplx<R> acc(0);
  detail::for_quadrant(radius, [&](long p1, long p2, long r2) {
    if (p2 == 0) return;  // axis rays handled in closed form below
    const R th = 4 * atan2(R(p2), R(p1));
    const cplx<R> z(x * cos(th), x * sin(th));
    const cplx<R> zM = cexp(cplx<R>(R(M) * log(x), R(M) * th));
    const R kernel = (z * (R(1) - zM) / (R(1) - z)).real();
    acc += R(4) * kernel * rpow(log(R(r2)), -s.z());
  });
  const cplx<R> z2 = specfun::riemann_zeta(R(2) * s.z(), prec);
  const cplx<R> c0 = c01(s, prec);
  out.axis_part = R(4) * z2 * (x * (R(1) - xM) / (R(1) - x));
  out.lhs = acc + out.axis_part;
  out.stated_rhs = pi<R>() * z2 - c0 / R(2);
  out.regular_limit = R(2) * z2 - c0 / R(2);
  // |kernel| <= x / (1 - x) away from the axes.
  out.tail_bound = (x / (1 - x)) * lattice_tail_bound(s.sigma(), R(radius));
  return out;
}

}  // namespace angsum::latsum
