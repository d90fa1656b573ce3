// Exponentially convergent evaluation of C(2n, 1; s) = sum' p1^{2n} / r^{2(s+n)}.
//
// Poisson summation over p2 turns the sum into
//   C(2n,1;s) = [n == 0] 2 zeta(2s)
//             + 2 sqrt(pi) Gamma(s+n-1/2) zeta(2s-1) / Gamma(s+n)
//             + 8 pi^{s+n} / Gamma(s+n) sum_{p1,p2>=1} (p2/p1)^{s-1/2} (p1 p2)^n K_{s+n-1/2}(2 pi p1 p2).
// The double sum depends on p1, p2 only through k = p1 p2 and the divisor
// weight W_k = sum_{d | k} (d^2 / k)^{s-1/2}, so one Macdonald table per order
// serves every pair. Orders s+n-1/2 for successive n differ by one and share
// the upward Bessel recurrence.
#pragma once

#include <angsum/latsum/types.hpp>
#include <angsum/specfun.hpp>

#include <algorithm>
#include <map>
#include <vector>

namespace angsum::latsum {

namespace detail {

// log(1/Gamma(z)); false where 1/Gamma vanishes.
template <class R>
bool log_rgamma(const cplx<R>& z, const Precision& prec, cplx<R>& out) {
  if (specfun::detail::is_nonpositive_integer(z)) return false;
  out = -specfun::log_gamma(z, prec);
  return true;
}

template <class R>
cplx<R> zeta_checked(const cplx<R>& w, const Precision& prec) {
  try {
    return specfun::riemann_zeta(w, prec);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::pole_at_one) throw Error(ErrorKind::pole_of_sum, "zeta factor at its pole");
    throw;
  }
}

// 2 sqrt(pi) Gamma(s+n-1/2) zeta(2s-1) / Gamma(s+n). Left of the critical line
// the Gamma pole and the trivial zero of zeta are combined analytically:
// Gamma(z) zeta(2s-1) = (-1)^n pi 2^{2s-1} pi^{2s-2} Gamma(2-2s) zeta(2-2s) / Gamma(1-z).
template <class R>
cplx<R> zeta_line_term(int n, const cplx<R>& s, const Precision& prec) {
  using std::log;
  using std::sqrt;
  const cplx<R> half(R(0.5), 0);
  if (s == cplx<R>(1)) throw Error(ErrorKind::pole_of_sum, "zeta(2s-1) pole at s = 1");
  cplx<R> lr_b;
  if (!log_rgamma(s + R(n), prec, lr_b)) return cplx<R>(0);
  const R two_sqrt_pi = 2 * sqrt(pi<R>());
  if (s.real() >= R(0.5)) {
    if (n == 0 && s == half) throw Error(ErrorKind::pole_of_sum, "Gamma(s - 1/2) pole at s = 1/2");
    const cplx<R> lg = specfun::log_gamma(s + R(n) - half, prec);
    return two_sqrt_pi * cexp(lg + lr_b) * zeta_checked(R(2) * s - R(1), prec);
  }
  cplx<R> lr_a;
  if (!log_rgamma(R(1.5) - s - R(n), prec, lr_a)) return cplx<R>(0);
  const cplx<R> two_minus = R(2) - R(2) * s;
  const cplx<R> lg = (R(2) * s - R(1)) * log(R(2)) + (R(2) * s - R(2)) * log(pi<R>()) +
                     specfun::log_gamma(two_minus, prec) + lr_a + lr_b;
  const R sign = (n % 2 == 0) ? R(1) : R(-1);
  return sign * two_sqrt_pi * pi<R>() * cexp(lg) * specfun::riemann_zeta(two_minus, prec);
}

// W_k for k = 1..kmax with both factors of k bounded by P.
template <class R>
std::vector<cplx<R>> divisor_weights(const cplx<R>& s, int kmax, int P) {
  using std::log;
  const cplx<R> e = s - R(0.5);
  std::vector<R> lg(kmax + 1, R(0));
  for (int k = 1; k <= kmax; ++k) lg[k] = log(R(k));
  std::vector<cplx<R>> w(kmax, cplx<R>(0));
  for (int d = 1; d <= std::min(P, kmax); ++d)
    for (int q = 1; q <= P && static_cast<long>(d) * q <= kmax; ++q) {
      const int k = d * q;
      w[k - 1] += rpow(2 * lg[d] - lg[k], e);
    }
  return w;
}

}  // namespace detail

template <class R>
int auto_truncation(int n, const cplx<R>& s) {
  using std::ceil;
  const double mag = static_cast<double>(cabs(s + R(n) - R(0.5)));
  return static_cast<int>(std::ceil(mag / static_cast<double>(pi<R>()))) + 4;
}

// C(2n, 1; s) for every n in [nmin, nmax], sharing one set of Macdonald tables.
template <class R>
std::vector<KoberBreakdown<R>> kober_orders(int nmin, int nmax, const cplx<R>& s, const EvalConfig& cfg) {
  using std::ceil;
  using std::exp;
  using std::log;
  using std::pow;
  cfg.validate();
  if (nmin < 0 || nmax < nmin) throw Error(ErrorKind::invalid_argument, "order range must satisfy 0 <= nmin <= nmax");
  const Precision& prec = cfg.prec;
  const R x0 = 2 * pi<R>();
  const R tol = R(prec.rel_tol);
  const R sigma = s.real(), t = s.imag();
  const int count = nmax - nmin + 1;
  std::vector<KoberBreakdown<R>> out(count);

  // Prefactors; a zero of 1/Gamma(s+n) removes the order's double sum.
  std::vector<bool> active(count);
  std::vector<cplx<R>> pref(count);
  for (int i = 0; i < count; ++i) {
    const int n = nmin + i;
    cplx<R> lr;
    active[i] = detail::log_rgamma(s + R(n), prec, lr);
    if (active[i])
      pref[i] = R(8) * pow(pi<R>(), n) * cexp(s * log(pi<R>()) + lr - cplx<R>(pi<R>() * abs_(t) / 2, 0));
    out[i].zeta_line = detail::zeta_line_term(n, s, prec);
    if (n == 0) out[i].axial = R(2) * detail::zeta_checked(R(2) * s, prec);
  }

  // Table length: the Bessel factor must have decayed past the growth of
  // k^n W_k, which is at most k^{n + |sigma - 1/2|}.
  const double nu_max = static_cast<double>(cabs(s + R(nmax) - R(0.5)));
  const double drop = std::log(1.0 / prec.rel_tol) + 5.0;
  const double growth = nmax + std::abs(static_cast<double>(sigma) - 0.5);
  int kmax = static_cast<int>(std::ceil((nu_max + drop + 5.0 * growth + 10.0) / (2.0 * std::acos(-1.0)))) + 2;

  const bool any_active = std::find(active.begin(), active.end(), true) != active.end();
  std::vector<std::vector<cplx<R>>> K(count);
  long k_evals = 0;
  std::vector<cplx<R>> weights;
  int P = cfg.truncation_P > 0 ? cfg.truncation_P : auto_truncation(nmax, s);

  auto build_tables = [&] {
    k_evals = 0;
    int n0 = nmin;
    while (n0 <= nmax && sigma + R(n0) - R(0.5) < 0) ++n0;
    for (int i = 0; i < count; ++i) {
      const int n = nmin + i;
      const cplx<R> nu = s + R(n) - R(0.5);
      const bool direct = !cfg.use_recurrence || n <= n0 + 1 || i < 2;
      if (direct) {
        K[i] = specfun::macdonald_k_scaled_table(nu, x0, kmax, prec).values;
      } else {
        K[i] = specfun::macdonald_recur_up(K[i - 2], K[i - 1], nu - R(1), x0);
      }
      k_evals += kmax;
    }
  };

  auto order_sum = [&](int i, const std::vector<cplx<R>>& w) {
    const int n = nmin + i;
    cplx<R> acc(0);
    for (int k = kmax; k >= 1; --k) acc += pow(R(k), n) * w[k - 1] * K[i][k - 1];
    return acc;
  };

  if (any_active) {
    // Grow the table until the trailing terms are negligible for every order.
    for (int attempt = 0;; ++attempt) {
      build_tables();
      const auto w_full = detail::divisor_weights(s, kmax, kmax);
      bool ok = true;
      for (int i = 0; i < count && ok; ++i) {
        if (!active[i]) continue;
        const int n = nmin + i;
        R peak = 0, tail = 0;
        for (int k = 1; k <= kmax; ++k) {
          const R mag = pow(R(k), n) * cabs(w_full[k - 1]) * cabs(K[i][k - 1]);
          peak = std::max(peak, mag);
          if (k > kmax - 3) tail = std::max(tail, mag);
        }
        if (tail > tol * R(1e-3) * peak) ok = false;
      }
      if (ok) break;
      if (attempt >= 6) throw Error(ErrorKind::nonconvergent_truncation, "Macdonald table did not decay");
      kmax = kmax * 3 / 2 + 1;
    }
  }

  // Stability passes in P.
  std::vector<cplx<R>> prev_total(count);
  bool converged = !any_active;
  for (int pass = 0; pass < cfg.stability_passes && !converged; ++pass, P += 5) {
    weights = detail::divisor_weights(s, kmax, P);
    bool agree = pass > 0;
    for (int i = 0; i < count; ++i) {
      out[i].double_sum = active[i] ? pref[i] * order_sum(i, weights) : cplx<R>(0);
      const cplx<R> total = out[i].axial + out[i].zeta_line + out[i].double_sum;
      const R scale = std::max({cabs(total), cabs(out[i].zeta_line), cabs(out[i].double_sum)});
      if (pass > 0 && cabs(total - prev_total[i]) > tol * scale) agree = false;
      prev_total[i] = total;
    }
    if (agree) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw Error(ErrorKind::nonconvergent_truncation, "double sum not stable under increasing P");

  for (int i = 0; i < count; ++i) {
    out[i].total = out[i].axial + out[i].zeta_line + out[i].double_sum;
    out[i].P_used = any_active ? P : 0;
    out[i].k_evaluations = k_evals / count;
  }
  return out;
}

template <class R>
KoberBreakdown<R> c2n1_kober(int n, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "order n must be >= 0");
  return kober_orders<R>(n, n, s.z(), cfg).front();
}

// C(0,1;s) = 4 zeta(s) L_{-4}(s).
template <class R>
cplx<R> c01(const ComplexPoint<R>& s, const Precision& prec) {
  return R(4) * specfun::riemann_zeta(s.z(), prec) * specfun::beta_catalan(s.z(), prec);
}

// C(2n,1;s) for n = 0..nmax, with C(0,1) in closed form when configured.
template <class R>
std::vector<cplx<R>> c2n1_basis(int nmax, const cplx<R>& s, const EvalConfig& cfg) {
  std::vector<cplx<R>> basis(nmax + 1);
  const bool closed = cfg.closed_form_c01;
  if (closed) basis[0] = c01(ComplexPoint<R>(s), cfg.prec);
  if (nmax >= (closed ? 1 : 0)) {
    const auto parts = kober_orders<R>(closed ? 1 : 0, nmax, s, cfg);
    for (std::size_t i = 0; i < parts.size(); ++i) basis[i + (closed ? 1 : 0)] = parts[i].total;
  }
  return basis;
}

// Weights of C(2j,1) in C(1,M) from T_M(cos theta); only even powers survive.
inline std::vector<specfun::cpp_int> chebyshev_basis_weights(int M) {
  const auto T = specfun::chebyshev_coeffs(M);
  std::vector<specfun::cpp_int> w(M / 2 + 1, 0);
  for (int k = 0; k <= M; k += 2) w[k / 2] = T.coeffs[k];
  return w;
}

template <class R>
cplx<R> combine(const std::vector<specfun::cpp_int>& w, const std::vector<cplx<R>>& basis) {
  cplx<R> acc(0);
  for (std::size_t j = 0; j < w.size(); ++j) acc += w[j].template convert_to<R>() * basis[j];
  return acc;
}

// C(1, M; s) assembled from the C(2j,1) basis without the structural-zero
// shortcut; zero up to rounding unless M is a multiple of 4.
template <class R>
cplx<R> c1_chebyshev(int M, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  if (M < 0) throw Error(ErrorKind::invalid_argument, "multiplier must be >= 0");
  if (M % 2 == 1) return cplx<R>(0);  // only odd powers of cos appear
  const auto basis = c2n1_basis<R>(M / 2, s.z(), cfg);
  return combine(chebyshev_basis_weights(M), basis);
}

template <class R>
cplx<R> c14m_from_basis(int m, const std::vector<cplx<R>>& basis) {
  return combine(chebyshev_basis_weights(4 * m), basis);
}

template <class R>
cplx<R> c14m(int m, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "m must be >= 1");
  return c14m_from_basis(m, c2n1_basis<R>(2 * m, s.z(), cfg));
}

// (C(2,2m;s), S(2,2m;s)) from C(2,2m) + S(2,2m) = C(0,1) and C(2,2m) - S(2,2m) = C(1,4m).
template <class R>
std::pair<cplx<R>, cplx<R>> c2_2m_and_s2_2m(int m, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "m must be >= 1");
  if (s.z() == cplx<R>(1)) throw Error(ErrorKind::pole_of_sum, "s = 1");
  const auto basis = c2n1_basis<R>(2 * m, s.z(), cfg);
  const cplx<R> a = basis[0], b = c14m_from_basis(m, basis);
  return {(a + b) / R(2), (a - b) / R(2)};
}

// Any C(n,m) or S(n,m) as a combination of C(0,1) and C(1,4j): the power
// reduction cos^n x = 2^{-n} sum_k binom(n,k) cos((n-2k)x) leaves only
// multipliers divisible by 4 after the lattice symmetries.
struct Reduction {
  std::map<int, double> c1;  // multiplier M (0 for C(0,1)) -> weight
  bool structural_zero() const {
    for (const auto& [M, w] : c1)
      if (w != 0.0) return false;
    return true;
  }
};

inline Reduction reduce(const SumSpec& spec) {
  Reduction r;
  if (spec.n == 0) {
    r.c1[0] = 1.0;
    return r;
  }
  if (spec.kind == SumKind::SIN && spec.n % 2 == 1) return r;  // odd under theta -> -theta
  const double scale = std::ldexp(1.0, -spec.n);
  double binom = 1.0;
  for (int k = 0; k <= spec.n; ++k) {
    if (k > 0) binom = binom * (spec.n - k + 1) / k;
    const int M = std::abs(spec.n - 2 * k) * spec.m;
    double w = binom * scale;
    if (spec.kind == SumKind::SIN) w *= ((spec.n / 2 + k) % 2 == 0) ? 1.0 : -1.0;
    if (M % 4 != 0) continue;
    r.c1[M] += w;
  }
  for (auto it = r.c1.begin(); it != r.c1.end();) it = (it->second == 0.0) ? r.c1.erase(it) : std::next(it);
  return r;
}

// General evaluator; structural zeros come back as exact 0.
template <class R>
cplx<R> evaluate(const SumSpec& spec, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  const Reduction red = reduce(spec);
  if (red.structural_zero()) return cplx<R>(0);
  if (spec.kind == SumKind::COS && spec.m == 1 && spec.n % 2 == 0)
    return spec.n == 0 && cfg.closed_form_c01 ? c01(s, cfg.prec) : c2n1_kober(spec.n / 2, s, cfg).total;
  int Mmax = 0;
  for (const auto& [M, w] : red.c1) Mmax = std::max(Mmax, M);
  const auto basis = c2n1_basis<R>(Mmax / 2, s.z(), cfg);
  cplx<R> acc(0);
  for (const auto& [M, w] : red.c1) {
    const cplx<R> v = M == 0 ? basis[0] : combine(chebyshev_basis_weights(M), basis);
    acc += R(w) * v;
  }
  return acc;
}

}  // namespace angsum::latsum
