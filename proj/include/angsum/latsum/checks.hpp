// Residual suites: the order 0..10 identity systems among the C(2l,1) basis
// and the functional equation of the completed sums.
#pragma once

#include <angsum/latsum/identities.hpp>
#include <angsum/latsum/kober.hpp>

#include <string>
#include <vector>

namespace angsum::latsum {

template <class R>
struct NamedResidual {
  std::string name;
  R residual = 0;
};

// C(n,m) or S(n,m) from a precomputed basis C(2l,1), l = 0..L.
template <class R>
cplx<R> evaluate_on_basis(const SumSpec& spec, const std::vector<cplx<R>>& basis) {
  cplx<R> acc(0);
  for (const auto& [M, w] : reduce(spec).c1) {
    if (M / 2 >= static_cast<int>(basis.size())) throw Error(ErrorKind::invalid_argument, "basis too short");
    acc += R(w) * (M == 0 ? basis[0] : combine(chebyshev_basis_weights(M), basis));
  }
  return acc;
}

// Every identity of the order 0..10 systems at one point. Each side is built
// along a different route: Kober sums of separate orders, the general power
// reduction, the binomial expansion of mixed powers, and the closed form of
// C(0,1).
template <class R>
std::vector<NamedResidual<R>> identity_suite(const ComplexPoint<R>& s, const EvalConfig& cfg) {
  EvalConfig series = cfg;
  series.closed_form_c01 = false;
  const auto b = c2n1_basis<R>(5, s.z(), series);
  const cplx<R> c0 = c01(s, cfg.prec);
  auto C = [&](int n, int m) { return evaluate_on_basis(SumSpec(SumKind::COS, n, m), b); };
  auto S = [&](int n, int m) { return evaluate_on_basis(SumSpec(SumKind::SIN, n, m), b); };
  auto mixed = [&](int a, int bb) { return latsum::apply(mixed_power_combination(a, bb, false), b); };
  const R h = R(1) / 2, q = R(1) / 4;
  std::vector<NamedResidual<R>> out;
  auto add = [&](const char* name, const cplx<R>& lhs, const cplx<R>& rhs) {
    out.push_back({name, relative_residual(lhs, rhs)});
  };

  add("C(0,1) series = 4 zeta L-4", b[0], c0);
  add("C(2,1) = C(0,1)/2", b[1], h * c0);
  add("C(1,4) = 8C(4,1) - 3C(0,1)", C(1, 4), R(8) * b[2] - R(3) * b[0]);
  add("C(2,2) = 4C(4,1) - C(0,1)", C(2, 2), R(4) * b[2] - b[0]);
  add("S(2,2) = -4C(4,1) + 2C(0,1)", S(2, 2), R(-4) * b[2] + R(2) * b[0]);
  add("C(6,1) = 3/2 C(4,1) - 1/4 C(0,1)", b[3], R(1.5) * b[2] - q * b[0]);
  add("C(2,3) = C(0,1)/2", C(2, 3), h * b[0]);
  add("S(2,3) = C(0,1)/2", S(2, 3), h * b[0]);
  add("p1^4 p2^2 sum = p1^2 p2^4 sum", mixed(2, 1), mixed(1, 2));
  add("p1^4 p2^2 sum = half p1^2 p2^2 sum", mixed(2, 1), h * mixed(1, 1));
  add("cos^4 sin^2 sum = S(2,2)/8", mixed(2, 1), S(2, 2) / R(8));
  add("C(1,8) = 128C(8,1) - 224C(4,1) + 49C(0,1)", C(1, 8), R(128) * b[4] - R(224) * b[2] + R(49) * b[0]);
  add("C(2,4) = 64C(8,1) - 112C(4,1) + 25C(0,1)", C(2, 4), R(64) * b[4] - R(112) * b[2] + R(25) * b[0]);
  add("S(2,4) = -64C(8,1) + 112C(4,1) - 24C(0,1)", S(2, 4), R(-64) * b[4] + R(112) * b[2] - R(24) * b[0]);
  add("p1^6 p2^2 sum = -C(8,1) + 3/2 C(4,1) - 1/4 C(0,1)", mixed(3, 1), -b[4] + R(1.5) * b[2] - q * b[0]);
  add("p1^4 p2^4 sum = C(8,1) - 2C(4,1) + 1/2 C(0,1)", mixed(2, 2), b[4] - R(2) * b[2] + h * b[0]);
  for (int n = 1; n <= 5; ++n) {
    // C(2n,1) = sum_l binom(n,l) (-1)^l C(2l,1), p1 and p2 exchanged
    cplx<R> rhs(0);
    R scale = cabs(b[n]);
    for (int l = 0; l <= n; ++l) {
      const cplx<R> term = to_real<R>(binomial(n, l)) * b[l];
      rhs += (l % 2 == 0) ? term : -term;
      scale = std::max(scale, cabs(term));
    }
    out.push_back({"binomial expansion of C(" + std::to_string(2 * n) + ",1)", cabs(b[n] - rhs) / scale});
  }
  for (int n = 1; n <= 3; ++n) {
    const auto r = recurrence_check(n, s, cfg);
    out.push_back({std::string(r.even ? "vanishing sum" : "odd-order reduction") + " n=" + std::to_string(n),
                   r.recurrence});
  }
  add("C(10,1) = 1/2 C(0,1) - 5/2 C(4,1) + 5/2 C(8,1)", b[5], h * b[0] - R(2.5) * b[2] + R(2.5) * b[4]);
  add("p1^8 p2^2 sum = C(8,1) - C(10,1)", mixed(4, 1), b[4] - b[5]);
  add("p1^6 p2^4 sum = half p1^4 p2^4 sum", mixed(3, 2), h * mixed(2, 2));
  for (int m = 1; m <= 2; ++m) {
    const std::string tag = std::to_string(2 * m) + ")";
    out.push_back({"C(1," + std::to_string(4 * m) + ") = C(2," + tag + " - S(2," + tag,
                   relative_residual(C(1, 4 * m), C(2, 2 * m) - S(2, 2 * m))});
    out.push_back({"C(2," + tag + " + S(2," + tag + " = C(0,1)", relative_residual(C(2, 2 * m) + S(2, 2 * m), c0)});
  }
  return out;
}

// Gamma(2m + s) pi^{-s} C(1,4m;s); for m = 0 the sum is C(0,1;s) from its
// Kober series.
template <class R>
cplx<R> completed_sum(int m, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  using std::log;
  if (m < 0) throw Error(ErrorKind::invalid_argument, "m must be >= 0");
  const cplx<R> z = s.z();
  const cplx<R> sum = m == 0 ? c2n1_kober(0, s, cfg).total : c14m(m, s, cfg);
  return cexp(specfun::log_gamma(z + R(2 * m), cfg.prec) - z * log(pi<R>())) * sum;
}

// |G(s) - G(1-s)| / |G(s)| for the completed sum G.
template <class R>
R functional_equation_residual(int m, const ComplexPoint<R>& s, const EvalConfig& cfg) {
  const cplx<R> a = completed_sum(m, s, cfg);
  const cplx<R> b = completed_sum(m, s.reflect(), cfg);
  return cabs(a - b) / cabs(a);
}

}  // namespace angsum::latsum
