// Sums along lattice rays: each primitive direction (p1, p2) with p1 > p2 >= 1
// and gcd 1 carries the radial factor zeta(2s); axes and diagonals are split
// off as closed-form terms.
#pragma once

#include <angsum/latsum/direct.hpp>

#include <numeric>

namespace angsum::latsum {

enum class RayForm { C01, C14m, C22m, S22m, C2m1 };

template <class R>
struct RayResult {
  cplx<R> value{0};
  R tail_bound = 0;
  long directions = 0;
};

// On the open first octant cos(theta) > 0, so cos^{2s}(theta) / p1^{2s} is the
// principal power r^{-2s} with a positive base.
template <class R>
RayResult<R> ray_sum(RayForm form, int m, const ComplexPoint<R>& s, long cutoff) {
  using std::atan2;
  using std::cos;
  using std::log;
  using std::pow;
  using std::sin;
  const cplx<R> z = s.z();
  if (!(s.sigma() > 1)) throw Error(ErrorKind::divergent_region, "ray sums diverge for Re s <= 1");
  if (cutoff < 2) throw Error(ErrorKind::invalid_argument, "cutoff must be >= 2");
  if (form != RayForm::C01 && m < 1) throw Error(ErrorKind::invalid_argument, "m must be >= 1");
  const Precision prec = Precision::native<R>();

  auto angular = [&](R theta) -> R {
    switch (form) {
      case RayForm::C01: return 1;
      case RayForm::C14m: return cos(4 * m * theta);
      case RayForm::C22m: { const R c = cos(2 * m * theta); return c * c; }
      case RayForm::S22m: { const R v = sin(2 * m * theta); return v * v; }
      case RayForm::C2m1: return pow(cos(theta), 2 * m) + pow(sin(theta), 2 * m);
    }
    return 0;
  };

  RayResult<R> out;
  cplx<R> octant(0);
  for (long p1 = 2; p1 <= cutoff; ++p1)
    for (long p2 = 1; p2 < p1; ++p2) {
      if (std::gcd(p1, p2) != 1) continue;
      const R w = angular(atan2(R(p2), R(p1)));
      ++out.directions;
      if (w != 0) octant += w * rpow(log(R(p1 * p1 + p2 * p2)), -z);
    }

  const cplx<R> zeta2s = specfun::riemann_zeta(R(2) * z, prec);
  const cplx<R> half_pow = rpow(log(R(2)), -z);
  const R sign_m = (m % 2 == 0) ? R(1) : R(-1);
  cplx<R> bracket;
  R front = 4;
  switch (form) {
    case RayForm::C01: bracket = R(1) + half_pow + R(2) * octant; break;
    case RayForm::C14m: bracket = R(1) + sign_m * half_pow + R(2) * octant; break;
    case RayForm::C22m: {
      const R c = cos(pi<R>() * m / 2);
      bracket = R(1) + c * c * half_pow + R(2) * octant;
      break;
    }
    case RayForm::S22m: {
      const R v = sin(pi<R>() * m / 2);
      bracket = v * v * half_pow + R(2) * octant;
      break;
    }
    case RayForm::C2m1:
      front = 2;
      bracket = R(1) + rpow(log(R(2)), -(z + R(m - 1))) + R(2) * octant;
      break;
  }
  out.value = front * zeta2s * bracket;
  // Directions with p1 > X: sum_{p1 > X} p1 * p1^{-2 sigma} <= X^{2 - 2 sigma} / (2 sigma - 2).
  const R X = R(cutoff);
  out.tail_bound = front * cabs(zeta2s) * 2 * pow(X, 2 - 2 * s.sigma()) / (2 * s.sigma() - 2);
  return out;
}

}  // namespace angsum::latsum
