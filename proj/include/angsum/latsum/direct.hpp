// Brute-force lattice summation over a disc, for sigma > 1, with a rigorous
// bound on the discarded tail.
#pragma once

#include <angsum/latsum/kober.hpp>

#include <vector>

namespace angsum::latsum {

template <class R>
struct DirectResult {
  cplx<R> value{0};
  R tail_bound = 0;  // |sum over |p| > radius| <= tail_bound, for |weight| <= 1
  long points = 0;
};

// Bound on sum_{|p| > N} |p|^{-2 sigma}: every lattice point owns a unit square
// whose points are within c = sqrt(2)/2 of it, so |p|^{-2 sigma} is at most
// ((N + c)/N)^{2 sigma} |x|^{-2 sigma} over its square, and the squares lie in
// |x| >= N - c.
template <class R>
R lattice_tail_bound(R sigma, R N) {
  using std::pow;
  const R c = R(0.70711);
  return pow((N + c) / N, 2 * sigma) * 2 * pi<R>() * pow(N - c, 2 - 2 * sigma) / (2 * sigma - 2);
}

namespace detail {

template <class R>
void require_absolute(const cplx<R>& s) {
  if (!(s.real() > 1)) throw Error(ErrorKind::not_absolutely_convergent, "direct summation needs Re s > 1");
}

// Visit each point of the open quadrant p1 >= 1, p2 >= 0 with r^2 <= radius^2;
// the four rotations by pi/2 cover the punctured disc exactly once.
template <class F>
void for_quadrant(long radius, F&& f) {
  const long r2max = radius * radius;
  for (long p1 = 1; p1 <= radius; ++p1)
    for (long p2 = 0; p1 * p1 + p2 * p2 <= r2max; ++p2) f(p1, p2, p1 * p1 + p2 * p2);
}

// Neumaier-compensated complex accumulator; the disc sums add ~10^5..10^7
// terms and plain accumulation loses digits comparable to the tail bound.
template <class R>
struct CompensatedSum {
  R re = 0, im = 0, cre = 0, cim = 0;

  static void add(R& sum, R& comp, const R& x) {
    using std::abs;
    const R t = sum + x;
    comp += abs(sum) >= abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  void operator+=(const cplx<R>& z) {
    add(re, cre, z.real());
    add(im, cim, z.imag());
  }
  cplx<R> value() const { return {re + cre, im + cim}; }
};

}  // namespace detail

// sum over the disc of cos^n(m theta) or sin^n(m theta) times r^{-2s}.
template <class R>
DirectResult<R> direct_sum(const SumSpec& spec, const ComplexPoint<R>& s, long radius) {
  using std::atan2;
  using std::cos;
  using std::log;
  using std::pow;
  using std::sin;
  detail::require_absolute(s.z());
  if (radius < 1) throw Error(ErrorKind::invalid_argument, "radius must be >= 1");
  DirectResult<R> out;
  out.tail_bound = lattice_tail_bound(s.sigma(), R(radius));
  if (spec.n > 0 && reduce(spec).structural_zero()) return out;

  detail::CompensatedSum<R> acc;
  detail::for_quadrant(radius, [&](long p1, long p2, long r2) {
    R w = 0;
    if (spec.n == 0) {
      w = 4;
    } else {
      const R a = R(spec.m) * atan2(R(p2), R(p1));
      const R c = cos(a), sn = sin(a);
      // cos/sin of m(theta + k pi/2) by the quarter-turn phase m k mod 4
      for (int k = 0; k < 4; ++k) {
        const int q = (spec.m * k) % 4;
        const R cv = q == 0 ? c : q == 1 ? -sn : q == 2 ? -c : sn;
        const R sv = q == 0 ? sn : q == 1 ? c : q == 2 ? -sn : -c;
        w += pow(spec.kind == SumKind::COS ? cv : sv, spec.n);
      }
    }
    if (w != 0) acc += w * rpow(log(R(r2)), -s.z());
    out.points += 4;
  });
  out.value = acc.value();
  return out;
}

// Shell coefficients of C(1,4m) and C(0,1) as Dirichlet series in n = r^2:
// C(1,4m;s) = sum_n a_n n^{-s}, C(0,1;s) = sum_n r2_n n^{-s}.
struct ShellTable {
  int m = 1;
  long radius = 0;
  std::vector<double> a, r2;  // index n, 0 <= n <= radius^2

  ShellTable(int m_, long radius_) : m(m_), radius(radius_) {
    if (m < 1 || radius < 10) throw Error(ErrorKind::invalid_argument, "shell table needs m >= 1, radius >= 10");
    const long nmax = radius * radius;
    a.assign(nmax + 1, 0.0);
    r2.assign(nmax + 1, 0.0);
    detail::for_quadrant(radius, [&](long p1, long p2, long n) {
      // cos(4m theta) is invariant under quarter turns
      a[n] += 4.0 * std::cos(4.0 * m * std::atan2(static_cast<double>(p2), static_cast<double>(p1)));
      r2[n] += 4.0;
    });
  }

  // Delta4 - 1 = sum_n (a_n - r2_n) n^{-s} / C(0,1;s), free of the cancellation
  // in C(1,4m) / C(0,1) - 1 when both are close to 4.
  template <class R>
  DirectResult<R> numerator_minus(const cplx<R>& s) const {
    using std::log;
    detail::require_absolute(s);
    DirectResult<R> out;
    cplx<R> acc(0);
    for (long n = static_cast<long>(a.size()) - 1; n >= 1; --n) {
      const double d = a[n] - r2[n];
      if (d != 0.0) acc += R(d) * rpow(log(R(n)), -s);
    }
    out.value = acc;
    out.points = static_cast<long>(a.size());
    out.tail_bound = 2 * lattice_tail_bound(s.real(), R(radius));
    return out;
  }
};

}  // namespace angsum::latsum
