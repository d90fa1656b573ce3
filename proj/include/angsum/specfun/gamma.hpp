// Complex log-Gamma by Stirling's series with an upward shift.
#pragma once

#include <angsum/core.hpp>

#include <boost/math/special_functions/bernoulli.hpp>

#include <vector>

namespace angsum::specfun {

namespace detail {

// B_{2k} for k = 0..n-1, cached per real type.
template <class R>
const std::vector<R>& bernoulli_table() {
  static const std::vector<R> table = [] {
    std::vector<R> b(80);
    for (int k = 0; k < 80; ++k) b[k] = boost::math::bernoulli_b2n<R>(k);
    return b;
  }();
  return table;
}

template <class R>
bool is_nonpositive_integer(const cplx<R>& z) {
  using std::round;
  return z.imag() == 0 && z.real() <= 0 && z.real() == round(z.real());
}

}  // namespace detail

// Principal branch of log Gamma (analytic off the negative real axis).
template <class R>
cplx<R> log_gamma(cplx<R> z, const Precision& prec = Precision::native<R>()) {
  using std::log;
  if (detail::is_nonpositive_integer(z))
    throw Error(ErrorKind::pole_at_nonpositive_integer, "Gamma at a nonpositive integer");

  const R r0 = R(std::max(10.0, 0.85 * prec.digits));
  // log Gamma(z) = log Gamma(z + N) - sum_j log(z + j); summing principal logs
  // term by term keeps the principal branch of the result.
  cplx<R> shift_sum(0);
  while (z.real() < 0 || cabs(z) < r0) {
    shift_sum += clog(z);
    z += R(1);
  }
  const cplx<R> w = z;
  const cplx<R> lw = clog(w);
  cplx<R> result = (w - R(0.5)) * lw - w + log(2 * pi<R>()) / 2;
  const cplx<R> w2 = w * w;
  cplx<R> wpow = w;
  const auto& bern = detail::bernoulli_table<R>();
  const R eps = R(prec.rel_tol) * R(1e-3);
  for (int k = 1; k < 60; ++k) {
    const cplx<R> term = bern[k] / (R(2 * k) * R(2 * k - 1) * wpow);
    result += term;
    if (cabs(term) < eps * cabs(result)) break;
    wpow *= w2;
  }
  return result - shift_sum;
}

template <class R>
cplx<R> gamma(const cplx<R>& z, const Precision& prec = Precision::native<R>()) {
  using std::log;
  const cplx<R> lg = log_gamma(z, prec);
  if (lg.real() > log(std::numeric_limits<R>::max()) - 1)
    throw Error(ErrorKind::overflow, "Gamma overflows the working type");
  return cexp(lg);
}

}  // namespace angsum::specfun
