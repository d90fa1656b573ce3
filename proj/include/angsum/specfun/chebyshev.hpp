#pragma once

#include <angsum/core.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace angsum::specfun {

using boost::multiprecision::cpp_int;

// T_order(x) = sum_k coeffs[k] x^k with exact integer coefficients.
struct ChebCoeffs {
  int order = 0;
  std::vector<cpp_int> coeffs;

  template <class R>
  R evaluate(const R& x) const {
    R acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->template convert_to<R>();
    return acc;
  }
};

inline ChebCoeffs chebyshev_coeffs(int order) {
  if (order < 0) throw Error(ErrorKind::invalid_argument, "Chebyshev order must be >= 0");
  std::vector<cpp_int> prev{1}, cur{0, 1};
  if (order == 0) return {0, prev};
  for (int n = 1; n < order; ++n) {
    std::vector<cpp_int> next(n + 2, 0);
    for (int k = 0; k <= n; ++k) next[k + 1] += 2 * cur[k];
    for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= prev[k];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {order, cur};
}

}  // namespace angsum::specfun
