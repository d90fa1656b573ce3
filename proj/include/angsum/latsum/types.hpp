#pragma once

#include <angsum/core.hpp>

namespace angsum::latsum {

enum class SumKind { COS, SIN };

// C(n, m; s) or S(n, m; s): sum over the lattice of cos^n(m theta) or
// sin^n(m theta) times (p1^2 + p2^2)^{-s}.
struct SumSpec {
  SumKind kind = SumKind::COS;
  int n = 0;
  int m = 1;

  SumSpec() = default;
  SumSpec(SumKind k, int n_, int m_) : kind(k), n(n_), m(m_) {
    if (n < 0 || m < 0) throw Error(ErrorKind::invalid_argument, "trig power and multiplier must be >= 0");
  }
  // Every n = 0 sum is the plain lattice sum C(0, 1; s).
  bool is_plain() const { return n == 0; }
};

struct EvalConfig {
  int truncation_P = 0;  // 0 selects ceil(|s + n - 1/2| / pi) + 4
  int stability_passes = 6;
  int direct_radius = 200;
  double abel_x = 0.99;
  Precision prec;
  bool use_recurrence = true;   // K tables for higher orders by upward recurrence
  bool closed_form_c01 = true;  // C(0,1) as 4 zeta L_{-4} inside combinations

  void validate() const {
    if (truncation_P < 0) throw Error(ErrorKind::invalid_argument, "truncation P must be >= 0");
    if (stability_passes < 1) throw Error(ErrorKind::invalid_argument, "stability passes must be >= 1");
    if (direct_radius < 10) throw Error(ErrorKind::invalid_argument, "direct radius must be >= 10");
    if (!(abel_x > 0.0 && abel_x < 1.0)) throw Error(ErrorKind::invalid_argument, "Abel x must lie in (0, 1)");
  }

  template <class R>
  static EvalConfig native() {
    EvalConfig c;
    c.prec = Precision::native<R>();
    return c;
  }
};

template <class R>
struct KoberBreakdown {
  cplx<R> axial{0}, zeta_line{0}, double_sum{0}, total{0};
  int P_used = 0;
  long k_evaluations = 0;
};

}  // namespace angsum::latsum
