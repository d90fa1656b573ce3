// Shared plumbing: real types, precision targets, complex helpers, errors and
// the ComplexPoint coordinate.
#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace angsum {

using quad = boost::multiprecision::float128;

template <class R>
using cplx = std::complex<R>;

template <class R>
inline R pi() {
  return boost::math::constants::pi<R>();
}

// ---------------------------------------------------------------------------
// Errors. Every kind maps to a distinct process exit code (see exit_code()).

enum class ErrorKind {
  invalid_argument,
  pole_at_nonpositive_integer,
  overflow,
  pole_at_one,
  nonpositive_argument,
  pole_of_sum,
  nonconvergent_truncation,
  not_absolutely_convergent,
  divergent_region,
  pole_of_f,
  branch_ambiguity,
  on_branch_cut,
  pole_of_delta3,
  pole_of_delta4,
  insufficient_data,
  suspected_missed_zero,
  resolution_overflow,
  degenerate_cell,
  phase_tear,
  no_sign_change,
  step_collapse,
  boundary_trace_failure,
  io_failure,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::pole_at_nonpositive_integer: return "pole-at-nonpositive-integer";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::pole_at_one: return "pole-at-one";
    case ErrorKind::nonpositive_argument: return "nonpositive-argument";
    case ErrorKind::pole_of_sum: return "pole-of-sum";
    case ErrorKind::nonconvergent_truncation: return "nonconvergent-truncation";
    case ErrorKind::not_absolutely_convergent: return "not-absolutely-convergent";
    case ErrorKind::divergent_region: return "divergent-region";
    case ErrorKind::pole_of_f: return "pole-of-F";
    case ErrorKind::branch_ambiguity: return "branch-ambiguity";
    case ErrorKind::on_branch_cut: return "on-branch-cut";
    case ErrorKind::pole_of_delta3: return "pole-of-delta3";
    case ErrorKind::pole_of_delta4: return "pole-of-delta4";
    case ErrorKind::insufficient_data: return "insufficient-data";
    case ErrorKind::suspected_missed_zero: return "suspected-missed-zero";
    case ErrorKind::resolution_overflow: return "resolution-overflow";
    case ErrorKind::degenerate_cell: return "degenerate-cell";
    case ErrorKind::phase_tear: return "phase-tear";
    case ErrorKind::no_sign_change: return "no-sign-change";
    case ErrorKind::step_collapse: return "step-collapse";
    case ErrorKind::boundary_trace_failure: return "boundary-trace-failure";
    case ErrorKind::io_failure: return "io-failure";
  }
  return "unknown";
}

// Exit codes: 2 is reserved for command-line usage errors, 1 for failed
// verification; the numerical taxonomy starts at 10.
inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument: return 3;
    case ErrorKind::pole_at_nonpositive_integer: return 10;
    case ErrorKind::overflow: return 11;
    case ErrorKind::pole_at_one: return 12;
    case ErrorKind::nonpositive_argument: return 13;
    case ErrorKind::pole_of_sum: return 20;
    case ErrorKind::nonconvergent_truncation: return 21;
    case ErrorKind::not_absolutely_convergent: return 22;
    case ErrorKind::divergent_region: return 23;
    case ErrorKind::pole_of_f: return 30;
    case ErrorKind::branch_ambiguity: return 31;
    case ErrorKind::on_branch_cut: return 32;
    case ErrorKind::pole_of_delta3: return 33;
    case ErrorKind::pole_of_delta4: return 34;
    case ErrorKind::insufficient_data: return 40;
    case ErrorKind::suspected_missed_zero: return 41;
    case ErrorKind::resolution_overflow: return 50;
    case ErrorKind::degenerate_cell: return 51;
    case ErrorKind::phase_tear: return 52;
    case ErrorKind::no_sign_change: return 53;
    case ErrorKind::step_collapse: return 54;
    case ErrorKind::boundary_trace_failure: return 55;
    case ErrorKind::io_failure: return 60;
  }
  return 1;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// ---------------------------------------------------------------------------
// Precision: working digits and the relative error the kernels aim for.

struct Precision {
  int digits = 16;
  double rel_tol = 1e-13;

  Precision() = default;
  Precision(int d, double tol) : digits(d), rel_tol(tol) {
    if (d < 4 || !(tol > 0.0) || tol < std::pow(10.0, 2 - d))
      throw Error(ErrorKind::invalid_argument,
                  "precision target below what " + std::to_string(d) + " digits can deliver");
  }

  template <class R>
  static Precision native() {
    if constexpr (std::is_same_v<R, double>) {
      return {16, 1e-13};
    } else {
      return {34, 1e-28};
    }
  }
};

// ---------------------------------------------------------------------------
// Complex helpers written against ADL so they work for double and quad alike.

template <class R>
inline R abs_(const R& x) {
  return x < 0 ? -x : x;
}

template <class R>
inline bool finite(const R& x) {
  return x - x == 0;
}

template <class R>
inline cplx<R> cexp(const cplx<R>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  const R e = exp(z.real());
  return {e * cos(z.imag()), e * sin(z.imag())};
}

template <class R>
inline R cabs(const cplx<R>& z) {
  using std::hypot;
  return hypot(z.real(), z.imag());
}

template <class R>
inline R carg(const cplx<R>& z) {
  using std::atan2;
  return atan2(z.imag(), z.real());
}

template <class R>
inline cplx<R> clog(const cplx<R>& z) {
  using std::log;
  return {log(cabs(z)), carg(z)};
}

template <class R>
inline cplx<R> csqrt(const cplx<R>& z) {
  using std::sqrt;
  const R r = cabs(z);
  if (r == 0) return {0, 0};
  R re = sqrt((r + abs_(z.real())) / 2);
  if (z.real() >= 0) return {re, z.imag() / (2 * re)};
  R im = z.imag() >= 0 ? re : -re;
  return {z.imag() / (2 * im), im};
}

// e^{s log b} for real b > 0.
template <class R>
inline cplx<R> rpow(const R& base_log, const cplx<R>& s) {
  return cexp(cplx<R>(s.real() * base_log, s.imag() * base_log));
}

template <class R>
inline cplx<R> csin(const cplx<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {sin(z.real()) * cosh(z.imag()), cos(z.real()) * sinh(z.imag())};
}

template <class R>
inline cplx<R> ccos(const cplx<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {cos(z.real()) * cosh(z.imag()), -sin(z.real()) * sinh(z.imag())};
}

// log sin z without overflow for large |Im z| (branch irrelevant to callers
// that exponentiate).
template <class R>
inline cplx<R> log_sin(const cplx<R>& z) {
  using std::log;
  if (abs_(z.imag()) < R(30)) return clog(csin(z));
  const cplx<R> I(0, 1);
  if (z.imag() > 0) {
    // sin z = (i/2) e^{-iz} (1 - e^{2iz})
    return cplx<R>(-log(R(2)), pi<R>() / 2) - I * z + clog(cplx<R>(1) - cexp(R(2) * I * z));
  }
  return std::conj(log_sin(std::conj(z)));
}

template <class R>
inline cplx<R> casinh(const cplx<R>& z) {
  return clog(z + csqrt(z * z + cplx<R>(1)));
}

template <class R>
inline cplx<R> ccosh(const cplx<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {cosh(z.real()) * cos(z.imag()), sinh(z.real()) * sin(z.imag())};
}

// Wrap an angle into (-pi, pi].
template <class R>
inline R wrap_pi(R a) {
  using std::floor;
  const R tp = 2 * pi<R>();
  a -= tp * floor((a + pi<R>()) / tp);
  if (a <= -pi<R>()) a += tp;
  return a;
}

// Distance of a from b modulo p.
template <class R>
inline R mod_distance(R a, R b, R p) {
  using std::floor;
  R d = a - b;
  d -= p * floor(d / p + R(0.5));
  return abs_(d);
}

template <class To, class From>
inline cplx<To> cast(const cplx<From>& z) {
  return {static_cast<To>(z.real()), static_cast<To>(z.imag())};
}

// ---------------------------------------------------------------------------
// ComplexPoint: the exponent s = sigma + i t.

template <class R>
class ComplexPoint {
 public:
  ComplexPoint() = default;
  ComplexPoint(R sigma, R t) : sigma_(sigma), t_(t) { check(); }
  explicit ComplexPoint(const cplx<R>& z) : sigma_(z.real()), t_(z.imag()) { check(); }

  R sigma() const { return sigma_; }
  R t() const { return t_; }
  cplx<R> z() const { return {sigma_, t_}; }
  operator cplx<R>() const { return z(); }

  ComplexPoint conj() const { return {sigma_, -t_}; }
  ComplexPoint reflect() const { return {1 - sigma_, -t_}; }

  friend bool operator==(const ComplexPoint& a, const ComplexPoint& b) {
    return a.sigma_ == b.sigma_ && a.t_ == b.t_;
  }

 private:
  void check() const {
    if (!finite(sigma_) || !finite(t_))
      throw Error(ErrorKind::invalid_argument, "non-finite complex point");
  }
  R sigma_ = 0;
  R t_ = 0;
};

}  // namespace angsum
