// Real rotations of the critical-line functions (Hardy-type Z-functions) and
// the smooth zero-counting main terms.
#pragma once

#include <angsum/latsum.hpp>

#include <cctype>
#include <numbers>
#include <string>

namespace angsum::zeros {

using latsum::EvalConfig;

enum class FamilyKind { ZETA, LMINUS4, C01, C14M };

struct FamilyId {
  FamilyKind kind = FamilyKind::ZETA;
  int m = 0;  // only for C14M

  static FamilyId zeta() { return {FamilyKind::ZETA, 0}; }
  static FamilyId lminus4() { return {FamilyKind::LMINUS4, 0}; }
  static FamilyId c01() { return {FamilyKind::C01, 0}; }
  static FamilyId c14m(int m) {
    if (m < 1) throw Error(ErrorKind::invalid_argument, "C(1,4m) needs m >= 1");
    return {FamilyKind::C14M, m};
  }

  std::string label() const {
    switch (kind) {
      case FamilyKind::ZETA: return "zeta";
      case FamilyKind::LMINUS4: return "L-4";
      case FamilyKind::C01: return "C(0,1)";
      case FamilyKind::C14M: return "C(1," + std::to_string(4 * m) + ")";
    }
    return "?";
  }

  // Accepts the labels above plus the short forms zeta, l-4, c01, c14, c18, c112, ...
  static FamilyId parse(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "zeta") return zeta();
    if (s == "l-4" || s == "lminus4" || s == "beta") return lminus4();
    if (s == "c(0,1)" || s == "c01") return c01();
    std::string digits;
    if (s.rfind("c(1,", 0) == 0 && s.back() == ')') digits = s.substr(4, s.size() - 5);
    else if (s.rfind("c1", 0) == 0) digits = s.substr(2);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      const int M = std::stoi(digits);
      if (M > 0 && M % 4 == 0) return c14m(M / 4);
    }
    throw Error(ErrorKind::invalid_argument, "unknown family '" + s + "'");
  }

  friend bool operator==(const FamilyId& a, const FamilyId& b) { return a.kind == b.kind && a.m == b.m; }
};

// Phase theta(t) with e^{i theta} f(1/2 + it) real.
template <class R>
R rotation_angle(const FamilyId& f, R t, const Precision& prec = Precision::native<R>()) {
  using std::log;
  const cplx<R> s(R(0.5), t);
  switch (f.kind) {
    case FamilyKind::ZETA:
      return specfun::log_gamma(cplx<R>(R(0.25), t / 2), prec).imag() - t / 2 * log(pi<R>());
    case FamilyKind::LMINUS4:
      return specfun::log_gamma(cplx<R>(R(0.75), t / 2), prec).imag() + t / 2 * log(4 / pi<R>());
    case FamilyKind::C01:
      return specfun::log_gamma(s, prec).imag() - t * log(pi<R>());
    case FamilyKind::C14M:
      return specfun::log_gamma(s + R(2 * f.m), prec).imag() - t * log(pi<R>());
  }
  return 0;
}

// The family function itself at 1/2 + it.
template <class R>
cplx<R> critical_value(const FamilyId& f, R t, const EvalConfig& cfg) {
  const ComplexPoint<R> s(R(0.5), t);
  switch (f.kind) {
    case FamilyKind::ZETA: return specfun::riemann_zeta(s.z(), cfg.prec);
    case FamilyKind::LMINUS4: return specfun::beta_catalan(s.z(), cfg.prec);
    case FamilyKind::C01: return latsum::c01(s, cfg.prec);
    case FamilyKind::C14M: return latsum::c14m(f.m, s, cfg);
  }
  return {};
}

// e^{i theta} f(1/2 + it); the imaginary part is rounding noise.
template <class R>
cplx<R> z_rotated(const FamilyId& f, R t, const EvalConfig& cfg) {
  const R th = rotation_angle(f, t, cfg.prec);
  return cexp(cplx<R>(0, th)) * critical_value(f, t, cfg);
}

template <class R>
R z_real(const FamilyId& f, R t, const EvalConfig& cfg) {
  return z_rotated(f, t, cfg).real();
}

// Smooth main terms of the zero-counting functions.
inline double predicted_count(const FamilyId& f, double t) {
  if (!(t > 0)) throw Error(ErrorKind::invalid_argument, "predicted count needs t > 0");
  const double L = std::log(t), P = std::numbers::pi;
  switch (f.kind) {
    case FamilyKind::ZETA: return t / (2 * P) * L - t / (2 * P) * (1 + std::log(2 * P));
    case FamilyKind::LMINUS4: return t / (2 * P) * L - t / (2 * P) * (1 + std::log(P / 2));
    case FamilyKind::C01:
    case FamilyKind::C14M: return t / P * L - t / P * (1 + std::log(P));
  }
  return 0;
}

// Counting function for the product Delta3 at abscissa sigma.
inline double predicted_count_delta3(double sigma, double t) {
  if (!(t > 0)) throw Error(ErrorKind::invalid_argument, "predicted count needs t > 0");
  const double P = std::numbers::pi;
  return 2 * t / P * std::log(t) - 2 * t / P * (1 + std::log(P)) + sigma - 0.5 +
         sigma / (P * t) * (1 - 2 * sigma);
}

// dN/dt of the smooth counts.
inline double predicted_density(const FamilyId& f, double t) {
  const double P = std::numbers::pi;
  t = std::max(t, 1.0);
  switch (f.kind) {
    case FamilyKind::ZETA: return std::log(t / (2 * P)) / (2 * P);
    case FamilyKind::LMINUS4: return std::log(2 * t / P) / (2 * P);
    case FamilyKind::C01:
    case FamilyKind::C14M: return std::log(t / P) / P;
  }
  return 0;
}

}  // namespace angsum::zeros
