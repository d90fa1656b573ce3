// Uniform complex-valued samples of the structure functions over a window of
// the s-plane.
#pragma once

#include <angsum/structure.hpp>

#include <vector>

namespace angsum::contour {

using latsum::EvalConfig;

struct Point {
  double sigma, t;
};

enum class FieldFunc { DELTA3, DELTA4, DELTA3_TRUNCATED, PREFACTOR, F };

struct FieldSpec {
  FieldFunc func = FieldFunc::DELTA3;
  int m = 1;
};

struct Region {
  double s0 = 0, s1 = 1, t0 = 0, t1 = 1;
  void validate() const {
    if (!(s1 > s0) || !(t1 > t0)) throw Error(ErrorKind::invalid_argument, "empty region");
  }
};

struct Resolution {
  int ns = 100, nt = 100;  // nodes per axis
};

enum class NodeState : unsigned char { ok, nudged, invalid };

struct ScalarField {
  Region region;
  int ns = 0, nt = 0;
  std::vector<cplx<double>> values;  // row-major in t: index j * ns + i
  std::vector<NodeState> state;

  double sigma(int i) const { return region.s0 + (region.s1 - region.s0) * i / (ns - 1); }
  double t(int j) const { return region.t0 + (region.t1 - region.t0) * j / (nt - 1); }
  double ds() const { return (region.s1 - region.s0) / (ns - 1); }
  double dt() const { return (region.t1 - region.t0) / (nt - 1); }
  const cplx<double>& at(int i, int j) const { return values[std::size_t(j) * ns + i]; }
  bool valid(int i, int j) const { return state[std::size_t(j) * ns + i] != NodeState::invalid; }
};

inline cplx<double> evaluate_field(const FieldSpec& f, const cplx<double>& s, const EvalConfig& cfg) {
  const ComplexPoint<double> p(s);
  switch (f.func) {
    case FieldFunc::DELTA3: return structure::delta3(f.m, p, cfg);
    case FieldFunc::DELTA4: return structure::delta4(f.m, p, cfg);
    case FieldFunc::DELTA3_TRUNCATED: return structure::delta3_truncated(p, cfg.prec);
    case FieldFunc::PREFACTOR: return 16.0 * structure::delta3_prefactor(f.m, s, cfg.prec);
    case FieldFunc::F: return structure::f2m(f.m, s);
  }
  return {};
}

// Known singular points on the real axis.
inline std::vector<double> real_singularities(const FieldSpec& f) {
  std::vector<double> out;
  switch (f.func) {
    case FieldFunc::DELTA3:
    case FieldFunc::DELTA3_TRUNCATED:
    case FieldFunc::PREFACTOR:
      for (int k = 0; k <= 2 * f.m; ++k) out.push_back(k);
      break;
    case FieldFunc::DELTA4:
      for (int k = 1; k <= 2 * f.m - 1; ++k) out.push_back(-k);
      out.push_back(1);  // the zero at s = 1 sits on the pole of C(0,1)
      break;
    case FieldFunc::F:
      for (int k = 0; k <= 2 * f.m - 1; ++k) out.push_back(-k);
      break;
  }
  return out;
}

constexpr long kMaxNodes = 4'000'000;

// Nodes within 1e-8 of a known singularity, or whose evaluation raises a
// pole error, are evaluated half a spacing away in t and marked `nudged`.
inline ScalarField sample_field(const FieldSpec& f, const Region& region, const Resolution& res,
                                const EvalConfig& cfg) {
  region.validate();
  if (res.ns < 2 || res.nt < 2) throw Error(ErrorKind::invalid_argument, "resolution must be at least 2x2");
  if (long(res.ns) * long(res.nt) > kMaxNodes)
    throw Error(ErrorKind::resolution_overflow, "more than " + std::to_string(kMaxNodes) + " nodes");
  ScalarField F;
  F.region = region;
  F.ns = res.ns;
  F.nt = res.nt;
  F.values.resize(std::size_t(res.ns) * res.nt);
  F.state.assign(F.values.size(), NodeState::ok);
  const auto sing = real_singularities(f);
  const double half = 0.5 * F.dt();
  for (int j = 0; j < F.nt; ++j)
    for (int i = 0; i < F.ns; ++i) {
      const std::size_t k = std::size_t(j) * F.ns + i;
      cplx<double> s(F.sigma(i), F.t(j));
      bool near = false;
      for (double x : sing) near = near || std::abs(s - cplx<double>(x, 0)) < 1e-8;
      if (near) {
        s += cplx<double>(0, half);
        F.state[k] = NodeState::nudged;
      }
      try {
        F.values[k] = evaluate_field(f, s, cfg);
      } catch (const Error& e) {
        try {
          F.values[k] = evaluate_field(f, s + cplx<double>(0, half), cfg);
          F.state[k] = NodeState::nudged;
        } catch (const Error&) {
          F.state[k] = NodeState::invalid;
          F.values[k] = {};
        }
      }
      if (F.state[k] != NodeState::invalid && !(finite(F.values[k].real()) && finite(F.values[k].imag())))
        F.state[k] = NodeState::invalid;
    }
  return F;
}

}  // namespace angsum::contour
