// Critical-line zero location: density-guided sign-change scan, dip
// inspection for close pairs, bracketed refinement and a count audit
// against the smooth counting function.
#pragma once

#include <angsum/zeros/family.hpp>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <vector>

namespace angsum::zeros {

struct ZeroRecord {
  FamilyId family;
  double t = 0;
  double lo = 0, hi = 0;       // bracket with opposite Z signs
  double tol = 0;              // refinement tolerance in t
  double residual = 0;         // |Z(t)| / local scale
  bool multiplicity_warning = false;
};

struct FindOptions {
  double xtol = 1e-9;
  bool audit = true;
  double audit_window = 10.0;
  double audit_slack = 2.0;
  int audit_refinements = 2;
  double step_scale = 1.0;  // multiplies the density-guided step
};

namespace detail {

struct Sample {
  double t, z;
};

inline int sgn(double x) { return (x > 0) - (x < 0); }

template <class Z>
std::vector<Sample> scan(Z&& z, const FamilyId& f, double lo, double hi, double scale) {
  std::vector<Sample> out;
  double t = lo;
  out.push_back({t, z(t)});
  while (t < hi) {
    const double h = scale / (4 * std::max(predicted_density(f, t), 0.5));
    t = std::min(hi, t + h);
    out.push_back({t, z(t)});
  }
  return out;
}

template <class Z>
ZeroRecord refine(Z&& z, const FamilyId& f, double a, double za, double b, double zb, double scale_z,
                  const FindOptions& opt) {
  ZeroRecord r;
  r.family = f;
  r.tol = opt.xtol;
  if (za == 0 || zb == 0) {
    r.t = r.lo = r.hi = (za == 0) ? a : b;
  } else {
    boost::uintmax_t iters = 200;
    auto tol = [&](double x, double y) { return std::abs(x - y) < opt.xtol; };
    const auto br = boost::math::tools::toms748_solve(z, a, b, za, zb, tol, iters);
    r.lo = br.first;
    r.hi = br.second;
    r.t = 0.5 * (br.first + br.second);
  }
  const double zt = z(r.t);
  r.residual = scale_z > 0 ? std::abs(zt) / scale_z : 0.0;
  const double h = 1e-5;
  const double dz = (z(r.t + h) - z(r.t - h)) / (2 * h);
  r.multiplicity_warning = std::abs(dz) < 1e-6 * scale_z;
  return r;
}

// Zeros of z on [lo, hi] from one sweep at the given step scale.
template <class Z>
std::vector<ZeroRecord> sweep(Z&& z, const FamilyId& f, double lo, double hi, double step_scale,
                              const FindOptions& opt) {
  const auto S = scan(z, f, lo, hi, step_scale);
  auto local_scale = [&](std::size_t i) {
    double m = 0;
    for (std::size_t j = i; j < S.size() && S[j].t <= S[i].t + 0.5; ++j) m = std::max(m, std::abs(S[j].z));
    for (std::size_t j = i + 1; j-- > 0 && S[j].t >= S[i].t - 0.5;) m = std::max(m, std::abs(S[j].z));
    return m;
  };
  std::vector<ZeroRecord> out;
  for (std::size_t i = 0; i + 1 < S.size(); ++i) {
    const auto& a = S[i];
    const auto& b = S[i + 1];
    if (sgn(a.z) * sgn(b.z) < 0) {
      out.push_back(refine(z, f, a.t, a.z, b.t, b.z, local_scale(i), opt));
      continue;
    }
    if (a.z == 0) {
      out.push_back(refine(z, f, a.t, a.z, b.t, b.z, local_scale(i), opt));
      continue;
    }
    // A dip of |Z| between same-sign neighbours may hide a close pair.
    if (i >= 1) {
      const auto& p = S[i - 1];
      const int sa = sgn(a.z);
      if (sa != 0 && sgn(p.z) == sa && sgn(b.z) == sa && std::abs(a.z) < std::abs(p.z) &&
          std::abs(a.z) < std::abs(b.z)) {
        auto g = [&](double t) { return sa * z(t); };
        boost::uintmax_t iters = 60;
        const auto mn = boost::math::tools::brent_find_minima(g, p.t, b.t, 40, iters);
        if (mn.second < 0) {
          const double tm = mn.first, zm = z(tm), sc = local_scale(i);
          out.push_back(refine(z, f, p.t, p.z, tm, zm, sc, opt));
          out.push_back(refine(z, f, tm, zm, b.t, b.z, sc, opt));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ZeroRecord& x, const ZeroRecord& y) { return x.t < y.t; });
  std::vector<ZeroRecord> dedup;
  for (const auto& r : out)
    if (dedup.empty() || r.t - dedup.back().t > 10 * opt.xtol) dedup.push_back(r);
  return dedup;
}

}  // namespace detail

// Merge two sorted zero lists, relabelled as `as`.
inline std::vector<ZeroRecord> merge_zero_lists(const std::vector<ZeroRecord>& a, const std::vector<ZeroRecord>& b,
                                                const FamilyId& as) {
  std::vector<ZeroRecord> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  for (auto& r : out) r.family = as;
  std::sort(out.begin(), out.end(), [](const ZeroRecord& x, const ZeroRecord& y) { return x.t < y.t; });
  return out;
}

// Zeros of the family's Z-function on (t_lo, t_hi]. C(0,1) is the union of
// the zeta and L-4 zero sets, located factor by factor.
inline std::vector<ZeroRecord> find_zeros(const FamilyId& f, double t_lo, double t_hi, const EvalConfig& cfg,
                                          const FindOptions& opt = {}) {
  if (!(t_hi > t_lo) || t_lo < 0) throw Error(ErrorKind::invalid_argument, "need t_hi > t_lo >= 0");
  if (f.kind == FamilyKind::C01)
    return merge_zero_lists(find_zeros(FamilyId::zeta(), t_lo, t_hi, cfg, opt),
                            find_zeros(FamilyId::lminus4(), t_lo, t_hi, cfg, opt), f);

  auto z = [&](double t) { return z_real<double>(f, t, cfg); };
  // Z at exactly t = 0 is a (nonzero) real value; starting there is harmless.
  auto zeros = detail::sweep(z, f, t_lo, t_hi, opt.step_scale, opt);
  if (!opt.audit) return zeros;

  const double W = opt.audit_window;
  std::vector<ZeroRecord> audited;
  for (double a = std::floor(t_lo / W) * W; a < t_hi; a += W) {
    const double lo = std::max(a, t_lo), hi = std::min(a + W, t_hi);
    std::vector<ZeroRecord> part;
    for (const auto& r : zeros)
      if (r.t > lo && r.t <= hi) part.push_back(r);
    const double expected =
        predicted_count(f, hi) - (lo > 0 ? predicted_count(f, lo) : 0.0);
    double scale = opt.step_scale;
    int round = 0;
    while (expected - static_cast<double>(part.size()) - opt.audit_slack >= 1.0) {
      if (round == opt.audit_refinements)
        throw Error(ErrorKind::suspected_missed_zero,
                    f.label() + " on (" + std::to_string(lo) + ", " + std::to_string(hi) + "]: found " +
                        std::to_string(part.size()) + ", expected about " + std::to_string(expected));
      scale /= 2;
      ++round;
      part.clear();
      for (const auto& r : detail::sweep(z, f, lo, hi, scale, opt))
        if (r.t > lo && r.t <= hi) part.push_back(r);
    }
    audited.insert(audited.end(), part.begin(), part.end());
  }
  return audited;
}

// Zeros of each family in [t_lo, t_hi] falling into each window of width W.
inline std::vector<int> window_counts(const std::vector<ZeroRecord>& zs, double t_hi, double W = 10.0) {
  const int n = static_cast<int>(std::ceil(t_hi / W - 1e-12));
  std::vector<int> c(std::max(n, 0), 0);
  for (const auto& r : zs) {
    const int k = static_cast<int>(std::floor(r.t / W));
    if (k >= 0 && k < n) ++c[k];
  }
  return c;
}

}  // namespace angsum::zeros
