// Spacing statistics, interleaving of C(0,1) and C(1,4m) zeros, the
// interval census table and zero-list export.
#pragma once

#include <angsum/zeros/find.hpp>

#include <json.hpp>

#include <array>
#include <map>
#include <cstdio>
#include <sstream>

namespace angsum::zeros {

// Unitary Wigner surmise with unit mean and unit mass.
inline double wigner_unitary(double S) {
  const double P = std::numbers::pi;
  return 32.0 / (P * P) * S * S * std::exp(-4.0 * S * S / P);
}

// The same curve with the printed prefactor 9/pi^2 (mass 9/32).
inline double wigner_unitary_as_printed(double S) {
  const double P = std::numbers::pi;
  return 9.0 / (P * P) * S * S * std::exp(-4.0 * S * S / P);
}

struct GapStats {
  std::vector<double> gaps;     // rescaled to unit mean
  std::vector<double> edges;    // bins + 1 edges
  std::vector<int> counts;
  std::vector<double> density;  // counts / (n * width)
  std::vector<double> surmise;  // wigner_unitary at bin centres
  double raw_mean = 0;

  double first_bin_mass() const { return gaps.empty() ? 0.0 : double(counts.front()) / double(gaps.size()); }

  // max over bins of |histogram density - p(centre)|
  template <class P>
  double sup_distance(P&& p) const {
    double d = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
      d = std::max(d, std::abs(density[i] - p(0.5 * (edges[i] + edges[i + 1]))));
    return d;
  }
};

inline GapStats gap_stats(const std::vector<ZeroRecord>& zeros, int bins = 12, double support = 3.0) {
  if (zeros.size() < 50) throw Error(ErrorKind::insufficient_data, "gap statistics need at least 50 zeros");
  if (bins < 1 || !(support > 0)) throw Error(ErrorKind::invalid_argument, "bad histogram layout");
  GapStats g;
  for (std::size_t i = 1; i < zeros.size(); ++i) g.gaps.push_back(zeros[i].t - zeros[i - 1].t);
  double sum = 0;
  for (double x : g.gaps) sum += x;
  g.raw_mean = sum / double(g.gaps.size());
  for (double& x : g.gaps) x /= g.raw_mean;
  const double w = support / bins;
  for (int i = 0; i <= bins; ++i) g.edges.push_back(i * w);
  g.counts.assign(bins, 0);
  for (double x : g.gaps) {
    const int k = static_cast<int>(x / w);
    if (k < bins) ++g.counts[k];
  }
  for (int i = 0; i < bins; ++i) {
    g.density.push_back(g.counts[i] / (double(g.gaps.size()) * w));
    g.surmise.push_back(wigner_unitary(0.5 * (g.edges[i] + g.edges[i + 1])));
  }
  return g;
}

// ---------------------------------------------------------------------------

struct Feature {
  char type;  // 'P' for a C(0,1) zero (pole of Delta4), 'Z' for a C(1,4m) zero
  double t;
};

struct InterleavingReport {
  std::vector<Feature> features;
  std::map<int, int> between_counts;  // #C(1,4m) zeros between successive C(0,1) zeros -> occurrences
  int longest_run = 0;
  std::vector<double> long_runs;      // start ordinates of runs of length >= 4
  double closest_pair = 1e300;        // min |t_P - t_Z|
};

inline InterleavingReport interleaving_report(const std::vector<ZeroRecord>& c01_zeros,
                                              const std::vector<ZeroRecord>& c14_zeros) {
  InterleavingReport r;
  for (const auto& z : c01_zeros) r.features.push_back({'P', z.t});
  for (const auto& z : c14_zeros) r.features.push_back({'Z', z.t});
  std::sort(r.features.begin(), r.features.end(), [](const Feature& a, const Feature& b) { return a.t < b.t; });
  int run = 0, between = -1;
  for (std::size_t i = 0; i < r.features.size(); ++i) {
    const auto& f = r.features[i];
    run = (i > 0 && r.features[i - 1].type == f.type) ? run + 1 : 1;
    r.longest_run = std::max(r.longest_run, run);
    if (run == 4) r.long_runs.push_back(r.features[i - 3].t);
    if (f.type == 'P') {
      if (between >= 0) ++r.between_counts[between];
      between = 0;
    } else if (between >= 0) {
      ++between;
    }
    if (i > 0 && r.features[i - 1].type != f.type)
      r.closest_pair = std::min(r.closest_pair, f.t - r.features[i - 1].t);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Interval census in the layout: t | zeta | L-4 | C(1,4) | sum of the three | C(1,8) | C(1,12).

struct CensusRow {
  std::string label;
  std::array<long, 6> n{};
  bool prediction = false;  // only the first four columns are meaningful
};

struct CensusInput {
  std::vector<ZeroRecord> zeta, lminus4, c14, c18, c112;
};

inline std::vector<CensusRow> census_table(const CensusInput& in, double t_max, double W = 10.0,
                                           double block = 100.0) {
  const auto cz = window_counts(in.zeta, t_max, W), cl = window_counts(in.lminus4, t_max, W),
             c4 = window_counts(in.c14, t_max, W), c8 = window_counts(in.c18, t_max, W),
             c12 = window_counts(in.c112, t_max, W);
  auto fmt = [](double x) {
    std::ostringstream o;
    o << static_cast<long>(std::llround(x));
    return o.str();
  };
  std::vector<CensusRow> rows;
  std::array<long, 6> total{};
  const int per_block = static_cast<int>(std::llround(block / W));
  for (std::size_t i = 0; i < cz.size(); ++i) {
    CensusRow r;
    r.label = fmt(i * W) + "-" + fmt((i + 1) * W);
    r.n = {cz[i], cl[i], c4[i], cz[i] + cl[i] + c4[i], c8[i], c12[i]};
    for (int k = 0; k < 6; ++k) total[k] += r.n[k];
    rows.push_back(r);
    const bool end_block = (i + 1) % per_block == 0 || i + 1 == cz.size();
    if (end_block) {
      const double t = (i + 1) * W;
      rows.push_back({"0-" + fmt(t), total, false});
      CensusRow p;
      p.label = "predicted";
      p.prediction = true;
      const long pz = std::lround(predicted_count(FamilyId::zeta(), t));
      const long pl = std::lround(predicted_count(FamilyId::lminus4(), t));
      const long pc = std::lround(predicted_count(FamilyId::c14m(1), t));
      p.n = {pz, pl, pc, pz + pl + pc, 0, 0};
      rows.push_back(p);
    }
  }
  return rows;
}

inline std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream o;
  o << "t,n_zeta,n_L-4,n_C(1,4),sum,n_C(1,8),n_C(1,12)\n";
  for (const auto& r : rows) {
    o << r.label;
    for (int k = 0; k < 6; ++k) {
      o << ',';
      if (!r.prediction || k < 4) o << r.n[k];
    }
    o << '\n';
  }
  return o.str();
}

// ---------------------------------------------------------------------------

inline std::string format_fixed(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

inline std::string zeros_csv(const std::vector<ZeroRecord>& zs) {
  std::ostringstream o;
  o << "family,t,bracket_lo,bracket_hi\n";
  for (const auto& z : zs)
    o << z.family.label() << ',' << format_fixed(z.t) << ',' << format_fixed(z.lo) << ',' << format_fixed(z.hi)
      << '\n';
  return o.str();
}

inline nlohmann::ordered_json zeros_json(const std::vector<ZeroRecord>& zs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& z : zs) {
    nlohmann::ordered_json j;
    j["family"] = z.family.label();
    j["t"] = z.t;
    j["bracket"] = {z.lo, z.hi};
    j["tol"] = z.tol;
    j["residual"] = z.residual;
    if (z.multiplicity_warning) j["multiplicity_warning"] = true;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace angsum::zeros
