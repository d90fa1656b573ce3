// Marching squares on a sampled field: null lines of Re or Im, and level
// lines of the argument with per-cell unwrapping.
#pragma once

#include <angsum/contour/field.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numbers>
#include <tuple>

namespace angsum::contour {

enum class ContourKind { RE_ZERO, IM_ZERO, PHASE_LEVEL };
enum class EndKind { closed, boundary, singularity, critical_line };

inline const char* to_string(ContourKind k) {
  switch (k) {
    case ContourKind::RE_ZERO: return "re-zero";
    case ContourKind::IM_ZERO: return "im-zero";
    case ContourKind::PHASE_LEVEL: return "phase";
  }
  return "?";
}

inline const char* to_string(EndKind k) {
  switch (k) {
    case EndKind::closed: return "closed";
    case EndKind::boundary: return "boundary";
    case EndKind::singularity: return "singularity";
    case EndKind::critical_line: return "critical-line";
  }
  return "?";
}

struct ContourPolyline {
  ContourKind kind = ContourKind::RE_ZERO;
  double level = 0;
  std::vector<Point> points;
  EndKind start = EndKind::boundary, end = EndKind::boundary;
};

struct MarchStats {
  long degenerate_cells = 0;  // all four corners at the level
  long torn_cells = 0;        // phase cells skipped for nonzero winding or invalid nodes
};

namespace detail {

// Edge identifier: (i, j, dir) with dir 0 = horizontal edge from (i,j) to (i+1,j),
// dir 1 = vertical edge from (i,j) to (i,j+1).
using EdgeKey = std::tuple<int, int, int>;

struct SegmentSoup {
  std::vector<std::pair<EdgeKey, EdgeKey>> segs;
  std::map<EdgeKey, Point> where;
};

inline std::vector<ContourPolyline> link(const SegmentSoup& soup, const ScalarField& F, ContourKind kind,
                                         double level) {
  std::map<EdgeKey, std::vector<std::size_t>> incident;
  for (std::size_t k = 0; k < soup.segs.size(); ++k) {
    incident[soup.segs[k].first].push_back(k);
    incident[soup.segs[k].second].push_back(k);
  }
  std::vector<bool> used(soup.segs.size(), false);
  auto classify = [&](const EdgeKey& e) {
    const auto [i, j, d] = e;
    const bool on_boundary = (d == 0 && (j == 0 || j == F.nt - 1)) || (d == 1 && (i == 0 || i == F.ns - 1));
    if (on_boundary) return EndKind::boundary;
    return EndKind::singularity;
  };
  auto walk = [&](std::size_t k0, EdgeKey from) {
    std::vector<EdgeKey> chain{from};
    std::size_t k = k0;
    EdgeKey cur = from;
    for (;;) {
      used[k] = true;
      const EdgeKey next = soup.segs[k].first == cur ? soup.segs[k].second : soup.segs[k].first;
      chain.push_back(next);
      cur = next;
      std::size_t nk = soup.segs.size();
      for (std::size_t c : incident.at(cur))
        if (!used[c]) {
          nk = c;
          break;
        }
      if (nk == soup.segs.size()) break;
      k = nk;
    }
    return chain;
  };

  std::vector<ContourPolyline> out;
  auto emit = [&](const std::vector<EdgeKey>& chain) {
    ContourPolyline pl;
    pl.kind = kind;
    pl.level = level;
    for (const auto& e : chain) pl.points.push_back(soup.where.at(e));
    if (chain.size() > 2 && chain.front() == chain.back()) {
      pl.start = pl.end = EndKind::closed;
    } else {
      pl.start = classify(chain.front());
      pl.end = classify(chain.back());
    }
    out.push_back(std::move(pl));
  };
  // open chains start at edges with a single incident segment
  for (const auto& [e, segs] : incident)
    if (segs.size() == 1 && !used[segs[0]]) emit(walk(segs[0], e));
  for (std::size_t k = 0; k < soup.segs.size(); ++k)
    if (!used[k]) emit(walk(k, soup.segs[k].first));
  return out;
}

// One marching-squares pass over real corner values g(i, j) at `level`.
// `usable(i, j)` vetoes cells; the asymptotic decider resolves saddles.
template <class G, class U>
SegmentSoup march(const ScalarField& F, G&& g, U&& usable, double level, MarchStats& stats) {
  SegmentSoup soup;
  auto crossing = [&](int i0, int j0, int i1, int j1, double a, double b) {
    const double w = (level - a) / (b - a);
    return Point{F.sigma(i0) + w * (F.sigma(i1) - F.sigma(i0)), F.t(j0) + w * (F.t(j1) - F.t(j0))};
  };
  for (int j = 0; j + 1 < F.nt; ++j)
    for (int i = 0; i + 1 < F.ns; ++i) {
      if (!usable(i, j)) continue;
      const double v[4] = {g(i, j, 0) - level, g(i, j, 1) - level, g(i, j, 2) - level, g(i, j, 3) - level};
      // corners: 0 (i,j), 1 (i+1,j), 2 (i+1,j+1), 3 (i,j+1)
      const double scale = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2]), std::abs(v[3])});
      if (scale == 0) {
        ++stats.degenerate_cells;
        continue;
      }
      int code = 0;
      for (int c = 0; c < 4; ++c)
        if (v[c] > 0) code |= 1 << c;
      if (code == 0 || code == 15) continue;
      const EdgeKey E[4] = {{i, j, 0}, {i + 1, j, 1}, {i, j + 1, 0}, {i, j, 1}};
      const int ci[4] = {i, i + 1, i + 1, i}, cj[4] = {j, j, j + 1, j + 1};
      auto point_on = [&](int e) {
        const int a = e, b = (e + 1) % 4;
        return crossing(ci[a], cj[a], ci[b], cj[b], v[a] + level, v[b] + level);
      };
      std::vector<int> edges;
      for (int e = 0; e < 4; ++e)
        if ((v[e] > 0) != (v[(e + 1) % 4] > 0)) edges.push_back(e);
      auto add = [&](int e0, int e1) {
        soup.where.emplace(E[e0], point_on(e0));
        soup.where.emplace(E[e1], point_on(e1));
        soup.segs.push_back({E[e0], E[e1]});
      };
      if (edges.size() == 2) {
        add(edges[0], edges[1]);
      } else if (edges.size() == 4) {
        const double centre = 0.25 * (v[0] + v[1] + v[2] + v[3]);
        // centre sign decides which corners connect
        if ((centre > 0) == (v[0] > 0)) {
          add(0, 1);
          add(2, 3);
        } else {
          add(3, 0);
          add(1, 2);
        }
      }
    }
  return soup;
}

}  // namespace detail

// Null lines of Re (RE_ZERO) or Im (IM_ZERO) of the field.
inline std::vector<ContourPolyline> null_contours(const ScalarField& F, ContourKind kind,
                                                  MarchStats* stats = nullptr) {
  if (kind == ContourKind::PHASE_LEVEL) throw Error(ErrorKind::invalid_argument, "use phase_contours");
  MarchStats st;
  const bool re = kind == ContourKind::RE_ZERO;
  const int di[4] = {0, 1, 1, 0}, dj[4] = {0, 0, 1, 1};
  auto g = [&](int i, int j, int c) {
    const auto& z = F.at(i + di[c], j + dj[c]);
    return re ? z.real() : z.imag();
  };
  auto usable = [&](int i, int j) {
    for (int c = 0; c < 4; ++c)
      if (!F.valid(i + di[c], j + dj[c])) return false;
    return true;
  };
  auto soup = detail::march(F, g, usable, 0.0, st);
  if (stats) *stats = st;
  return detail::link(soup, F, kind, 0.0);
}

// Lines arg f = level. Corner phases are unwrapped around each cell; cells
// with nonzero winding (a zero or pole inside) or invalid corners are skipped.
inline std::vector<ContourPolyline> phase_contours(const ScalarField& F, const std::vector<double>& levels,
                                                   MarchStats* stats = nullptr) {
  MarchStats st;
  const int di[4] = {0, 1, 1, 0}, dj[4] = {0, 0, 1, 1};
  const double P = std::numbers::pi;
  // unwrapped corner phases per cell, cached by cell
  std::vector<std::array<double, 4>> ph(std::size_t(F.ns) * F.nt);
  std::vector<bool> ok(ph.size(), false);
  for (int j = 0; j + 1 < F.nt; ++j)
    for (int i = 0; i + 1 < F.ns; ++i) {
      bool good = true;
      for (int c = 0; c < 4; ++c) good = good && F.valid(i + di[c], j + dj[c]);
      if (!good) {
        ++st.torn_cells;
        continue;
      }
      std::array<double, 4> a{};
      a[0] = std::arg(F.at(i, j));
      double wind = 0;
      for (int c = 1; c <= 4; ++c) {
        const double raw = std::arg(F.at(i + di[c % 4], j + dj[c % 4]));
        const double prev = a[c - 1];
        const double d = wrap_pi(raw - prev);
        if (c < 4) a[c] = prev + d;
        else wind = (prev + d) - a[0];
      }
      if (std::abs(wind) > P) {
        ++st.torn_cells;
        continue;
      }
      ph[std::size_t(j) * F.ns + i] = a;
      ok[std::size_t(j) * F.ns + i] = true;
    }
  std::vector<ContourPolyline> out;
  for (double level : levels) {
    // Choose, per cell, the 2 pi shift placing the level nearest the cell's phases.
    auto g = [&](int i, int j, int c) {
      const auto& a = ph[std::size_t(j) * F.ns + i];
      const double shift = 2 * P * std::round((a[0] - level) / (2 * P));
      return a[c] - shift;
    };
    auto usable = [&](int i, int j) { return bool(ok[std::size_t(j) * F.ns + i]); };
    auto soup = detail::march(F, g, usable, level, st);
    for (auto& pl : detail::link(soup, F, ContourKind::PHASE_LEVEL, level)) out.push_back(std::move(pl));
  }
  if (stats) *stats = st;
  return out;
}

// Number of crossings of a polyline set with the vertical line sigma = x.
inline std::vector<double> crossings_at_sigma(const std::vector<ContourPolyline>& lines, double x) {
  std::vector<double> ts;
  for (const auto& pl : lines)
    for (std::size_t k = 0; k + 1 < pl.points.size(); ++k) {
      const auto& a = pl.points[k];
      const auto& b = pl.points[k + 1];
      if ((a.sigma - x) * (b.sigma - x) < 0 || (a.sigma == x && b.sigma != x)) {
        const double w = (x - a.sigma) / (b.sigma - a.sigma);
        ts.push_back(a.t + w * (b.t - a.t));
      }
    }
  std::sort(ts.begin(), ts.end());
  return ts;
}

}  // namespace angsum::contour
