// Figure panels: fixed windows per figure number, contour extraction on the
// window and export as CSV polylines or a standalone SVG with axis ticks.
#pragma once

#include <angsum/contour/marching.hpp>

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

namespace angsum::contour {

// ---------------------------------------------------------------------------
// Export

inline std::string polylines_csv(const std::vector<ContourPolyline>& lines) {
  std::ostringstream o;
  o << "line,kind,level,start,end,sigma,t\n";
  char buf[160];
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& pl = lines[k];
    for (const auto& p : pl.points) {
      std::snprintf(buf, sizeof buf, "%zu,%s,%.10g,%s,%s,%.10f,%.10f\n", k, to_string(pl.kind), pl.level,
                    to_string(pl.start), to_string(pl.end), p.sigma, p.t);
      o << buf;
    }
  }
  return o.str();
}

struct Layer {
  std::vector<ContourPolyline> lines;
  std::string color = "black";
  double width = 1.0;
  bool dashed = false;
};

namespace detail {

inline double nice_step(double range) {
  const double raw = range / 5, p = std::pow(10.0, std::floor(std::log10(raw)));
  for (double f : {1.0, 2.0, 5.0})
    if (f * p >= raw) return f * p;
  return 10 * p;
}

inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", std::abs(x) < 1e-12 ? 0.0 : x);
  return buf;
}

}  // namespace detail

// Plot area of at most `size` pixels on its longer side; with `equal_aspect`
// one unit of sigma and t have the same length.
inline std::string render_svg(const Region& R, const std::vector<Layer>& layers, const std::string& title,
                              bool equal_aspect = false, int size = 600) {
  const double ws = R.s1 - R.s0, wt = R.t1 - R.t0;
  double pw = size, ph = size;
  if (equal_aspect) (ws > wt ? ph : pw) = size * std::min(ws, wt) / std::max(ws, wt);
  const double ml = 70, mr = 20, mt = 40, mb = 50;
  const double W = ml + pw + mr, H = mt + ph + mb;
  auto X = [&](double s) { return ml + (s - R.s0) / ws * pw; };
  auto Y = [&](double t) { return mt + (R.t1 - t) / wt * ph; };
  char buf[256];
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n", W,
                H, W, H);
  o << buf;
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf, "<defs><clipPath id=\"plot\"><rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\"/></clipPath></defs>\n",
                ml, mt, pw, ph);
  o << buf;
  o << "<text x=\"" << detail::num(ml + pw / 2) << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\" "
    << "text-anchor=\"middle\">" << title << "</text>\n";

  o << "<g clip-path=\"url(#plot)\" fill=\"none\" stroke-linejoin=\"round\">\n";
  for (const auto& L : layers)
    for (const auto& pl : L.lines) {
      if (pl.points.size() < 2) continue;
      o << "<path stroke=\"" << L.color << "\" stroke-width=\"" << detail::num(L.width) << "\"";
      if (L.dashed) o << " stroke-dasharray=\"6 4\"";
      o << " d=\"";
      for (std::size_t k = 0; k < pl.points.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%c%.2f %.2f", k ? 'L' : 'M', X(pl.points[k].sigma), Y(pl.points[k].t));
        o << buf;
      }
      o << "\"/>\n";
    }
  o << "</g>\n";

  // frame, ticks and labels
  std::snprintf(buf, sizeof buf, "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"none\" stroke=\"black\"/>\n",
                ml, mt, pw, ph);
  o << buf;
  const double ss = detail::nice_step(ws), ts = detail::nice_step(wt);
  for (double s = std::ceil(R.s0 / ss - 1e-9) * ss; s <= R.s1 + 1e-9 * ws; s += ss) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>"
                  "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">%s</text>\n",
                  X(s), mt + ph, X(s), mt + ph + 5, X(s), mt + ph + 18, detail::num(s).c_str());
    o << buf;
  }
  for (double t = std::ceil(R.t0 / ts - 1e-9) * ts; t <= R.t1 + 1e-9 * wt; t += ts) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>"
                  "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">%s</text>\n",
                  ml - 5, Y(t), ml, Y(t), ml - 8, Y(t) + 4, detail::num(t).c_str());
    o << buf;
  }
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.2f\" y=\"%.2f\" font-family=\"serif\" font-size=\"15\" font-style=\"italic\" text-anchor=\"middle\">&#963;</text>\n"
                "<text x=\"%.2f\" y=\"%.2f\" font-family=\"serif\" font-size=\"15\" font-style=\"italic\" text-anchor=\"middle\">t</text>\n",
                ml + pw / 2, H - 12, 18.0, mt + ph / 2);
  o << buf;
  o << "</svg>\n";
  return o.str();
}

// ---------------------------------------------------------------------------
// Figure windows

// One panel of a figure reproduction.
struct FigurePanel {
  std::string name;  // file stem, e.g. "fig2a"
  std::string title;
  FieldSpec field;
  Region region;
  Resolution res{400, 400};
  bool nulls = false;               // Re (red) and Im (blue) null lines
  std::vector<double> levels{};     // constant-phase lines
  bool derivative_lines = false;    // d/dt arg = 0 (thick) and d/dt log|.| = 0 (thick dashed)
  bool f_negative_locus = false;    // where F_{2m} is real and negative (green)
  bool equal_aspect = false;
};

inline std::vector<int> known_figures() { return {2, 3, 4, 5, 6, 10, 11, 13, 14, 17}; }

inline std::vector<FigurePanel> figure_panels(int fig) {
  const FieldSpec d3{FieldFunc::DELTA3, 1};
  const std::vector<double> fig11a = {3.04,   3.04076, 3.0410, 3.0412, 3.0414, 3.0416, 3.0418, 3.0419, 3.04198,
                                      3.042,  3.0425,  3.043,  3.044,  3.045,  3.046,  3.047,  3.048};
  const std::vector<double> fig11b = {-0.1090, -0.1080, -0.1072, -0.1068, -0.1064, -0.1060, -0.1056, -0.1055, -0.1054,
                                      -0.1053, -0.1052, -0.1048, -0.104,  -0.103,  -0.102,  -0.1015, -0.10};
  std::vector<double> delta4_levels = {0.0, std::numbers::pi};
  std::vector<FigurePanel> P;
  switch (fig) {
    case 2:
      P.push_back({"fig2a", "Null lines of Delta3, m = 1", d3, {-0.5, 1.5, 0, 10}, {200, 1000}, true, {}, false, true});
      P.push_back({"fig2b", "Null lines of Delta3, m = 1 (detail)", d3, {-0.5, 1.5, 0, 2}, {400, 400}, true, {}, false, true,
                   true});
      break;
    case 3:
      P.push_back({"fig3", "Null lines of Delta3, m = 1", d3, {-4.5, 11.5, 0.1, 20}, {400, 400}, true});
      break;
    case 4:
      P.push_back({"fig4a", "Null lines of Delta3 near t = 10", d3, {0.0, 1.0, 9.5, 10.5}, {400, 400}, true});
      P.push_back({"fig4b", "Null lines of Delta3 near t = 18.5", d3, {0.0, 1.0, 18.0, 19.0}, {400, 400}, true});
      break;
    case 5:
      P.push_back({"fig5", "Null lines of the large-sigma form of Delta3", {FieldFunc::DELTA3_TRUNCATED, 1},
                   {3.5, 7.5, 0.1, 10}, {400, 400}, true});
      break;
    case 6:
      P.push_back({"fig6", "Null lines of the Gamma prefactor", {FieldFunc::PREFACTOR, 1}, {3.5, 7.5, 0.1, 10},
                   {400, 400}, true});
      break;
    case 10:
      P.push_back({"fig10a", "Constant phase of Delta3 between 19.80599 and 21.02204", d3, {0.3, 0.7, 19.6, 21.2},
                   {400, 400}, false, fig11a, true});
      P.push_back({"fig10b", "Detail near the hyperbolic centre", d3, {0.4990, 0.5005, 19.95, 20.15}, {400, 400}, false,
                   fig11a, true});
      break;
    case 11:
      P.push_back({"fig11a", "Constant phase of Delta3 above 19.80599", d3, {0.4994, 0.5004, 19.78, 20.10}, {400, 400},
                   false, fig11a, true});
      P.push_back({"fig11b", "Constant phase of Delta3 below 19.80599", d3, {0.4990, 0.5005, 18.53, 19.83}, {400, 400},
                   false, fig11b, true});
      break;
    case 13:
      P.push_back({"fig13", "Phase 0 and pi lines of Delta4, m = 1", {FieldFunc::DELTA4, 1}, {-1, 4, 40, 52}, {400, 400},
                   false, delta4_levels});
      break;
    case 14:
      P.push_back({"fig14a", "Constant phase of Delta4 near a hyperbolic point, m = 1", {FieldFunc::DELTA4, 1},
                   {0.2, 0.8, 45.4, 46.2}, {400, 400}, false, {-0.4, -0.3, -0.2, -0.1, 0.0, 0.1, 0.2, 0.3, 0.4}});
      P.push_back({"fig14b", "Phase 0 and pi lines of Delta4, m = 2", {FieldFunc::DELTA4, 2}, {-1, 4, 40, 52}, {400, 400},
                   false, delta4_levels});
      break;
    case 17:
      P.push_back({"fig17", "Null lines of Delta3, m = 2", {FieldFunc::DELTA3, 2}, {-4.5, 11.5, 0.1, 20}, {400, 400}, true});
      break;
    default:
      throw Error(ErrorKind::invalid_argument, "no contour reproduction for figure " + std::to_string(fig));
  }
  return P;
}

// Field of d/dt log f = (d/dt log|f|) + i (d/dt arg f) by central differences
// of log ratios along t, one-sided at the edges.
inline ScalarField t_log_derivative(const ScalarField& F) {
  ScalarField D = F;
  for (int j = 0; j < F.nt; ++j)
    for (int i = 0; i < F.ns; ++i) {
      const int a = std::max(0, j - 1), b = std::min(F.nt - 1, j + 1);
      const std::size_t k = std::size_t(j) * F.ns + i;
      const bool ok = F.valid(i, a) && F.valid(i, b) && F.at(i, a) != cplx<double>(0);
      D.state[k] = ok ? NodeState::ok : NodeState::invalid;
      D.values[k] = ok ? std::log(F.at(i, b) / F.at(i, a)) / ((b - a) * F.dt()) : cplx<double>(0);
    }
  return D;
}

// Pieces of the Im F = 0 lines along which Re F < 0.
inline std::vector<ContourPolyline> f_negative_locus(int m, const Region& R, const Resolution& res) {
  const EvalConfig cfg = EvalConfig::native<double>();
  const auto F = sample_field({FieldFunc::F, m}, R, res, cfg);
  std::vector<ContourPolyline> out;
  for (const auto& pl : null_contours(F, ContourKind::IM_ZERO)) {
    ContourPolyline cur;
    cur.kind = pl.kind;
    for (const auto& p : pl.points) {
      bool neg = false;
      try {
        neg = structure::f2m(m, cplx<double>(p.sigma, p.t)).real() < 0;
      } catch (const Error&) {
      }
      if (neg) {
        cur.points.push_back(p);
      } else if (!cur.points.empty()) {
        out.push_back(cur);
        cur.points.clear();
      }
    }
    if (!cur.points.empty()) out.push_back(cur);
  }
  return out;
}

struct RenderedPanel {
  std::string name;
  std::string svg, csv;
  std::vector<ContourPolyline> lines;
  MarchStats stats;
};

inline RenderedPanel render_panel(const FigurePanel& P, const EvalConfig& cfg, std::optional<Resolution> res = {}) {
  const Resolution r = res.value_or(P.res);
  const auto F = sample_field(P.field, P.region, r, cfg);
  RenderedPanel out;
  out.name = P.name;
  std::vector<Layer> layers;
  MarchStats st;
  if (P.nulls) {
    layers.push_back({null_contours(F, ContourKind::RE_ZERO, &st), "red", 1.2});
    out.stats.degenerate_cells += st.degenerate_cells;
    layers.push_back({null_contours(F, ContourKind::IM_ZERO, &st), "blue", 1.2});
    out.stats.degenerate_cells += st.degenerate_cells;
  }
  if (!P.levels.empty()) {
    if (P.field.func == FieldFunc::DELTA4) {
      // phase zero in blue, phase pi in green, any other level in black
      std::vector<double> zero, pi, other;
      for (double l : P.levels) (l == 0 ? zero : std::abs(l) == std::numbers::pi ? pi : other).push_back(l);
      if (!zero.empty()) layers.push_back({phase_contours(F, zero, &st), "blue", 1.2});
      if (!pi.empty()) layers.push_back({phase_contours(F, pi, &st), "green", 1.2});
      if (!other.empty()) layers.push_back({phase_contours(F, other, &st), "black", 0.8});
    } else {
      layers.push_back({phase_contours(F, P.levels, &st), "black", 0.8});
    }
    out.stats.torn_cells += st.torn_cells;
    out.stats.degenerate_cells += st.degenerate_cells;
  }
  if (P.derivative_lines) {
    const auto D = t_log_derivative(F);
    layers.push_back({null_contours(D, ContourKind::IM_ZERO), "black", 2.5});
    layers.push_back({null_contours(D, ContourKind::RE_ZERO), "black", 2.5, true});
  }
  if (P.f_negative_locus) layers.push_back({f_negative_locus(P.field.m, P.region, r), "green", 1.5});
  for (const auto& L : layers) out.lines.insert(out.lines.end(), L.lines.begin(), L.lines.end());
  out.svg = render_svg(P.region, layers, P.title, P.equal_aspect);
  out.csv = polylines_csv(out.lines);
  return out;
}

}  // namespace angsum::contour
