// Run configuration: a flat key = value text format with a canonical
// serialization, plus the default output directory from the environment.
#pragma once

#include <angsum/latsum/types.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace angsum::io {

constexpr const char* kOutDirEnv = "ANGSUM_OUT_DIR";

inline std::string default_out_dir() {
  const char* e = std::getenv(kOutDirEnv);
  return (e && *e) ? e : ".";
}

struct RunConfig {
  int precision_digits = 16;  // <= 16 runs in double, above that in quad (34 digits)
  int truncation_P = 0;       // 0 = automatic
  int direct_radius = 200;
  int m = 1;
  double t_min = 0, t_max = 300;
  std::string region;  // "smin,smax,tmin,tmax" for contour panels; empty = figure default
  int ns = 0, nt = 0;  // contour resolution; 0 = figure default
  std::string out_dir = default_out_dir();
  std::string format = "csv";  // csv | json | svg
  int threads = 1;

  bool use_quad() const { return precision_digits > 16; }

  latsum::EvalConfig eval_config() const {
    latsum::EvalConfig c = use_quad() ? latsum::EvalConfig::native<quad>() : latsum::EvalConfig::native<double>();
    c.truncation_P = truncation_P;
    c.direct_radius = direct_radius;
    c.validate();
    return c;
  }

  void validate() const {
    auto bad = [](const std::string& msg) { throw Error(ErrorKind::invalid_argument, msg); };
    if (precision_digits < 4 || precision_digits > 34) bad("precision must be between 4 and 34 digits");
    if (truncation_P < 0) bad("P must be >= 0");
    if (direct_radius < 10) bad("direct radius must be >= 10");
    if (m < 0) bad("m must be >= 0");
    if (!(t_max > t_min) || t_min < 0) bad("need 0 <= tmin < tmax");
    if (!region.empty()) parse_region(region);
    if ((ns == 0) != (nt == 0) || (ns != 0 && (ns < 2 || nt < 2))) bad("resolution must be 0x0 or at least 2x2");
    if (format != "csv" && format != "json" && format != "svg") bad("format must be csv, json or svg");
    if (threads < 1) bad("threads must be >= 1");
  }

  bool operator==(const RunConfig&) const = default;

  // {smin, smax, tmin, tmax}
  static std::array<double, 4> parse_region(const std::string& text) {
    auto bad = [] {
      throw Error(ErrorKind::invalid_argument, "region must be smin,smax,tmin,tmax with smin < smax, tmin < tmax");
    };
    std::vector<double> v;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t pos = 0;
      try {
        v.push_back(std::stod(item, &pos));
      } catch (const std::exception&) {
        bad();
      }
      if (item.find_first_not_of(" \t", pos) != std::string::npos) bad();
    }
    if (v.size() != 4 || !(v[1] > v[0]) || !(v[3] > v[2])) bad();
    return {v[0], v[1], v[2], v[3]};
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::string real_text(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

// Keys in canonical order.
inline std::string serialize(const RunConfig& c) {
  std::ostringstream o;
  o << "precision = " << c.precision_digits << '\n'
    << "P = " << c.truncation_P << '\n'
    << "direct_radius = " << c.direct_radius << '\n'
    << "m = " << c.m << '\n'
    << "tmin = " << detail::real_text(c.t_min) << '\n'
    << "tmax = " << detail::real_text(c.t_max) << '\n'
    << "region = " << c.region << '\n'
    << "ns = " << c.ns << '\n'
    << "nt = " << c.nt << '\n'
    << "out = " << c.out_dir << '\n'
    << "format = " << c.format << '\n'
    << "threads = " << c.threads << '\n';
  return o.str();
}

// Applies `key = value` lines on top of `base`. Blank lines and lines
// starting with '#' are ignored; unknown keys are errors.
inline RunConfig parse_config(const std::string& text, RunConfig base = {}) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::invalid_argument, "config line " + std::to_string(lineno) + ": " + why);
  };
  auto to_int = [&](const std::string& v) {
    std::size_t pos = 0;
    int x = 0;
    try {
      x = std::stoi(v, &pos);
    } catch (const std::exception&) {
      fail("not an integer: " + v);
    }
    if (pos != v.size()) fail("not an integer: " + v);
    return x;
  };
  auto to_real = [&](const std::string& v) {
    std::size_t pos = 0;
    double x = 0;
    try {
      x = std::stod(v, &pos);
    } catch (const std::exception&) {
      fail("not a number: " + v);
    }
    if (pos != v.size()) fail("not a number: " + v);
    return x;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    const std::string k = detail::trim(t.substr(0, eq)), v = detail::trim(t.substr(eq + 1));
    if (k == "precision") base.precision_digits = to_int(v);
    else if (k == "P") base.truncation_P = to_int(v);
    else if (k == "direct_radius") base.direct_radius = to_int(v);
    else if (k == "m") base.m = to_int(v);
    else if (k == "tmin") base.t_min = to_real(v);
    else if (k == "tmax") base.t_max = to_real(v);
    else if (k == "region") base.region = v;
    else if (k == "ns") base.ns = to_int(v);
    else if (k == "nt") base.nt = to_int(v);
    else if (k == "out") base.out_dir = v;
    else if (k == "format") base.format = v;
    else if (k == "threads") base.threads = to_int(v);
    else fail("unknown key '" + k + "'");
  }
  base.validate();
  return base;
}

inline RunConfig load_config(const std::string& path, RunConfig base = {}) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::io_failure, "cannot read config " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

// Writes `content` to out_dir/name, creating the directory.
inline std::string write_output(const RunConfig& c, const std::string& name, const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(c.out_dir, ec);
  const fs::path p = fs::path(c.out_dir) / name;
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error(ErrorKind::io_failure, "cannot write " + p.string());
  f << content;
  if (!f) throw Error(ErrorKind::io_failure, "write failed for " + p.string());
  return p.string();
}

}  // namespace angsum::io
