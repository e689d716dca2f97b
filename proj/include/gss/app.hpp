#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curves.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "grid.hpp"
#include "io.hpp"
#include "mesh.hpp"
#include "verify.hpp"

namespace gss::app {

enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_config_error = 2 };

struct RunConfig {
  std::string family = "case1";  // plane, case1, case2, case3, otsuki-a, otsuki-b, example1..3
  double lambda = 1.0;
  double c = 2.0;
  std::string alpha = "u";         // u | const:a | poly:a0,a1,...
  std::string rho = "example11";   // example11 | great-circle | small-circle:theta
  std::size_t nu = 41, nv = 41;
  std::size_t samples = 200;       // curve samples
  std::optional<std::string> domain;  // "u0:u1,v0:v1" (surfaces) or "u0:u1" (curves)
  std::string jet = "analytic";    // analytic | forward | fd
  double h = 1e-4;
  double tol = 1e-10;              // quadrature absolute tolerance
  std::string frame = "gs";        // gs | paper
  std::string out = "-";
  std::optional<std::string> format;
  std::optional<std::string> project;  // drop1..drop4 | plane:a;b;c
  std::optional<std::string> sidecar;
  bool timing = false;
  unsigned threads = 1;

  void validate() const {
    if (nu < 2 || nv < 2) throw SpecError("invalid config: grid needs nu, nv >= 2");
    if (samples < 2) throw SpecError("invalid config: samples must be >= 2");
    if (!(h > 0.0)) throw SpecError("invalid config: h must be > 0");
    if (!(tol > 0.0)) throw SpecError("invalid config: tol must be > 0");
    if (threads < 1) throw SpecError("invalid config: threads must be >= 1");
    if (frame != "gs" && frame != "paper") throw SpecError("invalid config: frame must be gs or paper");
  }
};

// ---- parsing ----

// A number, optionally followed by "pi"; "pi" alone is allowed.
inline double parse_number(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  double scale = 1.0;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    scale = std::numbers::pi;
    s.erase(s.size() - 2);
    if (s.empty() || s == "+") return scale;
    if (s == "-") return -scale;
    if (s.back() == '*') s.pop_back();
  }
  double x = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, x);
  if (s.empty() || ec != std::errc() || ptr != end) throw SpecError("invalid number: '" + s + "'");
  return x * scale;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::pair<std::size_t, std::size_t> parse_grid(const std::string& s) {
  const auto parts = split(s, 'x');
  if (parts.size() != 2) throw SpecError("invalid grid '" + s + "' (expected NUxNV)");
  auto count = [&](const std::string& p) {
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), n);
    if (p.empty() || ec != std::errc() || ptr != p.data() + p.size()) throw SpecError("invalid grid '" + s + "'");
    return n;
  };
  return {count(parts[0]), count(parts[1])};
}

inline Interval parse_interval(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw SpecError("invalid interval '" + s + "' (expected lo:hi)");
  return {parse_number(parts[0]), parse_number(parts[1])};
}

inline Rect parse_rect(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw SpecError("invalid domain '" + s + "' (expected u0:u1,v0:v1)");
  return {parse_interval(parts[0]), parse_interval(parts[1])};
}

inline AngleFunction parse_alpha(const std::string& s) {
  if (s == "u") return AngleFunction::identity();
  if (s.rfind("const:", 0) == 0) return AngleFunction::constant(parse_number(s.substr(6)));
  if (s.rfind("poly:", 0) == 0) {
    std::vector<double> coeffs;
    for (const auto& p : split(s.substr(5), ',')) coeffs.push_back(parse_number(p));
    if (coeffs.empty()) throw SpecError("invalid alpha: empty polynomial");
    return AngleFunction::polynomial(coeffs);
  }
  throw SpecError("invalid alpha '" + s + "' (expected u, const:A or poly:A0,A1,...)");
}

inline VectorFn parse_rho(const std::string& s) {
  if (s == "example11") return rho_example11();
  if (s == "great-circle") return rho_great_circle();
  if (s.rfind("small-circle:", 0) == 0) return rho_small_circle(parse_number(s.substr(13)));
  throw SpecError("invalid rho '" + s + "' (expected example11, great-circle or small-circle:THETA)");
}

inline JetSource parse_jet(const std::string& s, double h) {
  if (s == "analytic") return JetSource::analytic();
  if (s == "forward") return JetSource::forward();
  if (s == "fd") return JetSource::finite_difference(h);
  throw SpecError("invalid jet source '" + s + "' (expected analytic, forward or fd)");
}

inline Projection parse_projection(const std::optional<std::string>& s, std::size_t dim) {
  if (!s) {
    if (dim == 3) return Projection::identity3();
    return Projection::drop(dim, 0);
  }
  if (s->rfind("drop", 0) == 0 && s->size() == 5 && (*s)[4] >= '1' && (*s)[4] <= '9') {
    if (dim == 3) throw SpecError("projection: surface already lives in E^3");
    return Projection::drop(dim, static_cast<std::size_t>((*s)[4] - '1'));
  }
  if (s->rfind("plane:", 0) == 0) {
    std::vector<VecN> span;
    for (const auto& vec : split(s->substr(6), ';')) {
      std::vector<double> xs;
      for (const auto& p : split(vec, ',')) xs.push_back(parse_number(p));
      if (xs.size() != dim) throw DimensionError(xs.size(), dim);
      span.emplace_back(xs);
    }
    return Projection::onto_plane(span);
  }
  throw SpecError("invalid projection '" + *s + "' (expected dropK or plane:a1,..;b1,..;c1,..)");
}

// Keys mirror the RunConfig field names; "grid" may be "NUxNV" or [nu, nv].
inline void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError("invalid config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw SpecError("invalid config file: top level must be an object");
  try {
    for (const auto& [key, val] : j.items()) {
      if (key == "family") cfg.family = val.get<std::string>();
      else if (key == "lambda") cfg.lambda = val.get<double>();
      else if (key == "c") cfg.c = val.get<double>();
      else if (key == "alpha") cfg.alpha = val.get<std::string>();
      else if (key == "rho") cfg.rho = val.get<std::string>();
      else if (key == "grid") {
        if (val.is_string()) std::tie(cfg.nu, cfg.nv) = parse_grid(val.get<std::string>());
        else if (val.is_array() && val.size() == 2) cfg.nu = val[0].get<std::size_t>(), cfg.nv = val[1].get<std::size_t>();
        else throw SpecError("invalid config: grid must be \"NUxNV\" or [nu, nv]");
      } else if (key == "samples") cfg.samples = val.get<std::size_t>();
      else if (key == "domain") cfg.domain = val.get<std::string>();
      else if (key == "jet") cfg.jet = val.get<std::string>();
      else if (key == "h") cfg.h = val.get<double>();
      else if (key == "tol") cfg.tol = val.get<double>();
      else if (key == "frame") cfg.frame = val.get<std::string>();
      else if (key == "out") cfg.out = val.get<std::string>();
      else if (key == "format") cfg.format = val.get<std::string>();
      else if (key == "project") cfg.project = val.get<std::string>();
      else if (key == "sidecar") cfg.sidecar = val.get<std::string>();
      else if (key == "timing") cfg.timing = val.get<bool>();
      else if (key == "threads") cfg.threads = val.get<unsigned>();
      else throw SpecError("invalid config: unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("invalid config value: ") + e.what());
  }
}

inline bool is_curve_family(const std::string& f) { return f == "example1" || f == "example2" || f == "example3"; }

inline FamilySpec make_family(const RunConfig& cfg) {
  std::optional<Rect> dom;
  if (cfg.domain) dom = parse_rect(*cfg.domain);
  const std::string& f = cfg.family;
  if (f == "plane") return PlaneSpec{dom.value_or(Rect{{0.0, 1.0}, {0.0, 1.0}})};
  if (f == "case1") return CaseISpec{cfg.lambda, cfg.c, dom};
  if (f == "case2") return CaseIISpec{cfg.lambda, cfg.c, parse_alpha(cfg.alpha), dom};
  if (f == "case3") return CaseIIISpec{cfg.lambda, cfg.c, parse_rho(cfg.rho), cfg.rho, dom};
  if (f == "otsuki-a") return OtsukiSpec{OtsukiVariant::a, dom};
  if (f == "otsuki-b") return OtsukiSpec{OtsukiVariant::b, dom};
  throw SpecError("unknown surface family '" + f + "'");
}

inline SphericalCurveSpec make_curve(const RunConfig& cfg) {
  std::optional<Interval> dom;
  if (cfg.domain) dom = parse_interval(*cfg.domain);
  const int which = cfg.family.back() - '0';
  switch (which) {
    case 1: return SphericalCurveSpec(DirectionFunction::circle(), cfg.lambda, cfg.c, dom, 0.0, cfg.tol);
    case 2: return SphericalCurveSpec(DirectionFunction::planar(parse_alpha(cfg.alpha)), cfg.lambda, cfg.c, dom, 0.0, cfg.tol);
    case 3:
      return SphericalCurveSpec(DirectionFunction::spherical3(parse_alpha(cfg.alpha)), cfg.lambda, cfg.c, dom, 0.0, cfg.tol);
  }
  throw SpecError("unknown curve family '" + cfg.family + "'");
}

// ---- output ----

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Error("cannot write output path '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw Error("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

inline void check_format(const RunConfig& cfg, const std::string& expected) {
  if (cfg.format && *cfg.format != expected)
    throw SpecError("invalid config: format '" + *cfg.format + "' not supported here (expected " + expected + ")");
}

inline std::string describe(const Rect& r) {
  return "u in [" + io::fmt(r.u.lo) + ", " + io::fmt(r.u.hi) + "], v in [" + io::fmt(r.v.lo) + ", " + io::fmt(r.v.hi) + "]";
}

inline void note_clipping(const Surface& s, std::ostream& csv) {
  if (!s.clipped()) return;
  const std::string msg = "domain clipped to the regular radicand interval: " + describe(s.domain());
  io::csv_comment(csv, msg);
  std::cerr << "note: " << msg << '\n';
}

inline std::vector<GridPoint> grid_for(const Surface& s, const RunConfig& cfg) {
  GridOptions go;
  go.nu = cfg.nu;
  go.nv = cfg.nv;
  go.source = parse_jet(cfg.jet, cfg.h);
  go.frame = cfg.frame == "paper" ? FrameChoice::paper : FrameChoice::gram_schmidt;
  go.threads = cfg.threads;
  if (go.frame == FrameChoice::paper && !s.has_paper_frame())
    throw SpecError("family " + s.name() + " has no closed-form normal frame; use --frame gs");
  return evaluate_grid(s, go);
}

// ---- commands ----

inline int run_eval(const RunConfig& cfg) {
  cfg.validate();
  check_format(cfg, "csv");
  if (is_curve_family(cfg.family)) throw SpecError("eval needs a surface family; use the curve command");
  const Surface s(make_family(cfg));
  const auto grid = grid_for(s, cfg);
  Output out(cfg.out);
  std::ostream& os = out.stream();
  note_clipping(s, os);
  const std::size_t n = s.dim();
  std::vector<std::string> header{"u", "v"};
  for (std::size_t i = 1; i <= n; ++i) header.push_back("x" + std::to_string(i));
  header.insert(header.end(), {"K", "H_norm"});
  for (std::size_t k = 1; k + 2 <= n; ++k) header.push_back("H_" + std::to_string(k));
  header.insert(header.end(), {"K_N", "Wsq", "singular"});
  io::csv_row(os, header);
  std::size_t singular = 0;
  for (const GridPoint& p : grid) {
    std::vector<std::string> row{io::fmt(p.u), io::fmt(p.v)};
    for (std::size_t i = 0; i < n; ++i) row.push_back(p.X ? io::fmt((*p.X)[i]) : "");
    if (p.report) {
      const CurvatureReport& r = *p.report;
      row.push_back(io::fmt(r.K));
      row.push_back(io::fmt(r.Hnorm));
      for (double hk : r.Hk) row.push_back(io::fmt(hk));
      row.push_back(io::fmt(r.KN));
    } else {
      row.insert(row.end(), n + 1, "");  // K, H_norm, H_1..H_{n-2}, K_N
      ++singular;
    }
    row.push_back(io::fmt(p.Wsq));
    row.push_back(p.singular ? "1" : "0");
    io::csv_row(os, row);
  }
  out.finish();
  if (singular) std::cerr << "note: " << singular << " singular grid point(s) flagged\n";
  return exit_ok;
}

inline std::vector<std::pair<std::string, std::string>> parameters_of(const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> p;
  const bool otsuki = cfg.family.rfind("otsuki", 0) == 0;
  if (cfg.family != "plane" && !otsuki) {
    p.emplace_back("lambda", io::fmt(cfg.lambda));
    p.emplace_back("c", io::fmt(cfg.c));
  }
  if (cfg.family == "case2" || cfg.family == "example2" || cfg.family == "example3") p.emplace_back("alpha", cfg.alpha);
  if (cfg.family == "case3") p.emplace_back("rho", cfg.rho);
  if (cfg.domain) p.emplace_back("domain", *cfg.domain);
  return p;
}

inline int run_verify(const RunConfig& cfg) {
  check_format(cfg, "json");
  VerificationReport report;
  VerifyOptions vo;
  vo.nu = cfg.nu;
  vo.nv = cfg.nv;
  vo.curve_samples = cfg.samples;
  vo.timing = cfg.timing;
  int code = exit_ok;
  try {
    cfg.validate();
    if (is_curve_family(cfg.family)) {
      report = verify_curve_report(make_curve(cfg), cfg.family, vo);
    } else {
      const Surface s(make_family(cfg));
      report = verify_surface(s, vo);
      if (s.clipped()) std::cerr << "note: domain clipped to " << describe(s.domain()) << '\n';
    }
    if (!report.overall_pass()) code = exit_verification_failed;
  } catch (const SpecError& e) {
    report = VerificationReport{};
    report.family = cfg.family;
    report.grid = is_curve_family(cfg.family) ? std::to_string(cfg.samples)
                                              : std::to_string(cfg.nu) + "x" + std::to_string(cfg.nv);
    report.checks.push_back({"precondition", "family parameters satisfy their invariants", NAN, 0.0,
                             CheckStatus::fail, report.grid, std::nullopt, e.what()});
    std::cerr << "error: " << e.what() << '\n';
    code = exit_config_error;
  }
  auto prior = report.parameters;
  report.parameters = parameters_of(cfg);
  report.parameters.insert(report.parameters.end(), prior.begin(), prior.end());
  Output out(cfg.out);
  write_json(out.stream(), report);
  out.finish();
  return code;
}

inline std::string default_sidecar(const std::string& out) {
  if (out == "-") return "";
  const std::string ext = ".obj";
  if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0)
    return out.substr(0, out.size() - ext.size()) + ".curvature.csv";
  return out + ".curvature.csv";
}

inline int run_mesh(const RunConfig& cfg) {
  cfg.validate();
  check_format(cfg, "obj");
  if (is_curve_family(cfg.family)) throw SpecError("mesh needs a surface family");
  const Surface s(make_family(cfg));
  const Projection proj = parse_projection(cfg.project, s.dim());
  const auto grid = grid_for(s, cfg);
  const TriangleMesh mesh = build_mesh(grid, cfg.nu, cfg.nv, proj);
  Output out(cfg.out);
  write_obj(out.stream(), mesh);
  out.finish();
  const std::string side = cfg.sidecar.value_or(default_sidecar(cfg.out));
  if (!side.empty()) {
    Output sc(side);
    std::ostream& os = sc.stream();
    note_clipping(s, os);
    io::csv_row(os, {"vertex", "u", "v", "K", "H_norm", "K_N", "singular"});
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const GridPoint& p = grid[k];
      const bool ok = p.report.has_value();
      io::csv_row(os, {std::to_string(k + 1), io::fmt(p.u), io::fmt(p.v), ok ? io::fmt(p.report->K) : "",
                       ok ? io::fmt(p.report->Hnorm) : "", ok ? io::fmt(p.report->KN) : "", p.singular ? "1" : "0"});
    }
    sc.finish();
  } else if (s.clipped()) {
    std::cerr << "note: domain clipped to " << describe(s.domain()) << '\n';
  }
  if (mesh.skipped_triangles)
    std::cerr << "warning: " << mesh.skipped_triangles << " degenerate triangle(s) skipped\n";
  return exit_ok;
}

inline int run_curve(const RunConfig& cfg) {
  cfg.validate();
  check_format(cfg, "csv");
  if (!is_curve_family(cfg.family)) throw SpecError("curve needs example1, example2 or example3");
  const SphericalCurveSpec spec = make_curve(cfg);
  const auto samples = sample_curve(spec, cfg.samples);
  Output out(cfg.out);
  std::ostream& os = out.stream();
  if (spec.clipped()) {
    const std::string msg = "domain clipped from [" + io::fmt(spec.requested_domain().lo) + ", " +
                            io::fmt(spec.requested_domain().hi) + "] to [" + io::fmt(spec.domain().lo) + ", " +
                            io::fmt(spec.domain().hi) + "]";
    io::csv_comment(os, msg);
    std::cerr << "note: " << msg << '\n';
  }
  const std::size_t n = spec.dim();
  std::vector<std::string> header{"u"};
  for (std::size_t i = 1; i <= n; ++i) header.push_back("gamma_" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) header.push_back("beta_" + std::to_string(i));
  header.push_back("speed");
  io::csv_row(os, header);
  for (const CurveSample& cs : samples) {
    std::vector<std::string> row{io::fmt(cs.u)};
    for (std::size_t i = 0; i < n; ++i) row.push_back(io::fmt(cs.gamma[i]));
    for (std::size_t i = 0; i < n; ++i) row.push_back(io::fmt(cs.beta[i]));
    row.push_back(io::fmt(cs.speed));
    io::csv_row(os, row);
  }
  out.finish();
  return exit_ok;
}

// Runs a command, mapping library errors to the exit-code contract.
template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return exit_config_error;
}

}  // namespace gss::app
