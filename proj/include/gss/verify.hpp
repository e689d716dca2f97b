#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "curvature.hpp"
#include "curves.hpp"
#include "family.hpp"
#include "frame.hpp"
#include "grid.hpp"
#include "io.hpp"

namespace gss {

// Acceptance thresholds used by the verifier.
namespace tol {
inline constexpr double gauss_constant = 1e-8;
inline constexpr double normal_flat = 1e-8;
inline constexpr double normal_routes = 1e-9;
inline constexpr double mean_formula = 1e-8;
inline constexpr double second_form = 1e-8;
inline constexpr double closed_form_K = 1e-9;
inline constexpr double profile_curvature = 1e-9;
inline constexpr double gauge = 1e-9;
inline constexpr double frame = 1e-10;
inline constexpr double forward_jet = 1e-12;
inline constexpr double fd_jet = 1e-6;
inline constexpr double fd_curvature = 1e-5;
inline constexpr double arclength = 1e-10;
inline constexpr double self_adjoint = 1e-10;
inline constexpr double unit_speed = 1e-8;
inline constexpr double trace_planar = 1e-10;
inline constexpr double trace_consistency = 1e-8;
inline constexpr double direction_unit = 1e-10;
inline constexpr double constancy_rel = 1e-8;
inline constexpr double sphere_radius = 1e-6;
inline constexpr double rho_speed = 1e-8;
}  // namespace tol

enum class CheckStatus { pass, fail, not_applicable };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

struct CheckRecord {
  std::string name;
  std::string claim;
  double max_abs_deviation = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::fail;
  std::string grid;
  std::optional<double> wall_time_ms;
  std::string reason;
};

struct VerificationReport {
  std::string family;
  std::vector<std::pair<std::string, std::string>> parameters;  // free-form, emitted as strings
  std::string grid;
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, double>> recorded;  // measured values reported, not asserted

  // Records marked not-applicable do not count as failures.
  bool overall_pass() const {
    for (const CheckRecord& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return !checks.empty();
  }
  const CheckRecord* find(const std::string& name) const {
    for (const CheckRecord& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

inline std::string json_number(double x) { return std::isfinite(x) ? io::fmt(x) : "null"; }

}  // namespace detail

// Stable field order, 17 significant digits, two-space indentation.
inline void write_json(std::ostream& os, const VerificationReport& r) {
  using detail::json_number;
  using detail::json_string;
  os << "{\n";
  os << "  \"family\": " << json_string(r.family) << ",\n";
  os << "  \"parameters\": {";
  for (std::size_t i = 0; i < r.parameters.size(); ++i)
    os << (i ? ", " : "") << json_string(r.parameters[i].first) << ": " << json_string(r.parameters[i].second);
  os << "},\n";
  os << "  \"grid\": " << json_string(r.grid) << ",\n";
  os << "  \"overall_pass\": " << (r.overall_pass() ? "true" : "false") << ",\n";
  os << "  \"recorded\": {";
  for (std::size_t i = 0; i < r.recorded.size(); ++i)
    os << (i ? ", " : "") << json_string(r.recorded[i].first) << ": " << json_number(r.recorded[i].second);
  os << "},\n";
  os << "  \"checks\": [";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const CheckRecord& c = r.checks[i];
    os << (i ? ",\n" : "\n");
    os << "    {\"name\": " << json_string(c.name) << ", \"claim\": " << json_string(c.claim)
       << ", \"max_abs_deviation\": " << json_number(c.max_abs_deviation)
       << ", \"tolerance\": " << json_number(c.tolerance) << ", \"status\": " << json_string(to_string(c.status))
       << ", \"grid\": " << json_string(c.grid)
       << ", \"wall_time_ms\": " << (c.wall_time_ms ? json_number(*c.wall_time_ms) : "null")
       << ", \"reason\": " << json_string(c.reason) << "}";
  }
  os << (r.checks.empty() ? "]\n" : "\n  ]\n");
  os << "}\n";
}

struct VerifyOptions {
  std::size_t nu = 41, nv = 41;
  bool timing = false;
  std::size_t curve_samples = 200;
};

namespace detail {

// Outcome of one check body. Without an explicit status, pass iff deviation <= tolerance.
struct Outcome {
  double deviation = 0.0;
  std::optional<CheckStatus> status;
  std::string reason;
};

class Suite {
 public:
  Suite(VerificationReport& report, std::string grid, bool timing)
      : report_(report), grid_(std::move(grid)), timing_(timing) {}

  void run(const std::string& name, const std::string& claim, double tolerance, const std::function<Outcome()>& body) {
    CheckRecord rec{name, claim, 0.0, tolerance, CheckStatus::fail, grid_, std::nullopt, ""};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Outcome out = body();
      rec.max_abs_deviation = out.deviation;
      rec.reason = out.reason;
      if (out.status) rec.status = *out.status;
      else rec.status = (out.deviation <= tolerance) ? CheckStatus::pass : CheckStatus::fail;
    } catch (const std::exception& e) {
      rec.status = CheckStatus::fail;
      rec.max_abs_deviation = std::numeric_limits<double>::quiet_NaN();
      rec.reason = e.what();
    }
    if (timing_)
      rec.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(rec));
  }

 private:
  VerificationReport& report_;
  std::string grid_;
  bool timing_;
};

inline double rel_diff(double a, double b) { return std::fabs(a - b) / std::fmax(std::fabs(b), 1.0); }

// Largest relative difference of the frame-independent outputs K, H vector, |H| and |K_N|.
inline double gauge_invariant_diff(const CurvatureReport& a, const CurvatureReport& b) {
  double d = std::fmax(rel_diff(a.K, b.K), rel_diff(a.Hnorm, b.Hnorm));
  d = std::fmax(d, rel_diff(a.KN, b.KN));
  for (std::size_t i = 0; i < a.Hvec.dim(); ++i) d = std::fmax(d, rel_diff(a.Hvec[i], b.Hvec[i]));
  return d;
}

inline double mat_diff(const Mat2& a, const Mat2& b) {
  return std::fmax(std::fmax(std::fabs(a.a11 - b.a11), std::fabs(a.a12 - b.a12)),
                   std::fmax(std::fabs(a.a21 - b.a21), std::fabs(a.a22 - b.a22)));
}

// Per-normal, sign-agnostic worst deviation between engine and closed-form component lists.
class SignedComponents {
 public:
  void add(const std::vector<double>& engine, const std::vector<double>& ref) {
    if (plus_.empty()) plus_.assign(ref.size(), 0.0), minus_.assign(ref.size(), 0.0);
    for (std::size_t k = 0; k < ref.size(); ++k) {
      plus_[k] = std::fmax(plus_[k], std::fabs(engine[k] - ref[k]));
      minus_[k] = std::fmax(minus_[k], std::fabs(engine[k] + ref[k]));
    }
  }
  double deviation() const {
    double d = 0.0;
    for (std::size_t k = 0; k < plus_.size(); ++k) d = std::fmax(d, std::fmin(plus_[k], minus_[k]));
    return d;
  }
  // Normals whose best match needed a sign flip.
  std::string flips() const {
    std::string s;
    for (std::size_t k = 0; k < plus_.size(); ++k)
      if (minus_[k] < plus_[k]) s += (s.empty() ? "" : ",") + std::to_string(k + 1);
    return s.empty() ? std::string() : "sign flipped on normal(s) " + s;
  }

 private:
  std::vector<double> plus_, minus_;
};

// Grid data shared by the checks: analytic jet, Gram-Schmidt report and (when available) the
// report in the closed-form frame.
struct PointData {
  double u = 0.0, v = 0.0;
  bool singular = false;
  std::string error;  // domain error other than a singular point
  SurfaceJet2 jet;
  NormalFrame gs_frame;
  CurvatureReport gs;
  std::optional<NormalFrame> paper_frame;
  std::optional<CurvatureReport> paper;
};

inline std::vector<PointData> collect(const Surface& s, std::size_t nu, std::size_t nv) {
  const Rect& d = s.domain();
  std::vector<PointData> pts;
  for (double u : linspace(d.u.lo, d.u.hi, nu))
    for (double v : linspace(d.v.lo, d.v.hi, nv)) {
      PointData p;
      p.u = u;
      p.v = v;
      try {
        p.jet = s.jet(JetSource::analytic(), u, v);
        p.gs_frame = normal_frame(p.jet);
        p.gs = curvature_report(p.jet, p.gs_frame);
        if (s.has_paper_frame()) {
          p.paper_frame = s.paper_frame(u, v);
          p.paper = curvature_report(p.jet, *p.paper_frame);
        }
      } catch (const SingularPointError&) {
        p.singular = true;
      } catch (const DomainError& e) {
        p.error = e.what();
      }
      pts.push_back(std::move(p));
    }
  return pts;
}

// Iterates regular points; a domain error at any point fails the calling check.
template <typename F>
std::size_t for_regular(const std::vector<PointData>& pts, F&& f) {
  std::size_t used = 0;
  for (const PointData& p : pts) {
    if (!p.error.empty()) throw Error(p.error);
    if (p.singular) continue;
    f(p);
    ++used;
  }
  if (used == 0) throw Error("no regular grid points");
  return used;
}

inline std::string skipped_note(const std::vector<PointData>& pts) {
  std::size_t n = 0;
  for (const PointData& p : pts) n += p.singular ? 1 : 0;
  return n ? std::to_string(n) + " singular point(s) skipped" : std::string();
}

inline void common_surface_checks(Suite& suite, const Surface& s, const std::vector<PointData>& pts) {
  suite.run("first_form_arclength", "g11 = 1 for the unit-speed profile parametrization", tol::arclength, [&] {
    double d = 0.0;
    for_regular(pts, [&](const PointData& p) { d = std::fmax(d, std::fabs(p.gs.I.g11 - 1.0)); });
    return Outcome{d, {}, skipped_note(pts)};
  });
  suite.run("frame_orthonormal", "Gram-Schmidt normals are orthonormal and normal to the tangent plane", tol::frame,
            [&] {
              double d = 0.0;
              for_regular(pts, [&](const PointData& p) {
                const FrameDefect fd = frame_defect(p.gs_frame, p.jet);
                d = std::fmax(d, std::fmax(fd.orthonormality, fd.tangency));
              });
              return Outcome{d, {}, ""};
            });
  suite.run("shape_operator_self_adjoint", "G A_k is symmetric for every normal", tol::self_adjoint, [&] {
    double d = 0.0;
    for_regular(pts, [&](const PointData& p) {
      for (const Mat2& A : p.gs.shape_ops) {
        const Mat2 GA = p.gs.I.matrix() * A;
        d = std::fmax(d, std::fabs(GA.a12 - GA.a21));
      }
    });
    return Outcome{d, {}, ""};
  });
  suite.run("jet_forward_agreement", "forward-mode jets equal the closed-form jets", tol::forward_jet, [&] {
    double d = 0.0;
    for_regular(pts, [&](const PointData& p) {
      d = std::fmax(d, jet_max_rel_diff(s.jet(JetSource::forward(), p.u, p.v), p.jet));
    });
    return Outcome{d, {}, ""};
  });
  suite.run("jet_fd_agreement", "central-difference jets (h = 1e-4) match the closed-form jets", tol::fd_jet, [&] {
    double d = 0.0;
    for_regular(pts, [&](const PointData& p) {
      d = std::fmax(d, jet_max_rel_diff(s.jet(JetSource::finite_difference(), p.u, p.v), p.jet));
    });
    return Outcome{d, {}, ""};
  });
  suite.run("fd_curvature_agreement", "curvatures from central-difference jets match the closed-form jets",
            tol::fd_curvature, [&] {
              double d = 0.0;
              const PointTolerances t = tolerances_for(JetSource::finite_difference());
              for_regular(pts, [&](const PointData& p) {
                const SurfaceJet2 j = s.jet(JetSource::finite_difference(), p.u, p.v);
                const CurvatureReport r = curvature_report(j, normal_frame(j, t.tau_reg, t.tau_frame), t.tau_reg);
                d = std::fmax(d, gauge_invariant_diff(r, p.gs));
              });
              return Outcome{d, {}, ""};
            });
  if (s.dim() == 4) {
    suite.run("normal_curvature_routes_agree", "commutator and closed-form normal curvature agree",
              tol::normal_routes, [&] {
                double d = 0.0;
                for_regular(pts, [&](const PointData& p) {
                  d = std::fmax(d, std::fabs(p.gs.KN - std::fabs(p.gs.KN_signed.value())));
                });
                return Outcome{d, {}, ""};
              });
  }
  if (s.has_paper_frame()) {
    suite.run("frame_span", "Gram-Schmidt and closed-form normals span the same normal space", tol::frame, [&] {
      double d = 0.0;
      for_regular(pts, [&](const PointData& p) { d = std::fmax(d, frame_span_distance(p.gs_frame, *p.paper_frame)); });
      return Outcome{d, {}, ""};
    });
    suite.run("frame_gauge_invariance", "K, H vector, |H| and |K_N| agree between the two frames", tol::gauge, [&] {
      double d = 0.0;
      for_regular(pts, [&](const PointData& p) { d = std::fmax(d, gauge_invariant_diff(p.gs, *p.paper)); });
      return Outcome{d, {}, ""};
    });
  }
}

inline void gauss_constant_check(Suite& suite, const std::vector<PointData>& pts, double c) {
  suite.run("gauss_curvature_constant", "K = 1/c^2 at every regular point", tol::gauss_constant, [&] {
    double d = 0.0;
    for_regular(pts, [&](const PointData& p) { d = std::fmax(d, std::fabs(p.gs.K - 1.0 / (c * c))); });
    return Outcome{d, {}, ""};
  });
}

inline void normal_flat_check(Suite& suite, const std::vector<PointData>& pts) {
  suite.run("normal_curvature_flat", "flat normal connection: K_N = 0 (commutator and closed form)", tol::normal_flat,
            [&] {
              double d = 0.0;
              for_regular(pts, [&](const PointData& p) {
                d = std::fmax(d, std::fmax(p.gs.KN, std::fabs(p.gs.KN_signed.value_or(0.0))));
              });
              return Outcome{d, {}, ""};
            });
}

}  // namespace detail

inline VerificationReport verify_surface(const Surface& s, const VerifyOptions& opt = {}) {
  using namespace detail;
  if (opt.nu < 2 || opt.nv < 2) throw SpecError("grid needs nu, nv >= 2");
  VerificationReport report;
  report.family = s.name();
  report.grid = std::to_string(opt.nu) + "x" + std::to_string(opt.nv);
  Suite suite(report, report.grid, opt.timing);
  const std::vector<PointData> pts = collect(s, opt.nu, opt.nv);
  common_surface_checks(suite, s, pts);

  if (s.as<PlaneSurface>()) {
    suite.run("gauss_curvature_zero", "K = 0 on the plane", 1e-12, [&] {
      double d = 0.0;
      for_regular(pts, [&](const PointData& p) { d = std::fmax(d, std::fabs(p.gs.K)); });
      return Outcome{d, {}, ""};
    });
    suite.run("mean_curvature_zero", "H = 0 on the plane", 1e-12, [&] {
      double d = 0.0;
      for_regular(pts, [&](const PointData& p) { d = std::fmax(d, p.gs.Hnorm); });
      return Outcome{d, {}, ""};
    });
  }

  if (const auto* s1 = s.as<CaseISurface>()) {
    const double c = s1->spec().c;
    gauss_constant_check(suite, pts, c);
    suite.run("mean_curvature_closed_form", "|H| equals the closed-form mean curvature of the spherical surface",
              tol::mean_formula, [&] {
                double d = 0.0;
                for_regular(pts, [&](const PointData& p) {
                  d = std::fmax(d, std::fabs(p.gs.Hnorm - std::fabs(s1->reference(p.u, p.v).H)));
                });
                return Outcome{d, {}, ""};
              });
    suite.run("unit_normal_closed_form", "Gram-Schmidt normal equals the closed-form unit normal up to sign",
              tol::frame, [&] {
                double d = 0.0;
                for_regular(pts, [&](const PointData& p) {
                  const VecN& n = p.gs_frame[0];
                  const VecN N = s1->reference(p.u, p.v).N;
                  d = std::fmax(d, std::fmin(max_abs(n - N), max_abs(n + N)));
                });
                return Outcome{d, {}, ""};
              });
    suite.run("second_form_closed_form", "L11 = -kappa1, L12 = 0, L22 = phi' lambda cos(u/c)", tol::second_form, [&] {
      double d = 0.0;
      for_regular(pts, [&](const PointData& p) { d = std::fmax(d, mat_diff(p.paper->II.L[0], s1->reference(p.u, p.v).L)); });
      return Outcome{d, {}, ""};
    });
    const SphereClass cls = classify_case1(s1->spec());
    report.parameters.emplace_back("classification", to_string(cls));
    suite.run("sphere_radius", "lambda = c gives a round sphere of radius |c|", tol::sphere_radius, [&] {
      if (cls != SphereClass::sphere) return Outcome{0.0, CheckStatus::not_applicable, "lambda != |c|"};
      std::vector<VecN> xs;
      for (const PointData& p : pts)
        if (!p.singular && p.error.empty()) xs.push_back(p.jet.X);
      const SphereFit fit = fit_sphere(xs);
      report.recorded.emplace_back("sphere_radius", fit.radius);
      return Outcome{std::fmax(std::fabs(fit.radius - std::fabs(c)), fit.max_radial_deviation), {}, ""};
    });
  }

  if (const auto* s2 = s.as<CaseIISurface>()) {
    const double c = s2->spec().c;
    gauss_constant_check(suite, pts, c);
    normal_flat_check(suite, pts);
    suite.run("mean_curvature_vector_closed_form",
              "H components in the closed-form frame match the first-kind mean curvature vector formula",
              tol::mean_formula, [&] {
                SignedComponents sc;
                for_regular(pts, [&](const PointData& p) { sc.add(p.paper->Hk, s2->reference(p.u, p.v).Hk); });
                return Outcome{sc.deviation(), {}, sc.flips()};
              });
    suite.run("second_form_closed_form", "L coefficients in the closed-form frame match the first-kind formulas",
              tol::second_form, [&] {
                double d = 0.0;
                for_regular(pts, [&](const PointData& p) {
                  const CaseIIReference ref = s2->reference(p.u, p.v);
                  for (std::size_t k = 0; k < 2; ++k) d = std::fmax(d, mat_diff(p.paper->II.L[k], ref.L.L[k]));
                });
                return Outcome{d, {}, ""};
              });
    suite.run("profile_curvature_consistency", "both expressions of kappa and of kappa1 agree", tol::profile_curvature,
              [&] {
                double d = 0.0;
                for_regular(pts, [&](const PointData& p) {
                  const CaseIIReference ref = s2->reference(p.u, p.v);
                  d = std::fmax(d, std::fmax(std::fabs(ref.kappa - ref.kappa_alt), std::fabs(ref.kappa1 - ref.kappa1_alt)));
                });
                return Outcome{d, {}, ""};
              });
    suite.run("second_mean_curvature_constant_alpha", "constant alpha makes the second mean curvature vanish",
              tol::mean_formula, [&] {
                bool constant = true;
                for (double u : linspace(s2->domain().u.lo, s2->domain().u.hi, opt.nu))
                  constant = constant && s2->spec().alpha.jet(u).d1 == 0.0;
                if (!constant) return Outcome{0.0, CheckStatus::not_applicable, "alpha is not constant"};
                double d = 0.0;
                for_regular(pts, [&](const PointData& p) { d = std::fmax(d, std::fabs(p.paper->Hk[1])); });
                return Outcome{d, {}, ""};
              });
  }

  if (const auto* s3 = s.as<CaseIIISurface>()) {
    const double c = s3->spec().c;
    gauss_constant_check(suite, pts, c);
    normal_flat_check(suite, pts);
    suite.run("gauss_curvature_closed_form", "engine K equals -kappa_gamma phi' / (lambda cos(u/c))",
              tol::closed_form_K, [&] {
                double d = 0.0;
                for_regular(pts, [&](const PointData& p) { d = std::fmax(d, std::fabs(p.gs.K - s3->reference(p.u, p.v).K)); });
                return Outcome{d, {}, ""};
              });
    suite.run("mean_curvature_vector_closed_form",
              "H components in the closed-form frame match the meridian-surface mean curvature vector formula",
              tol::mean_formula, [&] {
                SignedComponents sc;
                for_regular(pts, [&](const PointData& p) { sc.add(p.paper->Hk, s3->reference(p.u, p.v).Hk); });
                return Outcome{sc.deviation(), {}, sc.flips()};
              });
    suite.run("second_form_closed_form", "first and second fundamental forms match the meridian-surface formulas",
              tol::second_form, [&] {
                double d = 0.0;
                for_regular(pts, [&](const PointData& p) {
                  const CaseIIIReference ref = s3->reference(p.u, p.v);
                  for (std::size_t k = 0; k < 2; ++k) d = std::fmax(d, mat_diff(p.paper->II.L[k], ref.L.L[k]));
                  d = std::fmax(d, mat_diff(p.paper->I.matrix(), ref.I.matrix()));
                });
                return Outcome{d, {}, ""};
              });
    suite.run("h2_condition_consistency", "kappa_gamma - f1'/f2 = -2 H2", tol::mean_formula, [&] {
      double d = 0.0;
      for_regular(pts, [&](const PointData& p) {
        d = std::fmax(d, std::fabs(s3->reference(p.u, p.v).h2_condition + 2.0 * p.paper->Hk[1]));
      });
      return Outcome{d, {}, ""};
    });
    suite.run("rho_unit_speed", "rho is parametrized by arclength", tol::rho_speed, [&] {
      const double dev = s3->rho_speed_deviation();
      if (dev > tol::rho_speed)
        return Outcome{dev, CheckStatus::not_applicable, "rho is not unit-speed; speed-aware reference formulas in use"};
      return Outcome{dev, {}, ""};
    });
  }

  if (s.as<OtsukiSurface>()) {
    normal_flat_check(suite, pts);
    double mean = 0.0, sd = 0.0;
    suite.run("gauss_curvature_constant_on_grid", "K is constant over the grid (stddev <= 1e-8 |mean|)",
              tol::constancy_rel, [&] {
                std::vector<double> ks;
                for_regular(pts, [&](const PointData& p) { ks.push_back(p.gs.K); });
                for (double k : ks) mean += k;
                mean /= static_cast<double>(ks.size());
                for (double k : ks) sd += (k - mean) * (k - mean);
                sd = std::sqrt(sd / static_cast<double>(ks.size()));
                report.recorded.emplace_back("K_mean", mean);
                report.recorded.emplace_back("K_stddev", sd);
                const double rel = sd / std::fabs(mean);
                return Outcome{rel, {}, "deviation is stddev/|mean|"};
              });
    suite.run("gauss_curvature_inverse_c_squared", "K = 1/c^2", tol::gauss_constant, [&] {
      return Outcome{0.0, CheckStatus::not_applicable, "no c parameter; constant value is recorded instead"};
    });
    suite.run("affine_rank_4", "sampled points do not lie in any 3-dimensional affine subspace", 0.0, [&] {
      std::vector<VecN> xs;
      for (const PointData& p : pts)
        if (p.error.empty()) xs.push_back(p.jet.X);
      const AffineRank ar = affine_rank(xs);
      report.recorded.emplace_back("affine_rank", ar.rank);
      return Outcome{std::fabs(ar.rank - 4.0), {}, "deviation is |rank - 4|"};
    });
  }
  return report;
}

inline VerificationReport verify_curve_report(const SphericalCurveSpec& spec, const std::string& name,
                                              const VerifyOptions& opt = {}) {
  using namespace detail;
  VerificationReport report;
  report.family = name;
  report.grid = std::to_string(opt.curve_samples);
  Suite suite(report, report.grid, opt.timing);
  std::optional<CurveCheck> chk;
  auto get = [&]() -> const CurveCheck& {
    if (!chk) chk = verify_curve(spec, opt.curve_samples);
    return *chk;
  };
  suite.run("unit_speed", "|gamma'| = 1 at every sample", tol::unit_speed, [&] { return Outcome{get().max_speed_dev, {}, ""}; });
  suite.run("trace_planarity", "trace curve gamma + c^2 gamma'' lies in the hyperplane x_{n+1} = 0", tol::trace_planar,
            [&] { return Outcome{get().max_beta_last, {}, ""}; });
  suite.run("trace_consistency", "gamma + c^2 gamma'' equals phi + c^2 phi''", tol::trace_consistency,
            [&] { return Outcome{get().max_trace_mismatch, {}, ""}; });
  suite.run("direction_unit", "direction function a(u) has unit length", tol::direction_unit,
            [&] { return Outcome{get().max_unit_dev_of_a, {}, ""}; });
  suite.run("quadrature_closed_form", "a = (1), lambda = c: phi(u) = c sin(u/c) on the monotone branch",
            spec.quad_tol() * 10.0, [&] {
              if (spec.direction().n() != 1 || spec.direction().name() != "constant" ||
                  std::fabs(spec.lambda() - std::fabs(spec.c())) > 1e-12)
                return Outcome{0.0, CheckStatus::not_applicable, "needs the circle direction with lambda = |c|"};
              const double half = 0.5 * std::numbers::pi * std::fabs(spec.c());
              const double lo = std::fmax(spec.domain().lo, -half), hi = std::fmin(spec.domain().hi, half);
              double d = 0.0;
              for (const CurveSample& cs : sample_curve(spec, opt.curve_samples))
                if (cs.u >= lo && cs.u <= hi)
                  d = std::fmax(d, std::fabs(cs.phi[0] - spec.direction()(cs.u)[0] * spec.c() * std::sin(cs.u / spec.c())));
              return Outcome{d, {}, ""};
            });
  return report;
}

}  // namespace gss
