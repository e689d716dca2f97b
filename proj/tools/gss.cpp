// gss: curvature fields, verification reports, meshes and curve samples for spherical-profile
// surfaces.

#include <CLI11.hpp>

#include <gss/app.hpp>

namespace {

void add_options(CLI::App* cmd, gss::app::RunConfig& cfg, std::string& grid, std::string& config_path) {
  cmd->add_option("--family", cfg.family,
                  "plane | case1 | case2 | case3 | otsuki-a | otsuki-b | example1 | example2 | example3")
      ->capture_default_str();
  cmd->add_option("--lambda", cfg.lambda, "profile scale lambda > 0")->capture_default_str();
  cmd->add_option("--c", cfg.c, "sphere parameter c != 0")->capture_default_str();
  cmd->add_option("--alpha", cfg.alpha, "angle function: u | const:A | poly:A0,A1,...")->capture_default_str();
  cmd->add_option("--rho", cfg.rho, "spherical curve: example11 | great-circle | small-circle:THETA")
      ->capture_default_str();
  cmd->add_option("--grid", grid, "grid size NUxNV")->capture_default_str();
  cmd->add_option("--samples", cfg.samples, "curve samples")->capture_default_str();
  cmd->add_option("--domain", cfg.domain, "u0:u1,v0:v1 (curves: u0:u1); numbers may use a pi suffix");
  cmd->add_option("--jet", cfg.jet, "analytic | forward | fd")->capture_default_str();
  cmd->add_option("--step", cfg.h, "finite-difference step h")->capture_default_str();
  cmd->add_option("--tol", cfg.tol, "quadrature absolute tolerance")->capture_default_str();
  cmd->add_option("--frame", cfg.frame, "normal frame: gs | paper")->capture_default_str();
  cmd->add_option("--out", cfg.out, "output path, - for stdout")->capture_default_str();
  cmd->add_option("--format", cfg.format, "csv | json | obj");
  cmd->add_option("--project", cfg.project, "E^4 -> E^3 projection: dropK | plane:a;b;c");
  cmd->add_option("--sidecar", cfg.sidecar, "per-vertex curvature CSV for mesh");
  cmd->add_flag("--timing", cfg.timing, "record wall time per check");
  cmd->add_option("--threads", cfg.threads, "worker threads for grid evaluation")->capture_default_str();
  cmd->add_option("--config", config_path, "JSON config file; its values override flags");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gss::app;
  CLI::App app{"Curvature of surfaces built from spherical-profile curves"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string grid = "41x41", config_path;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Command commands[] = {
      {"eval", "evaluate curvature fields on a grid (CSV)", run_eval},
      {"verify", "run the invariant suite for a family (JSON)", run_verify},
      {"mesh", "export a triangle mesh (OBJ) with a curvature sidecar CSV", run_mesh},
      {"curve", "sample a profile curve and its trace curve (CSV)", run_curve},
  };
  std::vector<CLI::App*> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_options(sub, cfg, grid, config_path);
    subs.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_config_error;
  }
  return guarded([&] {
    std::tie(cfg.nu, cfg.nv) = parse_grid(grid);
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    for (std::size_t k = 0; k < subs.size(); ++k)
      if (subs[k]->parsed()) return commands[k].run(cfg);
    return static_cast<int>(exit_config_error);
  });
}
