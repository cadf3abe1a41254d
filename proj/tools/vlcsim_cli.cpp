#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vlcsim/parallel.hpp"
#include "vlcsim/scenario_io.hpp"

namespace {

using namespace vlcsim;

Scenario resolve_scenario(const std::string& name) {
  if (name == "paper-default") return paper_default_scenario();
  return load_scenario(name);
}

int cmd_run(const std::string& scenario_path, const std::string& out_dir,
            std::int64_t seed_override, double duration_override,
            int replications) {
  Scenario scenario = resolve_scenario(scenario_path);
  if (seed_override >= 0)
    scenario.seed = static_cast<std::uint64_t>(seed_override);
  if (duration_override > 0.0) scenario.duration_s = duration_override;

  const auto errors = scenario.validate();
  if (!errors.empty()) {
    for (const auto& e : errors) std::cerr << "error: " << e << '\n';
    return 2;
  }

  {
    std::ofstream out(out_dir + "/scenario.json");
    if (!out) {
      std::cerr << "error: cannot write to output directory: " << out_dir
                << '\n';
      return 2;
    }
    out << scenario_to_json_text(scenario);
  }

  if (replications <= 1) {
    const SimResult result = run(scenario, scenario.seed, scenario.duration_s);
    write_trace_csv(result, out_dir + "/trace.csv");
    if (!result.trace.empty())
      write_summary_json(summarize(result), result, out_dir + "/summary.json");
    std::cout << "records=" << result.trace.size()
              << " delivered=" << result.delivered
              << " dropped=" << result.dropped << '\n';
    return 0;
  }

#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < replications; ++r) {
    const std::uint64_t seed = scenario.seed + static_cast<std::uint64_t>(r);
    const SimResult result = run(scenario, seed, scenario.duration_s);
    write_trace_csv(result,
                    out_dir + "/trace_seed" + std::to_string(seed) + ".csv");
    if (!result.trace.empty())
      write_summary_json(summarize(result), result,
                         out_dir + "/summary_seed" + std::to_string(seed) +
                             ".json");
  }
  std::cout << "replications=" << replications << " written to " << out_dir
            << '\n';
  return 0;
}

int cmd_fit(const std::string& csv_path, const std::string& column,
            const std::string& families_arg, const std::string& out_dir,
            double bins_ms) {
  const EmpiricalSample data = read_latency_csv(csv_path, column);
  if (data.n() < 10) {
    std::cerr << "error: at least 10 values required, got " << data.n() << '\n';
    return 2;
  }
  data.validate();

  std::vector<Family> families;
  std::string token;
  for (char c : families_arg + ",") {
    if (c == ',') {
      if (!token.empty()) families.push_back(family_from_name(token));
      token.clear();
    } else {
      token += c;
    }
  }

  const auto sel = select_best_model(data, families);
  for (const auto& diag : sel.diagnostics)
    std::cerr << "note: excluded " << diag << '\n';

  std::vector<double> grid = data.values;
  std::sort(grid.begin(), grid.end());
  std::vector<double> sup_norms;
  std::printf("%-18s %-14s %-14s %-10s %s\n", "family", "BIC", "logL",
              "cdf_err_sup", "params");
  for (const auto& fit : sel.ranked) {
    const double sup = cdf_error_curve(data, fit.spec, grid).sup_norm;
    sup_norms.push_back(sup);
    std::printf("%-18s %-14.6g %-14.6g %-10.4g", family_name(fit.spec.family),
                fit.bic, fit.log_likelihood, sup);
    for (double p : fit.spec.params) std::printf(" %.6g", p);
    if (!fit.converged) std::printf("  [not converged]");
    std::printf("\n");
  }

  write_fit_report(sel.ranked, sup_norms, out_dir + "/fit_report.txt");
  for (const auto& fit : sel.ranked)
    write_fit_grids(data, fit.spec,
                    out_dir + "/fit_grid_" +
                        std::string(family_name(fit.spec.family)) + ".csv");
  const auto hist = histogram_pdf_estimate(data, bins_ms * 1e-3);
  std::printf("histogram: %zu bins of %.6g ms, modal bin center %.6g ms\n",
              hist.bins.size(), bins_ms, hist.modal_center * 1e3);
  return 0;
}

int cmd_link_budget(double distance_m, double phi_deg, double psi_deg,
                    double power_w, double semiangle_deg, double area_cm2,
                    double filter, double index, double fov_deg,
                    double responsivity, double noise_w,
                    std::size_t frame_bits, bool squared) {
  constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
  const TransmitterParams tx{power_w, semiangle_deg * kDegToRad};
  const ReceiverOptics rx{area_cm2 * 1e-4, filter, index, fov_deg * kDegToRad,
                          responsivity};
  const LinkGeometry geom{distance_m, phi_deg * kDegToRad,
                          psi_deg * kDegToRad};
  const NoiseModel noise{noise_w};

  const double h = los_channel_gain(geom, tx, rx);
  const double gamma = snr(h, tx, rx, noise, squared);
  const double ber = ook_ber(gamma);
  const double per = frame_error_rate(ber, frame_bits);
  std::printf("H      = %.6g\n", h);
  std::printf("gamma  = %.6g\n", gamma);
  std::printf("BER    = %.6g\n", ber);
  std::printf("PER    = %.6g  (%zu-bit frame)\n", per, frame_bits);
  return 0;
}

int cmd_validate(const std::string& scenario_path) {
  const Scenario scenario = resolve_scenario(scenario_path);
  const auto errors = scenario.validate();
  if (errors.empty()) {
    std::cout << "scenario OK\n";
    return 0;
  }
  for (const auto& e : errors) std::cerr << "error: " << e << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"5G+VLC latency simulator and fitting toolkit"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "Simulate a scenario");
  std::string scenario_path, out_dir = ".";
  std::int64_t seed = -1;
  double duration = -1.0;
  int replications = 1;
  run_cmd->add_option("scenario", scenario_path,
                      "Scenario file or 'paper-default'")->required();
  run_cmd->add_option("--out", out_dir, "Output directory");
  run_cmd->add_option("--seed", seed, "Seed override");
  run_cmd->add_option("--duration", duration, "Duration override (seconds)");
  run_cmd->add_option("--replications", replications,
                      "Number of seeded replications");

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "Fit distributions to a latency CSV");
  std::string csv_path, column,
      families = "t-location-scale,normal,logistic,log-normal";
  double bins_ms = 1.0;
  fit_cmd->add_option("csv", csv_path, "CSV with latency values (ms)")->required();
  fit_cmd->add_option("--column", column, "Column name (default: first)");
  fit_cmd->add_option("--families", families, "Comma-separated family list");
  fit_cmd->add_option("--out", out_dir, "Output directory");
  fit_cmd->add_option("--bins-ms", bins_ms, "Histogram bin width (ms)");

  // link-budget
  auto* lb_cmd = app.add_subcommand("link-budget", "Print H, SNR, BER, PER");
  double distance_m = 10.0, phi = 0.0, psi = 0.0, power = 1.0,
         semiangle = 60.0, area_cm2 = 1.0, filter = 1.0, index = 1.5,
         fov = 30.0, responsivity = 0.4, noise_w = 1e-8;
  std::size_t frame_bits = 280;
  bool squared = false;
  lb_cmd->add_option("--distance-m", distance_m, "Link distance (m)");
  lb_cmd->add_option("--phi-deg", phi, "Irradiance angle (deg)");
  lb_cmd->add_option("--psi-deg", psi, "Incidence angle (deg)");
  lb_cmd->add_option("--power-w", power, "Optical transmit power (W)");
  lb_cmd->add_option("--semiangle-deg", semiangle, "Half-power semiangle (deg)");
  lb_cmd->add_option("--area-cm2", area_cm2, "Photodetector area (cm^2)");
  lb_cmd->add_option("--filter", filter, "Optical filter transmission");
  lb_cmd->add_option("--index", index, "Concentrator refractive index");
  lb_cmd->add_option("--fov-deg", fov, "Receiver FOV (deg)");
  lb_cmd->add_option("--responsivity", responsivity, "Responsivity (A/W)");
  lb_cmd->add_option("--noise-w", noise_w, "Cumulative noise power");
  lb_cmd->add_option("--frame-bits", frame_bits, "Frame length for PER");
  lb_cmd->add_flag("--squared-snr", squared, "Use squared electrical SNR form");

  // validate
  auto* val_cmd = app.add_subcommand("validate", "Validate a scenario file");
  std::string val_path;
  val_cmd->add_option("scenario", val_path,
                      "Scenario file or 'paper-default'")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed())
      return cmd_run(scenario_path, out_dir, seed, duration, replications);
    if (fit_cmd->parsed())
      return cmd_fit(csv_path, column, families, out_dir, bins_ms);
    if (lb_cmd->parsed())
      return cmd_link_budget(distance_m, phi, psi, power, semiangle, area_cm2,
                             filter, index, fov, responsivity, noise_w,
                             frame_bits, squared);
    if (val_cmd->parsed()) return cmd_validate(val_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
