#pragma once

#include <string>
#include <vector>

#include "vlcsim/fitting.hpp"
#include "vlcsim/sim.hpp"

namespace vlcsim {

// Scenario file handling.  The on-disk format is JSON with units spelled
// out in the key names (*_ms, *_m, *_deg) to keep unit mistakes visible.
Scenario load_scenario(const std::string& path);
Scenario scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const Scenario& scenario);

// The bundled scenario reproducing the measured campaign: one light, one
// static vehicle, a 1 Hz periodic source, 2250 s horizon.
Scenario paper_default_scenario();

// Trace CSV: msg_id,source,emit_time_s,light_id,vehicle_id,
// seg_<name>_ms...,total_ms,delivered,d_m,H,gamma,ber.
void write_trace_csv(const SimResult& result, const std::string& path);

void write_summary_json(const Summary& summary, const SimResult& result,
                        const std::string& path);

// Reads latency values (milliseconds on disk, seconds in memory) from a
// single-column or named-column CSV; the header row is optional.  Rows
// that fail to parse are reported together, by line number.
EmpiricalSample read_latency_csv(const std::string& path,
                                 const std::string& column = "");

// Flat key=value fit record, one line per field.
void write_fit_report(const std::vector<FitResult>& ranked,
                      const std::vector<double>& sup_norms,
                      const std::string& path);

// (x_ms, pdf, cdf, cdf_error) grid for external plotting.
void write_fit_grids(const EmpiricalSample& data, const DistributionSpec& spec,
                     const std::string& path, std::size_t points = 400);

}  // namespace vlcsim
