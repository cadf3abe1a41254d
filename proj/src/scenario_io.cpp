#include "vlcsim/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vlcsim {

namespace {

using nlohmann::json;

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

Segment segment_from_json(const json& j, const PhyConfig& phy) {
  Segment seg;
  seg.name = j.at("name").get<std::string>();
  seg.loss_prob = j.value("loss_prob", 0.0);
  const std::string type = j.at("type").get<std::string>();
  if (type == "stochastic") {
    StochasticSegment s;
    s.spec.family = family_from_name(j.at("family").get<std::string>());
    switch (s.spec.family) {
      case Family::kLogNormal:
        // Log-space parameters of the latency in seconds.
        s.spec.params = {j.at("mu_log").get<double>(),
                         j.at("sigma_log").get<double>()};
        break;
      case Family::kTLocationScale:
        s.spec.params = {j.at("mu_ms").get<double>() * 1e-3,
                         j.at("sigma_ms").get<double>() * 1e-3,
                         j.at("nu").get<double>()};
        break;
      default:
        s.spec.params = {j.at("mu_ms").get<double>() * 1e-3,
                         j.at("sigma_ms").get<double>() * 1e-3};
    }
    const auto& tr = j.at("truncate_ms");
    s.trunc_lo_s = tr.at(0).get<double>() * 1e-3;
    s.trunc_hi_s = tr.at(1).get<double>() * 1e-3;
    seg.model = s;
  } else if (type == "deterministic") {
    seg.model = DeterministicSegment{j.at("value_ms").get<double>() * 1e-3};
  } else if (type == "airtime") {
    seg.model =
        AirtimeSegment{phy, j.value("decode_delay_ms", 0.0) * 1e-3};
  } else {
    throw std::invalid_argument("unknown segment type '" + type + "'");
  }
  return seg;
}

json segment_to_json(const Segment& seg) {
  json j;
  j["name"] = seg.name;
  if (seg.loss_prob != 0.0) j["loss_prob"] = seg.loss_prob;
  if (const auto* s = std::get_if<StochasticSegment>(&seg.model)) {
    j["type"] = "stochastic";
    j["family"] = family_name(s->spec.family);
    if (s->spec.family == Family::kLogNormal) {
      j["mu_log"] = s->spec.params[0];
      j["sigma_log"] = s->spec.params[1];
    } else {
      j["mu_ms"] = s->spec.params[0] * 1e3;
      j["sigma_ms"] = s->spec.params[1] * 1e3;
      if (s->spec.family == Family::kTLocationScale)
        j["nu"] = s->spec.params[2];
    }
    j["truncate_ms"] = {s->trunc_lo_s * 1e3, s->trunc_hi_s * 1e3};
  } else if (const auto* d = std::get_if<DeterministicSegment>(&seg.model)) {
    j["type"] = "deterministic";
    j["value_ms"] = d->value_s * 1e3;
  } else {
    const auto& a = std::get<AirtimeSegment>(seg.model);
    j["type"] = "airtime";
    if (a.decode_delay_s != 0.0) j["decode_delay_ms"] = a.decode_delay_s * 1e3;
  }
  return j;
}

std::vector<std::uint8_t> payload_from_json(const json& j) {
  if (j.contains("payload_hex")) {
    const auto hex = j.at("payload_hex").get<std::string>();
    return frame_from_hex(hex).payload;
  }
  const auto n = j.at("payload_bytes").get<std::size_t>();
  std::vector<std::uint8_t> payload(n);
  for (std::size_t i = 0; i < n; ++i)
    payload[i] = static_cast<std::uint8_t>(i & 0xFF);
  return payload;
}

}  // namespace

Scenario scenario_from_json_text(const std::string& text) {
  const json j = json::parse(text);
  Scenario sc;
  sc.seed = j.value("seed", std::uint64_t{1});
  sc.duration_s = j.at("duration_s").get<double>();

  if (j.contains("phy")) {
    const auto& p = j.at("phy");
    sc.phy.data_rate_bps = p.value("data_rate_bps", 100000.0);
    sc.phy.amplitude = p.value("amplitude", 1.0);
    sc.phy.preamble_bits = p.value("preamble_bits", 16);
  }
  if (j.contains("noise"))
    sc.noise.noise_power_w = j.at("noise").value("noise_power_w", 1e-8);

  for (const auto& lj : j.value("lights", json::array())) {
    TrafficLight light;
    light.id = lj.at("id").get<std::string>();
    light.position_m = {lj.at("position_m").at(0).get<double>(),
                        lj.at("position_m").at(1).get<double>()};
    light.beam_orientation_rad = lj.value("beam_deg", 0.0) * kDegToRad;
    const auto& tx = lj.at("tx");
    light.tx.power_w = tx.at("power_w").get<double>();
    light.tx.half_power_semiangle_rad =
        tx.at("half_power_semiangle_deg").get<double>() * kDegToRad;
    for (const auto& s : lj.at("pipeline"))
      light.pipeline.segments.push_back(segment_from_json(s, sc.phy));
    sc.lights.push_back(std::move(light));
  }
  for (const auto& vj : j.value("vehicles", json::array())) {
    Vehicle v;
    v.id = vj.at("id").get<std::string>();
    v.position_m = {vj.at("position_m").at(0).get<double>(),
                    vj.at("position_m").at(1).get<double>()};
    v.heading_rad = vj.value("heading_deg", 0.0) * kDegToRad;
    v.speed_mps = vj.value("speed_mps", 0.0);
    const auto& rx = vj.at("rx");
    v.rx.area_m2 = rx.at("area_cm2").get<double>() * 1e-4;
    v.rx.filter_transmission = rx.value("filter_transmission", 1.0);
    v.rx.concentrator_index = rx.value("concentrator_index", 1.5);
    v.rx.fov_rad = rx.at("fov_deg").get<double>() * kDegToRad;
    v.rx.responsivity_a_per_w = rx.value("responsivity_a_per_w", 0.4);
    sc.vehicles.push_back(std::move(v));
  }
  for (const auto& sj : j.value("sources", json::array())) {
    MessageSource src;
    src.id = sj.at("id").get<std::string>();
    const std::string kind = sj.value("kind", "periodic");
    if (kind == "periodic") {
      src.kind = SourceKind::kPeriodic;
      src.interval_s = sj.at("interval_s").get<double>();
    } else if (kind == "triggered") {
      src.kind = SourceKind::kTriggered;
      src.rate_hz = sj.at("rate_hz").get<double>();
    } else {
      throw std::invalid_argument("unknown source kind '" + kind + "'");
    }
    src.payload = payload_from_json(sj);
    src.sensor_label = sj.value("sensor", "environment");
    sc.sources.push_back(std::move(src));
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json_text(buf.str());
}

std::string scenario_to_json_text(const Scenario& scenario) {
  json j;
  j["seed"] = scenario.seed;
  j["duration_s"] = scenario.duration_s;
  j["phy"] = {{"data_rate_bps", scenario.phy.data_rate_bps},
              {"amplitude", scenario.phy.amplitude},
              {"preamble_bits", scenario.phy.preamble_bits}};
  j["noise"] = {{"noise_power_w", scenario.noise.noise_power_w}};
  j["lights"] = json::array();
  for (const auto& l : scenario.lights) {
    json lj;
    lj["id"] = l.id;
    lj["position_m"] = {l.position_m.x, l.position_m.y};
    lj["beam_deg"] = l.beam_orientation_rad / kDegToRad;
    lj["tx"] = {{"power_w", l.tx.power_w},
                {"half_power_semiangle_deg",
                 l.tx.half_power_semiangle_rad / kDegToRad}};
    lj["pipeline"] = json::array();
    for (const auto& s : l.pipeline.segments)
      lj["pipeline"].push_back(segment_to_json(s));
    j["lights"].push_back(std::move(lj));
  }
  j["vehicles"] = json::array();
  for (const auto& v : scenario.vehicles) {
    json vj;
    vj["id"] = v.id;
    vj["position_m"] = {v.position_m.x, v.position_m.y};
    vj["heading_deg"] = v.heading_rad / kDegToRad;
    vj["speed_mps"] = v.speed_mps;
    vj["rx"] = {{"area_cm2", v.rx.area_m2 * 1e4},
                {"filter_transmission", v.rx.filter_transmission},
                {"concentrator_index", v.rx.concentrator_index},
                {"fov_deg", v.rx.fov_rad / kDegToRad},
                {"responsivity_a_per_w", v.rx.responsivity_a_per_w}};
    j["vehicles"].push_back(std::move(vj));
  }
  j["sources"] = json::array();
  for (const auto& s : scenario.sources) {
    json sj;
    sj["id"] = s.id;
    if (s.kind == SourceKind::kPeriodic) {
      sj["kind"] = "periodic";
      sj["interval_s"] = s.interval_s;
    } else {
      sj["kind"] = "triggered";
      sj["rate_hz"] = s.rate_hz;
    }
    sj["payload_hex"] = frame_to_hex(Frame{s.payload});
    sj["sensor"] = s.sensor_label;
    j["sources"].push_back(std::move(sj));
  }
  return j.dump(2);
}

Scenario paper_default_scenario() {
  const char* text = R"json({
    "seed": 1,
    "duration_s": 2250,
    "phy": {"data_rate_bps": 100000, "amplitude": 1.0, "preamble_bits": 16},
    "noise": {"noise_power_w": 1e-8},
    "lights": [{
      "id": "tl-1",
      "position_m": [0, 0],
      "beam_deg": 0,
      "tx": {"power_w": 1.0, "half_power_semiangle_deg": 60},
      "pipeline": [
        {"name": "5g", "type": "stochastic", "family": "t-location-scale",
         "mu_ms": 8.8, "sigma_ms": 0.743, "nu": 1.09,
         "truncate_ms": [2.4, 29]},
        {"name": "proc", "type": "deterministic", "value_ms": 0.3},
        {"name": "vlc", "type": "airtime"}
      ]
    }],
    "vehicles": [{
      "id": "car-1",
      "position_m": [10, 0],
      "heading_deg": 180,
      "speed_mps": 0,
      "rx": {"area_cm2": 1, "filter_transmission": 1,
             "concentrator_index": 1.5, "fov_deg": 30,
             "responsivity_a_per_w": 0.4}
    }],
    "sources": [{
      "id": "env", "kind": "periodic", "interval_s": 1,
      "payload_bytes": 30, "sensor": "environment"
    }]
  })json";
  return scenario_from_json_text(text);
}

void write_trace_csv(const SimResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open trace file: " + path);

  std::vector<std::string> seg_names;
  for (const auto& rec : result.trace)
    for (const auto& [name, _] : rec.segments_s)
      if (std::find(seg_names.begin(), seg_names.end(), name) ==
          seg_names.end())
        seg_names.push_back(name);

  out << "msg_id,source,emit_time_s,light_id,vehicle_id";
  for (const auto& name : seg_names) out << ",seg_" << name << "_ms";
  out << ",total_ms,delivered,d_m,H,gamma,ber\n";

  for (const auto& rec : result.trace) {
    out << rec.msg_id << ',' << rec.source << ',' << fmt(rec.emit_time_s)
        << ',' << rec.light_id << ',' << rec.vehicle_id;
    for (const auto& name : seg_names) {
      out << ',';
      const auto it = std::find_if(
          rec.segments_s.begin(), rec.segments_s.end(),
          [&](const auto& p) { return p.first == name; });
      if (it != rec.segments_s.end()) out << fmt(it->second * 1e3);
    }
    out << ',' << fmt(rec.total_s * 1e3) << ',' << (rec.delivered ? 1 : 0)
        << ',' << fmt(rec.distance_m) << ',' << fmt(rec.channel_gain) << ','
        << fmt(rec.snr) << ',' << fmt(rec.ber) << '\n';
  }
}

void write_summary_json(const Summary& summary, const SimResult& result,
                        const std::string& path) {
  json j;
  j["records"] = summary.records;
  j["emitted"] = result.emitted;
  j["delivered"] = result.delivered;
  j["dropped"] = result.dropped;
  j["delivery_ratio"] = summary.delivery_ratio;
  auto seg_json = [](const SegmentStats& s) {
    return json{{"name", s.name},
                {"min_ms", s.min_s * 1e3},
                {"max_ms", s.max_s * 1e3},
                {"median_ms", s.median_s * 1e3},
                {"modal_bin_center_ms", s.modal_bin_center_s * 1e3}};
  };
  j["segments"] = json::array();
  for (const auto& s : summary.per_segment) j["segments"].push_back(seg_json(s));
  j["total"] = seg_json(summary.total);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open summary file: " + path);
  out << j.dump(2) << '\n';
}

EmpiricalSample read_latency_csv(const std::string& path,
                                 const std::string& column) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CSV file: " + path);

  auto split = [](const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
  };
  auto parse_num = [](const std::string& s, double& out) {
    try {
      std::size_t pos = 0;
      out = std::stod(s, &pos);
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
      return pos == s.size();
    } catch (...) {
      return false;
    }
  };

  std::string line;
  std::size_t line_no = 0;
  int col_idx = column.empty() ? 0 : -1;
  EmpiricalSample sample;
  std::vector<std::size_t> bad_rows;
  bool header_checked = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || (line_no == 1 && line.back() == '\r' && line.size() == 1))
      continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split(line);
    if (!header_checked) {
      header_checked = true;
      double ignored;
      const bool is_header = !fields.empty() && !parse_num(fields[0], ignored);
      if (is_header) {
        if (!column.empty()) {
          for (std::size_t i = 0; i < fields.size(); ++i)
            if (fields[i] == column) col_idx = static_cast<int>(i);
          if (col_idx < 0)
            throw std::invalid_argument("column '" + column +
                                        "' not found in " + path);
        }
        continue;
      }
      if (!column.empty())
        throw std::invalid_argument(
            "column '" + column + "' requested but the CSV has no header row");
    }
    double value_ms;
    if (col_idx >= static_cast<int>(fields.size()) ||
        !parse_num(fields[static_cast<std::size_t>(col_idx)], value_ms)) {
      bad_rows.push_back(line_no);
      continue;
    }
    sample.values.push_back(value_ms * 1e-3);
  }
  if (!bad_rows.empty()) {
    std::string msg = "unparseable rows in " + path + ":";
    for (auto r : bad_rows) msg += " " + std::to_string(r);
    throw std::runtime_error(msg);
  }
  return sample;
}

void write_fit_report(const std::vector<FitResult>& ranked,
                      const std::vector<double>& sup_norms,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open fit report: " + path);
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& r = ranked[i];
    const std::string prefix = "rank" + std::to_string(i + 1) + ".";
    out << prefix << "family=" << family_name(r.spec.family) << '\n';
    for (std::size_t p = 0; p < r.spec.params.size(); ++p)
      out << prefix << "param" << p << '=' << fmt(r.spec.params[p]) << '\n';
    out << prefix << "logL=" << fmt(r.log_likelihood) << '\n';
    out << prefix << "BIC=" << fmt(r.bic) << '\n';
    out << prefix << "converged=" << (r.converged ? 1 : 0) << '\n';
    if (i < sup_norms.size())
      out << prefix << "cdf_error_sup=" << fmt(sup_norms[i]) << '\n';
  }
}

void write_fit_grids(const EmpiricalSample& data, const DistributionSpec& spec,
                     const std::string& path, std::size_t points) {
  data.validate();
  spec.validate();
  const auto [min_it, max_it] =
      std::minmax_element(data.values.begin(), data.values.end());
  const double span = std::max(*max_it - *min_it, 1e-12);
  const double lo = *min_it - 0.05 * span;
  const double hi = *max_it + 0.05 * span;
  const EmpiricalCdf emp(data);

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open grid file: " + path);
  out << "x_ms,pdf_per_ms,cdf,cdf_empirical,cdf_error\n";
  for (std::size_t i = 0; i < points; ++i) {
    const double x =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    const double cdf = spec.cdf(x);
    const double ecdf = emp(x);
    out << fmt(x * 1e3) << ',' << fmt(spec.pdf(x) * 1e-3) << ',' << fmt(cdf)
        << ',' << fmt(ecdf) << ',' << fmt(std::fabs(ecdf - cdf)) << '\n';
  }
}

}  // namespace vlcsim
