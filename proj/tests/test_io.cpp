#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "vlcsim/scenario_io.hpp"

using namespace vlcsim;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/vlcsim_test_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("scenario JSON roundtrip is semantically identical") {
  const Scenario original = paper_default_scenario();
  const Scenario reloaded =
      scenario_from_json_text(scenario_to_json_text(original));
  CHECK(reloaded.seed == original.seed);
  CHECK(reloaded.duration_s == original.duration_s);
  REQUIRE(reloaded.lights.size() == 1);
  CHECK(reloaded.lights[0].id == original.lights[0].id);
  CHECK(reloaded.lights[0].tx.half_power_semiangle_rad ==
        doctest::Approx(original.lights[0].tx.half_power_semiangle_rad));
  REQUIRE(reloaded.lights[0].pipeline.segments.size() == 3);
  const auto& seg = std::get<StochasticSegment>(
      reloaded.lights[0].pipeline.segments[0].model);
  CHECK(seg.spec.params[0] == doctest::Approx(0.0088));
  CHECK(seg.trunc_hi_s == doctest::Approx(29e-3));
  CHECK(reloaded.vehicles[0].rx.area_m2 ==
        doctest::Approx(original.vehicles[0].rx.area_m2));
  CHECK(reloaded.sources[0].payload == original.sources[0].payload);

  // And the semantics match: same seed, same trace.
  const auto a = run(original, 3, 25.0);
  const auto b = run(reloaded, 3, 25.0);
  REQUIRE(a.trace.size() == b.trace.size());
  // Millisecond-keyed JSON perturbs parameters by an ulp, so totals are
  // equal to rounding, not bitwise.
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    CHECK(a.trace[i].total_s ==
          doctest::Approx(b.trace[i].total_s).epsilon(1e-9));
}

TEST_CASE("trace files are byte identical for identical runs") {
  const Scenario sc = paper_default_scenario();
  const auto result1 = run(sc, 9, 60.0);
  const auto result2 = run(sc, 9, 60.0);
  write_trace_csv(result1, "/tmp/vlcsim_trace_a.csv");
  write_trace_csv(result2, "/tmp/vlcsim_trace_b.csv");
  CHECK(slurp("/tmp/vlcsim_trace_a.csv") == slurp("/tmp/vlcsim_trace_b.csv"));
  std::remove("/tmp/vlcsim_trace_a.csv");
  std::remove("/tmp/vlcsim_trace_b.csv");
}

TEST_CASE("latency CSV ingestion, headerless single column") {
  TempFile f("plain.csv", "12.5\n9.25\n11\n");
  const auto sample = read_latency_csv(f.path);
  REQUIRE(sample.n() == 3);
  CHECK(sample.values[0] == doctest::Approx(12.5e-3));
  CHECK(sample.values[2] == doctest::Approx(11e-3));
}

TEST_CASE("latency CSV ingestion, named column") {
  TempFile f("named.csv",
             "msg_id,total_ms,ber\n1,12.5,0\n2,9.25,0\n3,11,0\n");
  const auto sample = read_latency_csv(f.path, "total_ms");
  REQUIRE(sample.n() == 3);
  CHECK(sample.values[1] == doctest::Approx(9.25e-3));
  CHECK_THROWS_WITH_AS(read_latency_csv(f.path, "nope"),
                       doctest::Contains("not found"), std::invalid_argument);
}

TEST_CASE("latency CSV reports every bad row") {
  TempFile f("bad.csv", "10\nbogus\n12\nalso_bad\n");
  CHECK_THROWS_WITH_AS(read_latency_csv(f.path),
                       doctest::Contains("2 4"), std::runtime_error);
}

TEST_CASE("fit report is a flat key-value record") {
  FitResult r;
  r.spec = {Family::kNormal, {0.0119, 0.001}};
  r.log_likelihood = 123.4;
  r.bic = -231.3;
  r.converged = true;
  write_fit_report({r}, {0.05}, "/tmp/vlcsim_fit_report.txt");
  const auto text = slurp("/tmp/vlcsim_fit_report.txt");
  CHECK(text.find("rank1.family=normal") != std::string::npos);
  CHECK(text.find("rank1.BIC=") != std::string::npos);
  CHECK(text.find("rank1.converged=1") != std::string::npos);
  CHECK(text.find("rank1.cdf_error_sup=0.05") != std::string::npos);
  std::remove("/tmp/vlcsim_fit_report.txt");
}

TEST_CASE("unknown segment type is rejected") {
  CHECK_THROWS_WITH_AS(
      scenario_from_json_text(R"({"duration_s": 1, "lights": [{
        "id": "l", "position_m": [0,0],
        "tx": {"power_w": 1, "half_power_semiangle_deg": 60},
        "pipeline": [{"name": "x", "type": "quantum"}]}]})"),
      doctest::Contains("unknown segment type"), std::invalid_argument);
}
