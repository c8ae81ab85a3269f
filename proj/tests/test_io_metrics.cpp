#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/error.hpp"
#include "core/io_metrics.hpp"
#include "core/phase_space.hpp"
#include "core/solver.hpp"
#include "core/states.hpp"
#include "core/tomography.hpp"

using namespace wigcs;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

#ifdef WIGCS_GOLDEN_DIR
std::string golden(const std::string& name) {
  return std::string(WIGCS_GOLDEN_DIR) + "/" + name;
}
#endif

}  // namespace

TEST_CASE("identical grids compare as zero error, full overlap") {
  auto w = wigner_from_density(random_density(Dimension(5), 4, 3));
  auto gm = compare(w, w);
  CHECK(gm.relative_l2 == 0.0);
  CHECK(gm.max_abs == 0.0);
  CHECK(gm.support_jaccard == 1.0);
}

TEST_CASE("doubling the maximally mixed grid gives relative error one") {
  Dimension d3(3);
  auto w = wigner_from_density(maximally_mixed(d3));
  auto w2 = DiscreteWigner(d3, 2.0 * w.values());
  auto gm = compare(w, w2);
  CHECK(gm.relative_l2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gm.max_abs == doctest::Approx(1.0 / 9).epsilon(1e-15));
  CHECK(gm.support_jaccard == 1.0);
}

TEST_CASE("support overlap counts cells above the relative threshold") {
  Dimension d3(3);
  RMatrix a = RMatrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 0.5;
  RMatrix b = RMatrix::Zero(3, 3);
  b(0, 0) = 1.0;
  b(2, 2) = 0.5;
  auto gm = compare(DiscreteWigner(d3, a), DiscreteWigner(d3, b));
  CHECK(gm.support_jaccard == doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("compare rejects mismatched dimensions") {
  auto w3 = wigner_from_density(maximally_mixed(Dimension(3)));
  auto w5 = wigner_from_density(maximally_mixed(Dimension(5)));
  CHECK_THROWS_AS(compare(w3, w5), Error);
}

TEST_CASE("grid CSV round trip preserves every bit") {
  auto w = wigner_from_density(random_density(Dimension(7), 8, 7));
  const auto path = tmp_path("wigcs_grid_rt.csv");
  write_grid_csv(w, path);
  auto back = read_grid_csv(path);
  CHECK((back.values() - w.values()).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("emitters are deterministic byte for byte") {
  auto w = coherent_wigner_closed_form({Dimension(5), 0.8, 0.3});
  const auto p1 = tmp_path("wigcs_det1.csv");
  const auto p2 = tmp_path("wigcs_det2.csv");
  write_grid_csv(w, p1);
  write_grid_csv(w, p2);
  CHECK(slurp(p1) == slurp(p2));
  const auto g1 = tmp_path("wigcs_det1.pgm");
  const auto g2 = tmp_path("wigcs_det2.pgm");
  write_grid_pgm(w, g1);
  write_grid_pgm(w, g2);
  CHECK(slurp(g1) == slurp(g2));
  for (const auto& p : {p1, p2, g1, g2}) std::remove(p.c_str());
}

TEST_CASE("PGM rendering: maximum maps to black, constant grids to mid-gray") {
  Dimension d3(3);
  const auto path = tmp_path("wigcs_vac.pgm");
  write_grid_pgm(wigner_from_density(fock_density(d3, 0)), path);
  auto bytes = slurp(path);
  const std::string header = "P5\n3 3\n255\n";
  REQUIRE(bytes.size() == header.size() + 9);
  CHECK(bytes.substr(0, header.size()) == header);
  for (int i = 0; i < 3; ++i) CHECK(static_cast<unsigned char>(bytes[header.size() + i]) == 0);
  for (int i = 3; i < 9; ++i) CHECK(static_cast<unsigned char>(bytes[header.size() + i]) == 255);
  std::remove(path.c_str());

  const auto flat_path = tmp_path("wigcs_flat.pgm");
  write_grid_pgm(wigner_from_density(maximally_mixed(d3)), flat_path);
  auto flat = slurp(flat_path);
  for (int i = 0; i < 9; ++i)
    CHECK(static_cast<unsigned char>(flat[header.size() + i]) == 128);
  std::remove(flat_path.c_str());
}

#ifdef WIGCS_GOLDEN_DIR
TEST_CASE("golden files pin the emitter formats") {
  Dimension d3(3);
  auto vac = wigner_from_density(fock_density(d3, 0));
  const auto csv = tmp_path("wigcs_golden.csv");
  write_grid_csv(vac, csv);
  CHECK(slurp(csv) == slurp(golden("vacuum_d3.csv")));
  std::remove(csv.c_str());

  const auto pgm = tmp_path("wigcs_golden.pgm");
  write_grid_pgm(vac, pgm);
  CHECK(slurp(pgm) == slurp(golden("vacuum_d3.pgm")));
  std::remove(pgm.c_str());

  auto full = build_full_matrix(d3);
  auto sub = sample_rows(full, {SamplingMode::RowRandom, 7, 42});
  const auto plan = tmp_path("wigcs_golden_plan.txt");
  write_plan(sub.plan(), sub.row_indices(), 3, plan);
  CHECK(slurp(plan) == slurp(golden("plan_d3_rows7_seed42.txt")));
  std::remove(plan.c_str());
}
#endif

TEST_CASE("plan files round trip") {
  auto full = build_full_matrix(Dimension(19));
  auto sub = sample_rows(full, {SamplingMode::RowRandom, 285, 7});
  const auto path = tmp_path("wigcs_plan.txt");
  write_plan(sub.plan(), sub.row_indices(), 19, path);
  auto loaded = read_plan(path);
  CHECK(loaded.d == 19);
  REQUIRE(loaded.plan.has_value());
  CHECK(loaded.plan->mode == SamplingMode::RowRandom);
  CHECK(loaded.plan->count == 285);
  CHECK(loaded.plan->seed == 7);
  CHECK(loaded.rows == sub.row_indices());
  std::remove(path.c_str());
}

TEST_CASE("measurement files round trip") {
  Dimension d5(5);
  auto full = build_full_matrix(d5);
  auto sub = sample_rows(full, {SamplingMode::FamilyRandom, 10, 9});
  auto y = measure(wigner_from_density(random_density(d5, 12, 5)), sub);
  const auto path = tmp_path("wigcs_meas.txt");
  write_measurements(y, 5, path);
  auto loaded = read_measurements(path);
  CHECK(loaded.d == 5);
  CHECK(loaded.mv.row_indices == y.row_indices);
  CHECK((loaded.mv.values - y.values).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("reports embed the plan and reproduce it") {
  Dimension d5(5);
  auto full = build_full_matrix(d5);
  auto sub = sample_rows(full, {SamplingMode::RowRandom, 17, 5});
  auto truth = wigner_from_density(coherent_density({d5, 0.8, 0.0}));
  auto y = measure(truth, sub);
  auto rep = reconstruct(y, sub, SparseBasis(SparseBasis::Kind::Pixel, 25));

  StateSpec state;
  state.kind = "coherent";
  state.amplitude = 0.8;
  state.phase = 0.0;
  auto gm = compare(truth, rep.w_hat);

  const auto path = tmp_path("wigcs_report.json");
  write_report(rep, state, gm, path);
  const auto again = tmp_path("wigcs_report2.json");
  write_report(rep, state, gm, again);
  CHECK(slurp(path) == slurp(again));

  auto loaded = read_plan_from_report(path);
  CHECK(loaded.d == 5);
  REQUIRE(loaded.plan.has_value());
  CHECK(loaded.plan->count == 17);
  CHECK(loaded.plan->seed == 5);
  CHECK(loaded.rows == sub.row_indices());

  auto text = slurp(path);
  CHECK(text.find("\"count\": 17") != std::string::npos);
  CHECK(text.find("\"basis\": \"pixel\"") != std::string::npos);
  CHECK(text.find("relative_l2") != std::string::npos);
  std::remove(path.c_str());
  std::remove(again.c_str());
}

TEST_CASE("metrics files") {
  GridMetrics gm{0.25, 0.01, 0.75};
  const auto path = tmp_path("wigcs_metrics.json");
  write_metrics(gm, path);
  auto text = slurp(path);
  CHECK(text.find("0.25") != std::string::npos);
  CHECK(text.find("0.75") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("missing files surface as IO errors with the path") {
  try {
    read_grid_csv("/nonexistent/dir/grid.csv");
    FAIL("expected an IO error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
    CHECK(std::string(e.what()).find("/nonexistent/dir/grid.csv") != std::string::npos);
  }
}

TEST_CASE("mode and basis names round trip") {
  CHECK(parse_mode(to_string(SamplingMode::RowRandom)) == SamplingMode::RowRandom);
  CHECK(parse_mode(to_string(SamplingMode::FamilyRandom)) == SamplingMode::FamilyRandom);
  CHECK_THROWS_AS(parse_mode("bogus"), Error);
  CHECK(parse_basis("pixel") == SparseBasis::Kind::Pixel);
  CHECK(parse_basis("cosine") == SparseBasis::Kind::Cosine);
  CHECK_THROWS_AS(parse_basis("bogus"), Error);
}
