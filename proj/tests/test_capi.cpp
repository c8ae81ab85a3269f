// Exercises the shared-library C surface end to end: states, transforms,
// sampling, measurement, reconstruction and the file emitters.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "wigcs.h"

namespace {

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("library identifies itself") {
  CHECK(std::string(wigcs_version()) == "0.1.0");
  CHECK(std::string(wigcs_status_name(WIGCS_OK)) == "ok");
  CHECK(std::string(wigcs_status_name(WIGCS_ERR_DIVERGED)) == "diverged");
}

TEST_CASE("invalid dimensions are rejected with a message") {
  wigcs_density* rho = nullptr;
  CHECK(wigcs_density_fock(4, 0, &rho) == WIGCS_ERR_DIMENSION);
  CHECK(std::string(wigcs_last_error()).find("odd") != std::string::npos);
  CHECK(rho == nullptr);

  wigcs_matrix* m = nullptr;
  CHECK(wigcs_matrix_full(9, &m) == WIGCS_ERR_DIMENSION);
  CHECK(wigcs_density_fock(3, 0, nullptr) == WIGCS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("vacuum pipeline through the C API") {
  wigcs_density* rho = nullptr;
  REQUIRE(wigcs_density_fock(3, 0, &rho) == WIGCS_OK);
  int d = 0;
  CHECK(wigcs_density_dim(rho, &d) == WIGCS_OK);
  CHECK(d == 3);
  double re = 0, im = 0;
  CHECK(wigcs_density_entry(rho, 0, 0, &re, &im) == WIGCS_OK);
  CHECK(re == 1.0);
  CHECK(im == 0.0);

  wigcs_grid* w = nullptr;
  REQUIRE(wigcs_wigner_from_density(rho, &w) == WIGCS_OK);
  double values[9];
  REQUIRE(wigcs_grid_values(w, values) == WIGCS_OK);
  for (int mu = 0; mu < 3; ++mu) CHECK(values[mu] == doctest::Approx(1.0 / 3));
  for (int i = 3; i < 9; ++i) CHECK(std::abs(values[i]) < 1e-14);

  // grid -> density round trip
  wigcs_density* back = nullptr;
  REQUIRE(wigcs_density_from_wigner(w, &back) == WIGCS_OK);
  CHECK(wigcs_density_entry(back, 0, 0, &re, &im) == WIGCS_OK);
  CHECK(re == doctest::Approx(1.0).epsilon(1e-12));

  wigcs_density_free(back);
  wigcs_grid_free(w);
  wigcs_density_free(rho);
}

TEST_CASE("closed-form coherent grid matches the density route") {
  wigcs_grid* direct = nullptr;
  REQUIRE(wigcs_coherent_wigner(7, 0.9, 0.4, &direct) == WIGCS_OK);
  wigcs_density* rho = nullptr;
  REQUIRE(wigcs_density_coherent(7, 0.9, 0.4, &rho) == WIGCS_OK);
  wigcs_grid* via = nullptr;
  REQUIRE(wigcs_wigner_from_density(rho, &via) == WIGCS_OK);
  double a[49], b[49];
  REQUIRE(wigcs_grid_values(direct, a) == WIGCS_OK);
  REQUIRE(wigcs_grid_values(via, b) == WIGCS_OK);
  for (int i = 0; i < 49; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-8);
  wigcs_grid_free(via);
  wigcs_density_free(rho);
  wigcs_grid_free(direct);
}

TEST_CASE("sampling, measuring and reconstructing a sparse grid") {
  const int d = 7, n = 49;
  double values[n] = {0.0};
  values[10] = 0.8;
  values[30] = -0.5;
  values[44] = 0.3;
  wigcs_grid* w = nullptr;
  REQUIRE(wigcs_grid_create(d, values, &w) == WIGCS_OK);

  wigcs_matrix* full = nullptr;
  REQUIRE(wigcs_matrix_full(d, &full) == WIGCS_OK);
  int rows = 0, cols = 0;
  CHECK(wigcs_matrix_rows(full, &rows) == WIGCS_OK);
  CHECK(wigcs_matrix_cols(full, &cols) == WIGCS_OK);
  CHECK(rows == 56);
  CHECK(cols == 49);

  wigcs_matrix* sub = nullptr;
  REQUIRE(wigcs_matrix_sample(full, "row-random", 40, 5, &sub) == WIGCS_OK);
  CHECK(wigcs_matrix_rows(sub, &rows) == WIGCS_OK);
  CHECK(rows == 40);
  std::vector<int> indices(40);
  CHECK(wigcs_matrix_row_indices(sub, indices.data()) == WIGCS_OK);
  for (int i = 1; i < 40; ++i) CHECK(indices[i] > indices[i - 1]);

  wigcs_measurements* mv = nullptr;
  REQUIRE(wigcs_measure(w, sub, &mv) == WIGCS_OK);
  int count = 0;
  CHECK(wigcs_measurements_count(mv, &count) == WIGCS_OK);
  CHECK(count == 40);

  wigcs_solver_config cfg;
  wigcs_solver_config_init(&cfg);
  wigcs_report* rep = nullptr;
  REQUIRE(wigcs_reconstruct(mv, sub, "pixel", &cfg, &rep) == WIGCS_OK);
  int converged = 0;
  CHECK(wigcs_report_converged(rep, &converged) == WIGCS_OK);
  CHECK(converged == 1);
  long iters = 0;
  CHECK(wigcs_report_iterations(rep, &iters) == WIGCS_OK);
  CHECK(iters > 0);
  double resid = 1.0;
  CHECK(wigcs_report_relative_residual(rep, &resid) == WIGCS_OK);
  CHECK(resid <= 1e-6);

  wigcs_grid* rec = nullptr;
  REQUIRE(wigcs_report_grid(rep, &rec) == WIGCS_OK);
  double rel = 1, mab = 1, jac = 0;
  REQUIRE(wigcs_compare(w, rec, &rel, &mab, &jac) == WIGCS_OK);
  CHECK(rel < 1e-3);
  CHECK(jac == 1.0);

  wigcs_grid_free(rec);
  wigcs_report_free(rep);
  wigcs_measurements_free(mv);
  wigcs_matrix_free(sub);
  wigcs_matrix_free(full);
  wigcs_grid_free(w);
}

TEST_CASE("plan and measurement files replay the same experiment") {
  wigcs_grid* truth = nullptr;
  REQUIRE(wigcs_coherent_wigner(5, 0.8, 0.0, &truth) == WIGCS_OK);
  wigcs_matrix* full = nullptr;
  REQUIRE(wigcs_matrix_full(5, &full) == WIGCS_OK);
  wigcs_matrix* sub = nullptr;
  REQUIRE(wigcs_matrix_sample(full, "family-random", 15, 11, &sub) == WIGCS_OK);
  wigcs_measurements* mv = nullptr;
  REQUIRE(wigcs_measure(truth, sub, &mv) == WIGCS_OK);

  const auto plan_path = tmp_path("wigcs_capi_plan.txt");
  const auto meas_path = tmp_path("wigcs_capi_meas.txt");
  REQUIRE(wigcs_matrix_write_plan(sub, plan_path.c_str()) == WIGCS_OK);
  REQUIRE(wigcs_measurements_write(mv, 5, meas_path.c_str()) == WIGCS_OK);

  wigcs_matrix* replay = nullptr;
  REQUIRE(wigcs_matrix_from_plan_file(plan_path.c_str(), &replay) == WIGCS_OK);
  int rows = 0;
  CHECK(wigcs_matrix_rows(replay, &rows) == WIGCS_OK);
  CHECK(rows == 15);
  std::vector<int> a(15), b(15);
  CHECK(wigcs_matrix_row_indices(sub, a.data()) == WIGCS_OK);
  CHECK(wigcs_matrix_row_indices(replay, b.data()) == WIGCS_OK);
  CHECK(a == b);

  wigcs_measurements* mv2 = nullptr;
  REQUIRE(wigcs_measurements_read(meas_path.c_str(), &mv2) == WIGCS_OK);
  std::vector<double> v1(15), v2(15);
  CHECK(wigcs_measurements_values(mv, v1.data()) == WIGCS_OK);
  CHECK(wigcs_measurements_values(mv2, v2.data()) == WIGCS_OK);
  CHECK(v1 == v2);

  std::remove(plan_path.c_str());
  std::remove(meas_path.c_str());
  wigcs_measurements_free(mv2);
  wigcs_measurements_free(mv);
  wigcs_matrix_free(replay);
  wigcs_matrix_free(sub);
  wigcs_matrix_free(full);
  wigcs_grid_free(truth);
}

TEST_CASE("grid CSV and PGM emitters through the C API") {
  wigcs_density* rho = nullptr;
  REQUIRE(wigcs_density_maximally_mixed(3, &rho) == WIGCS_OK);
  wigcs_grid* w = nullptr;
  REQUIRE(wigcs_wigner_from_density(rho, &w) == WIGCS_OK);

  const auto csv = tmp_path("wigcs_capi_grid.csv");
  REQUIRE(wigcs_grid_write_csv(w, csv.c_str()) == WIGCS_OK);
  wigcs_grid* back = nullptr;
  REQUIRE(wigcs_grid_read_csv(csv.c_str(), &back) == WIGCS_OK);
  double a[9], b[9];
  REQUIRE(wigcs_grid_values(w, a) == WIGCS_OK);
  REQUIRE(wigcs_grid_values(back, b) == WIGCS_OK);
  for (int i = 0; i < 9; ++i) CHECK(a[i] == b[i]);

  const auto pgm = tmp_path("wigcs_capi_grid.pgm");
  REQUIRE(wigcs_grid_write_pgm(w, pgm.c_str()) == WIGCS_OK);
  auto bytes = slurp(pgm);
  CHECK(bytes.substr(0, 3) == "P5\n");

  CHECK(wigcs_grid_write_csv(w, "/nonexistent/dir/x.csv") == WIGCS_ERR_IO);

  std::remove(csv.c_str());
  std::remove(pgm.c_str());
  wigcs_grid_free(back);
  wigcs_grid_free(w);
  wigcs_density_free(rho);
}

TEST_CASE("reports carry state, plan and metrics") {
  wigcs_grid* truth = nullptr;
  REQUIRE(wigcs_coherent_wigner(5, 0.8, 0.1, &truth) == WIGCS_OK);
  wigcs_matrix* full = nullptr;
  REQUIRE(wigcs_matrix_full(5, &full) == WIGCS_OK);
  wigcs_matrix* sub = nullptr;
  REQUIRE(wigcs_matrix_sample(full, "row-random", 20, 3, &sub) == WIGCS_OK);
  wigcs_measurements* mv = nullptr;
  REQUIRE(wigcs_measure(truth, sub, &mv) == WIGCS_OK);
  wigcs_report* rep = nullptr;
  REQUIRE(wigcs_reconstruct(mv, sub, "pixel", nullptr, &rep) == WIGCS_OK);
  REQUIRE(wigcs_report_set_state(rep, "coherent", 0.8, 0.1, 0, 0, 0) == WIGCS_OK);
  CHECK(wigcs_report_set_state(rep, "bogus", 0, 0, 0, 0, 0) == WIGCS_ERR_INVALID_ARGUMENT);
  REQUIRE(wigcs_report_attach_truth(rep, truth) == WIGCS_OK);

  const auto path = tmp_path("wigcs_capi_report.json");
  REQUIRE(wigcs_report_write(rep, path.c_str()) == WIGCS_OK);
  auto text = slurp(path);
  CHECK(text.find("\"kind\": \"coherent\"") != std::string::npos);
  CHECK(text.find("\"count\": 20") != std::string::npos);
  CHECK(text.find("support_jaccard") != std::string::npos);

  std::remove(path.c_str());
  wigcs_report_free(rep);
  wigcs_measurements_free(mv);
  wigcs_matrix_free(sub);
  wigcs_matrix_free(full);
  wigcs_grid_free(truth);
}
