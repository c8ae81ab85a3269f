#include "core/io_metrics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"

namespace wigcs {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path, std::ios_base::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "' for reading");
  return in;
}

void check_write(const std::ostream& out, const std::string& path) {
  if (!out) fail(ErrorCode::Io, "write to '" + path + "' failed");
}

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  fail(ErrorCode::Io, "malformed file '" + path + "': " + what);
}

nlohmann::json plan_to_json(const std::optional<SensingPlan>& plan, const std::vector<int>& rows) {
  nlohmann::json j;
  j["mode"] = plan ? to_string(plan->mode) : "explicit";
  j["count"] = static_cast<int>(rows.size());
  j["seed"] = plan ? plan->seed : 0;
  j["rows"] = rows;
  return j;
}

}  // namespace

GridMetrics compare(const DiscreteWigner& w_true, const DiscreteWigner& w_hat) {
  if (!(w_true.dim() == w_hat.dim())) fail(ErrorCode::Dimension, "compare: dimension mismatch");
  const RMatrix diff = w_hat.values() - w_true.values();
  GridMetrics gm;
  const double denom = w_true.values().norm();
  const double dn = diff.norm();
  gm.relative_l2 = denom > 0.0 ? dn / denom : dn;
  gm.max_abs = diff.cwiseAbs().maxCoeff();

  const double eps = 1e-6 * w_true.values().cwiseAbs().maxCoeff();
  int inter = 0;
  int uni = 0;
  const int d = w_true.dim().value();
  for (int m = 0; m < d; ++m)
    for (int mu = 0; mu < d; ++mu) {
      const bool a = std::abs(w_true(m, mu)) > eps;
      const bool b = std::abs(w_hat(m, mu)) > eps;
      inter += (a && b) ? 1 : 0;
      uni += (a || b) ? 1 : 0;
    }
  gm.support_jaccard = uni > 0 ? static_cast<double>(inter) / uni : 1.0;
  return gm;
}

void write_grid_csv(const DiscreteWigner& w, const std::string& path) {
  const int d = w.dim().value();
  auto out = open_out(path);
  out << d << "\n";
  for (int m = 0; m < d; ++m) {
    for (int mu = 0; mu < d; ++mu) {
      if (mu) out << ",";
      out << fmt17(w(m, mu));
    }
    out << "\n";
  }
  check_write(out, path);
}

DiscreteWigner read_grid_csv(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) parse_fail(path, "missing dimension line");
  int d = 0;
  try {
    d = std::stoi(line);
  } catch (const std::exception&) {
    parse_fail(path, "bad dimension line '" + line + "'");
  }
  Dimension dim(d);
  RMatrix values(d, d);
  for (int m = 0; m < d; ++m) {
    if (!std::getline(in, line)) parse_fail(path, "missing grid row " + std::to_string(m));
    std::stringstream row(line);
    std::string cell;
    for (int mu = 0; mu < d; ++mu) {
      if (!std::getline(row, cell, ',')) parse_fail(path, "short grid row " + std::to_string(m));
      try {
        values(m, mu) = std::stod(cell);
      } catch (const std::exception&) {
        parse_fail(path, "bad value '" + cell + "'");
      }
    }
  }
  return DiscreteWigner(dim, std::move(values));
}

void write_grid_pgm(const DiscreteWigner& w, const std::string& path) {
  const int d = w.dim().value();
  const double lo = w.values().minCoeff();
  const double hi = w.values().maxCoeff();
  auto out = open_out(path, std::ios::out | std::ios::binary);
  out << "P5\n" << d << " " << d << "\n255\n";
  for (int m = 0; m < d; ++m)
    for (int mu = 0; mu < d; ++mu) {
      long pixel = 128;
      if (hi > lo) pixel = std::lround(255.0 * (hi - w(m, mu)) / (hi - lo));
      pixel = std::max(0L, std::min(255L, pixel));
      out.put(static_cast<char>(static_cast<unsigned char>(pixel)));
    }
  check_write(out, path);
}

void write_plan(const std::optional<SensingPlan>& plan, const std::vector<int>& rows, int d,
                const std::string& path) {
  auto out = open_out(path);
  out << "wigcs-plan v1\n";
  out << "mode " << (plan ? to_string(plan->mode) : "explicit") << "\n";
  out << "count " << rows.size() << "\n";
  out << "seed " << (plan ? plan->seed : 0) << "\n";
  out << "d " << d << "\n";
  out << "rows";
  for (int r : rows) out << " " << r;
  out << "\n";
  check_write(out, path);
}

LoadedPlan read_plan(const std::string& path) {
  auto in = open_in(path);
  std::string magic;
  std::getline(in, magic);
  if (magic != "wigcs-plan v1") parse_fail(path, "bad header '" + magic + "'");
  LoadedPlan loaded;
  std::string mode_text;
  int count = 0;
  std::uint64_t seed = 0;
  std::string key;
  in >> key >> mode_text;
  if (key != "mode") parse_fail(path, "expected mode");
  in >> key >> count;
  if (key != "count" || !in) parse_fail(path, "expected count");
  in >> key >> seed;
  if (key != "seed" || !in) parse_fail(path, "expected seed");
  in >> key >> loaded.d;
  if (key != "d" || !in) parse_fail(path, "expected d");
  in >> key;
  if (key != "rows") parse_fail(path, "expected rows");
  loaded.rows.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (!(in >> loaded.rows[static_cast<std::size_t>(i)])) parse_fail(path, "short row list");
  }
  if (mode_text != "explicit") loaded.plan = SensingPlan{parse_mode(mode_text), count, seed};
  return loaded;
}

void write_measurements(const MeasurementVector& mv, int d, const std::string& path) {
  auto out = open_out(path);
  out << "wigcs-measurements v1\n";
  out << "d " << d << "\n";
  out << "count " << mv.row_indices.size() << "\n";
  for (std::size_t i = 0; i < mv.row_indices.size(); ++i)
    out << mv.row_indices[i] << " " << fmt17(mv.values(static_cast<Eigen::Index>(i))) << "\n";
  check_write(out, path);
}

LoadedMeasurements read_measurements(const std::string& path) {
  auto in = open_in(path);
  std::string magic;
  std::getline(in, magic);
  if (magic != "wigcs-measurements v1") parse_fail(path, "bad header '" + magic + "'");
  LoadedMeasurements loaded;
  std::string key;
  int count = 0;
  in >> key >> loaded.d;
  if (key != "d" || !in) parse_fail(path, "expected d");
  in >> key >> count;
  if (key != "count" || !in) parse_fail(path, "expected count");
  loaded.mv.row_indices.resize(static_cast<std::size_t>(count));
  loaded.mv.values.resize(count);
  for (int i = 0; i < count; ++i) {
    if (!(in >> loaded.mv.row_indices[static_cast<std::size_t>(i)] >> loaded.mv.values(i)))
      parse_fail(path, "short measurement list");
  }
  return loaded;
}

void write_report(const ReconstructionReport& report, const std::optional<StateSpec>& state,
                  const std::optional<GridMetrics>& metrics, const std::string& path) {
  nlohmann::json j;
  j["format"] = "wigcs-report v1";
  j["d"] = report.w_hat.dim().value();
  if (state) {
    nlohmann::json s;
    s["kind"] = state->kind;
    if (state->kind == "coherent") {
      s["amplitude"] = state->amplitude;
      s["phase"] = state->phase;
    } else if (state->kind == "fock") {
      s["level"] = state->level;
    } else if (state->kind == "random") {
      s["seed"] = state->seed;
      s["rank"] = state->rank;
    }
    j["state"] = s;
  }
  j["plan"] = plan_to_json(report.plan, report.row_indices);
  j["basis"] = to_string(report.basis);
  j["solver"] = {{"mu_threshold", report.config.mu_threshold},
                 {"delta_step", report.config.delta_step},
                 {"max_iters", report.config.max_iters},
                 {"residual_tol", report.config.residual_tol}};
  j["result"] = {{"iterations", report.iterations},
                 {"relative_residual", report.relative_residual},
                 {"status", report.status == SolveStatus::Converged ? "converged" : "max-iters"}};
  if (metrics)
    j["metrics"] = {{"relative_l2", metrics->relative_l2},
                    {"max_abs", metrics->max_abs},
                    {"support_jaccard", metrics->support_jaccard}};
  auto out = open_out(path);
  out << j.dump(2) << "\n";
  check_write(out, path);
}

LoadedPlan read_plan_from_report(const std::string& path) {
  auto in = open_in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    parse_fail(path, e.what());
  }
  LoadedPlan loaded;
  try {
    loaded.d = j.at("d").get<int>();
    const auto& p = j.at("plan");
    loaded.rows = p.at("rows").get<std::vector<int>>();
    const std::string mode_text = p.at("mode").get<std::string>();
    if (mode_text != "explicit")
      loaded.plan = SensingPlan{parse_mode(mode_text), p.at("count").get<int>(),
                                p.at("seed").get<std::uint64_t>()};
  } catch (const std::exception& e) {
    parse_fail(path, e.what());
  }
  return loaded;
}

void write_metrics(const GridMetrics& metrics, const std::string& path) {
  nlohmann::json j = {{"relative_l2", metrics.relative_l2},
                      {"max_abs", metrics.max_abs},
                      {"support_jaccard", metrics.support_jaccard}};
  auto out = open_out(path);
  out << j.dump(2) << "\n";
  check_write(out, path);
}

std::string to_string(SamplingMode mode) {
  return mode == SamplingMode::RowRandom ? "row-random" : "family-random";
}

SamplingMode parse_mode(const std::string& text) {
  if (text == "row-random") return SamplingMode::RowRandom;
  if (text == "family-random") return SamplingMode::FamilyRandom;
  fail(ErrorCode::InvalidArgument, "unknown sampling mode '" + text + "'");
}

std::string to_string(SparseBasis::Kind kind) {
  return kind == SparseBasis::Kind::Pixel ? "pixel" : "cosine";
}

SparseBasis::Kind parse_basis(const std::string& text) {
  if (text == "pixel") return SparseBasis::Kind::Pixel;
  if (text == "cosine") return SparseBasis::Kind::Cosine;
  fail(ErrorCode::InvalidArgument, "unknown basis '" + text + "'");
}

}  // namespace wigcs
