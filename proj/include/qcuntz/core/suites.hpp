#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcuntz/core/errors.hpp"

namespace qcuntz {

struct SuiteConfig {
  int n = 2, m = 2;
  int N = 4, M = 4, L = 5;
  std::complex<double> q0{std::cos(0.6 * 3.14159265358979323846),
                          std::sin(0.6 * 3.14159265358979323846)};  // e^{2 pi i 0.3}
  std::optional<Eigen::MatrixXcd> theta;  // multiparameter values, n x m
  double tol = 1e-10;
  uint64_t seed = 7;
  int oracle_samples = 200;
  int confluence_samples = 500;
  int witness_samples = 20;
};

struct SuiteCheck {
  std::string id;
  std::string anchor;  // the identity or statement being verified
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  SuiteConfig config;
  std::vector<SuiteCheck> checks;
  int failures() const;
};

/// Known suite names: relations, untwist, rieffel, ideals, expectations,
/// witness, ktable, wick, all.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

std::vector<std::string> suite_names();

/// JSON with the schema
/// {"suite": str, "config": {...}, "checks": [{"id","anchor","residual","tol","pass"}]}
/// (checks sorted by id; byte-identical for identical config and seed).
std::string suite_report_json(const SuiteResult& result);

/// Parses a config from JSON (all fields optional).
SuiteConfig suite_config_from_json(const std::string& text);

}  // namespace qcuntz
