#pragma once

#include "hss/family.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hss {

struct SuiteConfig {
  std::string family = "all";  // "all" or a family tag name
  std::optional<std::size_t> p, q, n;
  QuadricForm form = QuadricForm::Split;
  std::vector<std::string> suites;  // empty = every suite
  std::size_t trials = 100;
  std::uint64_t seed = 1;
};

struct FailureEntry {
  std::string suite;
  std::string family;
  std::uint64_t seed = 0;  // reproducing seed
  std::string detail;
  nlohmann::json reproducer;  // minimal input reproducing the failure
};

struct SuiteResult {
  std::string name;
  std::string family;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<FailureEntry> failures;
  double elapsed_ms = 0.0;
};

struct Report {
  std::vector<SuiteResult> results;
  bool pass() const;
  // Deterministic body (sorted keys); elapsed fields included only on request.
  nlohmann::json to_json(bool include_elapsed = false) const;
  std::string to_text() const;
};

// Known suite names: roots, dimensions, bb, secant, inverse, plucker, limit,
// inversion, example, subdiagram. Throws std::invalid_argument on an unknown
// name or selector.
Report run_suite(const SuiteConfig& cfg);

std::vector<std::string> known_suites();

// Families selected by cfg (the standard parameter sweep when no explicit
// parameters are given).
std::vector<HSSFamily> sweep_families(const SuiteConfig& cfg);

// Closed-form dimension tables (independent of the root-counting engine).
std::size_t closed_form_infinity_dim(const HSSFamily& f, std::size_t k);
std::size_t closed_form_balanced_dim(const HSSFamily& f, std::size_t k);
std::size_t closed_form_char_dim(const HSSFamily& f, std::size_t k);

// The closed-form Table fixture for the standard sweep (what the checked-in
// data file contains).
nlohmann::json generate_table_fixture();

}  // namespace hss
