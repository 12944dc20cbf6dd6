#pragma once

#include <string>
#include <vector>

#include "cellkit/kostant.hpp"

namespace cellkit {

struct SuiteCheck {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::string normalization = "soergel";
  std::vector<SuiteCheck> checks;
  double wall_ms = 0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct SuiteOptions {
  int jobs = 1;
  bool paranoid = false;
  std::string cache_path;  // rank-7 cache file for the s7 suite
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace cellkit
