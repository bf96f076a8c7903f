#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxkit/coxeter.hpp"

namespace coxkit {

struct CheckRecord {
  std::string name;
  std::string system;
  std::string params;
  bool pass = true;
  bool skipped = false;
  std::string witness;  // first counterexample, or the reason for skipping
  std::size_t cases = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  double wall_seconds = 0;  // not serialized

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool ok() const { return failed() == 0; }
};

struct VerifyOptions {
  std::string label = "system";  // how the system is named in records
  std::size_t radius = 4;        // ball radius standing in for infinite groups
  std::size_t cutoff = 8;        // witness search radius
  unsigned kmax = 8;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::size_t random_pairs = 100;
  std::size_t max_syllables = 3;
  int max_abs_exp = 2;
  std::string t = "2";
};

/// Suite names accepted by run_suite, in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws InvalidArgument for unknown names.
VerificationReport run_suite(const CoxeterSystem& system, const std::string& suite, const VerifyOptions& options);

std::string report_text(const VerificationReport& report);
std::string report_json(const VerificationReport& report);

}  // namespace coxkit
