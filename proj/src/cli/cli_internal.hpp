#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace congest::cli {

struct Failure {
  std::string instance;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json got;
};

struct VerifyReport {
  explicit VerifyReport(std::string name) : suite(std::move(name)) {}

  std::string suite;
  std::uint64_t instances = 0;
  std::vector<Failure> failures;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  void check(bool ok, std::string instance, nlohmann::ordered_json expected,
             nlohmann::ordered_json got) {
    if (!ok) failures.push_back({std::move(instance), std::move(expected), std::move(got)});
  }
  nlohmann::ordered_json to_json(const std::vector<std::string>& invocation) const;
};

struct VerifyOptions {
  std::string suite;
  std::uint64_t trials = 0;  // 0 picks the suite default
  std::uint64_t seed = 0;
  std::uint32_t n = 0;       // 0 picks the suite default
  std::pair<std::uint32_t, std::uint32_t> n_range{0, 0};
  std::uint32_t ell = 1;
  double eps = 0;            // 0 means "sweep" for thresholds, 0.1 elsewhere
};

/// "a:b" with a <= b; throws InputError otherwise.
std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text);

VerifyReport verify_suite(const VerifyOptions& opts);

}  // namespace congest::cli
