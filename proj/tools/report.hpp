#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "h90/model.hpp"

namespace h90::cli {

/// A check failure is a theorem/consistency failure (exit 1); an
/// observation is recorded data, such as a per-degree h90 verdict.
enum class Kind { check, observation };

struct Record {
  TheoremReport report;
  Kind kind = Kind::check;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::string profile;
};

/// Pass/fail counts of one property over a trial sweep.
struct Aggregate {
  std::string property;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::optional<std::string> first_failure;  // detail of the first failing trial
  std::optional<std::string> counterexample;  // dumped model path
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(TheoremReport r, const ExtensionModel* m = nullptr, Kind kind = Kind::check);
  void skip(std::string checker, std::string reason, const ExtensionModel* m = nullptr,
            std::optional<int> degree = std::nullopt);
  Aggregate& aggregate(const std::string& property);
  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool any_check_failed() const;
  const std::vector<Record>& records() const noexcept { return records_; }
  const std::vector<Aggregate>& aggregates() const noexcept { return aggregates_; }

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  std::vector<Record> records_;
  std::vector<Aggregate> aggregates_;
  std::vector<std::string> notes_;
};

}  // namespace h90::cli
