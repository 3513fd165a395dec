#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace h90::cli {

struct Outcome {
  TheoremReport report;
  Kind kind = Kind::check;
};

/// Suite names: h90, criteria, summand, hs, lemma, all.
bool is_suite(const std::string& name);

/// Runs the checkers of `suite` on one model. With `verdicts_observed`, the
/// plain h90/criterion/summand verdicts are observations and only the
/// equivalences between them count as checks.
std::vector<Outcome> run_model_suite(const ExtensionModel& m, const std::string& suite,
                                     bool verdicts_observed);

/// Exhaustive oracles against the fast procedures on one model. Throws
/// h90::Error past the enumeration bounds.
std::vector<Outcome> run_oracles(const ExtensionModel& m);

}  // namespace h90::cli
