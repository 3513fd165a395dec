#pragma once

#include <istream>
#include <string>

#include "h90/model.hpp"
#include "h90/tower.hpp"

namespace h90 {

/// Parse failure with the offending line and field.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& field, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// Text record, one token group per line, '#' starts a comment:
//
//   h90-model 1
//   p <prime>
//   dimA <d>
//   sigma            followed by d rows of d residues
//   dimB <e>
//   i                followed by d rows of e residues
//   N                followed by e rows of d residues
//   K_a <k>          followed by k basis rows of e residues
//   K_xi <k>         followed by k basis rows of e residues
//   flags a_sum_two_squares=<0|1> xi_is_norm=<0|1>
//   provenance <free text>
//   end
//
// Matrices with zero columns contribute no row lines. The writer emits
// subspace bases in reduced echelon form, so equal models serialize equally.
std::string serialize_model(const ExtensionModel& m);
ExtensionModel parse_model(std::istream& in);
ExtensionModel parse_model(const std::string& text);
ExtensionModel load_model(const std::string& path);
void save_model(const ExtensionModel& m, const std::string& path);

// Tower manifest:
//
//   h90-tower 1
//   backend <descriptor>
//   p <prime>
//   n_max <n>
//   cd <int|inf>
//   b_dims <n_max+2 integers>
//   root_class <residues of A_1>
//   note <text>                 (any number)
//   cup_a <n> <rows> <cols>     followed by row lines, n = 1..n_max+1
//   cup_xi <n> <rows> <cols>    likewise
//   degree <n>                  followed by an embedded h90-model record
//   end-tower
std::string serialize_tower(const DegreeTower& t);
DegreeTower parse_tower(std::istream& in);
DegreeTower parse_tower(const std::string& text);

}  // namespace h90
