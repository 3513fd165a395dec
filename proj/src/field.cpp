#include "h90/field.hpp"

#include <sstream>

namespace h90 {

bool is_supported_prime(int p) noexcept { return p == 2 || p == 3 || p == 5 || p == 7; }

Field::Field(int p) : p_(p) {
  if (!is_supported_prime(p))
    throw Error("unsupported field characteristic " + std::to_string(p) + " (expected 2, 3, 5 or 7)");
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) inverse_[a] = static_cast<Elem>(b);
}

Elem Field::inv(Elem a) const {
  if (a % p_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
  return inverse_[a % p_];
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << int(v[k]);
  os << ')';
  return os.str();
}

}  // namespace h90
