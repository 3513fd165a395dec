#pragma once

#include <cstdint>
#include <string>

#include "h90/tower.hpp"

namespace h90 {

/// E = F_{q^p} over F = F_q. Requires p | q - 1 and q^p <= 10^7.
/// Degree 1 is computed by discrete logarithms; degrees >= 2 are zero.
DegreeTower ff_build_tower(int p, std::int64_t q, int n_max);

/// E = C over F = R, p = 2, a = -1. B_n = F_2, A_n = 0.
DegreeTower real_build_tower(int n_max);

/// E = Q_ell(sqrt a) over Q_ell, p = 2, ell odd prime <= 97,
/// a_choice in {"u", "ell", "u*ell"} with u the least non-residue, precision k >= 6.
/// Degrees 1 and 2 are computed from square classes and symbols; degrees >= 3 are zero.
DegreeTower local_build_tower(std::int64_t ell, const std::string& a_choice, int n_max,
                              int precision);

}  // namespace h90
