#include "h90/synthgen.hpp"

#include <algorithm>
#include <set>

#include "h90/subspace.hpp"

namespace h90 {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  std::uint64_t z = seed + (trial + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Vec Rng::vec(const Field& f, std::size_t n) {
  Vec v(n);
  for (auto& e : v) e = elem(f);
  return v;
}

Matrix Rng::matrix(const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, elem(f));
  return m;
}

Matrix Rng::invertible(const Field& f, std::size_t n) {
  for (;;) {
    Matrix m = matrix(f, n, n);
    if (rank(m) == n) return m;
  }
}

namespace {

struct Layout {
  std::vector<int> sizes;
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;
};

Layout layout(const std::vector<int>& sizes) {
  Layout l;
  l.sizes = sizes;
  for (int s : sizes) {
    l.offsets.push_back(l.dim);
    l.dim += static_cast<std::size_t>(s);
  }
  return l;
}

Vec unit(std::size_t n, std::size_t k) {
  Vec v(n, 0);
  v[k] = 1;
  return v;
}

void axpy(const Field& f, Vec& dst, const Vec& src, Elem c) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = f.add(dst[k], f.mul(c, src[k]));
}

/// Shared skeleton for both modes. A carries the blocks of `sizes`; B is
/// K_a (dim k) + n_j (V_p blocks) + c_j (covered socles of middle blocks) + d_t (I1).
/// N maps V_p generators to n_j + K_a, the remaining generators onto K_a with
/// kernel I1, and kills everything else.
struct Skeleton {
  CyclicModule a;
  std::size_t b_dim;
  Matrix i;
  Matrix n;
  Subspace k_a;
  std::vector<Vec> c_vectors;   // basis vectors c_j of B
  std::vector<Vec> nk_vectors;  // basis vectors n_j and K_a of B
};


Skeleton build_skeleton(const Field& f, const std::vector<int>& sizes,
                        const std::vector<bool>& cover_middle, std::size_t r1, std::size_t extra,
                        Rng& rng) {
  const int p = f.p();
  const Layout l = layout(sizes);
  std::vector<std::size_t> ones, middles, frees;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    if (sizes[b] == 1)
      ones.push_back(b);
    else if (sizes[b] == p)
      frees.push_back(b);
    else
      middles.push_back(b);
  }
  const std::size_t m1 = ones.size();
  if (r1 > m1) throw Error("i1_rank exceeds the number of V_1 blocks");
  std::vector<std::size_t> covered;
  for (std::size_t k = 0; k < middles.size(); ++k)
    if (cover_middle[k]) covered.push_back(middles[k]);

  const std::size_t ka_dim = m1 - r1 + middles.size() + extra;
  const std::size_t o_n = ka_dim, o_c = o_n + frees.size(), o_d = o_c + covered.size();
  const std::size_t b_dim = o_d + r1;
  const std::size_t d = l.dim;

  auto gen = [&](std::size_t b) { return l.offsets[b]; };
  auto socle = [&](std::size_t b) { return l.offsets[b] + static_cast<std::size_t>(l.sizes[b]) - 1; };
  auto socle_mix = [&]() {
    Vec v(d, 0);
    for (auto b : frees) v[socle(b)] = rng.elem(f);
    return v;
  };

  // Basis change R on span(V_1 generators): its first r1 columns span I1.
  Matrix r = rng.invertible(f, m1);
  auto r_col = [&](std::size_t c) {
    Vec v(d, 0);
    for (std::size_t k = 0; k < m1; ++k) v[gen(ones[k])] = r.at(k, c);
    return v;
  };

  Matrix i(f, d, b_dim);
  auto set_col = [&](Matrix& m, std::size_t c, const Vec& v) {
    for (std::size_t k = 0; k < v.size(); ++k) m.set(k, c, v[k]);
  };
  for (std::size_t j = 0; j < frees.size(); ++j) set_col(i, o_n + j, unit(d, socle(frees[j])));
  for (std::size_t j = 0; j < covered.size(); ++j) {
    Vec v = socle_mix();
    v[socle(covered[j])] = f.add(v[socle(covered[j])], 1);
    set_col(i, o_c + j, v);
  }
  for (std::size_t t = 0; t < r1; ++t) {
    Vec v = socle_mix();
    axpy(f, v, r_col(t), 1);
    set_col(i, o_d + t, v);
  }

  // N in the adapted basis, then back to block coordinates.
  Matrix n(f, b_dim, d);
  for (std::size_t j = 0; j < frees.size(); ++j) {
    Vec v(b_dim, 0);
    v[o_n + j] = 1;
    for (std::size_t k = 0; k < ka_dim; ++k) v[k] = rng.elem(f);
    set_col(n, gen(frees[j]), v);
  }
  // R^{-1} expresses V_1 generator coordinates in the adapted basis.
  const Matrix r_inv = inverse(r);
  std::size_t next_ka = 0;
  Matrix n_adapted(f, b_dim, m1);
  for (std::size_t c = r1; c < m1; ++c) n_adapted.set(next_ka++, c, 1);
  const Matrix n_ones = n_adapted * r_inv;
  for (std::size_t k = 0; k < m1; ++k) set_col(n, gen(ones[k]), n_ones.column(k));
  for (auto b : middles) set_col(n, gen(b), unit(b_dim, next_ka++));

  std::vector<Vec> ka_basis, c_vecs, nk;
  for (std::size_t k = 0; k < ka_dim; ++k) ka_basis.push_back(unit(b_dim, k));
  for (std::size_t j = 0; j < covered.size(); ++j) c_vecs.push_back(unit(b_dim, o_c + j));
  for (std::size_t k = 0; k < o_c; ++k) nk.push_back(unit(b_dim, k));

  return {CyclicModule::standard(f, sizes), b_dim, i, n, Subspace::span(f, b_dim, ka_basis),
          c_vecs, nk};
}

Subspace random_subspace_of(const Field& f, std::size_t ambient, const std::vector<Vec>& pool,
                            std::size_t count, Rng& rng) {
  std::vector<Vec> vs;
  for (std::size_t k = 0; k < count; ++k) {
    Vec v(ambient, 0);
    for (const auto& g : pool) axpy(f, v, g, rng.elem(f));
    vs.push_back(v);
  }
  return Subspace::span(f, ambient, vs);
}

/// Same model in random bases of A and B.
ExtensionModel conjugate_model(const Field& f, const CyclicModule& a, std::size_t b_dim,
                               const Matrix& i, const Matrix& n, const Subspace& k_a,
                               const Subspace& k_xi, ModelFlags flags, std::string provenance,
                               Rng& rng) {
  const Matrix pa = rng.invertible(f, a.dim()), pb = rng.invertible(f, b_dim);
  const Matrix pa_inv = inverse(pa), pb_inv = inverse(pb);
  return ExtensionModel(a.conjugated(pa), b_dim, pa * i * pb_inv, pb * n * pa_inv,
                        k_a.image_under(pb), k_xi.image_under(pb), flags, std::move(provenance));
}

std::string describe_sizes(const std::vector<int>& sizes) {
  std::string out;
  for (int s : sizes) out += (out.empty() ? "" : ",") + std::to_string(s);
  return "[" + out + "]";
}

}  // namespace

ExtensionModel gen_realizable(const GenSpec& spec) {
  if (spec.mode != GenMode::realizable) throw Error("gen_realizable needs a realizable spec");
  const Field f(spec.p);
  const int p = spec.p;
  std::size_t m1 = spec.m1, m2 = spec.m2, mp = spec.mp;
  if (p == 2) {
    mp += m2;
    m2 = 0;
  }
  if (p > 2 && spec.extra_b_dim > 0)
    throw Error("unsatisfiable spec: extra K_a dimensions violate A6 when p > 2");
  if (p == 2 && (spec.flags.a_sum_two_squares || spec.flags.xi_is_norm) && spec.extra_b_dim > 0)
    throw Error("unsatisfiable spec: at p = 2 either flag needs extra_b_dim = 0");
  if (p > 2 && spec.flags.xi_is_norm && m2 > 0)
    throw Error("unsatisfiable spec: xi_is_norm needs m2 = 0 when p > 2");
  if (spec.i1_rank && *spec.i1_rank > m1)
    throw Error("unsatisfiable spec: i1_rank exceeds m1");

  Rng rng(spec.seed);
  const std::size_t r1 = spec.i1_rank ? *spec.i1_rank : rng.below(m1 + 1);
  std::vector<int> sizes;
  sizes.insert(sizes.end(), m1, 1);
  sizes.insert(sizes.end(), m2, 2);
  sizes.insert(sizes.end(), mp, p);
  const std::vector<bool> cover(m2, true);
  const Skeleton s = build_skeleton(f, sizes, cover, r1, spec.extra_b_dim, rng);

  Subspace k_xi(f, s.b_dim);
  if (p > 2) {
    // i(K_xi) must cover the V_2 socles modulo the V_p socles (A7).
    auto extra = random_subspace_of(f, s.b_dim, s.nk_vectors, rng.below(3), rng);
    k_xi = Subspace::span(f, s.b_dim, s.c_vectors) + extra;
  } else if (spec.flags.xi_is_norm) {
    k_xi = random_subspace_of(f, s.b_dim, image(s.n).basis_vectors(), rng.below(3), rng);
  } else {
    // i(K_xi) must stay inside (sigma-1)A, so the d_t directions are excluded.
    k_xi = random_subspace_of(f, s.b_dim, s.nk_vectors, rng.below(s.nk_vectors.size() + 1), rng);
  }

  std::string prov = "realizable p=" + std::to_string(p) + " m1=" + std::to_string(m1) +
                     " m2=" + std::to_string(m2) + " mp=" + std::to_string(mp) +
                     " r1=" + std::to_string(r1) + " extra=" + std::to_string(spec.extra_b_dim) +
                     " seed=" + std::to_string(spec.seed);
  ExtensionModel m = spec.conjugate
                         ? conjugate_model(f, s.a, s.b_dim, s.i, s.n, s.k_a, k_xi, spec.flags, prov, rng)
                         : ExtensionModel(s.a, s.b_dim, s.i, s.n, s.k_a, k_xi, spec.flags, prov);
  auto v = validate_model(m, true);
  if (!v.passed()) throw Error("internal error: realizable model fails validation: " + v.detail);
  return m;
}

ExtensionModel gen_freeform(const GenSpec& spec) {
  if (spec.mode != GenMode::freeform) throw Error("gen_freeform needs a freeform spec");
  const Field f(spec.p);
  for (int s : spec.block_sizes)
    if (s < 1 || s > spec.p) throw Error("block size " + std::to_string(s) + " outside [1, p]");
  const auto m1 = static_cast<std::size_t>(std::count(spec.block_sizes.begin(), spec.block_sizes.end(), 1));
  if (spec.i1_rank && *spec.i1_rank > m1) throw Error("unsatisfiable spec: i1_rank exceeds m1");
  std::size_t middles = 0;
  for (int s : spec.block_sizes) middles += (s > 1 && s < spec.p) ? 1 : 0;

  Rng rng(spec.seed);
  for (std::size_t attempt = 1; attempt <= spec.budget; ++attempt) {
    std::vector<bool> cover(middles);
    for (std::size_t k = 0; k < middles; ++k) cover[k] = rng.coin();
    const std::size_t r1 = spec.i1_rank ? *spec.i1_rank : rng.below(m1 + 1);
    const Skeleton s = build_skeleton(f, spec.block_sizes, cover, r1, spec.extra_b_dim, rng);
    std::vector<Vec> all;
    for (std::size_t k = 0; k < s.b_dim; ++k) all.push_back(unit(s.b_dim, k));
    Subspace k_xi(f, s.b_dim);
    if (spec.k_xi_dim) {
      if (*spec.k_xi_dim > s.b_dim) throw Error("unsatisfiable spec: k_xi_dim exceeds dim B");
      while (k_xi.dim() < *spec.k_xi_dim) k_xi = k_xi + random_subspace_of(f, s.b_dim, all, 1, rng);
    } else {
      k_xi = random_subspace_of(f, s.b_dim, all, rng.below(s.b_dim + 1), rng);
    }
    std::string prov = "freeform p=" + std::to_string(spec.p) + " blocks=" +
                       describe_sizes(spec.block_sizes) + " r1=" + std::to_string(r1) +
                       " extra=" + std::to_string(spec.extra_b_dim) + " seed=" + std::to_string(spec.seed);
    ExtensionModel m = spec.conjugate
                           ? conjugate_model(f, s.a, s.b_dim, s.i, s.n, s.k_a, k_xi, {}, prov, rng)
                           : ExtensionModel(s.a, s.b_dim, s.i, s.n, s.k_a, k_xi, {}, prov);
    if (satisfies_base_axioms(m)) return m;
  }
  throw Error("rejection budget exhausted after " + std::to_string(spec.budget) + " attempts");
}

ExtensionModel generate(const GenSpec& spec) {
  return spec.mode == GenMode::realizable ? gen_realizable(spec) : gen_freeform(spec);
}

GenSpec random_spec(int p, GenMode mode, std::size_t max_dim_a, std::uint64_t seed) {
  if (!is_supported_prime(p)) throw Error("p must be one of 2, 3, 5, 7");
  if (max_dim_a < 1) throw Error("max_dim_a must be positive");
  Rng rng(seed);
  GenSpec spec;
  spec.p = p;
  spec.mode = mode;
  spec.seed = rng.next();
  const auto up = static_cast<std::size_t>(p);
  if (mode == GenMode::realizable) {
    do {
      std::size_t left = max_dim_a;
      spec.mp = rng.below(left / up + 1);
      left -= spec.mp * up;
      spec.m2 = p > 2 ? rng.below(left / 2 + 1) : 0;
      left -= spec.m2 * 2;
      spec.m1 = rng.below(left + 1);
    } while (spec.m1 + 2 * spec.m2 + up * spec.mp == 0);
    spec.extra_b_dim = p == 2 ? rng.below(3) : 0;
    // Request each flag only when the spec can carry it.
    spec.flags.a_sum_two_squares = (p > 2 || spec.extra_b_dim == 0) && rng.coin();
    spec.flags.xi_is_norm = (p == 2 ? spec.extra_b_dim == 0 : spec.m2 == 0) && rng.coin();
  } else {
    std::size_t total = 1 + rng.below(max_dim_a);
    spec.block_sizes.clear();
    while (total > 0) {
      auto s = 1 + rng.below(std::min(total, up));
      spec.block_sizes.push_back(static_cast<int>(s));
      total -= s;
    }
    spec.extra_b_dim = rng.below(2);
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Oracles

TheoremReport oracle_enumerate_summand_pairs(const ExtensionModel& m) {
  TheoremReport r;
  r.checker = "oracle_summand_pairs";
  r.fingerprint = fingerprint(m);
  const Field& f = m.field();
  const std::size_t da = m.dim_a(), db = m.dim_b();
  // sigma-stable subspaces of A, by dimension.
  std::vector<std::vector<Subspace>> stable(da + 1);
  for (std::size_t k = 0; k <= da; ++k)
    for (auto& s : enumerate_subspaces(f, da, k))
      if (s.contains(s.image_under(m.a().sigma()))) stable[k].push_back(std::move(s));
  std::size_t examined = 0;
  for (std::size_t k = 0; k <= db; ++k) {
    for (const auto& q : enumerate_subspaces(f, db, k)) {
      ++examined;
      const Subspace w = m.restrict_image(q);
      if (w.is_zero()) continue;
      for (const auto& pc : stable[da - w.dim()]) {
        if (!w.intersect(pc).is_zero()) continue;
        r.verdict = Verdict::fail;
        r.detail = "i(Q) has a sigma-stable complement for Q of dim " + std::to_string(q.dim()) +
                   " (after " + std::to_string(examined) + " subspaces Q)";
        r.witnesses = {q.basis_vectors().front(), w.basis_vectors().front()};
        return r;
      }
    }
  }
  r.detail = "no nonzero i(Q) is a summand; " + std::to_string(examined) + " subspaces Q examined";
  return r;
}

TheoremReport oracle_exactness(const ExtensionModel& m) {
  TheoremReport r;
  r.checker = "oracle_exactness";
  r.fingerprint = fingerprint(m);
  const Field& f = m.field();
  std::set<Vec> ker_n, im_tau;
  for_each_vector(Subspace::full(f, m.dim_a()), [&](const Vec& v) {
    Vec nv = m.n().apply(v);
    if (std::all_of(nv.begin(), nv.end(), [](Elem e) { return e == 0; })) ker_n.insert(v);
    im_tau.insert(m.a().tau().apply(v));
  });
  std::vector<Vec> outside;
  for (const auto& v : ker_n)
    if (!im_tau.count(v)) outside.push_back(v);
  std::vector<Vec> not_killed;
  for (const auto& v : im_tau)
    if (!ker_n.count(v)) not_killed.push_back(v);
  if (outside.empty() && not_killed.empty()) {
    r.detail = "ker N = (sigma-1)A, " + std::to_string(ker_n.size()) + " vectors";
    return r;
  }
  r.verdict = Verdict::fail;
  r.detail = std::to_string(outside.size()) + " vectors in ker N outside (sigma-1)A, " +
             std::to_string(not_killed.size()) + " vectors of (sigma-1)A outside ker N";
  r.witnesses = outside.empty() ? not_killed : outside;
  return r;
}

namespace {

/// Above this many vectors oracle_decompose switches to elimination.
constexpr double kOracleVectorLimit = 65536;

/// Rank over F_p by textbook elimination on plain integers.
std::size_t naive_rank(std::vector<std::vector<int>> m, int p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    int inv = 1;
    while ((m[rank][c] * inv) % p != 1) ++inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      const int factor = (m[r][c] * inv) % p;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - factor * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

JordanProfile oracle_decompose(const CyclicModule& a) {
  const int p = a.p();
  const std::size_t d = a.dim();
  std::vector<std::size_t> ker_dim(static_cast<std::size_t>(p) + 2, 0);  // dim ker tau^k
  double count = 1;
  for (std::size_t k = 0; k < d; ++k) count *= p;
  if (count <= static_cast<double>(kOracleVectorLimit)) {
    std::vector<std::size_t> by_length(static_cast<std::size_t>(p) + 1, 0);
    for_each_vector(Subspace::full(a.field(), d), [&](const Vec& v) {
      Vec w = v;
      std::size_t len = 0;
      while (std::any_of(w.begin(), w.end(), [](Elem e) { return e != 0; })) {
        w = a.tau().apply(w);
        if (++len > static_cast<std::size_t>(p)) throw Error("oracle_decompose: tau is not nilpotent of order p");
      }
      ++by_length[len];
    });
    std::size_t cumulative = 0;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(p); ++k) {
      cumulative += by_length[k];
      std::size_t dim = 0;
      for (std::size_t c = cumulative; c > 1; c /= static_cast<std::size_t>(p)) ++dim;
      ker_dim[k] = dim;
    }
  } else {
    std::vector<std::vector<int>> tau(d, std::vector<int>(d)), power(d, std::vector<int>(d, 0));
    for (std::size_t r = 0; r < d; ++r) {
      power[r][r] = 1;
      for (std::size_t c = 0; c < d; ++c) tau[r][c] = a.tau().at(r, c);
    }
    ker_dim[0] = 0;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(p); ++k) {
      std::vector<std::vector<int>> next(d, std::vector<int>(d, 0));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t c = 0; c < d; ++c) next[r][c] = (next[r][c] + tau[r][j] * power[j][c]) % p;
      power = std::move(next);
      ker_dim[k] = d - naive_rank(power, p);
    }
  }
  ker_dim[static_cast<std::size_t>(p) + 1] = d;
  // rank tau^k = d - ker_dim[k]; m_i = r_{i-1} - 2 r_i + r_{i+1}.
  auto rk = [&](std::size_t k) { return static_cast<long long>(d - ker_dim[std::min(k, static_cast<std::size_t>(p) + 1)]); };
  JordanProfile prof(p);
  for (int i = 1; i <= p; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    long long mi = rk(ui - 1) - 2 * rk(ui) + rk(ui + 1);
    if (mi < 0) throw Error("oracle_decompose: negative block count");
    prof.set(i, static_cast<std::size_t>(mi));
  }
  return prof;
}

}  // namespace h90
