#include "h90/backends.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "h90/galois_field.hpp"
#include "h90/local_field.hpp"

namespace h90 {

namespace {

void check_n_max(int n_max) {
  if (n_max < 1) throw Error("n_max must be at least 1");
  if (n_max > 64) throw Error("n_max must be at most 64");
}

/// Zero models and zero cup maps for every degree above `top`.
void pad_with_zero_degrees(DegreeTower& t, int top) {
  const Field f(t.p);
  for (int n = top + 1; n <= t.n_max; ++n)
    t.models.push_back(ExtensionModel::zero(f).with_provenance(
        t.backend + " degree " + std::to_string(n) + " (zero)"));
  while (t.b_dims.size() < static_cast<std::size_t>(t.n_max) + 2) t.b_dims.push_back(0);
  for (int n = static_cast<int>(t.cup_a.size()) + 1; n <= t.n_max + 1; ++n) {
    auto rows = t.b_dims[static_cast<std::size_t>(n)];
    auto cols = t.b_dims[static_cast<std::size_t>(n - 1)];
    t.cup_a.emplace_back(f, rows, cols);
    t.cup_xi.emplace_back(f, rows, cols);
  }
}

Vec class_vec(const SquareClass& c) {
  return {static_cast<Elem>(c.unit_bit), static_cast<Elem>(c.ell_bit)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Finite fields

DegreeTower ff_build_tower(int p, std::int64_t q, int n_max) {
  if (!is_supported_prime(p)) throw Error("p must be one of 2, 3, 5, 7");
  check_n_max(n_max);
  if (q < 2) throw Error("q must be a prime power");
  auto primes = prime_factors(static_cast<std::uint64_t>(q));
  if (primes.size() != 1) throw Error("q = " + std::to_string(q) + " is not a prime power");
  const auto ell = static_cast<int>(primes[0]);
  int m = 0;
  for (std::int64_t r = q; r > 1; r /= ell) ++m;
  if ((q - 1) % p != 0)
    throw Error("no p-th root of unity: p = " + std::to_string(p) + " does not divide q - 1 = " +
                std::to_string(q - 1));
  long double big = 1;
  for (int k = 0; k < p; ++k) big *= static_cast<long double>(q);
  if (big > 1e7L) throw Error("q^p exceeds 10^7");

  const GaloisField e(ell, m * p);
  const Field f(p);
  const std::uint64_t big_q = e.order();
  const auto uq = static_cast<std::uint64_t>(q);
  const std::uint64_t m_norm = (big_q - 1) / (uq - 1);  // 1 + q + ... + q^(p-1)
  const auto gamma = e.generator();
  const auto eta = e.pow(gamma, m_norm);            // generator of F*
  const auto zeta = e.pow(gamma, (big_q - 1) / p);  // primitive p-th root of unity

  std::vector<GaloisField::Element> zeta_pows;
  for (int k = 0; k < p; ++k) zeta_pows.push_back(e.pow(zeta, static_cast<std::uint64_t>(k)));
  auto lookup = [&](GaloisField::Element w) -> Elem {
    for (int k = 0; k < p; ++k)
      if (zeta_pows[static_cast<std::size_t>(k)] == w) return static_cast<Elem>(k);
    throw Error("ff backend: power map left the p-th roots of unity");
  };
  // E*/E*^p and F*/F*^p, with gamma and eta as basis: y^((Q-1)/p) = zeta^k, f^((q-1)/p) = zeta^j.
  auto class_e = [&](GaloisField::Element y) { return lookup(e.pow(y, (big_q - 1) / p)); };
  auto class_f = [&](GaloisField::Element x) {
    if (e.pow(x, uq) != x) throw Error("ff backend: element is not in F");
    return lookup(e.pow(x, (uq - 1) / p));
  };

  const auto a = eta;
  const auto alpha = e.pow(gamma, m_norm / p);  // alpha^p = a
  const auto xi = e.pow(alpha, uq - 1);         // sigma(alpha) / alpha with sigma = Frobenius
  if (e.pow(alpha, static_cast<std::uint64_t>(p)) != a) throw Error("ff backend: bad p-th root");

  Matrix sigma(f, 1, 1), i(f, 1, 1), n(f, 1, 1);
  sigma.set(0, 0, class_e(e.pow(gamma, uq)));
  i.set(0, 0, class_e(eta));
  n.set(0, 0, class_f(e.pow(gamma, m_norm)));
  const Elem a_class = class_f(a), xi_class = class_f(xi);

  ModelFlags flags;
  const auto norm_gen = e.pow(gamma, m_norm);
  flags.xi_is_norm = e.pow(xi, e.multiplicative_order(norm_gen)) == e.one();
  if (p == 2) {
    std::set<GaloisField::Element> squares{e.zero()};
    for (std::uint64_t j = 0; j < uq - 1; ++j) squares.insert(e.pow(eta, 2 * j));
    // x^2 + y^2 = a: some square s with a - s a square; subtraction is addition of -s.
    const auto minus_one = e.pow(eta, (uq - 1) / 2);
    for (auto s : squares)
      if (squares.count(e.add(a, e.mul(minus_one, s)))) {
        flags.a_sum_two_squares = true;
        break;
      }
  }

  DegreeTower t;
  t.backend = "ff p=" + std::to_string(p) + " q=" + std::to_string(q);
  t.p = p;
  t.n_max = n_max;
  t.cd = 1;
  t.b_dims = {1, 1};
  Matrix cup_a(f, 1, 1), cup_xi(f, 1, 1);
  cup_a.set(0, 0, a_class);
  cup_xi.set(0, 0, xi_class);
  t.cup_a.push_back(cup_a);
  t.cup_xi.push_back(cup_xi);
  t.root_class = {class_e(alpha)};
  t.models.emplace_back(CyclicModule(sigma), 1, i, n, image(cup_a), image(cup_xi), flags,
                        t.backend + " degree 1");
  t.notes.push_back("E = F_" + std::to_string(q) + "^" + std::to_string(p) +
                    ", generator of E* with primitive minimal polynomial; a generates F*");
  t.notes.push_back("sigma = Frobenius, xi_p = sigma(alpha)/alpha with alpha^p = a");
  t.notes.push_back("k_n = 0 for n >= 2 (cd = 1)");
  pad_with_zero_degrees(t, 1);
  return t;
}

// ---------------------------------------------------------------------------
// Reals

DegreeTower real_build_tower(int n_max) {
  check_n_max(n_max);
  const Field f(2);
  DegreeTower t;
  t.backend = "real";
  t.p = 2;
  t.n_max = n_max;
  t.cd = std::nullopt;
  t.b_dims.assign(static_cast<std::size_t>(n_max) + 2, 1);
  for (int n = 1; n <= n_max + 1; ++n) {
    // Cup with (-1) maps (-1)^(n-1) to (-1)^n, a generator.
    t.cup_a.push_back(Matrix::identity(f, 1));
    t.cup_xi.push_back(Matrix::identity(f, 1));
  }
  for (int n = 1; n <= n_max; ++n)
    t.models.emplace_back(CyclicModule::trivial(f, 0), 1, Matrix(f, 0, 1), Matrix(f, 1, 0),
                          Subspace::full(f, 1), Subspace::full(f, 1), ModelFlags{},
                          "real degree " + std::to_string(n));
  t.notes.push_back("E = C, F = R, a = xi_2 = -1; B_n spanned by (-1)^n, A_n = 0");
  t.notes.push_back("-1 is not a sum of two squares in R: flags unset");
  return t;
}

// ---------------------------------------------------------------------------
// Local fields

DegreeTower local_build_tower(std::int64_t ell, const std::string& a_choice, int n_max,
                              int precision) {
  check_n_max(n_max);
  if (ell < 3 || ell > 97 || !is_prime(static_cast<std::uint64_t>(ell)))
    throw Error("ell must be an odd prime <= 97");
  if (precision < 6) throw Error("precision k must be at least 6");
  const QuadraticExtension ext(ell, a_choice, precision);
  const Field f(2);
  const std::int64_t u = ext.u();

  auto lf = [&](long long v) { return LocalFieldElement(v, ell, precision); };
  // Representatives of the basis of F*/F*^2 and E*/E*^2.
  const std::array<long long, 2> b_rep{u, ell};
  const std::array<QuadraticExtension::Element, 2> a_rep{ext.nonsquare_unit(), ext.uniformizer()};
  auto b_class = [&](const LocalFieldElement& x) { return class_vec(square_class(x)); };
  auto a_class = [&](const QuadraticExtension::Element& x) { return class_vec(ext.square_class(x)); };
  auto bit = [](int symbol) { return static_cast<Elem>(symbol == 1 ? 0 : 1); };
  auto b_elem = [&](const Vec& cls) {
    long long v = 1;
    if (cls[0]) v *= u;
    if (cls[1]) v *= ell;
    return v;
  };

  // Degree 1.
  std::vector<Vec> sigma_cols, n_cols, i_cols;
  for (const auto& r : a_rep) {
    sigma_cols.push_back(a_class(ext.conjugate(r)));
    n_cols.push_back(b_class(ext.norm(r)));
  }
  for (auto b : b_rep) i_cols.push_back(a_class(ext.embed(b)));
  const Matrix sigma1 = Matrix::from_columns(f, 2, sigma_cols);
  const Matrix n1 = Matrix::from_columns(f, 2, n_cols);
  const Matrix i1 = Matrix::from_columns(f, 2, i_cols);
  const Vec a_cls = b_class(lf(ext.a())), xi_cls = b_class(lf(-1));
  const Matrix cup_a1 = Matrix::from_columns(f, 2, {a_cls});
  const Matrix cup_xi1 = Matrix::from_columns(f, 2, {xi_cls});

  ModelFlags flags;
  flags.a_sum_two_squares = hilbert_symbol(ext.a(), -1, ell) == 1;
  flags.xi_is_norm = flags.a_sum_two_squares;  // (-1, a) = (a, -1)

  DegreeTower t;
  t.backend = "local ell=" + std::to_string(ell) + " a=" + a_choice;
  t.p = 2;
  t.n_max = n_max;
  t.cd = 2;
  t.b_dims = {1, 2, 1};
  t.cup_a.push_back(cup_a1);
  t.cup_xi.push_back(cup_xi1);
  t.root_class = a_class(ext.make(0, 1));
  t.models.emplace_back(CyclicModule(sigma1), 2, i1, n1, image(cup_a1), image(cup_xi1), flags,
                        t.backend + " degree 1");

  // Degree 2: k_2 F and k_2 E are F_2, detected by the symbols of F and E.
  auto cup_to_2 = [&](long long c) {
    Matrix m(f, 1, 2);
    for (std::size_t j = 0; j < 2; ++j)
      m.set(0, j, bit(hilbert_symbol(c, b_rep[j], ell)));
    return m;
  };
  const Matrix cup_a2 = cup_to_2(ext.a()), cup_xi2 = cup_to_2(-1);

  // Restriction of the generator {u, ell} of k_2 F.
  if (hilbert_symbol(u, ell, ell) != -1) throw Error("local backend: {u, ell} does not generate k_2 F");
  Matrix i2(f, 1, 1);
  i2.set(0, 0, bit(ext.symbol(ext.embed(u), ext.embed(ell))));

  // Projection-formula generators {e, i f}: cor{e, i f} = {N e, f}, sigma{e, i f} = {sigma e, i f}.
  std::optional<Elem> n2, s2;
  bool spans = false;
  for (int ce = 1; ce < 4; ++ce) {
    QuadraticExtension::Element e = ce & 1 ? a_rep[0] : ext.embed(1);
    if (ce & 2) e = ce & 1 ? ext.mul(e, a_rep[1]) : a_rep[1];
    for (int cf = 1; cf < 4; ++cf) {
      const long long fv = b_elem({static_cast<Elem>(cf & 1), static_cast<Elem>((cf >> 1) & 1)});
      const Elem value = bit(ext.symbol(e, ext.embed(fv)));
      const Elem norm_value = bit(hilbert_symbol(ext.norm(e), lf(fv)));
      const Elem sigma_value = bit(ext.symbol(ext.conjugate(e), ext.embed(fv)));
      if (value == 0) {
        if (norm_value != 0 || sigma_value != 0)
          throw Error("local backend: cor or sigma is not well defined on a trivial symbol");
        continue;
      }
      spans = true;
      if ((n2 && *n2 != norm_value) || (s2 && *s2 != sigma_value))
        throw Error("local backend: inconsistent values on generators of k_2 E");
      n2 = norm_value;
      s2 = sigma_value;
    }
  }
  if (!spans) throw Error("local backend: projection-formula generators do not span k_2 E");
  Matrix n2m(f, 1, 1), sigma2(f, 1, 1);
  n2m.set(0, 0, *n2);
  sigma2.set(0, 0, *s2);
  t.cup_a.push_back(cup_a2);
  t.cup_xi.push_back(cup_xi2);
  if (n_max >= 2)
    t.models.emplace_back(CyclicModule(sigma2), 1, i2, n2m, image(cup_a2), image(cup_xi2), flags,
                          t.backend + " degree 2");
  t.notes.push_back("u = " + std::to_string(u) + " (least non-residue), precision " +
                    std::to_string(ell) + "^" + std::to_string(precision));
  t.notes.push_back(std::string("E is ") +
                    (ext.kind() == QuadraticExtension::Kind::unramified ? "unramified" : "ramified"));
  t.notes.push_back("B_1 basis {u, ell}; A_1 basis {non-square unit, uniformizer}");
  t.notes.push_back("k_2 detected by symbols; cor on k_2 via {e, i f} -> {N e, f}");
  t.notes.push_back("k_n = 0 for n >= 3 (cd = 2)");
  const int top = std::min(n_max, 2);
  t.b_dims.resize(static_cast<std::size_t>(n_max) + 2, 0);
  pad_with_zero_degrees(t, top);
  return t;
}

}  // namespace h90
