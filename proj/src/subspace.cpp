#include "h90/subspace.hpp"

#include <limits>
#include <string>

namespace h90 {

namespace {

Matrix drop_zero_rows(const Matrix& m, std::size_t keep) {
  Matrix out(m.field(), keep, m.cols());
  for (std::size_t r = 0; r < keep; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
  return out;
}

std::size_t checked_power(int p, std::size_t e) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < e; ++k) {
    if (n > kEnumerationLimit) return std::numeric_limits<std::size_t>::max();
    n *= static_cast<std::size_t>(p);
  }
  return n;
}

}  // namespace

Subspace::Subspace(Field f, std::size_t ambient) : basis_(f, 0, ambient) {}

Subspace::Subspace(Matrix canonical, std::vector<std::size_t> pivots)
    : basis_(std::move(canonical)), pivots_(std::move(pivots)) {}

Subspace Subspace::row_space(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(m, pivots);
  return Subspace(drop_zero_rows(r, pivots.size()), pivots);
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
  return row_space(Matrix::from_row_vectors(f, ambient, vectors));
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  return row_space(Matrix::identity(f, ambient));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vec(r));
  return out;
}

void Subspace::require_same_ambient(const Subspace& other) const {
  if (ambient() != other.ambient())
    throw Error("ambient dimension mismatch: " + std::to_string(ambient()) + " vs " +
                std::to_string(other.ambient()));
  if (!(field() == other.field())) throw Error("subspaces over different fields");
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient()) throw Error("vector length does not match ambient dimension");
  // Reduce v against the echelon basis; it lies in the span iff it reduces to zero.
  Vec w(v.begin(), v.end());
  const Field& f = field();
  for (std::size_t r = 0; r < dim(); ++r) {
    Elem c = w[pivots_[r]];
    if (!c) continue;
    Elem neg = f.neg(c);
    for (std::size_t j = 0; j < ambient(); ++j) w[j] = f.add(w[j], f.mul(neg, basis_.at(r, j)));
  }
  for (Elem e : w)
    if (e) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(other);
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  require_same_ambient(other);
  return row_space(Matrix::vstack(basis_, other.basis_));
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace Subspace::intersect(const Subspace& other) const {
  require_same_ambient(other);
  Matrix constraints = Matrix::vstack(annihilator().basis_, other.annihilator().basis_);
  return kernel(constraints);
}

Subspace Subspace::image_under(const Matrix& map) const {
  if (map.cols() != ambient()) throw Error("map domain does not match subspace ambient");
  // Rows of basis * map^T are the images of the basis vectors.
  return row_space(basis_ * map.transpose());
}

std::optional<Vec> Subspace::witness_outside(const Subspace& other) const {
  require_same_ambient(other);
  for (std::size_t r = 0; r < dim(); ++r)
    if (!other.contains(basis_.row(r))) return basis_.row_vec(r);
  return std::nullopt;
}

std::vector<Vec> Subspace::extend_within(const Subspace& whole) const {
  require_same_ambient(whole);
  std::vector<Vec> added;
  Subspace acc = *this;
  for (std::size_t r = 0; r < whole.dim(); ++r) {
    auto row = whole.basis_.row(r);
    if (!acc.contains(row)) {
      added.emplace_back(row.begin(), row.end());
      acc = acc + span(field(), ambient(), {added.back()});
    }
  }
  return added;
}

Subspace kernel(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(m, pivots);
  const Field& f = m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(r.at(k, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, n, basis);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (m.rows() != target.ambient()) throw Error("preimage: codomain mismatch");
  Subspace ann = target.annihilator();
  return kernel(ann.basis() * m);
}

void for_each_vector(const Subspace& u, const std::function<void(const Vec&)>& visit) {
  const int p = u.field().p();
  if (checked_power(p, u.dim()) > kEnumerationLimit)
    throw Error("oracle too large: " + std::to_string(p) + "^" + std::to_string(u.dim()) +
                " vectors exceeds the enumeration limit");
  const Field& f = u.field();
  std::vector<Elem> coeffs(u.dim(), 0);
  Vec v(u.ambient(), 0);
  while (true) {
    visit(v);
    // Odometer increment on coefficients, updating v incrementally.
    std::size_t k = 0;
    while (k < coeffs.size()) {
      coeffs[k] = static_cast<Elem>((coeffs[k] + 1) % p);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], u.basis().at(k, j));
      if (coeffs[k] != 0) break;
      ++k;
    }
    if (k == coeffs.size()) return;
  }
}

std::size_t gaussian_binomial(int p, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // [n,k] = [n-1,k-1] + p^k [n-1,k]
  std::vector<std::vector<long double>> t(n + 1, std::vector<long double>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    t[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) {
      long double pk = 1;
      for (std::size_t e = 0; e < j; ++e) pk *= p;
      t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? pk * t[i - 1][j] : 0);
    }
  }
  long double v = t[n][k];
  if (v > static_cast<long double>(std::numeric_limits<std::size_t>::max() / 2))
    return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(v + 0.5L);
}

std::vector<Subspace> enumerate_subspaces(Field f, std::size_t ambient, std::size_t k) {
  if (k > ambient) return {};
  std::size_t count = gaussian_binomial(f.p(), ambient, k);
  if (count > kEnumerationLimit)
    throw Error("oracle too large: " + std::to_string(count) +
                " subspaces exceeds the enumeration limit");
  std::vector<Subspace> out;
  out.reserve(count);
  // Each subspace has exactly one reduced echelon basis: choose the pivot
  // columns, then fill every non-pivot entry right of each pivot freely.
  std::vector<std::size_t> pivots(k);
  for (std::size_t j = 0; j < k; ++j) pivots[j] = j;
  while (true) {
    std::vector<bool> is_pivot(ambient, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < ambient; ++c)
        if (!is_pivot[c]) free_slots.emplace_back(r, c);
    std::vector<Elem> vals(free_slots.size(), 0);
    while (true) {
      Matrix b(f, k, ambient);
      for (std::size_t r = 0; r < k; ++r) b.set(r, pivots[r], 1);
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        b.set(free_slots[s].first, free_slots[s].second, vals[s]);
      out.push_back(Subspace::row_space(b));
      std::size_t s = 0;
      while (s < vals.size()) {
        vals[s] = static_cast<Elem>((vals[s] + 1) % f.p());
        if (vals[s]) break;
        ++s;
      }
      if (s == vals.size()) break;
    }
    // Next k-subset in lexicographic order.
    std::size_t j = k;
    while (j > 0 && pivots[j - 1] == ambient - k + (j - 1)) --j;
    if (j == 0) break;
    ++pivots[j - 1];
    for (std::size_t t = j; t < k; ++t) pivots[t] = pivots[t - 1] + 1;
  }
  return out;
}

std::vector<Subspace> enumerate_subspaces_of(const Subspace& u) {
  std::vector<Subspace> out;
  std::size_t total = 0;
  for (std::size_t k = 0; k <= u.dim(); ++k) {
    std::size_t c = gaussian_binomial(u.field().p(), u.dim(), k);
    if (c > kEnumerationLimit || total + c > kEnumerationLimit)
      throw Error("oracle too large: subspace lattice exceeds the enumeration limit");
    total += c;
  }
  // Enumerate in coordinates relative to u's basis and map back.
  for (std::size_t k = 0; k <= u.dim(); ++k)
    for (const auto& s : enumerate_subspaces(u.field(), u.dim(), k))
      out.push_back(Subspace::row_space(s.basis() * u.basis()));
  return out;
}

}  // namespace h90
