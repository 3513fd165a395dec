#include "h90/cyclic_module.hpp"

#include <algorithm>
#include <sstream>

namespace h90 {

std::size_t JordanProfile::dimension() const noexcept {
  std::size_t d = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) d += (i + 1) * counts_[i];
  return d;
}

std::size_t JordanProfile::block_count() const noexcept {
  std::size_t n = 0;
  for (auto c : counts_) n += c;
  return n;
}

std::vector<int> JordanProfile::block_sizes() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    out.insert(out.end(), counts_[i], static_cast<int>(i + 1));
  return out;
}

std::string JordanProfile::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < counts_.size(); ++i) os << (i ? " " : "") << counts_[i];
  os << ']';
  return os.str();
}

ActionCheck validate_action(const Matrix& sigma) {
  if (sigma.rows() != sigma.cols()) return {false, "sigma is not square"};
  const std::size_t d = sigma.rows();
  const Matrix id = Matrix::identity(sigma.field(), d);
  if (sigma.pow(static_cast<std::size_t>(sigma.p())) == id) return {};
  std::ostringstream os;
  os << "sigma^" << sigma.p() << " != 1";
  if (rank(sigma) < d) {
    os << " (sigma is singular)";
    return {false, os.str()};
  }
  constexpr std::size_t kOrderSearch = 4096;
  Matrix power = sigma;
  for (std::size_t k = 1; k <= kOrderSearch; ++k) {
    if (power == id) {
      os << " (sigma has order " << k << ")";
      return {false, os.str()};
    }
    power = power * sigma;
  }
  os << " (order of sigma exceeds " << kOrderSearch << ")";
  return {false, os.str()};
}

CyclicModule::CyclicModule(Matrix sigma) : sigma_(std::move(sigma)), tau_(sigma_.field(), 0, 0) {
  auto check = validate_action(sigma_);
  if (!check.ok) throw Error("invalid group action: " + check.message);
  tau_ = sigma_ - Matrix::identity(sigma_.field(), sigma_.rows());
}

CyclicModule CyclicModule::standard(Field f, const std::vector<int>& block_sizes) {
  std::size_t d = 0;
  for (int s : block_sizes) {
    if (s < 1 || s > f.p()) throw Error("block size " + std::to_string(s) + " outside [1, p]");
    d += static_cast<std::size_t>(s);
  }
  Matrix sigma = Matrix::identity(f, d);
  std::size_t off = 0;
  for (int s : block_sizes) {
    // tau e_j = e_{j+1} inside the block.
    for (int j = 0; j + 1 < s; ++j) sigma.set(off + j + 1, off + j, 1);
    off += static_cast<std::size_t>(s);
  }
  return CyclicModule(std::move(sigma));
}

CyclicModule CyclicModule::trivial(Field f, std::size_t dim) {
  return CyclicModule(Matrix::identity(f, dim));
}

CyclicModule CyclicModule::regular(Field f) { return standard(f, {f.p()}); }

Matrix CyclicModule::tau_power(std::size_t k) const { return tau_.pow(k); }

Subspace CyclicModule::fixed_part() const { return kernel(tau_); }
Subspace CyclicModule::radical_part() const { return image(tau_); }
Subspace CyclicModule::norm_image() const { return image(norm_operator()); }

int CyclicModule::length(std::span<const Elem> y) const {
  if (y.size() != dim()) throw Error("vector length does not match module dimension");
  Vec v(y.begin(), y.end());
  if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }))
    throw Error("length is undefined for the zero vector");
  int t = 0;
  while (std::any_of(v.begin(), v.end(), [](Elem e) { return e != 0; })) {
    v = tau_.apply(v);
    ++t;
  }
  return t;
}

JordanProfile CyclicModule::profile_from_ranks() const {
  const int p = this->p();
  std::vector<std::size_t> r(static_cast<std::size_t>(p) + 2, 0);
  r[0] = dim();
  Matrix power = Matrix::identity(field(), dim());
  for (int k = 1; k <= p + 1; ++k) {
    power = power * tau_;
    r[static_cast<std::size_t>(k)] = rank(power);
  }
  JordanProfile prof(p);
  for (int i = 1; i <= p; ++i) {
    auto ui = static_cast<std::size_t>(i);
    prof.set(i, r[ui - 1] - 2 * r[ui] + r[ui + 1]);
  }
  return prof;
}

Decomposition CyclicModule::decompose() const {
  const int p = this->p();
  const Field& f = field();
  const std::size_t d = dim();

  // kernels[j] = ker tau^j
  std::vector<Subspace> kernels;
  for (int j = 0; j <= p; ++j) kernels.push_back(kernel(tau_power(static_cast<std::size_t>(j))));

  struct Chain {
    Vec generator;
    int length;
  };
  std::vector<Chain> chains;
  // Deepest chains first: a new generator of length k must be independent of
  // ker tau^(k-1) and of the tau-images of the longer chains already chosen.
  for (int k = p; k >= 1; --k) {
    std::vector<Vec> spanning;
    for (const auto& c : chains) {
      Vec v = c.generator;
      for (int s = 0; s < c.length - k; ++s) v = tau_.apply(v);
      spanning.push_back(std::move(v));
    }
    Subspace covered = kernels[static_cast<std::size_t>(k - 1)] + Subspace::span(f, d, spanning);
    for (const auto& w : covered.extend_within(kernels[static_cast<std::size_t>(k)]))
      chains.push_back({w, k});
  }
  std::stable_sort(chains.begin(), chains.end(),
                   [](const Chain& a, const Chain& b) { return a.length < b.length; });

  Decomposition out{JordanProfile(p), {}, Matrix(f, d, d), {}};
  std::vector<Vec> columns;
  for (const auto& c : chains) {
    out.blocks.push_back(c.length);
    out.generator_columns.push_back(columns.size());
    Vec v = c.generator;
    for (int s = 0; s < c.length; ++s) {
      columns.push_back(v);
      v = tau_.apply(v);
    }
  }
  for (int i = 1; i <= p; ++i)
    out.profile.set(i, static_cast<std::size_t>(std::count(out.blocks.begin(), out.blocks.end(), i)));
  out.basis_change = Matrix::from_columns(f, d, columns);

  if (columns.size() != d || rank(out.basis_change) != d)
    throw Error("internal error: Jordan chains do not form a basis");
  if (!(out.profile == profile_from_ranks()))
    throw Error("internal error: chain profile disagrees with rank formula");
  return out;
}

bool CyclicModule::is_free() const {
  auto prof = profile_from_ranks();
  for (int i = 1; i < p(); ++i)
    if (prof.m(i)) return false;
  return true;
}

SemisimpleSplit CyclicModule::split_semisimple() const {
  auto dec = decompose();
  std::vector<Vec> s_vecs, t_vecs;
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    std::size_t g = dec.generator_columns[b];
    for (int s = 0; s < dec.blocks[b]; ++s) {
      Vec col = dec.basis_change.column(g + static_cast<std::size_t>(s));
      (dec.blocks[b] == 1 ? s_vecs : t_vecs).push_back(std::move(col));
    }
  }
  return {Subspace::span(field(), dim(), s_vecs), Subspace::span(field(), dim(), t_vecs)};
}

FirstCohomology CyclicModule::h1() const {
  Subspace cocycles = kernel(norm_operator());
  Subspace coboundaries = radical_part();
  FirstCohomology out;
  out.representatives = coboundaries.extend_within(cocycles);
  out.dim = out.representatives.size();
  return out;
}

bool CyclicModule::is_trivial_summand(std::span<const Elem> v) const {
  if (v.size() != dim()) throw Error("vector length does not match module dimension");
  if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }))
    throw Error("is_trivial_summand: v must be nonzero");
  if (!fixed_part().contains(v)) throw Error("is_trivial_summand: v is not fixed by sigma");
  return !radical_part().contains(v);
}

CyclicModule CyclicModule::with_generator_power(int c) const {
  if (c % p() == 0) throw Error("generator power must be prime to p");
  int e = ((c % p()) + p()) % p();
  return CyclicModule(sigma_.pow(static_cast<std::size_t>(e)));
}

CyclicModule CyclicModule::conjugated(const Matrix& p_change) const {
  return CyclicModule(p_change * sigma_ * inverse(p_change));
}

CyclicModule CyclicModule::direct_sum(const CyclicModule& a, const CyclicModule& b) {
  if (a.p() != b.p()) throw Error("direct sum of modules over different primes");
  return CyclicModule(Matrix::block_diagonal(a.sigma_, b.sigma_));
}

}  // namespace h90
