#include "h90/model.hpp"

#include <algorithm>
#include <sstream>

#include "h90/model_io.hpp"

namespace h90 {

namespace {

Vec unit_vector(std::size_t n, std::size_t k) {
  Vec v(n, 0);
  v[k] = 1;
  return v;
}

/// First standard basis vector on which two maps with the same domain differ.
std::optional<Vec> differing_input(const Matrix& lhs, const Matrix& rhs) {
  for (std::size_t c = 0; c < lhs.cols(); ++c)
    for (std::size_t r = 0; r < lhs.rows(); ++r)
      if (lhs.at(r, c) != rhs.at(r, c)) return unit_vector(lhs.cols(), c);
  return std::nullopt;
}

std::optional<Vec> nonzero_input(const Matrix& m) {
  return differing_input(m, Matrix(m.field(), m.rows(), m.cols()));
}

std::optional<Vec> subspace_difference(const Subspace& x, const Subspace& y) {
  if (auto w = x.witness_outside(y)) return w;
  return y.witness_outside(x);
}

Subspace embed_sum(const Subspace& u, const Subspace& v) {
  const std::size_t n = u.ambient() + v.ambient();
  std::vector<Vec> vecs;
  for (const auto& b : u.basis_vectors()) {
    Vec w(n, 0);
    std::copy(b.begin(), b.end(), w.begin());
    vecs.push_back(std::move(w));
  }
  for (const auto& b : v.basis_vectors()) {
    Vec w(n, 0);
    std::copy(b.begin(), b.end(), w.begin() + static_cast<std::ptrdiff_t>(u.ambient()));
    vecs.push_back(std::move(w));
  }
  return Subspace::span(u.field(), n, vecs);
}

TheoremReport make_report(const ExtensionModel& m, std::string checker) {
  TheoremReport r;
  r.checker = std::move(checker);
  r.fingerprint = fingerprint(m);
  return r;
}

void fail(TheoremReport& r, std::string detail, std::vector<Vec> witnesses) {
  r.verdict = Verdict::fail;
  r.detail = std::move(detail);
  r.witnesses = std::move(witnesses);
}

const AxiomResult* find(const std::vector<AxiomResult>& rs, Axiom a) {
  for (const auto& r : rs)
    if (r.axiom == a) return &r;
  return nullptr;
}

/// Throws unless the base axioms hold, plus A6/A7 on request.
void require_axioms(const ExtensionModel& m, std::string_view checker, bool need_a6,
                    bool need_a7) {
  auto rs = check_axioms(m);
  for (const auto& r : rs) {
    bool base = r.axiom == Axiom::A1 || r.axiom == Axiom::A2 || r.axiom == Axiom::A3 ||
                r.axiom == Axiom::A4 || r.axiom == Axiom::A5 || r.axiom == Axiom::A8;
    if (!r.holds && base)
      throw Error(std::string(checker) + ": invalid model (axiom " +
                  std::string(to_string(r.axiom)) + " fails)");
  }
  if (need_a6) {
    const auto* a6 = find(rs, Axiom::A6);
    if (a6 && !a6->holds) throw Error(std::string(checker) + ": invalid model (axiom A6 fails)");
  }
  if (need_a7 && !find(rs, Axiom::A7)->holds)
    throw Error(std::string(checker) + ": criterion requires sigmamin1 axiom (A7 fails)");
}

}  // namespace

ExtensionModel::ExtensionModel(CyclicModule a, std::size_t b_dim, Matrix i, Matrix n, Subspace k_a,
                               Subspace k_xi, ModelFlags flags, std::string provenance)
    : a_(std::move(a)),
      b_dim_(b_dim),
      i_(std::move(i)),
      n_(std::move(n)),
      k_a_(std::move(k_a)),
      k_xi_(std::move(k_xi)),
      flags_(flags),
      provenance_(std::move(provenance)) {
  const auto d = a_.dim();
  auto mismatch = [](const std::string& what) { throw Error("model dimension mismatch: " + what); };
  if (i_.rows() != d || i_.cols() != b_dim_) mismatch("i must be dimA x dimB");
  if (n_.rows() != b_dim_ || n_.cols() != d) mismatch("N must be dimB x dimA");
  if (k_a_.ambient() != b_dim_) mismatch("K_a must live in B");
  if (k_xi_.ambient() != b_dim_) mismatch("K_xi must live in B");
  const int p = a_.p();
  if (i_.p() != p || n_.p() != p || k_a_.field().p() != p || k_xi_.field().p() != p)
    throw Error("model components over different fields");
}

ExtensionModel ExtensionModel::zero(Field f) {
  return ExtensionModel(CyclicModule::trivial(f, 0), 0, Matrix(f, 0, 0), Matrix(f, 0, 0),
                        Subspace(f, 0), Subspace(f, 0), {}, "zero");
}

ExtensionModel ExtensionModel::with_flags(ModelFlags flags) const {
  ExtensionModel m = *this;
  m.flags_ = flags;
  return m;
}

ExtensionModel ExtensionModel::with_provenance(std::string provenance) const {
  ExtensionModel m = *this;
  m.provenance_ = std::move(provenance);
  return m;
}

ExtensionModel ExtensionModel::with_generator_power(int c) const {
  ExtensionModel m = *this;
  m.a_ = a_.with_generator_power(c);
  return m;
}

ExtensionModel direct_sum(const ExtensionModel& m1, const ExtensionModel& m2) {
  if (m1.p() != m2.p()) throw Error("direct sum of models over different primes");
  ModelFlags flags{m1.flags().a_sum_two_squares && m2.flags().a_sum_two_squares,
                   m1.flags().xi_is_norm && m2.flags().xi_is_norm};
  return ExtensionModel(CyclicModule::direct_sum(m1.a(), m2.a()), m1.dim_b() + m2.dim_b(),
                        Matrix::block_diagonal(m1.i(), m2.i()),
                        Matrix::block_diagonal(m1.n(), m2.n()), embed_sum(m1.k_a(), m2.k_a()),
                        embed_sum(m1.k_xi(), m2.k_xi()), flags,
                        "sum(" + m1.provenance() + " + " + m2.provenance() + ")");
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

std::string_view to_string(Axiom a) noexcept {
  switch (a) {
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
    case Axiom::A5: return "A5";
    case Axiom::A6: return "A6";
    case Axiom::A7: return "A7";
    case Axiom::A8: return "A8";
    case Axiom::FlagA: return "flag:a_sum_two_squares";
    case Axiom::FlagXi: return "flag:xi_is_norm";
  }
  return "?";
}

std::uint64_t fingerprint(const ExtensionModel& m) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : serialize_model(m)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<AxiomResult> check_axioms(const ExtensionModel& m) {
  const auto& a = m.a();
  std::vector<AxiomResult> out;
  auto add = [&](Axiom ax, std::optional<Vec> witness) {
    out.push_back({ax, !witness.has_value(), std::move(witness)});
  };

  // A1: sigma i = i, i.e. tau i = 0 (witness in B)
  add(Axiom::A1, nonzero_input(a.tau() * m.i()));
  // A2: N tau = 0 (witness in A)
  add(Axiom::A2, nonzero_input(m.n() * a.tau()));
  // A3: i N = tau^(p-1) (witness in A)
  add(Axiom::A3, differing_input(m.i() * m.n(), a.norm_operator()));
  // A4: N i = 0 (witness in B)
  add(Axiom::A4, nonzero_input(m.n() * m.i()));
  // A5: ker i = K_a (witness in B)
  add(Axiom::A5, subspace_difference(kernel(m.i()), m.k_a()));

  const Subspace norm_group = m.norm_group();
  const Subspace radical = a.radical_part();
  if (m.p() > 2) add(Axiom::A6, m.k_a().witness_outside(norm_group));

  // A7: tau A cap A^G = i(K_xi) + i(N A) (witness in A)
  Subspace lhs = radical.intersect(a.fixed_part());
  Subspace rhs = m.restrict_image(m.k_xi()) + m.restrict_image(norm_group);
  add(Axiom::A7, subspace_difference(lhs, rhs));

  // A8: ker N = tau A + i(B) (witness in A)
  add(Axiom::A8, subspace_difference(kernel(m.n()), radical + image(m.i())));

  if (m.flags().a_sum_two_squares) add(Axiom::FlagA, m.k_a().witness_outside(norm_group));
  if (m.flags().xi_is_norm) {
    // At p = 2, xi_2 = -1 is a norm exactly when a is a sum of two squares,
    // so the flag also carries K_a.
    auto w = m.k_xi().witness_outside(norm_group);
    if (!w && m.p() == 2) w = m.k_a().witness_outside(norm_group);
    add(Axiom::FlagXi, w);
  }
  return out;
}

bool satisfies_base_axioms(const ExtensionModel& m) {
  for (const auto& r : check_axioms(m)) {
    bool base = r.axiom == Axiom::A1 || r.axiom == Axiom::A2 || r.axiom == Axiom::A3 ||
                r.axiom == Axiom::A4 || r.axiom == Axiom::A5 || r.axiom == Axiom::A8;
    if (base && !r.holds) return false;
  }
  return true;
}

TheoremReport validate_model(const ExtensionModel& m, bool require_a7) {
  auto report = make_report(m, "validate_model");
  std::ostringstream failed;
  for (auto& r : check_axioms(m)) {
    if (r.axiom == Axiom::A7 && !require_a7) continue;
    if (!r.holds) {
      failed << (report.witnesses.empty() ? "" : ", ") << to_string(r.axiom);
      report.witnesses.push_back(*r.witness);
    }
  }
  if (!report.witnesses.empty()) {
    report.verdict = Verdict::fail;
    report.detail = "violated: " + failed.str();
  } else {
    report.detail = require_a7 ? "A1-A8 hold" : "A1-A6, A8 hold";
  }
  return report;
}

TheoremReport h90_holds(const ExtensionModel& m) {
  require_axioms(m, "h90_holds", false, false);
  auto r = make_report(m, "h90_holds");
  if (auto w = kernel(m.n()).witness_outside(m.a().radical_part()))
    fail(r, "ker N strictly contains (sigma-1)A", {*w});
  else
    r.detail = "ker N = (sigma-1)A";
  return r;
}

TheoremReport small_h90(const ExtensionModel& m) {
  require_axioms(m, "small_h90", false, false);
  auto r = make_report(m, "small_h90");
  const Subspace radical = m.a().radical_part();
  for (std::size_t j = 0; j < m.dim_b(); ++j) {
    Vec img = m.i().column(j);
    if (!radical.contains(img)) {
      fail(r, "i(B) not inside (sigma-1)A", {unit_vector(m.dim_b(), j), img});
      return r;
    }
  }
  r.detail = "i(B) inside (sigma-1)A";
  return r;
}

TheoremReport criterion_p2(const ExtensionModel& m) {
  if (m.p() != 2) throw Error("criterion_p2 applies only to p = 2");
  require_axioms(m, "criterion_p2", false, false);
  auto r = make_report(m, "criterion_p2");
  Subspace rhs = m.norm_group() + m.k_a();
  if (auto w = Subspace::full(m.field(), m.dim_b()).witness_outside(rhs))
    fail(r, "B != N(A) + K_a", {*w});
  else
    r.detail = "B = N(A) + K_a";
  return r;
}

TheoremReport criterion_podd(const ExtensionModel& m) {
  if (m.p() == 2) throw Error("criterion_podd applies only to odd p");
  require_axioms(m, "criterion_podd", true, true);
  auto r = make_report(m, "criterion_podd");
  Subspace rhs = m.norm_group() + m.k_xi();
  if (auto w = Subspace::full(m.field(), m.dim_b()).witness_outside(rhs))
    fail(r, "B != N(A) + K_xi", {*w});
  else
    r.detail = "B = N(A) + K_xi";
  return r;
}

TheoremReport cor_surjective_equiv(const ExtensionModel& m) {
  const auto& fl = m.flags();
  bool asserted = m.p() == 2 ? (fl.a_sum_two_squares || fl.xi_is_norm) : fl.xi_is_norm;
  if (!asserted) throw Error("cor_surjective_equiv: hypothesis not asserted");
  for (const auto& ax : check_axioms(m))
    if ((ax.axiom == Axiom::FlagA || ax.axiom == Axiom::FlagXi) && !ax.holds)
      throw Error("cor_surjective_equiv: flag " + std::string(to_string(ax.axiom)) +
                  " set but its inclusion fails");
  auto r = make_report(m, "cor_surjective_equiv");
  auto h = h90_holds(m);
  auto w = Subspace::full(m.field(), m.dim_b()).witness_outside(m.norm_group());
  bool surjective = !w.has_value();
  std::string state = std::string("N ") + (surjective ? "surjective" : "not surjective") +
                      ", h90 " + std::string(to_string(h.verdict));
  if (surjective != h.passed()) {
    std::vector<Vec> ws;
    if (w) ws.push_back(*w);
    ws.insert(ws.end(), h.witnesses.begin(), h.witnesses.end());
    if (ws.empty()) ws.push_back(Vec(m.dim_b(), 0));
    fail(r, "equivalence broken: " + state, std::move(ws));
  } else {
    r.detail = state;
  }
  return r;
}

TheoremReport check_sigmamin1(const ExtensionModel& m) {
  require_axioms(m, "check_sigmamin1", true, false);
  auto r = make_report(m, "check_sigmamin1");
  const auto& a = m.a();
  Subspace lhs = a.radical_part().intersect(a.fixed_part());
  Subspace rhs = m.restrict_image(m.k_xi()) + m.restrict_image(m.norm_group());
  if (auto w = lhs.witness_outside(rhs))
    fail(r, "(sigma-1)A cap A^G not inside i(K_xi) + iN(A)", {*w});
  else if (auto w2 = rhs.witness_outside(lhs))
    fail(r, "i(K_xi) + iN(A) not inside (sigma-1)A cap A^G", {*w2});
  else
    r.detail = "(sigma-1)A cap A^G = i(K_xi) + iN(A)";
  return r;
}

namespace {

/// Empty optional when the lemma's conclusion holds for y.
std::optional<Vec> length_lemma_violation(const ExtensionModel& m, const Subspace& norm_part,
                                          const Subspace& xi_norm_part,
                                          std::span<const Elem> y, int l) {
  Vec v(y.begin(), y.end());
  for (int s = 0; s < l - 1; ++s) v = m.a().tau().apply(v);
  const Subspace& target = l >= 3 ? norm_part : xi_norm_part;
  if (target.contains(v)) return std::nullopt;
  return v;
}

}  // namespace

TheoremReport check_length_lemma(const ExtensionModel& m, std::span<const Elem> y) {
  int l = m.a().length(y);
  if (l < 2) throw Error("check_length_lemma: length(y) = " + std::to_string(l) + " < 2");
  auto r = make_report(m, "check_length_lemma");
  Subspace norm_part = m.restrict_image(m.norm_group());
  Subspace xi_norm_part = m.restrict_image(m.k_xi()) + norm_part;
  if (auto v = length_lemma_violation(m, norm_part, xi_norm_part, y, l)) {
    fail(r,
         "length " + std::to_string(l) + ": (sigma-1)^" + std::to_string(l - 1) + " y outside " +
             (l >= 3 ? "iN(A)" : "i(K_xi) + iN(A)"),
         {Vec(y.begin(), y.end()), *v});
  } else {
    r.detail = "length " + std::to_string(l) + ": conclusion holds";
  }
  return r;
}

TheoremReport check_length_lemma_bulk(const ExtensionModel& m) {
  auto r = make_report(m, "check_length_lemma");
  Subspace norm_part = m.restrict_image(m.norm_group());
  Subspace xi_norm_part = m.restrict_image(m.k_xi()) + norm_part;
  // Elements of length exactly l span ker tau^l, and the conclusion is linear
  // in y, so checking a basis of ker tau^l covers every element of length l.
  std::size_t checked = 0;
  for (int l = 2; l <= m.p(); ++l) {
    const Subspace upper = kernel(m.a().tau_power(static_cast<std::size_t>(l)));
    const Subspace lower = kernel(m.a().tau_power(static_cast<std::size_t>(l - 1)));
    if (upper.dim() == lower.dim()) continue;
    for (const auto& y : upper.basis_vectors()) {
      if (lower.contains(y)) continue;
      ++checked;
      if (auto v = length_lemma_violation(m, norm_part, xi_norm_part, y, l)) {
        fail(r, "length " + std::to_string(l) + " element violates the conclusion", {y, *v});
        return r;
      }
    }
  }
  r.detail = "conclusion holds on every element of length >= 2 (" + std::to_string(checked) +
             " spanning elements checked)";
  return r;
}

TheoremReport summand_condition(const ExtensionModel& m) {
  require_axioms(m, "summand_condition", false, false);
  auto r = make_report(m, "summand_condition");
  for (std::size_t j = 0; j < m.dim_b(); ++j) {
    Vec img = m.i().column(j);
    if (std::all_of(img.begin(), img.end(), [](Elem e) { return e == 0; })) continue;
    if (m.a().is_trivial_summand(img)) {
      fail(r, "i(b) spans a trivial direct summand of A", {unit_vector(m.dim_b(), j), img});
      return r;
    }
  }
  r.detail = "no nonzero i(Q) is a direct summand";
  return r;
}

std::optional<RationalSummand> find_rational_summand(const ExtensionModel& m) {
  require_axioms(m, "find_rational_summand", false, false);
  const Subspace radical = m.a().radical_part();
  const Field& f = m.field();
  for (std::size_t j = 0; j < m.dim_b(); ++j) {
    Vec v = m.i().column(j);
    if (radical.contains(v)) continue;
    // A functional phi vanishing on (sigma-1)A with phi(v) = 1 has a
    // sigma-stable kernel complementary to the line through v.
    Subspace left_kernel = kernel(m.a().tau().transpose());
    for (const auto& phi : left_kernel.basis_vectors()) {
      int dot = 0;
      for (std::size_t k = 0; k < v.size(); ++k) dot += phi[k] * v[k];
      Elem c = f.reduce(dot);
      if (!c) continue;
      Matrix phi_row = Matrix::from_row_vectors(f, m.dim_a(), {phi});
      return RationalSummand{Subspace::span(f, m.dim_b(), {unit_vector(m.dim_b(), j)}),
                             kernel(phi_row)};
    }
    throw Error("internal error: no functional separates i(b) from (sigma-1)A");
  }
  return std::nullopt;
}

TheoremReport h1_implies_h90(const ExtensionModel& m) {
  require_axioms(m, "h1_implies_h90", false, false);
  auto r = make_report(m, "h1_implies_h90");
  auto h1 = m.a().h1();
  auto h = h90_holds(m);
  if (h1.dim == 0 && !h.passed())
    fail(r, "H^1 = 0 but h90 fails", h.witnesses);
  else
    r.detail = "dim H^1 = " + std::to_string(h1.dim) + ", h90 " + std::string(to_string(h.verdict));
  return r;
}

TheoremReport hs_equivalences(const CyclicModule& a) {
  TheoremReport r;
  r.checker = "hs_equivalences";
  auto h1 = a.h1();
  bool free = a.is_free();
  if ((h1.dim == 0) != free) {
    r.verdict = Verdict::fail;
    r.detail = "H^1 vanishing and freeness disagree";
    r.witnesses = h1.representatives.empty() ? std::vector<Vec>{Vec(a.dim(), 0)} : h1.representatives;
  } else {
    r.detail = std::string("dim H^1 = ") + std::to_string(h1.dim) + (free ? ", free" : ", not free");
  }
  return r;
}

}  // namespace h90
