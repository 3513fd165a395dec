#include "suites.hpp"

#include <functional>

#include "h90/synthgen.hpp"

namespace h90::cli {

namespace {

TheoremReport skipped(std::string checker, std::string reason, const ExtensionModel& m) {
  TheoremReport r;
  r.checker = std::move(checker);
  r.verdict = Verdict::skipped;
  r.detail = std::move(reason);
  r.fingerprint = fingerprint(m);
  return r;
}

/// Runs a checker; a failed precondition becomes a skipped report.
TheoremReport guarded(const std::string& name, const ExtensionModel& m,
                      const std::function<TheoremReport()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return skipped(name, e.what(), m);
  }
}

TheoremReport equivalence(std::string name, const TheoremReport& a, const TheoremReport& b,
                          const ExtensionModel& m) {
  if (a.verdict == Verdict::skipped || b.verdict == Verdict::skipped)
    return skipped(std::move(name), "not applicable: " + (a.verdict == Verdict::skipped ? a.detail : b.detail), m);
  TheoremReport r;
  r.checker = std::move(name);
  r.fingerprint = fingerprint(m);
  r.detail = a.checker + " " + std::string(to_string(a.verdict)) + ", " + b.checker + " " +
             std::string(to_string(b.verdict));
  if (a.verdict != b.verdict) {
    r.verdict = Verdict::fail;
    r.witnesses = !a.witnesses.empty() ? a.witnesses : b.witnesses;
    if (r.witnesses.empty()) r.witnesses.push_back(Vec(m.dim_a(), 0));
  }
  return r;
}

bool is_zero_vec(const Vec& v) {
  for (Elem e : v)
    if (e) return false;
  return true;
}

TheoremReport verify_rational_summand(const ExtensionModel& m, const TheoremReport& fast) {
  TheoremReport r;
  r.checker = "rational_summand_witness";
  r.fingerprint = fingerprint(m);
  auto found = find_rational_summand(m);
  if (!found) {
    if (!fast.passed()) {
      r.verdict = Verdict::fail;
      r.detail = "summand_condition fails but no summand was constructed";
      r.witnesses = fast.witnesses;
    } else {
      r.detail = "no summand exists and none was constructed";
    }
    return r;
  }
  const Subspace w = m.restrict_image(found->q);
  const Subspace& pc = found->p;
  const bool stable = pc.contains(pc.image_under(m.a().sigma()));
  const bool direct = w.intersect(pc).is_zero() && w.dim() + pc.dim() == m.dim_a();
  if (w.is_zero() || !stable || !direct) {
    r.verdict = Verdict::fail;
    r.detail = std::string("constructed pair is not a summand:") + (w.is_zero() ? " i(Q) = 0" : "") +
               (stable ? "" : " P not sigma-stable") + (direct ? "" : " sum not direct");
    r.witnesses = {found->q.basis_vectors().empty() ? Vec(m.dim_b(), 0) : found->q.basis_vectors().front()};
    return r;
  }
  if (fast.passed()) {
    r.verdict = Verdict::fail;
    r.detail = "summand constructed although summand_condition passes";
    r.witnesses = {found->q.basis_vectors().front()};
    return r;
  }
  r.detail = "A = i(Q) + P verified directly, dim i(Q) = " + std::to_string(w.dim());
  return r;
}

TheoremReport generator_invariance(const ExtensionModel& m, const TheoremReport& base) {
  TheoremReport r;
  r.checker = "generator_invariance";
  r.fingerprint = fingerprint(m);
  for (int c = 2; c < m.p(); ++c) {
    auto h = h90_holds(m.with_generator_power(c));
    if (h.verdict != base.verdict) {
      r.verdict = Verdict::fail;
      r.detail = "h90 verdict changes when sigma is replaced by sigma^" + std::to_string(c);
      r.witnesses = h.witnesses.empty() ? base.witnesses : h.witnesses;
      return r;
    }
  }
  r.detail = m.p() > 2 ? "h90 verdict equal for sigma^c, c = 1.." + std::to_string(m.p() - 1)
                       : "p = 2: sigma is the only generator";
  return r;
}

}  // namespace

bool is_suite(const std::string& name) {
  return name == "h90" || name == "criteria" || name == "summand" || name == "hs" ||
         name == "lemma" || name == "all";
}

std::vector<Outcome> run_model_suite(const ExtensionModel& m, const std::string& suite,
                                     bool verdicts_observed) {
  if (!is_suite(suite)) throw Error("unknown suite '" + suite + "'");
  const Kind verdict_kind = verdicts_observed ? Kind::observation : Kind::check;
  const bool all = suite == "all";
  std::vector<Outcome> out;
  const TheoremReport h = h90_holds(m);

  if (all || suite == "h90") {
    out.push_back({h, verdict_kind});
    auto s = small_h90(m);
    out.push_back({s, verdict_kind});
    out.push_back({equivalence("small_h90_equiv", s, h, m), Kind::check});
    out.push_back({generator_invariance(m, h), Kind::check});
  }
  if (all || suite == "criteria") {
    if (suite == "criteria") out.push_back({h, verdict_kind});
    const std::string name = m.p() == 2 ? "criterion_p2" : "criterion_podd";
    auto c = guarded(name, m, [&] { return m.p() == 2 ? criterion_p2(m) : criterion_podd(m); });
    out.push_back({c, verdict_kind});
    out.push_back({equivalence(name + "_equiv", c, h, m), Kind::check});
    out.push_back({guarded("cor_surjective_equiv", m, [&] { return cor_surjective_equiv(m); }),
                   Kind::check});
  }
  if (all || suite == "summand") {
    auto s = summand_condition(m);
    out.push_back({s, verdict_kind});
    out.push_back({equivalence("summand_equiv", s, h, m), Kind::check});
    out.push_back({verify_rational_summand(m, s), Kind::check});
  }
  if (all || suite == "hs") {
    out.push_back({hs_equivalences(m), Kind::check});
    out.push_back({h1_implies_h90(m), Kind::check});
  }
  if (all || suite == "lemma") {
    out.push_back({guarded("check_length_lemma", m, [&] { return check_length_lemma_bulk(m); }),
                   Kind::check});
    out.push_back({guarded("check_sigmamin1", m, [&] { return check_sigmamin1(m); }), Kind::check});
  }
  return out;
}

std::vector<Outcome> run_oracles(const ExtensionModel& m) {
  std::vector<Outcome> out;
  const auto fast_summand = summand_condition(m);
  const auto slow_summand = oracle_enumerate_summand_pairs(m);
  out.push_back({equivalence("summand_oracle_agree", fast_summand, slow_summand, m), Kind::check});

  const auto h = h90_holds(m);
  const auto ex = oracle_exactness(m);
  auto agree = equivalence("exactness_oracle_agree", h, ex, m);
  if (agree.passed()) {
    // Every fast witness must lie in ker N outside (sigma-1)A.
    const Subspace ker_n = kernel(m.n());
    const Subspace rad = m.a().radical_part();
    for (const auto& w : h.witnesses)
      if (!ker_n.contains(w) || rad.contains(w) || is_zero_vec(w)) {
        agree.verdict = Verdict::fail;
        agree.detail = "h90 witness is not in ker N minus (sigma-1)A";
        agree.witnesses = {w};
      }
  }
  out.push_back({agree, Kind::check});

  TheoremReport d;
  d.checker = "decompose_oracle_agree";
  d.fingerprint = fingerprint(m);
  const auto fast = m.a().decompose().profile;
  const auto slow = oracle_decompose(m.a());
  if (fast == slow) {
    d.detail = "profile " + fast.to_string();
  } else {
    d.verdict = Verdict::fail;
    d.detail = "decompose " + fast.to_string() + " vs oracle " + slow.to_string();
    d.witnesses = {Vec(m.dim_a(), 0)};
  }
  out.push_back({d, Kind::check});
  return out;
}

}  // namespace h90::cli
