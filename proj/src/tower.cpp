#include "h90/tower.hpp"

#include <sstream>

namespace h90 {

namespace {

TheoremReport tower_report(std::string checker, std::optional<int> degree = std::nullopt) {
  TheoremReport r;
  r.checker = std::move(checker);
  r.degree = degree;
  return r;
}

void fail(TheoremReport& r, std::string detail, std::vector<Vec> witnesses = {}) {
  r.verdict = Verdict::fail;
  r.detail = std::move(detail);
  r.witnesses = std::move(witnesses);
}

void require_degree(const DegreeTower& t, int n) {
  if (n < 1 || n > t.n_max)
    throw Error("degree " + std::to_string(n) + " outside 1.." + std::to_string(t.n_max));
  if (t.models.size() != static_cast<std::size_t>(t.n_max))
    throw Error("tower has " + std::to_string(t.models.size()) + " models, expected " +
                std::to_string(t.n_max));
}

}  // namespace

std::vector<TheoremReport> check_tower_consistency(const DegreeTower& t) {
  std::vector<TheoremReport> out;
  const bool sizes_ok = t.models.size() == static_cast<std::size_t>(t.n_max) &&
                        t.b_dims.size() == static_cast<std::size_t>(t.n_max) + 2 &&
                        t.cup_a.size() == static_cast<std::size_t>(t.n_max) + 1 &&
                        t.cup_xi.size() == static_cast<std::size_t>(t.n_max) + 1;
  if (!sizes_ok) {
    auto r = tower_report("tower_consistency");
    fail(r, "tower arrays do not cover degrees 1..n_max (+1 for cup maps)");
    out.push_back(r);
    return out;
  }
  for (int n = 1; n <= t.n_max + 1; ++n) {
    auto r = tower_report("tower_consistency", n);
    const auto un = static_cast<std::size_t>(n);
    const Matrix& ca = t.cup_a_at(n);
    const Matrix& cx = t.cup_xi_at(n);
    if (ca.rows() != t.b_dims[un] || ca.cols() != t.b_dims[un - 1] || cx.rows() != t.b_dims[un] ||
        cx.cols() != t.b_dims[un - 1]) {
      fail(r, "cup map shape does not match b_dims");
      out.push_back(r);
      continue;
    }
    if (n > t.n_max) {
      r.detail = "cup maps into degree " + std::to_string(n) + " have the right shape";
      out.push_back(r);
      continue;
    }
    const ExtensionModel& m = t.model(n);
    r.fingerprint = fingerprint(m);
    if (m.p() != t.p || m.dim_b() != t.b_dims[un]) {
      fail(r, "model dimensions do not match b_dims");
    } else if (m.k_a() != image(ca)) {
      auto w = m.k_a().witness_outside(image(ca));
      if (!w) w = image(ca).witness_outside(m.k_a());
      fail(r, "K_a differs from the image of cup_a", {*w});
    } else if (m.k_xi() != image(cx)) {
      auto w = m.k_xi().witness_outside(image(cx));
      if (!w) w = image(cx).witness_outside(m.k_xi());
      fail(r, "K_xi differs from the image of cup_xi", {*w});
    } else {
      r.detail = "K_a = im cup_a, K_xi = im cup_xi, dim B = " + std::to_string(m.dim_b());
    }
    out.push_back(r);
  }
  return out;
}

TheoremReport root_relation_check(const DegreeTower& t) {
  require_degree(t, 1);
  auto r = tower_report("root_relation", 1);
  const ExtensionModel& m = t.model(1);
  r.fingerprint = fingerprint(m);
  if (t.root_class.size() != m.dim_a()) {
    fail(r, "root_class has the wrong dimension");
    return r;
  }
  const Vec lhs = m.a().tau().apply(t.root_class);
  const Vec rhs = m.i().apply(t.cup_xi_at(1).column(0));
  if (lhs != rhs) {
    fail(r, "(sigma-1) root_class = " + to_string(lhs) + " but i(xi) = " + to_string(rhs),
         {t.root_class});
    return r;
  }
  r.detail = "(sigma-1) root_class = i(xi) = " + to_string(lhs);
  return r;
}

TheoremReport cd_forward_check(const DegreeTower& t) {
  auto r = tower_report("cd_forward");
  if (!t.cd) {
    r.verdict = Verdict::skipped;
    r.detail = "cd is infinite";
    return r;
  }
  if (*t.cd > t.n_max) {
    r.verdict = Verdict::skipped;
    r.detail = "cd = " + std::to_string(*t.cd) + " exceeds n_max";
    return r;
  }
  for (int n = std::max(*t.cd, 1); n <= t.n_max; ++n) {
    const ExtensionModel& m = t.model(n);
    if (m.norm_group().dim() != m.dim_b()) {
      r.degree = n;
      r.fingerprint = fingerprint(m);
      fail(r, "N is not surjective in degree " + std::to_string(n) + " >= cd");
      return r;
    }
    auto h = h90_holds(m);
    if (!h.passed()) {
      r.degree = n;
      r.fingerprint = h.fingerprint;
      fail(r, "h90 fails in degree " + std::to_string(n) + " >= cd", h.witnesses);
      return r;
    }
  }
  r.detail = "N surjective and h90 valid in degrees " + std::to_string(*t.cd) + ".." +
             std::to_string(t.n_max);
  return r;
}

TheoremReport hereditary_check(const DegreeTower& t) {
  require_degree(t, t.n_max);
  auto r = tower_report("hereditary");
  std::ostringstream seq;
  std::optional<int> first_pass;
  for (int n = 1; n <= t.n_max; ++n) {
    auto h = h90_holds(t.model(n));
    seq << (n > 1 ? " " : "") << n << ":" << to_string(h.verdict);
    if (h.passed()) {
      if (!first_pass) first_pass = n;
    } else if (first_pass) {
      r.degree = n;
      r.fingerprint = h.fingerprint;
      fail(r, "h90 valid in degree " + std::to_string(*first_pass) + " but fails in degree " +
                  std::to_string(n) + " (" + seq.str() + ")",
           h.witnesses);
      return r;
    }
  }
  r.detail = "verdicts upward closed: " + seq.str();
  return r;
}

TheoremReport hs_p2_ann_check(const DegreeTower& t, int n) {
  if (t.p != 2) throw Error("hs_p2_ann_check needs a p = 2 tower");
  require_degree(t, n);
  if (t.cup_a.size() < static_cast<std::size_t>(n) + 1)
    throw Error("missing cup maps for degree " + std::to_string(n));
  auto r = tower_report("hs_p2_ann", n);
  const ExtensionModel& m = t.model(n);
  r.fingerprint = fingerprint(m);
  const bool h1_zero = m.a().h1().dim == 0;
  const Subspace ann = kernel(t.cup_a_at(n + 1));
  const Subspace k = image(t.cup_a_at(n));
  const Subspace meet = ann.intersect(k);
  const bool direct = meet.is_zero() && (ann + k).dim() == m.dim_b();
  std::ostringstream os;
  os << "H1(A_" << n << ") " << (h1_zero ? "= 0" : "!= 0") << "; dim ann = " << ann.dim()
     << ", dim (a).B_" << (n - 1) << " = " << k.dim() << ", decomposition "
     << (direct ? "holds" : "fails");
  r.detail = os.str();
  if (h1_zero != direct) {
    std::vector<Vec> w;
    if (!meet.is_zero()) w.push_back(meet.basis_vectors().front());
    fail(r, r.detail, w.empty() ? std::vector<Vec>{Vec(m.dim_b(), 0)} : w);
  }
  return r;
}

}  // namespace h90
