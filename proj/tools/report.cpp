#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace h90::cli {

void Report::add(TheoremReport r, const ExtensionModel* m, Kind kind) {
  Record rec{std::move(r), kind, 0, 0, ""};
  if (m) {
    rec.dim_a = m->dim_a();
    rec.dim_b = m->dim_b();
    rec.profile = m->a().profile_from_ranks().to_string();
  }
  records_.push_back(std::move(rec));
}

void Report::skip(std::string checker, std::string reason, const ExtensionModel* m,
                  std::optional<int> degree) {
  TheoremReport r;
  r.checker = std::move(checker);
  r.verdict = Verdict::skipped;
  r.detail = std::move(reason);
  r.degree = degree;
  if (m) r.fingerprint = fingerprint(*m);
  add(std::move(r), m, Kind::check);
}

Aggregate& Report::aggregate(const std::string& property) {
  for (auto& a : aggregates_)
    if (a.property == property) return a;
  Aggregate a;
  a.property = property;
  aggregates_.push_back(std::move(a));
  return aggregates_.back();
}

bool Report::any_check_failed() const {
  for (const auto& r : records_)
    if (r.kind == Kind::check && r.report.verdict == Verdict::fail) return true;
  for (const auto& a : aggregates_)
    if (a.failed > 0) return true;
  return false;
}

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

nlohmann::json vec_json(const Vec& v) {
  auto out = nlohmann::json::array();
  for (Elem e : v) out.push_back(static_cast<int>(e));
  return out;
}

}  // namespace

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command_;
  j["records"] = nlohmann::json::array();
  for (const auto& rec : records_) {
    const auto& r = rec.report;
    nlohmann::json o;
    o["checker"] = r.checker;
    o["degree"] = r.degree ? nlohmann::json(*r.degree) : nlohmann::json(nullptr);
    o["verdict"] = std::string(to_string(r.verdict));
    o["kind"] = rec.kind == Kind::check ? "check" : "observation";
    o["detail"] = r.detail;
    if (!r.witnesses.empty()) {
      o["witness"] = nlohmann::json::array();
      for (const auto& w : r.witnesses) o["witness"].push_back(vec_json(w));
    }
    o["dims"] = {{"A", rec.dim_a}, {"B", rec.dim_b}};
    o["profile"] = rec.profile;
    o["fingerprint"] = hex(r.fingerprint);
    j["records"].push_back(std::move(o));
  }
  if (!aggregates_.empty()) {
    j["aggregates"] = nlohmann::json::array();
    for (const auto& a : aggregates_) {
      nlohmann::json o{{"property", a.property},
                       {"passed", a.passed},
                       {"failed", a.failed},
                       {"skipped", a.skipped}};
      if (a.first_failure) o["first_failure"] = *a.first_failure;
      if (a.counterexample) o["counterexample"] = *a.counterexample;
      j["aggregates"].push_back(std::move(o));
    }
  }
  if (!notes_.empty()) j["notes"] = notes_;
  j["status"] = any_check_failed() ? "fail" : "pass";
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "# " << command_ << "\n";
  for (const auto& n : notes_) os << "# " << n << "\n";
  for (const auto& rec : records_) {
    const auto& r = rec.report;
    os << std::left << std::setw(26) << r.checker << " ";
    os << std::setw(4) << (r.degree ? "n=" + std::to_string(*r.degree) : std::string("")) << " ";
    os << std::setw(7) << to_string(r.verdict) << " ";
    if (rec.kind == Kind::observation) os << "(observed) ";
    os << r.detail;
    if (rec.dim_a || rec.dim_b || !rec.profile.empty())
      os << " [dim A=" << rec.dim_a << ", dim B=" << rec.dim_b << ", " << rec.profile << "]";
    os << "\n";
    for (const auto& w : r.witnesses) os << "    witness " << to_string(w) << "\n";
  }
  for (const auto& a : aggregates_) {
    os << std::left << std::setw(26) << a.property << " " << a.passed << "/"
       << (a.passed + a.failed) << " passed";
    if (a.skipped) os << ", " << a.skipped << " skipped";
    if (a.first_failure) os << "; first failure: " << *a.first_failure;
    if (a.counterexample) os << "; counterexample " << *a.counterexample;
    os << "\n";
  }
  os << "status: " << (any_check_failed() ? "fail" : "pass") << "\n";
  return os.str();
}

}  // namespace h90::cli
