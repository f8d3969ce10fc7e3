#include "vafilt/report/report.hpp"

#include <iomanip>
#include <sstream>

namespace vafilt {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unchecked: return "unchecked";
  }
  return "?";
}

CheckOutcome make_check(std::string name, bool holds, std::string detail,
                        std::optional<Witness> witness) {
  return {std::move(name), holds ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail),
          holds ? std::nullopt : std::move(witness)};
}

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

namespace {

/// Most factors a spanning product of the slice can have: each factor of the
/// reduced E recursions raises the weight by at least 2 (V) or 1 + 1/T (W).
long max_factors(const Certificate& c, Ambient::Key k) {
  switch (c.family) {
    case Family::EV: return k / 2;
    case Family::EW: return k / (c.key_period + 1);
    default: return 1;
  }
}

}  // namespace

nlohmann::ordered_json to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["config"] = r.config;
  ordered_json fams = ordered_json::array();
  for (const auto& f : r.families) {
    ordered_json slices = ordered_json::array();
    for (const auto& s : f.slices) {
      ordered_json e{{"weight", s.weight}, {"dim", s.dim}};
      if (!s.status.empty()) e["status"] = s.status;
      slices.push_back(std::move(e));
    }
    fams.push_back({{"name", f.name}, {"n", f.n}, {"slices", std::move(slices)}});
  }
  j["families"] = std::move(fams);
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e{{"name", c.name}, {"status", status_name(c.status)}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (c.witness)
      e["witness"] = {{"weight", c.witness->weight}, {"vector", c.witness->vector}};
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  ordered_json certs = ordered_json::array();
  for (const auto& c : r.certificates) {
    ordered_json slices = ordered_json::array();
    for (const auto& [k, gens] : c.generators)
      slices.push_back({{"weight", ticks_str(k, c.key_period)},
                        {"max_factors", max_factors(c, k)},
                        {"generators", gens}});
    certs.push_back({{"family", family_name(c.family)}, {"n", c.n}, {"slices", std::move(slices)}});
  }
  j["certificates"] = std::move(certs);
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& f : r.families) {
    os << f.name << "(" << f.n << ")";
    for (const auto& s : f.slices) {
      os << "  " << s.weight << ":" << s.dim;
      if (s.status == "truncated") os << "*";
    }
    os << "\n";
  }
  if (!r.families.empty() && !r.checks.empty()) os << "\n";
  for (const auto& c : r.checks) {
    os << std::left << std::setw(10) << status_name(c.status) << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
    if (c.witness) os << "          witness at weight " << c.witness->weight << ": " << c.witness->vector << "\n";
  }
  return os.str();
}

}  // namespace vafilt
