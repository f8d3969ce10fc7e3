#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vafilt/filtration/engine.hpp"
#include "vafilt/linalg/subspace.hpp"

namespace vafilt {

enum class CheckStatus { Pass, Fail, Unchecked };
std::string status_name(CheckStatus s);

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::optional<Witness> witness;

  bool passed() const { return status == CheckStatus::Pass; }
};

CheckOutcome make_check(std::string name, bool holds, std::string detail = {},
                        std::optional<Witness> witness = std::nullopt);

struct SliceEntry {
  std::string weight;
  int dim = 0;
  std::string status;  ///< empty, or "complete"/"truncated" for quotient tables
};

struct FamilyTable {
  std::string name;
  long n = 0;
  std::vector<SliceEntry> slices;
};

template <class Tag>
FamilyTable family_table(std::string name, long n, const GradedSubspace<Tag>& s) {
  FamilyTable t{std::move(name), n, {}};
  for (Ambient::Key k : s.ambient().keys()) t.slices.push_back({s.ambient().weight_str(k), s.dim(k), {}});
  return t;
}

/// Everything a run emits. Serialization is deterministic: fixed key order,
/// weights as "p/q", no timing or thread information.
struct Report {
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<FamilyTable> families;
  std::vector<CheckOutcome> checks;
  std::vector<Certificate> certificates;

  bool all_passed() const;
  void append(const std::vector<CheckOutcome>& more) {
    checks.insert(checks.end(), more.begin(), more.end());
  }
};

nlohmann::ordered_json to_json(const Report& r);
/// Fixed-width text table of the families followed by one line per check.
std::string to_text(const Report& r);

}  // namespace vafilt
