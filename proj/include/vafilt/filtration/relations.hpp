#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vafilt/filtration/engine.hpp"
#include "vafilt/report/report.hpp"

namespace vafilt {

/// Counts sampled instances of an inclusion and keeps the first violation.
class Tally {
 public:
  template <class Tag>
  void expect_member(const LinComb<Tag>& v, const GradedSubspace<Tag>& target,
                     const std::string& where) {
    ++checked_;
    if (failure_ || target.contains(v)) return;
    auto key = target.key_of(v);
    failure_ = where;
    witness_ = Witness{*key, target.ambient().weight_str(*key), target.describe(v)};
  }
  /// Passes when diff is empty; where() is only evaluated on the first failure.
  template <class Where>
  void expect_none(const std::optional<Witness>& diff, Where&& where) {
    ++checked_;
    if (failure_ || !diff) return;
    failure_ = where();
    witness_ = diff;
  }
  void skip() { ++skipped_; }
  void record(bool holds, const std::string& where) {
    ++checked_;
    if (!holds && !failure_) failure_ = where;
  }
  void merge(const Tally& o);
  long checked() const { return checked_; }
  bool failed() const { return failure_.has_value(); }
  /// Pass with counts, Fail with the first violation, Unchecked when nothing fit under the cutoff.
  CheckOutcome outcome(std::string name) const;

 private:
  long checked_ = 0;
  long skipped_ = 0;
  std::optional<std::string> failure_;
  std::optional<Witness> witness_;
};

/// Evaluates fn(i, tally) for every i, in parallel when configured; the merged
/// tally is identical in both modes.
template <class Fn>
Tally run_cases(std::size_t count, const ExecConfig& exec, Fn&& fn) {
  std::vector<Tally> parts(count);
  for_each_index(count, exec, [&](std::size_t i) { fn(i, parts[i]); });
  Tally out;
  for (const auto& t : parts) out.merge(t);
  return out;
}

struct RelationOptions {
  long n_max = 5;              ///< C_W(n) for n = 2..n_max
  long e_max = 9;              ///< E_W(n) for n = 0..e_max
  long containment_n_max = 4;  ///< E_m inside C_n checked for n = 2..containment_n_max
  int sample_weight = 3;       ///< weights of u sampled in the mode-action inclusions
  int mode_range = 3;          ///< modes m in [-mode_range, mode_range]
  bool algebra_side = true;
  bool module_side = true;
};

/// Bound on m in E_m(W) inside C_n(W), both the stated and the variant form,
/// together with the least m observed at the cutoff.
struct ContainmentBound {
  long n = 0;
  long bound = 0;
  long variant_bound = 0;
  std::optional<long> empirical_min;
};

struct RelationsResult {
  std::vector<CheckOutcome> checks;
  std::vector<ContainmentBound> bounds;
};

long containment_bound(long n, int T);
long containment_variant_bound(long n, int T);

RelationsResult verify_relations(FiltrationEngine& engine, const RelationOptions& opts);

/// W / C_n(W) per slice for n = 2..n_max. Throws InsufficientCutoff when the
/// cutoff is below the weight where C_n(W) can first be nonzero.
std::vector<FamilyTable> cofiniteness_report(FiltrationEngine& engine, long n_max);

/// Technical lemmas on products of u_{-2+r/T} modes and C_k stability.
std::vector<CheckOutcome> check_small_lemmas(FiltrationEngine& engine, const ExecConfig& exec);

}  // namespace vafilt
