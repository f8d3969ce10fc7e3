#pragma once

#include <optional>
#include <vector>

#include "vafilt/filtration/engine.hpp"
#include "vafilt/report/report.hpp"

namespace vafilt {

/// Class rep + E_{degree+T}(V) in gr(V); degree is a multiple of T.
struct GrElement {
  long degree = 0;
  VAElement rep;
};

/// Class rep + E_{degree+1}(W) in gr(W).
struct GrModElement {
  long degree = 0;
  TwistedVector rep;
};

enum class ZhuOp { Product, Bracket };

/// Deliberate defects used to confirm that the checks can fail.
struct GrFaults {
  bool flip_product_sign = false;  ///< negate gr products whose right factor has odd weight
};

/// Associated graded objects over a filtration engine. Construction computes
/// every filtration subspace the operations can reference, so all operations
/// are const and safe to call from parallel checks. Operations whose inputs or
/// outputs exceed the engine cutoffs throw CutoffExceeded.
class GradedContext {
 public:
  explicit GradedContext(FiltrationEngine& eng, GrFaults faults = {});

  FiltrationEngine& engine() const { return eng_; }
  int period() const { return T_; }
  const AlgebraSubspace& E_V(long n) const;
  const ModuleSubspace& E_W(long n) const;
  const AlgebraSubspace& C2_V() const { return *c2v_; }
  bool has_module() const { return eng_.has_module(); }

  /// rep must be homogeneous; zero reps are allowed.
  int weight(const GrElement& a) const;
  long weight_ticks(const GrModElement& m) const;
  /// Sector of a nonzero sector-homogeneous rep (0 for zero).
  int sector(const GrElement& a) const;

  GrElement gr_product(const GrElement& a, const GrElement& b) const;
  GrElement gr_partial(const GrElement& a) const;
  /// Coefficient of x^{-n-1} in Y_-(a, x) b, n >= 0.
  GrElement gr_Yminus(const GrElement& a, long n, const GrElement& b) const;
  /// Class of a - b holds in E_{D+T}(V), D the smaller degree.
  bool gr_equal(const GrElement& a, const GrElement& b) const;
  std::optional<Witness> gr_difference(const GrElement& a, const GrElement& b) const;
  GrElement gr_add(const GrElement& a, const GrElement& b) const;
  GrElement gr_scale(const Rational& c, const GrElement& a) const;

  /// Canonical representative of the product u_{-1}v or bracket u_0 v modulo C_2(V).
  VAElement zhu_poisson(const VAElement& u, const VAElement& v, ZhuOp op) const;
  VAElement zhu_class(const VAElement& u) const { return c2v_->reduce(u); }

  /// u_{-1+p/T} w at degree rT + s - p; a must lie in one sector.
  GrModElement grW_product_action(const GrElement& a, const GrModElement& m) const;
  /// u_{n+p/T} w at degree rT + s - (n+1)T - p. Sector 0 requires n >= 0.
  GrModElement grW_Yminus(const GrElement& a, long n, const GrModElement& m) const;
  bool grW_equal(const GrModElement& a, const GrModElement& b) const;
  std::optional<Witness> grW_difference(const GrModElement& a, const GrModElement& b) const;
  GrModElement grW_add(const GrModElement& a, const GrModElement& b) const;
  GrModElement grW_scale(const Rational& c, const GrModElement& a) const;

  /// Sector-homogeneous representatives of a basis of E_{rT}/E_{(r+1)T} for
  /// every degree and every weight up to max_weight.
  std::vector<GrElement> gr_sample(int max_weight) const;
  /// Representatives of a basis of E_s/E_{s+1} for every s and weight up to max_ticks.
  std::vector<GrModElement> grW_sample(long max_ticks) const;

 private:
  FiltrationEngine& eng_;
  GrFaults faults_;
  int T_;
  std::vector<const AlgebraSubspace*> ev_;
  std::vector<const ModuleSubspace*> ew_;
  const AlgebraSubspace* c2v_ = nullptr;
};

/// Representatives of a basis of big/small at key k: rows of big (split into
/// sectors when split is given) that stay independent modulo small.
template <class Tag, class Split>
std::vector<LinComb<Tag>> quotient_representatives(const GradedSubspace<Tag>& big,
                                                   const GradedSubspace<Tag>& small,
                                                   Ambient::Key k, Split&& split) {
  SliceBasis acc = small.slice(k);
  std::vector<LinComb<Tag>> out;
  for (const auto& row : big.basis(k))
    for (const auto& part : split(row))
      if (acc.insert(big.to_row(part, k))) out.push_back(part);
  return out;
}

struct GrOptions {
  int v_weight = 4;       ///< gr(V) sample classes up to this weight
  long w_ticks = 7;       ///< gr(W) sample classes up to this weight (ticks)
  int mode_range = 2;     ///< sampled modes n in [-mode_range, mode_range] where allowed
};

std::vector<CheckOutcome> check_vpa_axioms(const GradedContext& ctx, const GrOptions& opts);
std::vector<CheckOutcome> check_twisted_vpa_module_axioms(const GradedContext& ctx,
                                                          const GrOptions& opts);
/// Quotient dimensions of V/C_2(V) and the Poisson identities for product and bracket.
std::vector<CheckOutcome> check_zhu_poisson(const GradedContext& ctx, int max_weight);

struct SpanningResult {
  std::vector<CheckOutcome> checks;
  std::vector<FamilyTable> tables;  ///< per slice: ambient dim, status "spanned" or "short by k"
};

/// Each gr(W) degree n <= max_degree is spanned by products of derivatives of
/// degree-0 classes acting on degree-0 classes; each gr(V) degree up to
/// v_degree_max (in units of T) by products of distinct derivatives.
SpanningResult check_generation(const GradedContext& ctx, long max_degree, long v_degree_max);

/// W up to max_ticks is spanned by ordered products of modes of a complement U
/// of C_2(V) (nonincreasing depths) applied to a complement M of C_2(W). When
/// drop_m is set that element of M is left out.
SpanningResult check_generating_spanning(const GradedContext& ctx, long max_ticks,
                                         std::optional<std::size_t> drop_m = std::nullopt);

}  // namespace vafilt
