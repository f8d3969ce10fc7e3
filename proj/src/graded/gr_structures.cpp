#include "vafilt/graded/gr_structures.hpp"

#include "vafilt/module/mode_calculus.hpp"

namespace vafilt {

GradedContext::GradedContext(FiltrationEngine& eng, GrFaults faults)
    : eng_(eng), faults_(faults), T_(eng.period()) {
  // E_n(V) lies in weights >= n/T, so index T*(cutoff+1) is already zero.
  const long top_v = static_cast<long>(T_) * (eng.v_cutoff() + 1);
  for (long n = 0; n <= top_v; ++n) ev_.push_back(&eng.E_V(n));
  if (ev_.back()->total_dim() != 0) throw Error("E_V(" + std::to_string(top_v) + ") is not zero");
  c2v_ = &eng.C_V(2);
  if (eng.has_module()) {
    const long top_w = eng.w_cutoff_ticks() + 1;
    for (long n = 0; n <= top_w; ++n) ew_.push_back(&eng.E_W(n));
    if (ew_.back()->total_dim() != 0) throw Error("E_W(" + std::to_string(top_w) + ") is not zero");
  }
}

const AlgebraSubspace& GradedContext::E_V(long n) const {
  if (n < 0) n = 0;
  return *ev_[static_cast<std::size_t>(std::min<long>(n, static_cast<long>(ev_.size()) - 1))];
}

const ModuleSubspace& GradedContext::E_W(long n) const {
  if (ew_.empty()) throw ConfigError("no module configured");
  if (n < 0) n = 0;
  return *ew_[static_cast<std::size_t>(std::min<long>(n, static_cast<long>(ew_.size()) - 1))];
}

int GradedContext::weight(const GrElement& a) const {
  return homogeneous_weight(eng_.algebra(), a.rep).value_or(0);
}

long GradedContext::weight_ticks(const GrModElement& m) const {
  return homogeneous_weight_ticks(eng_.module(), m.rep).value_or(0);
}

int GradedContext::sector(const GrElement& a) const {
  if (a.rep.is_zero()) return 0;
  auto s = homogeneous_sector(eng_.algebra(), a.rep);
  if (!s) throw SectorMismatch("gr class " + format(eng_.algebra(), a.rep) + " mixes sectors");
  return *s;
}

GrElement GradedContext::gr_product(const GrElement& a, const GrElement& b) const {
  VAElement rep = product_mode(eng_.algebra(), a.rep, -1, b.rep);
  if (faults_.flip_product_sign && weight(b) % 2 != 0) rep *= Rational(-1);
  return {a.degree + b.degree, std::move(rep)};
}

GrElement GradedContext::gr_partial(const GrElement& a) const {
  return {a.degree + T_, translate(eng_.algebra(), a.rep)};
}

GrElement GradedContext::gr_Yminus(const GrElement& a, long n, const GrElement& b) const {
  if (n < 0) throw ConfigError("Y_- coefficients need n >= 0, got " + std::to_string(n));
  return {a.degree + b.degree - n * T_, product_mode(eng_.algebra(), a.rep, n, b.rep)};
}

std::optional<Witness> GradedContext::gr_difference(const GrElement& a, const GrElement& b) const {
  const auto& mod = E_V(std::min(a.degree, b.degree) + T_);
  VAElement d = a.rep - b.rep;
  if (mod.contains(d)) return std::nullopt;
  VAElement r = mod.reduce(d);
  auto parts = mod.split(r);
  auto k = parts.begin()->first;
  return Witness{k, mod.ambient().weight_str(k), mod.describe(parts.begin()->second)};
}

bool GradedContext::gr_equal(const GrElement& a, const GrElement& b) const {
  return !gr_difference(a, b);
}

GrElement GradedContext::gr_add(const GrElement& a, const GrElement& b) const {
  return {std::min(a.degree, b.degree), a.rep + b.rep};
}

GrElement GradedContext::gr_scale(const Rational& c, const GrElement& a) const {
  return {a.degree, c * a.rep};
}

VAElement GradedContext::zhu_poisson(const VAElement& u, const VAElement& v, ZhuOp op) const {
  return c2v_->reduce(product_mode(eng_.algebra(), u, op == ZhuOp::Product ? -1 : 0, v));
}

GrModElement GradedContext::grW_product_action(const GrElement& a, const GrModElement& m) const {
  const int p = sector(a);
  TwistedVector rep = module_mode(eng_.module(), a.rep, ModeIndex::from_ticks(-T_ + p, T_), m.rep);
  return {a.degree + m.degree - p, std::move(rep)};
}

GrModElement GradedContext::grW_Yminus(const GrElement& a, long n, const GrModElement& m) const {
  const int p = sector(a);
  if (p == 0 && n < 0)
    throw ConfigError("sector-0 fields have no mode " + std::to_string(n) + " in Y_-");
  TwistedVector rep =
      module_mode(eng_.module(), a.rep, ModeIndex::from_ticks(n * T_ + p, T_), m.rep);
  return {a.degree + m.degree - (n + 1) * T_ - p, std::move(rep)};
}

std::optional<Witness> GradedContext::grW_difference(const GrModElement& a,
                                                     const GrModElement& b) const {
  const auto& mod = E_W(std::min(a.degree, b.degree) + 1);
  TwistedVector d = a.rep - b.rep;
  if (mod.contains(d)) return std::nullopt;
  auto parts = mod.split(mod.reduce(d));
  auto k = parts.begin()->first;
  return Witness{k, mod.ambient().weight_str(k), mod.describe(parts.begin()->second)};
}

bool GradedContext::grW_equal(const GrModElement& a, const GrModElement& b) const {
  return !grW_difference(a, b);
}

GrModElement GradedContext::grW_add(const GrModElement& a, const GrModElement& b) const {
  return {std::min(a.degree, b.degree), a.rep + b.rep};
}

GrModElement GradedContext::grW_scale(const Rational& c, const GrModElement& a) const {
  return {a.degree, c * a.rep};
}

std::vector<GrElement> GradedContext::gr_sample(int max_weight) const {
  std::vector<GrElement> out;
  const auto& va = eng_.algebra();
  auto split = [&](const VAElement& v) { return sector_decompose(va, v); };
  for (long d = 0; d < static_cast<long>(ev_.size()); d += T_) {
    const auto& big = E_V(d);
    if (big.total_dim() == 0) break;
    for (long k : big.ambient().keys()) {
      if (k > max_weight) break;
      for (auto& rep : quotient_representatives(big, E_V(d + T_), k, split))
        out.push_back({d, std::move(rep)});
    }
  }
  return out;
}

std::vector<GrModElement> GradedContext::grW_sample(long max_ticks) const {
  std::vector<GrModElement> out;
  auto split = [](const TwistedVector& w) { return std::vector<TwistedVector>{w}; };
  for (long s = 0; s < static_cast<long>(ew_.size()); ++s) {
    const auto& big = E_W(s);
    if (big.total_dim() == 0) break;
    for (long k : big.ambient().keys()) {
      if (k > max_ticks) break;
      for (auto& rep : quotient_representatives(big, E_W(s + 1), k, split))
        out.push_back({s, std::move(rep)});
    }
  }
  return out;
}

}  // namespace vafilt
