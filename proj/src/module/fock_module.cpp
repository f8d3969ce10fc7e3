#include "vafilt/module/fock_module.hpp"

#include <algorithm>
#include <numeric>

#include "vafilt/core/errors.hpp"

namespace vafilt {

namespace {

void accumulate(FockModule::FockVec& into, const FockModule::FockVec& x, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [p, a] : x) {
    auto [it, inserted] = into.try_emplace(p, 0);
    it->second += a * c;
    if (it->second.is_zero()) into.erase(it);
  }
}

long total(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0L); }

}  // namespace

FockModule::FockModule(const Heisenberg& va, long cutoff_ticks)
    : TwistedModule(cutoff_ticks), va_(va) {
  int T = va.period();
  int r = va.generator_sector();
  for (long t = 0; t <= cutoff_ticks; ++t) {
    for (auto& p : partitions_desc(t, mode_parts(T, r, t))) {
      Label l = labels_.add(monomial_name(p, T, "vac"), t, 0);
      by_partition_.emplace(p, l);
      parts_.push_back(std::move(p));
    }
  }
}

std::string FockModule::id() const {
  return std::string(period() == 2 ? "twisted-fock" : "fock") + "/W<=" +
         ticks_str(cutoff_ticks(), period());
}

std::optional<Label> FockModule::find_partition(const Partition& p) const {
  auto it = by_partition_.find(p);
  if (it == by_partition_.end()) return std::nullopt;
  return it->second;
}

FockModule::FockVec FockModule::generator_act(long mu, const Partition& w) const {
  if (mu == 0) return {};
  if (mu < 0) {
    Partition q = w;
    q.insert(std::upper_bound(q.begin(), q.end(), -mu, std::greater<>()), -mu);
    return {{q, Rational(1)}};
  }
  long mult = std::count(w.begin(), w.end(), mu);
  if (mult == 0) return {};
  Partition q = w;
  q.erase(std::find(q.begin(), q.end(), mu));
  return {{q, Rational(mu * mult, period())}};
}

FockModule::FockVec FockModule::generator_act_on(long mu, const FockVec& x) const {
  FockVec out;
  for (const auto& [p, c] : x) accumulate(out, generator_act(mu, p), c);
  return out;
}

// Least l >= 0 such that h_{q + r/T} w = 0 for all q >= l.
long FockModule::generator_depth(const Partition& w) const {
  int T = period();
  int r = va_.generator_sector();
  long q_max = -1;
  for (long p : w)
    if (floor_mod(p - r, T) == 0) q_max = std::max(q_max, (p - r) / T);
  return std::max(0L, q_max + 1);
}

FockModule::FockVec FockModule::act(Label u, long mu, const Partition& w) const {
  int T = period();
  if (floor_mod(mu, T) != va_.sector(u))
    throw SectorMismatch("mode " + ticks_str(mu, T) + " not in the coset of " + va_.name(u));
  long result_ticks = T * static_cast<long>(va_.weight(u)) + total(w) - mu - T;
  if (result_ticks < 0) return {};
  if (u == va_.vacuum()) return mu == -T ? FockVec{{w, Rational(1)}} : FockVec{};
  if (u == va_.generator()) return generator_act(mu, w);
  return memo_.get_or_compute(Key{u, mu, w}, [&] { return compute_act(u, mu, w); });
}

FockModule::FockVec FockModule::act_on(Label u, long mu, const FockVec& x) const {
  FockVec out;
  for (const auto& [p, c] : x) accumulate(out, act(u, mu, p), c);
  return out;
}

// u = a_m v with a = h, m = -k:
// (a_m v)_n w = sum_{i<K} sum_j binom(-l-r/T, i) binom(m+i, j) (-1)^j a_{m+l+i-j+r/T} v_{n-l-i+j-r/T} w
FockModule::FockVec FockModule::compute_act(Label u, long mu, const Partition& w) const {
  int T = period();
  long r = va_.generator_sector();
  auto [k, v] = va_.split_leftmost(u);
  long m = -k;
  const Partition& vparts = va_.partition(v);
  long p_max = vparts.empty() ? -1 : vparts.front();
  long K = std::max(0L, p_max - m + 1);
  long l = generator_depth(w);
  long wt_v = va_.weight(v);
  long w_ticks = total(w);
  Rational lr = -Rational(l * T + r, T);

  FockVec out;
  for (long i = 0; i < K; ++i) {
    Rational ci = rational_binomial(lr, i);
    if (ci.is_zero()) continue;
    long j_max = floor_div(T * wt_v + w_ticks - T - mu + (l + i) * T + r, T);
    for (long j = 0; j <= j_max; ++j) {
      Rational c = ci * integer_binomial(m + i, j) * sign_power(j);
      if (c.is_zero()) continue;
      long nu = mu - (l + i - j) * T - r;
      FockVec inner = act(v, nu, w);
      if (inner.empty()) continue;
      accumulate(out, generator_act_on((m + l + i - j) * T + r, inner), c);
    }
  }
  return out;
}

TwistedVector FockModule::mode_basis(Label u, const ModeIndex& m, Label w) const {
  int T = period();
  if (m.period() != T) throw SectorMismatch("mode period differs from module period");
  long result_ticks = T * static_cast<long>(va_.weight(u)) + weight_ticks(w) - m.ticks() - T;
  if (result_ticks < 0) return {};
  if (result_ticks > cutoff_ticks())
    throw CutoffExceeded(va_.name(u) + "_(" + m.str() + ") " + name(w) + " has weight " +
                         ticks_str(result_ticks, T) + " above module cutoff " +
                         ticks_str(cutoff_ticks(), T));
  TwistedVector out;
  for (const auto& [p, c] : act(u, m.ticks(), partition(w))) out.add(by_partition_.at(p), c);
  return out;
}

}  // namespace vafilt
