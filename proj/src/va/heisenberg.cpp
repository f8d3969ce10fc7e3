#include "vafilt/va/heisenberg.hpp"

#include <algorithm>

#include "vafilt/core/errors.hpp"

namespace vafilt {

std::string monomial_name(const Partition& ticks, int period, const std::string& vacuum) {
  std::string s;
  for (long t : ticks) s += "h(-" + ticks_str(t, period) + ")";
  return s + vacuum;
}

Heisenberg::Heisenberg(int period, int cutoff) : VertexAlgebra(period, cutoff) {
  if (period != 1 && period != 2)
    throw UnsupportedPeriod("Heisenberg backend supports period 1 or 2, got " +
                            std::to_string(period));
  for (long w = 0; w <= cutoff; ++w) {
    std::vector<long> allowed;
    for (long k = 1; k <= w; ++k) allowed.push_back(k);
    for (auto& p : partitions_desc(w, allowed)) {
      int sector = period == 2 ? static_cast<int>(p.size() % 2) : 0;
      Label l = labels_.add(monomial_name(p, 1, "1"), w, sector);
      by_partition_.emplace(p, l);
      parts_.push_back(std::move(p));
    }
  }
  vacuum_ = by_partition_.at(Partition{});
  if (cutoff >= 1) generator_ = by_partition_.at(Partition{1});
}

std::string Heisenberg::id() const {
  return "heisenberg-T" + std::to_string(period()) + "/V<=" + std::to_string(cutoff());
}

std::optional<Label> Heisenberg::find_partition(const Partition& p) const {
  auto it = by_partition_.find(p);
  if (it == by_partition_.end()) return std::nullopt;
  return it->second;
}

std::pair<long, Label> Heisenberg::split_leftmost(Label u) const {
  const Partition& p = partition(u);
  if (p.empty()) throw Error("vacuum has no leftmost factor");
  Partition rest(p.begin() + 1, p.end());
  return {p.front(), by_partition_.at(rest)};
}

VAElement Heisenberg::generator_mode(long n, Label v) const {
  const Partition& p = partition(v);
  if (n == 0) return {};
  if (n < 0) {
    long wt = weight(v) - n;
    if (wt > cutoff())
      throw CutoffExceeded("h(" + std::to_string(n) + ") on " + name(v) + " exceeds cutoff " +
                           std::to_string(cutoff()));
    Partition q = p;
    q.insert(std::upper_bound(q.begin(), q.end(), -n, std::greater<>()), -n);
    return VAElement::basis(by_partition_.at(q));
  }
  long mult = std::count(p.begin(), p.end(), n);
  if (mult == 0) return {};
  Partition q = p;
  q.erase(std::find(q.begin(), q.end(), n));
  VAElement out;
  out.add(by_partition_.at(q), Rational(n * mult));
  return out;
}

VAElement Heisenberg::generator_mode(long n, const VAElement& v) const {
  VAElement out;
  for (const auto& [l, c] : v.terms()) out.add_scaled(generator_mode(n, l), c);
  return out;
}

VAElement Heisenberg::product_basis(Label u, long n, Label v) const {
  long wt = static_cast<long>(weight(u)) + weight(v) - n - 1;
  if (wt < 0) return {};
  if (wt > cutoff())
    throw CutoffExceeded("product " + name(u) + "_(" + std::to_string(n) + ") " + name(v) +
                         " exceeds cutoff " + std::to_string(cutoff()));
  if (u == vacuum_) return n == -1 ? VAElement::basis(v) : VAElement{};
  if (u == generator_) return generator_mode(n, v);
  return memo_.get_or_compute(Key{u, n, v}, [&] { return compute_product(u, n, v); });
}

// Iterate formula on the leftmost factor u = a_{-k} u':
// (a_m u')_n w = sum_i (-1)^i binom(m,i) (a_{m-i} u'_{n+i} w - (-1)^m u'_{m+n-i} a_i w).
VAElement Heisenberg::compute_product(Label u, long n, Label v) const {
  auto [k, rest] = split_leftmost(u);
  long m = -k;
  long wt_rest = weight(rest);
  long wt_v = weight(v);
  long i_max = std::max(wt_rest + wt_v - n - 1, wt_v);
  VAElement restv = VAElement::basis(rest);
  VAElement out;
  for (long i = 0; i <= i_max; ++i) {
    Rational c = sign_power(i) * integer_binomial(m, i);
    if (c.is_zero()) continue;
    if (wt_rest + wt_v - n - i - 1 >= 0) {
      VAElement inner = product_basis(rest, n + i, v);
      out.add_scaled(generator_mode(m - i, inner), c);
    }
    if (i >= 1 && i <= wt_v) {
      VAElement ai = generator_mode(i, v);
      if (!ai.is_zero()) out.add_scaled(product_mode(*this, restv, m + n - i, ai), -c * sign_power(m));
    }
  }
  return out;
}

}  // namespace vafilt
