#include "vafilt/va/vertex_algebra.hpp"

#include "vafilt/core/errors.hpp"

namespace vafilt {

Label GradedLabels::add(std::string name, long grade, int sector) {
  if (by_name_.count(name)) throw ValidationError("duplicate label '" + name + "'");
  Label l = static_cast<Label>(names_.size());
  by_name_.emplace(name, l);
  names_.push_back(std::move(name));
  grades_.push_back(grade);
  sectors_.push_back(sector);
  by_grade_[grade].push_back(l);
  return l;
}

std::optional<Label> GradedLabels::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const std::vector<Label>& GradedLabels::at(long grade) const {
  static const std::vector<Label> empty;
  auto it = by_grade_.find(grade);
  return it == by_grade_.end() ? empty : it->second;
}

VertexAlgebra::VertexAlgebra(int period, int cutoff) : period_(period), cutoff_(cutoff) {
  if (period < 1) throw UnsupportedPeriod("period must be positive");
  if (cutoff < 0) throw ConfigError("cutoff must be nonnegative");
}

const std::vector<Label>& VertexAlgebra::basis(long weight) const {
  if (weight > cutoff_)
    throw CutoffExceeded("weight " + std::to_string(weight) + " exceeds algebra cutoff " +
                         std::to_string(cutoff_));
  return labels_.at(weight);
}

VAElement product_mode(const VertexAlgebra& va, const VAElement& u, long n, const VAElement& v) {
  VAElement out;
  for (const auto& [lu, cu] : u.terms()) {
    for (const auto& [lv, cv] : v.terms()) {
      long wt = static_cast<long>(va.weight(lu)) + va.weight(lv) - n - 1;
      if (wt < 0) continue;
      if (wt > va.cutoff())
        throw CutoffExceeded("product " + va.name(lu) + "_(" + std::to_string(n) + ") " +
                             va.name(lv) + " has weight " + std::to_string(wt) +
                             " above cutoff " + std::to_string(va.cutoff()));
      out.add_scaled(va.product_basis(lu, n, lv), cu * cv);
    }
  }
  return out;
}

VAElement translate(const VertexAlgebra& va, const VAElement& v) {
  return product_mode(va, v, -2, VAElement::basis(va.vacuum()));
}

VAElement automorphism_apply(const VertexAlgebra& va, const VAElement& v) {
  if (va.period() > 2)
    throw UnsupportedPeriod("automorphism action needs complex scalars for period " +
                            std::to_string(va.period()));
  VAElement out;
  for (const auto& [l, c] : v.terms()) out.add(l, va.sector(l) == 0 ? c : -c);
  return out;
}

std::vector<VAElement> sector_decompose(const VertexAlgebra& va, const VAElement& v) {
  std::vector<VAElement> parts(static_cast<std::size_t>(va.period()));
  for (const auto& [l, c] : v.terms()) parts[static_cast<std::size_t>(va.sector(l))].add(l, c);
  return parts;
}

std::optional<int> homogeneous_weight(const VertexAlgebra& va, const VAElement& v) {
  std::optional<int> w;
  for (const auto& [l, c] : v.terms()) {
    if (w && *w != va.weight(l)) return std::nullopt;
    w = va.weight(l);
  }
  return w;
}

std::optional<int> homogeneous_sector(const VertexAlgebra& va, const VAElement& v) {
  std::optional<int> s;
  for (const auto& [l, c] : v.terms()) {
    if (s && *s != va.sector(l)) return std::nullopt;
    s = va.sector(l);
  }
  return s;
}

int max_weight(const VertexAlgebra& va, const VAElement& v) {
  int w = -1;
  for (const auto& [l, c] : v.terms()) w = std::max(w, va.weight(l));
  return w;
}

long vanishing_order(const VertexAlgebra& va, const VAElement& u, const VAElement& v) {
  if (u.is_zero() || v.is_zero()) return 0;
  long top = static_cast<long>(max_weight(va, u)) + max_weight(va, v) - 1;
  for (long i = top; i >= 0; --i)
    if (!product_mode(va, u, i, v).is_zero()) return i + 1;
  return 0;
}

std::string format(const VertexAlgebra& va, const VAElement& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [l, c] : v.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + va.name(l);
  }
  return s;
}

}  // namespace vafilt
