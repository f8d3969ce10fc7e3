#include "vafilt/linalg/ambient.hpp"

#include "vafilt/core/errors.hpp"
#include "vafilt/core/mode_index.hpp"
#include "vafilt/module/twisted_module.hpp"
#include "vafilt/va/vertex_algebra.hpp"

namespace vafilt {

Ambient::Ambient(int key_period, Key max_key, std::map<Key, std::vector<Label>> slices,
                 std::function<std::string(Label)> namer)
    : key_period_(key_period), max_key_(max_key), slices_(std::move(slices)),
      namer_(std::move(namer)) {
  for (const auto& [k, labels] : slices_) {
    if (k < 0 || k > max_key_) throw Error("ambient slice outside 0..max_key");
    if (labels.empty()) continue;
    keys_.push_back(k);
    for (std::size_t i = 0; i < labels.size(); ++i)
      where_.emplace(labels[i], std::make_pair(k, static_cast<int>(i)));
  }
}

std::shared_ptr<const Ambient> Ambient::of_algebra(const VertexAlgebra& va, int max_weight) {
  if (max_weight > va.cutoff())
    throw CutoffExceeded("requested weight " + std::to_string(max_weight) +
                         " above algebra cutoff " + std::to_string(va.cutoff()));
  std::map<Key, std::vector<Label>> slices;
  for (long w = 0; w <= max_weight; ++w) slices[w] = va.basis(w);
  return std::make_shared<const Ambient>(1, max_weight, std::move(slices),
                                         [&va](Label l) { return va.name(l); });
}

std::shared_ptr<const Ambient> Ambient::of_module(const TwistedModule& mod, long max_ticks) {
  if (max_ticks > mod.cutoff_ticks())
    throw CutoffExceeded("requested weight " + ticks_str(max_ticks, mod.period()) +
                         " above module cutoff " + ticks_str(mod.cutoff_ticks(), mod.period()));
  std::map<Key, std::vector<Label>> slices;
  for (long t = 0; t <= max_ticks; ++t) slices[t] = mod.basis(t);
  return std::make_shared<const Ambient>(mod.period(), max_ticks, std::move(slices),
                                         [&mod](Label l) { return mod.name(l); });
}

const std::vector<Label>& Ambient::slice(Key k) const {
  static const std::vector<Label> empty;
  auto it = slices_.find(k);
  return it == slices_.end() ? empty : it->second;
}

std::optional<std::pair<Ambient::Key, int>> Ambient::locate(Label l) const {
  auto it = where_.find(l);
  if (it == where_.end()) return std::nullopt;
  return it->second;
}

std::string Ambient::weight_str(Key k) const { return ticks_str(k, key_period_); }

}  // namespace vafilt
