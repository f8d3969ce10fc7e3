#include "vafilt/filtration/engine.hpp"

#include "vafilt/module/mode_calculus.hpp"

namespace vafilt {

std::string family_name(Family f) {
  switch (f) {
    case Family::EV: return "E_V";
    case Family::CV: return "C_V";
    case Family::EW: return "E_W";
    case Family::CW: return "C_W";
  }
  return "?";
}

FiltrationEngine::FiltrationEngine(const VertexAlgebra& va, const TwistedModule* mod, int v_cutoff,
                                   long w_cutoff_ticks, ExecConfig exec)
    : va_(va), mod_(mod), v_cutoff_(v_cutoff), w_cutoff_(w_cutoff_ticks), exec_(exec) {
  v_amb_ = Ambient::of_algebra(va, v_cutoff);
  if (mod_) {
    if (mod_->period() != va.period()) throw ConfigError("module period differs from algebra");
    // Every u acting inside the truncated module has weight at most the module cutoff.
    if (static_cast<long>(va.cutoff()) * va.period() < w_cutoff_ticks - (w_cutoff_ticks % va.period()))
      throw InsufficientCutoff("algebra cutoff " + std::to_string(va.cutoff()) +
                               " is below the module cutoff " +
                               ticks_str(w_cutoff_ticks, va.period()));
    w_amb_ = Ambient::of_module(*mod_, w_cutoff_ticks);
  }
}

const TwistedModule& FiltrationEngine::module() const {
  if (!mod_) throw ConfigError("no module configured");
  return *mod_;
}

const std::shared_ptr<const Ambient>& FiltrationEngine::w_ambient() const {
  if (!mod_) throw ConfigError("no module configured");
  return w_amb_;
}

const AlgebraSubspace& FiltrationEngine::full_V() {
  if (!full_v_) full_v_ = std::make_unique<AlgebraSubspace>(AlgebraSubspace::full(v_amb_));
  return *full_v_;
}

const ModuleSubspace& FiltrationEngine::full_W() {
  if (!full_w_) full_w_ = std::make_unique<ModuleSubspace>(ModuleSubspace::full(w_ambient()));
  return *full_w_;
}

namespace {

using VSink = std::function<bool(const VAElement&, const Describer&)>;
using WSink = std::function<bool(const TwistedVector&, const Describer&)>;

std::string mode_str(long ticks, int T) { return "_(" + ticks_str(ticks, T) + ")"; }

}  // namespace

const AlgebraSubspace& FiltrationEngine::E_V(long n) {
  if (n <= 0) return full_V();
  if (auto it = ev_.find(n); it != ev_.end()) return it->second->space;
  const int T = period();
  for (long m = n - T; m >= 1; m -= T) E_V(m);

  auto entry = std::make_unique<Entry<AlgebraTag>>();
  entry->cert = {Family::EV, n, 1, {}};
  auto gen = [&](Ambient::Key k, VSink& sink) {
    for (long a = 1; a < k; ++a)
      for (Label u : va_.basis(a)) {
        VAElement U = VAElement::basis(u);
        for (long i = 1; a + i <= k; ++i) {
          long b = k - a - i;
          long m = n - i * T;
          std::vector<VAElement> rows;
          std::string src;
          if (m <= 0) {
            for (Label v : va_.basis(b)) rows.push_back(VAElement::basis(v));
            src = "V";
          } else {
            rows = ev_.at(m)->space.basis(b);
            src = "E_V(" + std::to_string(m) + ")";
          }
          for (std::size_t j = 0; j < rows.size(); ++j) {
            VAElement cand = product_mode(va_, U, -1 - i, rows[j]);
            auto describe = [&] {
              std::string x = m <= 0 ? va_.name(rows[j].terms().front().first)
                                     : src + "[" + std::to_string(b) + "#" + std::to_string(j) + "]";
              return va_.name(u) + "_(" + std::to_string(-1 - i) + ") " + x;
            };
            if (!sink(cand, describe)) return;
          }
        }
      }
  };
  entry->space = build_by_slices<AlgebraTag>(v_amb_, gen, exec_, &entry->cert.generators);
  return ev_.emplace(n, std::move(entry)).first->second->space;
}

const AlgebraSubspace& FiltrationEngine::C_V(long n) {
  if (n <= 1) return full_V();
  if (auto it = cv_.find(n); it != cv_.end()) return it->second->space;
  auto entry = std::make_unique<Entry<AlgebraTag>>();
  entry->cert = {Family::CV, n, 1, {}};
  auto gen = [&](Ambient::Key k, VSink& sink) {
    for (long a = 0; a + n - 1 <= k; ++a)
      for (Label u : va_.basis(a)) {
        VAElement U = VAElement::basis(u);
        long b = k - a - n + 1;
        for (Label v : va_.basis(b)) {
          VAElement cand = product_mode(va_, U, -n, VAElement::basis(v));
          auto describe = [&] { return va_.name(u) + "_(" + std::to_string(-n) + ") " + va_.name(v); };
          if (!sink(cand, describe)) return;
        }
      }
  };
  entry->space = build_by_slices<AlgebraTag>(v_amb_, gen, exec_, &entry->cert.generators);
  return cv_.emplace(n, std::move(entry)).first->second->space;
}

const ModuleSubspace& FiltrationEngine::E_W(long n) {
  if (n <= 0) return full_W();
  if (auto it = ew_.find(n); it != ew_.end()) return it->second->space;
  const TwistedModule& mod = module();
  const int T = period();
  // Sources E_W(n - iT + r) with i >= 1 and 0 <= r < T.
  for (long m = n - 1; m >= 1; --m) E_W(m);

  auto entry = std::make_unique<Entry<ModuleTag>>();
  entry->cert = {Family::EW, n, T, {}};
  auto gen = [&](Ambient::Key k, WSink& sink) {
    for (long a = 1; T * a <= k; ++a)
      for (Label u : va_.basis(a)) {
        const int r = va_.sector(u);
        VAElement U = VAElement::basis(u);
        for (long i = 1;; ++i) {
          long shift = T * (a + i) - r;
          if (shift > k) break;
          long src_key = k - shift;
          long m = n - i * T + r;
          std::vector<TwistedVector> rows;
          if (m <= 0) {
            for (Label w : mod.basis(src_key)) rows.push_back(TwistedVector::basis(w));
          } else {
            rows = ew_.at(m)->space.basis(src_key);
          }
          long mode = -(1 + i) * T + r;
          for (std::size_t j = 0; j < rows.size(); ++j) {
            TwistedVector cand = module_mode(mod, U, ModeIndex::from_ticks(mode, T), rows[j]);
            auto describe = [&] {
              std::string x = m <= 0 ? mod.name(rows[j].terms().front().first)
                                     : "E_W(" + std::to_string(m) + ")[" +
                                           ticks_str(src_key, T) + "#" + std::to_string(j) + "]";
              return va_.name(u) + mode_str(mode, T) + " " + x;
            };
            if (!sink(cand, describe)) return;
          }
        }
      }
  };
  entry->space = build_by_slices<ModuleTag>(w_amb_, gen, exec_, &entry->cert.generators);
  return ew_.emplace(n, std::move(entry)).first->second->space;
}

const ModuleSubspace& FiltrationEngine::C_W(long n) {
  if (n <= 1) return full_W();
  if (auto it = cw_.find(n); it != cw_.end()) return it->second->space;
  const TwistedModule& mod = module();
  const int T = period();
  auto entry = std::make_unique<Entry<ModuleTag>>();
  entry->cert = {Family::CW, n, T, {}};
  auto gen = [&](Ambient::Key k, WSink& sink) {
    for (long a = 0; T * (a + n - 1) - (T - 1) <= k; ++a)
      for (Label u : va_.basis(a)) {
        const int p = va_.sector(u);
        long shift = T * (a + n - 1) - p;
        if (shift > k) continue;
        VAElement U = VAElement::basis(u);
        long mode = -n * T + p;
        for (Label w : mod.basis(k - shift)) {
          TwistedVector cand =
              module_mode(mod, U, ModeIndex::from_ticks(mode, T), TwistedVector::basis(w));
          auto describe = [&] { return va_.name(u) + mode_str(mode, T) + " " + mod.name(w); };
          if (!sink(cand, describe)) return;
        }
      }
  };
  entry->space = build_by_slices<ModuleTag>(w_amb_, gen, exec_, &entry->cert.generators);
  return cw_.emplace(n, std::move(entry)).first->second->space;
}

std::vector<Certificate> FiltrationEngine::certificates() const {
  std::vector<Certificate> out;
  for (const auto& [n, e] : ev_) out.push_back(e->cert);
  for (const auto& [n, e] : cv_) out.push_back(e->cert);
  for (const auto& [n, e] : ew_) out.push_back(e->cert);
  for (const auto& [n, e] : cw_) out.push_back(e->cert);
  return out;
}

}  // namespace vafilt
