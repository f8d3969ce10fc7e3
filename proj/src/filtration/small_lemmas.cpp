#include <functional>

#include "vafilt/filtration/relations.hpp"
#include "vafilt/module/mode_calculus.hpp"

namespace vafilt {

namespace {

struct Factor {
  Label u;
  long k;  // mode -k + r/T
};
using Sequence = std::vector<Factor>;

/// Ordered sequences of s factors u_{-k+r/T}, k drawn from ks, whose total
/// weight increase is at most budget ticks. The vacuum is skipped: its modes
/// below -1 vanish.
std::vector<Sequence> sequences(const VertexAlgebra& va, int s, long budget,
                                const std::vector<long>& ks) {
  const int T = va.period();
  std::vector<Sequence> out;
  Sequence cur;
  std::function<void(long)> rec = [&](long left) {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (long wt = 1; T * wt <= left + T && wt <= va.cutoff(); ++wt)
      for (Label u : va.basis(wt))
        for (long k : ks) {
          long inc = T * (wt + k - 1) - va.sector(u);
          if (inc > left) continue;
          cur.push_back({u, k});
          rec(left - inc);
          cur.pop_back();
        }
  };
  if (budget >= 0) rec(budget);
  return out;
}

long increase(const VertexAlgebra& va, const Sequence& seq) {
  long t = 0;
  for (const auto& f : seq) t += va.period() * (va.weight(f.u) + f.k - 1) - va.sector(f.u);
  return t;
}

std::string describe(const VertexAlgebra& va, const Sequence& seq) {
  std::string s;
  for (const auto& f : seq)
    s += va.name(f.u) + "_(" + ticks_str(-f.k * va.period() + va.sector(f.u), va.period()) + ") ";
  return s;
}

TwistedVector apply(const TwistedModule& mod, const Sequence& seq, TwistedVector w) {
  const int T = mod.period();
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (w.is_zero()) break;
    const auto& va = mod.algebra();
    w = module_mode(mod, VAElement::basis(it->u),
                    ModeIndex::from_ticks(-it->k * T + va.sector(it->u), T), w);
  }
  return w;
}

struct Tail {
  long key;
  TwistedVector w;
  std::string name;
};

std::vector<Tail> basis_tails(const FiltrationEngine& eng) {
  std::vector<Tail> out;
  const auto& amb = *eng.w_ambient();
  for (long k : amb.keys())
    for (Label w : amb.slice(k)) out.push_back({k, TwistedVector::basis(w), amb.label_name(w)});
  return out;
}

std::vector<Tail> row_tails(const ModuleSubspace& s, const std::string& tag) {
  std::vector<Tail> out;
  for (long k : s.ambient().keys()) {
    auto rows = s.basis(k);
    for (std::size_t j = 0; j < rows.size(); ++j)
      out.push_back({k, rows[j], tag + "[" + s.ambient().weight_str(k) + "#" + std::to_string(j) + "]"});
  }
  return out;
}

/// Every sequence applied to every tail lands in target.
Tally products_in(FiltrationEngine& eng, const std::vector<Sequence>& seqs,
                  const std::vector<Tail>& tails, const ModuleSubspace& target,
                  const std::string& target_name, const ExecConfig& exec) {
  const long wmax = eng.w_cutoff_ticks();
  const VertexAlgebra& va = eng.algebra();
  std::vector<std::pair<std::size_t, std::size_t>> cases;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    long inc = increase(va, seqs[i]);
    for (std::size_t j = 0; j < tails.size(); ++j)
      if (tails[j].key + inc <= wmax) cases.push_back({i, j});
  }
  return run_cases(cases.size(), exec, [&](std::size_t c, Tally& t) {
    const auto& seq = seqs[cases[c].first];
    const auto& tail = tails[cases[c].second];
    t.expect_member(apply(eng.module(), seq, tail.w), target,
                    describe(va, seq) + tail.name + " not in " + target_name);
  });
}

}  // namespace

std::vector<CheckOutcome> check_small_lemmas(FiltrationEngine& eng, const ExecConfig& exec) {
  std::vector<CheckOutcome> out;
  const VertexAlgebra& va = eng.algebra();
  const int T = eng.period();
  const long wmax = eng.w_cutoff_ticks();
  for (long n = 2; n <= 5; ++n) eng.C_W(n);
  const auto tails = basis_tails(eng);

  for (int s : {T + 1, T + 2}) {
    auto seqs = sequences(va, s, wmax, {2});
    out.push_back(products_in(eng, seqs, tails, eng.C_W(3), "C_W(3)", exec)
                      .outcome(std::to_string(s) + " modes at -2 land in C_W(3)"));
  }
  out.push_back({std::to_string(T) + " modes at -2 land in C_W(3)", CheckStatus::Unchecked,
                 "not asserted without a C_W(2) tail", std::nullopt});

  const auto c2_tails = row_tails(eng.C_W(2), "C_W(2)");
  for (int s : {T, T + 1}) {
    auto seqs = sequences(va, s, wmax, {2});
    out.push_back(products_in(eng, seqs, c2_tails, eng.C_W(3), "C_W(3)", exec)
                      .outcome(std::to_string(s) + " modes at -2 map C_W(2) into C_W(3)"));
  }

  for (long k : {3L, 4L}) {
    std::vector<Sequence> seqs;
    for (const auto& seq : sequences(va, 1, wmax, {k})) seqs.push_back(seq);
    auto tl = row_tails(eng.C_W(k), "C_W(" + std::to_string(k) + ")");
    out.push_back(products_in(eng, seqs, tl, eng.C_W(k + 1), "C_W(" + std::to_string(k + 1) + ")", exec)
                      .outcome("modes at -" + std::to_string(k) + " map C_W(" + std::to_string(k) +
                               ") into C_W(" + std::to_string(k + 1) + ")"));
  }

  // Products of modes at or below -2 with enough factors land in C_W(n+3).
  for (long n : {0L, 1L}) {
    int s = (T + 1) << n;
    std::vector<long> ks;
    for (long k = 2; T * (k - 1) <= wmax; ++k) ks.push_back(k);
    auto seqs = sequences(va, s, wmax, ks);
    out.push_back(products_in(eng, seqs, tails, eng.C_W(n + 3), "C_W(" + std::to_string(n + 3) + ")", exec)
                      .outcome(std::to_string(s) + " modes at or below -2 land in C_W(" +
                               std::to_string(n + 3) + ")"));
  }
  return out;
}

}  // namespace vafilt
