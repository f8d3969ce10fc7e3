#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "vafilt/linalg/subspace.hpp"
#include "vafilt/module/twisted_module.hpp"
#include "vafilt/parallel/slice_kernel.hpp"

namespace vafilt {

enum class Family { EV, CV, EW, CW };
std::string family_name(Family f);

/// Spanning vectors that raised the rank of a slice; their images form a basis.
struct Certificate {
  Family family;
  long n;
  int key_period;  ///< slices are keyed by weight in 1/key_period steps
  std::map<Ambient::Key, std::vector<std::string>> generators;
};

/// Computes the four decreasing sequences through their reduced recursions:
///   E_n(V) = span{u_{-1-i} v : i >= 1, v in E_{n-iT}(V)}          (n >= 1)
///   E_n(W) = span{u_{-1-i+r/T} w : u in V^r, i >= 1, w in E_{n-iT+r}(W)}
///   C_n(V) = span{u_{-n} v},  C_n(W) = span{u_{-n+p/T} w : u in V^p}
/// with E_n = everything for n <= 0. Results are memoized per n and truncated
/// at the cutoffs given here.
class FiltrationEngine {
 public:
  FiltrationEngine(const VertexAlgebra& va, const TwistedModule* mod, int v_cutoff,
                   long w_cutoff_ticks, ExecConfig exec = {});

  const VertexAlgebra& algebra() const { return va_; }
  const TwistedModule& module() const;
  bool has_module() const { return mod_ != nullptr; }
  int period() const { return va_.period(); }
  int v_cutoff() const { return v_cutoff_; }
  long w_cutoff_ticks() const { return w_cutoff_; }
  const ExecConfig& exec() const { return exec_; }

  const std::shared_ptr<const Ambient>& v_ambient() const { return v_amb_; }
  const std::shared_ptr<const Ambient>& w_ambient() const;

  const AlgebraSubspace& E_V(long n);
  const AlgebraSubspace& C_V(long n);
  const ModuleSubspace& E_W(long n);
  const ModuleSubspace& C_W(long n);
  const AlgebraSubspace& full_V();
  const ModuleSubspace& full_W();

  /// Certificates of every family member computed so far, in (family, n) order.
  std::vector<Certificate> certificates() const;

 private:
  template <class Tag>
  struct Entry {
    GradedSubspace<Tag> space;
    Certificate cert;
  };

  const VertexAlgebra& va_;
  const TwistedModule* mod_;
  int v_cutoff_;
  long w_cutoff_;
  ExecConfig exec_;
  std::shared_ptr<const Ambient> v_amb_;
  std::shared_ptr<const Ambient> w_amb_;
  std::unique_ptr<AlgebraSubspace> full_v_;
  std::unique_ptr<ModuleSubspace> full_w_;
  std::map<long, std::unique_ptr<Entry<AlgebraTag>>> ev_, cv_;
  std::map<long, std::unique_ptr<Entry<ModuleTag>>> ew_, cw_;
};

}  // namespace vafilt
