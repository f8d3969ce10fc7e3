#pragma once

#include <optional>
#include <string>

#include "vafilt/module/twisted_module.hpp"

namespace vafilt {

/// Strict rejects terms of u whose sector does not match the mode coset;
/// lenient drops them (they act by zero on that coset).
enum class CosetPolicy { Strict, Lenient };

/// u_m w extended bilinearly.
TwistedVector module_mode(const TwistedModule& mod, const VAElement& u, const ModeIndex& m,
                          const TwistedVector& w, CosetPolicy policy = CosetPolicy::Strict);

/// Least l >= 0 such that u_{q + r/T} w = 0 for every integer q >= l; u must
/// lie in a single sector r.
long annihilation_depth(const TwistedModule& mod, const VAElement& u, const TwistedVector& w);

/// Least k >= 0 such that u_{m+k+j} v = 0 for all j >= 0.
long iterate_depth(const VertexAlgebra& va, const VAElement& u, long m, const VAElement& v);

struct IterateOptions {
  std::optional<long> l;  ///< defaults to annihilation_depth(u, w)
  std::optional<long> k;  ///< defaults to iterate_depth(u, m, v)
};

/// (u_m v)_n w computed from products of modes of u and v acting on w,
/// via the associativity expansion. u must lie in one sector.
TwistedVector iterate_mode(const TwistedModule& mod, const VAElement& u, long m, const VAElement& v,
                           const ModeIndex& n, const TwistedVector& w, IterateOptions opts = {});

struct IdentityCheck {
  bool holds = true;
  std::string identity;
  std::string detail;  ///< first differing coefficient when the check fails
};

/// [u_{m+r/T}, v_{n+s/T}] w = sum_i binom(m+r/T, i) (u_i v)_{m+n-i+(r+s)/T} w.
IdentityCheck check_twisted_commutator(const TwistedModule& mod, const VAElement& u,
                                       const VAElement& v, const ModeIndex& m, const ModeIndex& n,
                                       const TwistedVector& w);
/// (D u)_{-n+r/T} w = (n - r/T) u_{-n-1+r/T} w.
IdentityCheck check_translation_compat(const TwistedModule& mod, const VAElement& u, long n,
                                       const TwistedVector& w);
/// (u_m v)_n w against the commutativity-based iterate expansion with
/// N the vanishing order of u on v.
IdentityCheck check_iterate_consistency(const TwistedModule& mod, const VAElement& u, long m,
                                        const VAElement& v, const ModeIndex& n,
                                        const TwistedVector& w);
/// Direct action against the associativity expansion for a given (l, k).
IdentityCheck check_associativity_expansion(const TwistedModule& mod, const VAElement& u, long m,
                                            const VAElement& v, const ModeIndex& n,
                                            const TwistedVector& w, IterateOptions opts = {});

/// Compares two module vectors and describes the first difference.
IdentityCheck compare_vectors(const TwistedModule& mod, std::string identity,
                              const TwistedVector& lhs, const TwistedVector& rhs);

}  // namespace vafilt
