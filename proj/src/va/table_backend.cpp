#include "vafilt/va/table_backend.hpp"

#include "vafilt/core/errors.hpp"

namespace vafilt {

TableVertexAlgebra::TableVertexAlgebra(int period, int cutoff, std::string name,
                                       const std::vector<LabelSpec>& labels,
                                       const std::string& vacuum)
    : VertexAlgebra(period, cutoff), name_(std::move(name)) {
  for (const auto& spec : labels) {
    if (spec.weight < 0 || spec.weight > cutoff)
      throw ValidationError("label '" + spec.name + "' has weight " +
                            std::to_string(spec.weight) + " outside 0.." +
                            std::to_string(cutoff));
    if (spec.sector < 0 || spec.sector >= period)
      throw ValidationError("label '" + spec.name + "' has sector " +
                            std::to_string(spec.sector) + " outside 0.." +
                            std::to_string(period - 1));
    labels_.add(spec.name, spec.weight, spec.sector);
  }
  auto vac = labels_.find(vacuum);
  if (!vac) throw ValidationError("vacuum label '" + vacuum + "' is not declared");
  vacuum_ = *vac;
}

void TableVertexAlgebra::set_product(Label u, long n, Label v, VAElement value) {
  long wt = static_cast<long>(weight(u)) + weight(v) - n - 1;
  int sec = (sector(u) + sector(v)) % period();
  for (const auto& [l, c] : value.terms()) {
    if (weight(l) != wt)
      throw ValidationError("grading violated: " + name(u) + "_(" + std::to_string(n) + ") " +
                            name(v) + " contains " + name(l) + " of weight " +
                            std::to_string(weight(l)) + ", expected " + std::to_string(wt));
    if (sector(l) != sec)
      throw ValidationError("sector additivity violated: " + name(u) + "_(" + std::to_string(n) +
                            ") " + name(v) + " contains " + name(l));
  }
  if (value.is_zero()) {
    products_.erase({u, n, v});
  } else {
    products_[{u, n, v}] = std::move(value);
  }
}

VAElement TableVertexAlgebra::product_basis(Label u, long n, Label v) const {
  auto it = products_.find({u, n, v});
  return it == products_.end() ? VAElement{} : it->second;
}

namespace {

std::string triple(const VertexAlgebra& va, Label u, Label v, Label w, long m, long n) {
  return "(u, v, w) = (" + va.name(u) + ", " + va.name(v) + ", " + va.name(w) +
         "), m = " + std::to_string(m) + ", n = " + std::to_string(n);
}

}  // namespace

void validate_algebra(const VertexAlgebra& va) {
  const int cut = va.cutoff();
  const Label one = va.vacuum();
  if (va.weight(one) != 0 || va.sector(one) != 0)
    throw ValidationError("vacuum must have weight 0 and sector 0");
  if (va.basis(0).size() != 1)
    throw ValidationError("conical grading violated: weight 0 slice must be spanned by the vacuum");

  // Vacuum axioms: 1_n v = delta_{n,-1} v, v_{-1} 1 = v, v_n 1 = 0 for n >= 0.
  for (long w = 0; w <= cut; ++w) {
    for (Label v : va.basis(w)) {
      for (long n = w - 1 - cut; n <= w - 1; ++n) {
        VAElement got = va.product_basis(one, n, v);
        VAElement want = n == -1 ? VAElement::basis(v) : VAElement{};
        if (!(got == want))
          throw ValidationError("vacuum axiom Y(1,x) = id violated at " + va.name(v) +
                                ", n = " + std::to_string(n));
      }
      if (!(va.product_basis(v, -1, one) == VAElement::basis(v)))
        throw ValidationError("creation axiom v_{-1} 1 = v violated at " + va.name(v));
      for (long n = 0; n <= w - 1; ++n)
        if (!va.product_basis(v, n, one).is_zero())
          throw ValidationError("creation axiom v_n 1 = 0 (n >= 0) violated at " + va.name(v) +
                                ", n = " + std::to_string(n));
    }
  }

  // Commutator formula [u_m, v_n] w = sum_i binom(m,i) (u_i v)_{m+n-i} w.
  auto in_range = [&](long wt) { return wt >= 0 && wt <= cut; };
  for (long a = 1; a <= cut; ++a)
    for (Label u : va.basis(a))
      for (long b = 1; b <= cut; ++b)
        for (Label v : va.basis(b))
          for (long c = 0; c <= cut; ++c)
            for (Label w : va.basis(c))
              for (long n = b + c - 1 - cut; n <= b + c - 1; ++n)
                for (long m = a - 1 - cut + (b + c - n - 1); m <= a + b + c - n - 2; ++m) {
                  long vn_w = b + c - n - 1, um_w = a + c - m - 1;
                  long final_w = a + b + c - m - n - 2;
                  if (!in_range(vn_w) || !in_range(um_w) || !in_range(final_w)) continue;
                  if (a + b - 1 > cut) continue;
                  VAElement W = VAElement::basis(w);
                  VAElement U = VAElement::basis(u), Vv = VAElement::basis(v);
                  VAElement lhs = product_mode(va, U, m, product_mode(va, Vv, n, W)) -
                                  product_mode(va, Vv, n, product_mode(va, U, m, W));
                  VAElement rhs;
                  for (long i = 0; i <= a + b - 1; ++i) {
                    Rational coef = integer_binomial(m, i);
                    if (coef.is_zero()) continue;
                    VAElement uv = product_mode(va, U, i, Vv);
                    if (!uv.is_zero()) rhs.add_scaled(product_mode(va, uv, m + n - i, W), coef);
                  }
                  if (!(lhs == rhs))
                    throw ValidationError("commutator formula violated at " +
                                          triple(va, u, v, w, m, n) + ": lhs " + format(va, lhs) +
                                          ", rhs " + format(va, rhs));
                }
}

}  // namespace vafilt
