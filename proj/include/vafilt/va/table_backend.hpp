#pragma once

#include <map>
#include <tuple>

#include "vafilt/va/vertex_algebra.hpp"

namespace vafilt {

/// Vertex algebra given by explicit structure constants on labelled basis
/// vectors. Missing product entries are zero.
class TableVertexAlgebra final : public VertexAlgebra {
 public:
  struct LabelSpec {
    std::string name;
    int weight;
    int sector;
  };

  TableVertexAlgebra(int period, int cutoff, std::string name, const std::vector<LabelSpec>& labels,
                     const std::string& vacuum);

  std::string id() const override { return name_; }
  VAElement product_basis(Label u, long n, Label v) const override;

  /// Registers u_n v; the result must be homogeneous of the right weight and sector.
  void set_product(Label u, long n, Label v, VAElement value);
  const std::map<std::tuple<Label, long, Label>, VAElement>& entries() const { return products_; }

 private:
  std::string name_;
  std::map<std::tuple<Label, long, Label>, VAElement> products_;
};

/// Checks conical grading, vacuum axioms, sector additivity and the
/// commutator formula on every basis triple whose intermediate weights stay
/// within the cutoff. Throws ValidationError naming the identity and triple.
void validate_algebra(const VertexAlgebra& va);

}  // namespace vafilt
