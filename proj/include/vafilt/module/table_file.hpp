#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "vafilt/module/table_module.hpp"
#include "vafilt/va/table_backend.hpp"

namespace vafilt {

struct LoadedTable {
  std::unique_ptr<TableVertexAlgebra> algebra;
  std::unique_ptr<TableModule> module;  ///< null when the file has no module section
};

/// Parses a table document. Structural problems raise ValidationError; the
/// algebraic identities are checked separately unless validate is set.
LoadedTable load_table(const nlohmann::json& doc, bool validate = true);
LoadedTable load_table_file(const std::string& path, bool validate = true);

/// Writes every nonzero structure constant with result weight inside the cutoffs.
nlohmann::ordered_json export_table(const VertexAlgebra& va, const TwistedModule* mod,
                                    int algebra_cutoff, long module_cutoff_ticks);

}  // namespace vafilt
