#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zdg {

/// One printed row of the small-ring tables, kept exactly as printed.
struct TableRow {
  int vertices;             // table group
  std::size_t ring_size;    // printed |R|
  std::string shape;        // printed graph name, or "Fig. k"
  std::optional<int> figure;
  std::size_t alpha, gamma, omega;
};

struct CatalogEntry {
  std::string name;
  std::string spec;  // ring spec string, see make_ring
  std::vector<TableRow> rows;
  /// Set for rings named only in a figure caption.
  std::optional<int> caption_figure;
};

const std::vector<CatalogEntry>& catalog_all();

/// Throws NotFound, suggesting the closest known name.
const CatalogEntry& catalog_lookup(std::string_view name);

}  // namespace zdg
