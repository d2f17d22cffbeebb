#pragma once

#include "pascaldet/exact.hpp"

#include "json.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>

namespace pascaldet {

enum class TableKind { pascal, det };

// The order-1 determinantal array is entry-wise the binomial table, so it
// serializes (and caches) under the pascal kind; output bytes are identical.
std::pair<std::string, Index> canonical_kind(TableKind kind, Index order);

// CSV layout: header row of column indices with an empty corner cell, then
// one line per row prefixed by its row index; all cells are decimal strings.
std::string table_to_csv(const IntGrid& g);

inline constexpr int kTableFormatVersion = 1;

nlohmann::ordered_json table_to_json(const std::string& kind, Index order, const IntGrid& g);

struct SerializedTable {
  std::string kind;
  Index order = 1;
  Index rows = 0;
  Index cols = 0;
  IntGrid entries;
  int format_version = 0;
};

// Throws std::runtime_error on schema violations.
SerializedTable table_from_json(const nlohmann::json& j);

// Directory of generated windows keyed by (kind, order, rows, cols), stored
// as the JSON serialization. Loads are verified by recomputing two probe
// entries at cells derived deterministically from the key; any mismatch or
// format skew reads as a miss.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(TableKind kind, Index order, Index rows, Index cols) const;

  std::optional<IntGrid> load(TableKind kind, Index order, Index rows, Index cols) const;
  void store(TableKind kind, Index order, Index rows, Index cols, const IntGrid& g) const;

  static std::array<std::pair<Index, Index>, 2> probe_cells(TableKind kind, Index order, Index rows,
                                                            Index cols);

 private:
  std::filesystem::path dir_;
};

}  // namespace pascaldet
