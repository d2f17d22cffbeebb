#include "pascaldet/table_io.hpp"

#include "pascaldet/det_array.hpp"
#include "pascaldet/pascal_table.hpp"

#include <cstdint>
#include <fstream>
#include <random>
#include <stdexcept>

namespace pascaldet {

std::pair<std::string, Index> canonical_kind(TableKind kind, Index order) {
  if (kind == TableKind::pascal || order == 1) return {"pascal", 1};
  return {"det", order};
}

std::string table_to_csv(const IntGrid& g) {
  std::string out;
  for (Index j = 0; j < g.cols(); ++j) {
    out += ',';
    out += std::to_string(j);
  }
  out += '\n';
  for (Index i = 0; i < g.rows(); ++i) {
    out += std::to_string(i);
    for (Index j = 0; j < g.cols(); ++j) {
      out += ',';
      out += to_decimal(g(i, j));
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json table_to_json(const std::string& kind, Index order, const IntGrid& g) {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["order"] = order;
  j["rows"] = g.rows();
  j["cols"] = g.cols();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Index i = 0; i < g.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Index jj = 0; jj < g.cols(); ++jj) row.push_back(to_decimal(g(i, jj)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  j["format_version"] = kTableFormatVersion;
  return j;
}

SerializedTable table_from_json(const nlohmann::json& j) {
  SerializedTable t;
  try {
    t.kind = j.at("kind").get<std::string>();
    t.order = j.at("order").get<Index>();
    t.rows = j.at("rows").get<Index>();
    t.cols = j.at("cols").get<Index>();
    t.format_version = j.at("format_version").get<int>();
    const auto& entries = j.at("entries");
    if (t.rows < 1 || t.cols < 1 || static_cast<Index>(entries.size()) != t.rows)
      throw std::runtime_error("table_from_json: dimension mismatch");
    t.entries.resize(t.rows, t.cols);
    for (Index i = 0; i < t.rows; ++i) {
      const auto& row = entries.at(static_cast<std::size_t>(i));
      if (static_cast<Index>(row.size()) != t.cols)
        throw std::runtime_error("table_from_json: ragged entries");
      for (Index jj = 0; jj < t.cols; ++jj)
        t.entries(i, jj) = int_from_decimal(row.at(static_cast<std::size_t>(jj)).get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("table_from_json: ") + e.what());
  }
  return t;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_key(TableKind kind, Index order, Index rows, Index cols) {
  const auto [name, o] = canonical_kind(kind, order);
  return name + "-o" + std::to_string(o) + "-" + std::to_string(rows) + "x" + std::to_string(cols);
}

ExactNat recompute_entry(const std::string& kind, Index order, Index i, Index j) {
  if (kind == "pascal") return pascal_entry(i, j);
  return det_entry(order, i, j);
}

}  // namespace

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path TableCache::path_for(TableKind kind, Index order, Index rows,
                                           Index cols) const {
  return dir_ / (cache_key(kind, order, rows, cols) + ".json");
}

std::array<std::pair<Index, Index>, 2> TableCache::probe_cells(TableKind kind, Index order,
                                                               Index rows, Index cols) {
  std::mt19937_64 gen(fnv1a(cache_key(kind, order, rows, cols)));
  std::array<std::pair<Index, Index>, 2> cells;
  for (auto& cell : cells)
    cell = {static_cast<Index>(gen() % static_cast<std::uint64_t>(rows)),
            static_cast<Index>(gen() % static_cast<std::uint64_t>(cols))};
  return cells;
}

std::optional<IntGrid> TableCache::load(TableKind kind, Index order, Index rows, Index cols) const {
  const std::filesystem::path path = path_for(kind, order, rows, cols);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  SerializedTable t;
  try {
    t = table_from_json(nlohmann::json::parse(in));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  const auto [name, o] = canonical_kind(kind, order);
  if (t.format_version != kTableFormatVersion || t.kind != name || t.order != o ||
      t.rows != rows || t.cols != cols)
    return std::nullopt;
  for (const auto& [i, j] : probe_cells(kind, order, rows, cols))
    if (t.entries(i, j) != recompute_entry(name, o, i, j)) return std::nullopt;
  return std::move(t.entries);
}

void TableCache::store(TableKind kind, Index order, Index rows, Index cols,
                       const IntGrid& g) const {
  const auto [name, o] = canonical_kind(kind, order);
  const std::filesystem::path path = path_for(kind, order, rows, cols);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("TableCache: cannot write " + path.string());
  out << table_to_json(name, o, g).dump() << '\n';
  if (!out) throw std::runtime_error("TableCache: write failed for " + path.string());
}

}  // namespace pascaldet
