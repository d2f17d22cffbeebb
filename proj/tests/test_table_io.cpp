#include "pascaldet/table_io.hpp"

#include "pascaldet/det_array.hpp"
#include "pascaldet/pascal_table.hpp"
#include "testutil.hpp"

#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>

using namespace pascaldet;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pascaldet_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("canonical_kind: order-1 determinantal array is the binomial table") {
  CHECK(canonical_kind(TableKind::det, 1) == std::pair<std::string, Index>{"pascal", 1});
  CHECK(canonical_kind(TableKind::det, 3) == std::pair<std::string, Index>{"det", 3});
  CHECK(canonical_kind(TableKind::pascal, 1) == std::pair<std::string, Index>{"pascal", 1});
}

TEST_CASE("table_to_csv: exact bytes") {
  const PascalTable t(2, 2);
  CHECK(table_to_csv(t.entries()) == ",0,1\n0,1,1\n1,1,2\n");
  const PascalTable row(1, 4);
  CHECK(table_to_csv(row.entries()) == ",0,1,2,3\n0,1,1,1,1\n");
}

TEST_CASE("table_to_json: schema and round trip") {
  const DetArrayTable pd2(2, 3, 4);
  const auto j = table_to_json("det", 2, pd2.entries());
  CHECK(j.at("kind") == "det");
  CHECK(j.at("order") == 2);
  CHECK(j.at("rows") == 3);
  CHECK(j.at("cols") == 4);
  CHECK(j.at("format_version") == 1);
  CHECK(j.at("entries").at(1).at(1).is_string());
  CHECK(j.at("entries").at(1).at(1) == "3");

  const SerializedTable back = table_from_json(j);
  CHECK(back.kind == "det");
  CHECK(back.order == 2);
  CHECK(testutil::eq(back.entries, pd2.entries()));
}

TEST_CASE("table_to_json: big entries survive as decimal strings") {
  IntGrid g(1, 1);
  g(0, 0) = ExactInt("123456789012345678901234567890123456789");
  const auto j = table_to_json("pascal", 1, g);
  const SerializedTable back = table_from_json(j);
  CHECK(back.entries(0, 0) == g(0, 0));
}

TEST_CASE("table_from_json: malformed input") {
  CHECK_THROWS_AS(table_from_json(nlohmann::json::parse("{}")), std::runtime_error);
  CHECK_THROWS_AS(
      table_from_json(nlohmann::json::parse(
          R"({"kind":"pascal","order":1,"rows":2,"cols":1,"entries":[["1"]],"format_version":1})")),
      std::runtime_error);
}

TEST_CASE("TableCache: store and verified load") {
  const TableCache cache(fresh_dir("roundtrip"));
  const PascalTable t(6, 7);
  cache.store(TableKind::pascal, 1, 6, 7, t.entries());
  CHECK(fs::exists(cache.path_for(TableKind::pascal, 1, 6, 7)));

  const auto loaded = cache.load(TableKind::pascal, 1, 6, 7);
  REQUIRE(loaded.has_value());
  CHECK(testutil::eq(*loaded, t.entries()));

  CHECK_FALSE(cache.load(TableKind::pascal, 1, 9, 9).has_value());
}

TEST_CASE("TableCache: det tables cache under the canonical kind") {
  const TableCache cache(fresh_dir("canonical"));
  const PascalTable t(4, 4);
  cache.store(TableKind::det, 1, 4, 4, t.entries());
  CHECK(fs::exists(cache.path_for(TableKind::pascal, 1, 4, 4)));
  CHECK(cache.load(TableKind::pascal, 1, 4, 4).has_value());
}

TEST_CASE("TableCache: format version skew reads as a miss") {
  const TableCache cache(fresh_dir("version"));
  const PascalTable t(4, 4);
  cache.store(TableKind::pascal, 1, 4, 4, t.entries());

  const fs::path path = cache.path_for(TableKind::pascal, 1, 4, 4);
  nlohmann::json j;
  {
    std::ifstream in(path);
    in >> j;
  }
  j["format_version"] = 99;
  {
    std::ofstream out(path, std::ios::trunc);
    out << j.dump();
  }
  CHECK_FALSE(cache.load(TableKind::pascal, 1, 4, 4).has_value());
}

TEST_CASE("TableCache: probe cells are deterministic and catch corruption") {
  const TableCache cache(fresh_dir("probe"));
  const DetArrayTable pd2(2, 6, 6);
  cache.store(TableKind::det, 2, 6, 6, pd2.entries());

  const auto cells = TableCache::probe_cells(TableKind::det, 2, 6, 6);
  CHECK(cells == TableCache::probe_cells(TableKind::det, 2, 6, 6));

  const fs::path path = cache.path_for(TableKind::det, 2, 6, 6);
  nlohmann::json j;
  {
    std::ifstream in(path);
    in >> j;
  }

  SUBCASE("corrupting a probed cell invalidates the cache entry") {
    const auto [pi, pj] = cells[0];
    j["entries"][static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)] = "424242";
    std::ofstream out(path, std::ios::trunc);
    out << j.dump();
    out.close();
    CHECK_FALSE(cache.load(TableKind::det, 2, 6, 6).has_value());
  }

  SUBCASE("corruption away from the probes is not detected by load") {
    Index ci = -1, cj = -1;
    for (Index i = 0; i < 6 && ci < 0; ++i)
      for (Index jj = 0; jj < 6; ++jj) {
        const bool probed = std::any_of(cells.begin(), cells.end(), [&](const auto& c) {
          return c.first == i && c.second == jj;
        });
        if (!probed) {
          ci = i;
          cj = jj;
          break;
        }
      }
    REQUIRE(ci >= 0);
    j["entries"][static_cast<std::size_t>(ci)][static_cast<std::size_t>(cj)] = "424242";
    std::ofstream out(path, std::ios::trunc);
    out << j.dump();
    out.close();
    const auto loaded = cache.load(TableKind::det, 2, 6, 6);
    REQUIRE(loaded.has_value());
    CHECK((*loaded)(ci, cj) == 424242);
  }
}
