#include "pascaldet/table_io.hpp"

#include "json.hpp"

#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using pascaldet::Index;
using pascaldet::TableCache;
using pascaldet::TableKind;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "pascaldet_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string("\"") + PASCALDET_BIN_PATH + "\" " + args + " > \"" +
                          out.string() + "\" 2> \"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

}  // namespace

TEST_CASE("gen: pascal csv bytes") {
  const CliResult r = run_cli("gen --kind pascal --rows 1 --cols 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == ",0,1,2,3\n0,1,1,1,1\n");
}

TEST_CASE("gen: det order 2 has the Narayana value at (1,1)") {
  const CliResult r = run_cli("gen --kind det --order 2 --rows 5 --cols 5 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\n1,1,3,6,10,15\n") != std::string::npos);
}

TEST_CASE("gen: det order 1 emits identical bytes to pascal") {
  const CliResult det_csv = run_cli("gen --kind det --order 1 --rows 4 --cols 6");
  const CliResult pas_csv = run_cli("gen --kind pascal --rows 4 --cols 6");
  CHECK(det_csv.exit_code == 0);
  CHECK(det_csv.out == pas_csv.out);

  const CliResult det_json = run_cli("gen --kind det --order 1 --rows 4 --cols 6 --format json");
  const CliResult pas_json = run_cli("gen --kind pascal --rows 4 --cols 6 --format json");
  CHECK(det_json.exit_code == 0);
  CHECK(det_json.out == pas_json.out);
}

TEST_CASE("gen: json document schema") {
  const CliResult r = run_cli("gen --kind det --order 2 --rows 3 --cols 3 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("kind") == "det");
  CHECK(j.at("order") == 2);
  CHECK(j.at("format_version") == 1);
  CHECK(j.at("entries").at(1).at(1) == "3");
}

TEST_CASE("gen: deterministic byte-for-byte") {
  const CliResult a = run_cli("gen --kind det --order 3 --rows 6 --cols 6 --format json");
  const CliResult b = run_cli("gen --kind det --order 3 --rows 6 --cols 6 --format json");
  CHECK(a.out == b.out);
}

TEST_CASE("gen: --out writes the same bytes to a file") {
  const fs::path target = scratch_dir() / "table.csv";
  const CliResult direct = run_cli("gen --kind pascal --rows 3 --cols 3");
  const CliResult filed = run_cli("gen --kind pascal --rows 3 --cols 3 --out \"" +
                                  target.string() + "\"");
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(target) == direct.out);
}

TEST_CASE("gen: unwritable output path exits 2 with a message") {
  const CliResult r = run_cli("gen --kind pascal --rows 2 --cols 2 --out /nonexistent_dir/t.csv");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("pascaldet:") != std::string::npos);
}

TEST_CASE("help exits 0") { CHECK(run_cli("--help").exit_code == 0); }

TEST_CASE("gen: usage errors exit 2") {
  CHECK(run_cli("gen --kind pascal --rows 3 --cols 3 --order 2").exit_code == 2);
  CHECK(run_cli("gen --kind pascal --rows 0 --cols 3").exit_code == 2);
  CHECK(run_cli("gen --kind nonsense --rows 3 --cols 3").exit_code == 2);
  CHECK(run_cli("gen --rows 3 --cols 3").exit_code == 2);
  CHECK(run_cli("gen --kind pascal --rows 3 --cols 3 --unknown-flag").exit_code == 2);
  CHECK(run_cli("gen --kind pascal --rows 3 --cols 3 --format yaml").exit_code == 2);
}

TEST_CASE("verify: identity families pass at desk scale") {
  CHECK(run_cli("verify --identity parallelepiped --max-index 6").exit_code == 0);
  CHECK(run_cli("verify --identity narayana --max-i 10 --max-j 10").exit_code == 0);
  CHECK(run_cli("verify --identity star --order 2 --max-s 5 --max-m 2 --max-l 2").exit_code == 0);
  CHECK(run_cli("verify --identity ratio --order 2 --r 2 --max-d 6").exit_code == 0);
  CHECK(run_cli("verify --identity columns --order 3 --max-i 8").exit_code == 0);
}

TEST_CASE("verify: report structure") {
  const CliResult r = run_cli("verify --identity narayana --max-i 6 --max-j 6");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("command") == "verify");
  CHECK(j.at("identity") == "narayana");
  CHECK(j.at("pass") == true);
  CHECK(j.at("checked") == 49);
  CHECK(j.at("counterexample").is_null());
  const CliResult bad = run_cli("verify --identity unknown");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("check: exits 0 with a per-sequence json report") {
  const CliResult r = run_cli("check --target both --order 2 --max-index 8");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("command") == "check");
  CHECK(j.at("pass") == true);
  CHECK(j.at("sequences").size() == 18);  // 9 rows + 9 anti-diagonals
  for (const auto& s : j.at("sequences")) CHECK(s.at("pass") == true);
}

TEST_CASE("check: rows only") {
  const CliResult r = run_cli("check --target rows --order 1 --max-index 12");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("sequences").size() == 13);
}

TEST_CASE("oracle: agreement and guard") {
  const CliResult ok = run_cli("oracle --order 2 --max-i 3 --max-j 3");
  CHECK(ok.exit_code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("cells").size() == 16);
  for (const auto& cell : j.at("cells")) {
    CHECK(cell.at("equal") == true);
    CHECK(cell.at("det") == cell.at("paths"));
    CHECK(cell.contains("informational_us"));
  }

  CHECK(run_cli("oracle --order 3 --max-i 9").exit_code == 2);
  CHECK(run_cli("oracle --order 4 --max-i 2 --max-j 2").exit_code == 2);
}

TEST_CASE("cache: gen populates, check reuses, corruption is surfaced") {
  const fs::path cache_dir = scratch_dir() / "cache";
  fs::remove_all(cache_dir);
  const std::string cache_arg = " --cache-dir \"" + cache_dir.string() + "\"";

  // populate through check (9x9 order-2 window)
  CHECK(run_cli("check --target rows --order 2 --max-index 8" + cache_arg).exit_code == 0);
  const TableCache cache(cache_dir);
  const fs::path entry = cache.path_for(TableKind::det, 2, 9, 9);
  REQUIRE(fs::exists(entry));

  // corrupt an interior cell away from the verification probes: the cached
  // table is trusted, so the log-concavity check must fail with a witness
  const auto probes = TableCache::probe_cells(TableKind::det, 2, 9, 9);
  Index ci = -1, cj = -1;
  for (Index i = 1; i < 8 && ci < 0; ++i)
    for (Index j = 1; j < 8; ++j) {
      const bool probed = std::any_of(probes.begin(), probes.end(), [&](const auto& c) {
        return c.first == i && c.second == j;
      });
      if (!probed) {
        ci = i;
        cj = j;
        break;
      }
    }
  REQUIRE(ci >= 1);

  nlohmann::json doc;
  {
    std::ifstream in(entry);
    in >> doc;
  }
  doc["entries"][static_cast<std::size_t>(ci)][static_cast<std::size_t>(cj)] = "0";
  {
    std::ofstream out(entry, std::ios::trunc);
    out << doc.dump();
  }

  const CliResult corrupted = run_cli("check --target rows --order 2 --max-index 8" + cache_arg);
  CHECK(corrupted.exit_code == 1);
  const auto report = nlohmann::json::parse(corrupted.out);
  CHECK(report.at("pass") == false);
  bool witness_found = false;
  for (const auto& s : report.at("sequences"))
    if (s.contains("violation")) witness_found = true;
  CHECK(witness_found);

  // corrupting a probed cell instead makes the cache read a miss: the table
  // is rebuilt and the check passes again
  {
    std::ifstream in(entry);
    in >> doc;
  }
  const auto [pi, pj] = probes[0];
  doc["entries"][static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)] = "0";
  {
    std::ofstream out(entry, std::ios::trunc);
    out << doc.dump();
  }
  CHECK(run_cli("check --target rows --order 2 --max-index 8" + cache_arg).exit_code == 0);
}

TEST_CASE("cache: PASCALDET_CACHE_DIR environment variable") {
  const fs::path cache_dir = scratch_dir() / "env_cache";
  fs::remove_all(cache_dir);
  setenv("PASCALDET_CACHE_DIR", cache_dir.c_str(), 1);
  const CliResult r = run_cli("gen --kind pascal --rows 4 --cols 4");
  unsetenv("PASCALDET_CACHE_DIR");
  CHECK(r.exit_code == 0);
  const TableCache cache(cache_dir);
  CHECK(fs::exists(cache.path_for(TableKind::pascal, 1, 4, 4)));
}

TEST_CASE("csv reports") {
  const CliResult r = run_cli("verify --identity narayana --max-i 4 --max-j 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "identity,pass,checked,counterexample\nnarayana,true,25,\n");

  const CliResult o = run_cli("oracle --order 1 --max-i 1 --max-j 1 --format csv");
  CHECK(o.exit_code == 0);
  CHECK(o.out.find("i,j,det,paths,equal,informational_us\n") == 0);
}
