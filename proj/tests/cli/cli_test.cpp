#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "locallip/family_io.hpp"
#include "locallip_cli/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "locallip");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = locallip::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("locallip_cli_" + name); }

// CSV body with the wall_time column blanked.
std::string strip_wall_time(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, result;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') {
      std::vector<std::string> cells;
      std::stringstream ss(line);
      for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
      if (cells.size() > 14) cells[14].clear();
      line.clear();
      for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + cells[i];
    }
    result += line + '\n';
  }
  return result;
}

}  // namespace

TEST_CASE("certify worked examples") {
  auto z = run({"certify", "--d", "8", "--delta", "2", "--p", "1", "--q", "2", "--map", "Z", "--format", "json"});
  REQUIRE(z.code == 0);
  CHECK(json::parse(z.out)["ratio"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));

  auto y = run({"certify", "--d", "8", "--delta", "2", "--p", "1", "--q", "2", "--map", "Y", "--format", "json"});
  REQUIRE(y.code == 0);
  CHECK(json::parse(y.out)["ratio"].get<double>() == doctest::Approx(std::sqrt(12.0)).epsilon(1e-12));

  auto unit = run({"certify", "--d", "8", "--delta", "2", "--p", "0", "--q", "1"});
  CHECK(unit.code == 0);
  CHECK(unit.out.find("collision: not Lipschitz-invertible on this class") != std::string::npos);

  auto text = run({"certify", "--d", "8", "--delta", "2", "--p", "1", "--q", "2"});
  CHECK(text.out.find("ratio                 2\n") != std::string::npos);
}

TEST_CASE("certify is deterministic and never lowers the ratio") {
  const std::vector<std::string> args{"certify", "--d", "16", "--delta", "3", "--p", "0.5", "--q", "1.5",
                                      "--budget", "200", "--seed", "9", "--format", "json"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto base = run({"certify", "--d", "16", "--delta", "3", "--p", "0.5", "--q", "1.5", "--format", "json"});
  CHECK(json::parse(a.out)["ratio"].get<double>() >= json::parse(base.out)["ratio"].get<double>());
}

TEST_CASE("usage errors") {
  CHECK(run({"certify", "--d", "8", "--delta", "3"}).code == 2);
  CHECK(run({"certify", "--d", "8,16", "--delta", "2"}).code == 2);
  CHECK(run({"certify", "--d", "8", "--delta", "2", "--p", "3", "--q", "1"}).code == 2);
  CHECK(run({"certify", "--family", "nope"}).code == 2);
  CHECK(run({"certify", "--map", "W"}).code == 2);
  CHECK(run({"sweep", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto cfg = temp_path("empty_grid.json");
  locallip::write_text_file(cfg, R"({"d": []})");
  CHECK(run({"sweep", "--config", cfg.string()}).code == 2);
  locallip::write_text_file(cfg, R"({"d": [8, )");
  CHECK(run({"sweep", "--config", cfg.string()}).code == 2);
  fs::remove(cfg);
  CHECK(run({"sweep", "--config", temp_path("missing.json").string()}).code == 3);
  CHECK(run({"certify", "--out", (temp_path("no_dir") / "x" / "y.txt").string()}).code == 3);
}

TEST_CASE("verify") {
  auto ok = run({"verify"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("stft_identity") != std::string::npos);
  CHECK(run({"verify", "--d", "32", "--delta", "2,5", "--family", "windowed-fourier"}).code == 0);
  CHECK(run({"verify", "--d", "32", "--L", "16", "--delta", "4", "--family", "masked-fourier"}).code == 0);

  const auto bad = temp_path("corrupt_masks.json");
  locallip::write_text_file(bad, R"({"d":8,"delta":2,"tag":"custom","params":{},
    "masks":[[[1,0],[0,0],[0,0],[0,1],[0,0],[0,0],[0,0],[0,0]]]})");
  CHECK(run({"verify", "--family", "custom", "--masks", bad.string()}).code == 3);
  locallip::write_text_file(bad, "not json");
  CHECK(run({"verify", "--family", "custom", "--masks", bad.string()}).code == 3);
  fs::remove(bad);
}

TEST_CASE("sweep output is deterministic and in grid order") {
  const std::vector<std::string> base{"sweep", "--d", "64,128,256", "--delta", "4,8", "--p", "0.5",
                                      "--q", "1", "--family", "masked-fourier", "--budget", "20", "--seed", "5"};
  auto serial = run(base);
  auto again = run(base);
  auto parallel = base;
  parallel.insert(parallel.end(), {"--jobs", "4"});
  auto threaded = run(parallel);
  REQUIRE(serial.code == 0);
  CHECK(strip_wall_time(serial.out) == strip_wall_time(again.out));
  CHECK(strip_wall_time(serial.out) == strip_wall_time(threaded.out));
  CHECK(serial.out.rfind("d,delta,a,L,K,p,q,family,map,signal_distance,measurement_distance,ratio,"
                         "rhs_no_const,empirical_const,wall_time",
                         0) == 0);
}

TEST_CASE("sweep fits") {
  auto d = run({"sweep", "--d", "64,128,256,512,1024,2048,4096", "--delta", "8", "--p", "1", "--q", "1",
                "--format", "json"});
  REQUIRE(d.code == 0);
  const auto doc = json::parse(d.out);
  REQUIRE(doc["fits"].size() == 1);
  CHECK(doc["fits"][0]["axis"] == "d");
  CHECK(std::abs(doc["fits"][0]["exponent"].get<double>() - 0.5) <= 0.05);
  CHECK(doc["rows"].size() == 7);

  auto delta = run({"sweep", "--d", "4096", "--delta", "4,8,16,32", "--p", "1", "--q", "1", "--format", "json"});
  const auto ddoc = json::parse(delta.out);
  REQUIRE(ddoc["fits"].size() == 1);
  CHECK(std::abs(ddoc["fits"][0]["exponent"].get<double>() + 1.0) <= 0.15);
}

TEST_CASE("sweep with a search budget dominates the atoll ratio") {
  const std::vector<std::string> grid{"sweep", "--d", "16,32", "--delta", "2,3", "--p", "0.5", "--q", "1",
                                      "--format", "json"};
  auto plain = run(grid);
  auto searched_args = grid;
  searched_args.insert(searched_args.end(), {"--budget", "100"});
  auto searched = run(searched_args);
  const auto a = json::parse(plain.out)["rows"], b = json::parse(searched.out)["rows"];
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i]["ratio"].get<double>() >= a[i]["ratio"].get<double>());
}

TEST_CASE("masks export and import") {
  const auto path = temp_path("two_shot.json");
  REQUIRE(run({"masks", "export", path.string(), "--d", "8", "--delta", "2"}).code == 0);
  const auto family = locallip::load_family(path);
  CHECK(family.size() == 3);
  for (const auto& m : family.masks())
    for (std::size_t n = 2; n < 8; ++n) CHECK(m[n] == locallip::Complex{});
  CHECK(family == locallip::two_shot_family(8, 2));

  auto imported = run({"masks", "import", path.string(), "--d", "8"});
  CHECK(imported.code == 0);
  CHECK(imported.out.find("3 masks") != std::string::npos);
  CHECK(run({"masks", "import", path.string(), "--d", "16"}).code == 3);
  CHECK(run({"masks", "import", temp_path("absent.json").string()}).code == 3);
  CHECK(run({"masks", "rename", path.string()}).code == 2);
  fs::remove(path);
}
