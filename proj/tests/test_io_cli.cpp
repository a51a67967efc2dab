#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "dqnls/field_io.hpp"
#include "testutil.hpp"

using namespace dqnls;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path p = fs::temp_directory_path() / "dqnls_io_test";
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(DQNLS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("field dump/load round trip is bit exact") {
  const Grid g = make_grid(512, 20.0);
  ComplexField f = make_field(g, Side::frequency);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uni(-10.0, 10.0);
  for (auto& v : f.values) v = cplx(uni(rng), uni(rng));
  const fs::path path = temp_dir() / "roundtrip.dqf";
  dump_field(f, 3.75, path);
  const LoadedField back = load_field(path);
  CHECK(back.t == 3.75);
  CHECK(back.field.grid == g);
  CHECK(back.field.side == Side::frequency);
  REQUIRE(back.field.values.size() == f.values.size());
  for (std::size_t j = 0; j < f.values.size(); ++j)
    REQUIRE(back.field.values[j] == f.values[j]);
}

TEST_CASE("load errors name the problem") {
  const fs::path dir = temp_dir();
  const Grid g = make_grid(64, 5.0);
  const ComplexField f = testutil::gaussian(g);
  const fs::path good = dir / "good.dqf";
  dump_field(f, 0.0, good);

  // truncated payload
  {
    std::ifstream is(good, std::ios::binary);
    std::vector<char> bytes((std::istreambuf_iterator<char>(is)), {});
    std::ofstream os(dir / "short.dqf", std::ios::binary);
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size() - 48));
  }
  try {
    load_field(dir / "short.dqf");
    FAIL("expected a truncation error");
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("expected") != std::string::npos);
    CHECK(msg.find("got") != std::string::npos);
  }

  // wrong magic
  {
    std::ofstream os(dir / "magic.dqf", std::ios::binary);
    os << "NOPE" << std::string(64, '\0');
  }
  CHECK_THROWS_WITH_AS(load_field(dir / "magic.dqf"),
                       doctest::Contains("bad magic"), std::runtime_error);

  // version bump
  {
    std::ifstream is(good, std::ios::binary);
    std::vector<char> bytes((std::istreambuf_iterator<char>(is)), {});
    bytes[4] = 2;  // version field
    std::ofstream os(dir / "vers.dqf", std::ios::binary);
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  CHECK_THROWS_WITH_AS(load_field(dir / "vers.dqf"),
                       doctest::Contains("incompatible version"), std::runtime_error);
}

TEST_CASE("cli: validation failures exit with code 2") {
  CHECK(run_cli("--q -1 verify-identities --fields 1 --grid-n 256 --grid-L 20") == 2);
  CHECK(run_cli("--grid-n 1000 propagate") == 2);
  CHECK(run_cli("final-state --alpha 0.7") == 2);
}

TEST_CASE("cli: small runs write manifest and report") {
  const fs::path out = temp_dir() / "run_vi";
  fs::remove_all(out);
  CHECK(run_cli("--grid-n 2048 --grid-L 40 --q 1 --out " + out.string() +
                " verify-identities --fields 2") == 0);
  CHECK(fs::exists(out / "manifest.json"));
  CHECK(fs::exists(out / "report.json"));
  CHECK(fs::exists(out / "identities.csv"));

  const fs::path out2 = temp_dir() / "run_fe";
  fs::remove_all(out2);
  CHECK(run_cli("--grid-n 1024 --grid-L 40 --q 1 --out " + out2.string() +
                " forward-evolve --t-end 0.2 --dt 0.01") == 0);
  CHECK(fs::exists(out2 / "evolve.csv"));

  const fs::path out3 = temp_dir() / "run_fs";
  fs::remove_all(out3);
  CHECK(run_cli("--grid-n 2048 --grid-L 96 --q 1 --lambda 0 --out " + out3.string() +
                " final-state --T 10 --T-max 80 --num-times 10 --tol 1e-8") == 0);
  CHECK(fs::exists(out3 / "residuals.csv"));
  CHECK(fs::exists(out3 / "window.csv"));
}

TEST_CASE("cli: config file is honored and flags win") {
  const fs::path dir = temp_dir();
  const fs::path cfg = dir / "cfg.json";
  const fs::path out = dir / "run_cfg";
  fs::remove_all(out);
  {
    std::ofstream os(cfg);
    os << R"({"grid": {"n": 1024, "L": 40.0}, "model": {"q": 1.0},
              "out": ")" << out.string() << R"(",
              "experiment": {"t_end": 0.1, "dt": 0.01}})";
  }
  CHECK(run_cli("--config " + cfg.string() + " forward-evolve") == 0);
  CHECK(fs::exists(out / "manifest.json"));

  // flag overrides the config's q with an invalid value -> validation exit
  CHECK(run_cli("--config " + cfg.string() + " --q -2 forward-evolve") == 2);
}
