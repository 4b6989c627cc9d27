#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "v1ss/cli.hpp"
#include "v1ss/table.hpp"

using namespace v1ss;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("v1ss_cli_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("fnv1a reference values") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"page", "--frobnicate"}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  auto dir = scratch("usage").string();
  CHECK(invoke({"page", "--format", "png", "--out", dir}).code == 2);
  CHECK(invoke({"page", "--spectrum", "ko", "--out", dir}).code == 2);
  CHECK(invoke({"page", "--spectrum", "S", "--page", "4", "--out", dir}).code == 2);
  CHECK(invoke({"verify", "--v1-min", "3", "--v1-max", "1", "--out", dir}).code == 2);
  auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("decompose") != std::string::npos);
}

TEST_CASE("page tables carry window metadata") {
  auto dir = scratch("page");
  auto r = invoke({"page", "--spectrum", "M", "--page", "4", "--t-max", "16", "--v1-min", "-6", "--v1-max", "6",
                   "--out", dir.string(), "--no-cache"});
  REQUIRE(r.code == 0);
  auto table = parse_tsv(read_file(dir / "page_M_E4.tsv"));
  CHECK(table.metadata.at("spectrum") == "M");
  CHECK(table.metadata.at("t_max") == "16");
  CHECK(table.metadata.at("conditional_on_conjecture") == "true");
  CHECK(table.lookup(1, 2, 0) == 1u);
  CHECK(table.lookup(3, 6, 0) == 0u);
  CHECK_FALSE(fs::exists(dir / ".cache"));
}

TEST_CASE("config file and cache") {
  auto dir = scratch("config");
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "run.ini");
    cfg << "t-max=20\nv1-min=-6\nv1-max=6\n";
  }
  std::vector<std::string> args{"--config", (dir / "run.ini").string(), "decompose", "--out", (dir / "o").string()};
  auto first = invoke(args);
  REQUIRE(first.code == 0);
  auto bytes = read_file(dir / "o" / "decomposition.tsv");
  CHECK(bytes.find("s\tt\tstem\tlhs\trhs\tstatus") != std::string::npos);
  CHECK(fs::exists(dir / "o" / ".cache"));
  fs::remove(dir / "o" / "decomposition.tsv");
  auto second = invoke(args);
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
  CHECK(read_file(dir / "o" / "decomposition.tsv") == bytes);
}

TEST_CASE("other subcommands write their artifacts") {
  auto dir = scratch("misc");
  auto o = dir.string();
  CHECK(invoke({"ext", "--comodule", "M", "--ext-s-max", "3", "--ext-t-max", "8", "--out", o}).code == 0);
  CHECK(parse_tsv(read_file(dir / "ext_M.tsv")).lookup(2, 4) == 1u);
  CHECK(invoke({"mahowald", "--p-max", "6", "--q-max", "52", "--out", o}).code == 0);
  CHECK(read_file(dir / "mahowald_homology.txt").find("6 51 x(2)^3+x(1)^2*x(3)\n") != std::string::npos);
  CHECK(invoke({"chart", "--t-max", "16", "--v1-min", "-6", "--v1-max", "6", "--format", "txt", "--out", o}).code == 0);
  CHECK(fs::exists(dir / "chart_M_E4.txt"));
  CHECK(invoke({"chart", "--decomposition", "--t-max", "16", "--v1-min", "-6", "--v1-max", "6", "--out", o}).code ==
        0);
  CHECK(read_file(dir / "chart_decomposition.svg").find("<svg") != std::string::npos);
  auto v = invoke({"verify", "--t-max", "16", "--v1-min", "-6", "--v1-max", "6", "--out", o});
  CHECK(v.code == 0);
  CHECK(v.out.find("all checks passed") != std::string::npos);
}
