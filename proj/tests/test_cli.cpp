#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const fs::path scratch = fs::temp_directory_path() / "sclab_cli_test";

int sclab(const std::string& args, const std::string& env = "") {
  fs::create_directories(scratch);
  const std::string cmd = env + " " + SCLAB_CLI + " " + args + " > " + (scratch / "out").string() +
                          " 2> " + (scratch / "err").string();
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string output(const char* which = "out") {
  std::ifstream in(scratch / which);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::create_directories(scratch);
  std::ofstream(scratch / name) << text;
  return scratch / name;
}

}  // namespace

TEST_CASE("successful runs exit 0") {
  CHECK(sclab("verify --group builtin:D8 --prime 2 --suite table31 --jobs 1") == 0);
  CHECK(output() == [] {
    std::ifstream in(std::string(SCLAB_TEST_DATA) + "/d8_table31.json");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }());
  CHECK(sclab("verify --group builtin:S3 --prime 3 --format markdown") == 0);
  CHECK(output().find("| table31 |") != std::string::npos);
  const auto report = scratch / "r.json";
  CHECK(sclab("verify --group builtin:Zn:5 --prime 5 --strict --report " + report.string()) == 0);
  CHECK(fs::file_size(report) > 0);
}

TEST_CASE("simplex bound leaves edges inconclusive") {
  CHECK(sclab("verify --group builtin:S4 --prime 2 --max-simplices 20") == 0);
  CHECK(output().find("INCONCLUSIVE") != std::string::npos);
  CHECK(sclab("verify --group builtin:S4 --prime 2 --max-simplices 20 --strict") == 2);
}

TEST_CASE("builtins subcommand") {
  CHECK(sclab("builtins") == 0);
  const std::string out = output();
  for (const char* n : {"D8", "Q8", "S4", "A5", "SL23"}) CHECK(out.find(n) != std::string::npos);
}

TEST_CASE("operational failures map to exit codes") {
  const auto bad = write_file("bad.grp", "degree 4\ngen (0 1\n");
  CHECK(sclab("verify --group " + bad.string() + " --prime 2") == 10);
  CHECK(output("err").find("parse error") != std::string::npos);
  CHECK(sclab("verify --group builtin:Nope --prime 2") == 11);
  CHECK(sclab("verify --group builtin:S5 --prime 2 --max-order 60") == 12);
  CHECK(sclab("verify --group builtin:D8 --prime 3") == 13);
  CHECK(sclab("verify --group /nonexistent/g.grp --prime 2") == 14);
  CHECK(sclab("verify --group builtin:D8 --prime 2 --report /nonexistent/dir/r.json") == 14);
  CHECK(sclab("verify --group builtin:D8") == 15);
  CHECK(sclab("verify --group builtin:D8 --prime 2 --suite nonsense") == 15);
  CHECK(sclab("") == 15);
}

TEST_CASE("lattice cache from the environment") {
  const auto cache = scratch / "cache";
  fs::remove_all(cache);
  CHECK(sclab("verify --group builtin:A4 --prime 2 --suite conditions", "SCLAB_CACHE=" + cache.string()) == 0);
  const std::string first = output();
  REQUIRE(fs::exists(cache));
  CHECK(fs::directory_iterator(cache) != fs::directory_iterator());
  CHECK(sclab("verify --group builtin:A4 --prime 2 --suite conditions", "SCLAB_CACHE=" + cache.string()) == 0);
  CHECK(output() == first);
}
