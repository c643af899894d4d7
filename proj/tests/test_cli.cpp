// Drives the installed CLI binary end to end. The binary path is baked in
// at configure time (ENGELRAD_CLI_PATH).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string out_path = "/tmp/engelrad_cli_test_" + std::to_string(counter++) + ".out";
  std::string cmd = std::string(ENGELRAD_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  res.stdout_text = slurp(out_path);
  std::remove(out_path.c_str());
  return res;
}

}  // namespace

TEST_CASE("info command") {
  RunResult r = run_cli("info --catalog s3 --no-timing");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["command"] == "info");
  CHECK(j["group"]["order"] == 6);
  CHECK(j["solvable"] == true);
  CHECK(j["nilpotent"] == false);
}

TEST_CASE("classify and radical commands") {
  RunResult r = run_cli("classify --catalog c6 --no-timing");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  for (const auto& rec : j["elements"]) CHECK(rec["nil_order"].get<int>() <= 1);

  r = run_cli("radical --catalog s4 --no-timing");
  CHECK(r.exit_code == 0);
  j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["series_orders"] == nlohmann::json::array({1, 4, 12, 24}));
}

TEST_CASE("identity checks set the exit code") {
  CHECK(run_cli("check-identity --catalog q8 --engel 2 --no-timing").exit_code == 0);
  CHECK(run_cli("check-identity --catalog s3 --engel 3 --no-timing").exit_code == 1);
  CHECK(run_cli("check-identity --catalog s3 --tower 1,2 --no-timing").exit_code == 0);
  CHECK(run_cli("check-identity --catalog c6 --word [x1,y] --no-timing").exit_code == 0);
  CHECK(run_cli("check-identity --catalog s3 --word x1*x1 --no-timing").exit_code == 1);
  CHECK(run_cli("check-identity --catalog s3 --word 'x1*' --no-timing").exit_code == 2);
  CHECK(run_cli("check-identity --catalog s3 --tower 0,2 --no-timing").exit_code == 2);
  CHECK(run_cli("check-identity --catalog s3 --no-timing").exit_code == 2);
}

TEST_CASE("sequence files") {
  const char* path = "/tmp/engelrad_cli_seq.txt";
  {
    std::ofstream out(path);
    out << "# engel prefix\n[x1,y]\n[[x1,y],y]\n";
  }
  CHECK(run_cli(std::string("check-identity --catalog q8 --sequence ") + path +
                " --index 2 --no-timing")
            .exit_code == 0);
  CHECK(run_cli(std::string("check-identity --catalog q8 --sequence ") + path +
                " --index 7 --no-timing")
            .exit_code == 2);
  std::remove(path);
}

TEST_CASE("verify command") {
  RunResult r = run_cli("verify --catalog a5 --no-timing");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["all_passed"] == true);
  for (const auto& check : j["checks"])
    if (check["name"] == "quasinil_set_equals_radical") {
      CHECK(check["quasinil_count"] == 1);
      CHECK(check["radical_count"] == 1);
    }
}

TEST_CASE("input errors exit with 2") {
  const char* path = "/tmp/engelrad_cli_bad.perm";
  {
    std::ofstream out(path);
    out << "(1 2\n";
  }
  CHECK(run_cli(std::string("info --input ") + path).exit_code == 2);
  std::remove(path);
  CHECK(run_cli("info --catalog nosuch").exit_code == 2);
  CHECK(run_cli("info").exit_code == 2);
  CHECK(run_cli("info --catalog s3 --input foo.perm").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code != 0);
}

TEST_CASE("table and matrix file inputs") {
  const char* table_path = "/tmp/engelrad_cli_c3.table";
  {
    std::ofstream out(table_path);
    out << "3\n0 1 2\n1 2 0\n2 0 1\n";
  }
  RunResult r = run_cli(std::string("info --input ") + table_path + " --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.stdout_text)["group"]["order"] == 3);
  // explicit --format overrides inference
  r = run_cli(std::string("info --input ") + table_path + " --format table --no-timing");
  CHECK(r.exit_code == 0);
  std::remove(table_path);

  const char* mat_path = "/tmp/engelrad_cli_q8.matrix";
  {
    std::ofstream out(mat_path);
    out << "matrix 3 2\n0 2\n1 0\n\n1 1\n1 2\n";
  }
  r = run_cli(std::string("radical --input ") + mat_path + " --no-timing");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["group"]["order"] == 8);
  CHECK(j["fitting"]["order"] == 8);
  std::remove(mat_path);
}

TEST_CASE("file input and json output") {
  const char* group_path = "/tmp/engelrad_cli_s3.perm";
  {
    std::ofstream out(group_path);
    out << "# S_3\n(1 2 3)\n(1 2)\n";
  }
  const char* json_path = "/tmp/engelrad_cli_out.json";
  RunResult r = run_cli(std::string("info --input ") + group_path + " --json " + json_path +
                        " --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.empty());
  auto j = nlohmann::json::parse(slurp(json_path));
  CHECK(j["group"]["order"] == 6);
  std::remove(group_path);
  std::remove(json_path);
}

TEST_CASE("reports repeat byte-for-byte") {
  RunResult a = run_cli("classify --catalog s4 --seed 3 --threads 1 --no-timing");
  RunResult b = run_cli("classify --catalog s4 --seed 3 --threads 4 --no-timing");
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);
  CHECK(!a.stdout_text.empty());
}
