#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  namespace fs = std::filesystem;
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "fockcb-cli-test";
  fs::create_directories(dir);
  const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
  const fs::path in = dir / ("in" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = std::string(FOCKCB_CLI_PATH) + " " + args;
  if (!stdin_text.empty()) {
    std::ofstream f(in);
    f << stdin_text;
    cmd += " < " + in.string();
  }
  cmd += " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

std::string strip_timing(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    out << line << "\n";
  }
  return out.str();
}

}  // namespace

TEST_CASE("canon on the level-2 example") {
  auto r = run("canon --multicharge 1,0 --multipartition \"[4,3,2,2],[7,3,2]\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("method: lm2") != std::string::npos);
  CHECK(r.out.find("terms: 4") != std::string::npos);
  // same symbol through windowed rows
  auto rows = run("canon --rows \"[-3,0,1,3,5],[-3,0,2,7]\" --window-low -3");
  CHECK(rows.exit_code == 0);
  CHECK(rows.out == r.out);
}

TEST_CASE("canon error paths") {
  auto bad = run("canon --multicharge 0,0 --multipartition \"[1],[]\"");
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("error[input]") != std::string::npos);

  auto inapplicable =
      run("canon --multicharge 1,0 --multipartition \"[1],[]\" --method good_monomial_l3");
  CHECK(inapplicable.exit_code == 3);
  CHECK(inapplicable.err.find("error[method]") != std::string::npos);

  auto unparsable = run("canon --multicharge 0,1 --multipartition \"[],[]\"");
  CHECK(unparsable.exit_code == 2);
}

TEST_CASE("canon json and latex formats") {
  auto j = run("--format json canon --multicharge 1,0 --multipartition \"[4,3,2,2],[7,3,2]\"");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"method\": \"lm2\"") != std::string::npos);
  CHECK(j.out.find("\"multicharge\"") != std::string::npos);
  CHECK(j.out.find("\"window_low\"") != std::string::npos);
  auto l = run("--format latex canon --multicharge 1,0 --multipartition \"[4,3,2,2],[7,3,2]\"");
  CHECK(l.exit_code == 0);
  CHECK(l.out.find("\\begin{pmatrix}") != std::string::npos);
}

TEST_CASE("canon output is byte-deterministic and cache independent") {
  namespace fs = std::filesystem;
  const std::string args =
      "--format json canon --multicharge 2,1,0 --multipartition \"[2],[1],[1]\" --method oracle";
  auto first = run(args);
  auto second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  const fs::path cache = fs::temp_directory_path() / "fockcb-cli-cache";
  fs::remove_all(cache);
  auto warm = run(args + " --cache " + cache.string());
  auto cached = run(args + " --cache " + cache.string());
  CHECK(warm.out == first.out);
  CHECK(cached.out == first.out);
  auto disabled = run(args + " --cache " + cache.string() + " --no-cache");
  CHECK(disabled.out == first.out);
  fs::remove_all(cache);
}

TEST_CASE("act applies divided-power words") {
  auto idword = run("act --multicharge 3,3,3 --word \"\"");
  CHECK(idword.exit_code == 0);
  CHECK(idword.out.find("[... 2 3 | ... 2 3 | ... 2 3]") != std::string::npos);

  auto r = run("act --multicharge 3,3,3 --word \"F3^(2) F2^(2)\"");
  CHECK(r.exit_code == 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += (c == '\n') ? 1 : 0;
  CHECK(lines == 3);
  CHECK(r.out.find("(q) * ") != std::string::npos);
  CHECK(r.out.find("(q^2) * ") != std::string::npos);

  // raising undoes it back to the vacuum line count
  auto back = run("act --multicharge 3,3,3 --word \"F3 E3\"");
  CHECK(back.exit_code == 0);

  auto json_out = run("--format json act --multicharge 3,3,3 --word \"F3^(2) F2^(2)\"");
  CHECK(json_out.exit_code == 0);
  CHECK(json_out.out.find("\"terms\"") != std::string::npos);
}

TEST_CASE("act reads vectors from stdin and rejects junk") {
  auto good = run("--format json act --vector - --word \"F0\"",
                  R"({"multicharge":[0,0],"terms":[{"multipartition":[[],[]],"coeff":{"lo":0,"coeffs":[1]}}]})");
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("\"coeffs\"") != std::string::npos);

  auto bad = run("act --vector - --word \"F0\"", "this is not json");
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("error[input]") != std::string::npos);
}

TEST_CASE("crystal replays the rank-3 example") {
  auto r = run("crystal --multicharge 3,2,1 --multipartition \"[1,1],[2],[1]\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("replay through crystal operators: ok") != std::string::npos);
  CHECK(r.out.find("good maximal sequence") != std::string::npos);
  auto bad = run("crystal --multicharge 0,0 --multipartition \"[1],[]\"");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("blocks lists block data") {
  auto r = run("blocks --multicharge 1,0 --max-size 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("size=0") != std::string::npos);
  CHECK(r.out.find("size=2") != std::string::npos);
  CHECK(r.out.find("standard=") != std::string::npos);
}

TEST_CASE("verify exits cleanly and is parallel deterministic") {
  auto r1 = run("verify --multicharge 1,0 --max-size 6 --jobs 1");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("result: OK") != std::string::npos);
  auto r8 = run("verify --multicharge 1,0 --max-size 6 --jobs 8");
  CHECK(r8.exit_code == 0);
  CHECK(strip_timing(r1.out) == strip_timing(r8.out));

  auto restricted = run("verify --multicharge 2,2,1 --max-size 3 --methods ordered,spine");
  CHECK(restricted.exit_code == 0);
  CHECK(restricted.out.find("methods=ordered,spine") != std::string::npos);

  auto bad = run("verify --multicharge 1,0 --max-size 3 --methods nonsense");
  CHECK(bad.exit_code == 2);
}
