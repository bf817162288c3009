// Drives the built executable through a shell.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EDGERING_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(EDGERING_DATA_DIR) + "/" + name; }

bool has(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("classify two bridged triangles") {
  const Run text = run("classify " + data("two_triangles.el"));
  CHECK(text.code == 0);
  CHECK(has(text.out, "normal: false\n"));
  CHECK(has(text.out, "R1: true\n"));
  CHECK(has(text.out, "(1,2,3)"));

  const Run json = run("classify --json " + data("two_triangles.el"));
  CHECK(json.code == 0);
  CHECK(has(json.out, "\"r1_violations\":[]"));
  CHECK(has(json.out, "\"normal\":false"));
  CHECK(run("classify --json " + data("two_triangles.el")).out == json.out);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run("classify " + data("loop.el")).code == 2);
  CHECK(run("classify " + data("no_such_file.el")).code == 2);
  CHECK(run("classify " + data("disconnected.el")).code == 3);
  CHECK(run("facets " + data("c4.el")).code == 3);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("classify --format xml " + data("k3.el")).code == 2);
}

TEST_CASE("facets and oracle") {
  const Run k3 = run("facets " + data("k3.el"));
  CHECK(k3.code == 0);
  std::size_t rows = 0;
  for (std::size_t at = k3.out.find("Fundamental("); at != std::string::npos; at = k3.out.find("Fundamental(", at + 1)) ++rows;
  CHECK(rows == 3);

  const Run fig = run("oracle " + data("two_triangles.el"));
  CHECK(fig.code == 0);
  CHECK(has(fig.out, "agreement: OK"));

  const Run graphs = run("oracle --json " + data("connected7.g6"));
  // The 44 bipartite graphs in the corpus are rejected; the rest are reported.
  CHECK(graphs.code == 3);
  CHECK(std::count(graphs.out.begin(), graphs.out.end(), '\n') == 809);
  CHECK(has(graphs.out, "connected7.g6#853"));
  CHECK_FALSE(has(graphs.out, "\"agreement\":false"));
}

TEST_CASE("bridge(1) fails at vertex 7 in both deciders") {
  const Run gen = run("generate bridge --k 1");
  REQUIRE(gen.code == 0);
  const std::string path = std::string(EDGERING_BINARY_DIR) + "/bridge1.el";
  CHECK(run("generate bridge --k 1 -o " + path).code == 0);
  const Run oracle = run("oracle --json " + path);
  CHECK(oracle.code == 0);
  CHECK(has(oracle.out, "\"r1_violations\":[{\"kind\":\"regular_vertex\",\"vertex\":7}]"));
  CHECK(has(oracle.out, "\"oracle_r1\":false"));
  CHECK(has(oracle.out, "\"agreement\":true"));
}

TEST_CASE("generate") {
  const Run two = run("generate bridge --k 2");
  CHECK(two.code == 0);
  CHECK(edgering::parse_edge_list(two.out) == fixtures::two_triangles());
  CHECK(run("generate bridge --k 0").code == 2);
  CHECK(run("generate bridge").code == 2);
  CHECK(run("generate cycle --n 5").out == "5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
  CHECK(run("generate moebius --n 5").code == 2);
}

TEST_CASE("sweep") {
  const Run one = run("sweep --max-vertices 1");
  CHECK(one.code == 0);
  CHECK(has(one.out, "graphs: 1\n"));
  const Run five = run("sweep --max-vertices 5 --jobs 2");
  CHECK(five.code == 0);
  CHECK(has(five.out, "graphs: 1099\n"));
  CHECK(has(five.out, "disagreements: 0\n"));
  CHECK(run("sweep --max-vertices 5 --jobs 1").out == five.out);
  CHECK(run("sweep --max-vertices 9").code == 2);
  const Run corpus = run("sweep --source " + data("connected7.g6"));
  CHECK(corpus.code == 0);
  CHECK(has(corpus.out, "graphs: 853\n"));
  CHECK(has(corpus.out, "disagreements: 0\n"));
}
