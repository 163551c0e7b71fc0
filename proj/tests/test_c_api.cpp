#include <doctest.h>
#include <json.hpp>

#include <string>
#include <thread>
#include <vector>

#include "dicol/dicol.h"

using json = nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  dicol_string_free(s);
  return out;
}

void collect(const char* line, void* ctx) { static_cast<std::vector<std::string>*>(ctx)->push_back(line); }

}  // namespace

TEST_CASE("graph handles") {
  dicol_graph* g = nullptr;
  REQUIRE(dicol_graph_new(3, &g) == DICOL_OK);
  CHECK(dicol_graph_add_edge(g, 0, 1) == DICOL_OK);
  CHECK(dicol_graph_add_edge(g, 1, 2) == DICOL_OK);
  CHECK(dicol_graph_add_edge(g, 1, 1) == DICOL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(dicol_last_error()).size() > 0);
  CHECK(dicol_graph_add_edge(g, 0, 9) == DICOL_ERR_INVALID_ARGUMENT);
  int n = 0, m = 0, present = -1;
  CHECK(dicol_graph_order(g, &n) == DICOL_OK);
  CHECK(dicol_graph_size(g, &m) == DICOL_OK);
  CHECK(dicol_graph_has_edge(g, 2, 1, &present) == DICOL_OK);
  CHECK(n == 3);
  CHECK(m == 2);
  CHECK(present == 1);
  char* enc = nullptr;
  CHECK(dicol_graph_to_graph6(g, &enc) == DICOL_OK);
  CHECK(take(enc) == "Bg");
  dicol_graph_free(g);
  dicol_graph_free(nullptr);

  CHECK(dicol_graph_from_graph6("A`", &g) == DICOL_ERR_PARSE);
  CHECK(dicol_graph_from_graph6("A_", &g) == DICOL_OK);
  dicol_graph_free(g);
  CHECK(dicol_graph_named("grotzsch", &g) == DICOL_OK);
  CHECK(dicol_graph_size(g, &m) == DICOL_OK);
  CHECK(m == 20);
  dicol_graph_free(g);
  CHECK(dicol_graph_named("bipartite3,4", &g) == DICOL_OK);
  CHECK(dicol_graph_size(g, &m) == DICOL_OK);
  CHECK(m == 12);
  dicol_graph_free(g);
  CHECK(dicol_graph_named("petersen", &g) == DICOL_ERR_INVALID_ARGUMENT);
  CHECK(dicol_graph_new(-1, &g) == DICOL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null arguments") {
  CHECK(dicol_graph_new(3, nullptr) == DICOL_ERR_NULL);
  CHECK(dicol_graph_add_edge(nullptr, 0, 1) == DICOL_ERR_NULL);
  CHECK(dicol_digraph_from_digraph6(nullptr, nullptr) == DICOL_ERR_NULL);
  int v = 0;
  CHECK(dicol_dichromatic(nullptr, 10, &v, nullptr, nullptr, nullptr) == DICOL_ERR_NULL);
  CHECK(std::string(dicol_status_name(DICOL_ERR_NULL)) == "null-argument");
  CHECK(std::string(dicol_status_name(DICOL_OK)) == "ok");
}

TEST_CASE("digraph decisions and reports") {
  dicol_digraph* d = nullptr;
  REQUIRE(dicol_digraph_named("d25", &d) == DICOL_OK);
  int decision = -1;
  char* report = nullptr;
  std::vector<std::string> certs;
  REQUIRE(dicol_dicolourable(d, 2, 1000000, &decision, &report, collect, &certs) == DICOL_OK);
  CHECK(decision == DICOL_NO);
  auto j = json::parse(take(report));
  CHECK(j["verdict"] == "not-dicolourable");
  CHECK(j["stats"]["nodes"].get<int>() > 0);
  REQUIRE(certs.size() == 1);
  int valid = -1;
  CHECK(dicol_verify_certificate(certs[0].c_str(), &valid, &report) == DICOL_OK);
  take(report);
  CHECK(valid == 1);

  CHECK(dicol_dicolourable(d, 2, 10, &decision, &report, nullptr, nullptr) == DICOL_ERR_BUDGET);
  auto b = json::parse(take(report));
  CHECK(b["verdict"] == "budget-exceeded");
  CHECK(b["stats"]["nodes"].get<int>() > 0);

  int value = 0;
  CHECK(dicol_dichromatic(d, 1000000, &value, nullptr, nullptr, nullptr) == DICOL_OK);
  CHECK(value == 3);
  dicol_digraph_free(d);

  REQUIRE(dicol_digraph_named("paley7", &d) == DICOL_OK);
  CHECK(dicol_acyclic(d, 1000000, &value, &report, nullptr, nullptr) == DICOL_OK);
  CHECK(value == 3);
  CHECK(json::parse(take(report))["witness"].size() == 3);
  CHECK(dicol_linforest_digraph(d, 1000000, &value, nullptr, nullptr, nullptr) == DICOL_OK);
  CHECK(value == 6);
  certs.clear();
  CHECK(dicol_order(d, 1, &report, collect, &certs) == DICOL_OK);
  auto o = json::parse(take(report));
  CHECK(o["half_degree_bound"] == true);
  CHECK(o["dichromatic_via_orders"] == 3);
  CHECK(certs.size() == 2);
  dicol_digraph* blow = nullptr;
  CHECK(dicol_backward_blowup(d, 2, &blow) == DICOL_OK);
  int n = 0;
  CHECK(dicol_digraph_order(blow, &n) == DICOL_OK);
  CHECK(n == 14);
  dicol_digraph_free(blow);
  dicol_digraph_free(d);

  CHECK(dicol_digraph_named("paley9", &d) == DICOL_ERR_INVALID_ARGUMENT);
  CHECK(dicol_digraph_from_digraph6("&A_", &d) == DICOL_ERR_INVALID_ARGUMENT);
  CHECK(dicol_digraph_new(65, &d) == DICOL_OK);
  CHECK(dicol_dichromatic(d, 10, &value, nullptr, nullptr, nullptr) == DICOL_ERR_LIMIT);
  dicol_digraph_free(d);
}

TEST_CASE("D25 verification through the C interface") {
  int decision = 0;
  char* report = nullptr;
  std::vector<std::string> certs;
  REQUIRE(dicol_verify_d25(100000000, &decision, &report, collect, &certs) == DICOL_OK);
  CHECK(decision == DICOL_YES);
  auto j = json::parse(take(report));
  CHECK(j["dichromatic_number"] == 3);
  CHECK(j["dicritical"]["critical"] == true);
  CHECK(j["dicritical"]["arc_deletions"] == 125);
  for (const auto& c : certs) {
    int valid = 0;
    CHECK(dicol_verify_certificate(c.c_str(), &valid, nullptr) == DICOL_OK);
    CHECK(valid == 1);
  }
  CHECK(certs.size() == 3);
}

TEST_CASE("graph-level operations") {
  dicol_graph* g = nullptr;
  REQUIRE(dicol_graph_named("grotzsch", &g) == DICOL_OK);
  int value = 0;
  char* report = nullptr;
  CHECK(dicol_linforest_graph(g, 1000000, &value, &report) == DICOL_OK);
  CHECK(value == 6);
  CHECK(json::parse(take(report))["orientation_linear_forest"] == 6);
  dicol_graph_free(g);

  std::vector<std::string> lines;
  uint64_t count = 0;
  CHECK(dicol_enumerate(8, 2, -1, 1, 2, collect, &lines, &count) == DICOL_OK);
  CHECK(count == 83);
  CHECK(lines.size() == 83);
  CHECK(dicol_enumerate(21, 0, -1, 1, 1, collect, &lines, &count) == DICOL_ERR_LIMIT);
}

TEST_CASE("experiments and constants") {
  int decision = 0;
  char* report = nullptr;
  CHECK(dicol_constants(0.513, 3.43, 3.1, 1e-4, &decision, &report) == DICOL_OK);
  CHECK(decision == DICOL_YES);
  auto j = json::parse(take(report));
  CHECK(j["inequality1"]["margin"].get<double>() > 0);
  CHECK(dicol_experiment("small-witness", R"({"max_order":5})", 1, 1, &decision, &report) == DICOL_OK);
  CHECK(decision == DICOL_YES);
  take(report);
  CHECK(dicol_experiment("tournaments", R"({"n":5})", 1, 1, &decision, &report) == DICOL_OK);
  CHECK(json::parse(take(report))["min_acyclic"] == 3);
  CHECK(dicol_experiment("small-witness", "{bad", 1, 1, &decision, &report) == DICOL_ERR_PARSE);
  CHECK(dicol_experiment("nothing", "", 1, 1, &decision, &report) == DICOL_ERR_INVALID_ARGUMENT);
  CHECK(dicol_extremal(4, &report) == DICOL_OK);
  auto e = json::parse(take(report));
  CHECK(e["min_acyclic_number"] == 3);
  CHECK(e["max_dichromatic_number"] == 2);
  CHECK(dicol_extremal(9, &report) == DICOL_ERR_LIMIT);
}

TEST_CASE("errors are per thread") {
  dicol_graph* g = nullptr;
  CHECK(dicol_graph_from_graph6("A`", &g) == DICOL_ERR_PARSE);
  std::string main_error = dicol_last_error();
  std::string other;
  std::thread t([&] {
    dicol_graph* h = nullptr;
    CHECK(dicol_graph_new(2, &h) == DICOL_OK);
    other = dicol_last_error();
    dicol_graph_free(h);
  });
  t.join();
  CHECK(other.empty());
  CHECK(dicol_last_error() == main_error);
  CHECK(std::string(dicol_version()) == "1.0.0");
}
