#include <doctest.h>

#include <set>
#include <string>

#include "dicol/constructions.hpp"
#include "dicol/graph6.hpp"
#include "dicol/rng.hpp"

using namespace dicol;

namespace {

ParseErrc kind_of(const std::string& line, bool directed) {
  try {
    if (directed)
      decode_digraph6(line);
    else
      decode_graph6(line);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no error for " << line);
  return ParseErrc::schema;
}

}  // namespace

TEST_CASE("graph6 small examples") {
  CHECK(decode_graph6("?").order() == 0);
  CHECK(decode_graph6("@").order() == 1);
  auto k2 = decode_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.has_edge(0, 1));
  CHECK(encode_graph6(complete_graph(2)) == "A_");
  CHECK(encode_graph6(UndirectedGraph(0)) == "?");
  CHECK(encode_graph6(UndirectedGraph(1)) == "@");
  CHECK(encode_graph6(complete_graph(3)) == "Bw");
  CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
  CHECK(decode_graph6(">>graph6<<A_\n") == complete_graph(2));
}

TEST_CASE("digraph6 small examples") {
  CHECK(decode_digraph6("&?").order() == 0);
  auto d = decode_digraph6("&AO");  // 0->1
  CHECK(d.has_arc(0, 1));
  CHECK(!d.has_arc(1, 0));
  CHECK(encode_digraph6(directed_cycle(3)) == "&BP_");
  CHECK(is_digraph6("&BP_"));
  CHECK(!is_digraph6("Bw"));
}

TEST_CASE("graph6 long size fields") {
  UndirectedGraph g(63);
  g.add_edge(0, 62);
  auto s = encode_graph6(g);
  CHECK(s.substr(0, 4) == "~??~");
  CHECK(decode_graph6(s) == g);
  UndirectedGraph h(200);
  h.add_edge(5, 199);
  CHECK(decode_graph6(encode_graph6(h)) == h);
  CHECK_THROWS_AS(decode_graph6("~??~" + std::string(1, '?')), ParseError);
}

TEST_CASE("graph6 errors are distinct") {
  CHECK(kind_of("A", false) == ParseErrc::wrong_length);
  CHECK(kind_of("A__", false) == ParseErrc::wrong_length);
  CHECK(kind_of("A`", false) == ParseErrc::nonzero_padding);
  CHECK(kind_of("A\x7f", false) == ParseErrc::char_out_of_range);
  CHECK(kind_of("A ", false) == ParseErrc::char_out_of_range);
  CHECK(kind_of("~", false) == ParseErrc::bad_length_field);
  CHECK(kind_of("~??", false) == ParseErrc::bad_length_field);
  CHECK(kind_of("~???", false) == ParseErrc::bad_length_field);  // 0 in long form is not minimal
  CHECK(kind_of("", false) == ParseErrc::bad_length_field);
  CHECK(kind_of("Bw", true) == ParseErrc::bad_prefix);
  CHECK(kind_of("&A", true) == ParseErrc::wrong_length);
  CHECK_THROWS_AS(decode_digraph6("&A_"), InvalidArgument);  // loop at 0
  CHECK(decode_digraph6("&AW").arc_count() == 2);             // digon
  std::set<ParseErrc> kinds{ParseErrc::bad_length_field, ParseErrc::char_out_of_range, ParseErrc::wrong_length,
                            ParseErrc::nonzero_padding, ParseErrc::bad_prefix};
  std::set<std::string> names;
  for (auto k : kinds) names.insert(to_string(k));
  CHECK(names.size() == kinds.size());
}

TEST_CASE("graph6 fuzz round trip") {
  Rng rng(2024);
  for (int t = 0; t < 100000; ++t) {
    int n = static_cast<int>(rng.below(33));
    double p = rng.uniform();
    if (t % 2 == 0) {
      auto g = random_gnp(n, p, rng.next());
      auto s = encode_graph6(g);
      auto back = decode_graph6(s);
      REQUIRE(back == g);
      REQUIRE(encode_graph6(back) == s);
    } else {
      auto d = random_digraph(n, p, false, rng.next());
      auto s = encode_digraph6(d);
      auto back = decode_digraph6(s);
      REQUIRE(back == d);
      REQUIRE(encode_digraph6(back) == s);
    }
  }
}

TEST_CASE("corrupted strings never decode silently into a different encoding") {
  Rng rng(7);
  for (int t = 0; t < 20000; ++t) {
    auto g = random_gnp(static_cast<int>(rng.below(20)), 0.5, rng.next());
    auto s = encode_graph6(g);
    s[rng.below(s.size())] = static_cast<char>(rng.below(128));
    try {
      auto h = decode_graph6(s);
      CHECK(encode_graph6(h) == s);
    } catch (const ParseError&) {
    } catch (const LimitExceeded&) {
    }
  }
}
