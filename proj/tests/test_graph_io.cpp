#include <doctest.h>

#include <sstream>

#include "dtdom/errors.hpp"
#include "dtdom/families.hpp"
#include "dtdom/graph_io.hpp"

using namespace dtdom;

TEST_CASE("graph6 known encodings") {
  // Standard examples: K2 is "A_", P3 (0-1-2) is "Bg", K4 is "C~".
  CHECK(to_graph6(generate(FamilyId::complete(2))) == "A_");
  CHECK(to_graph6(generate(FamilyId::path(3))) == "Bg");
  CHECK(to_graph6(generate(FamilyId::complete(4))) == "C~");
  CHECK(to_graph6(Graph::from_edge_list(1, {})) == "@");
  CHECK(parse_graph6(">>graph6<<C~") == generate(FamilyId::complete(4)));
}

TEST_CASE("graph6 round trip on families") {
  for (const char* name : {"H(3)", "L(13)", "T(4)", "Corona(C(5),2)", "C10''", "P(63)", "K(64)"}) {
    const Graph g = generate(FamilyId::parse(name));
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 large order header") {
  const Graph g = generate(FamilyId::path(70));
  const std::string s = to_graph6(g);
  CHECK(s[0] == '~');
  CHECK(parse_graph6(s) == g);
}

TEST_CASE("graph6 rejects malformed text") {
  CHECK_THROWS_AS(parse_graph6("C"), InputError);
  CHECK_THROWS_AS(parse_graph6("C~~"), InputError);
  CHECK_THROWS_AS(parse_graph6("Bh"), InputError);  // nonzero padding bits
  CHECK_THROWS_AS(parse_graph6("B\x01"), InputError);
}

TEST_CASE("edge list reading and writing") {
  std::istringstream in("# a comment\n4 3\n0 1\n\n1 2\n2 3 # trailing\n");
  const Graph g = read_edge_list(in);
  CHECK(g == generate(FamilyId::path(4)));
  std::ostringstream out;
  write_edge_list(out, g);
  CHECK(out.str() == "4 3\n0 1\n1 2\n2 3\n");
}

TEST_CASE("edge list errors carry line numbers") {
  std::istringstream bad("3 2\n0 1\n0 x\n");
  try {
    read_edge_list(bad);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream short_in("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(short_in), IoError);
  std::istringstream range("3 1\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(range), IoError);
}

TEST_CASE("graph6 streams") {
  std::istringstream in("A_\n\nBg\nC?\n");
  CHECK(read_graphs(in, GraphFormat::Graph6).size() == 3);
  std::istringstream bad("A_\nzz\n");
  try {
    read_graphs(bad, GraphFormat::Graph6);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(e.line() == 2);
  }
  CHECK(parse_format("G6") == GraphFormat::Graph6);
  CHECK_THROWS_AS(parse_format("dot"), InputError);
}
