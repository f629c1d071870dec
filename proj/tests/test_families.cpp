#include <doctest.h>

#include "dtdom/domination.hpp"
#include "dtdom/errors.hpp"
#include "dtdom/families.hpp"
#include "dtdom/isomorphism.hpp"
#include "support.hpp"

using namespace dtdom;

TEST_CASE("orders and sizes") {
  CHECK(generate(FamilyId::t(4)).order() == 13);
  CHECK(generate(FamilyId::t(4)).size() == 12);
  CHECK(generate(FamilyId::f(4)).size() == 12);
  CHECK(generate(FamilyId::g(4)).size() == 13);
  CHECK(generate(FamilyId::t_star()).order() == 7);
  CHECK(generate(FamilyId::h(3)).order() == 21);
  CHECK(generate(FamilyId::h(3)).size() == 3 + 3 * 7);
  CHECK(generate(FamilyId::l(13)).order() == 14);
  CHECK(generate(FamilyId::l(14)).order() == 14);
  CHECK(generate(FamilyId::relate_gadget(2)).order() == 10);
  CHECK(generate(FamilyId::corona(FamilyId::cycle(5), 2)).order() == 15);
  CHECK_THROWS_AS(generate(FamilyId::l(15)), InputError);
  CHECK_THROWS_AS(generate(FamilyId::f(1)), InputError);
}

TEST_CASE("structural descriptions hold") {
  // F_k and T_k are trees; G_k has exactly one cycle, a triangle through the center.
  for (int k = 2; k <= 5; ++k) {
    CHECK(is_tree(generate(FamilyId::t(k))));
    CHECK(is_tree(generate(FamilyId::f(k))));
    CHECK_FALSE(is_isomorphic(generate(FamilyId::t(k)), generate(FamilyId::f(k))));
  }
  CHECK(is_isomorphic(generate(FamilyId::l(1)), generate(FamilyId::path(7))));
  CHECK(is_isomorphic(generate(FamilyId::l(10)), generate(FamilyId::cycle(7))));
  // H_t is claw-free, L(i) are claw-free.
  for (int t = 1; t <= 4; ++t) CHECK(is_claw_free(generate(FamilyId::h(t))));
  for (int i = 1; i <= 14; ++i) CHECK(is_claw_free(generate(FamilyId::l(i))));
  // T* is K_{1,3} with one edge subdivided three times.
  CHECK(generate(FamilyId::t_star()).degree_sequence() == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
}

TEST_CASE("L1 to L12 are pairwise non-isomorphic with total domination 4") {
  for (int i = 1; i <= 12; ++i) {
    const Graph li = generate(FamilyId::l(i));
    CHECK(li.order() == 7);
    CHECK(is_connected(li));
    CHECK(oracle::minimum(to_matrix(li), oracle::Kind::Total).first == 4);
    for (int j = i + 1; j <= 12; ++j) CHECK_FALSE(is_isomorphic(li, generate(FamilyId::l(j))));
  }
}

TEST_CASE("reference values match the oracle") {
  for (const char* name : {"T(2)", "T(3)", "F(3)", "G(3)", "TStar", "H(1)", "H(2)", "L(2)", "L(13)", "L(14)"}) {
    const auto id = FamilyId::parse(name);
    const auto want = dtd_reference_value(id);
    REQUIRE(want);
    CHECK(oracle::minimum(to_matrix(generate(id)), oracle::Kind::Dtd).first == *want);
  }
  CHECK_FALSE(dtd_reference_value(FamilyId::l(4)));
}

TEST_CASE("parse and print") {
  for (const char* name : {"P(7)", "C(5)", "K(4)", "Star(3)", "DoubleStar(2,3)", "T(4)", "F(3)", "G(2)", "TStar", "H(3)",
                           "L(13)", "C10'", "C10''", "RelateGadget(3)", "Corona(C(5),2)"}) {
    CHECK(FamilyId::parse(name).to_string() == name);
  }
  CHECK(FamilyId::parse("t(4)") == FamilyId::t(4));
  CHECK(FamilyId::parse(" h ( 3 ) ") == FamilyId::h(3));
  CHECK_THROWS_AS(FamilyId::parse("Q(3)"), InputError);
  CHECK_THROWS_AS(FamilyId::parse("T(x)"), InputError);
  CHECK_THROWS_AS(FamilyId::parse("T(4"), InputError);
  CHECK_THROWS_AS(FamilyId::parse(""), InputError);
}

TEST_CASE("classes and classification") {
  CHECK(class_members(FamilyClass::CalE).size() == 6);
  CHECK(class_members(FamilyClass::CalS1).size() == 6);
  CHECK(class_members(FamilyClass::CalS).size() == 8);
  CHECK(class_members(FamilyClass::CalL).size() == 12);
  CHECK_THROWS_AS(class_members(FamilyClass::CalT), InputError);
  CHECK(in_class(generate(FamilyId::t(5)), FamilyClass::CalT));
  CHECK_FALSE(in_class(generate(FamilyId::t(5)), FamilyClass::CalF));
  CHECK(in_class(generate(FamilyId::h(2)), FamilyClass::CalH));
  CHECK(in_class(generate(FamilyId::g(3)), FamilyClass::CalE));
  CHECK(exceptional_member(generate(FamilyId::path(6))) == FamilyId::path(6));
  CHECK_FALSE(exceptional_member(generate(FamilyId::path(7))));
  CHECK(classify(generate(FamilyId::cycle(7))) == FamilyId::l(10));
  CHECK(classify(generate(FamilyId::f(4))) == FamilyId::f(4));
}

TEST_CASE("C10 variants") {
  const Graph a = generate(FamilyId::c10_prime());
  const Graph b = generate(FamilyId::c10_double_prime());
  CHECK(a.size() == 11);
  CHECK(b.size() == 12);
  CHECK(a.adjacent(0, 5));
  CHECK(b.adjacent(1, 6));
}
