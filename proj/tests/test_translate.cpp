#include <doctest.h>

#include "bang/parse.hpp"
#include "bang/props.hpp"
#include "bang/reduce.hpp"
#include "bang/translate.hpp"

using namespace bang;

namespace {
TermPtr T(const char* s) { return parse(s); }
}  // namespace

TEST_CASE("CbN translation") {
  CHECK(alphaEq(cbnTranslate(T("\\x.x x")), T("\\x.x !x")));
  CHECK(alphaEq(cbnTranslate(T("x")), T("x")));
  CHECK(alphaEq(cbnTranslate(T("((\\z.z) x) y")), T("((\\z.z) !x) !y")));
  CHECK_THROWS_AS(cbnTranslate(T("!x")), std::invalid_argument);
}

TEST_CASE("CbV translation dispatches on values") {
  // delta^v = !Delta
  CHECK(alphaEq(cbvTranslate(T("\\x.x x")), T("!(\\x.x !x)")));
  CHECK(alphaEq(cbvTranslate(T("((\\z.z) x) y")), T("(\\x.x) ((\\z.!z) !x) !y")));
  CHECK(alphaEq(cbvTranslate(T("x")), T("!x")));
}

TEST_CASE("omega translates to Delta !Delta under both embeddings") {
  TermPtr omega = T("(\\x.x x) (\\x.x x)");
  CHECK(alphaEq(cbnTranslate(omega), T("(\\x.x !x) !(\\x.x !x)")));
  CHECK(alphaEq(cbvTranslate(omega), T("(\\x.x !x) !(\\x.x !x)")));
}

TEST_CASE("context translation preserves the hole and its level") {
  CHECK(print(translateContext(T("[]"), Calc::CbN)) == "[]");
  CHECK(alphaEq(translateContext(T("t []"), Calc::CbN), T("t ![]")));
  TermPtr cv = translateContext(T("\\x.[]"), Calc::CbV);
  CHECK(alphaEq(cv, T("!(\\x.[])")));
  CHECK(levelOfPath(holePath(cv), Profile::bang(), cv) == 1);
  CHECK_THROWS_AS(translateContext(T("x"), Calc::CbN), std::invalid_argument);
}

TEST_CASE("image membership") {
  CHECK(inImage(T("x !y")).cbn);
  CHECK(inImage(T("x !y")).tag() == Image::Tag::CbnImage);
  // (der !x) !y is in the CbV image but is no translation of a lambda-term;
  // it also happens to lie in the CbN image grammar
  Image i = inImage(T("(\\x.x) !x !y"));
  CHECK(i.cbv);
  CHECK(!alphaEq(cbvTranslate(forgetful(T("(\\x.x) !x !y"))), T("(\\x.x) !x !y")));
  // der itself is outside the CbV grammars
  Image d = inImage(T("\\x.x"));
  CHECK(!d.cbv);
  CHECK(!d.cbvValue);
  CHECK(d.cbn);
  // Delta !Delta is in both images
  Image both = inImage(T("(\\x.x !x) !(\\x.x !x)"));
  CHECK(both.cbn);
  CHECK(both.cbv);
  CHECK(both.tag() == Image::Tag::CbnImage);
  // plain x is a CbV value image but no CbV term image
  Image v = inImage(T("x"));
  CHECK(v.cbvValue);
  CHECK(!v.cbv);
}

TEST_CASE("cbnInverse") {
  CHECK(alphaEq(cbnInverse(T("\\x.x !x")), T("\\x.x x")));
  CHECK(alphaEq(cbnInverse(T("x")), T("x")));
  CHECK(alphaEq(cbnInverse(T("((\\z.z) !x) !y")), T("((\\z.z) x) y")));
  CHECK_THROWS_AS(cbnInverse(T("x y")), std::invalid_argument);
  CHECK_THROWS_AS(cbnInverse(T("!x")), std::invalid_argument);
}

TEST_CASE("forgetful map") {
  CHECK(alphaEq(forgetful(T("!x")), T("x")));
  CHECK(alphaEq(forgetful(T("(\\x.x !x) !(\\x.x !x)")), T("(\\x.x x) (\\x.x x)")));
  CHECK(alphaEq(forgetful(T("(\\x.x) !x !y")), T("x y")));
  // bare der is outside the domain
  CHECK_THROWS_AS(forgetful(T("\\x.x")), std::invalid_argument);
  CHECK_THROWS_AS(forgetful(T("x y")), std::invalid_argument);
}

TEST_CASE("translations are left-invertible on a corpus") {
  GenSpec spec = GenSpec::exhaustive(6, Profile::cbn({"oplus"}), true);
  for (const auto& t : genTerms(spec)) {
    CAPTURE(print(t));
    CHECK(alphaEq(cbnInverse(cbnTranslate(t)), t));
    CHECK(alphaEq(forgetful(cbvTranslate(t)), t));
    CHECK(inImage(cbnTranslate(t)).cbn);
    CHECK(inImage(cbvTranslate(t)).cbv);
    // CbV translations are d-normal
    CHECK(successors(cbvTranslate(t), Profile::bang({"oplus"}), StepFilter::dOnly()).empty());
    // values translate to boxes, non-values do not
    bool isValue = t->kind == Kind::Var || t->kind == Kind::Abs;
    CHECK((cbvTranslate(t)->kind == Kind::Bang) == isValue);
  }
}
