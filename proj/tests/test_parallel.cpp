#include <doctest.h>

#include "bang/parallel.hpp"
#include "bang/parse.hpp"
#include "bang/reduce.hpp"

using namespace bang;

namespace {
TermPtr T(const char* s) { return parse(s); }
}  // namespace

TEST_CASE("parallel successors of a variable") {
  auto ps = parallelSteps(T("x"));
  REQUIRE(ps.size() == 1);
  CHECK(alphaEq(ps[0].to, T("x")));
  CHECK(ps[0].levelIndex == kInfLevel);
  CHECK(ps[0].countIndex == 0);
}

TEST_CASE("parallel successors of a single redex") {
  auto ps = parallelSuccessors(T("(\\x.x) !z"));
  REQUIRE(ps.size() == 2);  // identity and the fired step
  auto fired = ps.find(canonicalKey(T("z")));
  REQUIRE(fired != ps.end());
  CHECK(fired->second.indices.count({0, 1}));
  auto idty = ps.find(canonicalKey(T("(\\x.x) !z")));
  REQUIRE(idty != ps.end());
  CHECK(idty->second.maxLevelIndex() == kInfLevel);
  CHECK(idty->second.minCountIndex() == 0);
}

TEST_CASE("firing all three redexes of (\\z.R)!R in one parallel step") {
  // R = (\x.x)!z; the full development is (\x.x)!z -> ... -> z after firing
  // root, body and box redexes together
  TermPtr t = T("(\\z.(\\x.x) !z) !((\\x.x) !z)");
  auto ps = parallelSuccessors(t);
  CHECK(ps.count(canonicalKey(T("z"))));           // everything fired
  CHECK(ps.count(canonicalKey(T("(\\x.x) !z")))); // root fired with originals
  CHECK(ps.count(canonicalKey(t)));                // identity
}

TEST_CASE("identity derivations carry infinite level and zero count") {
  for (const char* s : {"x", "!x", "!!x", "\\x.x !x", "(\\x.x) !z"}) {
    auto ps = parallelSuccessors(T(s));
    auto it = ps.find(canonicalKey(T(s)));
    REQUIRE(it != ps.end());
    bool hasIdentity = false;
    for (const auto& [l, c] : it->second.indices) {
      if (l == kInfLevel) {
        CHECK(c == 0);
        hasIdentity = true;
      }
    }
    CHECK(hasIdentity);
  }
}

TEST_CASE("level index accounts for boxes") {
  // firing R inside a box happens at level >= 1
  auto ps = parallelSuccessors(T("x !((\\x.x) !z)"));
  auto it = ps.find(canonicalKey(T("x !z")));
  REQUIRE(it != ps.end());
  CHECK(it->second.maxLevelIndex() == 1);
}

TEST_CASE("internal parallel successors") {
  // normal form: only the identity
  auto i1 = internalParallelSuccessors(T("\\x.x"), Profile::bang());
  REQUIRE(i1.size() == 1);

  // x !R: ll = 1, firing R is at exactly the least level, so only identity
  auto i2 = internalParallelSuccessors(T("x !((\\x.x) !z)"), Profile::bang());
  REQUIRE(i2.size() == 1);
  CHECK(alphaEq(i2[0], T("x !((\\x.x) !z)")));

  // R !R: the inner redex at level 1 > ll = 0 may fire internally, the outer
  // may not
  auto i3 = internalParallelSuccessors(T("((\\x.x) !z) !((\\x.x) !z)"), Profile::bang());
  std::set<std::string> keys;
  for (const auto& t : i3) keys.insert(canonicalKey(t));
  CHECK(keys.count(canonicalKey(T("((\\x.x) !z) !z"))));
  CHECK(!keys.count(canonicalKey(T("z !((\\x.x) !z)"))));
}

TEST_CASE("count index of the fired root rule") {
  // (\x.x !x)!R duplicates R: firing root and both copies costs
  // n1 + |body'|_x * n2 + 1 = 0 + 2*1 + 1 = 3
  TermPtr t = T("(\\x.x !x) !((\\y.y) !z)");
  auto ps = parallelSuccessors(t);
  auto it = ps.find(canonicalKey(T("z !z")));
  REQUIRE(it != ps.end());
  CHECK(it->second.minCountIndex() == 3);
}

TEST_CASE("operator arguments develop pointwise") {
  auto ps = parallelSuccessors(T("#oplus((\\x.x) !z, y)"));
  CHECK(ps.count(canonicalKey(T("#oplus(z, y)"))));
  // oplus redexes themselves never fire in the parallel relation
  CHECK(!ps.count(canonicalKey(T("y"))));
  auto it = ps.find(canonicalKey(T("#oplus(z, y)")));
  REQUIRE(it != ps.end());
  CHECK(it->second.maxLevelIndex() == 1);  // operators add one level
}

TEST_CASE("redex budget is enforced") {
  // 17 independent redexes exceed the bound
  std::string big = "(\\x.x) !z";
  TermPtr r = T(big.c_str());
  TermPtr t = r;
  for (int i = 0; i < 16; ++i) t = mkApp(t, r);
  CHECK_THROWS_AS(parallelSuccessors(t), std::invalid_argument);
}
