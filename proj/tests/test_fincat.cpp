#include "doctest.h"
#include "framecat/corpus.hpp"
#include "framecat/fincat.hpp"

using namespace framecat;
using namespace framecat::fincat;

TEST_SUITE_BEGIN("fincat");

namespace {

RawCategory raw_chain3() {
  RawCategory raw;
  raw.objects = {"0", "1", "2"};
  raw.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"},
                   {"f01", "0", "1"}, {"f12", "1", "2"}, {"f02", "0", "2"}};
  raw.identities = {"id0", "id1", "id2"};
  for (const auto& m : {"id0", "id1", "id2"})
    raw.composition.push_back({m, m, m});
  raw.composition.push_back({"f01", "id0", "f01"});
  raw.composition.push_back({"id1", "f01", "f01"});
  raw.composition.push_back({"f12", "id1", "f12"});
  raw.composition.push_back({"id2", "f12", "f12"});
  raw.composition.push_back({"f02", "id0", "f02"});
  raw.composition.push_back({"id2", "f02", "f02"});
  raw.composition.push_back({"f12", "f01", "f02"});
  return raw;
}

}  // namespace

TEST_CASE("validate_category accepts the poset chain 0->1->2") {
  auto res = validate_category(raw_chain3());
  REQUIRE(res.ok());
  CHECK(res.category->num_morphisms() == 6);
}

TEST_CASE("validate_category rejects a redirected composite") {
  auto raw = raw_chain3();
  // redirect f12 . f01 to id0: ill-typed
  for (auto& t : raw.composition)
    if (t[0] == "f12" && t[1] == "f01") t[2] = "id0";
  auto res = validate_category(raw);
  REQUIRE(!res.ok());
  bool found = false;
  for (const auto& v : res.violations)
    if (v.kind == "IllTypedComposite") found = true;
  CHECK(found);
}

TEST_CASE("validate_category flags a missing identity") {
  auto raw = raw_chain3();
  raw.identities.pop_back();
  auto res = validate_category(raw);
  REQUIRE(!res.ok());
  CHECK(res.violations.front().kind == "MissingIdentity");
}

TEST_CASE("subset lattice of {a,b} has 4 objects and 9 morphisms") {
  // oracle: count order pairs x <= y in the inclusion order
  int pairs = 0;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if ((x & y) == x) ++pairs;
  CHECK(pairs == 9);
  auto C = corpus::subset_lattice({"a", "b"});
  CHECK(C.num_objects() == 4);
  CHECK(C.num_morphisms() == 9);
}

TEST_CASE("two_out_of_six_closure on a poset with no generators") {
  auto C = corpus::chain(3);
  std::vector<char> gens(C.num_morphisms(), 0);
  auto s = two_out_of_six_closure(C, gens);
  for (int m = 0; m < C.num_morphisms(); ++m)
    CHECK(s[m] == (C.is_identity(m) ? 1 : 0));
}

TEST_CASE("two_out_of_six_closure of the generator of E(1) is everything") {
  auto C = corpus::free_iso();
  std::vector<char> gens(C.num_morphisms(), 0);
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (C.morphisms[m].name == "u") gens[m] = 1;
  auto s = two_out_of_six_closure(C, gens);
  for (int m = 0; m < C.num_morphisms(); ++m) CHECK(s[m] == 1);
}

TEST_CASE("two_out_of_six_closure is idempotent and monotone") {
  auto C = corpus::subset_lattice({"a", "b"});
  std::vector<char> g1(C.num_morphisms(), 0), g2(C.num_morphisms(), 0);
  g1[3] = 1;
  g2[3] = g2[4] = 1;
  auto c1 = two_out_of_six_closure(C, g1);
  auto c2 = two_out_of_six_closure(C, g2);
  CHECK(two_out_of_six_closure(C, c1) == c1);
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (c1[m]) CHECK(c2[m] == 1);
}

TEST_CASE("closure of a valid homotopical structure is itself") {
  auto C = corpus::subset_lattice({"a"});
  std::vector<char> weq(C.num_morphisms(), 1);
  HomotopicalCategory H{C, weq};
  CHECK(H.violated_laws().empty());
  CHECK(two_out_of_six_closure(C, weq) == weq);
}

TEST_CASE("latching category of [1] at 1 has one object") {
  DirectCategory I{corpus::chain(2), {0, 1}};
  CHECK(I.violated_laws().empty());
  auto L = latching_category(I, 1);
  CHECK(L.cat.num_objects() == 1);
  CHECK(is_functor(L.cat, I.cat, L.forgetful));
}

TEST_CASE("latching category at the top of nonempty subsets of [2]") {
  auto P = corpus::nonempty_subsets(2);
  std::vector<int> deg(P.num_objects());
  for (int o = 0; o < P.num_objects(); ++o)
    deg[o] = static_cast<int>(P.objects[o].size()) - 1;
  DirectCategory I{P, deg};
  int top = -1;
  for (int o = 0; o < P.num_objects(); ++o)
    if (P.objects[o] == "012") top = o;
  auto L = latching_category(I, top);
  CHECK(L.cat.num_objects() == 6);  // 2^3 - 2 proper nonempty subsets
}

TEST_CASE("latching objects have strictly smaller degree") {
  auto P = corpus::nonempty_subsets(2);
  std::vector<int> deg(P.num_objects());
  for (int o = 0; o < P.num_objects(); ++o)
    deg[o] = static_cast<int>(P.objects[o].size()) - 1;
  DirectCategory I{P, deg};
  for (int i = 0; i < P.num_objects(); ++i) {
    auto L = latching_category(I, i);
    for (int o = 0; o < L.cat.num_objects(); ++o)
      CHECK(deg[L.forgetful.obj[o]] < deg[i]);
  }
}

TEST_CASE("is_sieve on vertex inclusions into [1]") {
  auto I1 = corpus::chain(2);
  FinCategory pt = corpus::chain(1);
  Functor at0, at1;
  at0.obj = {0};
  at0.mor = {I1.identity[0]};
  at1.obj = {1};
  at1.mor = {I1.identity[1]};
  CHECK(is_sieve(pt, I1, at0));
  CHECK(!is_sieve(pt, I1, at1));  // 0 -> 1 enters from outside
}

TEST_CASE("colimit: empty diagram finds the bottom of a lattice") {
  auto C = corpus::subset_lattice({"a", "b"});
  auto init = initial_object(C);
  REQUIRE(init.has_value());
  CHECK(C.objects[*init] == "{}");
}

TEST_CASE("colimit of a span in the subset lattice is the join") {
  auto C = corpus::subset_lattice({"a", "b"});
  // span {a} <- {} -> {b}
  auto S = corpus::span();
  Functor X;
  int oa = 1, ob = 2;  // masks 01, 10
  X.obj = {0, oa, ob};
  X.mor.resize(S.num_morphisms());
  X.mor[S.identity[0]] = C.identity[0];
  X.mor[S.identity[1]] = C.identity[oa];
  X.mor[S.identity[2]] = C.identity[ob];
  for (int m = 0; m < S.num_morphisms(); ++m) {
    if (S.is_identity(m)) continue;
    X.mor[m] = C.hom(X.obj[S.morphisms[m].src], X.obj[S.morphisms[m].tgt])[0];
  }
  auto co = colimit(S, X, C);
  REQUIRE(co.has_value());
  CHECK(C.objects[co->apex] == "{a,b}");
}

TEST_CASE("colimit NotFound for an incomparable pair in a non-lattice poset") {
  auto P = corpus::nonlattice_poset();
  FinCategory two;
  two.add_object("x");
  two.add_object("y");
  int ia = two.add_morphism("idx", 0, 0), ib = two.add_morphism("idy", 1, 1);
  two.set_identity(0, ia);
  two.set_identity(1, ib);
  two.set_composite(ia, ia, ia);
  two.set_composite(ib, ib, ib);
  REQUIRE(two.finalize().empty());
  Functor X;
  X.obj = {0, 1};  // a and b: two minimal upper bounds u, v -> no join
  X.mor = {P.identity[0], P.identity[1]};
  CHECK(!colimit(two, X, P).has_value());
  // the pair (u, u) trivially has colimit u
  Functor Y;
  Y.obj = {2, 2};
  Y.mor = {P.identity[2], P.identity[2]};
  auto co = colimit(two, Y, P);
  REQUIRE(co.has_value());
  CHECK(co->apex == 2);
}

TEST_CASE("colimit is unique up to unique comparison isomorphism") {
  auto C = corpus::subset_lattice({"a", "b"});
  auto S = corpus::span();
  Functor X;
  X.obj = {0, 1, 2};
  X.mor.resize(S.num_morphisms());
  for (int m = 0; m < S.num_morphisms(); ++m)
    X.mor[m] = C.hom(X.obj[S.morphisms[m].src], X.obj[S.morphisms[m].tgt])[0];
  auto co = colimit(S, X, C);
  REQUIRE(co.has_value());
  for (const auto& other : enumerate_cocones(S, X, C)) {
    auto med = mediating_morphism(S, X, C, *co, other);
    CHECK(med.has_value());
  }
}

TEST_CASE("synthesize_degree layers a poset and rejects endomorphisms") {
  auto C = corpus::nonempty_subsets(1);  // 0, 1, 01
  auto deg = synthesize_degree(C);
  REQUIRE(deg.has_value());
  DirectCategory I{C, *deg};
  CHECK(I.violated_laws().empty());
  CHECK(!synthesize_degree(corpus::free_iso()).has_value());
}

TEST_SUITE_END();
