#include <set>

#include "doctest.h"
#include "framecat/corpus.hpp"
#include "framecat/simplicial.hpp"

using namespace framecat;
using namespace framecat::simplicial;

TEST_SUITE_BEGIN("simplicial");

namespace {

// counting oracle: nondegenerate cells of a generalized horn are the
// nonempty subsets of [m] missing some vertex outside A
int horn_cell_count_oracle(int m, const std::set<int>& A) {
  int count = 0;
  for (int mask = 1; mask < (1 << (m + 1)); ++mask) {
    bool in = false;
    for (int s = 0; s <= m && !in; ++s)
      if (!A.count(s) && !(mask & (1 << s))) in = true;
    if (in) ++count;
  }
  return count;
}

bool complement_is_interval(int m, const std::set<int>& A) {
  std::vector<int> comp;
  for (int x = 0; x <= m; ++x)
    if (!A.count(x)) comp.push_back(x);
  if (comp.empty()) return true;
  return comp.back() - comp.front() + 1 == static_cast<int>(comp.size());
}

}  // namespace

TEST_CASE("operator algebra: composition, epi-mono factorization") {
  Op f{3, {0, 0, 2, 2, 3}};
  auto [mono, epi] = epi_mono(f);
  CHECK(mono.is_injective());
  CHECK(epi.is_surjective());
  CHECK(compose_op(mono, epi) == f);
  // associativity on a sample
  Op g{5, {0, 2, 3, 5}};
  Op h{6, {0, 1, 2, 3, 4, 6}};
  CHECK(compose_op(compose_op(h, g), f) == compose_op(h, compose_op(g, f)));
}

TEST_CASE("standard simplex and boundary cell counts") {
  CHECK(standard_simplex(2).num_cells() == 7);
  CHECK(boundary(2).num_cells() == 6);
  CHECK(standard_simplex(3).check_identities().empty());
  CHECK(boundary(3).check_identities().empty());
}

TEST_CASE("ez_factorize: the four 2-simplices of N[1]") {
  // oracle: monotone maps [2] -> [1]: C(4,3) = 4 of them
  CHECK(all_ops(2, 1).size() == 4);
  auto N1 = nerve(corpus::chain(2), 3);
  auto simps = N1.simplices(2);
  CHECK(simps.size() == 4);
  std::set<std::pair<int, std::vector<int>>> seen;
  for (const auto& s : simps) {
    CHECK(s.epi.is_surjective());
    seen.insert({s.cell, s.epi.v});
  }
  CHECK(seen.size() == 4);  // decompositions unique
  // nondegenerate simplex factors through itself
  for (int c = 0; c < N1.num_cells(); ++c) {
    Simplex x = N1.cell_simplex(c);
    CHECK(ez_factorize(N1, x) == x);
  }
}

TEST_CASE("join: Delta^1 * Delta^0 is Delta^2") {
  auto J = join(standard_simplex(1), standard_simplex(0));
  CHECK(J.complex.num_cells() == standard_simplex(2).num_cells());
  CHECK(J.complex.check_identities().empty());
  // cell counts per dimension agree
  for (int d = 0; d <= 2; ++d)
    CHECK(J.complex.cells_of_dim(d).size() ==
          standard_simplex(2).cells_of_dim(d).size());
}

TEST_CASE("join: the empty simplicial set is a unit") {
  auto K = boundary(2);
  auto J1 = join(empty_sset(), K);
  auto J2 = join(K, empty_sset());
  CHECK(J1.complex.num_cells() == K.num_cells());
  CHECK(J2.complex.num_cells() == K.num_cells());
}

TEST_CASE("join: nd(bdDelta^1 * bdDelta^1) has 2+2+4 = 8 cells") {
  auto J = join(boundary(1), boundary(1));
  CHECK(J.complex.num_cells() == 8);
  CHECK(J.complex.check_identities().empty());
}

TEST_CASE("join associativity on cell counts (total dim <= 6)") {
  // (K*L)*M and K*(L*M) have matching cell counts per dimension
  std::vector<FinSimplicialSet> shapes = {standard_simplex(1), boundary(2),
                                          standard_simplex(0)};
  for (const auto& K : shapes)
    for (const auto& L : shapes)
      for (const auto& M : shapes) {
        auto A = join(join(K, L).complex, M).complex;
        auto B = join(K, join(L, M).complex).complex;
        REQUIRE(A.num_cells() == B.num_cells());
        for (int d = 0; d <= A.dim(); ++d)
          CHECK(A.cells_of_dim(d).size() == B.cells_of_dim(d).size());
        CHECK(A.check_identities().empty());
      }
}

TEST_CASE("horn cell counts against the subset-counting oracle") {
  CHECK(horn_cell_count_oracle(2, {1}) == 5);
  auto H21 = horn(2, {1});
  CHECK(H21.num_cells() == 5);
  // Lambda^{m,emptyset} = boundary
  for (int m = 1; m <= 3; ++m)
    CHECK(horn(m, {}).num_cells() == boundary(m).num_cells());
  // the generalized horn on two faces of Delta^3: 7 + 7 - 3 = 11 cells
  CHECK(horn_cell_count_oracle(3, {1, 2}) == 11);
  CHECK(horn(3, {1, 2}).num_cells() == 11);
  CHECK(horn(3, {1, 2}).check_identities().empty());
  CHECK_THROWS_WITH_AS(horn(2, {0, 1, 2}), doctest::Contains("EmptyHorn"),
                       Error);
}

TEST_CASE("decompose_generalized_horn: (3,{1},{1,2}) is a single step") {
  auto steps = decompose_generalized_horn(3, {1}, {1, 2});
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].dim == 2);
  CHECK(steps[0].vertices == std::vector<int>{0, 1, 3});
  // replay: edges 01, 13 present in Lambda^{3,{1,2}}, 03 added
  auto end = replay_horn_steps(3, {1, 2}, steps);
  CHECK(vertex_sets(end) == vertex_sets(horn(3, {1})));
}

TEST_CASE("decompose_generalized_horn: A = B gives the empty list") {
  CHECK(decompose_generalized_horn(3, {1}, {1}).empty());
}

TEST_CASE("decompose_generalized_horn: (4,{1},{1,2,3}) replays exactly") {
  auto steps = decompose_generalized_horn(4, {1}, {1, 2, 3});
  for (const auto& st : steps) CHECK(st.dim <= 3);
  auto end = replay_horn_steps(4, {1, 2, 3}, steps);
  CHECK(vertex_sets(end) == vertex_sets(horn(4, {1})));
}

TEST_CASE("decompose_generalized_horn rejects interval complements") {
  CHECK_THROWS_WITH_AS(decompose_generalized_horn(3, {0}, {0, 1}),
                       doctest::Contains("NotInner"), Error);
}

TEST_CASE("replay equality for all admissible pairs, m <= 4") {
  for (int m = 2; m <= 4; ++m) {
    for (int amask = 1; amask < (1 << (m + 1)); ++amask) {
      std::set<int> A;
      for (int i = 0; i <= m; ++i)
        if (amask & (1 << i)) A.insert(i);
      if (static_cast<int>(A.size()) == m + 1) continue;
      if (complement_is_interval(m, A)) continue;
      for (int bmask = amask; bmask < (1 << (m + 1)); ++bmask) {
        if ((bmask & amask) != amask) continue;
        std::set<int> B;
        for (int i = 0; i <= m; ++i)
          if (bmask & (1 << i)) B.insert(i);
        if (static_cast<int>(B.size()) == m + 1) continue;
        if (complement_is_interval(m, B)) continue;
        auto steps = decompose_generalized_horn(m, A, B);
        auto end = replay_horn_steps(m, B, steps);
        CHECK(vertex_sets(end) == vertex_sets(horn(m, A)));
        for (const auto& st : steps) {
          CHECK(st.dim <= m - 1);
          CHECK(st.inner_index > 0);
          CHECK(st.inner_index < st.dim);
        }
      }
    }
  }
}

TEST_CASE("nerve of [0] and [1]") {
  CHECK(nerve(corpus::chain(1), 2).num_cells() == 1);
  auto N1 = nerve(corpus::chain(2), 3);
  CHECK(N1.num_cells() == 3);  // two vertices, one edge
  CHECK(N1.check_identities().empty());
}

TEST_CASE("nerve of the free isomorphism: two cells per dimension") {
  auto N = ne1(4);
  for (int d = 0; d <= 4; ++d)
    CHECK(N.cells_of_dim(d).size() == 2);  // alternating words from 0 or 1
  CHECK(N.check_identities().empty());
}

TEST_CASE("nerve is fully faithful at the level of maps up to cap 2") {
  auto C = corpus::chain(2);
  auto D = corpus::subset_lattice({"a"});
  auto NC = nerve(C, 2);
  auto ND = nerve(D, 2);
  auto maps = enumerate_maps(NC, ND, empty_partial(NC));
  auto functors = fincat::enumerate_functors(C, D);
  CHECK(maps.size() == functors.size());
}

TEST_CASE("slice under the empty diagram is the target") {
  auto M = nerve(corpus::chain(2), 3);
  auto S = slice_under(empty_sset(), M, SimplicialMap{}, 1);
  // same number of cells in each dimension up to the cap
  for (int d = 0; d <= 1; ++d)
    CHECK(S.cells_of_dim(d).size() == M.cells_of_dim(d).size());
}

TEST_CASE("slice of N[1] under vertex 0 has two vertices") {
  auto M = nerve(corpus::chain(2), 3);
  auto pt = standard_simplex(0);
  SimplicialMap X;
  X.cell_image.push_back(M.cell_simplex(0));  // vertex 0
  auto S = slice_under(pt, M, X, 1);
  CHECK(S.cells_of_dim(0).size() == 2);  // morphisms out of 0
}

TEST_CASE("slice of the point under itself has one simplex per dimension") {
  auto pt = standard_simplex(0);
  SimplicialMap X;
  X.cell_image.push_back(pt.cell_simplex(0));
  auto S = slice_under(pt, pt, X, 2);
  CHECK(S.num_cells() == 1);  // a single vertex, everything else degenerate
}

TEST_CASE("pushout of two points along the empty set") {
  auto A = empty_sset();
  auto pt = standard_simplex(0);
  auto P = pushout_sset(A, pt, pt, SimplicialMap{}, SimplicialMap{});
  CHECK(P.complex.num_cells() == 2);
}

TEST_CASE("pushout: Delta^2 glued to Lambda^{3,{1,2}} along Lambda^{2,1}") {
  // same attachment as the decomposition example
  auto steps = decompose_generalized_horn(3, {1}, {1, 2});
  auto end = replay_horn_steps(3, {1, 2}, steps);
  CHECK(vertex_sets(end) == vertex_sets(horn(3, {1})));
  CHECK(end.num_cells() == horn(3, {1}).num_cells());
}

TEST_CASE("mapping cylinder of id: Delta^0 -> Delta^0 is Delta^1") {
  // K x Delta^1 u_K L with K = L = point: the cylinder itself
  auto cyl = cylinder_sset(standard_simplex(0));
  CHECK(cyl.prod.complex.num_cells() == 3);  // two vertices and an edge
  CHECK(cyl.prod.complex.check_identities().empty());
}

TEST_CASE("product of Delta^1 with Delta^1 is the square") {
  auto P = product(standard_simplex(1), standard_simplex(1));
  // 4 vertices, 5 edges, 2 triangles
  CHECK(P.complex.cells_of_dim(0).size() == 4);
  CHECK(P.complex.cells_of_dim(1).size() == 5);
  CHECK(P.complex.cells_of_dim(2).size() == 2);
  CHECK(P.complex.check_identities().empty());
  CHECK(is_simplicial_map(P.complex, P.K, P.proj_K));
  CHECK(is_simplicial_map(P.complex, P.L, P.proj_L));
}

TEST_CASE("right anodyne witness for the cylinder end inclusion") {
  for (int m = 0; m <= 2; ++m) {
    auto W = right_anodyne_cylinder_witness(standard_simplex(m));
    CHECK(W.verified);
    for (const auto& [s, i] : W.steps) {
      CHECK(i > 0);
      CHECK(i <= s.dim());
    }
  }
}

TEST_CASE("right anodyne witness for a final-vertex inclusion") {
  Op mu{2, {2}};  // vertex 2 into Delta^2
  auto W = right_anodyne_simplex_inclusion(mu);
  CHECK(W.verified);
  Op nu{2, {0}};  // initial vertex: no witness emitted
  CHECK(!right_anodyne_simplex_inclusion(nu).verified);
}

TEST_SUITE_END();
