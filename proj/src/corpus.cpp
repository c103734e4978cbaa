#include "framecat/corpus.hpp"

#include <numeric>

namespace framecat::corpus {

using fincat::FinCategory;

FinCategory chain(int n) {
  std::vector<std::string> objs;
  for (int i = 0; i < n; ++i) objs.push_back(std::to_string(i));
  return FinCategory::poset(objs, [](int a, int b) { return a <= b; });
}

FinCategory subset_lattice(const std::vector<std::string>& atoms) {
  int n = static_cast<int>(atoms.size());
  std::vector<std::string> objs;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::string s = "{";
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s += (s.size() > 1 ? "," : "") + atoms[i];
    s += "}";
    objs.push_back(s);
  }
  return FinCategory::poset(objs,
                            [](int a, int b) { return (a & b) == a; });
}

FinCategory nonempty_subsets(int n) {
  std::vector<std::string> objs;
  std::vector<int> masks;
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::string s;
    for (int i = 0; i <= n; ++i)
      if (mask & (1 << i)) s += std::to_string(i);
    objs.push_back(s);
    masks.push_back(mask);
  }
  return FinCategory::poset(
      objs, [masks](int a, int b) { return (masks[a] & masks[b]) == masks[a]; });
}

FinCategory span() {
  // b <- a -> c: a is below both
  return FinCategory::poset({"a", "b", "c"},
                            [](int x, int y) { return x == y || x == 0; });
}

FinCategory nonlattice_poset() {
  // a, b < u, v (u and v incomparable): the pair (a, b) has two minimal
  // upper bounds, so no join.
  auto leq = [](int x, int y) {
    if (x == y) return true;
    return (x <= 1) && (y >= 2);
  };
  return FinCategory::poset({"a", "b", "u", "v"}, leq);
}

FinCategory free_iso() {
  FinCategory C;
  int o0 = C.add_object("0"), o1 = C.add_object("1");
  int i0 = C.add_morphism("id0", o0, o0), i1 = C.add_morphism("id1", o1, o1);
  int u = C.add_morphism("u", o0, o1), v = C.add_morphism("v", o1, o0);
  C.set_identity(o0, i0);
  C.set_identity(o1, i1);
  C.set_composite(i0, i0, i0);
  C.set_composite(i1, i1, i1);
  C.set_composite(u, i0, u);
  C.set_composite(i1, u, u);
  C.set_composite(v, i1, v);
  C.set_composite(i0, v, v);
  C.set_composite(v, u, i0);
  C.set_composite(u, v, i1);
  auto viol = C.finalize();
  if (!viol.empty()) throw fincat::Error("FreeIso", viol.front().kind);
  return C;
}

cofcat::CofCategory make_cofcat(const FinCategory& C, Marking marking) {
  std::vector<char> weq(C.num_morphisms(), marking == Marking::All ? 1 : 0);
  std::vector<char> cof(C.num_morphisms(), 1);
  if (marking == Marking::Identities)
    for (int o = 0; o < C.num_objects(); ++o) weq[C.identity[o]] = 1;
  return cofcat::make_cofcat(C, std::move(weq), std::move(cof));
}

cofcat::CofCategory chain3_weq12() {
  FinCategory C = chain(3);
  std::vector<char> gens(C.num_morphisms(), 0);
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (C.morphisms[m].name == "1<2") gens[m] = 1;
  auto weq = fincat::two_out_of_six_closure(C, gens);
  std::vector<char> cof(C.num_morphisms(), 1);
  return cofcat::make_cofcat(C, std::move(weq), std::move(cof));
}

}  // namespace framecat::corpus
