#include "framecat/hocat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace framecat::hocat {

namespace {

struct CoproductData {
  int obj, i0, i1;
};

// binary coproduct X u X with its injections
std::optional<CoproductData> coproduct_with_self(const CofCategory& C, int X) {
  FinCategory two;
  two.add_object("0");
  two.add_object("1");
  int a = two.add_morphism("id0", 0, 0), b = two.add_morphism("id1", 1, 1);
  two.set_identity(0, a);
  two.set_identity(1, b);
  two.set_composite(a, a, a);
  two.set_composite(b, b, b);
  auto v = two.finalize();
  (void)v;
  Functor D;
  D.obj = {X, X};
  D.mor = {C.cat.identity[X], C.cat.identity[X]};
  auto co = fincat::colimit(two, D, C.cat);
  if (!co) return std::nullopt;
  return CoproductData{co->apex, co->legs[0], co->legs[1]};
}

// unique h with h.i0 = f, h.i1 = g
std::optional<int> copair(const CofCategory& C, const CoproductData& cp,
                          int f, int g) {
  std::optional<int> found;
  for (int h : C.cat.hom(cp.obj, C.cat.morphisms[f].tgt))
    if (C.cat.compose(h, cp.i0) == f && C.cat.compose(h, cp.i1) == g) {
      found = h;
      break;
    }
  return found;
}

}  // namespace

std::vector<Cylinder> enumerate_cylinders(const CofCategory& C, int X) {
  auto cp = coproduct_with_self(C, X);
  if (!cp) throw Error("NoCoproduct", C.cat.objects[X] + " u itself");
  auto codiag = copair(C, *cp, C.cat.identity[X], C.cat.identity[X]);
  if (!codiag) throw Error("NoCoproduct", "no codiagonal");
  std::vector<Cylinder> out;
  for (int ins : C.cat.out_of(cp->obj)) {
    if (!C.cof[ins]) continue;
    for (int proj : C.cat.hom(C.cat.morphisms[ins].tgt, X)) {
      if (!C.weq[proj]) continue;
      if (C.cat.compose(proj, ins) != *codiag) continue;
      Cylinder cyl;
      cyl.obj = X;
      cyl.coprod = cp->obj;
      cyl.inj0 = cp->i0;
      cyl.inj1 = cp->i1;
      cyl.cyl = C.cat.morphisms[ins].tgt;
      cyl.insertion = ins;
      cyl.projection = proj;
      cyl.d0 = C.cat.compose(ins, cp->i0);
      cyl.d1 = C.cat.compose(ins, cp->i1);
      out.push_back(cyl);
    }
  }
  return out;
}

bool left_homotopic(const CofCategory& C, int f, int g,
                    HomotopyWitness* witness) {
  const auto& cat = C.cat;
  if (cat.morphisms[f].src != cat.morphisms[g].src ||
      cat.morphisms[f].tgt != cat.morphisms[g].tgt)
    throw Error("NotParallel", cat.morphisms[f].name + " / " +
                                   cat.morphisms[g].name);
  int X = cat.morphisms[f].src, Y = cat.morphisms[f].tgt;
  for (const Cylinder& cyl : enumerate_cylinders(C, X)) {
    // [f,g]: X u X -> Y
    auto fg = copair(C, {cyl.coprod, cyl.inj0, cyl.inj1}, f, g);
    if (!fg) continue;
    for (int j : cat.out_of(Y)) {
      if (!(C.weq[j] && C.cof[j])) continue;
      for (int H : cat.hom(cyl.cyl, cat.morphisms[j].tgt))
        if (cat.compose(H, cyl.insertion) == cat.compose(j, *fg)) {
          if (witness) *witness = {cyl, j, H};
          return true;
        }
    }
  }
  return false;
}

// --- fractions ----------------------------------------------------------------

namespace {

struct FractionTable {
  // all fractions X -> Y, for each ordered pair of objects
  std::vector<std::vector<std::vector<Fraction>>> fr;  // [X][Y]
  std::vector<std::vector<std::vector<int>>> cls;      // class index per fraction
  std::vector<std::vector<int>> num_classes;
};

bool relation2(const CofCategory& C, const Fraction& a, const Fraction& b) {
  const auto& cat = C.cat;
  int Ya = cat.morphisms[a.s].tgt, Yb = cat.morphisms[b.s].tgt;
  for (int W = 0; W < cat.num_objects(); ++W)
    for (int u : cat.hom(Ya, W)) {
      if (!C.weq[u]) continue;
      for (int v : cat.hom(Yb, W)) {
        if (!C.weq[v]) continue;
        if (left_homotopic(C, cat.compose(u, a.s), cat.compose(v, b.s)) &&
            left_homotopic(C, cat.compose(u, a.f), cat.compose(v, b.f)))
          return true;
      }
    }
  return false;
}

FractionTable build_fraction_table(const CofCategory& C) {
  const auto& cat = C.cat;
  int n = cat.num_objects();
  FractionTable T;
  T.fr.assign(n, std::vector<std::vector<Fraction>>(n));
  T.cls.assign(n, std::vector<std::vector<int>>(n));
  T.num_classes.assign(n, std::vector<int>(n, 0));
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y) {
      auto& fr = T.fr[X][Y];
      for (int Yt = 0; Yt < n; ++Yt)
        for (int s : cat.hom(Y, Yt)) {
          if (!C.weq[s]) continue;
          for (int f : cat.hom(X, Yt)) fr.push_back({f, s});
        }
      // union-find under the transitive closure of relation (2)
      std::vector<int> uf(fr.size());
      std::iota(uf.begin(), uf.end(), 0);
      std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
      };
      for (std::size_t i = 0; i < fr.size(); ++i)
        for (std::size_t j = i + 1; j < fr.size(); ++j) {
          if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
          if (relation2(C, fr[i], fr[j]))
            uf[find(static_cast<int>(i))] = find(static_cast<int>(j));
        }
      // canonical class numbering
      std::map<int, int> renum;
      auto& cls = T.cls[X][Y];
      cls.resize(fr.size());
      for (std::size_t i = 0; i < fr.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto it = renum.find(r);
        if (it == renum.end())
          it = renum.emplace(r, static_cast<int>(renum.size())).first;
        cls[i] = it->second;
      }
      T.num_classes[X][Y] = static_cast<int>(renum.size());
    }
  return T;
}

// composition by Theorem-style square search:
// psi = [t]^{-1}[g]: Y -> Z, phi = [s]^{-1}[f]: X -> Y,
// find h: Y~ -> Z^ and weq u: Z~ -> Z^ with u.g ~l h.s; result [u.t]^{-1}[h.f]
std::optional<Fraction> compose_fractions(const CofCategory& C,
                                          const Fraction& phi,
                                          const Fraction& psi) {
  const auto& cat = C.cat;
  int Yt = cat.morphisms[phi.s].tgt;  // Y~
  int Zt = cat.morphisms[psi.s].tgt;  // Z~
  for (int Zh = 0; Zh < cat.num_objects(); ++Zh)
    for (int u : cat.hom(Zt, Zh)) {
      if (!C.weq[u]) continue;
      for (int h : cat.hom(Yt, Zh))
        if (left_homotopic(C, cat.compose(h, phi.s), cat.compose(u, psi.f)))
          return Fraction{cat.compose(h, phi.f), cat.compose(u, psi.s)};
    }
  return std::nullopt;
}

}  // namespace

bool fractions_equal(const CofCategory& C, const Fraction& a,
                     const Fraction& b) {
  // direct check plus a one-step transitive closure through all fractions
  if (relation2(C, a, b)) return true;
  auto T = build_fraction_table(C);
  int X = C.cat.morphisms[a.f].src, Y = C.cat.morphisms[a.s].src;
  const auto& fr = T.fr[X][Y];
  int ca = -1, cb = -1;
  for (std::size_t i = 0; i < fr.size(); ++i) {
    if (fr[i].f == a.f && fr[i].s == a.s) ca = T.cls[X][Y][i];
    if (fr[i].f == b.f && fr[i].s == b.s) cb = T.cls[X][Y][i];
  }
  return ca >= 0 && ca == cb;
}

HoCategory homotopy_category(const CofCategory& C) {
  const auto& cat = C.cat;
  int n = cat.num_objects();
  FractionTable T = build_fraction_table(C);
  HoCategory H;
  for (int o = 0; o < n; ++o) H.cat.add_object(cat.objects[o]);
  // morphisms: one per class, canonically the first fraction in each class
  std::vector<std::vector<std::vector<int>>> mor_of(n,
      std::vector<std::vector<int>>(n));
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y) {
      mor_of[X][Y].assign(T.num_classes[X][Y], -1);
      for (std::size_t i = 0; i < T.fr[X][Y].size(); ++i) {
        int c = T.cls[X][Y][i];
        if (mor_of[X][Y][c] < 0) {
          int id = H.cat.add_morphism(
              "[" + cat.morphisms[T.fr[X][Y][i].s].name + "]^-1[" +
                  cat.morphisms[T.fr[X][Y][i].f].name + "]",
              X, Y);
          mor_of[X][Y][c] = id;
          H.rep.push_back(T.fr[X][Y][i]);
        }
      }
    }
  auto class_of = [&](int X, int Y, const Fraction& fr) {
    for (std::size_t i = 0; i < T.fr[X][Y].size(); ++i)
      if (T.fr[X][Y][i].f == fr.f && T.fr[X][Y][i].s == fr.s)
        return T.cls[X][Y][i];
    throw Error("HoCategory", "fraction not in table");
  };
  for (int o = 0; o < n; ++o) {
    Fraction idf{cat.identity[o], cat.identity[o]};
    H.cat.set_identity(o, mor_of[o][o][class_of(o, o, idf)]);
  }
  // composition on class representatives
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y)
      for (int c1 = 0; c1 < T.num_classes[X][Y]; ++c1)
        for (int Z = 0; Z < n; ++Z)
          for (int c2 = 0; c2 < T.num_classes[Y][Z]; ++c2) {
            const Fraction& phi = H.rep[mor_of[X][Y][c1]];
            const Fraction& psi = H.rep[mor_of[Y][Z][c2]];
            auto comp = compose_fractions(C, phi, psi);
            if (!comp)
              throw Error("CompositionSearchFailed",
                          "no composition square for " +
                              cat.morphisms[phi.f].name + " ; " +
                              cat.morphisms[psi.f].name);
            H.cat.set_composite(mor_of[Y][Z][c2], mor_of[X][Y][c1],
                                mor_of[X][Z][class_of(X, Z, *comp)]);
          }
  auto v = H.cat.finalize();
  if (!v.empty())
    throw Error("CompositionSearchFailed",
                "homotopy category laws fail: " + v.front().kind +
                    " (" + v.front().detail + ")");
  // localization functor
  H.loc.resize(cat.num_morphisms());
  for (int m = 0; m < cat.num_morphisms(); ++m) {
    int X = cat.morphisms[m].src, Y = cat.morphisms[m].tgt;
    Fraction fr{m, cat.identity[Y]};
    H.loc[m] = mor_of[X][Y][class_of(X, Y, fr)];
  }
  return H;
}

// --- oracle -------------------------------------------------------------------

OracleResult oracle_localization(const FinCategory& C,
                                 const std::vector<char>& W, int bound) {
  // generators: morphisms of C, then reversals of W
  struct Gen {
    int src, tgt;
    int c_mor;   // >= 0: a morphism of C; -1: a reversal
    int rev_of;  // for reversals
  };
  std::vector<Gen> gens;
  std::vector<int> gen_of_mor(C.num_morphisms());
  for (int m = 0; m < C.num_morphisms(); ++m) {
    gen_of_mor[m] = static_cast<int>(gens.size());
    gens.push_back({C.morphisms[m].src, C.morphisms[m].tgt, m, -1});
  }
  std::vector<int> gen_of_rev(C.num_morphisms(), -1);
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (W[m]) {
      gen_of_rev[m] = static_cast<int>(gens.size());
      gens.push_back({C.morphisms[m].tgt, C.morphisms[m].src, -1, m});
    }

  // coset-style enumeration: states are morphisms of the quotient
  struct State {
    int origin, tgt;
  };
  std::vector<State> states;
  std::vector<int> uf;
  std::vector<std::vector<int>> act;  // act[state][gen], -1 undefined
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto new_state = [&](int origin, int tgt) {
    if (static_cast<int>(states.size()) >= bound)
      throw Error("BoundTooSmall",
                  "more than " + std::to_string(bound) + " elements");
    states.push_back({origin, tgt});
    uf.push_back(static_cast<int>(uf.size()));
    act.emplace_back(gens.size(), -1);
    return static_cast<int>(states.size()) - 1;
  };
  std::vector<std::pair<int, int>> merge_queue;
  std::function<void(int, int)> merge = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    uf[b] = a;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (act[b][g] < 0) continue;
      if (act[a][g] < 0)
        act[a][g] = act[b][g];
      else
        merge_queue.emplace_back(act[a][g], act[b][g]);
    }
  };
  auto apply = [&](int e, int g, bool create) -> int {
    e = find(e);
    if (states[e].tgt != gens[g].src) throw Error("Oracle", "ill-typed apply");
    if (act[e][g] >= 0) return find(act[e][g]);
    if (!create) return -1;
    int s = new_state(states[e].origin, gens[g].tgt);
    act[e][g] = s;
    return s;
  };

  std::vector<int> id_state(C.num_objects());
  for (int o = 0; o < C.num_objects(); ++o) id_state[o] = new_state(o, o);

  // saturation: define products breadth-first and enforce the relations
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t before = states.size();
    int live = static_cast<int>(states.size());
    for (int e = 0; e < live; ++e) {
      if (find(e) != e) continue;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (states[e].tgt != gens[g].src) continue;
        apply(e, static_cast<int>(g), true);
      }
    }
    // relations
    for (int e = 0; e < static_cast<int>(states.size()); ++e) {
      if (find(e) != e) continue;
      int t = states[e].tgt;
      // identities act trivially
      merge(apply(e, gen_of_mor[C.identity[t]], true), e);
      // composition relation: act_g(act_f(e)) = act_{gf}(e)
      for (int f : C.out_of(t))
        for (int g : C.out_of(C.morphisms[f].tgt)) {
          int lhs = apply(apply(e, gen_of_mor[f], true), gen_of_mor[g], true);
          int rhs = apply(e, gen_of_mor[C.compose(g, f)], true);
          merge(lhs, rhs);
        }
      // cancellation
      for (int m = 0; m < C.num_morphisms(); ++m) {
        if (!W[m]) continue;
        if (C.morphisms[m].src == t)
          merge(apply(apply(e, gen_of_mor[m], true), gen_of_rev[m], true), e);
        if (C.morphisms[m].tgt == t)
          merge(apply(apply(e, gen_of_rev[m], true), gen_of_mor[m], true), e);
      }
      while (!merge_queue.empty()) {
        auto [a, b] = merge_queue.back();
        merge_queue.pop_back();
        merge(a, b);
      }
    }
    if (states.size() != before) changed = true;
    // detect pending action definitions
    for (int e = 0; e < static_cast<int>(states.size()) && !changed; ++e) {
      if (find(e) != e) continue;
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (states[e].tgt == gens[g].src && act[e][g] < 0) {
          changed = true;
          break;
        }
    }
  }

  // collect the quotient category
  std::vector<int> reps;
  std::vector<int> rep_ix(states.size(), -1);
  for (int e = 0; e < static_cast<int>(states.size()); ++e)
    if (find(e) == e) {
      rep_ix[e] = static_cast<int>(reps.size());
      reps.push_back(e);
    }
  OracleResult R;
  for (int o = 0; o < C.num_objects(); ++o) R.cat.add_object(C.objects[o]);
  for (int e : reps)
    R.cat.add_morphism("w" + std::to_string(rep_ix[e]), states[e].origin,
                       states[e].tgt);
  for (int o = 0; o < C.num_objects(); ++o)
    R.cat.set_identity(o, rep_ix[find(id_state[o])]);
  // composition: d . e = (word of d applied to e); compute words by BFS
  std::vector<std::vector<int>> word(states.size());
  {
    std::vector<char> has_word(states.size(), 0);
    std::vector<int> queue;
    for (int o = 0; o < C.num_objects(); ++o) {
      int e = find(id_state[o]);
      has_word[e] = 1;
      queue.push_back(e);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int e = queue[qi];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (states[e].tgt != gens[g].src || act[e][g] < 0) continue;
        int s = find(act[e][g]);
        if (has_word[s]) continue;
        has_word[s] = 1;
        word[s] = word[e];
        word[s].push_back(static_cast<int>(g));
        queue.push_back(s);
      }
    }
    for (int e : reps)
      if (!has_word[e]) throw Error("Oracle", "unreachable element");
  }
  auto apply_word = [&](int e, const std::vector<int>& w) {
    for (int g : w) {
      e = apply(e, g, false);
      if (e < 0) throw Error("Oracle", "action incomplete");
    }
    return find(e);
  };
  for (int d : reps)
    for (int e : reps) {
      if (states[e].tgt != states[d].origin) continue;
      int c = apply_word(e, word[d]);
      R.cat.set_composite(rep_ix[d], rep_ix[e], rep_ix[c]);
    }
  auto v = R.cat.finalize();
  if (!v.empty())
    throw Error("Oracle", "quotient laws fail: " + v.front().kind);
  R.loc.resize(C.num_morphisms());
  for (int m = 0; m < C.num_morphisms(); ++m)
    R.loc[m] =
        rep_ix[apply_word(find(id_state[C.morphisms[m].src]),
                          {gen_of_mor[m]})];
  return R;
}

std::optional<std::vector<int>> category_iso_over_objects(
    const FinCategory& A, const FinCategory& B) {
  if (A.num_objects() != B.num_objects()) return std::nullopt;
  if (A.num_morphisms() != B.num_morphisms()) return std::nullopt;
  std::vector<int> fix(A.num_objects());
  std::iota(fix.begin(), fix.end(), 0);
  auto functors = fincat::enumerate_functors(A, B, fix, nullptr, SIZE_MAX);
  for (const auto& F : functors) {
    std::set<int> img(F.mor.begin(), F.mor.end());
    if (static_cast<int>(img.size()) == B.num_morphisms()) return F.mor;
  }
  return std::nullopt;
}

bool app1(const CofCategory& C, const CofCategory& D, const Functor& F) {
  for (int m = 0; m < C.cat.num_morphisms(); ++m)
    if (D.weq[F.mor[m]] && !C.weq[m]) return false;
  return true;
}

bool app2(const CofCategory& C, const CofCategory& D, const Functor& F) {
  const auto& dc = D.cat;
  for (int A = 0; A < C.cat.num_objects(); ++A)
    for (int f : dc.out_of(F.obj[A])) {
      int Y = dc.morphisms[f].tgt;
      bool found = false;
      for (int i : C.cat.out_of(A)) {
        int B = C.cat.morphisms[i].tgt;
        for (int Z = 0; Z < dc.num_objects() && !found; ++Z)
          for (int s : dc.hom(F.obj[B], Z)) {
            if (!D.weq[s]) continue;
            for (int t : dc.hom(Y, Z))
              if (D.weq[t] &&
                  dc.compose(t, f) == dc.compose(s, F.mor[i])) {
                found = true;
                break;
              }
            if (found) break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

bool is_weq_functor(const CofCategory& C, const CofCategory& D,
                    const Functor& F) {
  HoCategory HC = homotopy_category(C);
  HoCategory HD = homotopy_category(D);
  // Ho F on classes
  auto ho_obj = [&](int c) { return F.obj[c]; };
  auto ho_mor = [&](int hm) {
    const Fraction& fr = HC.rep[hm];
    Fraction img{F.mor[fr.f], F.mor[fr.s]};
    int X = D.cat.morphisms[img.f].src, Y = D.cat.morphisms[img.s].src;
    // find the class of img in HD
    for (int m = 0; m < HD.cat.num_morphisms(); ++m) {
      if (HD.cat.morphisms[m].src != X || HD.cat.morphisms[m].tgt != Y)
        continue;
      if (fractions_equal(D, HD.rep[m], img)) return m;
    }
    throw Error("HoFunctor", "image class not found");
  };
  // essential surjectivity
  for (int d = 0; d < D.cat.num_objects(); ++d) {
    bool hit = false;
    for (int c = 0; c < C.cat.num_objects() && !hit; ++c) {
      // iso in Ho D between F(c) and d?
      for (int m = 0; m < HD.cat.num_morphisms() && !hit; ++m)
        if (HD.cat.morphisms[m].src == ho_obj(c) &&
            HD.cat.morphisms[m].tgt == d && HD.cat.is_isomorphism(m))
          hit = true;
    }
    if (!hit) return false;
  }
  // full and faithful
  for (int a = 0; a < C.cat.num_objects(); ++a)
    for (int b = 0; b < C.cat.num_objects(); ++b) {
      auto src_hom = HC.cat.hom(a, b);
      auto tgt_hom = HD.cat.hom(ho_obj(a), ho_obj(b));
      std::set<int> image;
      for (int hm : src_hom) image.insert(ho_mor(hm));
      if (image.size() != src_hom.size()) return false;  // not faithful
      if (image.size() != tgt_hom.size()) return false;  // not full
    }
  return true;
}

HepResult hep_transport(const CofCategory& C, int i, int f, int g) {
  const auto& cat = C.cat;
  if (!C.cof[i]) throw Error("HypothesisFailed", "i not a cofibration");
  int A = cat.morphisms[i].src, B = cat.morphisms[i].tgt;
  int X = cat.morphisms[f].tgt;
  if (cat.morphisms[f].src != A || cat.morphisms[g].src != B ||
      cat.morphisms[g].tgt != X)
    throw Error("HypothesisFailed", "endpoints");
  int gi = cat.compose(g, i);
  if (!left_homotopic(C, gi, f))
    throw Error("HypothesisFailed", "g.i not left homotopic to f");

  for (const Cylinder& ca : enumerate_cylinders(C, A)) {
    // a left homotopy H between f and g.i via this cylinder
    auto fg = copair(C, {ca.coprod, ca.inj0, ca.inj1}, f, gi);
    if (!fg) continue;
    for (int j : cat.out_of(X)) {
      if (!(C.weq[j] && C.cof[j])) continue;
      int Xt = cat.morphisms[j].tgt;
      for (int H : cat.hom(ca.cyl, Xt)) {
        if (cat.compose(H, ca.insertion) != cat.compose(j, *fg)) continue;
        for (const Cylinder& cb : enumerate_cylinders(C, B)) {
          // compatible connecting morphism IA -> IB
          for (int Ii : cat.hom(ca.cyl, cb.cyl)) {
            if (cat.compose(Ii, ca.d0) != cat.compose(cb.d0, i)) continue;
            if (cat.compose(Ii, ca.d1) != cat.compose(cb.d1, i)) continue;
            if (cat.compose(cb.projection, Ii) !=
                cat.compose(i, ca.projection))
              continue;
            // M = IA u_A B along d1
            auto po = cofcat::pushout_along(
                C, cofcat::SpanInC{A, ca.d1, i});
            if (!po) continue;
            // [H, jg]: M -> X~
            int jg = cat.compose(j, g);
            std::optional<int> Hjg;
            for (int h : cat.hom(po->obj, Xt))
              if (cat.compose(h, po->from_left) == H &&
                  cat.compose(h, po->from_right) == jg) {
                Hjg = h;
                break;
              }
            if (!Hjg) continue;
            // q: M -> IB induced by (Ii, d1 of B); must be an acyclic cof
            std::optional<int> q;
            for (int h : cat.hom(po->obj, cb.cyl))
              if (cat.compose(h, po->from_left) == Ii &&
                  cat.compose(h, po->from_right) == cb.d1) {
                q = h;
                break;
              }
            if (!q || !(C.weq[*q] && C.cof[*q])) continue;
            // pushout of q along [H, jg]
            auto po2 = cofcat::pushout_along(
                C, cofcat::SpanInC{po->obj, *q, *Hjg});
            if (!po2) continue;
            int jt = po2->from_right;         // X~ -> X^ (acyclic cof)
            int Ht = po2->from_left;          // IB -> X^
            HepResult R;
            R.s = cat.compose(jt, j);
            R.g_tilde = cat.compose(Ht, cb.d0);
            // postconditions
            if (cat.compose(R.g_tilde, i) != cat.compose(R.s, f)) continue;
            if (!C.weq[R.s]) continue;
            if (!left_homotopic(C, R.g_tilde, cat.compose(R.s, g))) continue;
            return R;
          }
        }
      }
    }
  }
  throw Error("SearchFailed", "no compatible cylinder pair");
}

}  // namespace framecat::hocat
