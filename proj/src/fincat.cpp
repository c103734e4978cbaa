#include "framecat/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace framecat::fincat {

namespace {

int lookup_comp(const std::vector<std::vector<std::pair<int, int>>>& comp,
                int g, int f) {
  const auto& row = comp[g];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(f, -1));
  if (it == row.end() || it->first != f) return -1;
  return it->second;
}

}  // namespace

int FinCategory::compose(int g, int f) const {
  if (!composable(g, f))
    throw Error("IllTypedComposite",
                morphisms[g].name + " . " + morphisms[f].name);
  int r = lookup_comp(comp_, g, f);
  if (r < 0)
    throw Error("IllTypedComposite",
                "no composite declared for " + morphisms[g].name + " . " +
                    morphisms[f].name);
  return r;
}

const std::vector<int>& FinCategory::hom(int a, int b) const {
  return hom_[static_cast<std::size_t>(a) * num_objects() + b];
}

bool FinCategory::is_isomorphism(int m) const {
  return inverse(m).has_value();
}

std::optional<int> FinCategory::inverse(int m) const {
  int a = morphisms[m].src, b = morphisms[m].tgt;
  for (int w : hom(b, a))
    if (compose(w, m) == identity[a] && compose(m, w) == identity[b]) return w;
  return std::nullopt;
}

int FinCategory::add_object(const std::string& name) {
  objects.push_back(name);
  return num_objects() - 1;
}

int FinCategory::add_morphism(const std::string& name, int src, int tgt) {
  morphisms.push_back({name, src, tgt});
  return num_morphisms() - 1;
}

void FinCategory::set_composite(int g, int f, int gf) {
  if (static_cast<int>(comp_.size()) < num_morphisms())
    comp_.resize(num_morphisms());
  comp_[g].emplace_back(f, gf);
}

std::vector<FinCategory::Violation> FinCategory::finalize(bool check_laws) {
  std::vector<Violation> out;
  comp_.resize(num_morphisms());
  for (auto& row : comp_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  hom_.assign(static_cast<std::size_t>(num_objects()) * num_objects(), {});
  out_.assign(num_objects(), {});
  for (int m = 0; m < num_morphisms(); ++m) {
    hom_[static_cast<std::size_t>(morphisms[m].src) * num_objects() +
         morphisms[m].tgt]
        .push_back(m);
    out_[morphisms[m].src].push_back(m);
  }
  identity.assign(num_objects(), -1);
  for (auto [o, m] : identity_decl_) {
    if (morphisms[m].src != o || morphisms[m].tgt != o) {
      out.push_back({"MissingIdentity",
                     "declared identity of " + objects[o] + " is not an endomorphism"});
      continue;
    }
    identity[o] = m;
  }
  for (int o = 0; o < num_objects(); ++o)
    if (identity[o] < 0)
      out.push_back({"MissingIdentity", objects[o]});
  if (!check_laws) return out;
  // typing and totality of composition
  for (int g = 0; g < num_morphisms(); ++g) {
    for (auto [f, gf] : comp_[g]) {
      if (!composable(g, f)) {
        out.push_back({"IllTypedComposite",
                       morphisms[g].name + " . " + morphisms[f].name +
                           " declared but not composable"});
        continue;
      }
      if (morphisms[gf].src != morphisms[f].src ||
          morphisms[gf].tgt != morphisms[g].tgt)
        out.push_back({"IllTypedComposite",
                       morphisms[g].name + " . " + morphisms[f].name + " = " +
                           morphisms[gf].name});
    }
    for (int f = 0; f < num_morphisms(); ++f)
      if (composable(g, f) && lookup_comp(comp_, g, f) < 0)
        out.push_back({"IllTypedComposite",
                       "missing composite " + morphisms[g].name + " . " +
                           morphisms[f].name});
  }
  if (!out.empty()) return out;
  // unit laws
  for (int m = 0; m < num_morphisms(); ++m) {
    if (compose(m, identity[morphisms[m].src]) != m ||
        compose(identity[morphisms[m].tgt], m) != m)
      out.push_back({"MissingIdentity",
                     "unit law fails at " + morphisms[m].name});
  }
  // associativity
  for (int h = 0; h < num_morphisms(); ++h)
    for (int g = 0; g < num_morphisms(); ++g) {
      if (!composable(h, g)) continue;
      int hg = compose(h, g);
      for (int f = 0; f < num_morphisms(); ++f) {
        if (!composable(g, f)) continue;
        if (compose(hg, f) != compose(h, compose(g, f)))
          out.push_back({"NonAssociative",
                         "(" + morphisms[h].name + "," + morphisms[g].name +
                             "," + morphisms[f].name + ")"});
      }
    }
  return out;
}

FinCategory FinCategory::poset(const std::vector<std::string>& objs,
                               const std::function<bool(int, int)>& leq) {
  FinCategory C;
  for (const auto& o : objs) C.add_object(o);
  int n = C.num_objects();
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq(a, b)) {
        std::string nm = a == b ? "id_" + objs[a] : objs[a] + "<" + objs[b];
        arrow[a][b] = C.add_morphism(nm, a, b);
      }
  for (int a = 0; a < n; ++a) C.set_identity(a, arrow[a][a]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (arrow[a][b] >= 0 && arrow[b][c] >= 0)
          C.set_composite(arrow[b][c], arrow[a][b], arrow[a][c]);
  auto v = C.finalize();
  if (!v.empty()) throw Error("InvalidPoset", v.front().kind);
  return C;
}

ValidationResult validate_category(const RawCategory& raw) {
  ValidationResult res;
  FinCategory C;
  std::map<std::string, int> oidx, midx;
  for (const auto& o : raw.objects) oidx[o] = C.add_object(o);
  for (const auto& m : raw.morphisms) {
    auto s = oidx.find(m.src), t = oidx.find(m.tgt);
    if (s == oidx.end() || t == oidx.end()) {
      res.violations.push_back(
          {"IllTypedComposite", "morphism " + m.name + " has unknown endpoint"});
      continue;
    }
    midx[m.name] = C.add_morphism(m.name, s->second, t->second);
  }
  if (!res.violations.empty()) return res;
  for (const auto& id : raw.identities) {
    auto it = midx.find(id);
    if (it == midx.end()) {
      res.violations.push_back({"MissingIdentity", "unknown morphism " + id});
      continue;
    }
    C.set_identity(C.morphisms[it->second].src, it->second);
  }
  for (const auto& t : raw.composition) {
    auto g = midx.find(t[0]), f = midx.find(t[1]), gf = midx.find(t[2]);
    if (g == midx.end() || f == midx.end() || gf == midx.end()) {
      res.violations.push_back(
          {"IllTypedComposite", t[0] + " . " + t[1] + " = " + t[2]});
      continue;
    }
    C.set_composite(g->second, f->second, gf->second);
  }
  if (!res.violations.empty()) return res;
  auto v = C.finalize();
  if (!v.empty()) {
    res.violations = v;
    return res;
  }
  res.category = std::move(C);
  return res;
}

std::vector<std::string> HomotopicalCategory::violated_laws() const {
  std::vector<std::string> out;
  for (int o = 0; o < cat.num_objects(); ++o)
    if (!weq[cat.identity[o]]) {
      out.push_back("identity of " + cat.objects[o] + " not a weak equivalence");
      break;
    }
  for (int f = 0; f < cat.num_morphisms() && out.empty(); ++f)
    for (int g : cat.out_of(cat.morphisms[f].tgt))
      if (weq[g] && weq[f] && !weq[cat.compose(g, f)]) {
        out.push_back("weq not closed under composition at " +
                      cat.morphisms[g].name + " . " + cat.morphisms[f].name);
        break;
      }
  auto closed = two_out_of_six_closure(cat, weq);
  if (closed != weq) out.push_back("weq not closed under 2 out of 6");
  return out;
}

std::vector<std::string> DirectCategory::violated_laws() const {
  std::vector<std::string> out;
  for (int m = 0; m < cat.num_morphisms(); ++m) {
    const auto& f = cat.morphisms[m];
    if (degree[f.src] > degree[f.tgt]) {
      out.push_back("degree not monotone along " + f.name);
      break;
    }
    if (degree[f.src] == degree[f.tgt] && !cat.is_identity(m)) {
      out.push_back("degree does not reflect identities at " + f.name);
      break;
    }
  }
  return out;
}

std::optional<std::vector<int>> synthesize_degree(const FinCategory& C) {
  int n = C.num_objects();
  // edges a -> b for non-identity morphisms
  std::vector<std::vector<int>> succ(n);
  for (int m = 0; m < C.num_morphisms(); ++m) {
    if (C.is_identity(m)) continue;
    if (C.morphisms[m].src == C.morphisms[m].tgt) return std::nullopt;
    succ[C.morphisms[m].src].push_back(C.morphisms[m].tgt);
  }
  // longest path layering over the DAG; cycle -> failure
  std::vector<int> deg(n, 0);
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (int a = 0; a < n; ++a)
      for (int b : succ[a])
        if (deg[b] < deg[a] + 1) {
          deg[b] = deg[a] + 1;
          changed = true;
        }
    if (!changed) return deg;
  }
  return std::nullopt;  // cycle
}

std::vector<char> two_out_of_six_closure(const FinCategory& C,
                                         const std::vector<char>& generators) {
  std::vector<char> s = generators;
  s.resize(C.num_morphisms(), 0);
  for (int o = 0; o < C.num_objects(); ++o) s[C.identity[o]] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](int m) {
      if (!s[m]) {
        s[m] = 1;
        changed = true;
      }
    };
    for (int f = 0; f < C.num_morphisms(); ++f) {
      for (int g : C.out_of(C.morphisms[f].tgt)) {
        int gf = C.compose(g, f);
        if (s[g] && s[f]) add(gf);
        // 2 out of 6: gf and hg in s  =>  f, g, h, hgf in s
        if (!s[gf]) continue;
        for (int h : C.out_of(C.morphisms[g].tgt)) {
          if (!s[C.compose(h, g)]) continue;
          add(f);
          add(g);
          add(h);
          add(C.compose(h, gf));
        }
      }
    }
  }
  return s;
}

Functor identity_functor(const FinCategory& C) {
  Functor F;
  F.obj.resize(C.num_objects());
  F.mor.resize(C.num_morphisms());
  std::iota(F.obj.begin(), F.obj.end(), 0);
  std::iota(F.mor.begin(), F.mor.end(), 0);
  return F;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  Functor h;
  h.obj.reserve(f.obj.size());
  h.mor.reserve(f.mor.size());
  for (int o : f.obj) h.obj.push_back(g.obj[o]);
  for (int m : f.mor) h.mor.push_back(g.mor[m]);
  return h;
}

bool is_functor(const FinCategory& src, const FinCategory& tgt,
                const Functor& F, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (static_cast<int>(F.obj.size()) != src.num_objects() ||
      static_cast<int>(F.mor.size()) != src.num_morphisms())
    return fail("size mismatch");
  for (int m = 0; m < src.num_morphisms(); ++m) {
    if (tgt.morphisms[F.mor[m]].src != F.obj[src.morphisms[m].src] ||
        tgt.morphisms[F.mor[m]].tgt != F.obj[src.morphisms[m].tgt])
      return fail("endpoints of " + src.morphisms[m].name);
  }
  for (int o = 0; o < src.num_objects(); ++o)
    if (F.mor[src.identity[o]] != tgt.identity[F.obj[o]])
      return fail("identity of " + src.objects[o]);
  for (int g = 0; g < src.num_morphisms(); ++g)
    for (int f = 0; f < src.num_morphisms(); ++f)
      if (src.composable(g, f) &&
          F.mor[src.compose(g, f)] != tgt.compose(F.mor[g], F.mor[f]))
        return fail("composition at " + src.morphisms[g].name + " . " +
                    src.morphisms[f].name);
  return true;
}

bool is_homotopical_functor(const HomotopicalCategory& src,
                            const HomotopicalCategory& tgt, const Functor& F) {
  if (!is_functor(src.cat, tgt.cat, F)) return false;
  for (int m = 0; m < src.cat.num_morphisms(); ++m)
    if (src.weq[m] && !tgt.weq[F.mor[m]]) return false;
  return true;
}

bool is_sieve(const FinCategory& src, const FinCategory& tgt,
              const Functor& F) {
  if (!is_functor(src, tgt, F)) return false;
  // injective on objects
  std::set<int> img(F.obj.begin(), F.obj.end());
  if (img.size() != F.obj.size()) return false;
  // fully faithful
  for (int a = 0; a < src.num_objects(); ++a)
    for (int b = 0; b < src.num_objects(); ++b) {
      auto h = src.hom(a, b);
      std::set<int> himg;
      for (int m : h) himg.insert(F.mor[m]);
      if (himg.size() != h.size()) return false;  // not faithful
      auto th = tgt.hom(F.obj[a], F.obj[b]);
      if (himg.size() != th.size()) return false;  // not full
    }
  // downward closed
  for (int m = 0; m < tgt.num_morphisms(); ++m) {
    if (img.count(tgt.morphisms[m].tgt) && !img.count(tgt.morphisms[m].src))
      return false;
  }
  return true;
}

LatchingCategory latching_category(const DirectCategory& I, int i) {
  LatchingCategory L;
  const FinCategory& C = I.cat;
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (C.morphisms[m].tgt == i && !C.is_identity(m))
      L.object_mor.push_back(m);
  for (int m : L.object_mor) L.cat.add_object(C.morphisms[m].name);
  // a morphism (u: j->i) -> (v: j'->i) is w: j->j' with v.w = u
  struct Arrow {
    int a, b, w;
  };
  std::vector<Arrow> arrows;
  int n = static_cast<int>(L.object_mor.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int u = L.object_mor[a], v = L.object_mor[b];
      for (int w : C.hom(C.morphisms[u].src, C.morphisms[v].src))
        if (C.compose(v, w) == u)
          arrows.push_back({a, b, w});
    }
  std::vector<int> arrow_id(arrows.size());
  for (std::size_t k = 0; k < arrows.size(); ++k)
    arrow_id[k] = L.cat.add_morphism(
        "(" + C.morphisms[arrows[k].w].name + ")", arrows[k].a, arrows[k].b);
  for (std::size_t k = 0; k < arrows.size(); ++k)
    if (arrows[k].a == arrows[k].b &&
        C.is_identity(arrows[k].w))
      L.cat.set_identity(arrows[k].a, arrow_id[k]);
  for (std::size_t k2 = 0; k2 < arrows.size(); ++k2)
    for (std::size_t k1 = 0; k1 < arrows.size(); ++k1) {
      if (arrows[k1].b != arrows[k2].a) continue;
      int w = C.compose(arrows[k2].w, arrows[k1].w);
      for (std::size_t k3 = 0; k3 < arrows.size(); ++k3)
        if (arrows[k3].a == arrows[k1].a && arrows[k3].b == arrows[k2].b &&
            arrows[k3].w == w) {
          L.cat.set_composite(arrow_id[k2], arrow_id[k1], arrow_id[k3]);
          break;
        }
    }
  auto v = L.cat.finalize();
  if (!v.empty())
    throw Error("LatchingCategory", "construction failed: " + v.front().kind);
  L.forgetful.obj.resize(n);
  L.forgetful.mor.resize(arrows.size());
  for (int a = 0; a < n; ++a)
    L.forgetful.obj[a] = C.morphisms[L.object_mor[a]].src;
  for (std::size_t k = 0; k < arrows.size(); ++k)
    L.forgetful.mor[arrow_id[k]] = arrows[k].w;
  return L;
}

std::vector<Cocone> enumerate_cocones(const FinCategory& J, const Functor& X,
                                      const FinCategory& C) {
  std::vector<Cocone> out;
  int n = J.num_objects();
  for (int apex = 0; apex < C.num_objects(); ++apex) {
    std::vector<int> legs(n, -1);
    std::function<void(int)> rec = [&](int j) {
      if (j == n) {
        out.push_back({apex, legs});
        return;
      }
      for (int leg : C.hom(X.obj[j], apex)) {
        legs[j] = leg;
        bool ok = true;
        // naturality against all already-assigned neighbours
        for (int m = 0; m < J.num_morphisms() && ok; ++m) {
          int s = J.morphisms[m].src, t = J.morphisms[m].tgt;
          if (s > j || t > j) continue;
          if (C.compose(legs[t], X.mor[m]) != legs[s]) ok = false;
        }
        if (ok) rec(j + 1);
      }
      legs[j] = -1;
    };
    rec(0);
  }
  return out;
}

namespace {

std::optional<int> unique_mediator(const FinCategory& J, const FinCategory& C,
                                   const Cocone& from, const Cocone& to) {
  std::optional<int> found;
  for (int h : C.hom(from.apex, to.apex)) {
    bool ok = true;
    for (std::size_t j = 0; j < from.legs.size() && ok; ++j)
      if (C.compose(h, from.legs[j]) != to.legs[j]) ok = false;
    if (ok) {
      if (found) return std::nullopt;  // not unique
      found = h;
    }
  }
  (void)J;
  return found;
}

}  // namespace

std::optional<Cocone> colimit(const FinCategory& J, const Functor& X,
                              const FinCategory& C) {
  auto cocones = enumerate_cocones(J, X, C);
  for (const auto& cand : cocones) {
    bool universal = true;
    for (const auto& other : cocones)
      if (!unique_mediator(J, C, cand, other)) {
        universal = false;
        break;
      }
    if (universal) return cand;  // canonical: first in (apex, legs) order
  }
  return std::nullopt;
}

std::optional<int> mediating_morphism(const FinCategory& J, const Functor& X,
                                      const FinCategory& C,
                                      const Cocone& universal,
                                      const Cocone& other) {
  (void)X;
  return unique_mediator(J, C, universal, other);
}

std::optional<int> initial_object(const FinCategory& C) {
  FinCategory empty;
  auto v = empty.finalize();
  (void)v;
  Functor X;
  auto c = colimit(empty, X, C);
  if (!c) return std::nullopt;
  return c->apex;
}

FinCategory product_category(const FinCategory& A, const FinCategory& B) {
  FinCategory P;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b)
      P.add_object("(" + A.objects[a] + "," + B.objects[b] + ")");
  auto oid = [&](int a, int b) { return a * B.num_objects() + b; };
  std::vector<std::vector<int>> mid(A.num_morphisms(),
                                    std::vector<int>(B.num_morphisms()));
  for (int f = 0; f < A.num_morphisms(); ++f)
    for (int g = 0; g < B.num_morphisms(); ++g)
      mid[f][g] = P.add_morphism(
          "(" + A.morphisms[f].name + "," + B.morphisms[g].name + ")",
          oid(A.morphisms[f].src, B.morphisms[g].src),
          oid(A.morphisms[f].tgt, B.morphisms[g].tgt));
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b)
      P.set_identity(oid(a, b), mid[A.identity[a]][B.identity[b]]);
  for (int f2 = 0; f2 < A.num_morphisms(); ++f2)
    for (int g2 = 0; g2 < B.num_morphisms(); ++g2)
      for (int f1 = 0; f1 < A.num_morphisms(); ++f1)
        for (int g1 = 0; g1 < B.num_morphisms(); ++g1)
          if (A.composable(f2, f1) && B.composable(g2, g1))
            P.set_composite(mid[f2][g2], mid[f1][g1],
                            mid[A.compose(f2, f1)][B.compose(g2, g1)]);
  auto v = P.finalize();
  if (!v.empty()) throw Error("ProductCategory", v.front().kind);
  return P;
}

std::vector<Functor> enumerate_functors(
    const FinCategory& J, const FinCategory& C,
    const std::vector<int>& obj_fixed,
    const std::function<bool(int, int)>& mor_filter, std::size_t limit) {
  std::vector<Functor> out;
  Functor F;
  F.obj.assign(J.num_objects(), -1);
  F.mor.assign(J.num_morphisms(), -1);
  if (!obj_fixed.empty()) {
    for (int o = 0; o < J.num_objects(); ++o)
      if (obj_fixed[o] >= 0) F.obj[o] = obj_fixed[o];
  }

  // assignment order: objects first (those not fixed), then morphisms
  std::function<bool(int)> assign_mor;
  assign_mor = [&](int m) -> bool {
    if (out.size() >= limit) return true;
    if (m == J.num_morphisms()) {
      Functor G = F;
      if (is_functor(J, C, G)) out.push_back(std::move(G));
      return out.size() >= limit;
    }
    if (J.is_identity(m)) {
      F.mor[m] = C.identity[F.obj[J.morphisms[m].src]];
      if (assign_mor(m + 1)) return true;
      F.mor[m] = -1;
      return false;
    }
    for (int cm : C.hom(F.obj[J.morphisms[m].src], F.obj[J.morphisms[m].tgt])) {
      if (mor_filter && !mor_filter(m, cm)) continue;
      F.mor[m] = cm;
      // incremental composition check with already-assigned morphisms
      bool ok = true;
      for (int g = 0; g <= m && ok; ++g) {
        if (F.mor[g] < 0) continue;
        if (J.composable(m, g)) {
          int c = J.compose(m, g);
          if (c <= m && F.mor[c] >= 0 && F.mor[c] != C.compose(F.mor[m], F.mor[g]))
            ok = false;
        }
        if (J.composable(g, m)) {
          int c = J.compose(g, m);
          if (c <= m && F.mor[c] >= 0 && F.mor[c] != C.compose(F.mor[g], F.mor[m]))
            ok = false;
        }
      }
      if (ok && assign_mor(m + 1)) return true;
    }
    F.mor[m] = -1;
    return false;
  };

  std::function<bool(int)> assign_obj = [&](int o) -> bool {
    if (o == J.num_objects()) return assign_mor(0);
    if (F.obj[o] >= 0) return assign_obj(o + 1);
    for (int co = 0; co < C.num_objects(); ++co) {
      F.obj[o] = co;
      // prune: every hom-set out of / into already-assigned objects must be
      // matchable by at least one target morphism
      bool ok = true;
      for (int p = 0; p <= o && ok; ++p) {
        if (F.obj[p] < 0) continue;
        if (!J.hom(p, o).empty() && C.hom(F.obj[p], co).empty()) ok = false;
        if (!J.hom(o, p).empty() && C.hom(co, F.obj[p]).empty()) ok = false;
      }
      if (ok && assign_obj(o + 1)) return true;
    }
    F.obj[o] = -1;
    return false;
  };

  assign_obj(0);
  return out;
}

}  // namespace framecat::fincat
