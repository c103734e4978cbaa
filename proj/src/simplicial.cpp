#include "framecat/simplicial.hpp"

#include <algorithm>
#include <numeric>

namespace framecat::simplicial {

// --- operators ----------------------------------------------------------------

bool Op::is_identity() const {
  if (tgt != src_dim()) return false;
  for (int i = 0; i <= tgt; ++i)
    if (v[i] != i) return false;
  return true;
}

bool Op::is_injective() const {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) return false;
  return true;
}

bool Op::is_surjective() const {
  std::vector<char> hit(tgt + 1, 0);
  for (int x : v) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

Op Op::identity(int n) {
  Op o;
  o.tgt = n;
  o.v.resize(n + 1);
  std::iota(o.v.begin(), o.v.end(), 0);
  return o;
}

Op Op::face(int i, int n) {
  Op o;
  o.tgt = n;
  for (int x = 0; x <= n; ++x)
    if (x != i) o.v.push_back(x);
  return o;
}

Op Op::degeneracy(int j, int n) {
  Op o;
  o.tgt = n;
  for (int x = 0; x <= n; ++x) {
    o.v.push_back(x);
    if (x == j) o.v.push_back(x);
  }
  return o;
}

Op Op::constant(int value, int src_dim, int n) {
  Op o;
  o.tgt = n;
  o.v.assign(src_dim + 1, value);
  return o;
}

std::string Op::str() const {
  std::string s;
  for (int x : v) s += (x < 10 ? std::string(1, char('0' + x)) : "(" + std::to_string(x) + ")");
  return s;
}

Op compose_op(const Op& g, const Op& f) {
  if (f.tgt != g.src_dim())
    throw Error("OpCompose", "dimension mismatch " + g.str() + " . " + f.str());
  Op o;
  o.tgt = g.tgt;
  o.v.reserve(f.v.size());
  for (int x : f.v) o.v.push_back(g.v[x]);
  return o;
}

std::pair<Op, Op> epi_mono(const Op& f) {
  Op mono;
  mono.tgt = f.tgt;
  for (int x : f.v)
    if (mono.v.empty() || mono.v.back() != x) mono.v.push_back(x);
  Op epi;
  epi.tgt = mono.src_dim();
  for (int x : f.v) {
    auto it = std::lower_bound(mono.v.begin(), mono.v.end(), x);
    epi.v.push_back(static_cast<int>(it - mono.v.begin()));
  }
  return {mono, epi};
}

Op join_op(const Op& a, const Op& b) {
  Op o;
  o.tgt = a.tgt + 1 + b.tgt;
  o.v = a.v;
  for (int x : b.v) o.v.push_back(x + a.tgt + 1);
  return o;
}

std::vector<Op> all_epis(int m, int d) {
  std::vector<Op> out;
  if (d > m) return out;
  Op o;
  o.tgt = d;
  std::function<void(int, int)> rec = [&](int i, int last) {
    if (i == m + 1) {
      if (last == d) out.push_back(o);
      return;
    }
    for (int x = last; x <= std::min(last + 1, d); ++x) {
      if (d - x > m - i) continue;  // cannot still reach d
      o.v.push_back(x);
      rec(i + 1, x);
      o.v.pop_back();
    }
  };
  // first value must be 0
  o.v.push_back(0);
  rec(1, 0);
  if (m == 0) {
    out.clear();
    if (d == 0) out.push_back(Op::identity(0));
  }
  return out;
}

std::vector<Op> all_monos(int d, int m) {
  std::vector<Op> out;
  if (d > m) return out;
  std::vector<int> idx(d + 1);
  Op o;
  o.tgt = m;
  std::function<void(int, int)> rec = [&](int i, int from) {
    if (i == d + 1) {
      out.push_back(o);
      return;
    }
    for (int x = from; x <= m - (d - i); ++x) {
      o.v.push_back(x);
      rec(i + 1, x + 1);
      o.v.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Op> all_ops(int m, int n) {
  std::vector<Op> out;
  Op o;
  o.tgt = n;
  std::function<void(int, int)> rec = [&](int i, int last) {
    if (i == m + 1) {
      out.push_back(o);
      return;
    }
    for (int x = last; x <= n; ++x) {
      o.v.push_back(x);
      rec(i + 1, x);
      o.v.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

// --- FinSimplicialSet ----------------------------------------------------------

int FinSimplicialSet::dim() const {
  int d = -1;
  for (const auto& c : cells) d = std::max(d, c.dim);
  return d;
}

int FinSimplicialSet::add_cell(const std::string& name, int d) {
  Cell c;
  c.name = name;
  c.dim = d;
  c.faces.resize(d >= 1 ? d + 1 : 0);
  cells.push_back(std::move(c));
  return num_cells() - 1;
}

namespace {

// c . mu for an injective operator mu, via the stored elementary faces.
Simplex cell_face(const FinSimplicialSet& X, int c, const Op& mu);

Simplex act_impl(const FinSimplicialSet& X, const Simplex& x, const Op& op) {
  Op f = compose_op(x.epi, op);
  auto [mu, eps] = epi_mono(f);
  Simplex s = cell_face(X, x.cell, mu);
  return {s.cell, compose_op(s.epi, eps)};
}

Simplex cell_face(const FinSimplicialSet& X, int c, const Op& mu) {
  if (mu.is_identity()) return {c, Op::identity(X.cells[c].dim)};
  // choose the largest value of [dim c] missing from the image of mu
  int d = X.cells[c].dim;
  std::vector<char> hit(d + 1, 0);
  for (int x : mu.v) hit[x] = 1;
  int i = d;
  while (hit[i]) --i;
  Op mu2;
  mu2.tgt = d - 1;
  for (int x : mu.v) mu2.v.push_back(x < i ? x : x - 1);
  const Simplex& fi = X.cells[c].faces[i];
  if (fi.cell < 0)
    throw Error("MissingFace",
                "cell " + X.cells[c].name + " face " + std::to_string(i));
  return act_impl(X, fi, mu2);
}

}  // namespace

Simplex FinSimplicialSet::act(const Simplex& x, const Op& op) const {
  return act_impl(*this, x, op);
}

std::vector<Simplex> FinSimplicialSet::simplices(int d) const {
  std::vector<Simplex> out;
  for (int c = 0; c < num_cells(); ++c) {
    if (cells[c].dim > d) continue;
    if (truncation_cap >= 0 && cells[c].dim > truncation_cap)
      throw Error("CapExceeded", "simplices beyond truncation cap");
    for (const Op& e : all_epis(d, cells[c].dim)) out.push_back({c, e});
  }
  return out;
}

std::vector<int> FinSimplicialSet::cells_of_dim(int d) const {
  std::vector<int> out;
  for (int c = 0; c < num_cells(); ++c)
    if (cells[c].dim == d) out.push_back(c);
  return out;
}

std::vector<int> FinSimplicialSet::cell_vertices(int c) const {
  std::vector<int> out;
  int d = cells[c].dim;
  for (int i = 0; i <= d; ++i) {
    Simplex v = act(cell_simplex(c), Op{d, {i}});
    out.push_back(v.cell);
  }
  return out;
}

std::vector<std::string> FinSimplicialSet::check_identities() const {
  std::vector<std::string> out;
  for (int c = 0; c < num_cells(); ++c) {
    int d = cells[c].dim;
    for (int i = 0; i < d; ++i)
      if (cells[c].faces.size() && cells[c].faces[i].cell >= 0 &&
          cells[c].faces[i].dim() != d - 1)
        out.push_back("face dimension mismatch at " + cells[c].name);
    // d_i d_j = d_{j-1} d_i  (i < j), evaluated through stored data
    for (int j = 1; j <= d && d >= 2; ++j)
      for (int i = 0; i < j; ++i) {
        Simplex a = act(cell_simplex(c),
                        compose_op(Op::face(j, d), Op::face(i, d - 1)));
        Simplex b = act(cell_simplex(c),
                        compose_op(Op::face(i, d), Op::face(j - 1, d - 1)));
        if (!(a == b))
          out.push_back("dd identity fails at cell " + cells[c].name + " (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
      }
    // epi parts of stored faces must be valid epis
    for (int i = 0; i <= d && d >= 1; ++i)
      if (cells[c].faces[i].cell >= 0 && !cells[c].faces[i].epi.is_surjective())
        out.push_back("face epi part not surjective at " + cells[c].name);
  }
  return out;
}

Simplex ez_factorize(const FinSimplicialSet& X, const Simplex& x) {
  (void)X;
  return x;  // the representation is the factorization
}

// --- builders -------------------------------------------------------------------

namespace {

std::string verts_name(const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) {
    if (v >= 10) s += "(" + std::to_string(v) + ")";
    else s += char('0' + v);
  }
  return s;
}

// Builds the subcomplex of Delta^m spanned by the given downward-closed
// family of vertex subsets.
FinSimplicialSet simplex_subcomplex(int m,
                                    const std::set<std::vector<int>>& fam) {
  FinSimplicialSet X;
  std::map<std::vector<int>, int> ix;
  std::vector<std::vector<int>> ordered(fam.begin(), fam.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (const auto& vs : ordered)
    ix[vs] = X.add_cell(verts_name(vs), static_cast<int>(vs.size()) - 1);
  for (const auto& vs : ordered) {
    int c = ix[vs];
    int d = X.cells[c].dim;
    for (int i = 0; i <= d && d >= 1; ++i) {
      std::vector<int> f = vs;
      f.erase(f.begin() + i);
      auto it = ix.find(f);
      if (it == ix.end())
        throw Error("NotDownwardClosed", verts_name(vs));
      X.set_face(c, i, {it->second, Op::identity(d - 1)});
    }
  }
  (void)m;
  return X;
}

std::set<std::vector<int>> all_subsets(int m) {
  std::set<std::vector<int>> fam;
  for (int mask = 1; mask < (1 << (m + 1)); ++mask) {
    std::vector<int> vs;
    for (int i = 0; i <= m; ++i)
      if (mask & (1 << i)) vs.push_back(i);
    fam.insert(vs);
  }
  return fam;
}

}  // namespace

FinSimplicialSet standard_simplex(int m) {
  return simplex_subcomplex(m, all_subsets(m));
}

FinSimplicialSet boundary(int m) {
  auto fam = all_subsets(m);
  std::vector<int> top(m + 1);
  std::iota(top.begin(), top.end(), 0);
  fam.erase(top);
  return simplex_subcomplex(m, fam);
}

FinSimplicialSet empty_sset() { return FinSimplicialSet{}; }

FinSimplicialSet horn(int m, const std::set<int>& A) {
  if (static_cast<int>(A.size()) == m + 1)
    throw Error("EmptyHorn", "A = [m]");
  std::set<std::vector<int>> fam;
  for (const auto& vs : all_subsets(m)) {
    // vs must miss some vertex not in A
    bool ok = false;
    for (int s = 0; s <= m && !ok; ++s)
      if (!A.count(s) && !std::binary_search(vs.begin(), vs.end(), s))
        ok = true;
    if (ok) fam.insert(vs);
  }
  return simplex_subcomplex(m, fam);
}

FinSimplicialSet inner_horn(int m, int i) { return horn(m, {i}); }

std::optional<int> cell_by_vertices(const FinSimplicialSet& X,
                                    const std::vector<int>& verts) {
  for (int c = 0; c < X.num_cells(); ++c)
    if (X.cell_vertices(c) == verts) return c;
  return std::nullopt;
}

namespace {

fincat::FinCategory indiscrete_two() {
  using fincat::FinCategory;
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
  if (!viol.empty()) throw Error("E1", viol.front().kind);
  return C;
}

}  // namespace

FinSimplicialSet nerve(const fincat::FinCategory& C, int cap) {
  FinSimplicialSet X;
  X.truncation_cap = cap;
  // chains of composable non-identity morphisms, by length
  std::map<std::vector<int>, int> ix;  // chain of morphism ids -> cell
  std::vector<std::vector<int>> chains;
  for (int o = 0; o < C.num_objects(); ++o) {
    std::vector<int> ch{-1 - o};  // vertex sentinel: object o
    ix[ch] = X.add_cell(C.objects[o], 0);
    chains.push_back(ch);
  }
  std::vector<std::vector<int>> prev = chains;
  for (int d = 1; d <= cap; ++d) {
    std::vector<std::vector<int>> cur;
    for (const auto& ch : prev) {
      int last_tgt;
      if (ch.front() < 0 && ch.size() == 1)
        last_tgt = -1 - ch.front();
      else
        last_tgt = C.morphisms[ch.back()].tgt;
      for (int m : C.out_of(last_tgt)) {
        if (C.is_identity(m)) continue;
        std::vector<int> ext = ch.front() < 0 ? std::vector<int>{} : ch;
        ext.push_back(m);
        std::string nm;
        for (std::size_t i = 0; i < ext.size(); ++i)
          nm += (i ? "," : "") + C.morphisms[ext[i]].name;
        ix[ext] = X.add_cell("[" + nm + "]", d);
        cur.push_back(ext);
      }
    }
    prev = std::move(cur);
  }
  // face maps: drop/compose, then strip identities
  auto chain_simplex = [&](const std::vector<int>& raw_chain,
                           int src_obj) -> Simplex {
    // raw chain may contain identities; src_obj used when it is empty
    std::vector<int> core;
    std::vector<int> collapse;  // epi values
    int val = 0;
    collapse.push_back(0);
    for (int m : raw_chain) {
      if (!C.is_identity(m)) {
        core.push_back(m);
        ++val;
      }
      collapse.push_back(val);
    }
    Op epi;
    epi.tgt = val;
    epi.v = collapse;
    int cell;
    if (core.empty()) {
      int o = raw_chain.empty() ? src_obj : C.morphisms[raw_chain.front()].src;
      cell = ix.at({-1 - o});
    } else {
      cell = ix.at(core);
    }
    return {cell, epi};
  };
  for (const auto& [ch, c] : ix) {
    if (ch.front() < 0) continue;
    int d = static_cast<int>(ch.size());
    for (int i = 0; i <= d; ++i) {
      std::vector<int> f;
      if (i == 0)
        f.assign(ch.begin() + 1, ch.end());
      else if (i == d)
        f.assign(ch.begin(), ch.end() - 1);
      else {
        f = ch;
        int comp = C.compose(ch[i], ch[i - 1]);
        f.erase(f.begin() + i);
        f[i - 1] = comp;
      }
      int src_obj = C.morphisms[ch[i == 0 ? 0 : 0]].src;
      if (i == 0 && d == 1)
        src_obj = C.morphisms[ch[0]].tgt;
      else if (i == 0)
        src_obj = C.morphisms[ch[1]].src;
      X.set_face(c, i, chain_simplex(f, src_obj));
    }
  }
  return X;
}

FinSimplicialSet ne1(int cap) { return nerve(indiscrete_two(), cap); }

// --- join ------------------------------------------------------------------------

Simplex JoinSSet::pair_simplex(const Simplex& x, const Simplex& y) const {
  return {cell_pair(x.cell, y.cell), join_op(x.epi, y.epi)};
}

JoinSSet join(const FinSimplicialSet& K, const FinSimplicialSet& L) {
  JoinSSet J;
  J.k_cells = K.num_cells();
  J.l_cells = L.num_cells();
  FinSimplicialSet& X = J.complex;
  for (int a = 0; a < K.num_cells(); ++a)
    X.add_cell(K.cells[a].name + "*", K.cells[a].dim);
  for (int b = 0; b < L.num_cells(); ++b)
    X.add_cell("*" + L.cells[b].name, L.cells[b].dim);
  for (int a = 0; a < K.num_cells(); ++a)
    for (int b = 0; b < L.num_cells(); ++b)
      X.add_cell(K.cells[a].name + "*" + L.cells[b].name,
                 K.cells[a].dim + 1 + L.cells[b].dim);
  // faces of K-part and L-part cells
  for (int a = 0; a < K.num_cells(); ++a)
    for (int i = 0; i <= K.cells[a].dim && K.cells[a].dim >= 1; ++i) {
      Simplex f = K.cells[a].faces[i];
      X.set_face(J.cell_K(a), i, {J.cell_K(f.cell), f.epi});
    }
  for (int b = 0; b < L.num_cells(); ++b)
    for (int i = 0; i <= L.cells[b].dim && L.cells[b].dim >= 1; ++i) {
      Simplex f = L.cells[b].faces[i];
      X.set_face(J.cell_L(b), i, {J.cell_L(f.cell), f.epi});
    }
  // faces of pair cells
  for (int a = 0; a < K.num_cells(); ++a)
    for (int b = 0; b < L.num_cells(); ++b) {
      int p = K.cells[a].dim, q = L.cells[b].dim;
      int c = J.cell_pair(a, b);
      for (int i = 0; i <= p + 1 + q; ++i) {
        Simplex f;
        if (i <= p) {
          if (p == 0) {
            f = {J.cell_L(b), Op::identity(q)};
          } else {
            Simplex fa = K.cells[a].faces[i];
            f = {J.cell_pair(fa.cell, b), join_op(fa.epi, Op::identity(q))};
          }
        } else {
          int j = i - p - 1;
          if (q == 0) {
            f = {J.cell_K(a), Op::identity(p)};
          } else {
            Simplex fb = L.cells[b].faces[j];
            f = {J.cell_pair(a, fb.cell), join_op(Op::identity(p), fb.epi)};
          }
        }
        X.set_face(c, i, f);
      }
    }
  if (K.truncation_cap >= 0 || L.truncation_cap >= 0)
    X.truncation_cap = (K.truncation_cap >= 0 ? K.truncation_cap : K.dim()) +
                       1 + (L.truncation_cap >= 0 ? L.truncation_cap : L.dim());
  return J;
}

FinSimplicialSet disjoint_union(const FinSimplicialSet& K,
                                const FinSimplicialSet& L) {
  FinSimplicialSet X = K;
  int off = K.num_cells();
  for (int b = 0; b < L.num_cells(); ++b) {
    int c = X.add_cell(L.cells[b].name + "'", L.cells[b].dim);
    for (int i = 0; i <= L.cells[b].dim && L.cells[b].dim >= 1; ++i) {
      Simplex f = L.cells[b].faces[i];
      X.set_face(c, i, {f.cell + off, f.epi});
    }
  }
  return X;
}

// --- product ---------------------------------------------------------------------

Simplex ProductSSet::pair_simplex(const Simplex& x, const Simplex& y) const {
  if (x.dim() != y.dim()) throw Error("Product", "dimension mismatch");
  int m = x.dim();
  // joint collapse: positions where both epis repeat
  std::vector<int> eps{0};
  std::vector<int> kv{x.epi.v[0]}, lv{y.epi.v[0]};
  for (int i = 1; i <= m; ++i) {
    if (x.epi.v[i] == x.epi.v[i - 1] && y.epi.v[i] == y.epi.v[i - 1]) {
      eps.push_back(eps.back());
    } else {
      eps.push_back(eps.back() + 1);
      kv.push_back(x.epi.v[i]);
      lv.push_back(y.epi.v[i]);
    }
  }
  auto it = cell_ix.find({x.cell, y.cell, kv, lv});
  if (it == cell_ix.end())
    throw Error("CapExceeded", "product cell beyond construction cap");
  Op e;
  e.tgt = static_cast<int>(kv.size()) - 1;
  e.v = eps;
  return {it->second, e};
}

ProductSSet product(const FinSimplicialSet& K, const FinSimplicialSet& L,
                    int cap) {
  ProductSSet P;
  P.K = K;
  P.L = L;
  if (cap < 0) cap = std::max(0, K.dim()) + std::max(0, L.dim());
  struct CellData {
    int a, b;
    Op alpha, beta;
  };
  std::vector<CellData> data;
  for (int a = 0; a < K.num_cells(); ++a)
    for (int b = 0; b < L.num_cells(); ++b) {
      int da = K.cells[a].dim, db = L.cells[b].dim;
      for (int m = std::max(da, db); m <= std::min(cap, da + db); ++m)
        for (const Op& alpha : all_epis(m, da))
          for (const Op& beta : all_epis(m, db)) {
            bool monic = true;
            for (int i = 1; i <= m && monic; ++i)
              if (alpha.v[i] == alpha.v[i - 1] && beta.v[i] == beta.v[i - 1])
                monic = false;
            if (!monic) continue;
            int c = P.complex.add_cell(
                "(" + K.cells[a].name + "x" + L.cells[b].name + ";" +
                    alpha.str() + "," + beta.str() + ")",
                m);
            P.cell_ix[{a, b, alpha.v, beta.v}] = c;
            data.push_back({a, b, alpha, beta});
          }
    }
  for (std::size_t c = 0; c < data.size(); ++c) {
    const auto& cd = data[c];
    int m = P.complex.cells[c].dim;
    for (int i = 0; i <= m && m >= 1; ++i) {
      Op fa = compose_op(cd.alpha, Op::face(i, m));
      Op fb = compose_op(cd.beta, Op::face(i, m));
      Simplex xa = K.act({cd.a, Op::identity(K.cells[cd.a].dim)}, fa);
      Simplex xb = L.act({cd.b, Op::identity(L.cells[cd.b].dim)}, fb);
      P.complex.set_face(static_cast<int>(c), i, P.pair_simplex(xa, xb));
    }
  }
  P.proj_K.cell_image.resize(data.size());
  P.proj_L.cell_image.resize(data.size());
  for (std::size_t c = 0; c < data.size(); ++c) {
    P.proj_K.cell_image[c] = {data[c].a, data[c].alpha};
    P.proj_L.cell_image[c] = {data[c].b, data[c].beta};
  }
  if (K.truncation_cap >= 0 || L.truncation_cap >= 0 ||
      cap < std::max(0, K.dim()) + std::max(0, L.dim()))
    P.complex.truncation_cap = cap;
  return P;
}

CylinderSSet cylinder_sset(const FinSimplicialSet& K) {
  CylinderSSet C;
  C.prod = product(K, standard_simplex(1), std::max(0, K.dim()) + 1);
  for (int a = 0; a < K.num_cells(); ++a) {
    int d = K.cells[a].dim;
    C.at0.cell_image.push_back(
        C.prod.pair_simplex({a, Op::identity(d)}, {0, Op::constant(0, d, 0)}));
    C.at1.cell_image.push_back(
        C.prod.pair_simplex({a, Op::identity(d)}, {1, Op::constant(0, d, 0)}));
  }
  return C;
}

// --- maps ------------------------------------------------------------------------

SimplicialMap identity_map(const FinSimplicialSet& K) {
  SimplicialMap F;
  for (int c = 0; c < K.num_cells(); ++c)
    F.cell_image.push_back(K.cell_simplex(c));
  return F;
}

SimplicialMap compose_maps(const FinSimplicialSet& mid,
                           const FinSimplicialSet& tgt,
                           const SimplicialMap& g, const SimplicialMap& f) {
  (void)mid;
  SimplicialMap h;
  for (const Simplex& s : f.cell_image) h.cell_image.push_back(g.apply(tgt, s));
  return h;
}

bool is_simplicial_map(const FinSimplicialSet& src,
                       const FinSimplicialSet& tgt, const SimplicialMap& F,
                       std::string* why) {
  if (F.cell_image.size() != static_cast<std::size_t>(src.num_cells())) {
    if (why) *why = "size mismatch";
    return false;
  }
  for (int c = 0; c < src.num_cells(); ++c) {
    if (F.cell_image[c].dim() != src.cells[c].dim) {
      if (why) *why = "dimension mismatch at " + src.cells[c].name;
      return false;
    }
    int d = src.cells[c].dim;
    for (int i = 0; i <= d && d >= 1; ++i) {
      Simplex lhs = F.apply(tgt, src.cells[c].faces[i]);
      Simplex rhs = tgt.act(F.cell_image[c], Op::face(i, d));
      if (!(lhs == rhs)) {
        if (why)
          *why = "face " + std::to_string(i) + " of " + src.cells[c].name;
        return false;
      }
    }
  }
  return true;
}

bool is_injective_map(const FinSimplicialSet& src, const FinSimplicialSet& tgt,
                      const SimplicialMap& F) {
  (void)tgt;
  std::set<std::pair<int, std::vector<int>>> seen;
  for (int c = 0; c < src.num_cells(); ++c) {
    if (!F.cell_image[c].epi.is_identity()) return false;
    if (!seen.insert({F.cell_image[c].cell, F.cell_image[c].epi.v}).second)
      return false;
  }
  return true;
}

SimplicialMap join_map(const FinSimplicialSet& K1, const FinSimplicialSet& L1,
                       const FinSimplicialSet& K2, const FinSimplicialSet& L2,
                       const SimplicialMap& f, const SimplicialMap& g) {
  JoinSSet J1 = join(K1, L1);
  JoinSSet J2 = join(K2, L2);
  SimplicialMap h;
  h.cell_image.resize(J1.complex.num_cells());
  for (int a = 0; a < K1.num_cells(); ++a)
    h.cell_image[J1.cell_K(a)] = {J2.cell_K(f.cell_image[a].cell),
                                  f.cell_image[a].epi};
  for (int b = 0; b < L1.num_cells(); ++b)
    h.cell_image[J1.cell_L(b)] = {J2.cell_L(g.cell_image[b].cell),
                                  g.cell_image[b].epi};
  for (int a = 0; a < K1.num_cells(); ++a)
    for (int b = 0; b < L1.num_cells(); ++b)
      h.cell_image[J1.cell_pair(a, b)] =
          J2.pair_simplex(f.cell_image[a], g.cell_image[b]);
  return h;
}

SimplicialMap empty_partial(const FinSimplicialSet& src) {
  SimplicialMap F;
  F.cell_image.assign(src.num_cells(), Simplex{});
  return F;
}

std::vector<SimplicialMap> enumerate_maps(const FinSimplicialSet& src,
                                          const FinSimplicialSet& tgt,
                                          const SimplicialMap& partial,
                                          std::size_t limit) {
  std::vector<SimplicialMap> out;
  // order the free cells by dimension
  std::vector<int> order;
  for (int c = 0; c < src.num_cells(); ++c)
    if (partial.cell_image.empty() || partial.cell_image[c].cell < 0)
      order.push_back(c);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return src.cells[a].dim < src.cells[b].dim;
  });
  SimplicialMap F = partial;
  if (F.cell_image.empty()) F.cell_image.assign(src.num_cells(), Simplex{});

  // candidate images per dimension, precomputed
  std::map<int, std::vector<Simplex>> cand;
  auto candidates = [&](int d) -> const std::vector<Simplex>& {
    auto it = cand.find(d);
    if (it == cand.end()) it = cand.emplace(d, tgt.simplices(d)).first;
    return it->second;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (out.size() >= limit) return true;
    if (k == order.size()) {
      out.push_back(F);
      return out.size() >= limit;
    }
    int c = order[k];
    int d = src.cells[c].dim;
    for (const Simplex& s : candidates(d)) {
      bool ok = true;
      for (int i = 0; i <= d && d >= 1 && ok; ++i) {
        const Simplex& fc = src.cells[c].faces[i];
        if (F.cell_image[fc.cell].cell < 0) continue;  // free face: fine
        Simplex lhs = F.apply(tgt, fc);
        Simplex rhs = tgt.act(s, Op::face(i, d));
        if (!(lhs == rhs)) ok = false;
      }
      if (!ok) continue;
      F.cell_image[c] = s;
      if (rec(k + 1)) return true;
      F.cell_image[c] = Simplex{};
    }
    return false;
  };
  rec(0);
  return out;
}

// --- pushout ----------------------------------------------------------------------

PushoutSSet pushout_sset(const FinSimplicialSet& A, const FinSimplicialSet& B,
                         const FinSimplicialSet& K, const SimplicialMap& f,
                         const SimplicialMap& g) {
  if (!is_injective_map(A, B, f))
    throw Error("NonMonoAttach", "attaching map not injective");
  PushoutSSet P;
  FinSimplicialSet& X = P.complex;
  // K-cells first, then B-cells not hit by f
  std::vector<int> kmap(K.num_cells()), bmap(B.num_cells(), -1);
  std::vector<int> preimage(B.num_cells(), -1);
  for (int a = 0; a < A.num_cells(); ++a)
    preimage[f.cell_image[a].cell] = a;
  for (int c = 0; c < K.num_cells(); ++c)
    kmap[c] = X.add_cell(K.cells[c].name, K.cells[c].dim);
  for (int b = 0; b < B.num_cells(); ++b)
    if (preimage[b] < 0) bmap[b] = X.add_cell(B.cells[b].name, B.cells[b].dim);
  // a simplex of B, transported into the pushout
  std::function<Simplex(const Simplex&)> push_b = [&](const Simplex& s) {
    if (preimage[s.cell] >= 0) {
      Simplex in_k = g.apply(K, {preimage[s.cell], Op::identity(s.epi.tgt)});
      Simplex t = K.act(in_k, s.epi);
      return Simplex{kmap[t.cell], t.epi};
    }
    return Simplex{bmap[s.cell], s.epi};
  };
  for (int c = 0; c < K.num_cells(); ++c) {
    int d = K.cells[c].dim;
    for (int i = 0; i <= d && d >= 1; ++i) {
      Simplex fc = K.cells[c].faces[i];
      X.set_face(kmap[c], i, {kmap[fc.cell], fc.epi});
    }
  }
  for (int b = 0; b < B.num_cells(); ++b) {
    if (preimage[b] >= 0) continue;
    int d = B.cells[b].dim;
    for (int i = 0; i <= d && d >= 1; ++i)
      X.set_face(bmap[b], i, push_b(B.cells[b].faces[i]));
  }
  for (int b = 0; b < B.num_cells(); ++b)
    P.from_B.cell_image.push_back(push_b(B.cell_simplex(b)));
  for (int c = 0; c < K.num_cells(); ++c)
    P.from_K.cell_image.push_back({kmap[c], Op::identity(K.cells[c].dim)});
  return P;
}

// --- slices -----------------------------------------------------------------------

FinSimplicialSet slice_under(const FinSimplicialSet& K,
                             const FinSimplicialSet& M,
                             const SimplicialMap& X, int cap) {
  int kd = K.dim();
  if (M.truncation_cap >= 0 && std::max(kd, 0) + 1 + cap > M.truncation_cap)
    throw Error("CapExceeded", "slice needs simplices beyond target cap");
  // level m: maps K * Delta^m -> M extending X
  std::vector<JoinSSet> joins;
  std::vector<std::vector<SimplicialMap>> level(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    JoinSSet J = join(K, standard_simplex(m));
    SimplicialMap partial = empty_partial(J.complex);
    for (int c = 0; c < K.num_cells(); ++c)
      partial.cell_image[J.cell_K(c)] = X.cell_image[c];
    level[m] = enumerate_maps(J.complex, M, partial);
    joins.push_back(std::move(J));
  }
  // the operator action on levels: precompose with K * op
  auto act_level = [&](int m, const SimplicialMap& U, const Op& op) {
    // op: [m'] -> [m]
    int mp = op.src_dim();
    SimplicialMap dmap;  // Delta^{m'} -> Delta^m
    FinSimplicialSet Dm = standard_simplex(op.tgt);
    FinSimplicialSet Dmp = standard_simplex(mp);
    for (int c = 0; c < Dmp.num_cells(); ++c) {
      auto vs = Dmp.cell_vertices(c);
      // image simplex of Delta^m: vertices op(vs)
      Op sub;
      sub.tgt = op.tgt;
      for (int v : vs) sub.v.push_back(op.v[v]);
      auto [mu, eps] = epi_mono(sub);
      std::vector<int> target_vs(mu.v.begin(), mu.v.end());
      auto tc = cell_by_vertices(Dm, target_vs);
      dmap.cell_image.push_back({*tc, eps});
    }
    SimplicialMap jm = join_map(K, Dmp, K, Dm, identity_map(K), dmap);
    (void)m;
    return compose_maps(joins[op.tgt].complex, M, U, jm);
  };
  auto find_level = [&](int m, const SimplicialMap& U) -> int {
    for (std::size_t i = 0; i < level[m].size(); ++i)
      if (level[m][i].cell_image == U.cell_image) return static_cast<int>(i);
    throw Error("Slice", "face not found at level " + std::to_string(m));
  };
  // assemble the cell complex: nondegenerate levels become cells
  FinSimplicialSet S;
  S.truncation_cap = cap;
  std::vector<std::vector<int>> cell_id(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    cell_id[m].assign(level[m].size(), -1);
    for (std::size_t i = 0; i < level[m].size(); ++i) {
      // U degenerate iff U == (U . d_j) . s_j for some j
      bool degen = false;
      for (int j = 0; j < m && !degen; ++j) {
        SimplicialMap dj = act_level(m, level[m][i], Op::face(j, m));
        SimplicialMap sj = act_level(m - 1, dj, Op::degeneracy(j, m - 1));
        if (sj.cell_image == level[m][i].cell_image) degen = true;
      }
      if (!degen)
        cell_id[m][i] = S.add_cell("s" + std::to_string(m) + "." +
                                       std::to_string(i),
                                   m);
    }
  }
  // faces: EZ-factorize the set-level faces
  std::function<Simplex(int, int)> setlevel_simplex = [&](int m,
                                                          int i) -> Simplex {
    if (cell_id[m][i] >= 0) return {cell_id[m][i], Op::identity(m)};
    for (int j = 0; j < m; ++j) {
      SimplicialMap dj = act_level(m, level[m][i], Op::face(j, m));
      SimplicialMap sj = act_level(m - 1, dj, Op::degeneracy(j, m - 1));
      if (sj.cell_image == level[m][i].cell_image) {
        Simplex inner = setlevel_simplex(m - 1, find_level(m - 1, dj));
        return {inner.cell, compose_op(inner.epi, Op::degeneracy(j, m - 1))};
      }
    }
    throw Error("Slice", "EZ factorization failed");
  };
  for (int m = 1; m <= cap; ++m)
    for (std::size_t i = 0; i < level[m].size(); ++i) {
      if (cell_id[m][i] < 0) continue;
      for (int j = 0; j <= m; ++j) {
        SimplicialMap dj = act_level(m, level[m][i], Op::face(j, m));
        S.set_face(cell_id[m][i], j,
                   setlevel_simplex(m - 1, find_level(m - 1, dj)));
      }
    }
  return S;
}

// --- generalized inner horns ---------------------------------------------------

namespace {

bool is_interval(const std::set<int>& s) {
  if (s.empty()) return true;
  return *s.rbegin() - *s.begin() + 1 == static_cast<int>(s.size());
}

// complement of `a` within the ordered set `universe`
std::set<int> complement_in(const std::vector<int>& universe,
                            const std::set<int>& a) {
  std::set<int> out;
  for (int x : universe)
    if (!a.count(x)) out.insert(x);
  return out;
}

// is `s` an interval within the ordered universe (consecutive positions)?
bool is_interval_in(const std::vector<int>& universe, const std::set<int>& s) {
  if (s.empty()) return true;
  std::vector<int> pos;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (s.count(universe[i])) pos.push_back(static_cast<int>(i));
  return pos.back() - pos.front() + 1 == static_cast<int>(pos.size());
}

// emit the decomposition of Lambda^{V,A} >-> Delta^V into inner-horn
// pushouts (V an ordered vertex set, A nonempty, complement-in-V of A not
// an interval)
void decompose_to_full(const std::vector<int>& V, const std::set<int>& A,
                       std::vector<HornStep>& out);

// emit the decomposition of Lambda^{V,B} >-> Lambda^{V,A}
void decompose_between(const std::vector<int>& V, const std::set<int>& A,
                       const std::set<int>& B, std::vector<HornStep>& out) {
  std::set<int> S = B;
  while (S != A) {
    // pick j in S \ A such that complement-of-S stays a non-interval
    // within V minus j
    int pick = -1;
    for (int j : S) {
      if (A.count(j)) continue;
      std::vector<int> Vp;
      for (int x : V)
        if (x != j) Vp.push_back(x);
      if (!is_interval_in(Vp, complement_in(V, S))) {
        pick = j;
        break;
      }
    }
    if (pick < 0)
      throw Error("NotInner", "no admissible face to peel");
    std::vector<int> Vp;
    for (int x : V)
      if (x != pick) Vp.push_back(x);
    std::set<int> Ap = S;
    Ap.erase(pick);
    decompose_to_full(Vp, Ap, out);
    S.erase(pick);
  }
}

void decompose_to_full(const std::vector<int>& V, const std::set<int>& A,
                       std::vector<HornStep>& out) {
  int d = static_cast<int>(V.size()) - 1;
  if (A.size() == 1) {
    int a = *A.begin();
    int idx = static_cast<int>(
        std::lower_bound(V.begin(), V.end(), a) - V.begin());
    if (idx <= 0 || idx >= d)
      throw Error("NotInner", "outer horn reached");
    out.push_back({d, idx, V});
    return;
  }
  // choose an inner witness i in A: some a with elements of V \ A on both
  // sides (exists because the complement is not an interval in V)
  std::set<int> comp = complement_in(V, A);
  int chosen = -1;
  for (int a : A) {
    bool lower = false, upper = false;
    for (int x : comp) {
      if (x < a) lower = true;
      if (x > a) upper = true;
    }
    if (lower && upper) {
      chosen = a;
      break;
    }
  }
  if (chosen < 0) throw Error("NotInner", "no inner witness");
  decompose_between(V, {chosen}, A, out);
  decompose_to_full(V, {chosen}, out);
}

}  // namespace

std::vector<HornStep> decompose_generalized_horn(int m, const std::set<int>& A,
                                                 const std::set<int>& B) {
  std::vector<int> universe(m + 1);
  std::iota(universe.begin(), universe.end(), 0);
  for (const auto* s : {&A, &B})
    if (is_interval(complement_in(universe, *s)))
      throw Error("NotInner", "complement is an interval");
  for (int x : A)
    if (!B.count(x)) throw Error("NotInner", "A not a subset of B");
  std::vector<HornStep> out;
  decompose_between(universe, A, B, out);
  return out;
}

std::set<std::vector<int>> vertex_sets(const FinSimplicialSet& X) {
  std::set<std::vector<int>> out;
  for (int c = 0; c < X.num_cells(); ++c) {
    auto vs = X.cell_vertices(c);
    // identify vertices by their cell names when X lives inside a simplex
    std::vector<int> named;
    for (int v : vs) named.push_back(std::stoi(X.cells[v].name));
    out.insert(named);
  }
  return out;
}

FinSimplicialSet replay_horn_steps(int m, const std::set<int>& B,
                                   const std::vector<HornStep>& steps) {
  FinSimplicialSet cur = horn(m, B);
  for (const auto& st : steps) {
    if (st.inner_index <= 0 || st.inner_index >= st.dim)
      throw Error("NotInner", "step index not inner");
    FinSimplicialSet H = horn(st.dim, {st.inner_index});
    FinSimplicialSet D = standard_simplex(st.dim);
    // attaching map: horn cells -> current complex, via st.vertices
    SimplicialMap att;
    for (int c = 0; c < H.num_cells(); ++c) {
      std::vector<int> vs;
      for (int v : H.cell_vertices(c)) vs.push_back(std::stoi(H.cells[v].name));
      std::vector<int> target_vs;
      for (int v : vs) target_vs.push_back(st.vertices[v]);
      // find current cell with those named vertices
      int found = -1;
      for (int cc = 0; cc < cur.num_cells(); ++cc) {
        std::vector<int> named;
        for (int v : cur.cell_vertices(cc))
          named.push_back(std::stoi(cur.cells[v].name));
        if (named == target_vs) {
          found = cc;
          break;
        }
      }
      if (found < 0) throw Error("Replay", "attaching face missing");
      att.cell_image.push_back(cur.cell_simplex(found));
    }
    if (!is_simplicial_map(H, cur, att))
      throw Error("Replay", "attaching map not simplicial");
    if (!is_injective_map(H, cur, att))
      throw Error("Replay", "attaching map not injective");
    // inclusion horn -> simplex
    SimplicialMap incl;
    for (int c = 0; c < H.num_cells(); ++c) {
      auto vs = H.cell_vertices(c);
      std::vector<int> named;
      for (int v : vs) named.push_back(std::stoi(H.cells[v].name));
      incl.cell_image.push_back(D.cell_simplex(*cell_by_vertices(D, named)));
    }
    auto po = pushout_sset(H, D, cur, incl, att);
    // rename the two new cells by their vertex images so future lookups work
    FinSimplicialSet next = po.complex;
    for (int c = 0; c < next.num_cells(); ++c) {
      if (c < cur.num_cells()) continue;
      // cells carried over from D: rename by mapped vertices
      std::vector<int> named;
      for (int v : next.cell_vertices(c)) named.push_back(std::stoi(next.cells[v].name));
      next.cells[c].name = verts_name(named);
    }
    cur = next;
  }
  return cur;
}

// --- right anodyne witnesses -----------------------------------------------------

namespace {

// greedy right-horn filling from `present` toward `all` within complex X;
// candidates are the nondegenerate simplices of X
RightAnodyneWitness greedy_right_horns(const FinSimplicialSet& X,
                                       std::set<int> present) {
  RightAnodyneWitness W;
  auto all_present = [&]() {
    return static_cast<int>(present.size()) == X.num_cells();
  };
  bool progress = true;
  while (!all_present() && progress) {
    progress = false;
    for (int c = 0; c < X.num_cells() && !progress; ++c) {
      if (present.count(c)) continue;
      int d = X.cells[c].dim;
      if (d == 0) continue;
      // find i with 0 < i <= d, face i absent-nondegenerate, others present
      for (int i = d; i >= 1 && !progress; --i) {
        bool ok = true;
        int missing = -1;
        for (int j = 0; j <= d; ++j) {
          const Simplex& f = X.cells[c].faces[j];
          bool have = !f.epi.is_identity() || present.count(f.cell);
          if (j == i) {
            if (have) ok = false;
            if (f.epi.is_identity()) missing = f.cell;
          } else if (!have) {
            ok = false;
          }
        }
        if (ok && missing >= 0) {
          present.insert(c);
          present.insert(missing);
          W.steps.push_back({X.cell_simplex(c), i});
          progress = true;
        }
      }
    }
  }
  W.verified = all_present();
  if (!W.verified) W.note = "greedy right-horn filling stalled";
  return W;
}

}  // namespace

RightAnodyneWitness right_anodyne_cylinder_witness(const FinSimplicialSet& K) {
  CylinderSSet cyl = cylinder_sset(K);
  std::set<int> present;
  for (int a = 0; a < K.num_cells(); ++a)
    present.insert(cyl.at1.cell_image[a].cell);
  return greedy_right_horns(cyl.prod.complex, std::move(present));
}

// --- marked simplicial complexes ---------------------------------------------

std::vector<int> MarkedComplex::cell_chain(int c) const {
  std::vector<int> out;
  for (int v : complex.cell_vertices(c)) out.push_back(vertex_obj[v]);
  return out;
}

std::vector<std::string> MarkedComplex::violated_laws() const {
  std::vector<std::string> out;
  // injective on simplices: distinct cells carry distinct chains
  std::set<std::vector<int>> seen;
  for (int c = 0; c < complex.num_cells(); ++c) {
    auto ch = cell_chain(c);
    if (!seen.insert(ch).second)
      out.push_back("two cells share the chain of " + complex.cells[c].name);
    // chains must be nondegenerate: consecutive entries distinct and linked
    for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
      if (ch[i] == ch[i + 1])
        out.push_back("degenerate chain at " + complex.cells[c].name);
      else if (poset.cat.hom(ch[i], ch[i + 1]).empty())
        out.push_back("chain not composable at " + complex.cells[c].name);
    }
  }
  return out;
}

MarkedComplex marked_nerve(const fincat::HomotopicalCategory& P, int cap) {
  MarkedComplex M;
  M.poset = P;
  M.complex = nerve(P.cat, cap);
  // the first cells of a nerve are the vertices, in object order
  M.vertex_obj.resize(P.cat.num_objects());
  for (int o = 0; o < P.cat.num_objects(); ++o) M.vertex_obj[o] = o;
  return M;
}

MarkedComplex marked_simplex_subcomplex(
    int m, const FinSimplicialSet& sub,
    const std::set<std::pair<int, int>>& marked_edges) {
  MarkedComplex M;
  std::vector<std::string> objs;
  for (int i = 0; i <= m; ++i) objs.push_back(std::to_string(i));
  auto cat = fincat::FinCategory::poset(objs,
                                        [](int a, int b) { return a <= b; });
  std::vector<char> weq(cat.num_morphisms(), 0);
  for (int mm = 0; mm < cat.num_morphisms(); ++mm) {
    int a = cat.morphisms[mm].src, b = cat.morphisms[mm].tgt;
    if (a == b || marked_edges.count({a, b})) weq[mm] = 1;
  }
  weq = fincat::two_out_of_six_closure(cat, weq);
  M.poset = {std::move(cat), std::move(weq)};
  M.complex = sub;
  M.vertex_obj.assign(sub.num_cells(), -1);
  for (int c = 0; c < sub.num_cells(); ++c)
    if (sub.cells[c].dim == 0) M.vertex_obj[c] = std::stoi(sub.cells[c].name);
  return M;
}

RightAnodyneWitness right_anodyne_simplex_inclusion(const Op& mu) {
  RightAnodyneWitness W;
  if (!mu.is_injective()) {
    W.note = "not an inclusion";
    return W;
  }
  if (mu.v.back() != mu.tgt) {
    W.note = "final vertex not preserved; no right-anodyne witness emitted";
    return W;
  }
  FinSimplicialSet D = standard_simplex(mu.tgt);
  std::set<int> present;
  // the image face and all its subfaces
  std::vector<int> img(mu.v.begin(), mu.v.end());
  for (int c = 0; c < D.num_cells(); ++c) {
    auto vs = D.cell_vertices(c);
    std::vector<int> named;
    for (int v : vs) named.push_back(std::stoi(D.cells[v].name));
    if (std::includes(img.begin(), img.end(), named.begin(), named.end()))
      present.insert(c);
  }
  return greedy_right_horns(D, std::move(present));
}

}  // namespace framecat::simplicial
