#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "framecat/fincat.hpp"

// Finite simplicial sets presented by their nondegenerate cells: each cell
// stores, per elementary face, a target simplex encoded as
// (cell, degeneracy operator).  Degenerate simplices are derived on demand,
// never stored, so joins and nerves stay finite to present.

namespace framecat::simplicial {

using fincat::Error;

// A monotone map [src_dim] -> [tgt_dim].
struct Op {
  int tgt = 0;            // target dimension n
  std::vector<int> v;     // values, size = source dimension + 1

  int src_dim() const { return static_cast<int>(v.size()) - 1; }
  int tgt_dim() const { return tgt; }
  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;

  static Op identity(int n);
  static Op face(int i, int n);        // [n-1] -> [n], omits i
  static Op degeneracy(int j, int n);  // [n+1] -> [n], repeats j
  static Op constant(int value, int src_dim, int n);

  auto operator<=>(const Op&) const = default;
  std::string str() const;  // value sequence, e.g. "0012"
};

Op compose_op(const Op& g, const Op& f);             // g . f
std::pair<Op, Op> epi_mono(const Op& f);             // f = mono . epi
Op join_op(const Op& a, const Op& b);                // [p]*[q] -> [m]*[n]
std::vector<Op> all_epis(int m, int d);              // [m] ->> [d]
std::vector<Op> all_monos(int d, int m);             // [d] >-> [m]
std::vector<Op> all_ops(int m, int n);

// A (possibly degenerate) simplex: cell . epi.
struct Simplex {
  int cell = -1;
  Op epi;
  int dim() const { return epi.src_dim(); }
  auto operator<=>(const Simplex&) const = default;
};

class FinSimplicialSet {
 public:
  struct Cell {
    std::string name;
    int dim = 0;
    std::vector<Simplex> faces;  // faces[i] = cell . face(i, dim)
  };
  std::vector<Cell> cells;
  // If >= 0 the object is a truncation: simplices above this dimension are
  // not faithful and queries needing them must fail rather than lie.
  int truncation_cap = -1;

  int num_cells() const { return static_cast<int>(cells.size()); }
  int dim() const;

  int add_cell(const std::string& name, int d);
  void set_face(int cell, int i, Simplex s) { cells[cell].faces[i] = s; }

  Simplex cell_simplex(int c) const { return {c, Op::identity(cells[c].dim)}; }
  // Right action x . op.
  Simplex act(const Simplex& x, const Op& op) const;
  Simplex face_of(const Simplex& x, int i) const {
    return act(x, Op::face(i, x.dim()));
  }

  // All simplices in dimension d (cell, epi) in canonical order.
  std::vector<Simplex> simplices(int d) const;
  std::vector<int> cells_of_dim(int d) const;

  // Vertex set of a cell (meaningful for complexes embedded in a simplex
  // or a nerve where cells are determined by their vertices).
  std::vector<int> cell_vertices(int c) const;

  // Simplicial identities on stored faces, checked on all cells.
  std::vector<std::string> check_identities() const;
};

// x = x_sharp . x_flat with x_sharp nondegenerate: returns (cell, epi).
// (The Simplex encoding is this factorization; provided as the named
// operation for set-level callers.)
Simplex ez_factorize(const FinSimplicialSet& X, const Simplex& x);

struct SimplicialMap {
  std::vector<Simplex> cell_image;  // per nondegenerate cell of the source

  Simplex apply(const FinSimplicialSet& tgt, const Simplex& x) const {
    return tgt.act(cell_image[x.cell], x.epi);
  }
};

// --- builders ----------------------------------------------------------------

FinSimplicialSet standard_simplex(int m);
FinSimplicialSet boundary(int m);
FinSimplicialSet empty_sset();
// Generalized horn: generated by the codimension-1 faces opposite the
// vertices NOT in A.  Throws EmptyHorn if A = [m].
FinSimplicialSet horn(int m, const std::set<int>& A);
FinSimplicialSet inner_horn(int m, int i);

// In a horn/boundary/simplex complex, the cell with a given vertex set.
std::optional<int> cell_by_vertices(const FinSimplicialSet& X,
                                    const std::vector<int>& verts);

// Nerve truncated at `cap`: cells are composable chains without identities.
FinSimplicialSet nerve(const fincat::FinCategory& C, int cap);
// Truncated nerve of the free-living isomorphism (two nondegenerate cells
// per dimension).
FinSimplicialSet ne1(int cap);

// Join K * L.  Cells are laid out as: cells of K, cells of L, then pairs
// (a,b) at index k_cells + l_cells + a*l_cells + b.
struct JoinSSet {
  FinSimplicialSet complex;
  int k_cells = 0, l_cells = 0;
  int cell_K(int a) const { return a; }
  int cell_L(int b) const { return k_cells + b; }
  int cell_pair(int a, int b) const {
    return k_cells + l_cells + a * l_cells + b;
  }
  // join of simplices (x in K, y in L)
  Simplex pair_simplex(const Simplex& x, const Simplex& y) const;
};
JoinSSet join(const FinSimplicialSet& K, const FinSimplicialSet& L);

FinSimplicialSet disjoint_union(const FinSimplicialSet& K,
                                const FinSimplicialSet& L);

// Binary product, cells enumerated up to dimension `cap` (dim K + dim L
// when cap < 0).
struct ProductSSet {
  FinSimplicialSet complex;
  FinSimplicialSet K, L;  // the factors
  SimplicialMap proj_K, proj_L;
  std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, int>
      cell_ix;  // (cellK, cellL, epiK values, epiL values) -> cell
  // product of same-dimension simplices
  Simplex pair_simplex(const Simplex& x, const Simplex& y) const;
};
ProductSSet product(const FinSimplicialSet& K, const FinSimplicialSet& L,
                    int cap = -1);

// K x Delta^1 with the two end inclusions.
struct CylinderSSet {
  ProductSSet prod;
  SimplicialMap at0, at1;  // K -> K x Delta^1
};
CylinderSSet cylinder_sset(const FinSimplicialSet& K);

// --- maps --------------------------------------------------------------------

SimplicialMap identity_map(const FinSimplicialSet& K);
SimplicialMap compose_maps(const FinSimplicialSet& mid,
                           const FinSimplicialSet& tgt,
                           const SimplicialMap& g, const SimplicialMap& f);
bool is_simplicial_map(const FinSimplicialSet& src,
                       const FinSimplicialSet& tgt, const SimplicialMap& F,
                       std::string* why = nullptr);
bool is_injective_map(const FinSimplicialSet& src, const FinSimplicialSet& tgt,
                      const SimplicialMap& F);

// Functorial join of maps.
SimplicialMap join_map(const FinSimplicialSet& K1, const FinSimplicialSet& L1,
                       const FinSimplicialSet& K2, const FinSimplicialSet& L2,
                       const SimplicialMap& f, const SimplicialMap& g);

// All extensions of a partial assignment (cells with image.cell < 0 are
// free) to total simplicial maps src -> tgt, backtracking in dimension
// order; stops after `limit`.
std::vector<SimplicialMap> enumerate_maps(const FinSimplicialSet& src,
                                          const FinSimplicialSet& tgt,
                                          const SimplicialMap& partial,
                                          std::size_t limit = SIZE_MAX);
SimplicialMap empty_partial(const FinSimplicialSet& src);

// --- colimits of simplicial sets ----------------------------------------------

struct PushoutSSet {
  FinSimplicialSet complex;
  SimplicialMap from_B;  // B -> P
  SimplicialMap from_K;  // K -> P
};

// Pushout of  K <-g- A -f-> B  with f injective (NonMonoAttach otherwise).
PushoutSSet pushout_sset(const FinSimplicialSet& A, const FinSimplicialSet& B,
                         const FinSimplicialSet& K, const SimplicialMap& f,
                         const SimplicialMap& g);

// --- slices -------------------------------------------------------------------

// Slice of M under X: m-simplices are maps K * Delta^m -> M restricting to
// X on K.  Built up to dimension `cap`; throws CapExceeded when M is a
// truncation too shallow to answer.
FinSimplicialSet slice_under(const FinSimplicialSet& K,
                             const FinSimplicialSet& M,
                             const SimplicialMap& X, int cap);

// --- generalized inner horns ---------------------------------------------------

struct HornStep {
  int dim = 0;                 // dimension of the attached inner horn filler
  int inner_index = 0;         // i with 0 < i < dim
  std::vector<int> vertices;   // attached simplex, as vertices of [m]
};

// Decomposition of horn(m,B) >-> horn(m,A) (A subset of B, neither
// complement an interval) into pushouts of inner horn inclusions.
// Throws NotInner if a complement is an interval.
std::vector<HornStep> decompose_generalized_horn(int m, const std::set<int>& A,
                                                 const std::set<int>& B);

// Replays the steps from horn(m,B) via pushout_sset and returns the final
// complex; each attachment is validated to be injective.
FinSimplicialSet replay_horn_steps(int m, const std::set<int>& B,
                                   const std::vector<HornStep>& steps);

// Cell sets as sorted vertex lists: the comparison oracle used by replay
// equality checks (subcomplexes of a simplex are determined by them).
std::set<std::vector<int>> vertex_sets(const FinSimplicialSet& X);

// Right-anodyne witnesses: an ordered list of right-horn fillings
// (filler simplex in the ambient complex, horn index 0 < i <= dim) whose
// replay exhibits the inclusion as a composite of right-horn pushouts.
struct RightAnodyneWitness {
  std::vector<std::pair<Simplex, int>> steps;
  bool verified = false;
  std::string note;
};

// Witness for K x {1} >-> K x Delta^1.
RightAnodyneWitness right_anodyne_cylinder_witness(const FinSimplicialSet& K);

// Witness for a final-vertex-preserving inclusion mu: Delta^a >-> Delta^b
// (mu(a) = b); empty unverified witness with a note otherwise.
RightAnodyneWitness right_anodyne_simplex_inclusion(const Op& mu);

// --- marked simplicial complexes -------------------------------------------------

// A simplicial set embedded in the nerve of a homotopical thin category
// ("poset" P): each cell carries its chain of P-objects and markings are
// inherited from the weak equivalences of P.
struct MarkedComplex {
  fincat::HomotopicalCategory poset;  // thin
  FinSimplicialSet complex;
  std::vector<int> vertex_obj;  // vertex cell of `complex` -> object of P

  std::vector<int> cell_chain(int c) const;  // P-objects along the cell
  std::vector<std::string> violated_laws() const;
};

// The nerve of a homotopical thin category as a marked complex.
MarkedComplex marked_nerve(const fincat::HomotopicalCategory& P, int cap);
// A subcomplex of a simplex as a marked complex over the homotopical
// poset [m] with the given marked arrows (pairs a < b).
MarkedComplex marked_simplex_subcomplex(
    int m, const FinSimplicialSet& sub,
    const std::set<std::pair<int, int>>& marked_edges);

}  // namespace framecat::simplicial
