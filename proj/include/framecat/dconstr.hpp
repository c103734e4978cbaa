#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "framecat/fincat.hpp"
#include "framecat/simplicial.hpp"

// The D and Sd constructions and the finite filtration machinery: the
// direct homotopical categories filt{k,K} truncating D(K), with degree
// functions and generated (or created) weak equivalences, plus the
// retraction/homotopy witnesses for the contractibility lemmas.

namespace framecat::dconstr {

using fincat::Error;
using fincat::FinCategory;
using fincat::Functor;
using simplicial::FinSimplicialSet;
using simplicial::MarkedComplex;
using simplicial::Op;
using simplicial::Simplex;
using simplicial::SimplicialMap;

// Monotone surjections [2k-m] ->> [m] with all fibers of odd cardinality.
// Throws Empty when 2k < m (the domain does not exist).
std::vector<Op> b_set(int k, int m);

// A_{k,m} = B_{k,m} u  U_i  d_i A_{k,m-1}, objects of D[m] as value
// sequences (canonically sorted, deduplicated).
std::vector<Op> a_set(int k, int m);

// seq in filt{k,[m]}: the sieve generated by A_{k,m} (monotone sequences
// embed iff they embed as multisets).
bool in_filt(const Op& seq, int k);

// independent counting oracle: compositions of n into p odd parts
long odd_composition_count(int n, int p);

// --- the truncated D construction -----------------------------------------------

struct FiltCategory {
  int level = 0;
  std::shared_ptr<const FinSimplicialSet> base;
  std::vector<Simplex> objects;  // simplices of the base in the sieve
  FinCategory cat;
  std::vector<Op> mor_op;  // morphism -> the injective operator
  std::vector<char> weq;
  std::vector<int> degree;  // = simplex dimension

  fincat::DirectHomotopical dh() const { return {cat, weq, degree}; }
  int object_index(const Simplex& s) const;
  int morphism_index(int src_obj, int tgt_obj, const Op& op) const;
  // value sequence of an object over the vertex cells of the base
  std::vector<int> object_sequence(int obj) const;

 private:
  friend FiltCategory build_filt(std::shared_ptr<const FinSimplicialSet>, int);
  friend FiltCategory build_filt_marked(const MarkedComplex&, int);
  std::map<std::pair<int, Op>, int> obj_ix_;
  std::map<std::tuple<int, int, std::vector<int>>, int> mor_ix_;
};

// filt{k,K} for a plain finite simplicial set: weak equivalences are the
// 2-out-of-6 closure of the generating set, computed inside the truncation.
FiltCategory build_filt(std::shared_ptr<const FinSimplicialSet> K, int k);

// filt{k,K} for a marked simplicial complex: weak equivalences are created
// by the underlying homotopical thin category.
FiltCategory build_filt_marked(const MarkedComplex& M, int k);

// the generating weak equivalences (before closure)
std::vector<char> generating_weqs(const FiltCategory& F);

// Functor filt{k,K} -> filt{k,L} induced by a simplicial map; throws if
// some image leaves the target sieve (would contradict the filtration
// functoriality lemma).
Functor transport(const FiltCategory& FK, const FiltCategory& FL,
                  const SimplicialMap& f);

// --- barycentric subdivision -------------------------------------------------------

struct SdPoset {
  fincat::HomotopicalCategory cat;  // poset of nondegenerate simplices
  std::vector<int> object_cell;     // Sd object -> cell of the complex
};

// Sd of a marked complex: nondegenerate simplices ordered by face
// inclusion, an inclusion marked iff max A -> max B is marked in P.
SdPoset build_sd(const MarkedComplex& M);

// --- retraction/homotopy witnesses --------------------------------------------------

enum class WitnessKind { DmM, E1, ConeFilt, DSd };

struct WitnessReport {
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Check> checks;
  bool all_pass() const;
  std::string summary() const;
};

struct WitnessParams {
  int m = 0;                            // for DmM
  std::optional<MarkedComplex> marked;  // for DSd
};

// Verifies the explicit contraction data at working level k inside the
// ambient truncation at level k2 (the insertion functors lengthen
// sequences, so k2 must be large enough; LevelTooSmall otherwise).
WitnessReport verify_retraction_witness(WitnessKind kind,
                                        const WitnessParams& params, int k,
                                        int k2);

}  // namespace framecat::dconstr
