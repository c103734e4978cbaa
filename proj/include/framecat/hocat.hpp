#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "framecat/cofcat.hpp"
#include "framecat/fincat.hpp"

// Left homotopy, cylinders, the calculus of left fractions, homotopy
// categories, and an independent localization oracle.

namespace framecat::hocat {

using cofcat::CofCategory;
using fincat::Error;
using fincat::FinCategory;
using fincat::Functor;

struct Cylinder {
  int obj = -1;         // X
  int coprod = -1;      // X u X
  int inj0 = -1, inj1 = -1;
  int cyl = -1;         // IX
  int insertion = -1;   // X u X >-> IX   (cofibration)
  int projection = -1;  // IX -~-> X      (weak equivalence)
  int d0 = -1, d1 = -1; // the two structure morphisms X -> IX
};

// All cylinders on X (all factorizations of the codiagonal through a
// cofibration followed by a weak equivalence).  NoCoproduct if X u X is
// missing.
std::vector<Cylinder> enumerate_cylinders(const CofCategory& C, int X);

struct HomotopyWitness {
  Cylinder cyl;
  int post = -1;  // acyclic cofibration Y -~> Z
  int H = -1;     // IX -> Z
};

bool left_homotopic(const CofCategory& C, int f, int g,
                    HomotopyWitness* witness = nullptr);

struct Fraction {
  int f = -1;  // X -> Y~
  int s = -1;  // Y -~> Y~ (weak equivalence)
};

struct HoCategory {
  FinCategory cat;        // objects = objects of C
  std::vector<int> loc;   // localization functor on morphisms
  // fraction representatives: per Ho morphism
  std::vector<Fraction> rep;
};

// Homotopy category by the calculus of left fractions.
// CompositionSearchFailed if no composition square is found.
HoCategory homotopy_category(const CofCategory& C);

// Fraction equality in Ho C (the (2)-relation closed transitively).
bool fractions_equal(const CofCategory& C, const Fraction& a,
                     const Fraction& b);

// Independent oracle: the free category on C plus formal reversals of W,
// modulo composition, identity and cancellation relations, decided by
// bounded coset-style enumeration.  Throws BoundTooSmall if `bound`
// element slots do not suffice.
struct OracleResult {
  FinCategory cat;
  std::vector<int> loc;  // C morphisms -> oracle morphisms
};
OracleResult oracle_localization(const FinCategory& C,
                                 const std::vector<char>& W, int bound);

// Isomorphism of two finitely presented categories over the same object
// set, required to be the identity on objects; returns the hom-bijection
// as a morphism map if one exists.
std::optional<std::vector<int>> category_iso_over_objects(
    const FinCategory& A, const FinCategory& B);

// Exact functor inducing an equivalence of homotopy categories?
bool is_weq_functor(const CofCategory& C, const CofCategory& D,
                    const Functor& F);

// Waldhausen-style approximation properties (App1) and (App2).
bool app1(const CofCategory& C, const CofCategory& D, const Functor& F);
bool app2(const CofCategory& C, const CofCategory& D, const Functor& F);

// Homotopy extension transport: given a cofibration i: A >-> B and
// f: A -> X, g: B -> X with g.i left homotopic to f, produce a weak
// equivalence s: X -> X^ and g~: B -> X^ with g~ . i = s . f and
// g~ left homotopic to s . g.  Throws SearchFailed when the recipe's
// ingredients cannot be found.
struct HepResult {
  int s = -1;
  int g_tilde = -1;
};
HepResult hep_transport(const CofCategory& C, int i, int f, int g);

}  // namespace framecat::hocat
