#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Finite categories with explicit composition, homotopical and direct
// structures, functors, sieves, latching categories and colimit search.
// Everything is index-based: objects and morphisms are referred to by their
// position in the declaration order, which also fixes all enumeration
// orders (results are deterministic).

namespace framecat::fincat {

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct Mor {
  std::string name;
  int src = -1;
  int tgt = -1;
};

class FinCategory {
 public:
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::vector<int> identity;  // object -> morphism index

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }

  bool is_identity(int m) const { return identity[morphisms[m].src] == m; }

  // g after f; throws if not composable.
  int compose(int g, int f) const;
  bool composable(int g, int f) const {
    return morphisms[f].tgt == morphisms[g].src;
  }

  // All morphisms a -> b in declaration order.
  const std::vector<int>& hom(int a, int b) const;
  // All morphisms out of a.
  const std::vector<int>& out_of(int a) const { return out_[a]; }

  bool is_isomorphism(int m) const;
  std::optional<int> inverse(int m) const;

  // Builder interface. Objects and morphisms are added first, identities
  // and composites declared afterwards, then finalize() checks the laws.
  int add_object(const std::string& name);
  int add_morphism(const std::string& name, int src, int tgt);
  void set_identity(int obj, int mor) { identity_decl_.emplace_back(obj, mor); }
  void set_composite(int g, int f, int gf);

  // Checks totality of composition, unit and associativity laws.
  // Returns the list of violations (empty = valid).
  struct Violation {
    std::string kind;  // NonAssociative | MissingIdentity | IllTypedComposite
    std::string detail;
  };
  // check_laws=false skips the O(n^3) law audit for categories whose
  // composition is associative by construction (posets, operator categories).
  std::vector<Violation> finalize(bool check_laws = true);

  // Convenience for thin categories: at most one morphism between any two
  // objects, composition is forced.
  static FinCategory poset(const std::vector<std::string>& objs,
                           const std::function<bool(int, int)>& leq);

 private:
  std::vector<std::pair<int, int>> identity_decl_;
  // comp_[g] = sorted vector of (f, g.f)
  std::vector<std::vector<std::pair<int, int>>> comp_;
  std::vector<std::vector<int>> hom_;  // hom_[a*n+b]
  std::vector<std::vector<int>> out_;  // morphisms with source a
  friend FinCategory product_category(const FinCategory&, const FinCategory&);
};

// --- raw descriptions (file ingestion) ------------------------------------

struct RawCategory {
  std::vector<std::string> objects;
  struct RawMor {
    std::string name, src, tgt;
  };
  std::vector<RawMor> morphisms;
  std::vector<std::array<std::string, 3>> composition;  // (g, f, gf) by name
  std::vector<std::string> identities;                  // morphism names
  std::vector<std::string> weq, cof;                    // optional markings
  std::map<std::string, int> degree;                    // optional
};

struct ValidationResult {
  std::optional<FinCategory> category;
  std::vector<FinCategory::Violation> violations;
  bool ok() const { return category.has_value(); }
};

ValidationResult validate_category(const RawCategory& raw);

// --- homotopical / direct structures ---------------------------------------

struct HomotopicalCategory {
  FinCategory cat;
  std::vector<char> weq;  // indexed by morphism

  bool is_weq(int m) const { return weq[m] != 0; }
  // identities in weq, closed under composition, 2 out of 6.
  std::vector<std::string> violated_laws() const;
};

struct DirectCategory {
  FinCategory cat;
  std::vector<int> degree;  // indexed by object

  // degree functorial and identity-reflecting
  std::vector<std::string> violated_laws() const;
};

// A finite direct homotopical category: the index shape for Reedy theory.
struct DirectHomotopical {
  FinCategory cat;
  std::vector<char> weq;
  std::vector<int> degree;

  bool is_weq(int m) const { return weq[m] != 0; }
  HomotopicalCategory homotopical() const { return {cat, weq}; }
  DirectCategory direct() const { return {cat, degree}; }
};

// Longest-path layering; fails if some non-identity endomorphism exists.
std::optional<std::vector<int>> synthesize_degree(const FinCategory& C);

// Least subcategory containing `generators`, all identities, and closed
// under the 2-out-of-6 property.
std::vector<char> two_out_of_six_closure(const FinCategory& C,
                                         const std::vector<char>& generators);

// --- functors ---------------------------------------------------------------

struct Functor {
  std::vector<int> obj;  // source object -> target object
  std::vector<int> mor;  // source morphism -> target morphism

  int on_obj(int o) const { return obj[o]; }
  int on_mor(int m) const { return mor[m]; }
};

Functor identity_functor(const FinCategory& C);
Functor compose_functors(const Functor& g, const Functor& f);

// Preserves identities, sources, targets and composition.
bool is_functor(const FinCategory& src, const FinCategory& tgt,
                const Functor& F, std::string* why = nullptr);
bool is_homotopical_functor(const HomotopicalCategory& src,
                            const HomotopicalCategory& tgt, const Functor& F);

// Injective on objects, fully faithful, downward closed.
bool is_sieve(const FinCategory& src, const FinCategory& tgt,
              const Functor& F);

// --- latching ---------------------------------------------------------------

struct LatchingCategory {
  FinCategory cat;              // objects = non-identity morphisms into i
  std::vector<int> object_mor;  // object of latching cat -> morphism of I
  Functor forgetful;            // to I, sends a morphism to its source
};

LatchingCategory latching_category(const DirectCategory& I, int i);

// --- colimits ---------------------------------------------------------------

struct Cocone {
  int apex = -1;
  std::vector<int> legs;  // per object of the index category
};

// All cocones under X, in canonical (apex, legs) order.
std::vector<Cocone> enumerate_cocones(const FinCategory& J, const Functor& X,
                                      const FinCategory& C);

// The universal cocone if it exists, chosen canonically (least apex in the
// object ordering, then least legs).  NotFound = nullopt.
std::optional<Cocone> colimit(const FinCategory& J, const Functor& X,
                              const FinCategory& C);

// Unique mediating morphism from a universal cocone to another cocone,
// if one exists.
std::optional<int> mediating_morphism(const FinCategory& J, const Functor& X,
                                      const FinCategory& C,
                                      const Cocone& universal,
                                      const Cocone& other);

std::optional<int> initial_object(const FinCategory& C);

// --- misc -------------------------------------------------------------------

FinCategory product_category(const FinCategory& A, const FinCategory& B);

// Backtracking enumeration of all functors J -> C.  `obj_fixed` may pin
// object images (-1 = free); `mor_filter`, if given, is invoked on each
// morphism assignment and can prune.
std::vector<Functor> enumerate_functors(
    const FinCategory& J, const FinCategory& C,
    const std::vector<int>& obj_fixed = {},
    const std::function<bool(int jm, int cm)>& mor_filter = nullptr,
    std::size_t limit = SIZE_MAX);

}  // namespace framecat::fincat
