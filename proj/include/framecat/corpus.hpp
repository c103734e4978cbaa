#pragma once

#include "framecat/cofcat.hpp"
#include "framecat/fincat.hpp"

// Small fixture categories used across tests and the acceptance suite:
// join-semilattices with bottom (valid cofibration categories with cof = all
// and weq in {identities, all}), chains, the walking span, a non-lattice
// poset, and the free-living isomorphism.

namespace framecat::corpus {

// Chain 0 -> 1 -> ... -> n-1.
fincat::FinCategory chain(int n);

// Poset of all subsets of the named atoms ordered by inclusion
// (e.g. {"a","b"} gives the four-element diamond).
fincat::FinCategory subset_lattice(const std::vector<std::string>& atoms);

// Poset of *nonempty* subsets of {0..n}.
fincat::FinCategory nonempty_subsets(int n);

// The walking span b <- a -> c.
fincat::FinCategory span();

// Four-element poset a,b < u,v with u,v incomparable: pushouts of (a,b) fail.
fincat::FinCategory nonlattice_poset();

// Free-living isomorphism E(1): the indiscrete category on {0,1}.
fincat::FinCategory free_iso();

enum class Marking { Identities, All };

cofcat::CofCategory make_cofcat(const fincat::FinCategory& C, Marking marking);

// Chain 0 -> 1 -> 2 with weq = 2-out-of-6 closure of {1 -> 2}.
cofcat::CofCategory chain3_weq12();

}  // namespace framecat::corpus
