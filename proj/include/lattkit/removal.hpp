#ifndef LATTKIT_REMOVAL_HPP
#define LATTKIT_REMOVAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lattkit/lattice.hpp"

namespace lattkit {

// Element removal machinery: deleting irreducible elements from a lattice
// leaves a lattice, and only irreducible elements do.

struct RemovalIffVerdict {
  bool irreducible = false;         // join- or meet-irreducible by cover count
  bool removal_is_lattice = false;  // induced subposet without x is a lattice
  bool agree = false;               // the two bits match
  // Extremal bookkeeping: cover counting classifies the bottom only on its
  // meet side and the top only on its join side. readings_disagree marks the
  // cases where excluding extremal elements from both classes entirely would
  // flip the verdict (bottom with a unique atom, top with a unique dual atom).
  bool extremal = false;
  bool readings_disagree = false;
  // Witness pair (original ids) when the removal is not a lattice.
  std::optional<std::pair<int, int>> witness;
};

// Compares irreducibility of x against whether the lattice survives deleting
// x. Requires |L| > 1 (throws SizeError).
RemovalIffVerdict removal_lattice_iff_irreducible(const Lattice& lat, int x);

// Exhaustively checks that deleting one join-irreducible keeps every other
// join-irreducible join-irreducible, and dually on the meet side.
bool verify_lemma_1_3(const Lattice& lat);

enum class IrrMode { join, meet };

struct RelabeledLattice {
  Lattice lattice;
  std::vector<int> new_to_old;
  std::vector<int> old_to_new;  // -1 for removed elements
};

// Deletes a set of join-irreducible (or meet-irreducible) elements. Throws
// NotIrreducibleError naming the first offending element when the mode's
// precondition fails. The result is always a valid lattice.
RelabeledLattice remove_irreducible_set(const Lattice& lat, ElemSet members,
                                        IrrMode mode);

// True when every element that is join-irreducible in the lattice minus x but
// join-reducible in the original upper covers x. Requires x irreducible.
bool new_join_irreducibles_cover_removed(const Lattice& lat, int x);

struct MixedRemovalExample {
  Lattice lattice;
  int join_irr;  // join-irreducible, meet-reducible; upper covers meet_irr
  int meet_irr;  // meet-irreducible, join-reducible
};

// Removing {join_irr, meet_irr} together breaks the lattice property even
// though each is irreducible on one side. Self-checked at construction.
MixedRemovalExample build_mixed_removal_counterexample();

struct ConverseExample {
  Lattice lattice;
  int removed;   // join-irreducible in the lattice
  int promoted;  // join-reducible, but join-irreducible after the removal
};

// Deleting one join-irreducible can promote a join-reducible element to
// join-irreducible. Self-checked at construction.
ConverseExample build_lemma_1_3_converse_example();

}  // namespace lattkit

#endif  // LATTKIT_REMOVAL_HPP
