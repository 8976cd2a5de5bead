#ifndef LATTKIT_POSET_HPP
#define LATTKIT_POSET_HPP

#include <span>
#include <vector>

#include "lattkit/core.hpp"

namespace lattkit {

// How cover input is validated. Strict input must be exactly the transitive
// reduction; relaxed input may be any set of order pairs and is reduced.
enum class CoverInput { strict, relaxed };

// Finite partial order on elements 0..n-1. The reflexive order matrix is the
// single source of truth; cover lists, down-sets and cover masks are derived
// from it at construction time. Immutable afterwards, safe to share across
// threads.
class Poset {
 public:
  // Empty poset; only reachable internally and via subposet edge cases.
  Poset() = default;

  static Poset from_covers(int n, std::span<const CoverPair> covers,
                           CoverInput mode = CoverInput::strict);
  static Poset from_covers(int n, const std::vector<CoverPair>& covers,
                           CoverInput mode = CoverInput::strict) {
    return from_covers(n, std::span<const CoverPair>(covers), mode);
  }

  // Builds directly from up-set rows (already reflexive-transitively closed).
  // Validates nothing beyond basic shape; used by trusted internal callers.
  static Poset from_up_rows(std::vector<ElemSet> up);

  int size() const { return n_; }

  bool leq(int x, int y) const { return set_contains(up_[x], y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  bool incomparable(int x, int y) const { return !comparable(x, y); }

  ElemSet up_set(int x) const { return up_[x]; }
  ElemSet down_set(int x) const { return down_[x]; }
  ElemSet incomparables(int x) const {
    return set_below(n_) & ~(up_[x] | down_[x]);
  }

  // upper_covers(x): elements covering x. lower_covers(x): elements x covers.
  ElemSet upper_covers(int x) const { return ucov_[x]; }
  ElemSet lower_covers(int x) const { return lcov_[x]; }

  const std::vector<CoverPair>& covers() const { return covers_; }

  ElemSet minimal_elements() const;
  ElemSet maximal_elements() const;

  Poset dual() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.up_ == b.up_;
  }

 private:
  void derive_caches();

  int n_ = 0;
  std::vector<ElemSet> up_;    // up_[x] = {y : x <= y}, reflexive
  std::vector<ElemSet> down_;  // transpose of up_
  std::vector<ElemSet> ucov_;
  std::vector<ElemSet> lcov_;
  std::vector<CoverPair> covers_;  // sorted (lower, upper)
};

// Induced subposet on the members of S, relabeled to 0..|S|-1 preserving the
// original id order. to_parent maps new ids back to ids in the parent.
struct Subposet {
  Poset poset;
  std::vector<int> to_parent;

  int parent_id(int local) const { return to_parent[local]; }
  int local_id(int parent) const;  // -1 when parent is not in the subposet
};

Subposet induced_subposet(const Poset& p, ElemSet members);

// True when every two elements are comparable. The flag decides the empty
// poset; singletons are always chains.
bool is_chain(const Poset& p, bool treat_empty_as_chain = true);

struct ChainUnionVerdict {
  bool is_union_of_chains = false;
  int chain_count = 0;  // component count, meaningful when the verdict holds
};

// Checks whether every connected component of the comparability graph is
// linearly ordered (the poset is a disjoint union of chains).
ChainUnionVerdict is_disjoint_union_of_chains(const Poset& p);

// Longest cover path; one less than the maximum chain size.
int length(const Poset& p);

}  // namespace lattkit

#endif  // LATTKIT_POSET_HPP
