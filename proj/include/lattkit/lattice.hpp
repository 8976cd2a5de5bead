#ifndef LATTKIT_LATTICE_HPP
#define LATTKIT_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lattkit/poset.hpp"

namespace lattkit {

struct LatticeCheck {
  bool is_lattice = false;
  // When not a lattice: a pair without a unique join or meet.
  std::optional<std::pair<int, int>> witness;
  bool missing_join = false;  // valid when witness is set
};

LatticeCheck is_lattice(const Poset& p);

// A poset validated to have all pairwise joins and meets, with both tables
// precomputed. Immutable and cheap to copy at the sizes this toolkit targets.
class Lattice {
 public:
  // Throws NotALatticeError (with a witness pair) when validation fails.
  static Lattice from_poset(Poset p);
  static Lattice from_covers(int n, const std::vector<CoverPair>& covers,
                             CoverInput mode = CoverInput::strict) {
    return from_poset(Poset::from_covers(n, covers, mode));
  }

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }

  int join(int x, int y) const { return join_[index(x, y)]; }
  int meet(int x, int y) const { return meet_[index(x, y)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int x, int y) const { return poset_.leq(x, y); }
  ElemSet up_set(int x) const { return poset_.up_set(x); }
  ElemSet down_set(int x) const { return poset_.down_set(x); }
  ElemSet incomparables(int x) const { return poset_.incomparables(x); }

  Lattice dual() const { return from_poset(poset_.dual()); }

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(poset_.size()) +
           static_cast<std::size_t>(y);
  }

  Poset poset_;
  std::vector<std::uint8_t> join_;
  std::vector<std::uint8_t> meet_;
  int bottom_ = 0;
  int top_ = 0;
};

// Which elements count as irreducible. Under `paper` the classification is
// pure cover counting, so the bottom is never join-irreducible and the top is
// never meet-irreducible. Under `rival` the bottom is additionally counted
// join-irreducible and the top meet-irreducible.
enum class Convention { paper, rival };

struct IrreducibleProfile {
  Convention convention = Convention::paper;
  ElemSet atoms = 0;
  ElemSet dual_atoms = 0;
  ElemSet join_irr = 0;
  ElemSet meet_irr = 0;
  ElemSet doubly_irr = 0;  // join_irr & meet_irr
  ElemSet doubly_red = 0;  // >1 lower covers and >1 upper covers
};

IrreducibleProfile irreducible_profile(const Lattice& lat,
                                       Convention convention = Convention::paper);

inline int length(const Lattice& lat) { return length(lat.poset()); }

}  // namespace lattkit

#endif  // LATTKIT_LATTICE_HPP
