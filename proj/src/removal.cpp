#include "lattkit/removal.hpp"

#include <string>

namespace lattkit {

namespace {

bool join_irreducible(const Poset& p, int x) {
  return set_size(p.lower_covers(x)) == 1;
}

bool meet_irreducible(const Poset& p, int x) {
  return set_size(p.upper_covers(x)) == 1;
}

// Construction-time guarantee check; active in all build types.
void require(bool ok, const char* what) {
  if (!ok) throw Error(std::string("builder self-check failed: ") + what);
}

}  // namespace

RemovalIffVerdict removal_lattice_iff_irreducible(const Lattice& lat, int x) {
  if (lat.size() <= 1) {
    throw SizeError("removal comparison needs more than one element");
  }
  const Poset& p = lat.poset();

  RemovalIffVerdict verdict;
  verdict.irreducible = join_irreducible(p, x) || meet_irreducible(p, x);
  verdict.extremal = (x == lat.bottom() || x == lat.top());
  verdict.readings_disagree =
      (x == lat.bottom() && meet_irreducible(p, x)) ||
      (x == lat.top() && join_irreducible(p, x));

  const Subposet sub = induced_subposet(p, set_below(lat.size()) & ~elem_bit(x));
  const LatticeCheck check = is_lattice(sub.poset);
  verdict.removal_is_lattice = check.is_lattice;
  if (check.witness) {
    verdict.witness = {sub.parent_id(check.witness->first),
                       sub.parent_id(check.witness->second)};
  }
  verdict.agree = (verdict.irreducible == verdict.removal_is_lattice);
  return verdict;
}

bool verify_lemma_1_3(const Lattice& lat) {
  const Poset& p = lat.poset();
  const IrreducibleProfile prof = irreducible_profile(lat);

  const auto survives = [&](int removed, int other, bool join_side) {
    const Subposet sub =
        induced_subposet(p, set_below(lat.size()) & ~elem_bit(removed));
    const int local = sub.local_id(other);
    return join_side ? join_irreducible(sub.poset, local)
                     : meet_irreducible(sub.poset, local);
  };

  for (const int j1 : set_elements(prof.join_irr)) {
    for (const int j2 : set_elements(prof.join_irr)) {
      if (j1 != j2 && !survives(j1, j2, true)) return false;
    }
  }
  for (const int m1 : set_elements(prof.meet_irr)) {
    for (const int m2 : set_elements(prof.meet_irr)) {
      if (m1 != m2 && !survives(m1, m2, false)) return false;
    }
  }
  return true;
}

RelabeledLattice remove_irreducible_set(const Lattice& lat, ElemSet members,
                                        IrrMode mode) {
  const Poset& p = lat.poset();
  members &= set_below(lat.size());
  for (const int x : set_elements(members)) {
    const bool ok = (mode == IrrMode::join) ? join_irreducible(p, x)
                                            : meet_irreducible(p, x);
    if (!ok) {
      throw NotIrreducibleError(
          "element " + std::to_string(x) + " is not " +
              (mode == IrrMode::join ? "join" : "meet") + "-irreducible",
          x);
    }
  }
  if (set_size(members) >= lat.size()) {
    throw SizeError("cannot remove every element");
  }

  Subposet sub = induced_subposet(p, set_below(lat.size()) & ~members);
  RelabeledLattice out{Lattice::from_poset(std::move(sub.poset)),
                       std::move(sub.to_parent),
                       std::vector<int>(static_cast<std::size_t>(lat.size()), -1)};
  for (int local = 0; local < static_cast<int>(out.new_to_old.size()); ++local) {
    out.old_to_new[out.new_to_old[local]] = local;
  }
  return out;
}

bool new_join_irreducibles_cover_removed(const Lattice& lat, int x) {
  const Poset& p = lat.poset();
  if (!join_irreducible(p, x) && !meet_irreducible(p, x)) {
    throw NotIrreducibleError(
        "element " + std::to_string(x) + " is neither join- nor meet-irreducible",
        x);
  }
  const Subposet sub = induced_subposet(p, set_below(lat.size()) & ~elem_bit(x));
  for (int local = 0; local < sub.poset.size(); ++local) {
    const int orig = sub.parent_id(local);
    const bool promoted = join_irreducible(sub.poset, local) &&
                          set_size(p.lower_covers(orig)) > 1;
    if (promoted && !set_contains(p.lower_covers(orig), x)) return false;
  }
  return true;
}

MixedRemovalExample build_mixed_removal_counterexample() {
  MixedRemovalExample ex{Lattice::from_covers(8, {{0, 1},
                                                  {0, 2},
                                                  {1, 3},
                                                  {2, 3},
                                                  {3, 4},
                                                  {4, 5},
                                                  {4, 6},
                                                  {5, 7},
                                                  {6, 7}}),
                         4, 3};
  const Poset& p = ex.lattice.poset();
  require(join_irreducible(p, ex.join_irr) && !meet_irreducible(p, ex.join_irr),
          "mixed example: chosen element must be join-irreducible only");
  require(meet_irreducible(p, ex.meet_irr) && !join_irreducible(p, ex.meet_irr),
          "mixed example: chosen element must be meet-irreducible only");
  require(set_contains(p.lower_covers(ex.join_irr), ex.meet_irr),
          "mixed example: join-irreducible must upper cover the meet-irreducible");
  const Subposet sub = induced_subposet(
      p, set_below(8) & ~(elem_bit(ex.join_irr) | elem_bit(ex.meet_irr)));
  require(!is_lattice(sub.poset).is_lattice,
          "mixed example: removing both elements must break the lattice");
  return ex;
}

ConverseExample build_lemma_1_3_converse_example() {
  ConverseExample ex{Lattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
                     1, 3};
  const Poset& p = ex.lattice.poset();
  require(join_irreducible(p, ex.removed),
          "converse example: removed element must be join-irreducible");
  require(!join_irreducible(p, ex.promoted),
          "converse example: promoted element must start join-reducible");
  const Subposet sub =
      induced_subposet(p, set_below(4) & ~elem_bit(ex.removed));
  require(join_irreducible(sub.poset, sub.local_id(ex.promoted)),
          "converse example: promoted element must end join-irreducible");
  return ex;
}

}  // namespace lattkit
