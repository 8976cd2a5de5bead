#ifndef LATTKIT_ENUMERATE_HPP
#define LATTKIT_ENUMERATE_HPP

#include <map>
#include <vector>

#include "lattkit/lattice.hpp"

namespace lattkit {

// Canonical serialized form of a poset: the cover list under the canonical
// labeling. Two lattices are isomorphic iff their certs compare equal, and
// the covers rebuild the lattice via Poset::from_covers.
struct CanonicalCert {
  int n = 0;
  std::vector<CoverPair> covers;
  friend auto operator<=>(const CanonicalCert&, const CanonicalCert&) = default;
};

// Relabels to minimize the packed cover-matrix bit string over all labelings
// compatible with invariant refinement (height, cover degrees, up-set size).
// In a lattice the bottom always maps to 0.
CanonicalCert canonical_form(const Poset& p);
inline CanonicalCert canonical_form(const Lattice& lat) {
  return canonical_form(lat.poset());
}

Poset poset_from_cert(const CanonicalCert& cert);
Lattice lattice_from_cert(const CanonicalCert& cert);

bool are_isomorphic(const Lattice& a, const Lattice& b);

inline constexpr int kDefaultEnumMax = 9;

// All lattices with n elements, one canonical representative per isomorphism
// class, sorted by cert. Grows posets one new maximal element at a time,
// keeping every pair's meet defined (meets are frozen once present, so a
// stage that loses one can never become a lattice), and rejects isomorphs by
// cert at every stage.
std::vector<Lattice> enumerate_lattices(int n, int max_n = kDefaultEnumMax);
std::vector<CanonicalCert> enumerate_lattice_certs(int n,
                                                   int max_n = kDefaultEnumMax);

// Independent cross-check: enumerates every strict upper-triangular relation,
// filters transitivity and the lattice property, and dedupes with a direct
// permutation-search isomorphism test. Feasible for n <= 7 only.
std::vector<Lattice> oracle_enumerate(int n);

// Count of unlabeled posets with n elements in which every pair has a meet,
// by the same matrix-filter route as oracle_enumerate. Adjoining a top makes
// each such poset a lattice with n+1 elements, so this cross-checks the
// enumerator one size past the oracle's reach. n <= 7.
long oracle_count_meet_semilattices(int n);

// Distribution of doubly irreducible counts across all lattices of size n.
std::map<int, long> doubly_irreducible_census(int n, int max_n = kDefaultEnumMax);

}  // namespace lattkit

#endif  // LATTKIT_ENUMERATE_HPP
