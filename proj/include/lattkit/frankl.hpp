#ifndef LATTKIT_FRANKL_HPP
#define LATTKIT_FRANKL_HPP

#include <map>
#include <vector>

#include "lattkit/enumerate.hpp"
#include "lattkit/lattice.hpp"

namespace lattkit {

// The conjecture under test: every finite lattice with more than one element
// has a join-irreducible element j with |up(j)| <= |L| / 2. All comparisons
// are doubled-integer exact.

// Join-irreducible elements j with 2*|up(j)| <= |L|. Throws SizeError on the
// one-element lattice.
ElemSet frankl_witnesses(const Lattice& lat);

struct FranklResult {
  bool satisfied = false;
  bool vacuous = false;  // one-element lattice: satisfied by convention
  ElemSet witnesses = 0;
};

// Total version used by sweeps: the one-element lattice reports vacuously
// true instead of throwing.
FranklResult check_conjecture(const Lattice& lat);

bool satisfies_conjecture(const Lattice& lat);

struct SweepSizeEntry {
  int n = 0;
  long lattice_count = 0;
  // witness count -> number of lattices of this size with that many witnesses
  std::map<int, long> witness_histogram;
  std::vector<CanonicalCert> counterexamples;
};

struct SweepReport {
  int max_n = 0;
  std::vector<SweepSizeEntry> sizes;
  bool all_satisfied = true;

  // Meaningful when all_satisfied: any counterexample must be larger.
  int certified_min_counterexample_above() const { return max_n; }
};

// Checks every lattice with 2 <= n <= max_n. Deterministic: results are
// merged in enumeration order regardless of the worker count.
SweepReport counterexample_sweep(int max_n, int jobs = 1,
                                 int enum_max = kDefaultEnumMax);

}  // namespace lattkit

#endif  // LATTKIT_FRANKL_HPP
