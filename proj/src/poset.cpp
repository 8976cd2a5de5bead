#include "lattkit/poset.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace lattkit {

namespace {

// Reflexive-transitive closure of the given successor rows, in place.
void close_rows(std::vector<ElemSet>& up) {
  const int n = static_cast<int>(up.size());
  for (int x = 0; x < n; ++x) up[x] |= elem_bit(x);
  // Warshall over bitmask rows.
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if (set_contains(up[x], k)) up[x] |= up[k];
    }
  }
}

void check_antisymmetry(const std::vector<ElemSet>& up) {
  const int n = static_cast<int>(up.size());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (set_contains(up[x], y) && set_contains(up[y], x)) {
        throw CycleError("cycle through elements " + std::to_string(x) +
                         " and " + std::to_string(y));
      }
    }
  }
}

}  // namespace

Poset Poset::from_covers(int n, std::span<const CoverPair> covers,
                         CoverInput mode) {
  if (n < 1 || n > kMaxElements) {
    throw RangeError("element count must be in [1, " +
                     std::to_string(kMaxElements) + "], got " +
                     std::to_string(n));
  }
  std::vector<ElemSet> direct(static_cast<std::size_t>(n), 0);
  for (const CoverPair& c : covers) {
    if (c.lower < 0 || c.lower >= n || c.upper < 0 || c.upper >= n) {
      throw RangeError("cover pair (" + std::to_string(c.lower) + ", " +
                       std::to_string(c.upper) + ") out of range for n=" +
                       std::to_string(n));
    }
    if (c.lower == c.upper) {
      throw CycleError("self-loop on element " + std::to_string(c.lower));
    }
    direct[c.lower] |= elem_bit(c.upper);
  }

  std::vector<ElemSet> up = direct;
  close_rows(up);
  check_antisymmetry(up);

  Poset p;
  p.n_ = n;
  p.up_ = std::move(up);
  p.derive_caches();

  if (mode == CoverInput::strict) {
    // Input must be exactly the transitive reduction, with no repeats.
    std::vector<ElemSet> reduced(static_cast<std::size_t>(n), 0);
    for (const CoverPair& c : p.covers_) reduced[c.lower] |= elem_bit(c.upper);
    std::vector<ElemSet> seen(static_cast<std::size_t>(n), 0);
    for (const CoverPair& c : covers) {
      if (!set_contains(reduced[c.lower], c.upper) ||
          set_contains(seen[c.lower], c.upper)) {
        throw RedundantCoverError("pair (" + std::to_string(c.lower) + ", " +
                                  std::to_string(c.upper) +
                                  ") is implied by the remaining input");
      }
      seen[c.lower] |= elem_bit(c.upper);
    }
  }
  return p;
}

Poset Poset::from_up_rows(std::vector<ElemSet> up) {
  Poset p;
  p.n_ = static_cast<int>(up.size());
  p.up_ = std::move(up);
  p.derive_caches();
  return p;
}

void Poset::derive_caches() {
  const int n = n_;
  down_.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (ElemSet s = up_[x]; s; s &= s - 1) {
      down_[lowest_element(s)] |= elem_bit(x);
    }
  }
  ucov_.assign(static_cast<std::size_t>(n), 0);
  lcov_.assign(static_cast<std::size_t>(n), 0);
  covers_.clear();
  for (int x = 0; x < n; ++x) {
    const ElemSet strictly_above = up_[x] & ~elem_bit(x);
    for (ElemSet s = strictly_above; s; s &= s - 1) {
      const int y = lowest_element(s);
      const ElemSet between = strictly_above & (down_[y] & ~elem_bit(y));
      if (between == 0) {
        ucov_[x] |= elem_bit(y);
        lcov_[y] |= elem_bit(x);
        covers_.push_back({x, y});
      }
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

ElemSet Poset::minimal_elements() const {
  ElemSet out = 0;
  for (int x = 0; x < n_; ++x) {
    if (down_[x] == elem_bit(x)) out |= elem_bit(x);
  }
  return out;
}

ElemSet Poset::maximal_elements() const {
  ElemSet out = 0;
  for (int x = 0; x < n_; ++x) {
    if (up_[x] == elem_bit(x)) out |= elem_bit(x);
  }
  return out;
}

Poset Poset::dual() const {
  Poset p;
  p.n_ = n_;
  p.up_ = down_;
  p.derive_caches();
  return p;
}

int Subposet::local_id(int parent) const {
  for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) {
    if (to_parent[i] == parent) return i;
  }
  return -1;
}

Subposet induced_subposet(const Poset& p, ElemSet members) {
  members &= set_below(p.size());
  if (members == 0) throw EmptySetError("induced subposet of the empty set");

  Subposet sub;
  sub.to_parent = set_elements(members);
  const int m = static_cast<int>(sub.to_parent.size());

  std::vector<ElemSet> up(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (p.leq(sub.to_parent[i], sub.to_parent[j])) up[i] |= elem_bit(j);
    }
  }
  sub.poset = Poset::from_up_rows(std::move(up));
  return sub;
}

bool is_chain(const Poset& p, bool treat_empty_as_chain) {
  if (p.size() == 0) return treat_empty_as_chain;
  for (int x = 0; x < p.size(); ++x) {
    if ((p.up_set(x) | p.down_set(x)) != set_below(p.size())) return false;
  }
  return true;
}

ChainUnionVerdict is_disjoint_union_of_chains(const Poset& p) {
  const int n = p.size();
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  ChainUnionVerdict verdict{true, 0};
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    // Flood the comparability component of start.
    ElemSet component = 0;
    std::queue<int> frontier;
    frontier.push(start);
    visited[start] = true;
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      component |= elem_bit(x);
      ElemSet neighbors = (p.up_set(x) | p.down_set(x)) & ~component;
      for (ElemSet s = neighbors; s; s &= s - 1) {
        const int y = lowest_element(s);
        if (!visited[y]) {
          visited[y] = true;
          frontier.push(y);
        }
      }
    }
    ++verdict.chain_count;
    // The component is a chain iff all its members are pairwise comparable.
    for (ElemSet s = component; s; s &= s - 1) {
      const int x = lowest_element(s);
      if ((component & ~(p.up_set(x) | p.down_set(x))) != 0) {
        verdict.is_union_of_chains = false;
      }
    }
  }
  return verdict;
}

int length(const Poset& p) {
  const int n = p.size();
  if (n == 0) return 0;
  // Longest cover path ending at x, in any topological order; ids are not
  // topologically sorted in general, so iterate by height fixpoint.
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      for (ElemSet s = p.upper_covers(x); s; s &= s - 1) {
        const int y = lowest_element(s);
        if (depth[y] < depth[x] + 1) {
          depth[y] = depth[x] + 1;
          changed = true;
        }
      }
    }
  }
  return *std::max_element(depth.begin(), depth.end());
}

}  // namespace lattkit
