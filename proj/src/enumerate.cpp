#include "lattkit/enumerate.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <tuple>

namespace lattkit {

namespace {

std::vector<int> element_heights(const Poset& p) {
  const int n = p.size();
  std::vector<int> height(static_cast<std::size_t>(n), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      for (ElemSet s = p.upper_covers(x); s; s &= s - 1) {
        const int y = lowest_element(s);
        if (height[y] < height[x] + 1) {
          height[y] = height[x] + 1;
          changed = true;
        }
      }
    }
  }
  return height;
}

// Minimizes the packed lower-cover matrix over all labelings that respect the
// invariant classes. Classes are ordered by (height, cover degrees, up-set
// size), so every lower cover of an element is labeled before the element
// itself and each row is complete the moment it is emitted.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Poset& p) : p_(p) {
    const int n = p.size();
    const std::vector<int> height = element_heights(p);
    std::vector<std::pair<std::array<int, 4>, int>> keyed;
    keyed.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      keyed.push_back({{height[x], set_size(p.upper_covers(x)),
                        set_size(p.lower_covers(x)), set_size(p.up_set(x))},
                       x});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) classes_.emplace_back();
      classes_.back().push_back(keyed[i].second);
    }
    label_of_.assign(static_cast<std::size_t>(n), -1);
    rows_.reserve(static_cast<std::size_t>(n));
  }

  std::vector<int> run() {
    search(0);
    return best_labels_;
  }

 private:
  // Bit for label j within a packed row; smaller labels are more significant
  // so that numeric row comparison is lexicographic in label order.
  static ElemSet row_bit(int label) {
    return elem_bit(kMaxElements - 1 - label);
  }

  // True when the current partial key is already worse than the best.
  bool prefix_beaten() const {
    if (best_labels_.empty()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] != best_rows_[i]) return rows_[i] > best_rows_[i];
    }
    return false;
  }

  void search(std::size_t class_idx) {
    if (class_idx == classes_.size()) {
      if (best_labels_.empty() || rows_ < best_rows_) {
        best_rows_ = rows_;
        best_labels_ = label_of_;
      }
      return;
    }
    std::vector<int> order = classes_[class_idx];
    do {
      const std::size_t base = rows_.size();
      for (const int x : order) {
        label_of_[x] = static_cast<int>(rows_.size());
        ElemSet row = 0;
        for (ElemSet s = p_.lower_covers(x); s; s &= s - 1) {
          row |= row_bit(label_of_[lowest_element(s)]);
        }
        rows_.push_back(row);
      }
      if (!prefix_beaten()) search(class_idx + 1);
      for (const int x : order) label_of_[x] = -1;
      rows_.resize(base);
    } while (std::next_permutation(order.begin(), order.end()));
  }

  const Poset& p_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> label_of_;
  std::vector<ElemSet> rows_;
  std::vector<ElemSet> best_rows_;
  std::vector<int> best_labels_;
};

}  // namespace

CanonicalCert canonical_form(const Poset& p) {
  CanonicalCert cert;
  cert.n = p.size();
  if (p.size() == 0) return cert;
  const std::vector<int> label = Canonicalizer(p).run();
  cert.covers.reserve(p.covers().size());
  for (const CoverPair& c : p.covers()) {
    cert.covers.push_back({label[c.lower], label[c.upper]});
  }
  std::sort(cert.covers.begin(), cert.covers.end());
  return cert;
}

Poset poset_from_cert(const CanonicalCert& cert) {
  return Poset::from_covers(cert.n, cert.covers, CoverInput::strict);
}

Lattice lattice_from_cert(const CanonicalCert& cert) {
  return Lattice::from_poset(poset_from_cert(cert));
}

bool are_isomorphic(const Lattice& a, const Lattice& b) {
  return canonical_form(a) == canonical_form(b);
}

namespace {

bool is_antichain(const Poset& p, ElemSet members) {
  for (ElemSet s = members; s; s &= s - 1) {
    const int x = lowest_element(s);
    if ((members & (p.up_set(x) | p.down_set(x)) & ~elem_bit(x)) != 0) {
      return false;
    }
  }
  return true;
}

// Whether the poset extended with a new element placed above `below` keeps
// every pair of elements with a meet. Only pairs involving the new element
// can change, and only elements outside `below` need checking.
bool extension_keeps_meets(const Poset& p, ElemSet below) {
  for (int y = 0; y < p.size(); ++y) {
    if (set_contains(below, y)) continue;
    const ElemSet common = below & p.down_set(y);
    bool has_greatest = false;
    for (ElemSet s = common; s; s &= s - 1) {
      const int z = lowest_element(s);
      if ((common & ~p.down_set(z)) == 0) {
        has_greatest = true;
        break;
      }
    }
    if (!has_greatest) return false;
  }
  return true;
}

Poset extend_with_max(const Poset& p, ElemSet lower_covers) {
  const int m = p.size();
  ElemSet below = 0;
  for (ElemSet s = lower_covers; s; s &= s - 1) {
    below |= p.down_set(lowest_element(s));
  }
  std::vector<ElemSet> up(static_cast<std::size_t>(m) + 1);
  for (int x = 0; x < m; ++x) {
    up[x] = p.up_set(x) | (set_contains(below, x) ? elem_bit(m) : 0);
  }
  up[m] = elem_bit(m);
  return Poset::from_up_rows(std::move(up));
}

ElemSet down_closure(const Poset& p, ElemSet members) {
  ElemSet out = 0;
  for (ElemSet s = members; s; s &= s - 1) {
    out |= p.down_set(lowest_element(s));
  }
  return out;
}

}  // namespace

std::vector<CanonicalCert> enumerate_lattice_certs(int n, int max_n) {
  if (n < 1) throw RangeError("lattice size must be positive");
  if (n > max_n || n > kMaxElements) {
    throw ResourceError("enumeration capped at size " +
                        std::to_string(std::min(max_n, kMaxElements)) +
                        ", got " + std::to_string(n));
  }

  std::set<CanonicalCert> stage;
  stage.insert(canonical_form(Poset::from_covers(1, {})));
  for (int k = 2; k <= n; ++k) {
    std::set<CanonicalCert> next;
    for (const CanonicalCert& cert : stage) {
      const Poset p = poset_from_cert(cert);
      const ElemSet all = set_below(p.size());
      const ElemSet maximals = p.maximal_elements();
      for (ElemSet members = 1; members <= all; ++members) {
        // The final element must close the poset with a top, which forces
        // its lower covers to be exactly the maximal elements.
        if (k == n && members != maximals) continue;
        if (!is_antichain(p, members)) continue;
        const ElemSet below = down_closure(p, members);
        if (!extension_keeps_meets(p, below)) continue;
        next.insert(canonical_form(extend_with_max(p, members)));
      }
    }
    stage = std::move(next);
  }
  return {stage.begin(), stage.end()};
}

std::vector<Lattice> enumerate_lattices(int n, int max_n) {
  std::vector<Lattice> out;
  for (const CanonicalCert& cert : enumerate_lattice_certs(n, max_n)) {
    out.push_back(lattice_from_cert(cert));
  }
  return out;
}

namespace {

// Direct permutation-search isomorphism on up-set rows, used by the oracle
// enumerator so that its deduplication shares nothing with canonical_form.
class BruteIso {
 public:
  BruteIso(const std::vector<ElemSet>& a, const std::vector<ElemSet>& b)
      : a_(a), b_(b), n_(static_cast<int>(a.size())) {
    map_.assign(static_cast<std::size_t>(n_), -1);
    used_ = 0;
  }

  bool run() { return place(0); }

 private:
  bool place(int x) {
    if (x == n_) return true;
    for (int y = 0; y < n_; ++y) {
      if (set_contains(used_, y)) continue;
      if (set_size(a_[x]) != set_size(b_[y])) continue;
      bool ok = true;
      for (int x2 = 0; x2 < x && ok; ++x2) {
        const int y2 = map_[x2];
        ok = set_contains(a_[x], x2) == set_contains(b_[y], y2) &&
             set_contains(a_[x2], x) == set_contains(b_[y2], y);
      }
      if (!ok) continue;
      map_[x] = y;
      used_ |= elem_bit(y);
      if (place(x + 1)) return true;
      used_ &= ~elem_bit(y);
      map_[x] = -1;
    }
    return false;
  }

  const std::vector<ElemSet>& a_;
  const std::vector<ElemSet>& b_;
  int n_;
  std::vector<int> map_;
  ElemSet used_;
};

using Fingerprint = std::vector<std::tuple<int, int>>;

Fingerprint fingerprint_rows(const std::vector<ElemSet>& up,
                             const std::vector<ElemSet>& down) {
  Fingerprint f;
  f.reserve(up.size());
  for (std::size_t x = 0; x < up.size(); ++x) {
    f.emplace_back(set_size(up[x]), set_size(down[x]));
  }
  std::sort(f.begin(), f.end());
  return f;
}

// Streams every transitive strict upper-triangular relation on n elements to
// the callback as reflexive up-set rows.
template <typename Callback>
void for_each_natural_poset(int n, Callback&& cb) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  const int bits = static_cast<int>(slots.size());
  std::vector<ElemSet> succ(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    for (int x = 0; x < n; ++x) succ[x] = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const auto& [i, j] = slots[static_cast<std::size_t>(std::countr_zero(m))];
      succ[i] |= elem_bit(j);
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i) {
      for (ElemSet s = succ[i]; s; s &= s - 1) {
        if ((succ[lowest_element(s)] & ~succ[i]) != 0) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    std::vector<ElemSet> up(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) up[x] = succ[x] | elem_bit(x);
    cb(up);
  }
}

std::vector<ElemSet> transpose_rows(const std::vector<ElemSet>& up) {
  std::vector<ElemSet> down(up.size(), 0);
  for (std::size_t x = 0; x < up.size(); ++x) {
    for (ElemSet s = up[x]; s; s &= s - 1) {
      down[static_cast<std::size_t>(lowest_element(s))] |= elem_bit(static_cast<int>(x));
    }
  }
  return down;
}

bool rows_have_all_meets(const std::vector<ElemSet>& down) {
  const int n = static_cast<int>(down.size());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const ElemSet common = down[x] & down[y];
      bool has_greatest = false;
      for (ElemSet s = common; s; s &= s - 1) {
        const int z = lowest_element(s);
        if ((common & ~down[z]) == 0) {
          has_greatest = true;
          break;
        }
      }
      if (!has_greatest) return false;
    }
  }
  return true;
}

bool rows_have_all_joins(const std::vector<ElemSet>& up) {
  return rows_have_all_meets(up);  // same test on the transposed rows
}

void check_oracle_size(int n) {
  if (n < 1) throw RangeError("size must be positive");
  if (n > 7) {
    throw ResourceError("the matrix-filter oracle is capped at size 7, got " +
                        std::to_string(n));
  }
}

}  // namespace

std::vector<Lattice> oracle_enumerate(int n) {
  check_oracle_size(n);
  std::map<Fingerprint, std::vector<std::vector<ElemSet>>> reps;
  std::vector<std::vector<ElemSet>> found;
  for_each_natural_poset(n, [&](const std::vector<ElemSet>& up) {
    const std::vector<ElemSet> down = transpose_rows(up);
    if (!rows_have_all_joins(up) || !rows_have_all_meets(down)) return;
    auto& bucket = reps[fingerprint_rows(up, down)];
    for (const auto& other : bucket) {
      if (BruteIso(up, other).run()) return;
    }
    bucket.push_back(up);
    found.push_back(up);
  });
  std::vector<Lattice> out;
  out.reserve(found.size());
  for (auto& up : found) {
    out.push_back(Lattice::from_poset(Poset::from_up_rows(std::move(up))));
  }
  return out;
}

long oracle_count_meet_semilattices(int n) {
  check_oracle_size(n);
  std::map<Fingerprint, std::vector<std::vector<ElemSet>>> reps;
  long count = 0;
  for_each_natural_poset(n, [&](const std::vector<ElemSet>& up) {
    const std::vector<ElemSet> down = transpose_rows(up);
    if (!rows_have_all_meets(down)) return;
    auto& bucket = reps[fingerprint_rows(up, down)];
    for (const auto& other : bucket) {
      if (BruteIso(up, other).run()) return;
    }
    bucket.push_back(up);
    ++count;
  });
  return count;
}

std::map<int, long> doubly_irreducible_census(int n, int max_n) {
  std::map<int, long> histogram;
  for (const Lattice& lat : enumerate_lattices(n, max_n)) {
    ++histogram[set_size(irreducible_profile(lat).doubly_irr)];
  }
  return histogram;
}

}  // namespace lattkit
