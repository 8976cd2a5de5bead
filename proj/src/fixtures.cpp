#include "lattkit/fixtures.hpp"

namespace lattkit::fixtures {

Lattice c2() { return Lattice::from_covers(2, {{0, 1}}); }

Lattice c3() { return Lattice::from_covers(3, {{0, 1}, {1, 2}}); }

Lattice b2() {
  return Lattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

Lattice m3() {
  return Lattice::from_covers(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

Lattice n5() {
  return Lattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

Lattice b3() {
  std::vector<CoverPair> covers;
  for (int x = 0; x < 8; ++x) {
    for (int bit = 0; bit < 3; ++bit) {
      if (!(x & (1 << bit))) covers.push_back({x, x | (1 << bit)});
    }
  }
  return Lattice::from_covers(8, covers);
}

Lattice dd() {
  return Lattice::from_covers(
      7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
}

Lattice mix8() {
  return Lattice::from_covers(8, {{0, 1},
                                  {0, 2},
                                  {1, 3},
                                  {2, 3},
                                  {3, 4},
                                  {4, 5},
                                  {4, 6},
                                  {5, 7},
                                  {6, 7}});
}

std::optional<Lattice> by_name(std::string_view name) {
  if (name == "c2") return c2();
  if (name == "c3") return c3();
  if (name == "b2") return b2();
  if (name == "m3") return m3();
  if (name == "n5") return n5();
  if (name == "b3") return b3();
  if (name == "dd") return dd();
  if (name == "mix8") return mix8();
  return std::nullopt;
}

std::vector<std::string_view> names() {
  return {"c2", "c3", "b2", "m3", "n5", "b3", "dd", "mix8"};
}

}  // namespace lattkit::fixtures
