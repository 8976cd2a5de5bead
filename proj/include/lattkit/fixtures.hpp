#ifndef LATTKIT_FIXTURES_HPP
#define LATTKIT_FIXTURES_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "lattkit/lattice.hpp"

namespace lattkit::fixtures {

// Small named lattices used across tests, docs and the CLI. Element 0 is
// always the bottom.

Lattice c2();    // 2-chain
Lattice c3();    // 3-chain
Lattice b2();    // diamond: 0 < 1,2 < 3
Lattice m3();    // 0 < 1,2,3 < 4
Lattice n5();    // pentagon: 0 < 1 < 2 < 4, 0 < 3 < 4
Lattice b3();    // subsets of 3 bits, covers are one-bit increments
Lattice dd();    // double diamond: 0 < 1,2 < 3 < 4,5 < 6
Lattice mix8();  // 0 < 1,2 < 3 < 4 < 5,6 < 7

std::optional<Lattice> by_name(std::string_view name);
std::vector<std::string_view> names();

}  // namespace lattkit::fixtures

#endif  // LATTKIT_FIXTURES_HPP
