#ifndef LATTKIT_CORE_HPP
#define LATTKIT_CORE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lattkit {

// Element ids are dense integers in [0, n). Sets of elements are bitmasks,
// which caps a poset at 64 elements; enumeration stays far below that and
// file input is range-checked.
using ElemSet = std::uint64_t;

inline constexpr int kMaxElements = 64;

constexpr ElemSet elem_bit(int i) { return ElemSet{1} << i; }
constexpr bool set_contains(ElemSet s, int i) { return (s >> i) & 1; }
constexpr int set_size(ElemSet s) { return std::popcount(s); }
constexpr ElemSet set_below(int n) {
  return n >= kMaxElements ? ~ElemSet{0} : (ElemSet{1} << n) - 1;
}
constexpr int lowest_element(ElemSet s) { return std::countr_zero(s); }

inline std::vector<int> set_elements(ElemSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

// Covers are stored lower-first: (lower, upper) with upper covering lower.
struct CoverPair {
  int lower = 0;
  int upper = 0;
  friend auto operator<=>(const CoverPair&, const CoverPair&) = default;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RangeError : Error {
  using Error::Error;
};

struct CycleError : Error {
  using Error::Error;
};

struct RedundantCoverError : Error {
  using Error::Error;
};

// Carries the first offending pair found: no unique join or meet exists.
struct NotALatticeError : Error {
  NotALatticeError(std::string msg, int a, int b, bool missing_join)
      : Error(std::move(msg)), a(a), b(b), missing_join(missing_join) {}
  int a;
  int b;
  bool missing_join;
};

struct NotIrreducibleError : Error {
  NotIrreducibleError(std::string msg, int element)
      : Error(std::move(msg)), element(element) {}
  int element;
};

struct SizeError : Error {
  using Error::Error;
};

struct EmptySetError : Error {
  using Error::Error;
};

struct BadSubsetError : Error {
  using Error::Error;
};

struct ResourceError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace lattkit

#endif  // LATTKIT_CORE_HPP
