#include "lattkit/lattice.hpp"

#include <string>

namespace lattkit {

namespace {

// Unique minimum of the candidate set under p, or -1. The minimum must be a
// member whose down-set covers the whole candidate set.
int unique_least(const Poset& p, ElemSet candidates) {
  int least = -1;
  for (ElemSet s = candidates; s; s &= s - 1) {
    const int z = lowest_element(s);
    if ((candidates & ~p.up_set(z)) == 0) {
      least = z;
      break;
    }
  }
  return least;
}

int unique_greatest(const Poset& p, ElemSet candidates) {
  int greatest = -1;
  for (ElemSet s = candidates; s; s &= s - 1) {
    const int z = lowest_element(s);
    if ((candidates & ~p.down_set(z)) == 0) {
      greatest = z;
      break;
    }
  }
  return greatest;
}

}  // namespace

LatticeCheck is_lattice(const Poset& p) {
  const int n = p.size();
  LatticeCheck check;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (unique_least(p, p.up_set(x) & p.up_set(y)) < 0) {
        check.witness = {x, y};
        check.missing_join = true;
        return check;
      }
      if (unique_greatest(p, p.down_set(x) & p.down_set(y)) < 0) {
        check.witness = {x, y};
        check.missing_join = false;
        return check;
      }
    }
  }
  check.is_lattice = true;
  return check;
}

Lattice Lattice::from_poset(Poset p) {
  const int n = p.size();
  if (n < 1) throw SizeError("a lattice needs at least one element");

  Lattice lat;
  lat.join_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  lat.meet_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      const int j = unique_least(p, p.up_set(x) & p.up_set(y));
      const int m = unique_greatest(p, p.down_set(x) & p.down_set(y));
      if (j < 0 || m < 0) {
        throw NotALatticeError("elements " + std::to_string(x) + " and " +
                                   std::to_string(y) + " have no " +
                                   (j < 0 ? "join" : "meet"),
                               x, y, j < 0);
      }
      const auto xy = static_cast<std::size_t>(x) * n + y;
      const auto yx = static_cast<std::size_t>(y) * n + x;
      lat.join_[xy] = lat.join_[yx] = static_cast<std::uint8_t>(j);
      lat.meet_[xy] = lat.meet_[yx] = static_cast<std::uint8_t>(m);
    }
  }
  lat.poset_ = std::move(p);
  lat.bottom_ = lowest_element(lat.poset_.minimal_elements());
  lat.top_ = lowest_element(lat.poset_.maximal_elements());
  return lat;
}

IrreducibleProfile irreducible_profile(const Lattice& lat,
                                       Convention convention) {
  const Poset& p = lat.poset();
  IrreducibleProfile prof;
  prof.convention = convention;
  prof.atoms = p.upper_covers(lat.bottom());
  prof.dual_atoms = p.lower_covers(lat.top());
  for (int x = 0; x < p.size(); ++x) {
    const int down_deg = set_size(p.lower_covers(x));
    const int up_deg = set_size(p.upper_covers(x));
    if (down_deg == 1) prof.join_irr |= elem_bit(x);
    if (up_deg == 1) prof.meet_irr |= elem_bit(x);
    if (down_deg > 1 && up_deg > 1) prof.doubly_red |= elem_bit(x);
  }
  if (convention == Convention::rival) {
    prof.join_irr |= elem_bit(lat.bottom());
    prof.meet_irr |= elem_bit(lat.top());
  }
  prof.doubly_irr = prof.join_irr & prof.meet_irr;
  return prof;
}

}  // namespace lattkit
