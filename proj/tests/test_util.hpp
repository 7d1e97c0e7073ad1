#pragma once

#include <random>
#include <vector>

#include "coopgame/rational.hpp"
#include "coopgame/tu_game.hpp"

namespace testutil {

using coopgame::Coalition;
using coopgame::Rational;
using coopgame::TUGame;

// Deterministic helpers on top of mt19937_64. std::uniform_int_distribution is
// implementation-defined, so tests roll their own mapping.
inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rational random_rational(std::mt19937_64& rng, long lo = -10, long hi = 10,
                                long max_den = 4) {
  return coopgame::rat(uniform_int(rng, lo, hi), uniform_int(rng, 1, max_den));
}

inline TUGame random_game(std::mt19937_64& rng, int n) {
  TUGame g(n);
  for (std::uint32_t m = 1; m < coopgame::coalition_count(n); ++m)
    g.set_value(Coalition(m), random_rational(rng));
  return g;
}

inline TUGame additive_game(const std::vector<Rational>& a) {
  TUGame g(static_cast<int>(a.size()));
  for (std::uint32_t m = 1; m < coopgame::coalition_count(g.agent_count()); ++m) {
    Rational sum(0);
    for (int i : Coalition(m).members()) sum += a[i];
    g.set_value(Coalition(m), sum);
  }
  return g;
}

// Nonnegative combination of unanimity games; always convex.
inline TUGame random_convex_game(std::mt19937_64& rng, int n) {
  const std::uint32_t all = coopgame::coalition_count(n);
  std::vector<Rational> coeff(all, Rational(0));
  for (std::uint32_t t = 1; t < all; ++t)
    coeff[t] = coopgame::rat(uniform_int(rng, 0, 6), uniform_int(rng, 1, 3));
  TUGame g(n);
  for (std::uint32_t m = 1; m < all; ++m) {
    Rational v(0);
    for (std::uint32_t t = 1; t < all; ++t)
      if ((t & m) == t) v += coeff[t];
    g.set_value(Coalition(m), v);
  }
  return g;
}

}  // namespace testutil
