#include "coopgame/apps/bankruptcy.hpp"

#include <stdexcept>

namespace coopgame {

void BankruptcyInstance::validate() const {
  if (claims.empty()) throw std::invalid_argument("need at least one claimant");
  if (estate < 0) throw std::invalid_argument("estate must be nonnegative");
  Rational total(0);
  for (const auto& c : claims) {
    if (c < 0) throw std::invalid_argument("claims must be nonnegative");
    total += c;
  }
  if (total <= estate)
    throw std::invalid_argument("claims must exceed the estate");
}

TUGame bankruptcy_first(const BankruptcyInstance& b) {
  b.validate();
  const int n = b.agent_count();
  TUGame g(n);
  for (std::uint32_t m = 1; m < coalition_count(n); ++m) {
    Rational claim(0);
    for (AgentId i : Coalition(m).members()) claim += b.claims[i];
    g.set_value(Coalition(m), std::min(claim, b.estate));
  }
  return g;
}

TUGame bankruptcy_last(const BankruptcyInstance& b) {
  b.validate();
  const int n = b.agent_count();
  TUGame g(n);
  for (std::uint32_t m = 1; m < coalition_count(n); ++m) {
    Rational outside_claim(0);
    for (AgentId i : Coalition(m).complement(n).members()) outside_claim += b.claims[i];
    g.set_value(Coalition(m), std::max(Rational(b.estate - outside_claim), Rational(0)));
  }
  return g;
}

ExplicitProblem bankruptcy_explicit(const BankruptcyInstance& b) {
  b.validate();
  const int n = b.agent_count();
  Rational grid = b.estate;
  for (const auto& c : b.claims) grid = rational_gcd(grid, c);
  if (grid == 0) grid = 1;

  ExplicitProblem p;
  p.actions.resize(n);
  p.revenues.resize(n);
  std::vector<long> steps(n);
  for (int i = 0; i < n; ++i) {
    const Rational cap = std::min(b.claims[i], b.estate);
    const Rational units = cap / grid;
    if (units > 1000000)
      throw std::invalid_argument(
          "estate grid is too fine for the explicit encoding");
    steps[i] = static_cast<long>(Rational(units).get_num().get_si());
    for (long k = 0; k <= steps[i]; ++k) {
      p.actions[i].push_back("take" + std::to_string(k));
      p.revenues[i].push_back(Rational(k) * grid);
    }
  }

  const long estate_units = static_cast<long>(Rational(b.estate / grid).get_num().get_si());
  std::vector<int> profile(n, 0);
  while (true) {
    long taken = 0;
    for (int i = 0; i < n; ++i) taken += profile[i];
    if (taken <= estate_units) p.feasible_profiles.push_back(profile);
    int k = n - 1;
    while (k >= 0) {
      if (++profile[k] <= steps[k]) break;
      profile[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return p;
}

}  // namespace coopgame
