#pragma once
// Seeded random strategies over sequential games, shared by the unit tests
// and the acceptance checks.

#include <random>
#include <string>

#include "strand/games.hpp"

namespace strand::testing {

inline std::string random_pol_word(std::mt19937& rng, int max_len) {
  int n = (int)(rng() % (max_len + 1));
  std::string w;
  for (int i = 0; i < n; ++i) w.push_back(rng() % 2 ? 'P' : 'O');
  return w;
}

// A random well-polarized pair set between the sequential games on the given
// words; not necessarily schedulable.
inline CyclicStrategy random_pair_set(std::mt19937& rng, const std::string& a,
                                      const std::string& b) {
  CyclicStrategy s{filiform(a), filiform(b), {}};
  std::vector<Move> sources, targets;
  auto scan = [&](int side, const std::string& w) {
    for (int i = 0; i < (int)w.size(); ++i) {
      Move m{side, i};
      (arrow_pol(s, m) == -1 ? sources : targets).push_back(m);
    }
  };
  scan(0, a);
  scan(1, b);
  for (Move u : sources)
    for (Move v : targets)
      if (rng() % 100 < 30) s.pairs.insert({u, v});
  return s;
}

// Rejection-samples an actual strategy.
inline CyclicStrategy random_strategy(std::mt19937& rng, int max_len) {
  for (;;) {
    std::string a = random_pol_word(rng, max_len);
    std::string b = random_pol_word(rng, max_len);
    CyclicStrategy s = random_pair_set(rng, a, b);
    if (is_strategy(s)) return s;
  }
}

// Rejection-samples a composable pair of strategies sharing the middle game.
inline std::pair<CyclicStrategy, CyclicStrategy> random_composable(
    std::mt19937& rng, int max_len) {
  std::string a = random_pol_word(rng, max_len);
  std::string b = random_pol_word(rng, max_len);
  std::string c = random_pol_word(rng, max_len);
  for (;;) {
    CyclicStrategy s = random_pair_set(rng, a, b);
    CyclicStrategy t = random_pair_set(rng, b, c);
    if (is_strategy(s) && is_strategy(t)) return {s, t};
  }
}

}  // namespace strand::testing
