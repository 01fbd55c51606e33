// Copyright 2026 The simplegames Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIMPLEGAMES_RANDOM_HPP
#define SIMPLEGAMES_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "simplegames/coalition.hpp"
#include "simplegames/game.hpp"

namespace simplegames {

/// Random simple games for fuzzing. Three draw styles are mixed so the
/// corpus contains sparse families, dense single-layer families, and
/// clumps of near neighbours (which is where pairing and clustering kick
/// in).
class AntichainGenerator {
 public:
  explicit AntichainGenerator(std::uint64_t seed) : rng_(seed) {}

  SimpleGame next(int n) {
    detail::check_player_count(n);
    const Coalition full = Coalition::full(n);
    const int max_members = std::max(1, std::min(4 * n, 1 << (n - 1)));
    const int wanted = uniform(1, max_members);
    const int layer = uniform(0, n - 1);
    const double density = 0.15 + 0.7 * unit();
    const int style = uniform(0, 2);

    std::vector<Coalition> family;
    auto try_add = [&](Coalition c) {
      if (c == full || !c.fits(n)) return;
      for (Coalition t : family) {
        if (c.is_subset_of(t) || t.is_subset_of(c)) return;
      }
      family.push_back(c);
    };

    for (int attempt = 0; attempt < 8 * wanted && static_cast<int>(family.size()) < wanted;
         ++attempt) {
      if (style == 1) {
        try_add(random_of_size(n, layer));
      } else if (style == 2 && !family.empty() && unit() < 0.7) {
        Coalition c = family[static_cast<std::size_t>(
            uniform(0, static_cast<int>(family.size()) - 1))];
        const int flips = uniform(1, 3);
        for (int f = 0; f < flips; ++f) c = c ^ Coalition::of({uniform(1, n)});
        try_add(c);
      } else {
        Coalition c;
        for (int p = 1; p <= n; ++p) {
          if (unit() < density) c = c.with(p);
        }
        try_add(c);
      }
    }
    if (family.empty()) family.push_back(random_of_size(n, uniform(0, n - 1)));
    return validate_game(n, std::move(family));
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

  Coalition random_of_size(int n, int k) {
    std::vector<int> players(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) players[static_cast<std::size_t>(p - 1)] = p;
    std::shuffle(players.begin(), players.end(), rng_);
    Coalition c;
    for (int i = 0; i < k; ++i) c = c.with(players[static_cast<std::size_t>(i)]);
    return c;
  }

  std::mt19937_64 rng_;
};

}  // namespace simplegames

#endif  // SIMPLEGAMES_RANDOM_HPP
