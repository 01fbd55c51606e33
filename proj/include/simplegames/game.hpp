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

#ifndef SIMPLEGAMES_GAME_HPP
#define SIMPLEGAMES_GAME_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "simplegames/coalition.hpp"
#include "simplegames/error.hpp"

namespace simplegames {

namespace detail {

inline void check_player_count(int n) {
  if (n < 1 || n > kPlayerCap) {
    throw Error(ErrorCode::kPlayerOutOfRange,
                "player count " + std::to_string(n) + " is not in 1.." +
                    std::to_string(kPlayerCap));
  }
}

inline void check_fits(Coalition c, int n) {
  if (!c.fits(n)) {
    throw Error(ErrorCode::kPlayerOutOfRange,
                "coalition " + c.to_string() + " has a player above n = " +
                    std::to_string(n));
  }
}

}  // namespace detail

/// A simple game on players {1..n}, given by its maximal losing coalitions.
///
/// Instances only come out of validate_game(), so every SimpleGame holds a
/// non-empty, sorted antichain that does not contain the grand coalition.
/// A coalition loses exactly when it is contained in one of them.
class SimpleGame {
 public:
  int n() const { return n_; }
  std::span<const Coalition> maximal_losing() const { return maximal_losing_; }

  bool operator==(const SimpleGame&) const = default;

 private:
  SimpleGame(int n, std::vector<Coalition> maximal_losing)
      : n_(n), maximal_losing_(std::move(maximal_losing)) {}

  friend SimpleGame validate_game(int n, std::vector<Coalition> coalitions);

  int n_;
  std::vector<Coalition> maximal_losing_;
};

/// Checks that `coalitions` is a legal family of maximal losing coalitions
/// over n players and wraps it. Exact duplicates are dropped; the result is
/// sorted ascending.
inline SimpleGame validate_game(int n, std::vector<Coalition> coalitions) {
  detail::check_player_count(n);
  for (Coalition c : coalitions) detail::check_fits(c, n);
  if (coalitions.empty()) {
    throw Error(ErrorCode::kEmptyFamily,
                "no maximal losing coalitions given; the empty coalition must lose");
  }
  std::sort(coalitions.begin(), coalitions.end());
  coalitions.erase(std::unique(coalitions.begin(), coalitions.end()),
                   coalitions.end());
  if (coalitions.back() == Coalition::full(n)) {
    throw Error(ErrorCode::kFullCoalitionLosing,
                "the grand coalition " + Coalition::full(n).to_string() +
                    " must win");
  }
  for (std::size_t i = 0; i < coalitions.size(); ++i) {
    for (std::size_t j = i + 1; j < coalitions.size(); ++j) {
      // Sorted ascending, so coalitions[j] can never be a proper subset of
      // coalitions[i].
      if (coalitions[i].is_subset_of(coalitions[j])) {
        throw Error(ErrorCode::kAntichainViolation,
                    coalitions[i].to_string() + " is contained in " +
                        coalitions[j].to_string());
      }
    }
  }
  return SimpleGame(n, std::move(coalitions));
}

inline bool is_winning(const SimpleGame& game, Coalition s) {
  return std::none_of(game.maximal_losing().begin(), game.maximal_losing().end(),
                      [s](Coalition t) { return s.is_subset_of(t); });
}

/// The weighted game [quota; w_1,...,w_n]. The player count is the number
/// of weights.
struct WeightedGame {
  std::uint64_t quota = 0;
  std::vector<std::uint64_t> weights;

  int n() const { return static_cast<int>(weights.size()); }

  /// Bracket notation, e.g. "[2;1,1,2,0]".
  std::string to_string() const {
    std::ostringstream os;
    os << '[' << quota << ';';
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (i != 0) os << ',';
      os << weights[i];
    }
    os << ']';
    return os.str();
  }

  bool operator==(const WeightedGame&) const = default;
};

inline bool weighted_is_winning(const WeightedGame& wg, Coalition s) {
  std::uint64_t total = 0;
  if (total >= wg.quota) return true;
  for (Coalition::Bits rest = s.bits(); rest != 0; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    if (i >= wg.weights.size()) continue;
    // Compare before adding so huge weights cannot wrap around.
    if (wg.weights[i] >= wg.quota - total) return true;
    total += wg.weights[i];
  }
  return false;
}

/// An ordered list of weighted games whose intersection is claimed to equal
/// some simple game.
class Decomposition {
 public:
  Decomposition(int n, std::vector<WeightedGame> parts)
      : n_(n), parts_(std::move(parts)) {
    if (parts_.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "a decomposition needs at least one part");
    }
    for (const auto& part : parts_) {
      if (part.n() != n_) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "part " + part.to_string() + " has " + std::to_string(part.n()) +
                        " weights, expected " + std::to_string(n_));
      }
    }
  }

  int n() const { return n_; }
  std::span<const WeightedGame> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

  /// Wins iff every part wins.
  bool is_winning(Coalition s) const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [s](const WeightedGame& wg) { return weighted_is_winning(wg, s); });
  }

  bool operator==(const Decomposition&) const = default;

 private:
  int n_;
  std::vector<WeightedGame> parts_;
};

/// Maximal losing coalitions of the monotone game whose winning coalitions
/// are those accepted by `winning`. The oracle is evaluated once on every
/// coalition and checked for monotonicity along each single-player step.
///
/// Returns the losing coalitions whose every one-player extension wins, in
/// ascending order. An oracle under which everything wins yields an empty
/// result; one under which only ∅ loses yields {∅}.
inline std::vector<Coalition> derive_maximal_losing(
    int n, const std::function<bool(Coalition)>& winning) {
  detail::check_player_count(n);
  const std::size_t count = std::size_t{1} << n;
  std::vector<bool> wins(count);
  for (std::size_t b = 0; b < count; ++b) wins[b] = winning(Coalition(b));

  std::vector<Coalition> out;
  for (std::size_t b = 0; b < count; ++b) {
    bool maximal = !wins[b];
    for (int i = 0; i < n; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if ((b & bit) != 0) continue;
      if (wins[b] && !wins[b | bit]) {
        throw Error(ErrorCode::kNonMonotoneOracle,
                    Coalition(b).to_string() + " wins but its superset " +
                        Coalition(b | bit).to_string() + " loses");
      }
      if (!wins[b | bit]) maximal = false;
    }
    if (maximal) out.emplace_back(b);
  }
  return out;
}

inline std::vector<Coalition> derive_maximal_losing(int n, const WeightedGame& wg) {
  return derive_maximal_losing(n, [&wg](Coalition s) { return weighted_is_winning(wg, s); });
}

}  // namespace simplegames

#endif  // SIMPLEGAMES_GAME_HPP
