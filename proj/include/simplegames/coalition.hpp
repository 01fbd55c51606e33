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

#ifndef SIMPLEGAMES_COALITION_HPP
#define SIMPLEGAMES_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "simplegames/error.hpp"

#ifndef SIMPLEGAMES_PLAYER_CAP
#define SIMPLEGAMES_PLAYER_CAP 24
#endif

namespace simplegames {

/// Largest player count accepted by anything that enumerates all 2^n
/// coalitions. Override at build time with -DSIMPLEGAMES_PLAYER_CAP=...
inline constexpr int kPlayerCap = SIMPLEGAMES_PLAYER_CAP;
static_assert(kPlayerCap >= 1 && kPlayerCap <= 30);

/// Widest bit vector a Coalition can hold.
inline constexpr int kMaxWidth = 63;

/// A subset of the players {1..n} stored as a characteristic vector.
/// Player p (1-based) lives in bit p-1. Ordering compares the vector as an
/// unsigned integer, so player 1 is the least significant position.
class Coalition {
 public:
  using Bits = std::uint64_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Bits bits) : bits_(bits) {}

  /// Builds a coalition from 1-based player indices.
  static Coalition of(std::initializer_list<int> players) {
    return of(std::span<const int>(players.begin(), players.size()));
  }

  static Coalition of(std::span<const int> players) {
    Bits bits = 0;
    for (int p : players) {
      if (p < 1 || p > kMaxWidth) {
        throw Error(ErrorCode::kPlayerOutOfRange,
                    "player index " + std::to_string(p) + " is not in 1.." +
                        std::to_string(kMaxWidth));
      }
      bits |= Bits{1} << (p - 1);
    }
    return Coalition(bits);
  }

  /// The grand coalition {1..n}.
  static constexpr Coalition full(int n) {
    return Coalition(n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  static constexpr Coalition empty() { return Coalition(); }

  constexpr Bits bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool is_empty() const { return bits_ == 0; }

  /// True when only players 1..n are present.
  constexpr bool fits(int n) const { return (bits_ & ~full(n).bits_) == 0; }

  constexpr bool contains(int player) const {
    return player >= 1 && player <= kMaxWidth &&
           ((bits_ >> (player - 1)) & 1U) != 0;
  }

  constexpr bool is_subset_of(Coalition other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr Coalition with(int player) const {
    return Coalition(bits_ | (Bits{1} << (player - 1)));
  }
  constexpr Coalition without(int player) const {
    return Coalition(bits_ & ~(Bits{1} << (player - 1)));
  }

  constexpr Coalition operator|(Coalition o) const { return Coalition(bits_ | o.bits_); }
  constexpr Coalition operator&(Coalition o) const { return Coalition(bits_ & o.bits_); }
  constexpr Coalition operator^(Coalition o) const { return Coalition(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr Coalition operator-(Coalition o) const { return Coalition(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const Coalition&) const = default;

  /// 1-based members in increasing order.
  std::vector<int> players() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Bits rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
  }

  /// Set notation, e.g. "{1,2,3}" or "{}".
  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int p : players()) {
      if (!first) os << ',';
      os << p;
      first = false;
    }
    os << '}';
    return os.str();
  }

 private:
  Bits bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Coalition c) {
  return os << c.to_string();
}

/// Size of the symmetric difference.
constexpr int hamming_distance(Coalition x, Coalition y) {
  return (x ^ y).size();
}

/// Calls `fn(Coalition)` for every subset of {1..n} in increasing order.
template <typename Fn>
void for_each_coalition(int n, Fn&& fn) {
  const Coalition::Bits end = Coalition::Bits{1} << n;
  for (Coalition::Bits b = 0; b < end; ++b) {
    std::invoke(fn, Coalition(b));
  }
}

/// All 2^n coalitions of {1..n}, in increasing order.
inline std::vector<Coalition> all_coalitions(int n) {
  if (n < 0 || n > kPlayerCap) {
    throw Error(ErrorCode::kCapExceeded,
                "cannot enumerate 2^" + std::to_string(n) + " coalitions (cap " +
                    std::to_string(kPlayerCap) + ")");
  }
  std::vector<Coalition> out;
  out.reserve(std::size_t{1} << n);
  for_each_coalition(n, [&](Coalition c) { out.push_back(c); });
  return out;
}

}  // namespace simplegames

template <>
struct std::hash<simplegames::Coalition> {
  std::size_t operator()(simplegames::Coalition c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bits());
  }
};

#endif  // SIMPLEGAMES_COALITION_HPP
