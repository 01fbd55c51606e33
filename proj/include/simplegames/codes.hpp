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

#ifndef SIMPLEGAMES_CODES_HPP
#define SIMPLEGAMES_CODES_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simplegames/coalition.hpp"
#include "simplegames/error.hpp"
#include "simplegames/game.hpp"

namespace simplegames {

/// A binary code of length n, viewed as a set of coalitions (the centers).
/// Centers are kept sorted and unique.
class Code {
 public:
  Code(int n, std::vector<Coalition> centers) : n_(n), centers_(std::move(centers)) {
    if (n_ < 1 || n_ > kMaxWidth) {
      throw Error(ErrorCode::kPlayerOutOfRange, "code length " + std::to_string(n_));
    }
    if (centers_.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "a code needs at least one center");
    }
    for (Coalition c : centers_) detail::check_fits(c, n_);
    std::sort(centers_.begin(), centers_.end());
    centers_.erase(std::unique(centers_.begin(), centers_.end()), centers_.end());
  }

  int n() const { return n_; }
  std::span<const Coalition> centers() const { return centers_; }
  std::size_t size() const { return centers_.size(); }

  bool contains(Coalition c) const {
    return std::binary_search(centers_.begin(), centers_.end(), c);
  }

  bool operator==(const Code&) const = default;

 private:
  int n_;
  std::vector<Coalition> centers_;
};

namespace detail {

// Zero-syndrome vectors of length 2^m - 1 under the parity-check matrix
// whose i-th column is the binary expansion of i.
inline std::vector<Coalition> hamming_codewords(int m) {
  const int n = (1 << m) - 1;
  std::vector<Coalition> words;
  words.reserve(std::size_t{1} << (n - m));
  for_each_coalition(n, [&](Coalition x) {
    unsigned syndrome = 0;
    for (int p : x.players()) syndrome ^= static_cast<unsigned>(p);
    if (syndrome == 0) words.push_back(x);
  });
  return words;
}

}  // namespace detail

/// The perfect Hamming code of length 2^m - 1, for 2 <= m <= 4.
inline Code hamming_code(int m) {
  if (m < 2 || m > 4) {
    throw Error(ErrorCode::kMOutOfRange,
                "hamming_code supports m in 2..4, got " + std::to_string(m));
  }
  return Code((1 << m) - 1, detail::hamming_codewords(m));
}

/// True iff every target lies within Hamming distance r of some center.
inline bool covering_radius_at_most(const Code& code, std::span<const Coalition> targets,
                                    int r) {
  if (r < 0) return targets.empty();
  return std::all_of(targets.begin(), targets.end(), [&](Coalition x) {
    if (code.contains(x)) return true;
    if (r == 1) {
      for (int p = 1; p <= code.n(); ++p) {
        if (code.contains(x ^ Coalition::of({p}))) return true;
      }
      return false;
    }
    return std::any_of(code.centers().begin(), code.centers().end(),
                       [&](Coalition c) { return hamming_distance(x, c) <= r; });
  });
}

/// Same check against the whole space 2^N.
inline bool covering_radius_at_most(const Code& code, int r) {
  return covering_radius_at_most(code, all_coalitions(code.n()), r);
}

/// Greedy radius-1 cover of `targets`: repeatedly take the candidate center
/// whose ball holds the most still-uncovered targets, smallest coalition on
/// ties. Candidates are the targets and their distance-1 neighbours, which
/// is every center whose ball can reach a target.
inline Code greedy_cover(int n, std::span<const Coalition> targets) {
  detail::check_player_count(n);
  if (targets.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "greedy_cover needs at least one target");
  }
  std::vector<Coalition> sorted(targets.begin(), targets.end());
  for (Coalition t : sorted) detail::check_fits(t, n);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<Coalition> candidates;
  candidates.reserve(sorted.size() * static_cast<std::size_t>(n + 1));
  for (Coalition t : sorted) {
    candidates.push_back(t);
    for (int p = 1; p <= n; ++p) candidates.push_back(t ^ Coalition::of({p}));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<bool> covered(sorted.size(), false);
  auto ball = [&](Coalition c, auto&& visit) {
    auto probe = [&](Coalition x) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
      if (it != sorted.end() && *it == x) visit(static_cast<std::size_t>(it - sorted.begin()));
    };
    probe(c);
    for (int p = 1; p <= n; ++p) probe(c ^ Coalition::of({p}));
  };
  auto gain = [&](Coalition c) {
    int g = 0;
    ball(c, [&](std::size_t i) { g += covered[i] ? 0 : 1; });
    return g;
  };

  // Lazy greedy: gains only shrink, so a popped entry whose recomputed gain
  // is unchanged beats every remaining upper bound. The (gain desc, center
  // asc) heap order makes the tie-break identical to a full rescan.
  using Entry = std::pair<int, Coalition>;
  auto worse = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (Coalition c : candidates) heap.emplace(gain(c), c);

  std::vector<Coalition> centers;
  std::size_t remaining = sorted.size();
  while (remaining > 0) {
    auto [stale, c] = heap.top();
    heap.pop();
    const int fresh = gain(c);
    if (fresh != stale) {
      if (fresh > 0) heap.emplace(fresh, c);
      continue;
    }
    centers.push_back(c);
    ball(c, [&](std::size_t i) {
      if (!covered[i]) {
        covered[i] = true;
        --remaining;
      }
    });
  }
  return Code(n, std::move(centers));
}

/// A radius-1 cover of all of 2^N: the longest Hamming code of length
/// n' = 2^m - 1 <= n, direct-summed with every suffix on the remaining
/// n - n' players. Size 2^(n-n') * 2^(n'-m); exactly 2^n/(n+1) when n'
/// equals n.
inline Code full_cover(int n) {
  detail::check_player_count(n);
  int m = 1;
  while ((1 << (m + 1)) - 1 <= n) ++m;
  const int prefix_len = (1 << m) - 1;
  const auto prefixes = detail::hamming_codewords(m);
  std::vector<Coalition> centers;
  centers.reserve(prefixes.size() << (n - prefix_len));
  const Coalition::Bits suffixes = Coalition::Bits{1} << (n - prefix_len);
  for (Coalition::Bits s = 0; s < suffixes; ++s) {
    for (Coalition c : prefixes) {
      centers.push_back(c | Coalition(s << prefix_len));
    }
  }
  return Code(n, std::move(centers));
}

}  // namespace simplegames

#endif  // SIMPLEGAMES_CODES_HPP
