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

#ifndef SIMPLEGAMES_DECOMPOSE_HPP
#define SIMPLEGAMES_DECOMPOSE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simplegames/codes.hpp"
#include "simplegames/coalition.hpp"
#include "simplegames/error.hpp"
#include "simplegames/game.hpp"

namespace simplegames {

// Every algorithm here rests on one identity: if L^M is split into blocks
// L_1..L_p, the game with maximal losing family L^M is the intersection of
// the games with maximal losing families L_i. A coalition loses overall iff
// it sits under some member of some block, i.e. iff it loses in some part.
// Each algorithm picks blocks whose games happen to be weighted.

/// The quota-1 game in which exactly the subsets of `t` lose.
inline WeightedGame single_coalition_game(Coalition t, int n) {
  WeightedGame wg{1, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
  for (int p = 1; p <= n; ++p) {
    if (!t.contains(p)) wg.weights[static_cast<std::size_t>(p - 1)] = 1;
  }
  return wg;
}

/// One quota-1 part per maximal losing coalition, in ascending order.
inline Decomposition taylor_zwicker(const SimpleGame& game) {
  std::vector<WeightedGame> parts;
  parts.reserve(game.maximal_losing().size());
  for (Coalition t : game.maximal_losing()) parts.push_back(single_coalition_game(t, game.n()));
  return Decomposition(game.n(), std::move(parts));
}

// ---------------------------------------------------------------------------
// Covering-code clustering

/// How the members of a cluster relate to its center. For an antichain
/// exactly one of these holds.
enum class ClusterCase {
  kBelowCenter,   // every member is the center minus one player
  kExactlyCenter, // the only member is the center itself
  kAboveCenter,   // every member is the center plus one player
};

inline std::string_view to_string(ClusterCase c) {
  switch (c) {
    case ClusterCase::kBelowCenter: return "BelowCenter";
    case ClusterCase::kExactlyCenter: return "ExactlyCenter";
    case ClusterCase::kAboveCenter: return "AboveCenter";
  }
  return "?";
}

/// The maximal losing coalitions assigned to one covering center.
class Cluster {
 public:
  /// Classifies `members` against `center`. Throws NotACover if a member is
  /// farther than distance 1, MixedCluster if the members do not all fall
  /// into the same case.
  Cluster(Coalition center, std::vector<Coalition> members)
      : center_(center), members_(std::move(members)) {
    if (members_.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "cluster at " + center.to_string() + " is empty");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

    int below = 0, exact = 0, above = 0;
    for (Coalition x : members_) {
      if (hamming_distance(x, center_) > 1) {
        throw Error(ErrorCode::kNotACover,
                    x.to_string() + " is not within distance 1 of " + center_.to_string());
      }
      if (x == center_) ++exact;
      else if (x.is_subset_of(center_)) ++below;
      else ++above;
    }
    const auto total = static_cast<int>(members_.size());
    if (below == total) case_ = ClusterCase::kBelowCenter;
    else if (exact == total && total == 1) case_ = ClusterCase::kExactlyCenter;
    else if (above == total) case_ = ClusterCase::kAboveCenter;
    else {
      throw Error(ErrorCode::kMixedCluster,
                  "members around " + center_.to_string() +
                      " mix comparable positions; the input is not an antichain");
    }
  }

  Coalition center() const { return center_; }
  std::span<const Coalition> members() const { return members_; }
  ClusterCase case_tag() const { return case_; }

  bool operator==(const Cluster&) const = default;

 private:
  Coalition center_;
  std::vector<Coalition> members_;
  ClusterCase case_ = ClusterCase::kExactlyCenter;
};

/// Assigns each maximal losing coalition to the covering center closest to
/// it (smallest center on ties). Clusters come back ordered by center;
/// centers that attract nothing are dropped.
inline std::vector<Cluster> cluster_partition(const SimpleGame& game, const Code& code) {
  if (code.n() != game.n()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "code length " + std::to_string(code.n()) + " vs " +
                    std::to_string(game.n()) + " players");
  }
  std::map<Coalition, std::vector<Coalition>> groups;
  for (Coalition x : game.maximal_losing()) {
    std::optional<Coalition> best;
    if (code.contains(x)) {
      best = x;
    } else {
      for (int p = 1; p <= game.n(); ++p) {
        const Coalition c = x ^ Coalition::of({p});
        if (code.contains(c) && (!best || c < *best)) best = c;
      }
    }
    if (!best) {
      throw Error(ErrorCode::kNotACover,
                  "maximal losing coalition " + x.to_string() +
                      " is not within distance 1 of any center");
    }
    groups[*best].push_back(x);
  }
  std::vector<Cluster> clusters;
  clusters.reserve(groups.size());
  for (auto& [center, members] : groups) clusters.emplace_back(center, std::move(members));
  return clusters;
}

/// The weighted game whose maximal losing coalitions are exactly the
/// cluster's members.
///
///   below:  R = players removed from the center. Quota |R|; |R| outside
///           the center, 1 on R, 0 on the rest of the center.
///   exact:  quota 1; 1 outside the center, 0 inside.
///   above:  A = players added to the center. Quota 2; 2 outside
///           center ∪ A, 1 on A, 0 on the center.
inline WeightedGame cluster_to_weighted(const Cluster& cluster, int n) {
  const Coalition c = cluster.center();
  detail::check_fits(c, n);
  for (Coalition x : cluster.members()) detail::check_fits(x, n);
  std::vector<std::uint64_t> w(static_cast<std::size_t>(n), 0);
  auto set = [&](Coalition s, std::uint64_t value) {
    for (int p : s.players()) w[static_cast<std::size_t>(p - 1)] = value;
  };
  const Coalition outside = Coalition::full(n) - c;

  switch (cluster.case_tag()) {
    case ClusterCase::kBelowCenter: {
      Coalition removed;
      for (Coalition x : cluster.members()) removed = removed | (c - x);
      const auto r = static_cast<std::uint64_t>(removed.size());
      set(outside, r);
      set(removed, 1);
      return {r, std::move(w)};
    }
    case ClusterCase::kExactlyCenter:
      return single_coalition_game(c, n);
    case ClusterCase::kAboveCenter: {
      Coalition added;
      for (Coalition x : cluster.members()) added = added | (x - c);
      set(outside, 2);
      set(added, 1);
      return {2, std::move(w)};
    }
  }
  return single_coalition_game(c, n);
}

/// Intersection of one weighted game per cluster of `code` (or of a greedy
/// cover of L^M when no code is supplied). Never more parts than centers.
inline Decomposition decompose_covering(const SimpleGame& game,
                                        const std::optional<Code>& code = std::nullopt) {
  const Code used = code ? *code : greedy_cover(game.n(), game.maximal_losing());
  std::vector<WeightedGame> parts;
  for (const Cluster& cluster : cluster_partition(game, used)) {
    parts.push_back(cluster_to_weighted(cluster, game.n()));
  }
  return Decomposition(game.n(), std::move(parts));
}

// ---------------------------------------------------------------------------
// Pairing

/// A maximal matching on L^M under "distance at most 3", plus the leftovers.
struct PairingPlan {
  std::vector<std::pair<Coalition, Coalition>> pairs;
  std::vector<Coalition> singletons;
};

/// Scans L^M in ascending order and matches each unmatched x with the first
/// later unmatched y at distance <= 3.
inline PairingPlan pair_partition(const SimpleGame& game) {
  const auto lm = game.maximal_losing();
  std::vector<bool> used(lm.size(), false);
  PairingPlan plan;
  for (std::size_t i = 0; i < lm.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < lm.size(); ++j) {
      if (!used[j] && hamming_distance(lm[i], lm[j]) <= 3) {
        used[i] = used[j] = true;
        plan.pairs.emplace_back(lm[i], lm[j]);
        break;
      }
    }
    if (!used[i]) plan.singletons.push_back(lm[i]);
  }
  return plan;
}

/// The weighted game whose maximal losing coalitions are exactly {x, y},
/// for incomparable x, y at distance 2 or 3.
///
/// Distance 3, x \ y = {a1, a2}, y \ x = {b}: quota 3; 3 outside x ∪ y,
/// 1 on a1 and a2, 2 on b, 0 on x ∩ y. Distance 2, x \ y = {a},
/// y \ x = {b}: quota 2; 2 outside x ∪ y, 1 on a and b, 0 on x ∩ y.
inline WeightedGame pair_to_weighted(Coalition x, Coalition y, int n) {
  detail::check_fits(x, n);
  detail::check_fits(y, n);
  const int d = hamming_distance(x, y);
  if (d < 2 || d > 3 || x.is_subset_of(y) || y.is_subset_of(x)) {
    throw Error(ErrorCode::kBadPairDistance,
                x.to_string() + " and " + y.to_string() + " are at distance " +
                    std::to_string(d) + "; need 2 or 3 and no containment");
  }
  Coalition two_side = x - y;
  Coalition one_side = y - x;
  if (two_side.size() < one_side.size()) std::swap(two_side, one_side);

  const std::uint64_t quota = static_cast<std::uint64_t>(d);
  std::vector<std::uint64_t> w(static_cast<std::size_t>(n), 0);
  for (int p : (Coalition::full(n) - (x | y)).players()) w[static_cast<std::size_t>(p - 1)] = quota;
  for (int p : two_side.players()) w[static_cast<std::size_t>(p - 1)] = 1;
  for (int p : one_side.players()) w[static_cast<std::size_t>(p - 1)] = quota - 1;
  return {quota, std::move(w)};
}

/// One part per matched pair, then one single-coalition part per leftover.
inline Decomposition decompose_pairing(const SimpleGame& game) {
  const PairingPlan plan = pair_partition(game);
  std::vector<WeightedGame> parts;
  parts.reserve(plan.pairs.size() + plan.singletons.size());
  for (auto [x, y] : plan.pairs) parts.push_back(pair_to_weighted(x, y, game.n()));
  for (Coalition t : plan.singletons) parts.push_back(single_coalition_game(t, game.n()));
  return Decomposition(game.n(), std::move(parts));
}

}  // namespace simplegames

#endif  // SIMPLEGAMES_DECOMPOSE_HPP
