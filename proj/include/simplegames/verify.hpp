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

#ifndef SIMPLEGAMES_VERIFY_HPP
#define SIMPLEGAMES_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "simplegames/coalition.hpp"
#include "simplegames/error.hpp"
#include "simplegames/game.hpp"

namespace simplegames {

struct VerificationReport {
  bool equivalent = false;
  /// Smallest coalition on which game and decomposition disagree.
  std::optional<Coalition> first_mismatch;
  std::uint64_t coalitions_checked = 0;
};

/// Compares the game with the intersection of the decomposition's parts on
/// every coalition, stopping at the first disagreement.
inline VerificationReport verify_decomposition(const SimpleGame& game, const Decomposition& dec) {
  if (game.n() != dec.n()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "game has " + std::to_string(game.n()) + " players, decomposition has " +
                    std::to_string(dec.n()));
  }
  VerificationReport report;
  const Coalition::Bits end = Coalition::Bits{1} << game.n();
  for (Coalition::Bits b = 0; b < end; ++b) {
    const Coalition s(b);
    ++report.coalitions_checked;
    if (is_winning(game, s) != dec.is_winning(s)) {
      report.first_mismatch = s;
      return report;
    }
  }
  report.equivalent = true;
  return report;
}

/// Two losing coalitions that can swap players and both end up winning.
/// The player multiset of the losing pair must equal that of the winning
/// pair.
struct TradeCertificate {
  std::pair<Coalition, Coalition> losing_pair;
  std::pair<Coalition, Coalition> winning_pair;

  /// Every player appears equally often on both sides. Each count is 0, 1
  /// or 2, so comparing intersections and unions is enough.
  bool is_balanced() const {
    const auto [a, b] = losing_pair;
    const auto [c, d] = winning_pair;
    return (a & b) == (c & d) && (a | b) == (c | d);
  }

  bool operator==(const TradeCertificate&) const = default;
};

/// True iff both losing coalitions lose and both winning coalitions win
/// under `winning`. A true result rules out any single weighted
/// representation: the two winning sides would weigh at least 2q in total
/// while the same players, split the other way, weigh less than 2q.
inline bool check_trade_certificate(const std::function<bool(Coalition)>& winning,
                                    const TradeCertificate& cert) {
  if (!cert.is_balanced()) {
    throw Error(ErrorCode::kUnbalancedTrade,
                "losing " + cert.losing_pair.first.to_string() + "," +
                    cert.losing_pair.second.to_string() + " and winning " +
                    cert.winning_pair.first.to_string() + "," +
                    cert.winning_pair.second.to_string() + " hold different players");
  }
  return !winning(cert.losing_pair.first) && !winning(cert.losing_pair.second) &&
         winning(cert.winning_pair.first) && winning(cert.winning_pair.second);
}

inline bool check_trade_certificate(const SimpleGame& game, const TradeCertificate& cert) {
  return check_trade_certificate([&game](Coalition s) { return is_winning(game, s); }, cert);
}

inline bool check_trade_certificate(const Decomposition& dec, const TradeCertificate& cert) {
  return check_trade_certificate([&dec](Coalition s) { return dec.is_winning(s); }, cert);
}

inline bool check_trade_certificate(const WeightedGame& wg, const TradeCertificate& cert) {
  return check_trade_certificate([&wg](Coalition s) { return weighted_is_winning(wg, s); },
                                 cert);
}

inline constexpr int kTradeSearchCap = 10;

/// Searches every balanced 2-trade for a certificate. Only maximal losing
/// coalitions need to be tried on the losing side: growing a losing
/// coalition to a maximal one adds players that can be handed to whichever
/// winning coalition lacks them, and winners stay winners. The winning side
/// is then every split of the two coalitions' symmetric difference.
///
/// Absence does not prove the game weighted.
inline std::optional<TradeCertificate> find_trade_certificate(const SimpleGame& game,
                                                              int cap = kTradeSearchCap) {
  if (game.n() > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "trade search is limited to n <= " + std::to_string(cap) + ", got " +
                    std::to_string(game.n()));
  }
  const auto lm = game.maximal_losing();
  for (std::size_t i = 0; i < lm.size(); ++i) {
    for (std::size_t j = i + 1; j < lm.size(); ++j) {
      const Coalition common = lm[i] & lm[j];
      const Coalition::Bits diff = (lm[i] ^ lm[j]).bits();
      // Walk all subsets of diff; each split is visited twice, which is
      // harmless.
      Coalition::Bits s = diff;
      while (true) {
        const Coalition c = common | Coalition(s);
        const Coalition d = common | Coalition(diff & ~s);
        if (is_winning(game, c) && is_winning(game, d)) {
          return TradeCertificate{{lm[i], lm[j]}, {c, d}};
        }
        if (s == 0) break;
        s = (s - 1) & diff;
      }
    }
  }
  return std::nullopt;
}

}  // namespace simplegames

#endif  // SIMPLEGAMES_VERIFY_HPP
