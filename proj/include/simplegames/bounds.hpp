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

#ifndef SIMPLEGAMES_BOUNDS_HPP
#define SIMPLEGAMES_BOUNDS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "simplegames/error.hpp"

namespace simplegames {

/// Non-negative fraction kept in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
  }

  bool is_integer() const { return den == 1; }

  std::string to_string() const {
    return is_integer() ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
  }

  long double value() const {
    return static_cast<long double>(num) / static_cast<long double>(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <=
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

/// (ln(n+1) + 1) * scale, with scale = 2^n/(n+1) held exactly. The
/// logarithm is irrational, so only the rational factor is exact.
struct LogCoverBound {
  int n = 0;
  Rational scale;

  long double value() const {
    return (std::log(static_cast<long double>(n + 1)) + 1.0L) * scale.value();
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "(ln(" << n + 1 << ")+1)*" << scale.to_string() << " = " << std::fixed
       << std::setprecision(2) << static_cast<double>(value());
    return os.str();
  }
};

/// Published lower/upper bounds on the maximum dimension for one n.
struct DimensionBoundsRow {
  int n = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool operator==(const DimensionBoundsRow&) const = default;
};

/// Bundled copy of data/dimension_bounds.txt ("n lower upper" per line).
inline constexpr std::string_view kDimensionBoundsTable =
    "# n lower upper\n"
    "6 4 12\n"
    "7 7 16\n"
    "8 14 32\n"
    "9 18 62\n"
    "10 36 120\n"
    "11 66 192\n"
    "12 132 380\n"
    "13 166 704\n"
    "14 325 1408\n"
    "15 585 2048\n";

/// Parses "n lower upper" rows; blank lines and '#' comments are skipped.
inline std::map<int, DimensionBoundsRow> parse_dimension_bounds(std::string_view text) {
  std::map<int, DimensionBoundsRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    DimensionBoundsRow row;
    std::string extra;
    if (!(fields >> row.n >> row.lower >> row.upper) || (fields >> extra)) {
      throw Error(ErrorCode::kParseError,
                  "bounds table line " + std::to_string(line_no) + ": expected 'n lower upper'");
    }
    rows[row.n] = row;
  }
  return rows;
}

inline const std::map<int, DimensionBoundsRow>& dimension_bounds_table() {
  static const auto table = parse_dimension_bounds(kDimensionBoundsTable);
  return table;
}

/// C(n, k) for n <= 63; every entry of those rows fits in 64 bits.
inline std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 63) throw Error(ErrorCode::kInvalidArgument, "binomial needs 0 <= n <= 63");
  if (k < 0 || k > n) return 0;
  std::array<std::uint64_t, 64> row{};
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j > 0; --j) row[j] += row[j - 1];
  }
  return row[k];
}

/// Known minimum sizes of radius-1 covering codes that no formula covers.
/// K_5 = 7 is re-derived by exhaustive search in the test suite.
inline std::optional<std::uint64_t> known_min_cover_size(int n) {
  if (n == 5) return 7;
  return std::nullopt;
}

struct BoundsReport {
  int n = 0;
  /// C(n, floor(n/2)), the largest possible antichain.
  std::uint64_t sperner_bound = 0;
  std::uint64_t taylor_zwicker_minus_one = 0;
  /// C(n, floor(n/2)) / n, lower bound on the maximum dimension.
  Rational lower_bound_formula;
  /// Minimum radius-1 cover size when known exactly.
  std::optional<std::uint64_t> kn_exact;
  LogCoverBound kn_upper_log;
  std::optional<DimensionBoundsRow> table_row;
};

inline BoundsReport bounds_report(int n) {
  if (n < 1 || n > 63) {
    throw Error(ErrorCode::kInvalidArgument,
                "bounds are reported for 1 <= n <= 63, got " + std::to_string(n));
  }
  const std::uint64_t two_n = std::uint64_t{1} << n;
  const auto un = static_cast<std::uint64_t>(n);

  BoundsReport r;
  r.n = n;
  r.sperner_bound = binomial(n, n / 2);
  r.taylor_zwicker_minus_one = r.sperner_bound - 1;
  r.lower_bound_formula = Rational::make(r.sperner_bound, un);
  r.kn_upper_log = {n, Rational::make(two_n, un + 1)};

  const bool one_below_power = ((un + 1) & un) == 0;  // n = 2^m - 1
  const bool power = n >= 2 && (un & (un - 1)) == 0;  // n = 2^m, m >= 1
  if (one_below_power) {
    r.kn_exact = two_n / (un + 1);
  } else if (power) {
    r.kn_exact = two_n / un;
  } else {
    r.kn_exact = known_min_cover_size(n);
  }

  const auto& table = dimension_bounds_table();
  if (auto it = table.find(n); it != table.end()) r.table_row = it->second;
  return r;
}

}  // namespace simplegames

#endif  // SIMPLEGAMES_BOUNDS_HPP
