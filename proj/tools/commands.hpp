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

// Subcommand bodies for the simplegames CLI. Each returns the process exit
// status and writes human-readable output to `out`, diagnostics to `err`.
// Commands that produce a file print it to `out` when no output path is
// given; their summary then moves to `err` so `out` stays valid JSON.
//
// Exit status: 0 ok, 1 bad input, 2 internal verification failure,
// 3 decomposition does not match the game.

#ifndef SIMPLEGAMES_TOOLS_COMMANDS_HPP
#define SIMPLEGAMES_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "simplegames/simplegames.hpp"

namespace simplegames::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitMismatch = 3;

namespace detail {

inline void emit(const std::optional<std::string>& output, const std::string& contents,
                 std::ostream& out) {
  if (output) {
    write_file(*output, contents);
  } else {
    out << contents;
  }
}

}  // namespace detail

struct DecomposeOptions {
  std::string input;
  Method method = Method::kCovering;
  std::optional<std::string> cover;
  bool full_code = false;
  std::optional<std::string> output;
};

inline int cmd_decompose(const DecomposeOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const SimpleGame game = parse_game(read_file(opts.input));
    const std::size_t lm = game.maximal_losing().size();
    std::optional<Decomposition> dec;
    std::string bound;
    switch (opts.method) {
      case Method::kTaylorZwicker:
        dec = taylor_zwicker(game);
        bound = "|L^M| = " + std::to_string(lm);
        break;
      case Method::kCovering: {
        if (opts.cover && opts.full_code) {
          throw Error(ErrorCode::kInvalidArgument, "--cover and --full-code are exclusive");
        }
        const Code code = opts.cover       ? parse_code(read_file(*opts.cover))
                          : opts.full_code ? full_cover(game.n())
                                           : greedy_cover(game.n(), game.maximal_losing());
        dec = decompose_covering(game, code);
        bound = "|C| = " + std::to_string(code.size());
        break;
      }
      case Method::kPairing: {
        const auto singles = pair_partition(game).singletons.size();
        dec = decompose_pairing(game);
        bound = "(|L^M|+|C|)/2 = (" + std::to_string(lm) + "+" + std::to_string(singles) +
                ")/2 = " + std::to_string((lm + singles) / 2);
        break;
      }
    }

    const VerificationReport report = verify_decomposition(game, *dec);
    if (!report.equivalent) {
      err << "internal error: " << to_string(opts.method)
          << " decomposition disagrees with the game at " << report.first_mismatch->to_string()
          << "\n";
      return kExitInternal;
    }
    detail::emit(opts.output, serialize_decomposition(*dec, opts.method), out);
    std::ostream& summary = opts.output ? out : err;
    summary << "method: " << to_string(opts.method) << "\n"
        << "part_count: " << dec->size() << "\n"
        << "bound: " << bound << "\n"
        << "verified: EQUIVALENT (" << report.coalitions_checked << " coalitions checked)\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

struct CoverOptions {
  std::optional<std::string> input;
  std::optional<int> full;
  std::optional<std::string> output;
};

inline int cmd_cover(const CoverOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (opts.input.has_value() == opts.full.has_value()) {
      throw Error(ErrorCode::kInvalidArgument, "give either a game file or --full N");
    }
    if (opts.full) {
      const Code code = full_cover(*opts.full);
      const BoundsReport b = bounds_report(*opts.full);
      detail::emit(opts.output, serialize_code(code), out);
      std::ostream& summary = opts.output ? out : err;
      summary << "centers: " << code.size() << "\n"
          << "sphere_lower: 2^n/(n+1) = " << Rational::make(std::uint64_t{1} << b.n, b.n + 1).to_string()
          << "\n"
          << "kn_exact: " << (b.kn_exact ? std::to_string(*b.kn_exact) : "unknown") << "\n"
          << "kn_upper_log: " << b.kn_upper_log.to_string() << "\n"
          << "sperner_bound: " << b.sperner_bound << "\n";
      return kExitOk;
    }
    const SimpleGame game = parse_game(read_file(*opts.input));
    const Code code = greedy_cover(game.n(), game.maximal_losing());
    detail::emit(opts.output, serialize_code(code), out);
    std::ostream& summary = opts.output ? out : err;
    summary << "centers: " << code.size() << "\n"
        << "targets: " << game.maximal_losing().size() << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

/// One line: every field of the bounds report, with the published table
/// columns appended when available.
inline std::string format_bounds(const BoundsReport& b) {
  std::string row = "n=" + std::to_string(b.n) +
                    " lower_formula=C(" + std::to_string(b.n) + "," + std::to_string(b.n / 2) +
                    ")/" + std::to_string(b.n) + "=" + b.lower_bound_formula.to_string() +
                    " sperner=" + std::to_string(b.sperner_bound) +
                    " sperner_minus_one=" + std::to_string(b.taylor_zwicker_minus_one) +
                    " kn_exact=" + (b.kn_exact ? std::to_string(*b.kn_exact) : "unknown") +
                    " kn_upper_log=" + b.kn_upper_log.to_string();
  if (b.table_row) {
    row += " table_lower=" + std::to_string(b.table_row->lower) +
           " table_upper=" + std::to_string(b.table_row->upper);
  }
  return row;
}

inline int cmd_bounds(int n, std::ostream& out, std::ostream& err) {
  try {
    out << format_bounds(bounds_report(n)) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

inline int cmd_verify(const std::string& game_path, const std::string& decomposition_path,
                      std::ostream& out, std::ostream& err) {
  try {
    const SimpleGame game = parse_game(read_file(game_path));
    const DecompositionFile file = parse_decomposition(read_file(decomposition_path));
    const VerificationReport report = verify_decomposition(game, file.decomposition);
    if (!report.equivalent) {
      const Coalition s = *report.first_mismatch;
      out << "MISMATCH at " << s.to_string() << ": game says "
          << (is_winning(game, s) ? "winning" : "losing") << ", decomposition says "
          << (file.decomposition.is_winning(s) ? "winning" : "losing") << "\n";
      return kExitMismatch;
    }
    out << "EQUIVALENT (" << report.coalitions_checked << " coalitions checked)\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

/// Writes a random game; the same seed and n always give the same file.
inline int cmd_generate(int n, std::uint64_t seed, const std::optional<std::string>& output,
                        std::ostream& out, std::ostream& err) {
  try {
    AntichainGenerator gen(seed);
    detail::emit(output, serialize_game(gen.next(n)), out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace simplegames::cli

#endif  // SIMPLEGAMES_TOOLS_COMMANDS_HPP
