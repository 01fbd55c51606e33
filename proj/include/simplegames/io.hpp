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

// JSON file formats. Players are 1-based everywhere in these files.
//
//   game:          {"n": 4, "maximal_losing": [[1,3],[1,4],[2,3],[2,4]]}
//   code:          {"n": 4, "centers": [[4],[1,2,3]]}
//   decomposition: {"n": 4, "method": "covering",
//                   "parts": [{"quota": 2, "weights": [1,1,2,0]}, ...],
//                   "part_count": 2}

#ifndef SIMPLEGAMES_IO_HPP
#define SIMPLEGAMES_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "simplegames/codes.hpp"
#include "simplegames/coalition.hpp"
#include "simplegames/error.hpp"
#include "simplegames/game.hpp"

namespace simplegames {

enum class Method { kTaylorZwicker, kCovering, kPairing };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::kTaylorZwicker: return "taylor-zwicker";
    case Method::kCovering: return "covering";
    case Method::kPairing: return "pairing";
  }
  return "?";
}

inline Method parse_method(std::string_view name) {
  if (name == "taylor-zwicker") return Method::kTaylorZwicker;
  if (name == "covering") return Method::kCovering;
  if (name == "pairing") return Method::kPairing;
  throw Error(ErrorCode::kParseError, "unknown method '" + std::string(name) + "'");
}

/// A decomposition together with the method that produced it.
struct DecompositionFile {
  Method method = Method::kTaylorZwicker;
  Decomposition decomposition;
};

namespace io_detail {

using Json = nlohmann::ordered_json;

inline Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

inline const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw Error(ErrorCode::kParseError, "expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::kParseError, std::string("missing field '") + key + "'");
  return *it;
}

inline std::int64_t integer(const Json& v, const char* what) {
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::kParseError, std::string(what) + " must be an integer");
  }
  return v.get<std::int64_t>();
}

inline std::uint64_t unsigned_integer(const Json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw Error(ErrorCode::kParseError, std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

inline int player_count(const Json& obj) {
  const auto n = integer(field(obj, "n"), "n");
  if (n < 1 || n > kMaxWidth) {
    throw Error(ErrorCode::kPlayerOutOfRange, "n = " + std::to_string(n));
  }
  return static_cast<int>(n);
}

inline std::vector<Coalition> coalition_list(const Json& v, int n, const char* what) {
  if (!v.is_array()) throw Error(ErrorCode::kParseError, std::string(what) + " must be a list");
  std::vector<Coalition> out;
  for (const Json& members : v) {
    if (!members.is_array()) {
      throw Error(ErrorCode::kParseError, std::string(what) + " entries must be lists of players");
    }
    Coalition c;
    for (const Json& p : members) {
      const auto player = integer(p, "player index");
      if (player < 1 || player > n) {
        throw Error(ErrorCode::kPlayerOutOfRange,
                    "player " + std::to_string(player) + " is not in 1.." + std::to_string(n));
      }
      c = c.with(static_cast<int>(player));
    }
    out.push_back(c);
  }
  return out;
}

inline Json coalition_list_json(std::span<const Coalition> coalitions) {
  Json list = Json::array();
  for (Coalition c : coalitions) list.push_back(c.players());
  return list;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace io_detail

inline SimpleGame parse_game(std::string_view text) {
  const auto j = io_detail::parse_text(text);
  const int n = io_detail::player_count(j);
  return validate_game(n, io_detail::coalition_list(io_detail::field(j, "maximal_losing"), n,
                                                    "maximal_losing"));
}

inline std::string serialize_game(const SimpleGame& game) {
  io_detail::Json j;
  j["n"] = game.n();
  j["maximal_losing"] = io_detail::coalition_list_json(game.maximal_losing());
  return io_detail::dump(j);
}

inline Code parse_code(std::string_view text) {
  const auto j = io_detail::parse_text(text);
  const int n = io_detail::player_count(j);
  return Code(n, io_detail::coalition_list(io_detail::field(j, "centers"), n, "centers"));
}

inline std::string serialize_code(const Code& code) {
  io_detail::Json j;
  j["n"] = code.n();
  j["centers"] = io_detail::coalition_list_json(code.centers());
  return io_detail::dump(j);
}

inline DecompositionFile parse_decomposition(std::string_view text) {
  const auto j = io_detail::parse_text(text);
  const int n = io_detail::player_count(j);
  const auto& method = io_detail::field(j, "method");
  if (!method.is_string()) throw Error(ErrorCode::kParseError, "method must be a string");
  const auto& parts_json = io_detail::field(j, "parts");
  if (!parts_json.is_array()) throw Error(ErrorCode::kParseError, "parts must be a list");

  std::vector<WeightedGame> parts;
  for (const auto& part : parts_json) {
    WeightedGame wg;
    wg.quota = io_detail::unsigned_integer(io_detail::field(part, "quota"), "quota");
    const auto& weights = io_detail::field(part, "weights");
    if (!weights.is_array()) throw Error(ErrorCode::kParseError, "weights must be a list");
    for (const auto& w : weights) wg.weights.push_back(io_detail::unsigned_integer(w, "weight"));
    if (wg.n() != n) {
      throw Error(ErrorCode::kParseError, "part " + wg.to_string() + " does not have " +
                                              std::to_string(n) + " weights");
    }
    parts.push_back(std::move(wg));
  }
  const auto count = io_detail::integer(io_detail::field(j, "part_count"), "part_count");
  if (count != static_cast<std::int64_t>(parts.size())) {
    throw Error(ErrorCode::kParseError, "part_count " + std::to_string(count) + " but " +
                                            std::to_string(parts.size()) + " parts listed");
  }
  if (parts.empty()) throw Error(ErrorCode::kParseError, "decomposition has no parts");
  return {parse_method(method.get<std::string>()), Decomposition(n, std::move(parts))};
}

inline std::string serialize_decomposition(const Decomposition& dec, Method method) {
  io_detail::Json j;
  j["n"] = dec.n();
  j["method"] = std::string(to_string(method));
  io_detail::Json parts = io_detail::Json::array();
  for (const auto& part : dec.parts()) {
    io_detail::Json p;
    p["quota"] = part.quota;
    p["weights"] = part.weights;
    parts.push_back(std::move(p));
  }
  j["parts"] = std::move(parts);
  j["part_count"] = dec.size();
  return io_detail::dump(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::kInvalidArgument, "short write to '" + path + "'");
}

}  // namespace simplegames

#endif  // SIMPLEGAMES_IO_HPP
