#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "jung/tame.hpp"

namespace jung {

// Malformed JSON document (missing fields, unknown kinds, bad rationals, a
// singular linear record).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"P": "<poly>", "Q": "<poly>"}
AutoPair pair_from_json(const nlohmann::json& doc);
nlohmann::json pair_to_json(const AutoPair& pair);

// {"moves": [{"kind": "elem_y", "p": ...}, {"kind": "elem_x", "q": ...},
//            {"kind": "linear", "a": "1", "b": "0", "c": "0", "d": "1"}]}
TameWord word_from_json(const nlohmann::json& doc);
nlohmann::json word_to_json(const TameWord& word);

nlohmann::json move_to_json(const TameMove& move);

}  // namespace jung
