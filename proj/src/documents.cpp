#include "jung/documents.hpp"

#include "jung/parse.hpp"

namespace jung {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

BiPoly poly_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_string()) throw FormatError(std::string("field '") + name + "' must be a string");
  return parse_poly(v.get<std::string>());
}

Rational rational_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (!v.is_string()) throw FormatError(std::string("field '") + name + "' must be a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

AutoPair pair_from_json(const json& doc) { return {poly_field(doc, "P"), poly_field(doc, "Q")}; }

json pair_to_json(const AutoPair& pair) {
  return json{{"P", to_string(pair.p)}, {"Q", to_string(pair.q)}};
}

TameWord word_from_json(const json& doc) {
  const json& moves = field(doc, "moves");
  if (!moves.is_array()) throw FormatError("'moves' must be an array");
  TameWord word;
  for (const json& rec : moves) {
    const json& kind = field(rec, "kind");
    const std::string k = kind.is_string() ? kind.get<std::string>() : std::string{};
    try {
      if (k == "elem_y") {
        word.push_back(TameMove::elem_y(poly_field(rec, "p")));
      } else if (k == "elem_x") {
        word.push_back(TameMove::elem_x(poly_field(rec, "q")));
      } else if (k == "linear") {
        word.push_back(TameMove::linear(rational_field(rec, "a"), rational_field(rec, "b"),
                                        rational_field(rec, "c"), rational_field(rec, "d")));
      } else {
        throw FormatError("unknown move kind '" + kind.dump() + "'");
      }
    } catch (const SingularLinearError& e) {
      throw FormatError(e.what());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  return word;
}

json move_to_json(const TameMove& move) {
  if (const auto* m = move.get_if<ElemY>()) return json{{"kind", "elem_y"}, {"p", to_string(m->p)}};
  if (const auto* m = move.get_if<ElemX>()) return json{{"kind", "elem_x"}, {"q", to_string(m->q)}};
  const auto& l = *move.get_if<Linear>();
  return json{{"kind", "linear"},
              {"a", to_string(l.a)},
              {"b", to_string(l.b)},
              {"c", to_string(l.c)},
              {"d", to_string(l.d)}};
}

json word_to_json(const TameWord& word) {
  json moves = json::array();
  for (const auto& m : word) moves.push_back(move_to_json(m));
  return json{{"moves", moves}};
}

}  // namespace jung
