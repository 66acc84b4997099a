#include "isochron/json_io.hpp"

#include <set>

#include "isochron/errors.hpp"

namespace isochron {

namespace {

void require_keys(const Json& j, std::initializer_list<const char*> required, std::initializer_list<const char*> optional,
                  const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) throw InputError(what + ": missing key '" + std::string(k) + "'");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw InputError(what + ": unknown key '" + k + "'");
  }
}

int get_int(const Json& j, const char* key, const std::string& what) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw InputError(what + ": '" + std::string(key) + "' must be an integer");
  return v.get<int>();
}

std::string get_string(const Json& j, const char* key, const std::string& what) {
  const Json& v = j.at(key);
  if (!v.is_string()) throw InputError(what + ": '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

Exponent parse_exponent_key(const std::string& key) {
  const auto comma = key.find(',');
  try {
    if (comma == std::string::npos) throw InputError("");
    std::size_t used_i = 0, used_j = 0;
    const int i = std::stoi(key.substr(0, comma), &used_i);
    const int j = std::stoi(key.substr(comma + 1), &used_j);
    if (used_i != comma || used_j != key.size() - comma - 1 || i < 0 || j < 0) throw InputError("");
    return {i, j};
  } catch (const std::exception&) {
    throw InputError("invalid exponent key '" + key + "'");
  }
}

Json words_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(w.to_string());
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

PlanarField field_from_json(const Json& j) {
  const std::string what = "field";
  require_keys(j, {"degree", "coefficients"}, {"xi_sign"}, what);
  XiSign sign = XiSign::plus;
  if (j.contains("xi_sign")) {
    const std::string s = get_string(j, "xi_sign", what);
    if (s == "+") {
      sign = XiSign::plus;
    } else if (s == "-") {
      sign = XiSign::minus;
    } else {
      throw InputError("field: xi_sign must be \"+\" or \"-\"");
    }
  }
  const int degree = get_int(j, "degree", what);
  const Json& coeffs = j.at("coefficients");
  if (!coeffs.is_array()) throw InputError("field: 'coefficients' must be an array");
  PlanarField::Coefficients c;
  for (const auto& entry : coeffs) {
    require_keys(entry, {"i", "j", "value"}, {}, "coefficient");
    const Exponent e{get_int(entry, "i", "coefficient"), get_int(entry, "j", "coefficient")};
    if (c.count(e)) {
      throw InputError("field: duplicate coefficient p_{" + std::to_string(e.i) + "," + std::to_string(e.j) + "}");
    }
    c.emplace(e, GaussianRational::parse(get_string(entry, "value", "coefficient")));
  }
  return PlanarField(degree, c, sign);
}

PlanarField parse_field(const std::string& text) { return field_from_json(parse_json(text)); }

Json to_json(const PlanarField& f) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : f.p().terms()) {
    coeffs.push_back(Json{{"i", e.i}, {"j", e.j}, {"value", c.to_string()}});
  }
  return Json{{"xi_sign", f.xi_sign() == XiSign::plus ? "+" : "-"}, {"degree", f.degree()}, {"coefficients", coeffs}};
}

Json to_json(const BiPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e.i) + "," + std::to_string(e.j)] = c.to_string();
  return out;
}

BiPoly bipoly_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("polynomial must be a JSON object");
  BiPoly p;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw InputError("polynomial coefficient must be a string");
    const Exponent e = parse_exponent_key(k);
    p.add_term(e.i, e.j, GaussianRational::parse(v.get<std::string>()));
  }
  return p;
}

Json to_json(const Derivation& d) {
  Json out{{"dx", to_json(d.dx())}, {"dy", to_json(d.dy())}};
  if (d.letter()) out["letter"] = d.letter()->to_string();
  return out;
}

Derivation derivation_from_json(const Json& j) {
  require_keys(j, {"dx", "dy"}, {"letter"}, "derivation");
  std::optional<Letter> letter;
  if (j.contains("letter")) letter = Letter::parse(get_string(j, "letter", "derivation"));
  return {bipoly_from_json(j.at("dx")), bipoly_from_json(j.at("dy")), letter};
}

Json to_json(const SeriesReport& r) {
  Json levels = Json::array();
  for (const auto& level : r.levels) {
    Json l = Json::array();
    for (const auto& d : level) l.push_back(to_json(d));
    levels.push_back(l);
  }
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(Json{{"pair", Json::array({w.first.to_string(), w.second.to_string()})},
                             {"bracket", to_json(w.bracket)}});
  }
  Json out{{"levels", levels}, {"nilpotent_order1", r.nilpotent_order1}, {"witnesses", witnesses}};
  out["vanishing_level"] = r.vanishing_level ? Json(*r.vanishing_level) : Json(nullptr);
  return out;
}

std::string to_string(ProofBasis p) {
  switch (p) {
    case ProofBasis::cauchy_riemann: return "cauchy_riemann";
    case ProofBasis::nilpotent: return "nilpotent";
    case ProofBasis::none: break;
  }
  return "none";
}

Json to_json(const ResonanceReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(Json{{"word", w.word.to_string()}, {"bracket", to_json(w.bracket)}});
  return Json{{"max_len", r.max_len},
              {"resonant_words", words_json(r.resonant_words)},
              {"all_brackets_zero", r.all_brackets_zero},
              {"witnesses", witnesses},
              {"proof", to_string(r.proof)},
              {"structurally_proven", r.structurally_proven()}};
}

Json to_json(const PrenormalReport& r) {
  Json letters = Json::object();
  for (const auto& [l, v] : r.letter_part) letters[l.to_string()] = v.to_string();
  return Json{{"truncation_length", r.truncation_length},
              {"letter_part", letters},
              {"higher_part", to_json(r.higher_part)},
              {"reduced", r.reduced()}};
}

Json to_json(const ConditionVerdict& v) {
  Json failing = Json::array();
  for (const auto& r : v.failing) failing.push_back(Json{{"relation", r.text}, {"residual", r.residual.to_string()}});
  return Json{{"condition", to_string(v.condition)}, {"holds", v.holds}, {"failing", failing}};
}

Json to_json(const PeriodScan& s) {
  return Json{{"radii", s.radii}, {"periods", s.periods}, {"max_rel_spread", s.max_rel_spread}, {"reference", s.reference}};
}

Json to_json(ConditionId id, int degree, const GeomComplexity& g) {
  return Json{{"condition", to_string(id)}, {"degree", degree}, {"q", g.q}, {"m", g.m}, {"ambient_dim", g.ambient_dim}};
}

Mould mould_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("mould spec needs a 'kind'");
  const std::string kind = get_string(j, "kind", "mould");
  if (kind == "random") {
    require_keys(j, {"kind", "seed", "support"}, {}, "mould");
    const Json& seed = j.at("seed");
    if (!seed.is_number_unsigned()) throw InputError("mould: 'seed' must be a non-negative integer");
    const std::string support = get_string(j, "support", "mould");
    if (support != "resonant" && support != "all") throw InputError("mould: support must be \"resonant\" or \"all\"");
    return Mould::random(seed.get<std::uint64_t>(), support == "resonant");
  }
  if (kind == "table") {
    require_keys(j, {"kind", "entries"}, {}, "mould");
    const Json& entries = j.at("entries");
    if (!entries.is_array()) throw InputError("mould: 'entries' must be an array");
    std::map<Word, GaussianRational> table;
    for (const auto& e : entries) {
      require_keys(e, {"word", "value"}, {}, "mould entry");
      const Word w = Word::parse(get_string(e, "word", "mould entry"));
      if (w.empty()) throw InputError("mould entry for the empty word");
      if (!table.emplace(w, GaussianRational::parse(get_string(e, "value", "mould entry"))).second) {
        throw InputError("mould: duplicate word " + w.to_string());
      }
    }
    return Mould::table(table);
  }
  throw InputError("mould: unknown kind '" + kind + "'");
}

}  // namespace isochron
