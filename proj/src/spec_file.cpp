#include "bifree/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bifree/errors.hpp"

namespace bifree {

namespace {

using nlohmann::json;

void check_keys(const json& object, const std::set<std::string>& allowed, const std::string& where) {
  if (!object.is_object()) throw ParseError(where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) throw ParseError("unknown key '" + key + "' in " + where);
  }
}

Rational parse_value(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.dump());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw ParseError(where + ": value must be an integer or a \"p/q\" string");
}

std::string pair_id_name(const json& id) {
  if (id.is_string()) return id.get<std::string>();
  if (id.is_number_integer()) return id.dump();
  throw ParseError("pair id must be a string or an integer");
}

std::vector<Letter> register_generators(Alphabet& alphabet, const json& list, PairId pair, Side side,
                                        const std::string& where) {
  if (!list.is_array()) throw ParseError(where + " must be a list of symbol names");
  std::vector<Letter> letters;
  for (const json& name : list) {
    if (!name.is_string()) throw ParseError(where + " must contain strings");
    const std::string symbol = name.get<std::string>();
    if (alphabet.has_symbol(symbol)) throw ParseError("symbol '" + symbol + "' declared twice");
    letters.push_back(alphabet.add_symbol(symbol, pair, side));
  }
  return letters;
}

WordTable parse_table(const Alphabet& alphabet, const json& table, const std::string& where) {
  if (!table.is_object()) throw ParseError(where + " must map words to rationals");
  WordTable out;
  for (const auto& [text, value] : table.items()) {
    Word w = alphabet.parse_word(text);
    if (!out.emplace(std::move(w), parse_value(value, where + " entry '" + text + "'")).second) {
      throw ParseError(where + ": duplicate word '" + text + "'");
    }
  }
  return out;
}

}  // namespace

bool DistributionSpec::has_theta() const {
  if (pures.empty()) return false;
  for (const auto& p : pures) {
    if (!p.has_theta()) return false;
  }
  return true;
}

JointDistribution DistributionSpec::distribution() const {
  JointDistribution d = JointDistribution::bifree_product(pures);
  return perturbations.empty() ? d : d.with_perturbation(perturbations);
}

JointDistribution DistributionSpec::conditional_distribution() const {
  JointDistribution d = JointDistribution::conditional_product(pures);
  return perturbations.empty() ? d : d.with_perturbation(perturbations);
}

DistributionSpec parse_spec(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed spec: ") + e.what());
  }
  check_keys(root, {"pairs", "perturbations"}, "spec");
  if (!root.contains("pairs") || !root["pairs"].is_array()) throw ParseError("spec needs a 'pairs' list");

  DistributionSpec spec;
  for (const json& entry : root["pairs"]) {
    check_keys(entry, {"id", "left_generators", "right_generators", "max_degree", "moments", "cumulants",
                       "theta_moments"},
               "pair");
    for (const char* key : {"id", "left_generators", "right_generators", "max_degree"}) {
      if (!entry.contains(key)) throw ParseError(std::string("pair is missing '") + key + "'");
    }
    const std::string name = pair_id_name(entry["id"]);
    if (spec.alphabet.find_pair(name)) throw ParseError("pair '" + name + "' declared twice");
    const std::string where = "pair '" + name + "'";
    if (entry.contains("moments") == entry.contains("cumulants")) {
      throw ParseError(where + " needs exactly one of 'moments' and 'cumulants'");
    }
    if (!entry["max_degree"].is_number_unsigned()) throw ParseError(where + ": max_degree must be a positive integer");
    const auto max_degree = entry["max_degree"].get<std::size_t>();

    const PairId pair = spec.alphabet.add_pair(name);
    auto left = register_generators(spec.alphabet, entry["left_generators"], pair, Side::kLeft, where);
    auto right = register_generators(spec.alphabet, entry["right_generators"], pair, Side::kRight, where);

    PureDistribution pure =
        entry.contains("moments")
            ? PureDistribution::from_moments(pair, std::move(left), std::move(right),
                                             parse_table(spec.alphabet, entry["moments"], where + " moments"),
                                             max_degree)
            : PureDistribution::from_cumulants(pair, std::move(left), std::move(right),
                                               parse_table(spec.alphabet, entry["cumulants"], where + " cumulants"),
                                               max_degree);
    if (entry.contains("theta_moments")) {
      pure = pure.with_theta(parse_table(spec.alphabet, entry["theta_moments"], where + " theta_moments"));
    }
    spec.pures.push_back(std::move(pure));
  }
  if (root.contains("perturbations")) {
    spec.perturbations = parse_table(spec.alphabet, root["perturbations"], "perturbations");
  }
  return spec;
}

DistributionSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read spec file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_spec(text.str());
}

}  // namespace bifree
