#pragma once

// Substitution tile systems: prototiles with optional exact volume and
// Dehn data, one substitution rule (a child multiset) per tile, and an
// inflation factor. Built-in systems: the Mosseri-Sadoc four-tile system
// (z, h, s, a) and its five-tile refinement (a, m, r, z, s) in which h
// splits as the union of r and m.

#include "stonetile/dehn.hpp"
#include "stonetile/golden.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace stonetile {

struct Prototile {
  std::string name;
  std::optional<GoldenNumber> volume;  // positive when present
  std::optional<DehnElement> dehn;
};

struct SubstitutionRule {
  std::string parent;
  std::map<std::string, Integer> children;  // tile name -> multiplicity
};

// Exact big-integer tile counts aligned to a tile ordering.
using CountVector = std::vector<Integer>;

class TileSystem {
 public:
  TileSystem(std::string name, GoldenNumber factor, unsigned dimension,
             std::vector<Prototile> tiles, std::vector<SubstitutionRule> rules,
             std::vector<std::string> angle_keys = {})
      : name_(std::move(name)),
        factor_(std::move(factor)),
        dimension_(dimension),
        tiles_(std::move(tiles)),
        rules_(std::move(rules)),
        angle_keys_(std::move(angle_keys)) {
    validate();
  }

  const std::string& name() const { return name_; }
  const GoldenNumber& factor() const { return factor_; }
  unsigned dimension() const { return dimension_; }
  const std::vector<Prototile>& tiles() const { return tiles_; }
  const std::vector<SubstitutionRule>& rules() const { return rules_; }
  const std::vector<std::string>& angle_keys() const { return angle_keys_; }
  std::size_t size() const { return tiles_.size(); }

  std::size_t tile_index(const std::string& tile) const {
    for (std::size_t i = 0; i < tiles_.size(); ++i)
      if (tiles_[i].name == tile) return i;
    throw std::out_of_range("unknown tile '" + tile + "' in system " + name_);
  }

  bool has_volumes() const {
    return std::all_of(tiles_.begin(), tiles_.end(),
                       [](const Prototile& t) { return t.volume.has_value(); });
  }
  bool has_dehn() const {
    return std::all_of(tiles_.begin(), tiles_.end(),
                       [](const Prototile& t) { return t.dehn.has_value(); });
  }

  const SubstitutionRule& rule_for(const std::string& tile) const {
    return rules_[tile_index(tile)];
  }

  static TileSystem ms4();
  static TileSystem ms5();

  // "ms4", "ms5", or a JSON file path
  static TileSystem resolve(const std::string& source);

  static TileSystem from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

 private:
  void validate() const {
    if (tiles_.empty()) throw std::invalid_argument("TileSystem: no tiles");
    if (dimension_ == 0) throw std::invalid_argument("TileSystem: dimension must be positive");
    if ((factor_ - GoldenNumber::one()).sign() <= 0)
      throw std::invalid_argument("TileSystem: inflation factor must exceed 1");
    for (std::size_t i = 0; i < tiles_.size(); ++i)
      for (std::size_t j = i + 1; j < tiles_.size(); ++j)
        if (tiles_[i].name == tiles_[j].name)
          throw std::invalid_argument("TileSystem: duplicate tile '" + tiles_[i].name + "'");
    if (rules_.size() != tiles_.size())
      throw std::invalid_argument("TileSystem: need exactly one rule per tile");
    for (const auto& tile : tiles_) {
      if (tile.volume && tile.volume->sign() <= 0)
        throw std::invalid_argument("TileSystem: volume of '" + tile.name +
                                    "' must be positive");
    }
    for (const auto& rule : rules_) {
      tile_index(rule.parent);
      if (rule.children.empty())
        throw std::invalid_argument("TileSystem: rule for '" + rule.parent +
                                    "' has no children");
      for (const auto& [child, count] : rule.children) {
        tile_index(child);
        if (count < 0)
          throw std::invalid_argument("TileSystem: negative count in rule for '" +
                                      rule.parent + "'");
      }
    }
    for (std::size_t i = 0; i < tiles_.size(); ++i)
      if (rules_[i].parent != tiles_[i].name)
        throw std::invalid_argument("TileSystem: rules must follow the tile ordering");
    if (has_volumes()) check_stone_inflation();
  }

  // factor^dimension * vol(parent) = sum of child volumes, exactly, per rule
  void check_stone_inflation() const {
    GoldenNumber lambda = factor_.pow(dimension_);
    for (const auto& rule : rules_) {
      GoldenNumber lhs = lambda * *tiles_[tile_index(rule.parent)].volume;
      GoldenNumber rhs;
      for (const auto& [child, count] : rule.children)
        rhs += GoldenNumber(Rational(count)) * *tiles_[tile_index(child)].volume;
      if (lhs != rhs) {
        std::ostringstream msg;
        msg << "TileSystem '" << name_ << "': stone-inflation volume identity fails for rule '"
            << rule.parent << "': factor^dim * vol = " << lhs.str()
            << " but children sum to " << rhs.str();
        throw std::invalid_argument(msg.str());
      }
    }
  }

  std::string name_;
  GoldenNumber factor_;
  unsigned dimension_;
  std::vector<Prototile> tiles_;
  std::vector<SubstitutionRule> rules_;
  std::vector<std::string> angle_keys_;
};

namespace detail {

inline Prototile make_tile(std::string name, const char* volume, const char* dehn_alpha) {
  Prototile t;
  t.name = std::move(name);
  t.volume = GoldenNumber::parse(volume);
  t.dehn = DehnElement::term(GoldenNumber::parse(dehn_alpha), AngleClass::named("alpha_ms"));
  return t;
}

}  // namespace detail

// The four Mosseri-Sadoc tiles z, h, s, a. Volumes in units of 1/12 of the
// short-edge cube; Dehn coefficients are on the single lateral angle class
// "alpha_ms" (cos alpha = 1/sqrt(5)) and carry the conventional -5 prefactor.
inline TileSystem TileSystem::ms4() {
  std::vector<Prototile> tiles = {
      detail::make_tile("z", "1/6 + 1/3*tau", "-5*tau"),
      detail::make_tile("h", "1/3 + 1/2*tau", "-10"),
      detail::make_tile("s", "1/4 + 1/3*tau", "5 - 5*tau"),
      detail::make_tile("a", "1/12 + 1/6*tau", "5*tau"),
  };
  std::vector<SubstitutionRule> rules = {
      {"z", {{"z", 1}, {"h", 1}, {"s", 1}, {"a", 1}}},
      {"h", {{"z", 2}, {"h", 1}, {"s", 2}, {"a", 2}}},
      {"s", {{"z", 1}, {"h", 1}, {"s", 1}, {"a", 2}}},
      {"a", {{"s", 1}, {"a", 2}}},
  };
  return TileSystem("ms4", GoldenNumber::tau(), 3, std::move(tiles), std::move(rules),
                    {"alpha_ms"});
}

// The five-tile refinement a, m, r, z, s, with h = r U m. The volumes and
// Dehn coefficients of r and m are fixed by consistency with the four-tile
// system: vol r + vol m = vol h and the substitution rules below.
inline TileSystem TileSystem::ms5() {
  std::vector<Prototile> tiles = {
      detail::make_tile("a", "1/12 + 1/6*tau", "5*tau"),
      detail::make_tile("m", "1/4 + 1/6*tau", "-5 + 5*tau"),
      detail::make_tile("r", "1/12 + 1/3*tau", "-5 - 5*tau"),
      detail::make_tile("z", "1/6 + 1/3*tau", "-5*tau"),
      detail::make_tile("s", "1/4 + 1/3*tau", "5 - 5*tau"),
  };
  std::vector<SubstitutionRule> rules = {
      {"a", {{"a", 2}, {"s", 1}}},
      {"m", {{"a", 2}, {"s", 1}, {"z", 1}}},
      {"r", {{"z", 1}, {"s", 1}, {"m", 1}, {"r", 1}}},
      {"z", {{"z", 1}, {"s", 1}, {"m", 1}, {"r", 1}, {"a", 1}}},
      {"s", {{"z", 1}, {"s", 1}, {"m", 1}, {"r", 1}, {"a", 2}}},
  };
  return TileSystem("ms5", GoldenNumber::tau(), 3, std::move(tiles), std::move(rules),
                    {"alpha_ms"});
}

inline TileSystem TileSystem::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("tile system: document must be an object");
  for (const char* key : {"name", "factor", "dimension", "tiles", "rules"})
    if (!doc.contains(key))
      throw std::invalid_argument(std::string("tile system: missing field '") + key + "'");

  std::vector<std::string> angle_keys;
  if (doc.contains("angles"))
    for (const auto& angle : doc.at("angles"))
      angle_keys.push_back(angle.at("key").get<std::string>());

  std::vector<Prototile> tiles;
  for (const auto& entry : doc.at("tiles")) {
    Prototile tile;
    tile.name = entry.at("name").get<std::string>();
    if (entry.contains("volume"))
      tile.volume = GoldenNumber::parse(entry.at("volume").get<std::string>());
    if (entry.contains("dehn")) {
      DehnElement d;
      for (const auto& [key, value] : entry.at("dehn").items()) {
        if (std::find(angle_keys.begin(), angle_keys.end(), key) == angle_keys.end())
          throw std::invalid_argument("tile system: dehn angle key '" + key +
                                      "' not declared in \"angles\"");
        d += DehnElement::term(GoldenNumber::parse(value.get<std::string>()),
                               AngleClass::named(key));
      }
      tile.dehn = d;
    }
    tiles.push_back(std::move(tile));
  }

  const auto& rules_obj = doc.at("rules");
  std::vector<SubstitutionRule> rules;
  for (const auto& tile : tiles) {
    if (!rules_obj.contains(tile.name))
      throw std::invalid_argument("tile system: no rule for tile '" + tile.name + "'");
    SubstitutionRule rule;
    rule.parent = tile.name;
    for (const auto& [child, count] : rules_obj.at(tile.name).items())
      rule.children[child] = Integer(count.get<long>());
    rules.push_back(std::move(rule));
  }
  if (rules_obj.size() != tiles.size())
    throw std::invalid_argument("tile system: rules for unknown tiles present");

  return TileSystem(doc.at("name").get<std::string>(),
                    GoldenNumber::parse(doc.at("factor").get<std::string>()),
                    doc.at("dimension").get<unsigned>(), std::move(tiles), std::move(rules),
                    std::move(angle_keys));
}

inline nlohmann::json TileSystem::to_json() const {
  nlohmann::json doc;
  doc["name"] = name_;
  doc["factor"] = factor_.str();
  doc["dimension"] = dimension_;
  doc["tiles"] = nlohmann::json::array();
  for (const auto& tile : tiles_) {
    nlohmann::json entry;
    entry["name"] = tile.name;
    if (tile.volume) entry["volume"] = tile.volume->str();
    if (tile.dehn) {
      nlohmann::json dehn = nlohmann::json::object();
      for (const auto& [key, coeff] : tile.dehn->terms()) dehn[key] = coeff.str();
      entry["dehn"] = dehn;
    }
    doc["tiles"].push_back(entry);
  }
  doc["rules"] = nlohmann::json::object();
  for (const auto& rule : rules_) {
    nlohmann::json children = nlohmann::json::object();
    for (const auto& [child, count] : rule.children) children[child] = count.get_si();
    doc["rules"][rule.parent] = children;
  }
  doc["angles"] = nlohmann::json::array();
  for (const auto& key : angle_keys_)
    doc["angles"].push_back({{"key", key}, {"independent", true}});
  return doc;
}

inline TileSystem load_system(const std::string& document) {
  return TileSystem::from_json(nlohmann::json::parse(document));
}

inline TileSystem TileSystem::resolve(const std::string& source) {
  if (source == "ms4") return ms4();
  if (source == "ms5") return ms5();
  std::ifstream in(source);
  if (!in) throw std::out_of_range("unknown system '" + source + "' (not a builtin or readable file)");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_system(buffer.str());
}

// Maps whole-tiling counts over ms5 onto ms4 by grouping each r with its
// partner m into an h. Requires count(r) = count(m), which holds for any
// count vector arising from a tiling since r and m only occur paired.
inline CountVector compose_h(const TileSystem& ms5, const TileSystem& ms4,
                             const CountVector& counts5) {
  if (counts5.size() != ms5.size())
    throw std::invalid_argument("compose_h: count vector size mismatch");
  Integer r = counts5[ms5.tile_index("r")];
  Integer m = counts5[ms5.tile_index("m")];
  if (r != m)
    throw std::invalid_argument("compose_h: count(r) = " + r.get_str() +
                                " differs from count(m) = " + m.get_str() +
                                "; not an ms configuration");
  CountVector counts4(ms4.size());
  counts4[ms4.tile_index("h")] = r;
  for (const char* tile : {"z", "s", "a"})
    counts4[ms4.tile_index(tile)] = counts5[ms5.tile_index(tile)];
  return counts4;
}

}  // namespace stonetile
