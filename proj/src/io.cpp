#include "iris/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace iris {

using nlohmann::json;

namespace {

template <typename T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("expected ") + what + ", got " + j.dump());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const json& jsets = field(doc, "sets");
  if (!jsets.is_array()) throw ParseError("\"sets\" must be an array");

  std::vector<ItemSet> sets;
  for (const auto& js : jsets) {
    ItemSet set;
    set.quota = get_as<int>(field(js, "p"), "integer quota");
    const json& items = field(js, "items");
    if (!items.is_array()) throw ParseError("\"items\" must be an array");
    for (const auto& ji : items) {
      if (!ji.is_array() || ji.size() != 2)
        throw ParseError("item must be a [lo, hi] pair, got " + ji.dump());
      set.items.push_back({get_as<Cost>(ji[0], "integer cost"),
                           get_as<Cost>(ji[1], "integer cost")});
    }
    sets.push_back(std::move(set));
  }

  std::vector<ForbiddenPair> pairs;
  if (doc.contains("forbidden")) {
    const json& jf = doc.at("forbidden");
    if (!jf.is_array()) throw ParseError("\"forbidden\" must be an array");
    for (const auto& jp : jf) {
      if (!jp.is_array() || jp.size() != 4)
        throw ParseError("forbidden pair must be [i, k, j, l], got " + jp.dump());
      pairs.push_back({{get_as<int>(jp[0], "index"), get_as<int>(jp[1], "index")},
                       {get_as<int>(jp[2], "index"), get_as<int>(jp[3], "index")}});
    }
  }
  return Instance(std::move(sets), std::move(pairs));
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream os;
  os << "{\n  \"sets\": [";
  for (int i = 0; i < instance.num_sets(); ++i) {
    const auto& set = instance.sets()[i];
    json items = json::array();
    for (const auto& c : set.items) items.push_back({c.lo, c.hi});
    os << (i ? ",\n" : "\n") << "    {\"p\": " << set.quota << ", \"items\": " << items.dump()
       << "}";
  }
  os << (instance.num_sets() ? "\n  ],\n" : "],\n");
  json pairs = json::array();
  for (const auto& p : instance.forbidden()) pairs.push_back({p.a.set, p.a.item, p.b.set, p.b.item});
  os << "  \"forbidden\": " << pairs.dump() << "\n}\n";
  return os.str();
}

Selection parse_selection(const Instance& instance, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const auto chosen =
      get_as<std::vector<std::vector<int>>>(field(doc, "chosen"), "list of index lists");
  try {
    return Selection::from_chosen(instance, chosen);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_selection(const Instance& instance, const Selection& x) {
  return json{{"chosen", x.chosen(instance)}}.dump() + "\n";
}

std::string serialize_scenario(const Instance& instance, const Scenario& scenario) {
  json out = json::array();
  for (int i = 0; i < instance.num_sets(); ++i) {
    json row = json::array();
    for (int f = instance.offset(i); f < instance.offset(i + 1); ++f)
      row.push_back(scenario.cost[f]);
    out.push_back(std::move(row));
  }
  return out.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace iris
