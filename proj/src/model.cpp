#include "ldstab/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ldstab {

Lds::Lds(std::vector<LogicMatrix> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw InvalidArgument("an LDS needs at least one subnetwork");
  const std::size_t n = maps_.front().dim();
  for (std::size_t j = 0; j < maps_.size(); ++j) {
    if (maps_[j].dim() != n || maps_[j].size() != n) {
      throw InvalidArgument("subnetwork " + std::to_string(j + 1) + " is " +
                            std::to_string(maps_[j].dim()) + "x" +
                            std::to_string(maps_[j].size()) + ", expected " +
                            std::to_string(n) + "x" + std::to_string(n));
    }
  }
}

void Lds::check_state(State x) const {
  if (x < 1 || x > state_count()) {
    throw InvalidArgument("state " + std::to_string(x) + " outside 1.." +
                          std::to_string(state_count()));
  }
}

void Lds::check_subnetwork(std::size_t j) const {
  if (j < 1 || j > subnetwork_count()) {
    throw InvalidArgument("subnetwork " + std::to_string(j) + " outside 1.." +
                          std::to_string(subnetwork_count()));
  }
}

const LogicMatrix& Lds::map(std::size_t j) const {
  check_subnetwork(j);
  return maps_[j - 1];
}

State Lds::step(State x, std::size_t j) const {
  check_state(x);
  return map(j)[x];
}

SwitchingSignal::SwitchingSignal(std::vector<std::size_t> word, bool periodic, std::size_t offset)
    : word_(std::move(word)), periodic_(periodic), offset_(offset) {
  for (std::size_t v : word_) {
    if (v == 0) throw InvalidArgument("switching signal values are 1-based");
  }
  if (periodic_ && word_.empty()) throw InvalidArgument("a periodic signal needs a nonempty word");
}

SwitchingSignal SwitchingSignal::finite(std::vector<std::size_t> word) {
  return SwitchingSignal(std::move(word), false);
}

SwitchingSignal SwitchingSignal::periodic(std::vector<std::size_t> word) {
  return SwitchingSignal(std::move(word), true);
}

SwitchingSignal SwitchingSignal::constant(std::size_t j) { return periodic({j}); }

std::optional<std::size_t> SwitchingSignal::length() const {
  if (periodic_) return std::nullopt;
  return word_.size() - std::min(offset_, word_.size());
}

std::size_t SwitchingSignal::at(std::size_t t) const {
  const std::size_t pos = t + offset_;
  if (periodic_) return word_[pos % word_.size()];
  if (pos >= word_.size()) {
    throw InvalidArgument("switching signal undefined at t=" + std::to_string(t));
  }
  return word_[pos];
}

SwitchingSignal SwitchingSignal::shifted(std::size_t offset) const {
  if (periodic_) return SwitchingSignal(word_, true, (offset_ + offset) % word_.size());
  return SwitchingSignal(word_, false, offset_ + offset);
}

Trajectory trajectory(const Lds& lds, State x0, const SwitchingSignal& signal,
                      std::size_t horizon) {
  lds.check_state(x0);
  if (const auto len = signal.length(); len && *len < horizon) {
    throw InvalidArgument("switching signal has " + std::to_string(*len) +
                          " values, horizon needs " + std::to_string(horizon));
  }
  Trajectory states;
  states.reserve(horizon + 1);
  states.push_back(x0);
  for (std::size_t t = 0; t < horizon; ++t) states.push_back(lds.step(states.back(), signal.at(t)));
  return states;
}

namespace {

using nlohmann::json;

std::size_t positive_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(std::string("field \"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> index_array(const json& v, std::size_t n, const std::string& what) {
  if (!v.is_array()) throw ParseError(what + " must be an array of indices");
  std::vector<std::size_t> out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_number_integer()) throw ParseError(what + " contains a non-integer entry");
    const long long i = e.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > n) {
      throw ParseError(what + " contains index " + std::to_string(i) + " outside 1.." +
                       std::to_string(n));
    }
    out.push_back(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace

Network parse_network(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("network document must be a JSON object");

  const std::size_t n = positive_field(doc, "n");
  if (!doc.contains("m")) throw ParseError("missing field \"m\"");
  if (!doc.contains("maps") || !doc.at("maps").is_array()) {
    throw ParseError("field \"maps\" must be an array of column-index arrays");
  }
  const json& maps_doc = doc.at("maps");
  if (maps_doc.empty()) throw ParseError("\"maps\" is empty: at least one subnetwork is required");
  const std::size_t m = positive_field(doc, "m");
  if (maps_doc.size() != m) {
    throw ParseError("\"m\" is " + std::to_string(m) + " but \"maps\" has " +
                     std::to_string(maps_doc.size()) + " entries");
  }

  std::vector<LogicMatrix> maps;
  maps.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::string what = "map " + std::to_string(j + 1);
    auto cols = index_array(maps_doc[j], n, what);
    if (cols.size() != n) {
      throw ParseError(what + " has " + std::to_string(cols.size()) + " columns, expected " +
                       std::to_string(n));
    }
    maps.emplace_back(n, std::move(cols));
  }

  Network network{"", Lds(std::move(maps)), std::nullopt};
  if (doc.contains("target") && !doc.at("target").is_null()) {
    network.target = StateSet(n, index_array(doc.at("target"), n, "target"));
  }
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw ParseError("field \"name\" must be a string");
    network.name = doc.at("name").get<std::string>();
  }
  return network;
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::string serialize_network(const Network& network) {
  nlohmann::ordered_json doc;
  const Lds& lds = network.lds;
  doc["n"] = lds.state_count();
  doc["m"] = lds.subnetwork_count();
  doc["maps"] = nlohmann::ordered_json::array();
  for (const auto& map : lds.maps()) doc["maps"].push_back(map.columns());
  if (network.target) doc["target"] = network.target->members();
  if (!network.name.empty()) doc["name"] = network.name;
  return doc.dump() + "\n";
}

LogicMatrix from_node_functions(std::span<const NodeFunction> nodes, std::size_t state_cap) {
  if (nodes.empty()) throw InvalidArgument("a network needs at least one node");
  std::vector<std::size_t> domains;
  domains.reserve(nodes.size());
  std::size_t total = 1;
  for (const auto& node : nodes) {
    if (node.domain == 0) throw InvalidArgument("node domain must be nonempty");
    if (total > state_cap / node.domain) {
      throw CapExceeded("state space exceeds the cap of " + std::to_string(state_cap) + " states");
    }
    total *= node.domain;
    domains.push_back(node.domain);
  }

  LogicMatrix global = structural_matrix(domains, nodes.front().domain, nodes.front().table);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    global = khatri_rao(global, structural_matrix(domains, nodes[i].domain, nodes[i].table));
  }
  return global;
}

}  // namespace ldstab
