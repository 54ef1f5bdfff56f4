#include "ldstab/state_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace ldstab {

StateSet::StateSet(std::size_t n) : bits_(n, false) {}

StateSet::StateSet(std::size_t n, std::initializer_list<State> members) : bits_(n, false) {
  for (State s : members) insert(s);
}

StateSet::StateSet(std::size_t n, const std::vector<State>& members) : bits_(n, false) {
  for (State s : members) insert(s);
}

StateSet StateSet::full(std::size_t n) {
  StateSet set(n);
  set.bits_.assign(n, true);
  return set;
}

std::size_t StateSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

void StateSet::check(State s) const {
  if (s < 1 || s > bits_.size()) {
    throw InvalidArgument("state " + std::to_string(s) + " outside 1.." +
                          std::to_string(bits_.size()));
  }
}

bool StateSet::contains(State s) const {
  check(s);
  return bits_[s - 1];
}

void StateSet::insert(State s) {
  check(s);
  bits_[s - 1] = true;
}

void StateSet::erase(State s) {
  check(s);
  bits_[s - 1] = false;
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i + 1);
  }
  return out;
}

StateSet StateSet::complement() const {
  StateSet out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = !bits_[i];
  return out;
}

bool StateSet::is_subset_of(const StateSet& other) const {
  if (universe() != other.universe()) throw InvalidArgument("state sets over different universes");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

StateSet operator|(const StateSet& a, const StateSet& b) {
  if (a.universe() != b.universe()) throw InvalidArgument("state sets over different universes");
  StateSet out(a.universe());
  for (std::size_t i = 0; i < a.bits_.size(); ++i) out.bits_[i] = a.bits_[i] || b.bits_[i];
  return out;
}

StateSet operator&(const StateSet& a, const StateSet& b) {
  if (a.universe() != b.universe()) throw InvalidArgument("state sets over different universes");
  StateSet out(a.universe());
  for (std::size_t i = 0; i < a.bits_.size(); ++i) out.bits_[i] = a.bits_[i] && b.bits_[i];
  return out;
}

std::string StateSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (State s : members()) {
    if (!first) out += ",";
    out += std::to_string(s);
    first = false;
  }
  return out + "}";
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
      throw InvalidArgument("'" + std::string(token) + "' is not a positive index");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace ldstab
