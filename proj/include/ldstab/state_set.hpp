#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ldstab/numeric.hpp"

namespace ldstab {

/// Subset of the state indices 1..n.
class StateSet {
 public:
  explicit StateSet(std::size_t n = 0);
  /// Throws InvalidArgument if a member lies outside 1..n.
  StateSet(std::size_t n, std::initializer_list<State> members);
  StateSet(std::size_t n, const std::vector<State>& members);

  static StateSet full(std::size_t n);

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  bool contains(State s) const;
  void insert(State s);
  void erase(State s);

  /// Members in increasing order.
  std::vector<State> members() const;

  StateSet complement() const;
  bool is_subset_of(const StateSet& other) const;

  friend StateSet operator|(const StateSet& a, const StateSet& b);
  friend StateSet operator&(const StateSet& a, const StateSet& b);
  friend bool operator==(const StateSet&, const StateSet&) = default;

  /// "{3,4,6}"
  std::string to_string() const;

 private:
  void check(State s) const;

  std::vector<bool> bits_;
};

/// Parses "3,4,6" (whitespace tolerated). Empty input yields an empty list.
/// Throws InvalidArgument on anything else that is not a positive integer.
std::vector<std::size_t> parse_index_list(std::string_view text);

}  // namespace ldstab
