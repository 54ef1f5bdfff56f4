#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldstab/state_set.hpp"
#include "ldstab/stp.hpp"

namespace ldstab {

/// Switched logic dynamical system x(t+1) = L_{sigma(t)} x(t) over n states
/// with m subnetworks.
class Lds {
 public:
  /// Throws InvalidArgument if `maps` is empty or any map is not n x n.
  explicit Lds(std::vector<LogicMatrix> maps);

  std::size_t state_count() const { return maps_.front().dim(); }
  std::size_t subnetwork_count() const { return maps_.size(); }

  /// L_j, 1-based.
  const LogicMatrix& map(std::size_t j) const;
  const std::vector<LogicMatrix>& maps() const { return maps_; }

  /// Column x of L_j.
  State step(State x, std::size_t j) const;

  void check_state(State x) const;
  void check_subnetwork(std::size_t j) const;

  friend bool operator==(const Lds&, const Lds&) = default;

 private:
  std::vector<LogicMatrix> maps_;
};

/// A switching signal over [1..m]: a finite word, optionally extended
/// forever by repeating the word.
class SwitchingSignal {
 public:
  static SwitchingSignal finite(std::vector<std::size_t> word);
  /// word, word, word, ...  (word must be nonempty)
  static SwitchingSignal periodic(std::vector<std::size_t> word);
  static SwitchingSignal constant(std::size_t j);

  /// Number of defined values; nullopt for infinite signals.
  std::optional<std::size_t> length() const;
  /// sigma(t). Throws InvalidArgument past the end of a finite signal.
  std::size_t at(std::size_t t) const;
  /// The signal t -> sigma(t + offset).
  SwitchingSignal shifted(std::size_t offset) const;

  const std::vector<std::size_t>& word() const { return word_; }
  bool is_periodic() const { return periodic_; }

 private:
  SwitchingSignal(std::vector<std::size_t> word, bool periodic, std::size_t offset = 0);

  std::vector<std::size_t> word_;
  bool periodic_;
  std::size_t offset_;
};

/// x(0), x(1), ..., x(T).
using Trajectory = std::vector<State>;

/// Throws InvalidArgument if the signal is shorter than `horizon` or uses an
/// index outside [1..m].
Trajectory trajectory(const Lds& lds, State x0, const SwitchingSignal& signal, std::size_t horizon);

/// Network document: the system plus its optional target set and label.
struct Network {
  std::string name;
  Lds lds;
  std::optional<StateSet> target;
};

/// Parses `{"n", "m", "maps", "target"?, "name"?}`. Throws ParseError.
Network parse_network(std::string_view text);
Network load_network(const std::filesystem::path& path);
std::string serialize_network(const Network& network);

/// One node of a multi-valued logic network: its own domain size and the
/// update function over the values of all nodes.
struct NodeFunction {
  std::size_t domain;
  TruthTable table;
};

inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 20;

/// Global transition matrix of the network, the K-R product of the
/// per-node structural matrices.
LogicMatrix from_node_functions(std::span<const NodeFunction> nodes,
                                std::size_t state_cap = kDefaultStateCap);

}  // namespace ldstab
