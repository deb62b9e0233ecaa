#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "icsie/field.hpp"
#include "icsie/linalg.hpp"

namespace icsie {

/// Directed bipartite side-information graph. Packets and receivers are
/// 0-based here; the instance file format is 1-based.
///
/// Receiver i wants packet demand[i] and caches the packets in side[i].
struct SideInfoGraph {
  std::size_t n = 0;
  std::vector<std::size_t> demand;
  std::vector<IndexSet> side;

  std::size_t receivers() const noexcept { return demand.size(); }

  /// Unipartite when m = n and receiver i wants packet i.
  bool is_unipartite() const noexcept;

  friend bool operator==(const SideInfoGraph&, const SideInfoGraph&) = default;
};

enum class ViolationKind {
  DemandOutOfRange,
  SideInfoOutOfRange,
  SideInfoNotAscending,
  DemandInSideInfo,
  UndemandedPacket,
  NoReceivers,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t index;  // receiver for receiver-level kinds, packet otherwise
  std::string message;
};

/// Empty when the graph is well formed.
std::vector<Violation> validate(const SideInfoGraph& g);

/// Throws InvalidGraph naming the first violation.
void require_valid(const SideInfoGraph& g);

/// Packets neither wanted nor cached by receiver i.
IndexSet y_set(const SideInfoGraph& g, std::size_t receiver);

/// Clique of size n: receiver i wants packet i and caches every other packet.
SideInfoGraph clique_graph(std::size_t n);

/// Unipartite graph with the given side-information sets.
SideInfoGraph unipartite_graph(std::vector<IndexSet> side);

/// Result of removing packets. `packet_map[old]` is the new index of a kept
/// packet; `receiver_map[old]` likewise for receivers.
struct PacketDeletion {
  SideInfoGraph graph;
  std::vector<std::optional<std::size_t>> packet_map;
  std::vector<std::optional<std::size_t>> receiver_map;
};

/// Removes the packets in `removed`, every receiver that wants one of them,
/// and every side-information edge into them. Survivors are renumbered densely
/// in ascending order.
PacketDeletion delete_packets(const SideInfoGraph& g, std::span<const std::size_t> removed);

/// Removes `removed[i]` from the side information of receiver i. Each set must
/// be a subset of the receiver's side information.
SideInfoGraph delete_side_edges(const SideInfoGraph& g, const std::vector<IndexSet>& removed);

enum class SideErrorModel { Error, Erasure };

std::string_view to_string(SideErrorModel model);

/// A side-information graph together with the code parameters.
struct ProblemSpec {
  SideInfoGraph graph;
  FieldPtr field;
  std::size_t delta_s = 0;
  std::size_t delta_c = 0;
  SideErrorModel side_error_model = SideErrorModel::Error;

  std::size_t n() const noexcept { return graph.n; }
  std::size_t m() const noexcept { return graph.receivers(); }
  std::uint32_t q() const noexcept { return field->size(); }

  /// How many cached symbols of one receiver may disagree between two
  /// messages it must tell apart: 2*delta_s for errors, delta_s for erasures.
  std::size_t side_budget() const noexcept {
    return side_error_model == SideErrorModel::Erasure ? delta_s : 2 * delta_s;
  }

  ProblemSpec with_graph(SideInfoGraph g) const;
  ProblemSpec with_delta_s(std::size_t ds) const;
  ProblemSpec with_delta_c(std::size_t dc) const;

  friend bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
    return a.graph == b.graph && same_field(a.field, b.field) && a.delta_s == b.delta_s &&
           a.delta_c == b.delta_c && a.side_error_model == b.side_error_model;
  }
};

/// Validates the graph and builds the spec over F_q.
ProblemSpec make_spec(SideInfoGraph g, std::uint64_t q, std::size_t delta_s, std::size_t delta_c = 0,
                      SideErrorModel model = SideErrorModel::Error);

/// Instance document: {"n","m","q","delta_s","delta_c","f","X","side_error_model"}
/// with 1-based packet indices. Throws ParseError.
ProblemSpec parse_instance(const std::string& text);
std::string serialize_instance(const ProblemSpec& spec);

}  // namespace icsie
