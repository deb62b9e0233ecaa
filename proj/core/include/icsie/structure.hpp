#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icsie/budget.hpp"
#include "icsie/graph.hpp"

namespace icsie {

/// A packet set B in which every receiver demanding a packet of B caches more
/// than side_budget() packets of B.
struct CycleSet {
  IndexSet packets;
  IndexSet receivers;  // all i with f(i) in B

  friend bool operator==(const CycleSet&, const CycleSet&) = default;
};

/// Whether `packets` (nonempty) satisfies the cycle condition.
bool is_cycle_set(const ProblemSpec& spec, const IndexSet& packets);

/// All minimal cycle sets, ordered by size then lexicographically.
std::vector<CycleSet> find_cycles(const ProblemSpec& spec, const Budget& budget = {});

/// No cycle set exists.
bool is_acyclic(const ProblemSpec& spec, const Budget& budget = {});

struct CyclePacking {
  std::size_t count = 0;  // beta
  std::vector<CycleSet> cycles;
};

/// Maximum number of pairwise disjoint cycle sets, with a witness.
CyclePacking max_disjoint_cycles(const ProblemSpec& spec, const Budget& budget = {});

struct IndependentSet {
  std::size_t size = 0;
  IndexSet packets;
};

/// Largest Q whose nonempty subsets all lie in the support family.
IndependentSet gamma(const ProblemSpec& spec, const Budget& budget = {});

/// Largest Q for which the sub-instance induced on Q (packets outside Q and
/// the receivers demanding them deleted) is acyclic.
IndependentSet gamma_by_acyclicity(const ProblemSpec& spec, const Budget& budget = {});

/// Maximum acyclic induced subgraph for m = n, f(i) = i, found by repeatedly
/// discarding packets whose receiver caches too little of what is left.
/// Throws NotUnipartite.
std::size_t delta_s_mais(const ProblemSpec& spec, const Budget& budget = {});

enum class BoundKind { Lower, Upper, Exact };

std::string_view to_string(BoundKind kind);

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::Lower;
  /// nullopt when the entry does not apply or its computation hit a budget.
  std::optional<std::size_t> value;
  std::string provenance;
  bool certified = true;  // false for sampled maxima
  /// The bound equals the optimum, when the optimum is known.
  std::optional<bool> attained;
  std::string note;
};

struct BoundsReport {
  std::vector<BoundEntry> entries;

  const BoundEntry* find(std::string_view name) const;
  /// Pairs (lower, upper) with lower > upper, or exact entries that disagree.
  std::vector<std::string> violations() const;
  std::string to_json() const;
};

/// Every bound the structure module knows, each computed independently. The
/// "n_opt" entry is the exact optimum from optimal_length (delta_c = 0), and
/// "gecic_n_opt" the exact channel-error optimum when delta_c > 0.
BoundsReport bounds_report(const ProblemSpec& spec, const Budget& budget = {});

}  // namespace icsie
