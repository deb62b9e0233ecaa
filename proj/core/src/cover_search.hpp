#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "packed.hpp"

namespace icsie::detail {

/// Picks a multiset of columns (projective points of F_q^dim) so that every
/// constraint vector z has z.c != 0 for at least `threshold` chosen columns c.
/// This is the weight condition wt(zG) >= threshold restricted to the listed
/// z, and column scaling or reordering never changes it, so searching
/// nondecreasing sequences of normalized points is exhaustive.
class CoverSearch {
 public:
  CoverSearch(FieldPtr field, std::size_t dim, std::vector<std::uint64_t> constraints,
              std::size_t threshold, std::uint64_t node_limit);

  /// Columns that every solution starts with (e.g. an identity block).
  void force(std::vector<std::uint64_t> columns);

  /// Lexicographically first solution with exactly `length` columns, forced
  /// ones included. Throws BudgetExceeded when the node limit is hit.
  std::optional<std::vector<std::uint64_t>> solve(std::size_t length);

  std::uint64_t nodes() const noexcept { return nodes_; }
  const PackedSpace& space() const noexcept { return space_; }

 private:
  bool dfs(std::size_t from_point, std::size_t remaining);

  PackedSpace space_;
  std::vector<std::uint64_t> constraints_;
  std::size_t threshold_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> points_;                 // normalized nonzero vectors
  std::vector<std::vector<std::uint32_t>> hits_;      // point -> constraints it covers
  std::vector<std::vector<bool>> hit_mask_;           // point -> constraint -> covered
  std::vector<std::uint64_t> forced_;
  std::vector<std::size_t> covered_;  // constraint -> chosen columns covering it
  std::vector<std::uint64_t> chosen_;
};

}  // namespace icsie::detail
