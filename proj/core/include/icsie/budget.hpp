#pragma once

#include <cstddef>
#include <cstdint>

namespace icsie {

/// Explicit limits for the exhaustive routines. Exceeding one raises
/// BudgetExceeded; nothing is ever silently truncated or sampled.
struct Budget {
  /// Enumerating F_q^n for the interference set: q^n <= 2^bits.
  std::size_t enumeration_bits = 24;
  /// Hamming-sphere oracle over message pairs: q^n * q^n <= 2^bits.
  std::size_t oracle_pair_bits = 24;
  /// Exhaustive minrank: (free positions) * log2(q) <= bits.
  std::size_t minrank_bits = 24;
  /// Node cap for every depth-first code search.
  std::uint64_t search_nodes = 200'000'000;
  /// Ind_q(N, k) search space: q^N <= 2^bits.
  std::size_t ind_bits = 20;
  /// Largest code length tried by l_q.
  std::size_t lq_max_length = 15;
  /// Largest length tried by the channel-error (delta_c > 0) optimal search.
  std::size_t gecic_max_length = 16;
  /// Edge-deletion lower bound: exhaustive up to this many deletion patterns,
  /// otherwise a seeded sample of `edge_deletion_samples` patterns.
  std::uint64_t edge_deletion_exhaustive = 10'000;
  std::size_t edge_deletion_samples = 64;
  std::uint64_t seed = 0x1C51E5EEDULL;
};

/// True when base^exponent <= 2^bits.
bool within_bits(std::uint64_t base, std::size_t exponent, std::size_t bits);

/// Throws BudgetExceeded with `what` in the message unless within_bits holds.
void require_within_bits(std::uint64_t base, std::size_t exponent, std::size_t bits, const char* what);

}  // namespace icsie
