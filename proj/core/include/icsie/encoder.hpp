#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icsie/budget.hpp"
#include "icsie/graph.hpp"
#include "icsie/linalg.hpp"

namespace icsie {

/// One column of a generalized fitting matrix for receiver `receiver` and one
/// choice `chosen` of side_budget() cached positions (all of X_i when the
/// receiver caches fewer). The entry at `one` is 1, entries at `zeros` are 0
/// and entries at `free` are unconstrained.
struct FittingColumn {
  std::size_t receiver;
  IndexSet chosen;
  std::size_t one;
  IndexSet zeros;
  IndexSet free;
};

struct FittingTemplate {
  std::size_t n = 0;
  std::vector<FittingColumn> columns;

  std::size_t free_count() const;
  /// Fills the free positions column by column from `assignment`.
  Matrix complete(const FieldPtr& field, std::span<const Elem> assignment) const;
};

FittingTemplate fitting_template(const ProblemSpec& spec);

/// A generator matrix together with the instance it encodes.
struct GeneratorMatrix {
  ProblemSpec spec;
  Matrix matrix;

  std::size_t length() const noexcept { return matrix.cols(); }
};

struct MinrankResult {
  std::size_t rank = 0;
  /// Values of the free positions, column by column, each column's free
  /// positions in ascending order. Lexicographically first minimizer.
  std::vector<Elem> assignment;
  Matrix fitting;
  /// `fitting` with every column dependent on earlier ones removed.
  Matrix generator;
  std::uint64_t nodes = 0;
};

/// Exact minimum rank over all completions of the fitting template.
MinrankResult minrank(const ProblemSpec& spec, const Budget& budget = {});

struct OptimalLength {
  std::size_t length = 0;
  GeneratorMatrix generator;
  std::uint64_t nodes = 0;
};

/// Smallest N admitting a valid n x N generator, by exhaustive search that
/// never looks at fitting matrices. For delta_c = 0 it searches left kernels:
/// G is valid iff its left kernel avoids the interference set, so N is n minus
/// the largest dimension of a subspace missing the set. For delta_c > 0 it
/// searches column multisets (see CoverSearch).
OptimalLength optimal_length(const ProblemSpec& spec, const Budget& budget = {});

/// Whether some valid n x N generator exists.
bool exists_generator_of_length(const ProblemSpec& spec, std::size_t length, const Budget& budget = {});

/// The |B| x (|B|-1) bidiagonal code that encodes x as
/// (x_1 + x_2, x_2 + x_3, ...). Requires size >= side_budget + 2.
Matrix cycle_code(const FieldPtr& field, std::size_t size, std::size_t side_budget);

/// Block generator with one cycle_code block per listed disjoint cycle set and
/// an uncoded column for every other packet. Length n - cycles.size().
Matrix cycle_packing_code(const ProblemSpec& spec, const std::vector<IndexSet>& cycles);

/// Minimum Hamming distance of the code {c : H c^T = 0}; nullopt when the code
/// is {0}.
std::optional<std::size_t> code_minimum_distance(const Matrix& parity_check, const Budget& budget = {});

/// H^T as a generator for the clique on H.cols() packets. Throws
/// DistanceTooSmall unless the code of H has distance >= 2*delta_s + 2.
GeneratorMatrix clique_from_parity(const Matrix& parity_check, std::size_t delta_s,
                                   const Budget& budget = {});

/// Parity-check matrix of the length-n Reed-Solomon code with `redundancy`
/// check symbols: H[i][j] = a^((i+1) j) for an element a of order n. Requires
/// n | q - 1.
Matrix reed_solomon_parity_check(const FieldPtr& field, std::size_t n, std::size_t redundancy);

/// Largest subset of F_q^dim in which every k vectors are linearly independent.
std::size_t ind_q(const FieldPtr& field, std::size_t dim, std::size_t k, const Budget& budget = {});

/// Griesmer lower bound on the length of an [n, a, d] linear code over F_q.
std::size_t griesmer_bound(std::uint32_t q, std::size_t a, std::size_t d);

/// Shortest n for which a linear [n, a, >= d] code over F_q exists.
std::size_t l_q(const FieldPtr& field, std::size_t a, std::size_t d, const Budget& budget = {});

/// Frozen l_2 values for a <= 5, d <= 6, re-derived by the tests. nullopt
/// outside the table.
std::optional<std::size_t> l_2_table(std::size_t a, std::size_t d);

/// {"q":..,"n":..,"N":..,"rows":[[..],..]}
std::string serialize_generator(const Matrix& g);
/// Throws ParseError.
Matrix parse_generator(const std::string& text);

}  // namespace icsie
