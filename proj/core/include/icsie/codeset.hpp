#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "icsie/budget.hpp"
#include "icsie/graph.hpp"
#include "icsie/linalg.hpp"

namespace icsie {

/// A message difference z that receiver `witness_receiver` cannot rule out
/// from its cache: z_{f(i)} != 0 and at most side_budget() nonzeros on X_i.
struct InterferenceVector {
  Vector z;
  std::size_t witness_receiver;
};

/// Smallest receiver i with z in I_i, if any.
std::optional<std::size_t> interference_witness(const ProblemSpec& spec, std::span<const Elem> z);

/// Visits every z in the interference set once, in lexicographic order.
/// Returning false from the visitor stops the walk.
void for_each_interference(const ProblemSpec& spec,
                           const std::function<bool(const InterferenceVector&)>& visit,
                           const Budget& budget = {});

std::vector<InterferenceVector> enum_interference(const ProblemSpec& spec, const Budget& budget = {});

/// Witness for K belonging to the support family J: K = {f(i)} u y_part u i_part
/// with y_part in Y_i, i_part in X_i and |i_part| <= side_budget().
struct SupportPattern {
  IndexSet support;
  std::size_t receiver;
  IndexSet y_part;
  IndexSet i_part;
};

std::optional<SupportPattern> support_witness(const ProblemSpec& spec, std::span<const std::size_t> k);
bool in_support_family(const ProblemSpec& spec, std::span<const std::size_t> k);

struct ValidityResult {
  bool valid = false;
  std::optional<InterferenceVector> counterexample;

  explicit operator bool() const noexcept { return valid; }
};

/// G is a generator iff wt(zG) >= 2*delta_c + 1 for every interference vector
/// z. On failure reports the lexicographically first offending z.
ValidityResult is_valid_generator(const ProblemSpec& spec, const Matrix& g, const Budget& budget = {});

/// Decodability straight from the Hamming-sphere definition: for every
/// receiver and every message pair it must tell apart, the radius-delta_c
/// spheres around the two codewords are disjoint. Shares no code with
/// is_valid_generator.
bool oracle_decodable(const ProblemSpec& spec, const Matrix& g, const Budget& budget = {});

}  // namespace icsie
