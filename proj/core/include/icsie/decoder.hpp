#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icsie/graph.hpp"
#include "icsie/linalg.hpp"

namespace icsie {

/// Per-receiver decoding data derived from a generator G.
struct ReceiverContext {
  std::size_t receiver = 0;
  IndexSet side;          // X_i
  IndexSet interference;  // Y_i
  Vector demand_row;      // G_{f(i)}
  Matrix side_rows;       // G_{X_i}
  Matrix interference_rows;  // G_{Y_i}
  /// Null-space basis of the rows {f(i)} u Y_i of G.
  Matrix h;
  /// Null-space basis of the rows Y_i of G; some row is not orthogonal to G_{f(i)}.
  Matrix h_e;
};

/// Throws Degenerate when G_{f(i)} lies in the span of G_{Y_i}, Unsupported
/// for the erasure side-information model.
ReceiverContext build_context(const ProblemSpec& spec, const Matrix& g, std::size_t receiver);

/// p = sum over j in support of coefficient_j * (row j of G), |support| <= delta_s.
struct Correction {
  Vector p;
  IndexSet support;  // packet indices, all in X_i
  std::vector<Elem> coefficients;
};

/// H (y - x_hat G_X)^T.
Vector receiver_syndrome(const ReceiverContext& ctx, const Vector& y, const Vector& x_hat);

/// First correction with H p^T = s, scanning supports by size, then
/// lexicographically, then coefficient vectors lexicographically. Throws
/// NoSolution when none has at most delta_s terms.
Correction find_correction(const ReceiverContext& ctx, const Vector& syndrome, std::size_t delta_s);

struct DecodeTrace {
  Vector syndrome;
  Correction correction;
  Vector y_tilde;  // y - x_hat G_X - p
  Elem value = 0;
};

/// Decoding steps after the context is built; lets callers reuse one context
/// across many messages.
DecodeTrace decode_with_context(const ReceiverContext& ctx, std::size_t delta_s, const Vector& y,
                                const Vector& x_hat, const std::optional<Vector>& forced = std::nullopt);

/// Recovers x_{f(i)} from y = xG and the receiver's possibly wrong cache
/// x_hat (indexed like X_i). `forced` replaces the searched correction; it must
/// have the right syndrome.
DecodeTrace decode_receiver(const ProblemSpec& spec, const Matrix& g, std::size_t receiver, const Vector& y,
                            const Vector& x_hat, const std::optional<Vector>& forced = std::nullopt);

struct ReceiverOutcome {
  std::optional<DecodeTrace> trace;
  std::optional<ErrorCode> error;
  std::string message;
};

/// decode_receiver for every receiver; x_hat[i] is receiver i's cache.
/// Failures are collected per receiver.
std::vector<ReceiverOutcome> decode_all(const ProblemSpec& spec, const Matrix& g, const Vector& y,
                                        const std::vector<Vector>& x_hat);

}  // namespace icsie
