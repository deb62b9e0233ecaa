#include "icsie/decoder.hpp"

#include <algorithm>

namespace icsie {
namespace {

Matrix rows_of(const Matrix& g, const IndexSet& rows) { return submatrix_rows(g, rows); }

// Lexicographic successor of a k-subset of {0..n-1}; false after the last.
bool next_subset(IndexSet& pick, std::size_t n) {
  const std::size_t k = pick.size();
  std::size_t i = k;
  while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++pick[i - 1];
  for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  return true;
}

}  // namespace

ReceiverContext build_context(const ProblemSpec& spec, const Matrix& g, std::size_t receiver) {
  if (spec.side_error_model == SideErrorModel::Erasure) {
    throw Error(ErrorCode::Unsupported, "syndrome decoding is defined for the error model only");
  }
  require_same_field(spec.field, g.field());
  if (g.rows() != spec.n()) throw Error(ErrorCode::DimensionMismatch, "generator row count differs from n");
  if (receiver >= spec.m()) throw Error(ErrorCode::IndexOutOfRange, "receiver index out of range");
  const SideInfoGraph& graph = spec.graph;
  ReceiverContext ctx;
  ctx.receiver = receiver;
  ctx.side = graph.side[receiver];
  ctx.interference = y_set(graph, receiver);
  ctx.demand_row = g.row(graph.demand[receiver]);
  ctx.side_rows = rows_of(g, ctx.side);
  if (ctx.side_rows.rows() == 0) ctx.side_rows = Matrix(g.field(), 0, g.cols());
  ctx.interference_rows = rows_of(g, ctx.interference);
  if (ctx.interference_rows.rows() == 0) ctx.interference_rows = Matrix(g.field(), 0, g.cols());

  IndexSet with_demand = ctx.interference;
  with_demand.push_back(graph.demand[receiver]);
  std::sort(with_demand.begin(), with_demand.end());
  ctx.h = null_space_basis(rows_of(g, with_demand));
  ctx.h_e = null_space_basis(ctx.interference_rows);

  const Vector seen = multiply(ctx.h_e, ctx.demand_row);
  if (seen.is_zero()) {
    throw Error(ErrorCode::Degenerate, "receiver " + std::to_string(receiver + 1) +
                                           ": demanded row lies in the span of the interference rows");
  }
  return ctx;
}

Vector receiver_syndrome(const ReceiverContext& ctx, const Vector& y, const Vector& x_hat) {
  if (x_hat.size() != ctx.side.size()) {
    throw Error(ErrorCode::DimensionMismatch, "cache length differs from |X_i|");
  }
  if (y.size() != ctx.h.cols()) throw Error(ErrorCode::DimensionMismatch, "codeword length differs from N");
  const Vector known = ctx.side_rows.rows() ? multiply(x_hat, ctx.side_rows) : Vector(y.field(), y.size());
  return multiply(ctx.h, subtract(y, known));
}

Correction find_correction(const ReceiverContext& ctx, const Vector& syndrome, std::size_t delta_s) {
  const FieldPtr& field = ctx.h.field();
  const Field& f = *field;
  const std::size_t width = ctx.side.size();
  if (syndrome.size() != ctx.h.rows()) throw Error(ErrorCode::DimensionMismatch, "syndrome length differs from H");

  // H (row k of G_X)^T for every cached position k.
  std::vector<Vector> images;
  for (std::size_t k = 0; k < width; ++k) images.push_back(multiply(ctx.h, ctx.side_rows.row(k)));

  const std::size_t longest = std::min(delta_s, width);
  for (std::size_t size = 0; size <= longest; ++size) {
    IndexSet pick(size);
    for (std::size_t k = 0; k < size; ++k) pick[k] = k;
    do {
      std::vector<Elem> coeff(size, 1);
      while (true) {
        std::vector<Elem> s(syndrome.size(), 0);
        for (std::size_t t = 0; t < size; ++t) {
          const Vector& col = images[pick[t]];
          for (std::size_t r = 0; r < s.size(); ++r) s[r] = f.add(s[r], f.mul(coeff[t], col[r]));
        }
        if (std::equal(s.begin(), s.end(), syndrome.entries().begin())) {
          Correction out{Vector(field, ctx.h.cols()), {}, coeff};
          Vector p(field, ctx.h.cols());
          for (std::size_t t = 0; t < size; ++t) {
            p = add(p, scale(coeff[t], ctx.side_rows.row(pick[t])));
            out.support.push_back(ctx.side[pick[t]]);
          }
          out.p = p;
          return out;
        }
        std::size_t t = size;
        while (t > 0 && ++coeff[t - 1] == f.size()) coeff[--t] = 1;
        if (t == 0) break;
      }
    } while (size > 0 && next_subset(pick, width));
  }
  throw Error(ErrorCode::NoSolution, "receiver " + std::to_string(ctx.receiver + 1) +
                                         ": no correction with at most " + std::to_string(delta_s) +
                                         " side-information errors matches the syndrome");
}

DecodeTrace decode_receiver(const ProblemSpec& spec, const Matrix& g, std::size_t receiver, const Vector& y,
                            const Vector& x_hat, const std::optional<Vector>& forced) {
  return decode_with_context(build_context(spec, g, receiver), spec.delta_s, y, x_hat, forced);
}

DecodeTrace decode_with_context(const ReceiverContext& ctx, std::size_t delta_s, const Vector& y,
                                const Vector& x_hat, const std::optional<Vector>& forced) {
  const Field& f = *ctx.h.field();
  const std::size_t receiver = ctx.receiver;
  DecodeTrace trace;
  trace.syndrome = receiver_syndrome(ctx, y, x_hat);
  if (forced) {
    if (forced->size() != ctx.h.cols()) throw Error(ErrorCode::DimensionMismatch, "forced correction length differs from N");
    if (!(multiply(ctx.h, *forced) == trace.syndrome)) {
      throw Error(ErrorCode::InvalidArgument, "forced correction does not match the syndrome");
    }
    trace.correction = Correction{*forced, {}, {}};
  } else {
    trace.correction = find_correction(ctx, trace.syndrome, delta_s);
  }
  const Vector known = ctx.side_rows.rows() ? multiply(x_hat, ctx.side_rows) : Vector(y.field(), y.size());
  trace.y_tilde = subtract(subtract(y, known), trace.correction.p);

  // y~ H_e^T = x_{f(i)} (G_f H_e^T); every coordinate must agree on the scalar.
  const Vector lhs = multiply(ctx.h_e, trace.y_tilde);
  const Vector rhs = multiply(ctx.h_e, ctx.demand_row);
  std::optional<Elem> value;
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    if (rhs[k] != 0) {
      value = f.div(lhs[k], rhs[k]);
      break;
    }
  }
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    if (lhs[k] != f.mul(*value, rhs[k])) {
      throw Error(ErrorCode::Inconsistent, "receiver " + std::to_string(receiver + 1) +
                                               ": corrected word is not a multiple of the demanded row modulo interference");
    }
  }
  trace.value = *value;
  return trace;
}

std::vector<ReceiverOutcome> decode_all(const ProblemSpec& spec, const Matrix& g, const Vector& y,
                                        const std::vector<Vector>& x_hat) {
  if (x_hat.size() != spec.m()) throw Error(ErrorCode::DimensionMismatch, "need one cache per receiver");
  std::vector<ReceiverOutcome> out(spec.m());
  for (std::size_t i = 0; i < spec.m(); ++i) {
    try {
      out[i].trace = decode_receiver(spec, g, i, y, x_hat[i]);
    } catch (const Error& e) {
      out[i].error = e.code();
      out[i].message = e.what();
    }
  }
  return out;
}

}  // namespace icsie
