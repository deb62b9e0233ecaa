#include "icsie/codeset.hpp"

#include <algorithm>

#include "packed.hpp"

namespace icsie {
namespace {

void require_generator_shape(const ProblemSpec& spec, const Matrix& g) {
  require_same_field(spec.field, g.field());
  if (g.rows() != spec.n()) {
    throw Error(ErrorCode::DimensionMismatch, "generator has " + std::to_string(g.rows()) +
                                                  " rows, instance has " + std::to_string(spec.n()) +
                                                  " packets");
  }
}

// Advances v to the next vector in lexicographic order; false after the last.
bool next_vector(std::vector<Elem>& v, std::uint32_t q) {
  for (std::size_t k = v.size(); k-- > 0;) {
    if (++v[k] < q) return true;
    v[k] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::size_t> interference_witness(const ProblemSpec& spec, std::span<const Elem> z) {
  const SideInfoGraph& g = spec.graph;
  const std::size_t limit = spec.side_budget();
  for (std::size_t i = 0; i < g.receivers(); ++i) {
    if (z[g.demand[i]] == 0) continue;
    std::size_t w = 0;
    for (std::size_t j : g.side[i]) w += z[j] != 0;
    if (w <= limit) return i;
  }
  return std::nullopt;
}

void for_each_interference(const ProblemSpec& spec,
                           const std::function<bool(const InterferenceVector&)>& visit,
                           const Budget& budget) {
  require_within_bits(spec.q(), spec.n(), budget.enumeration_bits, "interference enumeration");
  std::vector<Elem> z(spec.n(), 0);
  if (spec.n() == 0) return;
  do {
    if (auto witness = interference_witness(spec, z)) {
      if (!visit(InterferenceVector{Vector(spec.field, z), *witness})) return;
    }
  } while (next_vector(z, spec.q()));
}

std::vector<InterferenceVector> enum_interference(const ProblemSpec& spec, const Budget& budget) {
  std::vector<InterferenceVector> out;
  for_each_interference(
      spec,
      [&](const InterferenceVector& iv) {
        out.push_back(iv);
        return true;
      },
      budget);
  return out;
}

std::optional<SupportPattern> support_witness(const ProblemSpec& spec, std::span<const std::size_t> k) {
  IndexSet support(k.begin(), k.end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.empty()) return std::nullopt;
  if (support.back() >= spec.n()) throw Error(ErrorCode::IndexOutOfRange, "support index out of range");
  const SideInfoGraph& g = spec.graph;
  for (std::size_t i = 0; i < g.receivers(); ++i) {
    if (!std::binary_search(support.begin(), support.end(), g.demand[i])) continue;
    SupportPattern pattern{support, i, {}, {}};
    for (std::size_t j : support) {
      if (j == g.demand[i]) continue;
      if (std::binary_search(g.side[i].begin(), g.side[i].end(), j)) {
        pattern.i_part.push_back(j);
      } else {
        pattern.y_part.push_back(j);
      }
    }
    if (pattern.i_part.size() <= spec.side_budget()) return pattern;
  }
  return std::nullopt;
}

bool in_support_family(const ProblemSpec& spec, std::span<const std::size_t> k) {
  return support_witness(spec, k).has_value();
}

ValidityResult is_valid_generator(const ProblemSpec& spec, const Matrix& g, const Budget& budget) {
  require_generator_shape(spec, g);
  const Field& f = *spec.field;
  const std::size_t threshold = 2 * spec.delta_c + 1;
  std::vector<Elem> codeword(g.cols());
  ValidityResult result{true, std::nullopt};
  for_each_interference(
      spec,
      [&](const InterferenceVector& iv) {
        std::fill(codeword.begin(), codeword.end(), 0);
        for (std::size_t r = 0; r < g.rows(); ++r) {
          const Elem zr = iv.z[r];
          if (zr == 0) continue;
          auto row = g.row_span(r);
          for (std::size_t c = 0; c < g.cols(); ++c) codeword[c] = f.add(codeword[c], f.mul(zr, row[c]));
        }
        if (weight(codeword) < threshold) {
          result = {false, iv};
          return false;
        }
        return true;
      },
      budget);
  return result;
}

bool oracle_decodable(const ProblemSpec& spec, const Matrix& g, const Budget& budget) {
  require_generator_shape(spec, g);
  const std::size_t n = spec.n();
  const std::size_t big_n = g.cols();
  require_within_bits(spec.q(), 2 * n, budget.oracle_pair_bits, "sphere oracle message pairs");
  const detail::PackedSpace messages(spec.field, n);
  const detail::PackedSpace words(spec.field, big_n);
  const Field& f = *spec.field;

  // Encode every message independently as x G.
  std::vector<std::uint64_t> codeword(messages.size());
  std::vector<Elem> x(n), y(big_n);
  for (std::uint64_t code = 0; code < messages.size(); ++code) {
    messages.unpack(code, x);
    for (std::size_t c = 0; c < big_n; ++c) {
      Elem acc = 0;
      for (std::size_t r = 0; r < n; ++r) acc = f.add(acc, f.mul(x[r], g(r, c)));
      y[c] = acc;
    }
    codeword[code] = words.pack(y);
  }

  // B(x, delta_c): every word within distance delta_c of x G, sorted.
  std::vector<std::uint64_t> errors;
  {
    std::vector<Elem> e(big_n, 0);
    const std::size_t radius = spec.delta_c;
    std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t from, std::size_t used) {
      errors.push_back(words.pack(e));
      if (used == radius) return;
      for (std::size_t pos = from; pos < big_n; ++pos) {
        for (Elem v = 1; v < spec.q(); ++v) {
          e[pos] = v;
          grow(pos + 1, used + 1);
        }
        e[pos] = 0;
      }
    };
    grow(0, 0);
  }
  std::vector<std::vector<std::uint64_t>> sphere(messages.size());
  auto sphere_of = [&](std::uint64_t code) -> const std::vector<std::uint64_t>& {
    auto& s = sphere[code];
    if (s.empty()) {
      s.reserve(errors.size());
      for (std::uint64_t e : errors) s.push_back(words.add(codeword[code], e));
      std::sort(s.begin(), s.end());
    }
    return s;
  };
  auto disjoint = [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    return true;
  };

  const SideInfoGraph& graph = spec.graph;
  const std::size_t allowed = spec.side_budget();
  std::vector<Elem> xa(n), xb(n);
  for (std::size_t i = 0; i < graph.receivers(); ++i) {
    const std::size_t want = graph.demand[i];
    for (std::uint64_t a = 0; a < messages.size(); ++a) {
      messages.unpack(a, xa);
      for (std::uint64_t b = a + 1; b < messages.size(); ++b) {
        messages.unpack(b, xb);
        if (xa[want] == xb[want]) continue;
        std::size_t disagree = 0;
        for (std::size_t j : graph.side[i]) disagree += xa[j] != xb[j];
        if (disagree > allowed) continue;
        if (!disjoint(sphere_of(a), sphere_of(b))) return false;
      }
    }
  }
  return true;
}

}  // namespace icsie
