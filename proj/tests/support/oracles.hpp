#pragma once

// Seeded instance/matrix generators and brute-force reference computations.
// Nothing here calls the library's elimination or search code; the oracles
// enumerate directly from definitions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "icsie/codeset.hpp"
#include "icsie/graph.hpp"
#include "icsie/linalg.hpp"

namespace oracle {

using icsie::Elem;
using icsie::FieldPtr;
using icsie::IndexSet;
using icsie::Matrix;
using icsie::ProblemSpec;
using icsie::SideInfoGraph;

// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t d;
    do {
      d = rng_();
    } while (d >= limit);
    return d % bound;
  }
  bool coin() { return below(2) == 1; }

  Matrix matrix(const FieldPtr& f, std::size_t r, std::size_t c) {
    Matrix a(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a.set(i, j, static_cast<Elem>(below(f->size())));
    return a;
  }

  std::vector<Elem> vec(const FieldPtr& f, std::size_t n) {
    std::vector<Elem> v(n);
    for (auto& e : v) e = static_cast<Elem>(below(f->size()));
    return v;
  }

  // m = n, f(i) = i, each X_i a random subset of the other packets.
  SideInfoGraph unipartite(std::size_t n) {
    std::vector<IndexSet> side(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && coin()) side[i].push_back(j);
    return icsie::unipartite_graph(side);
  }

  // Arbitrary valid bipartite graph: every packet demanded at least once.
  SideInfoGraph bipartite(std::size_t n, std::size_t m) {
    SideInfoGraph g;
    g.n = n;
    for (std::size_t i = 0; i < m; ++i) g.demand.push_back(i < n ? i : below(n));
    for (std::size_t i = 0; i < m; ++i) {
      IndexSet x;
      for (std::size_t j = 0; j < n; ++j)
        if (j != g.demand[i] && coin()) x.push_back(j);
      g.side.push_back(x);
    }
    return g;
  }

 private:
  std::mt19937_64 rng_;
};

// Every unipartite graph on n packets (each X_i any subset of the others).
inline std::vector<SideInfoGraph> all_unipartite(std::size_t n) {
  std::vector<SideInfoGraph> out;
  const std::size_t per = std::size_t{1} << (n - 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= per;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<IndexSet> side(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bits = c % per;
      c /= per;
      std::size_t b = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (bits >> b & 1u) side[i].push_back(j);
        ++b;
      }
    }
    out.push_back(icsie::unipartite_graph(side));
  }
  return out;
}

// Calls visit on every vector of F_q^n in lexicographic order.
inline void each_vector(std::uint32_t q, std::size_t n, const std::function<void(const std::vector<Elem>&)>& visit) {
  std::vector<Elem> v(n, 0);
  while (true) {
    visit(v);
    std::size_t k = n;
    while (k > 0 && ++v[k - 1] == q) v[--k] = 0;
    if (k == 0) return;
  }
}

inline std::vector<Elem> times(const icsie::Field& f, const std::vector<Elem>& x, const Matrix& a) {
  std::vector<Elem> out(a.cols(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] = f.add(out[c], f.mul(x[r], a(r, c)));
  return out;
}

inline std::size_t wt(const std::vector<Elem>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

// Straight from the definition of I_i.
inline bool in_interference(const ProblemSpec& s, const std::vector<Elem>& z) {
  const std::size_t budget = s.side_error_model == icsie::SideErrorModel::Erasure ? s.delta_s : 2 * s.delta_s;
  for (std::size_t i = 0; i < s.m(); ++i) {
    if (z[s.graph.demand[i]] == 0) continue;
    std::size_t w = 0;
    for (std::size_t j : s.graph.side[i]) w += z[j] != 0;
    if (w <= budget) return true;
  }
  return false;
}

inline std::vector<std::vector<Elem>> interference(const ProblemSpec& s) {
  std::vector<std::vector<Elem>> out;
  each_vector(s.q(), s.n(), [&](const std::vector<Elem>& z) {
    if (in_interference(s, z)) out.push_back(z);
  });
  return out;
}

inline bool valid(const ProblemSpec& s, const Matrix& g) {
  const std::size_t need = 2 * s.delta_c + 1;
  bool ok = true;
  each_vector(s.q(), s.n(), [&](const std::vector<Elem>& z) {
    if (ok && in_interference(s, z) && wt(times(*s.field, z, g)) < need) ok = false;
  });
  return ok;
}

// Dimension of the row space, by counting the distinct combinations.
inline std::size_t rank(const Matrix& a) {
  std::set<std::vector<Elem>> span;
  each_vector(a.field()->size(), a.rows(), [&](const std::vector<Elem>& c) { span.insert(times(*a.field(), c, a)); });
  std::size_t r = 0;
  std::size_t size = 1;
  while (size < span.size()) {
    size *= a.field()->size();
    ++r;
  }
  return r;
}

inline bool in_span(const std::vector<Elem>& v, const Matrix& a) {
  bool found = false;
  each_vector(a.field()->size(), a.rows(), [&](const std::vector<Elem>& c) {
    if (!found && times(*a.field(), c, a) == v) found = true;
  });
  return found;
}

// Smallest N with a valid n x N generator, trying every matrix.
inline std::size_t optimal_length(const ProblemSpec& s, std::size_t max_len) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t cells = s.n() * len;
    bool found = false;
    each_vector(s.q(), cells, [&](const std::vector<Elem>& entries) {
      if (found) return;
      if (valid(s, Matrix(s.field, s.n(), len, entries))) found = true;
    });
    if (found) return len;
  }
  return max_len + 1;
}

// Smallest weight of a nonzero x with H x^T = 0; 0 when none.
inline std::size_t min_distance(const Matrix& h) {
  std::size_t best = 0;
  const icsie::Field& f = *h.field();
  each_vector(f.size(), h.cols(), [&](const std::vector<Elem>& x) {
    if (wt(x) == 0) return;
    for (std::size_t r = 0; r < h.rows(); ++r) {
      Elem acc = 0;
      for (std::size_t c = 0; c < h.cols(); ++c) acc = f.add(acc, f.mul(h(r, c), x[c]));
      if (acc != 0) return;
    }
    if (best == 0 || wt(x) < best) best = wt(x);
  });
  return best;
}

// Shortest binary [len, a, >= d] code by trying all a x len generators.
inline std::size_t l2(const FieldPtr& f2, std::size_t a, std::size_t d, std::size_t max_len) {
  for (std::size_t len = a; len <= max_len; ++len) {
    bool found = false;
    each_vector(2, a * len, [&](const std::vector<Elem>& entries) {
      if (found) return;
      const Matrix g(f2, a, len, entries);
      bool ok = true;
      each_vector(2, a, [&](const std::vector<Elem>& u) {
        if (ok && wt(u) > 0 && wt(times(*f2, u, g)) < d) ok = false;
      });
      if (ok) found = true;
    });
    if (found) return len;
  }
  return 0;
}

// Supports of interference vectors: K is in J iff some z in I has support K.
inline std::set<IndexSet> interference_supports(const ProblemSpec& s) {
  std::set<IndexSet> out;
  for (const auto& z : interference(s)) {
    IndexSet k;
    for (std::size_t j = 0; j < z.size(); ++j)
      if (z[j]) k.push_back(j);
    out.insert(k);
  }
  return out;
}

inline std::vector<IndexSet> subsets(std::size_t n) {
  std::vector<IndexSet> out;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    IndexSet s;
    for (std::size_t j = 0; j < n; ++j)
      if (m >> j & 1u) s.push_back(j);
    out.push_back(s);
  }
  return out;
}

// Phi membership from the definition, over index sets.
inline bool cycle_set(const ProblemSpec& s, const IndexSet& b) {
  if (b.empty()) return false;
  const std::size_t budget = s.side_error_model == icsie::SideErrorModel::Erasure ? s.delta_s : 2 * s.delta_s;
  bool any = false;
  for (std::size_t i = 0; i < s.m(); ++i) {
    if (!std::binary_search(b.begin(), b.end(), s.graph.demand[i])) continue;
    any = true;
    std::size_t inside = 0;
    for (std::size_t j : s.graph.side[i]) inside += std::binary_search(b.begin(), b.end(), j);
    if (inside < budget + 1) return false;
  }
  return any;
}

// Largest Q all of whose nonempty subsets are interference supports.
inline std::size_t gamma(const ProblemSpec& s) {
  const auto supports = interference_supports(s);
  std::size_t best = 0;
  for (const auto& q : subsets(s.n())) {
    if (q.size() <= best) continue;
    bool ok = true;
    for (std::size_t m = 1; m < (std::size_t{1} << q.size()) && ok; ++m) {
      IndexSet k;
      for (std::size_t t = 0; t < q.size(); ++t)
        if (m >> t & 1u) k.push_back(q[t]);
      ok = supports.count(k) > 0;
    }
    if (ok) best = q.size();
  }
  return best;
}

// Largest number of pairwise disjoint cycle sets (any, not only minimal).
inline std::size_t beta(const ProblemSpec& s) {
  std::vector<IndexSet> all;
  for (const auto& b : subsets(s.n()))
    if (cycle_set(s, b)) all.push_back(b);
  std::size_t best = 0;
  std::function<void(std::size_t, std::vector<bool>&, std::size_t)> go = [&](std::size_t from, std::vector<bool>& used,
                                                                              std::size_t count) {
    best = std::max(best, count);
    for (std::size_t k = from; k < all.size(); ++k) {
      bool free = std::none_of(all[k].begin(), all[k].end(), [&](std::size_t j) { return used[j]; });
      if (!free) continue;
      for (std::size_t j : all[k]) used[j] = true;
      go(k + 1, used, count + 1);
      for (std::size_t j : all[k]) used[j] = false;
    }
  };
  std::vector<bool> used(s.n(), false);
  go(0, used, 0);
  return best;
}

}  // namespace oracle
