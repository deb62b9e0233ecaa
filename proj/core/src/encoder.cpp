#include "icsie/encoder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cover_search.hpp"
#include "icsie/codeset.hpp"
#include "packed.hpp"

namespace icsie {
namespace {

// Every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const IndexSet&)>& visit) {
  IndexSet pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return;
  while (true) {
    visit(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Incremental row echelon basis used by the minrank search.
struct Echelon {
  std::vector<std::vector<Elem>> rows;  // each normalized to 1 at its pivot
  std::vector<std::size_t> pivots;

  bool insert(const Field& f, std::vector<Elem> v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Elem c = v[pivots[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.sub(v[k], f.mul(c, rows[r][k]));
    }
    auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (lead == v.end()) return false;
    const std::size_t p = static_cast<std::size_t>(lead - v.begin());
    const Elem inv = f.inv(*lead);
    for (Elem& e : v) e = f.mul(e, inv);
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

class MinrankSearch {
 public:
  MinrankSearch(const ProblemSpec& spec, const FittingTemplate& tpl, std::uint64_t node_limit)
      : field_(*spec.field), tpl_(tpl), node_limit_(node_limit), best_(tpl.n + 1) {
    for (const auto& col : tpl_.columns) offsets_.push_back(total_free_), total_free_ += col.free.size();
    current_.assign(total_free_, 0);
  }

  void run() { dfs(0, Echelon{}); }

  std::size_t best() const { return best_; }
  const std::vector<Elem>& best_assignment() const { return best_assignment_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void dfs(std::size_t column, const Echelon& basis) {
    if (++nodes_ > node_limit_) {
      throw Error(ErrorCode::BudgetExceeded, "minrank search exceeded " + std::to_string(node_limit_) + " nodes");
    }
    // Rank never decreases as columns are added.
    if (basis.rows.size() >= best_) return;
    if (column == tpl_.columns.size()) {
      best_ = basis.rows.size();
      best_assignment_ = current_;
      return;
    }
    const FittingColumn& col = tpl_.columns[column];
    const std::size_t base = offsets_[column];
    std::vector<Elem> values(col.free.size(), 0);
    while (true) {
      std::vector<Elem> v(tpl_.n, 0);
      v[col.one] = 1;
      for (std::size_t k = 0; k < col.free.size(); ++k) {
        v[col.free[k]] = values[k];
        current_[base + k] = values[k];
      }
      Echelon next = basis;
      next.insert(field_, std::move(v));
      dfs(column + 1, next);
      if (best_ <= 1) return;  // a nonzero column always has rank 1
      std::size_t k = values.size();
      while (k > 0 && ++values[k - 1] == field_.size()) values[--k] = 0;
      if (k == 0) break;
    }
    std::fill(current_.begin() + static_cast<std::ptrdiff_t>(base),
              current_.begin() + static_cast<std::ptrdiff_t>(base + col.free.size()), 0);
  }

  const Field& field_;
  const FittingTemplate& tpl_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::size_t best_;
  std::size_t total_free_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Elem> current_;
  std::vector<Elem> best_assignment_;
};

// Largest subspace of F_q^n that contains no interference vector. Subspaces
// are enumerated once each through their reduced echelon bases, adding rows in
// order of decreasing pivot so that every prefix spans a subspace of the
// final one.
class KernelSearch {
 public:
  KernelSearch(const ProblemSpec& spec, const Budget& budget)
      : space_(spec.field, spec.n()), n_(spec.n()), node_limit_(budget.search_nodes) {
    require_within_bits(spec.q(), spec.n(), budget.enumeration_bits, "kernel search");
    bad_.assign(space_.size(), false);
    std::vector<Elem> z(n_);
    for (std::uint64_t code = 0; code < space_.size(); ++code) {
      space_.unpack(code, z);
      bad_[code] = interference_witness(spec, z).has_value();
    }
  }

  // Stops as soon as a subspace of dimension `stop_at` is found.
  void run(std::size_t stop_at) {
    stop_at_ = stop_at;
    done_ = false;
    best_dim_ = 0;
    best_basis_.clear();
    span_.assign(1, 0);
    dfs();
  }

  std::size_t best_dim() const { return best_dim_; }
  const std::vector<std::uint64_t>& best_basis() const { return best_basis_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void dfs() {
    if (++nodes_ > node_limit_) {
      throw Error(ErrorCode::BudgetExceeded, "kernel search exceeded " + std::to_string(node_limit_) + " nodes");
    }
    const std::size_t dim = basis_.size();
    if (dim > best_dim_ || (dim == 0 && best_basis_.empty())) {
      best_dim_ = dim;
      best_basis_ = basis_;
    }
    if (best_dim_ >= stop_at_) {
      done_ = true;
      return;
    }
    const std::size_t lowest = pivots_.empty() ? n_ : pivots_.back();
    const Field& f = space_.field();
    for (std::size_t p = lowest; p-- > 0;) {
      if (dim + p + 1 <= best_dim_) break;
      std::vector<std::size_t> free;
      for (std::size_t c = p + 1; c < n_; ++c) {
        if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) free.push_back(c);
      }
      std::vector<Elem> values(free.size(), 0);
      std::vector<Elem> v(n_, 0);
      while (true) {
        std::fill(v.begin(), v.end(), 0);
        v[p] = 1;
        for (std::size_t k = 0; k < free.size(); ++k) v[free[k]] = values[k];
        const std::uint64_t code = space_.pack(v);
        std::vector<std::uint64_t> added;
        bool ok = true;
        for (Elem c = 1; c < f.size() && ok; ++c) {
          const std::uint64_t cv = space_.scale(c, code);
          for (std::uint64_t s : span_) {
            const std::uint64_t w = space_.add(cv, s);
            if (bad_[w]) {
              ok = false;
              break;
            }
            added.push_back(w);
          }
        }
        if (ok) {
          const std::size_t old = span_.size();
          span_.insert(span_.end(), added.begin(), added.end());
          basis_.push_back(code);
          pivots_.push_back(p);
          dfs();
          pivots_.pop_back();
          basis_.pop_back();
          span_.resize(old);
          if (done_) return;
        }
        std::size_t k = values.size();
        while (k > 0 && ++values[k - 1] == f.size()) values[--k] = 0;
        if (k == 0) break;
      }
    }
  }

  detail::PackedSpace space_;
  std::size_t n_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> bad_;
  std::size_t stop_at_ = 0;
  bool done_ = false;
  std::vector<std::uint64_t> span_;
  std::vector<std::uint64_t> basis_;
  std::vector<std::size_t> pivots_;
  std::size_t best_dim_ = 0;
  std::vector<std::uint64_t> best_basis_;
};

Matrix generator_from_kernel(const ProblemSpec& spec, const detail::PackedSpace& space,
                             const std::vector<std::uint64_t>& kernel) {
  std::vector<std::vector<Elem>> rows;
  for (std::uint64_t code : kernel) rows.push_back(space.unpack(code));
  const Matrix k = Matrix::from_rows(spec.field, rows, spec.n());
  return transpose(null_space_basis(k));
}

Matrix matrix_from_columns(const ProblemSpec& spec, const detail::PackedSpace& space,
                           const std::vector<std::uint64_t>& columns) {
  Matrix g(spec.field, spec.n(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto v = space.unpack(columns[c]);
    for (std::size_t r = 0; r < spec.n(); ++r) g.set(r, c, v[r]);
  }
  return g;
}

std::vector<std::uint64_t> packed_interference(const ProblemSpec& spec, const detail::PackedSpace& space,
                                               const Budget& budget) {
  std::vector<std::uint64_t> out;
  for_each_interference(
      spec,
      [&](const InterferenceVector& iv) {
        out.push_back(space.pack(iv.z.entries()));
        return true;
      },
      budget);
  return out;
}

void require_certified(const ProblemSpec& spec, const Matrix& g, const Budget& budget) {
  if (!is_valid_generator(spec, g, budget)) {
    throw std::logic_error("search produced a generator that fails the validity test");
  }
}

}  // namespace

std::size_t FittingTemplate::free_count() const {
  std::size_t total = 0;
  for (const auto& c : columns) total += c.free.size();
  return total;
}

Matrix FittingTemplate::complete(const FieldPtr& field, std::span<const Elem> assignment) const {
  if (assignment.size() != free_count()) {
    throw Error(ErrorCode::DimensionMismatch, "assignment length differs from free position count");
  }
  Matrix a(field, n, columns.size());
  std::size_t at = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    a.set(columns[c].one, c, 1);
    for (std::size_t r : columns[c].free) a.set(r, c, assignment[at++]);
  }
  return a;
}

FittingTemplate fitting_template(const ProblemSpec& spec) {
  require_valid(spec.graph);
  const SideInfoGraph& g = spec.graph;
  const std::size_t budget = spec.side_budget();
  FittingTemplate tpl;
  tpl.n = g.n;
  for (std::size_t i = 0; i < g.receivers(); ++i) {
    const IndexSet& x = g.side[i];
    const IndexSet y = y_set(g, i);
    auto add_column = [&](IndexSet chosen) {
      FittingColumn col{i, chosen, g.demand[i], {}, {}};
      col.zeros = y;
      col.zeros.insert(col.zeros.end(), chosen.begin(), chosen.end());
      std::sort(col.zeros.begin(), col.zeros.end());
      for (std::size_t j : x) {
        if (!std::binary_search(chosen.begin(), chosen.end(), j)) col.free.push_back(j);
      }
      tpl.columns.push_back(std::move(col));
    };
    if (x.size() < budget) {
      add_column(x);
    } else {
      for_each_subset(x.size(), budget, [&](const IndexSet& pick) {
        IndexSet chosen;
        for (std::size_t k : pick) chosen.push_back(x[k]);
        add_column(std::move(chosen));
      });
    }
  }
  return tpl;
}

MinrankResult minrank(const ProblemSpec& spec, const Budget& budget) {
  const FittingTemplate tpl = fitting_template(spec);
  require_within_bits(spec.q(), tpl.free_count(), budget.minrank_bits, "minrank assignments");
  MinrankSearch search(spec, tpl, budget.search_nodes);
  search.run();
  MinrankResult out;
  out.rank = search.best();
  out.assignment = search.best_assignment();
  out.fitting = tpl.complete(spec.field, out.assignment);
  out.generator = submatrix_cols(out.fitting, independent_columns(out.fitting));
  out.nodes = search.nodes();
  return out;
}

OptimalLength optimal_length(const ProblemSpec& spec, const Budget& budget) {
  require_valid(spec.graph);
  OptimalLength out;
  out.generator.spec = spec;
  if (spec.delta_c == 0) {
    KernelSearch search(spec, budget);
    // e_{f(i)} is always an interference vector, so the kernel is proper.
    search.run(spec.n() - 1);
    const detail::PackedSpace space(spec.field, spec.n());
    out.length = spec.n() - search.best_dim();
    out.generator.matrix = generator_from_kernel(spec, space, search.best_basis());
    out.nodes = search.nodes();
  } else {
    const detail::PackedSpace space(spec.field, spec.n());
    const std::size_t threshold = 2 * spec.delta_c + 1;
    detail::CoverSearch search(spec.field, spec.n(), packed_interference(spec, space, budget), threshold,
                               budget.search_nodes);
    std::optional<std::vector<std::uint64_t>> found;
    std::size_t length = threshold;
    for (; length <= budget.gecic_max_length && !found; ++length) found = search.solve(length);
    if (!found) {
      throw Error(ErrorCode::BudgetExceeded,
                  "no generator up to length " + std::to_string(budget.gecic_max_length));
    }
    out.length = found->size();
    out.generator.matrix = matrix_from_columns(spec, space, *found);
    out.nodes = search.nodes();
  }
  require_certified(spec, out.generator.matrix, budget);
  return out;
}

bool exists_generator_of_length(const ProblemSpec& spec, std::size_t length, const Budget& budget) {
  require_valid(spec.graph);
  if (length >= spec.n() && spec.delta_c == 0) return true;
  if (spec.delta_c == 0) {
    KernelSearch search(spec, budget);
    search.run(spec.n() - length);
    return search.best_dim() >= spec.n() - length;
  }
  const detail::PackedSpace space(spec.field, spec.n());
  detail::CoverSearch search(spec.field, spec.n(), packed_interference(spec, space, budget),
                             2 * spec.delta_c + 1, budget.search_nodes);
  return search.solve(length).has_value();
}

Matrix cycle_code(const FieldPtr& field, std::size_t size, std::size_t side_budget) {
  if (size < side_budget + 2 || size < 2) {
    throw Error(ErrorCode::TooSmall, "cycle code needs at least " + std::to_string(std::max<std::size_t>(side_budget + 2, 2)) +
                                         " packets, got " + std::to_string(size));
  }
  Matrix g(field, size, size - 1);
  for (std::size_t c = 0; c + 1 < size; ++c) {
    g.set(c, c, 1);
    g.set(c + 1, c, 1);
  }
  return g;
}

Matrix cycle_packing_code(const ProblemSpec& spec, const std::vector<IndexSet>& cycles) {
  const std::size_t n = spec.n();
  std::vector<bool> used(n, false);
  std::size_t covered = 0;
  for (const IndexSet& b : cycles) {
    for (std::size_t j : b) {
      if (j >= n) throw Error(ErrorCode::IndexOutOfRange, "cycle packet out of range");
      if (used[j]) throw Error(ErrorCode::InvalidArgument, "cycle sets overlap");
      used[j] = true;
    }
    covered += b.size();
  }
  Matrix g(spec.field, n, n - cycles.size());
  std::size_t col = 0;
  for (const IndexSet& b : cycles) {
    const Matrix block = cycle_code(spec.field, b.size(), spec.side_budget());
    for (std::size_t r = 0; r < b.size(); ++r) {
      for (std::size_t c = 0; c < block.cols(); ++c) g.set(b[r], col + c, block(r, c));
    }
    col += block.cols();
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!used[j]) g.set(j, col++, 1);
  }
  (void)covered;
  return g;
}

std::optional<std::size_t> code_minimum_distance(const Matrix& parity_check, const Budget& budget) {
  const Matrix basis = null_space_basis(parity_check);
  const std::size_t k = basis.rows();
  if (k == 0) return std::nullopt;
  const Field& f = *parity_check.field();
  require_within_bits(f.size(), k, budget.enumeration_bits, "codeword enumeration");
  const detail::PackedSpace messages(parity_check.field(), k);
  std::size_t best = basis.cols() + 1;
  std::vector<Elem> u(k), word(basis.cols());
  for (std::uint64_t code = 1; code < messages.size(); ++code) {
    messages.unpack(code, u);
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t r = 0; r < k; ++r) {
      if (u[r] == 0) continue;
      for (std::size_t c = 0; c < basis.cols(); ++c) word[c] = f.add(word[c], f.mul(u[r], basis(r, c)));
    }
    best = std::min(best, weight(word));
  }
  return best;
}

GeneratorMatrix clique_from_parity(const Matrix& parity_check, std::size_t delta_s, const Budget& budget) {
  const std::size_t n = parity_check.cols();
  const auto distance = code_minimum_distance(parity_check, budget);
  if (distance && *distance < 2 * delta_s + 2) {
    throw Error(ErrorCode::DistanceTooSmall, "code distance " + std::to_string(*distance) + " is below " +
                                                 std::to_string(2 * delta_s + 2));
  }
  GeneratorMatrix out{ProblemSpec{clique_graph(n), parity_check.field(), delta_s, 0, SideErrorModel::Error},
                      transpose(parity_check)};
  require_certified(out.spec, out.matrix, budget);
  return out;
}

Matrix reed_solomon_parity_check(const FieldPtr& field, std::size_t n, std::size_t redundancy) {
  const std::uint32_t q = field->size();
  if (n == 0 || (q - 1) % n != 0) {
    throw Error(ErrorCode::InvalidArgument, "Reed-Solomon length must divide q - 1");
  }
  if (redundancy > n) throw Error(ErrorCode::InvalidArgument, "redundancy exceeds length");
  const Elem alpha = field->pow(field->primitive_element(), (q - 1) / n);
  Matrix h(field, redundancy, n);
  for (std::size_t i = 0; i < redundancy; ++i) {
    const Elem root = field->pow(alpha, i + 1);
    for (std::size_t j = 0; j < n; ++j) h.set(i, j, field->pow(root, j));
  }
  return h;
}

namespace {

class IndependentSetSearch {
 public:
  IndependentSetSearch(const FieldPtr& field, std::size_t dim, std::size_t k, std::uint64_t node_limit)
      : space_(field, dim), k_(k), node_limit_(node_limit) {}

  std::size_t run() {
    // A largest k-independent set spans F_q^dim (a vector outside the span
    // can always be added), so up to a change of basis it contains the
    // standard basis.
    const std::size_t dim = space_.length();
    std::vector<std::vector<bool>> layers(k_, std::vector<bool>(space_.size(), false));
    layers[0][0] = true;
    std::vector<Elem> v(dim);
    for (std::uint64_t code = 0; code < space_.size(); ++code) {
      const std::size_t w = space_.weight(code);
      for (std::size_t t = w; t < k_; ++t) layers[t][code] = true;
    }
    best_ = dim;
    dfs(0, dim, layers);
    return best_;
  }

 private:
  void dfs(std::uint64_t next, std::size_t size, const std::vector<std::vector<bool>>& layers) {
    if (++nodes_ > node_limit_) {
      throw Error(ErrorCode::BudgetExceeded, "Ind_q search exceeded " + std::to_string(node_limit_) + " nodes");
    }
    best_ = std::max(best_, size);
    const std::vector<bool>& forbidden = layers[k_ - 1];
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t code = next; code < space_.size(); ++code) {
      if (!forbidden[code]) candidates.push_back(code);
    }
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      if (size + (candidates.size() - idx) <= best_) return;
      const std::uint64_t v = candidates[idx];
      if (layers[k_ - 1][v]) continue;
      std::vector<std::vector<bool>> grown = layers;
      const Field& f = space_.field();
      for (std::size_t t = k_; t-- > 1;) {
        for (std::uint64_t u = 0; u < space_.size(); ++u) {
          if (!layers[t - 1][u]) continue;
          for (Elem c = 1; c < f.size(); ++c) grown[t][space_.add(space_.scale(c, v), u)] = true;
        }
      }
      dfs(v + 1, size + 1, grown);
    }
  }

  detail::PackedSpace space_;
  std::size_t k_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t ind_q(const FieldPtr& field, std::size_t dim, std::size_t k, const Budget& budget) {
  if (k == 0 || dim == 0) throw Error(ErrorCode::InvalidArgument, "ind_q needs k >= 1 and dim >= 1");
  require_within_bits(field->size(), dim, budget.ind_bits, "Ind_q vector space");
  const detail::PackedSpace space(field, dim);
  if (k > dim) {
    // Any k vectors of F_q^dim are dependent; only sets smaller than k qualify.
    return static_cast<std::size_t>(std::min<std::uint64_t>(k - 1, space.size()));
  }
  // The search seeds the standard basis into the layers t >= 1 only.
  if (k == 1) return static_cast<std::size_t>(space.size() - 1);
  IndependentSetSearch search(field, dim, k, budget.search_nodes);
  return search.run();
}

std::size_t griesmer_bound(std::uint32_t q, std::size_t a, std::size_t d) {
  std::size_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < a; ++i) {
    total += static_cast<std::size_t>((d + power - 1) / power);
    if (power < (std::uint64_t{1} << 40)) power *= q;
  }
  return total;
}

std::size_t l_q(const FieldPtr& field, std::size_t a, std::size_t d, const Budget& budget) {
  if (a == 0 || d == 0) throw Error(ErrorCode::InvalidArgument, "l_q needs a >= 1 and d >= 1");
  require_within_bits(field->size(), a, budget.enumeration_bits, "l_q message space");
  const detail::PackedSpace space(field, a);
  std::vector<std::uint64_t> messages;
  for (std::uint64_t code = 1; code < space.size(); ++code) messages.push_back(code);
  detail::CoverSearch search(field, a, std::move(messages), d, budget.search_nodes);
  // Every code has an information set; after a change of basis of the message
  // space those columns form the identity.
  std::vector<std::uint64_t> identity;
  for (std::size_t i = 0; i < a; ++i) {
    std::vector<Elem> e(a, 0);
    e[i] = 1;
    identity.push_back(space.pack(e));
  }
  search.force(identity);
  for (std::size_t n = std::max(a, griesmer_bound(field->size(), a, d)); n <= budget.lq_max_length; ++n) {
    if (search.solve(n)) return n;
  }
  throw Error(ErrorCode::BudgetExceeded, "l_q: no code up to length " + std::to_string(budget.lq_max_length));
}

std::optional<std::size_t> l_2_table(std::size_t a, std::size_t d) {
  // Rows a = 1..5, columns d = 1..6.
  static constexpr std::size_t kTable[5][6] = {
      {1, 2, 3, 4, 5, 6},
      {2, 3, 5, 6, 8, 9},
      {3, 4, 6, 7, 10, 11},
      {4, 5, 7, 8, 11, 12},
      {5, 6, 9, 10, 13, 14},
  };
  if (a < 1 || a > 5 || d < 1 || d > 6) return std::nullopt;
  return kTable[a - 1][d - 1];
}

std::string serialize_generator(const Matrix& g) {
  std::ostringstream os;
  os << "{\n  \"q\": " << g.field()->size() << ",\n  \"n\": " << g.rows() << ",\n  \"N\": " << g.cols()
     << ",\n  \"rows\": [";
  for (std::size_t r = 0; r < g.rows(); ++r) {
    os << (r ? ",\n    [" : "\n    [");
    for (std::size_t c = 0; c < g.cols(); ++c) os << (c ? ", " : "") << g(r, c);
    os << "]";
  }
  os << (g.rows() ? "\n  ]\n}\n" : "]\n}\n");
  return os.str();
}

Matrix parse_generator(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed generator JSON: ") + e.what(), 0, 0, "");
  }
  auto get = [&](const char* key) -> std::uint64_t {
    if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_number_unsigned()) {
      throw ParseError(std::string("field \"") + key + "\": expected a non-negative integer", 0, 0, key);
    }
    return doc.at(key).get<std::uint64_t>();
  };
  const std::uint64_t q = get("q");
  const std::uint64_t n = get("n");
  const std::uint64_t big_n = get("N");
  FieldPtr field;
  try {
    field = Field::make(q);
  } catch (const Error& e) {
    throw ParseError(std::string("field \"q\": ") + e.what(), 0, 0, "q", e.code());
  }
  if (!doc.contains("rows") || !doc.at("rows").is_array() || doc.at("rows").size() != n) {
    throw ParseError("field \"rows\": expected n rows", 0, 0, "rows");
  }
  Matrix g(field, n, big_n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = doc.at("rows")[r];
    if (!row.is_array() || row.size() != big_n) throw ParseError("field \"rows\": expected N entries per row", 0, 0, "rows");
    for (std::size_t c = 0; c < big_n; ++c) {
      if (!row[c].is_number_unsigned() || row[c].get<std::uint64_t>() >= q) {
        throw ParseError("field \"rows\": entries must be canonical field elements", 0, 0, "rows");
      }
      g.set(r, c, static_cast<Elem>(row[c].get<std::uint64_t>()));
    }
  }
  return g;
}

}  // namespace icsie
