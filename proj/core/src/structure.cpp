#include "icsie/structure.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include <nlohmann/json.hpp>

#include "icsie/codeset.hpp"
#include "icsie/encoder.hpp"
#include "rng.hpp"

namespace icsie {
namespace {

using Mask = std::uint32_t;

IndexSet to_set(Mask mask) {
  IndexSet out;
  for (std::size_t j = 0; mask; ++j, mask >>= 1) {
    if (mask & 1u) out.push_back(j);
  }
  return out;
}

Mask to_mask(const IndexSet& s) {
  Mask m = 0;
  for (std::size_t j : s) m |= Mask{1} << j;
  return m;
}

// Receivers as bitmasks for subset enumeration over packets.
struct MaskView {
  std::size_t n;
  std::size_t limit;
  std::vector<Mask> demand;
  std::vector<Mask> side;

  MaskView(const ProblemSpec& spec, const Budget& budget) : n(spec.n()), limit(spec.side_budget()) {
    if (n > 30) throw Error(ErrorCode::BudgetExceeded, "subset enumeration needs n <= 30");
    require_within_bits(2, n, budget.enumeration_bits, "packet subset enumeration");
    for (std::size_t i = 0; i < spec.m(); ++i) {
      demand.push_back(Mask{1} << spec.graph.demand[i]);
      side.push_back(to_mask(spec.graph.side[i]));
    }
  }

  Mask full() const { return n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1); }

  bool cycle(Mask b) const {
    bool any = false;
    for (std::size_t i = 0; i < demand.size(); ++i) {
      if (!(demand[i] & b)) continue;
      any = true;
      if (static_cast<std::size_t>(std::popcount(side[i] & b)) <= limit) return false;
    }
    return any;
  }

  IndexSet receivers_in(Mask b) const {
    IndexSet out;
    for (std::size_t i = 0; i < demand.size(); ++i) {
      if (demand[i] & b) out.push_back(i);
    }
    return out;
  }
};

bool lex_less(const IndexSet& a, const IndexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

ProblemSpec induced(const ProblemSpec& spec, Mask keep) {
  IndexSet removed;
  for (std::size_t j = 0; j < spec.n(); ++j) {
    if (!(keep >> j & 1u)) removed.push_back(j);
  }
  return spec.with_graph(delete_packets(spec.graph, removed).graph);
}

}  // namespace

bool is_cycle_set(const ProblemSpec& spec, const IndexSet& packets) {
  if (packets.empty()) return false;
  for (std::size_t j : packets) {
    if (j >= spec.n()) throw Error(ErrorCode::IndexOutOfRange, "packet index out of range");
  }
  bool any = false;
  const SideInfoGraph& g = spec.graph;
  for (std::size_t i = 0; i < g.receivers(); ++i) {
    if (std::find(packets.begin(), packets.end(), g.demand[i]) == packets.end()) continue;
    any = true;
    std::size_t inside = 0;
    for (std::size_t j : g.side[i]) inside += std::find(packets.begin(), packets.end(), j) != packets.end();
    if (inside <= spec.side_budget()) return false;
  }
  return any;
}

std::vector<CycleSet> find_cycles(const ProblemSpec& spec, const Budget& budget) {
  const MaskView view(spec, budget);
  const std::uint64_t count = std::uint64_t{1} << view.n;
  std::vector<bool> contains(count, false);  // mask has a cycle subset
  std::vector<CycleSet> out;
  for (std::uint64_t b = 1; b < count; ++b) {
    const Mask mask = static_cast<Mask>(b);
    bool below = false;
    for (Mask rest = mask; rest; rest &= rest - 1) {
      if (contains[mask & ~(rest & -rest)]) {
        below = true;
        break;
      }
    }
    const bool here = view.cycle(mask);
    contains[mask] = below || here;
    if (here && !below) out.push_back(CycleSet{to_set(mask), view.receivers_in(mask)});
  }
  std::sort(out.begin(), out.end(), [](const CycleSet& a, const CycleSet& b) {
    if (a.packets.size() != b.packets.size()) return a.packets.size() < b.packets.size();
    return lex_less(a.packets, b.packets);
  });
  return out;
}

bool is_acyclic(const ProblemSpec& spec, const Budget& budget) {
  const MaskView view(spec, budget);
  const std::uint64_t count = std::uint64_t{1} << view.n;
  for (std::uint64_t b = 1; b < count; ++b) {
    if (view.cycle(static_cast<Mask>(b))) return false;
  }
  return true;
}

CyclePacking max_disjoint_cycles(const ProblemSpec& spec, const Budget& budget) {
  // Every cycle set contains a minimal one, so packing minimal sets loses nothing.
  const std::vector<CycleSet> cycles = find_cycles(spec, budget);
  std::vector<Mask> masks;
  for (const auto& c : cycles) masks.push_back(to_mask(c.packets));
  const std::size_t smallest = cycles.empty() ? 1 : cycles.front().packets.size();
  const Mask full = MaskView(spec, budget).full();

  std::vector<std::size_t> chosen, best_chosen;
  std::uint64_t nodes = 0;
  std::function<void(std::size_t, Mask)> dfs = [&](std::size_t from, Mask used) {
    if (++nodes > budget.search_nodes) throw Error(ErrorCode::BudgetExceeded, "cycle packing search exceeded node limit");
    if (chosen.size() > best_chosen.size()) best_chosen = chosen;
    const std::size_t room = static_cast<std::size_t>(std::popcount(full & ~used)) / smallest;
    if (chosen.size() + room <= best_chosen.size()) return;
    for (std::size_t k = from; k < masks.size(); ++k) {
      if (masks[k] & used) continue;
      chosen.push_back(k);
      dfs(k + 1, used | masks[k]);
      chosen.pop_back();
    }
  };
  dfs(0, 0);
  CyclePacking out;
  out.count = best_chosen.size();
  for (std::size_t k : best_chosen) out.cycles.push_back(cycles[k]);
  return out;
}

IndependentSet gamma(const ProblemSpec& spec, const Budget& budget) {
  const MaskView view(spec, budget);
  const std::uint64_t count = std::uint64_t{1} << view.n;
  std::vector<bool> good(count, false);
  good[0] = true;
  IndependentSet best;
  for (std::uint64_t b = 1; b < count; ++b) {
    const Mask mask = static_cast<Mask>(b);
    bool ok = true;
    for (Mask rest = mask; rest && ok; rest &= rest - 1) ok = good[mask & ~(rest & -rest)];
    if (!ok) continue;
    const IndexSet set = to_set(mask);
    if (!in_support_family(spec, set)) continue;
    good[mask] = true;
    if (set.size() > best.size || (set.size() == best.size && lex_less(set, best.packets))) {
      best = {set.size(), set};
    }
  }
  return best;
}

IndependentSet gamma_by_acyclicity(const ProblemSpec& spec, const Budget& budget) {
  const MaskView view(spec, budget);
  const std::uint64_t count = std::uint64_t{1} << view.n;
  IndependentSet best;
  for (std::uint64_t b = 1; b < count; ++b) {
    const Mask mask = static_cast<Mask>(b);
    const IndexSet set = to_set(mask);
    if (set.size() < best.size) continue;
    if (set.size() == best.size && !lex_less(set, best.packets)) continue;
    if (is_acyclic(induced(spec, mask), budget)) best = {set.size(), set};
  }
  return best;
}

std::size_t delta_s_mais(const ProblemSpec& spec, const Budget& budget) {
  if (!spec.graph.is_unipartite()) {
    throw Error(ErrorCode::NotUnipartite, "MAIS needs m = n and f(i) = i");
  }
  const MaskView view(spec, budget);
  // Cycle sets are closed under union, so inside any Q the packets that are
  // never peeled form the largest cycle set contained in Q.
  auto core_empty = [&](Mask q) {
    bool changed = true;
    while (changed && q) {
      changed = false;
      for (std::size_t j = 0; j < view.n; ++j) {
        if (!(q >> j & 1u)) continue;
        if (static_cast<std::size_t>(std::popcount(view.side[j] & q)) <= view.limit) {
          q &= ~(Mask{1} << j);
          changed = true;
        }
      }
    }
    return q == 0;
  };
  const std::uint64_t count = std::uint64_t{1} << view.n;
  std::size_t best = 0;
  for (std::uint64_t b = 1; b < count; ++b) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(static_cast<Mask>(b)));
    if (size > best && core_empty(static_cast<Mask>(b))) best = size;
  }
  return best;
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Lower:
      return "lower";
    case BoundKind::Upper:
      return "upper";
    case BoundKind::Exact:
      return "exact";
  }
  return "?";
}

const BoundEntry* BoundsReport::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

namespace {

// Which optimum an entry bounds.
std::string_view quantity_of(const BoundEntry& e) {
  return e.name.rfind("gecic_", 0) == 0 ? "gecic_n_opt" : "n_opt";
}

}  // namespace

std::vector<std::string> BoundsReport::violations() const {
  std::vector<std::string> out;
  for (const auto& a : entries) {
    if (!a.value) continue;
    for (const auto& b : entries) {
      if (!b.value || &a == &b || quantity_of(a) != quantity_of(b)) continue;
      const bool a_low = a.kind != BoundKind::Upper;
      const bool b_high = b.kind != BoundKind::Lower;
      if (a_low && b_high && *a.value > *b.value) {
        out.push_back(a.name + " = " + std::to_string(*a.value) + " exceeds " + b.name + " = " +
                      std::to_string(*b.value));
      }
    }
  }
  return out;
}

std::string BoundsReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["kind"] = std::string(to_string(e.kind));
    j["value"] = e.value ? nlohmann::ordered_json(*e.value) : nlohmann::ordered_json(nullptr);
    j["provenance"] = e.provenance;
    j["certified"] = e.certified;
    j["attained"] = e.attained ? nlohmann::ordered_json(*e.attained) : nlohmann::ordered_json(nullptr);
    if (!e.note.empty()) j["note"] = e.note;
    doc["entries"].push_back(std::move(j));
  }
  doc["violations"] = violations();
  return doc.dump(2);
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Runs `compute` and stores its value, or the reason it could not finish.
void fill(BoundEntry& e, const std::function<std::optional<std::size_t>()>& compute) {
  try {
    e.value = compute();
  } catch (const Error& err) {
    if (err.code() != ErrorCode::BudgetExceeded) throw;
    e.value.reset();
    e.note = std::string("budget exceeded: ") + err.what();
  }
}

std::size_t lq_value(const FieldPtr& field, std::size_t a, std::size_t d, const Budget& budget) {
  if (field->size() == 2) {
    if (auto v = l_2_table(a, d)) return *v;
  }
  return l_q(field, a, d, budget);
}

// Largest N_opt(0, G') over ways of dropping side_budget cached packets per
// receiver (or all of them when fewer are cached).
BoundEntry edge_deletion_entry(const ProblemSpec& spec, const Budget& budget) {
  BoundEntry e{"edge_deletion_lower", BoundKind::Lower, std::nullopt, "conventional code after edge deletion", true,
               std::nullopt, ""};
  const SideInfoGraph& g = spec.graph;
  const std::size_t drop = spec.side_budget();
  std::uint64_t patterns = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < g.receivers(); ++i) {
    const std::size_t x = g.side[i].size();
    const std::uint64_t c = binomial(x, std::min(drop, x));
    if (overflow || patterns > budget.edge_deletion_exhaustive / std::max<std::uint64_t>(c, 1)) {
      overflow = true;
    } else {
      patterns *= c;
    }
  }
  const bool exhaustive = !overflow && patterns <= budget.edge_deletion_exhaustive;
  auto value_for = [&](const std::vector<IndexSet>& removed) {
    const ProblemSpec reduced = spec.with_graph(delete_side_edges(g, removed)).with_delta_s(0).with_delta_c(0);
    return optimal_length(reduced, budget).length;
  };
  fill(e, [&]() -> std::optional<std::size_t> {
    std::size_t best = 0;
    if (exhaustive) {
      // Odometer over one combination index per receiver.
      std::vector<IndexSet> picks(g.receivers());
      std::vector<IndexSet> removed(g.receivers());
      for (std::size_t i = 0; i < g.receivers(); ++i) {
        const std::size_t k = std::min(drop, g.side[i].size());
        picks[i].resize(k);
        for (std::size_t t = 0; t < k; ++t) picks[i][t] = t;
      }
      while (true) {
        for (std::size_t i = 0; i < g.receivers(); ++i) {
          removed[i].clear();
          for (std::size_t t : picks[i]) removed[i].push_back(g.side[i][t]);
        }
        best = std::max(best, value_for(removed));
        std::size_t i = g.receivers();
        bool advanced = false;
        while (i-- > 0) {
          IndexSet& p = picks[i];
          const std::size_t n = g.side[i].size(), k = p.size();
          std::size_t pos = k;
          while (pos > 0 && p[pos - 1] == n - k + pos - 1) --pos;
          if (pos > 0) {
            ++p[pos - 1];
            for (std::size_t t = pos; t < k; ++t) p[t] = p[t - 1] + 1;
            advanced = true;
            break;
          }
          for (std::size_t t = 0; t < k; ++t) p[t] = t;
        }
        if (!advanced) break;
      }
    } else {
      std::mt19937_64 rng(budget.seed);
      for (std::size_t s = 0; s < budget.edge_deletion_samples; ++s) {
        std::vector<IndexSet> removed(g.receivers());
        for (std::size_t i = 0; i < g.receivers(); ++i) {
          IndexSet pool = g.side[i];
          const std::size_t k = std::min(drop, pool.size());
          for (std::size_t t = 0; t < k; ++t) {
            const std::size_t pick = t + detail::uniform_below(rng, pool.size() - t);
            std::swap(pool[t], pool[pick]);
          }
          removed[i].assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
          std::sort(removed[i].begin(), removed[i].end());
        }
        best = std::max(best, value_for(removed));
      }
    }
    return best;
  });
  if (!exhaustive) {
    e.certified = false;
    e.provenance += "; sampled";
    e.note = std::to_string(budget.edge_deletion_samples) + " seeded samples of " +
             (overflow ? std::string("too many") : std::to_string(patterns)) + " deletion patterns";
  } else {
    e.provenance += "; certified";
  }
  return e;
}

}  // namespace

BoundsReport bounds_report(const ProblemSpec& spec, const Budget& budget) {
  require_valid(spec.graph);
  BoundsReport report;
  const std::size_t n = spec.n();
  const ProblemSpec plain = spec.with_delta_c(0);

  BoundEntry n_entry{"n", BoundKind::Upper, n, "uncoded transmission; certified", true, std::nullopt, ""};

  BoundEntry opt{"n_opt", BoundKind::Exact, std::nullopt, "exhaustive optimal length; certified", true,
                 std::nullopt, ""};
  fill(opt, [&]() -> std::optional<std::size_t> { return optimal_length(plain, budget).length; });

  std::optional<std::size_t> gamma_value;
  BoundEntry gamma_entry{"gamma", BoundKind::Lower, std::nullopt, "generalized independence number; certified",
                         true, std::nullopt, ""};
  fill(gamma_entry, [&]() -> std::optional<std::size_t> { return gamma(spec, budget).size; });
  gamma_value = gamma_entry.value;

  // Packets demanded by a receiver caching at most side_budget() packets.
  IndexSet s;
  for (std::size_t i = 0; i < spec.m(); ++i) {
    if (spec.graph.side[i].size() <= spec.side_budget()) s.push_back(spec.graph.demand[i]);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  BoundEntry s_entry{"S_plus_1", BoundKind::Lower, n > s.size() ? s.size() + 1 : s.size(),
                     "weakly informed receivers; certified", true, std::nullopt,
                     "|S| = " + std::to_string(s.size()) + (n > s.size() ? "" : " = n, bound is |S|")};

  BoundEntry deletion = edge_deletion_entry(spec, budget);

  std::optional<CyclePacking> packing;
  BoundEntry beta_entry{"n_minus_beta", BoundKind::Upper, std::nullopt, "disjoint cycle packing; certified", true,
                        std::nullopt, ""};
  fill(beta_entry, [&]() -> std::optional<std::size_t> {
    packing = max_disjoint_cycles(spec, budget);
    return n - packing->count;
  });
  if (packing) beta_entry.note = "beta = " + std::to_string(packing->count);

  BoundEntry packing_exact{"packing_exact", BoundKind::Exact, std::nullopt,
                           "cycle packing with acyclic remainder; certified", true, std::nullopt, ""};
  BoundEntry acyclic_exact{"acyclic_exact", BoundKind::Exact, std::nullopt, "acyclic instance; certified", true,
                           std::nullopt, ""};
  fill(acyclic_exact, [&]() -> std::optional<std::size_t> {
    if (is_acyclic(spec, budget)) return n;
    acyclic_exact.note = "cycle sets present";
    return std::nullopt;
  });
  if (packing) {
    fill(packing_exact, [&]() -> std::optional<std::size_t> {
      if (packing->count == 0) {
        packing_exact.note = "no cycle sets";
        return std::nullopt;
      }
      // Try every way of removing one packet from each packed cycle set.
      std::vector<std::size_t> choice(packing->count, 0);
      while (true) {
        IndexSet removed;
        for (std::size_t c = 0; c < choice.size(); ++c) removed.push_back(packing->cycles[c].packets[choice[c]]);
        std::sort(removed.begin(), removed.end());
        if (is_acyclic(spec.with_graph(delete_packets(spec.graph, removed).graph), budget)) {
          std::string list;
          for (std::size_t j : removed) list += (list.empty() ? "" : ",") + std::to_string(j + 1);
          packing_exact.note = "removing packets {" + list + "} leaves no cycle set";
          return n - packing->count;
        }
        std::size_t c = choice.size();
        while (c > 0 && ++choice[c - 1] == packing->cycles[c - 1].packets.size()) choice[--c] = 0;
        if (c == 0) break;
      }
      packing_exact.note = "every single-packet removal per packed cycle leaves a cycle set";
      return std::nullopt;
    });
  }

  report.entries = {gamma_entry, s_entry, deletion, opt, acyclic_exact, packing_exact, beta_entry, n_entry};

  if (spec.delta_c > 0) {
    const std::size_t d = 2 * spec.delta_c + 1;
    BoundEntry lower{"gecic_lower", BoundKind::Lower, std::nullopt, "channel redundancy over optimum; certified",
                     true, std::nullopt, ""};
    BoundEntry upper{"gecic_upper", BoundKind::Upper, std::nullopt,
                     "outer linear code on optimal index code; certified", true, std::nullopt, ""};
    if (opt.value) {
      lower.value = *opt.value + 2 * spec.delta_c;
      fill(upper, [&]() -> std::optional<std::size_t> { return lq_value(spec.field, *opt.value, d, budget); });
    } else {
      lower.note = upper.note = "optimum unavailable";
    }
    BoundEntry gamma_lower{"gecic_gamma_lower", BoundKind::Lower, std::nullopt,
                           "shortest code on independent set; certified", true, std::nullopt, ""};
    if (gamma_value && *gamma_value > 0) {
      fill(gamma_lower, [&]() -> std::optional<std::size_t> { return lq_value(spec.field, *gamma_value, d, budget); });
    }
    BoundEntry exact{"gecic_n_opt", BoundKind::Exact, std::nullopt, "exhaustive optimal length; certified", true,
                     std::nullopt, ""};
    fill(exact, [&]() -> std::optional<std::size_t> { return optimal_length(spec, budget).length; });
    for (auto* e : {&lower, &gamma_lower, &exact, &upper}) report.entries.push_back(*e);
  }

  for (auto& e : report.entries) {
    const BoundEntry* target = report.find(quantity_of(e));
    if (e.value && target && target->value && &e != target) e.attained = *e.value == *target->value;
  }
  return report;
}

}  // namespace icsie
