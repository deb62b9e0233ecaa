#include "icsie/graph.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace icsie {

bool SideInfoGraph::is_unipartite() const noexcept {
  if (demand.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (demand[i] != i) return false;
  }
  return true;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DemandOutOfRange: return "demand-out-of-range";
    case ViolationKind::SideInfoOutOfRange: return "side-info-out-of-range";
    case ViolationKind::SideInfoNotAscending: return "side-info-not-ascending";
    case ViolationKind::DemandInSideInfo: return "demand-in-side-info";
    case ViolationKind::UndemandedPacket: return "undemanded-packet";
    case ViolationKind::NoReceivers: return "no-receivers";
  }
  return "unknown";
}

std::string_view to_string(SideErrorModel model) {
  return model == SideErrorModel::Erasure ? "erasure" : "error";
}

std::vector<Violation> validate(const SideInfoGraph& g) {
  std::vector<Violation> out;
  const std::size_t m = g.receivers();
  if (m == 0) {
    out.push_back({ViolationKind::NoReceivers, 0, "instance has no receivers"});
  }
  if (g.side.size() != m) {
    out.push_back({ViolationKind::NoReceivers, 0, "side-information list length differs from receiver count"});
    return out;
  }
  std::vector<bool> demanded(g.n, false);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t f = g.demand[i];
    if (f >= g.n) {
      out.push_back({ViolationKind::DemandOutOfRange, i,
                     "receiver " + std::to_string(i + 1) + " demands packet " + std::to_string(f + 1) +
                         " outside 1.." + std::to_string(g.n)});
    } else {
      demanded[f] = true;
    }
    const IndexSet& x = g.side[i];
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] >= g.n) {
        out.push_back({ViolationKind::SideInfoOutOfRange, i,
                       "receiver " + std::to_string(i + 1) + " caches packet " + std::to_string(x[k] + 1) +
                           " outside 1.." + std::to_string(g.n)});
      }
      if (k > 0 && x[k] <= x[k - 1]) {
        out.push_back({ViolationKind::SideInfoNotAscending, i,
                       "side information of receiver " + std::to_string(i + 1) +
                           " is not strictly ascending"});
      }
    }
    if (std::find(x.begin(), x.end(), f) != x.end()) {
      out.push_back({ViolationKind::DemandInSideInfo, i,
                     "receiver " + std::to_string(i + 1) + " already caches its demanded packet " +
                         std::to_string(f + 1)});
    }
  }
  for (std::size_t j = 0; j < g.n; ++j) {
    if (!demanded[j]) {
      out.push_back({ViolationKind::UndemandedPacket, j,
                     "packet " + std::to_string(j + 1) + " is demanded by no receiver"});
    }
  }
  return out;
}

void require_valid(const SideInfoGraph& g) {
  const auto violations = validate(g);
  if (!violations.empty()) {
    throw Error(ErrorCode::InvalidGraph, violations.front().message);
  }
}

IndexSet y_set(const SideInfoGraph& g, std::size_t receiver) {
  if (receiver >= g.receivers()) {
    throw Error(ErrorCode::IndexOutOfRange, "receiver index out of range");
  }
  const IndexSet& x = g.side[receiver];
  IndexSet out;
  for (std::size_t j = 0; j < g.n; ++j) {
    if (j == g.demand[receiver]) continue;
    if (std::binary_search(x.begin(), x.end(), j)) continue;
    out.push_back(j);
  }
  return out;
}

SideInfoGraph clique_graph(std::size_t n) {
  SideInfoGraph g;
  g.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    g.demand.push_back(i);
    IndexSet x;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) x.push_back(j);
    }
    g.side.push_back(std::move(x));
  }
  return g;
}

SideInfoGraph unipartite_graph(std::vector<IndexSet> side) {
  SideInfoGraph g;
  g.n = side.size();
  for (std::size_t i = 0; i < g.n; ++i) g.demand.push_back(i);
  g.side = std::move(side);
  return g;
}

PacketDeletion delete_packets(const SideInfoGraph& g, std::span<const std::size_t> removed) {
  std::vector<bool> gone(g.n, false);
  for (std::size_t j : removed) {
    if (j >= g.n) throw Error(ErrorCode::IndexOutOfRange, "deleted packet out of range");
    gone[j] = true;
  }
  PacketDeletion out;
  out.packet_map.assign(g.n, std::nullopt);
  std::size_t next = 0;
  for (std::size_t j = 0; j < g.n; ++j) {
    if (!gone[j]) out.packet_map[j] = next++;
  }
  out.graph.n = next;
  out.receiver_map.assign(g.receivers(), std::nullopt);
  for (std::size_t i = 0; i < g.receivers(); ++i) {
    if (gone[g.demand[i]]) continue;
    out.receiver_map[i] = out.graph.demand.size();
    out.graph.demand.push_back(*out.packet_map[g.demand[i]]);
    IndexSet x;
    for (std::size_t j : g.side[i]) {
      if (!gone[j]) x.push_back(*out.packet_map[j]);
    }
    out.graph.side.push_back(std::move(x));
  }
  return out;
}

SideInfoGraph delete_side_edges(const SideInfoGraph& g, const std::vector<IndexSet>& removed) {
  if (removed.size() != g.receivers()) {
    throw Error(ErrorCode::DimensionMismatch, "one deletion set per receiver required");
  }
  SideInfoGraph out = g;
  for (std::size_t i = 0; i < g.receivers(); ++i) {
    for (std::size_t j : removed[i]) {
      auto& x = out.side[i];
      auto it = std::find(x.begin(), x.end(), j);
      if (it == x.end()) {
        throw Error(ErrorCode::IndexOutOfRange, "receiver " + std::to_string(i + 1) +
                                                    " does not cache packet " + std::to_string(j + 1));
      }
      x.erase(it);
    }
  }
  return out;
}

ProblemSpec ProblemSpec::with_graph(SideInfoGraph g) const {
  ProblemSpec s = *this;
  s.graph = std::move(g);
  return s;
}

ProblemSpec ProblemSpec::with_delta_s(std::size_t ds) const {
  ProblemSpec s = *this;
  s.delta_s = ds;
  return s;
}

ProblemSpec ProblemSpec::with_delta_c(std::size_t dc) const {
  ProblemSpec s = *this;
  s.delta_c = dc;
  return s;
}

ProblemSpec make_spec(SideInfoGraph g, std::uint64_t q, std::size_t delta_s, std::size_t delta_c,
                      SideErrorModel model) {
  require_valid(g);
  return ProblemSpec{std::move(g), Field::make(q), delta_s, delta_c, model};
}

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void field_error(const std::string& field, const std::string& what,
                              ErrorCode cause = ErrorCode::ParseError) {
  throw ParseError("field \"" + field + "\": " + what, 0, 0, field, cause);
}

std::uint64_t get_uint(const json& doc, const std::string& key) {
  if (!doc.contains(key)) field_error(key, "missing");
  const json& v = doc.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    field_error(key, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::size_t to_zero_based(const json& v, const std::string& where) {
  if (!v.is_number_integer()) field_error(where, "expected an integer packet index");
  const std::int64_t raw = v.get<std::int64_t>();
  if (raw < 1) field_error(where, "packet indices are 1-based");
  return static_cast<std::size_t>(raw - 1);
}

}  // namespace

ProblemSpec parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what(),
                     line, col, "");
  }
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object", 1, 1, "");

  ProblemSpec spec;
  const std::uint64_t n = get_uint(doc, "n");
  const std::uint64_t m = get_uint(doc, "m");
  const std::uint64_t q = get_uint(doc, "q");
  spec.delta_s = get_uint(doc, "delta_s");
  spec.delta_c = get_uint(doc, "delta_c");
  try {
    spec.field = Field::make(q);
  } catch (const Error& e) {
    field_error("q", e.what(), e.code());
  }

  if (!doc.contains("f") || !doc.at("f").is_array()) field_error("f", "expected an array");
  if (!doc.contains("X") || !doc.at("X").is_array()) field_error("X", "expected an array");
  const json& f = doc.at("f");
  const json& x = doc.at("X");
  if (f.size() != m) field_error("f", "length " + std::to_string(f.size()) + " differs from m = " + std::to_string(m));
  if (x.size() != m) field_error("X", "length " + std::to_string(x.size()) + " differs from m = " + std::to_string(m));

  spec.graph.n = n;
  for (std::size_t i = 0; i < m; ++i) {
    spec.graph.demand.push_back(to_zero_based(f[i], "f"));
    if (!x[i].is_array()) field_error("X", "entry " + std::to_string(i + 1) + " is not an array");
    IndexSet side;
    for (const json& v : x[i]) side.push_back(to_zero_based(v, "X"));
    spec.graph.side.push_back(std::move(side));
  }

  if (doc.contains("side_error_model")) {
    const json& model = doc.at("side_error_model");
    if (model == "error") {
      spec.side_error_model = SideErrorModel::Error;
    } else if (model == "erasure") {
      spec.side_error_model = SideErrorModel::Erasure;
    } else {
      field_error("side_error_model", "expected \"error\" or \"erasure\"");
    }
  }
  return spec;
}

std::string serialize_instance(const ProblemSpec& spec) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"n\": " << spec.graph.n << ",\n";
  os << "  \"m\": " << spec.graph.receivers() << ",\n";
  os << "  \"q\": " << spec.q() << ",\n";
  os << "  \"delta_s\": " << spec.delta_s << ",\n";
  os << "  \"delta_c\": " << spec.delta_c << ",\n";
  os << "  \"side_error_model\": \"" << to_string(spec.side_error_model) << "\",\n";
  os << "  \"f\": [";
  for (std::size_t i = 0; i < spec.graph.demand.size(); ++i) {
    os << (i ? ", " : "") << spec.graph.demand[i] + 1;
  }
  os << "],\n  \"X\": [";
  for (std::size_t i = 0; i < spec.graph.side.size(); ++i) {
    os << (i ? ", " : "") << "[";
    const IndexSet& x = spec.graph.side[i];
    for (std::size_t k = 0; k < x.size(); ++k) os << (k ? ", " : "") << x[k] + 1;
    os << "]";
  }
  os << "]\n}\n";
  return os.str();
}

}  // namespace icsie
