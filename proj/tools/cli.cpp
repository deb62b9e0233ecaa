#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "icsie/codeset.hpp"
#include "icsie/decoder.hpp"
#include "icsie/encoder.hpp"
#include "icsie/simulation.hpp"
#include "icsie/structure.hpp"

namespace icsie::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::uint64_t node_limit = Budget{}.search_nodes;
  std::string instance;
  std::string generator;
  std::string method = "both";
  std::string out_file;
  std::string x;
  std::string y;
  std::string truth;
  std::string scenario;
  std::vector<std::string> xhat;
  std::vector<std::string> force;
  bool exhaustive = false;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::optional<std::size_t> side_errors;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'", 0, 0, "");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string one_based(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
  return out + "}";
}

Json one_based_json(const IndexSet& s) {
  Json a = Json::array();
  for (std::size_t j : s) a.push_back(j + 1);
  return a;
}

Json vector_json(const Vector& v) { return Json(std::vector<Elem>(v.entries().begin(), v.entries().end())); }

Json generator_json(const Matrix& g) { return Json::parse(serialize_generator(g)); }

// Comma-separated canonical integers.
Vector parse_vector(const FieldPtr& field, const std::string& text, const std::string& what) {
  std::vector<Elem> out;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size() || value >= field->size()) {
        throw ParseError(what + ": '" + item + "' is not an element of F_" + std::to_string(field->size()), 0, 0,
                         what);
      }
      out.push_back(static_cast<Elem>(value));
    }
  }
  return Vector(field, std::move(out));
}

Vector parse_sized(const FieldPtr& field, const std::string& text, const std::string& what, std::size_t length) {
  Vector v = parse_vector(field, text, what);
  if (v.size() != length) {
    throw ParseError(what + ": expected " + std::to_string(length) + " entries, got " + std::to_string(v.size()), 0,
                     0, what);
  }
  return v;
}

// "i=v1,v2,..." with a 1-based receiver.
std::pair<std::size_t, std::string> parse_assignment(const std::string& text, std::size_t receivers,
                                                     const std::string& what) {
  const auto eq = text.find('=');
  std::size_t used = 0;
  unsigned long r = 0;
  if (eq != std::string::npos) {
    try {
      r = std::stoul(text.substr(0, eq), &used);
    } catch (const std::exception&) {
      used = 0;
    }
  }
  if (eq == std::string::npos || used != eq || r < 1 || r > receivers) {
    throw ParseError(what + ": expected RECEIVER=VECTOR with RECEIVER in 1.." + std::to_string(receivers) +
                         ", got '" + text + "'",
                     0, 0, what);
  }
  return {r - 1, text.substr(eq + 1)};
}

ProblemSpec load_instance(const Options& o) {
  ProblemSpec spec = parse_instance(read_file(o.instance));
  return spec;
}

Matrix load_generator(const Options& o, const ProblemSpec& spec) {
  Matrix g = parse_generator(read_file(o.generator));
  if (g.field()->size() != spec.q()) {
    throw ParseError("generator is over F_" + std::to_string(g.field()->size()) + ", instance over F_" +
                         std::to_string(spec.q()),
                     0, 0, "q");
  }
  if (g.rows() != spec.n()) {
    throw ParseError("generator has " + std::to_string(g.rows()) + " rows, instance has n = " +
                         std::to_string(spec.n()),
                     0, 0, "n");
  }
  // Rebuild on the instance's field object so field identity checks pass.
  return Matrix(spec.field, g.rows(), g.cols(), std::vector<Elem>(g.data().begin(), g.data().end()));
}

Budget budget_of(const Options& o) {
  Budget b;
  b.search_nodes = o.node_limit;
  return b;
}

std::string header(const ProblemSpec& s) {
  return "n=" + std::to_string(s.n()) + " m=" + std::to_string(s.m()) + " q=" + std::to_string(s.q()) +
         " delta_s=" + std::to_string(s.delta_s) + " delta_c=" + std::to_string(s.delta_c) +
         (s.side_error_model == SideErrorModel::Erasure ? " model=erasure" : "");
}

int cmd_validate(const Options& o, std::ostream& out) {
  const ProblemSpec spec = load_instance(o);
  const auto violations = validate(spec.graph);
  if (o.json) {
    Json doc;
    doc["valid"] = violations.empty();
    doc["violations"] = Json::array();
    for (const auto& v : violations) {
      doc["violations"].push_back(
          {{"kind", std::string(to_string(v.kind))}, {"index", v.index + 1}, {"message", v.message}});
    }
    out << doc.dump(2) << "\n";
  } else if (violations.empty()) {
    out << "valid: " << header(spec) << "\n";
  } else {
    out << "invalid: " << violations.size() << " violation(s)\n";
    for (const auto& v : violations) out << "  " << to_string(v.kind) << ": " << v.message << "\n";
  }
  return violations.empty() ? kOk : kFailure;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const ProblemSpec spec = load_instance(o);
  require_valid(spec.graph);
  const Budget budget = budget_of(o);
  bool use_minrank = o.method != "brute";
  const bool use_brute = o.method != "minrank";
  if (o.method == "both" && spec.delta_c > 0) {
    err << "note: minrank skipped, it describes delta_c = 0 only\n";
    use_minrank = false;
  }
  if (use_minrank && spec.delta_c > 0) {
    throw Error(ErrorCode::InvalidArgument, "minrank describes delta_c = 0; use --method brute");
  }
  std::optional<MinrankResult> mr;
  std::optional<OptimalLength> ol;
  if (use_minrank) mr = minrank(spec, budget);
  if (use_brute) ol = optimal_length(spec, budget);
  const Matrix& g = ol ? ol->generator.matrix : mr->generator;
  const std::size_t length = ol ? ol->length : mr->rank;
  const bool agree = !(mr && ol) || mr->rank == ol->length;
  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file);
    file << serialize_generator(g);
  }
  if (o.json) {
    Json doc;
    doc["method"] = o.method;
    doc["N"] = length;
    if (mr) doc["minrank"] = mr->rank;
    if (ol) doc["brute"] = ol->length;
    doc["agree"] = agree;
    doc["generator"] = generator_json(g);
    out << doc.dump(2) << "\n";
  } else {
    out << "method: " << o.method << "\n";
    if (mr) out << "minrank: " << mr->rank << "\n";
    if (ol) out << "brute: " << ol->length << "\n";
    out << "N = " << length << "\n" << "generator (" << g.rows() << "x" << g.cols() << "):\n" << g.to_string();
  }
  if (!agree) {
    err << "error: minrank " << mr->rank << " differs from exhaustive length " << ol->length << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_encode(const Options& o, std::ostream& out) {
  const ProblemSpec spec = load_instance(o);
  const Matrix g = load_generator(o, spec);
  const Vector x = parse_sized(spec.field, o.x, "--x", spec.n());
  const Vector y = multiply(x, g);
  if (o.json) {
    out << Json{{"y", vector_json(y)}}.dump(2) << "\n";
  } else {
    out << "y = " << y.to_string() << "\n";
  }
  return kOk;
}

int cmd_decode(const Options& o, std::ostream& out, std::ostream& err) {
  const ProblemSpec spec = load_instance(o);
  require_valid(spec.graph);
  const Matrix g = load_generator(o, spec);

  std::string y_text = o.y;
  std::string truth_text = o.truth;
  std::map<std::size_t, std::string> caches;
  std::map<std::size_t, std::string> forced;
  for (const auto& a : o.xhat) {
    auto [r, text] = parse_assignment(a, spec.m(), "--xhat");
    caches[r] = std::move(text);
  }
  for (const auto& a : o.force) forced.insert(parse_assignment(a, spec.m(), "--force"));
  if (!o.scenario.empty()) {
    // The scenario file wins over flags.
    Json doc;
    try {
      doc = Json::parse(read_file(o.scenario));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("scenario: ") + e.what(), 0, 0, "scenario");
    }
    auto as_text = [](const Json& arr) {
      std::string s;
      for (std::size_t k = 0; k < arr.size(); ++k) {
        s += (k ? "," : "") + std::to_string(arr[k].get<long long>());
      }
      return s;
    };
    try {
      if (doc.contains("y")) {
        if (!o.y.empty()) err << "warning: --y ignored, scenario file gives y\n";
        y_text = as_text(doc.at("y"));
      }
      if (doc.contains("truth")) {
        if (!o.truth.empty()) err << "warning: --truth ignored, scenario file gives truth\n";
        truth_text = as_text(doc.at("truth"));
      }
      if (doc.contains("x_hat")) {
        for (const auto& [key, value] : doc.at("x_hat").items()) {
          const auto [r, text] = parse_assignment(key + "=" + as_text(value), spec.m(), "scenario x_hat");
          if (caches.count(r)) err << "warning: --xhat " << r + 1 << " ignored, scenario file gives it\n";
          caches[r] = text;
        }
      }
    } catch (const Json::exception& e) {
      throw ParseError(std::string("scenario: ") + e.what(), 0, 0, "scenario");
    }
  }

  std::optional<Vector> truth;
  if (!truth_text.empty()) truth = parse_sized(spec.field, truth_text, "--truth", spec.n());
  Vector y = y_text.empty() && truth ? multiply(*truth, g) : parse_sized(spec.field, y_text, "--y", g.cols());
  if (caches.empty() && truth) {
    for (std::size_t i = 0; i < spec.m(); ++i) caches[i] = "";
  }
  if (caches.empty()) throw ParseError("decode needs --xhat RECEIVER=VECTOR or --truth", 0, 0, "xhat");

  int status = kOk;
  Json results = Json::array();
  for (const auto& [i, text] : caches) {
    const std::size_t width = spec.graph.side[i].size();
    const Vector x_hat = text.empty() && truth ? subvector(*truth, spec.graph.side[i])
                                               : parse_sized(spec.field, text, "--xhat", width);
    std::optional<Vector> force;
    if (auto it = forced.find(i); it != forced.end()) force = parse_sized(spec.field, it->second, "--force", g.cols());
    const std::size_t packet = spec.graph.demand[i] + 1;
    Json entry{{"receiver", i + 1}, {"packet", packet}};
    try {
      const DecodeTrace t = decode_receiver(spec, g, i, y, x_hat, force);
      entry["value"] = t.value;
      entry["syndrome"] = vector_json(t.syndrome);
      entry["correction"] = vector_json(t.correction.p);
      entry["support"] = one_based_json(t.correction.support);
      entry["forced"] = force.has_value();
      if (truth) {
        const bool ok = (*truth)[packet - 1] == t.value;
        entry["correct"] = ok;
        if (!ok) status = kFailure;
      }
      if (!o.json) {
        out << "receiver " << i + 1 << ": x_" << packet << " = " << t.value;
        if (truth) out << ((*truth)[packet - 1] == t.value ? " (correct)" : " (WRONG, sent " + std::to_string((*truth)[packet - 1]) + ")");
        out << "\n  syndrome   " << t.syndrome.to_string() << "\n  correction " << t.correction.p.to_string()
            << (force ? " (forced)" : " support " + one_based(t.correction.support)) << "\n  y~         "
            << t.y_tilde.to_string() << "\n";
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BudgetExceeded) throw;
      status = kFailure;
      entry["error"] = std::string(to_string(e.code()));
      entry["message"] = e.what();
      if (!o.json) out << "receiver " << i + 1 << ": " << to_string(e.code()) << ": " << e.what() << "\n";
    }
    results.push_back(std::move(entry));
  }
  if (o.json) out << Json{{"y", vector_json(y)}, {"receivers", results}}.dump(2) << "\n";
  return status;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const ProblemSpec spec = load_instance(o);
  require_valid(spec.graph);
  const Budget budget = budget_of(o);
  const auto cycles = find_cycles(spec, budget);
  const bool acyclic = cycles.empty();
  const IndependentSet gam = gamma(spec, budget);
  const CyclePacking packing = max_disjoint_cycles(spec, budget);
  std::optional<std::size_t> mais;
  if (spec.graph.is_unipartite()) mais = delta_s_mais(spec, budget);
  const BoundsReport report = bounds_report(spec, budget);
  const auto violations = report.violations();

  if (o.json) {
    Json doc;
    doc["instance"] = Json::parse(serialize_instance(spec));
    doc["cycle_sets"] = Json::array();
    for (const auto& c : cycles) doc["cycle_sets"].push_back(one_based_json(c.packets));
    doc["acyclic"] = acyclic;
    doc["gamma"] = {{"value", gam.size}, {"packets", one_based_json(gam.packets)}};
    Json packed = Json::array();
    for (const auto& c : packing.cycles) packed.push_back(one_based_json(c.packets));
    doc["beta"] = {{"value", packing.count}, {"cycle_sets", packed}};
    doc["mais"] = mais ? Json(*mais) : Json(nullptr);
    doc["bounds"] = Json::parse(report.to_json());
    out << doc.dump(2) << "\n";
  } else {
    out << "instance: " << header(spec) << "\n";
    out << "minimal cycle sets:";
    if (cycles.empty()) out << " none";
    for (const auto& c : cycles) out << " " << one_based(c.packets);
    out << "\n";
    if (acyclic) {
      out << "acyclic: N_opt = n = " << spec.n() << "\n";
    } else {
      out << "acyclic: no\n";
    }
    out << "gamma = " << gam.size << " (packets " << one_based(gam.packets) << ")\n";
    out << "beta = " << packing.count << " (";
    for (std::size_t k = 0; k < packing.cycles.size(); ++k) out << (k ? " " : "") << one_based(packing.cycles[k].packets);
    out << ")\n";
    if (mais) out << "mais = " << *mais << "\n";
    out << "bounds:\n";
    for (const auto& e : report.entries) {
      std::string name = e.name;
      name.resize(std::max<std::size_t>(name.size(), 20), ' ');
      std::string kind(to_string(e.kind));
      kind.resize(6, ' ');
      out << "  " << name << kind << " " << (e.value ? std::to_string(*e.value) : "-") << "  [" << e.provenance
          << "]" << (e.note.empty() ? "" : "  " + e.note) << "\n";
    }
    if (spec.delta_c > 0) {
      const BoundEntry* lo = report.find("gecic_lower");
      const BoundEntry* hi = report.find("gecic_upper");
      auto show = [](const BoundEntry* e) { return e && e->value ? std::to_string(*e->value) : std::string("?"); };
      out << "sandwich: [N+" << 2 * spec.delta_c << ", l_" << spec.q() << "(N," << 2 * spec.delta_c + 1
          << ")] = [" << show(lo) << ", " << show(hi) << "]\n";
    }
    for (const auto& v : violations) out << "VIOLATION: " << v << "\n";
  }
  return violations.empty() ? kOk : kFailure;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const ProblemSpec spec = load_instance(o);
  require_valid(spec.graph);
  const Matrix g = load_generator(o, spec);
  SimulationConfig config;
  config.mode = o.exhaustive ? SimulationMode::Exhaustive : SimulationMode::Random;
  config.trials = o.trials;
  config.seed = o.seed;
  config.side_errors = o.side_errors;
  const SimulationReport report = simulate(spec, g, config, budget_of(o));
  const std::string mode = o.exhaustive ? "exhaustive" : "random";
  if (o.json) {
    Json doc = Json::parse(report.to_json());
    doc["mode"] = mode;
    if (!o.exhaustive) doc["seed"] = o.seed;
    out << doc.dump(2) << "\n";
  } else {
    out << "method: " << report.method << ", mode: " << mode;
    if (!o.exhaustive) out << ", seed: " << o.seed;
    out << "\n";
    if (report.method == "decoder") {
      for (std::size_t i = 0; i < report.receivers.size(); ++i) {
        const auto& r = report.receivers[i];
        std::ostringstream rate;
        rate.setf(std::ios::fixed);
        rate.precision(6);
        rate << r.rate();
        out << "receiver " << i + 1 << ": " << r.recovered << "/" << r.trials << " recovered (rate " << rate.str()
            << ")\n";
      }
    } else {
      out << "sphere oracle: " << (report.passed ? "all required spheres disjoint" : "overlapping spheres") << "\n";
    }
    for (const auto& f : report.failures) {
      out << "failure: receiver " << f.receiver + 1 << " message " << f.message.to_string() << " cache "
          << f.x_hat.to_string() << ": " << f.detail << "\n";
    }
    out << "result: " << (report.passed ? "PASS" : "FAIL") << "\n";
  }
  return report.passed ? kOk : kFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Index codes with erroneous side information"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--node-limit", o.node_limit, "Node cap for every search");

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance file");
  validate_cmd->add_option("instance", o.instance)->required();

  auto* search_cmd = app.add_subcommand("search", "Find the optimal code length and a generator");
  search_cmd->add_option("instance", o.instance)->required();
  search_cmd->add_option("--method", o.method)->check(CLI::IsMember({"minrank", "brute", "both"}));
  search_cmd->add_option("--out", o.out_file, "Write the generator JSON here");

  auto* encode_cmd = app.add_subcommand("encode", "Compute y = xG");
  encode_cmd->add_option("instance", o.instance)->required();
  encode_cmd->add_option("generator", o.generator)->required();
  encode_cmd->add_option("--x", o.x, "Message, comma separated")->required();

  auto* decode_cmd = app.add_subcommand("decode", "Run the syndrome decoder at receivers");
  decode_cmd->add_option("instance", o.instance)->required();
  decode_cmd->add_option("generator", o.generator)->required();
  decode_cmd->add_option("--y", o.y, "Received word");
  decode_cmd->add_option("--xhat", o.xhat, "RECEIVER=cache values over X_i");
  decode_cmd->add_option("--truth", o.truth, "True message, for checking (and default caches)");
  decode_cmd->add_option("--force", o.force, "RECEIVER=correction to use instead of searching");
  decode_cmd->add_option("--scenario", o.scenario, "JSON with y, truth, x_hat; overrides flags");

  auto* analyze_cmd = app.add_subcommand("analyze", "Cycle structure and bounds");
  analyze_cmd->add_option("instance", o.instance)->required();

  auto* simulate_cmd = app.add_subcommand("simulate", "Broadcast and decode with injected cache errors");
  simulate_cmd->add_option("instance", o.instance)->required();
  simulate_cmd->add_option("generator", o.generator)->required();
  simulate_cmd->add_option("--trials", o.trials);
  simulate_cmd->add_flag("--exhaustive", o.exhaustive, "Every message and every admissible error pattern");
  simulate_cmd->add_option("--seed", o.seed);
  simulate_cmd->add_option("--side-errors", o.side_errors, "Largest injected cache error weight");

  std::vector<std::string> argv_store = {"icsie"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (search_cmd->parsed()) return cmd_search(o, out, err);
    if (encode_cmd->parsed()) return cmd_encode(o, out);
    if (decode_cmd->parsed()) return cmd_decode(o, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (simulate_cmd->parsed()) return cmd_simulate(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kBudget : kFailure;
  }
  return kFailure;
}

}  // namespace icsie::cli
