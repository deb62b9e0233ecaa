#include "icsie/simulation.hpp"

#include <nlohmann/json.hpp>

#include "icsie/codeset.hpp"
#include "icsie/decoder.hpp"
#include "packed.hpp"
#include "rng.hpp"

namespace icsie {
namespace {

struct Runner {
  const ProblemSpec& spec;
  const Matrix& g;
  const SimulationConfig& config;
  SimulationReport& report;
  std::vector<std::optional<ReceiverContext>> contexts;
  std::vector<std::string> context_errors;

  void trial(std::size_t i, const Vector& x, const Vector& y, const Vector& x_hat) {
    ReceiverStats& stats = report.receivers[i];
    ++stats.trials;
    std::string detail;
    if (!contexts[i]) {
      detail = context_errors[i];
    } else {
      try {
        const DecodeTrace t = decode_with_context(*contexts[i], spec.delta_s, y, x_hat);
        const Elem want = x[spec.graph.demand[i]];
        if (t.value == want) {
          ++stats.recovered;
          return;
        }
        detail = "decoded " + std::to_string(t.value) + ", sent " + std::to_string(want);
      } catch (const Error& e) {
        detail = e.what();
      }
    }
    report.passed = false;
    ++report.failure_count;
    if (report.failures.size() < config.max_failures) report.failures.push_back({i, x, x_hat, detail});
  }
};

}  // namespace

SimulationReport simulate(const ProblemSpec& spec, const Matrix& g, const SimulationConfig& config,
                          const Budget& budget) {
  require_valid(spec.graph);
  require_same_field(spec.field, g.field());
  if (g.rows() != spec.n()) throw Error(ErrorCode::DimensionMismatch, "generator row count differs from n");
  SimulationReport report;
  report.receivers.assign(spec.m(), {});
  if (spec.delta_c > 0) {
    report.method = "sphere-oracle";
    report.passed = oracle_decodable(spec, g, budget);
    if (!report.passed) report.failure_count = 1;
    return report;
  }
  if (spec.side_error_model == SideErrorModel::Erasure) {
    throw Error(ErrorCode::Unsupported, "simulation decodes the error model only");
  }
  report.method = "decoder";
  const Field& f = *spec.field;
  const std::size_t weight_limit = config.side_errors.value_or(spec.delta_s);

  Runner run{spec, g, config, report, {}, {}};
  run.contexts.resize(spec.m());
  run.context_errors.resize(spec.m());
  for (std::size_t i = 0; i < spec.m(); ++i) {
    try {
      run.contexts[i] = build_context(spec, g, i);
    } catch (const Error& e) {
      run.context_errors[i] = e.what();
    }
  }

  auto cache_of = [&](const Vector& x, std::size_t i) { return subvector(x, spec.graph.side[i]); };

  if (config.mode == SimulationMode::Exhaustive) {
    require_within_bits(spec.q(), spec.n(), budget.enumeration_bits, "simulation messages");
    const detail::PackedSpace messages(spec.field, spec.n());
    for (std::uint64_t code = 0; code < messages.size(); ++code) {
      const Vector x(spec.field, messages.unpack(code));
      const Vector y = multiply(x, g);
      for (std::size_t i = 0; i < spec.m(); ++i) {
        const Vector clean = cache_of(x, i);
        const std::size_t width = clean.size();
        // Every error vector on X_i with at most weight_limit nonzeros.
        const detail::PackedSpace errors(spec.field, width);
        require_within_bits(spec.q(), width, budget.enumeration_bits, "side-error patterns");
        for (std::uint64_t e = 0; e < errors.size(); ++e) {
          if (errors.weight(e) > weight_limit) continue;
          run.trial(i, x, y, add(clean, Vector(spec.field, errors.unpack(e))));
        }
      }
    }
    return report;
  }

  std::mt19937_64 rng(config.seed);
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    std::vector<Elem> raw(spec.n());
    for (Elem& v : raw) v = static_cast<Elem>(detail::uniform_below(rng, spec.q()));
    const Vector x(spec.field, raw);
    const Vector y = multiply(x, g);
    for (std::size_t i = 0; i < spec.m(); ++i) {
      const Vector clean = cache_of(x, i);
      std::vector<Elem> cache(clean.entries().begin(), clean.entries().end());
      const std::size_t width = cache.size();
      const std::size_t w = static_cast<std::size_t>(detail::uniform_below(rng, std::min(weight_limit, width) + 1));
      std::vector<std::size_t> pos(width);
      for (std::size_t k = 0; k < width; ++k) pos[k] = k;
      for (std::size_t k = 0; k < w; ++k) {
        std::swap(pos[k], pos[k + detail::uniform_below(rng, width - k)]);
        const Elem shift = static_cast<Elem>(1 + detail::uniform_below(rng, spec.q() - 1));
        cache[pos[k]] = f.add(cache[pos[k]], shift);
      }
      run.trial(i, x, y, Vector(spec.field, cache));
    }
  }
  return report;
}

std::string SimulationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["method"] = method;
  doc["passed"] = passed;
  doc["failure_count"] = failure_count;
  doc["receivers"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < receivers.size(); ++i) {
    doc["receivers"].push_back({{"receiver", i + 1},
                                {"trials", receivers[i].trials},
                                {"recovered", receivers[i].recovered},
                                {"rate", receivers[i].rate()}});
  }
  doc["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    doc["failures"].push_back({{"receiver", f.receiver + 1},
                               {"message", std::vector<Elem>(f.message.entries().begin(), f.message.entries().end())},
                               {"x_hat", std::vector<Elem>(f.x_hat.entries().begin(), f.x_hat.entries().end())},
                               {"detail", f.detail}});
  }
  return doc.dump(2);
}

}  // namespace icsie
