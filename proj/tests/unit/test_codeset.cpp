#include <gtest/gtest.h>

#include <set>

#include "icsie/codeset.hpp"
#include "oracles.hpp"

using namespace icsie;

namespace {

ProblemSpec clique4(std::size_t ds = 1, std::size_t dc = 0) { return make_spec(clique_graph(4), 2, ds, dc); }

Matrix reference_g(const FieldPtr& f) {
  return Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
}

std::vector<Elem> entries(const Vector& v) { return {v.entries().begin(), v.entries().end()}; }

}  // namespace

TEST(Codeset, CliqueInterferenceIsAllButTwo) {
  const auto all = enum_interference(clique4());
  EXPECT_EQ(all.size(), 14u);
  std::set<std::vector<Elem>> seen;
  for (const auto& z : all) seen.insert(entries(z.z));
  EXPECT_EQ(seen.size(), 14u);
  EXPECT_FALSE(seen.count({0, 0, 0, 0}));
  EXPECT_FALSE(seen.count({1, 1, 1, 1}));
  // Lexicographic order, first witness recorded.
  EXPECT_EQ(entries(all.front().z), (std::vector<Elem>{0, 0, 0, 1}));
  EXPECT_EQ(all.front().witness_receiver, 3u);
}

TEST(Codeset, ZeroSideBudgetForcesCacheAgreement) {
  // Single receiver, no validation needed here: packet 2 is never demanded.
  ProblemSpec s;
  s.graph.n = 2;
  s.graph.demand = {0};
  s.graph.side = {{1}};
  s.field = field_make(2);
  s.delta_s = 0;
  const auto all = enum_interference(s);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(entries(all[0].z), (std::vector<Elem>{1, 0}));
}

TEST(Codeset, ZeroNeverInterferes) {
  oracle::Gen gen(3);
  for (int t = 0; t < 30; ++t) {
    const ProblemSpec s = make_spec(gen.unipartite(3), 3, gen.below(2));
    const std::vector<Elem> zero(3, 0);
    EXPECT_FALSE(interference_witness(s, zero).has_value());
  }
}

TEST(Codeset, SupportFamilyExamples) {
  const ProblemSpec s = clique4();
  const auto w = support_witness(s, IndexSet{0, 1, 2});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->receiver, 0u);
  EXPECT_EQ(w->i_part, (IndexSet{1, 2}));
  EXPECT_TRUE(w->y_part.empty());
  EXPECT_FALSE(in_support_family(s, IndexSet{0, 1, 2, 3}));
  EXPECT_TRUE(in_support_family(s, IndexSet{0}));
}

TEST(Codeset, ValidityExamples) {
  const ProblemSpec s = clique4();
  EXPECT_TRUE(is_valid_generator(s, reference_g(s.field)));
  EXPECT_TRUE(is_valid_generator(s, Matrix::identity(s.field, 4)));
  const Matrix dup = Matrix::from_rows(s.field, {{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const ValidityResult r = is_valid_generator(s, dup);
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(entries(r.counterexample->z), (std::vector<Elem>{1, 1, 0, 0}));
}

TEST(Codeset, OracleExamples) {
  const ProblemSpec s = clique4();
  EXPECT_TRUE(oracle_decodable(s, reference_g(s.field)));
  EXPECT_TRUE(oracle_decodable(s, Matrix::identity(s.field, 4)));
  EXPECT_FALSE(oracle_decodable(s, Matrix(s.field, 4, 3)));
  // One channel error needs distance 3 between confusable codewords.
  EXPECT_FALSE(oracle_decodable(clique4(1, 1), reference_g(s.field)));
}

TEST(Codeset, DimensionChecked) {
  const ProblemSpec s = clique4();
  try {
    is_valid_generator(s, Matrix::identity(s.field, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Codeset, BudgetIsHardError) {
  Budget tight;
  tight.enumeration_bits = 3;
  try {
    enum_interference(clique4(), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(CodesetProperty, MatchesDefinitionOracle) {
  oracle::Gen gen(11);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 2 + gen.below(3);
    const std::uint32_t q = gen.coin() ? 2 : 3;
    const ProblemSpec s = make_spec(gen.bipartite(n, n + gen.below(2)), q, gen.below(2), 0,
                                    gen.coin() ? SideErrorModel::Error : SideErrorModel::Erasure);
    std::vector<std::vector<Elem>> ours;
    for (const auto& z : enum_interference(s)) ours.push_back(entries(z.z));
    EXPECT_EQ(ours, oracle::interference(s));
  }
}

TEST(CodesetProperty, SupportFamilyIsSupportsOfInterference) {
  oracle::Gen gen(12);
  for (std::uint32_t q : {2u, 3u}) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 2 + gen.below(3);
      const ProblemSpec s = make_spec(gen.bipartite(n, n + gen.below(2)), q, gen.below(2));
      const auto supports = oracle::interference_supports(s);
      for (const auto& k : oracle::subsets(n)) {
        if (k.empty()) continue;
        EXPECT_EQ(in_support_family(s, k), supports.count(k) > 0);
      }
    }
  }
}

TEST(CodesetProperty, InterferenceMonotoneInDeltaS) {
  oracle::Gen gen(13);
  for (int t = 0; t < 50; ++t) {
    const ProblemSpec big = make_spec(gen.unipartite(4), 2, 1);
    const ProblemSpec small = big.with_delta_s(0);
    std::set<std::vector<Elem>> wide;
    for (const auto& z : enum_interference(big)) wide.insert(entries(z.z));
    for (const auto& z : enum_interference(small)) EXPECT_TRUE(wide.count(entries(z.z)));
  }
}

TEST(CodesetProperty, ValidityAgreesWithSphereOracle) {
  oracle::Gen gen(14);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + gen.below(2);
    const ProblemSpec s = make_spec(gen.unipartite(n), 2, gen.below(2), gen.below(2));
    const Matrix g = gen.matrix(s.field, n, 1 + gen.below(4));
    const bool fast = is_valid_generator(s, g).valid;
    EXPECT_EQ(fast, oracle_decodable(s, g));
    EXPECT_EQ(fast, oracle::valid(s, g));
  }
}
