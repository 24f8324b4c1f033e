#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "modorb/error.hpp"
#include "modorb/perm_orbifold.hpp"
#include "modorb/perm_restricted.hpp"
#include "modorb/phase.hpp"
#include "modorb/restricted_smatrix.hpp"
#include "test_support.hpp"

namespace modorb::restricted {
namespace {

CharacterTable trivial_table() { return {{{0}}, {{Complex(1)}}, {1}}; }

CharacterTable z2_table() {
  return {{{0}, {1}}, {{Complex(1), Complex(1)}, {Complex(1), Complex(-1)}}, {1, 1}};
}

// Each module of V becomes its own orbit under the trivial group.
RestrictedInput trivial_group_input(const ModularDatum& v) {
  RestrictedInput in{FiniteAbelianGroup({1}), {}, {}, {}};
  const auto n = v.rank();
  for (std::size_t i = 0; i < n; ++i) in.orbits.push_back({v.modules()[i].label, {0}, trivial_table()});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      in.transversals[{i, j}] = {{0}};
      in.blocks[{i, j, Element{0}}] = v.s_matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return in;
}

TEST(FiniteAbelianGroup, Arithmetic) {
  const FiniteAbelianGroup g({2, 3});
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.multiply({1, 2}, {1, 2}), (Element{0, 1}));
  EXPECT_EQ(g.inverse({1, 2}), (Element{1, 1}));
  EXPECT_TRUE(g.contains({1, 2}));
  EXPECT_FALSE(g.contains({2, 0}));
  EXPECT_FALSE(g.contains({0}));
  EXPECT_EQ(g.elements().size(), 6u);
  EXPECT_THROW(g.require({0, 3}, "kappa"), InputError);
  EXPECT_THROW(FiniteAbelianGroup({0}), InputError);
}

TEST(CharacterTable, ValueOutsideStabilizerThrows) {
  const auto t = trivial_table();
  EXPECT_EQ(t.value(0, {0}), Complex(1));
  EXPECT_THROW(t.value(0, {1}), InputError);
}

TEST(GroupData, TrivialGroupPassesAndCollapsesToS) {
  const auto v = testing::ising();
  const auto in = trivial_group_input(v);
  const auto report = validate_group_data(in);
  for (const auto& c : report.checks()) EXPECT_TRUE(c.passed) << c.name;
  const auto r = assemble_restricted_S(in);
  EXPECT_EQ(max_abs(r.s - v.s_matrix()), 0);
  ASSERT_EQ(r.index.size(), 3u);
  EXPECT_EQ(r.index[2], std::make_pair(std::size_t{2}, std::size_t{0}));
}

TEST(GroupData, DetectsCorruptedCharacters) {
  RestrictedInput in{FiniteAbelianGroup({2}), {{"V", {0}, z2_table()}}, {{{0, 0}, {{0}}}}, {{{0, 0, Element{0}}, Complex(1)}}};
  EXPECT_TRUE(validate_group_data(in).passed());

  auto bad = in;
  bad.orbits[0].characters.rows[1][1] = Complex(0.5L, 0);
  const auto report = validate_group_data(bad);
  EXPECT_FALSE(report.find("orbit 0 (V): character_orthogonality")->passed);

  auto dims = in;
  dims.orbits[0].characters.dims[1] = 2;
  EXPECT_FALSE(validate_group_data(dims).find("orbit 0 (V): dimension_sum")->passed);
}

TEST(GroupData, DetectsTwistOutsideStabilizer) {
  RestrictedInput in{FiniteAbelianGroup({2}), {{"V", {0}, trivial_table()}, {"W", {1}, trivial_table()}}, {}, {}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      in.transversals[{i, j}] = {{0}};
      in.blocks[{i, j, Element{0}}] = Complex(1);
    }
  const auto report = validate_group_data(in);
  EXPECT_TRUE(report.find("orbit 0 (V): twist_in_stabilizer")->passed);
  EXPECT_FALSE(report.find("orbit 1 (W): twist_in_stabilizer")->passed);
  EXPECT_FALSE(report.passed());
}

TEST(GroupData, DetectsNonSubgroupStabilizer) {
  CharacterTable t{{{0}, {1}}, {{Complex(1), Complex(1)}}, {1}};
  RestrictedInput in{FiniteAbelianGroup({3}), {{"V", {0}, t}}, {{{0, 0}, {{0}}}}, {{{0, 0, Element{0}}, Complex(1)}}};
  EXPECT_FALSE(validate_group_data(in).find("orbit 0 (V): stabilizer_subgroup")->passed);
}

TEST(Assemble, MissingBlockThrows) {
  auto in = trivial_group_input(testing::ising());
  in.blocks.erase({1, 2, Element{0}});
  EXPECT_THROW(assemble_restricted_S(in), InputError);
  EXPECT_FALSE(validate_group_data(in).find("block_coverage")->passed);
}

// Direct evaluation of 1/|G| S_{g,h} conj(lambda(h)) mu(g^-1) for Z_2.
TEST(Holomorphic, Z2MatchesHandFormula) {
  const FiniteAbelianGroup g({2});
  const Complex w(0.3L, 0.4L);
  HolomorphicInput h{g, {{0}, {1}}, {z2_table(), z2_table()}, {}};
  h.s[{0, 0}] = 1;
  h.s[{0, 1}] = 1;
  h.s[{1, 0}] = 1;
  h.s[{1, 1}] = w;
  const auto r = holomorphic_assemble(h);
  ASSERT_EQ(r.s.rows(), 4);
  const int chi[2][2] = {{1, 1}, {1, -1}};  // chi[a][m]
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      const int gi = x / 2, a = x % 2, gj = y / 2, b = y % 2;
      const Complex s = h.s.at({static_cast<std::size_t>(gi), static_cast<std::size_t>(gj)});
      const Complex expected = s * Real(chi[a][gj]) * Real(chi[b][gi]) / Real(2);
      EXPECT_LT(std::abs(r.s(x, y) - expected), 1e-18L) << x << "," << y;
    }
  }
}

TEST(Holomorphic, TrivialGroupGivesVacuumEntry) {
  HolomorphicInput h{FiniteAbelianGroup({1}), {{0}}, {trivial_table()}, {{{0, 0}, Complex(1)}}};
  const auto r = holomorphic_assemble(h);
  ASSERT_EQ(r.s.rows(), 1);
  EXPECT_EQ(r.s(0, 0), Complex(1));
}

TEST(Holomorphic, RejectsMalformedInput) {
  HolomorphicInput h{FiniteAbelianGroup({2}), {{1}, {0}}, {z2_table(), z2_table()}, {}};
  EXPECT_THROW(holomorphic_assemble(h), InputError);
  h.twists = {{0}};
  h.characters = {z2_table()};
  EXPECT_THROW(holomorphic_assemble(h), InputError);
}

TEST(Holomorphic, E8SwapMatchesPermutationOrbifold) {
  const auto v = testing::e8();
  const auto block = perm::twisted_block_S(v, 2, 1, 1);
  HolomorphicInput h{FiniteAbelianGroup({2}), {{0}, {1}}, {z2_table(), z2_table()}, {}};
  h.s[{0, 0}] = 1;
  h.s[{0, 1}] = 1;
  h.s[{1, 0}] = 1;
  h.s[{1, 1}] = block(0, 0);
  const auto r = holomorphic_assemble(h);
  const auto s = perm::assemble_orbifold_S(v, 2);
  EXPECT_LT(max_abs(r.s - s), 1e-15L);
}

TEST(PermutationBridge, ReproducesOrbifoldS) {
  struct Case {
    ModularDatum v;
    int k;
  };
  for (const auto& [v, k] : {Case{testing::ising(), 2}, Case{testing::fibonacci(), 3}, Case{testing::ising(), 3},
                              Case{testing::fibonacci(), 5}}) {
    const auto data = perm::permutation_restricted_input(v, k);
    EXPECT_TRUE(validate_group_data(data.input).passed()) << k;
    const auto r = assemble_restricted_S(data.input);
    const auto s = perm::assemble_orbifold_S(v, k);
    ASSERT_EQ(r.s.rows(), s.rows());
    Real worst = 0;
    for (Eigen::Index x = 0; x < r.s.rows(); ++x)
      for (Eigen::Index y = 0; y < r.s.cols(); ++y)
        worst = std::max(worst, std::abs(r.s(x, y) - s(static_cast<Eigen::Index>(data.orbifold_index[x]),
                                                       static_cast<Eigen::Index>(data.orbifold_index[y]))));
    EXPECT_LT(worst, 1e-15L) << "k=" << k;
  }
}

TEST(PermutationBridge, TransversalChoiceDoesNotMatter) {
  const auto v = testing::fibonacci();
  const auto a = perm::permutation_restricted_input(v, 3, false);
  const auto b = perm::permutation_restricted_input(v, 3, true);
  EXPECT_NE(a.input.transversals, b.input.transversals);
  EXPECT_LT(transversal_discrepancy(a.input, b.input), 1e-15L);
}

TEST(PermutationBridge, VacuumClosedFormMatchesAssembly) {
  for (const auto& [v, k] : {std::pair{testing::ising(), 2}, std::pair{testing::fibonacci(), 3}}) {
    const auto data = perm::permutation_restricted_input(v, k);
    const auto rows = vacuum_rows(data.input);
    const auto r = assemble_restricted_S(data.input);
    ASSERT_EQ(rows.rows(), k);
    EXPECT_LT(max_abs(rows - r.s.topRows(k)), 1e-15L);
  }
}

TEST(PermutationBridge, DetectsBrokenConjugationInvariance) {
  auto data = perm::permutation_restricted_input(testing::ising(), 2);
  // Row orbit 0 has stabilizer Z_2, so its blocks must agree across kappa.
  std::size_t off = 0;
  while (data.input.orbits[off].characters.elements.size() != 1) ++off;
  data.input.blocks[{0, off, Element{1}}] += Complex(0.01L);
  EXPECT_FALSE(validate_group_data(data.input).find("conjugation_invariance")->passed);
}

TEST(PermutationBridge, RestrictedMatrixIsSymmetricAndUnitary) {
  const auto r = assemble_restricted_S(perm::permutation_restricted_input(testing::fibonacci(), 3).input);
  const auto n = r.s.rows();
  EXPECT_LT(max_abs(r.s - r.s.transpose()), 1e-15L);
  EXPECT_LT(max_abs(r.s * r.s.adjoint() - ComplexMatrix::Identity(n, n)), 1e-12L);
}

}  // namespace
}  // namespace modorb::restricted
