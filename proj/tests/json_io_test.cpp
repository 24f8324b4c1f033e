#include <gtest/gtest.h>

#include "modorb/error.hpp"
#include "modorb/json_io.hpp"
#include "modorb/perm_orbifold.hpp"
#include "modorb/perm_restricted.hpp"
#include "test_support.hpp"

namespace modorb::io {
namespace {

TEST(ParseDatum, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_modular_datum("{"), InputError);
  EXPECT_THROW(parse_modular_datum("[]"), InputError);
  EXPECT_THROW(parse_modular_datum(R"({"modules": [], "S": []})"), InputError);
  EXPECT_THROW(parse_modular_datum(R"({"central_charge": "0", "modules": [{"label": "1", "h": 0}], "S": [["1"]]})"),
               InputError);
  EXPECT_THROW(parse_modular_datum(R"({"central_charge": "0", "modules": [{"label": "1", "h": "0"}], "S": [["1", "0"], ["0"]]})"),
               InputError);
  EXPECT_THROW(parse_modular_datum(R"({"central_charge": "0", "modules": [{"label": "1", "h": "0"}], "S": [["1", "0"], ["0", "1"]]})"),
               InputError);
  EXPECT_THROW(parse_modular_datum(R"({"central_charge": "0", "modules": [{"label": "1", "h": "0"}], "S": [[{"re": "x"}]]})"),
               InputError);
}

TEST(ParseDatum, AcceptsAliasAndBareEntries) {
  const auto d = parse_modular_datum(R"({"c": "8", "modules": [{"label": "1", "h": "0"}], "S": [["1"]]})");
  EXPECT_EQ(d.central_charge(), Rational(8));
  EXPECT_EQ(d.s_matrix()(0, 0), Complex(1));
  const auto e = parse_modular_datum(R"({"central_charge": "8", "modules": [{"label": "1", "h": "0"}], "S": [[{"re": "1"}]]})");
  EXPECT_EQ(e.s_matrix()(0, 0), Complex(1));
}

TEST(ParseDatum, FixtureMatchesClosedForm) {
  const auto d = testing::ising();
  const auto cf = testing::ising_closed_form();
  EXPECT_EQ(d.central_charge(), Rational(1, 2));
  EXPECT_EQ(d.modules()[2].label, "σ");
  EXPECT_EQ(d.modules()[2].h, Rational(1, 16));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_NEAR(static_cast<double>(d.s_matrix()(i, j).real()), cf[i][j].real(), 1e-15);
}

TEST(FormatReal, RoundTripsAndFoldsNegativeZero) {
  EXPECT_EQ(format_real(-0.0L), "0");
  EXPECT_EQ(format_real(0.5L), "0.5");
  const Real x = std::sqrt(Real(2)) / 3;
  EXPECT_EQ(parse_real(format_real(x)), x);
}

TEST(RoundTrip, DatumIsExact) {
  for (const auto& d : {testing::ising(), testing::fibonacci(), perm::build_orbifold_datum(testing::ising(), 2).datum}) {
    const auto back = datum_from_json(to_json(d));
    EXPECT_EQ(back.central_charge(), d.central_charge());
    ASSERT_EQ(back.rank(), d.rank());
    for (std::size_t i = 0; i < d.rank(); ++i) {
      EXPECT_EQ(back.modules()[i].label, d.modules()[i].label);
      EXPECT_EQ(back.modules()[i].h, d.modules()[i].h);
    }
    EXPECT_TRUE((back.s_matrix().array() == d.s_matrix().array()).all());
  }
}

TEST(RoundTrip, OrbifoldDocumentCarriesLabels) {
  const auto o = perm::build_orbifold_datum(testing::ising(), 2);
  const auto doc = to_json(o);
  EXPECT_EQ(doc.at("k"), 2);
  EXPECT_EQ(doc.at("source_rank"), 3);
  EXPECT_EQ(doc.at("convention"), "minus");
  EXPECT_EQ(doc.at("modules").size(), 15u);
  EXPECT_EQ(doc.at("modules")[0].at("label_kind"), "diag");
  EXPECT_EQ(doc.at("modules")[6].at("label_kind"), "offdiag");
  EXPECT_EQ(doc.at("modules")[6].at("tuple"), json({0, 1}));
  EXPECT_EQ(doc.at("modules")[14].at("label_kind"), "twisted");
  EXPECT_EQ(dump(doc), dump(to_json(perm::build_orbifold_datum(testing::ising(), 2))));
}

TEST(RoundTrip, RestrictedInputReassemblesIdentically) {
  const auto in = perm::permutation_restricted_input(testing::fibonacci(), 3).input;
  const auto text = dump(to_json(in));
  const auto back = parse_restricted_input(text);
  EXPECT_EQ(back.orbits.size(), in.orbits.size());
  EXPECT_EQ(back.transversals, in.transversals);
  const auto a = restricted::assemble_restricted_S(in);
  const auto b = restricted::assemble_restricted_S(back);
  EXPECT_EQ(a.index, b.index);
  EXPECT_TRUE((a.s.array() == b.s.array()).all());
  EXPECT_EQ(dump(to_json(back)), text);
}

TEST(ParseRestricted, RejectsBadElements) {
  EXPECT_THROW(parse_restricted_input(R"({"group": [2], "orbits": [{"label": "V", "twist": [2],
      "stabilizer": [[0]], "characters": [{"dim": 1, "values": ["1"]}]}], "transversals": [], "blocks": []})"),
               InputError);
  EXPECT_THROW(parse_restricted_input(R"({"group": [2]})"), InputError);
}

TEST(ReadFile, MissingFileIsInputError) {
  EXPECT_THROW(read_file("/nonexistent/datum.json"), InputError);
}

}  // namespace
}  // namespace modorb::io
