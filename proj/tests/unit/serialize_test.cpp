#include <gtest/gtest.h>

#include "cotq/engine.hpp"
#include "cotq/instances.hpp"
#include "cotq/parser.hpp"
#include "cotq/serialize.hpp"
#include "cotq/verify.hpp"
#include "support/generators.hpp"

using namespace cotq;

TEST(Json, Scalar) {
  const Json j = to_json(GaussianRational(Rational(BigInt(6), BigInt(4)), Rational(0)));
  EXPECT_EQ(j.dump(), R"({"re":"3/2","im":"0/1"})");
  EXPECT_EQ(to_json(GaussianRational(-2, 1)).dump(), R"({"re":"-2/1","im":"1/1"})");
}

TEST(Json, ScalarRoundTrip) {
  cotq::testing::Gen gen(51);
  for (int t = 0; t < 200; ++t) {
    const GaussianRational z = gen.scalar(30);
    EXPECT_EQ(scalar_from_json(to_json(z)), z);
  }
  EXPECT_THROW(scalar_from_json(Json::parse(R"({"re":"x","im":"0/1"})")), Error);
}

TEST(Json, Element) {
  auto d = make_divided_power();
  const Json j = to_json(parse_element("2*x_3 - i*x_0", *d));
  EXPECT_EQ(j.dump(),
            R"({"coalgebra":"divpow","terms":[{"key":"x_0","coeff":{"re":"0/1","im":"-1/1"}},)"
            R"({"key":"x_3","coeff":{"re":"2/1","im":"0/1"}}]})");
}

TEST(Json, Tensor) {
  auto d = make_divided_power();
  const Json j = to_json(comul_extend(*d, d->unit(DividedKey{1})));
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["key1"], "x_0");
  EXPECT_EQ(j["terms"][0]["key2"], "x_1");
}

TEST(Json, MatrixResult) {
  auto n = make_negative_degree(3);
  auto f = make_form({}, *n);
  const OperatorHandle op(n, f, n->unit(NegDegKey{-1}));
  const auto m = operator_matrix(op, BasisWindow::of(*n, {NegDegKey{1}, NegDegKey{2}}));
  const Json j = to_json(m);
  EXPECT_EQ(j["window"], Json::parse(R"(["x_1","x_2"])"));
  EXPECT_EQ(j["entries"][1][0]["re"], "1/1");
  ASSERT_EQ(j["leakage"].size(), 1u);
  EXPECT_EQ(j["leakage"][0]["from"], "x_2");
  EXPECT_EQ(j["leakage"][0]["escaped"]["terms"][0]["key"], "x_3");
}

TEST(Json, Classification) {
  Classification c{Classification::Kind::Creation, {2}};
  const Json j = to_json(c);
  EXPECT_EQ(j["kind"], "creation");
  EXPECT_EQ(j["degree"], 2);
}

TEST(Csv, ScalarFormat) {
  EXPECT_EQ(csv_scalar(GaussianRational(Rational(BigInt(1), BigInt(2)), Rational(-3))), "1/2-3i");
  EXPECT_EQ(csv_scalar(GaussianRational(2)), "2+0i");
  EXPECT_EQ(csv_scalar(GaussianRational(0, 1)), "0+1i");
}

TEST(Csv, Grid) {
  auto d = make_divided_power();
  const auto w = BasisWindow::up_to_degree(*d, 1);
  const ScalarGrid g{{GaussianRational(1), GaussianRational(0)},
                     {GaussianRational(0), GaussianRational(0, -1)}};
  EXPECT_EQ(to_csv(w, g), ",x_0,x_1\nx_0,1+0i,0+0i\nx_1,0+0i,0-1i\n");
}

TEST(VerifyReport, ScopeNegdegCarriesTheExpectedFailure) {
  const VerificationReport r = run_verification({"negdeg", 0, "2/3"});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.count(CheckStatus::Fail), 0u);
  EXPECT_EQ(r.count(CheckStatus::ExpectedFail), 3u);
  bool found = false;
  for (const CheckRecord& rec : r.records) {
    if (rec.id == "negdeg.coassociativity" && rec.coalgebra == "negdeg?M=1") {
      found = true;
      EXPECT_EQ(rec.status, CheckStatus::ExpectedFail);
      ASSERT_TRUE(rec.witness.has_value());
      EXPECT_NE(rec.witness->find("x_1 : x_-1⊗x_1⊗x_1 - x_1⊗x_1⊗x_-1"), std::string::npos)
          << *rec.witness;
    }
  }
  EXPECT_TRUE(found);
}

TEST(VerifyReport, RecordsAreSortedAndOutputIsDeterministic) {
  const VerificationReport a = run_verification({"matrix", 0, "2/3"});
  const VerificationReport b = run_verification({"matrix", 0, "2/3"});
  EXPECT_TRUE(std::is_sorted(a.records.begin(), a.records.end(), [](const auto& x, const auto& y) {
    return std::tie(x.id, x.coalgebra, x.form, x.parameters) <
           std::tie(y.id, y.coalgebra, y.form, y.parameters);
  }));
  EXPECT_EQ(to_json(a, false).dump(), to_json(b, false).dump());
  EXPECT_EQ(to_text(a, false, false), to_text(b, false, false));
  EXPECT_EQ(to_csv(a, false), to_csv(b, false));
  bool composition = false;
  for (const CheckRecord& rec : a.records) {
    if (rec.id == "matrix.composition-rule") composition = rec.status == CheckStatus::Pass;
  }
  EXPECT_TRUE(composition);
}

TEST(VerifyReport, UnknownScope) {
  EXPECT_THROW(run_verification({"hopf", 0, "2/3"}), Error);
}
