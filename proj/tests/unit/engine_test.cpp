#include <gtest/gtest.h>

#include "cotq/engine.hpp"
#include "cotq/instances.hpp"
#include "cotq/parser.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cotq;
using cotq::testing::Gen;

namespace {

struct Bound {
  CoalgebraPtr coalgebra;
  FormPtr form;

  Bound(std::string_view c, std::string_view f)
      : coalgebra(parse_coalgebra_spec(c)),
        form(make_form(parse_form_spec(f), *coalgebra)) {}

  Element el(std::string_view text) const { return parse_element(text, *coalgebra); }
  OperatorHandle op(std::string_view symbol) const {
    return OperatorHandle(coalgebra, form, el(symbol));
  }
  Element apply(std::string_view symbol, std::string_view phi) const {
    return co_toeplitz_apply(op(symbol), el(phi));
  }
};

ScalarGrid grid(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  ScalarGrid g;
  for (const auto& r : rows) g.emplace_back(r);
  return g;
}

}  // namespace

TEST(CoToeplitzApply, Examples) {
  const Bound divpow("divpow", "diag?w=factorial");
  EXPECT_EQ(divpow.apply("x_2", "x_5"), divpow.el("2*x_3"));
  EXPECT_TRUE(divpow.apply("x_4", "x_1").is_zero());

  const Bound matrix("matrix?n=3", "matrix-orth");
  EXPECT_EQ(matrix.apply("E_1_2", "E_3_2"), matrix.el("E_3_1"));

  const Bound manin("manin?q=2/3", "manin-orth?w=one");
  EXPECT_TRUE(manin.apply("a^2 c^1", "a^1 c^1").is_zero());
}

TEST(CoToeplitzApply, SymbolFromAnotherCoalgebraIsRejected) {
  const Bound divpow("divpow", "diag");
  auto other = make_negative_degree(2);
  EXPECT_THROW(OperatorHandle(divpow.coalgebra, divpow.form, other->unit(NegDegKey{1})), Error);
}

TEST(CoToeplitzApply, InputOutsideSubcoalgebraIsRejected) {
  const Bound divpow("divpow", "diag");
  const OperatorHandle op(divpow.coalgebra, divpow.form, divpow.el("x_1"),
                          ProjectionPair::of({DividedKey{0}, DividedKey{1}}));
  try {
    co_toeplitz_apply(op, divpow.el("x_2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInSubcoalgebra);
  }
  EXPECT_EQ(co_toeplitz_apply(op, divpow.el("x_1")), divpow.el("x_0"));
}

TEST(CoToeplitzApply, ProjectionActsOnTheFirstTensorSlot) {
  const Bound divpow("divpow", "diag");
  const OperatorHandle op(divpow.coalgebra, divpow.form, divpow.el("x_0"),
                          ProjectionPair::of({DividedKey{0}, DividedKey{2}}));
  EXPECT_EQ(co_toeplitz_apply(op, divpow.el("x_2")), divpow.el("x_2"));
  const OperatorHandle op1(divpow.coalgebra, divpow.form, divpow.el("x_2"),
                           ProjectionPair::of({DividedKey{0}, DividedKey{2}}));
  EXPECT_EQ(co_toeplitz_apply(op1, divpow.el("x_2")), divpow.el("x_0"));
}

TEST(OperatorMatrix, DividedPowerShift) {
  const Bound divpow("divpow", "diag?w=one");
  const auto window = BasisWindow::up_to_degree(*divpow.coalgebra, 3);
  const MatrixResult m = operator_matrix(divpow.op("x_1"), window);
  EXPECT_TRUE(m.leakage.empty());
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      EXPECT_EQ(m.entries[r][c], GaussianRational(c >= 1 && r == c - 1 ? 1 : 0)) << r << "," << c;
    }
  }
}

TEST(OperatorMatrix, NegDegShiftStopsAtTheRangeBoundary) {
  const Bound negdeg("negdeg?M=1", "diag?w=one");
  const MatrixResult m = operator_matrix(negdeg.op("x_-1"), BasisWindow::full(*negdeg.coalgebra));
  EXPECT_TRUE(m.leakage.empty());
  // columns x_-1, x_0, x_1: x_-1 -> x_0, x_0 -> x_1, x_1 -> 0
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_EQ(m.entries[r][c], GaussianRational(r == c + 1 ? 1 : 0)) << r << "," << c;
    }
  }
}

TEST(OperatorMatrix, ZeroSymbolGivesZeroMatrix) {
  const Bound divpow("divpow", "diag?w=factorial");
  const OperatorHandle op(divpow.coalgebra, divpow.form, divpow.coalgebra->zero());
  const MatrixResult m = operator_matrix(op, BasisWindow::up_to_degree(*divpow.coalgebra, 4));
  for (const auto& row : m.entries) {
    for (const auto& v : row) EXPECT_TRUE(v.is_zero());
  }
}

TEST(OperatorMatrix, LeakageIsReported) {
  const Bound negdeg("negdeg?M=3", "diag?w=one");
  const auto window = BasisWindow::of(*negdeg.coalgebra, {NegDegKey{0}, NegDegKey{1}});
  const MatrixResult m = operator_matrix(negdeg.op("x_-1"), window);
  ASSERT_EQ(m.leakage.size(), 1u);
  EXPECT_EQ(m.leakage[0].from, BasisKey(NegDegKey{1}));
  EXPECT_EQ(m.leakage[0].escaped, negdeg.el("x_2"));
  EXPECT_TRUE(m.column_leaks(1));
  EXPECT_FALSE(m.column_leaks(0));
}

TEST(BasisWindow, OrderingAndValidation) {
  auto d = make_divided_power();
  const auto w = BasisWindow::of(*d, {DividedKey{3}, DividedKey{0}, DividedKey{1}});
  EXPECT_EQ(w.keys().front(), BasisKey(DividedKey{0}));
  EXPECT_EQ(w.index_of(DividedKey{3}), 2u);
  EXPECT_FALSE(w.index_of(DividedKey{2}).has_value());
  EXPECT_THROW(BasisWindow::of(*d, {DividedKey{1}, DividedKey{1}}), Error);
  EXPECT_THROW(BasisWindow::full(*d), Error);
  auto manin = make_manin(GaussianRational(2));
  const auto mw = BasisWindow::up_to_degree(*manin, 1);
  ASSERT_EQ(mw.size(), 3u);
  EXPECT_EQ(mw.keys()[1], BasisKey(ManinKey{1, 0}));
  EXPECT_EQ(mw.keys()[2], BasisKey(ManinKey{0, 1}));
}

TEST(ClassifyShift, Examples) {
  const Bound divpow("divpow", "diag?w=factorial");
  const auto c1 = classify_shift(divpow.op("x_3"), BasisWindow::up_to_degree(*divpow.coalgebra, 8));
  EXPECT_EQ(c1.kind, Classification::Kind::Annihilation);
  EXPECT_EQ(c1.degree(), 3);

  const Bound negdeg("negdeg?M=5", "diag?w=one");
  const auto c2 = classify_shift(negdeg.op("x_-2"), BasisWindow::full(*negdeg.coalgebra));
  EXPECT_EQ(c2.kind, Classification::Kind::Creation);
  EXPECT_EQ(c2.degree(), 2);
  EXPECT_EQ(c2.describe(), "creation (degree +2)");

  const Bound matrix("matrix?n=3", "matrix-weighted?w=one");
  const auto full = BasisWindow::full(*matrix.coalgebra);
  EXPECT_EQ(classify_shift(matrix.op("E_2_2"), full).kind, Classification::Kind::Preservation);
  const auto c3 = classify_shift(matrix.op("E_3_1"), full);
  EXPECT_EQ(c3.kind, Classification::Kind::Creation);
  EXPECT_EQ(c3.degree(), 2);
}

TEST(ClassifyShift, LeakageCountsAsCreation) {
  const Bound negdeg("negdeg?M=3", "diag?w=one");
  const auto window = BasisWindow::of(*negdeg.coalgebra, {NegDegKey{3}});
  const auto c = classify_shift(negdeg.op("x_-1"), BasisWindow::of(*negdeg.coalgebra, {NegDegKey{2}}));
  EXPECT_EQ(c.kind, Classification::Kind::Creation);
  EXPECT_EQ(classify_shift(negdeg.op("x_-1"), window).kind, Classification::Kind::Zero);
}

TEST(ClassifyShift, InhomogeneousSymbol) {
  const Bound divpow("divpow", "diag?w=one");
  const auto c = classify_shift(divpow.op("x_0 + x_2"), BasisWindow::up_to_degree(*divpow.coalgebra, 4));
  EXPECT_EQ(c.kind, Classification::Kind::Inhomogeneous);
  EXPECT_EQ(c.describe(), "inhomogeneous (shifts -2, 0)");
}

TEST(ComposeApply, Examples) {
  const Bound divpow("divpow", "diag?w=one");
  EXPECT_EQ(compose_apply({divpow.op("x_1"), divpow.op("x_2")}, divpow.el("x_5")), divpow.el("x_2"));
  EXPECT_EQ(compose_apply({}, divpow.el("3*x_5")), divpow.el("3*x_5"));

  const Bound matrix("matrix?n=3", "matrix-orth");
  for (const BasisKey& k : matrix.coalgebra->full_basis()) {
    EXPECT_TRUE(compose_apply({matrix.op("E_1_2"), matrix.op("E_3_1")}, matrix.coalgebra->unit(k)).is_zero());
  }
}

TEST(ComposeApply, DividedPowerOperatorsCommute) {
  const Bound divpow("divpow", "diag?w=factorial");
  for (int k = 0; k <= 12; ++k) {
    for (int l = 0; l <= 12; ++l) {
      const auto a = divpow.op("x_" + std::to_string(k));
      const auto b = divpow.op("x_" + std::to_string(l));
      for (int n = 0; n <= 12; ++n) {
        const Element phi = divpow.el("x_" + std::to_string(n));
        EXPECT_EQ(compose_apply({a, b}, phi), compose_apply({b, a}, phi));
      }
    }
  }
}

TEST(GramMatrix, Examples) {
  const Bound divpow("divpow", "diag?w=factorial");
  const GramResult g = gram_matrix(*divpow.form, BasisWindow::up_to_degree(*divpow.coalgebra, 2));
  EXPECT_EQ(g.entries, grid({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  EXPECT_TRUE(g.hermitian);
  EXPECT_TRUE(is_positive_definite(g.entries));

  const Bound matrix("matrix?n=2", "matrix-orth");
  const GramResult id = gram_matrix(*matrix.form, BasisWindow::full(*matrix.coalgebra));
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(id.entries[r][c], GaussianRational(r == c ? 1 : 0));
  }

  const Bound skew("manin?q=2/3", "manin-skew?mu=one");
  const GramResult s = gram_matrix(*skew.form, BasisWindow::of(*skew.coalgebra, {ManinKey{1, 0}, ManinKey{2, 1}}));
  EXPECT_EQ(s.entries, grid({{1, 1}, {1, 1}}));
  EXPECT_TRUE(s.hermitian);
  EXPECT_FALSE(is_positive_definite(s.entries));
}

TEST(PositiveDefinite, Examples) {
  const GaussianRational i = GaussianRational::i();
  EXPECT_TRUE(is_positive_definite(grid({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})));
  EXPECT_FALSE(is_positive_definite(grid({{1, 1}, {1, 1}})));
  EXPECT_TRUE(is_positive_definite(grid({{2, i}, {-i, 2}})));
  EXPECT_EQ(leading_minors(grid({{2, i}, {-i, 2}})),
            (std::vector<GaussianRational>{GaussianRational(2), GaussianRational(3)}));
  EXPECT_THROW(is_positive_definite(grid({{1, i}, {i, 1}})), Error);
  EXPECT_THROW(is_positive_definite(grid({{1, 0}})), Error);
}

TEST(PositiveDefinite, AgreesWithCofactorOracle) {
  Gen gen(31);
  int positives = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    ScalarGrid m(n, std::vector<GaussianRational>(n));
    for (std::size_t r = 0; r < n; ++r) {
      m[r][r] = GaussianRational(gen.rational(4) + Rational(gen.integer(0, 6)));
      for (std::size_t c = r + 1; c < n; ++c) {
        m[r][c] = gen.scalar(3);
        m[c][r] = m[r][c].conj();
      }
    }
    const bool expected = cotq::testing::cofactor_positive_definite(m);
    positives += expected ? 1 : 0;
    EXPECT_EQ(is_positive_definite(m), expected) << "trial " << t;
    const auto minors = leading_minors(m);
    for (std::size_t k = 0; k < minors.size(); ++k) {
      ScalarGrid lead;
      for (std::size_t r = 0; r <= k; ++r) lead.emplace_back(m[r].begin(), m[r].begin() + k + 1);
      EXPECT_EQ(minors[k], cotq::testing::cofactor_det(lead));
    }
  }
  EXPECT_GT(positives, 10);
}

TEST(DiagonalEigenvalues, Examples) {
  const Bound orth("manin?q=2/3", "manin-orth?w=factorial");
  const auto m = operator_matrix(orth.op("a^2 c^0"), BasisWindow::up_to_degree(*orth.coalgebra, 3));
  EXPECT_EQ(diagonal_eigenvalues(m),
            (std::vector<Eigenvalue>{{GaussianRational(0), 7}, {GaussianRational(2), 3}}));

  const Bound skew("manin?q=2/3", "manin-skew?mu=geom:2");
  const auto s = operator_matrix(skew.op("a^3 c^1"), BasisWindow::up_to_degree(*skew.coalgebra, 4));
  // mu(3) mu(1) mu(2) mu(0) = 8 * 2 * 4 * 1
  EXPECT_EQ(diagonal_eigenvalues(s),
            (std::vector<Eigenvalue>{{GaussianRational(0), 12}, {GaussianRational(64), 3}}));

  const Bound divpow("divpow", "diag?w=geom:1/2");
  const auto d = operator_matrix(divpow.op("x_0"), BasisWindow::up_to_degree(*divpow.coalgebra, 9));
  EXPECT_EQ(diagonal_eigenvalues(d), (std::vector<Eigenvalue>{{GaussianRational(1), 10}}));
}

TEST(DiagonalEigenvalues, NonDiagonalIsAnError) {
  const Bound divpow("divpow", "diag?w=one");
  const auto m = operator_matrix(divpow.op("x_1"), BasisWindow::up_to_degree(*divpow.coalgebra, 3));
  try {
    diagonal_eigenvalues(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDiagonal);
  }
}

TEST(Antilinearity, Example) {
  const Bound divpow("divpow", "diag?w=one");
  const GaussianRational i = GaussianRational::i();
  const Element g = divpow.el("x_1");
  const Element h = divpow.coalgebra->zero();
  EXPECT_FALSE(verify_antilinearity(divpow.coalgebra, divpow.form, g, h, i, {divpow.el("x_2")}));
  const OperatorHandle op(divpow.coalgebra, divpow.form, g * i + h);
  EXPECT_EQ(co_toeplitz_apply(op, divpow.el("x_2")), divpow.el("-i*x_1"));
}

TEST(Antilinearity, AdditivityIsTheUnitCase) {
  const Bound negdeg("negdeg?M=2", "diag?w=absfactorial");
  Gen gen(32);
  const auto keys = negdeg.coalgebra->full_basis();
  for (int t = 0; t < 20; ++t) {
    const Element g = gen.element(*negdeg.coalgebra, keys), h = gen.element(*negdeg.coalgebra, keys);
    for (const BasisKey& k : keys) {
      const Element phi = negdeg.coalgebra->unit(k);
      const OperatorHandle sum(negdeg.coalgebra, negdeg.form, g + h);
      EXPECT_EQ(co_toeplitz_apply(sum, phi),
                co_toeplitz_apply(negdeg.op("x_0").with_symbol(g), phi) +
                    co_toeplitz_apply(negdeg.op("x_0").with_symbol(h), phi));
    }
  }
}

TEST(SimpleCase, MatchesDirectSummation) {
  Gen gen(33);
  for (const auto& [c, f] : std::vector<std::pair<std::string, std::string>>{
           {"manin?q=2/3", "manin-skew?mu=geom:2"},
           {"divpow", "diag?w=factorial"},
           {"negdeg?M=3", "diag?w=poly:2"},
           {"matrix?n=3", "matrix-weighted?w=geom:1/2"}}) {
    const Bound s(c, f);
    const auto keys = cotq::testing::test_keys(*s.coalgebra);
    for (int t = 0; t < 30; ++t) {
      const Element g = gen.element(*s.coalgebra, keys), phi = gen.element(*s.coalgebra, keys);
      const Element expected = cotq::testing::direct_simple_apply(*s.coalgebra, *s.form, g, phi);
      EXPECT_EQ(co_toeplitz_apply_simple(*s.coalgebra, *s.form, g, phi), expected) << c;
      EXPECT_EQ(co_toeplitz_apply(OperatorHandle(s.coalgebra, s.form, g), phi), expected) << c;
    }
  }
}

TEST(StarDuality, ShiftNegates) {
  const Bound negdeg("negdeg?M=4", "diag?w=one");
  const auto nwin = BasisWindow::full(*negdeg.coalgebra);
  for (const BasisKey& k : negdeg.coalgebra->full_basis()) {
    const auto a = classify_shift(negdeg.op(to_string(k)), nwin);
    const auto b = classify_shift(negdeg.op(to_string(*negdeg.coalgebra->star(k))), nwin);
    ASSERT_EQ(a.shifts.size(), 1u);
    ASSERT_EQ(b.shifts.size(), 1u);
    EXPECT_EQ(*a.shifts.begin(), -*b.shifts.begin());
  }
  const Bound matrix("matrix?n=4", "matrix-weighted?w=geom:2");
  const auto mwin = BasisWindow::full(*matrix.coalgebra);
  for (const BasisKey& k : matrix.coalgebra->full_basis()) {
    const auto a = classify_shift(matrix.op(to_string(k)), mwin);
    const auto b = classify_shift(matrix.op(to_string(*matrix.coalgebra->star(k))), mwin);
    ASSERT_EQ(a.shifts.size(), 1u);
    EXPECT_EQ(*a.shifts.begin(), -*b.shifts.begin());
  }
}

TEST(ClosedForms, NegativeDegreeDiagonal) {
  for (const std::string w : {"one", "geom:1/3", "absfactorial"}) {
    const Bound s("negdeg?M=5", "diag?w=" + w);
    const WeightFamily weight = parse_weight_spec(w);
    for (std::int64_t k = -5; k <= 5; ++k) {
      for (std::int64_t n = -5; n <= 5; ++n) {
        Element expected = s.coalgebra->zero();
        if (std::abs(n - k) <= 5) expected.add_term(NegDegKey{n - k}, GaussianRational(weight(k)));
        EXPECT_EQ(s.apply("x_" + std::to_string(k), "x_" + std::to_string(n)), expected);
      }
    }
  }
}

TEST(ClosedForms, ManinSkew) {
  const Bound s("manin?q=2/3", "manin-skew?mu=geom:2");
  const WeightFamily mu = WeightFamily::geom(Rational(2));
  for (std::int64_t i = 0; i <= 5; ++i)
    for (std::int64_t j = 0; i + j <= 5; ++j)
      for (std::int64_t k = 0; k <= 5; ++k)
        for (std::int64_t l = 0; k + l <= 5; ++l) {
          Element expected = s.coalgebra->zero();
          if (i - j == k + l) expected.add_term(ManinKey{k, l}, GaussianRational(mu({i, j, k + l, 0})));
          const OperatorHandle op(s.coalgebra, s.form, s.coalgebra->unit(ManinKey{i, j}));
          EXPECT_EQ(co_toeplitz_apply(op, s.coalgebra->unit(ManinKey{k, l})), expected);
        }
}

TEST(ClosedForms, ManinOrthogonalWithComplexQ) {
  const Bound s("manin?q=(1+2i)", "manin-orth?w=poly:1");
  const WeightFamily w = WeightFamily::poly(1);
  for (std::int64_t i = 0; i <= 4; ++i)
    for (std::int64_t j = 0; j <= 2; ++j)
      for (std::int64_t k = 0; k <= 4; ++k)
        for (std::int64_t l = 0; l <= 2; ++l) {
          Element expected = s.coalgebra->zero();
          if (j == 0 && i == k + l) expected.add_term(ManinKey{k, l}, GaussianRational(w({i, j})));
          const OperatorHandle op(s.coalgebra, s.form, s.coalgebra->unit(ManinKey{i, j}));
          EXPECT_EQ(co_toeplitz_apply(op, s.coalgebra->unit(ManinKey{k, l})), expected);
        }
}
