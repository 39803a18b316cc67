#include "cotq/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <tuple>

#include "cotq/instances.hpp"
#include "cotq/parser.hpp"

namespace cotq {

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ExpectedFail: return "expected-fail";
  }
  return "fail";
}

std::size_t VerificationReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [&](const CheckRecord& r) { return r.status == status; }));
}

namespace {

using Outcome = std::optional<std::string>;
using Rng = std::mt19937_64;

constexpr int kAntilinearityTrials = 100;
constexpr int kRandomProbes = 20;
constexpr int kProjectionTrials = 20;

GaussianRational random_scalar(Rng& rng) {
  std::uniform_int_distribution<long> num(-10, 10);
  std::uniform_int_distribution<long> den(1, 10);
  return {Rational(BigInt(num(rng)), BigInt(den(rng))), Rational(BigInt(num(rng)), BigInt(den(rng)))};
}

Element random_element(Rng& rng, const Coalgebra& c, const std::vector<BasisKey>& keys, int terms = 3) {
  Element e = c.zero();
  if (keys.empty()) return e;
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  for (int t = 0; t < terms; ++t) e.add_term(keys[pick(rng)], random_scalar(rng));
  return e;
}

std::string mismatch(const std::string& what, const Element& got, const Element& want) {
  return what + ": got " + render_element(got) + ", expected " + render_element(want);
}

Element apply_key(const OperatorHandle& op, const BasisKey& k) {
  return co_toeplitz_apply(op, op.coalgebra().unit(k));
}

OperatorHandle basis_operator(const CoalgebraPtr& c, const FormPtr& f, const BasisKey& symbol) {
  return OperatorHandle(c, f, c->unit(symbol));
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : rng(options.seed) {}

  void run(std::string id, const Coalgebra& coalgebra, std::string form, std::string parameters,
           const std::function<Outcome()>& body, bool expect_failure = false) {
    CheckRecord record{std::move(id), coalgebra.spec(), std::move(form), std::move(parameters),
                       CheckStatus::Pass, std::nullopt, 0.0};
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = body();
    } catch (const Error& e) {
      outcome = std::string(to_string(e.kind())) + ": " + e.what();
      expect_failure = false;
    } catch (const std::exception& e) {
      outcome = std::string("exception: ") + e.what();
      expect_failure = false;
    }
    record.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (expect_failure) {
      record.status = outcome ? CheckStatus::ExpectedFail : CheckStatus::Fail;
      record.witness = outcome ? *outcome : std::string("expected failure did not occur");
    } else {
      record.status = outcome ? CheckStatus::Fail : CheckStatus::Pass;
      record.witness = outcome;
    }
    records.push_back(std::move(record));
  }

  Rng rng;
  std::vector<CheckRecord> records;
};

// --- shared checks ----------------------------------------------------------

Outcome antilinearity(Suite& s, const CoalgebraPtr& c, const FormPtr& f, const BasisWindow& window) {
  std::vector<Element> probes;
  for (const auto& k : window.keys()) probes.push_back(c->unit(k));
  for (int p = 0; p < kRandomProbes; ++p) probes.push_back(random_element(s.rng, *c, window.keys()));
  for (int trial = 0; trial < kAntilinearityTrials; ++trial) {
    const GaussianRational alpha = random_scalar(s.rng);
    const Element g = random_element(s.rng, *c, window.keys());
    const Element h = random_element(s.rng, *c, window.keys());
    if (auto bad = verify_antilinearity(c, f, g, h, alpha, probes)) {
      return "alpha=" + to_string(alpha) + ", g=" + render_element(g) + ", h=" + render_element(h) +
             ", phi=" + render_element(bad->probe) + ": " + render_element(bad->lhs) +
             " != " + render_element(bad->rhs);
    }
  }
  return std::nullopt;
}

Outcome pipeline_coherence(Suite& s, const CoalgebraPtr& c, const FormPtr& f, const BasisWindow& window) {
  const auto& keys = window.keys();
  const ProjectionPair everything = ProjectionPair::where([](const BasisKey&) { return true; }, "all");
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < kProjectionTrials; ++trial) {
    std::set<BasisKey> subset;
    for (const auto& k : keys) {
      if (coin(s.rng)) subset.insert(k);
    }
    const ProjectionPair p = ProjectionPair::of(subset);
    const std::vector<BasisKey> inside(subset.begin(), subset.end());
    const Element e = random_element(s.rng, *c, inside);
    if (p.project(p.include(e)) != e) return "Q∘j != id on " + render_element(e);

    const Element g = random_element(s.rng, *c, keys);
    const OperatorHandle full(c, f, g);
    const OperatorHandle filtered(c, f, g, everything);
    const OperatorHandle restricted(c, f, g, p);
    for (const auto& k : keys) {
      const Element phi = c->unit(k);
      const std::string simple = to_json(co_toeplitz_apply_simple(*c, *f, g, phi)).dump();
      if (to_json(co_toeplitz_apply(full, phi)).dump() != simple ||
          to_json(co_toeplitz_apply(filtered, phi)).dump() != simple) {
        return "general pipeline with S = full basis differs from pi_g Delta at " + to_string(k);
      }
      if (subset.count(k) != 0) {
        const Element want = p.project(co_toeplitz_apply_simple(*c, *f, g, phi));
        const Element got = co_toeplitz_apply(restricted, phi);
        if (got != want) return mismatch("restricted pipeline on " + to_string(k), got, want);
      }
    }
  }
  return std::nullopt;
}

Outcome gram_positive(const FormPtr& f, const BasisWindow& window, bool expect_pd) {
  const GramResult g = gram_matrix(*f, window);
  if (!g.hermitian) return "Gram matrix is not Hermitian";
  const bool pd = is_positive_definite(g.entries);
  if (pd != expect_pd) {
    return std::string("Gram matrix is ") + (pd ? "" : "not ") + "positive definite on " +
           window.description();
  }
  return std::nullopt;
}

std::string render_witnesses(const std::vector<CoassociativityWitness>& ws) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += "; ";
    out += to_string(w.key) + " : " + render_triple(w.difference);
  }
  return out;
}

Outcome coassociative(const Coalgebra& c, const BasisWindow& window) {
  const auto ws = check_coassociativity(c, window);
  if (ws.empty()) return std::nullopt;
  return render_witnesses(ws);
}

Outcome star_duality(const CoalgebraPtr& c, const FormPtr& f, const BasisWindow& window) {
  for (const auto& k : window.keys()) {
    const Classification a = classify_shift(basis_operator(c, f, k), window);
    if (a.kind == Classification::Kind::Zero) continue;
    const Classification b = classify_shift(basis_operator(c, f, *c->star(k)), window);
    if (a.shifts.size() != 1 || b.shifts.size() != 1 || *a.shifts.begin() != -*b.shifts.begin()) {
      return "shift of C_" + to_string(k) + " is " + a.describe() + ", of its star " + b.describe();
    }
  }
  return std::nullopt;
}

Classification expected_by_shift(std::int64_t shift) {
  Classification c;
  c.shifts = {shift};
  c.kind = shift == 0 ? Classification::Kind::Preservation
                      : (shift > 0 ? Classification::Kind::Creation : Classification::Kind::Annihilation);
  return c;
}

Outcome holomorphy_matches(const CoalgebraPtr& c, const FormPtr& f, const BasisWindow& window) {
  for (const auto& k : window.keys()) {
    const Classification cls = classify_shift(basis_operator(c, f, k), window);
    const Holomorphy h = holomorphic_class(*c, k);
    const bool ok = (h == Holomorphy::Holomorphic && cls.kind == Classification::Kind::Annihilation) ||
                    (h == Holomorphy::AntiHolomorphic && cls.kind == Classification::Kind::Creation) ||
                    ((h == Holomorphy::Real || h == Holomorphy::None) &&
                     cls.kind == Classification::Kind::Preservation);
    if (!ok) return to_string(k) + " is " + std::string(to_string(h)) + " but C is " + cls.describe();
  }
  return std::nullopt;
}

// --- divided power ----------------------------------------------------------

void divided_power_checks(Suite& s) {
  const CoalgebraPtr c = make_divided_power();
  const std::vector<WeightFamily> weights = {WeightFamily::one(), WeightFamily::factorial(),
                                             WeightFamily::geom(Rational(BigInt(1), BigInt(2)))};
  const BasisWindow window25 = BasisWindow::up_to_degree(*c, 25);

  for (const auto& w : weights) {
    const FormPtr f = make_form({FormSpec::Kind::Diagonal, w}, *c);
    s.run("divpow.closed-form", *c, f->spec(), "k,n<=25", [&]() -> Outcome {
      for (std::int64_t k = 0; k <= 25; ++k) {
        const OperatorHandle op = basis_operator(c, f, DividedKey{k});
        for (std::int64_t n = 0; n <= 25; ++n) {
          const Element got = apply_key(op, DividedKey{n});
          const Element want = k <= n ? c->monomial(DividedKey{n - k}, w(k)) : c->zero();
          if (got != want) return mismatch("C_x_" + std::to_string(k) + "(x_" + std::to_string(n) + ")", got, want);
        }
      }
      return std::nullopt;
    });
    s.run("divpow.classification", *c, f->spec(), "k<=25,window=deg<=25", [&]() -> Outcome {
      for (std::int64_t k = 0; k <= 25; ++k) {
        const Classification got = classify_shift(basis_operator(c, f, DividedKey{k}), window25);
        if (got != expected_by_shift(-k)) return "C_x_" + std::to_string(k) + " is " + got.describe();
      }
      return std::nullopt;
    });
    s.run("divpow.eigenvalues-x0", *c, f->spec(), "window=deg<=25", [&]() -> Outcome {
      const auto eig = diagonal_eigenvalues(operator_matrix(basis_operator(c, f, DividedKey{0}), window25));
      if (eig != std::vector<Eigenvalue>{{w(0), window25.size()}}) return "C_x_0 is not w(0)·id";
      return std::nullopt;
    });
    s.run("divpow.gram-positive-definite", *c, f->spec(), "window=deg<=12",
          [&] { return gram_positive(f, BasisWindow::up_to_degree(*c, 12), true); });
  }

  {
    const FormPtr f = make_form({FormSpec::Kind::Diagonal, WeightFamily::factorial()}, *c);
    s.run("divpow.commutation", *c, f->spec(), "k,l,n<=12", [&]() -> Outcome {
      for (std::int64_t k = 0; k <= 12; ++k) {
        for (std::int64_t l = 0; l <= 12; ++l) {
          const OperatorHandle a = basis_operator(c, f, DividedKey{k});
          const OperatorHandle b = basis_operator(c, f, DividedKey{l});
          for (std::int64_t n = 0; n <= 12; ++n) {
            const Element phi = c->unit(DividedKey{n});
            const Element ab = compose_apply({a, b}, phi);
            const Element ba = compose_apply({b, a}, phi);
            if (ab != ba) return mismatch("commutator on x_" + std::to_string(n), ab, ba);
          }
        }
      }
      return std::nullopt;
    });
    s.run("divpow.antilinearity", *c, f->spec(), "trials=100,window=deg<=6",
          [&] { return antilinearity(s, c, f, BasisWindow::up_to_degree(*c, 6)); });
    s.run("divpow.pipeline-coherence", *c, f->spec(), "subsets=20,window=deg<=8",
          [&] { return pipeline_coherence(s, c, f, BasisWindow::up_to_degree(*c, 8)); });
  }

  s.run("divpow.coassociativity", *c, "-", "n<=25", [&] { return coassociative(*c, window25); });
}

// --- negative degrees -------------------------------------------------------

void negative_degree_checks(Suite& s) {
  const std::int64_t m = 5;
  const CoalgebraPtr c = make_negative_degree(m);
  const BasisWindow full = BasisWindow::full(*c);
  const std::vector<WeightFamily> weights = {WeightFamily::one(),
                                             WeightFamily::geom(Rational(BigInt(1), BigInt(3))),
                                             WeightFamily::abs_factorial()};
  for (const auto& w : weights) {
    const FormPtr f = make_form({FormSpec::Kind::Diagonal, w}, *c);
    s.run("negdeg.closed-form", *c, f->spec(), "|k|,|n|<=5", [&]() -> Outcome {
      for (std::int64_t k = -m; k <= m; ++k) {
        const OperatorHandle op = basis_operator(c, f, NegDegKey{k});
        for (std::int64_t n = -m; n <= m; ++n) {
          const std::int64_t out = n - k;
          const Element got = apply_key(op, NegDegKey{n});
          const Element want = (out >= -m && out <= m) ? c->monomial(NegDegKey{out}, w(k)) : c->zero();
          if (got != want) return mismatch("C_x_" + std::to_string(k) + "(x_" + std::to_string(n) + ")", got, want);
        }
      }
      return std::nullopt;
    });
    s.run("negdeg.trichotomy", *c, f->spec(), "|k|<=5,window=full", [&]() -> Outcome {
      for (std::int64_t k = -m; k <= m; ++k) {
        const Classification got = classify_shift(basis_operator(c, f, NegDegKey{k}), full);
        if (got != expected_by_shift(-k)) return "C_x_" + std::to_string(k) + " is " + got.describe();
      }
      return std::nullopt;
    });
    s.run("negdeg.gram-positive-definite", *c, f->spec(), "window=full",
          [&] { return gram_positive(f, full, true); });
  }

  const FormPtr f = make_form({FormSpec::Kind::Diagonal, WeightFamily::abs_factorial()}, *c);
  s.run("negdeg.star-duality", *c, f->spec(), "window=full", [&] { return star_duality(c, f, full); });
  s.run("negdeg.holomorphic-classes", *c, f->spec(), "window=full",
        [&] { return holomorphy_matches(c, f, full); });
  s.run("negdeg.antilinearity", *c, f->spec(), "trials=100,window=full",
        [&] { return antilinearity(s, c, f, full); });
  s.run("negdeg.pipeline-coherence", *c, f->spec(), "subsets=20,window=full",
        [&] { return pipeline_coherence(s, c, f, full); });

  for (std::int64_t small = 1; small <= 3; ++small) {
    const CoalgebraPtr t = make_negative_degree(small);
    s.run("negdeg.coassociativity", *t, "-", "window=full",
          [&] { return coassociative(*t, BasisWindow::full(*t)); }, /*expect_failure=*/true);
  }
}

// --- Manin quantum plane -----------------------------------------------------

// Normal-orders a word in {a, c} with the rule ca -> q^{-1} ac, one adjacent
// swap at a time.
std::pair<GaussianRational, ManinKey> rewrite_word(std::string word, const GaussianRational& q) {
  GaussianRational factor(1);
  const GaussianRational q_inv = q.inverse();
  for (std::size_t pos = word.find("ca"); pos != std::string::npos; pos = word.find("ca")) {
    word[pos] = 'a';
    word[pos + 1] = 'c';
    factor *= q_inv;
  }
  const auto a = static_cast<std::int64_t>(std::count(word.begin(), word.end(), 'a'));
  return {factor, ManinKey{a, static_cast<std::int64_t>(word.size()) - a}};
}

std::string word_of(const ManinKey& k) {
  return std::string(static_cast<std::size_t>(k.i), 'a') + std::string(static_cast<std::size_t>(k.j), 'c');
}

void manin_checks(Suite& s, const GaussianRational& q) {
  const auto plane = make_manin(q);
  const CoalgebraPtr c = plane;
  const BasisWindow window8 = BasisWindow::up_to_degree(*c, 8);
  const BasisWindow window6 = BasisWindow::up_to_degree(*c, 6);

  for (const auto& w : {WeightFamily::one(), WeightFamily::factorial()}) {
    const FormPtr f = make_form({FormSpec::Kind::ManinOrthogonal, w}, *c);
    s.run("manin.orth-closed-form", *c, f->spec(), "i+j<=8,window=deg<=8", [&]() -> Outcome {
      for (const auto& sym : window8.keys()) {
        const auto& g = sym.as<ManinKey>();
        const OperatorHandle op = basis_operator(c, f, sym);
        for (const auto& in : window8.keys()) {
          const auto& x = in.as<ManinKey>();
          const bool hit = g.i == x.i + x.j && g.j == 0;
          const Element want = hit ? c->monomial(in, w({g.i, g.j})) : c->zero();
          const Element got = apply_key(op, in);
          if (got != want) return mismatch("C_" + to_string(sym) + "(" + to_string(in) + ")", got, want);
        }
      }
      return std::nullopt;
    });
    s.run("manin.orth-vanishing", *c, f->spec(), "j>0,i+j<=8,window=deg<=8", [&]() -> Outcome {
      for (const auto& sym : window8.keys()) {
        if (sym.as<ManinKey>().j == 0) continue;
        const MatrixResult m = operator_matrix(basis_operator(c, f, sym), window8);
        const bool zero = m.leakage.empty() && std::all_of(m.entries.begin(), m.entries.end(), [](const auto& row) {
          return std::all_of(row.begin(), row.end(), [](const GaussianRational& z) { return z.is_zero(); });
        });
        if (!zero) return "C_" + to_string(sym) + " is not zero";
      }
      return std::nullopt;
    });
    s.run("manin.orth-eigenvalues", *c, f->spec(), "i<=8,window=deg<=8", [&]() -> Outcome {
      for (std::int64_t i = 0; i <= 8; ++i) {
        const auto got = diagonal_eigenvalues(operator_matrix(basis_operator(c, f, ManinKey{i, 0}), window8));
        const auto mult = static_cast<std::size_t>(i + 1);
        const std::vector<Eigenvalue> want = {{GaussianRational(0), window8.size() - mult},
                                              {w({i, 0}), mult}};
        if (got != want) return "eigenvalues of C_a^" + std::to_string(i) + " differ";
      }
      return std::nullopt;
    });
    s.run("manin.gram-positive-definite", *c, f->spec(), "window=deg<=4",
          [&] { return gram_positive(f, BasisWindow::up_to_degree(*c, 4), true); });
  }

  for (const auto& mu : {WeightFamily::one(), WeightFamily::geom(Rational(2))}) {
    const FormPtr f = make_form({FormSpec::Kind::ManinSkew, mu}, *c);
    s.run("manin.skew-closed-form", *c, f->spec(), "i+j<=6,window=deg<=6", [&]() -> Outcome {
      for (const auto& sym : window6.keys()) {
        const auto& g = sym.as<ManinKey>();
        const OperatorHandle op = basis_operator(c, f, sym);
        for (const auto& in : window6.keys()) {
          const auto& x = in.as<ManinKey>();
          const std::int64_t d = x.i + x.j;
          const Element want = g.i - g.j == d ? c->monomial(in, mu({g.i, g.j, d, 0})) : c->zero();
          const Element got = apply_key(op, in);
          if (got != want) return mismatch("C_" + to_string(sym) + "(" + to_string(in) + ")", got, want);
        }
      }
      return std::nullopt;
    });
    s.run("manin.skew-eigenvalues", *c, f->spec(), "i+j<=6,window=deg<=6", [&]() -> Outcome {
      for (const auto& sym : window6.keys()) {
        const auto& g = sym.as<ManinKey>();
        const OperatorHandle op = basis_operator(c, f, sym);
        const auto got = diagonal_eigenvalues(operator_matrix(op, window6));
        std::vector<Eigenvalue> want;
        if (g.i < g.j) {
          want = {{GaussianRational(0), window6.size()}};
          if (classify_shift(op, window6).kind != Classification::Kind::Zero) {
            return "C_" + to_string(sym) + " should vanish since i < j";
          }
        } else {
          const std::int64_t d = g.i - g.j;
          const auto mult = static_cast<std::size_t>(d + 1);
          want = {{GaussianRational(0), window6.size() - mult}, {mu({g.i, g.j, d, 0}), mult}};
        }
        if (got != want) return "eigenvalues of C_" + to_string(sym) + " differ";
      }
      return std::nullopt;
    });
  }

  {
    const FormPtr skew = make_form({FormSpec::Kind::ManinSkew, WeightFamily::one()}, *c);
    s.run("manin.gram-skew-singular", *c, skew->spec(), "window=deg<=2",
          [&] { return gram_positive(skew, BasisWindow::up_to_degree(*c, 2), false); });
    s.run("manin.antilinearity", *c, skew->spec(), "trials=100,window=deg<=3",
          [&] { return antilinearity(s, c, skew, BasisWindow::up_to_degree(*c, 3)); });
    const FormPtr orth = make_form({FormSpec::Kind::ManinOrthogonal, WeightFamily::factorial()}, *c);
    s.run("manin.antilinearity", *c, orth->spec(), "trials=100,window=deg<=3",
          [&] { return antilinearity(s, c, orth, BasisWindow::up_to_degree(*c, 3)); });
    s.run("manin.pipeline-coherence", *c, orth->spec(), "subsets=20,window=deg<=4",
          [&] { return pipeline_coherence(s, c, orth, BasisWindow::up_to_degree(*c, 4)); });
  }

  s.run("manin.coassociativity", *c, "-", "deg<=8", [&] { return coassociative(*c, window8); });

  const BasisWindow window5 = BasisWindow::up_to_degree(*c, 5);
  s.run("manin.normal-ordering", *c, "-", "deg<=5", [&]() -> Outcome {
    for (const auto& u : window5.keys()) {
      for (const auto& v : window5.keys()) {
        const auto got = manin_product(u.as<ManinKey>(), v.as<ManinKey>(), q);
        const auto want = rewrite_word(word_of(u.as<ManinKey>()) + word_of(v.as<ManinKey>()), q);
        if (got.first != want.first || !(got.second == want.second)) {
          return to_string(u) + " · " + to_string(v) + " disagrees with word rewriting";
        }
      }
    }
    return std::nullopt;
  });
  s.run("manin.delta-morphism", *c, "-", "deg<=5", [&]() -> Outcome {
    for (const auto& u : window5.keys()) {
      for (const auto& v : window5.keys()) {
        const TensorElement lhs = comul_extend(*c, plane->multiply(c->unit(u), c->unit(v)));
        const TensorElement rhs = plane->multiply(c->comul(u), c->comul(v));
        if (lhs != rhs) {
          return "Delta(" + to_string(u) + " · " + to_string(v) + ") = " + render_tensor(lhs) +
                 " but Delta(u)Delta(v) = " + render_tensor(rhs);
        }
      }
    }
    const Element a = c->unit(ManinKey{1, 0});
    const Element cc = c->unit(ManinKey{0, 1});
    const TensorElement relation =
        comul_extend(*c, plane->multiply(a, cc)) - q * comul_extend(*c, plane->multiply(cc, a));
    if (!relation.is_zero()) return "Delta(ac - q ca) = " + render_tensor(relation);
    return std::nullopt;
  });
}

// --- matrix coalgebra -------------------------------------------------------

void matrix_checks(Suite& s) {
  for (std::int64_t n = 1; n <= 6; ++n) {
    const CoalgebraPtr c = make_matrix(n);
    const BasisWindow full = BasisWindow::full(*c);
    const FormPtr orth = make_form({FormSpec::Kind::MatrixOrthonormal, WeightFamily::one()}, *c);

    s.run("matrix.orth-closed-form", *c, orth->spec(), "all r,s,i,j", [&]() -> Outcome {
      for (const auto& sym : full.keys()) {
        const auto& g = sym.as<MatrixKey>();
        const OperatorHandle op = basis_operator(c, orth, sym);
        for (const auto& in : full.keys()) {
          const auto& x = in.as<MatrixKey>();
          const Element want = g.j == x.j ? c->unit(MatrixKey{x.i, g.i}) : c->zero();
          const Element got = apply_key(op, in);
          if (got != want) return mismatch("C_" + to_string(sym) + "(" + to_string(in) + ")", got, want);
        }
      }
      return std::nullopt;
    });
    s.run("matrix.composition-rule", *c, orth->spec(), "all r,s,u,v,window=full", [&]() -> Outcome {
      for (const auto& left : full.keys()) {
        const auto& rs = left.as<MatrixKey>();
        const OperatorHandle a = basis_operator(c, orth, left);
        for (const auto& right : full.keys()) {
          const auto& uv = right.as<MatrixKey>();
          const OperatorHandle b = basis_operator(c, orth, right);
          const OperatorHandle rv = basis_operator(c, orth, MatrixKey{rs.i, uv.j});
          for (const auto& in : full.keys()) {
            const Element got = compose_apply({a, b}, c->unit(in));
            const Element want = rs.j == uv.i ? apply_key(rv, in) : c->zero();
            if (got != want) {
              return mismatch("C_" + to_string(left) + "∘C_" + to_string(right) + "(" + to_string(in) + ")",
                              got, want);
            }
          }
        }
      }
      return std::nullopt;
    });
    s.run("matrix.gram-positive-definite", *c, orth->spec(), "window=full",
          [&] { return gram_positive(orth, full, true); });
    s.run("matrix.coassociativity", *c, "-", "window=full", [&] { return coassociative(*c, full); });

    for (const auto& w : {WeightFamily::one(), WeightFamily::geom(Rational(2))}) {
      const FormPtr f = make_form({FormSpec::Kind::MatrixWeighted, w}, *c);
      s.run("matrix.weighted-closed-form", *c, f->spec(), "all r,s,i,j", [&]() -> Outcome {
        for (const auto& sym : full.keys()) {
          const auto& g = sym.as<MatrixKey>();
          const OperatorHandle op = basis_operator(c, f, sym);
          for (const auto& in : full.keys()) {
            const auto& x = in.as<MatrixKey>();
            const std::int64_t col = x.j + g.i - g.j;
            const Element want =
                (col >= 1 && col <= n) ? c->monomial(MatrixKey{x.i, col}, w(g.i + x.j)) : c->zero();
            const Element got = apply_key(op, in);
            if (got != want) return mismatch("C_" + to_string(sym) + "(" + to_string(in) + ")", got, want);
          }
        }
        return std::nullopt;
      });
      s.run("matrix.weighted-classification", *c, f->spec(), "all symbols,window=full", [&]() -> Outcome {
        for (const auto& sym : full.keys()) {
          const auto& g = sym.as<MatrixKey>();
          const Classification got = classify_shift(basis_operator(c, f, sym), full);
          if (got != expected_by_shift(g.i - g.j)) return "C_" + to_string(sym) + " is " + got.describe();
        }
        return std::nullopt;
      });
      s.run("matrix.weighted-hermitian", *c, f->spec(), "window=full", [&]() -> Outcome {
        if (!gram_matrix(*f, full).hermitian) return "weighted Gram matrix is not Hermitian";
        return std::nullopt;
      });
      s.run("matrix.star-duality", *c, f->spec(), "window=full", [&] { return star_duality(c, f, full); });
      s.run("matrix.holomorphic-classes", *c, f->spec(), "window=full",
            [&] { return holomorphy_matches(c, f, full); });
    }
  }

  const CoalgebraPtr c3 = make_matrix(3);
  const BasisWindow full3 = BasisWindow::full(*c3);
  for (const auto& spec : {FormSpec{FormSpec::Kind::MatrixOrthonormal, WeightFamily::one()},
                           FormSpec{FormSpec::Kind::MatrixWeighted, WeightFamily::geom(Rational(2))}}) {
    const FormPtr f = make_form(spec, *c3);
    s.run("matrix.antilinearity", *c3, f->spec(), "trials=100,window=full",
          [&] { return antilinearity(s, c3, f, full3); });
    s.run("matrix.pipeline-coherence", *c3, f->spec(), "subsets=20,window=full",
          [&] { return pipeline_coherence(s, c3, f, full3); });
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
  const std::string& scope = options.scope;
  if (scope != "all" && scope != "manin" && scope != "divpow" && scope != "negdeg" && scope != "matrix") {
    throw Error(ErrorKind::InvalidParameter, "unknown verify scope '" + scope + "'");
  }
  const GaussianRational q = parse_scalar(options.q);
  Suite suite(options);
  if (scope == "all" || scope == "divpow") divided_power_checks(suite);
  if (scope == "all" || scope == "negdeg") negative_degree_checks(suite);
  if (scope == "all" || scope == "manin") manin_checks(suite, q);
  if (scope == "all" || scope == "matrix") matrix_checks(suite);

  VerificationReport report{options, std::move(suite.records)};
  std::stable_sort(report.records.begin(), report.records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.id, a.coalgebra, a.form, a.parameters) < std::tie(b.id, b.coalgebra, b.form, b.parameters);
  });
  return report;
}

Json to_json(const VerificationReport& report, bool timing) {
  Json j;
  j["scope"] = report.options.scope;
  j["seed"] = report.options.seed;
  j["defaults"] = {{"q", report.options.q}, {"weight", "one"}};
  j["records"] = Json::array();
  for (const auto& r : report.records) {
    Json rec;
    rec["check"] = r.id;
    rec["coalgebra"] = r.coalgebra;
    rec["form"] = r.form;
    rec["parameters"] = r.parameters;
    rec["status"] = std::string(to_string(r.status));
    rec["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    if (timing) rec["elapsed_ms"] = r.elapsed_ms;
    j["records"].push_back(std::move(rec));
  }
  j["summary"] = {{"total", report.records.size()},
                  {"pass", report.count(CheckStatus::Pass)},
                  {"expected_fail", report.count(CheckStatus::ExpectedFail)},
                  {"fail", report.count(CheckStatus::Fail)}};
  return j;
}

std::string to_text(const VerificationReport& report, bool timing, bool color) {
  std::string out = "verify scope=" + report.options.scope + " seed=" + std::to_string(report.options.seed) +
                    " q=" + report.options.q + " weight=one\n";
  for (const auto& r : report.records) {
    std::string status(to_string(r.status));
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    std::string label = pad(status, 14);
    if (color) {
      const char* code = r.status == CheckStatus::Pass ? "\033[32m"
                         : r.status == CheckStatus::Fail ? "\033[31m" : "\033[33m";
      label = code + label + "\033[0m";
    }
    out += label + pad(r.id, 34) + pad(r.coalgebra, 14) + pad(r.form, 26) + r.parameters;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  %.1f ms", r.elapsed_ms);
      out += buf;
    }
    out += "\n";
    if (r.witness) out += "              witness: " + *r.witness + "\n";
  }
  out += "summary: " + std::to_string(report.records.size()) + " checks, " +
         std::to_string(report.count(CheckStatus::Pass)) + " pass, " +
         std::to_string(report.count(CheckStatus::ExpectedFail)) + " expected-fail, " +
         std::to_string(report.count(CheckStatus::Fail)) + " fail\n";
  return out;
}

std::string to_csv(const VerificationReport& report, bool timing) {
  std::string out = "check,coalgebra,form,parameters,status,witness";
  if (timing) out += ",elapsed_ms";
  out += "\n";
  for (const auto& r : report.records) {
    out += csv_field(r.id) + "," + csv_field(r.coalgebra) + "," + csv_field(r.form) + "," +
           csv_field(r.parameters) + "," + std::string(to_string(r.status)) + "," +
           csv_field(r.witness.value_or(""));
    if (timing) out += "," + std::to_string(r.elapsed_ms);
    out += "\n";
  }
  return out;
}

}  // namespace cotq
