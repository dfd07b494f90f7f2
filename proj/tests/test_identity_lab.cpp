#include <gtest/gtest.h>

#include "gen.hpp"

using namespace translie;

namespace {

// A_omega^delta with the LLM coefficient changed from (s - r) to (s - r + 1).
struct CorruptedBracket {
  BracketDef base = BracketDef::a_omega_delta();
  Element operator()(BasisSymbol x, BasisSymbol y, BasisSymbol z) const {
    auto t = sort_with_sign(x, y, z);
    if (!t) return {};
    const auto& [a, b, c] = t->args;
    if (a.is_l() && b.is_l() && c.is_m())
      return Element::term(L(a.index + b.index + c.index), Scalar(t->sign * (b.index - a.index + 1)));
    return base(x, y, z);
  }
};

// [L_r, L_s, M_t] = (s - r) L_{r+s+t} as given, without antisymmetrizing.
struct AsymmetricTable {
  Element operator()(BasisSymbol x, BasisSymbol y, BasisSymbol z) const {
    if (x.is_l() && y.is_l() && z.is_m()) return Element::term(L(x.index + y.index + z.index), y.index - x.index);
    return {};
  }
};

}  // namespace

TEST(FundamentalIdentity, AOmegaDelta) {
  auto r = check_fundamental_identity(BracketDef::a_omega_delta(), Window(-2, 2));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_run, 100000u);
  EXPECT_EQ(r.law, "fundamental-identity");
}

TEST(FundamentalIdentity, Afk) {
  EXPECT_TRUE(check_fundamental_identity(BracketDef::afk(0, {{0, 1}}), Window(-2, 2)).passed());
}

TEST(FundamentalIdentity, CorruptedBracketFailsWithResidual) {
  CheckOptions opts;
  opts.max_recorded = 4;
  auto r = check_fundamental_identity(CorruptedBracket{}, Window(-2, 2), opts);
  ASSERT_FALSE(r.passed());
  ASSERT_FALSE(r.violations.empty());
  EXPECT_LE(r.violations.size(), 4u);
  const auto& v = r.violations.front();
  EXPECT_FALSE(v.residual.empty());
  EXPECT_EQ(v.residual, v.lhs - v.rhs);
}

TEST(FundamentalIdentity, RandomizedIsSeedDeterministic) {
  CheckOptions opts;
  opts.mode = CheckMode::Randomized;
  opts.samples = 200;
  opts.seed = 7;
  auto a = check_fundamental_identity(CorruptedBracket{}, Window(0, 0), opts);
  auto b = check_fundamental_identity(CorruptedBracket{}, Window(0, 0), opts);
  EXPECT_EQ(a.cases_run, 200u);
  EXPECT_EQ(a.violation_count, b.violation_count);
  ASSERT_EQ(a.violations.size(), b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) EXPECT_EQ(a.violations[i].inputs, b.violations[i].inputs);
}

TEST(FundamentalIdentity, BudgetExceeded) {
  CheckOptions opts;
  opts.exhaustive_cap = 1000;
  EXPECT_THROW(check_fundamental_identity(BracketDef::a_omega_delta(), Window(-2, 2), opts), BudgetExceeded);
}

TEST(SkewSymmetry, Passes) {
  EXPECT_TRUE(check_skew_symmetry(BracketDef::a_omega_delta(), Window(-3, 3)).passed());
  EXPECT_TRUE(check_skew_symmetry(BracketDef::afk(2, {{0, 1}}), Window(-3, 3)).passed());
}

TEST(SkewSymmetry, AsymmetricTableFails) {
  EXPECT_FALSE(check_skew_symmetry(AsymmetricTable{}, Window(-1, 1)).passed());
}

TEST(OneThirdDerivation, HandInstance) {
  // D_1 on (L_0, L_1, M_0): D_1(L_1) = L_2 and (0 + 2 L_2 + L_2) / 3 = L_2.
  const auto b = BracketDef::a_omega_delta();
  const auto d1 = LinearOperator::d_cap(1);
  EXPECT_EQ(b(L(0), L(1), M(0)), Element(L(1)));
  EXPECT_EQ(operator_apply(d1, b(L(0), L(1), M(0))), Element(L(2)));
  Element rhs = bracket_eval(b, d1(L(0)), L(1), M(0)) + bracket_eval(b, L(0), d1(L(1)), M(0)) +
                bracket_eval(b, L(0), L(1), d1(M(0)));
  EXPECT_EQ(rhs * Scalar(1, 3), Element(L(2)));
}

TEST(OneThirdDerivation, ScalarMultipleIsTrivialExample) {
  EXPECT_TRUE(check_one_third_derivation(BracketDef::a_omega_delta(), LinearOperator::scaling(5), Window(-3, 3)).passed());
}

TEST(OneThirdDerivation, DegreeOperatorFails) {
  auto r = check_one_third_derivation(BracketDef::a_omega_delta(), LinearOperator::delta(), Window(-2, 2));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.violations.empty());
}

TEST(Derivation, DegreeOperatorAndWittDerivations) {
  EXPECT_TRUE(check_derivation(LinearOperator::delta(), Window(-5, 5)).passed());
  EXPECT_TRUE(check_derivation(LinearOperator::d_sub(3), Window(-5, 5)).passed());
  const auto a = ProductDef::algebra_a();
  const auto delta = LinearOperator::delta();
  EXPECT_EQ(operator_apply(delta, a(L(2), L(3))), Element::term(L(5), 5));
  EXPECT_EQ(product_eval(a, delta(L(2)), L(3)) + product_eval(a, L(2), delta(L(3))), Element::term(L(5), 5));
}

TEST(Derivation, OmegaIsNotADerivation) {
  EXPECT_FALSE(check_derivation(LinearOperator::omega(), Window(-1, 1)).passed());
}

TEST(Omega, InvolutiveMorphism) {
  EXPECT_TRUE(check_involution(LinearOperator::omega(), Window(-5, 5)).passed());
  EXPECT_TRUE(check_algebra_morphism(LinearOperator::omega(), Window(-5, 5)).passed());
  EXPECT_FALSE(check_involution(LinearOperator::d_cap(1), Window(-1, 1)).passed());
}

TEST(Relabel, Intertwines) { EXPECT_TRUE(check_relabel_intertwining(Window(-3, 3)).passed()); }

TEST(Compatibility, ZeroProductPassesBoth) {
  const auto b = BracketDef::afk(1, {{0, 1}});
  EXPECT_TRUE(check_tp_compatibility(b, ProductDef::zero(), Window(-1, 1)).passed());
  EXPECT_TRUE(check_poisson_compatibility(b, ProductDef::zero(), Window(-1, 1)).passed());
}

TEST(CommutativeAssociative, AlgebraA) {
  auto r = check_commutative_associative(ProductDef::algebra_a(), Window(-4, 4));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_run, 18u * 18u + 18u * 18u * 18u);
}

TEST(GeneratorClosure, LowGeneratorsSpan) {
  std::vector<Element> gens{L(-1), L(0), L(1), M(-1), M(0), M(1)};
  auto r = generator_closure(BracketDef::a_omega_delta(), gens, Window(-6, 6), 12);
  EXPECT_TRUE(r.spanned);
  EXPECT_TRUE(r.missing.empty());
}

TEST(GeneratorClosure, SingleGeneratorStalls) {
  auto r = generator_closure(BracketDef::a_omega_delta(), {Element(L(0))}, Window(-2, 2), 12);
  EXPECT_FALSE(r.spanned);
  EXPECT_EQ(r.span_dimension, 1u);
}

TEST(GeneratorClosure, LOnlyMissesEveryM) {
  auto r = generator_closure(BracketDef::a_omega_delta(), {L(-1), L(0), L(1)}, Window(-6, 6), 12);
  EXPECT_FALSE(r.spanned);
  for (auto s : Window(-6, 6).symbols())
    if (s.is_m()) {
      EXPECT_NE(std::find(r.missing.begin(), r.missing.end(), s), r.missing.end()) << s;
    }
}

TEST(GeneratorClosure, EmptyGeneratorsRejected) {
  EXPECT_THROW(generator_closure(BracketDef::a_omega_delta(), {}, Window(-1, 1), 3), DomainError);
}

// Adding generators never shrinks the span.
TEST(GeneratorClosureProperty, Monotone) {
  std::mt19937_64 rng(51);
  const Window w(-3, 3);
  const auto b = BracketDef::a_omega_delta();
  for (int n = 0; n < 20; ++n) {
    std::vector<Element> gens;
    for (int i = 0; i < 3; ++i) gens.emplace_back(gen::symbol(rng, Window(-1, 1)));
    auto small = generator_closure(b, gens, w, 30);
    gens.emplace_back(gen::symbol(rng, Window(-1, 1)));
    auto big = generator_closure(b, gens, w, 30);
    EXPECT_LE(big.missing.size(), small.missing.size());
    for (auto s : big.missing) EXPECT_NE(std::find(small.missing.begin(), small.missing.end(), s), small.missing.end());
  }
}
