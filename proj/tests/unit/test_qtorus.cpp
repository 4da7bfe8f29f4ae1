#include "qcluster/checks.hpp"
#include "qcluster/errors.hpp"
#include "qcluster/qtorus.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qcluster;

namespace {

Seed rank2(int eps12) {
    Seed s;
    s.ambient_dim = 2;
    s.basis = {{1, 0}, {0, 1}};
    s.form2 = {{0, 2 * eps12}, {-2 * eps12, 0}};
    return s;
}

TorusElement Y(const LVec& l, const QCoeff& c = 1) {
    return TorusElement::monomial(l, c);
}

}  // namespace

TEST(TorusElement, ProductRule) {
    const Seed s = rank2(1);
    // Y(a)Y(b) = v^{-form2(a,b)} Y(a+b)
    EXPECT_EQ(te_mul(Y({1, 0}), Y({0, 1}), s.form2), Y({1, 1}, QCoeff::v_power(-2)));
    EXPECT_EQ(te_mul(Y({0, 1}), Y({1, 0}), s.form2), Y({1, 1}, QCoeff::v_power(2)));
    EXPECT_EQ(te_commutator(Y({1, 0}), Y({2, 0}), s.form2), TorusElement(2));
}

TEST(TorusElement, MultiplicationIsAssociative) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-2, 2);
    const IntMatrix form{{0, 2, -4}, {-2, 0, 2}, {4, -2, 0}};
    auto rnd = [&]() {
        TorusElement x(3);
        for (int k = 0; k < 3; ++k) x.add_term({c(rng), c(rng), c(rng)}, QCoeff::v_power(c(rng), c(rng)));
        return x;
    };
    for (int t = 0; t < 30; ++t) {
        const auto a = rnd(), b = rnd(), d = rnd();
        EXPECT_EQ(te_mul(te_mul(a, b, form), d, form), te_mul(a, te_mul(b, d, form), form));
    }
}

TEST(Mutation, SinkMonomialExpands) {
    // mu_1 of Y(e2) with eps_12 = 1: one factor (1 + q x), x = Y(-e1).
    const Seed s = rank2(1);
    const auto r = mutate_element(Y({0, 1}), s, 0);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->size(), 2u);
    EXPECT_EQ(r->coefficient({0, 1}), QCoeff(1));
}

TEST(Mutation, HeadOfArrowFails) {
    const Seed s = rank2(1);
    EXPECT_FALSE(mutate_element(Y({1, 0}), s, 1));
    const CheckReport r = laurent_negative_control({8, 20, 1, 1});
    EXPECT_TRUE(r.pass);
}

TEST(Mutation, MutatingTwiceReturns) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> e(-2, 2), c(-1, 1);
    for (int t = 0; t < 200; ++t) {
        Seed s;
        s.ambient_dim = 3;
        s.basis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        const int a = e(rng), b = e(rng), d = e(rng);
        s.form2 = {{0, 2 * a, 2 * b}, {-2 * a, 0, 2 * d}, {-2 * b, -2 * d, 0}};
        const TorusElement x = Y({c(rng), c(rng), c(rng)});
        const int k = t % 3;
        if (!mutate_element(x, s, k)) continue;
        // Transported back to the initial basis, mu_k mu_k is the identity.
        const SequenceResult r = apply_sequence(x, s, MutationSeq{{k, k}, std::vector<int>{0, 1, 2}});
        ASSERT_TRUE(r.element);
        EXPECT_EQ(*r.element, x) << r.element->str() << " vs " << x.str();
    }
}

TEST(Mutation, PentagonOnClusterVariables) {
    // A2: five alternating mutations and a transposition restore the seed, and
    // cluster variables stay Laurent along the way.
    const Seed s = rank2(1);
    const IntMatrix M(2, std::vector<int>(2, 0));
    MutationSeq seq{{0, 1, 0, 1, 0}, std::vector<int>{1, 0}};
    for (int k = 0; k < 2; ++k) {
        const TorusElement a = a_variable(s, M, k);
        const SequenceResult r = apply_sequence(a, s, seq);
        ASSERT_TRUE(r.element) << k;
        EXPECT_EQ(exchange_matrix(r.seed), exchange_matrix(s));
        const LaurentReport lr = verify_universally_laurent(a, s, 10, 30, 4);
        EXPECT_TRUE(lr.pass);
    }
}

TEST(Mutation, EnsembleNeedsUnimodularity) {
    const Seed s = rank2(2);
    const IntMatrix M(2, std::vector<int>(2, 0));
    EXPECT_THROW(a_variable(s, M, 0), NotUnimodular);
}

TEST(Sums, ChainAndSubsets) {
    const LVec l0{1, 1, 1};
    const TorusElement ch = chain_sum(l0, {{1, 0, 0}, {0, 1, 0}});
    EXPECT_EQ(ch, Y({1, 1, 1}) + Y({0, 1, 1}) + Y({0, 0, 1}));
    const std::vector<LVec> vs{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    EXPECT_EQ(subset_sum(l0, vs, 0), Y(l0));
    EXPECT_EQ(subset_sum(l0, vs, 2).size(), 3u);
    EXPECT_EQ(subset_sum(l0, vs, 3), Y({0, 0, 0}));
}

TEST(Fuzzing, ResultIndependentOfThreadCount) {
    const Seed s = rank2(2);
    const TorusElement x = Y({1, 0}) + Y({0, 1});
    const LaurentReport a = verify_universally_laurent(x, s, 6, 40, 9, 1);
    const LaurentReport b = verify_universally_laurent(x, s, 6, 40, 9, 4);
    EXPECT_EQ(a.pass, b.pass);
    EXPECT_EQ(a.failing_trial, b.failing_trial);
    EXPECT_EQ(a.failing_sequence, b.failing_sequence);
}
