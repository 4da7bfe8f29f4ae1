#include "qcluster/toda.hpp"

#include <gtest/gtest.h>

using namespace qcluster;

namespace {

void expect_all_pass(const std::vector<CheckReport>& reps) {
    ASSERT_FALSE(reps.empty());
    for (const auto& r : reps) EXPECT_TRUE(r.pass) << r.check << " " << r.inputs << "\n" << r.lhs << "\n" << r.rhs;
}

}  // namespace

TEST(Hamiltonians, TermCounts) {
    EXPECT_EQ(hamiltonian(3, 0).size(), 1u);
    EXPECT_EQ(hamiltonian(3, 2).size(), 5u);
    EXPECT_EQ(hamiltonians(3).size(), 4u);
}

TEST(Hamiltonians, Commute) {
    for (int n = 2; n <= 4; ++n) expect_all_pass(verify_commutativity(n));
}

TEST(Hamiltonians, ThetaIdentity) {
    for (int n = 2; n <= 3; ++n) expect_all_pass(verify_htilde(n));
}

TEST(Hamiltonians, ThetaIsAnInvolution) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& h : hamiltonians(n)) EXPECT_EQ(theta(n, theta(n, h)), h);
}

TEST(FrozenTrick, ExpansionAndLabels) {
    for (int n = 2; n <= 3; ++n) expect_all_pass(verify_frozen_trick(n));
}

TEST(Dehn, FixesHamiltonians) {
    for (int n = 2; n <= 3; ++n) expect_all_pass(verify_dehn_invariance(n));
}
