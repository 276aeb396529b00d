#include "fibaut/base.hpp"
#include "fibaut/golden.hpp"
#include "fibaut/hurtsada.hpp"
#include "fibaut/learner.hpp"
#include "fibaut/logic/compiler.hpp"
#include "fibaut/logic/parser.hpp"
#include "fibaut/relations.hpp"

#include <gtest/gtest.h>

using namespace fibaut;
using namespace fibaut::learn;

namespace {

logic::AutomatonStore& base_store()
{
    static logic::AutomatonStore* store = [] {
        auto* s = new logic::AutomatonStore();
        arith::build_base(*s);
        return s;
    }();
    return *store;
}

}  // namespace

TEST(Learner, ParityMatchesCompiledDefinition)
{
    const GuessReport report = guess(parity_oracle(), 10, {2, 3, 4, 5});
    EXPECT_TRUE(report.stabilized);
    for (std::uint64_t n = 0; n < 1000; ++n) {
        ASSERT_EQ(dfa::accepts(report.candidate, {n}), n % 2 == 0) << n;
    }
    logic::Compiler compiler(base_store());
    const auto even = compiler.compile_definition(*logic::parse_formula("?msd_fib Ek n=2*k"));
    EXPECT_TRUE(dfa::equivalent(report.candidate, even.dfa));
}

TEST(Learner, TrivialLanguages)
{
    const MembershipOracle all{1, [](std::span<const std::uint64_t>) { return true; }, {std::nullopt}, "all"};
    const MembershipOracle none{1, [](std::span<const std::uint64_t>) { return false; }, {std::nullopt}, "none"};
    const GuessReport a = guess(all, 6, {1, 2});
    const GuessReport b = guess(none, 6, {1, 2});
    EXPECT_TRUE(a.stabilized);
    EXPECT_TRUE(b.stabilized);
    EXPECT_TRUE(dfa::equivalent(a.candidate, arith::valid()));
    EXPECT_TRUE(dfa::is_empty(b.candidate));
}

TEST(Learner, AdderReplaysExhaustively)
{
    const GuessReport report = guess(addition_oracle(), 12, {3, 4, 5});
    ASSERT_TRUE(report.stabilized);
    EXPECT_EQ(arith::check_adder_exhaustive(report.candidate, 400), std::nullopt);
    for (std::size_t i = 1; i < report.steps.size(); ++i) {
        EXPECT_LE(report.steps[i - 1].classes, report.steps[i].classes);
        EXPECT_EQ(report.steps[i].envelope_limited, 0u);
    }
}

TEST(Learner, FloorPhiReplaysExhaustively)
{
    const GuessReport report = guess(floor_phi_oracle(), 12, {4, 5, 6});
    ASSERT_TRUE(report.stabilized);
    EXPECT_EQ(arith::check_phin_exhaustive(report.candidate, 18), std::nullopt);
}

TEST(Learner, SummaryIsDeterministic)
{
    const std::string first = guess(addition_oracle(), 10, {2, 3}).summary();
    const std::string second = guess(addition_oracle(), 10, {2, 3}).summary();
    EXPECT_EQ(first, second);
    EXPECT_FALSE(first.empty());
}

TEST(Learner, RejectsBadDepths)
{
    EXPECT_ANY_THROW(guess(parity_oracle(), 6, {}));
    EXPECT_ANY_THROW(guess(parity_oracle(), 6, {3, 3}));
    EXPECT_ANY_THROW(guess(parity_oracle(), 6, {4, 2}));
}

TEST(Learner, EnvelopeTooSmall)
{
    EXPECT_THROW(guess(array_oracle(291, 471), 2, {3}), EnvelopeError);
}

TEST(Learner, VerifyFunction)
{
    auto& store = base_store();
    EXPECT_TRUE(verify_function("add", {0, 1}, {2}, store));
    EXPECT_TRUE(verify_function("phin", {0}, {1}, store));
    EXPECT_FALSE(verify_function("lt", {0}, {1}, store));
    EXPECT_FALSE(verify_function("add", {0}, {1, 2}, store));
}

TEST(Learner, ArrayAutomatonIsAFunctionMatchingTheSimulator)
{
    const GuessReport report = guess(array_oracle(291, 471), 12, {3, 4, 5, 6});
    ASSERT_TRUE(report.stabilized);
    logic::AutomatonStore store;
    arith::build_base(store);
    store.put("m", {report.candidate, {"x", "y", "z"}});
    EXPECT_TRUE(verify_function("m", {0, 1}, {2}, store));
    // Outside the learning envelope as well.
    hurtsada::HurtSadaArray array;
    for (std::uint64_t x = 0; x < 400; x += 7) {
        for (std::uint64_t y = 0; y < 700; y += 11) {
            const auto z = array.entry(x, y);
            ASSERT_TRUE(dfa::accepts(report.candidate, {x, y, z})) << x << "," << y;
            ASSERT_FALSE(dfa::accepts(report.candidate, {x, y, z + 1})) << x << "," << y;
        }
    }
}
