#include "fibaut/replication.hpp"

#include <gtest/gtest.h>

#include <iostream>

using namespace fibaut;

namespace {

std::vector<replication::CriterionResult> g_results;

const replication::CriterionResult& result(int id)
{
    for (const auto& r : g_results) {
        if (r.id == id) {
            return r;
        }
    }
    throw std::logic_error("criterion " + std::to_string(id) + " was not run");
}

}  // namespace

#define CRITERION_TEST(N)                                            \
    TEST(Acceptance, Criterion##N)                                   \
    {                                                                \
        const auto& r = result(N);                                   \
        EXPECT_TRUE(r.pass) << r.title << " -- " << r.detail;        \
    }

CRITERION_TEST(1)
CRITERION_TEST(2)
CRITERION_TEST(3)
CRITERION_TEST(4)
CRITERION_TEST(5)
CRITERION_TEST(6)
CRITERION_TEST(7)
CRITERION_TEST(8)
CRITERION_TEST(9)
CRITERION_TEST(10)
CRITERION_TEST(11)

int main(int argc, char** argv)
{
    ::testing::InitGoogleTest(&argc, argv);
    logic::AutomatonStore store;
    replication::Config config;
    config.scripts_dir = replication::default_scripts_dir();
    replication::Suite suite(config, store);
    g_results = suite.run_all();
    std::cout << replication::render(g_results) << std::flush;
    return RUN_ALL_TESTS();
}
