#pragma once

// End-to-end replication: builds the base store, guesses the array
// automaton, runs every script and checks each acceptance criterion.
// Criteria are run lazily in dependency order; a criterion whose
// prerequisite failed reports that instead of running.

#include "fibaut/base.hpp"
#include "fibaut/hurtsada.hpp"
#include "fibaut/learner.hpp"
#include "fibaut/logic/script.hpp"
#include "fibaut/logic/store.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fibaut::replication {

struct Config {
    std::uint64_t rows = 291;
    std::uint64_t cols = 471;
    unsigned prefix_bound = 12;
    std::vector<unsigned> depths{3, 4, 5, 6};
    /// Closed forms are checked for 1 <= n <= horizon.
    std::uint64_t horizon = 10000;
    std::uint64_t random_pairs = 10000;
    std::uint64_t seed = 20250101;
    std::filesystem::path scripts_dir;
    arith::BaseConfig base;
};

/// Directory holding the bundled scripts, or the FIBAUT_SCRIPTS environment
/// variable when set.
std::filesystem::path default_scripts_dir();

/// Script files in dependency order.
const std::vector<std::string>& script_files();

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

class Suite {
public:
    Suite(Config config, logic::AutomatonStore& store);

    /// 1..11.
    CriterionResult run(int id);
    /// Every criterion, executed in dependency order, returned sorted by id.
    std::vector<CriterionResult> run_all();

    static std::string title(int id);
    static const std::vector<int>& execution_order();

    /// Dead-state convention under which the array automaton has 52 states.
    const std::optional<std::string>& convention() const { return convention_; }
    const std::map<std::string, logic::ScriptReport>& script_reports() const { return scripts_; }

private:
    CriterionResult evaluate(int id);

    void ensure_base();
    void ensure_m();
    void ensure_scripts();
    const hurtsada::SequenceTable& sequences();

    bool sink_excluded() const { return convention_ && *convention_ == "without dead state"; }

    CriterionResult array_table();
    CriterionResult sequence_table();
    CriterionResult antidiagonal_table();
    CriterionResult closed_forms();
    CriterionResult guess_m();
    CriterionResult induction();
    CriterionResult theorem_scripts();
    CriterionResult state_counts();
    CriterionResult arithmetic_base();
    CriterionResult cross_method();
    CriterionResult kernel_properties();

    Config config_;
    logic::AutomatonStore& store_;
    std::optional<arith::BaseReport> base_;
    std::optional<std::string> base_error_;
    std::optional<learn::GuessReport> m_;
    std::optional<std::string> m_error_;
    std::optional<std::string> convention_;
    bool scripts_done_ = false;
    std::map<std::string, logic::ScriptReport> scripts_;
    std::optional<std::string> scripts_error_;
    std::unique_ptr<hurtsada::SequenceTable> sequences_;
};

std::string render(const std::vector<CriterionResult>& results);

}  // namespace fibaut::replication
