#include "fibaut/replication.hpp"

#include "fibaut/dfa.hpp"
#include "fibaut/golden.hpp"
#include "fibaut/logic/compiler.hpp"
#include "fibaut/logic/parser.hpp"
#include "fibaut/properties.hpp"
#include "fibaut/zeckendorf.hpp"
#include "reference_data.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#ifndef FIBAUT_SCRIPTS_DIR
#define FIBAUT_SCRIPTS_DIR "scripts"
#endif

namespace fibaut::replication {

namespace {

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + p.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CriterionResult verdict(bool pass, std::string detail)
{
    CriterionResult r;
    r.pass = pass;
    r.detail = std::move(detail);
    return r;
}

CriterionResult blocked(const std::string& what, const std::string& why)
{
    return verdict(false, "prerequisite failed (" + what + "): " + why);
}

const std::vector<std::string>& theorem_evals()
{
    static const std::vector<std::string> names{
        "return",       "leaves_thm",     "returns_thm", "p_check",           "thma",
        "thmb",         "no3",            "twice",       "test_t",            "dltn",
        "dgn",          "dpgn",           "dpltn",       "test_b",            "test_c",
        "test_perm1",   "no_fixed_point", "decreasing",  "never2",            "has1",
        "check_decreasing1", "check_decreasing2", "test1", "test2",           "h_formula",
        "hp_formula"};
    return names;
}

const std::vector<std::string>& induction_evals()
{
    static const std::vector<std::string> names{"check_fn1", "check_fn2", "sada_c1", "case_a",
                                                 "case_b",    "case_c",    "case_d"};
    return names;
}

}  // namespace

std::filesystem::path default_scripts_dir()
{
    if (const char* env = std::getenv("FIBAUT_SCRIPTS"); env && *env) {
        return env;
    }
    return FIBAUT_SCRIPTS_DIR;
}

const std::vector<std::string>& script_files()
{
    static const std::vector<std::string> files{
        "even.walnut",          "array_automaton.walnut", "column_return.walnut",  "leaves_returns.walnut",
        "position.walnut",      "sada.walnut",            "sada_multiplicity.walnut", "last_jumped.walnut",
        "diagonal.walnut",      "subdiagonal.walnut",     "row_regions.walnut",    "antidiagonals.walnut",
        "antidiagonal_recurrence.walnut"};
    return files;
}

Suite::Suite(Config config, logic::AutomatonStore& store) : config_(std::move(config)), store_(store)
{
    if (config_.scripts_dir.empty()) {
        config_.scripts_dir = default_scripts_dir();
    }
}

std::string Suite::title(int id)
{
    switch (id) {
    case 1: return "array rows 0-8, columns 0-19 match the golden table";
    case 2: return "p, s, t, d, d' for n = 0..17 match the golden table";
    case 3: return "r, h, h' for n = 0..20 match the golden table";
    case 4: return "closed forms hold against the simulation";
    case 5: return "guessed array automaton stabilizes at 52 states";
    case 6: return "functionality and induction checks evaluate TRUE";
    case 7: return "every remaining theorem eval evaluates TRUE";
    case 8: return "deciders for d(n) >= n and d'(n) >= n have 8 and 6 states";
    case 9: return "adder and phin agree with their integer oracles";
    case 10: return "cross-method equivalences (even, noverphi, phi2n)";
    case 11: return "kernel property suite";
    default: return "unknown";
    }
}

const std::vector<int>& Suite::execution_order()
{
    static const std::vector<int> order{9, 5, 6, 7, 8, 10, 11, 1, 2, 3, 4};
    return order;
}

CriterionResult Suite::run(int id)
{
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = evaluate(id);
    } catch (const std::exception& e) {
        r = verdict(false, std::string("exception: ") + e.what());
    }
    r.id = id;
    r.title = title(id);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> Suite::run_all()
{
    std::vector<CriterionResult> out;
    for (int id : execution_order()) {
        out.push_back(run(id));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
}

CriterionResult Suite::evaluate(int id)
{
    switch (id) {
    case 1: return array_table();
    case 2: return sequence_table();
    case 3: return antidiagonal_table();
    case 4: return closed_forms();
    case 5: return guess_m();
    case 6: return induction();
    case 7: return theorem_scripts();
    case 8: return state_counts();
    case 9: return arithmetic_base();
    case 10: return cross_method();
    case 11: return kernel_properties();
    default: throw std::invalid_argument("no criterion " + std::to_string(id));
    }
}

void Suite::ensure_base()
{
    if (base_ || base_error_) {
        return;
    }
    try {
        base_ = arith::build_base(store_, config_.base);
    } catch (const std::exception& e) {
        base_error_ = e.what();
    }
}

void Suite::ensure_m()
{
    if (m_ || m_error_) {
        return;
    }
    try {
        m_ = learn::guess(learn::array_oracle(config_.rows, config_.cols), config_.prefix_bound, config_.depths);
        if (m_->candidate.state_count() == 52 || dfa::states_without_sink(m_->candidate) == 52) {
            convention_ = dfa::states_without_sink(m_->candidate) == 52 ? "without dead state" : "with dead state";
        }
        store_.put("m", {m_->candidate, {"x", "y", "z"}});
    } catch (const std::exception& e) {
        m_error_ = e.what();
    }
}

void Suite::ensure_scripts()
{
    if (scripts_done_) {
        return;
    }
    scripts_done_ = true;
    ensure_base();
    ensure_m();
    if (base_error_ || m_error_) {
        scripts_error_ = base_error_ ? *base_error_ : *m_error_;
        return;
    }
    for (const auto& file : script_files()) {
        try {
            scripts_[file] = logic::run_script(read_file(config_.scripts_dir / file), store_);
        } catch (const logic::ScriptError& e) {
            scripts_[file] = e.report();
            scripts_error_ = file + ": " + e.what();
            return;
        } catch (const std::exception& e) {
            scripts_error_ = file + ": " + e.what();
            return;
        }
    }
}

const hurtsada::SequenceTable& Suite::sequences()
{
    if (!sequences_) {
        const std::size_t count = std::max<std::uint64_t>(config_.horizon, 20) + 1;
        sequences_ = std::make_unique<hurtsada::SequenceTable>(hurtsada::generate_sequences(count, count));
    }
    return *sequences_;
}

CriterionResult Suite::array_table()
{
    const hurtsada::HurtSadaArray array;
    const std::string got = hurtsada::render_table(array, 9, 20);
    return verdict(got == reference::array_rows(), got == reference::array_rows() ? "byte-identical" : "differs:\n" + got);
}

CriterionResult Suite::sequence_table()
{
    const std::string got = hurtsada::render_rows(sequences(), {"p", "s", "t", "d", "dp"}, 18);
    return verdict(got == reference::sequences(), got == reference::sequences() ? "identical" : "differs:\n" + got);
}

CriterionResult Suite::antidiagonal_table()
{
    const std::string got = hurtsada::render_rows(sequences(), {"r", "h", "hp"}, 21);
    return verdict(got == reference::antidiagonals(), got == reference::antidiagonals() ? "identical" : "differs:\n" + got);
}

CriterionResult Suite::closed_forms()
{
    using golden::floor_div_phi;
    using golden::floor_linear;
    using golden::floor_phi;
    const auto& t = sequences();
    std::size_t checks = 0;
    std::string failure;
    auto expect = [&](const char* name, std::uint64_t n, std::int64_t got, std::int64_t want) {
        ++checks;
        if (failure.empty() && got != want) {
            failure = std::string(name) + "(" + std::to_string(n) + ") = " + std::to_string(got) + ", formula gives " +
                      std::to_string(want);
        }
    };
    for (std::uint64_t n = 1; n <= config_.horizon; ++n) {
        const auto sn = static_cast<std::int64_t>(n);
        expect("p", n, t.p[n], floor_div_phi(n + 1));
        expect("t", n, t.t[n], floor_phi(n + 1) - 1);
        const bool upper = golden::is_floor_phi2_value(n + 1);
        expect("s", n, t.s[n], upper ? n + 1 : floor_div_phi(n + 1));
        expect("b", n, t.b[n], floor_div_phi(n + 2) - 1);
        expect("c", n, t.c[n], floor_phi(n + 1));
        if (t.d[n] >= n) {
            expect("d", n, t.d[n], floor_linear(-2 * sn, 2 * sn, 1) + 1);
        } else {
            expect("d", n, t.d[n], floor_linear(4 * sn + 5, -(2 * sn + 3), 1));
        }
        if (t.dprime[n] >= n) {
            expect("d'", n, t.dprime[n], floor_linear(1 - 4 * sn, 4 * sn, 2));
        } else {
            expect("d'", n, t.dprime[n], floor_linear(4 * sn, -2 * sn, 1));
        }
        expect("h", n, t.h[n], 2 * sn + 4 - static_cast<std::int64_t>(floor_phi(n + 3)));
        expect("h'", n, t.hp[n], static_cast<std::int64_t>(floor_div_phi(n + 2)) - 1);
    }
    return verdict(failure.empty(), failure.empty() ? std::to_string(checks) + " values checked for 1 <= n <= " +
                                                          std::to_string(config_.horizon)
                                                    : failure);
}

CriterionResult Suite::guess_m()
{
    ensure_m();
    if (m_error_) {
        return verdict(false, "learner: " + *m_error_);
    }
    std::string detail;
    for (const auto& s : m_->steps) {
        detail += "k=" + std::to_string(s.depth) + ":" + std::to_string(s.states_without_sink) + "/" +
                  std::to_string(s.states) + " ";
    }
    detail += "(without/with dead state); stabilized " + std::string(m_->stabilized ? "yes" : "no");
    if (convention_) {
        detail += "; 52 states " + *convention_;
    }
    return verdict(m_->stabilized && convention_.has_value(), detail);
}

CriterionResult Suite::induction()
{
    ensure_scripts();
    const auto it = scripts_.find("array_automaton.walnut");
    if (it == scripts_.end()) {
        return blocked("scripts", scripts_error_.value_or("not run"));
    }
    std::string bad;
    for (const auto& name : induction_evals()) {
        const auto* c = it->second.find(name);
        if (!c || !c->truth) {
            bad += " " + name + (c ? "=FALSE" : "=missing");
        }
    }
    return verdict(bad.empty(), bad.empty() ? std::to_string(induction_evals().size()) + " evals TRUE" : "failed:" + bad);
}

CriterionResult Suite::theorem_scripts()
{
    ensure_scripts();
    std::string bad;
    for (const auto& name : theorem_evals()) {
        const logic::CommandResult* found = nullptr;
        for (const auto& [file, report] : scripts_) {
            if (const auto* c = report.find(name); c && c->kind == logic::Command::Kind::eval) {
                found = c;
            }
        }
        if (!found || !found->truth) {
            bad += " " + name + (found ? "=FALSE" : "=missing");
        }
    }
    if (scripts_error_) {
        bad += " (script error: " + *scripts_error_ + ")";
    }
    return verdict(bad.empty(), bad.empty() ? std::to_string(theorem_evals().size()) + " evals TRUE" : "failed:" + bad);
}

CriterionResult Suite::state_counts()
{
    ensure_scripts();
    if (!convention_) {
        return blocked("array automaton", "no dead-state convention established");
    }
    const auto dlgn = store_.get("dlgn");
    const auto dpg = store_.get("dpg");
    if (!dlgn || !dpg) {
        return blocked("scripts", scripts_error_.value_or("dlgn/dpg not defined"));
    }
    auto count = [this](const Dfa& a) { return sink_excluded() ? dfa::states_without_sink(a) : a.state_count(); };
    const State a = count(dlgn->dfa);
    const State b = count(dpg->dfa);
    return verdict(a == 8 && b == 6, "dlgn " + std::to_string(a) + ", dpg " + std::to_string(b) + " states " + *convention_);
}

CriterionResult Suite::arithmetic_base()
{
    ensure_base();
    if (base_error_) {
        return verdict(false, *base_error_);
    }
    const auto add = store_.get("add");
    const auto phin = store_.get("phin");
    if (auto bad = arith::check_adder_exhaustive(add->dfa, 2000)) {
        return verdict(false, "adder: " + *bad);
    }
    std::mt19937_64 rng(config_.seed);
    std::uniform_int_distribution<std::uint64_t> below(0, 999'999'999);
    for (std::uint64_t i = 0; i < config_.random_pairs; ++i) {
        const std::uint64_t x = below(rng);
        const std::uint64_t y = below(rng);
        if (!dfa::accepts(add->dfa, {x, y, x + y}) || dfa::accepts(add->dfa, {x, y, x + y + 1})) {
            return verdict(false, "adder disagrees at x=" + std::to_string(x) + ", y=" + std::to_string(y));
        }
    }
    if (auto bad = arith::check_phin_exhaustive(phin->dfa, 25)) {
        return verdict(false, "phin: " + *bad);
    }
    return verdict(true, "adder " + std::to_string(add->dfa.state_count()) + " states, exhaustive x,y <= 2000 and " +
                             std::to_string(config_.random_pairs) + " random pairs; phin " +
                             std::to_string(phin->dfa.state_count()) + " states, exhaustive to 25 digits");
}

CriterionResult Suite::cross_method()
{
    ensure_scripts();
    const auto even = store_.get("even");
    if (!even) {
        return blocked("even.walnut", scripts_error_.value_or("even not defined"));
    }
    const auto guessed = learn::guess(learn::parity_oracle(), 10, {2, 3, 4, 5});
    if (!guessed.stabilized || !dfa::equivalent(guessed.candidate, even->dfa)) {
        return verdict(false, "compiled even differs from the guessed parity automaton");
    }
    const auto noverphi = store_.get("noverphi");
    const auto phi2n = store_.get("phi2n");
    if (!noverphi || !phi2n) {
        return blocked("base", base_error_.value_or("noverphi/phi2n missing"));
    }
    constexpr std::uint64_t limit = 100000;
    for (std::uint64_t n = 0; n <= limit; ++n) {
        const std::uint64_t q = golden::floor_div_phi(n);
        const std::uint64_t s = golden::floor_phi2(n);
        if (!dfa::accepts(noverphi->dfa, {n, q}) || dfa::accepts(noverphi->dfa, {n, q + 1}) ||
            (q > 0 && dfa::accepts(noverphi->dfa, {n, q - 1}))) {
            return verdict(false, "noverphi disagrees with floor_div_phi at n=" + std::to_string(n));
        }
        if (!dfa::accepts(phi2n->dfa, {n, s}) || dfa::accepts(phi2n->dfa, {n, s + 1}) ||
            (s > 0 && dfa::accepts(phi2n->dfa, {n, s - 1}))) {
            return verdict(false, "phi2n disagrees with floor_phi2 at n=" + std::to_string(n));
        }
    }
    return verdict(true, "even: compiled " + std::to_string(even->dfa.state_count()) + " states == guessed; " +
                             "noverphi, phi2n exact for n <= " + std::to_string(limit));
}

CriterionResult Suite::kernel_properties()
{
    ensure_scripts();
    std::vector<std::pair<std::string, Dfa>> corpus;
    for (const auto& name : store_.names()) {
        if (auto e = store_.get(name)) {
            corpus.emplace_back(name, e->dfa);
        }
    }
    const auto report = props::kernel_properties(config_.seed, corpus);
    std::string detail = std::to_string(report.checks) + " checks over " + std::to_string(corpus.size()) +
                         " stored automata and random automata";
    if (!report.ok()) {
        detail = std::to_string(report.failures.size()) + " failures, first: " + report.failures.front();
    }
    return verdict(report.ok(), detail);
}

std::string render(const std::vector<CriterionResult>& results)
{
    std::string out;
    for (const auto& r : results) {
        out += "criterion " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") + ": " + r.title + " -- " +
               r.detail + "\n";
    }
    return out;
}

}  // namespace fibaut::replication
