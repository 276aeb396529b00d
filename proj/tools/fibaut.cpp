// Command-line front end: script runner, array and sequence generators,
// learner driver, store management and the replication suite.
//
// Exit status: 0 success, 1 logical failure (FALSE eval, failed criterion,
// script error), 2 usage error, 3 verification abort.

#include "fibaut/base.hpp"
#include "fibaut/errors.hpp"
#include "fibaut/hurtsada.hpp"
#include "fibaut/learner.hpp"
#include "fibaut/logic/compiler.hpp"
#include "fibaut/logic/parser.hpp"
#include "fibaut/logic/script.hpp"
#include "fibaut/replication.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace fibaut;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kAbort = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string store = "fibaut-store";
    std::uint64_t horizon = 10000;
    std::uint64_t rows = 291;
    std::uint64_t cols = 471;
    std::string depths = "3,4,5,6";
    unsigned prefix = 12;
    std::string format;
    bool timing = false;
};

std::vector<unsigned> parse_depths(const std::string& text)
{
    std::vector<unsigned> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(item, &used);
            if (used != item.size() || v > 60) {
                throw std::invalid_argument(item);
            }
            out.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw UsageError("bad depth '" + item + "' in --depths");
        }
    }
    if (out.empty()) {
        throw UsageError("--depths is empty");
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

learn::GuessReport guess_array(const Options& o)
{
    return learn::guess(learn::array_oracle(o.rows, o.cols), o.prefix, parse_depths(o.depths));
}

void ensure_initialized(logic::AutomatonStore& store, const Options& o)
{
    if (!arith::has_base(store)) {
        std::cerr << "building base automata in " << o.store << "\n";
        arith::build_base(store);
    }
    if (!store.contains("m")) {
        std::cerr << "guessing the array automaton m\n";
        const auto report = guess_array(o);
        if (!report.stabilized) {
            throw VerificationError("array automaton guess did not stabilize:\n" + report.summary());
        }
        store.put("m", {report.candidate, {"x", "y", "z"}});
    }
}

int cmd_init(const Options& o)
{
    logic::AutomatonStore store(o.store);
    const auto base = arith::build_base(store);
    std::cout << "add:\n" << base.adder.summary() << "phin:\n" << base.phin.summary();
    for (const auto& c : base.checks) {
        std::cout << "check passed: " << c << "\n";
    }
    const auto m = guess_array(o);
    std::cout << "m:\n" << m.summary();
    if (!m.stabilized) {
        throw VerificationError("array automaton guess did not stabilize");
    }
    store.put("m", {m.candidate, {"x", "y", "z"}});
    return kOk;
}

int cmd_run(const Options& o, const std::vector<std::string>& scripts)
{
    logic::AutomatonStore store(o.store);
    ensure_initialized(store, o);
    bool all_true = true;
    for (const auto& path : scripts) {
        try {
            const auto report = logic::run_script(read_file(path), store);
            std::cout << report.text();
            if (o.timing) {
                std::cerr << report.timing();
            }
            all_true = all_true && report.all_true();
        } catch (const logic::ScriptError& e) {
            std::cout << e.report().text();
            std::cerr << path << ": " << e.what() << "\n";
            return kFailure;
        }
    }
    return all_true ? kOk : kFailure;
}

hurtsada::SeqFormat sequence_format(const std::string& f)
{
    if (f.empty() || f == "table") return hurtsada::SeqFormat::list;
    if (f == "csv") return hurtsada::SeqFormat::csv;
    if (f == "bfile") return hurtsada::SeqFormat::bfile;
    throw UsageError("format '" + f + "' does not apply to sequences (use table, csv or bfile)");
}

int cmd_array(const Options& o, std::uint64_t rows, std::uint64_t cols)
{
    const hurtsada::HurtSadaArray array;
    if (o.format.empty() || o.format == "table") {
        std::cout << hurtsada::render_table(array, rows, cols);
    } else if (o.format == "csv") {
        for (std::uint64_t n = 0; n < rows; ++n) {
            const auto row = array.row(n, cols);
            for (std::uint64_t k = 0; k < cols; ++k) {
                std::cout << (k ? "," : "") << row[k];
            }
            std::cout << "\n";
        }
    } else {
        throw UsageError("format '" + o.format + "' does not apply to arrays (use table or csv)");
    }
    return kOk;
}

int cmd_seq(const Options& o, const std::string& name, std::size_t count)
{
    const auto& names = hurtsada::sequence_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw UsageError("unknown sequence '" + name + "'");
    }
    const auto format = sequence_format(o.format);
    const bool antidiagonal = name == "r" || name == "h" || name == "hp";
    const auto table = hurtsada::generate_sequences(count, antidiagonal ? count : 0);
    std::cout << hurtsada::render_sequence(hurtsada::sequence_by_name(table, name), format);
    return kOk;
}

int cmd_diag(std::uint64_t n)
{
    const auto diags = hurtsada::antidiagonals(n + 1);
    const auto table = hurtsada::generate_sequences(1, n + 1);
    std::cout << "antidiagonal " << n << ":";
    for (auto v : diags[n]) {
        std::cout << " " << v;
    }
    std::cout << "\nr=" << table.r[n] << " h=" << table.h[n] << " hp=" << table.hp[n] << "\n";
    return kOk;
}

int cmd_guess(const Options& o, const std::string& target)
{
    logic::AutomatonStore store(o.store);
    const auto depths = parse_depths(o.depths);
    learn::GuessReport report;
    std::vector<std::string> vars;
    if (target == "m") {
        report = guess_array(o);
        vars = {"x", "y", "z"};
    } else if (target == "even") {
        report = learn::guess(learn::parity_oracle(), o.prefix, depths);
        vars = {"n"};
    } else if (target == "phin") {
        report = learn::guess(learn::floor_phi_oracle(), o.prefix, depths);
        vars = {"n", "x"};
    } else if (target == "add") {
        report = learn::guess(learn::addition_oracle(), o.prefix, depths);
        vars = {"x", "y", "z"};
    } else {
        throw UsageError("unknown guess target '" + target + "' (m, even, phin, add)");
    }
    std::cout << report.summary();
    if (!report.stabilized) {
        std::cerr << "candidate did not stabilize; not stored\n";
        return kFailure;
    }
    const std::string name = target == "even" ? "even_guessed" : target;
    if (target == "add") {
        if (auto bad = arith::check_adder_exhaustive(report.candidate, 2000)) {
            throw VerificationError("guessed adder " + *bad);
        }
    } else if (target == "phin") {
        if (auto bad = arith::check_phin_exhaustive(report.candidate, 25)) {
            throw VerificationError("guessed phin " + *bad);
        }
    }
    store.put(name, {report.candidate, vars});
    std::cout << "stored as " << name << "\n";
    if (target == "even") {
        if (!arith::has_base(store)) {
            arith::build_base(store);
        }
        logic::Compiler compiler(store);
        const auto compiled = compiler.compile_definition(*logic::parse_formula("?msd_fib Ek n=2*k"));
        const bool same = dfa::equivalent(compiled.dfa, report.candidate);
        std::cout << "equivalent to compiled even: " << (same ? "yes" : "no") << "\n";
        return same ? kOk : kFailure;
    }
    return kOk;
}

int cmd_verify(const Options& o, const std::string& scripts_dir)
{
    logic::AutomatonStore store(o.store);
    replication::Config config;
    config.rows = o.rows;
    config.cols = o.cols;
    config.prefix_bound = o.prefix;
    config.depths = parse_depths(o.depths);
    config.horizon = o.horizon;
    if (!scripts_dir.empty()) {
        config.scripts_dir = scripts_dir;
    }
    replication::Suite suite(config, store);
    bool all = true;
    for (int id : replication::Suite::execution_order()) {
        const auto r = suite.run(id);
        std::cout << replication::render({r});
        std::cout.flush();
        if (o.timing) {
            std::cerr << "criterion " << id << " " << r.seconds << "s\n";
        }
        all = all && r.pass;
    }
    std::cout << (all ? "all criteria PASS" : "some criteria FAIL") << "\n";
    return all ? kOk : kFailure;
}

int cmd_export(const Options& o, const std::string& name, const std::string& out)
{
    logic::AutomatonStore store(o.store);
    const auto entry = store.get(name);
    if (!entry) {
        throw UsageError("no automaton '" + name + "' in " + o.store);
    }
    std::string text;
    if (o.format.empty() || o.format == "text") {
        text = dfa::to_text(entry->dfa);
    } else if (o.format == "dot") {
        text = dfa::to_dot(entry->dfa, name);
    } else {
        throw UsageError("format '" + o.format + "' does not apply to export (use dot or text)");
    }
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f || !(f << text)) {
            throw std::runtime_error("cannot write " + out);
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decision procedure for Zeckendorf-automatic statements, with a Hurt-Sada array oracle"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--store", o.store, "Automaton store directory")->envname("FIBAUT_STORE");
    app.add_option("--horizon", o.horizon, "Closed-form verification horizon N")
        ->envname("FIBAUT_HORIZON")
        ->check(CLI::PositiveNumber);
    app.add_option("--rows", o.rows, "Learner envelope rows")->envname("FIBAUT_ROWS")->check(CLI::PositiveNumber);
    app.add_option("--cols", o.cols, "Learner envelope columns")->envname("FIBAUT_COLS")->check(CLI::PositiveNumber);
    app.add_option("--depths", o.depths, "Learner extension depths, e.g. 3,4,5,6")->envname("FIBAUT_DEPTHS");
    app.add_option("--prefix", o.prefix, "Learner prefix-length bound")->envname("FIBAUT_PREFIX");
    app.add_option("--format", o.format, "Output format")
        ->envname("FIBAUT_FORMAT")
        ->check(CLI::IsMember({"table", "csv", "bfile", "dot", "text"}));
    app.add_flag("--timing", o.timing, "Print timings to stderr");

    std::vector<std::string> scripts;
    auto* run = app.add_subcommand("run", "Run script files");
    run->add_option("scripts", scripts, "Script files")->required()->check(CLI::ExistingFile);

    std::uint64_t array_rows = 9;
    std::uint64_t array_cols = 20;
    auto* array = app.add_subcommand("array", "Render a corner of the array");
    array->add_option("rows", array_rows)->check(CLI::PositiveNumber);
    array->add_option("cols", array_cols)->check(CLI::PositiveNumber);

    std::string seq_name;
    std::size_t seq_count = 18;
    auto* seq = app.add_subcommand("seq", "Print a sequence prefix (p s t d dp b c r h hp)");
    seq->add_option("name", seq_name)->required();
    seq->add_option("count", seq_count)->check(CLI::PositiveNumber);

    std::uint64_t diag_n = 0;
    auto* diag = app.add_subcommand("diag", "Print antidiagonal n");
    diag->add_option("n", diag_n)->required();

    std::string target;
    auto* guess = app.add_subcommand("guess", "Guess an automaton (m, even, phin, add) and store it");
    guess->add_option("target", target)->required();

    std::string scripts_dir;
    auto* verify = app.add_subcommand("verify-paper", "Run every acceptance criterion");
    verify->add_option("--scripts", scripts_dir, "Script directory")->envname("FIBAUT_SCRIPTS");

    std::string export_name;
    std::string export_out;
    auto* exp = app.add_subcommand("export", "Write a stored automaton as text or DOT");
    exp->add_option("name", export_name)->required();
    exp->add_option("-o,--out", export_out, "Output file (default stdout)");

    auto* init = app.add_subcommand("init", "Build the base automata and m into the store");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run) return cmd_run(o, scripts);
        if (*array) return cmd_array(o, array_rows, array_cols);
        if (*seq) return cmd_seq(o, seq_name, seq_count);
        if (*diag) return cmd_diag(diag_n);
        if (*guess) return cmd_guess(o, target);
        if (*verify) return cmd_verify(o, scripts_dir);
        if (*exp) return cmd_export(o, export_name, export_out);
        if (*init) return cmd_init(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const VerificationError& e) {
        std::cerr << "verification abort: " << e.what() << "\n";
        return kAbort;
    } catch (const learn::EnvelopeError& e) {
        std::cerr << "learner: " << e.what() << "\n";
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
