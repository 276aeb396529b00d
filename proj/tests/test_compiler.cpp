#include "fibaut/base.hpp"
#include "fibaut/errors.hpp"
#include "fibaut/logic/compiler.hpp"
#include "fibaut/logic/parser.hpp"
#include "fibaut/logic/script.hpp"
#include "fibaut/relations.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <optional>

#include <unistd.h>

using namespace fibaut;
using namespace fibaut::logic;

namespace {

AutomatonStore& base_store()
{
    static AutomatonStore* store = [] {
        auto* s = new AutomatonStore();
        arith::build_base(*s);
        return s;
    }();
    return *store;
}

// Direct integer semantics with quantifiers ranging over 0..kBound.
constexpr std::int64_t kBound = 70;
using Env = std::map<std::string, std::int64_t>;

std::optional<std::int64_t> value(const Term& t, const Env& env)
{
    auto both = [&](auto op) -> std::optional<std::int64_t> {
        const auto a = value(*t.lhs, env), b = value(*t.rhs, env);
        if (!a || !b) {
            return std::nullopt;
        }
        return op(*a, *b);
    };
    switch (t.kind) {
    case Term::Kind::var: return env.at(t.name);
    case Term::Kind::constant: return static_cast<std::int64_t>(t.value);
    case Term::Kind::add: return both([](auto a, auto b) { return std::optional<std::int64_t>(a + b); });
    case Term::Kind::sub:
        return both([](auto a, auto b) { return a >= b ? std::optional<std::int64_t>(a - b) : std::nullopt; });
    case Term::Kind::mul: {
        const auto a = value(*t.lhs, env);
        return a ? std::optional<std::int64_t>(*a * static_cast<std::int64_t>(t.value)) : std::nullopt;
    }
    case Term::Kind::div: {
        const auto a = value(*t.lhs, env);
        return a ? std::optional<std::int64_t>(*a / static_cast<std::int64_t>(t.value)) : std::nullopt;
    }
    }
    return std::nullopt;
}

bool holds(const Formula& f, Env& env)
{
    switch (f.kind) {
    case Formula::Kind::compare: {
        const auto a = value(*f.lhs, env), b = value(*f.rhs, env);
        if (!a || !b) {
            return false;
        }
        switch (f.op) {
        case CmpOp::eq: return *a == *b;
        case CmpOp::ne: return *a != *b;
        case CmpOp::lt: return *a < *b;
        case CmpOp::le: return *a <= *b;
        case CmpOp::gt: return *a > *b;
        case CmpOp::ge: return *a >= *b;
        }
        return false;
    }
    case Formula::Kind::call: {
        std::vector<std::int64_t> args;
        for (const auto& a : f.args) {
            const auto v = value(*a, env);
            if (!v) {
                return false;
            }
            args.push_back(*v);
        }
        if (f.callee == "add") return args[0] + args[1] == args[2];
        if (f.callee == "lt") return args[0] < args[1];
        if (f.callee == "eq") return args[0] == args[1];
        throw std::logic_error("no integer semantics for $" + f.callee);
    }
    case Formula::Kind::negation: return !holds(*f.left, env);
    case Formula::Kind::conjunction: return holds(*f.left, env) && holds(*f.right, env);
    case Formula::Kind::disjunction: return holds(*f.left, env) || holds(*f.right, env);
    case Formula::Kind::implication: return !holds(*f.left, env) || holds(*f.right, env);
    case Formula::Kind::equivalence: return holds(*f.left, env) == holds(*f.right, env);
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
        const bool want = f.kind == Formula::Kind::exists;
        auto rec = [&](auto&& self, std::size_t i) -> bool {
            if (i == f.bound.size()) {
                return holds(*f.left, env);
            }
            for (std::int64_t v = 0; v <= kBound; ++v) {
                env[f.bound[i]] = v;
                if (self(self, i + 1) == want) {
                    env.erase(f.bound[i]);
                    return want;
                }
            }
            env.erase(f.bound[i]);
            return !want;
        };
        return rec(rec, 0);
    }
    }
    return false;
}

void expect_matches_integers(const std::string& body, std::int64_t limit)
{
    SCOPED_TRACE(body);
    const auto f = parse_formula("?msd_fib " + body);
    Compiler compiler(base_store());
    const Relation r = compiler.compile_definition(*f);
    const auto vars = free_vars(*f);
    ASSERT_EQ(r.vars, std::vector<std::string>(vars.begin(), vars.end()));
    const std::size_t k = r.vars.size();
    std::vector<std::uint64_t> point(k, 0);
    Env env;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            const bool expected = holds(*f, env);
            ASSERT_EQ(dfa::accepts(r.dfa, point), expected) << ::testing::PrintToString(point);
            return;
        }
        for (std::int64_t v = 0; v <= limit; ++v) {
            point[i] = static_cast<std::uint64_t>(v);
            env[r.vars[i]] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

bool eval(const std::string& body)
{
    Compiler compiler(base_store());
    return compiler.eval_closed(*parse_formula("?msd_fib " + body));
}

Dfa def(const std::string& body)
{
    Compiler compiler(base_store());
    return compiler.compile_definition(*parse_formula("?msd_fib " + body)).dfa;
}

}  // namespace

TEST(Compiler, AgreesWithIntegerSemantics)
{
    for (const char* body : {
             "x+y=z",
             "x-y=z",
             "z-x-y=0 & z>0",
             "x=y+3",
             "Ek x=2*k",
             "Ek x=3*k+1",
             "x/3=y",
             "(x+1)/2=y+1",
             "3*x=y",
             "x!=y & x<=y",
             "x>=y <=> ~(x<y)",
             "(x=y | x=y+1) => x>0",
             "Ez z<=x & x=z+z+y",
             "Ay y<x => y+1<=x",
             "$lt(x,y) | $eq(x,y+2)",
             "$add(x,x,z) & ~$add(y,1,z)",
             "Ex,w x+w=y & w>z",
         }) {
        expect_matches_integers(body, 20);
    }
}

TEST(Compiler, Equivalences)
{
    EXPECT_TRUE(dfa::equivalent(def("~~(x<y)"), def("x<y")));
    EXPECT_TRUE(dfa::equivalent(def("~(x<y & y<z)"), def("~(x<y) | ~(y<z)")));
    EXPECT_TRUE(dfa::equivalent(def("Ek x=2*k"), def("Ej x=2*j")));
    EXPECT_TRUE(dfa::equivalent(def("Ax Ey x<y+z"), def("Aw Ev w<v+z")));
    EXPECT_TRUE(dfa::equivalent(def("n=n"), arith::valid()));
    EXPECT_TRUE(dfa::equivalent(def("x=y"), arith::eq()));
    EXPECT_TRUE(dfa::equivalent(def("x<y"), arith::lt()));
    EXPECT_TRUE(dfa::equivalent(def("x+y=z"), base_store().get("add")->dfa));
}

TEST(Compiler, NaturalSubtraction)
{
    const Dfa pred = def("n-1=m");
    EXPECT_TRUE(dfa::accepts(pred, {4, 5}));
    for (std::uint64_t m = 0; m < 30; ++m) {
        EXPECT_FALSE(dfa::accepts(pred, {m, 0}));
    }
    EXPECT_FALSE(eval("En n-1=n"));
}

TEST(Compiler, ClosedEvaluation)
{
    EXPECT_TRUE(eval("Ax,y Ez x+y=z"));
    EXPECT_FALSE(eval("En n+1=n"));
    EXPECT_TRUE(eval("An Ek n=2*k | n=2*k+1"));
    EXPECT_FALSE(eval("An Ek n=2*k"));
    EXPECT_TRUE(eval("3=3"));
    EXPECT_FALSE(eval("3<3"));
    EXPECT_TRUE(eval("An,m n+m=m+n"));
    EXPECT_TRUE(eval("Ax $phin(x,x) <=> x<=1"));
}

TEST(Compiler, Errors)
{
    Compiler compiler(base_store());
    EXPECT_THROW(compiler.compile(*parse_formula("?msd_fib $nope(x)")), CompileError);
    EXPECT_THROW(compiler.compile(*parse_formula("?msd_fib $lt(x)")), CompileError);
    EXPECT_THROW(compiler.compile(*parse_formula("?msd_fib x/0=y")), CompileError);
    EXPECT_THROW(compiler.eval_closed(*parse_formula("?msd_fib x=y")), ContractError);

    AutomatonStore empty;
    Compiler bare(empty);
    EXPECT_THROW(bare.compile(*parse_formula("?msd_fib x+y=z")), CompileError);
    EXPECT_NO_THROW(bare.compile(*parse_formula("?msd_fib x<y")));
}

TEST(Store, DirectoryPersistence)
{
    const auto dir = std::filesystem::temp_directory_path() / ("fibaut-store-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    {
        AutomatonStore store(dir);
        store.put("lt", {arith::lt(), {"a", "b"}});
        EXPECT_THROW(store.put("bad name", {arith::lt(), {"a", "b"}}), ContractError);
        EXPECT_THROW(store.put("short", {arith::lt(), {"a"}}), ContractError);
    }
    EXPECT_TRUE(std::filesystem::exists(dir / "lt.txt"));
    EXPECT_TRUE(std::filesystem::exists(dir / "lt.vars"));
    AutomatonStore reopened(dir);
    ASSERT_TRUE(reopened.contains("lt"));
    const auto entry = reopened.get("lt");
    EXPECT_EQ(entry->dfa, arith::lt());
    EXPECT_EQ(entry->vars, (std::vector<std::string>{"a", "b"}));
    EXPECT_EQ(reopened.names(), std::vector<std::string>{"lt"});
    EXPECT_FALSE(reopened.get("missing"));
    std::filesystem::remove_all(dir);
}

TEST(Script, ReportsAndStores)
{
    AutomatonStore store;
    arith::build_base(store);
    const auto report = run_script("def ev \"?msd_fib Ek n=2*k\":\n"
                                   "eval alt \"?msd_fib An $ev(n) <=> ~$ev(n+1)\":\n"
                                   "eval no \"?msd_fib An $ev(n)\":\n",
                                   store);
    ASSERT_EQ(report.commands.size(), 3u);
    EXPECT_FALSE(report.all_true());
    EXPECT_TRUE(report.find("alt")->truth);
    EXPECT_FALSE(report.find("no")->truth);
    EXPECT_EQ(report.find("missing"), nullptr);
    ASSERT_TRUE(store.contains("ev"));
    const auto* ev = report.find("ev");
    EXPECT_EQ(ev->vars, std::vector<std::string>{"n"});
    EXPECT_EQ(ev->states, store.get("ev")->dfa.state_count());
    EXPECT_EQ(report.text().substr(report.text().find('\n') + 1), "eval alt: TRUE\neval no: FALSE\n");
    EXPECT_EQ(report.text().rfind("def ev(n): defined, ", 0), 0u);

    EXPECT_TRUE(run_script("", store).commands.empty());
    EXPECT_TRUE(run_script("", store).all_true());
}

TEST(Script, ErrorKeepsPartialReport)
{
    AutomatonStore store;
    arith::build_base(store);
    try {
        run_script("eval one \"?msd_fib 1=1\":\neval two \"?msd_fib $missing(1)\":\n", store);
        FAIL() << "expected ScriptError";
    } catch (const ScriptError& e) {
        EXPECT_EQ(e.command(), "two");
        ASSERT_EQ(e.report().commands.size(), 1u);
        EXPECT_EQ(e.report().commands[0].name, "one");
    }
}
