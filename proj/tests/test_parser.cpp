#include "fibaut/errors.hpp"
#include "fibaut/logic/parser.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fibaut;
using namespace fibaut::logic;

namespace {

std::string shown(std::string_view text)
{
    return to_string(*parse_formula(text));
}

template <class F>
ParseError parse_failure(F&& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no ParseError";
    return ParseError("none", 0, 0);
}

}  // namespace

TEST(Parser, DefinitionWithFreeVariable)
{
    const auto cmds = parse_script("def even \"?msd_fib Ek n=2*k\":");
    ASSERT_EQ(cmds.size(), 1u);
    EXPECT_EQ(cmds[0].kind, Command::Kind::def);
    EXPECT_EQ(cmds[0].name, "even");
    EXPECT_EQ(cmds[0].free_vars, std::vector<std::string>{"n"});
    EXPECT_EQ(to_string(*cmds[0].formula), "(Ek n=(2*k))");
}

TEST(Parser, ClosedEval)
{
    const auto cmds = parse_script("eval sada_c1 \"?msd_fib An $m(0,n,n)\":");
    ASSERT_EQ(cmds.size(), 1u);
    EXPECT_EQ(cmds[0].kind, Command::Kind::eval);
    EXPECT_TRUE(cmds[0].free_vars.empty());
    EXPECT_EQ(to_string(*cmds[0].formula), "(An $m(0,n,n))");
}

TEST(Parser, UnknownNumeration)
{
    const auto e = parse_failure([] { parse_script("eval x \"?msd_lsd An n=n\":"); });
    EXPECT_NE(std::string(e.what()).find("unknown numeration"), std::string::npos);
    EXPECT_THROW(parse_formula("An n=n"), ParseError);
}

TEST(Parser, Precedence)
{
    EXPECT_EQ(shown("?msd_fib a=b | b=c & c=d"), "(a=b | (b=c & c=d))");
    EXPECT_EQ(shown("?msd_fib ~a=b & c=d"), "(~a=b & c=d)");
    EXPECT_EQ(shown("?msd_fib a=b => b=c => c=d"), "(a=b => (b=c => c=d))");
    EXPECT_EQ(shown("?msd_fib a=b <=> b=c => c=d"), "(a=b <=> (b=c => c=d))");
    EXPECT_EQ(shown("?msd_fib a=b | b=c => c=d"), "((a=b | b=c) => c=d)");
    EXPECT_EQ(shown("?msd_fib Ex,y x<y & y<z"), "(Ex,y (x<y & y<z))");
    EXPECT_EQ(shown("?msd_fib (Ex x<y) & y<z"), "((Ex x<y) & y<z)");
    EXPECT_EQ(shown("?msd_fib a+b-c=2*d+e/3"), "((a+b)-c)=((2*d)+(e/3))");
    EXPECT_EQ(shown("?msd_fib (a+b)*1=c"), "(1*(a+b))=c");
    EXPECT_EQ(shown("?msd_fib x!=y | x<=y | x>=y | x>y"), "(((x!=y | x<=y) | x>=y) | x>y)");
}

TEST(Parser, CommentsAndMultilineFormulas)
{
    const auto cmds = parse_script("# header\n"
                                   "eval a \"?msd_fib Ax x=x\": # trailing\n"
                                   "def b \"?msd_fib x<y\n"
                                   "   | x=y\":\n");
    ASSERT_EQ(cmds.size(), 2u);
    EXPECT_EQ(cmds[1].free_vars, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(cmds[1].pos.line, 3);
}

TEST(Parser, ErrorPositions)
{
    auto e = parse_failure([] { parse_script("eval a \"?msd_fib Ax x=x\":\neval b \"?msd_fib Ax x=\":"); });
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 1);

    e = parse_failure([] { parse_script("eval a \"?msd_fib Ax x=x:"); });
    EXPECT_NE(std::string(e.what()).find("unbalanced quote"), std::string::npos);
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 8);

    e = parse_failure([] { parse_script("proof a \"?msd_fib Ax x=x\":"); });
    EXPECT_NE(std::string(e.what()).find("unknown command"), std::string::npos);

    e = parse_failure([] { parse_script("eval a \"?msd_fib Ax x=x\""); });
    EXPECT_NE(std::string(e.what()).find("':'"), std::string::npos);

    e = parse_failure([] { parse_script("eval a \"?msd_fib x=y\":"); });
    EXPECT_NE(std::string(e.what()).find("free variables"), std::string::npos);

    EXPECT_THROW(parse_formula("?msd_fib x*y=z"), ParseError);
    EXPECT_THROW(parse_formula("?msd_fib x/y=z"), ParseError);
    EXPECT_THROW(parse_formula("?msd_fib $(x)"), ParseError);
    EXPECT_THROW(parse_formula("?msd_fib x=y @"), ParseError);
    EXPECT_THROW(parse_formula("?msd_fib Ex Ex x=x"), ParseError);
    EXPECT_THROW(parse_formula("?msd_fib (x=y"), ParseError);
}

TEST(Parser, ShippedScriptsParse)
{
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(FIBAUT_SCRIPTS_DIR)) {
        if (entry.path().extension() != ".walnut") {
            continue;
        }
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        EXPECT_NO_THROW({
            const auto cmds = parse_script(ss.str());
            EXPECT_FALSE(cmds.empty()) << entry.path();
        }) << entry.path();
        ++files;
    }
    EXPECT_EQ(files, 13u);
}

TEST(Parser, EmptyScript)
{
    EXPECT_TRUE(parse_script("").empty());
    EXPECT_TRUE(parse_script("# only a comment\n\n").empty());
}
