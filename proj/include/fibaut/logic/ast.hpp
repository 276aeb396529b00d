#pragma once

#include "fibaut/natural.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace fibaut::logic {

struct SourcePos {
    int line = 1;
    int column = 1;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Arithmetic term. Multiplication and division only by constants:
/// `mul` is value * lhs, `div` is lhs / value.
struct Term {
    enum class Kind { var, constant, add, sub, mul, div };

    Kind kind = Kind::var;
    std::string name;
    Natural value = 0;
    TermPtr lhs;
    TermPtr rhs;
    SourcePos pos;

    static TermPtr make_var(std::string name, SourcePos pos = {});
    static TermPtr make_constant(Natural value, SourcePos pos = {});
    static TermPtr make_binary(Kind kind, TermPtr lhs, TermPtr rhs, SourcePos pos = {});
    static TermPtr make_scaled(Kind kind, TermPtr operand, Natural factor, SourcePos pos = {});
};

enum class CmpOp { eq, ne, lt, le, gt, ge };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { compare, call, negation, conjunction, disjunction, implication, equivalence, exists, forall };

    Kind kind = Kind::compare;
    CmpOp op = CmpOp::eq;
    TermPtr lhs;
    TermPtr rhs;
    std::string callee;
    std::vector<TermPtr> args;
    FormulaPtr left;
    FormulaPtr right;
    std::vector<std::string> bound;  // quantified variables, in source order
    SourcePos pos;
};

struct Command {
    enum class Kind { def, eval };

    Kind kind = Kind::eval;
    std::string name;
    FormulaPtr formula;
    /// Free variables sorted by name; these are the tracks of a def.
    std::vector<std::string> free_vars;
    SourcePos pos;
};

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_string(CmpOp op);

void collect_vars(const Term& t, std::set<std::string>& out);
std::set<std::string> free_vars(const Formula& f);

}  // namespace fibaut::logic
