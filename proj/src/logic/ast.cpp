#include "fibaut/logic/ast.hpp"

namespace fibaut::logic {

TermPtr Term::make_var(std::string name, SourcePos pos)
{
    auto t = std::make_shared<Term>();
    t->kind = Kind::var;
    t->name = std::move(name);
    t->pos = pos;
    return t;
}

TermPtr Term::make_constant(Natural value, SourcePos pos)
{
    auto t = std::make_shared<Term>();
    t->kind = Kind::constant;
    t->value = std::move(value);
    t->pos = pos;
    return t;
}

TermPtr Term::make_binary(Kind kind, TermPtr lhs, TermPtr rhs, SourcePos pos)
{
    auto t = std::make_shared<Term>();
    t->kind = kind;
    t->lhs = std::move(lhs);
    t->rhs = std::move(rhs);
    t->pos = pos;
    return t;
}

TermPtr Term::make_scaled(Kind kind, TermPtr operand, Natural factor, SourcePos pos)
{
    auto t = std::make_shared<Term>();
    t->kind = kind;
    t->lhs = std::move(operand);
    t->value = std::move(factor);
    t->pos = pos;
    return t;
}

std::string to_string(CmpOp op)
{
    switch (op) {
    case CmpOp::eq: return "=";
    case CmpOp::ne: return "!=";
    case CmpOp::lt: return "<";
    case CmpOp::le: return "<=";
    case CmpOp::gt: return ">";
    case CmpOp::ge: return ">=";
    }
    return "?";
}

std::string to_string(const Term& t)
{
    switch (t.kind) {
    case Term::Kind::var: return t.name;
    case Term::Kind::constant: return t.value.str();
    case Term::Kind::add: return "(" + to_string(*t.lhs) + "+" + to_string(*t.rhs) + ")";
    case Term::Kind::sub: return "(" + to_string(*t.lhs) + "-" + to_string(*t.rhs) + ")";
    case Term::Kind::mul: return "(" + t.value.str() + "*" + to_string(*t.lhs) + ")";
    case Term::Kind::div: return "(" + to_string(*t.lhs) + "/" + t.value.str() + ")";
    }
    return "?";
}

std::string to_string(const Formula& f)
{
    auto binary = [&](const char* op) { return "(" + to_string(*f.left) + " " + op + " " + to_string(*f.right) + ")"; };
    auto quantified = [&](const char* q) {
        std::string out = q;
        for (std::size_t i = 0; i < f.bound.size(); ++i) {
            out += (i ? "," : "") + f.bound[i];
        }
        return "(" + out + " " + to_string(*f.left) + ")";
    };
    switch (f.kind) {
    case Formula::Kind::compare: return to_string(*f.lhs) + to_string(f.op) + to_string(*f.rhs);
    case Formula::Kind::call: {
        std::string out = "$" + f.callee + "(";
        for (std::size_t i = 0; i < f.args.size(); ++i) {
            out += (i ? "," : "") + to_string(*f.args[i]);
        }
        return out + ")";
    }
    case Formula::Kind::negation: return "~" + to_string(*f.left);
    case Formula::Kind::conjunction: return binary("&");
    case Formula::Kind::disjunction: return binary("|");
    case Formula::Kind::implication: return binary("=>");
    case Formula::Kind::equivalence: return binary("<=>");
    case Formula::Kind::exists: return quantified("E");
    case Formula::Kind::forall: return quantified("A");
    }
    return "?";
}

void collect_vars(const Term& t, std::set<std::string>& out)
{
    if (t.kind == Term::Kind::var) {
        out.insert(t.name);
    }
    if (t.lhs) {
        collect_vars(*t.lhs, out);
    }
    if (t.rhs) {
        collect_vars(*t.rhs, out);
    }
}

std::set<std::string> free_vars(const Formula& f)
{
    std::set<std::string> out;
    switch (f.kind) {
    case Formula::Kind::compare:
        collect_vars(*f.lhs, out);
        collect_vars(*f.rhs, out);
        break;
    case Formula::Kind::call:
        for (const auto& a : f.args) {
            collect_vars(*a, out);
        }
        break;
    case Formula::Kind::negation: out = free_vars(*f.left); break;
    case Formula::Kind::exists:
    case Formula::Kind::forall:
        out = free_vars(*f.left);
        for (const auto& v : f.bound) {
            out.erase(v);
        }
        break;
    default:
        out = free_vars(*f.left);
        out.merge(free_vars(*f.right));
        break;
    }
    return out;
}

}  // namespace fibaut::logic
