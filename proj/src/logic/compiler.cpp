#include "fibaut/logic/compiler.hpp"

#include "fibaut/errors.hpp"
#include "fibaut/relations.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace fibaut::logic {

namespace {

std::vector<unsigned> positions_in(const std::vector<std::string>& vars, const std::vector<std::string>& sorted)
{
    std::vector<unsigned> out;
    out.reserve(vars.size());
    for (const auto& v : vars) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<unsigned>(it - sorted.begin()));
    }
    return out;
}

bool mentions(const Relation& r, const std::string& v)
{
    return std::binary_search(r.vars.begin(), r.vars.end(), v);
}

const Dfa& le_automaton()
{
    static const Dfa a = dfa::product(arith::lt(), arith::eq(), kOr);
    return a;
}

const Dfa& ne_automaton()
{
    static const Dfa a = [] {
        const std::array<unsigned, 2> id{0, 1};
        const std::array<unsigned, 2> swap{1, 0};
        return dfa::product(arith::lt(), arith::lt(), kOr, id, swap);
    }();
    return a;
}

}  // namespace

Compiler::Compiler(const AutomatonStore& store) : store_(store) {}

Relation Compiler::place(const Dfa& a, const std::vector<std::string>& vars)
{
    if (vars.size() != a.arity()) {
        throw ContractError("placing a " + std::to_string(a.arity()) + "-track automaton on " +
                            std::to_string(vars.size()) + " variables");
    }
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const auto map = positions_in(vars, sorted);
    bool identity = sorted.size() == vars.size();
    for (unsigned i = 0; identity && i < map.size(); ++i) {
        identity = map[i] == i;
    }
    if (identity) {
        return {a, sorted};
    }
    return {dfa::remap_tracks(a, map, static_cast<unsigned>(sorted.size())), sorted};
}

Relation Compiler::conjoin(const Relation& a, const Relation& b, BoolOp op) const
{
    std::vector<std::string> all;
    std::set_union(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(), std::back_inserter(all));
    const auto align_a = positions_in(a.vars, all);
    const auto align_b = positions_in(b.vars, all);
    return {dfa::product(a.dfa, b.dfa, op, align_a, align_b), all};
}

Relation Compiler::exists(const Relation& r, const std::string& var) const
{
    if (!mentions(r, var)) {
        return r;
    }
    const Relation guarded = conjoin(r, place(arith::valid(), {var}), kAnd);
    const auto track = positions_in({var}, guarded.vars)[0];
    std::vector<std::string> rest = guarded.vars;
    rest.erase(rest.begin() + track);
    return {dfa::project(guarded.dfa, track), rest};
}

Relation Compiler::negate(const Relation& r) const { return {dfa::complement(r.dfa), r.vars}; }

Relation Compiler::restrict_valid(const Relation& r) const
{
    Relation out = r;
    for (const auto& v : r.vars) {
        out = conjoin(out, place(arith::valid(), {v}), kAnd);
    }
    return out;
}

std::string Compiler::fresh_var()
{
    // '#' sorts before every identifier and cannot clash with user names.
    return "#" + std::to_string(fresh_counter_++);
}

const Dfa& Compiler::adder()
{
    if (!adder_) {
        auto entry = store_.get("add");
        if (!entry || entry->dfa.arity() != 3) {
            throw CompileError("base automaton 'add' is missing from the store (run `fibaut init`)");
        }
        adder_ = entry->dfa;
    }
    return *adder_;
}

const Dfa& Compiler::plus_constant(const Natural& c)
{
    auto it = plus_const_.find(c);
    if (it == plus_const_.end()) {
        // y = x + c, tracks (x, y).
        Relation r = conjoin(place(adder(), {"x", "k", "y"}), place(arith::constant(c), {"k"}), kAnd);
        r = exists(r, "k");
        it = plus_const_.emplace(c, r.dfa).first;
    }
    return it->second;
}

void Compiler::constrain_product(const std::string& x, const Natural& c, const std::string& out, Flat& flat)
{
    // c·x by balanced doubling: c·x = 2·(⌊c/2⌋·x) [+ x].
    auto build = [&](auto&& self, const Natural& k, const std::string* target) -> std::string {
        if (k == 1) {
            if (target && *target != x) {
                flat.constraints.push_back(place(arith::eq(), {x, *target}));
                return *target;
            }
            return x;
        }
        const std::string half = self(self, k / 2, nullptr);
        std::string doubled;
        if (k % 2 == 0 && target) {
            doubled = *target;
        } else {
            doubled = fresh_var();
            flat.fresh.push_back(doubled);
        }
        flat.constraints.push_back(place(adder(), {half, half, doubled}));
        if (k % 2 == 0) {
            return doubled;
        }
        std::string result;
        if (target) {
            result = *target;
        } else {
            result = fresh_var();
            flat.fresh.push_back(result);
        }
        flat.constraints.push_back(place(adder(), {doubled, x, result}));
        return result;
    };
    build(build, c, &out);
}

std::string Compiler::flatten(const Term& t, Flat& flat, const std::string* target)
{
    auto output = [&]() {
        if (target) {
            return *target;
        }
        std::string v = fresh_var();
        flat.fresh.push_back(v);
        return v;
    };

    switch (t.kind) {
    case Term::Kind::var:
        if (target && *target != t.name) {
            flat.constraints.push_back(place(arith::eq(), {t.name, *target}));
            return *target;
        }
        return t.name;

    case Term::Kind::constant: {
        const std::string out = output();
        flat.constraints.push_back(place(arith::constant(t.value), {out}));
        return out;
    }

    case Term::Kind::add: {
        if (t.rhs->kind == Term::Kind::constant || t.lhs->kind == Term::Kind::constant) {
            const Term& var_side = t.rhs->kind == Term::Kind::constant ? *t.lhs : *t.rhs;
            const Natural& c = t.rhs->kind == Term::Kind::constant ? t.rhs->value : t.lhs->value;
            if (var_side.kind == Term::Kind::constant) {
                const std::string out = output();
                flat.constraints.push_back(place(arith::constant(var_side.value + c), {out}));
                return out;
            }
            const std::string x = flatten(var_side, flat);
            const std::string out = output();
            flat.constraints.push_back(place(plus_constant(c), {x, out}));
            return out;
        }
        const std::string a = flatten(*t.lhs, flat);
        const std::string b = flatten(*t.rhs, flat);
        const std::string out = output();
        flat.constraints.push_back(place(adder(), {a, b, out}));
        return out;
    }

    case Term::Kind::sub: {
        const std::string a = flatten(*t.lhs, flat);
        if (t.rhs->kind == Term::Kind::constant) {
            const std::string out = output();
            flat.constraints.push_back(place(plus_constant(t.rhs->value), {out, a}));
            return out;
        }
        const std::string b = flatten(*t.rhs, flat);
        const std::string out = output();
        flat.constraints.push_back(place(adder(), {out, b, a}));
        return out;
    }

    case Term::Kind::mul: {
        if (t.value == 0) {
            const std::string out = output();
            flat.constraints.push_back(place(arith::constant(0), {out}));
            return out;
        }
        const std::string x = flatten(*t.lhs, flat);
        if (t.value == 1) {
            if (target && *target != x) {
                flat.constraints.push_back(place(arith::eq(), {x, *target}));
                return *target;
            }
            return x;
        }
        const std::string out = output();
        constrain_product(x, t.value, out, flat);
        return out;
    }

    case Term::Kind::div: {
        if (t.value == 0) {
            throw CompileError("division by zero at " + std::to_string(t.pos.line) + ":" +
                               std::to_string(t.pos.column));
        }
        const std::string x = flatten(*t.lhs, flat);
        const std::string out = output();
        if (t.value == 1) {
            flat.constraints.push_back(place(arith::eq(), {x, out}));
            return out;
        }
        // c·out <= x <= c·out + (c-1)
        const std::string scaled = fresh_var();
        flat.fresh.push_back(scaled);
        constrain_product(out, t.value, scaled, flat);
        flat.constraints.push_back(place(le_automaton(), {scaled, x}));
        const std::string upper = fresh_var();
        flat.fresh.push_back(upper);
        flat.constraints.push_back(place(plus_constant(t.value - 1), {scaled, upper}));
        flat.constraints.push_back(place(le_automaton(), {x, upper}));
        return out;
    }
    }
    throw CompileError("unsupported term");
}

Relation Compiler::eliminate(Relation core, Flat flat)
{
    std::vector<Relation> pool = std::move(flat.constraints);
    pool.push_back(std::move(core));
    for (const auto& v : flat.fresh) {
        std::optional<Relation> bucket;
        std::vector<Relation> rest;
        for (auto& r : pool) {
            if (mentions(r, v)) {
                bucket = bucket ? conjoin(*bucket, r, kAnd) : std::move(r);
            } else {
                rest.push_back(std::move(r));
            }
        }
        pool = std::move(rest);
        if (bucket) {
            pool.push_back(exists(*bucket, v));
        }
    }
    Relation out = std::move(pool.back());
    pool.pop_back();
    for (auto& r : pool) {
        out = conjoin(out, r, kAnd);
    }
    return out;
}

Relation Compiler::relation(CmpOp op, const std::string& a, const std::string& b) const
{
    if (a == b) {
        const bool reflexive = op == CmpOp::eq || op == CmpOp::le || op == CmpOp::ge;
        return place(reflexive ? arith::valid() : dfa::empty(1), {a});
    }
    switch (op) {
    case CmpOp::eq: return place(arith::eq(), {a, b});
    case CmpOp::ne: return place(ne_automaton(), {a, b});
    case CmpOp::lt: return place(arith::lt(), {a, b});
    case CmpOp::gt: return place(arith::lt(), {b, a});
    case CmpOp::le: return place(le_automaton(), {a, b});
    case CmpOp::ge: return place(le_automaton(), {b, a});
    }
    throw CompileError("unknown comparison");
}

Relation Compiler::compare(const Formula& f)
{
    const Term& l = *f.lhs;
    const Term& r = *f.rhs;
    if (l.kind == Term::Kind::constant && r.kind == Term::Kind::constant) {
        bool truth = false;
        switch (f.op) {
        case CmpOp::eq: truth = l.value == r.value; break;
        case CmpOp::ne: truth = l.value != r.value; break;
        case CmpOp::lt: truth = l.value < r.value; break;
        case CmpOp::le: truth = l.value <= r.value; break;
        case CmpOp::gt: truth = l.value > r.value; break;
        case CmpOp::ge: truth = l.value >= r.value; break;
        }
        return {truth ? dfa::universal(0) : dfa::empty(0), {}};
    }

    Flat flat;
    if (f.op == CmpOp::eq && (l.kind == Term::Kind::var) != (r.kind == Term::Kind::var)) {
        // v = term: build the term directly into v.
        const std::string& v = l.kind == Term::Kind::var ? l.name : r.name;
        const Term& other = l.kind == Term::Kind::var ? r : l;
        flatten(other, flat, &v);
        Relation core = place(arith::valid(), {v});
        return eliminate(std::move(core), std::move(flat));
    }
    const std::string a = flatten(l, flat);
    const std::string b = flatten(r, flat);
    return eliminate(relation(f.op, a, b), std::move(flat));
}

Relation Compiler::call(const Formula& f)
{
    auto entry = store_.get(f.callee);
    if (!entry) {
        throw CompileError("unknown automaton '$" + f.callee + "'");
    }
    if (entry->dfa.arity() != f.args.size()) {
        throw CompileError("'$" + f.callee + "' takes " + std::to_string(entry->dfa.arity()) + " arguments, got " +
                           std::to_string(f.args.size()));
    }
    Flat flat;
    std::vector<std::string> vars;
    vars.reserve(f.args.size());
    for (const auto& arg : f.args) {
        vars.push_back(flatten(*arg, flat));
    }
    return eliminate(place(entry->dfa, vars), std::move(flat));
}

Relation Compiler::compile(const Formula& f)
{
    switch (f.kind) {
    case Formula::Kind::compare: return compare(f);
    case Formula::Kind::call: return call(f);
    case Formula::Kind::negation: return negate(compile(*f.left));
    case Formula::Kind::conjunction: return conjoin(compile(*f.left), compile(*f.right), kAnd);
    case Formula::Kind::disjunction: return conjoin(compile(*f.left), compile(*f.right), kOr);
    case Formula::Kind::implication: return conjoin(compile(*f.left), compile(*f.right), kImplies);
    case Formula::Kind::equivalence: return conjoin(compile(*f.left), compile(*f.right), kIff);
    case Formula::Kind::exists: {
        Relation r = compile(*f.left);
        for (auto it = f.bound.rbegin(); it != f.bound.rend(); ++it) {
            r = exists(r, *it);
        }
        return r;
    }
    case Formula::Kind::forall: {
        Relation r = negate(compile(*f.left));
        for (auto it = f.bound.rbegin(); it != f.bound.rend(); ++it) {
            r = exists(r, *it);
        }
        return negate(r);
    }
    }
    throw CompileError("unsupported formula");
}

Relation Compiler::compile_definition(const Formula& f)
{
    Relation r = compile(f);
    for (const auto& v : free_vars(f)) {
        r = conjoin(r, place(arith::valid(), {v}), kAnd);
    }
    return r;
}

bool Compiler::eval_closed(const Formula& f)
{
    const auto fv = free_vars(f);
    if (!fv.empty()) {
        throw ContractError("eval of a formula with free variable '" + *fv.begin() + "'");
    }
    const Relation r = compile(f);
    return r.dfa.is_final(r.dfa.initial());
}

}  // namespace fibaut::logic
