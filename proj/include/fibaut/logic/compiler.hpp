#pragma once

#include "fibaut/dfa.hpp"
#include "fibaut/logic/ast.hpp"
#include "fibaut/logic/store.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fibaut::logic {

/// An automaton together with the variable carried by each track. Tracks are
/// always sorted by variable name.
struct Relation {
    Dfa dfa;
    std::vector<std::string> vars;
};

/// Compiles formulas to automata by the automata-logic correspondence:
/// connectives become products, E is projection after conjoining validity on
/// the quantified track, A is ~E~. Arithmetic terms are flattened into fresh
/// existentially quantified variables tied together by the `add` automaton
/// from the store.
class Compiler {
public:
    explicit Compiler(const AutomatonStore& store);

    Relation compile(const Formula& f);

    /// Result of a def: the compiled formula conjoined with validity on every
    /// free track.
    Relation compile_definition(const Formula& f);

    /// Compiles a closed formula and reads off its truth value.
    bool eval_closed(const Formula& f);

    Relation conjoin(const Relation& a, const Relation& b, BoolOp op) const;
    Relation exists(const Relation& r, const std::string& var) const;
    Relation negate(const Relation& r) const;
    Relation restrict_valid(const Relation& r) const;

    /// Places a k-track automaton on the given variables (repeats allowed).
    static Relation place(const Dfa& a, const std::vector<std::string>& vars);

private:
    struct Flat {
        std::vector<Relation> constraints;
        std::vector<std::string> fresh;
    };

    std::string fresh_var();
    std::string flatten(const Term& t, Flat& flat, const std::string* target = nullptr);
    void constrain_product(const std::string& x, const Natural& c, const std::string& out, Flat& flat);
    Relation eliminate(Relation core, Flat flat);

    Relation compare(const Formula& f);
    Relation call(const Formula& f);
    Relation relation(CmpOp op, const std::string& a, const std::string& b) const;

    const Dfa& adder();
    const Dfa& plus_constant(const Natural& c);

    const AutomatonStore& store_;
    std::optional<Dfa> adder_;
    std::map<Natural, Dfa> plus_const_;
    unsigned fresh_counter_ = 0;
};

}  // namespace fibaut::logic
