#include "fibaut/logic/script.hpp"

#include "fibaut/errors.hpp"
#include "fibaut/logic/compiler.hpp"
#include "fibaut/logic/parser.hpp"

#include <chrono>
#include <cstdio>

namespace fibaut::logic {

bool ScriptReport::all_true() const
{
    for (const auto& c : commands) {
        if (c.kind == Command::Kind::eval && !c.truth) {
            return false;
        }
    }
    return true;
}

const CommandResult* ScriptReport::find(std::string_view name) const
{
    for (auto it = commands.rbegin(); it != commands.rend(); ++it) {
        if (it->name == name) {
            return &*it;
        }
    }
    return nullptr;
}

std::string ScriptReport::text() const
{
    std::string out;
    for (const auto& c : commands) {
        if (c.kind == Command::Kind::eval) {
            out += "eval " + c.name + ": " + (c.truth ? "TRUE" : "FALSE") + "\n";
            continue;
        }
        std::string vars;
        for (std::size_t i = 0; i < c.vars.size(); ++i) {
            vars += (i ? "," : "") + c.vars[i];
        }
        out += "def " + c.name + "(" + vars + "): defined, " + std::to_string(c.states) + " states (" +
               std::to_string(c.states_without_sink) + " without sink)\n";
    }
    return out;
}

std::string ScriptReport::timing() const
{
    std::string out;
    char buf[64];
    for (const auto& c : commands) {
        std::snprintf(buf, sizeof buf, "%.3fs", c.seconds);
        out += c.name + " " + buf + "\n";
    }
    return out;
}

ScriptReport run_script(std::string_view source, AutomatonStore& store)
{
    ScriptReport report;
    std::vector<Command> commands;
    try {
        commands = parse_script(source);
    } catch (const ParseError& e) {
        throw ScriptError("<parse>", e.what(), report);
    }
    for (const auto& cmd : commands) {
        const auto start = std::chrono::steady_clock::now();
        CommandResult result;
        result.kind = cmd.kind;
        result.name = cmd.name;
        try {
            Compiler compiler(store);
            if (cmd.kind == Command::Kind::eval) {
                result.truth = compiler.eval_closed(*cmd.formula);
            } else {
                Relation r = compiler.compile_definition(*cmd.formula);
                result.states = r.dfa.state_count();
                result.states_without_sink = dfa::states_without_sink(r.dfa);
                result.vars = r.vars;
                store.put(cmd.name, {std::move(r.dfa), std::move(r.vars)});
            }
        } catch (const std::exception& e) {
            throw ScriptError(cmd.name, e.what(), report);
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.commands.push_back(std::move(result));
    }
    return report;
}

}  // namespace fibaut::logic
