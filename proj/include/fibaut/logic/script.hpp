#pragma once

#include "fibaut/dfa.hpp"
#include "fibaut/logic/ast.hpp"
#include "fibaut/logic/store.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibaut::logic {

struct CommandResult {
    Command::Kind kind = Command::Kind::eval;
    std::string name;
    /// eval only.
    bool truth = false;
    /// def only: the stored automaton.
    State states = 0;
    State states_without_sink = 0;
    std::vector<std::string> vars;
    double seconds = 0;
};

struct ScriptReport {
    std::vector<CommandResult> commands;

    bool all_true() const;
    const CommandResult* find(std::string_view name) const;
    /// One line per command (`eval NAME: TRUE`, `def NAME: defined ...`).
    /// Contains no timing, so equal inputs give equal text.
    std::string text() const;
    /// Per-command wall-clock seconds.
    std::string timing() const;
};

/// A command failed; `report` holds the commands completed before it.
class ScriptError : public std::runtime_error {
public:
    ScriptError(std::string command, const std::string& message, ScriptReport report)
        : std::runtime_error("command '" + command + "': " + message),
          command_(std::move(command)),
          report_(std::move(report))
    {
    }

    const std::string& command() const { return command_; }
    const ScriptReport& report() const { return report_; }

private:
    std::string command_;
    ScriptReport report_;
};

/// Executes commands in order. Defs are written to the store.
ScriptReport run_script(std::string_view source, AutomatonStore& store);

}  // namespace fibaut::logic
