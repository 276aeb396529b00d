#pragma once

#include "fibaut/dfa.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace fibaut::logic {

struct StoredAutomaton {
    Dfa dfa;
    /// Variable name of each track, in track order.
    std::vector<std::string> vars;
};

/// Named automata backing `$name(...)` calls. With a directory, every entry
/// is persisted as `<name>.txt` (automaton text format) plus `<name>.vars`
/// (one line, the variable names of the tracks) and loaded lazily.
/// Mutations are serialized; lookups may run concurrently.
class AutomatonStore {
public:
    AutomatonStore() = default;
    explicit AutomatonStore(std::filesystem::path directory);

    AutomatonStore(const AutomatonStore&) = delete;
    AutomatonStore& operator=(const AutomatonStore&) = delete;

    void put(const std::string& name, StoredAutomaton entry);
    std::optional<StoredAutomaton> get(const std::string& name) const;
    bool contains(const std::string& name) const;
    std::vector<std::string> names() const;

    const std::optional<std::filesystem::path>& directory() const { return dir_; }

    static bool valid_name(const std::string& name);

private:
    std::optional<StoredAutomaton> load(const std::string& name) const;

    std::optional<std::filesystem::path> dir_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::string, StoredAutomaton> cache_;
};

}  // namespace fibaut::logic
