#include "fibaut/logic/store.hpp"

#include "fibaut/errors.hpp"

#include <cctype>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

namespace fibaut::logic {

namespace {

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + p.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& text)
{
    const auto tmp = p.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp);
        }
        out << text;
    }
    std::filesystem::rename(tmp, p);
}

}  // namespace

AutomatonStore::AutomatonStore(std::filesystem::path directory) : dir_(std::move(directory))
{
    std::filesystem::create_directories(*dir_);
}

bool AutomatonStore::valid_name(const std::string& name)
{
    if (name.empty()) {
        return false;
    }
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

void AutomatonStore::put(const std::string& name, StoredAutomaton entry)
{
    if (!valid_name(name)) {
        throw ContractError("invalid automaton name '" + name + "'");
    }
    if (entry.vars.size() != entry.dfa.arity()) {
        throw ContractError("automaton '" + name + "' has " + std::to_string(entry.dfa.arity()) +
                            " tracks but " + std::to_string(entry.vars.size()) + " variable names");
    }
    std::unique_lock lock(mutex_);
    if (dir_) {
        std::string vars;
        for (std::size_t i = 0; i < entry.vars.size(); ++i) {
            vars += (i ? " " : "") + entry.vars[i];
        }
        write_file(*dir_ / (name + ".txt"), dfa::to_text(entry.dfa));
        write_file(*dir_ / (name + ".vars"), vars + "\n");
    }
    cache_.insert_or_assign(name, std::move(entry));
}

std::optional<StoredAutomaton> AutomatonStore::load(const std::string& name) const
{
    if (!dir_ || !valid_name(name)) {
        return std::nullopt;
    }
    const auto txt = *dir_ / (name + ".txt");
    const auto vars_path = *dir_ / (name + ".vars");
    if (!std::filesystem::exists(txt) || !std::filesystem::exists(vars_path)) {
        return std::nullopt;
    }
    StoredAutomaton entry{dfa::from_text(read_file(txt)), {}};
    std::istringstream vs(read_file(vars_path));
    for (std::string v; vs >> v;) {
        entry.vars.push_back(v);
    }
    if (entry.vars.size() != entry.dfa.arity()) {
        throw std::runtime_error("store entry '" + name + "': variable list does not match arity");
    }
    return entry;
}

std::optional<StoredAutomaton> AutomatonStore::get(const std::string& name) const
{
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(name); it != cache_.end()) {
            return it->second;
        }
    }
    std::unique_lock lock(mutex_);
    if (auto it = cache_.find(name); it != cache_.end()) {
        return it->second;
    }
    auto loaded = load(name);
    if (loaded) {
        cache_.emplace(name, *loaded);
    }
    return loaded;
}

bool AutomatonStore::contains(const std::string& name) const { return get(name).has_value(); }

std::vector<std::string> AutomatonStore::names() const
{
    std::shared_lock lock(mutex_);
    std::set<std::string> all;
    for (const auto& [name, _] : cache_) {
        all.insert(name);
    }
    if (dir_ && std::filesystem::exists(*dir_)) {
        for (const auto& e : std::filesystem::directory_iterator(*dir_)) {
            if (e.path().extension() == ".txt") {
                all.insert(e.path().stem().string());
            }
        }
    }
    return {all.begin(), all.end()};
}

}  // namespace fibaut::logic
