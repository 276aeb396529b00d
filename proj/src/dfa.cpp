#include "fibaut/dfa.hpp"

#include "fibaut/errors.hpp"
#include "fibaut/zeckendorf.hpp"
#include "hash_tables.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace fibaut {

Dfa::Dfa() : arity_(0), initial_(0), finals_{0}, delta_{0} {}

Dfa::Dfa(unsigned arity, State initial, std::vector<std::uint8_t> finals, std::vector<State> delta)
    : arity_(arity), initial_(initial), finals_(std::move(finals)), delta_(std::move(delta))
{
    if (arity_ > kMaxArity) {
        throw ContractError("arity " + std::to_string(arity_) + " exceeds the supported maximum");
    }
    const std::size_t n = finals_.size();
    if (n == 0) {
        throw ContractError("automaton needs at least one state");
    }
    if (delta_.size() != n * alphabet_size()) {
        throw ContractError("transition table is not total");
    }
    if (initial_ >= n) {
        throw ContractError("initial state out of range");
    }
    for (State t : delta_) {
        if (t >= n) {
            throw ContractError("transition target out of range");
        }
    }
    for (std::uint8_t& f : finals_) {
        f = f ? 1 : 0;
    }
}

State Dfa::run(State from, std::span<const Symbol> word) const
{
    State q = from;
    for (Symbol s : word) {
        q = next(q, s);
    }
    return q;
}

namespace dfa {

Dfa empty(unsigned arity)
{
    return Dfa(arity, 0, {0}, std::vector<State>(std::size_t{1} << arity, 0));
}

Dfa universal(unsigned arity)
{
    return Dfa(arity, 0, {1}, std::vector<State>(std::size_t{1} << arity, 0));
}

namespace {

std::vector<Symbol> interleave(const std::vector<zeck::Digits>& words, unsigned arity)
{
    std::size_t len = 0;
    for (const auto& w : words) {
        len = std::max(len, w.size());
    }
    std::vector<Symbol> out(len, 0);
    for (unsigned t = 0; t < arity; ++t) {
        const auto& w = words[t];
        const std::size_t pad = len - w.size();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i]) {
                out[pad + i] |= Symbol{1} << (arity - 1 - t);
            }
        }
    }
    return out;
}

void check_arity(const Dfa& a, std::size_t n)
{
    if (n != a.arity()) {
        throw ContractError("expected " + std::to_string(a.arity()) + " inputs, got " + std::to_string(n));
    }
}

}  // namespace

bool accepts(const Dfa& a, std::span<const Natural> inputs)
{
    check_arity(a, inputs.size());
    std::vector<zeck::Digits> words;
    words.reserve(inputs.size());
    for (const Natural& n : inputs) {
        words.push_back(zeck::encode(n).digits());
    }
    return a.accepts_word(interleave(words, a.arity()));
}

bool accepts(const Dfa& a, std::span<const std::uint64_t> inputs)
{
    check_arity(a, inputs.size());
    std::vector<zeck::Digits> words;
    words.reserve(inputs.size());
    for (std::uint64_t n : inputs) {
        words.push_back(zeck::encode(n).digits());
    }
    return a.accepts_word(interleave(words, a.arity()));
}

bool accepts(const Dfa& a, std::initializer_list<std::uint64_t> inputs)
{
    return accepts(a, std::span<const std::uint64_t>(inputs.begin(), inputs.size()));
}

namespace {

/// Symbol of `arity` tracks seen by an operand whose track i sits on output
/// track align[i].
std::vector<Symbol> pullback_table(std::span<const unsigned> align, unsigned operand_arity, unsigned out_arity)
{
    const Symbol m = Symbol{1} << out_arity;
    std::vector<Symbol> table(m, 0);
    for (Symbol s = 0; s < m; ++s) {
        Symbol t = 0;
        for (unsigned i = 0; i < operand_arity; ++i) {
            t = (t << 1) | track_bit(s, align[i], out_arity);
        }
        table[s] = t;
    }
    return table;
}

void check_alignment(std::span<const unsigned> align, unsigned operand_arity, unsigned out_arity,
                     std::vector<bool>& covered)
{
    if (align.size() != operand_arity) {
        throw ContractError("alignment size does not match operand arity");
    }
    std::vector<bool> seen(out_arity, false);
    for (unsigned t : align) {
        if (t >= out_arity) {
            throw ContractError("alignment targets a track beyond the output arity");
        }
        if (seen[t]) {
            throw ContractError("alignment maps two operand tracks to one output track");
        }
        seen[t] = true;
        covered[t] = true;
    }
}

}  // namespace

Dfa product(const Dfa& a, const Dfa& b, BoolOp op, std::span<const unsigned> align_a,
            std::span<const unsigned> align_b)
{
    unsigned out_arity = 0;
    for (unsigned t : align_a) {
        out_arity = std::max(out_arity, t + 1);
    }
    for (unsigned t : align_b) {
        out_arity = std::max(out_arity, t + 1);
    }
    std::vector<bool> covered(out_arity, false);
    check_alignment(align_a, a.arity(), out_arity, covered);
    check_alignment(align_b, b.arity(), out_arity, covered);
    if (!std::ranges::all_of(covered, [](bool c) { return c; })) {
        throw ContractError("alignment leaves an output track uncovered");
    }
    if (out_arity > kMaxArity) {
        throw ContractError("product arity exceeds the supported maximum");
    }

    const Symbol m = Symbol{1} << out_arity;
    const auto sym_a = pullback_table(align_a, a.arity(), out_arity);
    const auto sym_b = pullback_table(align_b, b.arity(), out_arity);
    const std::uint64_t nb = b.state_count();

    detail::KeyIndex index(std::size_t{a.state_count()} + b.state_count());
    std::vector<std::pair<State, State>> pairs;
    std::vector<State> delta;
    std::vector<std::uint8_t> finals;

    auto intern = [&](State qa, State qb) {
        auto [id, inserted] = index.insert(std::uint64_t{qa} * nb + qb);
        if (inserted) {
            pairs.emplace_back(qa, qb);
            finals.push_back(op(a.is_final(qa), b.is_final(qb)) ? 1 : 0);
        }
        return id;
    };

    intern(a.initial(), b.initial());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [qa, qb] = pairs[i];
        const auto row_a = a.row(qa);
        const auto row_b = b.row(qb);
        for (Symbol s = 0; s < m; ++s) {
            delta.push_back(intern(row_a[sym_a[s]], row_b[sym_b[s]]));
        }
    }
    return minimize(Dfa(out_arity, 0, std::move(finals), std::move(delta)));
}

Dfa product(const Dfa& a, const Dfa& b, BoolOp op)
{
    if (a.arity() != b.arity()) {
        throw ContractError("product of automata with different arities needs an explicit alignment");
    }
    std::vector<unsigned> id(a.arity());
    std::iota(id.begin(), id.end(), 0u);
    return product(a, b, op, id, id);
}

Dfa complement(const Dfa& a)
{
    std::vector<std::uint8_t> finals = a.finals();
    for (auto& f : finals) {
        f = f ? 0 : 1;
    }
    return Dfa(a.arity(), a.initial(), std::move(finals), a.transitions());
}

Dfa project(const Dfa& a, unsigned track)
{
    const unsigned k = a.arity();
    if (k == 0 || track >= k) {
        throw ContractError("projection track " + std::to_string(track) + " out of range for arity " +
                            std::to_string(k));
    }
    const unsigned out_arity = k - 1;
    const Symbol m = Symbol{1} << out_arity;

    // Full symbols with the projected bit set to 0 and 1.
    std::vector<Symbol> with0(m);
    std::vector<Symbol> with1(m);
    const unsigned low_bits = k - 1 - track;  // bits below the projected one
    for (Symbol s = 0; s < m; ++s) {
        const Symbol high = (s >> low_bits) << (low_bits + 1);
        const Symbol low = s & ((Symbol{1} << low_bits) - 1);
        with0[s] = high | low;
        with1[s] = high | (Symbol{1} << low_bits) | low;
    }

    const State n = a.state_count();
    std::vector<State> stamp(n, ~State{0});
    State stamp_id = 0;

    // Leading-zero closure: everything reachable from q0 on (0..0, any).
    std::vector<State> init{a.initial()};
    stamp[a.initial()] = stamp_id;
    for (std::size_t i = 0; i < init.size(); ++i) {
        for (State t : {a.next(init[i], with0[0]), a.next(init[i], with1[0])}) {
            if (stamp[t] != stamp_id) {
                stamp[t] = stamp_id;
                init.push_back(t);
            }
        }
    }
    std::sort(init.begin(), init.end());

    detail::SetIndex sets;
    sets.insert(init);
    std::vector<State> delta;
    std::vector<std::uint8_t> finals;
    std::vector<State> current;
    std::vector<State> succ;

    for (State id = 0; id < sets.count(); ++id) {
        auto view = sets.get(id);
        current.assign(view.begin(), view.end());
        finals.push_back(std::ranges::any_of(current, [&](State q) { return a.is_final(q); }) ? 1 : 0);
        for (Symbol s = 0; s < m; ++s) {
            ++stamp_id;
            succ.clear();
            for (State q : current) {
                const auto row = a.row(q);
                for (State t : {row[with0[s]], row[with1[s]]}) {
                    if (stamp[t] != stamp_id) {
                        stamp[t] = stamp_id;
                        succ.push_back(t);
                    }
                }
            }
            std::sort(succ.begin(), succ.end());
            delta.push_back(sets.insert(succ).first);
        }
    }
    return minimize(Dfa(out_arity, 0, std::move(finals), std::move(delta)));
}

bool equivalent(const Dfa& a, const Dfa& b)
{
    if (a.arity() != b.arity()) {
        throw ContractError("equivalence check between automata of different arity");
    }
    return minimize(a) == minimize(b);
}

bool is_empty(const Dfa& a)
{
    std::vector<bool> seen(a.state_count(), false);
    std::vector<State> stack{a.initial()};
    seen[a.initial()] = true;
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        if (a.is_final(q)) {
            return false;
        }
        for (State t : a.row(q)) {
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    return true;
}

namespace {

/// States from which some final state is reachable.
std::vector<bool> coreachable(const Dfa& a)
{
    const State n = a.state_count();
    std::vector<std::vector<State>> preds(n);
    for (State q = 0; q < n; ++q) {
        for (State t : a.row(q)) {
            preds[t].push_back(q);
        }
    }
    std::vector<bool> live(n, false);
    std::vector<State> stack;
    for (State q = 0; q < n; ++q) {
        if (a.is_final(q)) {
            live[q] = true;
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        for (State p : preds[q]) {
            if (!live[p]) {
                live[p] = true;
                stack.push_back(p);
            }
        }
    }
    return live;
}

struct TrackState {
    std::uint64_t value = 0;
    std::uint64_t lower = 0;
    bool last_one = false;
};

}  // namespace

std::vector<std::vector<std::uint64_t>> enumerate(const Dfa& a, unsigned max_len)
{
    if (max_len > 90) {
        throw ContractError("enumeration length beyond 64-bit range");
    }
    const unsigned k = a.arity();
    const Symbol m = a.alphabet_size();
    const auto live = coreachable(a);
    std::vector<std::vector<std::uint64_t>> out;

    std::vector<TrackState> tracks(k);
    // Depth-first over words of exactly max_len symbols with valid tracks.
    auto dfs = [&](auto&& self, State q, unsigned depth) -> void {
        if (!live[q]) {
            return;
        }
        if (depth == max_len) {
            if (a.is_final(q)) {
                std::vector<std::uint64_t> tuple(k);
                for (unsigned t = 0; t < k; ++t) {
                    tuple[t] = tracks[t].value;
                }
                out.push_back(std::move(tuple));
            }
            return;
        }
        const std::vector<TrackState> saved = tracks;
        for (Symbol s = 0; s < m; ++s) {
            bool ok = true;
            for (unsigned t = 0; t < k; ++t) {
                const bool bit = track_bit(s, t, k) != 0;
                if (bit && saved[t].last_one) {
                    ok = false;
                    break;
                }
                const std::uint64_t c = bit ? 1 : 0;
                tracks[t].value = saved[t].value + saved[t].lower + c;
                tracks[t].lower = saved[t].value + c;
                tracks[t].last_one = bit;
            }
            if (ok) {
                self(self, a.next(q, s), depth + 1);
            }
        }
        tracks = saved;
    };
    dfs(dfs, a.initial(), 0);
    std::sort(out.begin(), out.end());
    return out;
}

Dfa remap_tracks(const Dfa& a, std::span<const unsigned> map, unsigned out_arity)
{
    if (map.size() != a.arity()) {
        throw ContractError("track map size does not match arity");
    }
    if (out_arity > kMaxArity) {
        throw ContractError("remapped arity exceeds the supported maximum");
    }
    for (unsigned t : map) {
        if (t >= out_arity) {
            throw ContractError("track map targets a track beyond the output arity");
        }
    }
    const Symbol m = Symbol{1} << out_arity;
    const auto sym = pullback_table(map, a.arity(), out_arity);
    const State n = a.state_count();
    std::vector<State> delta(static_cast<std::size_t>(n) * m);
    for (State q = 0; q < n; ++q) {
        const auto row = a.row(q);
        for (Symbol s = 0; s < m; ++s) {
            delta[static_cast<std::size_t>(q) * m + s] = row[sym[s]];
        }
    }
    return minimize(Dfa(out_arity, a.initial(), a.finals(), std::move(delta)));
}

Dfa add_track(const Dfa& a, unsigned position)
{
    if (position > a.arity()) {
        throw ContractError("add_track position out of range");
    }
    std::vector<unsigned> map(a.arity());
    for (unsigned i = 0; i < a.arity(); ++i) {
        map[i] = i < position ? i : i + 1;
    }
    return remap_tracks(a, map, a.arity() + 1);
}

Dfa permute_tracks(const Dfa& a, std::span<const unsigned> perm)
{
    if (perm.size() != a.arity()) {
        throw ContractError("permutation size does not match arity");
    }
    std::vector<bool> seen(perm.size(), false);
    for (unsigned t : perm) {
        if (t >= perm.size() || seen[t]) {
            throw ContractError("invalid track permutation");
        }
        seen[t] = true;
    }
    return remap_tracks(a, perm, a.arity());
}

bool has_sink(const Dfa& a)
{
    for (State q = 0; q < a.state_count(); ++q) {
        if (!a.is_final(q) && std::ranges::all_of(a.row(q), [q](State t) { return t == q; })) {
            return true;
        }
    }
    return false;
}

State states_without_sink(const Dfa& a)
{
    return a.state_count() - (has_sink(a) ? 1 : 0);
}

bool leading_zero_invariant(const Dfa& a)
{
    const Dfa min = minimize(a);
    return min.next(min.initial(), 0) == min.initial();
}

std::string symbol_string(Symbol s, unsigned arity)
{
    std::string out(arity, '0');
    for (unsigned t = 0; t < arity; ++t) {
        out[t] = track_bit(s, t, arity) ? '1' : '0';
    }
    return out;
}

std::string to_text(const Dfa& a)
{
    std::ostringstream os;
    os << "arity " << a.arity() << '\n';
    os << "states " << a.state_count() << '\n';
    os << "initial " << a.initial() << '\n';
    os << "finals";
    for (State q = 0; q < a.state_count(); ++q) {
        if (a.is_final(q)) {
            os << ' ' << q;
        }
    }
    os << '\n';
    for (State q = 0; q < a.state_count(); ++q) {
        for (Symbol s = 0; s < a.alphabet_size(); ++s) {
            os << q << ' ' << symbol_string(s, a.arity()) << ' ' << a.next(q, s) << '\n';
        }
    }
    return os.str();
}

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool next(std::string_view& line)
    {
        if (pos_ >= text_.size()) {
            return false;
        }
        const std::size_t end = text_.find('\n', pos_);
        const std::size_t stop = end == std::string_view::npos ? text_.size() : end;
        line = text_.substr(pos_, stop - pos_);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        pos_ = stop + 1;
        ++line_no_;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("automaton text line " + std::to_string(line_no_) + ": " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_no_ = 0;
};

std::uint64_t parse_u64(std::string_view s, const LineReader& reader)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        reader.fail("expected a number, got '" + std::string(s) + "'");
    }
    return v;
}

std::uint64_t header(LineReader& reader, std::string_view key)
{
    std::string_view line;
    if (!reader.next(line)) {
        reader.fail("missing '" + std::string(key) + "' line");
    }
    if (line.substr(0, key.size()) != key || line.size() <= key.size() + 1 || line[key.size()] != ' ') {
        reader.fail("expected '" + std::string(key) + " <n>'");
    }
    return parse_u64(line.substr(key.size() + 1), reader);
}

}  // namespace

Dfa from_text(std::string_view text)
{
    LineReader reader(text);
    const auto arity = static_cast<unsigned>(header(reader, "arity"));
    if (arity > kMaxArity) {
        reader.fail("arity too large");
    }
    const auto states = static_cast<State>(header(reader, "states"));
    const auto initial = static_cast<State>(header(reader, "initial"));
    if (states == 0) {
        reader.fail("automaton needs at least one state");
    }

    std::string_view line;
    if (!reader.next(line) || line.substr(0, 6) != "finals") {
        reader.fail("expected 'finals' line");
    }
    std::vector<std::uint8_t> finals(states, 0);
    std::string_view rest = line.substr(6);
    while (!rest.empty()) {
        if (rest.front() != ' ') {
            reader.fail("malformed finals list");
        }
        rest.remove_prefix(1);
        const std::size_t sp = rest.find(' ');
        const auto q = parse_u64(rest.substr(0, sp), reader);
        if (q >= states) {
            reader.fail("final state out of range");
        }
        finals[q] = 1;
        rest = sp == std::string_view::npos ? std::string_view{} : rest.substr(sp);
    }

    const Symbol m = Symbol{1} << arity;
    std::vector<State> delta(static_cast<std::size_t>(states) * m);
    for (State q = 0; q < states; ++q) {
        for (Symbol s = 0; s < m; ++s) {
            if (!reader.next(line)) {
                reader.fail("missing transition lines");
            }
            const std::size_t a = line.find(' ');
            if (a == std::string_view::npos) {
                reader.fail("malformed transition");
            }
            const std::size_t b = line.find(' ', a + 1);
            if (b == std::string_view::npos) {
                reader.fail("malformed transition");
            }
            const auto from = parse_u64(line.substr(0, a), reader);
            const std::string_view tuple = line.substr(a + 1, b - a - 1);
            const auto to = parse_u64(line.substr(b + 1), reader);
            if (from != q || tuple != symbol_string(s, arity)) {
                reader.fail("transitions must be listed in (from, tuple) order");
            }
            if (to >= states) {
                reader.fail("transition target out of range");
            }
            delta[static_cast<std::size_t>(q) * m + s] = static_cast<State>(to);
        }
    }
    while (reader.next(line)) {
        if (!line.empty()) {
            reader.fail("trailing content");
        }
    }
    return Dfa(arity, initial, std::move(finals), std::move(delta));
}

std::string to_dot(const Dfa& a, std::string_view name)
{
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    os << "  rankdir=LR;\n";
    os << "  __start [shape=point];\n";
    for (State q = 0; q < a.state_count(); ++q) {
        os << "  " << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle") << "];\n";
    }
    os << "  __start -> " << a.initial() << ";\n";
    for (State q = 0; q < a.state_count(); ++q) {
        // Group parallel edges into one label.
        std::vector<std::pair<State, std::vector<Symbol>>> edges;
        for (Symbol s = 0; s < a.alphabet_size(); ++s) {
            const State t = a.next(q, s);
            auto it = std::ranges::find_if(edges, [t](const auto& e) { return e.first == t; });
            if (it == edges.end()) {
                edges.push_back({t, {s}});
            } else {
                it->second.push_back(s);
            }
        }
        for (const auto& [t, symbols] : edges) {
            os << "  " << q << " -> " << t << " [label=\"";
            for (std::size_t i = 0; i < symbols.size(); ++i) {
                os << (i ? "," : "") << (a.arity() ? symbol_string(symbols[i], a.arity()) : "ε");
            }
            os << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace dfa
}  // namespace fibaut
