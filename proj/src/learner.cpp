#include "fibaut/learner.hpp"

#include "fibaut/errors.hpp"
#include "fibaut/golden.hpp"
#include "fibaut/hurtsada.hpp"
#include "fibaut/kernels.hpp"
#include "fibaut/logic/compiler.hpp"
#include "fibaut/logic/parser.hpp"

#include <memory>
#include <sstream>

namespace fibaut::learn {

namespace {

constexpr unsigned kMaxWordLength = 90;  // F(92) < 2^64

struct PrefixState {
    std::vector<std::uint64_t> value;
    std::vector<std::uint64_t> lowered;
    std::vector<Symbol> word;
    bool invalid = false;
};

struct Row {
    std::vector<std::uint64_t> known;
    std::vector<std::uint64_t> value;

    kernels::RowView view() const { return {known, value}; }
};

void set_range(std::vector<std::uint64_t>& bits, std::size_t from, std::size_t count)
{
    std::size_t i = from;
    const std::size_t end = from + count;
    while (i < end && (i & 63) != 0) {
        bits[i >> 6] |= std::uint64_t{1} << (i & 63);
        ++i;
    }
    while (i + 64 <= end) {
        bits[i >> 6] = ~std::uint64_t{0};
        i += 64;
    }
    while (i < end) {
        bits[i >> 6] |= std::uint64_t{1} << (i & 63);
        ++i;
    }
}

class Learner {
public:
    Learner(const MembershipOracle& oracle, unsigned prefix_bound, unsigned depth)
        : oracle_(oracle), k_(oracle.arity), depth_(depth), prefix_bound_(prefix_bound)
    {
        if (k_ == 0 || k_ > 8) {
            throw ContractError("learner supports 1 to 8 tracks");
        }
        if (oracle_.bounds.size() != k_) {
            throw ContractError("oracle bounds do not match its arity");
        }
        if (prefix_bound_ + depth_ + 1 > kMaxWordLength) {
            throw ContractError("prefix bound plus depth exceeds the 64-bit word length limit");
        }
        const Symbol alphabet = Symbol{1} << k_;
        subtree_.assign(depth_ + 1, std::vector<std::size_t>(alphabet, 1));
        for (unsigned r = 1; r <= depth_; ++r) {
            for (Symbol a = 0; a < alphabet; ++a) {
                std::size_t total = 1;
                for (Symbol b = 0; b < alphabet; ++b) {
                    if ((a & b) == 0) {
                        total += subtree_[r - 1][b];
                    }
                }
                subtree_[r][a] = total;
            }
        }
        positions_ = 1;
        if (depth_ > 0) {
            for (Symbol a = 0; a < alphabet; ++a) {
                positions_ += subtree_[depth_ - 1][a];
            }
        }
        words_ = (positions_ + 63) / 64;
    }

    Candidate run()
    {
        const Symbol alphabet = Symbol{1} << k_;
        PrefixState root;
        root.value.assign(k_, 0);
        root.lowered.assign(k_, 0);

        std::vector<PrefixState> reps;
        std::vector<Row> rows;
        std::vector<State> delta;
        reps.push_back(root);
        rows.push_back(compute_row(root));

        for (std::size_t c = 0; c < reps.size(); ++c) {
            delta.resize(reps.size() * alphabet);
            for (Symbol a = 0; a < alphabet; ++a) {
                if (c == 0 && a == 0) {
                    delta[a] = 0;  // leading zeros
                    continue;
                }
                PrefixState next = extend(reps[c], a);
                Row row = compute_row(next);
                const auto target = classify(row, rows);
                if (target) {
                    delta[c * alphabet + a] = *target;
                    continue;
                }
                if (next.word.size() > prefix_bound_) {
                    throw EnvelopeError("prefix " + describe(next) + " exceeds the prefix bound " +
                                        std::to_string(prefix_bound_) + " without matching a class");
                }
                delta[c * alphabet + a] = static_cast<State>(reps.size());
                reps.push_back(std::move(next));
                rows.push_back(std::move(row));
                delta.resize(reps.size() * alphabet);
            }
        }

        std::vector<std::uint8_t> finals(reps.size());
        for (std::size_t c = 0; c < reps.size(); ++c) {
            if ((rows[c].known[0] & 1u) == 0) {
                throw EnvelopeError("acceptance of representative " + describe(reps[c]) +
                                    " is outside the oracle envelope");
            }
            finals[c] = static_cast<std::uint8_t>(rows[c].value[0] & 1u);
        }
        Candidate out;
        out.dfa = dfa::minimize(Dfa(k_, 0, std::move(finals), std::move(delta)));
        out.stats.depth = depth_;
        out.stats.classes = static_cast<State>(reps.size());
        out.stats.states = out.dfa.state_count();
        out.stats.states_without_sink = dfa::states_without_sink(out.dfa);
        out.stats.envelope_limited = envelope_limited_;
        out.stats.queries = queries_;
        return out;
    }

private:
    PrefixState extend(const PrefixState& p, Symbol a) const
    {
        PrefixState n = p;
        if (!p.word.empty() && (p.word.back() & a) != 0) {
            n.invalid = true;
        }
        for (unsigned t = 0; t < k_; ++t) {
            const std::uint64_t bit = track_bit(a, t, k_);
            n.value[t] = p.value[t] + p.lowered[t] + bit;
            n.lowered[t] = p.value[t] + bit;
        }
        n.word.push_back(a);
        return n;
    }

    bool in_bounds(const std::uint64_t* v) const
    {
        for (unsigned t = 0; t < k_; ++t) {
            if (oracle_.bounds[t] && v[t] > *oracle_.bounds[t]) {
                return false;
            }
        }
        return true;
    }

    Row compute_row(const PrefixState& p)
    {
        Row row{std::vector<std::uint64_t>(words_, 0), std::vector<std::uint64_t>(words_, 0)};
        if (p.invalid) {
            set_range(row.known, 0, positions_);
            return row;
        }
        if (!in_bounds(p.value.data())) {
            return row;
        }
        std::size_t pos = 0;
        visit(row, pos, depth_, p.word.empty() ? 0 : p.word.back(), true, p.value.data(), p.lowered.data());
        return row;
    }

    void visit(Row& row, std::size_t& pos, unsigned remaining, Symbol last, bool root, const std::uint64_t* v,
               const std::uint64_t* vl)
    {
        ++queries_;
        const std::size_t here = pos++;
        row.known[here >> 6] |= std::uint64_t{1} << (here & 63);
        if (oracle_.query(std::span<const std::uint64_t>(v, k_))) {
            row.value[here >> 6] |= std::uint64_t{1} << (here & 63);
        }
        if (remaining == 0) {
            return;
        }
        const Symbol alphabet = Symbol{1} << k_;
        std::uint64_t nv[8];
        std::uint64_t nvl[8];
        for (Symbol a = 0; a < alphabet; ++a) {
            const bool clash = (last & a) != 0;
            if (clash && !root) {
                continue;  // not part of the extension tree
            }
            const std::size_t size = subtree_[remaining - 1][a];
            if (clash) {
                set_range(row.known, pos, size);
                pos += size;
                continue;
            }
            for (unsigned t = 0; t < k_; ++t) {
                const std::uint64_t bit = track_bit(a, t, k_);
                nv[t] = v[t] + vl[t] + bit;
                nvl[t] = v[t] + bit;
            }
            if (!in_bounds(nv)) {
                pos += size;
                continue;
            }
            visit(row, pos, remaining - 1, a, false, nv, nvl);
        }
    }

    std::optional<State> classify(const Row& row, const std::vector<Row>& rows)
    {
        std::optional<State> best;
        std::size_t best_agreement = 0;
        unsigned matches = 0;
        for (std::size_t c = 0; c < rows.size(); ++c) {
            if (!kernels::compatible(row.view(), rows[c].view())) {
                continue;
            }
            ++matches;
            const std::size_t agree = kernels::agreement(row.view(), rows[c].view());
            if (!best || agree > best_agreement) {
                best = static_cast<State>(c);
                best_agreement = agree;
            }
        }
        if (matches > 1) {
            ++envelope_limited_;
        }
        return best;
    }

    std::string describe(const PrefixState& p) const
    {
        std::string out = "[";
        for (std::size_t i = 0; i < p.word.size(); ++i) {
            out += (i ? " " : "") + dfa::symbol_string(p.word[i], k_);
        }
        return out + "]";
    }

    const MembershipOracle& oracle_;
    unsigned k_;
    unsigned depth_;
    unsigned prefix_bound_;
    std::vector<std::vector<std::size_t>> subtree_;
    std::size_t positions_ = 0;
    std::size_t words_ = 0;
    std::size_t envelope_limited_ = 0;
    std::size_t queries_ = 0;
};

}  // namespace

Candidate guess_at_depth(const MembershipOracle& oracle, unsigned prefix_bound, unsigned depth)
{
    return Learner(oracle, prefix_bound, depth).run();
}

GuessReport guess(const MembershipOracle& oracle, unsigned prefix_bound, const std::vector<unsigned>& depths)
{
    if (depths.empty()) {
        throw ContractError("no extension depths given");
    }
    for (std::size_t i = 1; i < depths.size(); ++i) {
        if (depths[i] <= depths[i - 1]) {
            throw ContractError("extension depths must be strictly increasing");
        }
    }
    GuessReport report;
    report.prefix_bound = prefix_bound;
    report.envelope = oracle.envelope;
    std::optional<Dfa> previous;
    for (unsigned k : depths) {
        Candidate c = guess_at_depth(oracle, prefix_bound, k);
        report.steps.push_back(c.stats);
        report.stabilized = previous && *previous == c.dfa;
        previous = c.dfa;
        report.candidate = std::move(c.dfa);
    }
    return report;
}

std::string GuessReport::summary() const
{
    std::ostringstream out;
    out << "envelope: " << (envelope.empty() ? "unbounded" : envelope) << "\n";
    out << "prefix bound: " << prefix_bound << "\n";
    for (const auto& s : steps) {
        out << "depth " << s.depth << ": classes " << s.classes << ", states " << s.states << " ("
            << s.states_without_sink << " without sink), envelope-limited " << s.envelope_limited << ", queries "
            << s.queries << "\n";
    }
    out << "stabilized: " << (stabilized ? "yes" : "no") << "\n";
    out << "candidate: " << candidate.state_count() << " states, " << dfa::states_without_sink(candidate)
        << " without sink\n";
    return out.str();
}

bool verify_function(const std::string& name, const std::vector<unsigned>& input_tracks,
                     const std::vector<unsigned>& output_tracks, const logic::AutomatonStore& store)
{
    const auto entry = store.get(name);
    if (!entry) {
        throw CompileError("unknown automaton '$" + name + "'");
    }
    const unsigned arity = entry->dfa.arity();
    if (input_tracks.size() + output_tracks.size() != arity || output_tracks.empty()) {
        throw ContractError("input and output tracks must partition the tracks of '" + name + "'");
    }
    std::vector<std::string> first(arity), second(arity);
    std::vector<bool> seen(arity, false);
    for (unsigned t : input_tracks) {
        if (t >= arity || seen[t]) {
            throw ContractError("bad input track");
        }
        seen[t] = true;
        first[t] = second[t] = "u" + std::to_string(t);
    }
    for (unsigned t : output_tracks) {
        if (t >= arity || seen[t]) {
            throw ContractError("bad output track");
        }
        seen[t] = true;
        first[t] = "v" + std::to_string(t);
        second[t] = "w" + std::to_string(t);
    }
    auto join = [](const std::vector<std::string>& parts, const std::string& sep) {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            s += (i ? sep : "") + parts[i];
        }
        return s;
    };
    auto call = [&](const std::vector<std::string>& args) { return "$" + name + "(" + join(args, ",") + ")"; };

    std::vector<std::string> ins, outs1, outs2, eqs;
    for (unsigned t : input_tracks) {
        ins.push_back(first[t]);
    }
    for (unsigned t : output_tracks) {
        outs1.push_back(first[t]);
        outs2.push_back(second[t]);
        eqs.push_back(first[t] + "=" + second[t]);
    }
    const std::string all_in = ins.empty() ? "" : "A" + join(ins, ",") + " ";
    const std::string existence = "?msd_fib " + all_in + "E" + join(outs1, ",") + " " + call(first);
    std::vector<std::string> universal = ins;
    universal.insert(universal.end(), outs1.begin(), outs1.end());
    universal.insert(universal.end(), outs2.begin(), outs2.end());
    const std::string uniqueness = "?msd_fib A" + join(universal, ",") + " (" + call(first) + " & " +
                                   call(second) + ") => (" + join(eqs, " & ") + ")";

    logic::Compiler compiler(store);
    return compiler.eval_closed(*logic::parse_formula(existence)) &&
           compiler.eval_closed(*logic::parse_formula(uniqueness));
}

MembershipOracle parity_oracle()
{
    return {1, [](std::span<const std::uint64_t> v) { return v[0] % 2 == 0; }, {std::nullopt}, ""};
}

MembershipOracle addition_oracle()
{
    return {3, [](std::span<const std::uint64_t> v) { return v[0] + v[1] == v[2]; },
            {std::nullopt, std::nullopt, std::nullopt}, ""};
}

MembershipOracle floor_phi_oracle()
{
    return {2, [](std::span<const std::uint64_t> v) { return golden::floor_phi(v[0]) == v[1]; },
            {std::nullopt, std::nullopt}, ""};
}

MembershipOracle array_oracle(std::uint64_t rows, std::uint64_t cols)
{
    if (rows == 0 || cols == 0) {
        throw ContractError("empty array envelope");
    }
    hurtsada::HurtSadaArray array;
    auto table = std::make_shared<std::vector<hurtsada::Value>>();
    table->reserve(rows * cols);
    for (std::uint64_t x = 0; x < rows; ++x) {
        const auto r = array.row(x, cols);
        table->insert(table->end(), r.begin(), r.end());
    }
    return {3,
            [table, cols](std::span<const std::uint64_t> v) { return (*table)[v[0] * cols + v[1]] == v[2]; },
            {rows - 1, cols - 1, std::nullopt},
            "first " + std::to_string(rows) + " rows and " + std::to_string(cols) + " columns"};
}

}  // namespace fibaut::learn
