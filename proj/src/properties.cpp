#include "fibaut/properties.hpp"

#include "fibaut/relations.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace fibaut::props {

void PropertyReport::expect(bool condition, const std::string& what)
{
    ++checks;
    if (!condition) {
        failures.push_back(what);
    }
}

Dfa random_dfa(std::mt19937_64& rng, unsigned arity, State states, bool lz_invariant)
{
    const Symbol alphabet = Symbol{1} << arity;
    std::uniform_int_distribution<State> pick(0, states - 1);
    std::vector<State> delta(static_cast<std::size_t>(states) * alphabet);
    for (auto& d : delta) {
        d = pick(rng);
    }
    if (lz_invariant) {
        delta[0] = 0;
    }
    std::vector<std::uint8_t> finals(states);
    for (auto& f : finals) {
        f = static_cast<std::uint8_t>(rng() & 1u);
    }
    return Dfa(arity, 0, std::move(finals), std::move(delta));
}

State moore_state_count(const Dfa& a)
{
    const Symbol alphabet = a.alphabet_size();
    std::vector<bool> reach(a.state_count(), false);
    std::vector<State> stack{a.initial()};
    reach[a.initial()] = true;
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        for (Symbol s = 0; s < alphabet; ++s) {
            const State r = a.next(q, s);
            if (!reach[r]) {
                reach[r] = true;
                stack.push_back(r);
            }
        }
    }
    std::vector<State> cls(a.state_count());
    for (State q = 0; q < a.state_count(); ++q) {
        cls[q] = a.is_final(q) ? 1 : 0;
    }
    std::size_t count = 0;
    while (true) {
        std::vector<std::vector<State>> signatures;
        std::vector<State> next(a.state_count(), 0);
        for (State q = 0; q < a.state_count(); ++q) {
            if (!reach[q]) {
                continue;
            }
            std::vector<State> sig{cls[q]};
            for (Symbol s = 0; s < alphabet; ++s) {
                sig.push_back(cls[a.next(q, s)]);
            }
            auto it = std::find(signatures.begin(), signatures.end(), sig);
            next[q] = static_cast<State>(it - signatures.begin());
            if (it == signatures.end()) {
                signatures.push_back(std::move(sig));
            }
        }
        cls = std::move(next);
        if (signatures.size() == count) {
            return static_cast<State>(count);
        }
        count = signatures.size();
    }
}

namespace {

Symbol insert_bit(Symbol rest, unsigned bit, unsigned track, unsigned arity)
{
    // Tracks before `track` occupy the high bits of `rest`.
    const unsigned low_bits = arity - 1 - track;
    const Symbol low = rest & ((Symbol{1} << low_bits) - 1);
    const Symbol high = rest >> low_bits;
    return (((high << 1) | bit) << low_bits) | low;
}

using StateSet = std::vector<std::uint8_t>;

StateSet step(const Dfa& a, const StateSet& from, Symbol rest, unsigned track)
{
    StateSet to(a.state_count(), 0);
    for (State q = 0; q < a.state_count(); ++q) {
        if (from[q]) {
            for (unsigned b = 0; b < 2; ++b) {
                to[a.next(q, insert_bit(rest, b, track, a.arity()))] = 1;
            }
        }
    }
    return to;
}

bool any_final(const Dfa& a, const StateSet& s)
{
    for (State q = 0; q < a.state_count(); ++q) {
        if (s[q] && a.is_final(q)) {
            return true;
        }
    }
    return false;
}

struct ProjectionWalk {
    const Dfa& restricted;
    const Dfa& projected;
    unsigned track;
    unsigned max_len;
    std::vector<Symbol> word;
    std::string failure;

    bool walk(const StateSet& set, State p, Symbol last)
    {
        if (any_final(restricted, set) != projected.is_final(p)) {
            failure = "disagreement on word of length " + std::to_string(word.size());
            for (Symbol s : word) {
                failure += " " + dfa::symbol_string(s, projected.arity());
            }
            return false;
        }
        if (word.size() == max_len) {
            return true;
        }
        for (Symbol r = 0; r < projected.alphabet_size(); ++r) {
            if ((r & last) != 0) {
                continue;  // keep remaining tracks valid
            }
            word.push_back(r);
            const bool ok = walk(step(restricted, set, r, track), projected.next(p, r), r);
            word.pop_back();
            if (!ok) {
                return false;
            }
        }
        return true;
    }
};

}  // namespace

bool projection_matches_brute_force(const Dfa& a, unsigned track, unsigned max_len, std::string* why)
{
    const unsigned k = a.arity();
    const std::array<unsigned, 1> where{track};
    const Dfa restricted = dfa::product(a, dfa::remap_tracks(arith::valid(), where, k), kAnd);
    const Dfa projected = dfa::project(restricted, track);

    // States reachable through up to |Q| leading symbols that are zero on
    // every remaining track.
    StateSet start(restricted.state_count(), 0);
    StateSet layer(restricted.state_count(), 0);
    layer[restricted.initial()] = 1;
    for (State i = 0; i <= restricted.state_count(); ++i) {
        for (State q = 0; q < restricted.state_count(); ++q) {
            start[q] |= layer[q];
        }
        layer = step(restricted, layer, 0, track);
    }
    ProjectionWalk w{restricted, projected, track, max_len, {}, {}};
    const bool ok = w.walk(start, projected.initial(), 0);
    if (!ok && why) {
        *why = w.failure;
    }
    return ok;
}

void check_boolean_laws(std::mt19937_64& rng, PropertyReport& report, unsigned rounds)
{
    for (unsigned i = 0; i < rounds; ++i) {
        const Dfa a = random_dfa(rng, 2, 2 + i % 5, false);
        const Dfa b = random_dfa(rng, 2, 2 + (i + 2) % 5, false);
        const Dfa c = random_dfa(rng, 2, 3, false);
        using dfa::complement;
        using dfa::equivalent;
        using dfa::product;
        const std::string tag = " (round " + std::to_string(i) + ")";
        report.expect(equivalent(complement(complement(a)), a), "double complement" + tag);
        report.expect(equivalent(complement(product(a, b, kAnd)), product(complement(a), complement(b), kOr)),
                      "De Morgan" + tag);
        report.expect(equivalent(product(a, product(b, c, kOr), kAnd),
                                 product(product(a, b, kAnd), product(a, c, kAnd), kOr)),
                      "distributivity" + tag);
        report.expect(equivalent(product(a, product(a, b, kAnd), kOr), a), "absorption" + tag);
        report.expect(equivalent(product(a, b, kAnd), product(b, a, kAnd)), "commutativity" + tag);
        report.expect(equivalent(product(a, product(b, c, kAnd), kAnd), product(product(a, b, kAnd), c, kAnd)),
                      "associativity" + tag);
        report.expect(equivalent(product(a, b, kImplies), product(complement(a), b, kOr)), "implication" + tag);
        report.expect(equivalent(product(a, b, kIff), complement(product(a, b, kXor))), "iff/xor" + tag);

        // Pointwise semantics on every word of length <= 5.
        bool pointwise = true;
        for (BoolOp op : {kAnd, kOr, kImplies, kIff, kXor}) {
            const Dfa p = product(a, b, op);
            std::vector<Symbol> word;
            for (unsigned len = 0; len <= 5 && pointwise; ++len) {
                word.assign(len, 0);
                const std::size_t total = std::size_t{1} << (2 * len);
                for (std::size_t code = 0; code < total; ++code) {
                    for (unsigned j = 0; j < len; ++j) {
                        word[j] = static_cast<Symbol>((code >> (2 * j)) & 3u);
                    }
                    if (p.accepts_word(word) != op(a.accepts_word(word), b.accepts_word(word))) {
                        pointwise = false;
                        break;
                    }
                }
            }
        }
        report.expect(pointwise, "product pointwise semantics" + tag);
    }
}

void check_minimization(std::mt19937_64& rng, PropertyReport& report, unsigned rounds)
{
    for (unsigned i = 0; i < rounds; ++i) {
        const Dfa a = random_dfa(rng, 1 + i % 3, 3 + i % 9, i % 2 == 0);
        const Dfa m = dfa::minimize(a);
        const std::string tag = " (round " + std::to_string(i) + ")";
        report.expect(dfa::minimize(m) == m, "minimization idempotent" + tag);
        report.expect(m.state_count() == moore_state_count(a), "minimal state count matches Moore" + tag);

        // Relabel states randomly; the canonical form must not change.
        std::vector<State> perm(a.state_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::uint8_t> finals(a.state_count());
        std::vector<State> delta(a.transitions().size());
        for (State q = 0; q < a.state_count(); ++q) {
            finals[perm[q]] = a.finals()[q];
            for (Symbol s = 0; s < a.alphabet_size(); ++s) {
                delta[static_cast<std::size_t>(perm[q]) * a.alphabet_size() + s] = perm[a.next(q, s)];
            }
        }
        const Dfa relabelled(a.arity(), perm[a.initial()], std::move(finals), std::move(delta));
        report.expect(dfa::minimize(relabelled) == m, "minimization canonical under relabelling" + tag);

        // Duplicate every state; edges go to either copy.
        const State n = a.state_count();
        std::vector<std::uint8_t> dup_finals(2 * n);
        std::vector<State> dup_delta(static_cast<std::size_t>(2) * n * a.alphabet_size());
        for (State q = 0; q < 2 * n; ++q) {
            dup_finals[q] = a.finals()[q % n];
            for (Symbol s = 0; s < a.alphabet_size(); ++s) {
                dup_delta[static_cast<std::size_t>(q) * a.alphabet_size() + s] =
                    a.next(q % n, s) + ((rng() & 1u) ? n : 0);
            }
        }
        const Dfa doubled(a.arity(), n, std::move(dup_finals), std::move(dup_delta));
        report.expect(dfa::minimize(doubled) == m, "minimization canonical under state duplication" + tag);
    }
}

void check_projection(std::mt19937_64& rng, PropertyReport& report, unsigned rounds, unsigned max_len)
{
    for (unsigned i = 0; i < rounds; ++i) {
        const unsigned arity = 2 + i % 2;
        const Dfa a = random_dfa(rng, arity, 2 + i % 6, true);
        const unsigned track = static_cast<unsigned>(rng() % arity);
        std::string why;
        report.expect(projection_matches_brute_force(a, track, max_len, &why),
                      "projection vs brute force (round " + std::to_string(i) + "): " + why);
    }
}

void check_leading_zero_invariance(std::mt19937_64& rng, PropertyReport& report, unsigned rounds,
                                   const std::vector<std::pair<std::string, Dfa>>& corpus)
{
    for (const auto& [name, a] : corpus) {
        report.expect(dfa::leading_zero_invariant(a), "leading-zero invariance of " + name);
    }
    for (unsigned i = 0; i < rounds; ++i) {
        const Dfa a = random_dfa(rng, 2, 2 + i % 5, true);
        const Dfa b = random_dfa(rng, 2, 2 + (i + 1) % 5, true);
        const std::string tag = " (round " + std::to_string(i) + ")";
        report.expect(dfa::leading_zero_invariant(a), "random input invariant" + tag);
        report.expect(dfa::leading_zero_invariant(dfa::product(a, b, kAnd)), "product keeps invariance" + tag);
        report.expect(dfa::leading_zero_invariant(dfa::complement(a)), "complement keeps invariance" + tag);
        report.expect(dfa::leading_zero_invariant(dfa::project(a, i % 2)), "projection keeps invariance" + tag);
    }
}

PropertyReport kernel_properties(std::uint64_t seed, const std::vector<std::pair<std::string, Dfa>>& corpus)
{
    std::mt19937_64 rng(seed);
    PropertyReport report;
    check_leading_zero_invariance(rng, report, 50, corpus);
    check_boolean_laws(rng, report, 30);
    check_minimization(rng, report, 60);
    check_projection(rng, report, 40, 10);
    for (const auto& [name, a] : corpus) {
        report.expect(dfa::minimize(a) == a, name + " is stored minimal and canonical");
        for (unsigned t = 0; t < a.arity(); ++t) {
            std::string why;
            report.expect(projection_matches_brute_force(a, t, 10, &why),
                          "projection of " + name + " on track " + std::to_string(t) + ": " + why);
        }
    }
    return report;
}

}  // namespace fibaut::props
