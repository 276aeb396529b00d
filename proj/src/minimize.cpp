#include "fibaut/dfa.hpp"

#include <algorithm>
#include <vector>

namespace fibaut::dfa {

namespace {

Dfa trim_unreachable(const Dfa& a)
{
    const State n = a.state_count();
    std::vector<State> id(n, ~State{0});
    std::vector<State> order{a.initial()};
    id[a.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (State t : a.row(order[i])) {
            if (id[t] == ~State{0}) {
                id[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    }
    if (order.size() == n) {
        return a;
    }
    const Symbol m = a.alphabet_size();
    std::vector<std::uint8_t> finals(order.size());
    std::vector<State> delta(order.size() * m);
    for (std::size_t i = 0; i < order.size(); ++i) {
        finals[i] = a.is_final(order[i]) ? 1 : 0;
        const auto row = a.row(order[i]);
        for (Symbol s = 0; s < m; ++s) {
            delta[i * m + s] = id[row[s]];
        }
    }
    return Dfa(a.arity(), 0, std::move(finals), std::move(delta));
}

/// Hopcroft partition refinement. Returns the block index of every state.
std::vector<State> hopcroft_blocks(const Dfa& a, State& block_count)
{
    const State n = a.state_count();
    const Symbol m = a.alphabet_size();

    // Reverse transitions in CSR form, keyed by (symbol, target).
    std::vector<std::uint32_t> offset(static_cast<std::size_t>(m) * n + 1, 0);
    for (State q = 0; q < n; ++q) {
        const auto row = a.row(q);
        for (Symbol s = 0; s < m; ++s) {
            ++offset[static_cast<std::size_t>(s) * n + row[s] + 1];
        }
    }
    for (std::size_t i = 1; i < offset.size(); ++i) {
        offset[i] += offset[i - 1];
    }
    std::vector<State> preds(static_cast<std::size_t>(m) * n);
    {
        std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
        for (State q = 0; q < n; ++q) {
            const auto row = a.row(q);
            for (Symbol s = 0; s < m; ++s) {
                preds[fill[static_cast<std::size_t>(s) * n + row[s]]++] = q;
            }
        }
    }

    // Partition: elems is grouped by block; block b owns [first[b], last[b]).
    std::vector<State> elems(n);
    std::vector<State> pos(n);
    std::vector<State> block(n);
    std::vector<State> first;
    std::vector<State> last;
    std::vector<State> marked;

    State finals_count = 0;
    for (State q = 0; q < n; ++q) {
        finals_count += a.is_final(q) ? 1 : 0;
    }
    {
        State lo = 0;
        State hi = finals_count;
        for (State q = 0; q < n; ++q) {
            const State at = a.is_final(q) ? lo++ : hi++;
            elems[at] = q;
            pos[q] = at;
        }
    }
    auto new_block = [&](State lo, State hi) {
        const State b = static_cast<State>(first.size());
        first.push_back(lo);
        last.push_back(hi);
        marked.push_back(0);
        for (State i = lo; i < hi; ++i) {
            block[elems[i]] = b;
        }
        return b;
    };

    std::vector<State> worklist;
    std::vector<std::uint8_t> in_worklist;
    auto push = [&](State b) {
        if (in_worklist.size() <= b) {
            in_worklist.resize(b + 1, 0);
        }
        if (!in_worklist[b]) {
            in_worklist[b] = 1;
            worklist.push_back(b);
        }
    };

    if (finals_count > 0) {
        push(new_block(0, finals_count));
    }
    if (finals_count < n) {
        push(new_block(finals_count, n));
    }

    std::vector<State> splitter;
    std::vector<State> touched;
    while (!worklist.empty()) {
        const State sb = worklist.back();
        worklist.pop_back();
        in_worklist[sb] = 0;
        splitter.assign(elems.begin() + first[sb], elems.begin() + last[sb]);

        for (Symbol s = 0; s < m; ++s) {
            touched.clear();
            const std::size_t base = static_cast<std::size_t>(s) * n;
            for (State t : splitter) {
                for (std::uint32_t i = offset[base + t]; i < offset[base + t + 1]; ++i) {
                    const State p = preds[i];
                    const State b = block[p];
                    const State mark_end = first[b] + marked[b];
                    if (pos[p] < mark_end) {
                        continue;
                    }
                    if (marked[b] == 0) {
                        touched.push_back(b);
                    }
                    // Swap p into the marked prefix of its block.
                    const State other = elems[mark_end];
                    elems[mark_end] = p;
                    elems[pos[p]] = other;
                    pos[other] = pos[p];
                    pos[p] = mark_end;
                    ++marked[b];
                }
            }
            for (State b : touched) {
                const State size = last[b] - first[b];
                const State mk = marked[b];
                marked[b] = 0;
                if (mk == size) {
                    continue;
                }
                // The smaller part becomes the new block.
                State nb;
                if (mk <= size - mk) {
                    nb = new_block(first[b], first[b] + mk);
                    first[b] += mk;
                } else {
                    nb = new_block(first[b] + mk, last[b]);
                    last[b] = first[b] + mk;
                }
                if (b < in_worklist.size() && in_worklist[b]) {
                    push(nb);
                } else {
                    push((last[nb] - first[nb]) <= (last[b] - first[b]) ? nb : b);
                }
            }
        }
    }
    block_count = static_cast<State>(first.size());
    return block;
}

}  // namespace

Dfa minimize(const Dfa& input)
{
    const Dfa a = trim_unreachable(input);
    const Symbol m = a.alphabet_size();

    State blocks = 0;
    const std::vector<State> block = hopcroft_blocks(a, blocks);

    std::vector<State> rep(blocks, ~State{0});
    for (State q = 0; q < a.state_count(); ++q) {
        if (rep[block[q]] == ~State{0}) {
            rep[block[q]] = q;
        }
    }

    // Canonical numbering: breadth-first from the initial block, symbols in order.
    std::vector<State> id(blocks, ~State{0});
    std::vector<State> order{block[a.initial()]};
    id[order[0]] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (State t : a.row(rep[order[i]])) {
            const State bt = block[t];
            if (id[bt] == ~State{0}) {
                id[bt] = static_cast<State>(order.size());
                order.push_back(bt);
            }
        }
    }
    std::vector<std::uint8_t> finals(order.size());
    std::vector<State> delta(order.size() * m);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const State q = rep[order[i]];
        finals[i] = a.is_final(q) ? 1 : 0;
        const auto row = a.row(q);
        for (Symbol s = 0; s < m; ++s) {
            delta[i * m + s] = id[block[row[s]]];
        }
    }
    return Dfa(a.arity(), 0, std::move(finals), std::move(delta));
}

}  // namespace fibaut::dfa
