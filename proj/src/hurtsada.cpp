#include "fibaut/hurtsada.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibaut::hurtsada {

std::uint64_t ArrayWindow::position_of(Value value) const
{
    if (value < start_ || value >= end()) {
        return value;
    }
    const auto it = std::find(cells_.begin(), cells_.end(), value);
    return start_ + static_cast<std::uint64_t>(it - cells_.begin());
}

ArrayWindow ArrayWindow::step() const
{
    const Value n = row_ + 1;
    const std::uint64_t p = position_of(n);
    const std::uint64_t lo = identity() ? p : std::min(start_, p);
    const std::uint64_t hi = identity() ? p + n + 1 : std::max(end(), p + n + 1);

    ArrayWindow next;
    next.row_ = n;
    next.cells_.reserve(hi - lo);
    for (std::uint64_t k = lo; k < hi; ++k) {
        next.cells_.push_back(at(k));
    }
    auto& c = next.cells_;
    const auto from = static_cast<std::ptrdiff_t>(p - lo);
    std::rotate(c.begin() + from, c.begin() + from + 1, c.begin() + from + static_cast<std::ptrdiff_t>(n) + 1);

    std::size_t head = 0;
    while (head < c.size() && c[head] == lo + head) {
        ++head;
    }
    while (c.size() > head && c.back() == lo + c.size() - 1) {
        c.pop_back();
    }
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(head));
    next.start_ = lo + head;
    return next;
}

void HurtSadaArray::extend_to(std::uint64_t n) const
{
    while (rows_.size() <= n) {
        rows_.push_back(rows_.back().step());
    }
}

ArrayWindow HurtSadaArray::window(std::uint64_t n) const
{
    std::lock_guard lock(mutex_);
    extend_to(n);
    return rows_[n];
}

Value HurtSadaArray::entry(std::uint64_t n, std::uint64_t k) const
{
    std::lock_guard lock(mutex_);
    extend_to(n);
    return rows_[n].at(k);
}

std::vector<Value> HurtSadaArray::row(std::uint64_t n, std::uint64_t width) const
{
    std::lock_guard lock(mutex_);
    extend_to(n);
    std::vector<Value> out(width);
    for (std::uint64_t k = 0; k < width; ++k) {
        out[k] = rows_[n].at(k);
    }
    return out;
}

namespace {

// First pass over antidiagonals 0..count-1: for each one, the set of values
// seen at least twice (via two bitmaps), keeping the smallest.
std::vector<std::optional<Value>> repeated_values(std::size_t count)
{
    std::vector<std::vector<bool>> seen(count), twice(count);
    std::vector<std::optional<Value>> rep(count);
    ArrayWindow w;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t n = i; n < count; ++n) {
            const Value v = w.at(n - i);
            auto& s = seen[n];
            if (s.size() <= v) {
                s.resize(std::max<std::size_t>(v + 1, 2 * n + 2));
                twice[n].resize(s.size());
            }
            if (s[v]) {
                if (!twice[n][v]) {
                    twice[n][v] = true;
                    if (!rep[n] || v < *rep[n]) {
                        rep[n] = v;
                    }
                }
            } else {
                s[v] = true;
            }
        }
        if (i + 1 < count) {
            w = w.step();
        }
    }
    return rep;
}

}  // namespace

SequenceTable generate_sequences(std::size_t count, std::size_t antidiagonal_count)
{
    SequenceTable t;
    for (auto* v : {&t.p, &t.s, &t.t, &t.d, &t.dprime, &t.b, &t.c}) {
        v->assign(count, 0);
    }
    ArrayWindow prev;
    for (std::size_t n = 1; n < count; ++n) {
        const std::uint64_t p = prev.position_of(n);
        t.p[n] = p;
        t.s[n] = prev.at(p + 1);
        t.t[n] = prev.at(p + n);
        t.dprime[n] = prev.at(n);
        ArrayWindow cur = prev.step();
        t.d[n] = cur.at(n);
        t.b[n] = cur.identity() ? 0 : cur.fixed_prefix();
        t.c[n] = cur.identity() ? 0 : cur.fixed_tail();
        prev = std::move(cur);
    }

    const std::size_t m = antidiagonal_count;
    t.r.assign(m, 0);
    t.h.assign(m, 0);
    t.hp.assign(m, 0);
    if (m > 1) {
        t.r[1] = 1;
    }
    const auto rep = repeated_values(m);
    std::vector<bool> found(m, false);
    ArrayWindow w;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t n = std::max<std::size_t>(i, 2); n < m; ++n) {
            if (rep[n] && w.at(n - i) == *rep[n]) {
                if (!found[n]) {
                    found[n] = true;
                    t.h[n] = i;
                }
                t.hp[n] = i;
            }
        }
        if (i + 1 < m) {
            w = w.step();
        }
    }
    for (std::size_t n = 2; n < m; ++n) {
        if (!rep[n]) {
            throw std::logic_error("antidiagonal " + std::to_string(n) + " has no repeated value");
        }
        t.r[n] = *rep[n];
    }
    return t;
}

std::vector<std::vector<Value>> antidiagonals(std::size_t count)
{
    std::vector<std::vector<Value>> out(count);
    for (std::size_t n = 0; n < count; ++n) {
        out[n].resize(n + 1);
    }
    ArrayWindow w;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t n = i; n < count; ++n) {
            out[n][i] = w.at(n - i);
        }
        if (i + 1 < count) {
            w = w.step();
        }
    }
    return out;
}

ColumnReturns column_returns(std::uint64_t max_column)
{
    ColumnReturns out;
    out.first_leave.assign(max_column + 1, std::nullopt);
    out.last_away.assign(max_column + 1, std::nullopt);
    ArrayWindow w;
    while (w.identity() || w.fixed_prefix() < max_column) {
        if (!w.identity()) {
            const std::uint64_t hi = std::min<std::uint64_t>(w.end(), max_column + 1);
            for (std::uint64_t k = w.start(); k < hi; ++k) {
                if (w.at(k) != k) {
                    if (!out.first_leave[k]) {
                        out.first_leave[k] = w.row();
                    }
                    out.last_away[k] = w.row();
                }
            }
        }
        w = w.step();
    }
    out.horizon = w.row();
    return out;
}

const std::vector<std::string>& sequence_names()
{
    static const std::vector<std::string> names{"p", "s", "t", "d", "dp", "b", "c", "r", "h", "hp"};
    return names;
}

const std::vector<Value>& sequence_by_name(const SequenceTable& table, std::string_view name)
{
    if (name == "p") return table.p;
    if (name == "s") return table.s;
    if (name == "t") return table.t;
    if (name == "d") return table.d;
    if (name == "dp") return table.dprime;
    if (name == "b") return table.b;
    if (name == "c") return table.c;
    if (name == "r") return table.r;
    if (name == "h") return table.h;
    if (name == "hp") return table.hp;
    throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
}

namespace {

std::string cell(Value v)
{
    std::string s = std::to_string(v);
    if (s.size() < 2) {
        s.insert(0, 2 - s.size(), ' ');
    }
    return s + "&";
}

}  // namespace

std::string render_table(const HurtSadaArray& a, std::uint64_t rows, std::uint64_t cols)
{
    std::string out = "\\diagbox{$n$}{$k$} &";
    for (std::uint64_t k = 0; k < cols; ++k) {
        out += cell(k);
    }
    out += "\\\\\n\\hline\n";
    for (std::uint64_t n = 0; n < rows; ++n) {
        out += std::to_string(n) + " &";
        for (Value v : a.row(n, cols)) {
            out += cell(v);
        }
        out += "\\\\\n";
    }
    return out;
}

std::string render_rows(const SequenceTable& table, const std::vector<std::string>& names, std::size_t count)
{
    auto line = [count](const std::string& label, auto value_at) {
        std::string out = label + ":";
        for (std::size_t i = 0; i < count; ++i) {
            out += " " + std::to_string(value_at(i));
        }
        return out + "\n";
    };
    std::string out = line("n", [](std::size_t i) { return i; });
    for (const auto& name : names) {
        const auto& seq = sequence_by_name(table, name);
        if (seq.size() < count) {
            throw std::invalid_argument("sequence '" + name + "' has only " + std::to_string(seq.size()) + " terms");
        }
        out += line(name, [&seq](std::size_t i) { return seq[i]; });
    }
    return out;
}

std::string render_sequence(const std::vector<Value>& values, SeqFormat format)
{
    std::string out;
    switch (format) {
    case SeqFormat::list:
        for (std::size_t i = 0; i < values.size(); ++i) {
            out += (i ? "," : "") + std::to_string(values[i]);
        }
        out += "\n";
        break;
    case SeqFormat::csv:
        out = "n,value\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            out += std::to_string(i) + "," + std::to_string(values[i]) + "\n";
        }
        break;
    case SeqFormat::bfile:
        for (std::size_t i = 0; i < values.size(); ++i) {
            out += std::to_string(i) + " " + std::to_string(values[i]) + "\n";
        }
        break;
    }
    return out;
}

}  // namespace fibaut::hurtsada
