#pragma once

// Exact simulation of the Hurt-Sada array. Row 0 is the identity; row n is
// row n-1 with the value n moved n places to the right. Every row differs
// from the identity only on a finite window, which is all that is stored.

#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibaut::hurtsada {

using Value = std::uint64_t;

class ArrayWindow {
public:
    /// Row 0.
    ArrayWindow() = default;

    std::uint64_t row() const { return row_; }
    /// First column of the window; meaningless when the window is empty.
    std::uint64_t start() const { return start_; }
    std::uint64_t end() const { return start_ + cells_.size(); }
    const std::vector<Value>& cells() const { return cells_; }
    bool identity() const { return cells_.empty(); }

    Value at(std::uint64_t column) const
    {
        if (column < start_ || column >= end()) {
            return column;
        }
        return cells_[column - start_];
    }

    /// Column holding `value`.
    std::uint64_t position_of(Value value) const;

    /// Row `row() + 1`. Fixed points at the window edges are shed.
    ArrayWindow step() const;

    /// Largest b with A[n,i] = i for all i <= b (row n >= 1).
    std::uint64_t fixed_prefix() const { return start_ - 1; }
    /// Least c with A[n,i] = i for all i >= c.
    std::uint64_t fixed_tail() const { return end(); }

private:
    std::uint64_t row_ = 0;
    std::uint64_t start_ = 0;
    std::vector<Value> cells_;
};

/// Rows materialized on demand and cached. Safe for concurrent readers.
class HurtSadaArray {
public:
    Value entry(std::uint64_t n, std::uint64_t k) const;
    std::vector<Value> row(std::uint64_t n, std::uint64_t width) const;
    ArrayWindow window(std::uint64_t n) const;

    /// A[x, y] = z.
    bool membership(std::uint64_t x, std::uint64_t y, Value z) const { return entry(x, y) == z; }

private:
    void extend_to(std::uint64_t n) const;

    mutable std::mutex mutex_;
    mutable std::deque<ArrayWindow> rows_{ArrayWindow{}};
};

/// Named sequences, index 0 included (all zero at n = 0).
struct SequenceTable {
    std::vector<Value> p, s, t, d, dprime, b, c;
    /// Antidiagonal data; may be shorter than the others.
    std::vector<Value> r, h, hp;

    std::size_t size() const { return p.size(); }
};

/// Streams rows 1..count-1 once. r, h, hp are filled for n < antidiagonal_count.
SequenceTable generate_sequences(std::size_t count, std::size_t antidiagonal_count);

/// A[0,n], A[1,n-1], ..., A[n,0] for n = 0..count-1.
std::vector<std::vector<Value>> antidiagonals(std::size_t count);

/// Column-return data for columns 0..max_column: first row where the column
/// leaves its identity value, last such row (nullopt if it never leaves
/// within the simulated horizon), and the horizon used. The horizon is the
/// first row whose fixed prefix covers every tracked column.
struct ColumnReturns {
    std::vector<std::optional<std::uint64_t>> first_leave;
    std::vector<std::optional<std::uint64_t>> last_away;
    std::uint64_t horizon = 0;
};
ColumnReturns column_returns(std::uint64_t max_column);

const std::vector<std::string>& sequence_names();
/// Throws std::invalid_argument for an unknown name.
const std::vector<Value>& sequence_by_name(const SequenceTable& table, std::string_view name);

/// Rows 0..rows-1, columns 0..cols-1, in the layout `n & v& v&...&\\`
/// with two-character right-aligned cells, preceded by the header row.
std::string render_table(const HurtSadaArray& a, std::uint64_t rows, std::uint64_t cols);

/// `n: 0 1 2 ...` followed by one `name: v0 v1 ...` line per sequence.
std::string render_rows(const SequenceTable& table, const std::vector<std::string>& names, std::size_t count);

enum class SeqFormat { list, csv, bfile };
std::string render_sequence(const std::vector<Value>& values, SeqFormat format);

}  // namespace fibaut::hurtsada
