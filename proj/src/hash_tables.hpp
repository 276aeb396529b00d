#pragma once

// Open-addressing tables used by the product and subset constructions.

#include "fibaut/dfa.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fibaut::detail {

inline std::uint64_t mix64(std::uint64_t x)
{
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

/// uint64 key -> dense id, ids handed out in insertion order.
class KeyIndex {
public:
    explicit KeyIndex(std::size_t expected = 1024) { rehash(capacity_for(expected)); }

    /// Returns (id, inserted).
    std::pair<State, bool> insert(std::uint64_t key)
    {
        if ((size_ + 1) * 2 > keys_.size()) {
            rehash(keys_.size() * 2);
        }
        std::size_t i = mix64(key) & mask_;
        while (ids_[i] != kEmpty) {
            if (keys_[i] == key) {
                return {ids_[i], false};
            }
            i = (i + 1) & mask_;
        }
        keys_[i] = key;
        ids_[i] = static_cast<State>(size_);
        ++size_;
        return {ids_[i], true};
    }

    std::size_t size() const { return size_; }

private:
    static constexpr State kEmpty = ~State{0};

    static std::size_t capacity_for(std::size_t n)
    {
        std::size_t cap = 16;
        while (cap < n * 2) {
            cap *= 2;
        }
        return cap;
    }

    void rehash(std::size_t cap)
    {
        std::vector<std::uint64_t> old_keys = std::move(keys_);
        std::vector<State> old_ids = std::move(ids_);
        keys_.assign(cap, 0);
        ids_.assign(cap, kEmpty);
        mask_ = cap - 1;
        for (std::size_t j = 0; j < old_ids.size(); ++j) {
            if (old_ids[j] == kEmpty) {
                continue;
            }
            std::size_t i = mix64(old_keys[j]) & mask_;
            while (ids_[i] != kEmpty) {
                i = (i + 1) & mask_;
            }
            keys_[i] = old_keys[j];
            ids_[i] = old_ids[j];
        }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<State> ids_;
    std::size_t mask_ = 0;
    std::size_t size_ = 0;
};

/// Interns sorted state sets; set i is stored contiguously in an arena.
class SetIndex {
public:
    SetIndex() { rehash(1024); }

    std::pair<State, bool> insert(std::span<const State> set)
    {
        if ((count() + 1) * 2 > slots_.size()) {
            rehash(slots_.size() * 2);
        }
        const std::uint64_t h = hash(set);
        std::size_t i = h & mask_;
        while (slots_[i] != kEmpty) {
            const State id = slots_[i];
            if (hashes_[id] == h && std::ranges::equal(get(id), set)) {
                return {id, false};
            }
            i = (i + 1) & mask_;
        }
        const State id = static_cast<State>(count());
        arena_.insert(arena_.end(), set.begin(), set.end());
        offsets_.push_back(arena_.size());
        hashes_.push_back(h);
        slots_[i] = id;
        return {id, true};
    }

    std::span<const State> get(State id) const
    {
        return {arena_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
    }

    std::size_t count() const { return offsets_.size() - 1; }

private:
    static constexpr State kEmpty = ~State{0};

    static std::uint64_t hash(std::span<const State> set)
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ set.size();
        for (State q : set) {
            h = mix64(h ^ q) + 0x9e3779b97f4a7c15ULL;
        }
        return h;
    }

    void rehash(std::size_t cap)
    {
        slots_.assign(cap, kEmpty);
        mask_ = cap - 1;
        for (State id = 0; id < count(); ++id) {
            std::size_t i = hashes_[id] & mask_;
            while (slots_[i] != kEmpty) {
                i = (i + 1) & mask_;
            }
            slots_[i] = id;
        }
    }

    std::vector<State> arena_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint64_t> hashes_;
    std::vector<State> slots_;
    std::size_t mask_ = 0;
};

}  // namespace fibaut::detail
