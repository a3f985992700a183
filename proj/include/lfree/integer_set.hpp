#pragma once

#include <cstdint>
#include <vector>

#include "lfree/errors.hpp"

namespace lfree {

// Subset of the universe [1, n] backed by a bit array.
class IntegerSet {
public:
    IntegerSet() = default;
    explicit IntegerSet(int64_t n) : n_(n), bits_((static_cast<std::size_t>(n) + 64) / 64, 0) {
        if (n < 0) throw DomainError("universe size must be nonnegative");
    }

    static IntegerSet full(int64_t n) {
        IntegerSet s(n);
        for (int64_t v = 1; v <= n; ++v) s.insert(v);
        return s;
    }

    static IntegerSet of(int64_t n, const std::vector<int64_t>& members) {
        IntegerSet s(n);
        for (int64_t v : members) s.insert(v);
        return s;
    }

    // Decodes bit i-1 of `mask` as membership of i. Requires n <= 64.
    static IntegerSet from_mask(int64_t n, uint64_t mask) {
        if (n > 64) throw DomainError("mask form is limited to universes of size <= 64");
        IntegerSet s(n);
        for (int64_t v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) s.insert(v);
        return s;
    }

    int64_t universe() const { return n_; }

    bool contains(int64_t v) const {
        if (v < 1 || v > n_) return false;
        const auto u = static_cast<uint64_t>(v - 1);
        return bits_[u / 64] >> (u % 64) & 1;
    }

    void insert(int64_t v) {
        check(v);
        const auto u = static_cast<uint64_t>(v - 1);
        bits_[u / 64] |= uint64_t{1} << (u % 64);
    }

    void erase(int64_t v) {
        check(v);
        const auto u = static_cast<uint64_t>(v - 1);
        bits_[u / 64] &= ~(uint64_t{1} << (u % 64));
    }

    int64_t size() const {
        int64_t total = 0;
        for (uint64_t w : bits_) total += __builtin_popcountll(w);
        return total;
    }

    bool empty() const {
        for (uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    std::vector<int64_t> members() const {
        std::vector<int64_t> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int64_t v = 1; v <= n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    uint64_t mask() const {
        if (n_ > 64) throw DomainError("mask form is limited to universes of size <= 64");
        return bits_.empty() ? 0 : bits_[0];
    }

    bool is_subset_of(const IntegerSet& other) const {
        for (int64_t v = 1; v <= n_; ++v)
            if (contains(v) && !other.contains(v)) return false;
        return true;
    }

    bool operator==(const IntegerSet&) const = default;

private:
    void check(int64_t v) const {
        if (v < 1 || v > n_) throw DomainError("element outside the universe");
    }

    int64_t n_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace lfree
