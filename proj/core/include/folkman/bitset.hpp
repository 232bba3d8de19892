#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace folkman {

/// Fixed-capacity bit set over vertex indices [0, 512).
/// Used for adjacency rows, vertex subsets and search masks throughout.
class VertexSet {
public:
    static constexpr int capacity = 512;
    static constexpr int words = capacity / 64;

    constexpr VertexSet() : bits_{} {}

    /// {0, 1, ..., n-1}
    static VertexSet range(int n) {
        VertexSet s;
        for (int w = 0; w < words; ++w) {
            int lo = w * 64;
            if (n <= lo) break;
            int span = n - lo;
            s.bits_[w] = span >= 64 ? ~uint64_t{0} : ((uint64_t{1} << span) - 1);
        }
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    void set(int v) { bits_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { bits_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
    bool test(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : bits_) {
            if (w) return false;
        }
        return true;
    }

    /// Smallest element, or -1 when empty.
    int first() const {
        for (int w = 0; w < words; ++w) {
            if (bits_[w]) return w * 64 + std::countr_zero(bits_[w]);
        }
        return -1;
    }

    /// Smallest element strictly greater than v, or -1.
    int next_after(int v) const {
        ++v;
        if (v >= capacity) return -1;
        int w = v >> 6;
        uint64_t cur = bits_[w] & (~uint64_t{0} << (v & 63));
        while (true) {
            if (cur) return w * 64 + std::countr_zero(cur);
            if (++w >= words) return -1;
            cur = bits_[w];
        }
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int w = 0; w < words; ++w) bits_[w] &= o.bits_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int w = 0; w < words; ++w) bits_[w] |= o.bits_[w];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int w = 0; w < words; ++w) bits_[w] &= ~o.bits_[w];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement relative to {0..n-1}.
    VertexSet complement_within(int n) const {
        VertexSet s = range(n);
        s -= *this;
        return s;
    }

    bool subset_of(const VertexSet& o) const {
        for (int w = 0; w < words; ++w) {
            if (bits_[w] & ~o.bits_[w]) return false;
        }
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int w = 0; w < words; ++w) {
            if (bits_[w] & o.bits_[w]) return true;
        }
        return false;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

    uint64_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : bits_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::array<uint64_t, words> bits_;
};

}  // namespace folkman
