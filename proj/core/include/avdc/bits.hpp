#pragma once

#include <cstdint>
#include <vector>
#include <compare>

namespace avdc {

/// Fixed-width dynamic bitset sized at construction; used for element sets
/// and relation rows. Widths stay small (a few hundred bits at most).
class Bits {
public:
    Bits() = default;
    explicit Bits(int width) : width_(width), w_((width + 63) / 64, 0) {}

    int width() const { return width_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    bool subset_of(const Bits& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    bool any() const {
        for (uint64_t w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    int count() const {
        int n = 0;
        for (uint64_t w : w_) n += __builtin_popcountll(w);
        return n;
    }

    Bits& operator|=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

    /// Iterate set bit indices in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                int b = __builtin_ctzll(w);
                f(int(k * 64 + b));
                w &= w - 1;
            }
        }
    }
    std::vector<int> elements() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bits&, const Bits&) = default;
    friend auto operator<=>(const Bits& a, const Bits& b) {
        if (auto c = a.width_ <=> b.width_; c != 0) return c;
        return a.w_ <=> b.w_;
    }

private:
    int width_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace avdc
