#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace strata {

// Fixed-width bit mask over root indices of one ambient root system.
class RootMask {
public:
    RootMask() = default;
    explicit RootMask(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static RootMask from_indices(std::size_t nbits, const std::vector<int>& indices) {
        RootMask m(nbits);
        for (int i : indices) m.set(i);
        return m;
    }

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::size_t(__builtin_popcountll(w));
        return c;
    }
    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool is_subset_of(const RootMask& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    RootMask operator&(const RootMask& o) const {
        RootMask r(nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
        return r;
    }
    RootMask operator|(const RootMask& o) const {
        RootMask r(nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | o.words_[k];
        return r;
    }
    RootMask minus(const RootMask& o) const {
        RootMask r(nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & ~o.words_[k];
        return r;
    }

    // Image under a permutation of root indices: bit i maps to bit perm[i].
    RootMask permuted(const std::vector<int>& perm) const {
        RootMask r(nbits_);
        for (std::size_t i = 0; i < nbits_; ++i)
            if (test(i)) r.set(std::size_t(perm[i]));
        return r;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t i = 0; i < nbits_; ++i)
            if (test(i)) out.push_back(int(i));
        return out;
    }

    bool operator==(const RootMask& o) const = default;

    // Arbitrary deterministic total order, used for canonical representatives.
    bool operator<(const RootMask& o) const {
        if (nbits_ != o.nbits_) return nbits_ < o.nbits_;
        for (std::size_t k = words_.size(); k-- > 0;)
            if (words_[k] != o.words_[k]) return words_[k] < o.words_[k];
        return false;
    }

    std::size_t hash() const {
        std::uint64_t h = 14695981039346656037ull;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        h ^= nbits_;
        h *= 1099511628211ull;
        return std::size_t(h);
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace strata

template <>
struct std::hash<strata::RootMask> {
    std::size_t operator()(const strata::RootMask& m) const { return m.hash(); }
};
