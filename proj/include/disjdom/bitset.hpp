#pragma once

#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace disjdom {

// Fixed-capacity dynamic bitset over 64-bit words. One inline word covers the
// n <= 64 fast path; larger universes spill to the heap. Capacity is set at
// construction and never changes (sets are tied to a graph order).
class Bitset {
public:
    Bitset() : nbits_(0), nwords_(0) { storage_.word = 0; }

    explicit Bitset(int nbits) : nbits_(nbits) {
        if (nbits < 0) throw std::invalid_argument("Bitset: negative size");
        nwords_ = (nbits + 63) / 64;
        if (nwords_ <= 1) {
            storage_.word = 0;
        } else {
            storage_.ptr = new std::uint64_t[nwords_]();
        }
    }

    Bitset(int nbits, std::initializer_list<int> bits) : Bitset(nbits) {
        for (int b : bits) set(b);
    }

    Bitset(const Bitset& o) : nbits_(o.nbits_), nwords_(o.nwords_) {
        if (nwords_ <= 1) {
            storage_.word = o.storage_.word;
        } else {
            storage_.ptr = new std::uint64_t[nwords_];
            std::memcpy(storage_.ptr, o.storage_.ptr, nwords_ * sizeof(std::uint64_t));
        }
    }

    Bitset(Bitset&& o) noexcept : nbits_(o.nbits_), nwords_(o.nwords_), storage_(o.storage_) {
        o.nbits_ = 0;
        o.nwords_ = 0;
        o.storage_.word = 0;
    }

    Bitset& operator=(const Bitset& o) {
        if (this != &o) {
            Bitset tmp(o);
            swap(tmp);
        }
        return *this;
    }

    Bitset& operator=(Bitset&& o) noexcept {
        if (this != &o) {
            release();
            nbits_ = o.nbits_;
            nwords_ = o.nwords_;
            storage_ = o.storage_;
            o.nbits_ = 0;
            o.nwords_ = 0;
            o.storage_.word = 0;
        }
        return *this;
    }

    ~Bitset() { release(); }

    void swap(Bitset& o) noexcept {
        std::swap(nbits_, o.nbits_);
        std::swap(nwords_, o.nwords_);
        std::swap(storage_, o.storage_);
    }

    int size() const { return nbits_; }

    bool test(int i) const {
        check(i);
        return (word(i >> 6) >> (i & 63)) & 1u;
    }

    void set(int i) {
        check(i);
        mutable_word(i >> 6) |= std::uint64_t(1) << (i & 63);
    }

    void reset(int i) {
        check(i);
        mutable_word(i >> 6) &= ~(std::uint64_t(1) << (i & 63));
    }

    void clear() {
        if (nwords_ <= 1) storage_.word = 0;
        else std::memset(storage_.ptr, 0, nwords_ * sizeof(std::uint64_t));
    }

    void set_all() {
        for (int w = 0; w < nwords_; ++w) mutable_word(w) = ~std::uint64_t(0);
        trim();
    }

    int count() const {
        int c = 0;
        for (int w = 0; w < nwords_; ++w) c += __builtin_popcountll(word(w));
        return c;
    }

    bool any() const {
        for (int w = 0; w < nwords_; ++w)
            if (word(w)) return true;
        return false;
    }

    bool none() const { return !any(); }

    // Lowest set bit, or -1.
    int first() const {
        for (int w = 0; w < nwords_; ++w)
            if (word(w)) return w * 64 + __builtin_ctzll(word(w));
        return -1;
    }

    // Lowest set bit > i, or -1.
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        int w = i >> 6;
        std::uint64_t cur = word(w) & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (cur) return w * 64 + __builtin_ctzll(cur);
            if (++w >= nwords_) return -1;
            cur = word(w);
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < nwords_; ++w) {
            std::uint64_t cur = word(w);
            while (cur) {
                f(w * 64 + __builtin_ctzll(cur));
                cur &= cur - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    Bitset& operator|=(const Bitset& o) {
        same(o);
        for (int w = 0; w < nwords_; ++w) mutable_word(w) |= o.word(w);
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        same(o);
        for (int w = 0; w < nwords_; ++w) mutable_word(w) &= o.word(w);
        return *this;
    }

    Bitset& operator^=(const Bitset& o) {
        same(o);
        for (int w = 0; w < nwords_; ++w) mutable_word(w) ^= o.word(w);
        return *this;
    }

    // this \ o
    Bitset& subtract(const Bitset& o) {
        same(o);
        for (int w = 0; w < nwords_; ++w) mutable_word(w) &= ~o.word(w);
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool intersects(const Bitset& o) const {
        same(o);
        for (int w = 0; w < nwords_; ++w)
            if (word(w) & o.word(w)) return true;
        return false;
    }

    int count_and(const Bitset& o) const {
        same(o);
        int c = 0;
        for (int w = 0; w < nwords_; ++w) c += __builtin_popcountll(word(w) & o.word(w));
        return c;
    }

    bool is_subset_of(const Bitset& o) const {
        same(o);
        for (int w = 0; w < nwords_; ++w)
            if (word(w) & ~o.word(w)) return false;
        return true;
    }

    bool operator==(const Bitset& o) const {
        if (nbits_ != o.nbits_) return false;
        for (int w = 0; w < nwords_; ++w)
            if (word(w) != o.word(w)) return false;
        return true;
    }

    bool operator!=(const Bitset& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ std::uint64_t(nbits_);
        for (int w = 0; w < nwords_; ++w) {
            h ^= word(w);
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
        }
        return static_cast<std::size_t>(h);
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](int v) {
            if (sep) s += ',';
            s += std::to_string(v);
            sep = true;
        });
        s += '}';
        return s;
    }

private:
    void release() {
        if (nwords_ > 1) delete[] storage_.ptr;
    }

    void check(int i) const {
        if (i < 0 || i >= nbits_) throw std::out_of_range("Bitset index " + std::to_string(i));
    }

    void same(const Bitset& o) const {
        if (nbits_ != o.nbits_) throw std::invalid_argument("Bitset size mismatch");
    }

    std::uint64_t word(int w) const { return nwords_ <= 1 ? storage_.word : storage_.ptr[w]; }

    std::uint64_t& mutable_word(int w) {
        return nwords_ <= 1 ? storage_.word : storage_.ptr[w];
    }

    // Keep bits >= nbits_ zero so count/equality stay meaningful.
    void trim() {
        if (nbits_ == 0) {
            storage_.word = nwords_ <= 1 ? 0 : storage_.word;
            if (nwords_ >= 1) mutable_word(0) = 0;
            return;
        }
        int rem = nbits_ & 63;
        if (rem) mutable_word(nwords_ - 1) &= (~std::uint64_t(0)) >> (64 - rem);
    }

    int nbits_;
    int nwords_;
    union Storage {
        std::uint64_t word;
        std::uint64_t* ptr;
    } storage_;
};

using VertexSet = Bitset;

}  // namespace disjdom

template <>
struct std::hash<disjdom::Bitset> {
    std::size_t operator()(const disjdom::Bitset& b) const { return b.hash(); }
};
