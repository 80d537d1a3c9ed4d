#ifndef MULTIKIT_ELEM_SET_HPP
#define MULTIKIT_ELEM_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "multikit/common.hpp"

namespace multikit {

/// Subset of a fixed carrier, canonically ordered by element index.
///
/// Carriers of up to 64 elements live in a single machine word; larger
/// carriers spill into a word vector. Every value-returning operation keeps
/// the universe size, so mixing sets from carriers of different sizes is
/// detected by the owning structure's operations.
class ElemSet {
public:
    ElemSet() = default;

    explicit ElemSet(std::uint32_t universe) : n_(universe) {
        if (n_ > 64) big_.assign(word_count(), 0);
    }

    static ElemSet singleton(std::uint32_t universe, ElementId e) {
        ElemSet s(universe);
        s.insert(e);
        return s;
    }

    static ElemSet full(std::uint32_t universe) {
        ElemSet s(universe);
        for (std::uint32_t w = 0; w < s.word_count(); ++w)
            s.word(w) = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::uint32_t universe() const { return n_; }

    bool contains(ElementId e) const {
        return (word_at(e >> 6) >> (e & 63)) & 1;
    }

    void insert(ElementId e) {
        if (e >= n_) throw DomainError("ElemSet::insert: element out of range");
        word(e >> 6) |= std::uint64_t{1} << (e & 63);
    }

    void unite(const ElemSet& o) {
        check_same(o);
        for (std::uint32_t w = 0; w < word_count(); ++w) word(w) |= o.word_at(w);
    }

    ElemSet intersect(const ElemSet& o) const {
        check_same(o);
        ElemSet r(n_);
        for (std::uint32_t w = 0; w < word_count(); ++w)
            r.word(w) = word_at(w) & o.word_at(w);
        return r;
    }

    ElemSet minus(const ElemSet& o) const {
        check_same(o);
        ElemSet r(n_);
        for (std::uint32_t w = 0; w < word_count(); ++w)
            r.word(w) = word_at(w) & ~o.word_at(w);
        return r;
    }

    bool intersects(const ElemSet& o) const {
        check_same(o);
        for (std::uint32_t w = 0; w < word_count(); ++w)
            if (word_at(w) & o.word_at(w)) return true;
        return false;
    }

    bool is_subset_of(const ElemSet& o) const {
        check_same(o);
        for (std::uint32_t w = 0; w < word_count(); ++w)
            if (word_at(w) & ~o.word_at(w)) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint32_t w = 0; w < word_count(); ++w) c += std::popcount(word_at(w));
        return c;
    }

    bool empty() const {
        for (std::uint32_t w = 0; w < word_count(); ++w)
            if (word_at(w)) return false;
        return true;
    }

    /// Smallest member index; requires a non-empty set.
    ElementId first() const {
        for (std::uint32_t w = 0; w < word_count(); ++w)
            if (word_at(w)) return static_cast<ElementId>(w * 64 + std::countr_zero(word_at(w)));
        throw DomainError("ElemSet::first: empty set");
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint32_t w = 0; w < word_count(); ++w) {
            std::uint64_t bits = word_at(w);
            while (bits) {
                f(static_cast<ElementId>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<ElementId> indices() const {
        std::vector<ElementId> out;
        out.reserve(count());
        for_each([&](ElementId e) { out.push_back(e); });
        return out;
    }

    bool operator==(const ElemSet& o) const {
        if (n_ != o.n_) return false;
        for (std::uint32_t w = 0; w < word_count(); ++w)
            if (word_at(w) != o.word_at(w)) return false;
        return true;
    }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    /// Total order usable as a map key (universe, then word values).
    bool operator<(const ElemSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (std::uint32_t w = 0; w < word_count(); ++w)
            if (word_at(w) != o.word_at(w)) return word_at(w) < o.word_at(w);
        return false;
    }

private:
    std::uint32_t word_count() const { return n_ <= 64 ? 1 : (n_ + 63) / 64; }

    std::uint64_t word_at(std::uint32_t w) const {
        return n_ <= 64 ? (w == 0 ? small_ : 0) : big_[w];
    }

    std::uint64_t& word(std::uint32_t w) { return n_ <= 64 ? small_ : big_[w]; }

    void trim() {
        const std::uint32_t used = n_ & 63;
        if (used != 0) word(word_count() - 1) &= (std::uint64_t{1} << used) - 1;
        if (n_ == 0) small_ = 0;
    }

    void check_same(const ElemSet& o) const {
        if (n_ != o.n_) throw DomainError("carrier mismatch between element sets");
    }

    std::uint32_t n_ = 0;
    std::uint64_t small_ = 0;
    std::vector<std::uint64_t> big_;
};

} // namespace multikit

#endif
