#ifndef FOURPATH_BITSET_HPP
#define FOURPATH_BITSET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fourpath {

// Fixed-capacity vertex set over a universe {0, ..., universe-1}.
// All set algebra is word-parallel; the universe size travels with the set so
// complement() knows where to stop. 256 vertices is far above anything the
// library is meant for (see README) and keeps the type allocation-free.
class VertexSet {
public:
    static constexpr int kMaxVertices = 256;

    VertexSet() = default;

    explicit VertexSet(int universe_size) : n_(universe_size) {
        if (universe_size < 0 || universe_size > kMaxVertices)
            throw std::invalid_argument("VertexSet: universe size " + std::to_string(universe_size) +
                                        " outside [0, " + std::to_string(kMaxVertices) + "]");
    }

    static VertexSet full(int universe_size) {
        VertexSet s(universe_size);
        for (int w = 0; w < s.word_count(); ++w) s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    static VertexSet of(int universe_size, std::initializer_list<int> vs) {
        VertexSet s(universe_size);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe() const { return n_; }
    int word_count() const { return (n_ + 63) / 64; }

    bool contains(int v) const {
        check_vertex(v);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void add(int v) {
        check_vertex(v);
        words_[v >> 6] |= 1ULL << (v & 63);
    }

    void remove(int v) {
        check_vertex(v);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (int w = 0; w < word_count(); ++w) c += std::popcount(words_[w]);
        return c;
    }

    bool empty() const {
        for (int w = 0; w < word_count(); ++w)
            if (words_[w]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (int w = 0; w < word_count(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_universe(o);
        for (int w = 0; w < word_count(); ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    VertexSet operator|(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet operator&(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet operator-(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    VertexSet& operator|=(const VertexSet& o) { return assign(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet& operator&=(const VertexSet& o) { return assign(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet& operator-=(const VertexSet& o) { return assign(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    // Complement within the universe.
    VertexSet operator~() const {
        VertexSet r(n_);
        for (int w = 0; w < word_count(); ++w) r.words_[w] = ~words_[w];
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const {
        if (n_ != o.n_) return false;
        for (int w = 0; w < word_count(); ++w)
            if (words_[w] != o.words_[w]) return false;
        return true;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // -1 when the set is empty.
    int first() const { return next(-1); }

    // Smallest member strictly greater than `after`, or -1.
    int next(int after) const {
        int start = after + 1;
        if (start >= n_) return -1;
        int w = start >> 6;
        uint64_t cur = words_[w] & (~0ULL << (start & 63));
        while (true) {
            if (cur) return (w << 6) + std::countr_zero(cur);
            if (++w >= word_count()) return -1;
            cur = words_[w];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    uint64_t word(int i) const { return words_[static_cast<size_t>(i)]; }

    // Readable form, e.g. "{0, 2, 5}".
    std::string to_string() const {
        std::string s = "{";
        bool first_item = true;
        for (int v = first(); v >= 0; v = next(v)) {
            if (!first_item) s += ", ";
            s += std::to_string(v);
            first_item = false;
        }
        return s + "}";
    }

private:
    template <typename Op>
    VertexSet apply(const VertexSet& o, Op op) const {
        check_universe(o);
        VertexSet r(n_);
        for (int w = 0; w < word_count(); ++w) r.words_[w] = op(words_[w], o.words_[w]);
        return r;
    }

    template <typename Op>
    VertexSet& assign(const VertexSet& o, Op op) {
        check_universe(o);
        for (int w = 0; w < word_count(); ++w) words_[w] = op(words_[w], o.words_[w]);
        return *this;
    }

    void trim() {
        if (n_ & 63) words_[n_ >> 6] &= (1ULL << (n_ & 63)) - 1;
        for (int w = word_count(); w < 4; ++w) words_[w] = 0;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("VertexSet: vertex " + std::to_string(v) +
                                        " outside universe of size " + std::to_string(n_));
    }

    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: mismatched universes");
    }

    int n_ = 0;
    std::array<uint64_t, 4> words_{0, 0, 0, 0};
};

}  // namespace fourpath

#endif
