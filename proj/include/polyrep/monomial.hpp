#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace polyrep {

using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(std::span<const std::uint32_t> e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

// Graded reverse-lexicographic comparison: lower total degree first; within a
// degree, a < b when the last position where they differ has a > b.
int grevlex_compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

struct GrevlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return grevlex_compare(a, b) < 0;
    }
};

// Lex't: a < b when the first differing position has a < b (degree ignored).
int lex_compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

// Enumeration of all monomials in `vars` variables of total degree <= cap,
// in grevlex order. Rank r identifies the r-th monomial; the ordering is a
// prefix-stable chain, so ranks agree across tables with different caps.
// Tables are immutable and shared process-wide.
class MonomialTable {
public:
    int vars() const { return m_; }
    int cap() const { return cap_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(rank_degree_.size()); }

    // first rank of total degree d (d in [0, cap+1]); size() when d == cap+1
    std::uint32_t degree_offset(int d) const { return deg_offset_[static_cast<std::size_t>(d)]; }
    // number of monomials of total degree <= d
    std::uint32_t count_through(int d) const {
        return d < 0 ? 0 : deg_offset_[static_cast<std::size_t>(std::min(d, cap_) + 1)];
    }
    int degree_of(std::uint32_t rank) const { return rank_degree_[rank]; }
    std::span<const std::uint32_t> exponents(std::uint32_t rank) const {
        return {exps_.data() + static_cast<std::size_t>(rank) * m_, static_cast<std::size_t>(m_)};
    }
    // rank of an exponent vector of total degree <= cap
    std::uint32_t rank_of(std::span<const std::uint32_t> e) const;

    // rank of the product of two monomials (sum of exponent vectors)
    std::uint32_t product_rank(std::uint32_t a, std::uint32_t b) const;

    // Optional precomputed product-rank rows. When present, row(a)[b] is the
    // product rank for every b with deg(a) + deg(b) <= cap.
    bool has_product_table() const { return !pair_rank_.empty(); }
    const std::uint32_t* product_row(std::uint32_t a) const { return pair_rank_.data() + pair_offset_[a]; }

    static std::shared_ptr<const MonomialTable> get(int vars, int cap);

private:
    MonomialTable(int m, int cap);
    int m_, cap_;
    std::vector<std::uint32_t> exps_;        // size() * m, rank-major
    std::vector<std::uint32_t> deg_offset_;  // cap + 2 entries
    std::vector<std::uint32_t> rank_degree_;
    std::vector<std::uint64_t> pair_offset_;
    std::vector<std::uint32_t> pair_rank_;
};

}  // namespace polyrep
