#include "polyrep/monomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace polyrep {

int grevlex_compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int lex_compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

namespace {

// Emits all exponent vectors of total degree d over m variables in grevlex
// order. Grevlex within a degree sorts by the last differing position with
// larger entry first, which the recursion below produces directly: the last
// variable's exponent decreases from d to 0, recursing on the prefix.
void emit_degree(int m, int pos, std::uint32_t remaining, std::vector<std::uint32_t>& cur,
                 std::vector<std::uint32_t>& out) {
    if (pos == m - 1) {
        cur[static_cast<std::size_t>(pos)] = remaining;
        out.insert(out.end(), cur.begin(), cur.end());
        return;
    }
    // later positions take as much degree as possible first
    for (std::uint32_t take = 0; take <= remaining; ++take) {
        cur[static_cast<std::size_t>(pos)] = take;
        emit_degree(m, pos + 1, remaining - take, cur, out);
    }
}

}  // namespace

MonomialTable::MonomialTable(int m, int cap) : m_(m), cap_(cap) {
    if (m < 1) throw std::invalid_argument("monomial table needs at least one variable");
    deg_offset_.resize(static_cast<std::size_t>(cap) + 2);
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(m));
    for (int d = 0; d <= cap; ++d) {
        deg_offset_[static_cast<std::size_t>(d)] = static_cast<std::uint32_t>(exps_.size() / m);
        emit_degree(m, 0, static_cast<std::uint32_t>(d), cur, exps_);
    }
    deg_offset_[static_cast<std::size_t>(cap) + 1] = static_cast<std::uint32_t>(exps_.size() / m);
    rank_degree_.resize(exps_.size() / m);
    for (int d = 0; d <= cap; ++d)
        for (std::uint32_t r = deg_offset_[d]; r < deg_offset_[d + 1]; ++r) rank_degree_[r] = static_cast<std::uint32_t>(d);

    // product-rank rows, skipped when the pair count would be large
    std::uint64_t pairs = 0;
    for (std::uint32_t r = 0; r < size(); ++r) pairs += count_through(cap - degree_of(r));
    if (pairs <= 8u * 1024 * 1024) {
        pair_offset_.resize(size());
        pair_rank_.resize(pairs);
        std::uint64_t at = 0;
        std::vector<std::uint32_t> sum(static_cast<std::size_t>(m));
        for (std::uint32_t a = 0; a < size(); ++a) {
            pair_offset_[a] = at;
            auto ea = exponents(a);
            std::uint32_t nb = count_through(cap - degree_of(a));
            for (std::uint32_t b = 0; b < nb; ++b) {
                auto eb = exponents(b);
                for (int i = 0; i < m; ++i) sum[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
                pair_rank_[at++] = rank_of(sum);
            }
        }
    }
}

std::uint32_t MonomialTable::rank_of(std::span<const std::uint32_t> e) const {
    int d = static_cast<int>(total_degree(e));
    std::uint32_t lo = deg_offset_[static_cast<std::size_t>(d)], hi = deg_offset_[static_cast<std::size_t>(d) + 1];
    // binary search within the degree block
    while (lo < hi) {
        std::uint32_t mid = lo + (hi - lo) / 2;
        if (grevlex_compare(exponents(mid), e) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

std::uint32_t MonomialTable::product_rank(std::uint32_t a, std::uint32_t b) const {
    if (has_product_table() && degree_of(a) + degree_of(b) <= cap_ &&
        b < count_through(cap_ - degree_of(a)))
        return product_row(a)[b];
    auto ea = exponents(a), eb = exponents(b);
    Exponents sum(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) sum[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
    return rank_of(sum);
}

std::shared_ptr<const MonomialTable> MonomialTable::get(int vars, int cap) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::weak_ptr<const MonomialTable>> cache;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialTable>> pinned;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(vars, cap);
    if (auto it = cache.find(key); it != cache.end())
        if (auto p = it->second.lock()) return p;
    std::shared_ptr<const MonomialTable> p(new MonomialTable(vars, cap));
    cache[key] = p;
    if (p->size() <= 200000) pinned[key] = p;  // small tables are kept for reuse
    return p;
}

}  // namespace polyrep
