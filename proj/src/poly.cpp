#include "polyrep/poly.hpp"

#include <algorithm>

namespace polyrep {

SparsePoly SparsePoly::constant(FieldSpec spec, std::vector<std::string> vars, const FieldElement& c) {
    SparsePoly p(spec, std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

SparsePoly SparsePoly::variable(FieldSpec spec, std::vector<std::string> vars, int index) {
    SparsePoly p(spec, std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    p.add_term(e, FieldElement::from_int(spec, 1));
    return p;
}

std::optional<long> SparsePoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    // grevlex map: the last key has maximal total degree
    return static_cast<long>(total_degree(terms_.rbegin()->first));
}

FieldElement SparsePoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement(spec_) : it->second;
}

void SparsePoly::add_term(const Exponents& e, const FieldElement& c) {
    if (e.size() != vars_.size()) throw DimensionMismatch("exponent vector length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SparsePoly::check_compatible(const SparsePoly& o) const {
    if (spec_ != o.spec_) throw FieldMismatch();
    if (vars_.size() != o.vars_.size()) throw DimensionMismatch("polynomials have different variable counts");
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    check_compatible(o);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    check_compatible(o);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    check_compatible(o);
    SparsePoly r(spec_, vars_);
    Exponents sum(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
            r.add_term(sum, ca * cb);
        }
    }
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(spec_, vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePoly SparsePoly::scale(const FieldElement& c) const {
    SparsePoly r(spec_, vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

SparsePoly SparsePoly::pow(unsigned long k) const {
    SparsePoly acc = constant(spec_, vars_, FieldElement::from_int(spec_, 1));
    SparsePoly base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    return spec_ == o.spec_ && vars_.size() == o.vars_.size() && terms_ == o.terms_;
}

FieldElement SparsePoly::eval(std::span<const FieldElement> point) const {
    if (point.size() != vars_.size()) throw DimensionMismatch("evaluation point has wrong length");
    FieldElement acc(spec_);
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            FieldElement p = FieldElement::from_int(spec_, 1);
            FieldElement b = point[i];
            for (std::uint32_t k = e[i]; k;) {
                if (k & 1) p = p * b;
                k >>= 1;
                if (k) b = b * b;
            }
            t = t * p;
        }
        acc = acc + t;
    }
    return acc;
}

SparsePoly SparsePoly::derivative(int var) const {
    SparsePoly r(spec_, vars_);
    auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents d = e;
        --d[v];
        r.add_term(d, c * FieldElement::from_int(spec_, e[v]));
    }
    return r;
}

SparsePoly SparsePoly::shift_var(int var, const FieldElement& c) const {
    if (c.is_zero()) return *this;
    auto v = static_cast<std::size_t>(var);
    // binomial expansion of (x_v + c)^k per term, one variable at a time
    SparsePoly r(spec_, vars_);
    std::vector<FieldElement> cpow{FieldElement::from_int(spec_, 1)};
    for (const auto& [e, coef] : terms_) {
        std::uint32_t k = e[v];
        while (cpow.size() <= k) cpow.push_back(cpow.back() * c);
        FieldElement binom = FieldElement::from_int(spec_, 1);
        Exponents t = e;
        for (std::uint32_t j = 0; j <= k; ++j) {
            // binom == C(k, j), exponent k - j on x_v, factor c^j
            t[v] = k - j;
            r.add_term(t, coef * binom * cpow[j]);
            if (j < k)
                binom = binom * FieldElement::from_int(spec_, k - j) / FieldElement::from_int(spec_, j + 1);
        }
    }
    return r;
}

std::string format_poly(const SparsePoly& p, MonomialOrder order) {
    if (p.is_zero()) return "0";
    std::vector<const Exponents*> keys;
    keys.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) keys.push_back(&e);
    if (order == MonomialOrder::grevlex) {
        std::reverse(keys.begin(), keys.end());  // map is grevlex ascending
    } else {
        std::sort(keys.begin(), keys.end(),
                  [](const Exponents* a, const Exponents* b) { return lex_compare(*a, *b) > 0; });
    }
    std::string out;
    bool first = true;
    for (const Exponents* e : keys) {
        FieldElement c = p.terms().at(*e);
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        std::string mag = negative ? cs.substr(1) : cs;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e->size(); ++i) {
            if ((*e)[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.vars()[i];
            if ((*e)[i] > 1) mono += "^" + std::to_string((*e)[i]);
        }
        if (mono.empty()) {
            out += mag;
        } else if (mag == "1") {
            out += mono;
        } else {
            out += mag + "*" + mono;
        }
    }
    return out;
}

}  // namespace polyrep
