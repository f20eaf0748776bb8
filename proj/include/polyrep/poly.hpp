#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyrep/field.hpp"
#include "polyrep/monomial.hpp"

namespace polyrep {

enum class MonomialOrder { grevlex, lex };

// Multivariate polynomial as an exponent-vector -> coefficient map over a
// fixed ordered variable list. No zero coefficients are stored; the term map
// iterates in grevlex order. Immutable value semantics throughout.
class SparsePoly {
public:
    SparsePoly(FieldSpec spec, std::vector<std::string> vars)
        : spec_(spec), vars_(std::move(vars)) {}

    static SparsePoly constant(FieldSpec spec, std::vector<std::string> vars, const FieldElement& c);
    static SparsePoly variable(FieldSpec spec, std::vector<std::string> vars, int index);

    const FieldSpec& spec() const { return spec_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int var_count() const { return static_cast<int>(vars_.size()); }
    const std::map<Exponents, FieldElement, GrevlexLess>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Total degree; nullopt for the zero polynomial.
    std::optional<long> degree() const;

    FieldElement coeff(const Exponents& e) const;
    // Adds c * x^e, dropping the term if the sum cancels.
    void add_term(const Exponents& e, const FieldElement& c);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly scale(const FieldElement& c) const;
    SparsePoly pow(unsigned long k) const;

    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    FieldElement eval(std::span<const FieldElement> point) const;
    SparsePoly derivative(int var) const;
    // Substitutes x_var -> x_var + c and expands.
    SparsePoly shift_var(int var, const FieldElement& c) const;

private:
    void check_compatible(const SparsePoly& o) const;
    FieldSpec spec_;
    std::vector<std::string> vars_;
    std::map<Exponents, FieldElement, GrevlexLess> terms_;
};

// Deterministic canonical rendering, e.g. "-1/3*u1^3 + u1*u2 - u1 + 1/3*u3".
std::string format_poly(const SparsePoly& p, MonomialOrder order = MonomialOrder::grevlex);

}  // namespace polyrep
