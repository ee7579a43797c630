#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chevalley/errors.hpp"

namespace chevalley {

constexpr int kMaxPolyVars = 16;
using Exponents = std::array<uint8_t, kMaxPolyVars>;

struct PolyTerm {
    Exponents e{};
    int64_t c = 0;
};

/// Graded-lex comparison of exponent vectors; returns <0, 0, >0.
int exp_cmp(const Exponents& a, const Exponents& b);

/// Sparse multivariate polynomial with exact int64 coefficients.
/// Terms are kept sorted in descending graded-lex order with nonzero
/// coefficients; arithmetic throws OverflowError instead of wrapping.
class Poly {
public:
    Poly() = default;
    static Poly constant(int64_t c);
    static Poly variable(int idx);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int64_t constant_value() const;  // requires is_constant()
    int total_degree() const;
    int max_var_index() const;  // largest variable index used, -1 if none
    size_t term_count() const { return terms_.size(); }
    const std::vector<PolyTerm>& terms() const { return terms_; }
    const PolyTerm& leading_term() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly mul_term(const Exponents& e, int64_t c) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Division with remainder by d (|lead coeff of d| must be 1):
    /// *this = q*d + r where no term of r is divisible by the leading
    /// monomial of d.  Returns (q, r).
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    /// Exact division; throws Error if a nonzero remainder appears.
    Poly divexact(const Poly& d) const;

    /// Remainder after full reduction by a single relation polynomial.
    Poly reduce(const Poly& rel) const { return divmod(rel).second; }

    std::string str(const std::vector<std::string>& names) const;
    size_t hash() const;

    /// Builds directly from (already canonical-or-not) terms.
    static Poly from_terms(std::vector<PolyTerm> ts);

private:
    std::vector<PolyTerm> terms_;
    void normalize();
};

}  // namespace chevalley
