#pragma once

// Sparse Laurent polynomials R[y_1^{+-1}, ..., y_n^{+-1}] over an exact
// coefficient domain. Terms are kept in a map with no zero coefficients.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "laurent/domain.hpp"
#include "laurent/integer.hpp"

namespace laurent {

using ExponentVector = IntVector;

// Graded lexicographic: total degree first, ties broken lexicographically.
struct GrlexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class LaurentPoly {
public:
    using TermMap = std::map<ExponentVector, Coeff, GrlexLess>;

    LaurentPoly() = default;
    LaurentPoly(Domain domain, std::size_t rank);

    static LaurentPoly constant(const Domain& domain, std::size_t rank, const Coeff& c);
    static LaurentPoly monomial(const Domain& domain, const Coeff& c, ExponentVector exponent);
    static LaurentPoly variable(const Domain& domain, std::size_t rank, std::size_t i);

    std::size_t rank() const noexcept { return rank_; }
    const Domain& domain() const noexcept { return domain_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Coeff coefficient(const ExponentVector& e) const;

    // Accumulates c*y^e, dropping the term when it cancels.
    void add_term(const ExponentVector& e, const Coeff& c);

    // Re-reads every coefficient in another domain (throws NotInDomain).
    LaurentPoly with_domain(const Domain& domain) const;
    // Appends `extra` variables (exponent 0) or keeps the first `rank` ones.
    LaurentPoly padded(std::size_t rank) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    void check_compatible(const LaurentPoly& other) const;

    Domain domain_;
    std::size_t rank_ = 0;
    TermMap terms_;
};

LaurentPoly scale(const LaurentPoly& p, const Coeff& c);

struct UnitDecomposition {
    Coeff coefficient;
    ExponentVector exponent;

    friend bool operator==(const UnitDecomposition&, const UnitDecomposition&) = default;
};

// p = r*y^d with r a unit of the coefficient domain; absent otherwise
// (including for p = 0).
std::optional<UnitDecomposition> is_unit_poly(const LaurentPoly& p);

// Throws NotAUnit.
LaurentPoly invert_unit_poly(const LaurentPoly& p);

// Negative powers require a unit (NotAUnit otherwise).
LaurentPoly pow(const LaurentPoly& p, const Integer& k);

// Image of p under the coefficient-fixing homomorphism y_i -> images[i].
// Images live in a ring of rank `target_rank` over `target_domain`.
LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images, std::size_t target_rank,
                       const Domain& target_domain);
LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images);

std::vector<std::string> default_names(std::size_t rank, std::string_view stem = "x");

// Canonical text: terms in decreasing grlex order, e.g. `5*x^2*y^-1 + 1/3`.
std::string to_string(const LaurentPoly& p, std::span<const std::string> names);
std::string to_string(const LaurentPoly& p);

// Terms joined by +/-, integer or a/b coefficients, `*` products, `^` powers
// with optional negative integer exponents, parentheses. Throws ParseError.
LaurentPoly parse_poly(std::string_view text, std::span<const std::string> names, const Domain& domain);

}  // namespace laurent
