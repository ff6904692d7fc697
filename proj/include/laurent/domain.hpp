#pragma once

// Exact coefficient domains. Coefficients are rationals kept in a canonical
// per-domain form: residues in [0, p) for GF(p), integers (or fractions with
// denominators built from inverted elements) for ZZ and its localizations.

#include <string>
#include <vector>

#include "laurent/integer.hpp"

namespace laurent {

using Coeff = Rational;

enum class DomainKind { Rationals, PrimeField, Integers };

class Domain {
public:
    Domain() = default;  // QQ

    static Domain rationals();
    static Domain prime_field(const Integer& p);
    static Domain integers();

    // ZZ[1/r]: makes r (and every divisor of r) a unit. For fields the domain
    // is returned unchanged.
    Domain localized_at(const Coeff& r) const;

    DomainKind kind() const noexcept { return kind_; }
    bool is_field() const noexcept { return kind_ != DomainKind::Integers; }
    const Integer& modulus() const noexcept { return modulus_; }
    const std::vector<Integer>& inverted() const noexcept { return inverted_; }

    // "QQ", "GF(7)", "ZZ", "ZZ[1/6]"
    std::string tag() const;
    static Domain parse(const std::string& tag);

    bool contains(const Rational& q) const;
    // Canonical image of q; throws NotInDomain when q is not an element.
    Coeff from_rational(const Rational& q) const;
    Coeff from_integer(long n) const { return from_rational(Rational(n)); }

    Coeff zero() const { return Coeff(0); }
    Coeff one() const { return Coeff(1); }
    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff negate(const Coeff& a) const;
    Coeff multiply(const Coeff& a, const Coeff& b) const;
    bool is_unit(const Coeff& a) const;
    // Throws NotAUnit.
    Coeff invert_unit(const Coeff& a) const;
    // Integer powers; negative exponents require a unit.
    Coeff power(const Coeff& a, const Integer& k) const;

    // Same ring (for localizations of ZZ: the same set of inverted primes).
    friend bool operator==(const Domain& a, const Domain& b);

private:
    // Strips from n every prime factor shared with the inverted set.
    Integer strip_inverted(Integer n) const;

    DomainKind kind_ = DomainKind::Rationals;
    Integer modulus_ = 0;
    std::vector<Integer> inverted_;
};

}  // namespace laurent
