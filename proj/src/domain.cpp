#include "laurent/domain.hpp"

#include <regex>

#include "laurent/error.hpp"

namespace laurent {

Domain Domain::rationals() { return Domain(); }

Domain Domain::prime_field(const Integer& p)
{
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        fail(ErrorKind::NotInDomain, "GF(" + p.get_str() + ") needs a prime modulus");
    Domain d;
    d.kind_ = DomainKind::PrimeField;
    d.modulus_ = p;
    return d;
}

Domain Domain::integers()
{
    Domain d;
    d.kind_ = DomainKind::Integers;
    return d;
}

Domain Domain::localized_at(const Coeff& r) const
{
    if (is_field()) return *this;
    if (r == 0) fail(ErrorKind::ZeroElement, "cannot localize at zero");
    if (!contains(r)) fail(ErrorKind::NotInDomain, to_string(r) + " is not in " + tag());
    Integer n = strip_inverted(abs_value(Integer(r.get_num())));
    Domain d = *this;
    if (n != 1) d.inverted_.push_back(n);
    return d;
}

std::string Domain::tag() const
{
    switch (kind_) {
    case DomainKind::Rationals: return "QQ";
    case DomainKind::PrimeField: return "GF(" + modulus_.get_str() + ")";
    case DomainKind::Integers: {
        if (inverted_.empty()) return "ZZ";
        Integer prod = 1;
        for (const auto& x : inverted_) prod *= x;
        return "ZZ[1/" + prod.get_str() + "]";
    }
    }
    return "?";
}

Domain Domain::parse(const std::string& tag)
{
    static const std::regex gf(R"(GF\((\d+)\))");
    static const std::regex zloc(R"(ZZ\[1/(\d+)\])");
    std::smatch m;
    if (tag == "QQ") return rationals();
    if (tag == "ZZ") return integers();
    if (std::regex_match(tag, m, gf)) return prime_field(Integer(m[1].str()));
    if (std::regex_match(tag, m, zloc)) return integers().localized_at(Coeff(Integer(m[1].str())));
    fail(ErrorKind::ParseError, "unknown coefficient domain '" + tag + "'");
}

Integer Domain::strip_inverted(Integer n) const
{
    if (n == 0) return n;
    for (const auto& s : inverted_) {
        Integer g;
        for (;;) {
            mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), s.get_mpz_t());
            if (g == 1) break;
            n /= g;
        }
    }
    return n;
}

bool Domain::contains(const Rational& q) const
{
    switch (kind_) {
    case DomainKind::Rationals: return true;
    case DomainKind::PrimeField: return !mpz_divisible_p(q.get_den_mpz_t(), modulus_.get_mpz_t());
    case DomainKind::Integers: return strip_inverted(Integer(q.get_den())) == 1;
    }
    return false;
}

Coeff Domain::from_rational(const Rational& q) const
{
    if (!contains(q)) fail(ErrorKind::NotInDomain, to_string(q) + " is not an element of " + tag());
    if (kind_ != DomainKind::PrimeField) return q;
    Integer num = q.get_num(), den = q.get_den(), inv, out;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
    out = num * inv;
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), modulus_.get_mpz_t());
    return Coeff(out);
}

Coeff Domain::add(const Coeff& a, const Coeff& b) const
{
    if (kind_ != DomainKind::PrimeField) return a + b;
    return from_rational(a + b);
}

Coeff Domain::negate(const Coeff& a) const
{
    if (kind_ != DomainKind::PrimeField) return -a;
    return from_rational(-a);
}

Coeff Domain::multiply(const Coeff& a, const Coeff& b) const
{
    if (kind_ != DomainKind::PrimeField) return a * b;
    return from_rational(a * b);
}

bool Domain::is_unit(const Coeff& a) const
{
    if (a == 0) return false;
    if (is_field()) return true;
    return strip_inverted(abs_value(Integer(a.get_num()))) == 1 && contains(a);
}

Coeff Domain::invert_unit(const Coeff& a) const
{
    if (!is_unit(a)) fail(ErrorKind::NotAUnit, to_string(a) + " is not a unit of " + tag());
    Rational inv = 1 / a;
    return from_rational(inv);
}

Coeff Domain::power(const Coeff& a, const Integer& k) const
{
    if (k == 0) return one();
    Coeff base = k < 0 ? invert_unit(a) : a;
    if (kind_ == DomainKind::PrimeField) {
        Integer r, b = base.get_num(), e = abs_value(k);
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), modulus_.get_mpz_t());
        return Coeff(r);
    }
    unsigned long e = to_ulong_checked(abs_value(k));
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    out.canonicalize();
    return from_rational(out);
}

bool operator==(const Domain& a, const Domain& b)
{
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == DomainKind::PrimeField) return a.modulus_ == b.modulus_;
    if (a.kind_ == DomainKind::Rationals) return true;
    for (const auto& x : a.inverted_)
        if (!b.is_unit(Coeff(x))) return false;
    for (const auto& x : b.inverted_)
        if (!a.is_unit(Coeff(x))) return false;
    return true;
}

}  // namespace laurent
