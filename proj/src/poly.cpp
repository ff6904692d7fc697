#include "laurent/poly.hpp"

#include <cctype>
#include <sstream>

#include "laurent/error.hpp"

namespace laurent {

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const
{
    Integer da = 0, db = 0;
    for (const auto& x : a) da += x;
    for (const auto& x : b) db += x;
    if (da != db) return da < db;
    return a < b;
}

LaurentPoly::LaurentPoly(Domain domain, std::size_t rank) : domain_(std::move(domain)), rank_(rank) {}

LaurentPoly LaurentPoly::constant(const Domain& domain, std::size_t rank, const Coeff& c)
{
    LaurentPoly p(domain, rank);
    p.add_term(zero_vector(rank), domain.from_rational(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(const Domain& domain, const Coeff& c, ExponentVector exponent)
{
    LaurentPoly p(domain, exponent.size());
    p.add_term(exponent, domain.from_rational(c));
    return p;
}

LaurentPoly LaurentPoly::variable(const Domain& domain, std::size_t rank, std::size_t i)
{
    return monomial(domain, Coeff(1), unit_vector(rank, i));
}

Coeff LaurentPoly::coefficient(const ExponentVector& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVector& e, const Coeff& c)
{
    if (e.size() != rank_) fail(ErrorKind::RankMismatch, "exponent length differs from polynomial rank");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = domain_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::with_domain(const Domain& domain) const
{
    LaurentPoly out(domain, rank_);
    for (const auto& [e, c] : terms_) out.add_term(e, domain.from_rational(c));
    return out;
}

LaurentPoly LaurentPoly::padded(std::size_t rank) const
{
    LaurentPoly out(domain_, rank);
    for (const auto& [e, c] : terms_) {
        ExponentVector f = e;
        if (rank < rank_) {
            for (std::size_t i = rank; i < rank_; ++i)
                if (f[i] != 0) fail(ErrorKind::RankMismatch, "cannot drop a variable that occurs");
        }
        f.resize(rank, Integer(0));
        out.add_term(f, c);
    }
    return out;
}

void LaurentPoly::check_compatible(const LaurentPoly& other) const
{
    if (rank_ != other.rank_)
        fail(ErrorKind::RankMismatch, "ranks " + std::to_string(rank_) + " and " + std::to_string(other.rank_));
    if (!(domain_ == other.domain_))
        fail(ErrorKind::DomainMismatch, "domains " + domain_.tag() + " and " + other.domain_.tag());
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other)
{
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, domain_.negate(c));
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other)
{
    *this = *this * other;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    a.check_compatible(b);
    LaurentPoly out(a.domain_, a.rank_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, a.domain_.multiply(ca, cb));
    return out;
}

LaurentPoly operator-(const LaurentPoly& a)
{
    LaurentPoly out(a.domain_, a.rank_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, a.domain_.negate(c));
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    return a.rank_ == b.rank_ && a.domain_ == b.domain_ && a.terms_ == b.terms_;
}

LaurentPoly scale(const LaurentPoly& p, const Coeff& c)
{
    LaurentPoly out(p.domain(), p.rank());
    for (const auto& [e, x] : p.terms()) out.add_term(e, p.domain().multiply(x, c));
    return out;
}

std::optional<UnitDecomposition> is_unit_poly(const LaurentPoly& p)
{
    if (p.term_count() != 1) return std::nullopt;
    const auto& [e, c] = *p.terms().begin();
    if (!p.domain().is_unit(c)) return std::nullopt;
    return UnitDecomposition{c, e};
}

LaurentPoly invert_unit_poly(const LaurentPoly& p)
{
    auto u = is_unit_poly(p);
    if (!u) fail(ErrorKind::NotAUnit, "polynomial with " + std::to_string(p.term_count()) + " terms is not a unit");
    return LaurentPoly::monomial(p.domain(), p.domain().invert_unit(u->coefficient), -u->exponent);
}

LaurentPoly pow(const LaurentPoly& p, const Integer& k)
{
    if (k == 0) return LaurentPoly::constant(p.domain(), p.rank(), Coeff(1));
    if (p.term_count() == 1) {
        const auto& [e, c] = *p.terms().begin();
        if (k < 0 && !p.domain().is_unit(c)) fail(ErrorKind::NotAUnit, "negative power of a non-unit");
        return LaurentPoly::monomial(p.domain(), p.domain().power(c, k), k * e);
    }
    if (k < 0) fail(ErrorKind::NotAUnit, "negative power of a non-unit");
    LaurentPoly result = LaurentPoly::constant(p.domain(), p.rank(), Coeff(1));
    LaurentPoly base = p;
    Integer e = k;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images, std::size_t target_rank,
                       const Domain& target_domain)
{
    if (images.size() != p.rank())
        fail(ErrorKind::RankMismatch,
             "substitution needs " + std::to_string(p.rank()) + " images, got " + std::to_string(images.size()));
    for (const auto& img : images) {
        if (img.rank() != target_rank) fail(ErrorKind::RankMismatch, "substitution images of different ranks");
        if (!(img.domain() == target_domain)) fail(ErrorKind::DomainMismatch, "substitution images in different domains");
    }
    // Only invert images of variables that occur with a negative exponent.
    std::vector<std::optional<LaurentPoly>> inverses(images.size());
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 && !inverses[i]) {
                if (!is_unit_poly(images[i]))
                    fail(ErrorKind::NotAUnit, "variable " + std::to_string(i + 1) +
                                                  " occurs with a negative exponent but its image is not a unit");
                inverses[i] = invert_unit_poly(images[i]);
            }

    LaurentPoly out(target_domain, target_rank);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(target_domain, target_rank, target_domain.from_rational(c));
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            term = term * (e[i] > 0 ? pow(images[i], e[i]) : pow(*inverses[i], -e[i]));
        }
        out += term;
    }
    return out;
}

LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images)
{
    if (images.empty()) {
        if (p.rank() != 0) fail(ErrorKind::RankMismatch, "no images supplied");
        return p;
    }
    return substitute(p, images, images.front().rank(), images.front().domain());
}

std::vector<std::string> default_names(std::size_t rank, std::string_view stem)
{
    std::vector<std::string> names;
    if (rank == 1) return {std::string(stem)};
    for (std::size_t i = 0; i < rank; ++i) names.push_back(std::string(stem) + std::to_string(i + 1));
    return names;
}

std::string to_string(const LaurentPoly& p, std::span<const std::string> names)
{
    if (names.size() != p.rank()) fail(ErrorKind::RankMismatch, "wrong number of variable names");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = c < 0;
        Coeff mag = negative ? Coeff(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + e[i].get_str());
        }
        if (factors.empty() || mag != 1) factors.insert(factors.begin(), to_string(mag));
        for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
    }
    return out.str();
}

std::string to_string(const LaurentPoly& p)
{
    auto names = default_names(p.rank());
    return to_string(p, names);
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::span<const std::string> names, const Domain& domain)
        : text_(text), names_(names), domain_(domain)
    {
    }

    LaurentPoly parse()
    {
        LaurentPoly p = expression();
        skip_space();
        if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& msg) const
    {
        fail(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPoly constant(const Coeff& c) const
    {
        return LaurentPoly::constant(domain_, names_.size(), domain_.from_rational(c));
    }

    LaurentPoly expression()
    {
        skip_space();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        LaurentPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    LaurentPoly term()
    {
        LaurentPoly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                LaurentPoly d = factor();
                if (d.is_zero()) {
                    pos_ = at;
                    error("division by zero");
                }
                acc = divide(acc, d);
            } else {
                return acc;
            }
        }
    }

    LaurentPoly divide(const LaurentPoly& a, const LaurentPoly& d)
    {
        bool a_const = a.is_zero() || (a.term_count() == 1 && is_zero(a.terms().begin()->first));
        bool d_const = d.term_count() == 1 && is_zero(d.terms().begin()->first);
        if (a_const && d_const) {
            Coeff q = a.is_zero() ? Coeff(0) : Coeff(a.terms().begin()->second / d.terms().begin()->second);
            return constant(q);
        }
        if (!is_unit_poly(d)) error("divisor is not a unit");
        return a * invert_unit_poly(d);
    }

    LaurentPoly factor()
    {
        LaurentPoly base = primary();
        if (!accept('^')) return base;
        skip_space();
        bool negative = accept('-');
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) error("expected an integer exponent");
        Integer k(std::string(text_.substr(start, pos_ - start)));
        if (negative) k = -k;
        if (k < 0 && !is_unit_poly(base)) error("negative power of a non-unit");
        return pow(base, k);
    }

    LaurentPoly primary()
    {
        skip_space();
        if (pos_ >= text_.size()) error("unexpected end of input");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            LaurentPoly inner = expression();
            if (!accept(')')) error("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return constant(Coeff(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view ident = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == ident) return LaurentPoly::variable(domain_, names_.size(), i);
            pos_ = start;
            error("unknown variable '" + std::string(ident) + "'");
        }
        error("unexpected '" + std::string(1, ch) + "'");
    }

    std::string_view text_;
    std::span<const std::string> names_;
    const Domain& domain_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::span<const std::string> names, const Domain& domain)
{
    return PolyParser(text, names, domain).parse();
}

}  // namespace laurent
