#include "laurent/algebra_models.hpp"

#include <algorithm>
#include <set>

#include "laurent/error.hpp"

namespace laurent {

AlgebraPresentation::AlgebraPresentation(Domain domain, std::vector<std::string> generators,
                                         std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs,
                                         std::vector<LaurentPoly> relations, std::vector<std::size_t> base_generators,
                                         AssertedFlags flags)
    : domain_(std::move(domain)),
      names_(std::move(generators)),
      pairs_(std::move(inverse_pairs)),
      relations_(std::move(relations)),
      base_(std::move(base_generators)),
      flags_(flags)
{
    const std::size_t g = names_.size();
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second) fail(ErrorKind::MalformedPresentation, "duplicate generator '" + n + "'");

    std::set<std::size_t> paired;
    for (auto [a, b] : pairs_) {
        if (a >= g || b >= g || a == b) fail(ErrorKind::MalformedPresentation, "invalid inverse pair");
        if (!paired.insert(a).second || !paired.insert(b).second)
            fail(ErrorKind::MalformedPresentation, "generator '" + names_[std::max(a, b)] + "' in two inverse pairs");
    }
    for (auto b : base_)
        if (b >= g) fail(ErrorKind::MalformedPresentation, "base generator index out of range");

    for (const auto& r : relations_) {
        if (r.rank() != g) fail(ErrorKind::MalformedPresentation, "relation rank differs from generator count");
        if (!(r.domain() == domain_)) fail(ErrorKind::MalformedPresentation, "relation over a different domain");
        if (r.is_zero()) fail(ErrorKind::MalformedPresentation, "zero relation");
        for (const auto& [e, c] : r.terms())
            for (std::size_t i = 0; i < g; ++i)
                if (e[i] < 0 && !is_declared_unit(i))
                    fail(ErrorKind::MalformedPresentation,
                         "negative power of '" + names_[i] + "', which is not a declared unit");
    }

    for (auto [a, b] : pairs_) {
        ExponentVector e = zero_vector(g);
        e[a] = 1;
        e[b] = 1;
        LaurentPoly rel = LaurentPoly::monomial(domain_, Coeff(1), e) - LaurentPoly::constant(domain_, g, Coeff(1));
        bool present = std::any_of(relations_.begin(), relations_.end(),
                                   [&](const LaurentPoly& r) { return r == rel || r == -rel; });
        if (!present) relations_.push_back(rel);
    }
}

bool AlgebraPresentation::is_declared_unit(std::size_t i) const { return partner(i).has_value(); }

std::optional<std::size_t> AlgebraPresentation::partner(std::size_t i) const
{
    for (auto [a, b] : pairs_) {
        if (a == i) return b;
        if (b == i) return a;
    }
    return std::nullopt;
}

std::optional<std::size_t> AlgebraPresentation::index_of(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::size_t> AlgebraPresentation::coordinate_generators() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        bool folded = std::any_of(pairs_.begin(), pairs_.end(), [&](auto pr) { return pr.second == i; });
        if (!folded) out.push_back(i);
    }
    return out;
}

std::vector<std::string> AlgebraPresentation::coordinate_names() const
{
    std::vector<std::string> out;
    for (auto i : coordinate_generators()) out.push_back(names_[i]);
    return out;
}

LaurentPoly AlgebraPresentation::to_coordinates(const LaurentPoly& p) const
{
    auto coords = coordinate_generators();
    const std::size_t k = coords.size();
    std::vector<LaurentPoly> images(names_.size());
    for (std::size_t c = 0; c < k; ++c) images[coords[c]] = LaurentPoly::variable(domain_, k, c);
    for (auto [a, b] : pairs_) {
        auto pos = static_cast<std::size_t>(std::find(coords.begin(), coords.end(), a) - coords.begin());
        images[b] = LaurentPoly::monomial(domain_, Coeff(1), -unit_vector(k, pos));
    }
    return substitute(p, images, k, domain_);
}

MonomialSubalgebra AlgebraPresentation::coordinate_view() const
{
    auto coords = coordinate_generators();
    const std::size_t k = coords.size();
    std::vector<MonomialGenerator> gens, base;
    for (std::size_t c = 0; c < k; ++c) {
        MonomialGenerator g{names_[coords[c]], Coeff(1), unit_vector(k, c), is_declared_unit(coords[c])};
        if (std::find(base_.begin(), base_.end(), coords[c]) != base_.end()) base.push_back(g);
        gens.push_back(std::move(g));
    }
    return MonomialSubalgebra(domain_, coordinate_names(), std::move(gens), std::move(base));
}

MonomialSubalgebra::MonomialSubalgebra(Domain domain, std::vector<std::string> ambient_names,
                                       std::vector<MonomialGenerator> generators, std::vector<MonomialGenerator> base)
    : domain_(std::move(domain)),
      ambient_names_(std::move(ambient_names)),
      generators_(std::move(generators)),
      base_(std::move(base))
{
    auto check = [&](MonomialGenerator& g) {
        if (g.exponent.size() != ambient_names_.size())
            fail(ErrorKind::MalformedPresentation, "generator '" + g.name + "' has the wrong exponent length");
        if (g.coefficient == 0) fail(ErrorKind::MalformedPresentation, "generator '" + g.name + "' is zero");
        g.coefficient = domain_.from_rational(g.coefficient);
        if (g.unit && !domain_.is_unit(g.coefficient))
            fail(ErrorKind::NotAUnit, "unit generator '" + g.name + "' has non-unit coefficient " +
                                          to_string(g.coefficient));
    };
    for (auto& g : generators_) check(g);
    for (auto& g : base_) check(g);
}

MonomialSubalgebra MonomialSubalgebra::torus(const Domain& domain, std::vector<std::string> ambient_names)
{
    std::vector<MonomialGenerator> gens;
    const std::size_t n = ambient_names.size();
    for (std::size_t i = 0; i < n; ++i) gens.push_back({ambient_names[i], Coeff(1), unit_vector(n, i), true});
    return MonomialSubalgebra(domain, std::move(ambient_names), std::move(gens));
}

std::vector<MonomialGenerator> MonomialSubalgebra::unit_generators() const
{
    std::vector<MonomialGenerator> out;
    for (const auto& g : generators_)
        if (g.unit) out.push_back(g);
    return out;
}

LaurentPoly MonomialSubalgebra::element(const MonomialGenerator& g) const
{
    return LaurentPoly::monomial(domain_, g.coefficient, g.exponent);
}

MonomialSubalgebra MonomialSubalgebra::with_domain(const Domain& domain) const
{
    return MonomialSubalgebra(domain, ambient_names_, generators_, base_);
}

}  // namespace laurent
