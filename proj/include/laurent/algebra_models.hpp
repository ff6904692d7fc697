#pragma once

// The two concrete models of an R-algebra A:
//
//  * AlgebraPresentation: generators and relations, with declared inverse
//    pairs and user-asserted hypotheses that cannot be decided from a
//    presentation.
//  * MonomialSubalgebra: an algebra generated by unit-coefficient-scaled
//    monomials inside an ambient Laurent ring, with the generators flagged
//    invertible generating the unit group modulo scalars.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laurent/domain.hpp"
#include "laurent/poly.hpp"

namespace laurent {

class MonomialSubalgebra;

struct AssertedFlags {
    bool base_algebraically_closed = false;
    std::optional<unsigned> transcendence_degree;

    friend bool operator==(const AssertedFlags&, const AssertedFlags&) = default;
};

class AlgebraPresentation {
public:
    AlgebraPresentation() = default;
    // Relations are polynomials in the generators (rank = generator count).
    // Each declared pair (x, xinv) gets the relation x*xinv - 1 appended when
    // it is not already present. Throws MalformedPresentation.
    AlgebraPresentation(Domain domain, std::vector<std::string> generators,
                        std::vector<std::pair<std::size_t, std::size_t>> inverse_pairs,
                        std::vector<LaurentPoly> relations, std::vector<std::size_t> base_generators = {},
                        AssertedFlags flags = {});

    const Domain& domain() const noexcept { return domain_; }
    std::size_t generator_count() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& inverse_pairs() const noexcept { return pairs_; }
    const std::vector<LaurentPoly>& relations() const noexcept { return relations_; }
    const std::vector<std::size_t>& base_generators() const noexcept { return base_; }
    const AssertedFlags& flags() const noexcept { return flags_; }

    bool is_declared_unit(std::size_t i) const;
    std::optional<std::size_t> partner(std::size_t i) const;
    std::optional<std::size_t> index_of(const std::string& name) const;

    // Coordinates: every generator except the second member of an inverse
    // pair, which is folded into a negative power of its partner.
    std::vector<std::size_t> coordinate_generators() const;
    std::vector<std::string> coordinate_names() const;
    LaurentPoly to_coordinates(const LaurentPoly& p) const;
    // Coordinate ring view: ambient Laurent ring on the coordinates, one
    // generator per coordinate, declared units flagged invertible. Relations
    // other than the inverse pairs are not visible in this view.
    MonomialSubalgebra coordinate_view() const;

    friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;

private:
    Domain domain_;
    std::vector<std::string> names_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<LaurentPoly> relations_;
    std::vector<std::size_t> base_;
    AssertedFlags flags_;
};

struct MonomialGenerator {
    std::string name;
    Coeff coefficient;
    ExponentVector exponent;
    bool unit = false;

    friend bool operator==(const MonomialGenerator&, const MonomialGenerator&) = default;
};

class MonomialSubalgebra {
public:
    MonomialSubalgebra() = default;
    // `base` lists generators of a non-trivial base ring R inside the ambient
    // ring (empty: R is the coefficient domain). Throws
    // MalformedPresentation / NotAUnit.
    MonomialSubalgebra(Domain domain, std::vector<std::string> ambient_names, std::vector<MonomialGenerator> generators,
                       std::vector<MonomialGenerator> base = {});

    // R^{[+-n]} generated by the coordinate units.
    static MonomialSubalgebra torus(const Domain& domain, std::vector<std::string> ambient_names);

    const Domain& domain() const noexcept { return domain_; }
    std::size_t ambient_rank() const noexcept { return ambient_names_.size(); }
    const std::vector<std::string>& ambient_names() const noexcept { return ambient_names_; }
    const std::vector<MonomialGenerator>& generators() const noexcept { return generators_; }
    const std::vector<MonomialGenerator>& base() const noexcept { return base_; }
    std::vector<MonomialGenerator> unit_generators() const;

    LaurentPoly element(const MonomialGenerator& g) const;
    // Same algebra over another coefficient domain (used by localization).
    MonomialSubalgebra with_domain(const Domain& domain) const;

    friend bool operator==(const MonomialSubalgebra&, const MonomialSubalgebra&) = default;

private:
    Domain domain_;
    std::vector<std::string> ambient_names_;
    std::vector<MonomialGenerator> generators_;
    std::vector<MonomialGenerator> base_;
};

}  // namespace laurent
