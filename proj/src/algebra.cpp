#include "laurent/algebra.hpp"

#include <algorithm>

#include "laurent/error.hpp"
#include "laurent/grading.hpp"

namespace laurent {

LatticeBasis unit_lattice(const MonomialSubalgebra& A)
{
    std::vector<IntVector> rows;
    for (const auto& g : A.unit_generators()) rows.push_back(g.exponent);
    return LatticeBasis::from_generators(rows, A.ambient_rank());
}

std::vector<UnitDecomposition> units_mod_scalars(const MonomialSubalgebra& A)
{
    LatticeBasis L = unit_lattice(A);
    std::vector<UnitDecomposition> out;
    for (std::size_t i = 0; i < L.rank(); ++i) out.push_back({Coeff(1), L.vector(i)});
    return out;
}

std::size_t transcendence_degree(const MonomialSubalgebra& A)
{
    std::vector<IntVector> all, base;
    for (const auto& g : A.generators()) all.push_back(g.exponent);
    for (const auto& g : A.base()) {
        all.push_back(g.exponent);
        base.push_back(g.exponent);
    }
    return rank(IntMatrix::from_rows(all, A.ambient_rank())) - rank(IntMatrix::from_rows(base, A.ambient_rank()));
}

UnitClosure algebraic_closure_of_unit(const MonomialSubalgebra& A, const LaurentPoly& u)
{
    if (u.rank() != A.ambient_rank()) fail(ErrorKind::RankMismatch, "unit lives in a different ambient ring");
    auto dec = is_unit_poly(u);
    if (!dec) fail(ErrorKind::NotAUnit, "element is not a unit monomial");
    if (!A.domain().is_unit(dec->coefficient)) fail(ErrorKind::NotAUnit, "coefficient is not a unit");
    if (is_zero(dec->exponent)) fail(ErrorKind::ZeroExponent, "a scalar unit has trivial algebraic closure data");
    LatticeBasis units = unit_lattice(A);
    if (!units.contains(dec->exponent)) fail(ErrorKind::NotAUnit, "exponent is outside the unit lattice of A");

    const std::size_t n = A.ambient_rank();
    LatticeBasis line = saturate(LatticeBasis::from_generators({dec->exponent}, n));
    LatticeBasis closure_units = intersect(units, line);

    std::vector<MonomialGenerator> gens;
    // w: the generator of the closure's unit lattice, oriented like u
    IntVector w = closure_units.vector(0);
    if (dot(w, dec->exponent) < 0) w = -w;
    gens.push_back({"w", Coeff(1), w, true});
    bool only_units = true;
    for (const auto& g : A.generators()) {
        if (!line.contains(g.exponent)) continue;
        if (g.unit || closure_units.contains(g.exponent)) continue;
        gens.push_back(g);
        only_units = false;
    }
    MonomialSubalgebra closure(A.domain(), A.ambient_names(), std::move(gens), A.base());
    std::optional<UnitDecomposition> generator;
    if (only_units) generator = UnitDecomposition{Coeff(1), w};
    return {std::move(closure), generator};
}

LocalizedAlgebra localize(const AlgebraPresentation& P, const LaurentPoly& r)
{
    const std::size_t g = P.generator_count();
    if (r.rank() != g) fail(ErrorKind::RankMismatch, "element is not in the presentation's generators");
    if (r.is_zero()) fail(ErrorKind::ZeroElement, "cannot localize at zero");

    bool constant = r.term_count() == 1 && is_zero(r.terms().begin()->first);
    if (constant) {
        Domain d = P.domain().localized_at(r.terms().begin()->second);
        std::vector<LaurentPoly> rels;
        for (const auto& rel : P.relations()) rels.push_back(rel.with_domain(d));
        AlgebraPresentation out(d, P.names(), P.inverse_pairs(), std::move(rels), P.base_generators(), P.flags());
        return {std::move(out), r.with_domain(d), std::nullopt};
    }

    std::vector<std::string> names = P.names();
    std::string fresh = "r_inv";
    while (std::find(names.begin(), names.end(), fresh) != names.end()) fresh += "_";
    names.push_back(fresh);
    std::vector<LaurentPoly> rels;
    for (const auto& rel : P.relations()) rels.push_back(rel.padded(g + 1));
    LaurentPoly rp = r.padded(g + 1);
    rels.push_back(rp * LaurentPoly::variable(P.domain(), g + 1, g) - LaurentPoly::constant(P.domain(), g + 1, Coeff(1)));
    auto pairs = P.inverse_pairs();
    for (std::size_t i = 0; i < g; ++i)
        if (r == LaurentPoly::variable(P.domain(), g, i) && !P.is_declared_unit(i)) pairs.emplace_back(i, g);
    AlgebraPresentation out(P.domain(), std::move(names), std::move(pairs), std::move(rels), P.base_generators(), P.flags());
    return {std::move(out), r, g};
}

IntVector extend_grading(const LocalizedAlgebra& L, const IntVector& degrees)
{
    if (!L.inverse_generator) return degrees;
    Grading grading(degrees);
    auto supp = support(grading, L.inverted);
    if (supp.size() != 1) fail(ErrorKind::HypothesisFailed, "the inverted element is not homogeneous");
    IntVector out = degrees;
    out.push_back(-*supp.begin());
    return out;
}

LaurentPoly rewrite_in_basis(const LaurentPoly& p, const std::vector<UnitDecomposition>& basis, std::size_t extra)
{
    if (p.rank() < extra) fail(ErrorKind::RankMismatch, "fewer variables than adjoined ones");
    const std::size_t ambient = p.rank() - extra;
    const std::size_t m = basis.size();
    std::vector<IntVector> rows;
    for (const auto& w : basis) {
        if (w.exponent.size() != ambient) fail(ErrorKind::RankMismatch, "basis exponent length");
        rows.push_back(w.exponent);
    }
    IntMatrix W = IntMatrix::from_rows(rows, ambient);
    const Domain& R = p.domain();
    LaurentPoly out(R, m + extra);
    for (const auto& [e, c] : p.terms()) {
        IntVector head(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(ambient));
        auto coords = lattice_membership(head, W);
        if (!coords)
            fail(ErrorKind::DecompositionFailed, "exponent " + to_string(head) + " is outside the unit basis lattice");
        Coeff scale = R.one();
        for (std::size_t i = 0; i < m; ++i) scale = R.multiply(scale, R.power(basis[i].coefficient, (*coords)[i]));
        IntVector f = *coords;
        f.insert(f.end(), e.begin() + static_cast<std::ptrdiff_t>(ambient), e.end());
        out.add_term(f, R.multiply(c, R.invert_unit(scale)));
    }
    return out;
}

LaurentPoly expand_from_basis(const LaurentPoly& q, const std::vector<UnitDecomposition>& basis,
                              std::size_t ambient_rank, std::size_t extra, const Domain& domain)
{
    const std::size_t m = basis.size();
    if (q.rank() != m + extra) fail(ErrorKind::RankMismatch, "expected basis variables plus adjoined ones");
    std::vector<LaurentPoly> images;
    for (const auto& w : basis) {
        IntVector e = w.exponent;
        e.resize(ambient_rank + extra, Integer(0));
        images.push_back(LaurentPoly::monomial(domain, w.coefficient, e));
    }
    for (std::size_t j = 0; j < extra; ++j)
        images.push_back(LaurentPoly::variable(domain, ambient_rank + extra, ambient_rank + j));
    return substitute(q.with_domain(domain), images, ambient_rank + extra, domain);
}

}  // namespace laurent
