#pragma once

// Operations on the two algebra models: unit lattices, free generators of
// A*/R*, algebraic closures of unit subrings, localization.

#include <cstddef>
#include <optional>
#include <vector>

#include "laurent/algebra_models.hpp"
#include "laurent/lattice.hpp"
#include "laurent/poly.hpp"

namespace laurent {

// HNF basis of the group generated by the unit generators' exponents.
LatticeBasis unit_lattice(const MonomialSubalgebra& A);

// Free generators w_1..w_m of A*/R* (coefficient 1, exponents = HNF basis).
std::vector<UnitDecomposition> units_mod_scalars(const MonomialSubalgebra& A);

// tr.deg of A over its base ring in the monomial model:
// rank(generators and base) - rank(base).
std::size_t transcendence_degree(const MonomialSubalgebra& A);

struct UnitClosure {
    MonomialSubalgebra closure;
    // w with closure = R[w, w^{-1}], when the closure is exactly that ring.
    std::optional<UnitDecomposition> generator;
};

// Alg_{R[u]} A inside the monomial model. Throws NotAUnit / ZeroExponent.
UnitClosure algebraic_closure_of_unit(const MonomialSubalgebra& A, const LaurentPoly& u);

struct LocalizedAlgebra {
    AlgebraPresentation algebra;
    LaurentPoly inverted;                       // r, in the base generators
    std::optional<std::size_t> inverse_generator;  // absent for a coefficient localization
};

// A_r. A constant r is inverted in the coefficient domain; otherwise a fresh
// generator r_inv with r*r_inv - 1 is adjoined. Throws ZeroElement.
LocalizedAlgebra localize(const AlgebraPresentation& P, const LaurentPoly& r);

// Extends generator degrees of P to A_r with deg(r_inv) = -deg(r); throws
// HypothesisFailed if r is not homogeneous for the given degrees.
IntVector extend_grading(const LocalizedAlgebra& L, const IntVector& degrees);

// Rewrites an element of R[w_1^{+-1}, ..., w_m^{+-1}][extra vars] (given in
// ambient coordinates followed by `extra` adjoined variables) as a Laurent
// polynomial in m + extra variables. Throws DecompositionFailed when some
// term's ambient exponent is outside the lattice of the basis.
LaurentPoly rewrite_in_basis(const LaurentPoly& p, const std::vector<UnitDecomposition>& basis, std::size_t extra);

// Inverse direction: substitutes w_i for the first m variables.
LaurentPoly expand_from_basis(const LaurentPoly& q, const std::vector<UnitDecomposition>& basis,
                              std::size_t ambient_rank, std::size_t extra, const Domain& domain);

}  // namespace laurent
