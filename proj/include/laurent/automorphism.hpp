#pragma once

// Monomial automorphisms of R^{[+-n]}: y_i -> a_i * prod_j y_j^{E[i][j]},
// with E in GL_n(Z) and every a_i a unit of R.

#include <cstddef>
#include <vector>

#include "laurent/domain.hpp"
#include "laurent/lattice.hpp"
#include "laurent/poly.hpp"

namespace laurent {

class MonomialAutomorphism {
public:
    MonomialAutomorphism() = default;
    // Throws NotUnimodular / NotAUnit / RankMismatch.
    MonomialAutomorphism(IntMatrix E, std::vector<Coeff> scalars, Domain domain);

    static MonomialAutomorphism identity(std::size_t n, const Domain& domain);

    std::size_t rank() const noexcept { return matrix_.rows(); }
    const IntMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<Coeff>& scalars() const noexcept { return scalars_; }
    const Domain& domain() const noexcept { return domain_; }

    LaurentPoly image_of_variable(std::size_t i) const;

    friend bool operator==(const MonomialAutomorphism&, const MonomialAutomorphism&) = default;

private:
    IntMatrix matrix_;
    std::vector<Coeff> scalars_;
    Domain domain_;
};

MonomialAutomorphism phi(const IntMatrix& E, const Domain& domain = Domain::rationals());
MonomialAutomorphism psi(const std::vector<Coeff>& a, const Domain& domain = Domain::rationals());

// "alpha, then beta": apply(compose(a, b), p) == apply(b, apply(a, p)), and
// the matrix of the composite is E_alpha * E_beta.
MonomialAutomorphism compose(const MonomialAutomorphism& alpha, const MonomialAutomorphism& beta);
MonomialAutomorphism inverse(const MonomialAutomorphism& alpha);
LaurentPoly apply(const MonomialAutomorphism& alpha, const LaurentPoly& p);

}  // namespace laurent
