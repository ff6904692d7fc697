#include "laurent/automorphism.hpp"

#include "laurent/error.hpp"

namespace laurent {

MonomialAutomorphism::MonomialAutomorphism(IntMatrix E, std::vector<Coeff> scalars, Domain domain)
    : matrix_(std::move(E)), scalars_(std::move(scalars)), domain_(std::move(domain))
{
    if (!matrix_.is_square()) fail(ErrorKind::NotUnimodular, "exponent matrix is not square");
    if (scalars_.size() != matrix_.rows()) fail(ErrorKind::RankMismatch, "scalar count differs from matrix size");
    Integer det = determinant(matrix_);
    if (det != 1 && det != -1) fail(ErrorKind::NotUnimodular, "determinant " + det.get_str());
    for (auto& a : scalars_) {
        a = domain_.from_rational(a);
        if (!domain_.is_unit(a)) fail(ErrorKind::NotAUnit, "scaling factor " + to_string(a) + " is not a unit");
    }
}

MonomialAutomorphism MonomialAutomorphism::identity(std::size_t n, const Domain& domain)
{
    return MonomialAutomorphism(IntMatrix::identity(n), std::vector<Coeff>(n, Coeff(1)), domain);
}

LaurentPoly MonomialAutomorphism::image_of_variable(std::size_t i) const
{
    return LaurentPoly::monomial(domain_, scalars_.at(i), matrix_.row(i));
}

MonomialAutomorphism phi(const IntMatrix& E, const Domain& domain)
{
    return MonomialAutomorphism(E, std::vector<Coeff>(E.rows(), Coeff(1)), domain);
}

MonomialAutomorphism psi(const std::vector<Coeff>& a, const Domain& domain)
{
    return MonomialAutomorphism(IntMatrix::identity(a.size()), a, domain);
}

namespace {

// prod_i a_i^{e_i}
Coeff scalar_power(const Domain& domain, const std::vector<Coeff>& a, const IntVector& e)
{
    Coeff out = domain.one();
    for (std::size_t i = 0; i < e.size(); ++i) out = domain.multiply(out, domain.power(a[i], e[i]));
    return out;
}

}  // namespace

MonomialAutomorphism compose(const MonomialAutomorphism& alpha, const MonomialAutomorphism& beta)
{
    if (alpha.rank() != beta.rank()) fail(ErrorKind::RankMismatch, "automorphisms of different ranks");
    if (!(alpha.domain() == beta.domain())) fail(ErrorKind::DomainMismatch, "automorphisms over different domains");
    const Domain& R = alpha.domain();
    std::vector<Coeff> scalars(alpha.rank());
    for (std::size_t i = 0; i < alpha.rank(); ++i)
        scalars[i] = R.multiply(alpha.scalars()[i], scalar_power(R, beta.scalars(), alpha.matrix().row(i)));
    return MonomialAutomorphism(alpha.matrix() * beta.matrix(), std::move(scalars), R);
}

MonomialAutomorphism inverse(const MonomialAutomorphism& alpha)
{
    const Domain& R = alpha.domain();
    IntMatrix D = invert_unimodular(alpha.matrix());
    std::vector<Coeff> scalars(alpha.rank());
    for (std::size_t j = 0; j < alpha.rank(); ++j)
        scalars[j] = R.invert_unit(scalar_power(R, alpha.scalars(), D.row(j)));
    return MonomialAutomorphism(std::move(D), std::move(scalars), R);
}

LaurentPoly apply(const MonomialAutomorphism& alpha, const LaurentPoly& p)
{
    if (p.rank() != alpha.rank())
        fail(ErrorKind::RankMismatch, "automorphism of rank " + std::to_string(alpha.rank()) +
                                          " applied to polynomial of rank " + std::to_string(p.rank()));
    const Domain& R = alpha.domain();
    LaurentPoly out(R, p.rank());
    for (const auto& [e, c] : p.terms())
        out.add_term(e * alpha.matrix(), R.multiply(R.from_rational(c), scalar_power(R, alpha.scalars(), e)));
    return out;
}

}  // namespace laurent
