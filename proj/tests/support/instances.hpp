#pragma once

// Random instances with a known answer.

#include <string>
#include <vector>

#include "laurent/automorphism.hpp"
#include "laurent/cancellation.hpp"
#include "support/generators.hpp"

namespace gen {

using laurent::LaurentHom;
using laurent::MonomialAutomorphism;
using laurent::MonomialGenerator;
using laurent::MonomialSubalgebra;

inline std::vector<std::string> names(const std::string& stem, std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
    return out;
}

inline LaurentPoly monomial_in(const Domain& d, std::size_t rank, std::size_t offset, const IntVector& e)
{
    IntVector full(rank, Integer(0));
    for (std::size_t i = 0; i < e.size(); ++i) full[offset + i] = e[i];
    return LaurentPoly::monomial(d, Coeff(1), full);
}

struct Disguise {
    LaurentHom F;
    std::vector<LaurentPoly> expected_forward;  // sigma on A's generators
    IntMatrix E;
};

// A = monomial subalgebra of a rank-p torus, B = sigma(A) for a random
// monomial isomorphism sigma of tori, and F = (sigma extended) followed by
// y_i -> b_i z^{E_i} with b_i a unit of B.
inline Disguise disguise(Rng& r, std::size_t n)
{
    const Domain Q = Domain::rationals();
    const auto p = static_cast<std::size_t>(r.uniform(1, 2));
    const std::size_t k = static_cast<std::size_t>(r.uniform(1, 3));

    std::vector<MonomialGenerator> agens;
    for (std::size_t i = 0; i < k; ++i) {
        IntVector e;
        do e = vec(r, p, -2, 2);
        while (laurent::is_zero(e));
        const bool unit = r.coin();
        agens.push_back({"g" + std::to_string(i + 1), unit ? unit_scalar(r, Q) : rational(r), e, unit});
    }
    MonomialSubalgebra A(Q, names("t", p), agens);

    MonomialAutomorphism sigma = automorphism(r, p, 4);
    MonomialAutomorphism sigma_inv = laurent::inverse(sigma);
    std::vector<MonomialGenerator> bgens;
    std::vector<LaurentPoly> expected;
    for (const auto& g : agens) {
        LaurentPoly img = laurent::apply(sigma, A.element(g));
        auto dec = laurent::is_unit_poly(img);
        bgens.push_back({g.name, dec->coefficient, dec->exponent, g.unit});
        expected.push_back(img);
    }
    MonomialSubalgebra B(Q, names("s", p), bgens);

    IntMatrix E = unimodular(r, n, 8);
    IntMatrix D = laurent::invert_unimodular(E);

    // b_i: a scalar unit times a power of some unit generator of B.
    std::vector<LaurentPoly> b;
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPoly bi = LaurentPoly::constant(Q, p, unit_scalar(r, Q));
        for (const auto& g : B.unit_generators()) bi = bi * laurent::pow(B.element(g), r.uniform(-2, 2));
        b.push_back(bi);
    }

    std::vector<LaurentPoly> images;
    for (std::size_t j = 0; j < p; ++j) images.push_back(sigma.image_of_variable(j).padded(p + n));
    for (std::size_t i = 0; i < n; ++i) images.push_back(b[i].padded(p + n) * monomial_in(Q, p + n, p, E.row(i)));

    // F^{-1}(z_j) = prod_i (y_i / sigma^{-1}(b_i))^{D[j][i]}.
    std::vector<LaurentPoly> inverse;
    for (std::size_t j = 0; j < p; ++j) inverse.push_back(sigma_inv.image_of_variable(j).padded(p + n));
    for (std::size_t j = 0; j < n; ++j) {
        LaurentPoly zj = monomial_in(Q, p + n, p, D.row(j));
        for (std::size_t i = 0; i < n; ++i)
            zj = zj * laurent::pow(laurent::apply(sigma_inv, b[i]).padded(p + n), -D(j, i));
        inverse.push_back(zj);
    }

    LaurentHom F(A, B, names("y", n), names("z", n), images, inverse);
    return {std::move(F), std::move(expected), std::move(E)};
}

// alpha = psi_c o phi_E on R^{[+-(m+1)]}, read as a hom from A[y] with A the
// rank-m torus presented by a random unimodular set of unit generators.
inline LaurentHom bg_twist(Rng& r, std::size_t m)
{
    const Domain Q = Domain::rationals();
    IntMatrix W = unimodular(r, m, 6);
    std::vector<MonomialGenerator> gens;
    for (std::size_t i = 0; i < m; ++i) gens.push_back({"w" + std::to_string(i + 1), unit_scalar(r, Q), W.row(i), true});
    if (m > 0 && r.coin()) {
        // A redundant unit generator.
        IntVector e = laurent::operator+(W.row(0), W.row(m - 1));
        if (!laurent::is_zero(e)) gens.push_back({"extra", Coeff(1), e, true});
    }
    MonomialSubalgebra A(Q, names("t", m), gens);
    MonomialSubalgebra B = MonomialSubalgebra::torus(Q, names("z", m));

    MonomialAutomorphism alpha = automorphism(r, m + 1, 8);
    MonomialAutomorphism back = laurent::inverse(alpha);
    std::vector<LaurentPoly> images, inverse;
    for (std::size_t i = 0; i <= m; ++i) {
        images.push_back(alpha.image_of_variable(i));
        inverse.push_back(back.image_of_variable(i));
    }
    return LaurentHom(A, B, {"y"}, {"z" + std::to_string(m + 1)}, images, inverse);
}

}  // namespace gen
