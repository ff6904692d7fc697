#pragma once

// Hand-rolled random generators for property tests. Deterministic per seed.

#include <cstdint>
#include <random>
#include <vector>

#include "laurent/automorphism.hpp"
#include "laurent/domain.hpp"
#include "laurent/lattice.hpp"
#include "laurent/poly.hpp"

namespace gen {

using laurent::Coeff;
using laurent::Domain;
using laurent::Integer;
using laurent::IntMatrix;
using laurent::IntVector;
using laurent::LaurentPoly;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
    long nonzero(long lo, long hi)
    {
        for (;;)
            if (long v = uniform(lo, hi); v != 0) return v;
    }
    bool coin() { return uniform(0, 1) == 1; }
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline IntVector vec(Rng& r, std::size_t n, long lo, long hi)
{
    IntVector v(n);
    for (auto& x : v) x = r.uniform(lo, hi);
    return v;
}

inline IntMatrix matrix(Rng& r, std::size_t rows, std::size_t cols, long lo, long hi)
{
    IntMatrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = r.uniform(lo, hi);
    return M;
}

inline Coeff rational(Rng& r, long bound = 9)
{
    Coeff q(Integer(r.nonzero(-bound, bound)), Integer(r.uniform(1, 4)));
    q.canonicalize();
    return q;
}

// A nonzero unit of the domain.
inline Coeff unit_scalar(Rng& r, const Domain& d)
{
    if (d.kind() == laurent::DomainKind::Integers) return r.coin() ? Coeff(1) : Coeff(-1);
    if (d.kind() == laurent::DomainKind::PrimeField) return d.from_integer(r.uniform(1, d.modulus().get_si() - 1));
    return rational(r, 7);
}

// Nonzero polynomial with the requested number of distinct terms.
inline LaurentPoly poly(Rng& r, std::size_t rank, std::size_t terms, long expo, const Domain& d = Domain::rationals())
{
    for (;;) {
        LaurentPoly p(d, rank);
        for (std::size_t t = 0; t < terms * 4 && p.term_count() < terms; ++t) {
            IntVector e = vec(r, rank, -expo, expo);
            if (p.coefficient(e) != 0) continue;
            p.add_term(e, d.kind() == laurent::DomainKind::Integers ? Coeff(r.nonzero(-9, 9)) : rational(r));
        }
        if (p.term_count() == terms) return p;
    }
}

inline LaurentPoly unit_monomial(Rng& r, std::size_t rank, long expo, const Domain& d = Domain::rationals())
{
    return LaurentPoly::monomial(d, unit_scalar(r, d), vec(r, rank, -expo, expo));
}

// Product of at most `factors` elementary matrices (transvections, swaps, sign flips).
inline IntMatrix unimodular(Rng& r, std::size_t n, std::size_t factors, long k = 2)
{
    IntMatrix E = IntMatrix::identity(n);
    if (n == 0) return E;
    const std::size_t count = static_cast<std::size_t>(r.uniform(0, static_cast<long>(factors)));
    for (std::size_t f = 0; f < count; ++f) {
        IntMatrix step = IntMatrix::identity(n);
        const long kind = n > 1 ? r.uniform(0, 5) : 5;
        if (kind <= 3) {
            std::size_t i = static_cast<std::size_t>(r.uniform(0, static_cast<long>(n) - 1));
            std::size_t j = static_cast<std::size_t>(r.uniform(0, static_cast<long>(n) - 2));
            if (j >= i) ++j;
            step(i, j) = r.nonzero(-k, k);
        } else if (kind == 4) {
            std::size_t i = static_cast<std::size_t>(r.uniform(0, static_cast<long>(n) - 1));
            std::size_t j = static_cast<std::size_t>(r.uniform(0, static_cast<long>(n) - 2));
            if (j >= i) ++j;
            step.swap_rows(i, j);
        } else {
            step.negate_row(static_cast<std::size_t>(r.uniform(0, static_cast<long>(n) - 1)));
        }
        E = E * step;
    }
    return E;
}

inline laurent::MonomialAutomorphism automorphism(Rng& r, std::size_t n, std::size_t factors,
                                                  const Domain& d = Domain::rationals())
{
    std::vector<Coeff> a(n);
    for (auto& x : a) x = unit_scalar(r, d);
    return laurent::MonomialAutomorphism(unimodular(r, n, factors), a, d);
}

}  // namespace gen
