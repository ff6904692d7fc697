#include "laurent/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "laurent/error.hpp"

namespace laurent {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0))
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : r) entries_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const
{
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<IntVector> IntMatrix::row_list() const
{
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVector operator*(const IntVector& v, const IntMatrix& m)
{
    if (v.size() != m.rows()) throw std::invalid_argument("vector/matrix shape mismatch");
    IntVector r(m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

IntVector operator*(const IntMatrix& m, const IntVector& v)
{
    if (v.size() != m.cols()) throw std::invalid_argument("matrix/vector shape mismatch");
    IntVector r(m.rows(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

GcdResult ext_gcd(const Integer& a, const Integer& b)
{
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    if (old_r == 0) return {0, 0, 0};
    return {old_r, old_s, old_t};
}

namespace {

// Replaces rows (p, i) of both matrices by (s*p + t*i, -b*p + a*i); the
// 2x2 transform has determinant s*a + t*b = 1.
void bezout_rows(IntMatrix& H, IntMatrix& U, std::size_t p, std::size_t i, const Integer& s, const Integer& t,
                 const Integer& a, const Integer& b)
{
    auto combine = [&](IntMatrix& M) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            Integer x = M(p, j), y = M(i, j);
            M(p, j) = s * x + t * y;
            M(i, j) = a * y - b * x;
        }
    };
    combine(H);
    combine(U);
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& M)
{
    IntMatrix H = M;
    IntMatrix U = IntMatrix::identity(M.rows());
    std::size_t p = 0;
    for (std::size_t j = 0; j < H.cols() && p < H.rows(); ++j) {
        for (std::size_t i = p + 1; i < H.rows(); ++i) {
            if (H(i, j) == 0) continue;
            if (H(p, j) == 0) {
                H.swap_rows(p, i);
                U.swap_rows(p, i);
                continue;
            }
            auto [g, s, t] = ext_gcd(H(p, j), H(i, j));
            Integer a = H(p, j) / g;
            Integer b = H(i, j) / g;
            bezout_rows(H, U, p, i, s, t, a, b);
        }
        if (H(p, j) == 0) continue;
        if (H(p, j) < 0) {
            H.negate_row(p);
            U.negate_row(p);
        }
        for (std::size_t i = 0; i < p; ++i) {
            Integer q = floor_div(H(i, j), H(p, j));
            if (q != 0) {
                H.add_row_multiple(i, p, -q);
                U.add_row_multiple(i, p, -q);
            }
        }
        ++p;
    }
    return {std::move(H), std::move(U)};
}

SmithResult smith_normal_form(const IntMatrix& M)
{
    IntMatrix S = M;
    IntMatrix U = IntMatrix::identity(M.rows());
    IntMatrix V = IntMatrix::identity(M.cols());
    const std::size_t diag = std::min(S.rows(), S.cols());

    for (std::size_t t = 0; t < diag; ++t) {
        for (;;) {
            // smallest nonzero |entry| in the trailing block
            bool found = false;
            std::size_t pi = t, pj = t;
            Integer best;
            for (std::size_t i = t; i < S.rows(); ++i)
                for (std::size_t j = t; j < S.cols(); ++j) {
                    if (S(i, j) == 0) continue;
                    Integer a = abs_value(S(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) return {std::move(S), std::move(U), std::move(V)};

            S.swap_rows(t, pi);
            U.swap_rows(t, pi);
            S.swap_cols(t, pj);
            V.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < S.rows(); ++i) {
                if (S(i, t) == 0) continue;
                Integer q = floor_div(S(i, t), S(t, t));
                S.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
                if (S(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < S.cols(); ++j) {
                if (S(t, j) == 0) continue;
                Integer q = floor_div(S(t, j), S(t, t));
                S.add_col_multiple(j, t, -q);
                V.add_col_multiple(j, t, -q);
                if (S(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility chain: fold an offending row into the pivot row
            bool divides = true;
            for (std::size_t i = t + 1; i < S.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < S.cols(); ++j)
                    if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
                        S.add_row_multiple(t, i, 1);
                        U.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (S(t, t) < 0) {
            S.negate_row(t);
            U.negate_row(t);
        }
    }
    return {std::move(S), std::move(U), std::move(V)};
}

Integer determinant(const IntMatrix& M)
{
    if (!M.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    // Fraction-free Bareiss elimination.
    IntMatrix A = M;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && A(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            A.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = A(i, j) * A(k, k) - A(i, k) * A(k, j);
                mpz_divexact(A(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& M)
{
    auto H = hermite_normal_form(M).H;
    std::size_t r = 0;
    while (r < H.rows() && !laurent::is_zero(H.row(r))) ++r;
    return r;
}

LatticeBasis::LatticeBasis(std::size_t ambient_rank) : basis_(0, ambient_rank) {}

LatticeBasis LatticeBasis::from_generators(const IntMatrix& generators)
{
    auto H = hermite_normal_form(generators).H;
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        IntVector r = H.row(i);
        if (laurent::is_zero(r)) break;
        rows.push_back(std::move(r));
    }
    LatticeBasis L;
    L.basis_ = IntMatrix::from_rows(rows, generators.cols());
    return L;
}

LatticeBasis LatticeBasis::from_generators(const std::vector<IntVector>& generators, std::size_t ambient_rank)
{
    return from_generators(IntMatrix::from_rows(generators, ambient_rank));
}

bool LatticeBasis::contains(const IntVector& v) const { return lattice_membership(v, *this).has_value(); }

LatticeBasis integer_kernel(const IntMatrix& M)
{
    // U * M^T = H; rows of U opposite zero rows of H span the kernel of M.
    auto [H, U] = hermite_normal_form(M.transpose());
    std::vector<IntVector> kernel;
    for (std::size_t i = 0; i < H.rows(); ++i)
        if (laurent::is_zero(H.row(i))) kernel.push_back(U.row(i));
    return LatticeBasis::from_generators(kernel, M.cols());
}

IntMatrix invert_unimodular(const IntMatrix& E)
{
    if (!E.is_square()) fail(ErrorKind::NotUnimodular, "matrix is not square");
    auto [H, U] = hermite_normal_form(E);
    if (H != IntMatrix::identity(E.rows()))
        fail(ErrorKind::NotUnimodular, "determinant is " + determinant(E).get_str() + ", not +-1");
    return U;
}

LatticeBasis saturate(const LatticeBasis& L)
{
    if (L.empty()) return L;
    LatticeBasis orthogonal = integer_kernel(L.basis());
    return integer_kernel(orthogonal.basis());
}

LatticeBasis intersect(const LatticeBasis& a, const LatticeBasis& b)
{
    if (a.ambient_rank() != b.ambient_rank()) fail(ErrorKind::RankMismatch, "lattices in different ambient ranks");
    const std::size_t n = a.ambient_rank();
    if (a.empty() || b.empty()) return LatticeBasis(n);
    // (x, y) with x*A = y*B
    std::vector<IntVector> stacked = a.basis().row_list();
    for (const auto& r : b.basis().row_list()) stacked.push_back(-r);
    LatticeBasis relations = integer_kernel(IntMatrix::from_rows(stacked, n).transpose());
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < relations.rank(); ++i) {
        IntVector coeffs = relations.vector(i);
        coeffs.resize(a.rank());
        gens.push_back(coeffs * a.basis());
    }
    return LatticeBasis::from_generators(gens, n);
}

std::optional<IntVector> lattice_membership(const IntVector& v, const IntMatrix& generators)
{
    if (v.size() != generators.cols()) fail(ErrorKind::RankMismatch, "vector length differs from lattice ambient rank");
    auto [H, U] = hermite_normal_form(generators);
    IntVector residual = v;
    IntVector y(H.rows(), Integer(0));
    std::size_t col = 0;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        while (col < H.cols() && H(i, col) == 0) ++col;
        if (col == H.cols()) break;
        if (!mpz_divisible_p(residual[col].get_mpz_t(), H(i, col).get_mpz_t())) return std::nullopt;
        y[i] = residual[col] / H(i, col);
        for (std::size_t j = col; j < H.cols(); ++j) residual[j] -= y[i] * H(i, j);
    }
    if (!laurent::is_zero(residual)) return std::nullopt;
    return y * U;
}

std::optional<IntVector> lattice_membership(const IntVector& v, const LatticeBasis& L)
{
    return lattice_membership(v, L.basis());
}

}  // namespace laurent
