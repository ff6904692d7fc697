#pragma once

// Exact integer linear algebra: extended gcd, Hermite and Smith normal forms,
// integer kernels, saturation and unimodular inversion. All matrices are
// dense, row-major and arbitrary precision.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "laurent/integer.hpp"

namespace laurent {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    // `cols` is needed when `rows` is empty.
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    std::vector<IntVector> row_list() const;
    IntMatrix transpose() const;
    bool is_zero() const;
    bool is_square() const noexcept { return rows_ == cols_; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntVector& v, const IntMatrix& m);  // row vector times matrix
IntVector operator*(const IntMatrix& m, const IntVector& v);  // matrix times column vector

struct GcdResult {
    Integer g;
    Integer m;
    Integer n;
};

// g = gcd(a, b) >= 0 and a*m + b*n = g; (0,0,0) iff a = b = 0.
GcdResult ext_gcd(const Integer& a, const Integer& b);

struct HermiteResult {
    IntMatrix H;
    IntMatrix U;
};

// Row-style Hermite normal form: U unimodular, U*M = H, nonzero rows first,
// positive pivots strictly increasing in column, entries above a pivot
// reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& M);

struct SmithResult {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;
};

// U*M*V = S diagonal, nonnegative, each diagonal entry dividing the next.
// Pivots are always taken at the smallest nonzero |entry|.
SmithResult smith_normal_form(const IntMatrix& M);

Integer determinant(const IntMatrix& M);
std::size_t rank(const IntMatrix& M);

// A subgroup of Z^n, stored by its Hermite basis (canonical per lattice).
class LatticeBasis {
public:
    LatticeBasis() = default;
    explicit LatticeBasis(std::size_t ambient_rank);

    static LatticeBasis from_generators(const IntMatrix& generators);
    static LatticeBasis from_generators(const std::vector<IntVector>& generators, std::size_t ambient_rank);

    std::size_t ambient_rank() const noexcept { return basis_.cols(); }
    std::size_t rank() const noexcept { return basis_.rows(); }
    bool empty() const noexcept { return basis_.rows() == 0; }
    const IntMatrix& basis() const noexcept { return basis_; }
    IntVector vector(std::size_t i) const { return basis_.row(i); }
    bool contains(const IntVector& v) const;

    friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) = default;

private:
    IntMatrix basis_;
};

// Saturated basis of { v : M v = 0 }.
LatticeBasis integer_kernel(const IntMatrix& M);

// D with D*E = E*D = I; throws NotUnimodular when det(E) is not +-1.
IntMatrix invert_unimodular(const IntMatrix& E);

// { v : k v in L for some k >= 1 }.
LatticeBasis saturate(const LatticeBasis& L);

LatticeBasis intersect(const LatticeBasis& a, const LatticeBasis& b);

// Coordinates of v over the rows of `generators`, when v lies in their
// integer span. For independent rows the coordinates are unique.
std::optional<IntVector> lattice_membership(const IntVector& v, const IntMatrix& generators);
std::optional<IntVector> lattice_membership(const IntVector& v, const LatticeBasis& L);

}  // namespace laurent
