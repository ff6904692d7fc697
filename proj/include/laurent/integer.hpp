#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace laurent {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const Rational& q);
std::string to_string(const IntVector& v);

// Converts to a machine exponent; throws std::overflow_error when the value
// does not fit.
unsigned long to_ulong_checked(const Integer& a);

IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const IntVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& k, const IntVector& a);
Integer dot(const IntVector& a, const IntVector& b);

}  // namespace laurent
