#include "laurent/integer.hpp"

#include <stdexcept>

namespace laurent {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const IntVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

unsigned long to_ulong_checked(const Integer& a)
{
    if (a < 0 || !a.fits_ulong_p()) throw std::overflow_error("exponent out of machine range: " + a.get_str());
    return a.get_ui();
}

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

IntVector unit_vector(std::size_t n, std::size_t i)
{
    IntVector v(n, Integer(0));
    v.at(i) = 1;
    return v;
}

bool is_zero(const IntVector& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IntVector operator+(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVector operator-(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVector operator-(const IntVector& a)
{
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IntVector operator*(const Integer& k, const IntVector& a)
{
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

Integer dot(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace laurent
