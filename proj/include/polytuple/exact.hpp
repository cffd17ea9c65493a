#ifndef POLYTUPLE_EXACT_HPP
#define POLYTUPLE_EXACT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polytuple {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Int128 = __int128;

using Coord = int64_t;
// Coordinates are capped so that every 2-D circle determinant fits in Int128.
inline constexpr Coord coord_limit = 2'097'152;

inline int sign_of(Int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sign_of(const BigInt& v);
int sign_of(const BigRat& v);

// Parses "37/10", "3.7", "-0.25", "126" into an exact rational.
BigRat parse_rational(const std::string& text);
std::string rational_to_string(const BigRat& value);

// Exact rational equal to the shortest decimal that round-trips to `value`;
// recovers the intended decimal of JSON numbers such as 0.3.
BigRat rational_from_double(double value);
double rational_to_double(const BigRat& value);

BigInt floor_rat(const BigRat& value);
BigInt ceil_rat(const BigRat& value);
BigRat pow_rat(const BigRat& base, uint32_t exponent);

// ceil(base^k) clamped into int64; thresholds beyond the clamp exceed any
// representable edge size, so comparisons against |e| stay correct.
int64_t ceil_pow_clamped(const BigRat& base, uint32_t k);

// Smallest nonnegative x with x^t >= value, i.e. ceil(value^(1/t)) for integers.
BigInt ceil_root_big(const BigInt& value, uint32_t t);
// Largest nonnegative x with x^t <= value (value >= 0).
BigInt floor_root_big(const BigInt& value, uint32_t t);

// int64 conveniences; throw resource_error when the root exceeds the range.
int64_t ceil_root(const BigInt& value, uint32_t t);
int64_t floor_root(const BigInt& value, uint32_t t);

// Rational brackets of Euler's number, accurate to 1e-16.
const BigRat& euler_lo();
const BigRat& euler_hi();

// Rational brackets lo <= ln(k) <= hi from the atanh series, tighter with
// more terms. k >= 1.
std::pair<BigRat, BigRat> ln_bounds(uint64_t k, uint32_t terms);

// Sign of the cross product (b - a) x (c - a): +1 when c lies left of a->b.
int orient2d(const Coord* a, const Coord* b, const Coord* c);

// Sign of the lifted 3x3 determinant: +1 when p is strictly inside the circle
// through a, b, c taken counterclockwise, 0 when cocircular.
int incircle2d(const Coord* a, const Coord* b, const Coord* c, const Coord* p);

// -1 strictly inside, 0 on the circle, +1 strictly outside the circumcircle of
// the non-collinear triple {a, b, c}.
int side_of_circumcircle(const Coord* a, const Coord* b, const Coord* c, const Coord* p);

// -1/0/+1 against the diametral circle of {a, b}: sign of (p - a) . (p - b).
int side_of_diametral(const Coord* a, const Coord* b, const Coord* p, uint32_t dim);

// Sphere with rational center and squared radius, kept over a common
// denominator so point classification is integer-only.
struct ExactSphere {
    uint32_t dim = 0;
    std::vector<BigInt> center_num;  // center = center_num / den
    BigInt den = 1;
    BigInt radius2_scaled = 0;  // radius^2 * den^2

    // -1 strictly inside, 0 on the sphere, +1 strictly outside.
    int side_of(const Coord* q) const;
};

// Minimum-radius sphere passing through every point of `subset` (its center
// lies in the subset's affine hull). nullopt when no common sphere exists.
std::optional<ExactSphere> sphere_through(const std::vector<const Coord*>& subset,
                                          uint32_t dim);

// det == 0 iff the d+1 points lie on a common hyperplane (affinely dependent).
bool affinely_dependent(const std::vector<const Coord*>& pts, uint32_t dim);

// det == 0 iff the d+2 points lie on a common sphere or hyperplane.
bool cospherical_or_flat(const std::vector<const Coord*>& pts, uint32_t dim);

// Exact determinant of a small integer matrix (Bareiss elimination).
BigInt determinant(std::vector<std::vector<BigInt>> m);

}  // namespace polytuple

#endif
