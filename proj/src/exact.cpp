#include "polytuple/exact.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "polytuple/errors.hpp"

namespace polytuple {

int sign_of(const BigInt& v) { return v.sign(); }
int sign_of(const BigRat& v) { return v.sign(); }

namespace {

BigInt bigint_from_decimal(const std::string& s) {
    if (s.empty()) throw input_error("empty integer literal");
    bool negative = s[0] == '-';
    size_t at = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    std::string digits = s.substr(at);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw input_error("malformed integer literal '" + s + "'");
    }
    // Strip leading zeros; cpp_int would read them as an octal prefix.
    size_t first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    BigInt v(digits);
    return negative ? -v : v;
}

}  // namespace

BigRat parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw input_error("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            BigInt num = bigint_from_decimal(s.substr(0, slash));
            BigInt den = bigint_from_decimal(s.substr(slash + 1));
            if (den == 0) throw input_error("zero denominator in '" + text + "'");
            return BigRat(num, den);
        }
        bool negative = false;
        size_t at = 0;
        if (s[at] == '+' || s[at] == '-') {
            negative = s[at] == '-';
            ++at;
        }
        std::string digits;
        int64_t exp10 = 0;
        bool seen_dot = false;
        for (; at < s.size(); ++at) {
            char ch = s[at];
            if (ch == '.') {
                if (seen_dot) throw input_error("malformed rational '" + text + "'");
                seen_dot = true;
            } else if (ch == 'e' || ch == 'E') {
                exp10 += std::strtoll(s.c_str() + at + 1, nullptr, 10);
                break;
            } else if (ch >= '0' && ch <= '9') {
                digits.push_back(ch);
                if (seen_dot) exp10 -= 1;
            } else {
                throw input_error("malformed rational '" + text + "'");
            }
        }
        if (digits.empty()) throw input_error("malformed rational '" + text + "'");
        // Strip leading zeros; cpp_int would read them as an octal prefix.
        size_t first = digits.find_first_not_of('0');
        digits = first == std::string::npos ? "0" : digits.substr(first);
        BigInt mantissa(digits);
        if (negative) mantissa = -mantissa;
        BigRat value(mantissa);
        if (exp10 > 0) {
            value *= BigRat(pow(BigInt(10), static_cast<unsigned>(exp10)));
        } else if (exp10 < 0) {
            value /= BigRat(pow(BigInt(10), static_cast<unsigned>(-exp10)));
        }
        return value;
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("malformed rational '" + text + "'");
    }
}

std::string rational_to_string(const BigRat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

BigRat rational_from_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return parse_rational(std::string(buf, res.ptr));
}

double rational_to_double(const BigRat& value) { return value.convert_to<double>(); }

BigInt floor_rat(const BigRat& value) {
    BigInt num = numerator(value);
    BigInt den = denominator(value);  // always positive
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

BigInt ceil_rat(const BigRat& value) { return -floor_rat(-value); }

BigRat pow_rat(const BigRat& base, uint32_t exponent) {
    return BigRat(pow(numerator(base), exponent), pow(denominator(base), exponent));
}

int64_t ceil_pow_clamped(const BigRat& base, uint32_t k) {
    const BigInt clamp = BigInt(std::numeric_limits<int64_t>::max() / 4);
    BigInt value = ceil_rat(pow_rat(base, k));
    if (value > clamp) value = clamp;
    if (value < 0) value = 0;
    return value.convert_to<int64_t>();
}

BigInt ceil_root_big(const BigInt& value, uint32_t t) {
    assert(t >= 1);
    if (value <= 0) return 0;
    BigInt lo = 0;
    BigInt hi = 1;
    while (pow(hi, t) < value) hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (pow(mid, t) >= value) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

BigInt floor_root_big(const BigInt& value, uint32_t t) {
    assert(t >= 1);
    if (value <= 0) return 0;
    const BigInt up = ceil_root_big(value, t);
    return pow(up, t) == value ? up : up - 1;
}

namespace {

int64_t to_int64_checked(const BigInt& value, const char* what) {
    if (value > BigInt(std::numeric_limits<int64_t>::max())) throw resource_error(what);
    return value.convert_to<int64_t>();
}

}  // namespace

int64_t ceil_root(const BigInt& value, uint32_t t) {
    return to_int64_checked(ceil_root_big(value, t), "integer root exceeds 64-bit range");
}

int64_t floor_root(const BigInt& value, uint32_t t) {
    return to_int64_checked(floor_root_big(value, t), "integer root exceeds 64-bit range");
}

namespace {

// atanh(z) = sum z^(2j+1)/(2j+1) for 0 <= z < 1; the tail after `terms`
// summands is at most z^(2*terms+1) / ((2*terms+1)(1-z^2)).
std::pair<BigRat, BigRat> atanh_bounds(const BigRat& z, uint32_t terms) {
    BigRat sum = 0;
    BigRat power = z;
    const BigRat z2 = z * z;
    for (uint32_t j = 0; j < terms; ++j) {
        sum += power / BigRat(2 * j + 1);
        power *= z2;
    }
    const BigRat tail = power / (BigRat(2 * terms + 1) * (BigRat(1) - z2));
    return {sum, sum + tail};
}

}  // namespace

std::pair<BigRat, BigRat> ln_bounds(uint64_t k, uint32_t terms) {
    if (k == 0) throw input_error("ln of zero");
    if (k == 1) return {BigRat(0), BigRat(0)};
    // ln k = s*ln 2 + ln q with q = k / 2^s in [1, 2); both pieces use the
    // identity ln y = 2*atanh((y-1)/(y+1)) with z <= 1/3.
    uint32_t s = 0;
    while ((uint64_t{1} << (s + 1)) <= k) ++s;
    const BigRat q(BigInt(k), BigInt(1) << s);
    const auto [q_lo, q_hi] = atanh_bounds((q - 1) / (q + 1), terms);
    const auto [two_lo, two_hi] = atanh_bounds(BigRat(1, 3), terms);
    return {2 * (q_lo + s * two_lo), 2 * (q_hi + s * two_hi)};
}

const BigRat& euler_lo() {
    static const BigRat v(BigInt("2718281828459045"), BigInt("1000000000000000"));
    return v;
}

const BigRat& euler_hi() {
    static const BigRat v(BigInt("2718281828459046"), BigInt("1000000000000000"));
    return v;
}

int orient2d(const Coord* a, const Coord* b, const Coord* c) {
    Int128 det = static_cast<Int128>(b[0] - a[0]) * (c[1] - a[1]) -
                 static_cast<Int128>(b[1] - a[1]) * (c[0] - a[0]);
    return sign_of(det);
}

int incircle2d(const Coord* a, const Coord* b, const Coord* c, const Coord* p) {
    const Coord adx = a[0] - p[0], ady = a[1] - p[1];
    const Coord bdx = b[0] - p[0], bdy = b[1] - p[1];
    const Coord cdx = c[0] - p[0], cdy = c[1] - p[1];
    const Int128 alift = static_cast<Int128>(adx) * adx + static_cast<Int128>(ady) * ady;
    const Int128 blift = static_cast<Int128>(bdx) * bdx + static_cast<Int128>(bdy) * bdy;
    const Int128 clift = static_cast<Int128>(cdx) * cdx + static_cast<Int128>(cdy) * cdy;
    const Int128 ab = static_cast<Int128>(adx) * bdy - static_cast<Int128>(ady) * bdx;
    const Int128 ac = static_cast<Int128>(adx) * cdy - static_cast<Int128>(ady) * cdx;
    const Int128 bc = static_cast<Int128>(bdx) * cdy - static_cast<Int128>(bdy) * cdx;
    // |adx ady alift; bdx bdy blift; cdx cdy clift| expanded along the lift column.
    const Int128 det = alift * bc - blift * ac + clift * ab;
    return sign_of(det);
}

int side_of_circumcircle(const Coord* a, const Coord* b, const Coord* c, const Coord* p) {
    int o = orient2d(a, b, c);
    assert(o != 0);
    int s = incircle2d(a, b, c, p);
    return -(s * o);
}

int side_of_diametral(const Coord* a, const Coord* b, const Coord* p, uint32_t dim) {
    Int128 dot = 0;
    for (uint32_t i = 0; i < dim; ++i) {
        dot += static_cast<Int128>(p[i] - a[i]) * (p[i] - b[i]);
    }
    return sign_of(dot);
}

int ExactSphere::side_of(const Coord* q) const {
    BigInt lhs = 0;
    for (uint32_t i = 0; i < dim; ++i) {
        BigInt diff = BigInt(q[i]) * den - center_num[i];
        lhs += diff * diff;
    }
    if (lhs < radius2_scaled) return -1;
    if (lhs == radius2_scaled) return 0;
    return 1;
}

std::optional<ExactSphere> sphere_through(const std::vector<const Coord*>& subset,
                                          uint32_t dim) {
    const size_t j = subset.size();
    assert(j >= 1);
    const Coord* p0 = subset[0];
    if (j == 1) {
        ExactSphere s;
        s.dim = dim;
        s.den = 1;
        s.center_num.assign(p0, p0 + dim);
        s.radius2_scaled = 0;
        return s;
    }

    // Constraints u_i . y = |u_i|^2 / 2 where u_i = p_i - p0 and y = center - p0.
    std::vector<std::vector<BigRat>> rows;      // reduced copies, for rank/consistency
    std::vector<std::vector<int64_t>> u_rows;   // original difference vectors (pivot rows)
    std::vector<BigRat> rhs_rows;               // original right-hand sides (pivot rows)
    std::vector<size_t> pivot_cols;
    for (size_t i = 1; i < j; ++i) {
        std::vector<BigRat> row(dim + 1);
        std::vector<int64_t> u(dim);
        BigInt norm2 = 0;
        for (uint32_t c = 0; c < dim; ++c) {
            int64_t diff = subset[i][c] - p0[c];
            u[c] = diff;
            row[c] = BigRat(diff);
            norm2 += BigInt(diff) * diff;
        }
        BigRat rhs = BigRat(norm2, 2);
        row[dim] = rhs;
        // Eliminate against existing pivots.
        for (size_t pr = 0; pr < rows.size(); ++pr) {
            size_t col = pivot_cols[pr];
            if (row[col] == 0) continue;
            BigRat factor = row[col] / rows[pr][col];
            for (size_t c = 0; c <= dim; ++c) row[c] -= factor * rows[pr][c];
        }
        size_t col = dim;
        for (size_t c = 0; c < dim; ++c) {
            if (row[c] != 0) {
                col = c;
                break;
            }
        }
        if (col == dim) {
            if (row[dim] != 0) return std::nullopt;  // inconsistent: no common sphere
            continue;                                // dependent but consistent
        }
        rows.push_back(std::move(row));
        pivot_cols.push_back(col);
        u_rows.push_back(std::move(u));
        rhs_rows.push_back(rhs);
    }

    // Minimum-norm solution y = U^T lambda with (U U^T) lambda = rhs.
    const size_t r = u_rows.size();
    std::vector<std::vector<BigRat>> gram(r, std::vector<BigRat>(r + 1));
    for (size_t a = 0; a < r; ++a) {
        for (size_t b = 0; b < r; ++b) {
            BigInt dot = 0;
            for (uint32_t c = 0; c < dim; ++c) {
                dot += BigInt(u_rows[a][c]) * u_rows[b][c];
            }
            gram[a][b] = BigRat(dot);
        }
        gram[a][r] = rhs_rows[a];
    }
    for (size_t k = 0; k < r; ++k) {
        size_t pivot = k;
        while (pivot < r && gram[pivot][k] == 0) ++pivot;
        assert(pivot < r);  // Gram matrix of independent rows is positive definite
        if (pivot != k) std::swap(gram[pivot], gram[k]);
        for (size_t i = 0; i < r; ++i) {
            if (i == k || gram[i][k] == 0) continue;
            BigRat factor = gram[i][k] / gram[k][k];
            for (size_t c = k; c <= r; ++c) gram[i][c] -= factor * gram[k][c];
        }
    }
    std::vector<BigRat> lambda(r);
    for (size_t k = 0; k < r; ++k) lambda[k] = gram[k][r] / gram[k][k];

    std::vector<BigRat> center(dim);
    for (uint32_t c = 0; c < dim; ++c) {
        BigRat y = 0;
        for (size_t a = 0; a < r; ++a) y += lambda[a] * u_rows[a][c];
        center[c] = y + p0[c];
    }
    BigInt den = 1;
    for (uint32_t c = 0; c < dim; ++c) den = lcm(den, denominator(center[c]));
    ExactSphere s;
    s.dim = dim;
    s.den = den;
    s.center_num.resize(dim);
    for (uint32_t c = 0; c < dim; ++c) {
        s.center_num[c] = numerator(center[c]) * (den / denominator(center[c]));
    }
    BigInt rr = 0;
    for (uint32_t c = 0; c < dim; ++c) {
        BigInt diff = BigInt(p0[c]) * den - s.center_num[c];
        rr += diff * diff;
    }
    s.radius2_scaled = rr;
    return s;
}

bool affinely_dependent(const std::vector<const Coord*>& pts, uint32_t dim) {
    assert(pts.size() == dim + 1);
    std::vector<std::vector<BigInt>> m(dim, std::vector<BigInt>(dim));
    for (uint32_t i = 0; i < dim; ++i) {
        for (uint32_t c = 0; c < dim; ++c) {
            m[i][c] = BigInt(pts[i + 1][c]) - pts[0][c];
        }
    }
    return determinant(std::move(m)) == 0;
}

bool cospherical_or_flat(const std::vector<const Coord*>& pts, uint32_t dim) {
    assert(pts.size() == dim + 2);
    const size_t k = dim + 2;
    std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
    for (size_t i = 0; i < k; ++i) {
        BigInt lift = 0;
        for (uint32_t c = 0; c < dim; ++c) {
            m[i][c] = pts[i][c];
            lift += BigInt(pts[i][c]) * pts[i][c];
        }
        m[i][dim] = lift;
        m[i][dim + 1] = 1;
    }
    return determinant(std::move(m)) == 0;
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t c = k + 1; c < n; ++c) {
                m[i][c] = (m[i][c] * m[k][k] - m[i][k] * m[k][c]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace polytuple
