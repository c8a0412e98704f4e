#include "aont/gf.hpp"

#include <algorithm>
#include <sstream>

namespace aont {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first, no
// trailing zeros (deg(0) == -1 by convention).
using Poly = std::vector<std::uint32_t>;

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Remainder of a mod m, m monic.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const int dm = degree(m);
    while (degree(a) >= dm) {
        const std::uint32_t lead = a.back();
        const int shift = degree(a) - dm;
        for (int i = 0; i <= dm; ++i) {
            std::uint32_t sub = (lead * m[i]) % p;
            a[i + shift] = (a[i + shift] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

Poly code_to_poly(Fe code, std::uint32_t p) {
    Poly c;
    while (code) {
        c.push_back(code % p);
        code /= p;
    }
    return c;
}

Fe poly_to_code(const Poly& a, std::uint32_t p) {
    Fe code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
}

// Exhaustive divisor test; k is tiny so trying every monic divisor of degree
// 1..k/2 is cheap. Returns a factor when reducible.
std::optional<Poly> find_factor(const Poly& m, std::uint32_t p) {
    const int k = degree(m);
    for (int d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t lo = 0; lo < count; ++lo) {
            Poly div = code_to_poly(static_cast<Fe>(lo), p);
            div.resize(d + 1, 0);
            div[d] = 1; // monic
            if (poly_mod(m, div, p).empty()) return div;
        }
    }
    return std::nullopt;
}

std::string poly_str(const Poly& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? " " : "") << a[i];
    os << "]";
    return os.str();
}

Fe mul_raw(Fe a, Fe b, const FieldSpec& f) {
    if (f.k == 1) return static_cast<Fe>((static_cast<std::uint64_t>(a) * b) % f.p);
    Poly r = poly_mod(poly_mul(code_to_poly(a, f.p), code_to_poly(b, f.p), f.p), f.modulus, f.p);
    return poly_to_code(r, f.p);
}

Fe pow_raw(Fe a, std::uint64_t e, const FieldSpec& f) {
    Fe r = 1;
    while (e) {
        if (e & 1) r = mul_raw(r, a, f);
        a = mul_raw(a, a, f);
        e >>= 1;
    }
    return r;
}

} // namespace

Field build_field(std::uint32_t p, std::uint32_t k,
                  std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) raise(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (k < 1) raise(Errc::bad_params, "extension degree must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > (1u << 16)) raise(Errc::too_large, "field order exceeds 2^16");
    }

    auto f = std::make_shared<FieldSpec>();
    f->p = p;
    f->k = k;
    f->q = static_cast<std::uint32_t>(q);

    if (k == 1) {
        if (modulus && (modulus->size() != 2 || (*modulus)[1] != 1))
            raise(Errc::degree_mismatch, "modulus must be monic of degree 1 for a prime field");
        f->modulus = {0, 1};
    } else if (modulus) {
        Poly m = *modulus;
        if (m.size() != k + 1 || m.back() != 1)
            raise(Errc::degree_mismatch, "modulus must be monic of degree k");
        for (auto c : m)
            if (c >= p) raise(Errc::bad_params, "modulus coefficient out of range");
        if (auto factor = find_factor(m, p))
            raise(Errc::not_irreducible, "modulus " + poly_str(m) + " has factor " + poly_str(*factor));
        f->modulus = std::move(m);
    } else {
        // Lexicographically least monic irreducible: scan non-leading
        // coefficients in base-p code order.
        std::uint64_t span = 1;
        for (std::uint32_t i = 0; i < k; ++i) span *= p;
        bool done = false;
        for (std::uint64_t lo = 0; lo < span && !done; ++lo) {
            Poly m = code_to_poly(static_cast<Fe>(lo), p);
            m.resize(k + 1, 0);
            m[k] = 1;
            if (!find_factor(m, p)) {
                f->modulus = std::move(m);
                done = true;
            }
        }
        if (!done) raise(Errc::not_irreducible, "no irreducible polynomial found"); // unreachable
    }

    if (f->q <= FieldSpec::kTableLimit) {
        const std::uint32_t n = f->q;
        f->mul_table.assign(static_cast<std::size_t>(n) * n, 0);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b <= a; ++b) {
                Fe v = mul_raw(a, b, *f);
                f->mul_table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(v);
                f->mul_table[static_cast<std::size_t>(b) * n + a] = static_cast<std::uint16_t>(v);
            }
        f->inv_table.assign(n, 0);
        for (std::uint32_t a = 1; a < n; ++a)
            f->inv_table[a] = static_cast<std::uint16_t>(pow_raw(a, f->q - 2, *f));
    }
    return f;
}

Field build_field_q(std::uint32_t q) {
    auto pk = prime_power_split(q);
    if (!pk) raise(Errc::bad_params, "q = " + std::to_string(q) + " is not a prime power");
    return build_field(pk->first, pk->second);
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_split(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        std::uint32_t k = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++k;
        }
        if (r != 1) return std::nullopt;
        return std::make_pair(static_cast<std::uint32_t>(p), k);
    }
    return std::make_pair(static_cast<std::uint32_t>(q), 1u); // q itself prime
}

Fe fe_add(Fe a, Fe b, const FieldSpec& f) {
    if (f.k == 1) return (a + b) % f.p;
    if (f.p == 2) return a ^ b;
    Fe r = 0, pw = 1;
    while (a || b) {
        r += ((a % f.p + b % f.p) % f.p) * pw;
        a /= f.p;
        b /= f.p;
        pw *= f.p;
    }
    return r;
}

Fe fe_neg(Fe a, const FieldSpec& f) {
    if (f.k == 1) return a ? f.p - a : 0;
    if (f.p == 2) return a;
    Fe r = 0, pw = 1;
    while (a) {
        Fe d = a % f.p;
        r += (d ? f.p - d : 0) * pw;
        a /= f.p;
        pw *= f.p;
    }
    return r;
}

Fe fe_sub(Fe a, Fe b, const FieldSpec& f) { return fe_add(a, fe_neg(b, f), f); }

Fe fe_mul(Fe a, Fe b, const FieldSpec& f) {
    if (f.has_tables()) return f.mul_table[static_cast<std::size_t>(a) * f.q + b];
    return mul_raw(a, b, f);
}

Fe fe_inv(Fe a, const FieldSpec& f) {
    if (a == 0) raise(Errc::zero_inverse, "0 has no multiplicative inverse");
    if (f.has_tables()) return f.inv_table[a];
    return pow_raw(a, f.q - 2, f);
}

std::string field_header(const FieldSpec& f) {
    std::ostringstream os;
    os << f.q << " " << f.p << " " << f.k;
    for (auto c : f.modulus) os << " " << c;
    return os.str();
}

Field parse_field_header(const std::string& line) {
    std::istringstream is(line);
    std::uint32_t q, p, k;
    if (!(is >> q >> p >> k)) raise(Errc::bad_format, "bad field header: " + line);
    std::vector<std::uint32_t> mod;
    std::uint32_t c;
    while (is >> c) mod.push_back(c);
    if (mod.size() != k + 1) raise(Errc::bad_format, "field header modulus must have k+1 coefficients");
    Field f = build_field(p, k, mod);
    if (f->q != q) raise(Errc::bad_format, "field header q does not match p^k");
    return f;
}

} // namespace aont
