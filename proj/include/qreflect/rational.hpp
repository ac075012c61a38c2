#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qref {

// Exact rational scalar. GMP keeps values in lowest terms with positive
// denominator, so equality and hashing can work on the raw representation.
using Rational = mpq_class;
using BigInt = mpz_class;

// Mixing step shared by all the structural hashes in this library.
inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
    seed ^= value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
    return seed;
}

inline std::size_t hash_bigint(const BigInt& z) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) + 0x51ed270b7a14a9efull;
    const std::size_t limbs = mpz_size(p);
    for (std::size_t idx = 0; idx < limbs; ++idx) {
        h = hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(p, idx)));
    }
    return h;
}

inline std::size_t hash_rational(const Rational& q) {
    return hash_combine(hash_bigint(q.get_num()), hash_bigint(q.get_den()));
}

// Parses "p" or "p/q" with an optional leading sign.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

inline std::string format_rational(const Rational& q) {
    return q.get_str();
}

}  // namespace qref
