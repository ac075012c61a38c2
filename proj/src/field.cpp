#include "qreflect/field.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <utility>

namespace qref {

namespace {

int radicand_index(int radicand) {
    for (int idx = 0; idx < FieldElem::kBasisSize; ++idx) {
        if (FieldElem::kRadicands[static_cast<std::size_t>(idx)] == radicand) return idx;
    }
    return -1;
}

struct BasisProduct {
    int index;   // basis slot of sqrt(m)*sqrt(n)
    int factor;  // integer multiplier in front of it
};

// sqrt(m)*sqrt(n) = g*sqrt(mn/g^2) with g = gcd(m, n); the reduced radicand
// always lands back in the basis because the radicands are the squarefree
// divisors of 30.
const std::array<std::array<BasisProduct, 8>, 8>& basis_products() {
    static const auto table = [] {
        std::array<std::array<BasisProduct, 8>, 8> t{};
        for (int a = 0; a < FieldElem::kBasisSize; ++a) {
            for (int b = 0; b < FieldElem::kBasisSize; ++b) {
                const int m = FieldElem::kRadicands[static_cast<std::size_t>(a)];
                const int n = FieldElem::kRadicands[static_cast<std::size_t>(b)];
                const int g = std::gcd(m, n);
                const int reduced = (m / g) * (n / g);
                t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    BasisProduct{radicand_index(reduced), g};
            }
        }
        return t;
    }();
    return table;
}

std::string strip_spaces(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

}  // namespace

FieldElem::FieldElem() : coeffs_{} {}

FieldElem::FieldElem(long value) : coeffs_{} { coeffs_[0] = Rational(value); }

// Equality and hashing read the raw num/den representation, so every
// externally supplied rational is forced into canonical form here; GMP's
// two-argument constructor does not reduce (e.g. 0/2 stays 0/2).
FieldElem::FieldElem(Rational value) : coeffs_{} {
    value.canonicalize();
    coeffs_[0] = std::move(value);
}

FieldElem FieldElem::from_coeffs(std::array<Rational, kBasisSize> coeffs) {
    FieldElem e;
    for (auto& c : coeffs) c.canonicalize();
    e.coeffs_ = std::move(coeffs);
    return e;
}

FieldElem FieldElem::radical(int radicand) {
    const int idx = radicand_index(radicand);
    if (idx < 0) throw std::domain_error("no basis radical sqrt(" + std::to_string(radicand) + ")");
    FieldElem e;
    e.coeffs_[static_cast<std::size_t>(idx)] = 1;
    return e;
}

FieldElem FieldElem::half_sqrt2() {
    FieldElem e;
    e.coeffs_[1] = Rational(1, 2);
    return e;
}

bool FieldElem::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool FieldElem::is_rational() const {
    for (int idx = 1; idx < kBasisSize; ++idx) {
        if (coeffs_[static_cast<std::size_t>(idx)] != 0) return false;
    }
    return true;
}

Rational FieldElem::as_rational() const {
    if (!is_rational()) throw std::domain_error("field element is irrational: " + str());
    return coeffs_[0];
}

FieldElem FieldElem::operator+(const FieldElem& other) const {
    FieldElem out(*this);
    out += other;
    return out;
}

FieldElem FieldElem::operator-(const FieldElem& other) const {
    FieldElem out(*this);
    out -= other;
    return out;
}

FieldElem FieldElem::operator-() const {
    FieldElem out;
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (coeffs_[idx] != 0) out.coeffs_[idx] = -coeffs_[idx];
    }
    return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& other) {
    // Coefficients are sparse in practice; skipping zero addends saves most
    // of the mpq traffic in the matrix kernels.
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (other.coeffs_[idx] != 0) coeffs_[idx] += other.coeffs_[idx];
    }
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& other) {
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (other.coeffs_[idx] != 0) coeffs_[idx] -= other.coeffs_[idx];
    }
    return *this;
}

FieldElem FieldElem::operator*(const FieldElem& other) const {
    FieldElem out;
    out.add_mul(*this, other);
    return out;
}

void FieldElem::add_mul(const FieldElem& a, const FieldElem& b) {
    const auto& table = basis_products();
    Rational term;
    for (std::size_t m = 0; m < a.coeffs_.size(); ++m) {
        if (a.coeffs_[m] == 0) continue;
        for (std::size_t n = 0; n < b.coeffs_.size(); ++n) {
            if (b.coeffs_[n] == 0) continue;
            const BasisProduct& p = table[m][n];
            term = a.coeffs_[m] * b.coeffs_[n];
            if (p.factor != 1) term *= p.factor;
            coeffs_[static_cast<std::size_t>(p.index)] += term;
        }
    }
}

void FieldElem::sub_mul(const FieldElem& a, const FieldElem& b) {
    const auto& table = basis_products();
    Rational term;
    for (std::size_t m = 0; m < a.coeffs_.size(); ++m) {
        if (a.coeffs_[m] == 0) continue;
        for (std::size_t n = 0; n < b.coeffs_.size(); ++n) {
            if (b.coeffs_[n] == 0) continue;
            const BasisProduct& p = table[m][n];
            term = a.coeffs_[m] * b.coeffs_[n];
            if (p.factor != 1) term *= p.factor;
            coeffs_[static_cast<std::size_t>(p.index)] -= term;
        }
    }
}

FieldElem FieldElem::conj_radical(int prime) const {
    FieldElem out(*this);
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (kRadicands[idx] % prime == 0) out.coeffs_[idx] = -out.coeffs_[idx];
    }
    return out;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("division by zero field element");
    // Successive norms down the tower Q(r2,r3,r5) > Q(r3,r5) > Q(r5) > Q.
    const FieldElem a2 = conj_radical(2);
    const FieldElem b = *this * a2;
    const FieldElem b3 = b.conj_radical(3);
    const FieldElem c = b * b3;
    const FieldElem c5 = c.conj_radical(5);
    const FieldElem d = c * c5;
    const FieldElem cofactor = a2 * b3 * c5;
    // d is the norm form down to Q, so it must be a nonzero rational.
    const Rational norm = d.as_rational();
    FieldElem out;
    const Rational scale = 1 / norm;
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        out.coeffs_[idx] = cofactor.coeffs_[idx] * scale;
    }
    return out;
}

int FieldElem::sign() const {
    bool any = false;
    bool irrational = false;
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (coeffs_[idx] != 0) {
            any = true;
            if (idx > 0) irrational = true;
        }
    }
    if (!any) return 0;
    if (!irrational) return sgn(coeffs_[0]);

    // Bracket each radical between t/s and (t+1)/s with s = 2^bits and
    // t = floor(sqrt(n*s^2)), then sum the interval. The basis is linearly
    // independent over Q, so a nonzero element eventually separates from 0.
    for (int bits = 32;; bits *= 2) {
        const BigInt s = BigInt(1) << bits;
        const BigInt s2 = s * s;
        Rational lo = coeffs_[0];
        Rational hi = coeffs_[0];
        for (std::size_t idx = 1; idx < coeffs_.size(); ++idx) {
            const Rational& c = coeffs_[idx];
            if (c == 0) continue;
            const BigInt t = sqrt(BigInt(kRadicands[idx]) * s2);
            Rational root_lo(t, s);
            Rational root_hi(t + 1, s);
            root_lo.canonicalize();
            root_hi.canonicalize();
            if (c > 0) {
                lo += c * root_lo;
                hi += c * root_hi;
            } else {
                lo += c * root_hi;
                hi += c * root_lo;
            }
        }
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
    }
}

int FieldElem::cmp_structural(const FieldElem& other) const {
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        const int c = cmp(coeffs_[idx], other.coeffs_[idx]);
        if (c != 0) return c;
    }
    return 0;
}

double FieldElem::to_double() const {
    static const std::array<double, kBasisSize> roots = [] {
        std::array<double, kBasisSize> r{};
        for (std::size_t idx = 0; idx < r.size(); ++idx) {
            r[idx] = std::sqrt(static_cast<double>(kRadicands[idx]));
        }
        return r;
    }();
    double out = 0.0;
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (coeffs_[idx] != 0) out += coeffs_[idx].get_d() * roots[idx];
    }
    return out;
}

std::size_t FieldElem::hash() const {
    std::size_t h = 0xa0761d6478bd642full;
    for (const auto& c : coeffs_) h = hash_combine(h, hash_rational(c));
    return h;
}

std::string FieldElem::str() const {
    std::string out;
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (coeffs_[idx] == 0) continue;
        if (!out.empty()) out += " + ";
        out += format_rational(coeffs_[idx]);
        if (idx > 0) out += "*r" + std::to_string(kRadicands[idx]);
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.str(); }

FieldElem parse_field(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty field element text");
    std::array<Rational, FieldElem::kBasisSize> coeffs{};
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (first) {
            if (s[pos] == '+') {
                ++pos;
            } else if (s[pos] == '-') {
                sign = -1;
                ++pos;
            }
            first = false;
        } else {
            if (s[pos] == '+') {
                ++pos;
            } else if (s[pos] == '-') {
                sign = -1;
                ++pos;
            } else {
                throw std::invalid_argument("expected '+' or '-' in field element: '" + text + "'");
            }
            // Tolerate a signed coefficient after the separator, as in "1 + -1/2*r2".
            if (pos < s.size() && s[pos] == '-') {
                sign = -sign;
                ++pos;
            }
        }
        const std::size_t start = pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        const std::string term = s.substr(start, pos - start);
        if (term.empty()) throw std::invalid_argument("empty term in field element: '" + text + "'");

        std::string coeff_text;
        int radicand = 1;
        const std::size_t star = term.find('*');
        if (star != std::string::npos) {
            coeff_text = term.substr(0, star);
            const std::string rad = term.substr(star + 1);
            if (rad.size() < 2 || rad[0] != 'r') {
                throw std::invalid_argument("bad radical name '" + rad + "'");
            }
            radicand = std::atoi(rad.c_str() + 1);
        } else if (term[0] == 'r') {
            coeff_text = "1";
            radicand = std::atoi(term.c_str() + 1);
        } else {
            coeff_text = term;
        }
        const int idx = radicand_index(radicand);
        if (idx < 0) throw std::invalid_argument("bad radical r" + std::to_string(radicand));
        Rational c = parse_rational(coeff_text);
        if (sign < 0) c = -c;
        coeffs[static_cast<std::size_t>(idx)] += c;
    }
    return FieldElem::from_coeffs(std::move(coeffs));
}

std::string ComplexElem::str() const { return "(" + re.str() + ", " + im.str() + ")"; }

ComplexElem parse_complex(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
        throw std::invalid_argument("complex scalar must look like (re, im): '" + text + "'");
    }
    const std::string body = s.substr(1, s.size() - 2);
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos) {
        throw std::invalid_argument("complex scalar must have two components: '" + text + "'");
    }
    return {parse_field(body.substr(0, comma)), parse_field(body.substr(comma + 1))};
}

}  // namespace qref
