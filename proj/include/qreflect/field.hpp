#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>

#include "qreflect/rational.hpp"

namespace qref {

/**
 * Element of the totally real field Q(sqrt2, sqrt3, sqrt5), stored as eight
 * rational coordinates over the basis 1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10,
 * sqrt15, sqrt30. All arithmetic is exact; every value of this type is a
 * real number with a well-defined sign.
 */
class FieldElem {
  public:
    static constexpr int kBasisSize = 8;
    // Radicands of the basis elements, in coordinate order.
    static constexpr std::array<int, kBasisSize> kRadicands = {1, 2, 3, 5, 6, 10, 15, 30};

    FieldElem();
    FieldElem(long value);  // NOLINT(google-explicit-constructor) integers embed naturally
    explicit FieldElem(Rational value);
    static FieldElem from_coeffs(std::array<Rational, kBasisSize> coeffs);

    // Basis element sqrt(n) for n in kRadicands.
    static FieldElem radical(int radicand);
    static FieldElem sqrt2() { return radical(2); }
    static FieldElem sqrt3() { return radical(3); }
    static FieldElem sqrt5() { return radical(5); }
    // 1/sqrt2 = sqrt2/2, the scale that appears all over the unitary matrices here.
    static FieldElem half_sqrt2();

    // Properties

    const Rational& coeff(int index) const { return coeffs_[static_cast<std::size_t>(index)]; }
    bool is_zero() const;
    bool is_rational() const;
    // The rational part (coefficient of 1), regardless of the other coordinates.
    const Rational& rational_part() const { return coeffs_[0]; }
    // The whole value as a rational; throws std::domain_error if irrational.
    Rational as_rational() const;

    // Arithmetic

    FieldElem operator+(const FieldElem& other) const;
    FieldElem operator-(const FieldElem& other) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& other) const;
    FieldElem operator/(const FieldElem& other) const { return *this * other.inv(); }
    FieldElem& operator+=(const FieldElem& other);
    FieldElem& operator-=(const FieldElem& other);
    FieldElem& operator*=(const FieldElem& other) { return *this = *this * other; }

    // In-place multiply-accumulate, this += (-)a * b. The quaternion and
    // matrix products run on these to avoid temporary churn. Neither operand
    // may alias the accumulator.
    void add_mul(const FieldElem& a, const FieldElem& b);
    void sub_mul(const FieldElem& a, const FieldElem& b);

    bool operator==(const FieldElem& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const FieldElem& other) const { return !(*this == other); }

    // Field automorphism negating sqrt(p) for p = 2, 3 or 5.
    FieldElem conj_radical(int prime) const;

    // Multiplicative inverse via the tower of conjugates; throws on zero.
    FieldElem inv() const;

    // Exact sign (-1, 0, +1), decided by interval refinement when the value
    // is irrational. Never wrong, regardless of magnitude.
    int sign() const;

    bool operator<(const FieldElem& other) const { return (*this - other).sign() < 0; }
    bool operator<=(const FieldElem& other) const { return (*this - other).sign() <= 0; }
    bool operator>(const FieldElem& other) const { return (*this - other).sign() > 0; }
    bool operator>=(const FieldElem& other) const { return (*this - other).sign() >= 0; }

    // Coordinatewise comparison usable as a strict weak order for canonical
    // sorting; unrelated to the numeric order.
    int cmp_structural(const FieldElem& other) const;

    double to_double() const;
    std::size_t hash() const;

    // Text form "c0 + c1*r2 + ... + c7*r30" with zero terms omitted.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const FieldElem& e);

  private:
    std::array<Rational, kBasisSize> coeffs_;
};

FieldElem parse_field(const std::string& text);

struct FieldElemHash {
    std::size_t operator()(const FieldElem& e) const { return e.hash(); }
};

/**
 * Element of Q(sqrt2, sqrt3, sqrt5)(i): a complex number with FieldElem real
 * and imaginary parts. This is the scalar ring of the four-dimensional
 * complex matrices in this library.
 */
struct ComplexElem {
    FieldElem re;
    FieldElem im;

    ComplexElem() = default;
    ComplexElem(FieldElem real, FieldElem imag) : re(std::move(real)), im(std::move(imag)) {}
    ComplexElem(long value) : re(value), im(0) {}  // NOLINT(google-explicit-constructor)

    static ComplexElem i() { return {FieldElem(0), FieldElem(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    ComplexElem conj() const { return {re, -im}; }
    // Multiplication by the imaginary unit.
    ComplexElem times_i() const { return {-im, re}; }

    ComplexElem operator+(const ComplexElem& o) const { return {re + o.re, im + o.im}; }
    ComplexElem operator-(const ComplexElem& o) const { return {re - o.re, im - o.im}; }
    ComplexElem operator-() const { return {-re, -im}; }
    ComplexElem operator*(const ComplexElem& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexElem& operator+=(const ComplexElem& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    bool operator==(const ComplexElem& o) const { return re == o.re && im == o.im; }
    bool operator!=(const ComplexElem& o) const { return !(*this == o); }

    std::size_t hash() const { return hash_combine(re.hash(), im.hash()); }
    std::string str() const;
};

ComplexElem parse_complex(const std::string& text);

}  // namespace qref
