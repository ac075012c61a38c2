#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "qreflect/quat.hpp"

namespace qref {

/** Column vector in H^2, a right module: v * s scales both entries on the right. */
struct VecH {
    Quat v1;
    Quat v2;

    VecH() = default;
    VecH(Quat a, Quat b) : v1(std::move(a)), v2(std::move(b)) {}

    static VecH e1() { return {Quat::one(), Quat(0)}; }
    static VecH e2() { return {Quat(0), Quat::one()}; }

    bool is_zero() const { return v1.is_zero() && v2.is_zero(); }
    VecH scaled(const Quat& s) const { return {v1 * s, v2 * s}; }
    VecH operator-(const VecH& o) const { return {v1 - o.v1, v2 - o.v2}; }

    bool operator==(const VecH& o) const { return v1 == o.v1 && v2 == o.v2; }
    bool operator!=(const VecH& o) const { return !(*this == o); }

    std::string str() const;
};

// Hermitian inner product, conjugate linear in the first slot:
// <v, w> = conj(v1) w1 + conj(v2) w2.
Quat inner(const VecH& v, const VecH& w);

// |<v, w>|^2 as a field element.
FieldElem abs2_inner(const VecH& v, const VecH& w);

// <v, v>, which is always a real (field) element.
FieldElem norm2(const VecH& v);

/** 2x2 quaternionic matrix, row major, acting on H^2 from the left. */
struct MatH {
    // Entries a, b / c, d.
    Quat a;
    Quat b;
    Quat c;
    Quat d;

    MatH() = default;
    MatH(Quat aa, Quat bb, Quat cc, Quat dd)
        : a(std::move(aa)), b(std::move(bb)), c(std::move(cc)), d(std::move(dd)) {}

    static MatH identity() { return {Quat::one(), Quat(0), Quat(0), Quat::one()}; }
    static MatH diag(Quat top, Quat bottom) {
        return {std::move(top), Quat(0), Quat(0), std::move(bottom)};
    }
    static MatH antidiag(Quat top, Quat bottom) {
        return {Quat(0), std::move(top), std::move(bottom), Quat(0)};
    }
    static MatH scalar(const Quat& s) { return diag(s, s); }

    MatH operator*(const MatH& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    VecH operator*(const VecH& v) const { return {a * v.v1 + b * v.v2, c * v.v1 + d * v.v2}; }
    MatH operator-(const MatH& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    MatH operator-() const { return {-a, -b, -c, -d}; }
    MatH scaled(const FieldElem& s) const { return {a.scale(s), b.scale(s), c.scale(s), d.scale(s)}; }

    // Conjugate transpose.
    MatH adjoint() const { return {a.conj(), c.conj(), b.conj(), d.conj()}; }

    bool is_diagonal() const { return b.is_zero() && c.is_zero(); }
    bool is_antidiagonal() const { return a.is_zero() && d.is_zero(); }
    bool is_monomial() const { return is_diagonal() || is_antidiagonal(); }
    bool is_unitary() const { return adjoint() * *this == identity(); }

    // Columns as vectors.
    VecH col1() const { return {a, c}; }
    VecH col2() const { return {b, d}; }

    bool operator==(const MatH& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const MatH& o) const { return !(*this == o); }

    int cmp_structural(const MatH& o) const;
    std::size_t hash() const;

    // Text form "[(..), (..), (..), (..)]", row major.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const MatH& m);
};

MatH parse_math(const std::string& text);

struct MatHHash {
    std::size_t operator()(const MatH& m) const { return m.hash(); }
};

// General inverse over the quaternions (no unitarity assumed); throws
// std::domain_error when the matrix is singular.
MatH h_inverse(const MatH& m);

// Multiplicative order of a matrix of finite order; throws past max_order.
int mat_order(const MatH& m, int max_order = 256);

struct KernelInfo {
    int rank = 0;                      // rank over H (0, 1 or 2)
    std::optional<VecH> kernel_vector; // a nonzero kernel vector when rank < 2
};

// Rank and kernel of a 2x2 quaternionic matrix by row reduction. Row
// operations act on the left, so the right-module kernel is preserved.
KernelInfo kernel_rank(const MatH& m);

/** 4x4 matrix over Q(sqrt2,sqrt3,sqrt5)(i), row major. */
struct MatC {
    std::array<ComplexElem, 16> e{};

    static MatC identity();
    static MatC diag(const ComplexElem& d1, const ComplexElem& d2, const ComplexElem& d3,
                     const ComplexElem& d4);

    ComplexElem& at(int row, int col) { return e[static_cast<std::size_t>(row * 4 + col)]; }
    const ComplexElem& at(int row, int col) const {
        return e[static_cast<std::size_t>(row * 4 + col)];
    }

    MatC operator*(const MatC& o) const;
    MatC operator-(const MatC& o) const;
    // Entrywise scaling by a complex number.
    MatC scaled(const ComplexElem& s) const;
    MatC times_i() const;

    ComplexElem trace() const;
    MatC adjoint() const;
    bool is_unitary() const;

    bool operator==(const MatC& o) const { return e == o.e; }
    bool operator!=(const MatC& o) const { return !(*this == o); }

    std::size_t hash() const;
    std::string str() const;
};

MatC parse_matc(const std::string& text);

struct MatCHash {
    std::size_t operator()(const MatC& m) const { return m.hash(); }
};

}  // namespace qref
