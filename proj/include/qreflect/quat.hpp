#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qreflect/field.hpp"

namespace qref {

/**
 * Quaternion r + x*i + y*j + z*k over Q(sqrt2, sqrt3, sqrt5), with the
 * right-handed relations i*j = k, j*k = i, k*i = j. Vectors over these
 * are right modules: matrices act from the left, scalars from the right.
 */
struct Quat {
    FieldElem r;
    FieldElem x;
    FieldElem y;
    FieldElem z;

    Quat() = default;
    Quat(long value) : r(value) {}  // NOLINT(google-explicit-constructor)
    Quat(FieldElem rr, FieldElem xx, FieldElem yy, FieldElem zz)
        : r(std::move(rr)), x(std::move(xx)), y(std::move(yy)), z(std::move(zz)) {}

    static Quat one() { return Quat(1); }
    static Quat i() { return Quat(FieldElem(0), FieldElem(1), FieldElem(0), FieldElem(0)); }
    static Quat j() { return Quat(FieldElem(0), FieldElem(0), FieldElem(1), FieldElem(0)); }
    static Quat k() { return Quat(FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(1)); }

    // The complex pair (a, b) with q = a + b*j, identifying C with the span
    // of 1 and i inside the quaternions.
    ComplexElem complex_a() const { return {r, x}; }
    ComplexElem complex_b() const { return {y, z}; }
    static Quat from_complex_pair(const ComplexElem& a, const ComplexElem& b) {
        return {a.re, a.im, b.re, b.im};
    }

    // Properties

    bool is_zero() const { return r.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_real() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    // Reduced norm |q|^2, a nonnegative field element.
    FieldElem nrd() const { return r * r + x * x + y * y + z * z; }

    // Arithmetic

    Quat conj() const { return {r, -x, -y, -z}; }
    Quat inv() const;

    Quat operator+(const Quat& o) const { return {r + o.r, x + o.x, y + o.y, z + o.z}; }
    Quat operator-(const Quat& o) const { return {r - o.r, x - o.x, y - o.y, z - o.z}; }
    Quat operator-() const { return {-r, -x, -y, -z}; }
    Quat operator*(const Quat& o) const;
    Quat& operator+=(const Quat& o);

    // Scaling by a central (real) field element.
    Quat scale(const FieldElem& s) const { return {r * s, x * s, y * s, z * s}; }

    bool operator==(const Quat& o) const { return r == o.r && x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Quat& o) const { return !(*this == o); }

    int cmp_structural(const Quat& o) const;
    std::size_t hash() const;

    // Text form "(r, x, y, z)" of four field elements.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Quat& q);
};

Quat parse_quat(const std::string& text);

struct QuatHash {
    std::size_t operator()(const Quat& q) const { return q.hash(); }
};

// The binary operation a o b = a b^-1 a. Sets of units containing 1 and
// closed under it are exactly the root systems of this library.
Quat circ(const Quat& a, const Quat& b);

// Multiplicative order of a unit quaternion; throws std::domain_error if it
// exceeds max_order (non-unit inputs never return).
int mult_order(const Quat& q, int max_order = 64);

// Thrown when an iterative closure exceeds its element budget, which is the
// signal that the generated structure is infinite or misconfigured.
class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Closure of the given unit quaternions under multiplication, in
// deterministic discovery order. Finite groups are reproduced exactly;
// anything growing past `cap` throws CapExceeded.
std::vector<Quat> unit_closure(const std::vector<Quat>& gens, std::size_t cap = 256);

// Closure of X together with 1 under (a, b) -> a b^-1 a. This is the span
// construction for root systems of unit quaternions.
std::vector<Quat> reflection_system_closure(const std::vector<Quat>& seed, std::size_t cap = 256);

}  // namespace qref
