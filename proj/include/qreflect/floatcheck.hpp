#pragma once

#include <optional>
#include <string>

#include "qreflect/group.hpp"

namespace qref {

// Double-precision mirrors of the quaternion types. The continuous
// eigenvector family runs over a real interval, so the whole curve cannot
// be checked exactly; a dense float sweep covers the interval and exact
// arithmetic nails the representable sample points.

struct QuatF {
    double r = 0, x = 0, y = 0, z = 0;

    QuatF conj() const { return {r, -x, -y, -z}; }
    double nrd() const { return r * r + x * x + y * y + z * z; }
};

QuatF operator*(const QuatF& a, const QuatF& b);
QuatF operator+(const QuatF& a, const QuatF& b);

struct VecF {
    QuatF v1;
    QuatF v2;
};

// Same convention as the exact side: conjugate linear in the first slot.
QuatF inner(const VecF& v, const VecF& w);

struct MatF {
    QuatF a, b, c, d;

    VecF operator*(const VecF& v) const { return {a * v.v1 + b * v.v2, c * v.v1 + d * v.v2}; }
    MatF operator*(const MatF& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

double mirror(const FieldElem& e);
QuatF mirror(const Quat& q);
VecF mirror(const VecH& v);
MatF mirror(const MatH& m);

// The family vector (1, t(1+j) + sign * sqrt(1-2t^2) i). Throws
// std::domain_error when |t| exceeds 1/sqrt(2) beyond rounding slack;
// rounding-level negatives of 1-2t^2 at the interval ends are clamped to 0.
VecF family_vector(double t, int sign = +1);

// max over h in the group of | |<v,hv>|^2 - <v,v>^2 | at v = family_vector.
double family_residual(const MatGroup& group, double t, int sign = +1);

struct SweepResult {
    double max_residual = 0;
    double worst_t = 0;
    int worst_sign = +1;
    int grid_points = 0;
};

// Residual over a uniform grid of t values spanning [-1/sqrt(2), 1/sqrt(2)],
// both signs at every grid point.
SweepResult family_sweep(const MatGroup& group, int grid_points = 1001,
                         ExecMode mode = ExecMode::Parallel);

// Exact square root out of a fixed dictionary: rational multiples of the
// basis radicals. Values outside the dictionary give nullopt, never a guess.
std::optional<FieldElem> sqrt_in_field(const FieldElem& value);

// Exact family vector at a representable parameter. Throws std::domain_error
// when 1 - 2t^2 is negative or its square root is outside the dictionary.
VecH family_vector_exact(const FieldElem& t, int sign = +1);

// Exact check that both family vectors at t span lines fixed by the group.
bool exact_family_check(const MatGroup& group, const FieldElem& t);

// Same, against the order-8 stabilizer from the catalog.
bool exact_family_check(const FieldElem& t);

}  // namespace qref
