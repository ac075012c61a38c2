#pragma once

#include <string>
#include <vector>

#include "qreflect/group.hpp"

namespace qref {

// The (t,t)-design constant for lines in H^d:
// c_t = prod_{j=0}^{t-1} (2+j) / (2d+j).
Rational design_constant(int dim, int strength);

// Exact test of sum_{l,m} angle(l,m)^t == c_t n^2 over all ordered pairs
// (diagonal included with angle 1).
bool is_tt_design(const LineSet& lines, int strength);

// Frame potential sum_{l,m} angle(l,m)^t, the left side of the test above.
FieldElem frame_potential(const LineSet& lines, int strength,
                          ExecMode mode = ExecMode::Parallel);

// The orbit polynomial (1/|G|) sum_g |<x, gx>|^{2t} - c_t <x,x>^{2t}.
// Vanishing for all x is equivalent to every orbit being a (t,t)-design.
FieldElem design_potential(const MatGroup& group, const VecH& x, int strength,
                           ExecMode mode = ExecMode::Parallel);

// Largest n for a line system in H^d whose distinct non-trivial angles are
// exactly {alpha, beta}: n <= d(2d+1)(1-a)(1-b) / (3 - (2d+1)(a+b) + d(2d+1)ab).
// Throws std::domain_error when the denominator is <= 0 (bound inapplicable).
FieldElem special_bound(int dim, const FieldElem& alpha, const FieldElem& beta);

// Absolute bound n <= d^2 (4d^2 - 1) / 3 for any system of lines in H^d.
Rational absolute_bound(int dim);

/** Everything the `verify designs` report prints about one line system. */
struct DesignReport {
    std::size_t line_count = 0;
    int strength = 0;                  // largest t <= 3 with the (t,t) property
    bool t1 = false, t2 = false, t3 = false;
    std::vector<FieldElem> angles;     // distinct angles between different lines
    std::size_t angle_count = 0;       // s = |angles| (zero included if present)
    bool has_orthogonal_pair = false;
    bool regular_scheme = false;       // t >= s - 1
    bool special_applies = false;      // exactly two angles, positive denominator
    FieldElem special;                 // the special bound, when it applies
    bool meets_special = false;        // n equals the bound exactly
    Rational absolute;                 // absolute bound for d = 2
    bool within_absolute = false;
};

DesignReport design_report(const LineSet& lines);

}  // namespace qref
