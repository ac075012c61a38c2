#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qreflect/group.hpp"

namespace qref {

/**
 * Unitary reflection: fixes a line pointwise and multiplies its orthogonal
 * complement (the root line) by a unit scalar of finite order != 1.
 */
struct Reflection {
    MatH matrix;
    Line root;    // the moved line
    Line mirror;  // the fixed line
    Quat scalar;  // eigenvalue on the root line, acting on the right
    int order = 0;
};

// The reflection along root a with scalar xi: 1 - a (1 - xi) a* / <a, a>.
// Scaling a on the right and conjugating xi accordingly gives the same map.
MatH make_reflection(const VecH& a, const Quat& xi);

// Classifies g: returns the reflection data when 1 - g has rank exactly one,
// std::nullopt otherwise (identity and everything of higher defect).
std::optional<Reflection> detect_reflection(const MatH& g);

// All reflections in the group, in element order. The parallel variant and
// the serial one return identical lists.
std::vector<Reflection> reflection_census(const MatGroup& group,
                                          ExecMode mode = ExecMode::Parallel);

/** One orbit of roots, with the isomorphism type of its scalar group. */
struct ReflectionOrbit {
    std::size_t orbit_size = 0;
    std::string scalar_type;             // "C2", "C4", "Q8", ...
    std::size_t scalar_group_order = 0;
    std::vector<Line> roots;
};

// Groups the census by root line, takes orbits of roots under the group
// action, and names each orbit's scalar group. Sorted by orbit size, then
// scalar group order.
std::vector<ReflectionOrbit> reflection_type(const MatGroup& group,
                                             const std::vector<Reflection>& census);

// Compact form like "10Q8 + 40C2" used by the summary tables.
std::string reflection_type_string(const std::vector<ReflectionOrbit>& orbits);

// The scalars fixing a given root (plus 1) always form a finite unit group;
// this names its isomorphism type.
std::string unit_group_type(const std::vector<Quat>& units);

// Subgroup generated by the monomial (diagonal or antidiagonal) reflections.
MatGroup monomial_subgroup(const std::vector<Reflection>& census);

/**
 * The (L, H) data of an imprimitive reflection group in its standard shape:
 * L collects the antidiagonal reflection entries plus 1, H the diagonal
 * reflection scalars plus 1.
 */
struct ImprimitiveData {
    std::vector<Quat> antidiagonal_units;  // L
    std::vector<Quat> diagonal_scalars;    // H
};

// Reads the standard-shape data off a monomial reflection group. Throws
// std::invalid_argument when a non-monomial element is present.
ImprimitiveData imprimitive_data(const MatGroup& group, const std::vector<Reflection>& census);

// Systems of imprimitivity of the form {line, orthocomplement} found among
// the candidate lines: pairs mapped to themselves by every generator.
std::vector<std::pair<Line, Line>> imprimitivity_systems(const MatGroup& group,
                                                         const std::vector<Line>& candidates);

// The reflection group generated by the reflection with root (1,0) and
// scalar q1 together with the reflection with root (1,1) and scalar q2.
MatGroup two_reflection_group(const Quat& q1, const Quat& q2, std::size_t cap = 8192);

}  // namespace qref
