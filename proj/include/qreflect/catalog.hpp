#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qreflect/group.hpp"
#include "qreflect/linalg.hpp"
#include "qreflect/lines.hpp"

namespace qref::catalog {

// Named exact constants: the groups, matrices, fiducial vectors and line
// systems that the verification commands and tests all share. Every matrix
// here is unitary over Q(sqrt2, sqrt3, sqrt5) and every value is exact.

struct Entry {
    std::string name;
    std::string kind;  // "group", "matrix", "complex-matrix", "vector", "line-set"
    std::string note;
};

// All entries in display order.
const std::vector<Entry>& entries();
bool has_entry(const std::string& name);

// Generator lists for the named matrix groups: K, P0, P1, P2, P3, H32, H20,
// H16a, H16b, H80_P2, H48_P3, G8_family, G8_diag, and the parameterized
// names G(q1,q2) with q1, q2 unit quaternion names like "i" or "-k".
std::vector<MatH> group_generators(const std::string& name);

// Closure of group_generators(name), computed once per process. The larger
// closures take seconds, and callers tend to revisit the same few groups.
const MatGroup& group(const std::string& name);

// Named quaternionic matrices: F (the two-point Fourier reflection) and t
// (the order-ten symmetry cycling the five bases).
MatH h_matrix(const std::string& name);

// Named 4x4 complex matrices: A1, A2, A3, A4, S, T, R, A, B, P_perm.
MatC complex_matrix(const std::string& name);

// Named fiducial vectors: w, wperp, f20a, f20b, f80, f80b, f80_P3.
VecH vector(const std::string& name);

// Named line systems: mub10 (the five unbiased bases, in table order) and
// roots40 (the forty order-two root lines).
LineSet line_set(const std::string& name);

// Named unit-quaternion sets: the reflection systems Q8, L32, L20, L18, L14,
// the normalized system L32_O = ((1-i)/sqrt2) L32, and the binary octahedral
// group O48 they generate.
std::vector<Quat> unit_list(const std::string& name);

// The ten basis lines in table order, and the five orthogonal pairs
// (consecutive lines pair up).
std::vector<Line> mub_lines();
std::vector<std::pair<Line, Line>> mub_pairs();

// Unit quaternion by name: "1", "-1", "i", "-i", "j", "-j", "k", "-k".
Quat unit(const std::string& name);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Re-derives the documented order, unitarity and fixed-line facts for every
// entry. All rows pass on a healthy build.
std::vector<Check> verify_catalog();

}  // namespace qref::catalog
