#pragma once

#include <vector>

#include "qreflect/group.hpp"
#include "qreflect/linalg.hpp"

namespace qref {

// Writing a quaternionic matrix entry as q = a + b j with complex a, b turns
// a 2x2 quaternionic matrix into a 4x4 complex one in the block form
// [[A, -B], [conj B, conj A]]. These two maps are mutually inverse algebra
// isomorphisms between M_2(H) and that block subalgebra of M_4(C).
MatC h_to_c(const MatH& m);

// True when the matrix has the block shape above.
bool is_symplectic(const MatC& m);

// Inverse of h_to_c; throws std::domain_error when the shape check fails.
MatH c_to_h(const MatC& m);

bool has_real_trace(const MatC& m);

/** Finite group of 4x4 complex matrices, closed like MatGroup. */
class CMatGroup {
  public:
    static CMatGroup closure(std::vector<MatC> gens, std::size_t cap = 8192);

    std::size_t order() const { return elems_.size(); }
    const std::vector<MatC>& elements() const { return elems_; }
    const std::vector<MatC>& generators() const { return gens_; }

  private:
    CMatGroup() = default;
    std::vector<MatC> gens_;
    std::vector<MatC> elems_;
};

// Frobenius-Schur indicator (1/|G|) sum of trace(g^2). Real representations
// give +1, complex ones 0, quaternionic ones -1. Throws std::domain_error if
// the exact value is not rational (it always is for a finite group realized
// over our field).
Rational fs_indicator(const CMatGroup& group, ExecMode mode = ExecMode::Parallel);

// The classical rank-four collineation groups that this toolkit lifts to
// quaternionic reflection groups, keyed by their historical numbers.
enum class CollineationGroup { N13, N14, N16, N18 };

// Complex generators (scaled so each conjugates into the block form above).
std::vector<MatC> collineation_generators(CollineationGroup which);

// Conjugates each generator into block form, converts to quaternions, and
// closes. The result acts on H^2 exactly as the source group acts on C^4.
MatGroup quaternionify(CollineationGroup which, std::size_t cap = 8192);

}  // namespace qref
