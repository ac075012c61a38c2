#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qreflect/lines.hpp"
#include "qreflect/perm.hpp"

namespace qref {

// Most group-sized scans here are data parallel. Every kernel has a serial
// reference twin; exact arithmetic makes the two bit-identical, which the
// tests and the benchmark tool both rely on.
enum class ExecMode { Serial, Parallel };

/**
 * Finite group of invertible 2x2 quaternionic matrices, stored as the full
 * element list in deterministic breadth-first discovery order.
 */
class MatGroup {
  public:
    // Multiplicative closure of the generators. Throws CapExceeded if the
    // group would exceed `cap` elements (the generated group may be infinite).
    static MatGroup closure(std::vector<MatH> gens, std::size_t cap = 8192,
                            ExecMode mode = ExecMode::Parallel);

    // Wraps an element list that is already a group (e.g. a stabilizer).
    static MatGroup from_elements(std::vector<MatH> elements);

    std::size_t order() const { return elems_.size(); }
    const std::vector<MatH>& elements() const { return elems_; }
    const std::vector<MatH>& generators() const { return gens_; }
    bool contains(const MatH& m) const { return index_.count(m) > 0; }
    bool contains_all(const MatGroup& other) const;

    // Inverse of an element, using the adjoint when the group is unitary.
    MatH inverse_of(const MatH& g) const;

    bool all_unitary() const { return unitary_; }

    // Order-independent fingerprint of the element set.
    std::uint64_t fingerprint() const;
    bool set_equal(const MatGroup& other) const;

  private:
    MatGroup() = default;

    std::vector<MatH> gens_;
    std::vector<MatH> elems_;
    std::unordered_map<MatH, std::uint32_t, MatHHash> index_;
    bool unitary_ = true;
};

// Orbit of a line under the group.
LineSet line_orbit(const MatGroup& group, const Line& seed, std::size_t cap = 8192);

// Elements that fix the line (as a set of spans).
MatGroup line_stabilizer(const MatGroup& group, const Line& line);

// Elements g with g v = v exactly (not just up to scalar).
MatGroup pointwise_stabilizer(const MatGroup& group, const VecH& v);

// True when every element maps the line to itself; callers hand in a group,
// so this scans all elements of a (typically small) stabilizer candidate.
bool verify_fixed_line(const MatGroup& group, const Line& line);

// Normalizer of a subgroup: elements g with g H g^-1 = H.
MatGroup normalizer(const MatGroup& group, const MatGroup& subgroup);

// Number of distinct element sets {g H g^-1 : g in G}, computed as the index
// of the normalizer. Requires H <= G.
std::size_t subgroup_conjugates(const MatGroup& group, const MatGroup& subgroup);

// The actual distinct conjugate subgroups, one representative set each.
std::vector<MatGroup> distinct_conjugates(const MatGroup& group, const MatGroup& subgroup);

// Conjugate subgroup g H g^-1 as an element list.
MatGroup conjugated_subgroup(const MatGroup& subgroup, const MatH& g, const MatH& g_inverse);

// True when the real span of the elements is all of the 16-dimensional
// matrix algebra; equivalent to having no invariant line.
bool is_irreducible(const MatGroup& group);

/** Result of letting a matrix group permute a finite family of points. */
struct PermAction {
    std::vector<Perm> generator_images;  // one per group generator
    std::size_t image_order = 0;         // order of the induced permutation group
    std::size_t kernel_order = 0;        // elements acting trivially
    std::vector<MatH> kernel_elements;   // those elements, in group element order
};

// Permutation induced on a list of lines by a single matrix; throws
// std::invalid_argument when the matrix does not preserve the list.
Perm line_permutation(const MatH& g, const std::vector<Line>& points);

// Action on a list of lines; every generator image must permute the list.
PermAction line_action(const MatGroup& group, const std::vector<Line>& points);

// Permutation induced on unordered line pairs by a single matrix.
Perm pair_permutation(const MatH& g, const std::vector<std::pair<Line, Line>>& pairs);

// Action on unordered pairs of lines (e.g. the five bases of a line system).
PermAction pair_action(const MatGroup& group,
                       const std::vector<std::pair<Line, Line>>& pairs);

}  // namespace qref
