#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "qreflect/linalg.hpp"

namespace qref {

/**
 * Line (one-dimensional right submodule) in H^2, i.e. a point of the
 * quaternionic projective line. Canonical form: the span of (1, q) is
 * Finite(q); the span of (0, 1) is the point at infinity.
 */
class Line {
  public:
    Line() : infinite_(true) {}  // the point at infinity
    explicit Line(Quat slope) : infinite_(false), q_(std::move(slope)) {}

    static Line infinity() { return Line(); }

    bool is_infinity() const { return infinite_; }
    // The slope q of a finite line (1, q); throws at infinity.
    const Quat& slope() const;

    // A concrete spanning vector: (1, q) or (0, 1).
    VecH representative() const;

    bool operator==(const Line& o) const {
        return infinite_ == o.infinite_ && (infinite_ || q_ == o.q_);
    }
    bool operator!=(const Line& o) const { return !(*this == o); }

    // Total order for canonical sorting: infinity first, then slopes in
    // structural coordinate order.
    bool operator<(const Line& o) const;

    std::size_t hash() const;

    // Text form: "inf" or the slope quaternion "(r, x, y, z)".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Line& l);

  private:
    bool infinite_;
    Quat q_;
};

Line parse_line(const std::string& text);

struct LineHash {
    std::size_t operator()(const Line& l) const { return l.hash(); }
};

// The line spanned by a nonzero vector. Right scaling drops out, so this is
// well defined on spans.
Line line_of(const VecH& v);

// Image of a line under an invertible matrix.
Line apply(const MatH& m, const Line& l);

// |<v, w>|^2 / (<v,v> <w,w>) for any representatives; 0 means orthogonal,
// 1 means equal.
FieldElem angle(const Line& l1, const Line& l2);

// The unique line orthogonal to l.
Line orthocomplement(const Line& l);

/** Ordered, duplicate-free collection of lines with set semantics. */
class LineSet {
  public:
    LineSet() = default;
    explicit LineSet(const std::vector<Line>& lines);

    bool insert(const Line& l);
    bool contains(const Line& l) const { return seen_.count(l) > 0; }
    std::size_t size() const { return order_.size(); }
    bool empty() const { return order_.empty(); }
    const std::vector<Line>& lines() const { return order_; }

    // Canonically sorted copy of the lines.
    std::vector<Line> sorted() const;

    bool set_equal(const LineSet& o) const;
    bool disjoint_from(const LineSet& o) const;
    LineSet set_union(const LineSet& o) const;

    // Sorted distinct values of angle(l, m) over unordered pairs of distinct
    // lines. Contains 0 exactly when the set has an orthogonal pair.
    std::vector<FieldElem> angle_set() const;

  private:
    std::vector<Line> order_;
    std::unordered_set<Line, LineHash> seen_;
};

// Orbit of a seed line under the group generated by `gens`, in breadth-first
// discovery order. Throws CapExceeded past `cap` lines.
LineSet line_orbit(std::span<const MatH> gens, const Line& seed, std::size_t cap = 8192);

}  // namespace qref
