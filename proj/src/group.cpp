#include "qreflect/group.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qref {

MatGroup MatGroup::closure(std::vector<MatH> gens, std::size_t cap, ExecMode mode) {
    MatGroup g;
    g.gens_ = std::move(gens);
    if (g.gens_.empty()) throw std::invalid_argument("group closure needs at least one generator");
    for (const MatH& m : g.gens_) {
        if (!m.is_unitary()) g.unitary_ = false;
    }

    auto insert = [&g, cap](const MatH& m) -> bool {
        const auto [it, fresh] =
            g.index_.emplace(m, static_cast<std::uint32_t>(g.elems_.size()));
        (void)it;
        if (fresh) {
            if (g.elems_.size() >= cap) {
                throw CapExceeded("group closure exceeded cap of " + std::to_string(cap));
            }
            g.elems_.push_back(m);
        }
        return fresh;
    };

    std::vector<std::uint32_t> frontier;
    for (const MatH& m : g.gens_) {
        if (insert(m)) frontier.push_back(static_cast<std::uint32_t>(g.elems_.size() - 1));
    }

    // Breadth-first closure under right multiplication by generators. Every
    // word in the generators is reached, and a finite set of invertible
    // matrices closed under products is a group. Products of one level are
    // computed in parallel, then deduplicated serially in a fixed order so
    // the element numbering never depends on the thread count.
    while (!frontier.empty()) {
        const std::size_t n_products = frontier.size() * g.gens_.size();
        std::vector<MatH> products(n_products);
#pragma omp parallel for schedule(dynamic, 8) if (mode == ExecMode::Parallel)
        for (long long idx = 0; idx < static_cast<long long>(n_products); ++idx) {
            const std::size_t fi = static_cast<std::size_t>(idx) / g.gens_.size();
            const std::size_t gi = static_cast<std::size_t>(idx) % g.gens_.size();
            products[static_cast<std::size_t>(idx)] = g.elems_[frontier[fi]] * g.gens_[gi];
        }
        std::vector<std::uint32_t> next;
        for (const MatH& m : products) {
            if (insert(m)) next.push_back(static_cast<std::uint32_t>(g.elems_.size() - 1));
        }
        frontier = std::move(next);
    }
    return g;
}

MatGroup MatGroup::from_elements(std::vector<MatH> elements) {
    MatGroup g;
    if (elements.empty()) throw std::invalid_argument("a group has at least one element");
    g.gens_ = elements;
    g.elems_ = std::move(elements);
    for (std::size_t idx = 0; idx < g.elems_.size(); ++idx) {
        g.index_.emplace(g.elems_[idx], static_cast<std::uint32_t>(idx));
        if (!g.elems_[idx].is_unitary()) g.unitary_ = false;
    }
    if (g.index_.size() != g.elems_.size()) {
        throw std::invalid_argument("duplicate elements in group element list");
    }
    return g;
}

bool MatGroup::contains_all(const MatGroup& other) const {
    for (const MatH& m : other.elems_) {
        if (!contains(m)) return false;
    }
    return true;
}

MatH MatGroup::inverse_of(const MatH& g) const {
    return unitary_ ? g.adjoint() : h_inverse(g);
}

std::uint64_t MatGroup::fingerprint() const {
    // Sum of element hashes: order independent and cheap to compare.
    std::uint64_t fp = 0;
    for (const MatH& m : elems_) fp += static_cast<std::uint64_t>(m.hash());
    return fp;
}

bool MatGroup::set_equal(const MatGroup& other) const {
    return order() == other.order() && contains_all(other);
}

LineSet line_orbit(const MatGroup& group, const Line& seed, std::size_t cap) {
    return line_orbit(std::span<const MatH>(group.generators()), seed, cap);
}

MatGroup line_stabilizer(const MatGroup& group, const Line& line) {
    std::vector<MatH> stab;
    for (const MatH& g : group.elements()) {
        if (apply(g, line) == line) stab.push_back(g);
    }
    return MatGroup::from_elements(std::move(stab));
}

MatGroup pointwise_stabilizer(const MatGroup& group, const VecH& v) {
    if (v.is_zero()) throw std::domain_error("pointwise stabilizer of the zero vector");
    std::vector<MatH> stab;
    for (const MatH& g : group.elements()) {
        if (g * v == v) stab.push_back(g);
    }
    return MatGroup::from_elements(std::move(stab));
}

bool verify_fixed_line(const MatGroup& group, const Line& line) {
    const VecH v = line.representative();
    const FieldElem n2 = norm2(v);
    const FieldElem target = n2 * n2;
    for (const MatH& g : group.elements()) {
        if (abs2_inner(v, g * v) != target) return false;
    }
    return true;
}

MatGroup normalizer(const MatGroup& group, const MatGroup& subgroup) {
    if (!group.contains_all(subgroup)) {
        throw std::invalid_argument("normalizer needs the subgroup inside the group");
    }
    std::vector<MatH> norm;
    for (const MatH& g : group.elements()) {
        const MatH gi = group.inverse_of(g);
        bool normalizes = true;
        // g H g^-1 = H once every generator of H lands back inside H.
        for (const MatH& h : subgroup.generators()) {
            if (!subgroup.contains(g * h * gi)) {
                normalizes = false;
                break;
            }
        }
        if (normalizes) norm.push_back(g);
    }
    return MatGroup::from_elements(std::move(norm));
}

std::size_t subgroup_conjugates(const MatGroup& group, const MatGroup& subgroup) {
    const MatGroup n = normalizer(group, subgroup);
    if (group.order() % n.order() != 0) {
        throw std::logic_error("normalizer order does not divide the group order");
    }
    return group.order() / n.order();
}

MatGroup conjugated_subgroup(const MatGroup& subgroup, const MatH& g, const MatH& g_inverse) {
    std::vector<MatH> conj;
    conj.reserve(subgroup.order());
    for (const MatH& h : subgroup.elements()) conj.push_back(g * h * g_inverse);
    return MatGroup::from_elements(std::move(conj));
}

std::vector<MatGroup> distinct_conjugates(const MatGroup& group, const MatGroup& subgroup) {
    const MatGroup n = normalizer(group, subgroup);
    std::vector<MatH> reps;
    for (const MatH& g : group.elements()) {
        bool fresh = true;
        // g and r give the same conjugate exactly when r^-1 g normalizes, so
        // the reps must run over left cosets of the normalizer. Right cosets
        // give the correct count but can repeat one conjugate and miss others.
        for (const MatH& r : reps) {
            if (n.contains(group.inverse_of(r) * g)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(g);
    }
    std::vector<MatGroup> out;
    out.reserve(reps.size());
    for (const MatH& g : reps) {
        out.push_back(conjugated_subgroup(subgroup, g, group.inverse_of(g)));
    }
    return out;
}

namespace {

// The sixteen field coordinates of a matrix, viewed as a row of the
// enveloping-algebra span.
std::array<FieldElem, 16> flatten(const MatH& m) {
    return {m.a.r, m.a.x, m.a.y, m.a.z, m.b.r, m.b.x, m.b.y, m.b.z,
            m.c.r, m.c.x, m.c.y, m.c.z, m.d.r, m.d.x, m.d.y, m.d.z};
}

}  // namespace

bool is_irreducible(const MatGroup& group) {
    // Incremental row reduction over the field; the group algebra spans all
    // of M_2(H) exactly when the commutant is the reals, i.e. the
    // representation is irreducible of quaternionic type or full.
    std::vector<std::array<FieldElem, 16>> basis;
    std::vector<int> pivots;
    for (const MatH& g : group.elements()) {
        std::array<FieldElem, 16> row = flatten(g);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const int p = pivots[b];
            if (row[static_cast<std::size_t>(p)].is_zero()) continue;
            const FieldElem factor = row[static_cast<std::size_t>(p)];
            for (int col = 0; col < 16; ++col) {
                row[static_cast<std::size_t>(col)] -=
                    factor * basis[b][static_cast<std::size_t>(col)];
            }
        }
        int pivot = -1;
        for (int col = 0; col < 16; ++col) {
            if (!row[static_cast<std::size_t>(col)].is_zero()) {
                pivot = col;
                break;
            }
        }
        if (pivot < 0) continue;
        const FieldElem scale = row[static_cast<std::size_t>(pivot)].inv();
        for (int col = 0; col < 16; ++col) {
            row[static_cast<std::size_t>(col)] *= scale;
        }
        basis.push_back(std::move(row));
        pivots.push_back(pivot);
        if (basis.size() == 16) return true;
    }
    return false;
}

namespace {

Perm permutation_of_lines(const MatH& g, const std::vector<Line>& points) {
    std::vector<int> img(points.size(), -1);
    for (std::size_t p = 0; p < points.size(); ++p) {
        const Line image = apply(g, points[p]);
        int target = -1;
        for (std::size_t q = 0; q < points.size(); ++q) {
            if (points[q] == image) {
                target = static_cast<int>(q);
                break;
            }
        }
        if (target < 0) {
            throw std::invalid_argument("group does not permute the given lines");
        }
        img[p] = target;
    }
    return Perm(std::move(img));
}

Perm permutation_of_pairs(const MatH& g, const std::vector<std::pair<Line, Line>>& pairs) {
    std::vector<int> img(pairs.size(), -1);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const Line first = apply(g, pairs[p].first);
        const Line second = apply(g, pairs[p].second);
        int target = -1;
        for (std::size_t q = 0; q < pairs.size(); ++q) {
            const auto& candidate = pairs[q];
            const bool same = (first == candidate.first && second == candidate.second) ||
                              (first == candidate.second && second == candidate.first);
            if (same) {
                target = static_cast<int>(q);
                break;
            }
        }
        if (target < 0) {
            throw std::invalid_argument("group does not permute the given pairs");
        }
        img[p] = target;
    }
    return Perm(std::move(img));
}

template <typename PermOf>
PermAction action_impl(const MatGroup& group, PermOf&& perm_of, int degree) {
    PermAction action;
    for (const MatH& g : group.generators()) {
        action.generator_images.push_back(perm_of(g));
    }
    action.image_order = perm_closure(action.generator_images).size();
    const Perm id = Perm::identity(degree);
    for (const MatH& g : group.elements()) {
        if (perm_of(g) == id) action.kernel_elements.push_back(g);
    }
    action.kernel_order = action.kernel_elements.size();
    if (action.image_order * action.kernel_order != group.order()) {
        throw std::logic_error("action image times kernel misses the group order");
    }
    return action;
}

}  // namespace

Perm line_permutation(const MatH& g, const std::vector<Line>& points) {
    return permutation_of_lines(g, points);
}

PermAction line_action(const MatGroup& group, const std::vector<Line>& points) {
    return action_impl(
        group, [&points](const MatH& g) { return permutation_of_lines(g, points); },
        static_cast<int>(points.size()));
}

Perm pair_permutation(const MatH& g, const std::vector<std::pair<Line, Line>>& pairs) {
    return permutation_of_pairs(g, pairs);
}

PermAction pair_action(const MatGroup& group,
                       const std::vector<std::pair<Line, Line>>& pairs) {
    return action_impl(
        group, [&pairs](const MatH& g) { return permutation_of_pairs(g, pairs); },
        static_cast<int>(pairs.size()));
}

}  // namespace qref
