#include "qreflect/reflection.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace qref {

MatH make_reflection(const VecH& a, const Quat& xi) {
    if (a.is_zero()) throw std::domain_error("reflection root must be nonzero");
    if (xi == Quat::one()) throw std::domain_error("reflection scalar must differ from 1");
    if (xi.nrd() != FieldElem(1)) {
        throw std::domain_error("reflection scalar must be a unit: " + xi.str());
    }
    const FieldElem scale = norm2(a).inv();
    const Quat w = Quat::one() - xi;
    const MatH outer{a.v1 * w * a.v1.conj(), a.v1 * w * a.v2.conj(),
                     a.v2 * w * a.v1.conj(), a.v2 * w * a.v2.conj()};
    return MatH::identity() - outer.scaled(scale);
}

std::optional<Reflection> detect_reflection(const MatH& g) {
    const KernelInfo defect = kernel_rank(MatH::identity() - g);
    if (defect.rank != 1) return std::nullopt;
    const Line mirror = line_of(*defect.kernel_vector);
    const Line root = orthocomplement(mirror);
    const VecH a = root.representative();
    // g a = a xi, and <a, a xi> = <a, a> xi because the norm is real.
    const Quat xi = inner(a, g * a).scale(norm2(a).inv());
    if (xi == Quat::one()) {
        throw std::logic_error("defect-one matrix scaling its root by 1");
    }
    Reflection r;
    r.matrix = g;
    r.root = root;
    r.mirror = mirror;
    r.scalar = xi;
    r.order = mult_order(xi);
    return r;
}

std::vector<Reflection> reflection_census(const MatGroup& group, ExecMode mode) {
    const auto& elems = group.elements();
    std::vector<std::optional<Reflection>> slots(elems.size());
#pragma omp parallel for schedule(dynamic, 16) if (mode == ExecMode::Parallel)
    for (long long idx = 0; idx < static_cast<long long>(elems.size()); ++idx) {
        slots[static_cast<std::size_t>(idx)] =
            detect_reflection(elems[static_cast<std::size_t>(idx)]);
    }
    std::vector<Reflection> census;
    for (auto& slot : slots) {
        if (slot) census.push_back(std::move(*slot));
    }
    return census;
}

std::string unit_group_type(const std::vector<Quat>& units) {
    const std::size_t n = units.size();
    bool abelian = true;
    for (std::size_t i = 0; i < n && abelian; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (units[i] * units[j] != units[j] * units[i]) {
                abelian = false;
                break;
            }
        }
    }
    // A finite abelian group of quaternion units lies in a commutative
    // subfield, hence is cyclic.
    if (abelian) return "C" + std::to_string(n);
    if (n == 8) return "Q8";
    if (n == 24) return "2T";
    if (n == 48) return "2O";
    if (n == 120) return "2I";
    return "U" + std::to_string(n);
}

std::vector<ReflectionOrbit> reflection_type(const MatGroup& group,
                                             const std::vector<Reflection>& census) {
    // Scalars per root line, in census order.
    std::vector<Line> roots;
    std::vector<std::vector<Quat>> scalars;
    for (const Reflection& r : census) {
        std::size_t slot = roots.size();
        for (std::size_t idx = 0; idx < roots.size(); ++idx) {
            if (roots[idx] == r.root) {
                slot = idx;
                break;
            }
        }
        if (slot == roots.size()) {
            roots.push_back(r.root);
            scalars.push_back({Quat::one()});
        }
        scalars[slot].push_back(r.scalar);
    }

    LineSet root_set;
    for (const Line& l : roots) root_set.insert(l);

    std::vector<ReflectionOrbit> orbits;
    LineSet assigned;
    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
        if (assigned.contains(roots[idx])) continue;
        const LineSet orbit = line_orbit(group, roots[idx]);
        ReflectionOrbit data;
        data.orbit_size = orbit.size();
        data.scalar_group_order = scalars[idx].size();
        data.scalar_type = unit_group_type(scalars[idx]);
        data.roots = orbit.sorted();
        for (const Line& l : orbit.lines()) {
            if (!root_set.contains(l)) {
                throw std::logic_error("orbit of a root left the root set");
            }
            assigned.insert(l);
        }
        orbits.push_back(std::move(data));
    }
    std::stable_sort(orbits.begin(), orbits.end(),
                     [](const ReflectionOrbit& a, const ReflectionOrbit& b) {
                         if (a.orbit_size != b.orbit_size) return a.orbit_size < b.orbit_size;
                         return a.scalar_group_order > b.scalar_group_order;
                     });
    return orbits;
}

std::string reflection_type_string(const std::vector<ReflectionOrbit>& orbits) {
    std::string out;
    for (const ReflectionOrbit& orbit : orbits) {
        if (!out.empty()) out += " + ";
        out += std::to_string(orbit.orbit_size) + orbit.scalar_type;
    }
    return out.empty() ? "-" : out;
}

MatGroup monomial_subgroup(const std::vector<Reflection>& census) {
    // Greedily keep only reflections that enlarge the closure so far; a thin
    // generator list keeps the conjugacy scans over this group cheap.
    std::vector<MatH> gens;
    std::optional<MatGroup> sofar;
    for (const Reflection& r : census) {
        if (!r.matrix.is_monomial()) continue;
        if (sofar && sofar->contains(r.matrix)) continue;
        gens.push_back(r.matrix);
        sofar = MatGroup::closure(gens);
    }
    if (!sofar) throw std::invalid_argument("group has no monomial reflections");
    return std::move(*sofar);
}

ImprimitiveData imprimitive_data(const MatGroup& group, const std::vector<Reflection>& census) {
    for (const MatH& g : group.elements()) {
        if (!g.is_monomial()) {
            throw std::invalid_argument("imprimitive data needs a monomial group");
        }
    }
    ImprimitiveData data;
    data.antidiagonal_units.push_back(Quat::one());
    data.diagonal_scalars.push_back(Quat::one());
    for (const Reflection& r : census) {
        if (r.matrix.is_antidiagonal()) {
            // An antidiagonal reflection is forced into the shape [[0, b], [b^-1, 0]].
            const Quat& b = r.matrix.b;
            if (r.matrix.c != b.inv()) {
                throw std::logic_error("antidiagonal reflection outside the standard shape");
            }
            if (std::find(data.antidiagonal_units.begin(), data.antidiagonal_units.end(), b) ==
                data.antidiagonal_units.end()) {
                data.antidiagonal_units.push_back(b);
            }
        } else if (r.matrix.is_diagonal()) {
            if (r.matrix.d == Quat::one()) {
                const Quat& h = r.matrix.a;
                if (std::find(data.diagonal_scalars.begin(), data.diagonal_scalars.end(), h) ==
                    data.diagonal_scalars.end()) {
                    data.diagonal_scalars.push_back(h);
                }
            }
        }
    }
    return data;
}

std::vector<std::pair<Line, Line>> imprimitivity_systems(const MatGroup& group,
                                                         const std::vector<Line>& candidates) {
    std::vector<std::pair<Line, Line>> systems;
    LineSet tried;
    for (const Line& l : candidates) {
        if (tried.contains(l)) continue;
        const Line perp = orthocomplement(l);
        tried.insert(l);
        tried.insert(perp);
        bool preserved = true;
        for (const MatH& g : group.generators()) {
            const Line il = apply(g, l);
            const Line ip = apply(g, perp);
            const bool kept = (il == l && ip == perp) || (il == perp && ip == l);
            if (!kept) {
                preserved = false;
                break;
            }
        }
        if (preserved) {
            systems.emplace_back(std::min(l, perp), std::max(l, perp));
        }
    }
    return systems;
}

MatGroup two_reflection_group(const Quat& q1, const Quat& q2, std::size_t cap) {
    const MatH r1 = make_reflection(VecH::e1(), q1);
    const MatH r2 = make_reflection(VecH{Quat::one(), Quat::one()}, q2);
    return MatGroup::closure({r1, r2}, cap);
}

}  // namespace qref
