#include "qreflect/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "qreflect/reflection.hpp"

namespace qref::catalog {

namespace {

FieldElem fe(long num, long den = 1) { return FieldElem(Rational(num, den)); }

// Quaternion from rational coordinates scaled by 1/den.
Quat q4(long r, long x, long y, long z, long den = 1) {
    return {fe(r, den), fe(x, den), fe(y, den), fe(z, den)};
}

Quat half_sqrt2_times(long r, long x, long y, long z) {
    const FieldElem hs = FieldElem::half_sqrt2();
    return {hs * fe(r), hs * fe(x), hs * fe(y), hs * fe(z)};
}

const Quat kOne = Quat::one();
const Quat kI = Quat::i();
const Quat kJ = Quat::j();
const Quat kK = Quat::k();

// (1/2)[[1+q2, -1+q2], [-1+q2, 1+q2]]: the reflection along (1, 1) with
// scalar q2, written out.
MatH base_point_reflection(const Quat& q2) {
    return make_reflection(VecH{kOne, kOne}, q2);
}

MatH fourier_f() {
    const FieldElem hs = FieldElem::half_sqrt2();
    return {Quat(1).scale(hs), Quat(1).scale(hs), Quat(1).scale(hs), Quat(-1).scale(hs)};
}

MatH cycle_t() {
    return {q4(0, 0, 1, -1, 2), q4(1, -1, 0, 0, 2), q4(0, 0, -1, -1, 2), q4(1, 1, 0, 0, 2)};
}

ComplexElem ce(long re_num, long im_num, long den = 1) {
    return {fe(re_num, den), fe(im_num, den)};
}

MatC from_rows(const std::array<std::array<ComplexElem, 4>, 4>& rows) {
    MatC m;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return m;
}

// (1+i)/sqrt2, the eighth root of unity scaling several generators.
ComplexElem omega8() {
    const FieldElem hs = FieldElem::half_sqrt2();
    return {hs, hs};
}

MatC complex_matrix_impl(const std::string& name) {
    const ComplexElem zero = ce(0, 0);
    const ComplexElem one = ce(1, 0);
    const ComplexElem im = ce(0, 1);
    if (name == "A1") return MatC::diag(one, one, -one, -one);
    if (name == "A2") return MatC::diag(one, -one, -one, one);
    if (name == "A3") {
        return from_rows({{{zero, one, zero, zero},
                           {one, zero, zero, zero},
                           {zero, zero, zero, one},
                           {zero, zero, one, zero}}});
    }
    if (name == "A4") {
        return from_rows({{{zero, zero, one, zero},
                           {zero, zero, zero, one},
                           {one, zero, zero, zero},
                           {zero, one, zero, zero}}});
    }
    if (name == "S") return MatC::diag(im, im, one, one).scaled(omega8());
    if (name == "T") {
        return from_rows({{{-im, zero, zero, im},
                           {zero, one, one, zero},
                           {one, zero, zero, one},
                           {zero, -im, im, zero}}})
            .scaled(ce(1, 1, 2));
    }
    if (name == "R") {
        return from_rows({{{one, im, zero, zero},
                           {im, one, zero, zero},
                           {zero, zero, im, -one},
                           {zero, zero, one, -im}}})
            .scaled(ComplexElem(FieldElem::half_sqrt2(), FieldElem(0)));
    }
    if (name == "A") return MatC::diag(one, im, im, one).scaled(omega8());
    if (name == "B") return MatC::diag(one, one, one, -one).scaled(omega8());
    if (name == "P_perm") {
        return from_rows({{{zero, zero, zero, one},
                           {zero, one, zero, zero},
                           {zero, zero, one, zero},
                           {one, zero, zero, zero}}});
    }
    throw std::out_of_range("unknown complex matrix '" + name + "'");
}

VecH vector_impl(const std::string& name) {
    const FieldElem r2 = FieldElem::sqrt2();
    const FieldElem r3 = FieldElem::sqrt3();
    const FieldElem r5 = FieldElem::sqrt5();
    if (name == "w") {
        return {Quat(FieldElem(1) + r5, FieldElem(0), FieldElem(0), FieldElem(0)),
                q4(1, 1, 1, 1)};
    }
    if (name == "wperp") {
        return {q4(-1, 1, 1, 1),
                Quat(FieldElem(1) + r5, FieldElem(0), FieldElem(0), FieldElem(0))};
    }
    if (name == "f20a") return {Quat(r2, FieldElem(0), FieldElem(0), FieldElem(0)), q4(1, 1, 0, 0)};
    if (name == "f20b") return {Quat(r2, FieldElem(0), FieldElem(0), FieldElem(0)), q4(1, 0, 1, 0)};
    if (name == "f80") return {Quat(r3, FieldElem(0), FieldElem(0), FieldElem(0)), q4(1, 1, 1, 0)};
    if (name == "f80b") return {q4(-1, 1, 1, 0), Quat(r3, FieldElem(0), FieldElem(0), FieldElem(0))};
    if (name == "f80_P3") return {q4(3, 0, 0, 0), q4(1, 1, 1, 0)};
    throw std::out_of_range("unknown vector '" + name + "'");
}

const std::vector<Quat>& q8_units() {
    static const std::vector<Quat> units = {kOne, -kOne, kI, -kI, kJ, -kJ, kK, -kK};
    return units;
}

LineSet roots40_impl() {
    LineSet lines;
    // Slopes (p + q)/sqrt2 over unordered pairs of distinct axes with all
    // sign choices; 24 distinct sums p + q with p + q != 0.
    const std::array<Quat, 4> axes = {kOne, kI, kJ, kK};
    const FieldElem hs = FieldElem::half_sqrt2();
    for (std::size_t ia = 0; ia < axes.size(); ++ia) {
        for (std::size_t ib = ia + 1; ib < axes.size(); ++ib) {
            for (int sa = 0; sa < 2; ++sa) {
                for (int sb = 0; sb < 2; ++sb) {
                    const Quat p = sa == 0 ? axes[ia] : -axes[ia];
                    const Quat q = sb == 0 ? axes[ib] : -axes[ib];
                    lines.insert(Line((p + q).scale(hs)));
                }
            }
        }
    }
    // Slopes of (1 + sqrt2, q) and (q, 1 + sqrt2) for q in the quaternion group.
    const FieldElem one_plus_r2 = FieldElem(1) + FieldElem::sqrt2();
    const Quat scale(one_plus_r2, FieldElem(0), FieldElem(0), FieldElem(0));
    for (const Quat& q : q8_units()) {
        lines.insert(line_of(VecH{scale, q}));
    }
    for (const Quat& q : q8_units()) {
        lines.insert(line_of(VecH{q, scale}));
    }
    return lines;
}

}  // namespace

std::vector<Line> mub_lines() {
    std::vector<Line> lines;
    lines.push_back(Line(Quat(0)));   // span of (1, 0)
    lines.push_back(Line::infinity()); // span of (0, 1)
    for (const Quat& u : {kOne, kI, kJ, kK}) {
        lines.push_back(Line(u));
        lines.push_back(Line(-u));
    }
    return lines;
}

std::vector<std::pair<Line, Line>> mub_pairs() {
    const std::vector<Line> lines = mub_lines();
    std::vector<std::pair<Line, Line>> pairs;
    for (std::size_t idx = 0; idx + 1 < lines.size(); idx += 2) {
        pairs.emplace_back(lines[idx], lines[idx + 1]);
    }
    return pairs;
}

Quat unit(const std::string& name) {
    static const std::map<std::string, Quat> units = {
        {"1", kOne}, {"-1", -kOne}, {"i", kI}, {"-i", -kI},
        {"j", kJ},   {"-j", -kJ},   {"k", kK}, {"-k", -kK}};
    const auto it = units.find(name);
    if (it == units.end()) throw std::out_of_range("unknown unit quaternion '" + name + "'");
    return it->second;
}

MatH h_matrix(const std::string& name) {
    if (name == "F") return fourier_f();
    if (name == "t") return cycle_t();
    throw std::out_of_range("unknown matrix '" + name + "'");
}

MatC complex_matrix(const std::string& name) { return complex_matrix_impl(name); }

VecH vector(const std::string& name) { return vector_impl(name); }

LineSet line_set(const std::string& name) {
    if (name == "mub10") {
        LineSet s;
        for (const Line& l : mub_lines()) s.insert(l);
        return s;
    }
    if (name == "roots40") return roots40_impl();
    throw std::out_of_range("unknown line set '" + name + "'");
}

std::vector<Quat> unit_list(const std::string& name) {
    const Quat ui = half_sqrt2_times(1, 1, 0, 0);
    const Quat uj = half_sqrt2_times(1, 0, 1, 0);
    const Quat uk = half_sqrt2_times(1, 0, 0, 1);
    if (name == "Q8") return q8_units();
    if (name == "L32") return reflection_system_closure({kOne, ui, uj, uk});
    if (name == "L32_O") {
        // The same system normalized so that 1 is a member with the identity
        // as its reflection: every element scaled by (1+i)/sqrt2 inverse.
        const Quat factor = ui.inv();
        std::vector<Quat> scaled;
        for (const Quat& b : unit_list("L32")) scaled.push_back(factor * b);
        return scaled;
    }
    if (name == "L20") return reflection_system_closure({kOne, ui, uj, kK});
    if (name == "L18") return reflection_system_closure({kOne, ui, uj});
    if (name == "L14") {
        return reflection_system_closure({kOne, half_sqrt2_times(0, 1, -1, 0),
                                          half_sqrt2_times(0, 1, 0, -1),
                                          half_sqrt2_times(0, 0, 1, 1)});
    }
    if (name == "O48") return unit_closure({ui, q4(1, 1, 1, 1, 2)});
    throw std::out_of_range("unknown unit list '" + name + "'");
}

std::vector<MatH> group_generators(const std::string& name) {
    if (name == "K") {
        return {MatH::diag(-kOne, kOne), MatH::antidiag(kOne, kOne), MatH::antidiag(kI, -kI),
                MatH::antidiag(kJ, -kJ), MatH::antidiag(kK, -kK)};
    }
    if (name == "P0") {
        return {MatH::antidiag(kOne, kOne), MatH::antidiag(kI, -kI), MatH::antidiag(kJ, -kJ),
                fourier_f()};
    }
    if (name == "P1") return {MatH::diag(kI, kOne), base_point_reflection(kJ)};
    if (name == "P2") {
        return {MatH::diag(kI, kOne), MatH::diag(kJ, kOne), base_point_reflection(kJ)};
    }
    if (name == "P3") return {MatH::diag(kI, kOne), MatH::diag(kJ, kOne), fourier_f()};
    if (name == "H32") {
        return {MatH::diag(kI, kOne), MatH::diag(kI, kI), MatH::diag(kJ, kJ)};
    }
    if (name == "H20") {
        return {MatH::diag(kJ, kK),
                MatH{q4(0, 1, -1, 0, 2), q4(0, 1, -1, 0, 2), q4(0, 1, -1, 0, 2),
                     q4(0, -1, 1, 0, 2)}};
    }
    if (name == "H16a") return {MatH::diag(kJ, kK), MatH::antidiag(kJ, kJ)};
    if (name == "H16b") {
        return {MatH::diag(kJ, kJ),
                MatH{q4(0, 1, 0, -1, 2), q4(1, 0, -1, 0, 2), q4(1, 0, 1, 0, 2),
                     q4(0, -1, 0, -1, 2)}};
    }
    if (name == "H80_P2") {
        return {MatH::antidiag(q4(1, -1, -1, 1, 2), q4(1, 1, 1, 1, 2)),
                MatH{q4(0, 1, 1, 0, 2), q4(0, 1, -1, 0, 2), q4(0, 1, -1, 0, 2),
                     q4(0, 1, 1, 0, 2)}};
    }
    if (name == "H48_P3") {
        return {MatH::scalar(half_sqrt2_times(0, 1, 1, 0)),
                MatH{q4(1, 1, 0, 0, 2), q4(1, 1, 0, 0, 2), q4(-1, 1, 0, 0, 2),
                     q4(1, -1, 0, 0, 2)}};
    }
    if (name == "G8_family") {
        return {MatH::antidiag(kK, kK),
                MatH{q4(0, 1, 0, 1, 2), q4(1, 0, 1, 0, 2), q4(-1, 0, 1, 0, 2),
                     q4(0, 1, 0, -1, 2)}};
    }
    if (name == "G8_diag") return {MatH::diag(kI, kI), MatH::antidiag(kJ, kJ)};
    if (name.size() >= 6 && name.substr(0, 2) == "G(" && name.back() == ')') {
        const std::string body = name.substr(2, name.size() - 3);
        const std::size_t comma = body.find(',');
        if (comma == std::string::npos) {
            throw std::out_of_range("expected G(q1,q2), got '" + name + "'");
        }
        const Quat q1 = unit(body.substr(0, comma));
        const Quat q2 = unit(body.substr(comma + 1));
        return {make_reflection(VecH::e1(), q1), base_point_reflection(q2)};
    }
    throw std::out_of_range("unknown group '" + name + "'");
}

const MatGroup& group(const std::string& name) {
    static std::mutex lock;
    static std::map<std::string, MatGroup> cache;
    const std::scoped_lock guard(lock);
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, MatGroup::closure(group_generators(name))).first;
    }
    return it->second;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> all = {
        {"K", "group", "common monomial core of the groups below; order 32"},
        {"P0", "group", "K extended by the two-point Fourier reflection; order 64"},
        {"P1", "group", "smallest of the three line-transitive groups; order 320"},
        {"P2", "group", "middle group of the chain; order 1920"},
        {"P3", "group", "largest group of the chain; order 3840"},
        {"G(q1,q2)", "group", "two-reflection presentation, e.g. G(i,j); order 320"},
        {"F", "matrix", "two-point Fourier reflection, order 2"},
        {"t", "matrix", "order-ten element cycling the five bases"},
        {"A1", "complex-matrix", "diagonal sign generator of the rank-four core"},
        {"A2", "complex-matrix", "diagonal sign generator of the rank-four core"},
        {"A3", "complex-matrix", "pair-swap generator of the rank-four core"},
        {"A4", "complex-matrix", "half-swap generator of the rank-four core"},
        {"S", "complex-matrix", "scaled diagonal collineation generator"},
        {"T", "complex-matrix", "order-five-related collineation generator"},
        {"R", "complex-matrix", "collineation generator; its square extends no. 13 to no. 14"},
        {"A", "complex-matrix", "collineation generator extending no. 16 to no. 18"},
        {"B", "complex-matrix", "collineation generator; SB extends no. 14 to no. 16"},
        {"P_perm", "complex-matrix", "coordinate swap conjugating into block form"},
        {"H32", "group", "diagonal subgroup; fixes the first two basis lines"},
        {"H20", "group", "stabilizer of the sixteen-line fiducial in P1"},
        {"H16a", "group", "stabilizer of the first twenty-line fiducial in P1"},
        {"H16b", "group", "stabilizer of the second twenty-line fiducial in P1"},
        {"H80_P2", "group", "order-24 reducible subgroup of P2 giving eighty lines"},
        {"H48_P3", "group", "order-48 reducible subgroup of P3 giving eighty lines"},
        {"G8_family", "group", "order-8 group fixing a one-parameter family of lines"},
        {"G8_diag", "group", "order-8 example for diagonalizing a two-generator group"},
        {"w", "vector", "fiducial of the sixteen-line system meeting the special bound"},
        {"wperp", "vector", "orthogonal partner of w"},
        {"f20a", "vector", "fiducial of one twenty-line half of the root lines"},
        {"f20b", "vector", "fiducial of the other twenty-line half"},
        {"f80", "vector", "fiducial of the eighty-line system with sixths angles"},
        {"f80b", "vector", "partner fiducial of f80 under the orthogonal split"},
        {"f80_P3", "vector", "fiducial of the eighty-line system with eighths angles"},
        {"mub10", "line-set", "the ten lines of the five unbiased bases"},
        {"roots40", "line-set", "the forty order-two root lines"},
        {"Q8", "unit-list", "the eight-element reflection system of the first two groups"},
        {"L32", "unit-list", "the thirty-two-element reflection system of the largest group"},
        {"L32_O", "unit-list", "L32 normalized by the scalar (1-i)/sqrt2"},
        {"L20", "unit-list", "twenty-element subsystem of L32"},
        {"L18", "unit-list", "eighteen-element subsystem of L32"},
        {"L14", "unit-list", "fourteen-element subsystem of L32"},
        {"O48", "unit-list", "binary octahedral group generated by L32"},
    };
    return all;
}

bool has_entry(const std::string& name) {
    for (const Entry& e : entries()) {
        if (e.name == name) return true;
    }
    return false;
}

std::vector<Check> verify_catalog() {
    std::vector<Check> checks;
    auto add = [&checks](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({name, pass, detail});
    };

    const std::map<std::string, std::size_t> group_orders = {
        {"K", 32},      {"P0", 64},        {"P1", 320},     {"P2", 1920},
        {"P3", 3840},   {"H32", 32},       {"H20", 20},     {"H16a", 16},
        {"H16b", 16},   {"H80_P2", 24},    {"H48_P3", 48},  {"G8_family", 8},
        {"G8_diag", 8}, {"G(i,j)", 320},
    };
    for (const auto& [name, expected] : group_orders) {
        const auto gens = group_generators(name);
        bool unitary = true;
        for (const MatH& g : gens) unitary = unitary && g.is_unitary();
        const MatGroup g = MatGroup::closure(gens);
        add("order(" + name + ") == " + std::to_string(expected),
            unitary && g.order() == expected,
            "got " + std::to_string(g.order()) + (unitary ? "" : ", non-unitary generator"));
    }

    add("F is an order-2 reflection", [] {
        const MatH f = h_matrix("F");
        const auto r = detect_reflection(f);
        return f.is_unitary() && r && r->order == 2 && mat_order(f) == 2;
    }(), "");
    add("t is unitary of order 10", [] {
        const MatH t = h_matrix("t");
        return t.is_unitary() && mat_order(t) == 10;
    }(), "");

    for (const std::string name : {"A1", "A2", "A3", "A4", "S", "T", "R", "A", "B", "P_perm"}) {
        add(name + " is unitary", complex_matrix(name).is_unitary(), "");
    }

    const std::map<std::string, std::string> fixed_by = {
        {"w", "H20"}, {"f20a", "H16a"}, {"f20b", "H16b"}, {"f80", "H80_P2"},
        {"f80_P3", "H48_P3"}};
    for (const auto& [vec_name, group_name] : fixed_by) {
        const MatGroup g = MatGroup::closure(group_generators(group_name));
        const Line l = line_of(vector(vec_name));
        add(group_name + " fixes the line of " + vec_name, verify_fixed_line(g, l), "");
    }

    add("mub10 has ten lines", line_set("mub10").size() == 10, "");
    add("roots40 has forty lines", line_set("roots40").size() == 40, "");

    const std::map<std::string, std::size_t> unit_list_sizes = {
        {"Q8", 8},  {"L32", 32}, {"L32_O", 32}, {"L20", 20},
        {"L18", 18}, {"L14", 14}, {"O48", 48},
    };
    for (const auto& [name, expected] : unit_list_sizes) {
        add("|" + name + "| == " + std::to_string(expected),
            unit_list(name).size() == expected, "");
    }
    return checks;
}

}  // namespace qref::catalog
