#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <unordered_set>

#include "qreflect/catalog.hpp"
#include "qreflect/reflection.hpp"

using namespace qref;

namespace {

using QuatSet = std::unordered_set<Quat, QuatHash>;

QuatSet as_set(const std::vector<Quat>& units) { return {units.begin(), units.end()}; }

const std::vector<Reflection>& census_of(const std::string& name) {
    static std::map<std::string, std::vector<Reflection>> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, reflection_census(catalog::group(name))).first;
    }
    return it->second;
}

}  // namespace

TEST_CASE("make_reflection and detect_reflection round trip") {
    const VecH diag{Quat::one(), Quat::one()};
    const MatH swap_neg = make_reflection(diag, Quat(-1));
    CHECK(swap_neg == MatH::antidiag(-Quat::one(), -Quat::one()));
    const auto found = detect_reflection(swap_neg);
    REQUIRE(found.has_value());
    CHECK(found->root == Line{Quat::one()});
    CHECK(found->mirror == Line{Quat(-1)});
    CHECK(found->scalar == Quat(-1));
    CHECK(found->order == 2);

    const MatH quarter = make_reflection(VecH::e1(), Quat::i());
    CHECK(quarter == MatH::diag(Quat::i(), Quat::one()));
    const auto q = detect_reflection(quarter);
    REQUIRE(q.has_value());
    CHECK(q->root == Line{Quat(0)});
    CHECK(q->mirror == Line::infinity());
    CHECK(q->scalar == Quat::i());
    CHECK(q->order == 4);

    // Rescaling the root and conjugating the scalar leaves the map unchanged.
    const Quat u = (Quat::one() + Quat::j()).scale(FieldElem::half_sqrt2());
    const VecH scaled{diag.v1 * u, diag.v2 * u};
    CHECK(make_reflection(scaled, u.inv() * Quat(-1) * u) == swap_neg);
    CHECK_THROWS_AS(make_reflection(VecH{Quat(0), Quat(0)}, Quat(-1)),
                    std::domain_error);
}

TEST_CASE("detect_reflection rejects non-reflections") {
    CHECK_FALSE(detect_reflection(MatH::scalar(Quat::one())).has_value());
    CHECK_FALSE(detect_reflection(MatH::scalar(Quat(-1))).has_value());
    // The order-ten symmetry moves both basis lines.
    CHECK_FALSE(detect_reflection(catalog::h_matrix("t")).has_value());
    CHECK_FALSE(detect_reflection(MatH::diag(Quat::i(), Quat::j())).has_value());
}

TEST_CASE("census sizes for the line-transitive chain") {
    CHECK(census_of("K").size() == 10);
    CHECK(census_of("P1").size() == 30);
    CHECK(census_of("P2").size() == 70);
    CHECK(census_of("P3").size() == 110);
}

TEST_CASE("reflection type strings") {
    CHECK(reflection_type_string(reflection_type(catalog::group("P1"), census_of("P1"))) ==
          "10C4");
    CHECK(reflection_type_string(reflection_type(catalog::group("P2"), census_of("P2"))) ==
          "10Q8");
    CHECK(reflection_type_string(reflection_type(catalog::group("P3"), census_of("P3"))) ==
          "10Q8 + 40C2");
    CHECK(reflection_type_string(reflection_type(catalog::group("K"), census_of("K"))) ==
          "2C2 + 2C2 + 2C2 + 2C2 + 2C2");
}

TEST_CASE("unit group type names") {
    CHECK(unit_group_type({Quat::one(), Quat(-1)}) == "C2");
    CHECK(unit_group_type({Quat::one(), Quat::i(), Quat(-1), -Quat::i()}) == "C4");
    CHECK(unit_group_type(catalog::unit_list("Q8")) == "Q8");
    CHECK(unit_group_type(catalog::unit_list("O48")) == "2O");
}

TEST_CASE("monomial reflection subgroups") {
    const MatGroup m1 = monomial_subgroup(census_of("P1"));
    CHECK(m1.order() == 64);
    const auto c1 = reflection_census(m1);
    CHECK(c1.size() == 14);
    CHECK(reflection_type_string(reflection_type(m1, c1)) == "2C4 + 4C2 + 4C2");

    const MatGroup m2 = monomial_subgroup(census_of("P2"));
    CHECK(m2.order() == 128);
    const auto c2 = reflection_census(m2);
    CHECK(c2.size() == 22);
    CHECK(reflection_type_string(reflection_type(m2, c2)) == "2Q8 + 8C2");

    const MatGroup m3 = monomial_subgroup(census_of("P3"));
    CHECK(m3.order() == 768);
    const auto c3 = reflection_census(m3);
    CHECK(c3.size() == 46);
    CHECK(reflection_type_string(reflection_type(m3, c3)) == "2Q8 + 8C2 + 24C2");

    // K is monomial already, so it recovers itself.
    const MatGroup mk = monomial_subgroup(census_of("K"));
    CHECK(mk.order() == 32);
    CHECK(mk.set_equal(catalog::group("K")));
}

TEST_CASE("standard imprimitive shape of the monomial subgroups") {
    const MatGroup mk = monomial_subgroup(census_of("K"));
    const ImprimitiveData dk = imprimitive_data(mk, reflection_census(mk));
    CHECK(as_set(dk.antidiagonal_units) == as_set(catalog::unit_list("Q8")));
    CHECK(as_set(dk.diagonal_scalars) == QuatSet{Quat::one(), Quat(-1)});

    const MatGroup m1 = monomial_subgroup(census_of("P1"));
    const ImprimitiveData d1 = imprimitive_data(m1, reflection_census(m1));
    CHECK(as_set(d1.antidiagonal_units) == as_set(catalog::unit_list("Q8")));
    CHECK(as_set(d1.diagonal_scalars) ==
          QuatSet{Quat::one(), Quat::i(), Quat(-1), -Quat::i()});

    const MatGroup m2 = monomial_subgroup(census_of("P2"));
    const ImprimitiveData d2 = imprimitive_data(m2, reflection_census(m2));
    CHECK(as_set(d2.antidiagonal_units) == as_set(catalog::unit_list("Q8")));
    CHECK(as_set(d2.diagonal_scalars) == as_set(catalog::unit_list("Q8")));

    // For the largest group the antidiagonal entries sweep out the full
    // 32-element system; its normalized copy is in the catalog as L32_O.
    const MatGroup m3 = monomial_subgroup(census_of("P3"));
    const ImprimitiveData d3 = imprimitive_data(m3, reflection_census(m3));
    CHECK(as_set(d3.antidiagonal_units) == as_set(catalog::unit_list("L32")));
    CHECK(as_set(d3.diagonal_scalars) == as_set(catalog::unit_list("Q8")));

    CHECK_THROWS_AS(imprimitive_data(catalog::group("P1"), census_of("P1")),
                    std::invalid_argument);
}

TEST_CASE("imprimitivity systems among the ten basis lines") {
    const auto lines = catalog::mub_lines();
    const auto k_systems = imprimitivity_systems(catalog::group("K"), lines);
    CHECK(k_systems.size() == 5);
    const auto p0_systems = imprimitivity_systems(catalog::group("P0"), lines);
    CHECK(p0_systems.size() == 3);
    CHECK(imprimitivity_systems(catalog::group("P1"), lines).empty());
    CHECK(imprimitivity_systems(catalog::group("P2"), lines).empty());
    CHECK(imprimitivity_systems(catalog::group("P3"), lines).empty());

    // K preserves exactly the five orthogonal pairs.
    const auto pairs = catalog::mub_pairs();
    for (const auto& p : pairs) {
        bool found = false;
        for (const auto& s : k_systems) {
            if ((s.first == p.first && s.second == p.second) ||
                (s.first == p.second && s.second == p.first)) {
                found = true;
                break;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("the two-reflection presentation") {
    const MatGroup g = two_reflection_group(Quat::i(), Quat::j());
    CHECK(g.order() == 320);
    CHECK(g.set_equal(MatGroup::closure(catalog::group_generators("G(i,j)"))));
    CHECK(reflection_census(g).size() == 30);
}
