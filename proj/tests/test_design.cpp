#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "qreflect/catalog.hpp"
#include "qreflect/design.hpp"

using namespace qref;

namespace {

LineSet mub10() {
    LineSet set;
    for (const Line& l : catalog::mub_lines()) set.insert(l);
    return set;
}

LineSet orbit16() {
    return line_orbit(catalog::group("P1"), line_of(catalog::vector("w")));
}

}  // namespace

TEST_CASE("design constants in quaternionic dimension two") {
    CHECK(design_constant(2, 1) == Rational(1, 2));
    CHECK(design_constant(2, 2) == Rational(3, 10));
    CHECK(design_constant(2, 3) == Rational(1, 5));
    CHECK(design_constant(2, 4) == Rational(1, 7));
    // One-dimensional line sets are trivially designs of every strength.
    CHECK(design_constant(1, 5) == 1);
    CHECK_THROWS_AS(design_constant(0, 1), std::domain_error);
    CHECK_THROWS_AS(design_constant(2, 0), std::domain_error);
}

TEST_CASE("frame potential of the ten basis lines") {
    const LineSet lines = mub10();
    // 10 diagonal terms, 10 orthogonal ordered pairs, 80 pairs at angle 1/2.
    CHECK(frame_potential(lines, 1) == FieldElem(50));
    CHECK(frame_potential(lines, 2) == FieldElem(30));
    CHECK(frame_potential(lines, 3) == FieldElem(20));
    CHECK(frame_potential(lines, 4) == FieldElem(15));
    CHECK(frame_potential(lines, 1, ExecMode::Serial) ==
          frame_potential(lines, 1, ExecMode::Parallel));
}

TEST_CASE("the ten lines are a design of strength exactly three") {
    const LineSet lines = mub10();
    CHECK(is_tt_design(lines, 1));
    CHECK(is_tt_design(lines, 2));
    CHECK(is_tt_design(lines, 3));
    CHECK_FALSE(is_tt_design(lines, 4));
    CHECK_THROWS_AS(is_tt_design(LineSet{}, 1), std::invalid_argument);

    LineSet two;
    two.insert(Line{Quat(0)});
    two.insert(Line{Quat::one()});
    CHECK_FALSE(is_tt_design(two, 1));
}

TEST_CASE("design potential over a group orbit") {
    // Half of the monomial core sends e1 to a unit multiple of itself, half
    // sends it to the orthogonal line, so the t = 2 mean is exactly 1/2.
    const FieldElem gap = design_potential(catalog::group("K"), VecH::e1(), 2);
    CHECK(gap == FieldElem(Rational(1, 2)) - FieldElem(Rational(3, 10)));
    // The full reflection groups push every orbit to a (3,3)-design.
    CHECK(design_potential(catalog::group("P1"), catalog::vector("w"), 3).is_zero());
    CHECK(design_potential(catalog::group("P1"), VecH::e1(), 3).is_zero());
    CHECK_FALSE(design_potential(catalog::group("P1"), VecH::e1(), 4).is_zero());
    CHECK(design_potential(catalog::group("P1"), VecH::e1(), 2, ExecMode::Serial) ==
          design_potential(catalog::group("P1"), VecH::e1(), 2, ExecMode::Parallel));
    CHECK_THROWS_AS(design_potential(catalog::group("K"), VecH{Quat(0), Quat(0)}, 1),
                    std::domain_error);
}

TEST_CASE("special bound for two-angle systems") {
    CHECK(special_bound(2, FieldElem(Rational(1, 5)), FieldElem(Rational(3, 5))) ==
          FieldElem(16));
    CHECK(special_bound(2, FieldElem(Rational(1, 4)), FieldElem(Rational(5, 8))) ==
          FieldElem(15));
    // Swapping the angles changes nothing.
    CHECK(special_bound(2, FieldElem(Rational(3, 5)), FieldElem(Rational(1, 5))) ==
          FieldElem(16));
    CHECK_THROWS_AS(
        special_bound(2, FieldElem(Rational(1, 100)), FieldElem(Rational(9, 10))),
        std::domain_error);
}

TEST_CASE("absolute bound") {
    CHECK(absolute_bound(2) == 20);
    CHECK(absolute_bound(3) == 105);
    CHECK_THROWS_AS(absolute_bound(0), std::domain_error);
}

TEST_CASE("report for the ten basis lines") {
    const DesignReport r = design_report(mub10());
    CHECK(r.line_count == 10);
    CHECK(r.t1);
    CHECK(r.t2);
    CHECK(r.t3);
    CHECK(r.strength == 3);
    REQUIRE(r.angles.size() == 2);
    CHECK(r.angles[0].is_zero());
    CHECK(r.angles[1] == FieldElem(Rational(1, 2)));
    CHECK(r.angle_count == 2);
    CHECK(r.has_orthogonal_pair);
    CHECK(r.regular_scheme);
    // Only one angle is nonzero, so the two-angle bound does not apply.
    CHECK_FALSE(r.special_applies);
    CHECK(r.absolute == 20);
    CHECK(r.within_absolute);
}

TEST_CASE("report for the sixteen lines meeting the special bound") {
    const LineSet lines = orbit16();
    REQUIRE(lines.size() == 16);
    const DesignReport r = design_report(lines);
    CHECK(r.t3);
    CHECK(r.strength == 3);
    REQUIRE(r.angles.size() == 2);
    CHECK(r.angles[0] == FieldElem(Rational(1, 5)));
    CHECK(r.angles[1] == FieldElem(Rational(3, 5)));
    CHECK_FALSE(r.has_orthogonal_pair);
    CHECK(r.regular_scheme);
    CHECK(r.special_applies);
    CHECK(r.special == FieldElem(16));
    CHECK(r.meets_special);
    CHECK(r.within_absolute);
}
