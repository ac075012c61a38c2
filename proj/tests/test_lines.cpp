#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "qreflect/catalog.hpp"
#include "qreflect/lines.hpp"

using namespace qref;

TEST_CASE("lines are spans, not vectors") {
    const VecH v{Quat(2), Quat::i() + Quat::j()};
    const VecH w = v.scaled(Quat::k() - Quat(1));  // same span, other representative
    CHECK(line_of(v) == line_of(w));
    CHECK(line_of(VecH::e1()) == Line(Quat(0)));
    CHECK(line_of(VecH::e2()) == Line::infinity());
    CHECK(line_of(VecH{Quat::j(), Quat::k()}) == Line(Quat::k() * Quat::j().inv()));
    CHECK_THROWS_AS(line_of(VecH{Quat(0), Quat(0)}), std::domain_error);
    CHECK_THROWS_AS(Line::infinity().slope(), std::logic_error);
}

TEST_CASE("representative spans the line") {
    const Line l(Quat::i() - Quat(3));
    CHECK(line_of(l.representative()) == l);
    CHECK(line_of(Line::infinity().representative()) == Line::infinity());
}

TEST_CASE("matrix action on lines") {
    const FieldElem h = FieldElem::half_sqrt2();
    const MatH f{Quat(1).scale(h), Quat(1).scale(h), Quat(1).scale(h), Quat(-1).scale(h)};
    // F swaps the (1,0) line with the (1,1) line.
    CHECK(apply(f, Line(Quat(0))) == Line(Quat(1)));
    CHECK(apply(f, Line(Quat(1))) == Line(Quat(0)));
    CHECK(apply(f, Line::infinity()) == Line(Quat(-1)));
    // Group action property on a handful of lines.
    const MatH d = MatH::diag(Quat::i(), Quat::j());
    for (const Line& l : {Line(Quat::i()), Line::infinity(), Line(Quat(0)), Line(Quat::k())}) {
        CHECK(apply(f * d, l) == apply(f, apply(d, l)));
    }
}

TEST_CASE("angles") {
    CHECK(angle(Line(Quat(0)), Line::infinity()) == FieldElem(0));
    CHECK(angle(Line(Quat(0)), Line(Quat(0))) == FieldElem(1));
    // |<(1,0),(1,1)>|^2 / (1*2) = 1/2.
    CHECK(angle(Line(Quat(0)), Line(Quat(1))) == FieldElem(Rational(1, 2)));
    CHECK(angle(Line(Quat(1)), Line(Quat::i())) == FieldElem(Rational(1, 2)));
    // Symmetric and scale invariant.
    const Line a(Quat::i() + Quat::k());
    const Line b(Quat(2) - Quat::j());
    CHECK(angle(a, b) == angle(b, a));
}

TEST_CASE("orthocomplement") {
    CHECK(orthocomplement(Line(Quat(0))) == Line::infinity());
    CHECK(orthocomplement(Line::infinity()) == Line(Quat(0)));
    const Line l(Quat::i() + Quat(1));
    CHECK(angle(l, orthocomplement(l)) == FieldElem(0));
    CHECK(orthocomplement(orthocomplement(l)) == l);
}

TEST_CASE("line set semantics") {
    LineSet s;
    CHECK(s.insert(Line(Quat(0))));
    CHECK_FALSE(s.insert(Line(Quat(0))));
    CHECK(s.insert(Line::infinity()));
    CHECK(s.size() == 2);
    CHECK(s.contains(Line::infinity()));

    LineSet t;
    t.insert(Line::infinity());
    t.insert(Line(Quat(0)));
    CHECK(s.set_equal(t));

    LineSet u;
    u.insert(Line(Quat::i()));
    CHECK(u.disjoint_from(s));
    CHECK(s.set_union(u).size() == 3);
    CHECK(s.set_union(u).contains(Line(Quat::i())));
}

TEST_CASE("angle_set collects distinct values in increasing order") {
    const LineSet mubs = catalog::line_set("mub10");
    const auto angles = mubs.angle_set();
    REQUIRE(angles.size() == 2);
    CHECK(angles[0] == FieldElem(0));
    CHECK(angles[1] == FieldElem(Rational(1, 2)));
}

TEST_CASE("orbit of the first basis line") {
    const FieldElem h = FieldElem::half_sqrt2();
    const MatH f{Quat(1).scale(h), Quat(1).scale(h), Quat(1).scale(h), Quat(-1).scale(h)};
    const MatH di = MatH::diag(Quat::i(), Quat::one());
    const MatH dj = MatH::diag(Quat::j(), Quat::one());

    // Two generators only reach the six lines with slopes in the i-axis closure.
    const std::vector<MatH> two = {f, di};
    CHECK(line_orbit(two, Line(Quat(0))).size() == 6);

    // All three reach the full ten.
    const std::vector<MatH> three = {f, di, dj};
    const LineSet orbit = line_orbit(three, Line(Quat(0)));
    CHECK(orbit.size() == 10);
    CHECK(orbit.set_equal(catalog::line_set("mub10")));
}

TEST_CASE("orbit cap throws") {
    // A lower shear moves slopes 0, 1, 2, ... without end.
    const MatH shear{Quat(1), Quat(0), Quat(1), Quat(1)};
    const std::vector<MatH> gens = {shear};
    CHECK_THROWS_AS(line_orbit(gens, Line(Quat(0)), 16), CapExceeded);
}

TEST_CASE("text round trip") {
    CHECK(parse_line("inf") == Line::infinity());
    const Line l(Quat(FieldElem(1), FieldElem::half_sqrt2(), FieldElem(0), FieldElem(-2)));
    CHECK(parse_line(l.str()) == l);
}
