#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qreflect/catalog.hpp"
#include "qreflect/group.hpp"
#include "qreflect/lines.hpp"
#include "qreflect/reflection.hpp"
#include "qreflect/symplectic.hpp"

using namespace qref;

namespace {

MatC named_c(const std::string& name) { return catalog::complex_matrix(name); }

// X conjugated by the swap involution that moves the generators into block
// form. The conjugator is its own inverse.
MatH swapped(const MatC& x) {
    const MatC p = named_c("P_perm");
    return c_to_h(p * x * p);
}

}  // namespace

TEST_CASE("block form round trip") {
    const MatH f = catalog::h_matrix("F");
    const MatH t = catalog::h_matrix("t");
    for (const MatH& m : {f, t}) {
        const MatC c = h_to_c(m);
        CHECK(is_symplectic(c));
        CHECK(c.is_unitary());
        CHECK(c_to_h(c) == m);
    }
    // Traces transfer as twice the real part, so they are always real.
    CHECK(has_real_trace(h_to_c(f)));
    CHECK(has_real_trace(h_to_c(t)));
}

TEST_CASE("matrices outside the block form are rejected") {
    // T has a real trace but is not in block form as given; only its
    // conjugate under the swap is.
    const MatC t_complex = named_c("T");
    CHECK(has_real_trace(t_complex));
    CHECK_FALSE(is_symplectic(t_complex));
    CHECK_THROWS_AS(c_to_h(t_complex), std::domain_error);
    CHECK(is_symplectic(h_to_c(swapped(t_complex))));
}

TEST_CASE("traces of the extending generators") {
    // The unscaled generators beyond the core pick up imaginary traces; the
    // usable extensions are the ones that can be rescaled back to real.
    CHECK_FALSE(has_real_trace(named_c("A")));
    CHECK_FALSE(has_real_trace(named_c("S")));
    CHECK_FALSE(has_real_trace(named_c("B")));
    CHECK_FALSE(has_real_trace(named_c("B") * named_c("R")));
    CHECK(has_real_trace(named_c("A").times_i()));
    CHECK(has_real_trace(named_c("R")));
    CHECK(has_real_trace(named_c("R") * named_c("R")));
    CHECK(has_real_trace(named_c("S") * named_c("B")));
}

TEST_CASE("swap conjugation sends the core to the monomial group") {
    const Quat one = Quat::one();
    const Quat i = Quat::i();
    const Quat k = Quat::k();
    CHECK(swapped(named_c("A1")) == MatH::diag(-one, one));
    CHECK(swapped(named_c("A2").times_i()) == MatH::diag(i, -i));
    CHECK(swapped(named_c("A3").times_i()) == MatH::diag(-k, -k));
    CHECK(swapped(named_c("A4")) == MatH::antidiag(one, one));

    // The four images generate the same order-32 group as the catalog core.
    const MatGroup image = MatGroup::closure(
        {swapped(named_c("A1")), swapped(named_c("A2").times_i()),
         swapped(named_c("A3").times_i()), swapped(named_c("A4"))});
    CHECK(image.set_equal(catalog::group("K")));
}

TEST_CASE("swap conjugation of the individual extensions") {
    const FieldElem s = FieldElem::half_sqrt2();
    const Quat one = Quat::one();
    const Quat i = Quat::i();

    CHECK(swapped(named_c("T")) == catalog::h_matrix("t"));
    CHECK(swapped(named_c("R") * named_c("R")) == MatH::diag(-one, -Quat::k()));
    CHECK(swapped(named_c("S") * named_c("B")) == MatH::diag(-i, -one));
    // R and iA land on diagonals with entries of norm one over sqrt2.
    const Quat r_top{FieldElem(0), -s, -s, FieldElem(0)};
    const Quat r_bot{s, FieldElem(0), FieldElem(0), -s};
    CHECK(swapped(named_c("R")) == MatH::diag(r_top, r_bot));
    const Quat a_top{-s, s, FieldElem(0), FieldElem(0)};
    const Quat a_bot{-s, -s, FieldElem(0), FieldElem(0)};
    CHECK(swapped(named_c("A").times_i()) == MatH::diag(a_top, a_bot));
}

TEST_CASE("the order-ten element cycles five slopes") {
    const MatH t = catalog::h_matrix("t");
    CHECK(mat_order(t) == 10);
    CHECK_FALSE(detect_reflection(t).has_value());

    const Quat cycle[5] = {Quat(0), -Quat::i(), Quat::k(), Quat(-1), Quat::j()};
    VecH v = VecH::e1();
    for (int step = 0; step < 5; ++step) {
        CHECK(line_of(v) == Line(cycle[step]));
        v = t * v;
    }
    CHECK(line_of(v) == Line(cycle[0]));

    // Multiplying by a diagonal reflection collapses it to an order-four
    // reflection along the slope -1 line.
    const auto folded = detect_reflection(t * MatH::diag(Quat::k(), Quat::one()));
    REQUIRE(folded.has_value());
    CHECK(folded->order == 4);
    CHECK(folded->root == Line(Quat(-1)));
    CHECK(folded->mirror == Line(Quat::one()));
    CHECK(folded->scalar == Quat::i());
}

TEST_CASE("indicator separates the two order-32 complex groups") {
    const MatC a1 = named_c("A1");
    const MatC a2 = named_c("A2");
    const MatC a3 = named_c("A3");
    const MatC a4 = named_c("A4");

    const CMatGroup plain = CMatGroup::closure({a1, a2, a3, a4});
    const CMatGroup scaled = CMatGroup::closure({a1, a2.times_i(), a3.times_i(), a4});
    CHECK(plain.order() == 32);
    CHECK(scaled.order() == 32);

    // Scaling two generators by i flips the sum of squared traces from +1
    // (real type) to -1 (quaternionic type).
    CHECK(fs_indicator(plain) == Rational(1));
    CHECK(fs_indicator(scaled) == Rational(-1));
    CHECK(fs_indicator(plain, ExecMode::Serial) == Rational(1));
    CHECK(fs_indicator(scaled, ExecMode::Serial) == Rational(-1));

    CHECK_THROWS_AS(CMatGroup::closure({}), std::invalid_argument);
}

TEST_CASE("quaternionic lifts of the four collineation groups") {
    const MatGroup g13 = quaternionify(CollineationGroup::N13);
    const MatGroup g14 = quaternionify(CollineationGroup::N14);
    const MatGroup g16 = quaternionify(CollineationGroup::N16);
    const MatGroup g18 = quaternionify(CollineationGroup::N18);

    CHECK(g13.order() == 160);
    CHECK(g14.order() == 320);
    CHECK(g16.order() == 1920);
    CHECK(g18.order() == 3840);

    CHECK(g14.contains_all(g13));
    CHECK(g16.contains_all(g14));
    CHECK(g18.contains_all(g16));

    CHECK(reflection_census(g14).size() == 30);
    CHECK(reflection_census(g16).size() == 70);
    CHECK(reflection_census(g18).size() == 110);

    // The first lift is the two-reflection group on the scalar pair (k, i),
    // a conjugate of the catalog's base group rather than the group itself.
    CHECK(g14.set_equal(two_reflection_group(Quat::k(), Quat::i())));
    CHECK_FALSE(g14.set_equal(catalog::group("P1")));
    CHECK(g16.set_equal(catalog::group("P2")));
    CHECK(g18.set_equal(catalog::group("P3")));
}

TEST_CASE("the smallest lift is not a reflection group") {
    const MatGroup g13 = quaternionify(CollineationGroup::N13);
    const MatGroup& k = catalog::group("K");
    CHECK(g13.contains_all(k));
    CHECK(g13.contains(catalog::h_matrix("t")));

    // Its reflections are exactly the ten of the monomial core, so they
    // close onto a proper subgroup of index five.
    const auto census = reflection_census(g13);
    CHECK(census.size() == 10);
    std::vector<MatH> mirrors;
    mirrors.reserve(census.size());
    for (const Reflection& r : census) mirrors.push_back(r.matrix);
    const MatGroup span = MatGroup::closure(mirrors);
    CHECK(span.set_equal(k));
    CHECK(g13.order() == 5 * span.order());
}
