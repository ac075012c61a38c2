#include "qreflect/design.hpp"

#include <stdexcept>

#include "qreflect/parallel.hpp"

namespace qref {

Rational design_constant(int dim, int strength) {
    if (dim < 1 || strength < 1) throw std::domain_error("design constant needs d, t >= 1");
    Rational c(1);
    for (int j = 0; j < strength; ++j) {
        Rational factor(2 + j, 2 * dim + j);
        factor.canonicalize();  // two-argument mpq constructors do not reduce
        c *= factor;
    }
    return c;
}

namespace {

FieldElem field_pow(const FieldElem& base, int exponent) {
    FieldElem out(1);
    for (int n = 0; n < exponent; ++n) out *= base;
    return out;
}

}  // namespace

FieldElem frame_potential(const LineSet& lines, int strength, ExecMode mode) {
    const auto& order = lines.lines();
    const long long n = static_cast<long long>(order.size());
    std::vector<FieldElem> partial(static_cast<std::size_t>(max_threads()));
#pragma omp parallel for schedule(dynamic, 4) if (mode == ExecMode::Parallel)
    for (long long i = 0; i < n; ++i) {
        FieldElem row;
        for (long long j = 0; j < n; ++j) {
            const FieldElem a = angle(order[static_cast<std::size_t>(i)],
                                      order[static_cast<std::size_t>(j)]);
            row += field_pow(a, strength);
        }
        partial[static_cast<std::size_t>(thread_num())] += row;
    }
    FieldElem total;
    for (const FieldElem& p : partial) total += p;
    return total;
}

bool is_tt_design(const LineSet& lines, int strength) {
    if (lines.empty()) throw std::invalid_argument("empty line set");
    const FieldElem lhs = frame_potential(lines, strength);
    const long n = static_cast<long>(lines.size());
    const FieldElem rhs{Rational(n) * Rational(n) * design_constant(2, strength)};
    return lhs == rhs;
}

FieldElem design_potential(const MatGroup& group, const VecH& x, int strength, ExecMode mode) {
    if (x.is_zero()) throw std::domain_error("design potential needs a nonzero vector");
    const auto& elems = group.elements();
    const long long n = static_cast<long long>(elems.size());
    std::vector<FieldElem> partial(static_cast<std::size_t>(max_threads()));
#pragma omp parallel for schedule(static) if (mode == ExecMode::Parallel)
    for (long long idx = 0; idx < n; ++idx) {
        const FieldElem a2 = abs2_inner(x, elems[static_cast<std::size_t>(idx)] * x);
        partial[static_cast<std::size_t>(thread_num())] += field_pow(a2, strength);
    }
    FieldElem total;
    for (const FieldElem& p : partial) total += p;
    const FieldElem mean = total * FieldElem(Rational(1, static_cast<long>(elems.size())));
    const FieldElem norm_term =
        field_pow(norm2(x), 2 * strength) * FieldElem(design_constant(2, strength));
    return mean - norm_term;
}

FieldElem special_bound(int dim, const FieldElem& alpha, const FieldElem& beta) {
    const FieldElem d(dim);
    const FieldElem m(2 * dim + 1);
    const FieldElem numerator = d * m * (FieldElem(1) - alpha) * (FieldElem(1) - beta);
    const FieldElem denominator = FieldElem(3) - m * (alpha + beta) + d * m * alpha * beta;
    if (denominator.sign() <= 0) {
        throw std::domain_error("special bound does not apply: denominator is not positive");
    }
    return numerator * denominator.inv();
}

Rational absolute_bound(int dim) {
    if (dim < 1) throw std::domain_error("absolute bound needs d >= 1");
    const Rational d(dim);
    return d * d * (4 * d * d - 1) / 3;
}

DesignReport design_report(const LineSet& lines) {
    DesignReport report;
    report.line_count = lines.size();
    report.angles = lines.angle_set();
    report.angle_count = report.angles.size();
    for (const FieldElem& a : report.angles) {
        if (a.is_zero()) report.has_orthogonal_pair = true;
    }
    report.t1 = is_tt_design(lines, 1);
    report.t2 = report.t1 && is_tt_design(lines, 2);
    report.t3 = report.t2 && is_tt_design(lines, 3);
    report.strength = report.t3 ? 3 : report.t2 ? 2 : report.t1 ? 1 : 0;
    report.regular_scheme =
        report.angle_count > 0 &&
        static_cast<std::size_t>(report.strength) + 1 >= report.angle_count;

    report.absolute = absolute_bound(2);
    report.within_absolute = Rational(static_cast<long>(report.line_count)) <= report.absolute;

    std::vector<FieldElem> positive;
    for (const FieldElem& a : report.angles) {
        if (!a.is_zero()) positive.push_back(a);
    }
    if (positive.size() == 2) {
        try {
            report.special = special_bound(2, positive[0], positive[1]);
            report.special_applies = true;
            report.meets_special = FieldElem(static_cast<long>(report.line_count)) == report.special;
        } catch (const std::domain_error&) {
            report.special_applies = false;
        }
    }
    return report;
}

}  // namespace qref
