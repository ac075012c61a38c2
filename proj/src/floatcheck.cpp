#include "qreflect/floatcheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qreflect/catalog.hpp"
#include "qreflect/parallel.hpp"

namespace qref {

QuatF operator*(const QuatF& a, const QuatF& b) {
    return {a.r * b.r - a.x * b.x - a.y * b.y - a.z * b.z,
            a.r * b.x + a.x * b.r + a.y * b.z - a.z * b.y,
            a.r * b.y - a.x * b.z + a.y * b.r + a.z * b.x,
            a.r * b.z + a.x * b.y - a.y * b.x + a.z * b.r};
}

QuatF operator+(const QuatF& a, const QuatF& b) {
    return {a.r + b.r, a.x + b.x, a.y + b.y, a.z + b.z};
}

QuatF inner(const VecF& v, const VecF& w) {
    return v.v1.conj() * w.v1 + v.v2.conj() * w.v2;
}

double mirror(const FieldElem& e) { return e.to_double(); }

QuatF mirror(const Quat& q) {
    return {mirror(q.r), mirror(q.x), mirror(q.y), mirror(q.z)};
}

VecF mirror(const VecH& v) { return {mirror(v.v1), mirror(v.v2)}; }

MatF mirror(const MatH& m) {
    return {mirror(m.a), mirror(m.b), mirror(m.c), mirror(m.d)};
}

VecF family_vector(double t, int sign) {
    double under = 1.0 - 2.0 * t * t;
    // The sweep grid lands exactly on +-1/sqrt(2) up to rounding, so tiny
    // negatives are legitimate endpoint noise, larger ones are a caller bug.
    if (under < -1e-9) {
        throw std::domain_error("family parameter lies outside [-1/sqrt(2), 1/sqrt(2)]");
    }
    const double s = std::sqrt(std::max(under, 0.0)) * (sign >= 0 ? 1.0 : -1.0);
    return {QuatF{1, 0, 0, 0}, QuatF{t, s, t, 0}};
}

double family_residual(const MatGroup& group, double t, int sign) {
    const VecF v = family_vector(t, sign);
    const double target = inner(v, v).r * inner(v, v).r;
    double worst = 0;
    for (const MatH& h : group.elements()) {
        const VecF hv = mirror(h) * v;
        worst = std::max(worst, std::fabs(inner(v, hv).nrd() - target));
    }
    return worst;
}

SweepResult family_sweep(const MatGroup& group, int grid_points, ExecMode mode) {
    if (grid_points < 2) throw std::invalid_argument("sweep needs at least 2 grid points");
    std::vector<MatF> mirrored;
    mirrored.reserve(group.order());
    for (const MatH& h : group.elements()) mirrored.push_back(mirror(h));

    const double limit = 1.0 / std::sqrt(2.0);
    SweepResult result;
    result.grid_points = grid_points;

    std::vector<SweepResult> partial(static_cast<std::size_t>(max_threads()));
#pragma omp parallel for schedule(static) if (mode == ExecMode::Parallel)
    for (int idx = 0; idx < grid_points; ++idx) {
        const double t = -limit + 2.0 * limit * idx / (grid_points - 1);
        SweepResult& local = partial[static_cast<std::size_t>(thread_num())];
        for (int sign : {+1, -1}) {
            const VecF v = family_vector(t, sign);
            const double n = inner(v, v).r;
            const double target = n * n;
            for (const MatF& h : mirrored) {
                const double res = std::fabs(inner(v, h * v).nrd() - target);
                if (res > local.max_residual) {
                    local.max_residual = res;
                    local.worst_t = t;
                    local.worst_sign = sign;
                }
            }
        }
    }
    for (const SweepResult& local : partial) {
        if (local.max_residual >= result.max_residual) {
            result.max_residual = local.max_residual;
            result.worst_t = local.worst_t;
            result.worst_sign = local.worst_sign;
        }
    }
    return result;
}

namespace {

// q is a square in Q iff numerator and denominator both are (canonical form).
std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const BigInt num = q.get_num();
    const BigInt den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    BigInt rnum, rden;
    mpz_sqrt(rnum.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rden.get_mpz_t(), den.get_mpz_t());
    return Rational(rnum, rden);
}

}  // namespace

std::optional<FieldElem> sqrt_in_field(const FieldElem& value) {
    if (value.is_zero()) return FieldElem(0);
    if (value.sign() < 0) return std::nullopt;
    // Candidates are c * sqrt(m) with c rational and m a basis radicand, so
    // the square c^2 m is rational; anything irrational is out of reach.
    if (!value.is_rational()) return std::nullopt;
    const Rational v = value.as_rational();
    for (int m : FieldElem::kRadicands) {
        if (auto c = rational_sqrt(v / m)) {
            return FieldElem(*c) * FieldElem::radical(m);
        }
    }
    return std::nullopt;
}

VecH family_vector_exact(const FieldElem& t, int sign) {
    const FieldElem under = FieldElem(1) - FieldElem(2) * t * t;
    if (under.sign() < 0) {
        throw std::domain_error("family parameter lies outside [-1/sqrt(2), 1/sqrt(2)]");
    }
    const auto root = sqrt_in_field(under);
    if (!root) {
        throw std::domain_error("1 - 2t^2 has no square root in the radical dictionary");
    }
    const FieldElem s = sign >= 0 ? *root : -*root;
    return {Quat::one(), Quat{t, s, t, FieldElem(0)}};
}

bool exact_family_check(const MatGroup& group, const FieldElem& t) {
    for (int sign : {+1, -1}) {
        const Line l = line_of(family_vector_exact(t, sign));
        if (!verify_fixed_line(group, l)) return false;
    }
    return true;
}

bool exact_family_check(const FieldElem& t) {
    const MatGroup group = MatGroup::closure(catalog::group_generators("G8_family"));
    return exact_family_check(group, t);
}

}  // namespace qref
