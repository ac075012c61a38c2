#include "qreflect/linalg.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace qref {

namespace {

std::string strip_spaces(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

// Splits "(..), (..), ..." at commas outside parentheses.
std::vector<std::string> split_outside_parens(const std::string& body) {
    std::vector<std::string> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t pos = 0; pos <= body.size(); ++pos) {
        if (pos == body.size() || (body[pos] == ',' && depth == 0)) {
            parts.push_back(body.substr(start, pos - start));
            start = pos + 1;
        } else if (body[pos] == '(') {
            ++depth;
        } else if (body[pos] == ')') {
            --depth;
        }
    }
    return parts;
}

std::vector<std::string> bracket_entries(const std::string& text, const char* what) {
    const std::string s = strip_spaces(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw std::invalid_argument(std::string(what) + " must look like [entry, ...]: '" + text +
                                    "'");
    }
    return split_outside_parens(s.substr(1, s.size() - 2));
}

}  // namespace

std::string VecH::str() const { return "[" + v1.str() + ", " + v2.str() + "]"; }

Quat inner(const VecH& v, const VecH& w) { return v.v1.conj() * w.v1 + v.v2.conj() * w.v2; }

FieldElem abs2_inner(const VecH& v, const VecH& w) { return inner(v, w).nrd(); }

FieldElem norm2(const VecH& v) {
    const Quat n = inner(v, v);
    if (!n.is_real()) throw std::domain_error("norm has a non-real part");
    return n.r;
}

int MatH::cmp_structural(const MatH& o) const {
    int r = a.cmp_structural(o.a);
    if (r != 0) return r;
    r = b.cmp_structural(o.b);
    if (r != 0) return r;
    r = c.cmp_structural(o.c);
    if (r != 0) return r;
    return d.cmp_structural(o.d);
}

std::size_t MatH::hash() const {
    std::size_t h = hash_combine(a.hash(), b.hash());
    h = hash_combine(h, c.hash());
    return hash_combine(h, d.hash());
}

std::string MatH::str() const {
    return "[" + a.str() + ", " + b.str() + ", " + c.str() + ", " + d.str() + "]";
}

std::ostream& operator<<(std::ostream& os, const MatH& m) { return os << m.str(); }

MatH parse_math(const std::string& text) {
    const auto parts = bracket_entries(text, "matrix");
    if (parts.size() != 4) {
        throw std::invalid_argument("matrix needs four row-major entries: '" + text + "'");
    }
    return {parse_quat(parts[0]), parse_quat(parts[1]), parse_quat(parts[2]),
            parse_quat(parts[3])};
}

MatH h_inverse(const MatH& m) {
    if (!m.a.is_zero()) {
        const Quat ai = m.a.inv();
        const Quat schur = m.d - m.c * ai * m.b;
        if (schur.is_zero()) throw std::domain_error("singular matrix has no inverse");
        const Quat si = schur.inv();
        return {ai + ai * m.b * si * m.c * ai, -(ai * m.b * si), -(si * m.c * ai), si};
    }
    if (m.b.is_zero() || m.c.is_zero()) throw std::domain_error("singular matrix has no inverse");
    const Quat bi = m.b.inv();
    const Quat ci = m.c.inv();
    return {-(ci * m.d * bi), ci, bi, Quat(0)};
}

int mat_order(const MatH& m, int max_order) {
    MatH power = m;
    const MatH id = MatH::identity();
    for (int n = 1; n <= max_order; ++n) {
        if (power == id) return n;
        power = power * m;
    }
    throw std::domain_error("matrix order exceeds " + std::to_string(max_order));
}

KernelInfo kernel_rank(const MatH& m) {
    if (!m.a.is_zero()) {
        // Eliminate the second row against the pivot at (1,1).
        const Quat ai = m.a.inv();
        const Quat d2 = m.d - m.c * ai * m.b;
        if (!d2.is_zero()) return {2, std::nullopt};
        // Solve a v1 + b v2 = 0 with v2 = 1.
        return {1, VecH{-(ai * m.b), Quat::one()}};
    }
    if (!m.b.is_zero()) {
        // First row (0, b) forces v2 = 0.
        if (!m.c.is_zero()) return {2, std::nullopt};
        return {1, VecH::e1()};
    }
    // First row is zero.
    if (!m.c.is_zero()) return {1, VecH{-(m.c.inv() * m.d), Quat::one()}};
    if (!m.d.is_zero()) return {1, VecH::e1()};
    return {0, VecH::e1()};
}

MatC MatC::identity() {
    MatC m;
    for (int idx = 0; idx < 4; ++idx) m.at(idx, idx) = ComplexElem(1);
    return m;
}

MatC MatC::diag(const ComplexElem& d1, const ComplexElem& d2, const ComplexElem& d3,
                const ComplexElem& d4) {
    MatC m;
    m.at(0, 0) = d1;
    m.at(1, 1) = d2;
    m.at(2, 2) = d3;
    m.at(3, 3) = d4;
    return m;
}

MatC MatC::operator*(const MatC& o) const {
    MatC out;
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < 4; ++col) {
            ComplexElem sum;
            for (int mid = 0; mid < 4; ++mid) {
                if (at(row, mid).is_zero() || o.at(mid, col).is_zero()) continue;
                sum += at(row, mid) * o.at(mid, col);
            }
            out.at(row, col) = sum;
        }
    }
    return out;
}

MatC MatC::operator-(const MatC& o) const {
    MatC out;
    for (std::size_t idx = 0; idx < e.size(); ++idx) out.e[idx] = e[idx] - o.e[idx];
    return out;
}

MatC MatC::scaled(const ComplexElem& s) const {
    MatC out;
    for (std::size_t idx = 0; idx < e.size(); ++idx) {
        if (!e[idx].is_zero()) out.e[idx] = e[idx] * s;
    }
    return out;
}

MatC MatC::times_i() const {
    MatC out;
    for (std::size_t idx = 0; idx < e.size(); ++idx) out.e[idx] = e[idx].times_i();
    return out;
}

ComplexElem MatC::trace() const {
    ComplexElem t;
    for (int idx = 0; idx < 4; ++idx) t += at(idx, idx);
    return t;
}

MatC MatC::adjoint() const {
    MatC out;
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < 4; ++col) out.at(row, col) = at(col, row).conj();
    }
    return out;
}

bool MatC::is_unitary() const { return adjoint() * *this == identity(); }

std::size_t MatC::hash() const {
    std::size_t h = 0x8bb84b93962eacc9ull;
    for (const auto& entry : e) h = hash_combine(h, entry.hash());
    return h;
}

std::string MatC::str() const {
    std::string out = "[";
    for (std::size_t idx = 0; idx < e.size(); ++idx) {
        if (idx > 0) out += ", ";
        out += e[idx].str();
    }
    return out + "]";
}

MatC parse_matc(const std::string& text) {
    const auto parts = bracket_entries(text, "complex matrix");
    if (parts.size() != 16) {
        throw std::invalid_argument("complex matrix needs sixteen row-major entries: '" + text +
                                    "'");
    }
    MatC m;
    for (std::size_t idx = 0; idx < 16; ++idx) m.e[idx] = parse_complex(parts[idx]);
    return m;
}

}  // namespace qref
