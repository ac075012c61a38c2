#include "qreflect/lines.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qref {

const Quat& Line::slope() const {
    if (infinite_) throw std::domain_error("the line at infinity has no slope");
    return q_;
}

VecH Line::representative() const {
    if (infinite_) return VecH::e2();
    return {Quat::one(), q_};
}

bool Line::operator<(const Line& o) const {
    if (infinite_ != o.infinite_) return infinite_;
    if (infinite_) return false;
    return q_.cmp_structural(o.q_) < 0;
}

std::size_t Line::hash() const {
    if (infinite_) return 0x9ae16a3b2f90404full;
    return hash_combine(0x243f6a8885a308d3ull, q_.hash());
}

std::string Line::str() const { return infinite_ ? "inf" : q_.str(); }

std::ostream& operator<<(std::ostream& os, const Line& l) { return os << l.str(); }

Line parse_line(const std::string& text) {
    std::string stripped;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
    }
    if (stripped == "inf") return Line::infinity();
    return Line(parse_quat(text));
}

Line line_of(const VecH& v) {
    if (v.v1.is_zero()) {
        if (v.v2.is_zero()) throw std::domain_error("the zero vector spans no line");
        return Line::infinity();
    }
    return Line(v.v2 * v.v1.inv());
}

Line apply(const MatH& m, const Line& l) { return line_of(m * l.representative()); }

FieldElem angle(const Line& l1, const Line& l2) {
    const VecH v = l1.representative();
    const VecH w = l2.representative();
    return abs2_inner(v, w) * (norm2(v) * norm2(w)).inv();
}

Line orthocomplement(const Line& l) {
    if (l.is_infinity()) return Line(Quat(0));
    // (1, q) is orthogonal to (-conj(q), 1).
    const Quat& q = l.slope();
    if (q.is_zero()) return Line::infinity();
    return line_of(VecH{-q.conj(), Quat::one()});
}

LineSet::LineSet(const std::vector<Line>& lines) {
    for (const Line& l : lines) insert(l);
}

bool LineSet::insert(const Line& l) {
    if (seen_.insert(l).second) {
        order_.push_back(l);
        return true;
    }
    return false;
}

std::vector<Line> LineSet::sorted() const {
    std::vector<Line> out = order_;
    std::sort(out.begin(), out.end());
    return out;
}

bool LineSet::set_equal(const LineSet& o) const {
    if (size() != o.size()) return false;
    for (const Line& l : order_) {
        if (!o.contains(l)) return false;
    }
    return true;
}

bool LineSet::disjoint_from(const LineSet& o) const {
    for (const Line& l : order_) {
        if (o.contains(l)) return false;
    }
    return true;
}

LineSet LineSet::set_union(const LineSet& o) const {
    LineSet out = *this;
    for (const Line& l : o.order_) out.insert(l);
    return out;
}

std::vector<FieldElem> LineSet::angle_set() const {
    std::vector<FieldElem> values;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        for (std::size_t j = i + 1; j < order_.size(); ++j) {
            const FieldElem a = angle(order_[i], order_[j]);
            bool known = false;
            for (const FieldElem& v : values) {
                if (v == a) {
                    known = true;
                    break;
                }
            }
            if (!known) values.push_back(a);
        }
    }
    std::sort(values.begin(), values.end(),
              [](const FieldElem& x, const FieldElem& y) { return (x - y).sign() < 0; });
    return values;
}

LineSet line_orbit(std::span<const MatH> gens, const Line& seed, std::size_t cap) {
    LineSet orbit;
    orbit.insert(seed);
    std::vector<Line> frontier{seed};
    while (!frontier.empty()) {
        std::vector<Line> next;
        for (const Line& l : frontier) {
            for (const MatH& g : gens) {
                Line image = apply(g, l);
                if (orbit.size() >= cap && !orbit.contains(image)) {
                    throw CapExceeded("line orbit exceeded cap of " + std::to_string(cap));
                }
                if (orbit.insert(image)) next.push_back(std::move(image));
            }
        }
        frontier = std::move(next);
    }
    return orbit;
}

}  // namespace qref
