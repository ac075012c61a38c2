#include "qreflect/quat.hpp"

#include <array>
#include <cctype>
#include <ostream>
#include <unordered_set>

namespace qref {

Quat Quat::inv() const {
    const FieldElem n = nrd();
    if (n.is_zero()) throw std::domain_error("division by zero quaternion");
    const FieldElem s = n.inv();
    return conj().scale(s);
}

Quat Quat::operator*(const Quat& o) const {
    Quat out;
    out.r.add_mul(r, o.r);
    out.r.sub_mul(x, o.x);
    out.r.sub_mul(y, o.y);
    out.r.sub_mul(z, o.z);
    out.x.add_mul(r, o.x);
    out.x.add_mul(x, o.r);
    out.x.add_mul(y, o.z);
    out.x.sub_mul(z, o.y);
    out.y.add_mul(r, o.y);
    out.y.sub_mul(x, o.z);
    out.y.add_mul(y, o.r);
    out.y.add_mul(z, o.x);
    out.z.add_mul(r, o.z);
    out.z.add_mul(x, o.y);
    out.z.sub_mul(y, o.x);
    out.z.add_mul(z, o.r);
    return out;
}

Quat& Quat::operator+=(const Quat& o) {
    r += o.r;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
}

int Quat::cmp_structural(const Quat& o) const {
    int c = r.cmp_structural(o.r);
    if (c != 0) return c;
    c = x.cmp_structural(o.x);
    if (c != 0) return c;
    c = y.cmp_structural(o.y);
    if (c != 0) return c;
    return z.cmp_structural(o.z);
}

std::size_t Quat::hash() const {
    std::size_t h = hash_combine(r.hash(), x.hash());
    h = hash_combine(h, y.hash());
    return hash_combine(h, z.hash());
}

std::string Quat::str() const {
    return "(" + r.str() + ", " + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << q.str(); }

Quat parse_quat(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
        throw std::invalid_argument("quaternion must look like (r, x, y, z): '" + text + "'");
    }
    const std::string body = s.substr(1, s.size() - 2);
    std::array<std::string, 4> parts;
    std::size_t start = 0;
    int count = 0;
    for (std::size_t pos = 0; pos <= body.size(); ++pos) {
        if (pos == body.size() || body[pos] == ',') {
            if (count >= 4) throw std::invalid_argument("too many components: '" + text + "'");
            parts[static_cast<std::size_t>(count++)] = body.substr(start, pos - start);
            start = pos + 1;
        }
    }
    if (count != 4) throw std::invalid_argument("quaternion needs four components: '" + text + "'");
    return {parse_field(parts[0]), parse_field(parts[1]), parse_field(parts[2]),
            parse_field(parts[3])};
}

Quat circ(const Quat& a, const Quat& b) { return a * b.inv() * a; }

int mult_order(const Quat& q, int max_order) {
    Quat power = q;
    for (int n = 1; n <= max_order; ++n) {
        if (power == Quat::one()) return n;
        power = power * q;
    }
    throw std::domain_error("unit order exceeds " + std::to_string(max_order));
}

namespace {

class QuatSet {
  public:
    explicit QuatSet(std::size_t cap) : cap_(cap) {}

    bool insert(const Quat& q) {
        if (seen_.insert(q).second) {
            if (seen_.size() > cap_) {
                throw CapExceeded("unit closure exceeded cap of " + std::to_string(cap_));
            }
            order_.push_back(q);
            return true;
        }
        return false;
    }

    const std::vector<Quat>& order() const { return order_; }

  private:
    std::size_t cap_;
    std::unordered_set<Quat, QuatHash> seen_;
    std::vector<Quat> order_;
};

}  // namespace

std::vector<Quat> unit_closure(const std::vector<Quat>& gens, std::size_t cap) {
    QuatSet set(cap);
    std::vector<Quat> frontier;
    for (const Quat& g : gens) {
        if (g.nrd() != FieldElem(1)) {
            throw std::domain_error("unit closure generator is not a unit: " + g.str());
        }
        if (set.insert(g)) frontier.push_back(g);
    }
    // Every word in the generators is reachable by extending on the right,
    // and a finite multiplicative closure of units is already a group.
    while (!frontier.empty()) {
        std::vector<Quat> next;
        for (const Quat& q : frontier) {
            for (const Quat& g : gens) {
                Quat prod = q * g;
                if (set.insert(prod)) next.push_back(std::move(prod));
            }
        }
        frontier = std::move(next);
    }
    return set.order();
}

std::vector<Quat> reflection_system_closure(const std::vector<Quat>& seed, std::size_t cap) {
    QuatSet set(cap);
    set.insert(Quat::one());
    for (const Quat& q : seed) {
        if (q.nrd() != FieldElem(1)) {
            throw std::domain_error("root system seed is not a unit: " + q.str());
        }
        set.insert(q);
    }
    // Keep applying a o b = a b^-1 a to all ordered pairs until stable.
    std::size_t processed = 0;
    while (processed < set.order().size()) {
        const std::size_t known = set.order().size();
        for (std::size_t ia = 0; ia < known; ++ia) {
            for (std::size_t ib = 0; ib < known; ++ib) {
                if (ia < processed && ib < processed) continue;
                // order() only grows, so indexed access stays valid.
                const Quat value = circ(set.order()[ia], set.order()[ib]);
                set.insert(value);
            }
        }
        processed = known;
    }
    return set.order();
}

}  // namespace qref
