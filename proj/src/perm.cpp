#include "qreflect/perm.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "qreflect/quat.hpp"  // CapExceeded, hash_combine

namespace qref {

Perm Perm::identity(int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
    std::vector<int> img(images.size());
    for (std::size_t p = 0; p < images.size(); ++p) {
        img[p] = images[static_cast<std::size_t>(o.images[p])];
    }
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (std::size_t p = 0; p < images.size(); ++p) {
        if (images[p] != static_cast<int>(p)) return false;
    }
    return true;
}

int Perm::order() const {
    Perm power = *this;
    for (int n = 1; n <= 1 << 20; ++n) {
        if (power.is_identity()) return n;
        power = power * *this;
    }
    throw std::domain_error("permutation order overflow");
}

std::size_t Perm::hash() const {
    std::size_t h = 0x2b992ddfa23249d6ull;
    for (int p : images) h = hash_combine(h, static_cast<std::size_t>(p));
    return h;
}

std::string Perm::cycle_string() const {
    std::vector<bool> done(images.size(), false);
    std::string out;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (done[start] || images[start] == static_cast<int>(start)) continue;
        out += "(";
        std::size_t p = start;
        bool first = true;
        while (!done[p]) {
            done[p] = true;
            if (!first) out += " ";
            out += std::to_string(p + 1);
            first = false;
            p = static_cast<std::size_t>(images[p]);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Perm perm = Perm::identity(degree);
    std::vector<bool> moved(static_cast<std::size_t>(degree), false);
    for (const auto& cycle : cycles) {
        for (std::size_t idx = 0; idx < cycle.size(); ++idx) {
            const int from = cycle[idx] - 1;
            const int to = cycle[(idx + 1) % cycle.size()] - 1;
            if (from < 0 || from >= degree || to < 0 || to >= degree) {
                throw std::invalid_argument("cycle point out of range");
            }
            if (moved[static_cast<std::size_t>(from)]) {
                throw std::invalid_argument("cycle point repeated");
            }
            moved[static_cast<std::size_t>(from)] = true;
            perm.images[static_cast<std::size_t>(from)] = to;
        }
    }
    return perm;
}

std::vector<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t cap) {
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> order;
    std::vector<Perm> frontier;
    for (const Perm& g : gens) {
        if (seen.insert(g).second) {
            order.push_back(g);
            frontier.push_back(g);
        }
    }
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier) {
            for (const Perm& g : gens) {
                Perm prod = p * g;
                if (seen.insert(prod).second) {
                    if (seen.size() > cap) {
                        throw CapExceeded("permutation closure exceeded cap");
                    }
                    order.push_back(prod);
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    return order;
}

}  // namespace qref
