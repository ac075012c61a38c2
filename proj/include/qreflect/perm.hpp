#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qref {

/**
 * Permutation of {0, ..., n-1} in one-line notation: images[p] is the image
 * of point p. Printed in 1-based cycle notation to match the usual tables.
 */
struct Perm {
    std::vector<int> images;

    Perm() = default;
    explicit Perm(std::vector<int> img) : images(std::move(img)) {}
    static Perm identity(int degree);

    int degree() const { return static_cast<int>(images.size()); }
    int apply(int point) const { return images[static_cast<std::size_t>(point)]; }

    // Composition (a*b)(p) = a(b(p)), matching how matrix actions compose.
    Perm operator*(const Perm& o) const;

    bool is_identity() const;
    int order() const;

    bool operator==(const Perm& o) const { return images == o.images; }
    bool operator!=(const Perm& o) const { return !(*this == o); }

    std::size_t hash() const;

    // 1-based cycle notation, e.g. "(1 6 9 4 7)(2 5 10 3 8)"; "()" for the identity.
    std::string cycle_string() const;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const { return p.hash(); }
};

// Builds a permutation of the given degree from 1-based cycles.
Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

// Multiplicative closure of the generators; throws CapExceeded past cap.
std::vector<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t cap = 1 << 20);

}  // namespace qref
