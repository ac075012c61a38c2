#include "qreflect/symplectic.hpp"

#include <stdexcept>
#include <unordered_map>

#include "qreflect/catalog.hpp"
#include "qreflect/parallel.hpp"

namespace qref {

MatC h_to_c(const MatH& m) {
    MatC out;
    const MatH* src = &m;
    const std::array<const Quat*, 4> q = {&src->a, &src->b, &src->c, &src->d};
    for (int row = 0; row < 2; ++row) {
        for (int col = 0; col < 2; ++col) {
            const Quat& entry = *q[static_cast<std::size_t>(row * 2 + col)];
            const ComplexElem a = entry.complex_a();
            const ComplexElem b = entry.complex_b();
            out.at(row, col) = a;
            out.at(row, col + 2) = -b;
            out.at(row + 2, col) = b.conj();
            out.at(row + 2, col + 2) = a.conj();
        }
    }
    return out;
}

bool is_symplectic(const MatC& m) {
    for (int row = 0; row < 2; ++row) {
        for (int col = 0; col < 2; ++col) {
            if (m.at(row + 2, col + 2) != m.at(row, col).conj()) return false;
            if (m.at(row + 2, col) != (-m.at(row, col + 2)).conj()) return false;
        }
    }
    return true;
}

MatH c_to_h(const MatC& m) {
    if (!is_symplectic(m)) {
        throw std::domain_error("matrix is not in the quaternionic block form");
    }
    auto entry = [&m](int row, int col) {
        return Quat::from_complex_pair(m.at(row, col), -m.at(row, col + 2));
    };
    return {entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)};
}

bool has_real_trace(const MatC& m) { return m.trace().is_real(); }

CMatGroup CMatGroup::closure(std::vector<MatC> gens, std::size_t cap) {
    CMatGroup g;
    g.gens_ = std::move(gens);
    if (g.gens_.empty()) throw std::invalid_argument("group closure needs at least one generator");
    std::unordered_map<MatC, std::uint32_t, MatCHash> index;
    auto insert = [&g, &index, cap](const MatC& m) -> bool {
        const auto [it, fresh] = index.emplace(m, static_cast<std::uint32_t>(g.elems_.size()));
        (void)it;
        if (fresh) {
            if (g.elems_.size() >= cap) {
                throw CapExceeded("complex group closure exceeded cap of " + std::to_string(cap));
            }
            g.elems_.push_back(m);
        }
        return fresh;
    };
    std::vector<MatC> frontier;
    for (const MatC& m : g.gens_) {
        if (insert(m)) frontier.push_back(m);
    }
    while (!frontier.empty()) {
        std::vector<MatC> next;
        for (const MatC& m : frontier) {
            for (const MatC& gen : g.gens_) {
                MatC prod = m * gen;
                if (insert(prod)) next.push_back(std::move(prod));
            }
        }
        frontier = std::move(next);
    }
    return g;
}

Rational fs_indicator(const CMatGroup& group, ExecMode mode) {
    const auto& elems = group.elements();
    const long long n = static_cast<long long>(elems.size());
    // Per-thread partial sums; exact addition commutes, so the combine order
    // cannot change the value.
    std::vector<ComplexElem> partial(static_cast<std::size_t>(max_threads()));
#pragma omp parallel for schedule(static) if (mode == ExecMode::Parallel)
    for (long long idx = 0; idx < n; ++idx) {
        const MatC& g = elems[static_cast<std::size_t>(idx)];
        partial[static_cast<std::size_t>(thread_num())] += (g * g).trace();
    }
    ComplexElem total;
    for (const ComplexElem& p : partial) total += p;
    if (!total.is_real()) throw std::domain_error("indicator sum has an imaginary part");
    const FieldElem value = total.re * FieldElem(Rational(1, static_cast<long>(elems.size())));
    if (!value.is_rational()) throw std::domain_error("indicator sum is irrational");
    return value.as_rational();
}

std::vector<MatC> collineation_generators(CollineationGroup which) {
    const MatC a1 = catalog::complex_matrix("A1");
    const MatC a2i = catalog::complex_matrix("A2").times_i();
    const MatC a3i = catalog::complex_matrix("A3").times_i();
    const MatC a4 = catalog::complex_matrix("A4");
    const MatC t = catalog::complex_matrix("T");
    std::vector<MatC> gens = {a1, a2i, a3i, a4, t};
    switch (which) {
        case CollineationGroup::N13:
            break;
        case CollineationGroup::N14: {
            const MatC r = catalog::complex_matrix("R");
            gens.push_back(r * r);
            break;
        }
        case CollineationGroup::N16:
            gens.push_back(catalog::complex_matrix("S") * catalog::complex_matrix("B"));
            break;
        case CollineationGroup::N18:
            gens.push_back(catalog::complex_matrix("A").times_i());
            break;
    }
    return gens;
}

MatGroup quaternionify(CollineationGroup which, std::size_t cap) {
    const MatC p = catalog::complex_matrix("P_perm");
    std::vector<MatH> hgens;
    for (const MatC& g : collineation_generators(which)) {
        const MatC conjugated = p * g * p;  // p is an involution
        if (!is_symplectic(conjugated)) {
            throw std::domain_error("collineation generator failed the block-form check");
        }
        hgens.push_back(c_to_h(conjugated));
    }
    return MatGroup::closure(std::move(hgens), cap);
}

}  // namespace qref
