#include "demroots/cone.hpp"

#include <algorithm>
#include <set>

namespace demroots {

namespace {

// One row of the homogeneous system <row, vars> >= 0 (or = 0). Rows are kept
// with integer entries; combinations use positive integer multipliers only, so
// inequality directions survive.
struct FmRow {
    std::vector<Int> coef;
    bool equation;
};

void normalize_row(FmRow& r) {
    Int g = 0;
    for (const Int& c : r.coef) g = gcd(g, c);
    if (g > 1)
        for (Int& c : r.coef) c /= g;
    if (r.equation) {
        for (const Int& c : r.coef) {
            if (c == 0) continue;
            if (c < 0)
                for (Int& x : r.coef) x = -x;
            break;
        }
    }
}

bool row_is_zero(const FmRow& r) {
    return std::all_of(r.coef.begin(), r.coef.end(), [](const Int& c) { return c == 0; });
}

// Eliminate variable `t` from the system.
std::vector<FmRow> eliminate(std::vector<FmRow> rows, size_t t) {
    // Prefer a pivot equation: substitution keeps the system small.
    int pivot = -1;
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].equation && rows[i].coef[t] != 0) {
            pivot = static_cast<int>(i);
            break;
        }
    std::vector<FmRow> out;
    if (pivot >= 0) {
        const FmRow piv = rows[static_cast<size_t>(pivot)];
        const Int c = piv.coef[t];
        const Int ac = boost::multiprecision::abs(c);
        const Int sc = c > 0 ? 1 : -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == pivot) continue;
            FmRow r = rows[i];
            const Int d = r.coef[t];
            if (d != 0) {
                for (size_t j = 0; j < r.coef.size(); ++j)
                    r.coef[j] = ac * r.coef[j] - d * sc * piv.coef[j];
            }
            r.coef[t] = 0;
            out.push_back(std::move(r));
        }
    } else {
        std::vector<size_t> pos, neg;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].coef[t] > 0)
                pos.push_back(i);
            else if (rows[i].coef[t] < 0)
                neg.push_back(i);
            else
                out.push_back(rows[i]);
        }
        for (size_t p : pos)
            for (size_t n : neg) {
                FmRow r{std::vector<Int>(rows[p].coef.size(), Int(0)), false};
                const Int cp = rows[p].coef[t];
                const Int cn = -rows[n].coef[t];
                for (size_t j = 0; j < r.coef.size(); ++j)
                    r.coef[j] = cn * rows[p].coef[j] + cp * rows[n].coef[j];
                r.coef[t] = 0;
                out.push_back(std::move(r));
            }
    }
    // Prune: normalize, drop zero rows, deduplicate.
    std::vector<FmRow> pruned;
    std::set<std::pair<bool, std::vector<Int>>> seen;
    for (FmRow& r : out) {
        if (row_is_zero(r)) continue;
        normalize_row(r);
        if (seen.insert({r.equation, r.coef}).second) pruned.push_back(std::move(r));
    }
    return pruned;
}

// H-representation of cone(generators) by Fourier-Motzkin elimination of the
// combination coefficients from { x = V*lambda, lambda >= 0 }.
std::vector<LatticeVector> fm_inequalities(int rank, const std::vector<LatticeVector>& gens) {
    const size_t k = gens.size();
    const size_t width = k + static_cast<size_t>(rank);
    std::vector<FmRow> rows;
    for (size_t i = 0; i < k; ++i) {
        FmRow r{std::vector<Int>(width, Int(0)), false};
        r.coef[i] = 1;
        rows.push_back(std::move(r));
    }
    for (int j = 0; j < rank; ++j) {
        FmRow r{std::vector<Int>(width, Int(0)), true};
        for (size_t i = 0; i < k; ++i) r.coef[i] = -gens[i][j];
        r.coef[k + static_cast<size_t>(j)] = 1;
        rows.push_back(std::move(r));
    }
    for (size_t t = 0; t < k; ++t) rows = eliminate(std::move(rows), t);

    std::vector<LatticeVector> ineqs;
    for (const FmRow& r : rows) {
        for (size_t i = 0; i < k; ++i)
            if (r.coef[i] != 0)
                throw DomainError("internal", "elimination left a combination variable");
        if (r.equation)
            throw DomainError("not_full_dimensional",
                              "cone is not full-dimensional in rank " + std::to_string(rank));
        std::vector<Int> x(r.coef.begin() + static_cast<long>(k), r.coef.end());
        ineqs.emplace_back(std::move(x));
    }
    return ineqs;
}

std::vector<LatticeVector> sorted_unique(std::vector<LatticeVector> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

} // namespace

Cone Cone::from_generators(int rank, std::vector<LatticeVector> generators) {
    if (rank < 1) throw DomainError("bad_rank", "cone rank must be positive");
    std::vector<LatticeVector> gens;
    for (const auto& g : generators) {
        if (g.rank() != rank)
            throw DomainError("rank_mismatch", "generator " + g.str() + " has wrong rank");
        if (g.is_zero()) continue;
        gens.push_back(primitive(g));
    }
    gens = sorted_unique(std::move(gens));
    if (gens.empty()) throw DomainError("empty_cone", "cone needs a nonzero generator");
    if (rank_of(gens) != rank)
        throw DomainError("not_full_dimensional", "generators span a proper subspace of rank " +
                                                      std::to_string(rank));

    std::vector<LatticeVector> facets;
    for (const LatticeVector& h : fm_inequalities(rank, gens)) {
        bool valid = true;
        std::vector<LatticeVector> tight;
        for (const auto& g : gens) {
            Int p = pairing(h, g);
            if (p < 0) {
                valid = false;
                break;
            }
            if (p == 0) tight.push_back(g);
        }
        if (valid && rank_of(tight) == rank - 1) facets.push_back(primitive(h));
    }
    facets = sorted_unique(std::move(facets));
    if (rank_of(facets) != rank)
        throw DomainError("not_pointed", "cone contains a line (not pointed)");

    // Extreme rays: generators lying on rank-1 many independent facets.
    std::vector<LatticeVector> rays;
    for (const auto& g : gens) {
        std::vector<LatticeVector> tight;
        for (const auto& h : facets)
            if (pairing(h, g) == 0) tight.push_back(h);
        if (rank_of(tight) == rank - 1) rays.push_back(g);
    }
    rays = sorted_unique(std::move(rays));

    Cone c;
    c.rank_ = rank;
    c.rays_ = std::move(rays);
    c.facets_ = std::move(facets);
    return c;
}

Cone Cone::orthant(int rank) {
    std::vector<LatticeVector> gens;
    for (int i = 0; i < rank; ++i) gens.push_back(LatticeVector::unit(rank, i));
    return from_generators(rank, std::move(gens));
}

bool Cone::contains(const LatticeVector& p) const {
    for (const auto& h : facets_)
        if (pairing(h, p) < 0) return false;
    return true;
}

bool Cone::weight_monoid_contains(const LatticeVector& m) const {
    for (const auto& r : rays_)
        if (pairing(r, m) < 0) return false;
    return true;
}

Cone Cone::dual() const { return from_generators(rank_, facets_); }

Hyperplane Hyperplane::from_normal(const LatticeVector& m) {
    if (m.is_zero()) throw DomainError("zero_vector", "hyperplane needs a nonzero normal");
    LatticeVector p = primitive(m);
    for (int i = 0; i < p.rank(); ++i) {
        if (p[i] == 0) continue;
        if (p[i] < 0) p = -p;
        break;
    }
    return Hyperplane{std::move(p), std::nullopt};
}

Hyperplane Hyperplane::from_basis(std::vector<LatticeVector> basis) {
    LatticeVector m = kernel_generator(basis);
    return Hyperplane{std::move(m), std::move(basis)};
}

RelativePosition relative_position(const Cone& c, const Hyperplane& h) {
    if (h.normal.rank() != c.rank())
        throw DomainError("rank_mismatch", "hyperplane and cone ranks differ");
    bool any_pos = false, any_neg = false;
    std::vector<LatticeVector> zero_rays;
    for (const auto& r : c.rays()) {
        Int p = pairing(r, h.normal);
        if (p > 0)
            any_pos = true;
        else if (p < 0)
            any_neg = true;
        else
            zero_rays.push_back(r);
    }
    if (any_pos && any_neg) {
        if (zero_rays.empty()) return {PositionKind::InteriorNoRays, 0, {}};
        return {PositionKind::InteriorWithRays, 0, std::move(zero_rays)};
    }
    if (zero_rays.empty()) return {PositionKind::ZeroOnly, 0, {}};
    return {PositionKind::Face, rank_of(zero_rays), std::move(zero_rays)};
}

const char* to_string(PositionKind k) {
    switch (k) {
    case PositionKind::ZeroOnly: return "zero-only";
    case PositionKind::Face: return "face";
    case PositionKind::InteriorNoRays: return "interior-no-rays";
    case PositionKind::InteriorWithRays: return "interior-with-rays";
    }
    return "?";
}

} // namespace demroots
