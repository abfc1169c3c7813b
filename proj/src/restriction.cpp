#include "demroots/restriction.hpp"

#include <algorithm>
#include <sstream>

namespace demroots {

SubtorusRestriction SubtorusRestriction::from_basis(int ambient_rank,
                                                    std::vector<LatticeVector> basis) {
    if (ambient_rank < 2) throw DomainError("bad_rank", "ambient rank must be >= 2");
    const int k = static_cast<int>(basis.size());
    if (k < 1 || k >= ambient_rank)
        throw DomainError("bad_corank", "subtorus rank must be between 1 and " +
                                            std::to_string(ambient_rank - 1));
    for (const auto& b : basis)
        if (b.rank() != ambient_rank)
            throw DomainError("rank_mismatch", "basis vector " + b.str() + " has wrong rank");
    if (rank_of(basis) != k)
        throw DomainError("bad_basis", "subtorus basis is linearly dependent");

    SubtorusRestriction s;
    s.ambient_rank_ = ambient_rank;
    if (k == ambient_rank - 1) {
        s.m_t_ = kernel_generator(basis); // also checks saturation
    } else {
        // Saturated iff the gcd of all maximal minors is 1.
        std::vector<int> cols(static_cast<size_t>(k));
        Int g = 0;
        std::function<void(int, int)> scan = [&](int start, int depth) {
            if (depth == k) {
                IntMatrix sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        sub.at(i, j) = basis[static_cast<size_t>(i)][cols[static_cast<size_t>(j)]];
                g = gcd(g, sub.determinant());
                return;
            }
            for (int c = start; c <= ambient_rank - (k - depth); ++c) {
                cols[static_cast<size_t>(depth)] = c;
                scan(c + 1, depth + 1);
            }
        };
        scan(0, 0);
        if (g != 1)
            throw DomainError("not_saturated",
                              "sublattice of index " + g.str() + " in its saturation");
    }
    s.pi_ = IntMatrix::from_rows(basis);
    s.basis_ = std::move(basis);
    return s;
}

SubtorusRestriction SubtorusRestriction::from_hyperplane(const Hyperplane& h) {
    if (h.basis) return from_basis(h.normal.rank(), *h.basis);
    return from_basis(h.normal.rank(), orthogonal_complement_basis(h.normal));
}

Hyperplane SubtorusRestriction::hyperplane() const {
    if (!m_t_)
        throw DomainError("bad_corank", "hyperplane is defined for corank-one subtori only");
    return Hyperplane{*m_t_, basis_};
}

namespace {

struct SolvedInterval {
    RayInterval iv;
    bool infinite() const {
        return !iv.empty && (!iv.lower_bounded || !iv.upper_bounded);
    }
    Int size() const { // finite intervals only
        return iv.empty ? Int(0) : iv.hi - iv.lo + 1;
    }
};

// Lambda-interval of roots base + lambda*m_T distinguished at `ray`.
SolvedInterval solve_ray_interval(const Cone& c, const LatticeVector& ray,
                                  const LatticeVector& base, const LatticeVector& m_t) {
    const Int a = pairing(ray, base);
    const Int b = pairing(ray, m_t);
    RayInterval iv{ray, b == 0, true, false, false, 0, 0};
    auto constrain = [&](bool& feasible, Int& lo, Int& hi, bool& lb, bool& ub) {
        for (const auto& other : c.rays()) {
            if (other == ray) continue;
            const Int ao = pairing(other, base);
            const Int bo = pairing(other, m_t);
            if (bo == 0) {
                if (ao < 0) {
                    feasible = false;
                    return;
                }
            } else if (bo > 0) {
                Int cand = ceil_div(-ao, bo);
                if (!lb || cand > lo) lo = cand;
                lb = true;
            } else {
                Int cand = floor_div(ao, -bo);
                if (!ub || cand < hi) hi = cand;
                ub = true;
            }
        }
        if (lb && ub && lo > hi) feasible = false;
    };

    if (b != 0) {
        // <ray, base + lambda m_T> = -1 pins lambda.
        Int num = -1 - a;
        if (num % b != 0) return {iv};
        Int lambda = num / b;
        bool feasible = true;
        Int lo = lambda, hi = lambda;
        bool lb = true, ub = true;
        constrain(feasible, lo, hi, lb, ub);
        if (!feasible || lo > lambda || hi < lambda) return {iv};
        iv.empty = false;
        iv.lower_bounded = iv.upper_bounded = true;
        iv.lo = iv.hi = lambda;
        return {iv};
    }
    if (a != -1) return {iv};
    bool feasible = true;
    Int lo = 0, hi = 0;
    bool lb = false, ub = false;
    constrain(feasible, lo, hi, lb, ub);
    if (!feasible) return {iv};
    if (!lb && !ub)
        throw DomainError("internal", "unbounded fiber line: cone cannot be full-dimensional");
    iv.empty = false;
    iv.lower_bounded = lb;
    iv.upper_bounded = ub;
    iv.lo = lo;
    iv.hi = hi;
    return {iv};
}

// Lambda-range keeping every coordinate of base + lambda*m_T within the box.
// Empty optional when no lambda fits.
std::optional<std::pair<Int, Int>> box_lambda_range(const LatticeVector& base,
                                                    const LatticeVector& m_t, int bound) {
    bool have = false;
    Int lo = 0, hi = 0;
    for (int i = 0; i < base.rank(); ++i) {
        if (m_t[i] == 0) {
            if (base[i] > bound || base[i] < -bound) return std::nullopt;
            continue;
        }
        Int c1 = ceil_div(Int(-bound) - base[i], m_t[i]);
        Int c2 = floor_div(Int(bound) - base[i], m_t[i]);
        Int l = m_t[i] > 0 ? c1 : ceil_div(Int(bound) - base[i], m_t[i]);
        Int h = m_t[i] > 0 ? c2 : floor_div(Int(-bound) - base[i], m_t[i]);
        if (!have) {
            lo = l;
            hi = h;
            have = true;
        } else {
            lo = std::max(lo, l);
            hi = std::min(hi, h);
        }
    }
    if (!have || lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

} // namespace

FiberReport fiber(const SubtorusRestriction& s, const Cone& c, const LatticeVector& t_root,
                  int bound) {
    if (s.corank() != 1)
        throw DomainError("bad_corank", "fiber computation requires a corank-one subtorus");
    if (c.rank() != s.ambient_rank())
        throw DomainError("rank_mismatch", "cone and subtorus live in different lattices");
    if (t_root.rank() != s.subtorus_rank())
        throw DomainError("rank_mismatch", "T-root has wrong rank");
    if (bound < 1) throw DomainError("bad_bound", "bound must be >= 1");

    FiberReport rep;
    rep.t_root = t_root;
    rep.cardinality = 0;
    rep.dim_class = RootSpaceDim::Unknown;
    rep.dim_value = 0;
    rep.unique_lift_t_homogeneous = false;

    const LatticeVector m_t = *s.kernel_char();
    auto base = solve_integer(s.pi(), t_root);
    if (!base) {
        rep.cardinality_class = CardinalityClass::Exactly;
        rep.dim_class = RootSpaceDim::Dim;
        return rep;
    }

    bool infinite = false;
    Int total = 0;
    bool all_rays_in_hyperplane = true;
    for (const auto& ray : c.rays()) {
        SolvedInterval si = solve_ray_interval(c, ray, *base, m_t);
        if (!si.iv.empty) {
            if (si.infinite()) {
                infinite = true;
                if (!rep.witness) {
                    ArithmeticProgressionWitness w;
                    w.ray = ray;
                    if (si.iv.lower_bounded) {
                        w.base = *base + m_t * si.iv.lo;
                        w.step = m_t;
                    } else {
                        w.base = *base + m_t * si.iv.hi;
                        w.step = -m_t;
                    }
                    rep.witness = std::move(w);
                }
            } else {
                total += si.size();
            }
            if (!si.iv.ray_in_hyperplane) all_rays_in_hyperplane = false;
            if (si.iv.lower_bounded && si.iv.upper_bounded) {
                // Finite fibers are listed in full; the intervals certify
                // that nothing outside them restricts here.
                for (Int lam = si.iv.lo; lam <= si.iv.hi; ++lam)
                    rep.preimages.push_back({*base + m_t * lam, ray});
            } else if (auto range = box_lambda_range(*base, m_t, bound)) {
                // Infinite progressions are clipped to the box.
                Int lo = range->first, hi = range->second;
                if (si.iv.lower_bounded) lo = std::max(lo, si.iv.lo);
                if (si.iv.upper_bounded) hi = std::min(hi, si.iv.hi);
                for (Int lam = lo; lam <= hi; ++lam)
                    rep.preimages.push_back({*base + m_t * lam, ray});
            }
        }
        rep.intervals.push_back(si.iv);
    }
    std::sort(rep.preimages.begin(), rep.preimages.end());

    if (infinite) {
        rep.cardinality_class = CardinalityClass::InfiniteCertified;
        rep.dim_class = RootSpaceDim::InfiniteDim;
        return rep;
    }
    rep.cardinality = total;
    if (total == 1) {
        rep.cardinality_class = CardinalityClass::ExactlyOne;
        rep.dim_class = RootSpaceDim::One;
        rep.dim_value = 1;
        rep.unique_lift_t_homogeneous = true;
    } else {
        rep.cardinality_class = CardinalityClass::Exactly;
        if (total == 0) {
            rep.dim_class = RootSpaceDim::Dim;
            rep.dim_value = 0;
        } else if (all_rays_in_hyperplane) {
            // All lifts sit on rays inside Gamma_T: the root vectors span a
            // space of exactly this dimension.
            rep.dim_class = RootSpaceDim::Dim;
            rep.dim_value = total;
        } else {
            rep.dim_class = RootSpaceDim::Unknown;
        }
    }
    return rep;
}

ClassifyReport classify(const SubtorusRestriction& s, const Cone& c, int bound) {
    if (s.corank() != 1)
        throw DomainError("bad_corank", "classification requires a corank-one subtorus");
    ClassifyReport rep;
    rep.position = relative_position(c, s.hyperplane());

    std::vector<LatticeVector> t_roots;
    for (const auto& root : roots_within(c, bound)) t_roots.push_back(s.restrict_root(root.e));
    std::sort(t_roots.begin(), t_roots.end());
    t_roots.erase(std::unique(t_roots.begin(), t_roots.end()), t_roots.end());
    rep.t_roots = std::move(t_roots);

    rep.all_fibers_exactly_one = true;
    rep.images_pairwise_disjoint = true;
    for (const auto& t : rep.t_roots) {
        FiberReport f = fiber(s, c, t, bound);
        if (f.cardinality_class != CardinalityClass::ExactlyOne)
            rep.all_fibers_exactly_one = false;
        int rays_hit = 0;
        for (const auto& iv : f.intervals)
            if (!iv.empty) ++rays_hit;
        if (rays_hit > 1) rep.images_pairwise_disjoint = false;
        rep.fibers.push_back(std::move(f));
    }

    const LatticeVector m_t = *s.kernel_char();
    for (const auto& ray : c.rays()) {
        RayRestrictionInfo info;
        info.ray = ray;
        info.in_hyperplane = (pairing(ray, m_t) == 0);
        if (!info.in_hyperplane) {
            // lambda <n_rho, m_T> = 0 forces lambda = 0: injective on S_rho.
            info.injectivity = InjectivityStatus::Certified;
        } else {
            info.injectivity = InjectivityStatus::InjectiveWithinBound;
            for (const auto& f : rep.fibers)
                for (const auto& iv : f.intervals)
                    if (iv.ray == ray && !iv.empty &&
                        (!iv.lower_bounded || !iv.upper_bounded || iv.hi > iv.lo)) {
                        info.injectivity = InjectivityStatus::NotInjectiveWitnessed;
                    }
        }
        rep.ray_info.push_back(std::move(info));
    }
    return rep;
}

std::vector<CremonaRootVector> cremona_roots(int n, int bound) {
    if (n < 2) throw DomainError("bad_rank", "cremona_roots needs n >= 2");
    if (bound < 0) throw DomainError("bad_bound", "bound must be >= 0");
    Cone orthant = Cone::orthant(n);
    std::vector<LatticeVector> basis;
    for (int i = 0; i + 1 < n; ++i)
        basis.push_back(LatticeVector::unit(n, i) - LatticeVector::unit(n, i + 1));
    SubtorusRestriction s = SubtorusRestriction::from_basis(n, std::move(basis));

    const int box = std::max(1, bound);
    ClassifyReport rep = classify(s, orthant, box);
    if (rep.position.kind != PositionKind::ZeroOnly || !rep.all_fibers_exactly_one)
        throw DomainError("internal", "volume-preserving subtorus must restrict bijectively");

    std::vector<CremonaRootVector> out;
    for (const auto& root : roots_within(orthant, box)) {
        int index = -1;
        for (int i = 0; i < n; ++i)
            if (root.ray == LatticeVector::unit(n, i)) index = i;
        if (index < 0) throw DomainError("internal", "orthant ray is not a unit vector");
        LatticeVector alpha = root.e + LatticeVector::unit(n, index);
        Int total = 0;
        for (int j = 0; j < n; ++j) total += alpha[j];
        if (total > bound) continue;
        CremonaRootVector rv;
        rv.index = index + 1;
        rv.alpha = alpha;
        rv.character_exponents = root.e;
        rv.t_root = s.restrict_root(root.e);
        std::ostringstream os;
        bool printed = false;
        for (int j = 0; j < n; ++j) {
            if (alpha[j] == 0) continue;
            if (printed) os << "*";
            os << "x" << (j + 1);
            if (alpha[j] > 1) os << "^" << alpha[j];
            printed = true;
        }
        if (printed) os << " ";
        os << "d/dx" << (index + 1);
        rv.derivation_text = os.str();
        out.push_back(std::move(rv));
    }
    std::sort(out.begin(), out.end(), [](const CremonaRootVector& a, const CremonaRootVector& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.alpha < b.alpha;
    });
    return out;
}

const char* to_string(CardinalityClass c) {
    switch (c) {
    case CardinalityClass::ExactlyOne: return "exactly-one";
    case CardinalityClass::Exactly: return "exactly";
    case CardinalityClass::InfiniteCertified: return "infinite-certified";
    case CardinalityClass::UnknownBeyondBound: return "unknown-beyond-bound";
    }
    return "?";
}

const char* to_string(RootSpaceDim d) {
    switch (d) {
    case RootSpaceDim::One: return "one";
    case RootSpaceDim::Dim: return "finite-dim";
    case RootSpaceDim::InfiniteDim: return "infinite-dim";
    case RootSpaceDim::P1Family: return "p1-family";
    case RootSpaceDim::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(InjectivityStatus s) {
    switch (s) {
    case InjectivityStatus::Certified: return "injective-certified";
    case InjectivityStatus::NotInjectiveWitnessed: return "not-injective";
    case InjectivityStatus::InjectiveWithinBound: return "injective-within-bound";
    }
    return "?";
}

} // namespace demroots
