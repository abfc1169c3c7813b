#include "demroots/surface.hpp"

#include <algorithm>
#include <sstream>

namespace demroots {

namespace {

bool strictly_interior(const Int& a, const Int& b, const Int& x, const Int& y) {
    return y > 0 && b * x - a * y > 0;
}

IntMatrix mat2(const Int& a00, const Int& a01, const Int& a10, const Int& a11) {
    IntMatrix m(2, 2);
    m.at(0, 0) = a00;
    m.at(0, 1) = a01;
    m.at(1, 0) = a10;
    m.at(1, 1) = a11;
    return m;
}

IntMatrix inverse_unimodular_2x2(const IntMatrix& u) {
    Int d = u.determinant();
    if (d != 1 && d != -1) throw DomainError("internal", "matrix is not unimodular");
    // 1/d = d for d = +-1.
    return mat2(u.at(1, 1) * d, -u.at(0, 1) * d, -u.at(1, 0) * d, u.at(0, 0) * d);
}

} // namespace

SurfaceData SurfaceData::create(const Int& a, const Int& b, const Int& r, const Int& q) {
    if (a < 0 || b <= a) throw DomainError("bad_surface", "need 0 <= a < b");
    if (gcd(a, b) != 1) throw DomainError("bad_surface", "gcd(a, b) must be 1");
    if (r == 0 && q == 0) throw DomainError("bad_surface", "(r, q) must be nonzero");
    if (gcd(r, q) != 1) throw DomainError("bad_surface", "gcd(r, q) must be 1");

    SurfaceData s;
    s.a_ = a;
    s.b_ = b;
    s.r_ = r;
    s.q_ = q;

    if ((r == 1 && q == 0) || (r == -1 && q == 0)) {
        s.ray_index_ = 1;
        s.r_ = 1;
        s.q_ = 0;
    } else if ((r == a && q == b) || (r == -a && q == -b)) {
        s.ray_index_ = 2;
        s.r_ = a;
        s.q_ = b;
    } else if (strictly_interior(a, b, r, q)) {
        s.interior_ = true;
    } else if (strictly_interior(a, b, -r, -q)) {
        s.interior_ = true;
        s.r_ = -r;
        s.q_ = -q;
    } else {
        // Case 1: the line misses the cone; normalize the sign only.
        if (s.q_ < 0 || (s.q_ == 0 && s.r_ < 0)) {
            s.r_ = -s.r_;
            s.q_ = -s.q_;
        }
    }
    s.d_ = s.r_ * b - s.q_ * a;
    s.uv_ = bezout(s.r_, s.q_);
    return s;
}

Cone SurfaceData::cone() const {
    return Cone::from_generators(2, {LatticeVector{1, 0},
                                     LatticeVector{std::vector<Int>{a_, b_}}});
}

SubtorusRestriction SurfaceData::subtorus() const {
    return SubtorusRestriction::from_basis(2, {LatticeVector{std::vector<Int>{r_, q_}}});
}

Int SurfaceData::rho1_threshold() const { return ceil_div(a_, b_); }

std::pair<Int, Int> SurfaceData::rho2_base_root() const {
    // The unique (m1, m2) with a m1 + b m2 = -1 and 0 <= m1 < b.
    ExtendedGcd e = extended_gcd(a_, b_);
    Int m1 = (-e.x) % b_;
    if (m1 < 0) m1 += b_;
    Int m2 = (Int(-1) - a_ * m1) / b_;
    return {m1, m2};
}

namespace {

struct LambdaProgression {
    bool empty;
    Int gcd_qd;
    Int rho1_start, rho1_step;
    Int rho2_start, rho2_step;
    Int first; // least common element, defined when nonempty
    Int step;  // lcm(q, D)
};

LambdaProgression lambda_progression(const SurfaceData& s) {
    if (!s.line_meets_interior())
        throw DomainError("bad_case", "Lambda is defined when the line meets the interior");
    LambdaProgression lp{};
    const Int q = s.q(), r = s.r(), dd = s.d();
    lp.rho1_step = q;
    lp.rho1_start = -r + s.rho1_threshold() * q;
    auto [m1, m2] = s.rho2_base_root();
    lp.rho2_step = dd;
    lp.rho2_start = r * m1 + q * m2;
    lp.gcd_qd = gcd(q, dd);
    lp.empty = ((s.a() - 1) % lp.gcd_qd) != 0;
    lp.step = lcm(q, dd);

    // The constructive route: m0*q - k0*D = r + r*m1 + q*m2 solved by the
    // extended Euclid, then reduced to the least member above both starts.
    const Int cc = r + lp.rho2_start;
    ExtendedGcd e = extended_gcd(q, dd);
    const bool solvable = (cc % e.g) == 0;
    if (solvable == lp.empty)
        throw DomainError("internal", "gcd criterion disagrees with the congruence solver");
    if (lp.empty) return lp;
    Int m0 = e.x * (cc / e.g); // q*m0 - D*k0 = cc with k0 = -e.y*(cc/g)
    Int witness = -r + m0 * q;
    Int threshold = std::max(lp.rho1_start, lp.rho2_start);
    lp.first = witness - floor_div(witness - threshold, lp.step) * lp.step;
    return lp;
}

} // namespace

LambdaSet lambda_members(const SurfaceData& s, int bound) {
    LambdaProgression lp = lambda_progression(s);
    LambdaSet out;
    out.empty = lp.empty;
    out.gcd_qd = lp.gcd_qd;
    out.step = lp.step;
    out.rho1_start = lp.rho1_start;
    out.rho1_step = lp.rho1_step;
    out.rho2_start = lp.rho2_start;
    out.rho2_step = lp.rho2_step;
    if (lp.empty) return out;
    out.first = lp.first;
    Int j = std::max(Int(0), ceil_div(Int(-bound) - lp.first, lp.step));
    for (Int t = lp.first + j * lp.step; t <= bound; t += lp.step) out.members.push_back(t);
    return out;
}

bool lambda_contains(const SurfaceData& s, const Int& t) {
    if (!s.line_meets_interior()) return false;
    const Int q = s.q(), r = s.r(), dd = s.d();
    if ((t + r) % q != 0 || t < -r + s.rho1_threshold() * q) return false;
    auto [m1, m2] = s.rho2_base_root();
    Int start = r * m1 + q * m2;
    return (t - start) % dd == 0 && t >= start;
}

SurfaceCase classify_surface(const SurfaceData& s) {
    SurfaceCase out;
    if (s.line_is_ray()) {
        out.tag = SurfaceCaseTag::Case2;
        out.ray_index = s.ray_index();
        out.generic_row = {"1", "1", true};
        out.special_row = RowAnswer{"infinite-dimensional space", "infinite", false};
        out.special_row_label = "e = -1";
        return out;
    }
    if (!s.line_meets_interior()) {
        out.tag = SurfaceCaseTag::Case1;
        out.generic_row = {"1", "1", true};
        return out;
    }
    LambdaProgression lp = lambda_progression(s);
    std::ostringstream desc;
    if (lp.empty) {
        desc << "Lambda is empty: gcd(q, D) = " << lp.gcd_qd << " does not divide a - 1 = "
             << (s.a() - 1);
        out.tag = SurfaceCaseTag::Case31;
        out.generic_row = {"1", "1", true};
        out.lambda_description = desc.str();
        return out;
    }
    desc << "Lambda = {" << lp.first << " + " << lp.step << "k : k >= 0}";
    out.lambda_description = desc.str();
    out.generic_row = {"1", "1", true};
    if (s.q() == 1 || s.d() == 1) {
        out.tag = SurfaceCaseTag::Case33;
        out.special_row = RowAnswer{"P^1 family", "2", false};
    } else {
        out.tag = SurfaceCaseTag::Case32;
        out.special_row = RowAnswer{"2", "2", true};
    }
    out.special_row_label = "e in Lambda";
    return out;
}

AhInvariants ah_invariants(const SurfaceData& s) {
    if (!s.line_meets_interior())
        throw DomainError("bad_case", "divisor coefficients are defined in Case 3");
    AhInvariants out;
    out.uv = s.uv();
    out.p1 = Rat(out.uv.u, s.q());
    out.p2 = Rat(s.a() * out.uv.u + s.b() * out.uv.v, s.d());
    out.p1_integral = boost::multiprecision::denominator(out.p1) == 1;
    out.p2_integral = boost::multiprecision::denominator(out.p2) == 1;
    return out;
}

NormalizedSurface normalize_cone(const Cone& c) {
    if (c.rank() != 2) throw DomainError("bad_rank", "surface normal form needs a rank-2 cone");
    if (c.rays().size() != 2) throw DomainError("internal", "rank-2 cone must have two rays");
    const LatticeVector v1 = c.rays()[0], v2 = c.rays()[1];
    ExtendedGcd e = extended_gcd(v1[0], v1[1]);
    IntMatrix u = mat2(e.x, e.y, -v1[1], v1[0]); // u*v1 = (1,0), det = 1
    LatticeVector w = u.apply(v2);
    if (w[1] == 0) throw DomainError("internal", "second ray collapsed onto the first");
    if (w[1] < 0) {
        u = mat2(1, 0, 0, -1) * u;
        w = LatticeVector{std::vector<Int>{w[0], -w[1]}};
    }
    Int t = -floor_div(w[0], w[1]);
    u = mat2(1, t, 0, 1) * u;
    NormalizedSurface out;
    out.a = w[0] + t * w[1];
    out.b = w[1];
    out.on_n = u;
    out.on_m = inverse_unimodular_2x2(u).transposed();
    return out;
}

std::pair<DemazureRoot, DemazureRoot> lambda_lifts(const SurfaceData& s, const Int& t) {
    if (!lambda_contains(s, t))
        throw DomainError("not_in_lambda", "t-root " + t.str() + " is not in Lambda");
    Int m = (t + s.r()) / s.q();
    DemazureRoot f1{LatticeVector{std::vector<Int>{Int(-1), m}}, LatticeVector{1, 0}};
    auto [m1, m2] = s.rho2_base_root();
    Int k = (t - (s.r() * m1 + s.q() * m2)) / s.d();
    DemazureRoot f2{LatticeVector{std::vector<Int>{m1 + k * s.b(), m2 - k * s.a()}},
                    LatticeVector{std::vector<Int>{s.a(), s.b()}}};
    return {std::move(f1), std::move(f2)};
}

Derivation nhrv_family_member(const SurfaceData& s, const Int& t, const Rat& alpha,
                              const Rat& beta) {
    if (!s.line_meets_interior() || (s.q() != 1 && s.d() != 1))
        throw DomainError("bad_case",
                          "the P^1 family exists when q = 1 or D = 1 (Case 3.3)");
    auto [f1, f2] = lambda_lifts(s, t);
    Cone c = s.cone();
    if (s.q() == 1) {
        // <(1,0), (-1, r)> = -1.
        LatticeVector m_t{std::vector<Int>{Int(-1), s.r()}};
        return nhrv_derivation(c, f1, f2, m_t, alpha, beta);
    }
    // D = 1: <(a,b), (q,-r)> = aq - br = -D = -1.
    LatticeVector m_t{std::vector<Int>{s.q(), -s.r()}};
    return nhrv_derivation(c, f2, f1, m_t, alpha, beta);
}

const char* to_string(SurfaceCaseTag t) {
    switch (t) {
    case SurfaceCaseTag::Case1: return "case-1";
    case SurfaceCaseTag::Case2: return "case-2";
    case SurfaceCaseTag::Case31: return "case-3.1";
    case SurfaceCaseTag::Case32: return "case-3.2";
    case SurfaceCaseTag::Case33: return "case-3.3";
    }
    return "?";
}

} // namespace demroots
