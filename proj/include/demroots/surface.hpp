#ifndef DEMROOTS_SURFACE_HPP
#define DEMROOTS_SURFACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "demroots/restriction.hpp"

namespace demroots {

// Affine toric surface in normal form: cone generated by (1,0) and (a,b)
// with 0 <= a < b, gcd(a,b) = 1, and a one-dimensional subtorus spanned by
// the primitive (r,q). The orientation of (r,q) is normalized at
// construction: towards the interior (D = rb - qa > 0, q > 0) when the line
// meets the interior, equal to the ray generator when the line is a ray, and
// q > 0 otherwise.
class SurfaceData {
public:
    static SurfaceData create(const Int& a, const Int& b, const Int& r, const Int& q);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& r() const { return r_; }
    const Int& q() const { return q_; }
    const Int& d() const { return d_; } // rb - qa after orientation
    const BezoutPair& uv() const { return uv_; }

    // Geometric position of the line against the cone.
    bool line_meets_interior() const { return interior_; }
    bool line_is_ray() const { return ray_index_ != 0; }
    int ray_index() const { return ray_index_; } // 1 = (1,0), 2 = (a,b), 0 = none

    Cone cone() const;
    SubtorusRestriction subtorus() const;
    // Smallest integer m with m >= a/b (the S_rho1 threshold).
    Int rho1_threshold() const;
    // The base root (m1, m2) of S_rho2 with 0 <= m1 < b.
    std::pair<Int, Int> rho2_base_root() const;

private:
    Int a_, b_, r_, q_, d_;
    BezoutPair uv_;
    bool interior_ = false;
    int ray_index_ = 0;
};

enum class SurfaceCaseTag { Case1, Case2, Case31, Case32, Case33 };

struct RowAnswer {
    std::string root_vectors;   // "1", "2", "infinite-dimensional space", "P^1 family"
    std::string lift_count;     // number of roots of the big torus restricting here
    bool all_t_homogeneous;     // are all T-homogeneous LNDs homogeneous for the big torus
};

struct SurfaceCase {
    SurfaceCaseTag tag;
    int ray_index = 0;               // Case2 only
    std::string lambda_description;  // Case 3 only
    RowAnswer generic_row;           // e outside the special set
    std::optional<RowAnswer> special_row;
    std::string special_row_label;   // "e = -1" or "e in Lambda"
};

SurfaceCase classify_surface(const SurfaceData& s);

// The intersection Lambda = pi(S_rho1) cap pi(S_rho2) for Case 3: emptiness
// by the gcd criterion, a constructed witness, the full description as an
// arithmetic progression, and the members within [-bound, bound].
struct LambdaSet {
    bool empty;
    Int gcd_qd;                 // gcd(q, D)
    std::optional<Int> first;   // least element, when nonempty
    Int step;                   // lcm(q, D)
    std::vector<Int> members;   // within the bound
    Int rho1_start, rho1_step;  // pi(S_rho1) = {rho1_start + m*rho1_step : m >= 0}
    Int rho2_start, rho2_step;  // pi(S_rho2) likewise
};

LambdaSet lambda_members(const SurfaceData& s, int bound);

// Membership in Lambda without a bound (Case 3).
bool lambda_contains(const SurfaceData& s, const Int& t);

struct AhInvariants {
    Rat p1, p2;
    bool p1_integral, p2_integral;
    BezoutPair uv;
};

// The coefficients of the polyhedral divisor (p1+sigma)[0] + (p2+sigma)[inf]
// attached to the surface with its one-dimensional subtorus (Case 3).
AhInvariants ah_invariants(const SurfaceData& s);

// GL2(Z) normal form of a rank-2 cone: rays mapped to (1,0) and (a,b) with
// 0 <= a < b. `on_n` acts on N; characters move by `on_m` = (on_n^{-1})^T.
struct NormalizedSurface {
    Int a, b;
    IntMatrix on_n;
    IntMatrix on_m;
};

NormalizedSurface normalize_cone(const Cone& c);

// The two lifts of a Lambda member: the S_rho1 root and the S_rho2 root
// restricting to t.
std::pair<DemazureRoot, DemazureRoot> lambda_lifts(const SurfaceData& s, const Int& t);

// Member of the P^1 family of root vectors over t in Lambda (Case 3.3 only:
// requires q = 1 or D = 1 so that a ray pairs to -1 with the kernel
// character).
Derivation nhrv_family_member(const SurfaceData& s, const Int& t, const Rat& alpha,
                              const Rat& beta);

const char* to_string(SurfaceCaseTag t);

} // namespace demroots

#endif
