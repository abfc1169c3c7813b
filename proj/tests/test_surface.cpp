#include "demroots/surface.hpp"

#include <doctest.h>
#include <set>

#include "support/generators.hpp"

using namespace demroots;
using demroots::testing::Rng;
using demroots::testing::rand_int;

namespace {

// All valid surface tuples with b <= bmax, q in [1, qmax], |r| <= rmax.
std::vector<SurfaceData> surface_grid(long long bmax, long long qmax, long long rmax) {
    std::vector<SurfaceData> out;
    for (long long b = 1; b <= bmax; ++b)
        for (long long a = 0; a < b; ++a) {
            if (gcd(Int(a), Int(b)) != 1) continue;
            for (long long q = 1; q <= qmax; ++q)
                for (long long r = -rmax; r <= rmax; ++r) {
                    if (gcd(Int(r), Int(q)) != 1) continue;
                    out.push_back(SurfaceData::create(a, b, r, q));
                }
        }
    return out;
}

bool proportional_on(const Derivation& d1, const Derivation& d2,
                     const std::vector<LatticeVector>& probes) {
    // d1 = lambda d2 for a single rational lambda across all probes?
    std::optional<Rat> lambda;
    for (const auto& m : probes) {
        AlgebraElement a = d1.on_character(m);
        AlgebraElement b = d2.on_character(m);
        if (a.is_zero() && b.is_zero()) continue;
        if (a.is_zero() != b.is_zero()) return false;
        for (const auto& [key, cb] : b.terms()) {
            auto it = a.terms().find(key);
            if (it == a.terms().end()) return false;
            Rat ratio = it->second / cb;
            if (!lambda)
                lambda = ratio;
            else if (*lambda != ratio)
                return false;
        }
        if (a.terms().size() != b.terms().size()) return false;
    }
    return true;
}

} // namespace

TEST_CASE("surface data validation and orientation") {
    CHECK_THROWS_AS(SurfaceData::create(2, 2, 1, 1), DomainError);
    CHECK_THROWS_AS(SurfaceData::create(2, 4, 1, 1), DomainError);
    CHECK_THROWS_AS(SurfaceData::create(1, 2, 2, 4), DomainError);

    // Interior line handed in with the outward orientation gets flipped.
    SurfaceData s = SurfaceData::create(1, 2, -1, -1);
    CHECK(s.line_meets_interior());
    CHECK(s.r() == 1);
    CHECK(s.q() == 1);
    CHECK(s.d() == 1); // rb - qa = 2 - 1

    // Ray case stores the ray generator itself.
    SurfaceData ray2 = SurfaceData::create(1, 2, -1, -2);
    CHECK(ray2.line_is_ray());
    CHECK(ray2.ray_index() == 2);
    CHECK(ray2.r() == 1);
    CHECK(ray2.q() == 2);

    SurfaceData ray1 = SurfaceData::create(1, 2, -1, 0);
    CHECK(ray1.ray_index() == 1);
    CHECK(ray1.r() == 1);
    CHECK(ray1.q() == 0);
}

TEST_CASE("classify_surface: the worked cases") {
    // Smooth A^2 with the diagonal subtorus: q = 1 and D = 1.
    SurfaceCase c33 = classify_surface(SurfaceData::create(0, 1, 1, 1));
    CHECK(c33.tag == SurfaceCaseTag::Case33);
    REQUIRE(c33.special_row.has_value());
    CHECK(c33.special_row->root_vectors == "P^1 family");
    CHECK(c33.special_row->lift_count == "2");
    CHECK(!c33.special_row->all_t_homogeneous);

    // D = 4, gcd(3,4) = 1 divides a-1 = 1, q != 1, D != 1.
    SurfaceCase c32 = classify_surface(SurfaceData::create(2, 5, 2, 3));
    CHECK(c32.tag == SurfaceCaseTag::Case32);
    REQUIRE(c32.special_row.has_value());
    CHECK(c32.special_row->root_vectors == "2");
    CHECK(c32.special_row->all_t_homogeneous);

    // D = 5, gcd(5,5) = 5 does not divide a-1 = 2.
    SurfaceCase c31 = classify_surface(SurfaceData::create(3, 5, 4, 5));
    CHECK(c31.tag == SurfaceCaseTag::Case31);
    CHECK(!c31.special_row.has_value());
    CHECK(c31.generic_row.all_t_homogeneous);

    // A line missing the cone.
    SurfaceCase c1 = classify_surface(SurfaceData::create(0, 1, -1, 1));
    CHECK(c1.tag == SurfaceCaseTag::Case1);

    // The ray case.
    SurfaceCase c2 = classify_surface(SurfaceData::create(1, 2, 1, 0));
    CHECK(c2.tag == SurfaceCaseTag::Case2);
    CHECK(c2.ray_index == 1);
    REQUIRE(c2.special_row.has_value());
    CHECK(c2.special_row_label == "e = -1");
    CHECK(c2.special_row->root_vectors == "infinite-dimensional space");
    CHECK(!c2.special_row->all_t_homogeneous);
}

TEST_CASE("lambda members: the three spec instances") {
    // (0,1,1,1): both restrictions are {m - 1 : m >= 0}.
    LambdaSet l1 = lambda_members(SurfaceData::create(0, 1, 1, 1), 5);
    CHECK(!l1.empty);
    REQUIRE(l1.first.has_value());
    CHECK(*l1.first == -1);
    CHECK(l1.step == 1);
    std::vector<Int> expect;
    for (long long t = -1; t <= 5; ++t) expect.emplace_back(t);
    CHECK(l1.members == expect);

    // (3,5,4,5): empty by the gcd criterion; brute merge agrees.
    SurfaceData s2 = SurfaceData::create(3, 5, 4, 5);
    LambdaSet l2 = lambda_members(s2, 200);
    CHECK(l2.empty);
    CHECK(l2.members.empty());
    {
        std::set<Int> a, b;
        for (Int t = l2.rho1_start; t <= 200; t += l2.rho1_step) a.insert(t);
        for (Int t = l2.rho2_start; t <= 200; t += l2.rho2_step) b.insert(t);
        for (const auto& t : a) CHECK(b.count(t) == 0);
    }

    // (2,5,2,3): nonempty with the constructed witness; re-verified against
    // the two progressions directly.
    SurfaceData s3 = SurfaceData::create(2, 5, 2, 3);
    LambdaSet l3 = lambda_members(s3, 30);
    CHECK(!l3.empty);
    REQUIRE(l3.first.has_value());
    CHECK(*l3.first == 1);
    CHECK(l3.step == 12);
    CHECK(l3.members == std::vector<Int>{1, 13, 25});
    for (const auto& t : l3.members) {
        CHECK((t - l3.rho1_start) % l3.rho1_step == 0);
        CHECK(t >= l3.rho1_start);
        CHECK((t - l3.rho2_start) % l3.rho2_step == 0);
        CHECK(t >= l3.rho2_start);
        CHECK(lambda_contains(s3, t));
    }
    CHECK(!lambda_contains(s3, Int(2)));
    CHECK(!lambda_contains(s3, Int(-11))); // right residue, below threshold
}

TEST_CASE("lambda emptiness equals the gcd criterion across a grid") {
    for (const auto& s : surface_grid(8, 8, 8)) {
        if (!s.line_meets_interior()) continue;
        // lambda_members cross-checks the congruence solver internally;
        // verify against a plain brute-force merge of both progressions. Any
        // common element appears within one common period past the starts.
        LambdaSet l = lambda_members(s, 60);
        Int cap = std::max(l.rho1_start, l.rho2_start) + l.step;
        bool brute_found = false;
        std::set<Int> left;
        for (Int t = l.rho1_start; t <= cap; t += l.rho1_step) left.insert(t);
        for (Int t = l.rho2_start; t <= cap && !brute_found; t += l.rho2_step)
            if (left.count(t)) brute_found = true;
        CHECK(l.empty == ((s.a() - 1) % gcd(s.q(), s.d()) != 0));
        CHECK(l.empty == !brute_found);
    }
}

TEST_CASE("divisor coefficients p1, p2 and their integrality") {
    AhInvariants inv = ah_invariants(SurfaceData::create(0, 1, 1, 1));
    CHECK(inv.p1 == 1);
    CHECK(inv.p2 == 0);
    CHECK(inv.p1_integral);
    CHECK(inv.p2_integral);

    AhInvariants inv2 = ah_invariants(SurfaceData::create(2, 5, 2, 3));
    CHECK(!inv2.p1_integral);
    CHECK(!inv2.p2_integral);
    CHECK(inv2.p1 == Rat(-1, 3));
    CHECK(inv2.p2 == Rat(3, 4));

    CHECK_THROWS_AS(ah_invariants(SurfaceData::create(1, 2, 1, 0)), DomainError);
}

TEST_CASE("p1/p2 integrality flags are Bezout-choice independent") {
    Rng rng(0xabcd);
    for (const auto& s : surface_grid(6, 6, 6)) {
        if (!s.line_meets_interior()) continue;
        AhInvariants inv = ah_invariants(s);
        CHECK(inv.p1_integral == (s.q() == 1));
        CHECK(inv.p2_integral == (s.d() == 1));
        // Any other Bezout pair (u + qk, v - rk) shifts both by integers.
        Int k = rand_int(rng, -5, 5);
        Rat p1_shifted = Rat(inv.uv.u + s.q() * k, s.q());
        Rat p2_shifted = Rat(s.a() * (inv.uv.u + s.q() * k) + s.b() * (inv.uv.v - s.r() * k),
                             s.d());
        CHECK(boost::multiprecision::denominator(Rat(p1_shifted - inv.p1)) == 1);
        CHECK(boost::multiprecision::denominator(Rat(p2_shifted - inv.p2)) == 1);
    }
}

TEST_CASE("normalize_cone: worked examples") {
    NormalizedSurface n1 =
        normalize_cone(Cone::from_generators(2, {LatticeVector{1, 0}, LatticeVector{1, 2}}));
    CHECK(n1.a == 1);
    CHECK(n1.b == 2);
    CHECK(n1.on_n == IntMatrix::identity(2));

    NormalizedSurface n2 = normalize_cone(Cone::orthant(2));
    CHECK(n2.a == 0);
    CHECK(n2.b == 1);
}

TEST_CASE("normalize_cone: random cones, validated by re-applying the transform") {
    Rng rng(0x2d2d);
    int done = 0;
    while (done < 60) {
        Cone c = demroots::testing::rand_pointed_cone(rng, 2, 6);
        if (c.rays().size() != 2) continue;
        NormalizedSurface nf = normalize_cone(c);
        Int det = nf.on_n.determinant();
        CHECK((det == 1 || det == -1));
        CHECK(nf.on_n.apply(c.rays()[0]) == LatticeVector{1, 0});
        LatticeVector image = nf.on_n.apply(c.rays()[1]);
        CHECK(image == LatticeVector{std::vector<Int>{nf.a, nf.b}});
        CHECK(nf.a >= 0);
        CHECK(nf.a < nf.b);
        CHECK(gcd(nf.a, nf.b) == 1);
        // The companion matrix preserves the pairing.
        for (int it = 0; it < 5; ++it) {
            LatticeVector v = demroots::testing::rand_vector(rng, 2, 5);
            LatticeVector m = demroots::testing::rand_vector(rng, 2, 5);
            CHECK(pairing(nf.on_n.apply(v), nf.on_m.apply(m)) == pairing(v, m));
        }
        ++done;
    }
}

TEST_CASE("lambda lifts restrict to the member and are genuine roots") {
    for (const auto& s : surface_grid(6, 6, 6)) {
        if (!s.line_meets_interior()) continue;
        LambdaSet l = lambda_members(s, 20);
        if (l.empty) continue;
        Cone c = s.cone();
        SubtorusRestriction sub = s.subtorus();
        for (const auto& t : l.members) {
            auto [f1, f2] = lambda_lifts(s, t);
            CHECK(is_root(c, f1.e) == f1.ray);
            CHECK(is_root(c, f2.e) == f2.ray);
            CHECK(f1.ray == LatticeVector{1, 0});
            CHECK(sub.restrict_root(f1.e) == LatticeVector{std::vector<Int>{t}});
            CHECK(sub.restrict_root(f2.e) == LatticeVector{std::vector<Int>{t}});
        }
    }
}

TEST_CASE("case 3.3 family: T-homogeneous LNDs, not TT-homogeneous, non-proportional") {
    Rng rng(0x33f);
    std::vector<SurfaceData> instances = {
        SurfaceData::create(0, 1, 1, 1), SurfaceData::create(1, 2, 1, 1),
        SurfaceData::create(2, 5, 1, 1), SurfaceData::create(1, 3, 1, 1),
        SurfaceData::create(2, 3, 3, 2), // D = 5, q = 2: lands in 3.2, skipped below
    };
    for (const auto& s : instances) {
        SurfaceCase sc = classify_surface(s);
        if (sc.tag != SurfaceCaseTag::Case33) continue;
        LambdaSet l = lambda_members(s, 12);
        REQUIRE(!l.empty);
        REQUIRE(!l.members.empty());
        const Int t = l.members.front();
        std::vector<LatticeVector> probes;
        for (long long x = 0; x <= 3; ++x)
            for (long long y = -3; y <= 3; ++y) {
                LatticeVector m{x, y};
                if (s.cone().weight_monoid_contains(m)) probes.push_back(m);
            }
        Derivation d11 = nhrv_family_member(s, t, Rat(1), Rat(1));
        Derivation d12 = nhrv_family_member(s, t, Rat(1), Rat(2));
        Derivation d10 = nhrv_family_member(s, t, Rat(1), Rat(0));

        // T-homogeneous of degree t.
        auto td = t_degree(d11, s.subtorus().pi(), probes);
        REQUIRE(td.has_value());
        CHECK(*td == LatticeVector{std::vector<Int>{t}});
        // Not homogeneous for the fine grading when alpha*beta != 0 and the
        // exponent setup is non-degenerate.
        auto [f1, f2] = lambda_lifts(s, t);
        if (f1.e != f2.e) CHECK(!homogeneous_degree(d11, probes).has_value());
        // LND on probes.
        std::vector<AlgebraElement> chi_probes;
        for (const auto& m : probes) chi_probes.push_back(AlgebraElement::character(m));
        CHECK(nilpotency_oracle(d11, chi_probes, 40).nilpotent);
        // Distinct (alpha:beta) give non-proportional derivations.
        CHECK(!proportional_on(d11, d12, probes));
        CHECK(!proportional_on(d11, d10, probes));
        CHECK(!proportional_on(d12, d10, probes));
        // The same (alpha:beta) scaled is proportional.
        Derivation d22 = nhrv_family_member(s, t, Rat(2), Rat(2));
        CHECK(proportional_on(d11, d22, probes));
    }
    // The family is refused outside Case 3.3.
    CHECK_THROWS_AS(nhrv_family_member(SurfaceData::create(2, 5, 2, 3), Int(1), Rat(1), Rat(1)),
                    DomainError);
}

TEST_CASE("table rows agree with certified fibers (grid)") {
    for (const auto& s : surface_grid(6, 6, 6)) {
        SurfaceCase sc = classify_surface(s);
        ClassifyReport rep = classify(s.subtorus(), s.cone(), 8);
        for (size_t i = 0; i < rep.t_roots.size(); ++i) {
            const Int t = rep.t_roots[i][0];
            const FiberReport& f = rep.fibers[i];
            switch (sc.tag) {
            case SurfaceCaseTag::Case1:
            case SurfaceCaseTag::Case31:
                CHECK(f.cardinality_class == CardinalityClass::ExactlyOne);
                break;
            case SurfaceCaseTag::Case2:
                if (t == -1) {
                    CHECK(f.cardinality_class == CardinalityClass::InfiniteCertified);
                } else {
                    CHECK(f.cardinality_class == CardinalityClass::ExactlyOne);
                }
                break;
            case SurfaceCaseTag::Case32:
            case SurfaceCaseTag::Case33:
                if (lambda_contains(s, t)) {
                    CHECK(f.cardinality_class == CardinalityClass::Exactly);
                    CHECK(f.cardinality == 2);
                } else {
                    CHECK(f.cardinality_class == CardinalityClass::ExactlyOne);
                }
                break;
            }
        }
    }
}

TEST_CASE("fiber counts survive an un-normalizing lattice automorphism") {
    Rng rng(0x77aa);
    std::vector<SurfaceData> picks = {
        SurfaceData::create(0, 1, 1, 1), SurfaceData::create(2, 5, 2, 3),
        SurfaceData::create(3, 5, 4, 5), SurfaceData::create(1, 2, 1, 0),
        SurfaceData::create(2, 5, 1, 1)};
    for (const auto& s : picks) {
        // Random unimodular transform of N.
        Int x = rand_int(rng, -3, 3);
        IntMatrix u(2, 2);
        u.at(0, 0) = 1;
        u.at(0, 1) = x;
        u.at(1, 0) = 0;
        u.at(1, 1) = 1;
        IntMatrix flip(2, 2);
        flip.at(0, 0) = 0;
        flip.at(0, 1) = 1;
        flip.at(1, 0) = 1;
        flip.at(1, 1) = 0;
        if (rand_int(rng, 0, 1)) u = flip * u;

        Cone c0 = s.cone();
        std::vector<LatticeVector> gens;
        for (const auto& r : c0.rays()) gens.push_back(u.apply(r));
        Cone c1 = Cone::from_generators(2, gens);
        SubtorusRestriction s1 = SubtorusRestriction::from_basis(
            2, {u.apply(LatticeVector{std::vector<Int>{s.r(), s.q()}})});

        // Normal form recovers (a, b) up to the ray order: swapping the rays
        // replaces a by its inverse modulo b.
        NormalizedSurface nf = normalize_cone(c1);
        CHECK(nf.b == s.b());
        bool same = (nf.a == s.a());
        bool conjugate = ((nf.a * s.a()) % s.b() == 1 % s.b());
        CHECK((same || conjugate));

        // Certified fibers agree over matching T-root values: the pairing
        // <(r,q), e> is preserved by construction.
        SubtorusRestriction s0 = s.subtorus();
        for (const auto& root : roots_within(c0, 5)) {
            LatticeVector t = s0.restrict_root(root.e);
            FiberReport f0 = fiber(s0, c0, t, 5);
            FiberReport f1 = fiber(s1, c1, t, 5);
            CHECK(f0.cardinality_class == f1.cardinality_class);
            CHECK(f0.cardinality == f1.cardinality);
        }
    }
}
