#include "demroots/lattice.hpp"

#include <doctest.h>

#include "support/generators.hpp"

using namespace demroots;
using demroots::testing::Rng;
using demroots::testing::rand_int;
using demroots::testing::rand_nonzero_vector;
using demroots::testing::rand_vector;

TEST_CASE("pairing is the exact dot product") {
    CHECK(pairing(LatticeVector{1, 0}, LatticeVector{-1, 2}) == -1);
    // <(a,b),(m1,m2)> with (a,b)=(1,2): the S_rho2 membership value a*m1+b*m2.
    CHECK(pairing(LatticeVector{1, 2}, LatticeVector{1, -1}) == -1);
    CHECK(pairing(LatticeVector{3, -4, 5}, LatticeVector::zero(3)) == 0);
    CHECK_THROWS_AS(pairing(LatticeVector{1, 0}, LatticeVector{1, 0, 0}), DomainError);
}

TEST_CASE("primitive divides by the content and keeps direction") {
    CHECK(primitive(LatticeVector{2, 4}) == LatticeVector{1, 2});
    CHECK(primitive(LatticeVector{-3, 6}) == LatticeVector{-1, 2});
    CHECK(primitive(LatticeVector{0, 0, 5}) == LatticeVector{0, 0, 1});
    CHECK_THROWS_AS(primitive(LatticeVector::zero(2)), DomainError);
}

TEST_CASE("pairing/primitive compatibility on random vectors") {
    Rng rng(0x147710ceULL);
    for (int it = 0; it < 300; ++it) {
        int rank = static_cast<int>(rand_int(rng, 1, 4));
        LatticeVector v = rand_nonzero_vector(rng, rank, 30);
        LatticeVector m = rand_nonzero_vector(rng, rank, 30);
        CHECK(pairing(primitive(v), m) * content(v) == pairing(v, m));
    }
}

TEST_CASE("bezout canonical representative") {
    BezoutPair p = bezout(1, 1);
    CHECK(p.u == 1);
    CHECK(p.v == 0);

    p = bezout(4, 5);
    CHECK(p.u == -1);
    CHECK(p.v == 1);
    CHECK(Int(4) * p.u + Int(5) * p.v == 1);

    CHECK_THROWS_AS(bezout(2, 4), DomainError);

    p = bezout(0, -1);
    CHECK(p.u == 0);
    CHECK(p.v == -1);
}

TEST_CASE("bezout identity on random coprime pairs") {
    Rng rng(0xbe207ULL);
    int done = 0;
    while (done < 1000) {
        Int r = rand_int(rng, -500, 500);
        Int q = rand_int(rng, -500, 500);
        if (gcd(r, q) != 1) continue;
        BezoutPair p = bezout(r, q);
        CHECK(r * p.u + q * p.v == 1);
        if (r != 0) {
            CHECK(p.v >= 0);
            CHECK(p.v < boost::multiprecision::abs(r));
        }
        ++done;
    }
}

TEST_CASE("kernel_generator on the paper hyperplanes") {
    // The subtorus (s1, s1, s2) in the 3-torus.
    CHECK(kernel_generator({LatticeVector{1, 1, 0}, LatticeVector{0, 0, 1}}) ==
          LatticeVector{1, -1, 0});

    // sum z_i = 0 in rank n gives (1,...,1).
    for (int n = 2; n <= 5; ++n) {
        std::vector<LatticeVector> basis;
        for (int i = 0; i + 1 < n; ++i)
            basis.push_back(LatticeVector::unit(n, i) - LatticeVector::unit(n, i + 1));
        LatticeVector m = kernel_generator(basis);
        for (int i = 0; i < n; ++i) CHECK(m[i] == 1);
    }

    // {(r,q)} in rank 2 -> +-(q,-r).
    Rng rng(0x5eed);
    for (int it = 0; it < 200; ++it) {
        Int r = rand_int(rng, -20, 20);
        Int q = rand_int(rng, -20, 20);
        if (gcd(r, q) != 1) continue;
        LatticeVector m = kernel_generator({LatticeVector{std::vector<Int>{r, q}}});
        CHECK(pairing(LatticeVector{std::vector<Int>{r, q}}, m) == 0);
        CHECK(content(m) == 1);
        bool plus = (m == LatticeVector{std::vector<Int>{q, -r}});
        bool minus = (m == LatticeVector{std::vector<Int>{-q, r}});
        CHECK((plus || minus));
        for (int i = 0; i < 2; ++i) {
            if (m[i] == 0) continue;
            CHECK(m[i] > 0);
            break;
        }
    }
}

TEST_CASE("kernel_generator pairs to zero and is primitive (random corank one)") {
    Rng rng(0xc0de);
    int done = 0;
    while (done < 100) {
        int n = static_cast<int>(rand_int(rng, 2, 4));
        std::vector<LatticeVector> basis;
        for (int i = 0; i + 1 < n; ++i) basis.push_back(rand_nonzero_vector(rng, n, 5));
        try {
            LatticeVector m = kernel_generator(basis);
            for (const auto& b : basis) CHECK(pairing(b, m) == 0);
            CHECK(content(m) == 1);
            ++done;
        } catch (const DomainError&) {
            continue; // dependent or unsaturated draw
        }
    }
}

TEST_CASE("kernel_generator rejects bad input") {
    // Not corank one.
    CHECK_THROWS_AS(kernel_generator({LatticeVector{1, 0, 0}}), DomainError);
    // Dependent rows.
    CHECK_THROWS_AS(kernel_generator({LatticeVector{1, 1, 0}, LatticeVector{2, 2, 0}}),
                    DomainError);
    // Index-two sublattice of its saturation.
    CHECK_THROWS_AS(kernel_generator({LatticeVector{2, 0, 0}, LatticeVector{0, 2, 0}}),
                    DomainError);
}

TEST_CASE("solve_integer finds integer solutions exactly when they exist") {
    IntMatrix pi = IntMatrix::from_rows({LatticeVector{1, 1, 0}, LatticeVector{0, 0, 1}});
    auto x = solve_integer(pi, LatticeVector{3, -1});
    REQUIRE(x.has_value());
    CHECK(pi.apply(*x) == LatticeVector{3, -1});

    // 2x = 1 has no integer solution.
    IntMatrix two = IntMatrix::from_rows({LatticeVector{2}});
    CHECK(!solve_integer(two, LatticeVector{1}).has_value());
    CHECK(solve_integer(two, LatticeVector{6}).has_value());
}

TEST_CASE("solve_integer random round trips") {
    Rng rng(0x50f7);
    for (int it = 0; it < 200; ++it) {
        int n = static_cast<int>(rand_int(rng, 2, 4));
        int k = static_cast<int>(rand_int(rng, 1, n - 1));
        std::vector<LatticeVector> rows;
        for (int i = 0; i < k; ++i) rows.push_back(rand_nonzero_vector(rng, n, 6));
        if (rank_of(rows) != k) continue;
        IntMatrix a = IntMatrix::from_rows(rows);
        LatticeVector want = a.apply(rand_vector(rng, n, 8));
        auto x = solve_integer(a, want);
        REQUIRE(x.has_value());
        CHECK(a.apply(*x) == want);
    }
}

TEST_CASE("orthogonal_complement_basis is saturated and orthogonal") {
    Rng rng(0x0c0b);
    for (int it = 0; it < 150; ++it) {
        int n = static_cast<int>(rand_int(rng, 2, 4));
        LatticeVector m = rand_nonzero_vector(rng, n, 9);
        auto basis = orthogonal_complement_basis(m);
        CHECK(static_cast<int>(basis.size()) == n - 1);
        for (const auto& b : basis) CHECK(pairing(b, m) == 0);
        CHECK(rank_of(basis) == n - 1);
        // Saturated corank-one: kernel_generator accepts it and returns +-primitive(m).
        LatticeVector back = kernel_generator(basis);
        LatticeVector p = primitive(m);
        CHECK((back == p || back == -p));
    }
}

TEST_CASE("determinant (Bareiss) matches cofactor expansion on 3x3") {
    Rng rng(0xdead);
    for (int it = 0; it < 100; ++it) {
        IntMatrix m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = rand_int(rng, -9, 9);
        Int cof = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                  m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                  m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        CHECK(m.determinant() == cof);
    }
}

TEST_CASE("floor_div and ceil_div") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(ceil_div(-7, -2) == 4);
    CHECK(floor_div(6, 3) == 2);
    CHECK(ceil_div(6, 3) == 2);
}
