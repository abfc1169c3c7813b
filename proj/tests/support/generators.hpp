// Seeded random instance generators for the property suites.
#ifndef DEMROOTS_TESTS_GENERATORS_HPP
#define DEMROOTS_TESTS_GENERATORS_HPP

#include <random>

#include "demroots/cone.hpp"
#include "demroots/restriction.hpp"

namespace demroots::testing {

using Rng = std::mt19937_64;

inline long long rand_int(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline LatticeVector rand_vector(Rng& rng, int rank, int box) {
    std::vector<Int> c;
    for (int i = 0; i < rank; ++i) c.emplace_back(rand_int(rng, -box, box));
    return LatticeVector(std::move(c));
}

inline LatticeVector rand_nonzero_vector(Rng& rng, int rank, int box) {
    while (true) {
        LatticeVector v = rand_vector(rng, rank, box);
        if (!v.is_zero()) return v;
    }
}

inline Cone rand_pointed_cone(Rng& rng, int rank, int box = 4) {
    while (true) {
        int k = static_cast<int>(rand_int(rng, rank, rank + 2));
        std::vector<LatticeVector> gens;
        for (int i = 0; i < k; ++i) gens.push_back(rand_nonzero_vector(rng, rank, box));
        try {
            return Cone::from_generators(rank, std::move(gens));
        } catch (const DomainError&) {
            continue;
        }
    }
}

// Random cone + corank-one subtorus in the requested relative position.
struct RandomInstance {
    Cone cone;
    SubtorusRestriction subtorus;
};

inline RandomInstance rand_instance_with_position(Rng& rng, int rank, PositionKind want,
                                                  int box = 4) {
    while (true) {
        Cone c = rand_pointed_cone(rng, rank, box);
        LatticeVector normal = rand_nonzero_vector(rng, rank, box);
        Hyperplane h = Hyperplane::from_normal(normal);
        if (relative_position(c, h).kind != want) continue;
        return {std::move(c), SubtorusRestriction::from_hyperplane(h)};
    }
}

inline Rat rand_rational(Rng& rng, int box = 6) {
    Int num = rand_int(rng, -box, box);
    Int den = rand_int(rng, 1, box);
    return Rat(num, den);
}

inline Rat rand_nonzero_rational(Rng& rng, int box = 6) {
    while (true) {
        Rat r = rand_rational(rng, box);
        if (r != 0) return r;
    }
}

} // namespace demroots::testing

#endif
