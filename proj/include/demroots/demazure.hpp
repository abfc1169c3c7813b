#ifndef DEMROOTS_DEMAZURE_HPP
#define DEMROOTS_DEMAZURE_HPP

#include <optional>
#include <vector>

#include "demroots/cone.hpp"

namespace demroots {

// A Demazure root e of a cone together with its distinguished ray: the unique
// ray pairing to -1 while every other ray pairs >= 0.
struct DemazureRoot {
    LatticeVector e;
    LatticeVector ray;

    bool operator==(const DemazureRoot& o) const { return e == o.e && ray == o.ray; }
    bool operator<(const DemazureRoot& o) const {
        if (ray != o.ray) return ray < o.ray;
        return e < o.e;
    }
};

// Distinguished ray of e if e is a root of c, otherwise empty.
std::optional<LatticeVector> is_root(const Cone& c, const LatticeVector& e);

// All roots with sup-norm at most `bound`, grouped by distinguished ray in ray
// order and lexicographic within a group. Complete within the box; the full
// root set is infinite.
std::vector<DemazureRoot> roots_within(const Cone& c, int bound);

} // namespace demroots

#endif
