#ifndef DEMROOTS_CONE_HPP
#define DEMROOTS_CONE_HPP

#include <optional>
#include <vector>

#include "demroots/lattice.hpp"

namespace demroots {

// Pointed full-dimensional rational polyhedral cone, held in both
// representations: extreme rays (primitive, lexicographic order) and facet
// normals (primitive, lexicographic order). Construction rejects cones with a
// lineality space and cones that are not full-dimensional.
class Cone {
public:
    static Cone from_generators(int rank, std::vector<LatticeVector> generators);
    static Cone orthant(int rank);

    int rank() const { return rank_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::vector<LatticeVector>& facet_normals() const { return facets_; }

    // p in sigma: all facet pairings >= 0.
    bool contains(const LatticeVector& p) const;
    // m in omega_M = sigma^vee cap M: all ray pairings >= 0.
    bool weight_monoid_contains(const LatticeVector& m) const;

    Cone dual() const;

    bool operator==(const Cone& o) const { return rank_ == o.rank_ && rays_ == o.rays_; }
    bool operator!=(const Cone& o) const { return !(*this == o); }

private:
    Cone() = default;
    int rank_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<LatticeVector> facets_;
};

// Hyperplane in N_Q, cut out by a primitive character (sign-canonical: first
// nonzero coordinate positive). Optionally carries the sublattice basis it
// was built from.
struct Hyperplane {
    LatticeVector normal;
    std::optional<std::vector<LatticeVector>> basis;

    static Hyperplane from_normal(const LatticeVector& m);
    static Hyperplane from_basis(std::vector<LatticeVector> basis);
};

enum class PositionKind {
    ZeroOnly,         // cone and hyperplane meet only at 0
    Face,             // intersection is a face of positive dimension
    InteriorNoRays,   // hyperplane meets the interior, contains no ray
    InteriorWithRays, // hyperplane meets the interior and contains rays
};

struct RelativePosition {
    PositionKind kind;
    int face_dim = 0;                              // Face only
    std::vector<LatticeVector> rays_in_hyperplane; // Face / InteriorWithRays
};

RelativePosition relative_position(const Cone& c, const Hyperplane& h);

const char* to_string(PositionKind k);

} // namespace demroots

#endif
