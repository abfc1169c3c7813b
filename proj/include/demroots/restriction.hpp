#ifndef DEMROOTS_RESTRICTION_HPP
#define DEMROOTS_RESTRICTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "demroots/demazure.hpp"
#include "demroots/lnd.hpp"

namespace demroots {

// A subtorus inclusion T in TT, given by a saturated basis of the sublattice
// N_T of N. The restriction of characters pi: M -> M_T is written in the dual
// basis of the chosen N_T basis, so pi(m) = (<b_1,m>, ..., <b_k,m>). In the
// codimension-one case m_T generates ker pi.
class SubtorusRestriction {
public:
    static SubtorusRestriction from_basis(int ambient_rank, std::vector<LatticeVector> basis);
    // Codimension-one subtorus attached to a hyperplane in N_Q.
    static SubtorusRestriction from_hyperplane(const Hyperplane& h);

    int ambient_rank() const { return ambient_rank_; }
    int subtorus_rank() const { return pi_.rows(); }
    int corank() const { return ambient_rank_ - subtorus_rank(); }

    const std::vector<LatticeVector>& basis() const { return basis_; }
    const IntMatrix& pi() const { return pi_; }
    LatticeVector restrict_root(const LatticeVector& e) const { return pi_.apply(e); }
    const std::optional<LatticeVector>& kernel_char() const { return m_t_; }
    Hyperplane hyperplane() const; // corank one only

private:
    SubtorusRestriction() = default;
    int ambient_rank_ = 0;
    std::vector<LatticeVector> basis_;
    IntMatrix pi_;
    std::optional<LatticeVector> m_t_;
};

enum class CardinalityClass { ExactlyOne, Exactly, InfiniteCertified, UnknownBeyondBound };
enum class RootSpaceDim { One, Dim, InfiniteDim, P1Family, Unknown };

// Solved lambda-interval for one candidate ray: the set of lambda with
// base + lambda*m_T a root distinguished at this ray.
struct RayInterval {
    LatticeVector ray;
    bool ray_in_hyperplane; // <n_rho, m_T> = 0
    bool empty;
    bool lower_bounded, upper_bounded;
    Int lo, hi; // valid when the respective side is bounded
};

struct ArithmeticProgressionWitness {
    LatticeVector base; // a root in the fiber
    LatticeVector ray;
    LatticeVector step; // +-m_T; base + k*step is a root for all k >= 0
};

struct FiberReport {
    LatticeVector t_root;
    std::vector<DemazureRoot> preimages; // within the bound box, sorted
    CardinalityClass cardinality_class;
    Int cardinality; // total fiber size when finite
    RootSpaceDim dim_class;
    Int dim_value; // for Dim(k)
    std::optional<ArithmeticProgressionWitness> witness; // InfiniteCertified
    std::vector<RayInterval> intervals;                  // the certificates
    bool unique_lift_t_homogeneous; // Theorem-mt flag: fiber of one element
};

// Certified fiber of the root restriction over t_root. The preimage list is
// clipped to the box; the cardinality class is exact, independent of the box:
// every preimage lies on base + lambda*m_T and each ray contributes an integer
// interval of lambda.
FiberReport fiber(const SubtorusRestriction& s, const Cone& c, const LatticeVector& t_root,
                  int bound);

enum class InjectivityStatus { Certified, NotInjectiveWitnessed, InjectiveWithinBound };

struct RayRestrictionInfo {
    LatticeVector ray;
    bool in_hyperplane;
    InjectivityStatus injectivity;
};

struct ClassifyReport {
    RelativePosition position;
    std::vector<RayRestrictionInfo> ray_info;
    bool images_pairwise_disjoint; // across distinct rays, over the listed T-roots
    std::vector<LatticeVector> t_roots;  // = pi(roots within bound), sorted
    std::vector<FiberReport> fibers;     // one per T-root
    bool all_fibers_exactly_one;
};

ClassifyReport classify(const SubtorusRestriction& s, const Cone& c, int bound);

// A root vector of the "volume preserving" automorphism group of the
// polynomial algebra: the monomial derivation x^alpha d/dx_i, alpha_i = 0,
// together with its character exponents (t_i^{-1} prod t_j^{alpha_j}).
struct CremonaRootVector {
    int index;                        // i, 1-based
    LatticeVector alpha;              // exponent vector, alpha_i = 0
    LatticeVector character_exponents; // = alpha - e_i
    LatticeVector t_root;             // restriction of the character
    std::string derivation_text;
};

// All root vectors with |alpha| <= bound, derived by classifying the
// restriction along prod t_i = 1 and converting roots to monomial
// derivations.
std::vector<CremonaRootVector> cremona_roots(int n, int bound);

const char* to_string(CardinalityClass c);
const char* to_string(RootSpaceDim d);
const char* to_string(InjectivityStatus s);

} // namespace demroots

#endif
