#ifndef DEMROOTS_LND_HPP
#define DEMROOTS_LND_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "demroots/demazure.hpp"

namespace demroots {

// Finite Q-linear combination of characters chi^m. The type itself is a
// formal sum; membership of the support in a weight monoid omega_M is
// enforced by the operations that carry a cone (apply, the CLI parsers).
class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement character(LatticeVector m, Rat coeff = Rat(1));

    AlgebraElement& add_term(const LatticeVector& m, const Rat& c);
    bool is_zero() const { return terms_.empty(); }
    const std::map<LatticeVector, Rat>& terms() const { return terms_; }

    // In-place accumulate o scaled by k.
    AlgebraElement& add_scaled(const AlgebraElement& o, const Rat& k);
    AlgebraElement& operator+=(const AlgebraElement& o) { return add_scaled(o, Rat(1)); }
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator*(const Rat& k) const;

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<LatticeVector, Rat> terms_;
};

struct DerivationDescriptor {
    enum class Kind {
        RootLnd,              // scalar * <n_rho, m> chi^{m+e}, e a root
        HomogeneousMonomial,  // scalar * <w, m> chi^{m+e}, arbitrary w, e
        MonomialTable,        // images of x_1..x_d, extended by Leibniz
        Sum,                  // finite sum of derivations
        Nhrv,                 // the two-parameter family, pre-expanded
        GradedPiece,          // degree-e component of another derivation
    };
    Kind kind;
    bool certified_lnd = false;            // local nilpotency guaranteed by construction
    std::optional<LatticeVector> degree;   // set when homogeneous by construction
    std::string text;
};

// A derivation on K[omega_M], represented by its action on characters.
// Immutable; copies share state.
class Derivation {
public:
    Derivation(Cone cone, DerivationDescriptor desc,
               std::function<AlgebraElement(const LatticeVector&)> action);

    int rank() const { return cone_->rank(); }
    const Cone& cone() const { return *cone_; }
    const DerivationDescriptor& descriptor() const { return desc_; }

    // Raw action on a character; no monoid validation.
    AlgebraElement on_character(const LatticeVector& m) const { return action_(m); }

private:
    std::shared_ptr<const Cone> cone_;
    DerivationDescriptor desc_;
    std::function<AlgebraElement(const LatticeVector&)> action_;
};

// The homogeneous LND attached to a Demazure root:
//   d(chi^m) = scalar * <n_rho, m> chi^{m+e}.
Derivation root_lnd(const Cone& c, const DemazureRoot& root, const Rat& scalar = Rat(1));

// d(chi^m) = scalar * <w, m> chi^{m+degree}; homogeneous but in general not
// locally nilpotent (w = (1,..,1), degree = 0 is the Euler derivation).
Derivation homogeneous_monomial_derivation(const Cone& c, const LatticeVector& w,
                                           const LatticeVector& degree, const Rat& scalar = Rat(1));

// Derivation of K[x_1..x_d] given by the images of the variables, extended to
// monomials by the Leibniz rule. The cone is the standard orthant.
Derivation monomial_table_derivation(int rank, const std::vector<AlgebraElement>& images);

Derivation sum(const std::vector<Derivation>& parts);

// The two-parameter T-homogeneous LND built from roots e1 (at rho1), e2 (at
// rho2 != rho1) with equal restrictions:
//   d(chi^m) = chi^{m+e2} (alpha <n1,m> chi^{mT} + beta <n2,m>)
//              (alpha chi^{mT} - beta <n2,mT>)^{<n1,e2>},
// with the binomial power expanded once at construction. Requires
// <n1,mT> = -1 and e1 - e2 = (<n1,e2>+1) mT.
Derivation nhrv_derivation(const Cone& c, const DemazureRoot& e1, const DemazureRoot& e2,
                           const LatticeVector& m_t, const Rat& alpha, const Rat& beta);

// Linear extension of the character action. Validates that the support of f
// and of the image lie in omega_M.
AlgebraElement apply(const Derivation& d, const AlgebraElement& f);

struct NilpotencyVerdict {
    bool nilpotent;
    int power; // smallest n with d^n = 0 on every probe, or max_iter
};

// Smallest n <= max_iter with d^n(probe) = 0 for all probes. A negative
// verdict is evidence only: local nilpotency is semi-decidable by iteration.
NilpotencyVerdict nilpotency_oracle(const Derivation& d,
                                    const std::vector<AlgebraElement>& probes, int max_iter);

struct HomogeneousDecomposition {
    std::map<LatticeVector, Derivation> pieces;        // degree -> homogeneous piece
    std::vector<LatticeVector> newton_polytope;        // vertex set of Delta(d)
    std::map<LatticeVector, NilpotencyVerdict> vertex_verdicts;
};

// Decomposition d = sum of homogeneous pieces, read off from the images of
// the generating characters; every vertex piece of the Newton polytope is run
// through the nilpotency oracle (probes: the generators).
HomogeneousDecomposition decompose(const Derivation& d,
                                   const std::vector<LatticeVector>& generating_chars,
                                   int oracle_max_iter = 50);

// Degree-e component of d (the Lemma-style graded piece).
Derivation graded_piece(const Derivation& d, const LatticeVector& degree);

// Common degree shift of d on the given characters, when d is homogeneous on
// them (nullopt when shifts differ or d kills all of them).
std::optional<LatticeVector> homogeneous_degree(const Derivation& d,
                                                const std::vector<LatticeVector>& chars);

// Same for the coarser grading through pi (degree lives in M_T).
std::optional<LatticeVector> t_degree(const Derivation& d, const IntMatrix& pi,
                                      const std::vector<LatticeVector>& chars);

// Vertices of the convex hull of a finite point set, exact arithmetic
// (Caratheodory membership tests). Returned sorted.
std::vector<LatticeVector> convex_hull_vertices(const std::vector<LatticeVector>& points);

} // namespace demroots

#endif
