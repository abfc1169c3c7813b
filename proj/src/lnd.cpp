#include "demroots/lnd.hpp"

#include <algorithm>
#include <sstream>

namespace demroots {

AlgebraElement AlgebraElement::character(LatticeVector m, Rat coeff) {
    AlgebraElement f;
    f.add_term(m, coeff);
    return f;
}

AlgebraElement& AlgebraElement::add_term(const LatticeVector& m, const Rat& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

AlgebraElement& AlgebraElement::add_scaled(const AlgebraElement& o, const Rat& k) {
    for (const auto& [m, c] : o.terms_) add_term(m, c * k);
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1 + m2, c1 * c2);
    return out;
}

AlgebraElement AlgebraElement::operator*(const Rat& k) const {
    AlgebraElement out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * k);
    return out;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << to_string(c) << "*chi^" << m.str();
        first = false;
    }
    return os.str();
}

Derivation::Derivation(Cone cone, DerivationDescriptor desc,
                       std::function<AlgebraElement(const LatticeVector&)> action)
    : cone_(std::make_shared<const Cone>(std::move(cone))), desc_(std::move(desc)),
      action_(std::move(action)) {}

Derivation root_lnd(const Cone& c, const DemazureRoot& root, const Rat& scalar) {
    auto ray = is_root(c, root.e);
    if (!ray || *ray != root.ray)
        throw DomainError("not_a_root",
                          root.e.str() + " is not a Demazure root at ray " + root.ray.str());
    DerivationDescriptor desc{DerivationDescriptor::Kind::RootLnd, true, root.e,
                              "root LND, e=" + root.e.str() + ", ray=" + root.ray.str()};
    LatticeVector e = root.e, n = root.ray;
    return Derivation(c, std::move(desc), [e, n, scalar](const LatticeVector& m) {
        return AlgebraElement::character(m + e, scalar * Rat(pairing(n, m)));
    });
}

Derivation homogeneous_monomial_derivation(const Cone& c, const LatticeVector& w,
                                           const LatticeVector& degree, const Rat& scalar) {
    if (w.rank() != c.rank() || degree.rank() != c.rank())
        throw DomainError("rank_mismatch", "derivation data does not match cone rank");
    DerivationDescriptor desc{DerivationDescriptor::Kind::HomogeneousMonomial, false, degree,
                              "chi^m -> <" + w.str() + ",m> chi^{m+" + degree.str() + "}"};
    return Derivation(c, std::move(desc), [w, degree, scalar](const LatticeVector& m) {
        return AlgebraElement::character(m + degree, scalar * Rat(pairing(w, m)));
    });
}

Derivation monomial_table_derivation(int rank, const std::vector<AlgebraElement>& images) {
    if (static_cast<int>(images.size()) != rank)
        throw DomainError("bad_table", "need one image per variable");
    Cone orthant = Cone::orthant(rank);
    for (const auto& img : images)
        for (const auto& [m, c] : img.terms())
            if (!orthant.weight_monoid_contains(m))
                throw DomainError("outside_monoid",
                                  "variable image has a non-polynomial term chi^" + m.str());
    // Homogeneous iff all images shift the degree by the same vector.
    std::optional<LatticeVector> degree;
    bool homogeneous = true;
    for (int i = 0; i < rank; ++i) {
        for (const auto& [m, c] : images[static_cast<size_t>(i)].terms()) {
            LatticeVector shift = m - LatticeVector::unit(rank, i);
            if (!degree)
                degree = shift;
            else if (*degree != shift)
                homogeneous = false;
        }
    }
    DerivationDescriptor desc{DerivationDescriptor::Kind::MonomialTable, false,
                              homogeneous ? degree : std::nullopt,
                              "table derivation on " + std::to_string(rank) + " variables"};
    return Derivation(orthant, std::move(desc), [rank, images](const LatticeVector& m) {
        AlgebraElement out;
        for (int i = 0; i < rank; ++i) {
            if (m[i] == 0) continue;
            AlgebraElement factor = AlgebraElement::character(m - LatticeVector::unit(rank, i),
                                                              Rat(m[i]));
            out += factor * images[static_cast<size_t>(i)];
        }
        return out;
    });
}

Derivation sum(const std::vector<Derivation>& parts) {
    if (parts.empty()) throw DomainError("empty_sum", "sum of zero derivations");
    for (const auto& p : parts)
        if (p.cone() != parts[0].cone())
            throw DomainError("cone_mismatch", "summands live on different cones");
    std::optional<LatticeVector> degree = parts[0].descriptor().degree;
    for (const auto& p : parts)
        if (p.descriptor().degree != degree) degree = std::nullopt;
    DerivationDescriptor desc{DerivationDescriptor::Kind::Sum, false, degree,
                              "sum of " + std::to_string(parts.size()) + " derivations"};
    return Derivation(parts[0].cone(), std::move(desc), [parts](const LatticeVector& m) {
        AlgebraElement out;
        for (const auto& p : parts) out += p.on_character(m);
        return out;
    });
}

namespace {

Int binomial(const Int& n, int k) {
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

} // namespace

Derivation nhrv_derivation(const Cone& c, const DemazureRoot& e1, const DemazureRoot& e2,
                           const LatticeVector& m_t, const Rat& alpha, const Rat& beta) {
    if (e1.ray == e2.ray)
        throw DomainError("nhrv_equal_rays", "the two roots must use distinct rays");
    auto r1 = is_root(c, e1.e);
    if (!r1 || *r1 != e1.ray)
        throw DomainError("not_a_root", "e1 = " + e1.e.str() + " is not a root at " + e1.ray.str());
    auto r2 = is_root(c, e2.e);
    if (!r2 || *r2 != e2.ray)
        throw DomainError("not_a_root", "e2 = " + e2.e.str() + " is not a root at " + e2.ray.str());
    if (pairing(e1.ray, m_t) != -1)
        throw DomainError("nhrv_mt_pairing",
                          "<n_rho1, m_T> = " + pairing(e1.ray, m_t).str() + ", need -1");
    Int k = pairing(e1.ray, e2.e); // >= 0 since e2 is a root at the other ray
    if (e1.e - e2.e != m_t * (k + 1))
        throw DomainError("nhrv_restriction_mismatch",
                          "e1 - e2 != (<n_rho1,e2>+1) m_T: restrictions differ");

    // (alpha chi^{mT} - beta <n2,mT>)^k, expanded once.
    const Int n2mt = pairing(e2.ray, m_t);
    AlgebraElement power;
    int kk = static_cast<int>(k);
    for (int j = 0; j <= kk; ++j) {
        Rat coeff = Rat(binomial(k, j));
        for (int i = 0; i < j; ++i) coeff *= alpha;
        for (int i = 0; i < kk - j; ++i) coeff *= -beta * Rat(n2mt);
        power.add_term(m_t * j, coeff);
    }

    std::ostringstream text;
    text << "two-parameter LND: e1=" << e1.e.str() << ", e2=" << e2.e.str()
         << ", m_T=" << m_t.str() << ", alpha=" << to_string(alpha)
         << ", beta=" << to_string(beta);
    std::optional<LatticeVector> degree; // M-homogeneous only in the collapse cases
    if (beta == 0) degree = e1.e;
    if (alpha == 0) degree = e2.e;
    DerivationDescriptor desc{DerivationDescriptor::Kind::Nhrv, true, degree, text.str()};

    LatticeVector n1 = e1.ray, n2 = e2.ray, e2v = e2.e, mt = m_t;
    return Derivation(c, std::move(desc),
                      [n1, n2, e2v, mt, alpha, beta, power](const LatticeVector& m) {
                          AlgebraElement pre;
                          pre.add_term(m + e2v + mt, alpha * Rat(pairing(n1, m)));
                          pre.add_term(m + e2v, beta * Rat(pairing(n2, m)));
                          return pre * power;
                      });
}

AlgebraElement apply(const Derivation& d, const AlgebraElement& f) {
    AlgebraElement out;
    for (const auto& [m, c] : f.terms()) {
        if (!d.cone().weight_monoid_contains(m))
            throw DomainError("outside_monoid",
                              "chi^" + m.str() + " is not in the weight monoid");
        out.add_scaled(d.on_character(m), c);
    }
    for (const auto& [m, c] : out.terms())
        if (!d.cone().weight_monoid_contains(m))
            throw DomainError("outside_monoid",
                              "derivation image leaves the weight monoid at chi^" + m.str());
    return out;
}

NilpotencyVerdict nilpotency_oracle(const Derivation& d, const std::vector<AlgebraElement>& probes,
                                    int max_iter) {
    if (probes.empty()) throw DomainError("no_probes", "nilpotency oracle needs probes");
    if (max_iter < 1) throw DomainError("bad_bound", "max_iter must be >= 1");
    int worst = 0;
    for (const auto& probe : probes) {
        AlgebraElement g = probe;
        int n = 0;
        while (!g.is_zero() && n < max_iter) {
            g = apply(d, g);
            ++n;
        }
        if (!g.is_zero()) return {false, max_iter};
        worst = std::max(worst, n);
    }
    return {true, worst};
}

Derivation graded_piece(const Derivation& d, const LatticeVector& degree) {
    DerivationDescriptor desc{DerivationDescriptor::Kind::GradedPiece, false, degree,
                              "degree-" + degree.str() + " piece"};
    return Derivation(d.cone(), std::move(desc), [d, degree](const LatticeVector& m) {
        AlgebraElement full = d.on_character(m);
        AlgebraElement out;
        LatticeVector want = m + degree;
        auto it = full.terms().find(want);
        if (it != full.terms().end()) out.add_term(it->first, it->second);
        return out;
    });
}

HomogeneousDecomposition decompose(const Derivation& d,
                                   const std::vector<LatticeVector>& generating_chars,
                                   int oracle_max_iter) {
    if (generating_chars.empty())
        throw DomainError("no_generators", "decompose needs generating characters");
    std::vector<LatticeVector> degrees;
    for (const auto& a : generating_chars) {
        if (!d.cone().weight_monoid_contains(a))
            throw DomainError("outside_monoid", "generator chi^" + a.str() +
                                                    " is not in the weight monoid");
        AlgebraElement image = d.on_character(a);
        for (const auto& [m, c] : image.terms()) degrees.push_back(m - a);
    }
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    HomogeneousDecomposition out;
    for (const auto& e : degrees) out.pieces.emplace(e, graded_piece(d, e));

    // Consistency: the pieces partition the image on every generator.
    for (const auto& a : generating_chars) {
        AlgebraElement total;
        for (const auto& [e, piece] : out.pieces) total += piece.on_character(a);
        if (total != d.on_character(a))
            throw DomainError("internal", "graded pieces do not sum back to the derivation");
    }

    out.newton_polytope = convex_hull_vertices(degrees);
    std::vector<AlgebraElement> probes;
    for (const auto& a : generating_chars) probes.push_back(AlgebraElement::character(a));
    for (const auto& v : out.newton_polytope)
        out.vertex_verdicts.emplace(v, nilpotency_oracle(out.pieces.at(v), probes,
                                                         oracle_max_iter));
    return out;
}

std::optional<LatticeVector> homogeneous_degree(const Derivation& d,
                                                const std::vector<LatticeVector>& chars) {
    std::optional<LatticeVector> degree;
    for (const auto& a : chars) {
        AlgebraElement image = d.on_character(a);
        for (const auto& [m, c] : image.terms()) {
            LatticeVector shift = m - a;
            if (!degree)
                degree = shift;
            else if (*degree != shift)
                return std::nullopt;
        }
    }
    return degree;
}

std::optional<LatticeVector> t_degree(const Derivation& d, const IntMatrix& pi,
                                      const std::vector<LatticeVector>& chars) {
    std::optional<LatticeVector> degree;
    for (const auto& a : chars) {
        AlgebraElement image = d.on_character(a);
        for (const auto& [m, c] : image.terms()) {
            LatticeVector shift = pi.apply(m) - pi.apply(a);
            if (!degree)
                degree = shift;
            else if (*degree != shift)
                return std::nullopt;
        }
    }
    return degree;
}

namespace {

// p in conv(points)? Caratheodory: p is a convex combination of at most
// dim+1 affinely independent points, so it suffices to scan small subsets and
// solve the barycentric system exactly.
bool in_convex_hull(const LatticeVector& p, const std::vector<LatticeVector>& points) {
    if (points.empty()) return false;
    const int n = p.rank();
    const int cap = n + 1;
    const int npts = static_cast<int>(points.size());
    std::vector<int> subset;

    // Solve sum lambda_i q_i = p, sum lambda_i = 1, lambda >= 0 for the subset.
    auto feasible = [&](const std::vector<int>& idx) {
        const int s = static_cast<int>(idx.size());
        // (n+1) x (s+1) augmented system over Q.
        std::vector<std::vector<Rat>> a(static_cast<size_t>(n + 1),
                                        std::vector<Rat>(static_cast<size_t>(s + 1), Rat(0)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < s; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    Rat(points[static_cast<size_t>(idx[static_cast<size_t>(j)])][i]);
            a[static_cast<size_t>(i)][static_cast<size_t>(s)] = Rat(p[i]);
        }
        for (int j = 0; j < s; ++j) a[static_cast<size_t>(n)][static_cast<size_t>(j)] = 1;
        a[static_cast<size_t>(n)][static_cast<size_t>(s)] = 1;

        int row = 0;
        for (int col = 0; col < s && row <= n; ++col) {
            int pv = -1;
            for (int i = row; i <= n; ++i)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                    pv = i;
                    break;
                }
            if (pv < 0) return false; // dependent subset: a smaller one covers it
            std::swap(a[static_cast<size_t>(row)], a[static_cast<size_t>(pv)]);
            Rat d = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
            for (int jj = col; jj <= s; ++jj) a[static_cast<size_t>(row)][static_cast<size_t>(jj)] /= d;
            for (int i = 0; i <= n; ++i) {
                if (i == row) continue;
                Rat f = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
                if (f == 0) continue;
                for (int jj = col; jj <= s; ++jj)
                    a[static_cast<size_t>(i)][static_cast<size_t>(jj)] -=
                        f * a[static_cast<size_t>(row)][static_cast<size_t>(jj)];
            }
            ++row;
        }
        for (int i = row; i <= n; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(s)] != 0) return false; // inconsistent
        for (int i = 0; i < row; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(s)] < 0) return false; // lambda < 0
        return true;
    };

    std::function<bool(int, int)> scan = [&](int start, int remaining) {
        if (remaining == 0) return feasible(subset);
        for (int i = start; i <= npts - remaining; ++i) {
            subset.push_back(i);
            if (scan(i + 1, remaining - 1)) {
                subset.pop_back();
                return true;
            }
            subset.pop_back();
        }
        return false;
    };
    for (int size = 1; size <= std::min(cap, npts); ++size)
        if (scan(0, size)) return true;
    return false;
}

} // namespace

std::vector<LatticeVector> convex_hull_vertices(const std::vector<LatticeVector>& points) {
    std::vector<LatticeVector> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<LatticeVector> vertices;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<LatticeVector> others;
        others.reserve(pts.size() - 1);
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_convex_hull(pts[i], others)) vertices.push_back(pts[i]);
    }
    return vertices;
}

} // namespace demroots
