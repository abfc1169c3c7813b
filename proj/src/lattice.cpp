#include "demroots/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace demroots {

LatticeVector::LatticeVector(std::initializer_list<long long> xs) {
    coords_.reserve(xs.size());
    for (long long x : xs) coords_.emplace_back(x);
}

LatticeVector LatticeVector::zero(int rank) {
    return LatticeVector(std::vector<Int>(static_cast<size_t>(rank), Int(0)));
}

LatticeVector LatticeVector::unit(int rank, int i) {
    LatticeVector v = zero(rank);
    v[i] = 1;
    return v;
}

bool LatticeVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

std::string LatticeVector::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

static void check_same_rank(const LatticeVector& a, const LatticeVector& b, const char* op) {
    if (a.rank() != b.rank())
        throw DomainError("rank_mismatch", std::string(op) + ": ranks " + std::to_string(a.rank()) +
                                               " and " + std::to_string(b.rank()) + " differ");
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    check_same_rank(*this, o, "vector sum");
    std::vector<Int> out(coords_);
    for (size_t i = 0; i < out.size(); ++i) out[i] += o.coords_[i];
    return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
    check_same_rank(*this, o, "vector difference");
    std::vector<Int> out(coords_);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= o.coords_[i];
    return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator-() const {
    std::vector<Int> out(coords_);
    for (auto& c : out) c = -c;
    return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator*(const Int& k) const {
    std::vector<Int> out(coords_);
    for (auto& c : out) c *= k;
    return LatticeVector(std::move(out));
}

bool LatticeVector::operator<(const LatticeVector& o) const {
    return std::lexicographical_compare(coords_.begin(), coords_.end(), o.coords_.begin(),
                                        o.coords_.end());
}

RationalVector::RationalVector(const LatticeVector& v) {
    coords_.reserve(static_cast<size_t>(v.rank()));
    for (int i = 0; i < v.rank(); ++i) coords_.emplace_back(v[i]);
}

bool RationalVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

LatticeVector RationalVector::primitive_integer() const {
    if (is_zero()) throw DomainError("zero_vector", "primitive part of the zero vector");
    Int den = 1;
    for (const Rat& c : coords_) den = lcm(den, boost::multiprecision::denominator(c));
    std::vector<Int> cleared;
    cleared.reserve(coords_.size());
    for (const Rat& c : coords_) {
        Rat scaled = c * den;
        cleared.push_back(boost::multiprecision::numerator(scaled));
    }
    return primitive(LatticeVector(std::move(cleared)));
}

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), Int(0)) {}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<LatticeVector>& rows) {
    if (rows.empty()) throw DomainError("empty_matrix", "matrix needs at least one row");
    IntMatrix m(static_cast<int>(rows.size()), rows[0].rank());
    for (int i = 0; i < m.rows(); ++i) {
        if (rows[static_cast<size_t>(i)].rank() != m.cols())
            throw DomainError("rank_mismatch", "rows of unequal rank");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][j];
    }
    return m;
}

LatticeVector IntMatrix::row(int i) const {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return LatticeVector(std::move(out));
}

LatticeVector IntMatrix::apply(const LatticeVector& x) const {
    if (x.rank() != cols_)
        throw DomainError("rank_mismatch", "matrix of " + std::to_string(cols_) +
                                               " columns applied to rank-" +
                                               std::to_string(x.rank()) + " vector");
    std::vector<Int> out(static_cast<size_t>(rows_), Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(i)] += at(i, j) * x[j];
    return LatticeVector(std::move(out));
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("rank_mismatch", "matrix product shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

// Bareiss fraction-free elimination; exact for arbitrary-precision entries.
Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw DomainError("not_square", "determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                              a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                          a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                              a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev;
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return sign * a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

Int pairing(const LatticeVector& n, const LatticeVector& m) {
    check_same_rank(n, m, "pairing");
    Int acc = 0;
    for (int i = 0; i < n.rank(); ++i) acc += n[i] * m[i];
    return acc;
}

Rat pairing(const LatticeVector& n, const RationalVector& m) {
    if (n.rank() != m.rank()) throw DomainError("rank_mismatch", "pairing: ranks differ");
    Rat acc = 0;
    for (int i = 0; i < n.rank(); ++i) acc += Rat(n[i]) * m[i];
    return acc;
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

ExtendedGcd extended_gcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r; // truncated; fine for the invariant old_r = a*old_s + b*old_t
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

Int floor_div(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("division_by_zero", "floor_div by zero");
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

Int ceil_div(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("division_by_zero", "ceil_div by zero");
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
    return q;
}

Int content(const LatticeVector& v) {
    Int g = 0;
    for (int i = 0; i < v.rank(); ++i) g = gcd(g, v[i]);
    return g;
}

LatticeVector primitive(const LatticeVector& v) {
    if (v.is_zero()) throw DomainError("zero_vector", "primitive part of the zero vector");
    Int g = content(v);
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(v.rank()));
    for (int i = 0; i < v.rank(); ++i) out.push_back(v[i] / g);
    return LatticeVector(std::move(out));
}

BezoutPair bezout(const Int& r, const Int& q) {
    if (gcd(r, q) != 1)
        throw DomainError("not_coprime", "bezout(" + r.str() + ", " + q.str() + "): gcd is not 1");
    if (r == 0) return {Int(0), q > 0 ? Int(1) : Int(-1)};
    ExtendedGcd e = extended_gcd(r, q);
    // r*x + q*y = 1; shift (x, y) -> (x + q*k, y - r*k) to put v in [0, |r|).
    Int ar = boost::multiprecision::abs(r);
    Int v = e.y % ar;
    if (v < 0) v += ar;
    Int u = (1 - q * v) / r;
    return {u, v};
}

int rank_of(const std::vector<LatticeVector>& vectors) {
    if (vectors.empty()) return 0;
    int n = vectors[0].rank();
    std::vector<std::vector<Rat>> rows;
    for (const auto& v : vectors) {
        if (v.rank() != n) throw DomainError("rank_mismatch", "rank_of: vectors of unequal rank");
        std::vector<Rat> row;
        row.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) row.emplace_back(v[j]);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        const Rat p = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
            Rat f = rows[static_cast<size_t>(i)][static_cast<size_t>(col)] / p;
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * rows[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

LatticeVector kernel_generator(const std::vector<LatticeVector>& basis) {
    if (basis.empty()) throw DomainError("bad_corank", "kernel_generator: empty basis");
    int n = basis[0].rank();
    if (static_cast<int>(basis.size()) != n - 1)
        throw DomainError("bad_corank", "kernel_generator: expected " + std::to_string(n - 1) +
                                            " basis vectors in rank " + std::to_string(n) +
                                            ", got " + std::to_string(basis.size()));
    for (const auto& b : basis)
        if (b.rank() != n) throw DomainError("rank_mismatch", "kernel_generator: mixed ranks");

    // Signed maximal minors: the generalized cross product is orthogonal to
    // every row, and its content equals the index of the row lattice in its
    // saturation.
    std::vector<Int> minors(static_cast<size_t>(n));
    for (int skip = 0; skip < n; ++skip) {
        IntMatrix sub(n - 1, n - 1);
        for (int i = 0; i < n - 1; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == skip) continue;
                sub.at(i, jj++) = basis[static_cast<size_t>(i)][j];
            }
        }
        Int d = (n == 1) ? Int(1) : sub.determinant();
        minors[static_cast<size_t>(skip)] = (skip % 2 == 0) ? d : -d;
    }
    LatticeVector m(std::move(minors));
    if (m.is_zero())
        throw DomainError("bad_corank", "kernel_generator: basis does not span corank one");
    if (content(m) != 1)
        throw DomainError("not_saturated",
                          "kernel_generator: sublattice of index " + content(m).str() +
                              " in its saturation");
    for (int i = 0; i < n; ++i) {
        if (m[i] == 0) continue;
        if (m[i] < 0) m = -m;
        break;
    }
    return m;
}

namespace {

// Column elimination A*W with W unimodular until the working matrix is lower
// triangular on its first rank(A) columns. Shared by solve_integer and
// orthogonal_complement_basis.
struct ColumnReduced {
    IntMatrix b; // A * w
    IntMatrix w; // unimodular
    int pivots;  // number of pivot columns = rank
};

ColumnReduced column_reduce(const IntMatrix& a) {
    IntMatrix b = a;
    IntMatrix w = IntMatrix::identity(a.cols());
    int n = a.cols();
    auto swap_cols = [&](IntMatrix& m, int c1, int c2) {
        for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, c1), m.at(i, c2));
    };
    auto addmul_col = [&](IntMatrix& m, int dst, int src, const Int& f) {
        for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
    };
    int piv = 0;
    for (int i = 0; i < a.rows() && piv < n; ++i) {
        // Reduce row i over columns piv..n-1 to a single nonzero entry.
        while (true) {
            int best = -1;
            for (int j = piv; j < n; ++j) {
                if (b.at(i, j) == 0) continue;
                if (best < 0 || boost::multiprecision::abs(b.at(i, j)) <
                                    boost::multiprecision::abs(b.at(i, best)))
                    best = j;
            }
            if (best < 0) break; // row is zero beyond the pivots: skip it
            if (best != piv) {
                swap_cols(b, piv, best);
                swap_cols(w, piv, best);
            }
            bool clean = true;
            for (int j = piv + 1; j < n; ++j) {
                if (b.at(i, j) == 0) continue;
                Int f = -(b.at(i, j) / b.at(i, piv));
                addmul_col(b, j, piv, f);
                addmul_col(w, j, piv, f);
                if (b.at(i, j) != 0) clean = false;
            }
            if (clean) {
                ++piv;
                break;
            }
        }
    }
    return {std::move(b), std::move(w), piv};
}

} // namespace

std::optional<LatticeVector> solve_integer(const IntMatrix& A, const LatticeVector& b) {
    if (b.rank() != A.rows()) throw DomainError("rank_mismatch", "solve_integer: shape mismatch");
    ColumnReduced red = column_reduce(A);
    if (red.pivots != A.rows())
        throw DomainError("not_full_rank", "solve_integer: matrix does not have full row rank");
    // Forward substitution on the lower-triangular pivot block.
    std::vector<Int> y(static_cast<size_t>(A.cols()), Int(0));
    for (int i = 0; i < A.rows(); ++i) {
        Int acc = b[i];
        for (int j = 0; j < i; ++j) acc -= red.b.at(i, j) * y[static_cast<size_t>(j)];
        if (acc % red.b.at(i, i) != 0) return std::nullopt;
        y[static_cast<size_t>(i)] = acc / red.b.at(i, i);
    }
    return red.w.apply(LatticeVector(std::move(y)));
}

std::vector<LatticeVector> orthogonal_complement_basis(const LatticeVector& m) {
    if (m.is_zero())
        throw DomainError("zero_vector", "orthogonal complement of the zero vector");
    LatticeVector p = primitive(m);
    ColumnReduced red = column_reduce(IntMatrix::from_rows({p}));
    // p * W = (+-1, 0, ..., 0); the remaining columns of W span {x : <x,p>=0}
    // and the span is saturated because W is unimodular.
    std::vector<LatticeVector> out;
    for (int j = 1; j < red.w.cols(); ++j) {
        std::vector<Int> col;
        col.reserve(static_cast<size_t>(red.w.rows()));
        for (int i = 0; i < red.w.rows(); ++i) col.push_back(red.w.at(i, j));
        out.emplace_back(std::move(col));
    }
    return out;
}

std::string to_string(const LatticeVector& v) { return v.str(); }

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace demroots
