#ifndef DEMROOTS_LATTICE_HPP
#define DEMROOTS_LATTICE_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "demroots/errors.hpp"

namespace demroots {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Point of N or M (the lattices of one-parameter subgroups and characters).
// All arithmetic is exact.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
    LatticeVector(std::initializer_list<long long> xs);

    static LatticeVector zero(int rank);
    static LatticeVector unit(int rank, int i);

    int rank() const { return static_cast<int>(coords_.size()); }
    const Int& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    Int& operator[](int i) { return coords_[static_cast<size_t>(i)]; }
    const std::vector<Int>& coords() const { return coords_; }

    bool is_zero() const;
    std::string str() const;

    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator-() const;
    LatticeVector operator*(const Int& k) const;

    bool operator==(const LatticeVector& o) const { return coords_ == o.coords_; }
    bool operator!=(const LatticeVector& o) const { return !(*this == o); }
    // Lexicographic order; also the canonical order used for deterministic output.
    bool operator<(const LatticeVector& o) const;

private:
    std::vector<Int> coords_;
};

// Point of N_Q or M_Q.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::vector<Rat> coords) : coords_(std::move(coords)) {}
    explicit RationalVector(const LatticeVector& v);

    int rank() const { return static_cast<int>(coords_.size()); }
    const Rat& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    Rat& operator[](int i) { return coords_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    // Clears denominators and divides by the content: the primitive lattice
    // vector on the same ray. Requires a nonzero vector.
    LatticeVector primitive_integer() const;

private:
    std::vector<Rat> coords_;
};

// Integer matrix; the lattice maps F, P, s and the restriction matrix pi.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<LatticeVector>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Int& at(int i, int j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }
    Int& at(int i, int j) { return data_[static_cast<size_t>(i * cols_ + j)]; }

    LatticeVector row(int i) const;
    LatticeVector apply(const LatticeVector& x) const; // A*x
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transposed() const;
    Int determinant() const; // fraction-free (Bareiss)
    bool operator==(const IntMatrix& o) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

struct BezoutPair {
    Int u, v;
};

Int pairing(const LatticeVector& n, const LatticeVector& m);
Rat pairing(const LatticeVector& n, const RationalVector& m);

// gcd of the coordinates (0 for the zero vector, always >= 0).
Int content(const LatticeVector& v);

LatticeVector primitive(const LatticeVector& v);

// ru + qv = 1 with the canonical representative 0 <= v < |r| for r != 0,
// and (0, sign(q)) for r = 0. Requires gcd(r, q) = 1.
BezoutPair bezout(const Int& r, const Int& q);

// Primitive m in M with <b, m> = 0 for every basis vector b of a saturated
// corank-one sublattice of N; sign fixed by "first nonzero coordinate > 0".
LatticeVector kernel_generator(const std::vector<LatticeVector>& basis);

// Rank over Q of a set of integer vectors.
int rank_of(const std::vector<LatticeVector>& vectors);

// Integer solution of A x = b for a full-row-rank A, when one exists.
std::optional<LatticeVector> solve_integer(const IntMatrix& A, const LatticeVector& b);

// Saturated basis of {x : <x, m> = 0} for m != 0.
std::vector<LatticeVector> orthogonal_complement_basis(const LatticeVector& m);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
// Extended gcd: g = gcd(a, b) >= 0 with a*x + b*y = g.
struct ExtendedGcd {
    Int g, x, y;
};
ExtendedGcd extended_gcd(const Int& a, const Int& b);

Int floor_div(const Int& num, const Int& den);
Int ceil_div(const Int& num, const Int& den);

std::string to_string(const LatticeVector& v);
std::string to_string(const Rat& r);

} // namespace demroots

#endif
