#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace picard {

using Coord = long long;

// Integer vector in the Picard lattice of a del Pezzo surface, written in the
// blow-up basis (L, E1, ..., E_{rank-1}). The intersection form is
// diag(1, -1, ..., -1). Rank 7 is the cubic-surface lattice, rank 4 the
// degree-6 one. Immutable after construction.
class LatticeVector {
 public:
  explicit LatticeVector(std::vector<Coord> coords);
  static LatticeVector zero(int rank);
  static LatticeVector unit(int rank, int pos);

  int rank() const { return static_cast<int>(c_.size()); }
  Coord operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Coord>& coords() const { return c_; }

  LatticeVector operator+(const LatticeVector&) const;
  LatticeVector operator-(const LatticeVector&) const;
  LatticeVector scaled(Coord k) const;
  std::string str() const;  // "2L-E1-E2-E3" style

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::vector<Coord> c_;
};

// Symmetric bilinear form diag(1, -1, ..., -1); throws on rank mismatch.
Coord pairing(const LatticeVector& u, const LatticeVector& v);

// (-3, 1, ..., 1); self-intersection 3 at rank 7, 6 at rank 4.
LatticeVector canonical_class(int rank);

// v.v = v.K = -1
struct LineClass {
  explicit LineClass(LatticeVector vec);
  LatticeVector v;
};

// r.r = -2, r.K = 0
struct RootVector {
  explicit RootVector(LatticeVector vec);
  LatticeVector r;
};

bool is_line_class(const LatticeVector& v);
bool is_root(const LatticeVector& v);

// Exhaustive scan of the coordinate box |c_i| <= 3, sorted lexicographically.
std::vector<LineClass> enumerate_lines(int rank);
std::vector<RootVector> enumerate_roots(int rank);

// v + (v.r) r; fixes K, preserves the pairing, is an involution.
LatticeVector reflect(const RootVector& root, const LatticeVector& v);

// Square integer matrix acting on lattice vectors (column convention).
class IntMatrix {
 public:
  explicit IntMatrix(int n);
  static IntMatrix identity(int n);
  static IntMatrix from_columns(std::span<const LatticeVector> cols);

  int size() const { return n_; }
  Coord at(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  Coord& at(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }

  IntMatrix operator*(const IntMatrix&) const;
  LatticeVector apply(const LatticeVector&) const;
  bool is_identity() const;

  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_;
  std::vector<Coord> a_;
};

IntMatrix reflection_matrix(int rank, const RootVector& root);

Coord det(const IntMatrix& m);
// Requires |det| = 1; exact adjugate-based inverse.
IntMatrix inverse_unimodular(const IntMatrix& m);

bool preserves_pairing(const IntMatrix& m);
bool fixes_canonical_class(const IntMatrix& m);

// Rank over Q of a set of integer row vectors, by fraction-free elimination.
int integer_rank(std::vector<std::vector<Coord>> rows);

// Rank of the simultaneous fixed sublattice {v : m v = v for all m}.
int fixed_rank(int rank, std::span<const IntMatrix> isometries);

}  // namespace picard
