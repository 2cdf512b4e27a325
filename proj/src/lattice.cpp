#include "picard/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace picard {

LatticeVector::LatticeVector(std::vector<Coord> coords) : c_(std::move(coords)) {
  if (c_.empty()) throw std::invalid_argument("LatticeVector: empty coordinates");
}

LatticeVector LatticeVector::zero(int rank) {
  return LatticeVector(std::vector<Coord>(static_cast<std::size_t>(rank), 0));
}

LatticeVector LatticeVector::unit(int rank, int pos) {
  std::vector<Coord> c(static_cast<std::size_t>(rank), 0);
  c.at(static_cast<std::size_t>(pos)) = 1;
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("LatticeVector: rank mismatch");
  std::vector<Coord> c(c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("LatticeVector: rank mismatch");
  std::vector<Coord> c(c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::scaled(Coord k) const {
  std::vector<Coord> c(c_);
  for (auto& x : c) x *= k;
  return LatticeVector(std::move(c));
}

std::string LatticeVector::str() const {
  std::string out;
  auto append = [&](Coord coeff, const std::string& name) {
    if (coeff == 0) return;
    if (coeff > 0 && !out.empty()) out += '+';
    if (coeff == -1)
      out += '-';
    else if (coeff != 1)
      out += std::to_string(coeff);
    out += name;
  };
  append(c_[0], "L");
  for (std::size_t i = 1; i < c_.size(); ++i) append(c_[i], "E" + std::to_string(i));
  if (out.empty()) out = "0";
  return out;
}

Coord pairing(const LatticeVector& u, const LatticeVector& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("pairing: rank mismatch");
  Coord s = u[0] * v[0];
  for (int i = 1; i < u.rank(); ++i) s -= u[i] * v[i];
  return s;
}

LatticeVector canonical_class(int rank) {
  std::vector<Coord> c(static_cast<std::size_t>(rank), 1);
  c[0] = -3;
  return LatticeVector(std::move(c));
}

bool is_line_class(const LatticeVector& v) {
  return pairing(v, v) == -1 && pairing(v, canonical_class(v.rank())) == -1;
}

bool is_root(const LatticeVector& v) {
  return pairing(v, v) == -2 && pairing(v, canonical_class(v.rank())) == 0;
}

LineClass::LineClass(LatticeVector vec) : v(std::move(vec)) {
  if (!is_line_class(v))
    throw std::invalid_argument("LineClass: " + v.str() + " is not a (-1)-class");
}

RootVector::RootVector(LatticeVector vec) : r(std::move(vec)) {
  if (!is_root(r))
    throw std::invalid_argument("RootVector: " + r.str() + " is not a root");
}

namespace {

template <typename Pred>
std::vector<LatticeVector> box_scan(int rank, Pred keep) {
  std::vector<LatticeVector> out;
  std::vector<Coord> c(static_cast<std::size_t>(rank), -3);
  for (;;) {
    LatticeVector v{std::vector<Coord>(c)};
    if (keep(v)) out.push_back(std::move(v));
    int i = rank - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == 3) {
      c[static_cast<std::size_t>(i)] = -3;
      --i;
    }
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LineClass> enumerate_lines(int rank) {
  std::vector<LineClass> out;
  for (auto& v : box_scan(rank, is_line_class)) out.emplace_back(std::move(v));
  return out;
}

std::vector<RootVector> enumerate_roots(int rank) {
  std::vector<RootVector> out;
  for (auto& v : box_scan(rank, is_root)) out.emplace_back(std::move(v));
  return out;
}

LatticeVector reflect(const RootVector& root, const LatticeVector& v) {
  return v + root.r.scaled(pairing(v, root.r));
}

IntMatrix::IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
  if (n <= 0) throw std::invalid_argument("IntMatrix: non-positive size");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const LatticeVector> cols) {
  int n = static_cast<int>(cols.size());
  IntMatrix m(n);
  for (int c = 0; c < n; ++c) {
    if (cols[static_cast<std::size_t>(c)].rank() != n)
      throw std::invalid_argument("IntMatrix: column rank mismatch");
    for (int r = 0; r < n; ++r) m.at(r, c) = cols[static_cast<std::size_t>(c)][r];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("IntMatrix: size mismatch");
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      Coord aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += aik * o.at(k, j);
    }
  return out;
}

LatticeVector IntMatrix::apply(const LatticeVector& v) const {
  if (v.rank() != n_) throw std::invalid_argument("IntMatrix: vector rank mismatch");
  std::vector<Coord> c(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c[static_cast<std::size_t>(i)] += at(i, j) * v[j];
  return LatticeVector(std::move(c));
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

IntMatrix reflection_matrix(int rank, const RootVector& root) {
  IntMatrix m(rank);
  for (int j = 0; j < rank; ++j) {
    LatticeVector img = reflect(root, LatticeVector::unit(rank, j));
    for (int i = 0; i < rank; ++i) m.at(i, j) = img[i];
  }
  return m;
}

namespace {

// Fraction-free (Bareiss) elimination; returns the pivot count and leaves the
// matrix in echelon form. Exact for integer input.
int bareiss_rank(std::vector<std::vector<Coord>>& a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  Coord prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Coord num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        assert(num % prev == 0);
        a[i][j] = num / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

Coord cofactor(const IntMatrix& m, int row, int col) {
  int n = m.size();
  std::vector<std::vector<Coord>> a;
  a.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n; ++i) {
    if (i == row) continue;
    std::vector<Coord> r;
    r.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n; ++j)
      if (j != col) r.push_back(m.at(i, j));
    a.push_back(std::move(r));
  }
  // determinant of the minor via Bareiss; the last pivot is the determinant
  // when the matrix has full rank
  std::size_t k = a.size();
  if (k == 0) return 1;
  Coord prev = 1;
  std::size_t r = 0;
  Coord sign = 1;
  for (std::size_t c = 0; c < k && r < k; ++c) {
    std::size_t piv = r;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != r) {
      std::swap(a[r], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j) {
        Coord num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        assert(num % prev == 0);
        a[i][j] = num / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  Coord d = sign * a[k - 1][k - 1];
  return ((row + col) % 2 == 0) ? d : -d;
}

}  // namespace

Coord det(const IntMatrix& m) {
  int n = m.size();
  std::vector<std::vector<Coord>> a(static_cast<std::size_t>(n),
                                    std::vector<Coord>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
  Coord prev = 1, sign = 1;
  std::size_t k = static_cast<std::size_t>(n), r = 0;
  for (std::size_t c = 0; c < k && r < k; ++c) {
    std::size_t piv = r;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != r) {
      std::swap(a[r], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j) {
        Coord num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        assert(num % prev == 0);
        a[i][j] = num / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return sign * a[k - 1][k - 1];
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  Coord d = det(m);
  if (d != 1 && d != -1)
    throw std::invalid_argument("inverse_unimodular: determinant is not +-1");
  int n = m.size();
  IntMatrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(j, i) = cofactor(m, i, j) * d;
  return inv;
}

bool preserves_pairing(const IntMatrix& m) {
  int n = m.size();
  std::vector<LatticeVector> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) cols.push_back(m.apply(LatticeVector::unit(n, j)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Coord want = (i == j) ? (i == 0 ? 1 : -1) : 0;
      if (pairing(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]) != want)
        return false;
    }
  return true;
}

bool fixes_canonical_class(const IntMatrix& m) {
  LatticeVector k = canonical_class(m.size());
  return m.apply(k) == k;
}

int integer_rank(std::vector<std::vector<Coord>> rows) {
  return bareiss_rank(rows);
}

int fixed_rank(int rank, std::span<const IntMatrix> isometries) {
  std::vector<std::vector<Coord>> rows;
  for (const auto& m : isometries) {
    if (m.size() != rank)
      throw std::invalid_argument("fixed_rank: matrix size mismatch");
    for (int i = 0; i < rank; ++i) {
      std::vector<Coord> row(static_cast<std::size_t>(rank));
      for (int j = 0; j < rank; ++j)
        row[static_cast<std::size_t>(j)] = m.at(i, j) - (i == j ? 1 : 0);
      rows.push_back(std::move(row));
    }
  }
  return rank - integer_rank(std::move(rows));
}

}  // namespace picard
