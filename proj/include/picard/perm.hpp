#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace picard {

// A permutation of {0,...,n-1}, stored as the image sequence.
// Composition is function composition: (a*b)(x) = a(b(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation identity(int degree);
  static Permutation from_images(const std::vector<int>& images);
  // Unlisted points are fixed.
  static Permutation from_cycles(int degree,
                                 std::initializer_list<std::vector<int>> cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int p) const { return img_[static_cast<std::size_t>(p)]; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation& g) const;  // g * (*this) * g^-1

  bool is_identity() const;
  int order() const;
  int fixed_points() const;
  bool commutes_with(const Permutation& other) const;

  const std::vector<std::uint8_t>& images() const { return img_; }
  std::string cycle_string() const;  // "(0 1 2)(4 5)", "()" for identity

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace picard
