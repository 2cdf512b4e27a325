#include "picard/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace picard {

namespace {
void check_bijection(const std::vector<std::uint8_t>& img) {
  std::vector<bool> seen(img.size(), false);
  for (std::uint8_t v : img) {
    if (v >= img.size() || seen[v])
      throw std::invalid_argument("Permutation: image sequence is not a bijection");
    seen[v] = true;
  }
}
}  // namespace

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  if (img_.size() > 255) throw std::invalid_argument("Permutation: degree above 255");
  check_bijection(img_);
}

Permutation Permutation::identity(int degree) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  std::vector<std::uint8_t> img;
  img.reserve(images.size());
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()))
      throw std::invalid_argument("Permutation: image out of range");
    img.push_back(static_cast<std::uint8_t>(v));
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree,
                                     std::initializer_list<std::vector<int>> cycles) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from < 0 || from >= degree) throw std::invalid_argument("cycle point out of range");
      img[static_cast<std::size_t>(from)] = to;
    }
  }
  return from_images(img);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("Permutation: degree mismatch in composition");
  std::vector<std::uint8_t> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[x] = img_[rhs.img_[x]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    img[img_[x]] = static_cast<std::uint8_t>(x);
  return Permutation(std::move(img));
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  return g * (*this) * g.inverse();
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

int Permutation::order() const {
  long long ord = 1;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    long long len = 0;
    std::size_t y = x;
    while (!seen[y]) {
      seen[y] = true;
      y = img_[y];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

int Permutation::fixed_points() const {
  int n = 0;
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] == x) ++n;
  return n;
}

bool Permutation::commutes_with(const Permutation& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("Permutation: degree mismatch");
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[other.img_[x]] != other.img_[img_[x]]) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    out += '(';
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out += ' ';
      out += std::to_string(y);
      first = false;
      y = img_[y];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  // FNV-1a over the image bytes
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace picard
