#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "picard/perm.hpp"

namespace picard {

struct GenerationCapExceeded : std::runtime_error {
  explicit GenerationCapExceeded(std::size_t cap)
      : std::runtime_error("group generation exceeded the cap of " +
                           std::to_string(cap) + " elements"),
        cap(cap) {}
  std::size_t cap;
};

inline constexpr std::size_t kDefaultGenerationCap = 1'000'000;

// Breadth-first closure of the generators; sorted lexicographically on image
// sequences. Returns nullopt once the closure grows past `cap`.
std::optional<std::vector<Permutation>> bfs_closure(int degree,
                                                    std::span<const Permutation> gens,
                                                    std::size_t cap);

// A finite permutation group given by generators, with a lazily computed,
// immutable element cache shared between copies. Reads after the first
// elements() call are lock-free safe on any thread.
class GroupSpec {
 public:
  GroupSpec(int degree, std::vector<Permutation> generators,
            std::size_t generation_cap = kDefaultGenerationCap);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::size_t generation_cap() const { return cap_; }

  const std::vector<Permutation>& elements() const;  // throws GenerationCapExceeded
  std::size_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;
  // Position of p in the sorted element list; throws if absent.
  std::size_t index_of(const Permutation& p) const;

 private:
  struct Cache {
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  };
  const Cache& cache() const;

  int degree_;
  std::vector<Permutation> gens_;
  std::size_t cap_;
  std::shared_ptr<std::mutex> mutex_;
  mutable std::shared_ptr<const Cache> cache_;
};

GroupSpec trivial_group(int degree);

bool is_abelian(const GroupSpec& g);
std::map<int, std::size_t> element_orders(const GroupSpec& g);  // order -> count
long long exponent(const GroupSpec& g);

GroupSpec center(const GroupSpec& g);
GroupSpec centralizer(const GroupSpec& g, const Permutation& x);  // requires x in g

// A subgroup of order p^k where p^k exactly divides |g|, grown by repeatedly
// adjoining the first p-element (in element order) normalizing the current
// p-subgroup. Deterministic; throws std::invalid_argument if p does not
// divide |g|.
GroupSpec sylow_subgroup(const GroupSpec& g, int p);

// All subgroups of order <= max_order, deduplicated by element-set
// fingerprint, sorted by (order, element fingerprint).
// Requires |g| <= 10000 and max_order <= 128.
std::vector<GroupSpec> enumerate_subgroups(const GroupSpec& g, std::size_t max_order);

// Complete generator-image backtracking search; requires both orders <= 100.
bool isomorphic_small(const GroupSpec& g, const GroupSpec& h);

// A minimal-by-greedy generating sequence drawn from the sorted element list.
std::vector<Permutation> greedy_generators(const GroupSpec& g);

}  // namespace picard
