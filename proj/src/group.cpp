#include "picard/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace picard {

std::optional<std::vector<Permutation>> bfs_closure(int degree,
                                                    std::span<const Permutation> gens,
                                                    std::size_t cap) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("bfs_closure: generator degree mismatch");
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier;
  seen.insert(Permutation::identity(degree));
  frontier.push_back(Permutation::identity(degree));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Permutation y = g * x;
        if (seen.insert(y).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

GroupSpec::GroupSpec(int degree, std::vector<Permutation> generators, std::size_t cap)
    : degree_(degree),
      gens_(std::move(generators)),
      cap_(cap),
      mutex_(std::make_shared<std::mutex>()) {
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("GroupSpec: generator degree mismatch");
}

const GroupSpec::Cache& GroupSpec::cache() const {
  std::lock_guard<std::mutex> lock(*mutex_);
  if (!cache_) {
    auto els = bfs_closure(degree_, gens_, cap_);
    if (!els) throw GenerationCapExceeded(cap_);
    auto c = std::make_shared<Cache>();
    c->elements = std::move(*els);
    c->index.reserve(c->elements.size());
    for (std::size_t i = 0; i < c->elements.size(); ++i) c->index.emplace(c->elements[i], i);
    cache_ = std::move(c);
  }
  return *cache_;
}

const std::vector<Permutation>& GroupSpec::elements() const { return cache().elements; }

bool GroupSpec::contains(const Permutation& p) const {
  return p.degree() == degree_ && cache().index.count(p) != 0;
}

std::size_t GroupSpec::index_of(const Permutation& p) const {
  auto it = cache().index.find(p);
  if (it == cache().index.end())
    throw std::invalid_argument("GroupSpec: element not in group");
  return it->second;
}

GroupSpec trivial_group(int degree) { return GroupSpec(degree, {}); }

bool is_abelian(const GroupSpec& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].commutes_with(gens[j])) return false;
  return true;
}

std::map<int, std::size_t> element_orders(const GroupSpec& g) {
  std::map<int, std::size_t> out;
  for (const auto& x : g.elements()) ++out[x.order()];
  return out;
}

long long exponent(const GroupSpec& g) {
  long long e = 1;
  for (const auto& x : g.elements()) e = std::lcm(e, static_cast<long long>(x.order()));
  return e;
}

GroupSpec center(const GroupSpec& g) {
  std::vector<Permutation> zs;
  for (const auto& z : g.elements()) {
    bool central = true;
    for (const auto& gen : g.generators())
      if (!z.commutes_with(gen)) {
        central = false;
        break;
      }
    if (central) zs.push_back(z);
  }
  return GroupSpec(g.degree(), std::move(zs));
}

GroupSpec centralizer(const GroupSpec& g, const Permutation& x) {
  if (!g.contains(x))
    throw std::invalid_argument("centralizer: element not in group");
  std::vector<Permutation> cs;
  for (const auto& y : g.elements())
    if (y.commutes_with(x)) cs.push_back(y);
  return GroupSpec(g.degree(), std::move(cs));
}

namespace {

bool is_prime_power_of(int n, int p) {
  if (n <= 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

GroupSpec sylow_subgroup(const GroupSpec& g, int p) {
  const auto& els = g.elements();
  std::size_t n = els.size();
  if (p < 2 || n % static_cast<std::size_t>(p) != 0)
    throw std::invalid_argument("sylow_subgroup: p does not divide the group order");
  std::size_t target = 1;
  while (n % static_cast<std::size_t>(p) == 0) {
    n /= static_cast<std::size_t>(p);
    target *= static_cast<std::size_t>(p);
  }

  std::vector<Permutation> chain;
  std::unordered_set<Permutation, PermutationHash> cur;
  cur.insert(Permutation::identity(g.degree()));
  while (cur.size() < target) {
    bool grown = false;
    for (const auto& x : els) {
      if (!is_prime_power_of(x.order(), p) || cur.count(x)) continue;
      Permutation xi = x.inverse();
      bool normalizes = true;
      for (const auto& y : cur)
        if (!cur.count(x * y * xi)) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      chain.push_back(x);
      auto closed = bfs_closure(g.degree(), chain, target);
      // x normalizes the current p-group, so the closure is again a p-group
      // of order at most the full p-part.
      if (!closed) throw std::logic_error("sylow_subgroup: closure exceeded the p-part");
      cur.clear();
      cur.insert(closed->begin(), closed->end());
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow_subgroup: no normalizing p-element found");
  }
  return GroupSpec(g.degree(), std::move(chain));
}

std::vector<GroupSpec> enumerate_subgroups(const GroupSpec& g, std::size_t max_order) {
  const auto& els = g.elements();
  if (els.size() > 10'000)
    throw std::invalid_argument("enumerate_subgroups: group order above 10000");
  if (max_order > 128)
    throw std::invalid_argument("enumerate_subgroups: max_order above 128");

  using Fingerprint = std::vector<std::uint16_t>;
  auto fingerprint = [&](const std::vector<Permutation>& sub) {
    Fingerprint f;
    f.reserve(sub.size());
    for (const auto& x : sub) f.push_back(static_cast<std::uint16_t>(g.index_of(x)));
    std::sort(f.begin(), f.end());
    return f;
  };

  std::map<Fingerprint, std::vector<Permutation>> found;  // fingerprint -> generator chain
  Fingerprint trivial_f{static_cast<std::uint16_t>(
      g.index_of(Permutation::identity(g.degree())))};
  found.emplace(trivial_f, std::vector<Permutation>{});
  std::vector<Fingerprint> queue{trivial_f};

  while (!queue.empty()) {
    Fingerprint f = std::move(queue.back());
    queue.pop_back();
    std::vector<Permutation> gens = found.at(f);
    std::set<std::uint16_t> members(f.begin(), f.end());
    for (std::size_t i = 0; i < els.size(); ++i) {
      if (members.count(static_cast<std::uint16_t>(i))) continue;
      gens.push_back(els[i]);
      auto closed = bfs_closure(g.degree(), gens, max_order);
      if (closed) {
        Fingerprint nf = fingerprint(*closed);
        if (!found.count(nf)) {
          found.emplace(nf, gens);
          queue.push_back(std::move(nf));
        }
      }
      gens.pop_back();
    }
  }

  // std::map keys are already in fingerprint order; sort by size first.
  std::vector<const std::pair<const Fingerprint, std::vector<Permutation>>*> items;
  items.reserve(found.size());
  for (const auto& kv : found) items.push_back(&kv);
  std::stable_sort(items.begin(), items.end(),
                   [](auto* a, auto* b) { return a->first.size() < b->first.size(); });
  std::vector<GroupSpec> out;
  out.reserve(items.size());
  for (auto* kv : items) out.emplace_back(g.degree(), kv->second);
  return out;
}

std::vector<Permutation> greedy_generators(const GroupSpec& g) {
  std::vector<Permutation> gens;
  std::size_t covered = 1;
  std::unordered_set<Permutation, PermutationHash> span;
  span.insert(Permutation::identity(g.degree()));
  for (const auto& x : g.elements()) {
    if (span.count(x)) continue;
    gens.push_back(x);
    auto closed = bfs_closure(g.degree(), gens, g.order());
    if (!closed) throw std::logic_error("greedy_generators: closure exceeded parent order");
    span.clear();
    span.insert(closed->begin(), closed->end());
    covered = span.size();
    if (covered == g.order()) break;
  }
  return gens;
}

namespace {

// Propagates phi(gen_i * x) = img_i * phi(x) over the whole Cayley graph;
// true iff the assignment extends to an isomorphism.
bool extends_to_isomorphism(const GroupSpec& g, const GroupSpec& h,
                            const std::vector<Permutation>& gens,
                            const std::vector<Permutation>& images) {
  const auto& gels = g.elements();
  std::size_t n = gels.size();
  const Permutation id_g = Permutation::identity(g.degree());
  std::vector<std::optional<Permutation>> phi(n);
  std::size_t id_idx = g.index_of(id_g);
  phi[id_idx] = Permutation::identity(h.degree());
  std::vector<std::size_t> queue{id_idx};
  std::size_t assigned = 1;
  while (!queue.empty()) {
    std::size_t xi = queue.back();
    queue.pop_back();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t yi = g.index_of(gens[k] * gels[xi]);
      Permutation expect = images[k] * (*phi[xi]);
      if (!phi[yi]) {
        phi[yi] = std::move(expect);
        queue.push_back(yi);
        ++assigned;
      } else if (*phi[yi] != expect) {
        return false;
      }
    }
  }
  if (assigned != n) return false;
  std::unordered_set<Permutation, PermutationHash> image_set;
  for (const auto& v : phi) image_set.insert(*v);
  return image_set.size() == n;
}

bool search_images(const GroupSpec& g, const GroupSpec& h,
                   const std::vector<Permutation>& gens,
                   const std::vector<std::size_t>& chain_sizes,
                   std::vector<Permutation>& images) {
  std::size_t k = images.size();
  if (k == gens.size()) return extends_to_isomorphism(g, h, gens, images);
  int want_order = gens[k].order();
  for (const auto& cand : h.elements()) {
    if (cand.order() != want_order) continue;
    images.push_back(cand);
    auto closed = bfs_closure(h.degree(), images, chain_sizes[k]);
    if (closed && closed->size() == chain_sizes[k] &&
        search_images(g, h, gens, chain_sizes, images))
      return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

bool isomorphic_small(const GroupSpec& g, const GroupSpec& h) {
  if (g.order() > 100 || h.order() > 100)
    throw std::invalid_argument("isomorphic_small: group order above 100");
  if (g.order() != h.order()) return false;
  if (element_orders(g) != element_orders(h)) return false;

  std::vector<Permutation> gens = greedy_generators(g);
  std::vector<std::size_t> chain_sizes;
  for (std::size_t i = 1; i <= gens.size(); ++i) {
    auto closed = bfs_closure(g.degree(), std::span(gens.data(), i), g.order());
    chain_sizes.push_back(closed->size());
  }
  std::vector<Permutation> images;
  return search_images(g, h, gens, chain_sizes, images);
}

}  // namespace picard
