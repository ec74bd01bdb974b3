#pragma once

// Concrete finite groups given by their Cayley tables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wittlab/error.hpp"
#include "wittlab/presentation.hpp"

namespace wittlab {

using Elem = std::uint32_t;

inline constexpr std::size_t kMaxGroupOrder = 4096;
inline constexpr std::size_t kFullAssociativityCheck = 256;

class FiniteGroup;
std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens);

/// A finite group on elements 0..n-1 with identity 0. Immutable once built.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(trivial()) {}

  /// Builds a group from a row-major n*n Cayley table, verifying the group
  /// axioms (associativity exhaustively for n <= 256). Generators that do not
  /// generate the whole group are extended greedily.
  static FiniteGroup from_table(std::size_t n, std::vector<Elem> cayley, std::vector<Elem> generators,
                                std::string name = {}) {
    if (n == 0) throw PreconditionError("group order must be positive");
    if (n > kMaxGroupOrder) throw ComputationError("group order exceeds 4096");
    if (cayley.size() != n * n) throw PreconditionError("Cayley table has the wrong size");
    FiniteGroup g;
    g.n_ = n;
    g.cayley_ = std::move(cayley);
    g.name_ = std::move(name);
    g.verify_and_index();
    for (Elem x : generators)
      if (x >= n) throw PreconditionError("generator index out of range");
    g.generators_ = std::move(generators);
    g.complete_generators();
    g.verify_associativity();
    return g;
  }

  static FiniteGroup trivial(std::string name = {}) {
    FiniteGroup g(0);
    g.n_ = 1;
    g.cayley_ = {0};
    g.inverse_ = {0};
    g.orders_ = {1};
    g.exponent_ = 1;
    g.name_ = std::move(name);
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  static constexpr Elem identity() noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept { return cayley_[std::size_t{a} * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }
  Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  Elem pow(Elem a, std::int64_t k) const noexcept {
    std::int64_t m = orders_[a];
    k %= m;
    if (k < 0) k += m;
    Elem r = 0;
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  unsigned element_order(Elem a) const noexcept { return orders_[a]; }
  unsigned exponent() const noexcept { return exponent_; }
  std::span<const Elem> generators() const noexcept { return generators_; }
  const std::string& name() const noexcept { return name_; }
  std::span<const Elem> cayley() const noexcept { return cayley_; }
  std::span<const Elem> row(Elem a) const noexcept { return {cayley_.data() + std::size_t{a} * n_, n_}; }

  bool is_abelian() const noexcept {
    for (Elem a : generators_)
      for (Elem b : generators_)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  FiniteGroup renamed(std::string name) const {
    FiniteGroup g = *this;
    g.name_ = std::move(name);
    return g;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.cayley_ == b.cayley_;
  }

 private:
  explicit FiniteGroup(int) {}

  void verify_and_index() {
    const std::size_t n = n_;
    for (Elem x = 0; x < n; ++x) {
      if (mul(0, x) != x || mul(x, 0) != x)
        throw ComputationError("group axioms: element 0 is not the identity");
    }
    std::vector<char> seen(n);
    for (std::size_t r = 0; r < n; ++r) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t c = 0; c < n; ++c) {
        Elem v = cayley_[r * n + c];
        if (v >= n || seen[v]) throw ComputationError("group axioms: Cayley row is not a permutation");
        seen[v] = 1;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t r = 0; r < n; ++r) {
        Elem v = cayley_[r * n + c];
        if (seen[v]) throw ComputationError("group axioms: Cayley column is not a permutation");
        seen[v] = 1;
      }
    }
    inverse_.assign(n, 0);
    for (Elem x = 0; x < n; ++x) {
      Elem y = 0;
      while (mul(x, y) != 0) ++y;
      inverse_[x] = y;
    }
    orders_.assign(n, 1);
    exponent_ = 1;
    for (Elem x = 1; x < n; ++x) {
      unsigned k = 1;
      for (Elem y = x; y != 0; y = mul(y, x)) ++k;
      orders_[x] = k;
      exponent_ = std::lcm(exponent_, orders_[x]);
    }
  }

  // Exhaustive for n <= 256, otherwise Light's test over the generators.
  void verify_associativity() const {
    const std::size_t n = n_;
    if (n <= kFullAssociativityCheck) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          Elem xy = mul(x, y);
          for (Elem z = 0; z < n; ++z)
            if (mul(xy, z) != mul(x, mul(y, z))) throw ComputationError("group axioms: table is not associative");
        }
      return;
    }
    for (Elem s : generators_)
      for (Elem x = 0; x < n; ++x) {
        Elem xs = mul(x, s);
        for (Elem y = 0; y < n; ++y)
          if (mul(xs, y) != mul(x, mul(s, y))) throw ComputationError("group axioms: table is not associative");
      }
  }

  void complete_generators() {
    std::vector<Elem> current = generated_subgroup(*this, generators_);
    while (current.size() < n_) {
      // add the first element outside the current subgroup
      std::vector<char> in(n_, 0);
      for (Elem x : current) in[x] = 1;
      Elem pick = 0;
      while (in[pick]) ++pick;
      generators_.push_back(pick);
      current = generated_subgroup(*this, generators_);
    }
  }

  std::size_t n_ = 1;
  std::vector<Elem> cayley_;
  std::vector<Elem> inverse_;
  std::vector<unsigned> orders_;
  unsigned exponent_ = 1;
  std::vector<Elem> generators_;
  std::string name_;
};

/// Sorted element list of the subgroup generated by `gens`.
inline std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Element index reached by evaluating a word in the group's generators.
inline Elem evaluate_word(const FiniteGroup& g, const Word& w) {
  Elem r = 0;
  for (const Letter& l : w) {
    if (l.generator >= g.generators().size()) throw PreconditionError("word uses an unknown generator");
    Elem s = g.generators()[l.generator];
    r = g.mul(r, l.exponent > 0 ? s : g.inv(s));
  }
  return r;
}

using OrderProfile = std::map<unsigned, std::size_t>;

inline OrderProfile order_profile(const FiniteGroup& g) {
  OrderProfile p;
  for (Elem x = 0; x < g.order(); ++x) ++p[g.element_order(x)];
  return p;
}

inline std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return z;
}

/// Closure of permutation generators, elements in breadth-first order.
/// The product x*y applies x first, then y.
inline FiniteGroup from_permutations(const PermGenSet& set, std::size_t cap = kMaxGroupOrder) {
  const std::size_t d = set.degree;
  for (const auto& p : set.generators) {
    if (p.size() != d) throw PreconditionError("permutation has the wrong degree");
    std::vector<char> seen(d, 0);
    for (auto v : p) {
      if (v >= d || seen[v]) throw PreconditionError("generator is not a bijection");
      seen[v] = 1;
    }
  }
  Permutation id(d);
  std::iota(id.begin(), id.end(), 0u);
  std::map<Permutation, Elem> index{{id, 0}};
  std::vector<Permutation> elems{id};
  auto compose = [](const Permutation& x, const Permutation& y) {
    Permutation r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : set.generators) {
      Permutation y = compose(elems[i], s);
      if (!index.count(y)) {
        if (elems.size() == cap) throw ComputationError("permutation group exceeds the size cap");
        index.emplace(y, static_cast<Elem>(elems.size()));
        elems.push_back(std::move(y));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<Elem> gens;
  for (const auto& s : set.generators) gens.push_back(index.at(s));
  return FiniteGroup::from_table(n, std::move(table), std::move(gens), set.name);
}

inline FiniteGroup cyclic_group(std::size_t n, std::string name = {}) {
  if (n == 1) return FiniteGroup::trivial(std::move(name));
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup::from_table(n, std::move(t), {1}, std::move(name));
}

/// Elements are pairs (g, h) at index g*|H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string name = {}) {
  const std::size_t m = h.order(), n = g.order() * m;
  if (n > kMaxGroupOrder) throw ComputationError("direct product exceeds 4096 elements");
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a * n + b] = static_cast<Elem>(g.mul(static_cast<Elem>(a / m), static_cast<Elem>(b / m)) * m +
                                       h.mul(static_cast<Elem>(a % m), static_cast<Elem>(b % m)));
  std::vector<Elem> gens;
  for (Elem x : g.generators()) gens.push_back(static_cast<Elem>(x * m));
  for (Elem y : h.generators()) gens.push_back(y);
  return FiniteGroup::from_table(n, std::move(t), std::move(gens), std::move(name));
}

/// Extends generator images to a homomorphism defined on <generators of g>.
/// Returns nothing when the images are inconsistent.
inline std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& g, std::span<const Elem> gens,
                                                            const FiniteGroup& h, std::span<const Elem> images) {
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> map(g.order(), unset);
  map[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem y = g.mul(x, gens[k]);
      Elem img = h.mul(map[x], images[k]);
      if (map[y] == unset) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return std::nullopt;
      }
    }
  }
  return map;
}

/// The automorphism of `n` sending its generators to `images`; throws when
/// the images do not define a bijective homomorphism.
inline std::vector<Elem> automorphism_from_images(const FiniteGroup& n, std::span<const Elem> images) {
  if (images.size() != n.generators().size()) throw PreconditionError("one image per generator required");
  auto map = extend_homomorphism(n, n.generators(), n, images);
  if (!map) throw PreconditionError("generator images do not define a homomorphism");
  std::vector<char> hit(n.order(), 0);
  for (Elem y : *map) {
    if (hit[y]) throw PreconditionError("generator images do not define an automorphism");
    hit[y] = 1;
  }
  return *map;
}

/// N x| Q with (n1,q1)(n2,q2) = (n1 * q1(n2), q1 q2); element (n, q) sits at
/// index q*|N| + n. `action[q]` is the automorphism of N attached to q.
inline FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& q,
                                      const std::vector<std::vector<Elem>>& action, std::string name = {}) {
  const std::size_t a = n.order(), b = q.order(), total = a * b;
  if (total > kMaxGroupOrder) throw ComputationError("semidirect product exceeds 4096 elements");
  if (action.size() != b) throw PreconditionError("action must list one automorphism per element of Q");
  for (const auto& phi : action) {
    if (phi.size() != a) throw PreconditionError("automorphism has the wrong length");
    std::vector<char> hit(a, 0);
    for (Elem x = 0; x < a; ++x) {
      if (phi[x] >= a || hit[phi[x]]) throw PreconditionError("action element is not a bijection of N");
      hit[phi[x]] = 1;
    }
    for (Elem x = 0; x < a; ++x)
      for (Elem y = 0; y < a; ++y)
        if (phi[n.mul(x, y)] != n.mul(phi[x], phi[y]))
          throw PreconditionError("action element is not a homomorphism of N");
  }
  for (Elem x = 0; x < b; ++x)
    for (Elem y = 0; y < b; ++y)
      for (Elem v = 0; v < a; ++v)
        if (action[q.mul(x, y)][v] != action[x][action[y][v]])
          throw PreconditionError("action does not respect the multiplication of Q");
  std::vector<Elem> t(total * total);
  for (std::size_t u = 0; u < total; ++u)
    for (std::size_t v = 0; v < total; ++v) {
      Elem n1 = static_cast<Elem>(u % a), q1 = static_cast<Elem>(u / a);
      Elem n2 = static_cast<Elem>(v % a), q2 = static_cast<Elem>(v / a);
      t[u * total + v] = static_cast<Elem>(q.mul(q1, q2) * a + n.mul(n1, action[q1][n2]));
    }
  std::vector<Elem> gens;
  for (Elem x : n.generators()) gens.push_back(x);
  for (Elem y : q.generators()) gens.push_back(static_cast<Elem>(y * a));
  return FiniteGroup::from_table(total, std::move(t), std::move(gens), std::move(name));
}

/// Builds the full Q-indexed action from automorphisms attached to Q's
/// generators (each given by images of N's generators).
inline std::vector<std::vector<Elem>> action_from_generator_images(
    const FiniteGroup& n, const FiniteGroup& q, const std::vector<std::vector<Elem>>& images_per_q_generator) {
  if (images_per_q_generator.size() != q.generators().size())
    throw PreconditionError("one automorphism per generator of Q required");
  std::vector<std::vector<Elem>> gen_autos;
  for (const auto& imgs : images_per_q_generator) gen_autos.push_back(automorphism_from_images(n, imgs));
  std::vector<Elem> id(n.order());
  std::iota(id.begin(), id.end(), Elem{0});
  std::vector<std::vector<Elem>> action(q.order());
  action[0] = id;
  std::vector<char> done(q.order(), 0);
  done[0] = 1;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t k = 0; k < gen_autos.size(); ++k) {
      Elem y = q.mul(x, q.generators()[k]);
      std::vector<Elem> composed(n.order());
      for (Elem v = 0; v < n.order(); ++v) composed[v] = action[x][gen_autos[k][v]];
      if (!done[y]) {
        done[y] = 1;
        action[y] = std::move(composed);
        queue.push_back(y);
      } else if (action[y] != composed) {
        throw PreconditionError("generator automorphisms do not define an action of Q");
      }
    }
  }
  return action;
}

/// Conjugacy classes with representatives, sizes, inverse classes and power maps.
struct ConjugacyClasses {
  std::vector<Elem> representatives;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> inverse_class;
  /// power_map[k][m] = class of rep_k^m, for 0 <= m < exponent.
  std::vector<std::vector<std::size_t>> power_map;
  std::vector<std::vector<Elem>> members;

  std::size_t count() const noexcept { return representatives.size(); }
  std::size_t power(std::size_t k, std::int64_t m) const {
    auto e = static_cast<std::int64_t>(power_map[k].size());
    m %= e;
    if (m < 0) m += e;
    return power_map[k][static_cast<std::size_t>(m)];
  }
};

/// Classes are ordered by (representative order, class size, smallest member);
/// each representative is the smallest member of its class.
inline ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr std::size_t none = ~std::size_t{0};
  std::vector<std::size_t> raw(n, none);
  std::vector<std::vector<Elem>> orbits;
  for (Elem x = 0; x < n; ++x) {
    if (raw[x] != none) continue;
    std::vector<Elem> orbit{x};
    raw[x] = orbits.size();
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Elem s : g.generators()) {
        Elem y = g.conj(s, orbit[i]);
        if (raw[y] == none) {
          raw[y] = orbits.size();
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::vector<std::size_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    auto key = [&](std::size_t c) {
      return std::make_tuple(g.element_order(orbits[c][0]), orbits[c].size(), orbits[c][0]);
    };
    return key(a) < key(b);
  });
  ConjugacyClasses cc;
  cc.class_of.assign(n, 0);
  std::vector<std::size_t> rank(orbits.size());
  for (std::size_t k = 0; k < perm.size(); ++k) rank[perm[k]] = k;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    auto& orbit = orbits[perm[k]];
    cc.representatives.push_back(orbit[0]);
    cc.sizes.push_back(orbit.size());
    for (Elem x : orbit) cc.class_of[x] = k;
    cc.members.push_back(orbit);
  }
  for (std::size_t k = 0; k < cc.count(); ++k) cc.inverse_class.push_back(cc.class_of[g.inv(cc.representatives[k])]);
  const unsigned e = g.exponent();
  cc.power_map.assign(cc.count(), std::vector<std::size_t>(e));
  for (std::size_t k = 0; k < cc.count(); ++k) {
    Elem y = 0;
    for (unsigned m = 0; m < e; ++m) {
      cc.power_map[k][m] = cc.class_of[y];
      y = g.mul(y, cc.representatives[k]);
    }
  }
  return cc;
}

}  // namespace wittlab
