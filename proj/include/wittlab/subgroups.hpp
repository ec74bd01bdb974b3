#pragma once

// Subgroups as element sets: normal-subgroup lattice, abelian invariants and
// character groups of abelian subgroups.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "wittlab/error.hpp"
#include "wittlab/group.hpp"

namespace wittlab {

struct SubgroupSet {
  std::vector<Elem> elements;  // sorted, contains 0
  bool normal = false;
  bool abelian = false;
  bool central = false;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }
  friend bool operator==(const SubgroupSet&, const SubgroupSet&) = default;
};

/// Validates closure and fills in the normal / abelian / central flags.
inline SubgroupSet make_subgroup(const FiniteGroup& g, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<char> in(g.order(), 0);
  for (Elem x : elements) {
    if (x >= g.order()) throw PreconditionError("subgroup element out of range");
    in[x] = 1;
  }
  if (elements.empty() || elements.front() != 0) throw PreconditionError("subgroup must contain the identity");
  for (Elem x : elements) {
    if (!in[g.inv(x)]) throw PreconditionError("subset is not closed under inverses");
    for (Elem y : elements)
      if (!in[g.mul(x, y)]) throw PreconditionError("subset is not closed under multiplication");
  }
  SubgroupSet s;
  s.elements = std::move(elements);
  s.normal = std::all_of(g.generators().begin(), g.generators().end(), [&](Elem t) {
    return std::all_of(s.elements.begin(), s.elements.end(), [&](Elem x) { return in[g.conj(t, x)] != 0; });
  });
  s.abelian = std::all_of(s.elements.begin(), s.elements.end(), [&](Elem x) {
    return std::all_of(s.elements.begin(), s.elements.end(), [&](Elem y) { return g.mul(x, y) == g.mul(y, x); });
  });
  s.central = std::all_of(s.elements.begin(), s.elements.end(), [&](Elem x) {
    return std::all_of(g.generators().begin(), g.generators().end(),
                       [&](Elem t) { return g.mul(x, t) == g.mul(t, x); });
  });
  return s;
}

/// Smallest normal subgroup containing x.
inline std::vector<Elem> normal_closure(const FiniteGroup& g, Elem x) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> conjugates{x};
  in[x] = 1;
  for (std::size_t i = 0; i < conjugates.size(); ++i)
    for (Elem t : g.generators()) {
      Elem y = g.conj(t, conjugates[i]);
      if (!in[y]) {
        in[y] = 1;
        conjugates.push_back(y);
      }
    }
  return generated_subgroup(g, conjugates);
}

/// Every normal subgroup, ordered by (order, element list). Built as the
/// join-closure of the normal closures of single elements; the join of two
/// normal subgroups is their product set.
inline std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> list;
  auto add = [&](std::vector<Elem> s) {
    if (seen.insert(s).second) list.push_back(std::move(s));
  };
  for (Elem x = 0; x < g.order(); ++x) add(normal_closure(g, x));
  std::vector<char> mark(g.order());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::fill(mark.begin(), mark.end(), 0);
      std::vector<Elem> join;
      for (Elem a : list[i])
        for (Elem b : list[j]) {
          Elem ab = g.mul(a, b);
          if (!mark[ab]) {
            mark[ab] = 1;
            join.push_back(ab);
          }
        }
      std::sort(join.begin(), join.end());
      add(std::move(join));
    }
  }
  std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<SubgroupSet> out;
  out.reserve(list.size());
  for (auto& s : list) out.push_back(make_subgroup(g, std::move(s)));
  return out;
}

/// Invariant-factor decomposition d1 | d2 | ... | dk (each > 1) with
/// independent generators: every element is uniquely prod x_i^{c_i}, 0 <= c_i < d_i.
struct AbelianStructure {
  std::vector<unsigned> factors;
  std::vector<Elem> generators;

  std::size_t order() const {
    std::size_t n = 1;
    for (auto d : factors) n *= d;
    return n;
  }
  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
};

namespace detail {

// Backtracking search for independent elements of prescribed orders in an
// abelian p-group given by its element list.
inline bool find_basis(const FiniteGroup& g, const std::vector<Elem>& pgroup, const std::vector<unsigned>& orders,
                       std::size_t k, std::vector<Elem>& chosen, std::vector<Elem>& span) {
  if (k == orders.size()) return true;
  std::vector<char> in(g.order(), 0);
  for (Elem x : span) in[x] = 1;
  for (Elem x : pgroup) {
    if (g.element_order(x) != orders[k]) continue;
    // <x> must meet the current span trivially
    bool independent = true;
    for (Elem y = x; y != 0; y = g.mul(y, x))
      if (in[y]) {
        independent = false;
        break;
      }
    if (!independent) continue;
    std::vector<Elem> next;
    next.reserve(span.size() * orders[k]);
    for (Elem s : span) {
      Elem t = s;
      for (unsigned e = 0; e < orders[k]; ++e) {
        next.push_back(t);
        t = g.mul(t, x);
      }
    }
    chosen.push_back(x);
    std::swap(span, next);
    if (find_basis(g, pgroup, orders, k + 1, chosen, span)) return true;
    std::swap(span, next);
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

inline AbelianStructure abelian_invariants(const FiniteGroup& g, const SubgroupSet& s) {
  for (Elem x : s.elements)
    for (Elem y : s.elements)
      if (g.mul(x, y) != g.mul(y, x)) throw PreconditionError("subgroup is not abelian");
  std::size_t n = s.order();
  std::vector<unsigned> primes;
  for (std::size_t m = n, d = 2; m > 1; ++d) {
    if (m % d == 0) {
      primes.push_back(static_cast<unsigned>(d));
      while (m % d == 0) m /= d;
    }
  }
  // per prime: exponent partition (descending) and basis
  std::vector<std::vector<unsigned>> orders_by_prime;
  std::vector<std::vector<Elem>> basis_by_prime;
  for (unsigned p : primes) {
    std::vector<Elem> pgroup;
    for (Elem x : s.elements) {
      unsigned o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) pgroup.push_back(x);
    }
    // |Omega_k| = #{x : x^{p^k} = 1} = p^{sum_i min(k, e_i)}
    std::vector<unsigned> omega_log{0};
    for (unsigned long pk = p;; pk *= p) {
      std::size_t count = 0;
      for (Elem x : pgroup)
        if (pk % g.element_order(x) == 0) ++count;
      unsigned lg = 0;
      for (std::size_t c = count; c > 1; c /= p) ++lg;
      omega_log.push_back(lg);
      if (count == pgroup.size()) break;
    }
    // number of cyclic factors of exponent >= k is omega_log[k] - omega_log[k-1]
    std::vector<unsigned> exps;
    for (std::size_t k = 1; k < omega_log.size(); ++k) {
      unsigned at_least_k = omega_log[k] - omega_log[k - 1];
      unsigned at_least_k1 = k + 1 < omega_log.size() ? omega_log[k + 1] - omega_log[k] : 0;
      for (unsigned c = 0; c < at_least_k - at_least_k1; ++c) exps.push_back(static_cast<unsigned>(k));
    }
    std::sort(exps.rbegin(), exps.rend());
    std::vector<unsigned> ords;
    for (unsigned e : exps) {
      unsigned v = 1;
      for (unsigned i = 0; i < e; ++i) v *= p;
      ords.push_back(v);
    }
    std::vector<Elem> chosen, span{0};
    if (!detail::find_basis(g, pgroup, ords, 0, chosen, span))
      throw ComputationError("abelian invariants: no basis found");
    orders_by_prime.push_back(std::move(ords));
    basis_by_prime.push_back(std::move(chosen));
  }
  std::size_t k = 0;
  for (const auto& o : orders_by_prime) k = std::max(k, o.size());
  AbelianStructure out;
  // factor i (from the largest) multiplies the i-th largest prime-power parts
  for (std::size_t i = 0; i < k; ++i) {
    unsigned d = 1;
    Elem x = 0;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      if (i < orders_by_prime[pi].size()) {
        d *= orders_by_prime[pi][i];
        x = g.mul(x, basis_by_prime[pi][i]);
      }
    }
    out.factors.push_back(d);
    out.generators.push_back(x);
  }
  std::reverse(out.factors.begin(), out.factors.end());
  std::reverse(out.generators.begin(), out.generators.end());
  return out;
}

/// Characters of an abelian group A = prod Z_{d_i}: character e (an exponent
/// vector) sends prod x_i^{c_i} to zeta_L^{sum_i e_i c_i L/d_i}, L = lcm d_i.
class DualGroup {
 public:
  DualGroup(const FiniteGroup& g, AbelianStructure a) : structure_(std::move(a)) {
    exponent_ = 1;
    for (auto d : structure_.factors) exponent_ = std::lcm(exponent_, d);
    coords_.assign(g.order(), {});
    member_.assign(g.order(), 0);
    const std::size_t k = structure_.factors.size();
    std::vector<unsigned> c(k, 0);
    for (;;) {
      Elem x = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (unsigned t = 0; t < c[i]; ++t) x = g.mul(x, structure_.generators[i]);
      if (member_[x]) throw ComputationError("abelian structure generators are not independent");
      member_[x] = 1;
      coords_[x] = c;
      elements_.push_back(x);
      characters_.push_back(c);
      std::size_t i = 0;
      while (i < k && ++c[i] == structure_.factors[i]) c[i++] = 0;
      if (i == k) break;
    }
  }

  const AbelianStructure& structure() const noexcept { return structure_; }
  std::size_t size() const noexcept { return characters_.size(); }
  unsigned exponent() const noexcept { return exponent_; }
  const std::vector<std::vector<unsigned>>& characters() const noexcept { return characters_; }
  /// Elements of A in the same mixed-radix order as characters().
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  bool contains(Elem x) const { return x < member_.size() && member_[x]; }
  const std::vector<unsigned>& coordinates(Elem x) const {
    if (!contains(x)) throw PreconditionError("element is not in the abelian subgroup");
    return coords_[x];
  }

  /// Exponent k with chi(x) = zeta_L^k.
  unsigned pair(const std::vector<unsigned>& chi, Elem x) const {
    const auto& c = coordinates(x);
    unsigned long s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      s += static_cast<unsigned long>(chi[i]) * c[i] * (exponent_ / structure_.factors[i]);
    return static_cast<unsigned>(s % exponent_);
  }
  unsigned pair(std::size_t chi, Elem x) const { return pair(characters_[chi], x); }

  /// Index of the character with the given exponent vector.
  std::size_t index_of(const std::vector<unsigned>& chi) const {
    std::size_t idx = 0, radix = 1;
    for (std::size_t i = 0; i < chi.size(); ++i) {
      idx += (chi[i] % structure_.factors[i]) * radix;
      radix *= structure_.factors[i];
    }
    return idx;
  }

 private:
  AbelianStructure structure_;
  unsigned exponent_ = 1;
  std::vector<std::vector<unsigned>> coords_;
  std::vector<char> member_;
  std::vector<Elem> elements_;
  std::vector<std::vector<unsigned>> characters_;
};

inline DualGroup characters_of_abelian(const FiniteGroup& g, const AbelianStructure& a) { return DualGroup(g, a); }

}  // namespace wittlab
