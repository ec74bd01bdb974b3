#pragma once

// Isomorphism testing for Cayley-table groups: cheap invariants first, then
// backtracking over images of a small generating sequence.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittlab/group.hpp"

namespace wittlab {

struct IsomorphismResult {
  std::optional<std::vector<Elem>> map;  // map[x] = image of x
  std::string reason;                    // distinguishing invariant when map is empty

  explicit operator bool() const noexcept { return map.has_value(); }
};

/// Greedy short generating sequence: repeatedly adds the element that
/// enlarges the generated subgroup the most.
inline std::vector<Elem> small_generating_sequence(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<Elem> current{0};
  while (current.size() < g.order()) {
    std::vector<char> in(g.order(), 0);
    for (Elem x : current) in[x] = 1;
    Elem best = 0;
    std::size_t best_size = 0;
    for (Elem x = 1; x < g.order(); ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      std::size_t s = generated_subgroup(g, gens).size();
      gens.pop_back();
      if (s > best_size) {
        best = x;
        best_size = s;
        if (s == g.order()) break;
      }
    }
    gens.push_back(best);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

namespace detail {

inline std::size_t derived_subgroup_order(const FiniteGroup& g) {
  std::vector<Elem> comms;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : g.generators()) comms.push_back(g.commutator(x, y));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  // G' is the normal closure of these commutators
  std::vector<Elem> closure = generated_subgroup(g, comms);
  for (;;) {
    std::vector<Elem> more = closure;
    for (Elem c : closure)
      for (Elem s : g.generators()) more.push_back(g.conj(s, c));
    auto next = generated_subgroup(g, more);
    if (next.size() == closure.size()) return closure.size();
    closure = std::move(next);
  }
}

inline std::map<std::pair<unsigned, std::size_t>, std::size_t> class_profile(const FiniteGroup& g,
                                                                             const ConjugacyClasses& cc) {
  std::map<std::pair<unsigned, std::size_t>, std::size_t> p;
  for (std::size_t k = 0; k < cc.count(); ++k) ++p[{g.element_order(cc.representatives[k]), cc.sizes[k]}];
  return p;
}

}  // namespace detail

inline IsomorphismResult are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  IsomorphismResult out;
  if (g.order() != h.order()) {
    out.reason = "order";
    return out;
  }
  if (order_profile(g) != order_profile(h)) {
    out.reason = "order profile";
    return out;
  }
  if (center(g).size() != center(h).size()) {
    out.reason = "center size";
    return out;
  }
  if (detail::derived_subgroup_order(g) != detail::derived_subgroup_order(h)) {
    out.reason = "abelianization";
    return out;
  }
  const auto cg = conjugacy_classes(g), ch = conjugacy_classes(h);
  if (detail::class_profile(g, cg) != detail::class_profile(h, ch)) {
    out.reason = "class sizes";
    return out;
  }

  const std::vector<Elem> gens = small_generating_sequence(g);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const unsigned o = g.element_order(gens[k]);
    const std::size_t s = cg.sizes[cg.class_of[gens[k]]];
    for (Elem y = 0; y < h.order(); ++y)
      if (h.element_order(y) == o && ch.sizes[ch.class_of[y]] == s) candidates[k].push_back(y);
  }

  std::vector<Elem> images;
  auto injective = [&](const std::vector<Elem>& map) {
    std::vector<char> hit(h.order(), 0);
    for (Elem x : map) {
      if (x == ~Elem{0}) continue;
      if (hit[x]) return false;
      hit[x] = 1;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t k) -> std::optional<std::vector<Elem>> {
    for (Elem y : candidates[k]) {
      images.push_back(y);
      std::span<const Elem> gs(gens.data(), k + 1);
      auto map = extend_homomorphism(g, gs, h, images);
      if (map && injective(*map)) {
        if (k + 1 == gens.size()) {
          images.pop_back();
          return map;
        }
        if (auto found = self(self, k + 1)) {
          images.pop_back();
          return found;
        }
      }
      images.pop_back();
    }
    return std::nullopt;
  };
  if (gens.empty()) {
    out.map = std::vector<Elem>{0};
    return out;
  }
  out.map = search(search, 0);
  if (!out.map) out.reason = "exhausted search";
  return out;
}

}  // namespace wittlab
