#pragma once

// Todd-Coxeter coset enumeration over the trivial subgroup (HLT strategy with
// lookahead when the table fills up).

#include <cstdint>
#include <string>
#include <vector>

#include "wittlab/error.hpp"
#include "wittlab/group.hpp"
#include "wittlab/presentation.hpp"

namespace wittlab {

inline constexpr std::size_t kDefaultMaxCosets = 65536;

namespace detail {

class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t capacity)
      : cols_(2 * generators), capacity_(capacity) {
    table_.reserve(std::min<std::size_t>(capacity, 1024) * cols_);
    new_coset();
  }

  std::size_t cols() const noexcept { return cols_; }
  std::size_t used() const noexcept { return forward_.size(); }
  bool alive(std::size_t c) const noexcept { return forward_[c] == static_cast<std::int32_t>(c); }
  std::int32_t at(std::size_t c, std::size_t x) const noexcept { return table_[c * cols_ + x]; }
  static std::size_t inv(std::size_t x) noexcept { return x ^ 1u; }

  /// Returns false when no slot is left.
  bool define(std::size_t c, std::size_t x) {
    if (used() >= capacity_) return false;
    auto n = static_cast<std::int32_t>(new_coset());
    set(c, x, n);
    set(static_cast<std::size_t>(n), inv(x), static_cast<std::int32_t>(c));
    return true;
  }

  enum class Scan { Done, Incomplete, NoSpace };

  /// Scans relator `w` at coset `alpha`; defines new cosets when `fill`.
  Scan scan(std::size_t alpha, const std::vector<std::size_t>& w, bool fill) {
    if (w.empty()) return Scan::Done;
    auto f = static_cast<std::int32_t>(alpha), b = f;
    std::int64_t i = 0, j = static_cast<std::int64_t>(w.size()) - 1;
    auto letter = [&](std::int64_t k) { return w[static_cast<std::size_t>(k)]; };
    for (;;) {
      while (i <= j && at(f, letter(i)) >= 0) f = at(f, letter(i++));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return Scan::Done;
      }
      while (j >= i && at(b, inv(letter(j))) >= 0) b = at(b, inv(letter(j--)));
      if (j < i) {
        coincidence(f, b);
        return Scan::Done;
      }
      if (i == j) {
        set(f, letter(i), b);
        set(b, inv(letter(i)), f);
        return Scan::Done;
      }
      if (!fill) return Scan::Incomplete;
      if (!define(f, letter(i))) return Scan::NoSpace;
    }
  }

  /// Renumbers live cosets 0..L-1 in their current order. Returns, for each
  /// old index, the number of live cosets strictly before it.
  std::vector<std::size_t> compact() {
    std::vector<std::size_t> before(used() + 1, 0);
    std::vector<std::int32_t> renum(used(), -1);
    std::size_t live = 0;
    for (std::size_t c = 0; c < used(); ++c) {
      before[c] = live;
      if (alive(c)) renum[c] = static_cast<std::int32_t>(live++);
    }
    before[used()] = live;
    std::vector<std::int32_t> fresh;
    fresh.reserve(live * cols_);
    for (std::size_t c = 0; c < used(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t v = at(c, x);
        fresh.push_back(v < 0 ? -1 : renum[static_cast<std::size_t>(v)]);
      }
    }
    table_ = std::move(fresh);
    forward_.resize(live);
    for (std::size_t c = 0; c < live; ++c) forward_[c] = static_cast<std::int32_t>(c);
    return before;
  }

 private:
  std::size_t new_coset() {
    auto n = forward_.size();
    forward_.push_back(static_cast<std::int32_t>(n));
    table_.insert(table_.end(), cols_, -1);
    return n;
  }

  void set(std::size_t c, std::size_t x, std::int32_t v) { table_[c * cols_ + x] = v; }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
    while (forward_[static_cast<std::size_t>(c)] != r) {
      std::int32_t nxt = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = r;
      c = nxt;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l, std::vector<std::int32_t>& queue) {
    std::int32_t a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::int32_t g = queue[qi];
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t d = at(static_cast<std::size_t>(g), x);
        if (d < 0) continue;
        set(static_cast<std::size_t>(d), inv(x), -1);
        std::int32_t m = rep(g), n = rep(d);
        if (at(m, x) >= 0) {
          merge(n, at(m, x), queue);
        } else if (at(n, inv(x)) >= 0) {
          merge(m, at(n, inv(x)), queue);
        } else {
          set(m, x, n);
          set(n, inv(x), m);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t capacity_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> forward_;
};

}  // namespace detail

/// Enumerates the cosets of the trivial subgroup and returns the regular
/// representation as a Cayley table. Element i corresponds to the i-th coset
/// in breadth-first order over the generators; generator k of the result is
/// the image of presentation generator k.
inline FiniteGroup coset_enumeration(const Presentation& pres, std::size_t max_cosets = kDefaultMaxCosets) {
  if (max_cosets == 0) throw PreconditionError("max_cosets must be positive");
  const std::size_t ngens = pres.generators.size();
  std::vector<std::vector<std::size_t>> rels;
  for (const Word& w : pres.relators) {
    std::vector<std::size_t> cols;
    for (const Letter& l : w) {
      if (l.generator >= ngens) throw PreconditionError("relator uses an undeclared generator");
      cols.push_back(2u * l.generator + (l.exponent > 0 ? 0u : 1u));
    }
    if (!cols.empty()) rels.push_back(std::move(cols));
  }

  detail::CosetTable t(ngens, max_cosets);
  using Scan = detail::CosetTable::Scan;

  // Lookahead over every live coset, then compaction; returns the new
  // position of `alpha`.
  auto make_room = [&](std::size_t alpha) {
    for (std::size_t c = 0; c < t.used(); ++c) {
      if (!t.alive(c)) continue;
      for (const auto& r : rels) {
        t.scan(c, r, false);
        if (!t.alive(c)) break;
      }
    }
    auto before = t.compact();
    if (t.used() >= max_cosets)
      throw EnumerationLimit("coset enumeration exceeded " + std::to_string(max_cosets) +
                             " cosets (group too large or infinite)");
    return before[alpha];
  };

  std::size_t alpha = 0;
  while (alpha < t.used()) {
    if (!t.alive(alpha)) {
      ++alpha;
      continue;
    }
    bool restart = false;
    for (const auto& r : rels) {
      if (t.scan(alpha, r, true) == Scan::NoSpace) {
        alpha = make_room(alpha);
        restart = true;
        break;
      }
      if (!t.alive(alpha)) break;
    }
    if (restart) continue;
    if (!t.alive(alpha)) {
      ++alpha;
      continue;
    }
    for (std::size_t x = 0; x < t.cols() && t.alive(alpha); ++x) {
      if (t.at(alpha, x) >= 0) continue;
      if (!t.define(alpha, x)) {
        alpha = make_room(alpha);
        restart = true;
        break;
      }
    }
    if (restart) continue;
    ++alpha;
  }
  t.compact();

  const std::size_t n = t.used();
  if (n > kMaxGroupOrder) throw ComputationError("presented group has more than 4096 elements");

  // Breadth-first numbering from the identity coset using positive generators.
  std::vector<std::int64_t> number(n, -1);
  std::vector<std::size_t> order{0};
  std::vector<std::size_t> parent(n, 0), via(n, 0);
  number[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t g = 0; g < ngens; ++g) {
      auto nxt = static_cast<std::size_t>(t.at(order[i], 2 * g));
      if (number[nxt] < 0) {
        number[nxt] = static_cast<std::int64_t>(order.size());
        parent[order.size()] = i;
        via[order.size()] = g;
        order.push_back(nxt);
      }
    }
  }
  if (order.size() != n) throw ComputationError("coset table is not connected");

  // act[e][g]: element reached from element e by right multiplication with g.
  std::vector<Elem> act(n * std::max<std::size_t>(ngens, 1));
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t g = 0; g < ngens; ++g)
      act[e * ngens + g] = static_cast<Elem>(number[static_cast<std::size_t>(t.at(order[e], 2 * g))]);

  std::vector<Elem> cayley(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    cayley[x * n] = static_cast<Elem>(x);
    for (std::size_t y = 1; y < n; ++y)
      cayley[x * n + y] = act[std::size_t{cayley[x * n + parent[y]]} * ngens + via[y]];
  }
  std::vector<Elem> gens;
  for (std::size_t g = 0; g < ngens; ++g) gens.push_back(act[g]);
  return FiniteGroup::from_table(n, std::move(cayley), std::move(gens), pres.name);
}

}  // namespace wittlab
