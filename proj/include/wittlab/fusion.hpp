#pragma once

// Fusion data of a braided fusion category with finitely many simples, based
// rings, and based-ring isomorphism / fingerprints.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wittlab/error.hpp"
#include "wittlab/tensor.hpp"

namespace wittlab {

/// zeta_order^numerator with order in {1, 2, 4}.
struct RootOfUnity {
  unsigned numerator = 0;
  unsigned order = 1;

  static RootOfUnity one() { return {0, 1}; }
  static RootOfUnity sign(int s) { return s < 0 ? RootOfUnity{1, 2} : one(); }

  RootOfUnity normalized() const {
    unsigned n = numerator % order, o = order;
    while (o > 1 && n % 2 == 0 && o % 2 == 0) {
      n /= 2;
      o /= 2;
    }
    if (n == 0) o = 1;
    return {n, o};
  }
  bool is_one() const { return normalized().order == 1; }
  RootOfUnity operator*(const RootOfUnity& x) const {
    unsigned o = std::max(order, x.order);
    return RootOfUnity{numerator * (o / order) + x.numerator * (o / x.order), o}.normalized();
  }
  std::string to_string() const {
    auto r = normalized();
    if (r.order == 1) return "1";
    if (r.order == 2) return "-1";
    return "ζ" + std::to_string(r.order) + (r.numerator == 1 ? "" : "^" + std::to_string(r.numerator));
  }
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    auto x = a.normalized(), y = b.normalized();
    return x.numerator == y.numerator && x.order == y.order;
  }
};

struct FusionData {
  std::vector<std::string> labels;
  std::size_t unit = 0;
  std::vector<std::size_t> dual;
  std::vector<RootOfUnity> d;
  Tensor3 fusion;
  bool symmetric = false;
  std::vector<unsigned> degrees;  // optional, display only

  std::size_t size() const noexcept { return labels.size(); }
  bool self_dual(std::size_t i) const { return dual[i] == i; }
  bool weakly_symmetric(std::size_t i) const { return (d[i] * d[dual[i]]).is_one(); }

  /// Throws PreconditionError on the first violated invariant.
  void validate() const {
    const std::size_t r = size();
    if (dual.size() != r || d.size() != r || fusion.rank() != r || unit >= r)
      throw PreconditionError("fusion data sizes do not match");
    if (dual[unit] != unit) throw PreconditionError("unit is not self-dual");
    for (std::size_t i = 0; i < r; ++i) {
      if (dual[i] >= r || dual[dual[i]] != i) throw PreconditionError("duality is not an involution");
      auto o = d[i].order;
      if (o != 1 && o != 2 && o != 4) throw PreconditionError("d_i must be a 1st, 2nd or 4th root of unity");
      if (symmetric && dual[i] == i && !(d[i].normalized().order <= 2))
        throw PreconditionError("symmetric braiding forces d_i = +-1 on self-dual simples");
    }
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        if (fusion(unit, j, k) != (j == k ? 1 : 0)) throw PreconditionError("unit fusion row is not the identity");
        for (std::size_t i = 0; i < r; ++i)
          if (fusion(i, j, k) < 0) throw PreconditionError("negative fusion coefficient");
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (fusion(i, j, unit) != (j == dual[i] ? 1 : 0))
          throw PreconditionError("fusion rules do not respect duality");
  }
};

enum class Coefficients { Z, Z2 };

inline const char* to_string(Coefficients c) { return c == Coefficients::Z ? "Z" : "Z2"; }

/// Ring with a distinguished basis and nonnegative structure constants:
/// b_i b_j = sum_k constants(i,j,k) b_k.
struct BasedRing {
  Coefficients coefficients = Coefficients::Z;
  std::vector<std::string> labels;
  std::size_t unit = 0;
  Tensor3 constants;
  bool commutative = true;

  std::size_t size() const noexcept { return labels.size(); }

  static BasedRing make(Coefficients c, std::vector<std::string> labels, std::size_t unit, Tensor3 constants) {
    BasedRing r;
    r.coefficients = c;
    r.labels = std::move(labels);
    r.unit = unit;
    if (c == Coefficients::Z2)
      for (std::size_t i = 0; i < constants.rank(); ++i)
        for (std::size_t j = 0; j < constants.rank(); ++j)
          for (std::size_t k = 0; k < constants.rank(); ++k) constants(i, j, k) &= 1;
    r.constants = std::move(constants);
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (r.constants(i, j, k) != r.constants(j, i, k)) r.commutative = false;
    return r;
  }

  std::int64_t reduce(std::int64_t v) const { return coefficients == Coefficients::Z2 ? (v & 1) : v; }

  bool unit_law() const {
    for (std::size_t j = 0; j < size(); ++j)
      for (std::size_t k = 0; k < size(); ++k)
        if (constants(unit, j, k) != (j == k) || constants(j, unit, k) != (j == k)) return false;
    return true;
  }

  /// (b_i b_j) b_k = b_i (b_j b_k) on the basis.
  bool associative() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            std::int64_t lhs = 0, rhs = 0;
            for (std::size_t m = 0; m < n; ++m) {
              lhs += constants(i, j, m) * constants(m, k, l);
              rhs += constants(j, k, m) * constants(i, m, l);
            }
            if (reduce(lhs) != reduce(rhs)) return false;
          }
    return true;
  }
};

namespace detail {

// Isomorphism-invariant data of one basis element.
struct BasisSignature {
  bool unit = false;
  bool self_dual = false;
  std::vector<std::int64_t> constants;  // sorted row entries c(i,j,k)
  std::vector<std::int64_t> square;     // sorted c(i,i,k)
  std::size_t square_support = 0;

  auto key() const { return std::tie(unit, self_dual, square_support, square, constants); }
  friend bool operator==(const BasisSignature& a, const BasisSignature& b) { return a.key() == b.key(); }
  friend bool operator<(const BasisSignature& a, const BasisSignature& b) { return a.key() < b.key(); }
};

inline std::vector<BasisSignature> signatures(const BasedRing& r) {
  const std::size_t n = r.size();
  std::vector<BasisSignature> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& s = out[i];
    s.unit = i == r.unit;
    for (std::size_t j = 0; j < n; ++j) {
      if (r.constants(i, j, r.unit) != 0 && j == i) s.self_dual = true;
      for (std::size_t k = 0; k < n; ++k) s.constants.push_back(r.constants(i, j, k));
    }
    for (std::size_t k = 0; k < n; ++k) {
      s.square.push_back(r.constants(i, i, k));
      if (r.constants(i, i, k) != 0) ++s.square_support;
    }
    std::sort(s.constants.begin(), s.constants.end());
    std::sort(s.square.begin(), s.square.end());
  }
  return out;
}

}  // namespace detail

/// Basis bijection sigma with sigma(unit) = unit and
/// c2(sigma i, sigma j, sigma k) = c1(i, j, k), if one exists.
inline std::optional<std::vector<std::size_t>> based_ring_isomorphism(const BasedRing& a, const BasedRing& b) {
  if (a.coefficients != b.coefficients) throw PreconditionError("based rings have different coefficient rings");
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};
  auto sa = detail::signatures(a), sb = detail::signatures(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (!(x == y)) return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sa[i] == sb[j]) candidates[i].push_back(j);

  constexpr std::size_t none = ~std::size_t{0};
  std::vector<std::size_t> sigma(n, none);
  std::vector<char> used(n, 0);
  std::vector<std::size_t> assigned;

  auto consistent = [&](std::size_t x, std::size_t y) {
    sigma[x] = y;
    assigned.push_back(x);
    bool ok = true;
    for (std::size_t p : assigned) {
      for (std::size_t q : assigned) {
        if (a.constants(x, p, q) != b.constants(y, sigma[p], sigma[q]) ||
            a.constants(p, x, q) != b.constants(sigma[p], y, sigma[q]) ||
            a.constants(p, q, x) != b.constants(sigma[p], sigma[q], y)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    assigned.pop_back();
    sigma[x] = none;
    return ok;
  };

  auto search = [&](auto&& self) -> bool {
    if (assigned.size() == n) return true;
    // most-constrained unassigned element first
    std::size_t best = none;
    std::vector<std::size_t> best_options;
    for (std::size_t x = 0; x < n; ++x) {
      if (sigma[x] != none) continue;
      std::vector<std::size_t> options;
      for (std::size_t y : candidates[x])
        if (!used[y] && consistent(x, y)) options.push_back(y);
      if (best == none || options.size() < best_options.size()) {
        best = x;
        best_options = std::move(options);
        if (best_options.size() <= 1) break;
      }
    }
    for (std::size_t y : best_options) {
      sigma[best] = y;
      used[y] = 1;
      assigned.push_back(best);
      if (self(self)) return true;
      assigned.pop_back();
      used[y] = 0;
      sigma[best] = none;
    }
    return false;
  };
  if (!search(search)) return std::nullopt;
  return sigma;
}

inline constexpr std::size_t kFingerprintMaxBasis = 12;

/// Canonical form: the lexicographically smallest serialization of the
/// structure constants over all basis orders that list elements by
/// signature. Returned as a 16-hex-digit FNV-1a hash, or nullopt when the
/// basis has more than 12 elements.
inline std::optional<std::string> fingerprint(const BasedRing& r) {
  const std::size_t n = r.size();
  if (n > kFingerprintMaxBasis) return std::nullopt;
  auto sig = detail::signatures(r);
  std::vector<std::size_t> by_sig(n);
  for (std::size_t i = 0; i < n; ++i) by_sig[i] = i;
  std::stable_sort(by_sig.begin(), by_sig.end(), [&](std::size_t x, std::size_t y) { return sig[x] < sig[y]; });
  // block_of_position[t]: elements allowed at position t
  std::vector<std::vector<std::size_t>> allowed(n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t i = 0; i < n; ++i)
      if (sig[i] == sig[by_sig[t]]) allowed[t].push_back(i);
  // triples grouped by their largest position, in lexicographic order
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>> layer(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) layer[std::max({i, j, k})].emplace_back(i, j, k);

  std::vector<std::int64_t> best, current;
  bool have_best = false;
  std::vector<std::size_t> at(n);
  std::vector<char> used(n, 0);

  // state: 0 = prefix equal to best, -1 = prefix already smaller. A new best
  // extends every active prefix, so frames reset to 0 after an update.
  std::size_t updates = 0;
  auto search = [&](auto&& self, std::size_t t, int state) -> void {
    if (t == n) {
      if (!have_best || state < 0) {
        best = current;
        have_best = true;
        ++updates;
      }
      return;
    }
    std::size_t seen = updates;
    for (std::size_t x : allowed[t]) {
      if (used[x]) continue;
      if (updates != seen) {
        state = 0;
        seen = updates;
      }
      at[t] = x;
      used[x] = 1;
      std::size_t mark = current.size();
      int s = state;
      bool prune = false;
      for (auto [i, j, k] : layer[t]) {
        std::int64_t v = r.constants(at[i], at[j], at[k]);
        std::size_t pos = current.size();
        current.push_back(v);
        if (have_best && s == 0) {
          if (v < best[pos]) s = -1;
          else if (v > best[pos]) {
            prune = true;
            break;
          }
        }
      }
      if (!prune) self(self, t + 1, have_best ? s : 0);
      current.resize(mark);
      used[x] = 0;
    }
  };
  search(search, 0, 0);

  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(r.coefficients));
  mix(n);
  for (auto v : best) mix(static_cast<std::uint64_t>(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace wittlab
