#pragma once

// Irreducible characters by the Burnside-Dixon method: class algebra over F_p,
// simultaneous eigenvectors, then lifting to sums of roots of unity.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "wittlab/error.hpp"
#include "wittlab/group.hpp"
#include "wittlab/modp.hpp"
#include "wittlab/tensor.hpp"

namespace wittlab {

/// a(i,j,k) = #{(x,y) in C_i x C_j : xy = z} for the representative z of C_k.
inline Tensor3 class_mult_coeffs(const FiniteGroup& g, const ConjugacyClasses& cc) {
  const std::size_t r = cc.count();
  Tensor3 a(r);
  for (std::size_t k = 0; k < r; ++k) {
    Elem z = cc.representatives[k];
    for (Elem x = 0; x < g.order(); ++x) a(cc.class_of[x], cc.class_of[g.mul(g.inv(x), z)], k) += 1;
  }
  return a;
}

struct CharacterTableModP {
  modp::u64 p = 0;
  modp::u64 z = 0;  // primitive root mod p
  std::size_t group_order = 0;
  unsigned exponent = 1;
  ConjugacyClasses classes;
  std::vector<modp::Vec> values;  // values[i][k] = chi_i(class k) mod p
  std::vector<unsigned> degrees;

  std::size_t size() const noexcept { return values.size(); }
  modp::Field field() const { return modp::Field(p); }
};

namespace detail {

inline unsigned lift_degree(const modp::Field& f, modp::u64 d2, std::size_t order) {
  for (unsigned d = 1; std::size_t{d} * d <= order; ++d)
    if (f.from_int(std::int64_t{d} * d) == d2) return d;
  throw ComputationError("character degree does not lift to an integer");
}

// Verifies row orthogonality, sum of squared degrees and degree divisibility.
inline void check_table(const CharacterTableModP& t) {
  const auto f = t.field();
  const std::size_t r = t.size();
  std::size_t sum = 0;
  for (auto d : t.degrees) {
    sum += std::size_t{d} * d;
    if (t.group_order % d != 0) throw ComputationError("character degree does not divide the group order");
  }
  if (sum != t.group_order) throw ComputationError("squared degrees do not sum to the group order");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      modp::u64 s = 0;
      for (std::size_t k = 0; k < r; ++k)
        s = f.add(s, f.mul(t.classes.sizes[k] % t.p,
                           f.mul(t.values[i][k], t.values[j][t.classes.inverse_class[k]])));
      if (s != (i == j ? t.group_order % t.p : 0)) throw ComputationError("character table fails row orthogonality");
    }
}

}  // namespace detail

/// Computes the irreducible characters modulo the smallest prime p = 1 mod
/// exponent with p > 2|G|. Rows are sorted by (degree, value vector).
inline CharacterTableModP burnside_dixon(const FiniteGroup& g) {
  if (g.order() > kMaxGroupOrder) throw PreconditionError("group too large for a character table");
  CharacterTableModP t;
  t.group_order = g.order();
  t.exponent = g.exponent();
  t.p = modp::select_prime(t.exponent, g.order());
  t.z = modp::primitive_root(t.p);
  t.classes = conjugacy_classes(g);
  const modp::Field f(t.p);
  const std::size_t r = t.classes.count();
  const Tensor3 a = class_mult_coeffs(g, t.classes);

  // Each space is kept as RREF rows; M_i (j,k) = a(i,j,k) acts on columns.
  std::vector<std::vector<modp::Vec>> spaces;
  {
    std::vector<modp::Vec> full(r, modp::Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < r && spaces.size() < r; ++i) {
    std::vector<std::vector<modp::Vec>> next;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::vector<std::size_t> piv(d);
      for (std::size_t m = 0; m < d; ++m)
        piv[m] = static_cast<std::size_t>(std::find_if(basis[m].begin(), basis[m].end(), [](auto v) { return v != 0; }) -
                                          basis[m].begin());
      modp::Matrix restricted(d, d);
      for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t m = 0; m < d; ++m) {
          modp::u64 s = 0;
          for (std::size_t k = 0; k < r; ++k)
            if (basis[l][k]) s = f.add(s, f.mul(f.from_int(a(i, piv[m], k)), basis[l][k]));
          restricted(m, l) = s;
        }
      }
      auto lambdas = modp::roots(f, modp::charpoly(f, restricted));
      std::size_t covered = 0;
      for (auto lambda : lambdas) {
        modp::Matrix shifted = restricted;
        for (std::size_t m = 0; m < d; ++m) shifted(m, m) = f.sub(shifted(m, m), lambda);
        std::vector<modp::Vec> sub;
        for (const auto& c : modp::nullspace(f, shifted)) {
          modp::Vec v(r, 0);
          for (std::size_t m = 0; m < d; ++m)
            if (c[m])
              for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(c[m], basis[m][k]));
          sub.push_back(std::move(v));
        }
        modp::rref(f, sub);
        covered += sub.size();
        next.push_back(std::move(sub));
      }
      if (covered != d) throw ComputationError("class matrix is not diagonalizable over F_p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw ComputationError("eigenspace splitting did not reach one-dimensional spaces");

  struct Row {
    unsigned degree;
    modp::Vec values;
  };
  std::vector<Row> rows;
  for (const auto& s : spaces) {
    modp::Vec w = s.front();
    if (w[0] == 0) throw ComputationError("central character vanishes at the identity");
    modp::u64 s0 = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, s0);
    modp::u64 sum = 0;
    for (std::size_t k = 0; k < r; ++k)
      sum = f.add(sum, f.mul(f.mul(w[k], w[t.classes.inverse_class[k]]), f.inv(t.classes.sizes[k] % t.p)));
    unsigned d = detail::lift_degree(f, f.mul(g.order() % t.p, f.inv(sum)), g.order());
    modp::Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = f.mul(f.mul(d, w[k]), f.inv(t.classes.sizes[k] % t.p));
    rows.push_back({d, std::move(chi)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return x.degree != y.degree ? x.degree < y.degree : x.values < y.values;
  });
  for (auto& row : rows) {
    t.degrees.push_back(row.degree);
    t.values.push_back(std::move(row.values));
  }
  detail::check_table(t);
  return t;
}

/// A sum of m-th roots of unity: value = sum_k mult[k] * zeta_m^k.
struct CyclotomicValue {
  unsigned order = 1;
  std::vector<std::int64_t> mult{0};

  std::complex<double> to_complex() const {
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < mult.size(); ++k)
      if (mult[k]) s += static_cast<double>(mult[k]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / order);
    return s;
  }

  /// Image under zeta_m -> z^((p-1)/m).
  modp::u64 reduce(const modp::Field& f, modp::u64 z) const {
    modp::u64 theta = f.pow(z, (f.p() - 1) / order), s = 0, t = 1;
    for (auto c : mult) {
      s = f.add(s, f.mul(f.from_int(c), t));
      t = f.mul(t, theta);
    }
    return s;
  }

  /// Human-readable form such as "2", "-1", "ζ8 + ζ8^7". Full cosets of
  /// prime-order subgroups are cancelled first; the stored data is untouched.
  std::string to_string() const {
    std::vector<std::int64_t> m = mult;
    const unsigned n = order;
    for (unsigned q = 2; q <= n; ++q) {
      if (n % q != 0) continue;
      bool prime = true;
      for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) prime = false;
      if (!prime) continue;
      const unsigned step = n / q;
      for (unsigned j = 0; j < step; ++j) {
        std::int64_t low = m[j];
        for (unsigned i = 1; i < q; ++i) low = std::min(low, m[j + i * step]);
        if (low > 0)
          for (unsigned i = 0; i < q; ++i) m[j + i * step] -= low;
      }
    }
    // lower the root order when only multiples of some divisor occur
    unsigned gcd = n;
    for (unsigned k = 1; k < n; ++k)
      if (m[k]) gcd = std::gcd(gcd, k);
    const unsigned order2 = n / gcd;
    std::vector<std::int64_t> r(order2, 0);
    for (unsigned k = 0; k < n; ++k)
      if (m[k]) r[k / gcd] = m[k];
    if (order2 <= 2) {
      std::int64_t v = r[0] - (order2 == 2 ? r[1] : 0);
      return std::to_string(v);
    }
    std::string out;
    for (unsigned k = 0; k < order2; ++k) {
      if (!r[k]) continue;
      if (!out.empty()) out += " + ";
      if (k == 0) {
        out += std::to_string(r[k]);
        continue;
      }
      if (r[k] != 1) out += std::to_string(r[k]);
      out += "ζ" + std::to_string(order2);
      if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
  }
};

struct CharacterTable {
  CharacterTableModP modp;
  std::vector<std::vector<CyclotomicValue>> values;

  std::size_t size() const noexcept { return values.size(); }
};

/// Writes each value chi(g), g of order m, as sum_k mu_k zeta_m^k with
/// mu_k = m^-1 sum_j chi(g^j) theta^(-jk).
inline CharacterTable lift_to_cyclotomic(const CharacterTableModP& t, const FiniteGroup& g) {
  const modp::Field f(t.p);
  CharacterTable out;
  out.modp = t;
  const std::size_t r = t.size();
  out.values.assign(r, std::vector<CyclotomicValue>(r));
  for (std::size_t k = 0; k < r; ++k) {
    const unsigned m = g.element_order(t.classes.representatives[k]);
    const modp::u64 theta = f.pow(t.z, (t.p - 1) / m);
    const modp::u64 minv = f.inv(m);
    for (std::size_t i = 0; i < r; ++i) {
      CyclotomicValue v;
      v.order = m;
      v.mult.assign(m, 0);
      for (unsigned kk = 0; kk < m; ++kk) {
        modp::u64 s = 0;
        for (unsigned j = 0; j < m; ++j) {
          modp::u64 w = f.pow(theta, (static_cast<std::uint64_t>(m) - (std::uint64_t{j} * kk) % m) % m);
          s = f.add(s, f.mul(t.values[i][t.classes.power(k, j)], w));
        }
        s = f.mul(s, minv);
        if (s > t.degrees[i]) throw ComputationError("cyclotomic multiplicity out of range; bad prime");
        v.mult[kk] = static_cast<std::int64_t>(s);
      }
      if (v.reduce(f, t.z) != t.values[i][k]) throw ComputationError("cyclotomic lift does not reduce to the table");
      out.values[i][k] = std::move(v);
    }
  }
  return out;
}

inline CharacterTable character_table(const FiniteGroup& g) { return lift_to_cyclotomic(burnside_dixon(g), g); }

/// Second Frobenius-Schur indicator of character i.
inline int fs_indicator(const CharacterTableModP& t, std::size_t i) {
  const modp::Field f(t.p);
  modp::u64 s = 0;
  for (std::size_t k = 0; k < t.classes.count(); ++k)
    s = f.add(s, f.mul(t.classes.sizes[k] % t.p, t.values[i][t.classes.power(k, 2)]));
  s = f.mul(s, f.inv(t.group_order % t.p));
  if (s == 0) return 0;
  if (s == 1) return 1;
  if (s == t.p - 1) return -1;
  throw ComputationError("Frobenius-Schur sum is not 0 or +-1");
}

inline std::vector<int> fs_indicators(const CharacterTableModP& t) {
  std::vector<int> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(fs_indicator(t, i));
  return out;
}

/// i -> i* with chi_{i*}(g) = chi_i(g^-1).
inline std::vector<std::size_t> dual_involution(const CharacterTableModP& t) {
  const std::size_t r = t.size();
  std::vector<std::size_t> star(r);
  for (std::size_t i = 0; i < r; ++i) {
    modp::Vec conj(r);
    for (std::size_t k = 0; k < r; ++k) conj[k] = t.values[i][t.classes.inverse_class[k]];
    auto it = std::find(t.values.begin(), t.values.end(), conj);
    if (it == t.values.end()) throw ComputationError("dual character not found in table");
    star[i] = static_cast<std::size_t>(it - t.values.begin());
  }
  return star;
}

/// N(i,j,k) = multiplicity of chi_k in chi_i chi_j.
inline Tensor3 fusion_coefficients(const CharacterTableModP& t) {
  const modp::Field f(t.p);
  const std::size_t r = t.size();
  const modp::u64 ginv = f.inv(t.group_order % t.p);
  std::vector<modp::Vec> weighted_dual(r, modp::Vec(r));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t c = 0; c < r; ++c)
      weighted_dual[k][c] = f.mul(t.classes.sizes[c] % t.p, t.values[k][t.classes.inverse_class[c]]);
  Tensor3 n(r);
  modp::Vec prod(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t c = 0; c < r; ++c) prod[c] = f.mul(t.values[i][c], t.values[j][c]);
      for (std::size_t k = 0; k < r; ++k) {
        modp::u64 s = 0;
        for (std::size_t c = 0; c < r; ++c) s = f.add(s, f.mul(prod[c], weighted_dual[k][c]));
        s = f.mul(s, ginv);
        if (s >= (t.p + 1) / 2) throw ComputationError("fusion coefficient does not lift to a nonnegative integer");
        n(i, j, k) = n(j, i, k) = static_cast<std::int64_t>(s);
      }
    }
  return n;
}

}  // namespace wittlab
