#pragma once

// Witt rings of symmetric fusion categories, Grothendieck rings of Rep(G),
// and the fusion-data builders for Rep(G), Rep(G, u), Vec_Z2 and abelian doubles.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittlab/chartab.hpp"
#include "wittlab/error.hpp"
#include "wittlab/fusion.hpp"
#include "wittlab/group.hpp"
#include "wittlab/subgroups.hpp"

namespace wittlab {

/// Indices i with i = i* and d_i = 1.
inline std::vector<std::size_t> witt_basis(const FusionData& fd) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fd.size(); ++i)
    if (fd.dual[i] == i && fd.d[i].is_one()) out.push_back(i);
  return out;
}

struct WittRing {
  BasedRing ring;  // tag Z2; constants empty when group_only
  std::vector<std::size_t> basis;
  std::vector<RootOfUnity> d;
  bool group_only = false;

  std::size_t size() const noexcept { return basis.size(); }
};

/// Basis from witt_basis; product x.y = p(xy) where p keeps the basis
/// components of the fusion product mod 2.
inline WittRing witt_ring(const FusionData& fd) {
  fd.validate();
  WittRing w;
  w.basis = witt_basis(fd);
  std::size_t unit_pos = w.basis.size();
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < w.basis.size(); ++b) {
    labels.push_back(fd.labels[w.basis[b]]);
    w.d.push_back(fd.d[w.basis[b]]);
    if (w.basis[b] == fd.unit) unit_pos = b;
  }
  if (unit_pos == w.basis.size()) throw ComputationError("unit is missing from the Witt basis");
  if (!fd.symmetric) {
    w.group_only = true;
    w.ring.coefficients = Coefficients::Z2;
    w.ring.labels = std::move(labels);
    w.ring.unit = unit_pos;
    return w;
  }
  const std::size_t n = w.basis.size();
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = fd.fusion(w.basis[i], w.basis[j], w.basis[k]);
  w.ring = BasedRing::make(Coefficients::Z2, std::move(labels), unit_pos, std::move(c));
  return w;
}

/// Based isomorphism of Witt rings; group-only rings compare by rank.
inline std::optional<std::vector<std::size_t>> witt_isomorphism(const WittRing& a, const WittRing& b) {
  if (a.group_only || b.group_only) {
    if (a.group_only != b.group_only || a.size() != b.size()) return std::nullopt;
    std::vector<std::size_t> id(a.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return id;
  }
  return based_ring_isomorphism(a.ring, b.ring);
}

inline std::vector<std::string> character_labels(std::size_t r) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back("χ" + std::to_string(i + 1));
  return out;
}

inline BasedRing grothendieck_ring(const CharacterTableModP& t) {
  return BasedRing::make(Coefficients::Z, character_labels(t.size()), 0, fusion_coefficients(t));
}

/// Rep(G) with its symmetric braiding: d_i is the Frobenius-Schur indicator
/// on self-dual simples and 1 elsewhere.
inline FusionData rep_g_fusion_data(const CharacterTableModP& t) {
  FusionData fd;
  fd.labels = character_labels(t.size());
  fd.unit = 0;
  fd.dual = dual_involution(t);
  fd.fusion = fusion_coefficients(t);
  fd.symmetric = true;
  fd.degrees = t.degrees;
  for (std::size_t i = 0; i < t.size(); ++i)
    fd.d.push_back(fd.dual[i] == i ? RootOfUnity::sign(fs_indicator(t, i)) : RootOfUnity::one());
  fd.validate();
  return fd;
}

inline FusionData rep_g_fusion_data(const FiniteGroup& g) { return rep_g_fusion_data(burnside_dixon(g)); }

/// Rep(G, u) for a central involution u: d_i = nu_2(i) * chi_i(u) / chi_i(1).
inline FusionData rep_g_u_fusion_data(const FiniteGroup& g, const CharacterTableModP& t, Elem u) {
  if (u >= g.order()) throw PreconditionError("element out of range");
  if (g.mul(u, u) != 0) throw PreconditionError("u must satisfy u^2 = 1");
  for (Elem x : g.generators())
    if (g.mul(u, x) != g.mul(x, u)) throw PreconditionError("u must be central");
  FusionData fd = rep_g_fusion_data(t);
  const std::size_t k = t.classes.class_of[u];
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (fd.dual[i] != i) continue;
    modp::u64 v = t.values[i][k];
    int ui;
    if (v == t.degrees[i] % t.p) ui = 1;
    else if (v == t.p - t.degrees[i]) ui = -1;
    else throw ComputationError("central involution does not act by a sign");
    fd.d[i] = fd.d[i] * RootOfUnity::sign(ui);
  }
  fd.validate();
  return fd;
}

inline FusionData rep_g_u_fusion_data(const FiniteGroup& g, Elem u) {
  return rep_g_u_fusion_data(g, burnside_dixon(g), u);
}

/// The pointed category Vec_Z2 with braidings b0, b1 (symmetric) and the
/// twisted bi, b-i (d = +-i).
inline FusionData vec_z2_fixture(const std::string& id) {
  FusionData fd;
  fd.labels = {"1", "g"};
  fd.unit = 0;
  fd.dual = {0, 1};
  fd.fusion = Tensor3(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) fd.fusion(i, j, i ^ j) = 1;
  fd.degrees = {1, 1};
  if (id == "b0") {
    fd.d = {RootOfUnity::one(), RootOfUnity::one()};
    fd.symmetric = true;
  } else if (id == "b1") {
    fd.d = {RootOfUnity::one(), RootOfUnity{1, 2}};
    fd.symmetric = true;
  } else if (id == "bi") {
    fd.d = {RootOfUnity::one(), RootOfUnity{1, 4}};
  } else if (id == "b-i") {
    fd.d = {RootOfUnity::one(), RootOfUnity{3, 4}};
  } else {
    throw PreconditionError("unknown Vec_Z2 fixture '" + id + "' (expected b0, b1, bi or b-i)");
  }
  fd.validate();
  return fd;
}

struct DoubleWitt {
  AbelianStructure structure;
  std::vector<std::pair<Elem, std::vector<unsigned>>> pairs;  // (g, psi as exponent vector)
  bool group_only = true;

  std::size_t rank() const noexcept { return pairs.size(); }
};

/// Simples (g, psi) of the double of an abelian group that are self-dual with
/// trivial self-braiding sign: g^2 = 1, psi^2 = 1, psi(g) = 1.
inline DoubleWitt double_abelian_witt(const FiniteGroup& a) {
  if (!a.is_abelian()) throw PreconditionError("nonabelian Drinfeld doubles are out of scope");
  std::vector<Elem> all(a.order());
  for (Elem x = 0; x < a.order(); ++x) all[x] = x;
  DoubleWitt out;
  out.structure = abelian_invariants(a, make_subgroup(a, all));
  DualGroup dual(a, out.structure);
  for (Elem g : dual.elements()) {
    if (a.mul(g, g) != 0) continue;
    for (const auto& psi : dual.characters()) {
      bool square_trivial = true;
      for (std::size_t i = 0; i < psi.size(); ++i)
        if ((2 * psi[i]) % out.structure.factors[i] != 0) square_trivial = false;
      if (square_trivial && dual.pair(psi, g) == 0) out.pairs.emplace_back(g, psi);
    }
  }
  return out;
}

}  // namespace wittlab
