#pragma once

// Normalized 2-cocycles of G/A with values in a normal abelian subgroup A,
// the deformed groups G_b, and the order-64 Izumi-Kosaki data.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wittlab/error.hpp"
#include "wittlab/group.hpp"
#include "wittlab/subgroups.hpp"

namespace wittlab {

struct QuotientData {
  FiniteGroup quotient;
  std::vector<Elem> projection;  // G -> Q
  std::vector<Elem> section;     // Q -> G, smallest element of each coset
};

/// G/N with cosets numbered by their smallest element.
inline QuotientData quotient_by(const FiniteGroup& g, const SubgroupSet& n) {
  if (!n.normal) throw PreconditionError("quotient needs a normal subgroup");
  constexpr Elem unset = ~Elem{0};
  QuotientData out;
  out.projection.assign(g.order(), unset);
  for (Elem x = 0; x < g.order(); ++x) {
    if (out.projection[x] != unset) continue;
    auto q = static_cast<Elem>(out.section.size());
    out.section.push_back(x);
    for (Elem a : n.elements) out.projection[g.mul(x, a)] = q;
  }
  const std::size_t m = out.section.size();
  std::vector<Elem> table(m * m);
  for (std::size_t q = 0; q < m; ++q)
    for (std::size_t r = 0; r < m; ++r)
      table[q * m + r] = out.projection[g.mul(out.section[q], out.section[r])];
  std::vector<Elem> gens;
  for (Elem s : g.generators())
    if (out.projection[s] != 0) gens.push_back(out.projection[s]);
  out.quotient = m == 1 ? FiniteGroup::trivial() : FiniteGroup::from_table(m, std::move(table), std::move(gens));
  return out;
}

/// b: Q x Q -> A stored at b[q * |Q| + r]; values and the action are given
/// on element indices of G.
struct CocycleData {
  QuotientData quotient;
  SubgroupSet subgroup;
  AbelianStructure structure;
  std::vector<std::vector<Elem>> action;  // action[q][a] = s(q) a s(q)^-1 for a in A
  std::vector<Elem> table;

  std::size_t quotient_order() const noexcept { return quotient.section.size(); }
  Elem b(Elem q, Elem r) const { return table[std::size_t{q} * quotient_order() + r]; }
};

/// Builds cocycle data for A normal abelian in G from a function on Q x Q.
inline CocycleData make_cocycle_data(const FiniteGroup& g, const SubgroupSet& a,
                                     const std::function<Elem(Elem, Elem)>& b) {
  if (!a.normal || !a.abelian) throw PreconditionError("A must be a normal abelian subgroup");
  CocycleData c;
  c.subgroup = a;
  c.structure = abelian_invariants(g, a);
  c.quotient = quotient_by(g, a);
  const std::size_t m = c.quotient_order();
  c.action.assign(m, std::vector<Elem>(g.order(), ~Elem{0}));
  for (std::size_t q = 0; q < m; ++q)
    for (Elem x : a.elements) c.action[q][x] = g.conj(c.quotient.section[q], x);
  c.table.resize(m * m);
  for (std::size_t q = 0; q < m; ++q)
    for (std::size_t r = 0; r < m; ++r) c.table[q * m + r] = b(static_cast<Elem>(q), static_cast<Elem>(r));
  return c;
}

inline CocycleData trivial_cocycle(const FiniteGroup& g, const SubgroupSet& a) {
  return make_cocycle_data(g, a, [](Elem, Elem) { return Elem{0}; });
}

/// b * (coboundary of f), f: Q -> A with f(1) = 1:
/// (df)(q, r) = q(f(r)) f(qr)^-1 f(q).
inline CocycleData perturb_by_coboundary(const FiniteGroup& g, const CocycleData& c, const std::vector<Elem>& f) {
  const std::size_t m = c.quotient_order();
  if (f.size() != m || f[0] != 0) throw PreconditionError("coboundary needs f: Q -> A with f(1) = 1");
  for (Elem x : f)
    if (!c.subgroup.contains(x)) throw PreconditionError("coboundary values must lie in A");
  CocycleData out = c;
  const auto& qg = c.quotient.quotient;
  for (Elem q = 0; q < m; ++q)
    for (Elem r = 0; r < m; ++r) {
      Elem df = g.mul(g.mul(c.action[q][f[r]], g.inv(f[qg.mul(q, r)])), f[q]);
      out.table[std::size_t{q} * m + r] = g.mul(c.b(q, r), df);
    }
  return out;
}

struct CocycleCheck {
  bool ok = true;
  std::optional<std::array<Elem, 3>> witness;  // violating (p, q, r)
  std::string reason;
};

/// Checks values in A, normalization, and
/// p(b(q,r)) b(p,qr) = b(pq,r) b(p,q) for all p, q, r in Q.
inline CocycleCheck verify_cocycle(const FiniteGroup& g, const CocycleData& c) {
  CocycleCheck out;
  const std::size_t m = c.quotient_order();
  if (c.table.size() != m * m || c.action.size() != m) throw PreconditionError("cocycle data sizes do not match");
  const auto& qg = c.quotient.quotient;
  for (Elem q = 0; q < m; ++q)
    for (Elem r = 0; r < m; ++r)
      if (!c.subgroup.contains(c.b(q, r))) {
        out.ok = false;
        out.witness = std::array<Elem, 3>{q, r, 0};
        out.reason = "value outside A";
        return out;
      }
  for (Elem q = 0; q < m; ++q)
    if (c.b(0, q) != 0 || c.b(q, 0) != 0) {
      out.ok = false;
      out.witness = std::array<Elem, 3>{0, q, 0};
      out.reason = "not normalized";
      return out;
    }
  for (Elem p = 0; p < m; ++p)
    for (Elem q = 0; q < m; ++q)
      for (Elem r = 0; r < m; ++r) {
        Elem lhs = g.mul(c.action[p][c.b(q, r)], c.b(p, qg.mul(q, r)));
        Elem rhs = g.mul(c.b(qg.mul(p, q), r), c.b(p, q));
        if (lhs != rhs) {
          out.ok = false;
          out.witness = std::array<Elem, 3>{p, q, r};
          out.reason = "cocycle identity fails";
          return out;
        }
      }
  return out;
}

/// G_b: same elements, x *_b y = b(x mod A, y mod A) x y.
inline FiniteGroup deform_by_cocycle(const FiniteGroup& g, const CocycleData& c) {
  auto check = verify_cocycle(g, c);
  if (!check.ok) throw PreconditionError("not a normalized 2-cocycle: " + check.reason);
  const std::size_t n = g.order();
  const auto& proj = c.quotient.projection;
  std::vector<Elem> table(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) table[std::size_t{x} * n + y] = g.mul(c.b(proj[x], proj[y]), g.mul(x, y));
  std::vector<Elem> gens(g.generators().begin(), g.generators().end());
  try {
    return FiniteGroup::from_table(n, std::move(table), std::move(gens), g.name().empty() ? "" : g.name() + "_b");
  } catch (const Error& e) {
    throw ComputationError(std::string("deformed multiplication is not a group: ") + e.what());
  }
}

struct IzumiKosaki {
  FiniteGroup g3;
  SubgroupSet a;
  CocycleData cocycle;
  CocycleCheck check;
  std::optional<FiniteGroup> g3b;  // present only when the cocycle check passes
};

/// Q = <q1, q2> = Z2 x Z2 acting on A = <a1, a2> = Z4 x Z4 by q_i(a_i) = a_i,
/// q_i(a_{i+1}) = a_i^2 a_{i+1}, and b(q1^t1 q2^t2, q1^r1 q2^r2) = a1^(t1 r1) a2^(t2 r2).
inline IzumiKosaki izumi_kosaki() {
  const FiniteGroup a = direct_product(cyclic_group(4), cyclic_group(4), "A");  // a1 = 4, a2 = 1
  const FiniteGroup q = direct_product(cyclic_group(2), cyclic_group(2), "Q");  // q1 = 2, q2 = 1
  auto elem_a = [](unsigned i, unsigned j) { return static_cast<Elem>((i % 4) * 4 + (j % 4)); };
  // q1: a1 -> a1, a2 -> a1^2 a2;  q2: a1 -> a2^2 a1, a2 -> a2
  std::vector<std::vector<Elem>> gen_images{
      {elem_a(1, 0), elem_a(2, 1)},  // q1
      {elem_a(1, 2), elem_a(0, 1)},  // q2
  };
  // automorphism images must be listed against A's generator order (a1, a2)
  std::vector<std::vector<Elem>> per_q_generator(q.generators().size());
  for (std::size_t k = 0; k < q.generators().size(); ++k) {
    Elem gq = q.generators()[k];
    per_q_generator[k] = gq == 2 ? gen_images[0] : gen_images[1];
  }
  auto action = action_from_generator_images(a, q, per_q_generator);
  FiniteGroup g3 = semidirect_product(a, q, action, "G3");

  std::vector<Elem> a_elems;
  for (Elem x = 0; x < 16; ++x) a_elems.push_back(x);
  IzumiKosaki out{g3, make_subgroup(g3, a_elems), {}, {}, std::nullopt};
  const auto quotient = quotient_by(out.g3, out.a);
  out.cocycle = make_cocycle_data(out.g3, out.a, [&](Elem x, Elem y) {
    // coset x has smallest element s(x) = (1, q) at index q * 16
    Elem qx = quotient.section[x] / 16, qy = quotient.section[y] / 16;
    unsigned t1 = qx / 2, t2 = qx % 2, r1 = qy / 2, r2 = qy % 2;
    return elem_a(t1 * r1, t2 * r2);
  });
  out.check = verify_cocycle(out.g3, out.cocycle);
  if (out.check.ok) out.g3b = deform_by_cocycle(out.g3, out.cocycle).renamed("G3_b");
  return out;
}

}  // namespace wittlab
