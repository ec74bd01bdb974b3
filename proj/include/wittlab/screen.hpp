#pragma once

// Invariant bundles, the rigidity screen over normal abelian subgroups of
// order 4^m, pairwise verdicts and corpus reports.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "wittlab/chartab.hpp"
#include "wittlab/dump.hpp"
#include "wittlab/error.hpp"
#include "wittlab/group.hpp"
#include "wittlab/isomorphism.hpp"
#include "wittlab/subgroups.hpp"
#include "wittlab/witt.hpp"

namespace wittlab {

struct CandidateSubgroup {
  SubgroupSet subgroup;
  AbelianStructure structure;
  bool central = false;
  bool antisymmetric = true;   // always true for listed candidates
  bool alternating = false;    // some admissible R also has phi(R(phi)) = 1
  std::vector<Elem> witness;   // R on the character generators (antisymmetric)
};

struct RigidityEvidence {
  std::size_t examined = 0;  // normal abelian subgroups of order 4^m
  std::vector<CandidateSubgroup> candidates;

  bool rigid() const noexcept { return candidates.empty(); }
};

namespace detail {

inline bool is_power_of_four(std::size_t n) {
  if (n < 4) return false;
  while (n % 4 == 0) n /= 4;
  return n == 1;
}

struct SkewSearch {
  const FiniteGroup& g;
  const DualGroup& dual;
  std::size_t k;                                           // number of cyclic factors
  std::vector<std::vector<std::vector<unsigned>>> acted;  // acted[s][i] = g_s . eps_i
  std::vector<Elem> images;
  bool found_antisymmetric = false;
  bool found_alternating = false;
  std::vector<Elem> first;

  SkewSearch(const FiniteGroup& group, const DualGroup& d) : g(group), dual(d), k(d.structure().factors.size()) {
    const auto& st = d.structure();
    const unsigned L = d.exponent();
    for (Elem s : g.generators()) {
      std::vector<std::vector<unsigned>> per;
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<unsigned> eps(k, 0);
        eps[i] = 1;
        // (s.phi)(x_j) = phi(s^-1 x_j s)
        std::vector<unsigned> e(k);
        for (std::size_t j = 0; j < k; ++j)
          e[j] = dual.pair(eps, g.conj(g.inv(s), st.generators[j])) / (L / st.factors[j]);
        per.push_back(std::move(e));
      }
      acted.push_back(std::move(per));
    }
  }

  // R(phi) for an exponent vector phi, using the first `upto` images.
  Elem apply(const std::vector<unsigned>& phi) const {
    Elem r = 0;
    for (std::size_t i = 0; i < phi.size(); ++i)
      for (unsigned t = 0; t < phi[i]; ++t) r = g.mul(r, images[i]);
    return r;
  }

  unsigned pair_eps(std::size_t i, Elem a) const {
    std::vector<unsigned> eps(k, 0);
    eps[i] = 1;
    return dual.pair(eps, a);
  }

  // Invariance constraints whose support lies within the assigned prefix.
  bool invariant_so_far() const {
    const std::size_t m = images.size();
    for (std::size_t s = 0; s < acted.size(); ++s) {
      Elem gs = g.generators()[s];
      for (std::size_t i = 0; i < m; ++i) {
        const auto& e = acted[s][i];
        bool ready = true;
        for (std::size_t j = m; j < k; ++j)
          if (e[j] != 0) ready = false;
        if (!ready) continue;
        if (apply(e) != g.conj(gs, images[i])) return false;
      }
    }
    return true;
  }

  void run(std::size_t i) {
    if (found_alternating) return;
    const unsigned L = dual.exponent();
    if (i == k) {
      std::vector<char> hit(g.order(), 0);
      for (const auto& phi : dual.characters()) {
        Elem a = apply(phi);
        if (hit[a]) return;
        hit[a] = 1;
      }
      if (!found_antisymmetric) first = images;
      found_antisymmetric = true;
      bool alt = true;
      for (std::size_t j = 0; j < k; ++j)
        if (pair_eps(j, images[j]) % L != 0) alt = false;
      if (alt) {
        found_alternating = true;
        first = images;
      }
      return;
    }
    const unsigned d = dual.structure().factors[i];
    for (Elem y : dual.elements()) {
      if (g.element_order(y) != d) continue;
      images.push_back(y);
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j)
        if ((pair_eps(i, images[j]) + pair_eps(j, y)) % L != 0) ok = false;
      if (ok && invariant_so_far()) run(i + 1);
      images.pop_back();
      if (found_alternating) return;
    }
  }
};

}  // namespace detail

/// Normal abelian subgroups A of order 4^m that carry an antisymmetric
/// G-invariant isomorphism R from the character group of A onto A. R is
/// searched through the images of the standard character generators.
inline RigidityEvidence rigidity_screen(const FiniteGroup& g) {
  RigidityEvidence ev;
  for (const auto& s : normal_subgroups(g)) {
    if (!s.abelian || !detail::is_power_of_four(s.order())) continue;
    ++ev.examined;
    AbelianStructure st = abelian_invariants(g, s);
    DualGroup dual(g, st);
    detail::SkewSearch search(g, dual);
    search.run(0);
    if (!search.found_antisymmetric) continue;
    CandidateSubgroup c;
    c.subgroup = s;
    c.structure = st;
    c.central = s.central;
    c.alternating = search.found_alternating;
    c.witness = search.first;
    ev.candidates.push_back(std::move(c));
  }
  return ev;
}

struct InvariantBundle {
  std::string name;
  FiniteGroup group;
  std::size_t order = 0;
  OrderProfile profile;
  std::vector<unsigned> degrees;
  std::vector<int> indicators;
  std::vector<std::size_t> dual;
  std::size_t self_dual = 0;
  BasedRing k0;
  WittRing witt;
  std::optional<std::string> k0_fingerprint, witt_fingerprint;
  RigidityEvidence evidence;
};

inline InvariantBundle invariant_bundle(const FiniteGroup& g) {
  InvariantBundle b;
  b.name = g.name();
  b.group = g;
  b.order = g.order();
  b.profile = order_profile(g);
  const auto t = burnside_dixon(g);
  b.degrees = t.degrees;
  b.indicators = fs_indicators(t);
  const FusionData fd = rep_g_fusion_data(t);
  b.dual = fd.dual;
  for (std::size_t i = 0; i < fd.size(); ++i) b.self_dual += fd.dual[i] == i;
  b.k0 = BasedRing::make(Coefficients::Z, fd.labels, fd.unit, fd.fusion);
  b.witt = witt_ring(fd);
  b.k0_fingerprint = fingerprint(b.k0);
  b.witt_fingerprint = fingerprint(b.witt.ring);
  b.evidence = rigidity_screen(g);
  return b;
}

enum class Verdict { NotIsocategoricalInvariant, NotIsocategoricalCandidates, Undecided };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotIsocategoricalInvariant: return "not-isocategorical";
    case Verdict::NotIsocategoricalCandidates: return "not-isocategorical(candidate-subgroups)";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

struct InvariantCheck {
  std::string invariant;
  bool equal = false;
  std::string detail;
};

using AbelianType = std::vector<unsigned>;

struct PairVerdict {
  std::string first, second;
  std::vector<InvariantCheck> checks;  // in evaluation order, stops at the first failure
  Verdict verdict = Verdict::Undecided;
  std::string witness;
  std::set<AbelianType> types_first, types_second;  // non-central candidate types
  std::size_t central_excluded = 0;                 // central candidates ignored by the rule
  bool isomorphic = false;                          // set when the rule needed an isomorphism test

  bool refuted() const noexcept { return verdict != Verdict::Undecided; }
};

inline std::string format_type(const AbelianType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

inline std::string format_profile(const OrderProfile& p) {
  std::string s;
  for (auto [o, c] : p) s += (s.empty() ? "" : " ") + std::to_string(o) + ":" + std::to_string(c);
  return s;
}

inline PairVerdict compare_bundles(const InvariantBundle& a, const InvariantBundle& b) {
  PairVerdict v;
  v.first = a.name;
  v.second = b.name;
  auto record = [&](std::string inv, bool eq, std::string detail) {
    v.checks.push_back({inv, eq, std::move(detail)});
    if (!eq) {
      v.verdict = Verdict::NotIsocategoricalInvariant;
      v.witness = std::move(inv);
    }
    return eq;
  };
  if (!record("order", a.order == b.order, std::to_string(a.order) + " vs " + std::to_string(b.order))) return v;
  if (!record("K0", based_ring_isomorphism(a.k0, b.k0).has_value(),
              "based rings of rank " + std::to_string(a.k0.size()) + " and " + std::to_string(b.k0.size())))
    return v;
  if (!record("Witt ring", witt_isomorphism(a.witt, b.witt).has_value(),
              "bases of size " + std::to_string(a.witt.size()) + " and " + std::to_string(b.witt.size())))
    return v;
  if (!record("self-dual count", a.self_dual == b.self_dual,
              std::to_string(a.self_dual) + " vs " + std::to_string(b.self_dual)))
    return v;
  if (!record("order profile", a.profile == b.profile, format_profile(a.profile) + " vs " + format_profile(b.profile)))
    return v;

  for (const auto& c : a.evidence.candidates) {
    if (c.central) ++v.central_excluded;
    else v.types_first.insert(c.structure.factors);
  }
  for (const auto& c : b.evidence.candidates) {
    if (c.central) ++v.central_excluded;
    else v.types_second.insert(c.structure.factors);
  }
  bool disjoint = std::none_of(v.types_first.begin(), v.types_first.end(),
                               [&](const AbelianType& t) { return v.types_second.count(t) > 0; });
  if (disjoint && v.types_first.empty() && v.types_second.empty()) {
    // Neither side offers a subgroup to deform along; only isomorphic groups remain possible.
    v.isomorphic = are_isomorphic(a.group, b.group).map.has_value();
    disjoint = !v.isomorphic;
  }
  if (disjoint) {
    v.verdict = Verdict::NotIsocategoricalCandidates;
    std::string ta, tb;
    for (const auto& t : v.types_first) ta += (ta.empty() ? "" : " ") + format_type(t);
    for (const auto& t : v.types_second) tb += (tb.empty() ? "" : " ") + format_type(t);
    v.witness = "candidate types {" + ta + "} vs {" + tb + "}";
  }
  return v;
}

inline PairVerdict compare_pair(const FiniteGroup& g, const FiniteGroup& h) {
  return compare_bundles(invariant_bundle(g), invariant_bundle(h));
}

struct CorpusEntry {
  std::string file;
  std::optional<InvariantBundle> bundle;
  std::string error;
};

struct CorpusReport {
  std::vector<CorpusEntry> entries;  // bundles sorted by (order, name), then errors by file
  std::vector<PairVerdict> pairs;

  std::size_t rigid() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const CorpusEntry& e) {
      return e.bundle && e.bundle->evidence.rigid();
    }));
  }
  std::size_t undecided() const {
    return static_cast<std::size_t>(
        std::count_if(pairs.begin(), pairs.end(), [](const PairVerdict& p) { return !p.refuted(); }));
  }
};

/// Loads every *.grp / *.dump file in `dir`, computes bundles (in parallel
/// when jobs > 1) and compares all pairs of equal order.
inline CorpusReport screen_corpus(const std::filesystem::path& dir, std::optional<std::size_t> order = std::nullopt,
                                  unsigned jobs = 1, std::size_t max_cosets = kDefaultMaxCosets) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw IoError("not a readable directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec)) {
    auto ext = e.path().extension().string();
    if (e.is_regular_file() && (ext == ".grp" || ext == ".dump")) files.push_back(e.path());
  }
  if (ec) throw IoError("cannot list directory: " + dir.string());
  if (files.empty()) throw IoError("no group files (*.grp, *.dump) in " + dir.string());
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> entries(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      entries[i].file = files[i].filename().string();
      try {
        FiniteGroup g = load_group(files[i], max_cosets);
        if (order && g.order() != *order) continue;
        entries[i].bundle = invariant_bundle(g);
      } catch (const std::exception& e) {
        entries[i].error = e.what();
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CorpusReport report;
  for (auto& e : entries)
    if (e.bundle || !e.error.empty()) report.entries.push_back(std::move(e));
  std::stable_sort(report.entries.begin(), report.entries.end(), [](const CorpusEntry& x, const CorpusEntry& y) {
    if (x.bundle.has_value() != y.bundle.has_value()) return x.bundle.has_value();
    if (!x.bundle) return x.file < y.file;
    if (x.bundle->order != y.bundle->order) return x.bundle->order < y.bundle->order;
    if (x.bundle->name != y.bundle->name) return x.bundle->name < y.bundle->name;
    return x.file < y.file;
  });
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    if (!report.entries[i].bundle) continue;
    for (std::size_t j = i + 1; j < report.entries.size(); ++j) {
      if (!report.entries[j].bundle || report.entries[j].bundle->order != report.entries[i].bundle->order) continue;
      report.pairs.push_back(compare_bundles(*report.entries[i].bundle, *report.entries[j].bundle));
    }
  }
  return report;
}

}  // namespace wittlab
