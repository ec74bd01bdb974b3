#pragma once

// Human-readable and JSON renderings of tables, Witt rings, bundles, verdicts
// and corpus reports. JSON objects keep insertion order.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wittlab/chartab.hpp"
#include "wittlab/screen.hpp"
#include "wittlab/witt.hpp"

namespace wittlab {

using Json = nlohmann::ordered_json;

inline Json profile_json(const OrderProfile& p) {
  Json j = Json::object();
  for (auto [o, c] : p) j[std::to_string(o)] = c;
  return j;
}

inline Json chartab_json(const FiniteGroup& g, const CharacterTable& t, bool modp_values) {
  const auto& m = t.modp;
  const auto fs = fs_indicators(m);
  const auto star = dual_involution(m);
  Json j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["prime"] = m.p;
  j["primitive_root"] = m.z;
  Json classes = Json::array();
  for (std::size_t k = 0; k < m.classes.count(); ++k)
    classes.push_back({{"representative", m.classes.representatives[k]},
                       {"size", m.classes.sizes[k]},
                       {"element_order", g.element_order(m.classes.representatives[k])},
                       {"inverse_class", m.classes.inverse_class[k]}});
  j["classes"] = classes;
  Json chars = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json values = Json::array();
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (modp_values) {
        values.push_back(m.values[i][k]);
      } else {
        const auto& v = t.values[i][k];
        values.push_back({{"text", v.to_string()}, {"root_order", v.order}, {"multiplicities", v.mult}});
      }
    }
    chars.push_back({{"label", "χ" + std::to_string(i + 1)},
                     {"degree", m.degrees[i]},
                     {"indicator", fs[i]},
                     {"dual", star[i]},
                     {"values", values}});
  }
  j["characters"] = chars;
  return j;
}

inline std::string chartab_text(const FiniteGroup& g, const CharacterTable& t, bool modp_values) {
  const auto& m = t.modp;
  const auto fs = fs_indicators(m);
  const auto star = dual_involution(m);
  std::ostringstream o;
  o << "group " << g.name() << "  order " << g.order() << "  classes " << t.size() << "  p = " << m.p
    << "  z = " << m.z << "\n";
  o << "class  rep  size  ord  inv\n";
  for (std::size_t k = 0; k < m.classes.count(); ++k)
    o << "  " << k + 1 << "    " << m.classes.representatives[k] << "    " << m.classes.sizes[k] << "    "
      << g.element_order(m.classes.representatives[k]) << "    " << m.classes.inverse_class[k] + 1 << "\n";
  o << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    o << "χ" << i + 1 << "  deg " << m.degrees[i] << "  ν2 " << (fs[i] > 0 ? "+1" : fs[i] < 0 ? "-1" : "0")
      << "  dual χ" << star[i] + 1 << "  :";
    for (std::size_t k = 0; k < t.size(); ++k) {
      o << "  ";
      if (modp_values) o << m.values[i][k];
      else o << t.values[i][k].to_string();
    }
    o << "\n";
  }
  return o.str();
}

inline Json witt_json(const std::string& source, const FusionData& fd, const WittRing& w) {
  Json j;
  j["source"] = source;
  j["symmetric"] = fd.symmetric;
  j["group_only"] = w.group_only;
  j["rank"] = w.size();
  Json basis = Json::array();
  for (std::size_t b = 0; b < w.size(); ++b) {
    Json e{{"index", w.basis[b]}, {"label", w.ring.labels[b]}};
    if (!fd.degrees.empty()) e["degree"] = fd.degrees[w.basis[b]];
    e["d"] = w.d[b].to_string();
    basis.push_back(e);
  }
  j["basis"] = basis;
  Json weak = Json::array();
  for (std::size_t i = 0; i < fd.size(); ++i)
    if (!fd.weakly_symmetric(i)) weak.push_back(fd.labels[i]);
  j["not_weakly_symmetric"] = weak;
  if (!w.group_only) {
    Json products = Json::array();
    for (std::size_t x = 0; x < w.size(); ++x) {
      Json row = Json::array();
      for (std::size_t y = 0; y < w.size(); ++y) {
        Json terms = Json::array();
        for (std::size_t z = 0; z < w.size(); ++z)
          if (w.ring.constants(x, y, z)) terms.push_back(z);
        row.push_back(terms);
      }
      products.push_back(row);
    }
    j["products"] = products;
    auto fp = fingerprint(w.ring);
    j["fingerprint"] = fp ? Json(*fp) : Json(nullptr);
  }
  return j;
}

inline std::string witt_text(const std::string& source, const FusionData& fd, const WittRing& w) {
  std::ostringstream o;
  o << "Witt " << (w.group_only ? "group" : "ring") << " of " << source << ": rank " << w.size() << " over Z2\n";
  for (std::size_t b = 0; b < w.size(); ++b) {
    o << "  " << w.ring.labels[b];
    if (!fd.degrees.empty()) o << "  deg " << fd.degrees[w.basis[b]];
    o << "  d " << w.d[b].to_string() << "\n";
  }
  for (std::size_t i = 0; i < fd.size(); ++i)
    if (!fd.weakly_symmetric(i)) o << "  " << fd.labels[i] << " is not weakly symmetric (d = " << fd.d[i].to_string() << ")\n";
  if (w.group_only) {
    o << "braiding is not symmetric: additive group only\n";
    return o.str();
  }
  o << "products mod 2:\n";
  for (std::size_t x = 0; x < w.size(); ++x)
    for (std::size_t y = x; y < w.size(); ++y) {
      std::string terms;
      for (std::size_t z = 0; z < w.size(); ++z)
        if (w.ring.constants(x, y, z)) terms += (terms.empty() ? "" : " + ") + w.ring.labels[z];
      o << "  " << w.ring.labels[x] << "·" << w.ring.labels[y] << " = " << (terms.empty() ? "0" : terms) << "\n";
    }
  if (auto fp = fingerprint(w.ring)) o << "fingerprint " << *fp << "\n";
  return o.str();
}

inline Json double_json(const FiniteGroup& g, const DoubleWitt& d) {
  Json j;
  j["group"] = g.name();
  j["invariants"] = d.structure.factors;
  Json pairs = Json::array();
  for (const auto& [x, psi] : d.pairs) pairs.push_back({{"g", x}, {"psi", psi}});
  j["pairs"] = pairs;
  j["rank"] = d.rank();
  j["group_only"] = d.group_only;
  return j;
}

inline std::string double_text(const FiniteGroup& g, const DoubleWitt& d) {
  std::ostringstream o;
  o << "double of " << g.name() << " = " << format_type(d.structure.factors) << "\n";
  for (const auto& [x, psi] : d.pairs) o << "  (g = " << x << ", ψ = " << format_type(psi) << ")\n";
  o << "rank " << d.rank() << " (additive Witt group only; the braiding is not symmetric)\n";
  return o.str();
}

inline Json evidence_json(const RigidityEvidence& ev) {
  Json j;
  j["examined"] = ev.examined;
  j["rigid"] = ev.rigid();
  Json c = Json::array();
  for (const auto& cand : ev.candidates)
    c.push_back({{"order", cand.subgroup.order()},
                 {"type", cand.structure.factors},
                 {"central", cand.central},
                 {"antisymmetric", cand.antisymmetric},
                 {"alternating", cand.alternating},
                 {"elements", cand.subgroup.elements}});
  j["candidates"] = c;
  return j;
}

inline Json bundle_json(const InvariantBundle& b) {
  Json j;
  j["name"] = b.name;
  j["order"] = b.order;
  j["order_profile"] = profile_json(b.profile);
  j["degrees"] = b.degrees;
  j["indicators"] = b.indicators;
  j["self_dual"] = b.self_dual;
  j["k0"] = {{"rank", b.k0.size()}, {"fingerprint", b.k0_fingerprint ? Json(*b.k0_fingerprint) : Json(nullptr)}};
  j["witt"] = {{"rank", b.witt.size()},
               {"fingerprint", b.witt_fingerprint ? Json(*b.witt_fingerprint) : Json(nullptr)}};
  j["rigidity"] = evidence_json(b.evidence);
  return j;
}

inline constexpr const char* kCentralExclusionNote =
    "central candidates are ignored by the candidate rule; this follows a case-specific argument, not a general theorem";

inline Json verdict_json(const PairVerdict& v) {
  Json j;
  j["first"] = v.first;
  j["second"] = v.second;
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back({{"invariant", c.invariant}, {"equal", c.equal}, {"detail", c.detail}});
  j["checks"] = checks;
  j["verdict"] = to_string(v.verdict);
  j["witness"] = v.witness;
  if (v.checks.size() == 5 && v.checks.back().equal) {
    Json a = Json::array(), b = Json::array();
    for (const auto& t : v.types_first) a.push_back(t);
    for (const auto& t : v.types_second) b.push_back(t);
    j["candidate_types"] = {{"first", a}, {"second", b}};
    j["central_excluded"] = v.central_excluded;
    if (v.central_excluded) j["note"] = kCentralExclusionNote;
    if (v.isomorphic) j["isomorphic"] = true;
  }
  return j;
}

inline std::string verdict_text(const PairVerdict& v) {
  std::ostringstream o;
  o << v.first << " vs " << v.second << "\n";
  for (const auto& c : v.checks) {
    std::string name = c.invariant;
    name.resize(std::max<std::size_t>(name.size(), 16), ' ');
    o << "  " << name << (c.equal ? "equal      " : "DIFFERENT  ") << c.detail << "\n";
  }
  if (v.checks.size() == 5 && v.checks.back().equal) {
    std::string ta, tb;
    for (const auto& t : v.types_first) ta += (ta.empty() ? "" : " ") + format_type(t);
    for (const auto& t : v.types_second) tb += (tb.empty() ? "" : " ") + format_type(t);
    o << "  candidate types {" << ta << "} vs {" << tb << "}";
    if (v.central_excluded) o << "  (" << v.central_excluded << " central candidate(s) excluded)";
    o << "\n";
    if (v.central_excluded) o << "  note: " << kCentralExclusionNote << "\n";
    if (v.isomorphic) o << "  the groups are isomorphic\n";
  }
  o << "verdict: " << to_string(v.verdict);
  if (!v.witness.empty()) o << " (witness: " << v.witness << ")";
  o << "\n";
  return o.str();
}

/// Per-group status: rigid (screen list empty), distinguished (every
/// same-order pair refuted) or undecided.
inline std::string group_status(const CorpusReport& r, const InvariantBundle& b) {
  if (b.evidence.rigid()) return "rigid";
  for (const auto& p : r.pairs)
    if ((p.first == b.name || p.second == b.name) && !p.refuted()) return "undecided";
  return "distinguished";
}

inline Json corpus_json(const CorpusReport& r) {
  Json j;
  Json groups = Json::array(), errors = Json::array();
  std::size_t distinguished = 0, rigid = 0, undecided_groups = 0;
  for (const auto& e : r.entries) {
    if (!e.bundle) {
      errors.push_back({{"file", e.file}, {"error", e.error}});
      continue;
    }
    Json g = bundle_json(*e.bundle);
    std::string status = group_status(r, *e.bundle);
    rigid += status == "rigid";
    distinguished += status == "distinguished";
    undecided_groups += status == "undecided";
    Json out{{"file", e.file}, {"status", status}};
    out.update(g);
    groups.push_back(out);
  }
  Json pairs = Json::array();
  for (const auto& p : r.pairs) pairs.push_back(verdict_json(p));
  j["groups"] = groups;
  j["pairs"] = pairs;
  j["errors"] = errors;
  j["summary"] = {{"groups", groups.size()},
                  {"rigid", rigid},
                  {"distinguished", distinguished},
                  {"undecided_groups", undecided_groups},
                  {"pairs", r.pairs.size()},
                  {"undecided_pairs", r.undecided()},
                  {"errors", errors.size()}};
  return j;
}

inline std::string corpus_text(const CorpusReport& r) {
  std::ostringstream o;
  std::size_t groups = 0, rigid = 0, distinguished = 0, undecided = 0, errors = 0;
  o << "groups\n";
  for (const auto& e : r.entries) {
    if (!e.bundle) continue;
    const auto& b = *e.bundle;
    std::string status = group_status(r, b);
    ++groups;
    rigid += status == "rigid";
    distinguished += status == "distinguished";
    undecided += status == "undecided";
    o << "  " << b.order << "  " << b.name << "  [" << e.file << "]  " << status << "  self-dual " << b.self_dual
      << "  witt " << b.witt.size() << "  candidates " << b.evidence.candidates.size() << "/" << b.evidence.examined;
    for (const auto& c : b.evidence.candidates)
      o << "  " << format_type(c.structure.factors) << (c.central ? "c" : "") << (c.alternating ? "" : "*");
    o << "\n";
  }
  o << "pairs\n";
  for (const auto& p : r.pairs) {
    o << "  " << p.first << " / " << p.second << ": " << to_string(p.verdict);
    if (!p.witness.empty()) o << " (" << p.witness << ")";
    if (p.central_excluded && p.checks.size() == 5 && p.checks.back().equal) o << " [central candidates excluded]";
    o << "\n";
  }
  for (const auto& e : r.entries)
    if (!e.bundle) {
      ++errors;
      o << "error  " << e.file << ": " << e.error << "\n";
    }
  o << "summary: " << groups << " groups, " << rigid << " rigid, " << distinguished << " distinguished, " << undecided
    << " undecided; " << r.pairs.size() << " pairs, " << r.undecided() << " undecided; " << errors << " errors\n";
  o << "(candidate suffix c = central, * = antisymmetric only, no alternating R)\n";
  return o.str();
}

}  // namespace wittlab
