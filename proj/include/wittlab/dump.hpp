#pragma once

// Canonical text dump of a Cayley-table group, and loading groups from files.
//
// Dump format (one item per line, '#' starts a comment line):
//   wittlab-group 1
//   name "<text>"
//   order <n>
//   generators <i1> <i2> ...
//   row <c0> <c1> ... <c(n-1)>      (n lines, row x lists x*y for y = 0..n-1)
//   end

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "wittlab/coset_enum.hpp"
#include "wittlab/error.hpp"
#include "wittlab/group.hpp"
#include "wittlab/presentation.hpp"

namespace wittlab {

inline std::string dump_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << "wittlab-group 1\n";
  out << "name \"" << g.name() << "\"\n";
  out << "order " << g.order() << "\n";
  out << "generators";
  for (Elem x : g.generators()) out << ' ' << x;
  out << '\n';
  for (Elem x = 0; x < g.order(); ++x) {
    out << "row";
    for (Elem y : g.row(x)) out << ' ' << y;
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

inline bool looks_like_dump(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == '\n')) ++i;
    if (i < text.size() && text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    break;
  }
  return text.substr(i).starts_with("wittlab-group");
}

inline FiniteGroup read_group_dump(std::string_view text, const std::string& filename = "<input>") {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::string name;
  std::size_t order = 0;
  bool have_order = false, have_gens = false, ended = false, have_header = false;
  std::vector<Elem> gens, table;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(filename, lineno, 1, msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (ended) fail("content after 'end'");
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (!have_header) {
      std::string version;
      ls >> version;
      if (key != "wittlab-group" || version != "1") fail("expected 'wittlab-group 1'");
      have_header = true;
      continue;
    }
    if (key == "name") {
      auto open = line.find('"'), close = line.rfind('"');
      if (open == std::string::npos || close == open) fail("expected quoted name");
      name = line.substr(open + 1, close - open - 1);
    } else if (key == "order") {
      if (!(ls >> order) || order == 0 || order > kMaxGroupOrder) fail("bad order");
      have_order = true;
    } else if (key == "generators") {
      Elem x;
      while (ls >> x) gens.push_back(x);
      have_gens = true;
    } else if (key == "row") {
      if (!have_order) fail("'row' before 'order'");
      std::size_t before = table.size();
      Elem x;
      while (ls >> x) table.push_back(x);
      if (table.size() - before != order) fail("row must have exactly " + std::to_string(order) + " entries");
    } else if (key == "end") {
      ended = true;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!have_header) throw ParseError(filename, 1, 1, "empty file");
  if (!ended) throw ParseError(filename, lineno, 1, "missing 'end'");
  if (!have_gens) throw ParseError(filename, lineno, 1, "missing 'generators'");
  if (table.size() != order * order) throw ParseError(filename, lineno, 1, "table must have 'order' rows");
  if (order == 1) return FiniteGroup::trivial(name);
  return FiniteGroup::from_table(order, std::move(table), std::move(gens), name);
}

inline FiniteGroup group_from_source(const GroupSource& src, std::size_t max_cosets = kDefaultMaxCosets) {
  if (const auto* p = std::get_if<Presentation>(&src)) return coset_enumeration(*p, max_cosets);
  return from_permutations(std::get<PermGenSet>(src));
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Loads a group source or dump. Unnamed groups take the file stem as name.
inline FiniteGroup load_group(const std::filesystem::path& path, std::size_t max_cosets = kDefaultMaxCosets) {
  const std::string text = read_text_file(path);
  const std::string file = path.string();
  FiniteGroup g = looks_like_dump(text) ? read_group_dump(text, file)
                                        : group_from_source(parse_group_file(text, file), max_cosets);
  if (g.name().empty()) g = g.renamed(path.stem().string());
  return g;
}

}  // namespace wittlab
