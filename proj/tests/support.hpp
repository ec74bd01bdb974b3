#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wittlab/wittlab.hpp"

namespace wittlab::test {

inline std::filesystem::path corpus_dir() { return WITTLAB_CORPUS_DIR; }

inline FiniteGroup corpus_group(const std::string& file) { return load_group(corpus_dir() / file); }

inline FiniteGroup from_source(const std::string& text) { return group_from_source(parse_group_file(text)); }

inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir())) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// Brute-force closure of permutations, as sorted image lists.
inline std::size_t closure_size(const std::vector<std::vector<unsigned>>& gens) {
  std::vector<std::vector<unsigned>> seen;
  std::vector<unsigned> id(gens.front().size());
  for (unsigned i = 0; i < id.size(); ++i) id[i] = i;
  seen.push_back(id);
  for (std::size_t at = 0; at < seen.size(); ++at)
    for (const auto& s : gens) {
      std::vector<unsigned> p(id.size());
      for (unsigned i = 0; i < id.size(); ++i) p[i] = s[seen[at][i]];
      if (std::find(seen.begin(), seen.end(), p) == seen.end()) seen.push_back(p);
    }
  return seen.size();
}

}  // namespace wittlab::test
