#pragma once

// The wittlab command line. run() returns the process exit code:
// 0 success, 1 usage or I/O error, 2 parse error, 3 computation error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "wittlab/cocycle.hpp"
#include "wittlab/dump.hpp"
#include "wittlab/isomorphism.hpp"
#include "wittlab/report.hpp"
#include "wittlab/screen.hpp"

namespace wittlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitComputation = 3;

struct LoadedGroup {
  FiniteGroup group;
  std::optional<GroupSource> source;   // absent for dumps
  std::vector<std::string> word_names;  // generator names usable in --u
};

inline LoadedGroup load(const std::string& path, std::size_t max_cosets) {
  LoadedGroup out;
  const std::string text = read_text_file(path);
  if (looks_like_dump(text)) {
    out.group = read_group_dump(text, path);
  } else {
    out.source = parse_group_file(text, path);
    out.group = group_from_source(*out.source, max_cosets);
  }
  if (out.group.name().empty()) out.group = out.group.renamed(std::filesystem::path(path).stem().string());
  if (out.source && std::holds_alternative<Presentation>(*out.source)) {
    out.word_names = std::get<Presentation>(*out.source).generators;
  } else {
    for (std::size_t i = 0; i < out.group.generators().size(); ++i) out.word_names.push_back("g" + std::to_string(i + 1));
  }
  return out;
}

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline std::string ik_text(const IzumiKosaki& ik, const std::optional<PairVerdict>& v, bool isomorphic) {
  std::ostringstream o;
  o << "G3 = Q x| A, A = Z4 x Z4, Q = Z2 x Z2, order " << ik.g3.order() << "\n";
  o << "cocycle check: " << (ik.check.ok ? "ok" : "FAILED");
  if (!ik.check.ok) {
    o << " (" << ik.check.reason;
    if (ik.check.witness) {
      const auto& w = *ik.check.witness;
      o << " at p, q, r = " << w[0] << ", " << w[1] << ", " << w[2] << " in Q";
    }
    o << ")";
  }
  o << "\n";
  if (!ik.g3b) {
    o << "G3_b not constructed: b is not a 2-cocycle for this action\n";
    return o.str();
  }
  o << "G3_b order " << ik.g3b->order() << ", isomorphic to G3: " << (isomorphic ? "yes" : "no") << "\n";
  if (v) o << verdict_text(*v);
  return o.str();
}

inline Json ik_json(const IzumiKosaki& ik, const std::optional<PairVerdict>& v, bool isomorphic) {
  Json j;
  j["order"] = ik.g3.order();
  Json check{{"ok", ik.check.ok}};
  if (!ik.check.ok) {
    check["reason"] = ik.check.reason;
    if (ik.check.witness) check["witness"] = *ik.check.witness;
  }
  j["cocycle"] = check;
  j["deformed_order"] = ik.g3b ? Json(ik.g3b->order()) : Json(nullptr);
  j["isomorphic"] = ik.g3b ? Json(isomorphic) : Json(nullptr);
  j["comparison"] = v ? verdict_json(*v) : Json(nullptr);
  return j;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write " + path.string());
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt rings, character tables and isocategoricity screening for finite groups", "wittlab"};
  app.require_subcommand(1);
  std::size_t max_cosets = kDefaultMaxCosets;
  app.add_option("--max-cosets", max_cosets, "coset table limit for presentations")->check(CLI::PositiveNumber);

  std::string file, file2, dir, vec_id, u_word, emit_dir;
  bool json = false, modp = false, source = false;
  std::optional<std::size_t> order_filter;
  unsigned jobs = 1;

  auto* parse = app.add_subcommand("parse", "load a group and print its canonical dump");
  parse->add_option("FILE", file)->required();
  parse->add_flag("--source", source, "print the normalized source instead of the dump");

  auto* chartab = app.add_subcommand("chartab", "character table, FS indicators and duals");
  chartab->add_option("FILE", file)->required();
  chartab->add_flag("--modp", modp, "print raw values in F_p");
  chartab->add_flag("--json", json);

  auto* witt = app.add_subcommand("witt", "Witt ring of Rep(G), Rep(G,u) or a Vec_Z2 fixture");
  auto* witt_file = witt->add_option("FILE", file);
  auto* witt_vec = witt->add_option("--vec-z2", vec_id, "fixture b0, b1, bi or b-i");
  witt_file->excludes(witt_vec);
  witt->add_option("--u", u_word, "central involution as a word in the generators")->excludes(witt_vec);
  witt->add_flag("--json", json);

  auto* dbl = app.add_subcommand("double", "Witt group of the Drinfeld double of an abelian group");
  dbl->add_option("FILE", file)->required();
  dbl->add_flag("--json", json);

  auto* compare = app.add_subcommand("compare", "isocategoricity verdict for two groups");
  compare->add_option("FILE1", file)->required();
  compare->add_option("FILE2", file2)->required();
  compare->add_flag("--json", json);

  auto* screen = app.add_subcommand("screen", "rigidity screen and pairwise verdicts for a directory");
  screen->add_option("DIR", dir)->required();
  screen->add_option("--order", order_filter, "only groups of this order");
  screen->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  screen->add_flag("--json", json);

  auto* ik = app.add_subcommand("ik", "order-64 Izumi-Kosaki pair");
  ik->add_option("--emit", emit_dir, "write the groups as dumps into DIR");
  ik->add_flag("--json", json);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "wittlab: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (parse->parsed()) {
      auto g = load(file, max_cosets);
      if (source && g.source) out << format_group_source(*g.source);
      else out << dump_group(g.group);
    } else if (chartab->parsed()) {
      auto g = load(file, max_cosets);
      auto t = character_table(g.group);
      if (json) print_json(out, chartab_json(g.group, t, modp));
      else out << chartab_text(g.group, t, modp);
    } else if (witt->parsed()) {
      FusionData fd;
      std::string name;
      if (!vec_id.empty()) {
        fd = vec_z2_fixture(vec_id);
        name = "Vec_Z2^" + vec_id;
      } else if (!file.empty()) {
        auto g = load(file, max_cosets);
        name = "Rep(" + g.group.name() + ")";
        if (u_word.empty()) {
          fd = rep_g_fusion_data(g.group);
        } else {
          Elem u = evaluate_word(g.group, parse_word(u_word, g.word_names, "--u"));
          fd = rep_g_u_fusion_data(g.group, u);
          name = "Rep(" + g.group.name() + ", " + u_word + ")";
        }
      } else {
        err << "wittlab witt: give FILE or --vec-z2 ID\n";
        return kExitUsage;
      }
      auto w = witt_ring(fd);
      if (json) print_json(out, witt_json(name, fd, w));
      else out << witt_text(name, fd, w);
    } else if (dbl->parsed()) {
      auto g = load(file, max_cosets);
      auto d = double_abelian_witt(g.group);
      if (json) print_json(out, double_json(g.group, d));
      else out << double_text(g.group, d);
    } else if (compare->parsed()) {
      auto g = load(file, max_cosets);
      auto h = load(file2, max_cosets);
      auto v = compare_pair(g.group, h.group);
      if (json) print_json(out, verdict_json(v));
      else out << verdict_text(v);
    } else if (screen->parsed()) {
      if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
      auto r = screen_corpus(dir, order_filter, jobs, max_cosets);
      if (json) print_json(out, corpus_json(r));
      else out << corpus_text(r);
    } else if (ik->parsed()) {
      auto data = izumi_kosaki();
      std::optional<PairVerdict> v;
      bool iso = false;
      if (data.g3b) {
        iso = are_isomorphic(data.g3, *data.g3b).map.has_value();
        v = compare_pair(data.g3, *data.g3b);
      }
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        write_file(std::filesystem::path(emit_dir) / "G3.dump", dump_group(data.g3));
        if (data.g3b) write_file(std::filesystem::path(emit_dir) / "G3_b.dump", dump_group(*data.g3b));
      }
      if (json) print_json(out, ik_json(data, v, iso));
      else out << ik_text(data, v, iso);
      if (!data.g3b) {
        err << "wittlab ik: the cocycle check failed; G3_b was not built\n";
        return kExitComputation;
      }
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    err << "wittlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "wittlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "wittlab: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace wittlab::cli
