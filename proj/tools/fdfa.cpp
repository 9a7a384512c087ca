#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fdfa/fdfa.hpp"
#include "fdfa/testing/oracle.hpp"

using namespace fdfa;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2 };

bool g_complete = false;

Dfa load(const std::string& path) {
  auto parsed = read_dfa_file(path, ParseOptions{.complete = g_complete});
  for (auto& w : parsed.warnings) std::cerr << path << ": warning: " << w << "\n";
  return std::move(parsed.dfa);
}

void save(const std::string& path, const Dfa& d) {
  if (path.empty() || path == "-") {
    std::cout << serialize_dfa(d);
  } else {
    write_dfa_file(path, d);
  }
}

std::string join_ids(const std::vector<StateId>& ids) {
  std::string out;
  for (StateId q : ids) {
    if (!out.empty()) out += ' ';
    out += std::to_string(q);
  }
  return out.empty() ? "-" : out;
}

void print_diff(const DiffResult& diff) {
  if (diff.finite()) {
    std::cout << "finite " << diff.words.size() << "\n" << format_word_list(diff.words);
  } else {
    const Lasso& l = *diff.witness;
    std::cout << "infinite\n"
              << "prefix " << format_word(l.prefix) << "\n"
              << "pump " << format_word(l.pump) << "\n"
              << "suffix " << format_word(l.suffix) << "\n";
  }
}

// CLI11 treats "-o1" as "-o" with value "1"; give the two construct outputs
// proper long names before parsing.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a == "-o1") a = "--out1";
    else if (a == "-o2") a = "--out2";
    args.push_back(std::move(a));
  }
  return args;  // CLI11 expects reverse order
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely different DFAs: parts, state classes, f-minimization, isomorphisms"};
  app.require_subcommand(1);
  app.add_flag("--complete", g_complete, "add a rejecting sink for missing transitions");

  std::string in, in2, out, out2, words_file, alphabet, part = "infinite";
  bool trace = false, do_min = false;
  unsigned states = 0, bound = 0;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "validate a DFA and print it canonically");
  check->add_option("dfa", in)->required();

  auto* minimize_cmd = app.add_subcommand("minimize", "minimize a DFA");
  minimize_cmd->add_option("dfa", in)->required();
  minimize_cmd->add_option("-o", out, "output file (default stdout)");

  auto* fmin = app.add_subcommand("fminimize", "greedy f-minimization");
  fmin->add_option("dfa", in)->required();
  fmin->add_option("-o", out, "output file (default stdout)");
  fmin->add_flag("--trace", trace, "print one line per merge");

  auto* parts = app.add_subcommand("parts", "finite and infinite parts");
  parts->add_option("dfa", in)->required();

  auto* classes = app.add_subcommand("classes", "state classes under finite difference");
  classes->add_option("dfa", in)->required();

  auto* diff = app.add_subcommand("diff", "symmetric difference of two DFAs");
  diff->add_option("a", in)->required();
  diff->add_option("b", in2)->required();

  auto* findiff = app.add_subcommand("findiff", "decide finite difference of two DFAs");
  findiff->add_option("a", in)->required();
  findiff->add_option("b", in2)->required();

  auto* iso = app.add_subcommand("iso", "infinite-part or finite-part isomorphism");
  iso->add_option("a", in)->required();
  iso->add_option("b", in2)->required();
  iso->add_option("--part", part)->check(CLI::IsMember({"infinite", "finite"}));

  auto* construct = app.add_subcommand("construct", "pair of DFAs with a given finite difference");
  construct->add_option("--words", words_file)->required();
  construct->add_option("--alphabet", alphabet)->required();
  construct->add_option("--out1", out)->required();
  construct->add_option("--out2", out2)->required();
  construct->add_flag("--minimize", do_min);

  auto* random = app.add_subcommand("random", "seeded random complete reachable DFA");
  random->add_option("--states", states)->required()->check(CLI::Range(1u, 100000u));
  random->add_option("--alphabet", alphabet)->required();
  random->add_option("--seed", seed)->required();
  random->add_option("-o", out);

  auto* oracle = app.add_subcommand("oracle-diff", "brute-force symmetric difference up to a length");
  oracle->group("");
  oracle->add_option("a", in)->required();
  oracle->add_option("b", in2)->required();
  oracle->add_option("--bound", bound)->required();

  try {
    app.parse(normalize_args(argc, argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) {
      Dfa d = load(in);
      std::cout << "ok " << d.num_states() << " states\n" << serialize_dfa(d);
      return kOk;
    }
    if (*minimize_cmd) {
      save(out, minimize(load(in)));
      return kOk;
    }
    if (*fmin) {
      auto result = f_minimize(load(in));
      if (trace) {
        for (const auto& m : result.trace) {
          std::cout << "merge p=" << m.merged << " into q=" << m.target << " class=" << m.state_class
                    << " bound=" << m.words_into_merged << "x" << m.diff_size << "\n";
        }
      }
      save(out, result.dfa);
      return kOk;
    }
    if (*parts) {
      auto p = compute_parts(load(in));
      std::cout << "finite: " << join_ids(p.finite_part()) << "\n"
                << "infinite: " << join_ids(p.infinite_part()) << "\n";
      return kOk;
    }
    if (*classes) {
      auto c = state_class_partition(load(in));
      for (const auto& members : c.classes) {
        std::cout << "class " << members.front() << ": " << join_ids(members) << "\n";
      }
      return kOk;
    }
    if (*diff) {
      auto r = symmetric_difference(load(in), load(in2));
      print_diff(r);
      return r.finite() ? kOk : kNegative;
    }
    if (*findiff) {
      auto v = dfas_finitely_different(load(in), load(in2));
      std::cout << (v.finitely_different ? "finitely-different" : "not-finitely-different") << "\n";
      return v.finitely_different ? kOk : kNegative;
    }
    if (*iso) {
      Dfa a = load(in), b = load(in2);
      auto f = part == "infinite" ? infinite_part_iso(a, b) : finite_part_iso(a, b);
      if (!f) {
        std::cout << "NOT-ISOMORPHIC\n";
        return kNegative;
      }
      for (auto [p, q] : f->pairs) std::cout << p << " -> " << q << "\n";
      return kOk;
    }
    if (*construct) {
      auto pair = construct_pair(read_word_list_file(words_file), alphabet);
      write_dfa_file(out, do_min ? minimize(pair.first) : pair.first);
      write_dfa_file(out2, do_min ? minimize(pair.second) : pair.second);
      std::cout << "states " << pair.first.num_states() << "\n";
      return kOk;
    }
    if (*random) {
      Lcg rng(seed);
      save(out, random_dfa(states, alphabet, rng));
      return kOk;
    }
    if (*oracle) {
      auto words = testing::oracle_diff(load(in), load(in2), bound);
      std::cout << "words " << words.size() << "\n" << format_word_list(words);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
