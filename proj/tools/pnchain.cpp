// pnchain: prefix normal words, word chains and their generators.
//
// Subcommands mirror the library one to one; every JSON output carries the
// tool name, version and an echo of the input.  Exit codes: 0 = the queried
// property holds / output produced, 1 = valid input but the property fails,
// 2 = malformed input or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pnchain/pnchain.hpp"

using nlohmann::json;

namespace {

json envelope(const std::string& command) {
  return json{{"tool", "pnchain"},
              {"version", std::string(pnchain::kVersion)},
              {"command", command}};
}

json profile_json(const pnchain::OnesProfile& prof) {
  // tables for k = 1..n; k = 0 is always 0
  json p = json::array(), f = json::array();
  for (std::size_t k = 1; k < prof.prefix_ones.size(); ++k) {
    p.push_back(prof.prefix_ones[k]);
    f.push_back(prof.max_factor_ones[k]);
  }
  return json{{"prefix_ones", p}, {"max_factor_ones", f}};
}

std::string format_ratio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", r);
  return buf;
}

int run_check_word(const std::string& input) {
  const pnchain::BinaryWord w = pnchain::BinaryWord::parse(input);
  const bool pn = pnchain::is_prefix_normal(w);
  json out = envelope("check-word");
  out["input"] = input;
  out["word"] = w.str();
  out["length"] = w.size();
  out["ones"] = w.ones_count();
  out["zeros"] = w.zeros_count();
  out["pn"] = pn;
  out["palindrome"] = pnchain::is_palindrome(w);
  out["palindrome_rule"] = pnchain::palindrome_rule(w);
  out.update(profile_json(pnchain::ones_profile(w)));
  if (pn) {
    out["extension_critical"] = pnchain::is_extension_critical(w);
    json parents = json::array();
    for (const auto& p : pnchain::pn_parents(w)) parents.push_back(p.str());
    out["pn_parents"] = parents;
  } else {
    out["extension_critical"] = nullptr;
    out["pn_parents"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return pn ? 0 : 1;
}

int run_check_generator(const std::string& input) {
  const pnchain::Generator g = pnchain::Generator::parse(input);
  const auto nc = pnchain::necessary_conditions(g);
  const auto failure = pnchain::first_non_pn_chain_word(g);
  json out = envelope("check-generator");
  out["input"] = input;
  out["generator"] = g.values();
  out["n"] = g.size();
  out["necessary_conditions"] = json{{"last_is_one", nc.last_is_one},
                                     {"first_flip_late_enough", nc.first_flip_late_enough}};
  out["pn_generator"] = !failure.has_value();
  out["inversions"] = pnchain::inversions(g);
  out["parity"] = pnchain::parity(g) == pnchain::Parity::even ? "even" : "odd";
  if (failure) {
    out["first_failing_index"] = failure->index;
    out["first_failing_word"] = failure->word.str();
  } else {
    out["first_failing_index"] = nullptr;
    out["first_failing_word"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return failure ? 1 : 0;
}

int run_chain(const std::string& input, bool indexed, bool as_json) {
  const pnchain::Generator g = pnchain::Generator::parse(input);
  const pnchain::WordChain c = pnchain::chain(g);
  if (as_json) {
    json out = envelope("chain");
    out["input"] = input;
    out["generator"] = g.values();
    out["n"] = g.size();
    json words = json::array();
    for (const auto& w : c.words) words.push_back(w.str());
    out["words"] = words;
    out["pn_generator"] = pnchain::is_pn_generator(g);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    if (indexed) std::cout << (i + 1) << ": ";
    std::cout << c.words[i].str() << "\n";
  }
  return 0;
}

int run_swap_test(const std::string& input, int j, bool no_filter) {
  const pnchain::Generator g = pnchain::Generator::parse(input);
  const auto filter =
      no_filter ? pnchain::WindowFilter::none : pnchain::WindowFilter::ones_at_ends;
  const bool keeps = pnchain::swap_keeps_pn(g, j, filter);  // throws on contract violations
  const auto ctx = pnchain::make_swap_context(g, j);
  const bool descending = ctx.first_flip > ctx.second_flip;

  json out = envelope("swap-test");
  out["input"] = input + " " + std::to_string(j);
  out["generator"] = g.values();
  out["j"] = j;
  out["case"] = descending ? "descending" : "ascending";
  out["first_flip"] = ctx.first_flip;
  out["second_flip"] = ctx.second_flip;
  out["pivot"] = ctx.pivot.str();
  out["swapped"] = pnchain::swap_adjacent(g, j).values();
  out["keeps_pn"] = keeps;
  out["witness"] = nullptr;
  if (descending) {
    if (const auto win = pnchain::find_violating_factor(ctx, filter))
      out["witness"] = json{{"start", win->start}, {"length", win->length}};
  }
  std::cout << out.dump(2) << "\n";
  return keeps ? 0 : 1;
}

int run_extension_check(std::vector<std::string> inputs) {
  if (inputs.empty()) {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty()) inputs.push_back(line);
    }
  }
  // parse everything first so malformed input fails before partial output
  std::vector<pnchain::BinaryWord> words;
  words.reserve(inputs.size());
  for (const std::string& s : inputs) words.push_back(pnchain::BinaryWord::parse(s));
  bool all_pn = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const bool pn = pnchain::is_prefix_normal(words[i]);
    all_pn = all_pn && pn;
    json out = envelope("extension-check");
    out["word"] = inputs[i];
    out["pn"] = pn;
    out["extension_critical"] = pn ? json(pnchain::is_extension_critical(words[i])) : json();
    out["palindrome_rule"] = pnchain::palindrome_rule(words[i]);
    std::cout << out.dump() << "\n";
  }
  return all_pn ? 0 : 1;
}

int run_enumerate(int n, bool generators, bool full_scan, const std::string& cache_dir,
                  int word_cap, int generator_cap, int workers, bool as_json) {
  std::vector<std::string> items;
  if (generators) {
    pnchain::GeneratorSet set;
    if (!cache_dir.empty()) {
      pnchain::LevelCache cache{cache_dir};
      set = pnchain::generators_by_extension_cached(n, cache, generator_cap, full_scan);
    } else {
      set = pnchain::generators_by_extension(n, generator_cap, full_scan);
    }
    for (const auto& g : set.generators) items.push_back(g.str());
  } else {
    pnchain::PnWordSet set;
    if (!cache_dir.empty()) {
      pnchain::LevelCache cache{cache_dir};
      set = pnchain::enumerate_pn_words_cached(n, cache, word_cap, workers);
    } else {
      set = pnchain::enumerate_pn_words(n, word_cap, workers);
    }
    for (const auto& w : set.words) items.push_back(w.str());
  }
  if (as_json) {
    json out = envelope("enumerate");
    out["n"] = n;
    out["kind"] = generators ? "generators" : "words";
    out["count"] = items.size();
    out["items"] = items;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& s : items) std::cout << s << "\n";
  }
  return 0;
}

int run_count(int n_max, int word_cap, int workers, bool as_json) {
  const auto rows = pnchain::pn_count_sequence(n_max, word_cap, workers);
  if (as_json) {
    json out = envelope("count");
    out["n_max"] = n_max;
    json jrows = json::array();
    for (const auto& row : rows)
      jrows.push_back(json{{"n", row.n},
                           {"pn_count", row.pn_count},
                           {"binary_count", row.binary_count},
                           {"ratio", row.ratio}});
    out["rows"] = jrows;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n,pn_count,binary_count,ratio\n";
    for (const auto& row : rows)
      std::cout << row.n << "," << row.pn_count << "," << row.binary_count << ","
                << format_ratio(row.ratio) << "\n";
  }
  return 0;
}

int run_graph(int n, const std::string& overlay_gen, const std::string& out_file, int word_cap,
              int workers, bool as_json) {
  const pnchain::PnGraph graph = pnchain::build_pn_graph(n, word_cap, workers);
  std::optional<pnchain::ChainOverlay> overlay;
  if (!overlay_gen.empty())
    overlay = pnchain::chain_overlay(graph, pnchain::Generator::parse(overlay_gen));

  std::string payload;
  if (as_json) {
    json out = envelope("graph");
    out["n"] = n;
    json nodes = json::array();
    for (const auto& w : graph.nodes) nodes.push_back(w.str());
    out["nodes"] = nodes;
    json edges = json::array();
    for (const auto& [from, to] : graph.edges)
      edges.push_back(json{{"from", graph.nodes[static_cast<std::size_t>(from)].str()},
                           {"to", graph.nodes[static_cast<std::size_t>(to)].str()}});
    out["edges"] = edges;
    if (overlay) {
      json path = json::array();
      for (int idx : overlay->node_indices)
        path.push_back(graph.nodes[static_cast<std::size_t>(idx)].str());
      out["overlay"] = json{{"generator", overlay->generator.values()}, {"path", path}};
    } else {
      out["overlay"] = nullptr;
    }
    payload = out.dump(2) + "\n";
  } else {
    payload = pnchain::dot_string(graph, overlay ? &*overlay : nullptr);
  }
  if (!out_file.empty()) {
    std::ofstream f(out_file, std::ios::trunc);
    if (!f) throw std::invalid_argument("cannot open output file " + out_file);
    f << payload;
    if (!f.flush()) throw std::runtime_error("write failed for " + out_file);
  } else {
    std::cout << payload;
  }
  return 0;
}

int run_claim_audit(int n_max, int generator_cap, bool as_json) {
  const pnchain::ClaimAuditReport report = pnchain::run_claim_audit(n_max, generator_cap);
  bool any_fail = false;
  for (const auto& claim : report.claims)
    any_fail = any_fail || claim.status == pnchain::ClaimStatus::fail;

  if (as_json) {
    json out = envelope("claim-audit");
    out["n_max"] = report.n_max;
    out["generator_n_max"] = report.generator_n_max;
    json claims = json::array();
    for (const auto& claim : report.claims) {
      json c{{"claim", claim.claim},
             {"status", claim.status == pnchain::ClaimStatus::pass   ? "pass"
                        : claim.status == pnchain::ClaimStatus::fail ? "fail"
                                                                     : "observation"},
             {"detail", claim.detail}};
      c["counterexample"] = claim.counterexample ? json(*claim.counterexample) : json();
      claims.push_back(c);
    }
    out["claims"] = claims;
    json windows = json::array();
    for (const auto& row : report.window_counts) {
      json r{{"n", row.n},
             {"max_count", row.max_count},
             {"max_include", row.max_include},
             {"max_exclude", row.max_exclude},
             {"bound", row.bound},
             {"within_bound", row.within_bound}};
      r["stated_pair_count"] = row.stated_pair_count ? json(*row.stated_pair_count) : json();
      windows.push_back(r);
    }
    out["window_counts"] = windows;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "claim-audit: n_max=" << report.n_max
              << " generator_n_max=" << report.generator_n_max << "\n";
    for (const auto& claim : report.claims) {
      std::cout << "[" << pnchain::to_string(claim.status) << "] " << claim.claim << ": "
                << claim.detail << "\n";
      if (claim.counterexample)
        std::cout << "       counterexample: " << *claim.counterexample << "\n";
    }
    for (const auto& row : report.window_counts) {
      std::cout << "[OBSERVATION] window-count n=" << row.n << ": max=" << row.max_count
                << " at (a=" << row.max_include << ",b=" << row.max_exclude << ")";
      if (row.stated_pair_count)
        std::cout << ", stated-pair count=" << *row.stated_pair_count;
      else
        std::cout << ", stated-pair undefined";
      std::cout << ", bound=" << row.bound << ", within=" << (row.within_bound ? "yes" : "no")
                << "\n";
    }
  }
  return any_fail ? 1 : 0;
}

int run_bench(int n, int word_cap, int workers, bool as_json) {
  const pnchain::BenchReport r = pnchain::run_bench(n, word_cap, workers);
  const bool counts_agree = r.ladder_count == r.brute_count;
  if (as_json) {
    json out = envelope("bench");
    out["n"] = r.n;
    out["workers"] = workers;
    out["ladder_candidates"] = r.ladder_candidates;
    out["brute_candidates"] = r.brute_candidates;
    out["ladder_count"] = r.ladder_count;
    out["brute_count"] = r.brute_count;
    out["counts_agree"] = counts_agree;
    out["ladder_step_seconds"] = r.ladder_step_seconds;
    out["ladder_total_seconds"] = r.ladder_total_seconds;
    out["brute_seconds"] = r.brute_seconds;
    out["candidate_ratio"] = r.candidate_ratio();
    out["speedup"] = r.speedup();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "bench: n=" << r.n << " workers=" << workers << "\n";
    std::cout << "ladder: count=" << r.ladder_count << " candidates=" << r.ladder_candidates
              << " step=" << r.ladder_step_seconds << "s total=" << r.ladder_total_seconds
              << "s\n";
    std::cout << "brute:  count=" << r.brute_count << " candidates=" << r.brute_candidates
              << " time=" << r.brute_seconds << "s\n";
    std::cout << "speedup=" << r.speedup() << "x candidate_ratio=" << r.candidate_ratio()
              << (counts_agree ? "" : "  COUNT MISMATCH") << "\n";
  }
  return counts_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prefix normal words, word chains and their generators"};
  app.set_version_flag("--version", std::string("pnchain ") + std::string(pnchain::kVersion));
  app.require_subcommand(1);

  // check-word
  std::string cw_word;
  auto* cmd_check_word = app.add_subcommand("check-word", "analyze one binary word");
  cmd_check_word->add_option("word", cw_word, "binary word, e.g. 110100")->required();

  // check-generator
  std::string cg_gen;
  auto* cmd_check_gen = app.add_subcommand("check-generator", "analyze one generator");
  cmd_check_gen->add_option("generator", cg_gen, "permutation, e.g. 6,5,3,2,4,1")->required();

  // chain
  std::string ch_gen;
  bool ch_indexed = false, ch_json = false;
  auto* cmd_chain = app.add_subcommand("chain", "print the word chain of a generator");
  cmd_chain->add_option("generator", ch_gen, "permutation")->required();
  cmd_chain->add_flag("--indexed", ch_indexed, "prefix each word with its chain index");
  cmd_chain->add_flag("--json", ch_json, "JSON output");

  // swap-test
  std::string st_gen;
  int st_j = 0;
  bool st_no_filter = false;
  auto* cmd_swap = app.add_subcommand("swap-test",
                                      "does swapping adjacent entries j,j+1 keep the "
                                      "generator prefix normal?");
  cmd_swap->add_option("generator", st_gen, "prefix normal generator")->required();
  cmd_swap->add_option("j", st_j, "1-based position of the swap")->required();
  cmd_swap->add_flag("--no-filter", st_no_filter, "scan all candidate windows");

  // extension-check
  std::vector<std::string> ec_words;
  auto* cmd_ext = app.add_subcommand("extension-check",
                                     "extension-critical status per word (args or stdin)");
  cmd_ext->add_option("words", ec_words, "binary words; stdin lines when omitted");

  // enumerate
  int en_n = 0;
  bool en_generators = false, en_full_scan = false, en_json = false;
  std::string en_cache_dir;
  int en_word_cap = pnchain::kDefaultWordCap;
  int en_generator_cap = pnchain::kDefaultGeneratorCap;
  int en_workers = 1;
  auto* cmd_enum = app.add_subcommand("enumerate", "list prefix normal words or generators");
  cmd_enum->add_option("--n", en_n, "length")->required();
  cmd_enum->add_flag("--generators", en_generators, "enumerate generators instead of words");
  cmd_enum->add_flag("--full-scan", en_full_scan,
                     "verification mode: test every insert position");
  cmd_enum->add_option("--cache-dir", en_cache_dir, "level cache directory")
      ->envname("PNCHAIN_CACHE_DIR");
  cmd_enum->add_option("--word-cap", en_word_cap, "max word length");
  cmd_enum->add_option("--generator-cap", en_generator_cap, "max generator length");
  cmd_enum->add_option("--workers", en_workers, "worker threads")->envname("PNCHAIN_WORKERS");
  cmd_enum->add_flag("--json", en_json, "JSON output");

  // count
  int co_n_max = 0;
  int co_word_cap = pnchain::kDefaultWordCap;
  int co_workers = 1;
  bool co_json = false;
  auto* cmd_count = app.add_subcommand("count", "|PN(n)| and density for n = 1..n_max");
  cmd_count->add_option("--n-max", co_n_max, "largest length")->required();
  cmd_count->add_option("--word-cap", co_word_cap, "max word length");
  cmd_count->add_option("--workers", co_workers, "worker threads")->envname("PNCHAIN_WORKERS");
  cmd_count->add_flag("--json", co_json, "JSON instead of CSV");

  // graph
  int gr_n = 0;
  std::string gr_overlay, gr_out;
  int gr_word_cap = pnchain::kDefaultWordCap;
  int gr_workers = 1;
  bool gr_json = false;
  auto* cmd_graph = app.add_subcommand("graph", "single-flip graph over PN(n), DOT or JSON");
  cmd_graph->add_option("--n", gr_n, "word length")->required();
  cmd_graph->add_option("--overlay", gr_overlay, "highlight this generator's chain");
  cmd_graph->add_option("--out", gr_out, "write to file instead of stdout");
  cmd_graph->add_option("--word-cap", gr_word_cap, "max word length");
  cmd_graph->add_option("--workers", gr_workers, "worker threads")->envname("PNCHAIN_WORKERS");
  cmd_graph->add_flag("--json", gr_json, "JSON adjacency output");

  // claim-audit
  int ca_n_max = 0;
  int ca_generator_cap = pnchain::kDefaultGeneratorCap;
  bool ca_json = false;
  auto* cmd_audit = app.add_subcommand("claim-audit",
                                       "re-check the structural claims at desk scale");
  cmd_audit->add_option("--n-max", ca_n_max, "window observations up to this length")
      ->required();
  cmd_audit->add_option("--generator-cap", ca_generator_cap, "generator claims cap");
  cmd_audit->add_flag("--json", ca_json, "JSON output");

  // bench
  int be_n = 0;
  int be_word_cap = pnchain::kDefaultWordCap;
  int be_workers = 1;
  bool be_json = false;
  auto* cmd_bench = app.add_subcommand("bench", "ladder vs 2^n filter at level n");
  cmd_bench->add_option("--n", be_n, "word length")->required();
  cmd_bench->add_option("--word-cap", be_word_cap, "max word length");
  cmd_bench->add_option("--workers", be_workers, "worker threads")->envname("PNCHAIN_WORKERS");
  cmd_bench->add_flag("--json", be_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_check_word)) return run_check_word(cw_word);
    if (app.got_subcommand(cmd_check_gen)) return run_check_generator(cg_gen);
    if (app.got_subcommand(cmd_chain)) return run_chain(ch_gen, ch_indexed, ch_json);
    if (app.got_subcommand(cmd_swap)) return run_swap_test(st_gen, st_j, st_no_filter);
    if (app.got_subcommand(cmd_ext)) return run_extension_check(ec_words);
    if (app.got_subcommand(cmd_enum))
      return run_enumerate(en_n, en_generators, en_full_scan, en_cache_dir, en_word_cap,
                           en_generator_cap, en_workers, en_json);
    if (app.got_subcommand(cmd_count)) return run_count(co_n_max, co_word_cap, co_workers, co_json);
    if (app.got_subcommand(cmd_graph))
      return run_graph(gr_n, gr_overlay, gr_out, gr_word_cap, gr_workers, gr_json);
    if (app.got_subcommand(cmd_audit)) return run_claim_audit(ca_n_max, ca_generator_cap, ca_json);
    if (app.got_subcommand(cmd_bench)) return run_bench(be_n, be_word_cap, be_workers, be_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}
