// Command-line front end: exact computations in the split Grothendieck
// rings of type A2 Soergel-style bimodule categories, the presented
// algebra, ungraded characters, the Hilbert-series oracle, and the finite
// B2/A3 verifications.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "sbim/characters.hpp"
#include "sbim/explorer.hpp"
#include "sbim/grotring.hpp"
#include "sbim/hilbert.hpp"
#include "sbim/presented.hpp"
#include "sbim/textio.hpp"
#include "sbim/verify.hpp"

using namespace sbim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string group = "a2";
  std::string variant = "plain";
  std::string format = "text";
  int maxdeg = -1; // -1: per-group default
  int window = 6;
  int maxlen = 4;
  long long budget = 10000;
  unsigned seed = 20260810;
};

Variant variant_of(const Options& o) {
  if (o.variant == "plain") return Variant::Plain;
  if (o.variant == "ext" || o.variant == "extended") return Variant::Extended;
  throw CLI::ValidationError("--variant must be plain or ext");
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

int finish_verification(bool ok, const Json& witness) {
  if (ok) return kExitOk;
  std::cout << witness.dump() << "\n";
  return kExitVerificationFailed;
}

int cmd_grot_mul(const Options& opt, const std::string& expr) {
  GrotRing ring(variant_of(opt));
  RingElement x = parse_ring_expr(ring, expr);
  if (opt.format == "json")
    std::cout << Json{{"value", ring_json(ring.group(), x)}}.dump(2) << "\n";
  else
    std::cout << ring_str(ring.group(), x) << "\n";
  return kExitOk;
}

int cmd_grot_table(const Options& opt) {
  GrotRing ring(variant_of(opt));
  const auto& st = ring.structure_constants();
  const Group& G = ring.group();
  const int n = st.n;
  auto set_name = [&](int i) { return G.set_str(st.basis[static_cast<std::size_t>(i)]); };

  if (opt.format == "csv") {
    std::cout << "A,B,C,coeff\n";
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          std::cout << csv_quote(set_name(a)) << "," << csv_quote(set_name(b)) << ","
                    << csv_quote(set_name(c)) << "," << st.at(a, b, c).str() << "\n";
    return kExitOk;
  }
  if (opt.format == "json") {
    Json entries = Json::array();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!st.at(a, b, c).is_zero())
            entries.push_back(Json{{"A", set_name(a)},
                                   {"B", set_name(b)},
                                   {"C", set_name(c)},
                                   {"coeff", laurent_json(st.at(a, b, c))}});
    std::cout << Json{{"variant", opt.variant}, {"n", n}, {"entries", entries}}.dump(2) << "\n";
    return kExitOk;
  }
  if (opt.format == "latex") {
    std::cout << "\\begin{longtable}{lll}\n";
    std::cout << "$[R(A)]$ & $[R(B)]$ & $[R(A)]\\,[R(B)]$ \\\\ \\hline\n";
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        RingElement p = ring.product(RingElement::basis(st.basis[static_cast<std::size_t>(a)]),
                                     RingElement::basis(st.basis[static_cast<std::size_t>(b)]));
        std::cout << "$" << set_name(a) << "$ & $" << set_name(b) << "$ & $"
                  << ring_str(G, p) << "$ \\\\\n";
      }
    std::cout << "\\end{longtable}\n";
    return kExitOk;
  }
  // text
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      RingElement p = ring.product(RingElement::basis(st.basis[static_cast<std::size_t>(a)]),
                                   RingElement::basis(st.basis[static_cast<std::size_t>(b)]));
      std::cout << "R" << set_name(a) << " * R" << set_name(b) << " = " << ring_str(G, p) << "\n";
    }
  return kExitOk;
}

int cmd_grot_verify(const Options& opt) {
  GrotRing ring(variant_of(opt));
  RelationReport rep = ring.verify_relations();
  if (opt.format == "json") {
    std::cout << relation_report_json(ring.group(), rep).dump(2) << "\n";
    return rep.all_ok() ? kExitOk : kExitVerificationFailed;
  }
  for (const auto& c : rep.checks)
    std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << "\n";
  Json witness = Json::array();
  for (const auto& c : rep.checks)
    if (!c.ok)
      witness.push_back(Json{{"name", c.name},
                             {"lhs", ring_str(ring.group(), c.lhs)},
                             {"rhs", ring_str(ring.group(), c.rhs)}});
  return finish_verification(rep.all_ok(), Json{{"failed_relations", witness}});
}

int cmd_alg_normalize(const Options& opt, const std::string& word) {
  AlgebraElement a = normalize(parse_cword(word));
  if (opt.format == "json")
    std::cout << Json{{"value", algebra_json(a)}}.dump(2) << "\n";
  else
    std::cout << algebra_str(a) << "\n";
  return kExitOk;
}

int cmd_alg_verify_iso(const Options& opt, int maxlen) {
  GrotRing ring(Variant::Plain);
  IsoReport rep = verify_iso(ring, maxlen);
  if (opt.format == "json") {
    std::cout << iso_report_json(rep).dump(2) << "\n";
    return rep.ok() ? kExitOk : kExitVerificationFailed;
  }
  std::cout << "determinant: " << rep.det.str() << (rep.det_is_unit ? " (unit)" : " (NOT a unit)")
            << "\n";
  std::cout << "words checked (length <= " << maxlen << "): " << rep.words_checked << " -> "
            << (rep.words_ok ? "all agree" : "disagreement") << "\n";
  std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return finish_verification(rep.ok(), iso_report_json(rep));
}

int cmd_char_word(const Options& opt, const std::string& expr) {
  const Group G = Group::from_selector(opt.group);
  Character c = uch_of_word(G, parse_gen_word(G, expr));
  if (opt.format == "json")
    std::cout << character_json(G, c).dump(2) << "\n";
  else
    std::cout << character_str(G, c) << "\n";
  return kExitOk;
}

int cmd_hilbert(const Options& opt, const std::string& set_text) {
  const Group G = Group::from_selector(opt.group);
  HilbertOracle oracle(G);
  const Subset A = parse_subset(G, set_text);
  if (A == 0) throw ParseError("empty set", 0);
  const int D = opt.maxdeg >= 0 ? opt.maxdeg : default_max_degree(G);
  std::vector<std::pair<Subset, int>> keys;
  for (int k = 0; k <= D; ++k) keys.emplace_back(A, k);
  oracle.prefill(keys, threads_from_env());

  if (opt.format == "csv") {
    std::cout << "set,k,dim\n";
    for (int k = 0; k <= D; ++k)
      std::cout << csv_quote(G.set_str(A)) << "," << k << "," << oracle.hilbert_function(A, k)
                << "\n";
    return kExitOk;
  }
  if (opt.format == "json") {
    Json dims = Json::array();
    for (int k = 0; k <= D; ++k) dims.push_back(oracle.hilbert_function(A, k));
    std::cout << Json{{"group", opt.group}, {"set", G.set_str(A)}, {"dims", dims}}.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "Hilbert function of R(" << G.set_str(A) << ") over " << opt.group
            << " (internal degree 2k):\n";
  for (int k = 0; k <= D; ++k)
    std::cout << "  k=" << k << "  dim=" << oracle.hilbert_function(A, k) << "\n";
  return kExitOk;
}

int cmd_explore_b2(const Options& opt) {
  const int D = opt.maxdeg >= 0 ? opt.maxdeg : 10;
  auto rep = b2_counterexample(D, opt.window);
  if (opt.format == "json") {
    std::cout << b2_report_json(rep).dump(2) << "\n";
    return rep.ok() ? kExitOk : kExitVerificationFailed;
  }
  const Group G = Group::b2();
  std::cout << "uch(B_tst B_s B_t) = " << character_str(G, rep.uch_b) << "\n";
  std::cout << "full support, multiplicity one: " << (rep.support_ok ? "yes" : "NO") << "\n";
  std::cout << "invariant under every left twist: " << (rep.twist_invariant ? "yes" : "NO") << "\n";
  std::cout << "B_s B_t = v^2 R{e,s,t,s*t}: " << (rep.first_step_class_ok ? "yes" : "NO") << "\n";
  std::cout << "decomposition rule inapplicable at first step: "
            << (rep.lemma_inapplicable ? "yes" : "NO") << "\n";
  std::cout << "graded dims differ from every shift v^-n, |n| <= " << rep.cmp.window << ": "
            << (rep.graded_mismatch ? "yes" : "NO") << "\n";
  for (const auto& s : rep.cmp.shifts)
    if (!s.matches)
      std::cout << "  n=" << s.n << ": first mismatch at internal degree " << s.witness_degree
                << " (" << s.lhs << " vs " << s.rhs << ")\n";
  std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return finish_verification(rep.ok(), b2_report_json(rep));
}

int cmd_explore_a3(const Options& opt) {
  auto rep = a3_checks();
  if (opt.format == "json") {
    std::cout << a3_report_json(rep).dump(2) << "\n";
    return rep.ok() ? kExitOk : kExitVerificationFailed;
  }
  const Group G = Group::a3();
  std::cout << "uch(B_t B_u B_t)   = " << character_str(G, rep.uch_t_u_t) << "\n";
  std::cout << "uch(B_t B_sts B_t) = " << character_str(G, rep.uch_t_sts_t) << "\n";
  std::cout << "characters distinguish the two products (" << kCharacterAssumptionNote
            << "): " << (rep.distinguishes ? "yes" : "NO") << "\n";
  std::cout << "uch(B_t B_u B_t) = uch(B_t B_tut B_t): " << (rep.eq3_compatible ? "yes" : "NO")
            << "\n";
  std::cout << "uch(B_s R_t B_u) matches the four-subquotient filtration: "
            << (rep.filtration_example_ok ? "yes" : "NO") << "\n";
  for (const auto& c : rep.wtilde)
    std::cout << "wtilde = " << G.name(c.wtilde) << ": reflection-pair shape excluded: "
              << (c.excluded ? "yes" : "NO") << "\n";
  std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return finish_verification(rep.ok(), a3_report_json(rep));
}

int cmd_explore_remark(const Options& opt) {
  GrotRing ext(Variant::Extended);
  auto rep = remark_comb_check(ext, opt.maxlen, opt.window);
  if (opt.format == "json") {
    std::cout << remark_report_json(ext.group(), rep).dump(2) << "\n";
    return rep.ok() ? kExitOk : kExitVerificationFailed;
  }
  const Group& G = ext.group();
  std::cout << "search bounds: word length <= " << rep.max_len << ", |shift| <= " << rep.window
            << "\n";
  for (const auto& e : rep.entries) {
    std::cout << "R" << G.set_str(e.target) << ": ";
    if (!e.found) {
      std::cout << "NO WITNESS\n";
      continue;
    }
    std::cout << "v^" << e.shift << " * Rw:" << G.name(e.w);
    for (int i : e.simple_indices) std::cout << " * B:" << G.labels()[static_cast<std::size_t>(i)];
    std::cout << " * Rw:" << G.name(e.w2)
              << (e.strong ? "  (isomorphic to a shift)" : "  (appears as a summand)") << "\n";
  }
  std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return finish_verification(rep.ok(), remark_report_json(G, rep));
}

int cmd_explore_closure(const Options& opt, const std::string& generators) {
  const Group G = Group::from_selector(opt.group);
  std::vector<Elem> gens;
  std::stringstream ss(generators);
  std::string item;
  while (std::getline(ss, item, ',')) {
    GenWord w = parse_gen_word(G, item);
    if (w.size() != 1 || w[0].kind != GenFactor::Kind::B)
      throw ParseError("closure generators must each be a single B:<reflection>", 0);
    gens.push_back(w[0].g);
  }
  if (gens.empty()) throw ParseError("no generators given", 0);
  auto rep = closure_explore(G, gens, opt.budget);
  if (opt.format == "json") {
    std::cout << closure_report_json(G, rep).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "group " << rep.group << ", budget " << rep.budget << ", steps " << rep.steps
            << (rep.budget_exhausted ? " (budget exhausted)" : " (closed)") << "\n";
  std::cout << "reached " << rep.reached.size() << " classes:\n";
  for (const auto& [A, word] : rep.reached) {
    std::cout << "  R" << G.set_str(A);
    if (!word.empty()) {
      std::cout << "  via ";
      for (std::size_t i = 0; i < word.size(); ++i)
        std::cout << (i ? " * " : "") << "B:" << G.name(word[i]);
    }
    std::cout << "\n";
  }
  std::cout << "opaque products: " << rep.opaque_words.size() << "\n";
  for (const auto& word : rep.opaque_words) {
    std::cout << "  ";
    for (std::size_t i = 0; i < word.size(); ++i)
      std::cout << (i ? " * " : "") << "B:" << G.name(word[i]);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_verify_all(const Options& opt) {
  AcceptanceOptions a;
  a.group = opt.group;
  a.seed = opt.seed;
  a.threads = threads_from_env();
  auto results = run_acceptance(a);
  bool all = true;
  for (const auto& r : results) {
    std::ostringstream line;
    line << "[" << (r.number < 10 ? " " : "") << r.number << "] "
         << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    std::printf("%s (%.2fs < %.0fs)%s%s\n", line.str().c_str(), r.seconds, r.limit_seconds,
                r.detail.empty() ? "" : "  -- ", r.detail.c_str());
    all = all && r.pass;
  }
  if (all) {
    std::cout << "all criteria passed\n";
    return kExitOk;
  }
  Json witness = Json::array();
  for (const auto& r : results)
    if (!r.pass)
      witness.push_back(Json{{"criterion", r.number}, {"name", r.name}, {"detail", r.detail}});
  return finish_verification(false, Json{{"failed_criteria", witness}});
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Grothendieck-ring computations for generalized Soergel bimodule categories"};
  app.require_subcommand(1);
  Options opt;

  std::string grot_expr, alg_word, char_expr, hilbert_set = "W", closure_gens;
  int iso_maxlen = 8;

  auto add_common = [&](CLI::App* cmd, bool with_group, bool with_variant) {
    cmd->add_option("--format", opt.format, "text|json|csv|latex")->capture_default_str();
    if (with_group)
      cmd->add_option("--group", opt.group, "a2|b2|i2:<m>|a3")->capture_default_str();
    if (with_variant)
      cmd->add_option("--variant", opt.variant, "plain|ext")->capture_default_str();
  };

  auto* grot = app.add_subcommand("grot", "split Grothendieck ring of type A2");
  grot->require_subcommand(1);
  auto* grot_mul = grot->add_subcommand("mul", "evaluate a ring expression");
  grot_mul->add_option("expr", grot_expr, "e.g. \"B:t1 * B:t3\"")->required();
  add_common(grot_mul, false, true);
  auto* grot_table = grot->add_subcommand("table", "full structure-constant table");
  add_common(grot_table, false, true);
  auto* grot_verify = grot->add_subcommand("verify", "check the defining relations");
  add_common(grot_verify, false, true);

  auto* alg = app.add_subcommand("alg", "presented algebra on C1, C2, C3");
  alg->require_subcommand(1);
  auto* alg_norm = alg->add_subcommand("normalize", "canonical expansion of a word");
  alg_norm->add_option("word", alg_word, "e.g. \"C1*C2*C1*C3\"")->required();
  add_common(alg_norm, false, false);
  auto* alg_iso = alg->add_subcommand("verify-iso", "change-of-basis determinant and word sweep");
  alg_iso->add_option("--maxlen", iso_maxlen, "word length bound")->capture_default_str();
  add_common(alg_iso, false, false);

  auto* chr = app.add_subcommand("char", "ungraded characters in Z[W]");
  chr->require_subcommand(1);
  auto* chr_word = chr->add_subcommand("word", "character of a generator word");
  chr_word->add_option("expr", char_expr, "e.g. \"B:tst * B:s * B:t\"")->required();
  add_common(chr_word, true, false);

  auto* hil = app.add_subcommand("hilbert", "exact Hilbert function of R(A)");
  hil->add_option("--set", hilbert_set, "W or {e,s1,...}")->capture_default_str();
  hil->add_option("--maxdeg", opt.maxdeg, "polynomial degree bound (default per group)");
  add_common(hil, true, false);

  auto* exp = app.add_subcommand("explore", "finite verifications and searches");
  exp->require_subcommand(1);
  auto* exp_b2 = exp->add_subcommand("b2-counterexample", "the B2 verification");
  exp_b2->add_option("--maxdeg", opt.maxdeg, "polynomial degree bound");
  exp_b2->add_option("--window", opt.window, "shift window")->capture_default_str();
  add_common(exp_b2, false, false);
  auto* exp_a3 = exp->add_subcommand("a3-checks", "the A3 verifications");
  add_common(exp_a3, false, false);
  auto* exp_rem = exp->add_subcommand("remark-comb", "normal-form witnesses for all 25 classes");
  exp_rem->add_option("--maxlen", opt.maxlen, "max simple-word length")->capture_default_str();
  exp_rem->add_option("--window", opt.window, "shift window")->capture_default_str();
  add_common(exp_rem, false, false);
  auto* exp_clo = exp->add_subcommand("closure", "BFS closure under B-generators");
  exp_clo->add_option("--generators", closure_gens, "e.g. \"B:sts,B:t,B:u\"")->required();
  exp_clo->add_option("--budget", opt.budget, "step budget")->capture_default_str();
  add_common(exp_clo, true, false);

  auto* vall = app.add_subcommand("verify-all", "run the full verification battery");
  vall->add_option("--group", opt.group, "all|a2|b2|a3")->default_val("all");
  vall->add_option("--seed", opt.seed, "seed for sampled checks")->capture_default_str();

  std::string input_for_errors;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (grot_mul->parsed()) return cmd_grot_mul(opt, input_for_errors = grot_expr);
    if (grot_table->parsed()) return cmd_grot_table(opt);
    if (grot_verify->parsed()) return cmd_grot_verify(opt);
    if (alg_norm->parsed()) return cmd_alg_normalize(opt, input_for_errors = alg_word);
    if (alg_iso->parsed()) return cmd_alg_verify_iso(opt, iso_maxlen);
    if (chr_word->parsed()) return cmd_char_word(opt, input_for_errors = char_expr);
    if (hil->parsed()) return cmd_hilbert(opt, input_for_errors = hilbert_set);
    if (exp_b2->parsed()) return cmd_explore_b2(opt);
    if (exp_a3->parsed()) return cmd_explore_a3(opt);
    if (exp_rem->parsed()) return cmd_explore_remark(opt);
    if (exp_clo->parsed()) return cmd_explore_closure(opt, input_for_errors = closure_gens);
    if (vall->parsed()) return cmd_verify_all(opt);
  } catch (const ParseError& e) {
    std::cerr << annotate_parse_error(input_for_errors, e) << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
