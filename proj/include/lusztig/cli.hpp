#pragma once

// Command-line front end. run_cli() is the whole program minus process
// plumbing, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lusztig/lusztig.hpp"
#include "lusztig/report_json.hpp"

namespace lusztig::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsage = 2 };

enum class Format { Text, Json };

struct RunConfig {
  std::string cartan_label;
  std::string cartan_matrix;
  std::string word;
  bool all = false;
  std::optional<std::size_t> limit;
  std::optional<std::uint64_t> seed;
  std::optional<Int> box;
  std::string format;
  std::string which = "V,W,S,T,C,P,X,Ltilde,L";
  std::string weight;
  std::string point;
  std::string vars;
  std::string expr;
  bool list = false;
  bool count = false;
  unsigned threads = 0;

  [[nodiscard]] CartanSpec cartan() const {
    if (cartan_label.empty() == cartan_matrix.empty())
      throw Error("exactly one of --cartan and --cartan-matrix is required");
    return cartan_label.empty() ? parse_cartan_matrix(cartan_matrix) : parse_cartan_label(cartan_label);
  }

  [[nodiscard]] Format output_format(Format fallback) const {
    if (format.empty()) return fallback;
    if (format == "text") return Format::Text;
    if (format == "json") return Format::Json;
    throw Error("unknown format '" + format + "' (expected text or json)");
  }

  [[nodiscard]] ReducedWord reduced_word() const {
    if (word.empty()) throw Error("--word is required");
    return ReducedWord(cartan(), parse_word(word));
  }

  /// Words selected by --word or --all [--limit] [--seed], in lexicographic order.
  [[nodiscard]] std::vector<Letters> selected_words() const {
    if (!word.empty() == all) throw Error("exactly one of --word and --all is required");
    const CartanSpec c = cartan();
    if (!word.empty()) return {ReducedWord(c, parse_word(word)).letters()};
    if (seed) {
      if (!limit) throw Error("--seed samples words and needs --limit");
      return sample_reduced_words(c, *limit, *seed);
    }
    return enumerate_reduced_words(c, limit);
  }
};

namespace detail {

inline std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline IntMatrix named_matrix(const ReducedWord& word, const std::string& name) {
  if (name == "V") return matrix_V(word);
  if (name == "W") return matrix_W(word);
  if (name == "S") return matrix_S(word);
  if (name == "T") return matrix_T(word);
  if (name == "C") return matrix_C(word);
  if (name == "P") return matrix_P(word);
  if (name == "X") return matrix_X(word);
  if (name == "Ltilde") return matrix_Ltilde(word);
  if (name == "L") return matrix_L(word);
  throw Error("unknown matrix '" + name + "' (expected one of V,W,S,T,C,P,X,Ltilde,L)");
}

inline std::string verdict(bool inside) { return inside ? "inside" : "outside"; }

}  // namespace detail

inline int cmd_matrices(const RunConfig& cfg, std::ostream& out) {
  const ReducedWord word = cfg.reduced_word();
  const auto names = detail::split_names(cfg.which);
  std::vector<std::pair<std::string, IntMatrix>> mats;
  for (const auto& name : names) mats.emplace_back(name, detail::named_matrix(word, name));
  if (cfg.output_format(Format::Text) == Format::Json) {
    ordered_json j;
    j["cartan"] = to_json(word.cartan());
    j["word"] = word.letters();
    ordered_json m = ordered_json::object();
    for (const auto& [name, mat] : mats) m[name] = to_json(mat);
    j["matrices"] = std::move(m);
    out << j.dump() << '\n';
    return kSuccess;
  }
  if (mats.size() == 1) {
    out << format_matrix(mats.front().second);
    return kSuccess;
  }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (i) out << '\n';
    out << mats[i].first << ":\n" << format_matrix(mats[i].second);
  }
  return kSuccess;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const CartanSpec cartan = cfg.cartan();
  const auto words = cfg.selected_words();
  VerifyOptions opts;
  if (cfg.box) {
    if (*cfg.box < 0) throw Error("--box must be >= 0");
    opts.box = BoxSpec::radius(*cfg.box);
  }
  if (cfg.seed) opts.seed = *cfg.seed;
  const auto reports = verify_words(cartan, words, opts, cfg.threads);
  bool ok = true;
  const Format fmt = cfg.output_format(Format::Json);
  std::size_t passed = 0;
  for (const auto& r : reports) {
    ok = ok && r.all_pass();
    passed += r.all_pass() ? 1 : 0;
    if (fmt == Format::Json) {
      out << to_json(r).dump() << '\n';
    } else {
      out << format_word(r.word) << (r.all_pass() ? " PASS" : " FAIL") << '\n';
      for (const auto& [name, c] : r.checks)
        if (!c.pass) out << "  " << name << ": " << c.witness << '\n';
    }
  }
  if (fmt == Format::Text) out << reports.size() << " words, " << passed << " passed\n";
  return ok ? kSuccess : kVerificationFailed;
}

inline int cmd_member(const RunConfig& cfg, std::ostream& out) {
  const ReducedWord word = cfg.reduced_word();
  if (cfg.point.empty()) throw Error("--point is required");
  const IntVec c = parse_int_list(cfg.point);
  const bool by_def = in_lusztig_cone_def(word, c);
  const Membership by_l = in_lusztig_cone_L(word, c);
  if (cfg.output_format(Format::Text) == Format::Json) {
    ordered_json j;
    j["word"] = word.letters();
    j["point"] = c;
    j["definition"] = by_def;
    j["L_test"] = by_l.inside;
    j["coefficients"] = by_l.inside ? ordered_json(by_l.coefficients) : ordered_json(nullptr);
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "definition: " << detail::verdict(by_def) << '\n';
  out << "L-test: " << detail::verdict(by_l.inside) << '\n';
  if (by_l.inside) out << "coefficients: " << join(by_l.coefficients) << '\n';
  return kSuccess;
}

inline int cmd_words(const RunConfig& cfg, std::ostream& out) {
  const CartanSpec cartan = cfg.cartan();
  if (cfg.limit && *cfg.limit == 0) {
    if (cfg.count) out << 0 << '\n';
    return kSuccess;
  }
  std::vector<Letters> words;
  if (cfg.seed) {
    if (!cfg.limit) throw Error("--seed samples words and needs --limit");
    words = sample_reduced_words(cartan, *cfg.limit, *cfg.seed);
  } else if (cfg.count && !cfg.limit) {
    std::size_t n = 0;
    ReducedWordEnumerator e(cartan);
    while (e.next()) ++n;
    out << n << '\n';
    return kSuccess;
  } else {
    words = enumerate_reduced_words(cartan, cfg.limit);
  }
  if (cfg.count) {
    out << words.size() << '\n';
    return kSuccess;
  }
  for (const auto& w : words) out << format_word(w) << '\n';
  return kSuccess;
}

inline int cmd_trop(const RunConfig& cfg, bool eval, std::ostream& out) {
  if (cfg.vars.empty()) throw Error("--vars is required");
  if (cfg.expr.empty()) throw Error("--expr is required");
  const auto vars = detail::split_names(cfg.vars);
  const TropicalForm form = tropicalize(parse_expr(cfg.expr, vars));
  if (!eval) {
    out << to_json(form).dump() << '\n';
    return kSuccess;
  }
  if (cfg.point.empty()) throw Error("--point is required");
  out << trop_eval(form, parse_int_list(cfg.point)) << '\n';
  return kSuccess;
}

inline int cmd_string_lowest(const RunConfig& cfg, std::ostream& out) {
  const ReducedWord word = cfg.reduced_word();
  if (cfg.weight.empty()) throw Error("--weight is required");
  const WeightVec lambda(parse_int_list(cfg.weight));
  word.cartan().check_rank(lambda);
  out << join(lowest_string(word, lambda)) << '\n';
  return kSuccess;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lusztig cones: matrices, membership, verification and tropicalization"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_cartan = [&](CLI::App* sub) {
    sub->add_option("--cartan", cfg.cartan_label, "Cartan type label, e.g. A3, B2, G2");
    sub->add_option("--cartan-matrix", cfg.cartan_matrix, "explicit Cartan matrix, rows separated by ';'");
  };
  const auto add_word = [&](CLI::App* sub) {
    sub->add_option("--word", cfg.word, "comma-separated 1-based letters, e.g. 2,3,2,1,2,3");
  };
  const auto add_format = [&](CLI::App* sub) { sub->add_option("--format", cfg.format, "text or json"); };

  auto* matrices = app.add_subcommand("matrices", "print the matrices attached to a reduced word");
  add_cartan(matrices);
  add_word(matrices);
  add_format(matrices);
  matrices->add_option("--which", cfg.which, "comma-separated subset of V,W,S,T,C,P,X,Ltilde,L");

  auto* verify = app.add_subcommand("verify", "check every identity for one word or all words");
  add_cartan(verify);
  add_word(verify);
  add_format(verify);
  verify->add_flag("--all", cfg.all, "enumerate reduced words of w0");
  verify->add_option("--limit", cfg.limit, "stop after this many words");
  verify->add_option("--seed", cfg.seed, "sample --limit random words with this seed");
  verify->add_option("--box", cfg.box, "cone-equality box [-r, r+2]^N");
  verify->add_option("--threads", cfg.threads, "worker threads (0: hardware concurrency)");

  auto* member = app.add_subcommand("member", "decide Lusztig cone membership of a point");
  add_cartan(member);
  add_word(member);
  add_format(member);
  member->add_option("--point", cfg.point, "comma-separated integers of length N");

  auto* words = app.add_subcommand("words", "list reduced words of w0 in lexicographic order");
  add_cartan(words);
  words->add_flag("--list", cfg.list, "print the words (default)");
  words->add_flag("--count", cfg.count, "print only the number of words");
  words->add_option("--limit", cfg.limit, "stop after this many words");
  words->add_option("--seed", cfg.seed, "sample --limit random words with this seed");

  auto* trop = app.add_subcommand("trop", "tropicalize a subtraction-free expression");
  trop->require_subcommand(1);
  auto* trop_eval_cmd = trop->add_subcommand("eval", "evaluate the min-plus form at a point");
  auto* trop_form_cmd = trop->add_subcommand("form", "print numerator/denominator supports as JSON");
  for (auto* sub : {trop_eval_cmd, trop_form_cmd}) {
    sub->add_option("--vars", cfg.vars, "comma-separated variable names");
    sub->add_option("--expr", cfg.expr, "expression using + * / ^ and parentheses");
  }
  trop_eval_cmd->add_option("--point", cfg.point, "comma-separated integers");

  auto* lowest = app.add_subcommand("string-lowest", "string of the lowest weight vector");
  add_cartan(lowest);
  add_word(lowest);
  lowest->add_option("--weight", cfg.weight, "dominant weight in fundamental-weight coordinates");

  std::vector<const char*> argv;
  argv.push_back("lusztig");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*matrices) return cmd_matrices(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*member) return cmd_member(cfg, out);
    if (*words) return cmd_words(cfg, out);
    if (*trop_eval_cmd) return cmd_trop(cfg, true, out);
    if (*trop_form_cmd) return cmd_trop(cfg, false, out);
    if (*lowest) return cmd_string_lowest(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lusztig::cli
