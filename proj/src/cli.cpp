#include "monader/cli.hpp"

#include <cstdlib>
#include <set>

#include "CLI11.hpp"
#include "monader/automaton.hpp"
#include "monader/derivation.hpp"
#include "monader/json_io.hpp"
#include "monader/oracle.hpp"
#include "monader/parser.hpp"
#include "monader/random.hpp"

namespace monader {

namespace {

struct Common {
  std::string support = "set";
  std::string semiring = "bool";
  std::string expr;
  std::string alphabet;
};

struct Context {
  SupportId id;
  Expr e;
  Alphabet sigma;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void add_common(CLI::App* cmd, Common& c, bool needs_expr) {
  cmd->add_option("--support", c.support, "maybe | set | lincomb | gradcomb")
      ->check(CLI::IsMember({"maybe", "set", "lincomb", "gradcomb"}));
  cmd->add_option("--semiring", c.semiring, "bool | nat | int | rat")
      ->check(CLI::IsMember({"bool", "nat", "int", "rat"}));
  auto* opt = cmd->add_option("--expr", c.expr, "expression");
  if (needs_expr) opt->required();
  cmd->add_option("--alphabet", c.alphabet, "extra symbols, e.g. abc");
}

std::set<Symbol> letters(const std::string& s, const char* what) {
  std::set<Symbol> out;
  for (char ch : s) {
    if (ch < 'a' || ch > 'z') throw UsageError(std::string(what) + " may only contain lowercase letters");
    out.insert(ch);
  }
  return out;
}

Word check_word(const std::string& w) {
  letters(w, "--word");
  return w;
}

SupportId support_of(const Common& c) {
  SupportId id{*support_from_name(c.support), *semiring_from_name(c.semiring)};
  validate(id);
  return id;
}

Context context_of(const Common& c, bool needs_support = true) {
  SupportId id = needs_support ? support_of(c) : SupportId{SupportKind::LinComb, *semiring_from_name(c.semiring)};
  Expr e = parse(c.expr, id.semiring, FnRegistry::builtins(id.semiring));
  return {id, e, Alphabet::infer(e, letters(c.alphabet, "--alphabet"))};
}

OracleOptions oracle_options() {
  OracleOptions o;
  if (const char* env = std::getenv("MONADER_MAX_ORACLE_LEN")) {
    try {
      std::size_t used = 0;
      o.max_word_len = std::stoul(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("MONADER_MAX_ORACLE_LEN is not a number: ") + env);
    }
  }
  return o;
}

int oracle_check(const Common& c, bool support_given, bool semiring_given, std::size_t max_len,
                 std::size_t samples, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  OracleOptions opts = oracle_options();
  if (max_len > opts.max_word_len) {
    throw WordTooLong("--max-word-len " + std::to_string(max_len) + " exceeds the oracle bound " +
                      std::to_string(opts.max_word_len));
  }
  std::vector<SupportId> pairs;
  for (auto k : {SupportKind::Maybe, SupportKind::Set, SupportKind::LinComb, SupportKind::GradComb}) {
    for (auto sr : {SemiringId::Boolean, SemiringId::Nat, SemiringId::Int, SemiringId::Rat}) {
      SupportId id{k, sr};
      if ((k == SupportKind::Maybe || k == SupportKind::Set) && sr != SemiringId::Boolean) continue;
      if (support_given && support_name(k) != c.support) continue;
      if (semiring_given && semiring_name(sr) != c.semiring) continue;
      pairs.push_back(id);
    }
  }
  if (pairs.empty()) throw SupportMismatch(c.support + " support requires the bool semiring");

  std::vector<Symbol> sigma{'a', 'b'};
  if (!c.alphabet.empty()) {
    auto s = letters(c.alphabet, "--alphabet");
    sigma.assign(s.begin(), s.end());
  }
  Alphabet alphabet(std::set<Symbol>(sigma.begin(), sigma.end()));
  std::vector<Word> words = alphabet.words_up_to(max_len);

  std::map<SemiringId, RandomExprGen> gens;
  std::size_t ok = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const SupportId& id = pairs[i % pairs.size()];
    auto it = gens.find(id.semiring);
    if (it == gens.end()) {
      GenOptions g;
      g.semiring = id.semiring;
      g.alphabet = sigma;
      it = gens.emplace(id.semiring, RandomExprGen(seed + static_cast<std::uint64_t>(id.semiring), g)).first;
    }
    Expr e = it->second.next();
    bool good = true;
    for (const auto& w : words) {
      Weight got = weight(id, e, w);
      Weight want = oracle_weight(e, w, opts);
      if (!(got == want)) {
        err << "mismatch [" << to_string(id) << "] " << pretty(e) << " on \"" << w << "\": derivatives give "
            << got.to_string() << ", oracle gives " << want.to_string() << '\n';
        good = false;
        break;
      }
    }
    ok += good;
  }
  out << ok << '/' << samples << " ok\n";
  return ok == samples ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derivatives of extended weighted regular expressions", "monader"};
  app.require_subcommand(1);

  Common c;
  bool parse_normalize = false;
  bool json = false;
  bool to_exp = false;
  std::string word;
  std::size_t max_states = 100;
  std::string format = "dot";
  std::size_t max_len = 4;
  std::size_t samples = 200;
  std::uint64_t seed = 1;

  auto* cmd_parse = app.add_subcommand("parse", "parse and pretty-print an expression");
  add_common(cmd_parse, c, true);
  cmd_parse->add_flag("--normalize", parse_normalize, "print the normalized form");
  cmd_parse->add_flag("--json", json, "JSON output");

  auto* cmd_derive = app.add_subcommand("derive", "derivative by a word");
  add_common(cmd_derive, c, true);
  cmd_derive->add_option("--word", word, "word (default: empty)");
  cmd_derive->add_flag("--to-exp", to_exp, "print toExp of the derivative");
  cmd_derive->add_flag("--json", json, "JSON output");

  auto* cmd_weight = app.add_subcommand("weight", "weight of a word via derivatives");
  add_common(cmd_weight, c, true);
  cmd_weight->add_option("--word", word, "word (default: empty)");
  cmd_weight->add_flag("--json", json, "JSON output");

  auto* cmd_auto = app.add_subcommand("automaton", "derivative automaton");
  add_common(cmd_auto, c, true);
  cmd_auto->add_option("--max-states", max_states, "state budget")->check(CLI::PositiveNumber);
  cmd_auto->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));

  auto* cmd_oracle = app.add_subcommand("oracle-check", "random check of derivative weights against the oracle");
  add_common(cmd_oracle, c, false);
  cmd_oracle->add_option("--max-word-len", max_len, "longest word checked");
  cmd_oracle->add_option("--samples", samples, "number of random expressions");
  cmd_oracle->add_option("--seed", seed, "random seed");

  std::vector<std::string> argv_store{"monader"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (cmd_parse->parsed()) {
      Context ctx = context_of(c, false);
      Expr shown = parse_normalize ? normalize(ctx.e) : ctx.e;
      if (json) {
        Json j;
        j["expr"] = pretty(ctx.e);
        j["normalized"] = pretty(normalize(ctx.e));
        j["semiring"] = std::string(semiring_name(ctx.id.semiring));
        j["alphabet"] = ctx.sigma.to_string();
        j["proper"] = ctx.e.is_proper();
        j["null"] = ctx.e.is_proper() ? Json(null(ctx.e).to_string()) : Json(nullptr);
        out << j.dump(2) << '\n';
      } else {
        out << pretty(shown) << '\n';
      }
      return 0;
    }
    if (cmd_derive->parsed()) {
      Context ctx = context_of(c);
      SupportValue v = derive_word(ctx.id, ctx.e, check_word(word));
      if (json) {
        Json j;
        j["support"] = std::string(support_name(ctx.id.kind));
        j["semiring"] = std::string(semiring_name(ctx.id.semiring));
        j["word"] = word;
        j["value"] = to_json(v);
        j["to_exp"] = pretty(sv_to_exp(ctx.id, v));
        out << j.dump(2) << '\n';
      } else if (to_exp) {
        out << pretty(sv_to_exp(ctx.id, v)) << '\n';
      } else {
        out << render(v);
      }
      return 0;
    }
    if (cmd_weight->parsed()) {
      Context ctx = context_of(c);
      Weight k = weight(ctx.id, ctx.e, check_word(word));
      if (json) {
        Json j;
        j["support"] = std::string(support_name(ctx.id.kind));
        j["semiring"] = std::string(semiring_name(ctx.id.semiring));
        j["word"] = word;
        j["weight"] = k.to_string();
        out << j.dump(2) << '\n';
      } else {
        out << k.to_string() << '\n';
      }
      return 0;
    }
    if (cmd_auto->parsed()) {
      Context ctx = context_of(c);
      DerivAutomaton a = build(ctx.id, ctx.e, max_states, ctx.sigma);
      if (a.truncated) err << "truncated: true (budget of " << max_states << " states reached)\n";
      out << (format == "json" ? export_json(a) + "\n" : export_dot(a));
      return 0;
    }
    if (cmd_oracle->parsed()) {
      return oracle_check(c, cmd_oracle->count("--support") > 0, cmd_oracle->count("--semiring") > 0, max_len,
                          samples, seed, out, err);
    }
  } catch (const ImproperExpression& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace monader
