// Command-line front end for the msokit shared library. Talks to the
// library exclusively through the C API in msokit.h.
//
// Exit codes: 0 success / true verdict, 1 false verdict, 2 malformed
// input, 3 resource cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "msokit.h"

namespace {

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;

int status_exit(msokit_status status) {
  std::cerr << "error: " << msokit_last_error() << "\n";
  switch (status) {
    case MSOKIT_ERR_RESOURCE:
      return exit_resource;
    case MSOKIT_ERR_INPUT:
      return exit_input;
    default:
      return exit_input;
  }
}

struct Options {
  std::string alphabet;
  std::string word;
  std::string w1, w2;
  std::string formula;
  std::string dfa_path;
  std::string term;
  std::string out_path;
  std::string format = "text";
  unsigned k = 0;
  unsigned seed = 0;
  int max_positions = -1;
  bool minimize = false;

  bool json() const { return format == "json"; }
};

std::string take_string(char* owned) {
  std::string out = owned ? owned : "";
  msokit_string_free(owned);
  return out;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

bool write_output(const Options& options, const std::string& payload) {
  if (options.out_path.empty()) {
    std::cout << payload << "\n";
    return true;
  }
  std::ofstream out(options.out_path, std::ios::binary);
  if (!out) return false;
  out << payload;
  return out.good();
}

int load_dfa(const Options& options, msokit_dfa** dfa) {
  std::string text;
  if (!read_file(options.dfa_path, text)) {
    std::cerr << "error: cannot read '" << options.dfa_path << "'\n";
    return exit_input;
  }
  msokit_status status = msokit_dfa_from_json(text.c_str(), dfa);
  if (status != MSOKIT_OK) return status_exit(status);
  return -1;
}

void print_bool(const Options& options, bool value) {
  if (options.json()) {
    std::cout << "{\"result\":" << (value ? "true" : "false") << "}\n";
  } else {
    std::cout << (value ? "true" : "false") << "\n";
  }
}

int cmd_eval(const Options& options) {
  int result = 0;
  msokit_status status =
      msokit_eval(options.alphabet.c_str(), options.word.c_str(), options.formula.c_str(), &result);
  if (status != MSOKIT_OK) return status_exit(status);
  print_bool(options, result != 0);
  return result ? exit_true : exit_false;
}

int cmd_compile(const Options& options) {
  msokit_dfa* dfa = nullptr;
  msokit_status status = msokit_compile(options.alphabet.c_str(), options.formula.c_str(),
                                        options.minimize ? 1 : 0, &dfa);
  if (status != MSOKIT_OK) return status_exit(status);
  char* json = nullptr;
  status = msokit_dfa_to_json(dfa, &json);
  msokit_dfa_free(dfa);
  if (status != MSOKIT_OK) return status_exit(status);
  std::string payload = take_string(json);
  if (!write_output(options, payload)) {
    std::cerr << "error: cannot write '" << options.out_path << "'\n";
    return exit_input;
  }
  return exit_true;
}

int cmd_accepts(const Options& options) {
  msokit_dfa* dfa = nullptr;
  int rc = load_dfa(options, &dfa);
  if (rc >= 0) return rc;
  int result = 0;
  msokit_status status = msokit_dfa_accepts(dfa, options.word.c_str(), &result);
  msokit_dfa_free(dfa);
  if (status != MSOKIT_OK) return status_exit(status);
  print_bool(options, result != 0);
  return result ? exit_true : exit_false;
}

int cmd_equiv(const Options& options) {
  int result = 0;
  msokit_status status = msokit_equiv(options.alphabet.c_str(), options.k, options.w1.c_str(),
                                      options.w2.c_str(), &result);
  if (status != MSOKIT_OK) return status_exit(status);
  print_bool(options, result != 0);
  return result ? exit_true : exit_false;
}

int cmd_witness(const Options& options) {
  char* rendered = nullptr;
  msokit_status status = msokit_witness(options.alphabet.c_str(), options.k, options.w1.c_str(),
                                        options.w2.c_str(), &rendered);
  if (status != MSOKIT_OK) return status_exit(status);
  if (rendered == nullptr) {
    if (options.json()) {
      std::cout << "{\"equivalent\":true}\n";
    } else {
      std::cout << "equivalent\n";
    }
    return exit_false;  // no witness to show
  }
  std::string tree = take_string(rendered);
  if (options.json()) {
    std::string escaped;
    for (char c : tree) {
      if (c == '"' || c == '\\') escaped += '\\';
      if (c == '\n') {
        escaped += "\\n";
        continue;
      }
      escaped += c;
    }
    std::cout << "{\"equivalent\":false,\"strategy\":\"" << escaped << "\"}\n";
  } else {
    std::cout << tree;
  }
  return exit_true;
}

int cmd_monoid(const Options& options) {
  msokit_monoid* monoid = nullptr;
  msokit_status status = msokit_monoid_build(options.alphabet.c_str(), options.k, &monoid);
  if (status != MSOKIT_OK) return status_exit(status);
  char* json = nullptr;
  status = msokit_monoid_to_json(monoid, &json);
  msokit_monoid_free(monoid);
  if (status != MSOKIT_OK) return status_exit(status);
  if (!write_output(options, take_string(json))) {
    std::cerr << "error: cannot write '" << options.out_path << "'\n";
    return exit_input;
  }
  return exit_true;
}

int cmd_omega(const Options& options) {
  unsigned element = 0;
  char* rep = nullptr;
  msokit_status status =
      msokit_omega_eval(options.alphabet.c_str(), options.k, options.term.c_str(), &element, &rep);
  if (status != MSOKIT_OK) return status_exit(status);
  std::string rep_str = take_string(rep);
  if (options.json()) {
    std::cout << "{\"element\":" << element << ",\"rep\":\"" << rep_str << "\"}\n";
  } else {
    std::cout << "element=" << element << " rep=" << rep_str << "\n";
  }
  return exit_true;
}

int cmd_member(const Options& options) {
  msokit_dfa* dfa = nullptr;
  int rc = load_dfa(options, &dfa);
  if (rc >= 0) return rc;
  int result = 0;
  msokit_status status = msokit_member_closure(dfa, options.term.c_str(), &result);
  msokit_dfa_free(dfa);
  if (status != MSOKIT_OK) return status_exit(status);
  print_bool(options, result != 0);
  return result ? exit_true : exit_false;
}

int cmd_cofinal(const Options& options) {
  msokit_dfa* dfa = nullptr;
  int rc = load_dfa(options, &dfa);
  if (rc >= 0) return rc;
  unsigned k = 0;
  msokit_status status = msokit_cofinal_k(dfa, &k);
  msokit_dfa_free(dfa);
  if (status != MSOKIT_OK) return status_exit(status);
  if (options.json()) {
    std::cout << "{\"k\":" << k << "}\n";
  } else {
    std::cout << k << "\n";
  }
  return exit_true;
}

int cmd_duality(const Options& options) {
  unsigned points = 0;
  int functional = 0, graph = 0;
  msokit_status status =
      msokit_duality_check(options.alphabet.c_str(), options.k, &points, &functional, &graph);
  if (status != MSOKIT_OK) return status_exit(status);
  if (options.json()) {
    std::cout << "{\"points\":" << points << ",\"functional\":" << (functional ? "true" : "false")
              << ",\"graph\":" << (graph ? "true" : "false") << "}\n";
  } else {
    std::cout << "points: " << points << "\n"
              << "functional: " << (functional ? "true" : "false") << "\n"
              << "R_+ = graph(\u2297_k): " << (graph ? "true" : "false") << "\n";
  }
  return graph ? exit_true : exit_false;
}

int cmd_axioms(const Options& options) {
  int all_pass = 0;
  char* report = nullptr;
  msokit_status status = msokit_check_axioms(options.alphabet.c_str(), options.word.c_str(),
                                             options.json() ? 1 : 0, &all_pass, &report);
  if (status != MSOKIT_OK) return status_exit(status);
  std::cout << take_string(report);
  if (options.json()) std::cout << "\n";
  return all_pass ? exit_true : exit_false;
}

int cmd_selftest(const Options& options) {
  int all_pass = 0;
  char* report = nullptr;
  msokit_status status =
      msokit_selftest(options.seed, options.json() ? 1 : 0, &all_pass, &report);
  if (status != MSOKIT_OK) return status_exit(status);
  std::cout << take_string(report);
  if (options.json()) std::cout << "\n";
  return all_pass ? exit_true : exit_false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"msokit: monadic second-order logic on finite words"};
  app.require_subcommand(1);

  Options options;
  app.add_option("--format", options.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", options.seed, "Seed for sampled property checks");
  app.add_option("--max-positions", options.max_positions,
                 "Override every position cap with this value");

  auto add_alphabet = [&](CLI::App* cmd) {
    cmd->add_option("--alphabet", options.alphabet, "Ordered alphabet characters, e.g. ab")
        ->required();
  };
  auto add_k = [&](CLI::App* cmd) {
    cmd->add_option("--k", options.k, "Quantifier depth / level")->required();
  };

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a sentence in the structure of a word");
  add_alphabet(eval);
  eval->add_option("--word", options.word, "Word; empty string for the empty word")->required();
  eval->add_option("--formula", options.formula, "Sentence text")->required();

  CLI::App* compile_cmd = app.add_subcommand("compile", "Compile a sentence to an automaton");
  add_alphabet(compile_cmd);
  compile_cmd->add_option("--formula", options.formula, "Sentence text")->required();
  compile_cmd->add_option("--out", options.out_path, "Write the automaton JSON here");
  compile_cmd->add_flag("--minimize", options.minimize, "Minimize the result");

  CLI::App* accepts = app.add_subcommand("accepts", "Run an automaton on a word");
  accepts->add_option("--dfa", options.dfa_path, "Automaton JSON file")->required();
  accepts->add_option("--word", options.word, "Word; empty string for the empty word")->required();

  CLI::App* equiv = app.add_subcommand("equiv", "Depth-k equivalence of two words");
  add_alphabet(equiv);
  add_k(equiv);
  equiv->add_option("--w1", options.w1, "First word")->required();
  equiv->add_option("--w2", options.w2, "Second word")->required();

  CLI::App* witness = app.add_subcommand("witness", "Spoiler strategy separating two words");
  add_alphabet(witness);
  add_k(witness);
  witness->add_option("--w1", options.w1, "First word")->required();
  witness->add_option("--w2", options.w2, "Second word")->required();

  CLI::App* monoid = app.add_subcommand("monoid", "Build the level-k class monoid");
  add_alphabet(monoid);
  add_k(monoid);
  monoid->add_option("--out", options.out_path, "Write the monoid JSON here");

  CLI::App* omega = app.add_subcommand("omega", "Evaluate an omega-term at level k");
  add_alphabet(omega);
  add_k(omega);
  omega->add_option("--term", options.term, "Term, e.g. '(ab)^w a'")->required();

  CLI::App* member = app.add_subcommand("member", "Closure membership of an omega-term");
  member->add_option("--dfa", options.dfa_path, "Automaton JSON file")->required();
  member->add_option("--term", options.term, "Term, e.g. '(a)^w'")->required();

  CLI::App* cofinal = app.add_subcommand("cofinal-k", "Refining depth from the run encoding");
  cofinal->add_option("--dfa", options.dfa_path, "Automaton JSON file")->required();

  CLI::App* duality = app.add_subcommand("duality", "Dual-space check for the level-k algebra");
  add_alphabet(duality);
  add_k(duality);

  CLI::App* axioms = app.add_subcommand("axioms", "Check the axiom set in a word's structure");
  add_alphabet(axioms);
  axioms->add_option("--word", options.word, "Word; empty string for the empty word")->required();

  CLI::App* selftest = app.add_subcommand("selftest", "Run the full property suite");
  (void)selftest;

  // global flags may appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // help and version go to stdout, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  if (const char* env = std::getenv("MSOKIT_CAPS")) {
    if (msokit_set_caps(env) != MSOKIT_OK) {
      std::cerr << "error: MSOKIT_CAPS: " << msokit_last_error() << "\n";
      return exit_input;
    }
  }
  if (options.max_positions >= 0) {
    std::string n = std::to_string(options.max_positions);
    std::string spec = "pos0=" + n + ",pos1=" + n + ",pos2=" + n + ",pos3=" + n + ",eval1=" + n +
                       ",eval2=" + n + ",struct=" + n;
    if (msokit_set_caps(spec.c_str()) != MSOKIT_OK) {
      std::cerr << "error: " << msokit_last_error() << "\n";
      return exit_input;
    }
  }

  if (app.got_subcommand("eval")) return cmd_eval(options);
  if (app.got_subcommand("compile")) return cmd_compile(options);
  if (app.got_subcommand("accepts")) return cmd_accepts(options);
  if (app.got_subcommand("equiv")) return cmd_equiv(options);
  if (app.got_subcommand("witness")) return cmd_witness(options);
  if (app.got_subcommand("monoid")) return cmd_monoid(options);
  if (app.got_subcommand("omega")) return cmd_omega(options);
  if (app.got_subcommand("member")) return cmd_member(options);
  if (app.got_subcommand("cofinal-k")) return cmd_cofinal(options);
  if (app.got_subcommand("duality")) return cmd_duality(options);
  if (app.got_subcommand("axioms")) return cmd_axioms(options);
  if (app.got_subcommand("selftest")) return cmd_selftest(options);
  return exit_input;
}
