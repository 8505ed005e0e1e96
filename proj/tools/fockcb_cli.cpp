// Command-line front end: canonical basis expansions, formula verification,
// block listings, divided-power actions, and crystal data, with text, JSON
// and LaTeX output.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 bad input, 3 inapplicable
// method, 4 internal assertion.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fockcb/json_io.hpp"
#include "fockcb/render.hpp"
#include "fockcb/verify.hpp"

using namespace fockcb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitMethod = 3;
constexpr int kExitInternal = 4;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw BadInputError("empty entry in integer list: " + text);
    std::size_t used = 0;
    out.push_back(std::stoi(token, &used));
    if (used != token.size()) throw BadInputError("bad integer: " + token);
  }
  if (out.empty()) throw BadInputError("empty integer list");
  return out;
}

// "[4,3,2,2],[7,3,2],[]" -> {{4,3,2,2},{7,3,2},{}}
std::vector<std::vector<int>> parse_bracket_lists(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ',' || text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '[') throw BadInputError("expected '[' in " + text);
    const std::size_t close = text.find(']', pos);
    if (close == std::string::npos) throw BadInputError("missing ']' in " + text);
    const std::string inner = text.substr(pos + 1, close - pos - 1);
    if (inner.empty()) out.emplace_back();
    else out.push_back(parse_int_list(inner));
    pos = close + 1;
  }
  if (out.empty()) throw BadInputError("no bracketed lists in " + text);
  return out;
}

// "F3^(2) F2^(2) E-1" -> steps with lowering (true) or raising (false) flags
struct WordStep {
  bool lowering;
  int letter;
  int multiplicity;
};

std::vector<WordStep> parse_word(const std::string& text) {
  std::vector<WordStep> steps;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 'F' && token[0] != 'E'))
      throw BadInputError("word tokens look like F3^(2) or E-1: " + token);
    const bool lowering = token[0] == 'F';
    std::string rest = token.substr(1);
    int mult = 1;
    const std::size_t caret = rest.find('^');
    if (caret != std::string::npos) {
      std::string m = rest.substr(caret + 1);
      if (m.size() >= 2 && m.front() == '(' && m.back() == ')') m = m.substr(1, m.size() - 2);
      mult = std::stoi(m);
      if (mult < 1) throw BadInputError("multiplicity must be positive: " + token);
      rest = rest.substr(0, caret);
    }
    steps.push_back(WordStep{lowering, std::stoi(rest), mult});
  }
  return steps;
}

struct SymbolInput {
  std::string multicharge;
  std::string multipartition;
  std::string rows;
  int window_low = 0;
  bool has_window_low = false;

  Symbol resolve() const {
    if (!rows.empty()) {
      if (!has_window_low) throw BadInputError("--rows requires --window-low");
      return Symbol::from_windowed_rows(parse_bracket_lists(rows), window_low);
    }
    if (multicharge.empty() || multipartition.empty())
      throw BadInputError("give --multicharge with --multipartition, or --rows with --window-low");
    Multicharge v(parse_int_list(multicharge));
    std::vector<Partition> parts;
    for (auto& p : parse_bracket_lists(multipartition)) parts.emplace_back(std::move(p));
    return Symbol(std::move(v), std::move(parts));
  }
};

void add_symbol_options(CLI::App* cmd, SymbolInput& input) {
  cmd->add_option("--multicharge", input.multicharge, "weakly decreasing charges, e.g. 1,0");
  cmd->add_option("--multipartition", input.multipartition,
                  "one bracketed partition per row, e.g. \"[4,3,2,2],[7,3,2]\"");
  cmd->add_option("--rows", input.rows, "windowed beta-rows, e.g. \"[-1,0,2,7],[-1,0,3]\"");
  cmd->add_option("--window-low", input.window_low, "first index of every windowed row")
      ->each([&input](const std::string&) { input.has_window_low = true; });
}

std::string format_expansion(const CanonicalExpansion& e, const std::string& format) {
  if (format == "json") return expansion_to_json(e, /*with_rows=*/true).dump(1) + "\n";
  if (format == "latex") return render_expansion_latex(e);
  return render_expansion_text(e);
}

int run_canon(const SymbolInput& input, const std::string& method_name_arg,
              const std::string& format, const std::optional<std::string>& cache) {
  const Symbol s = input.resolve();
  auto method = method_from_name(method_name_arg);
  if (!method) throw BadInputError("unknown method: " + method_name_arg);
  CanonicalContext context(CanonicalContext::Options{cache});
  auto e = context.canonical(s, *method);
  std::cout << format_expansion(e, format);
  return kExitOk;
}

int run_verify_cmd(const std::string& multicharge, int max_size, const std::string& methods_arg,
                   int jobs, const std::optional<std::string>& cache, const std::string& format) {
  VerifyOptions options;
  options.v = Multicharge(parse_int_list(multicharge));
  options.max_size = max_size;
  options.jobs = jobs;
  options.cache_dir = cache;
  if (!methods_arg.empty()) {
    std::istringstream in(methods_arg);
    std::string token;
    while (std::getline(in, token, ',')) {
      auto m = method_from_name(token);
      if (!m || *m == Method::auto_dispatch || *m == Method::oracle || *m == Method::removal)
        throw BadInputError("not a verifiable closed formula: " + token);
      options.methods.push_back(*m);
    }
  }
  auto report = run_verify(options);
  if (format == "json") {
    json j{{"ok", report.ok},
           {"blocks", report.blocks},
           {"standard_symbols", report.standard_symbols},
           {"checks", report.checks},
           {"mismatches", report.mismatches}};
    json per = json::object();
    for (const auto& [m, stats] : report.per_method)
      per[method_name(m)] = json{{"checked", stats.checked}, {"mismatched", stats.mismatched}};
    j["per_method"] = per;
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << report.text;
  }
  return report.ok ? kExitOk : kExitMismatch;
}

int run_blocks(const std::string& multicharge, int max_size, const std::string& format) {
  Multicharge v(parse_int_list(multicharge));
  json out = json::array();
  std::ostringstream text;
  for (int n = 0; n <= max_size; ++n) {
    auto grouped = group_by_block(enumerate_all_symbols(v, n));
    for (const auto& [key, members] : grouped) {
      long standard = 0;
      for (const auto& s : members) standard += is_standard(s) ? 1 : 0;
      if (format == "json") {
        out.push_back(json{{"size", n},
                           {"entries", key.entries},
                           {"signature", key.entry_signature()},
                           {"symbols", members.size()},
                           {"standard", standard}});
      } else {
        text << "size=" << n << " block=" << key.entry_signature() << " symbols=" << members.size()
             << " standard=" << standard << "\n";
      }
    }
  }
  if (format == "json") std::cout << out.dump(1) << "\n";
  else std::cout << text.str();
  return kExitOk;
}

int run_act(const std::string& multicharge, const std::string& word,
            const std::string& vector_path, const std::string& format) {
  FockVector x;
  if (!vector_path.empty()) {
    json j;
    try {
      if (vector_path == "-") {
        std::cin >> j;
      } else {
        std::ifstream in(vector_path);
        if (!in) throw BadInputError("cannot open " + vector_path);
        in >> j;
      }
    } catch (const json::exception& err) {
      throw BadInputError(std::string("malformed vector JSON: ") + err.what());
    }
    x = vector_from_json(j);
  } else {
    if (multicharge.empty()) throw BadInputError("act needs --multicharge or --vector");
    x = FockVector::unit(Symbol::vacuum(Multicharge(parse_int_list(multicharge))));
  }
  for (const auto& step : parse_word(word)) {
    x = step.lowering ? f_divided(x, step.letter, step.multiplicity)
                      : e_divided(x, step.letter, step.multiplicity);
  }
  if (format == "json") std::cout << vector_to_json(x).dump(1) << "\n";
  else if (format == "latex") std::cout << render_vector_latex(x) << "\n";
  else std::cout << render_vector_text(x);
  return kExitOk;
}

int run_crystal(const SymbolInput& input, const std::string& format) {
  const Symbol s = input.resolve();
  if (!is_standard(s)) throw BadInputError("crystal: symbol is not standard");
  auto word = good_maximal_sequence(s);

  // replay through the crystal operators as a self-check
  Symbol u = Symbol::vacuum(s.multicharge());
  for (const auto& [letter, a] : word.steps) {
    for (int k = 0; k < a; ++k) {
      auto next = kashiwara_f(u, letter);
      if (!next) throw InternalError("crystal replay died");
      u = *next;
    }
  }
  if (!(u == s)) throw InternalError("crystal replay does not reach the input symbol");

  const int lo = s.common_window_low() - 1;
  const int hi = s.max_entry();
  if (format == "json") {
    json steps = json::array();
    for (const auto& [letter, a] : word.steps) steps.push_back(json::array({letter, a}));
    json table = json::array();
    for (int i = lo; i <= hi; ++i) {
      auto sig = signature(s, i);
      if (sig.epsilon == 0 && sig.phi == 0) continue;
      table.push_back(json{{"letter", i}, {"epsilon", sig.epsilon}, {"phi", sig.phi}});
    }
    std::cout << json{{"symbol", symbol_to_json(s, true)},
                      {"good_maximal_sequence", steps},
                      {"signatures", table},
                      {"replay_ok", true}}
                     .dump(1)
              << "\n";
  } else {
    std::cout << render_symbol_text(s);
    std::cout << "good maximal sequence (applied left to right):";
    for (const auto& [letter, a] : word.steps) std::cout << " F" << letter << "^(" << a << ")";
    std::cout << "\nreplay through crystal operators: ok\n";
    std::cout << "letter epsilon phi\n";
    for (int i = lo; i <= hi; ++i) {
      auto sig = signature(s, i);
      if (sig.epsilon == 0 && sig.phi == 0) continue;
      std::cout << i << " " << sig.epsilon << " " << sig.phi << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical bases of higher-level Fock spaces"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--cache may follow the subcommand

  std::string format = "text";
  app.add_option("--format", format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  std::string cache_path;
  bool no_cache = false;
  app.add_option("--cache", cache_path, "directory for per-block expansion cache");
  app.add_flag("--no-cache", no_cache, "disable the expansion cache");

  SymbolInput canon_input;
  std::string canon_method = "auto";
  auto* canon = app.add_subcommand("canon", "canonical basis expansion of a standard symbol");
  add_symbol_options(canon, canon_input);
  canon->add_option("--method", canon_method,
                    "auto, oracle, lm2, asymptotic, ordered, spine or good_monomial_l3");

  std::string verify_charge;
  int verify_max = 0;
  int jobs = 1;
  std::string verify_methods;
  auto* verify = app.add_subcommand("verify", "compare closed formulas against the oracle");
  verify->add_option("--multicharge", verify_charge)->required();
  verify->add_option("--max-size", verify_max)->required();
  verify->add_option("--methods", verify_methods, "comma list, default: all closed formulas");
  verify->add_option("--jobs", jobs, "worker threads across blocks");

  std::string blocks_charge;
  int blocks_max = 0;
  auto* blocks = app.add_subcommand("blocks", "list blocks by size with member counts");
  blocks->add_option("--multicharge", blocks_charge)->required();
  blocks->add_option("--max-size", blocks_max)->required();

  std::string act_charge, act_word, act_vector;
  auto* act = app.add_subcommand("act", "apply a divided-power word to a vector");
  act->add_option("--multicharge", act_charge, "acts on the empty symbol of this multicharge");
  act->add_option("--word", act_word, "e.g. \"F3^(2) F2^(2)\"")->required();
  act->add_option("--vector", act_vector, "vector JSON file, or - for stdin");

  SymbolInput crystal_input;
  auto* crystal = app.add_subcommand("crystal", "good maximal sequence and signature table");
  add_symbol_options(crystal, crystal_input);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "fockcb: error[input]: " << e.what() << "\n";
    return kExitBadInput;
  }

  std::optional<std::string> cache;
  if (!cache_path.empty() && !no_cache) cache = cache_path;

  try {
    if (canon->parsed()) return run_canon(canon_input, canon_method, format, cache);
    if (verify->parsed())
      return run_verify_cmd(verify_charge, verify_max, verify_methods, jobs, cache, format);
    if (blocks->parsed()) return run_blocks(blocks_charge, blocks_max, format);
    if (act->parsed()) return run_act(act_charge, act_word, act_vector, format);
    if (crystal->parsed()) return run_crystal(crystal_input, format);
  } catch (const MethodInapplicableError& e) {
    std::cerr << "fockcb: error[method]: " << e.what() << "\n";
    return kExitMethod;
  } catch (const BadInputError& e) {
    std::cerr << "fockcb: error[input]: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InternalError& e) {
    std::cerr << "fockcb: error[internal]: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "fockcb: error[input]: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
