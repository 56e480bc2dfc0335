#include "coxtrace/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "coxtrace/coxeter.hpp"
#include "coxtrace/errors.hpp"
#include "coxtrace/fim.hpp"
#include "coxtrace/oracle.hpp"
#include "coxtrace/racg.hpp"

namespace coxtrace::cli {

namespace {

constexpr int kUsage = 2;
constexpr int kMismatch = 3;

struct Request {
  std::string group_file;
  std::vector<std::string> words;
  bool use_oracle = false;
  std::string op = "length";
  oracle::Limits limits;
};

GroupSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read group file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_group_spec(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string join_letters(const GroupSpec& spec, const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k > 0) out += ',';
    out += spec.name(indices[k]);
  }
  return out;
}

std::vector<std::size_t> letters_of(const GroupSpec& spec, const Word& w) {
  std::vector<bool> seen(spec.size(), false);
  for (const auto& l : w) seen[l.index] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

std::string parikh_line(const GroupSpec& spec, const std::vector<std::size_t>& counts) {
  std::string out = "parikh ";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (i > 0) out += ',';
    out += spec.name(i) + ":" + std::to_string(counts[i]);
  }
  return out;
}

void require_words(const Request& r, std::size_t n, const std::string& op) {
  if (r.words.size() != n) {
    throw ParseError(op + " expects " + std::to_string(n) + (n == 1 ? " word" : " words") + ", got " +
                     std::to_string(r.words.size()));
  }
}

Word concat(Word u, const Word& v) {
  u.insert(u.end(), v.begin(), v.end());
  return u;
}

// Each operation returns its output lines, computed either by the algorithms or by the oracle.
std::vector<std::string> op_length(const GroupSpec& spec, const Request& r, bool by_oracle) {
  require_words(r, 1, "length");
  if (spec.kind() == GroupKind::fim) throw KindError("length is not defined for kind fim");
  const Word w = parse_word(r.words[0], spec);
  std::size_t n = 0;
  if (by_oracle) {
    n = oracle::shortlex(spec, w, r.limits).size();
  } else if (is_coxeter_kind(spec.kind())) {
    n = geodesic_length(spec, w);
  } else if (spec.kind() == GroupKind::racg) {
    n = geodesic_length(racg_as_coxeter(spec), w);
  } else {
    n = shortlex_graph_group(spec, w).size();
  }
  return {"length " + std::to_string(n)};
}

std::vector<std::string> op_alphabet(const GroupSpec& spec, const Request& r, bool by_oracle) {
  require_words(r, 1, "alphabet");
  if (spec.kind() == GroupKind::fim) throw KindError("alphabet is not defined for kind fim");
  const Word w = parse_word(r.words[0], spec);
  std::vector<std::size_t> letters;
  if (by_oracle) {
    letters = letters_of(spec, oracle::shortlex(spec, w, r.limits));
  } else if (is_coxeter_kind(spec.kind())) {
    letters = geodesic_alphabet(spec, w);
  } else if (spec.kind() == GroupKind::racg) {
    letters = normal_form_alphabet(spec, w);
  } else {
    letters = letters_of(spec, shortlex_graph_group(spec, w));
  }
  const std::string joined = join_letters(spec, letters);
  return {joined.empty() ? std::string("alphabet") : "alphabet " + joined};
}

std::vector<std::string> op_parikh(const GroupSpec& spec, const Request& r, bool by_oracle) {
  require_words(r, 1, "parikh");
  if (spec.kind() != GroupKind::even_coxeter) {
    throw KindError("parikh needs kind even-coxeter, got " + std::string(kind_name(spec.kind())));
  }
  const Word w = parse_word(r.words[0], spec);
  std::vector<std::size_t> counts(spec.size(), 0);
  if (by_oracle) {
    for (const auto& l : oracle::shortlex(spec, w, r.limits)) ++counts[l.index];
  } else {
    counts = parikh_even(spec, w);
  }
  return {parikh_line(spec, counts)};
}

std::vector<std::string> op_normalize(const GroupSpec& spec, const Request& r, bool by_oracle) {
  require_words(r, 1, "normalize");
  if (spec.kind() != GroupKind::racg && spec.kind() != GroupKind::graph) {
    throw KindError("normalize needs kind racg or graph, got " + std::string(kind_name(spec.kind())));
  }
  const Word w = parse_word(r.words[0], spec);
  Word nf;
  if (by_oracle) {
    nf = oracle::shortlex(spec, w, r.limits);
  } else if (spec.kind() == GroupKind::racg) {
    nf = shortlex_racg(spec, w);
  } else {
    nf = shortlex_graph_group(spec, w);
  }
  return {render_word(nf, spec)};
}

std::vector<std::string> op_equal(const GroupSpec& spec, const Request& r, bool by_oracle) {
  require_words(r, 2, "equal");
  if (spec.kind() == GroupKind::fim) throw KindError("use fim-equal for kind fim");
  const Word u = parse_word(r.words[0], spec);
  const Word v = parse_word(r.words[1], spec);
  bool same = false;
  if (by_oracle) {
    same = oracle::equal(spec, u, v, r.limits);
  } else if (is_coxeter_kind(spec.kind())) {
    same = geodesic_length(spec, concat(u, inverse_word(v, spec))) == 0;
  } else if (spec.kind() == GroupKind::racg) {
    same = shortlex_racg(spec, u) == shortlex_racg(spec, v);
  } else {
    same = shortlex_graph_group(spec, u) == shortlex_graph_group(spec, v);
  }
  return {same ? "true" : "false"};
}

std::vector<std::string> op_fim_equal(const GroupSpec& spec, const Request& r, bool by_oracle) {
  require_words(r, 2, "fim-equal");
  if (spec.kind() != GroupKind::fim) throw KindError("fim-equal needs kind fim");
  if (by_oracle) throw KindError("no oracle for fim-equal");
  return {fim_equal(spec, parse_word(r.words[0], spec), parse_word(r.words[1], spec)) ? "true" : "false"};
}

std::vector<std::string> op_munn(const GroupSpec& spec, const Request& r, bool by_oracle) {
  require_words(r, 1, "munn");
  if (spec.kind() != GroupKind::fim) throw KindError("munn needs kind fim");
  if (by_oracle) throw KindError("no oracle for munn");
  return render_munn_set(munn_set(spec, parse_word(r.words[0], spec)), spec);
}

using Operation = std::function<std::vector<std::string>(const GroupSpec&, const Request&, bool)>;

const std::map<std::string, Operation>& operations() {
  static const std::map<std::string, Operation> ops = {
      {"length", op_length},       {"alphabet", op_alphabet}, {"parikh", op_parikh}, {"normalize", op_normalize},
      {"equal", op_equal},         {"fim-equal", op_fim_equal}, {"munn", op_munn},
  };
  return ops;
}

std::string one_line(const std::vector<std::string>& lines) {
  std::string out;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (k > 0) out += ' ';
    out += lines[k];
  }
  return out;
}

int execute(const std::string& command, const Request& r, std::ostream& out) {
  const GroupSpec spec = load_spec(r.group_file);
  if (command == "oracle-check") {
    const auto it = operations().find(r.op);
    if (it == operations().end()) throw ParseError("unknown --op '" + r.op + "'");
    const auto mine = it->second(spec, r, false);
    const auto theirs = it->second(spec, r, true);
    const bool agree = mine == theirs;
    out << (agree ? "agree" : "disagree") << " | " << one_line(mine) << " | " << one_line(theirs) << '\n';
    return agree ? 0 : 1;
  }
  for (const auto& line : operations().at(command)(spec, r, r.use_oracle)) out << line << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word problems in Coxeter groups, graph groups and free partially commutative inverse monoids",
               "coxtrace"};
  app.require_subcommand(1);

  Request request;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"length", "geodesic length"},
      {"alphabet", "letters occurring in every geodesic"},
      {"parikh", "letter counts of geodesics (even-coxeter)"},
      {"normalize", "shortlex normal form (racg, graph)"},
      {"equal", "word problem for two words"},
      {"fim-equal", "word problem in the inverse monoid (fim)"},
      {"munn", "Munn set of a word (fim)"},
      {"oracle-check", "compare an operation against brute force"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--group", request.group_file, "group spec file")->required();
    sub->add_option("words", request.words, "words, dotted or single-character letters");
    sub->add_option("--max-length", request.limits.max_length, "oracle word length bound");
    sub->add_option("--max-letters", request.limits.max_letters, "oracle alphabet bound");
    sub->add_option("--max-states", request.limits.max_states, "oracle closure size bound");
    if (name == "oracle-check") {
      sub->add_option("--op", request.op, "operation to check")->default_str("length");
    } else {
      sub->add_flag("--oracle", request.use_oracle, "answer by brute force instead");
    }
    subs.push_back(sub);
  }

  std::vector<std::string> argv_storage = {"coxtrace"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::string command;
  for (auto* sub : subs) {
    if (sub->parsed()) command = sub->get_name();
  }

  try {
    return execute(command, request, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const KindError& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const InternalFault& e) {
    err << "internal fault: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace coxtrace::cli
