#include "coxtrace/alphabet.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace coxtrace {

IndependenceAlphabet::IndependenceAlphabet(std::size_t size,
                                           std::span<const std::pair<Symbol, Symbol>> independent_pairs)
    : independent_(size, 0) {
  if (size > kMaxSymbols) {
    throw ParseError("alphabet has " + std::to_string(size) + " symbols, at most " +
                     std::to_string(kMaxSymbols) + " supported");
  }
  for (auto [a, b] : independent_pairs) {
    if (a >= size || b >= size) throw ParseError("independence pair outside the alphabet");
    if (a == b) throw ParseError("independence relation must be irreflexive");
    independent_[a] |= std::uint64_t{1} << b;
    independent_[b] |= std::uint64_t{1} << a;
  }
}

namespace {

constexpr std::pair<GroupKind, std::string_view> kKindNames[] = {
    {GroupKind::coxeter, "coxeter"},
    {GroupKind::even_coxeter, "even-coxeter"},
    {GroupKind::racg, "racg"},
    {GroupKind::graph, "graph"},
    {GroupKind::fim, "fim"},
};

void check_letters(const std::vector<std::string>& letters) {
  if (letters.empty()) throw ParseError("a group needs at least one letter");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!is_valid_letter_name(letters[i])) throw ParseError("invalid letter name '" + letters[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (letters[i] == letters[j]) throw ParseError("duplicate letter '" + letters[i] + "'");
    }
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Directive {
  std::size_t line;
  std::vector<std::string> tokens;  // "m a b 3" or "edge a b"
};

}  // namespace

std::string_view kind_name(GroupKind kind) {
  for (auto [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GroupKind> kind_from_name(std::string_view name) {
  for (auto [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool is_valid_letter_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

GroupSpec GroupSpec::coxeter(GroupKind kind, std::vector<std::string> letters, CoxeterMatrix matrix) {
  if (!is_coxeter_kind(kind)) throw KindError("a Coxeter matrix needs kind coxeter or even-coxeter");
  check_letters(letters);
  const std::size_t n = letters.size();
  if (matrix.size() != n) throw ParseError("Coxeter matrix has the wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw ParseError("Coxeter matrix has the wrong number of columns");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned v = matrix[i][j];
      if (v != matrix[j][i]) {
        throw ParseError("asymmetric Coxeter matrix at (" + letters[i] + ", " + letters[j] + ")");
      }
      if (i == j && v != 1) throw ParseError("diagonal entry for '" + letters[i] + "' must be 1");
      if (i != j && v == 1) {
        throw ParseError("off-diagonal entry (" + letters[i] + ", " + letters[j] + ") must not be 1");
      }
      if (i != j && kind == GroupKind::even_coxeter && v % 2 != 0) {
        throw ParseError("odd entry " + std::to_string(v) + " at (" + letters[i] + ", " + letters[j] +
                         ") in an even Coxeter group");
      }
    }
  }
  GroupSpec spec;
  spec.kind_ = kind;
  spec.letters_ = std::move(letters);
  spec.matrix_ = std::move(matrix);
  return spec;
}

GroupSpec GroupSpec::independence(GroupKind kind, std::vector<std::string> letters,
                                  std::span<const std::pair<std::size_t, std::size_t>> edges) {
  if (is_coxeter_kind(kind)) throw KindError("an independence relation needs kind racg, graph or fim");
  check_letters(letters);
  const std::size_t limit = has_inverse_letters(kind) ? IndependenceAlphabet::kMaxSymbols / 2
                                                      : IndependenceAlphabet::kMaxSymbols;
  if (letters.size() > limit) {
    throw ParseError("at most " + std::to_string(limit) + " letters supported for kind " +
                     std::string(kind_name(kind)));
  }
  std::vector<std::pair<Symbol, Symbol>> pairs;
  for (auto [a, b] : edges) {
    if (a >= letters.size() || b >= letters.size()) throw ParseError("edge on unknown letter");
    if (a == b) throw ParseError("edge on '" + letters[a] + "' with itself");
    pairs.emplace_back(static_cast<Symbol>(a), static_cast<Symbol>(b));
  }
  GroupSpec spec;
  spec.kind_ = kind;
  spec.independence_ = IndependenceAlphabet(letters.size(), pairs);
  spec.letters_ = std::move(letters);
  return spec;
}

std::optional<std::size_t> GroupSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == name) return i;
  }
  return std::nullopt;
}

GroupSpec parse_group_spec(std::string_view text) {
  std::optional<GroupKind> kind;
  std::optional<std::vector<std::string>> letters;
  std::size_t letters_line = 0;
  std::vector<Directive> directives;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (auto eq = line.find('='); eq != std::string_view::npos) {
      const auto key = trim(line.substr(0, eq));
      const auto value = trim(line.substr(eq + 1));
      if (key == "kind") {
        if (kind) throw ParseError("kind given twice", line_no);
        kind = kind_from_name(value);
        if (!kind) throw ParseError("unknown kind '" + std::string(value) + "'", line_no);
      } else if (key == "letters") {
        if (letters) throw ParseError("letters given twice", line_no);
        letters = split_ws(value);
        letters_line = line_no;
        if (letters->empty()) throw ParseError("empty letter list", line_no);
        for (const auto& l : *letters) {
          if (!is_valid_letter_name(l)) throw ParseError("invalid letter name '" + l + "'", line_no);
        }
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'", line_no);
      }
      continue;
    }

    auto tokens = split_ws(line);
    if (tokens[0] == "m") {
      if (tokens.size() != 4) throw ParseError("expected 'm <a> <b> <nat>'", line_no);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 3) throw ParseError("expected 'edge <a> <b>'", line_no);
    } else {
      throw ParseError("unrecognised line '" + std::string(line) + "'", line_no);
    }
    directives.push_back({line_no, std::move(tokens)});
  }

  if (!kind) throw ParseError("missing 'kind = ...' line");
  if (!letters) throw ParseError("missing 'letters = ...' line");
  try {
    check_letters(*letters);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), letters_line);
  }

  const std::size_t n = letters->size();
  auto lookup = [&](const std::string& name, std::size_t line) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((*letters)[i] == name) return i;
    }
    throw ParseError("unknown letter '" + name + "'", line);
  };

  if (is_coxeter_kind(*kind)) {
    CoxeterMatrix matrix(n, std::vector<unsigned>(n, 0));
    std::vector<std::vector<std::size_t>> set_on(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) matrix[i][i] = 1;
    for (const auto& d : directives) {
      if (d.tokens[0] != "m") throw ParseError("'edge' lines need kind racg, graph or fim", d.line);
      const auto i = lookup(d.tokens[1], d.line);
      const auto j = lookup(d.tokens[2], d.line);
      unsigned value = 0;
      const auto& num = d.tokens[3];
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
      if (ec != std::errc{} || ptr != num.data() + num.size()) {
        throw ParseError("'" + num + "' is not a natural number", d.line);
      }
      if (i == j && value != 1) throw ParseError("diagonal entry for '" + d.tokens[1] + "' must be 1", d.line);
      if (i != j && value == 1) throw ParseError("off-diagonal entry must not be 1", d.line);
      if (set_on[i][j] != 0 && matrix[i][j] != value) {
        throw ParseError("asymmetric matrix: (" + d.tokens[1] + ", " + d.tokens[2] + ") already set to " +
                             std::to_string(matrix[i][j]) + " on line " + std::to_string(set_on[i][j]),
                         d.line);
      }
      if (*kind == GroupKind::even_coxeter && i != j && value % 2 != 0) {
        throw ParseError("odd entry " + num + " in an even Coxeter group", d.line);
      }
      matrix[i][j] = matrix[j][i] = value;
      set_on[i][j] = set_on[j][i] = d.line;
    }
    return GroupSpec::coxeter(*kind, std::move(*letters), std::move(matrix));
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& d : directives) {
    if (d.tokens[0] != "edge") throw ParseError("'m' lines need kind coxeter or even-coxeter", d.line);
    const auto i = lookup(d.tokens[1], d.line);
    const auto j = lookup(d.tokens[2], d.line);
    if (i == j) throw ParseError("edge on '" + d.tokens[1] + "' with itself", d.line);
    edges.emplace_back(i, j);
  }
  return GroupSpec::independence(*kind, std::move(*letters), edges);
}

std::string render_group_spec(const GroupSpec& spec) {
  std::ostringstream out;
  out << "kind = " << kind_name(spec.kind()) << '\n' << "letters =";
  for (const auto& l : spec.letters()) out << ' ' << l;
  out << '\n';
  const std::size_t n = spec.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (is_coxeter_kind(spec.kind())) {
        if (spec.entry(i, j) != 0) out << "m " << spec.name(i) << ' ' << spec.name(j) << ' ' << spec.entry(i, j) << '\n';
      } else if (spec.independent(i, j)) {
        out << "edge " << spec.name(i) << ' ' << spec.name(j) << '\n';
      }
    }
  }
  return out.str();
}

GroupSpec racg_as_coxeter(const GroupSpec& spec) {
  if (spec.kind() != GroupKind::racg) throw KindError("expected a racg spec");
  const std::size_t n = spec.size();
  CoxeterMatrix matrix(n, std::vector<unsigned>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) matrix[i][j] = i == j ? 1 : (spec.independent(i, j) ? 2 : 0);
  }
  return GroupSpec::coxeter(GroupKind::even_coxeter, spec.letters(), std::move(matrix));
}

namespace {

Letter parse_token(std::string_view token, const GroupSpec& spec) {
  bool inverted = false;
  if (!token.empty() && token.back() == '\'') {
    inverted = true;
    token.remove_suffix(1);
  }
  if (inverted && !has_inverse_letters(spec.kind())) {
    throw ParseError("inverse marker on '" + std::string(token) + "' needs kind graph or fim");
  }
  const auto index = spec.index_of(token);
  if (!index) throw ParseError("unknown letter '" + std::string(token) + "'");
  return Letter{*index, inverted};
}

}  // namespace

Word parse_word(std::string_view text, const GroupSpec& spec) {
  text = trim(text);
  Word word;
  if (text.empty() || (text == "1" && !spec.index_of("1"))) return word;

  const bool dotted = text.find('.') != std::string_view::npos;
  const bool single_chars = std::all_of(spec.letters().begin(), spec.letters().end(),
                                        [](const std::string& l) { return l.size() == 1; });
  if (dotted || !single_chars) {
    std::size_t pos = 0;
    while (true) {
      const auto dot = text.find('.', pos);
      const auto token = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
      if (token.empty()) throw ParseError("empty letter in word '" + std::string(text) + "'");
      word.push_back(parse_token(token, spec));
      if (dot == std::string_view::npos) break;
      pos = dot + 1;
    }
    return word;
  }

  for (std::size_t i = 0; i < text.size(); ++i) {
    std::size_t len = 1;
    if (i + 1 < text.size() && text[i + 1] == '\'') len = 2;
    word.push_back(parse_token(text.substr(i, len), spec));
    i += len - 1;
  }
  return word;
}

std::string render_word(const Word& word, const GroupSpec& spec) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += '.';
    out += spec.name(word[i].index);
    if (word[i].inverted) out += '\'';
  }
  return out;
}

Word inverse_word(const Word& word, const GroupSpec& spec) {
  Word out(word.rbegin(), word.rend());
  if (has_inverse_letters(spec.kind())) {
    for (auto& l : out) l.inverted = !l.inverted;
  }
  return out;
}

ExtendedIndependence extend_independence(const GroupSpec& spec) {
  if (!has_inverse_letters(spec.kind())) throw KindError("extend_independence needs kind graph or fim");
  const std::size_t n = spec.size();
  std::vector<std::pair<Symbol, Symbol>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!spec.independent(i, j)) continue;
      for (Symbol x : {0U, 1U}) {
        for (Symbol y : {0U, 1U}) {
          pairs.emplace_back(static_cast<Symbol>(2 * i) + x, static_cast<Symbol>(2 * j) + y);
        }
      }
    }
  }
  return ExtendedIndependence{spec, IndependenceAlphabet(2 * n, pairs)};
}

SymbolWord to_symbols(const Word& word, const GroupSpec& spec) {
  SymbolWord out;
  out.reserve(word.size());
  const bool gamma = has_inverse_letters(spec.kind());
  for (const auto& l : word) {
    out.push_back(gamma ? ExtendedIndependence::symbol(l) : static_cast<Symbol>(l.index));
  }
  return out;
}

Word from_symbols(const SymbolWord& symbols, const GroupSpec& spec) {
  Word out;
  out.reserve(symbols.size());
  const bool gamma = has_inverse_letters(spec.kind());
  for (Symbol s : symbols) out.push_back(gamma ? ExtendedIndependence::letter(s) : Letter{s, false});
  return out;
}

}  // namespace coxtrace
