#include "crn/network.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace crn {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

// ---------------------------------------------------------------------------
// SpeciesTable / Complex

SpeciesTable::SpeciesTable(std::vector<std::string> names)
{
  for (auto& n : names) {
    if (find(n)) throw NetworkError("duplicate species name '" + n + "'");
    intern(n);
  }
}

int SpeciesTable::intern(const std::string& name)
{
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  const int id = size();
  names_.push_back(name);
  index_.emplace(name, id);
  return id;
}

std::optional<int> SpeciesTable::find(std::string_view name) const
{
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

SpeciesSet SpeciesTable::resolve(const std::vector<std::string>& names) const
{
  std::vector<int> ids;
  for (const auto& n : names) {
    auto id = find(n);
    if (!id) throw std::invalid_argument("unknown species '" + n + "'");
    ids.push_back(*id);
  }
  return make_species_set(std::move(ids));
}

std::string SpeciesTable::format(const SpeciesSet& set, std::string_view sep) const
{
  std::string out;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += sep;
    out += name(set[k]);
  }
  return out;
}

bool Complex::is_zero() const
{
  return std::all_of(exponents.begin(), exponents.end(), [](std::uint64_t e) { return e == 0; });
}

SpeciesSet Complex::support() const
{
  SpeciesSet out;
  for (std::size_t a = 0; a < exponents.size(); ++a) {
    if (exponents[a] > 0) out.push_back(static_cast<int>(a));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ReactionNetwork

ReactionNetwork::ReactionNetwork(SpeciesTable species, std::vector<Complex> complexes, std::vector<Reaction> reactions)
    : species_(std::move(species)), complexes_(std::move(complexes)), reactions_(std::move(reactions))
{
  if (reactions_.empty()) throw NetworkError("empty network: no reactions");
  const auto s = static_cast<std::size_t>(species_.size());
  std::set<std::vector<std::uint64_t>> seen_complexes;
  for (const auto& c : complexes_) {
    if (c.exponents.size() != s) throw NetworkError("complex has wrong dimension");
    if (!seen_complexes.insert(c.exponents).second) throw NetworkError("duplicate complex");
  }
  std::vector<bool> used(complexes_.size(), false);
  std::set<std::pair<int, int>> edges;
  const int n = num_complexes();
  for (const auto& r : reactions_) {
    if (r.source < 0 || r.source >= n || r.target < 0 || r.target >= n) {
      throw NetworkError("reaction refers to an unknown complex");
    }
    if (r.source == r.target) throw NetworkError("reaction with identical source and target");
    if (!edges.emplace(r.source, r.target).second) throw NetworkError("duplicate reaction");
    used[static_cast<std::size_t>(r.source)] = true;
    used[static_cast<std::size_t>(r.target)] = true;
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) throw NetworkError("complex " + std::to_string(i) + " appears in no reaction");
  }
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Ident, Int, Plus, Arrow, BiArrow, Semi, Eq, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view line, int line_no)
{
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::Int, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (line.substr(i, 3) == "<->") {
      out.push_back({Tok::BiArrow, "<->", col});
      i += 3;
    } else if (line.substr(i, 2) == "->") {
      out.push_back({Tok::Arrow, "->", col});
      i += 2;
    } else if (c == '+') {
      out.push_back({Tok::Plus, "+", col}); ++i;
    } else if (c == ';') {
      out.push_back({Tok::Semi, ";", col}); ++i;
    } else if (c == '=') {
      out.push_back({Tok::Eq, "=", col}); ++i;
    } else if (c == ',') {
      out.push_back({Tok::Comma, ",", col}); ++i;
    } else {
      throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

struct Term {
  std::string species;
  std::uint64_t coefficient;
};

struct ParsedReaction {
  int line;
  std::vector<Term> lhs;
  std::vector<Term> rhs;
  bool reversible;
  std::optional<std::string> label;
};

class LineParser {
public:
  LineParser(std::vector<Token> tokens, int line_no) : toks_(std::move(tokens)), line_(line_no) {}

  std::vector<std::string> species_declaration()
  {
    next();  // 'species'
    std::vector<std::string> names;
    names.push_back(expect(Tok::Ident, "species name").text);
    while (peek().kind == Tok::Comma) {
      next();
      names.push_back(expect(Tok::Ident, "species name after ','").text);
    }
    expect(Tok::End, "end of line");
    return names;
  }

  ParsedReaction reaction()
  {
    ParsedReaction r{line_, {}, {}, false, std::nullopt};
    r.lhs = complex();
    const Token& arrow = peek();
    if (arrow.kind != Tok::Arrow && arrow.kind != Tok::BiArrow) fail(arrow, "expected '->' or '<->'");
    r.reversible = arrow.kind == Tok::BiArrow;
    next();
    r.rhs = complex();
    if (peek().kind == Tok::Semi) {
      next();
      const Token& key = expect(Tok::Ident, "rate label key 'k'");
      if (key.text != "k") fail(key, "expected rate label key 'k'");
      expect(Tok::Eq, "'=' after 'k'");
      r.label = expect(Tok::Ident, "rate label identifier").text;
    }
    expect(Tok::End, "end of line");
    return r;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& message) const
  {
    const std::string found = at.kind == Tok::End ? "end of line" : "'" + at.text + "'";
    throw ParseError(line_, at.column, message + ", found " + found);
  }

  const Token& expect(Tok kind, const std::string& what)
  {
    if (peek().kind != kind) fail(peek(), "expected " + what);
    return next();
  }

  std::vector<Term> complex()
  {
    std::vector<Term> terms;
    if (peek().kind == Tok::Int && toks_[pos_ + 1].kind != Tok::Ident && peek().text.find_first_not_of('0') == std::string::npos) {
      next();
      return terms;  // zero complex
    }
    terms.push_back(term());
    while (peek().kind == Tok::Plus) {
      const Token& plus = next();
      if (peek().kind != Tok::Ident && peek().kind != Tok::Int) {
        throw ParseError(line_, plus.column, "dangling '+': expected a species term after '+'");
      }
      terms.push_back(term());
    }
    return terms;
  }

  Term term()
  {
    std::uint64_t coefficient = 1;
    if (peek().kind == Tok::Int) {
      const Token& num = next();
      try {
        coefficient = std::stoull(num.text);
      } catch (const std::out_of_range&) {
        throw ParseError(line_, num.column, "stoichiometric coefficient does not fit in 64 bits");
      }
      if (coefficient == 0) throw ParseError(line_, num.column, "stoichiometric coefficient must be at least 1");
    }
    const Token& name = expect(Tok::Ident, "species name");
    return {name.text, coefficient};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

std::vector<std::uint64_t> to_exponents(const std::vector<Term>& terms, const SpeciesTable& species, int line)
{
  std::vector<std::uint64_t> e(static_cast<std::size_t>(species.size()), 0);
  for (const auto& t : terms) {
    auto& slot = e[static_cast<std::size_t>(*species.find(t.species))];
    if (slot > std::numeric_limits<std::uint64_t>::max() - t.coefficient) {
      throw ParseError(line, 1, "stoichiometric coefficient overflow for '" + t.species + "'");
    }
    slot += t.coefficient;
  }
  return e;
}

}  // namespace

ReactionNetwork parse_network(std::string_view text)
{
  std::vector<ParsedReaction> parsed;
  std::vector<std::pair<int, std::vector<std::string>>> declarations;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = tokenize(line, line_no);
    if (tokens.front().kind != Tok::End) {
      const bool is_decl = tokens.size() >= 3 && tokens[0].kind == Tok::Ident && tokens[0].text == "species" &&
                           tokens[1].kind == Tok::Ident &&
                           std::none_of(tokens.begin(), tokens.end(), [](const Token& t) {
                             return t.kind == Tok::Arrow || t.kind == Tok::BiArrow || t.kind == Tok::Plus;
                           });
      LineParser p(std::move(tokens), line_no);
      if (is_decl) {
        declarations.emplace_back(line_no, p.species_declaration());
      } else {
        parsed.push_back(p.reaction());
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }

  SpeciesTable species;
  for (const auto& [line, names] : declarations) {
    for (const auto& n : names) {
      if (species.find(n)) throw ParseError(line, 1, "species '" + n + "' declared twice");
      species.intern(n);
    }
  }
  for (const auto& r : parsed) {
    for (const auto& t : r.lhs) species.intern(t.species);
    for (const auto& t : r.rhs) species.intern(t.species);
  }
  if (parsed.empty()) throw ParseError(line_no, 1, "empty network: no reactions");

  std::vector<Complex> complexes;
  std::map<std::vector<std::uint64_t>, int> complex_index;
  auto intern_complex = [&](std::vector<std::uint64_t> e) {
    auto [it, inserted] = complex_index.emplace(e, static_cast<int>(complexes.size()));
    if (inserted) complexes.push_back(Complex{std::move(e)});
    return it->second;
  };

  std::vector<Reaction> reactions;
  std::set<std::pair<int, int>> edges;
  auto add_edge = [&](int line, int src, int tgt, std::optional<std::string> label) {
    if (src == tgt) throw ParseError(line, 1, "reaction has identical reactant and product complexes");
    if (!edges.emplace(src, tgt).second) throw ParseError(line, 1, "duplicate reaction");
    reactions.push_back(Reaction{src, tgt, std::move(label)});
  };
  for (const auto& r : parsed) {
    const int src = intern_complex(to_exponents(r.lhs, species, r.line));
    const int tgt = intern_complex(to_exponents(r.rhs, species, r.line));
    if (r.reversible) {
      add_edge(r.line, src, tgt, r.label ? std::optional(*r.label + "_fwd") : std::nullopt);
      add_edge(r.line, tgt, src, r.label ? std::optional(*r.label + "_rev") : std::nullopt);
    } else {
      add_edge(r.line, src, tgt, r.label);
    }
  }
  return ReactionNetwork(std::move(species), std::move(complexes), std::move(reactions));
}

ReactionNetwork load_network(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_network(buffer.str());
}

std::string format_complex(const ReactionNetwork& net, int complex_index)
{
  const auto& c = net.complex(complex_index);
  if (c.is_zero()) return "0";
  std::string out;
  for (int a = 0; a < net.num_species(); ++a) {
    const auto e = c.exponents[static_cast<std::size_t>(a)];
    if (e == 0) continue;
    if (!out.empty()) out += " + ";
    if (e > 1) out += std::to_string(e);
    out += net.species().name(a);
  }
  return out;
}

std::string format_reaction(const ReactionNetwork& net, int reaction_index)
{
  const auto& r = net.reaction(reaction_index);
  std::string out = format_complex(net, r.source) + " -> " + format_complex(net, r.target);
  if (r.rate_label) out += " ; k=" + *r.rate_label;
  return out;
}

std::string to_text(const ReactionNetwork& net)
{
  std::string out = "species ";
  for (int a = 0; a < net.num_species(); ++a) out += (a ? ", " : "") + net.species().name(a);
  out += "\n";
  for (int r = 0; r < net.num_reactions(); ++r) out += format_reaction(net, r) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Graph structure

namespace {

std::vector<std::vector<int>> canonical_partition(std::vector<std::vector<int>> blocks)
{
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return blocks;
}

}  // namespace

ConnectivityInfo connectivity(const ReactionNetwork& net)
{
  const int n = net.num_complexes();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n));
  for (const auto& r : net.reactions()) {
    out[static_cast<std::size_t>(r.source)].push_back(r.target);
    in[static_cast<std::size_t>(r.target)].push_back(r.source);
  }

  // Kosaraju: finishing order on G, then components on the reverse graph.
  std::vector<int> order;
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  for (int root = 0; root < n; ++root) {
    if (visited[static_cast<std::size_t>(root)]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    visited[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& succ = out[static_cast<std::size_t>(v)];
      if (next < succ.size()) {
        const int w = succ[next++];
        if (!visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> sccs;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[static_cast<std::size_t>(*it)] >= 0) continue;
    const int id = static_cast<int>(sccs.size());
    sccs.emplace_back();
    std::vector<int> stack{*it};
    comp[static_cast<std::size_t>(*it)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      sccs.back().push_back(v);
      for (int w : in[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
  }

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& r : net.reactions()) parent[static_cast<std::size_t>(find(r.source))] = find(r.target);
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < n; ++v) classes[find(v)].push_back(v);
  std::vector<std::vector<int>> linkage;
  for (auto& [root, members] : classes) linkage.push_back(std::move(members));

  ConnectivityInfo info;
  info.strong_components = canonical_partition(std::move(sccs));
  info.linkage_classes = canonical_partition(std::move(linkage));
  info.is_strongly_connected = info.strong_components.size() == 1;
  info.components_strongly_connected = info.strong_components.size() == info.linkage_classes.size();
  return info;
}

std::vector<std::vector<Integer>> stoichiometric_generators(const ReactionNetwork& net)
{
  std::vector<std::vector<Integer>> out;
  out.reserve(static_cast<std::size_t>(net.num_reactions()));
  for (const auto& r : net.reactions()) {
    const auto& ys = net.complex(r.source).exponents;
    const auto& yt = net.complex(r.target).exponents;
    std::vector<Integer> v(ys.size());
    for (std::size_t a = 0; a < ys.size(); ++a) {
      v[a] = Integer(static_cast<unsigned long>(yt[a])) - Integer(static_cast<unsigned long>(ys[a]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace crn
