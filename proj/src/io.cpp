#include "forestdyn/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "forestdyn/error.hpp"

namespace forestdyn {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_decimal(const std::string& s) {
  return !s.empty() && s.size() < 10 &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Vertex tokens -> dense indices, either numerically or by first sighting.
class VertexTable {
 public:
  void see(const Token& t) { seen_.push_back(t); }

  // Consecutive seen tokens pair up into edges.
  Graph build(std::optional<std::size_t> declared) const {
    const bool numeric =
        std::all_of(seen_.begin(), seen_.end(), [](const Token& t) { return is_decimal(t.text); });
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> names;
    std::size_t order = 0;
    std::vector<std::size_t> index(seen_.size());
    if (numeric) {
      for (std::size_t i = 0; i < seen_.size(); ++i) {
        index[i] = std::stoul(seen_[i].text);
        order = std::max(order, index[i] + 1);
      }
    } else {
      std::map<std::string, std::size_t> ids;
      for (std::size_t i = 0; i < seen_.size(); ++i) {
        auto [it, fresh] = ids.emplace(seen_[i].text, names.size());
        if (fresh) names.push_back(seen_[i].text);
        index[i] = it->second;
      }
      order = names.size();
    }
    if (declared) {
      if (*declared < order) {
        const Token& t = seen_.empty() ? Token{"", 1, 1} : seen_.back();
        throw ParseError("declared " + std::to_string(*declared) + " vertices but " +
                             std::to_string(order) + " are used",
                         t.line, t.column);
      }
      if (!numeric)
        for (std::size_t v = order; v < *declared; ++v) names.push_back(std::to_string(v));
      order = *declared;
    }
    for (std::size_t i = 0; i + 1 < seen_.size(); i += 2) {
      if (index[i] == index[i + 1])
        throw ParseError("loop edge at vertex '" + seen_[i].text + "'", seen_[i].line,
                         seen_[i].column);
      edges.emplace_back(index[i], index[i + 1]);
    }
    return build_graph(order, edges, numeric ? std::vector<std::string>{} : names);
  }

  std::vector<Token> seen_;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  VertexTable table;
  std::optional<std::size_t> declared;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
    }
    if (!tokens.empty() && tokens[0].text[0] != '#') {
      if (tokens[0].text == "vertices") {
        if (tokens.size() != 2 || !is_decimal(tokens[1].text))
          throw ParseError("expected 'vertices N'", line_no,
                           tokens.size() > 1 ? tokens[1].column : tokens[0].column);
        if (declared) throw ParseError("duplicate 'vertices' line", line_no, 1);
        declared = std::stoul(tokens[1].text);
      } else if (tokens.size() != 2) {
        const Token& bad = tokens.size() > 2 ? tokens[2] : tokens[0];
        throw ParseError("expected two vertex tokens per line", line_no,
                         tokens.size() > 2 ? bad.column : bad.column + bad.text.size());
      } else {
        table.see(tokens[0]);
        table.see(tokens[1]);
      }
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return table.build(declared);
}

namespace {

class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  // Empty text at end of input.
  Token next() {
    skip();
    if (pos_ >= text_.size()) return {"", line_, col_};
    const std::size_t line = line_, col = col_;
    const char c = text_[pos_];
    if (c == '"') {
      advance();
      std::string out;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
        out.push_back(text_[pos_]);
        advance();
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated string", line, col);
      advance();
      return {"\"" + out, line, col};
    }
    if (c == '-' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == '-' || text_[pos_ + 1] == '>')) {
      const bool directed = text_[pos_ + 1] == '>';
      advance();
      advance();
      if (directed) throw ParseError("directed edge '->' is not supported", line, col);
      return {"--", line, col};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
      std::string out;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '.' || (text_[pos_] == '-' && out.empty()))) {
        out.push_back(text_[pos_]);
        advance();
      }
      return {out, line, col};
    }
    advance();
    return {std::string(1, c), line, col};
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#' || (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        advance();
        advance();
        while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) advance();
        if (pos_ + 1 >= text_.size()) throw ParseError("unterminated comment", line_, col_);
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool is_identifier(const Token& t) {
  if (t.text.empty()) return false;
  if (t.text[0] == '"') return true;
  const unsigned char c = static_cast<unsigned char>(t.text[0]);
  return std::isalnum(c) || c == '_' || c == '.' || c == '-';
}

std::string identifier_text(const Token& t) { return t.text[0] == '"' ? t.text.substr(1) : t.text; }

}  // namespace

Graph parse_dot(std::string_view text) {
  DotLexer lex(text);
  Token t = lex.next();
  if (t.text == "strict") t = lex.next();
  if (t.text == "digraph") throw ParseError("directed graphs are not supported", t.line, t.column);
  if (t.text != "graph") throw ParseError("expected 'graph'", t.line, t.column);
  t = lex.next();
  if (t.text != "{") {
    if (!is_identifier(t)) throw ParseError("expected graph name or '{'", t.line, t.column);
    t = lex.next();
  }
  if (t.text != "{") throw ParseError("expected '{'", t.line, t.column);

  // Names in first-seen order; DOT identifiers are always names.
  std::map<std::string, std::size_t> ids;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto id_of = [&](const Token& tok) {
    auto [it, fresh] = ids.emplace(identifier_text(tok), names.size());
    if (fresh) names.push_back(identifier_text(tok));
    return it->second;
  };
  auto skip_attributes = [&](Token& tok) {
    while (tok.text == "[") {
      do {
        tok = lex.next();
        if (tok.text.empty()) throw ParseError("unterminated attribute list", tok.line, tok.column);
      } while (tok.text != "]");
      tok = lex.next();
    }
  };

  t = lex.next();
  while (true) {
    if (t.text.empty()) throw ParseError("missing '}'", t.line, t.column);
    if (t.text == "}") break;
    if (t.text == ";" || t.text == ",") {
      t = lex.next();
      continue;
    }
    if (t.text == "node" || t.text == "edge" || t.text == "graph") {
      t = lex.next();
      skip_attributes(t);
      continue;
    }
    if (!is_identifier(t)) throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
    Token first = t;
    t = lex.next();
    if (t.text == "=") {  // graph attribute a = b
      t = lex.next();
      if (!is_identifier(t)) throw ParseError("expected attribute value", t.line, t.column);
      t = lex.next();
      continue;
    }
    std::size_t prev = id_of(first);
    while (t.text == "--") {
      Token nxt = lex.next();
      if (!is_identifier(nxt)) throw ParseError("expected vertex after '--'", nxt.line, nxt.column);
      const std::size_t cur = id_of(nxt);
      if (cur == prev)
        throw ParseError("loop edge at vertex '" + identifier_text(nxt) + "'", nxt.line, nxt.column);
      edges.emplace_back(prev, cur);
      prev = cur;
      t = lex.next();
    }
    skip_attributes(t);
  }
  Token tail = lex.next();
  if (!tail.text.empty()) throw ParseError("trailing input after '}'", tail.line, tail.column);
  return build_graph(names.size(), edges, names);
}

Graph parse_graph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    } else if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      break;
    }
  }
  const auto rest = text.substr(i);
  auto starts_word = [&](std::string_view w) {
    return rest.substr(0, w.size()) == w &&
           (rest.size() == w.size() || !std::isalnum(static_cast<unsigned char>(rest[w.size()])));
  };
  if (starts_word("graph") || starts_word("strict") || starts_word("digraph")) return parse_dot(text);
  return parse_edge_list(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << g.name_of(e.u) << ' ' << g.name_of(e.v) << '\n';
  return out.str();
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string write_dot(const Graph& g, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << dot_quote(g.name_of(v));
    if (v < labels.size()) out << " [label=" << dot_quote(labels[v]) << "]";
    out << ";\n";
  }
  for (const Edge& e : g.edges())
    out << "  " << dot_quote(g.name_of(e.u)) << " -- " << dot_quote(g.name_of(e.v)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string format_edge_indices(const EdgeSubset& s) {
  std::ostringstream out;
  bool first = true;
  for (EdgeIndex e : s.indices()) {
    if (!first) out << ' ';
    out << e;
    first = false;
  }
  return out.str();
}

std::string format_edge_names(const Graph& g, const EdgeSubset& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (EdgeIndex e : s.indices()) {
    if (!first) out << ", ";
    out << g.name_of(g.edge(e).u) << '-' << g.name_of(g.edge(e).v);
    first = false;
  }
  out << '}';
  return out.str();
}

std::string write_family(const ForestFamily& family) {
  std::string out;
  for (const auto& f : family.members) {
    out += format_edge_indices(f);
    out += '\n';
  }
  return out;
}

}  // namespace forestdyn
