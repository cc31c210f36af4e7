#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncpbw/errors.hpp"
#include "ncpbw/order.hpp"
#include "ncpbw/poly.hpp"
#include "ncpbw/quiver.hpp"
#include "ncpbw/scalar.hpp"

namespace ncpbw {

/// Input error with a 1-based position in the job file (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(position(line, column) + what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string position(std::size_t line, std::size_t column) {
    if (line == 0) return "";
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
  }
  std::size_t line_, column_;
};

enum class Command { gb, nf, pbw, gr, rees, hilbert, koszul };
enum class OutputFormat { json, text };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::gb: return "gb";
    case Command::nf: return "nf";
    case Command::pbw: return "pbw";
    case Command::gr: return "gr";
    case Command::rees: return "rees";
    case Command::hilbert: return "hilbert";
    case Command::koszul: return "koszul";
  }
  return "gb";
}

inline std::optional<Command> parse_command(std::string_view s) {
  for (Command c : {Command::gb, Command::nf, Command::pbw, Command::gr, Command::rees, Command::hilbert,
                    Command::koszul})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

struct Relation {
  std::string name;
  NcPoly poly;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct JobSpec {
  Quiver::Ptr algebra;
  std::vector<std::string> precedence;
  std::vector<Relation> relations;
  Command command = Command::gb;
  std::size_t degree_bound = 8;
  std::size_t max_pairs = 100000;
  OutputFormat output = OutputFormat::json;
  std::optional<NcPoly> element;  ///< for nf

  OrderSpec order() const { return OrderSpec(algebra, precedence); }

  IdealPresentation ideal() const {
    std::vector<NcPoly> gens;
    for (const auto& r : relations) gens.push_back(r.poly);
    return IdealPresentation(algebra, std::move(gens));
  }

  friend bool operator==(const JobSpec& a, const JobSpec& b) {
    return *a.algebra == *b.algebra && a.precedence == b.precedence && a.relations == b.relations &&
           a.command == b.command && a.degree_bound == b.degree_bound && a.max_pairs == b.max_pairs &&
           a.output == b.output && a.element == b.element;
  }
};

namespace detail {

/// Recursive descent over one relation expression.
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | primary
///   primary := rational | name | '(' expr ')'
class ExprParser {
 public:
  ExprParser(const Quiver::Ptr& algebra, std::string_view text, std::size_t line, std::size_t column)
      : alg_(algebra), text_(text), line_(line), column_(column) {}

  NcPoly parse() {
    NcPoly f = expr();
    skip_space();
    if (pos_ != text_.size()) fail(pos_, at_end_message());
    return f;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    throw ParseError(line_, column_ + at, what);
  }

  std::string at_end_message() const {
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
      return "expected '*' between factors";
    return std::string("unexpected character '") + c + "'";
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NcPoly expr() {
    NcPoly f = term();
    for (;;) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  NcPoly term() {
    NcPoly f = unary();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) return f;
      NcPoly g = unary();
      NcPoly fg = f * g;
      if (fg.is_zero() && !f.is_zero() && !g.is_zero())
        fail(at, "product of incomposable paths is identically zero");
      f = std::move(fg);
    }
  }

  NcPoly unary() {
    if (accept('-')) return -unary();
    return primary();
  }

  NcPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail(pos_, "unexpected end of expression");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NcPoly f = expr();
      if (!accept(')')) fail(pos_, "expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      try {
        return NcPoly::constant(alg_, parse_scalar(text_.substr(start, pos_ - start)));
      } catch (const Error& e) {
        fail(start, e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return name(std::string(text_.substr(start, pos_ - start)), start);
    }
    fail(pos_, std::string("unexpected character '") + c + "'");
  }

  NcPoly name(const std::string& n, std::size_t at) {
    if (auto a = alg_->find_arrow(n)) return NcPoly(alg_, alg_->generator(*a));
    if (n == "t") fail(at, "'t' is reserved for the homogenizing variable");
    if (!alg_->is_free() && n.size() > 1 && n[0] == 'e') {
      if (auto v = alg_->find_vertex(n.substr(1))) return NcPoly(alg_, alg_->idempotent(*v));
    }
    fail(at, "unknown generator '" + n + "'");
  }

  const Quiver::Ptr& alg_;
  std::string_view text_;
  std::size_t line_, column_;
  std::size_t pos_ = 0;
};

struct RawValue {
  std::vector<std::string> items;  // one item for a scalar string
  bool is_list = false;
  std::vector<std::size_t> columns;  // 1-based column of each item's first character
};

struct RawEntry {
  std::string key;
  RawValue value;
  std::size_t line;
};

inline bool is_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

/// Parses a double-quoted string starting at s[i] == '"'; returns the content
/// and advances i past the closing quote.
inline std::string quoted(const std::string& s, std::size_t& i, std::size_t line) {
  const std::size_t open = i;
  std::string out;
  for (++i; i < s.size(); ++i) {
    if (s[i] == '"') {
      ++i;
      return out;
    }
    if (s[i] == '\\') {
      if (i + 1 >= s.size()) break;
      const char e = s[++i];
      if (e != '"' && e != '\\') throw ParseError(line, i + 1, std::string("unsupported escape '\\") + e + "'");
      out += e;
    } else {
      out += s[i];
    }
  }
  throw ParseError(line, open + 1, "unterminated string");
}

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline void expect_line_end(const std::string& s, std::size_t i, std::size_t line) {
  skip_ws(s, i);
  if (i < s.size() && s[i] != '#') throw ParseError(line, i + 1, "unexpected text after value");
}

inline RawValue parse_value(const std::string& s, std::size_t& i, std::size_t line) {
  RawValue v;
  skip_ws(s, i);
  if (i < s.size() && s[i] == '"') {
    v.columns.push_back(i + 2);
    v.items.push_back(quoted(s, i, line));
    return v;
  }
  if (i < s.size() && s[i] == '[') {
    v.is_list = true;
    ++i;
    skip_ws(s, i);
    if (i < s.size() && s[i] == ']') {
      ++i;
      return v;
    }
    for (;;) {
      skip_ws(s, i);
      if (i >= s.size() || s[i] != '"') throw ParseError(line, i + 1, "expected a quoted string in list");
      v.columns.push_back(i + 2);
      v.items.push_back(quoted(s, i, line));
      skip_ws(s, i);
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ']') {
        ++i;
        return v;
      }
      throw ParseError(line, i + 1, "expected ',' or ']'");
    }
  }
  throw ParseError(line, i + 1, "expected a quoted string or a list of quoted strings");
}

inline const RawEntry* find_entry(const std::vector<RawEntry>& entries, std::string_view key) {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

inline const RawEntry& require_entry(const std::vector<RawEntry>& entries, std::string_view key,
                                     std::string_view section) {
  if (auto e = find_entry(entries, key)) return *e;
  throw ParseError(0, 0, "missing '" + std::string(key) + "' in [" + std::string(section) + "]");
}

inline const std::string& scalar_value(const RawEntry& e) {
  if (e.value.is_list) throw ParseError(e.line, 1, "'" + e.key + "' must be a string");
  return e.value.items.front();
}

inline const std::vector<std::string>& list_value(const RawEntry& e) {
  if (!e.value.is_list) throw ParseError(e.line, 1, "'" + e.key + "' must be a list");
  return e.value.items;
}

inline void check_keys(const std::vector<RawEntry>& entries, std::initializer_list<std::string_view> allowed,
                       std::string_view section) {
  for (const auto& e : entries) {
    bool ok = false;
    for (auto a : allowed) ok = ok || e.key == a;
    if (!ok) throw ParseError(e.line, 1, "unknown key '" + e.key + "' in [" + std::string(section) + "]");
  }
}

inline bool valid_name(const std::string& n) {
  if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) return false;
  for (char c : n)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline Quiver::Ptr build_algebra(const std::vector<RawEntry>& entries) {
  const auto& type_entry = require_entry(entries, "type", "algebra");
  const std::string& type = scalar_value(type_entry);
  auto reserved = [](const RawEntry& e, std::size_t k, const std::string& name) {
    if (name == "t") throw ParseError(e.line, e.value.columns[k], "'t' is reserved for the homogenizing variable");
  };
  if (type == "free") {
    check_keys(entries, {"type", "generators"}, "algebra");
    const auto& gens_entry = require_entry(entries, "generators", "algebra");
    const auto& gens = list_value(gens_entry);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!valid_name(gens[k]))
        throw ParseError(gens_entry.line, gens_entry.value.columns[k], "generator name '" + gens[k] + "' is not an identifier");
      reserved(gens_entry, k, gens[k]);
    }
    try {
      return Quiver::make_free(gens);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(gens_entry.line, 1, e.what());
    }
  }
  if (type == "path") {
    check_keys(entries, {"type", "vertices", "arrows"}, "algebra");
    const auto& vert_entry = require_entry(entries, "vertices", "algebra");
    const auto& arrow_entry = require_entry(entries, "arrows", "algebra");
    const auto& vertices = list_value(vert_entry);
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      bool ok = !vertices[k].empty();
      for (char c : vertices[k]) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
      if (!ok) throw ParseError(vert_entry.line, vert_entry.value.columns[k], "vertex name '" + vertices[k] + "' must be alphanumeric");
    }
    std::vector<Arrow> arrows;
    const auto& specs = list_value(arrow_entry);
    for (std::size_t k = 0; k < specs.size(); ++k) {
      const std::string& s = specs[k];
      const auto colon = s.find(':');
      const auto arrow = s.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        throw ParseError(arrow_entry.line, arrow_entry.value.columns[k],
                         "arrow '" + s + "' must have the form name:source->target");
      const std::string name = s.substr(0, colon);
      auto vertex = [&](const std::string& v) {
        for (VertexId i = 0; i < vertices.size(); ++i)
          if (vertices[i] == v) return i;
        throw ParseError(arrow_entry.line, arrow_entry.value.columns[k],
                         "arrow '" + name + "' references undeclared vertex '" + v + "'");
      };
      Arrow a{name, vertex(s.substr(colon + 1, arrow - colon - 1)), vertex(s.substr(arrow + 2))};
      if (!valid_name(a.name))
        throw ParseError(arrow_entry.line, arrow_entry.value.columns[k], "arrow name '" + a.name + "' is not an identifier");
      reserved(arrow_entry, k, a.name);
      if (a.name.size() > 1 && a.name[0] == 'e')
        for (const auto& v : vertices)
          if (a.name.substr(1) == v)
            throw ParseError(arrow_entry.line, arrow_entry.value.columns[k],
                             "arrow name '" + a.name + "' clashes with the idempotent of vertex " + v);
      arrows.push_back(std::move(a));
    }
    try {
      return Quiver::make_path(vertices, std::move(arrows));
    } catch (const Error& e) {
      throw ParseError(arrow_entry.line, 1, e.what());
    }
  }
  throw ParseError(type_entry.line, type_entry.value.columns[0],
                   "algebra type must be \"free\" or \"path\", got \"" + type + "\"");
}

}  // namespace detail

/// Parses an expression over the given algebra. `line` and `column` locate
/// its first character in the enclosing file (1-based; 0 when standalone).
inline NcPoly parse_expression(const Quiver::Ptr& algebra, std::string_view text, std::size_t line = 0,
                               std::size_t column = 1) {
  return detail::ExprParser(algebra, text, line, column).parse();
}

/// Parses a job file: sections [algebra], [order] and [relations] with
/// `key = "string"` or `key = ["a", "b"]` entries and '#' comments.
inline JobSpec parse_input(std::string_view text) {
  using detail::RawEntry;
  std::vector<RawEntry> algebra, order, relations;
  std::vector<RawEntry>* current = nullptr;
  std::vector<std::string> seen_sections;

  std::istringstream in{std::string(text)};
  std::string s;
  for (std::size_t line = 1; std::getline(in, s); ++line) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    std::size_t i = 0;
    detail::skip_ws(s, i);
    if (i == s.size() || s[i] == '#') continue;
    if (s[i] == '[') {
      const auto close = s.find(']', i);
      if (close == std::string::npos) throw ParseError(line, i + 1, "unterminated section header");
      const std::string name = s.substr(i + 1, close - i - 1);
      detail::expect_line_end(s, close + 1, line);
      for (const auto& prev : seen_sections)
        if (prev == name) throw ParseError(line, i + 1, "duplicate section [" + name + "]");
      seen_sections.push_back(name);
      if (name == "algebra") {
        current = &algebra;
      } else if (name == "order") {
        current = &order;
      } else if (name == "relations") {
        current = &relations;
      } else {
        throw ParseError(line, i + 1, "unknown section [" + name + "]");
      }
      continue;
    }
    if (!current) throw ParseError(line, i + 1, "entry outside of any section");
    const std::size_t key_start = i;
    while (i < s.size() && detail::is_key_char(s[i])) ++i;
    if (i == key_start) throw ParseError(line, i + 1, "expected a key");
    RawEntry entry{s.substr(key_start, i - key_start), {}, line};
    detail::skip_ws(s, i);
    if (i >= s.size() || s[i] != '=') throw ParseError(line, i + 1, "expected '='");
    ++i;
    entry.value = detail::parse_value(s, i, line);
    detail::expect_line_end(s, i, line);
    if (detail::find_entry(*current, entry.key))
      throw ParseError(line, key_start + 1, "duplicate key '" + entry.key + "'");
    current->push_back(std::move(entry));
  }

  JobSpec job;
  if (algebra.empty()) throw ParseError(0, 0, "missing [algebra] section");
  job.algebra = detail::build_algebra(algebra);

  detail::check_keys(order, {"scheme", "precedence"}, "order");
  if (auto e = detail::find_entry(order, "scheme")) {
    if (detail::scalar_value(*e) != "deglex")
      throw ParseError(e->line, e->value.columns[0], "unsupported order scheme \"" + e->value.items[0] + "\"");
  }
  if (auto e = detail::find_entry(order, "precedence")) {
    job.precedence = detail::list_value(*e);
  } else {
    for (ArrowId a = 0; a < job.algebra->arrow_count(); ++a) job.precedence.push_back(job.algebra->arrow(a).name);
  }
  try {
    (void)job.order();
  } catch (const Error& e) {
    const auto* p = detail::find_entry(order, "precedence");
    throw ParseError(p ? p->line : 0, 1, e.what());
  }

  if (relations.empty()) throw ParseError(0, 0, "no relations given");
  for (const auto& e : relations) {
    if (!detail::valid_name(e.key)) throw ParseError(e.line, 1, "relation name '" + e.key + "' is not an identifier");
    const std::string& expr = detail::scalar_value(e);
    NcPoly f = parse_expression(job.algebra, expr, e.line, e.value.columns[0]);
    if (f.is_zero()) throw ParseError(e.line, e.value.columns[0], "relation '" + e.key + "' is zero");
    job.relations.push_back({e.key, std::move(f)});
  }
  return job;
}

namespace detail {
inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string quote_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + quote(items[i]);
  return out + "]";
}
}  // namespace detail

/// Canonical job file for the algebra, order and relations of a job.
inline std::string render(const JobSpec& job) {
  const Quiver& q = *job.algebra;
  std::string out = "[algebra]\n";
  if (q.is_free()) {
    std::vector<std::string> gens;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) gens.push_back(q.arrow(a).name);
    out += "type = \"free\"\ngenerators = " + detail::quote_list(gens) + "\n";
  } else {
    std::vector<std::string> arrows;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arr = q.arrow(a);
      arrows.push_back(arr.name + ":" + q.vertices()[arr.source] + "->" + q.vertices()[arr.target]);
    }
    out += "type = \"path\"\nvertices = " + detail::quote_list(q.vertices()) + "\narrows = " +
           detail::quote_list(arrows) + "\n";
  }
  out += "\n[order]\nscheme = \"deglex\"\nprecedence = " + detail::quote_list(job.precedence) + "\n";
  out += "\n[relations]\n";
  const OrderSpec ord = job.order();
  for (const auto& r : job.relations) out += r.name + " = " + detail::quote(render(r.poly, ord)) + "\n";
  return out;
}

}  // namespace ncpbw
