#include "ptlattice_cli/quiver_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <variant>

#include "ptlattice/error.hpp"

namespace ptl::cli {

namespace {

struct Value;
using Array = std::vector<Value>;
using Table = std::vector<std::pair<std::string, Value>>;

struct Value {
  std::variant<std::string, long long, bool, std::shared_ptr<Array>, std::shared_ptr<Table>> data;
  std::size_t line = 0;
  std::size_t col = 0;
};

class Parser {
 public:
  Parser(std::string_view text, std::string_view origin) : s_(text), origin_(origin) {}

  // Top-level keys go into "", [name] sections into their own table.
  std::map<std::string, Table> parse() {
    std::map<std::string, Table> out;
    std::string section;
    out[section];
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        ++pos_;
        ++col_;
        skip_spaces();
        section = parse_key();
        skip_spaces();
        expect(']');
        if (out.count(section)) error("duplicate table [" + section + "]");
        out[section];
      } else {
        const std::size_t kl = line_;
        const std::size_t kc = col_;
        std::string key = parse_key();
        skip_spaces();
        expect('=');
        skip_spaces();
        Value v = parse_value();
        for (const auto& [k, _] : out[section]) {
          if (k == key) error_at(kl, kc, "duplicate key '" + key + "'");
        }
        out[section].emplace_back(std::move(key), std::move(v));
      }
      skip_spaces();
      skip_comment();
      if (!eof() && peek() != '\n') error("expected end of line");
    }
    return out;
  }

  [[noreturn]] void error_at(std::size_t line, std::size_t col, const std::string& msg) const {
    throw Error(Errc::ParseError, std::string(origin_) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { error_at(line_, col_, msg); }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_spaces() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
  }
  void skip_comment() {
    if (!eof() && peek() == '#')
      while (!eof() && peek() != '\n') advance();
  }
  void skip_blank_lines() {
    while (!eof()) {
      skip_spaces();
      skip_comment();
      if (!eof() && peek() == '\n') {
        advance();
      } else {
        break;
      }
    }
  }
  // Whitespace, newlines and comments, as allowed inside arrays.
  void skip_all() {
    while (!eof()) {
      skip_spaces();
      skip_comment();
      if (!eof() && peek() == '\n') {
        advance();
      } else {
        return;
      }
    }
  }
  void expect(char c) {
    if (eof() || peek() != c) error(std::string("expected '") + c + "'");
    advance();
  }

  std::string parse_key() {
    if (!eof() && peek() == '"') return parse_string();
    std::string key;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
      key += peek();
      advance();
    }
    if (key.empty()) error("expected a key");
    return key;
  }

  std::string parse_string() {
    expect('"');
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') error("unterminated string");
      const char c = peek();
      advance();
      if (c == '"') return out;
      if (c == '\\') {
        if (eof()) error("unterminated escape");
        const char e = peek();
        advance();
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: error(std::string("unsupported escape \\") + e);
        }
      } else {
        out += c;
      }
    }
  }

  Value parse_value() {
    Value v;
    v.line = line_;
    v.col = col_;
    if (eof()) error("expected a value");
    const char c = peek();
    if (c == '"') {
      v.data = parse_string();
    } else if (c == '[') {
      advance();
      auto arr = std::make_shared<Array>();
      skip_all();
      while (!eof() && peek() != ']') {
        arr->push_back(parse_value());
        skip_all();
        if (!eof() && peek() == ',') {
          advance();
          skip_all();
        } else {
          break;
        }
      }
      expect(']');
      v.data = arr;
    } else if (c == '{') {
      advance();
      auto tbl = std::make_shared<Table>();
      skip_spaces();
      while (!eof() && peek() != '}') {
        std::string key = parse_key();
        skip_spaces();
        expect('=');
        skip_spaces();
        tbl->emplace_back(std::move(key), parse_value());
        skip_spaces();
        if (!eof() && peek() == ',') {
          advance();
          skip_spaces();
        } else {
          break;
        }
      }
      expect('}');
      v.data = tbl;
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      if (c == '-' || c == '+') {
        digits += c;
        advance();
      }
      while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
        if (peek() != '_') digits += peek();
        advance();
      }
      if (digits.empty() || digits == "-" || digits == "+") error("malformed integer");
      try {
        v.data = std::stoll(digits);
      } catch (const std::exception&) {
        error("integer out of range");
      }
    } else if (s_.substr(pos_, 4) == "true") {
      for (int i = 0; i < 4; ++i) advance();
      v.data = true;
    } else if (s_.substr(pos_, 5) == "false") {
      for (int i = 0; i < 5; ++i) advance();
      v.data = false;
    } else {
      error(std::string("unexpected character '") + c + "'");
    }
    return v;
  }

  std::string_view s_;
  std::string_view origin_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Reader {
 public:
  explicit Reader(const Parser& p) : p_(p) {}

  const std::string& str(const Value& v, const std::string& what) const {
    if (auto* s = std::get_if<std::string>(&v.data)) return *s;
    p_.error_at(v.line, v.col, what + " must be a string");
  }
  long long integer(const Value& v, const std::string& what) const {
    if (auto* i = std::get_if<long long>(&v.data)) return *i;
    p_.error_at(v.line, v.col, what + " must be an integer");
  }
  const Array& array(const Value& v, const std::string& what) const {
    if (auto* a = std::get_if<std::shared_ptr<Array>>(&v.data)) return **a;
    p_.error_at(v.line, v.col, what + " must be an array");
  }
  const Table& table(const Value& v, const std::string& what) const {
    if (auto* t = std::get_if<std::shared_ptr<Table>>(&v.data)) return **t;
    p_.error_at(v.line, v.col, what + " must be an inline table");
  }
  std::vector<std::string> strings(const Value& v, const std::string& what) const {
    std::vector<std::string> out;
    for (const auto& x : array(v, what)) out.push_back(str(x, what + " entry"));
    return out;
  }
  [[noreturn]] void unknown(const Value& v, const std::string& key) const {
    p_.error_at(v.line, v.col, "unknown key '" + key + "'");
  }

 private:
  const Parser& p_;
};

}  // namespace

AlgebraPtr QuiverFile::algebra() const {
  Quiver q;
  for (const auto& v : vertices) {
    if (q.find_vertex(v)) throw Error(Errc::InvalidQuiver, "duplicate vertex '" + v + "'");
    q.add_vertex(v);
  }
  for (const auto& a : arrows) {
    if (q.find_arrow(a.name)) throw Error(Errc::InvalidQuiver, "duplicate arrow '" + a.name + "'");
    q.add_arrow(a.name, a.source, a.target);
  }
  return make_algebra(q, relations);
}

QuiverFile parse_quiver_file(std::string_view text, std::string_view origin) {
  Parser parser(text, origin);
  const auto sections = parser.parse();
  Reader r(parser);
  QuiverFile out;
  bool have_vertices = false;
  for (const auto& [section, table] : sections) {
    if (section.empty()) {
      for (const auto& [key, v] : table) {
        if (key == "name") {
          out.name = r.str(v, "name");
        } else if (key == "vertices") {
          out.vertices = r.strings(v, "vertices");
          have_vertices = true;
        } else if (key == "arrows") {
          for (const auto& item : r.array(v, "arrows")) {
            ArrowSpec a;
            for (const auto& [k, x] : r.table(item, "arrow")) {
              if (k == "name") {
                a.name = r.str(x, "arrow name");
              } else if (k == "source") {
                a.source = r.str(x, "arrow source");
              } else if (k == "target") {
                a.target = r.str(x, "arrow target");
              } else {
                r.unknown(x, k);
              }
            }
            if (a.name.empty() || a.source.empty() || a.target.empty()) {
              parser.error_at(item.line, item.col, "arrow needs name, source and target");
            }
            out.arrows.push_back(std::move(a));
          }
        } else if (key == "relations") {
          for (const auto& rel : r.array(v, "relations")) out.relations.push_back(r.strings(rel, "relation"));
        } else {
          r.unknown(v, key);
        }
      }
    } else if (section == "options") {
      for (const auto& [key, v] : table) {
        if (key == "field") {
          out.options.field = r.str(v, "field");
          if (out.options.field != "q" && out.options.field != "gf") {
            parser.error_at(v.line, v.col, "field must be \"q\" or \"gf\"");
          }
        } else if (key == "prime") {
          out.options.prime = static_cast<int>(r.integer(v, "prime"));
        } else if (key == "dim_bound") {
          const long long b = r.integer(v, "dim_bound");
          if (b < 1) parser.error_at(v.line, v.col, "dim_bound must be positive");
          out.options.dim_bound = static_cast<std::size_t>(b);
        } else {
          r.unknown(v, key);
        }
      }
    } else {
      throw Error(Errc::ParseError, std::string(origin) + ": unknown table [" + section + "]");
    }
  }
  if (!have_vertices) throw Error(Errc::ParseError, std::string(origin) + ": missing key 'vertices'");
  return out;
}

QuiverFile load_quiver_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  QuiverFile f = parse_quiver_file(buf.str(), path);
  if (f.name.empty()) {
    const auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = base.find_last_of('.');
    f.name = dot == std::string::npos ? base : base.substr(0, dot);
  }
  return f;
}

}  // namespace ptl::cli
