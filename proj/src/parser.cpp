#include "hkr/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace hkr {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
  std::size_t offset = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    t.offset = i;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
                                 text[j] == '~' || text[j] == '\''))
        ++j;
      t.kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Number;
    } else if (std::string_view("+-*^/();").find(c) != std::string_view::npos) {
      j = i + 1;
      t.kind = Tok::Symbol;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
    t.text = std::string(text.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = column;
  end.offset = text.size();
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string_view text) : tokens_(std::move(tokens)), text_(text) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }

  bool accept(const char* symbol) {
    if (peek().kind == Tok::Symbol && peek().text == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(const char* symbol) {
    if (!accept(symbol)) fail(std::string("expected '") + symbol + "'");
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(peek(), message); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& message) {
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(message + ", found " + found, t.line, t.column);
  }

  std::string keyword() {
    if (peek().kind != Tok::Ident) fail("expected a keyword");
    return next().text;
  }

  long integer() {
    bool negative = accept("-");
    if (peek().kind != Tok::Number) fail("expected an integer");
    const Token& t = next();
    if (t.text.size() > 9) fail_at(t, "integer too large");
    long v = std::stol(t.text);
    return negative ? -v : v;
  }

  // expr := ['-'] term (('+' | '-') term)*
  Element expression(const Gca& ring) {
    Element result;
    bool negate = accept("-");
    if (!negate) accept("+");
    Element t = term(ring);
    result = negate ? -t : t;
    for (;;) {
      if (accept("+"))
        result += term(ring);
      else if (accept("-"))
        result -= term(ring);
      else
        return result;
    }
  }

  std::string_view source(std::size_t from, std::size_t to) const { return text_.substr(from, to - from); }

 private:
  // term := power ('*' power)*
  Element term(const Gca& ring) {
    Element result = power(ring);
    while (accept("*")) result = ring.mul(result, power(ring));
    return result;
  }

  // power := primary ('^' integer)?
  Element power(const Gca& ring) {
    Element base = primary(ring);
    if (accept("^")) {
      if (peek().kind != Tok::Number) fail("expected a non-negative exponent");
      const Token& t = next();
      if (t.text.size() > 4) fail_at(t, "exponent too large");
      base = ring.pow(base, std::stoi(t.text));
    }
    return base;
  }

  // primary := integer ['/' integer] | identifier | '(' expr ')' | '-' primary
  Element primary(const Gca& ring) {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      Rational value(Integer(t.text));
      if (accept("/")) {
        if (peek().kind != Tok::Number) fail("expected a denominator");
        const Token& d = next();
        Integer den(d.text);
        if (den == 0) fail_at(d, "zero denominator");
        value /= Rational(den);
      }
      return Element(value);
    }
    if (t.kind == Tok::Ident) {
      next();
      auto id = ring.find(t.text);
      if (!id) throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
      return Element::generator(*id);
    }
    if (accept("(")) {
      Element inner = expression(ring);
      expect(")");
      return inner;
    }
    if (accept("-")) return -primary(ring);
    fail("expected a number, variable or '('");
  }

  std::vector<Token> tokens_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraPresentation parse_algebra(std::string_view text) {
  Parser p(tokenize(text), text);
  std::vector<std::pair<std::string, int>> vars;
  // relations see only the variables declared above them
  std::vector<Element> relations;
  std::vector<Token> relation_starts;
  std::vector<std::string> relation_text;
  GcaPtr ring = polynomial_ring({});
  while (!p.at_end()) {
    const Token start = p.peek();
    const std::string kw = p.keyword();
    if (kw == "var") {
      if (p.peek().kind != Tok::Ident) p.fail("expected a variable name");
      const Token name = p.next();
      for (const auto& [n, w] : vars)
        if (n == name.text) throw ParseError("variable '" + name.text + "' declared twice", name.line, name.column);
      if (p.keyword() != "weight") p.fail("expected 'weight'");
      const Token wt = p.peek();
      const long weight = p.integer();
      if (weight <= 0)
        throw ParseError("variable '" + name.text + "' must have positive weight, got " + std::to_string(weight),
                         wt.line, wt.column);
      p.expect(";");
      vars.emplace_back(name.text, static_cast<int>(weight));
      ring = polynomial_ring(vars);
    } else if (kw == "rel") {
      const Token first = p.peek();
      Element f = p.expression(*ring);
      const Token end = p.peek();
      p.expect(";");
      relations.push_back(std::move(f));
      relation_starts.push_back(first);
      relation_text.emplace_back(p.source(first.offset, end.offset));
    } else {
      Parser::fail_at(start, "expected 'var' or 'rel'");
    }
  }
  for (std::size_t j = 0; j < relations.size(); ++j) {
    const Token& at = relation_starts[j];
    std::string label = relation_text[j];
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
    const std::string name = "relation " + std::to_string(j + 1) + " '" + label + "'";
    if (relations[j].is_zero()) throw ParseError(name + " is zero", at.line, at.column);
    auto bd = ring->bidegree(relations[j]);
    if (!bd) throw ParseError(name + " is not weight-homogeneous", at.line, at.column);
    if (bd->second == 0) throw ParseError(name + " is a nonzero constant", at.line, at.column);
  }
  AlgebraPresentation out{ring, std::move(relations)};
  validate(out);
  return out;
}

std::string format_algebra(const AlgebraPresentation& algebra) {
  std::ostringstream out;
  for (const auto& v : algebra.ring->variables()) out << "var " << v.name << " weight " << v.weight << ";\n";
  for (const auto& f : algebra.relations) out << "rel " << algebra.ring->format(f) << ";\n";
  return out.str();
}

Element parse_polynomial(std::string_view text, const Gca& algebra) {
  Parser p(tokenize(text), text);
  Element e = p.expression(algebra);
  if (!p.at_end()) p.fail("unexpected trailing input");
  algebra.validate(e);
  return e;
}

TwistedComplex parse_twisted_complex(std::string_view json_text, const GcaPtr& ring) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("twisted complex: ") + e.what());
  }
  TwistedComplex F{ring, {}, {}};
  try {
    for (const auto& g : doc.at("generators"))
      F.basis.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>(), g.at("weight").get<int>()});
    const auto& rows = doc.at("differential");
    if (rows.size() != F.rank()) throw Error("twisted complex: differential must have one row per generator");
    F.differential = zero_matrix(F.rank());
    for (std::size_t i = 0; i < F.rank(); ++i) {
      if (rows[i].size() != F.rank()) throw Error("twisted complex: differential row " + std::to_string(i) + " has the wrong length");
      for (std::size_t j = 0; j < F.rank(); ++j) {
        const auto& cell = rows[i][j];
        std::string text = cell.is_string() ? cell.get<std::string>() : cell.dump();
        try {
          F.differential[i][j] = parse_polynomial(text, *ring);
        } catch (const ParseError& e) {
          throw Error("twisted complex: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                      "), column " + std::to_string(e.column()) + ": " + e.what());
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("twisted complex: ") + e.what());
  }
  return F;
}

}  // namespace hkr
