#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holo/word.hpp"

namespace holo {

/// A finite group presentation. Generator names matter only at the I/O
/// boundary; all computations refer to generators by 1-based index.
struct GroupPresentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  int generator_count() const { return static_cast<int>(generator_names.size()); }
  int relator_count() const { return static_cast<int>(relators.size()); }
};

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
};

namespace detail {

class PresentationParser {
 public:
  explicit PresentationParser(const std::string& text) : text_(text) {}

  GroupPresentation parse() {
    expect_keyword("gens");
    expect_char(':');
    GroupPresentation p;
    skip_ws();
    while (!at_end() && is_name_start(peek())) {
      std::string name = parse_name();
      if (index_.count(name)) fail("duplicate generator name '" + name + "'");
      index_[name] = static_cast<int>(p.generator_names.size()) + 1;
      p.generator_names.push_back(name);
      skip_ws();
    }
    if (p.generator_names.empty()) fail("empty generator list");
    expect_char(';');
    expect_keyword("rels");
    expect_char(':');
    skip_ws();
    while (!at_end()) {
      p.relators.push_back(parse_word());
      skip_ws();
      if (at_end()) break;
      expect_char(';');
      skip_ws();
    }
    return p;
  }

 private:
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

  static bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void expect_char(char c) {
    skip_ws();
    if (pos_ >= text_.size() || peek() != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  void expect_keyword(const std::string& kw) {
    skip_ws();
    for (char c : kw) {
      if (pos_ >= text_.size() || peek() != c) fail("expected '" + kw + "'");
      advance();
    }
  }

  std::string parse_name() {
    skip_ws();
    if (pos_ >= text_.size() || !is_name_start(peek())) fail("expected a name");
    std::string name;
    while (pos_ < text_.size() && is_name_char(peek())) {
      name += peek();
      advance();
    }
    return name;
  }

  long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      advance();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      advance();
    }
    return neg ? -v : v;
  }

  // word := factor+ ; factor := name | name^int | "[" word "," word "]" | "(" word ")"
  // A trailing ^int is accepted after any factor.
  Word parse_word() {
    Word w = parse_factor();
    skip_ws();
    while (pos_ < text_.size() && (is_name_start(peek()) || peek() == '[' || peek() == '(')) {
      w *= parse_factor();
      skip_ws();
    }
    return w;
  }

  Word parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a word factor");
    Word w;
    if (peek() == '[') {
      advance();
      Word a = parse_word();
      expect_char(',');
      Word b = parse_word();
      expect_char(']');
      w = commutator(a, b);
    } else if (peek() == '(') {
      advance();
      w = parse_word();
      expect_char(')');
    } else if (is_name_start(peek())) {
      std::string name = parse_name();
      auto it = index_.find(name);
      if (it == index_.end()) fail("unknown generator '" + name + "'");
      w = Word::generator(it->second);
    } else {
      fail("expected a word factor");
    }
    skip_ws();
    if (pos_ < text_.size() && peek() == '^') {
      advance();
      w = w.pow(parse_int());
    }
    return w;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  std::map<std::string, int> index_;
};

}  // namespace detail

/// Parses "gens: x y; rels: [x,y]; x^3" into a presentation with freely
/// reduced relators. Commutators expand as [a,b] = a b a^-1 b^-1.
inline GroupPresentation parse_presentation(const std::string& text) {
  return detail::PresentationParser(text).parse();
}

inline std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Word::Run& r : w.runs()) {
    if (!first) os << ' ';
    first = false;
    if (r.gen <= static_cast<int>(names.size()))
      os << names[r.gen - 1];
    else
      os << "g" << r.gen;
    if (r.exp != 1) os << '^' << r.exp;
  }
  return os.str();
}

inline std::string word_str(const Word& w) {
  std::vector<std::string> names;
  for (int i = 1; i <= w.max_generator(); ++i) names.push_back("x" + std::to_string(i));
  return word_str(w, names);
}

inline std::string presentation_str(const GroupPresentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const std::string& n : p.generator_names) os << ' ' << n;
  os << "; rels:";
  bool first = true;
  for (const Word& r : p.relators) {
    os << (first ? " " : "; ") << word_str(r, p.generator_names);
    first = false;
  }
  return os.str();
}

}  // namespace holo
