#include "gsw/word.hpp"

#include <cctype>
#include <cstdlib>

#include "gsw/errors.hpp"

namespace gsw {

long long GroupWord::length() const {
  long long n = 0;
  for (auto& [g, e] : letters) n += e < 0 ? -e : e;
  return n;
}

static void push_letter(std::vector<std::pair<int, long long>>& out, int g,
                        long long e) {
  if (e == 0) return;
  if (!out.empty() && out.back().first == g) {
    out.back().second += e;
    if (out.back().second == 0) out.pop_back();
  } else {
    out.emplace_back(g, e);
  }
}

GroupWord reduce(const GroupWord& w) {
  GroupWord r;
  for (auto& [g, e] : w.letters) push_letter(r.letters, g, e);
  return r;
}

GroupWord inverse(const GroupWord& w) {
  GroupWord r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    push_letter(r.letters, it->first, -it->second);
  return r;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord r = reduce(a);
  for (auto& [g, e] : b.letters) push_letter(r.letters, g, e);
  return r;
}

GroupWord word_pow(const GroupWord& w, long long e) {
  if (e == 0) return {};
  GroupWord base = e < 0 ? inverse(w) : reduce(w);
  long long n = e < 0 ? -e : e;
  GroupWord r;
  for (long long i = 0; i < n; ++i)
    for (auto& [g, ex] : base.letters) push_letter(r.letters, g, ex);
  return r;
}

GroupWord commutator(const GroupWord& u, const GroupWord& v) {
  return concat(concat(inverse(u), inverse(v)), concat(u, v));
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const std::vector<std::string>& names;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw input_error("word syntax error at position " + std::to_string(pos) +
                      ": " + msg);
  }

  GroupWord parse_word_inner(bool top) {
    GroupWord acc;
    bool any = false;
    while (!eof()) {
      char c = peek();
      if (c == ')' || c == ',' || c == ']') {
        if (top) fail(std::string("unexpected '") + c + "'");
        break;
      }
      acc = concat(acc, parse_term());
      any = true;
    }
    if (!any && !top) fail("empty word");
    return acc;
  }

  GroupWord parse_term() {
    GroupWord atom = parse_atom();
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      return word_pow(atom, parse_int());
    }
    return atom;
  }

  GroupWord parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      GroupWord w = parse_word_inner(false);
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos;
      GroupWord u = parse_word_inner(false);
      expect(',');
      GroupWord v = parse_word_inner(false);
      expect(']');
      return commutator(u, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) ||
              s[pos] == '_' || s[pos] == '\''))
        ++pos;
      std::string name = s.substr(start, pos - start);
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return GroupWord{{{static_cast<int>(i), 1}}};
      fail("unknown generator '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void expect(char c) {
    if (eof() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  long long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits) fail("expected integer exponent");
    return std::strtoll(s.substr(start, pos - start).c_str(), nullptr, 10);
  }
};

}  // namespace

GroupWord parse_word(const std::string& text,
                     const std::vector<std::string>& generator_names) {
  Parser p{text, 0, generator_names};
  GroupWord w = p.parse_word_inner(true);
  if (!p.eof()) p.fail("trailing input");
  return w;
}

std::string format_word(const GroupWord& w,
                        const std::vector<std::string>& generator_names) {
  std::string out;
  for (auto& [g, e] : w.letters) {
    if (!out.empty()) out += ' ';
    if (g < 0 || g >= static_cast<int>(generator_names.size()))
      throw input_error("generator index out of range in word");
    out += generator_names[g];
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace gsw
