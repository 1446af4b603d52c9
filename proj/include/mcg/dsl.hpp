#pragma once

// Twist-word DSL.
//
//   word   := factor { "*" factor }
//   factor := atom [ "^" int ]
//   atom   := "t[" curvename "]" | "(" word ")" | "conj(" word "," word ")"
//
// Composition is right to left (the rightmost factor acts first) and
// conj(u, w) denotes w * u * w^-1. Whitespace is free; "*" is mandatory
// between factors. Curve names come from the registry; derived registry
// curves print as conj(t[base], <conjugator>).

#include <cctype>
#include <stdexcept>
#include <string>

#include "mcg/twist.hpp"

namespace mcg {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t p)
      : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

class DslParser {
 public:
  DslParser(const std::string& text, Registry& reg) : s_(text), reg_(reg) {}

  TwistWord parse() {
    TwistWord w = word();
    skipWs();
    if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
    return w;
  }

 private:
  const std::string& s_;
  Registry& reg_;
  size_t pos_ = 0;

  void skipWs() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skipWs();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eatWord(const char* kw) {
    skipWs();
    size_t n = std::string(kw).size();
    if (s_.compare(pos_, n, kw) == 0) {
      pos_ += n;
      return true;
    }
    return false;
  }

  TwistWord word() {
    TwistWord w = factor();
    while (true) {
      skipWs();
      if (!eat('*')) break;
      w *= factor();
    }
    return w;
  }

  TwistWord factor() {
    TwistWord a = atom();
    skipWs();
    if (eat('^')) {
      int k = integer();
      return a.pow(k);
    }
    return a;
  }

  int integer() {
    skipWs();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return std::stoi(s_.substr(start, pos_ - start));
  }

  TwistWord atom() {
    skipWs();
    if (eatWord("conj(")) {
      TwistWord u = word();
      if (!eat(',')) throw ParseError("expected ',' in conj", pos_);
      TwistWord by = word();
      if (!eat(')')) throw ParseError("expected ')' in conj", pos_);
      if (u.letters.size() == 1) {
        // canonical form: a conjugated twist letter is a derived-curve letter
        std::vector<std::pair<int, int>> conj;
        for (const auto& b : by.letters) conj.emplace_back(b.curve, b.sign);
        TwistWord w;
        w.surface = reg_.model.spec;
        w.letters.push_back({reg_.derivedFor(u.letters[0].curve, conj), u.letters[0].sign});
        return w;
      }
      return by * u * by.inverse();
    }
    if (eatWord("t[")) {
      size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
      if (pos_ == s_.size()) throw ParseError("unterminated curve name", start);
      std::string name = s_.substr(start, pos_ - start);
      ++pos_;
      int idx = reg_.find(trim(name));
      if (idx < 0) throw ParseError("unknown curve '" + trim(name) + "'", start);
      TwistWord w;
      w.surface = reg_.model.spec;
      w.letters.push_back({idx, +1});
      return w;
    }
    if (eat('(')) {
      TwistWord w = word();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return w;
    }
    throw ParseError("expected atom", pos_);
  }

  static std::string trim(std::string v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.erase(v.begin());
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
    return v;
  }
};

inline TwistWord parseWord(const std::string& text, Registry& reg) {
  return DslParser(text, reg).parse();
}

// Canonical printing: registry-derived letters expand to conj(t[base], <word>);
// runs of equal letters print as powers.
inline std::string printLetter(const Registry& reg, const TwistLetterRef& l, int power) {
  const Curve& c = reg.curve(l.curve);
  std::string core;
  if (c.basic) {
    core = "t[" + c.name + "]";
  } else {
    TwistWord conj;
    conj.surface = reg.model.spec;
    for (auto& [ci, s] : c.conj) conj.letters.push_back({ci, s});
    std::string by;
    if (conj.letters.empty()) {
      core = "t[" + reg.curve(c.base).name + "]";
    } else {
      // print the conjugator recursively
      std::string inner;
      int i = 0;
      while (i < static_cast<int>(conj.letters.size())) {
        int j = i;
        while (j < static_cast<int>(conj.letters.size()) &&
               conj.letters[j] == conj.letters[i])
          ++j;
        int p = (j - i) * conj.letters[i].sign;
        if (!inner.empty()) inner += "*";
        inner += printLetter(reg, {conj.letters[i].curve, +1}, p);
        i = j;
      }
      TwistLetterRef baseL{c.base, +1};
      core = "conj(" + printLetter(reg, baseL, 1) + "," + inner + ")";
    }
  }
  int p = power * l.sign;
  if (p == 1) return core;
  return core + "^" + std::to_string(p);
}

inline std::string printWord(const Registry& reg, const TwistWord& w) {
  if (w.letters.empty()) return "(t[" + reg.curve(0).name + "])^0";
  std::string out;
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    if (!out.empty()) out += "*";
    out += printLetter(reg, {w.letters[i].curve, w.letters[i].sign},
                       static_cast<int>(j - i));
    i = j;
  }
  return out;
}

}  // namespace mcg
