#include "ratfield/cli/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ratfield {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const QRing& ring, std::size_t line) : s_(s), ring_(ring), line_(line) {
    for (std::size_t i = 0; i < ring->nvars(); ++i) index_[ring->vars()[i]] = i;
  }

  RationalFunction run() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("empty expression", line_, col());
    auto v = expr();
    skip();
    if (pos_ < s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", line_, col());
    return v;
  }

 private:
  std::size_t col() const { return pos_ + 1; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    auto v = term();
    while (true) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  RationalFunction term() {
    auto v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        skip();
        std::size_t at = col();
        auto d = unary();
        if (d.is_zero()) throw ZeroDenominator("division by zero", line_, at);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalFunction power() {
    auto base = primary();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected a nonnegative integer exponent", line_, start + 1);
    if (pos_ - start > 9) throw SyntaxError("exponent too large", line_, start + 1);
    auto e = std::stoull(s_.substr(start, pos_ - start));
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') throw SyntaxError("chained '^' needs parentheses", line_, col());
    if (e == 0 && base.is_zero()) throw SyntaxError("0^0 is undefined", line_, start + 1);
    return base.pow(e);
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", line_, col());
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto v = expr();
      if (!eat(')')) throw SyntaxError("expected ')'", line_, col());
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      BigRational q(BigInt(s_.substr(start, pos_ - start)));
      return RationalFunction(QPoly::constant(ring_, q));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = index_.find(name);
      if (it == index_.end()) throw UnknownIdentifier("unknown identifier '" + name + "'", line_, start + 1);
      return RationalFunction(QPoly::variable(ring_, it->second));
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", line_, col());
  }

  const std::string& s_;
  QRing ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> index_;
};

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

RationalFunction parse_expression(const std::string& text, const QRing& ring, std::size_t line) {
  return Parser(text, ring, line).run();
}

ProblemFile parse_problem(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  ProblemFile pf;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string body = raw.substr(0, raw.find('#'));
    if (trim(body).empty()) continue;
    if (!pf.ring) {
      auto colon = body.find(':');
      if (colon == std::string::npos || trim(body.substr(0, colon)) != "vars") {
        throw SyntaxError("expected header 'vars: ...'", lineno, 1);
      }
      std::vector<std::string> vars;
      std::istringstream list(body.substr(colon + 1));
      std::string item;
      while (std::getline(list, item, ',')) {
        std::string v = trim(item);
        if (!valid_identifier(v)) throw SyntaxError("invalid variable name '" + v + "'", lineno, colon + 2);
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) {
          throw SyntaxError("duplicate variable '" + v + "'", lineno, colon + 2);
        }
        vars.push_back(v);
      }
      if (vars.empty()) throw SyntaxError("no variables declared", lineno, colon + 2);
      pf.ring = make_ring(RationalField(), vars);
      continue;
    }
    pf.gens.push_back(parse_expression(body, pf.ring, lineno));
    pf.lines.push_back(lineno);
  }
  if (!pf.ring) throw SyntaxError("missing header 'vars: ...'", lineno + 1, 1);
  return pf;
}

QRing reorder_ring(const QRing& ring, const std::vector<std::string>& order) {
  auto a = order, b = ring->vars();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::invalid_argument("variable order must list every variable exactly once");
  return make_ring(RationalField(), order, ring->order());
}

RationalFunction move_to_ring(const RationalFunction& f, const QRing& target) {
  const auto& from = f.ring()->vars();
  std::vector<std::size_t> perm(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = std::find(target->vars().begin(), target->vars().end(), from[i]);
    if (it == target->vars().end()) throw RingMismatch();
    perm[i] = static_cast<std::size_t>(it - target->vars().begin());
  }
  auto move = [&](const QPoly& p) {
    std::vector<QPoly::Term> ts;
    for (const auto& t : p.terms()) {
      std::vector<std::uint32_t> e(target->nvars(), 0);
      for (std::size_t i = 0; i < perm.size(); ++i) e[perm[i]] = t.mono[i];
      ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return QPoly::from_terms(target, std::move(ts));
  };
  return RationalFunction(move(f.num()), move(f.den()));
}

}  // namespace ratfield
