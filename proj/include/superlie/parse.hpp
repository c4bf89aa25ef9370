#ifndef SUPERLIE_PARSE_HPP
#define SUPERLIE_PARSE_HPP

#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "superlie/fields.hpp"

namespace superlie {

class ParseError : public AlgebraError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : AlgebraError(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// ---------------------------------------------------------------- printing

inline std::string monomial_to_string(const VarSpec& spec, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += spec[i].name;
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

/// Terms are listed by total degree, then in canonical monomial order.
inline std::string to_string(const SPoly& f) {
  if (f.is_zero()) return "0";
  const VarSpec& spec = *f.spec();
  std::vector<std::pair<const Monomial*, const Rational*>> ts;
  for (const auto& [m, c] : f.terms()) ts.emplace_back(&m, &c);
  std::stable_sort(ts.begin(), ts.end(), [&](auto& a, auto& b) {
    return a.first->total_degree(spec, true) < b.first->total_degree(spec, true);
  });
  std::string out;
  bool first = true;
  for (auto [m, c] : ts) {
    Rational a = abs(*c);
    bool neg = *c < 0;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    std::string ms = monomial_to_string(spec, *m);
    if (ms.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += ms;
    }
  }
  return out;
}

inline std::string to_string(const VectorField& d) {
  const VarSpec& spec = *d.spec();
  std::string out;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const SPoly& c = d.coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = to_string(c);
    if (c.size() > 1) cs = "(" + cs + ")";
    out += cs + "*d/d" + spec[i].name;
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const SPoly& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const VectorField& d) { return os << to_string(d); }

inline std::string varspec_to_string(const VarSpec& spec) {
  std::string vars_even, vars_odd, params;
  for (const auto& e : spec.entries()) {
    if (e.kind == VarKind::Parameter) {
      if (!params.empty()) params += ", ";
      params += e.name + (e.parity == Parity::Odd ? " odd" : " even");
      if (e.parity == Parity::Even && e.nilpotent) params += " nil" + std::to_string(e.nilpotent);
    } else if (e.parity == Parity::Even) {
      vars_even += (vars_even.empty() ? "" : ",") + e.name;
    } else {
      vars_odd += (vars_odd.empty() ? "" : ",") + e.name;
    }
  }
  std::string s = "vars:";
  bool any = false;
  if (!vars_even.empty()) s += " " + vars_even + " even", any = true;
  if (!vars_odd.empty()) s += std::string(any ? ";" : "") + " " + vars_odd + " odd";
  if (!params.empty()) s += "; params: " + params;
  return s;
}

// ---------------------------------------------------------------- parsing

/// Header grammar: "vars: a,b even; c odd; params: h even nil2, s odd".
/// Variables keep the order in which they are listed.
inline VarSpecPtr parse_varspec(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string x) {
    std::size_t a = x.find_first_not_of(" \t\n");
    std::size_t b = x.find_last_not_of(" \t\n");
    return a == std::string::npos ? std::string() : x.substr(a, b - a + 1);
  };
  std::size_t vp = s.find("vars:");
  if (vp == std::string::npos) throw ParseError("missing 'vars:'", 0);
  std::size_t pp = s.find("params:");
  std::string vars = s.substr(vp + 5, pp == std::string::npos ? std::string::npos : pp - vp - 5);
  VarSpecBuilder b;
  std::stringstream groups(vars);
  std::string group;
  while (std::getline(groups, group, ';')) {
    group = trim(group);
    if (group.empty()) continue;
    std::size_t sp = group.find_last_of(" \t");
    if (sp == std::string::npos) throw ParseError("missing parity in group '" + group + "'", vp);
    std::string par = trim(group.substr(sp + 1));
    std::string names = group.substr(0, sp);
    if (par != "even" && par != "odd") throw ParseError("bad parity '" + par + "'", vp);
    std::stringstream ns(names);
    std::string name;
    while (std::getline(ns, name, ',')) {
      name = trim(name);
      if (name.empty()) continue;
      b.var(name, par == "odd" ? Parity::Odd : Parity::Even);
    }
  }
  if (pp != std::string::npos) {
    std::stringstream ps(s.substr(pp + 7));
    std::string item;
    while (std::getline(ps, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      std::stringstream is(item);
      std::string name, par, nil;
      is >> name >> par >> nil;
      if (par != "even" && par != "odd") throw ParseError("bad parameter parity in '" + item + "'", pp);
      int k = 0;
      if (!nil.empty()) {
        if (nil.rfind("nil", 0) != 0) throw ParseError("bad nilpotency in '" + item + "'", pp);
        k = std::stoi(nil.substr(3));
      }
      b.param(name, par == "odd" ? Parity::Odd : Parity::Even, k);
    }
  }
  return b.build();
}

namespace detail {

using Value = std::variant<SPoly, VectorField>;

class ExprParser {
 public:
  ExprParser(VarSpecPtr spec, std::string_view text) : spec_(std::move(spec)), s_(text) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool at_differential() {
    skip();
    return s_.compare(pos_, 3, "d/d") == 0;
  }

  static Value add(Value a, const Value& b, int sign, std::size_t pos) {
    if (a.index() != b.index()) {
      // allow 0 + field
      if (auto* p = std::get_if<SPoly>(&a); p && p->is_zero()) return sign < 0 ? -std::get<VectorField>(b) : std::get<VectorField>(b);
      if (auto* p = std::get_if<SPoly>(&b); p && p->is_zero()) return a;
      throw ParseError("cannot add a polynomial and a vector field", pos);
    }
    if (auto* p = std::get_if<SPoly>(&a)) {
      if (sign > 0) *p += std::get<SPoly>(b);
      else *p -= std::get<SPoly>(b);
    } else {
      auto& f = std::get<VectorField>(a);
      if (sign > 0) f += std::get<VectorField>(b);
      else f -= std::get<VectorField>(b);
    }
    return a;
  }
  static Value mul(const Value& a, const Value& b, std::size_t pos) {
    if (std::holds_alternative<VectorField>(a)) throw ParseError("a vector field must be the rightmost factor", pos);
    if (auto* f = std::get_if<VectorField>(&b)) return std::get<SPoly>(a) * *f;
    return std::get<SPoly>(a) * std::get<SPoly>(b);
  }

  Value expr() {
    skip();
    std::size_t start = pos_;
    Value v = SPoly(spec_);
    int sign = 1;
    if (peek('-')) {
      ++pos_;
      sign = -1;
    } else if (peek('+')) {
      ++pos_;
    }
    v = add(v, term(), sign, start);
    while (true) {
      if (peek('+')) {
        std::size_t p = pos_++;
        v = add(v, term(), 1, p);
      } else if (peek('-')) {
        std::size_t p = pos_++;
        v = add(v, term(), -1, p);
      } else {
        break;
      }
    }
    return v;
  }

  Value term() {
    Value v = power();
    while (true) {
      if (peek('*')) {
        std::size_t p = pos_++;
        v = mul(v, power(), p);
      } else if (at_differential()) {
        // "coeff d/dx" is accepted without an explicit '*'
        std::size_t p = pos_;
        v = mul(v, power(), p);
      } else {
        break;
      }
    }
    return v;
  }

  Value power() {
    std::size_t p0 = pos_;
    Value base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) throw ParseError("expected exponent", pos_);
      int e = std::stoi(std::string(s_.substr(st, pos_ - st)));
      auto* b = std::get_if<SPoly>(&base);
      if (!b) throw ParseError("cannot raise a vector field to a power", p0);
      SPoly r = SPoly::constant(spec_, 1);
      for (int k = 0; k < e; ++k) r = r * *b;
      return r;
    }
    return base;
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (c == '-') {
      ++pos_;
      Value v = power();
      if (auto* p = std::get_if<SPoly>(&v)) return -*p;
      return -std::get<VectorField>(v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      Rational r = parse_rational(s_.substr(st, pos_ - st));
      check_no_juxtaposition();
      return SPoly::constant(spec_, r);
    }
    if (at_differential()) {
      pos_ += 3;
      std::size_t st = pos_;
      std::string name = ident();
      auto i = spec_->find(name);
      if (!i) throw ParseError("unknown variable '" + name + "'", st);
      if (spec_->is_param(*i)) throw ParseError("derivation along a parameter '" + name + "'", st);
      return VectorField::partial(spec_, *i);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = pos_;
      std::string name = ident();
      auto i = spec_->find(name);
      if (!i) throw ParseError("unknown variable '" + name + "'", st);
      check_no_juxtaposition();
      return SPoly::variable(spec_, *i);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  void check_no_juxtaposition() {
    std::size_t save = pos_;
    skip();
    if (pos_ < s_.size()) {
      char c = s_[pos_];
      bool starts_atom = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
      if (starts_atom && !at_differential())
        throw ParseError("juxtaposition is not multiplication; use '*'", pos_);
    }
    pos_ = save;
  }

  std::string ident() {
    std::size_t st = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (st == pos_) throw ParseError("expected identifier", pos_);
    return std::string(s_.substr(st, pos_ - st));
  }

  VarSpecPtr spec_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SPoly parse_poly(const VarSpecPtr& spec, std::string_view text) {
  auto v = detail::ExprParser(spec, text).parse();
  if (auto* p = std::get_if<SPoly>(&v)) return *p;
  throw ParseError("expected a polynomial, got a vector field", 0);
}

inline VectorField parse_field(const VarSpecPtr& spec, std::string_view text) {
  auto v = detail::ExprParser(spec, text).parse();
  if (auto* f = std::get_if<VectorField>(&v)) return *f;
  if (std::get<SPoly>(v).is_zero()) return VectorField(spec);
  throw ParseError("expected a vector field, got a polynomial", 0);
}

}  // namespace superlie

#endif  // SUPERLIE_PARSE_HPP
