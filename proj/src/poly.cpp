#include "ucob/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "ucob/errors.hpp"

namespace ucob {

const char* const kVarNames[kNumVars] = {"s", "a0", "b0", "g0", "t"};

bool mono_less(const Mono& a, const Mono& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  for (int i = 0; i < kNumVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({Mono{}, c});
}

Poly Poly::variable(Var v, int power) {
  Poly p;
  if (power < 0) throw std::invalid_argument("negative exponent");
  Mono m;
  m.e[static_cast<int>(v)] = static_cast<uint16_t>(power);
  p.terms_.push_back({m, Rational(1)});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return Rational(0);
}

const Mono& Poly::leading_mono() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front().first;
}

const Rational& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front().second;
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().first.total_degree();
}

int Poly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[static_cast<int>(v)]));
  return d;
}

void Poly::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const auto& t) { return t.second.is_zero(); }),
               terms_.end());
}

Poly& Poly::operator+=(const Poly& o) {
  std::vector<std::pair<Mono, Rational>> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto ia = terms_.begin(), ea = terms_.end();
  auto ib = o.terms_.begin(), eb = o.terms_.end();
  while (ia != ea && ib != eb) {
    if (ia->first == ib->first) {
      Rational c = ia->second + ib->second;
      if (!c.is_zero()) out.push_back({ia->first, c});
      ++ia;
      ++ib;
    } else if (mono_less(ib->first, ia->first)) {
      out.push_back(*ia++);
    } else {
      out.push_back(*ib++);
    }
  }
  out.insert(out.end(), ia, ea);
  out.insert(out.end(), ib, eb);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  return *this += -o;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::map<Mono, Rational, bool (*)(const Mono&, const Mono&)> acc(&mono_less);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Mono m = ma * mb;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, ca * cb);
      else
        it->second += ca * cb;
    }
  Poly r;
  r.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly r(1);
  Poly base = *this;
  while (n) {
    if (n & 1) r *= base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first)
      return mono_less(a.terms_[i].first, b.terms_[i].first);
    if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
  }
  return a.terms_.size() < b.terms_.size();
}

bool Poly::try_divexact(const Poly& q, Poly* quotient) const {
  if (q.is_zero()) throw NotDivisible("division by zero polynomial");
  Poly rem = *this;
  Poly quot;
  while (!rem.is_zero()) {
    const Mono& lm = rem.leading_mono();
    if (!q.leading_mono().divides(lm)) return false;
    Mono m = lm / q.leading_mono();
    Rational c = rem.leading_coeff() / q.leading_coeff();
    Poly piece;
    piece.terms_.push_back({m, c});
    quot += piece;
    rem -= piece * q;
  }
  if (quotient) *quotient = std::move(quot);
  return true;
}

Poly Poly::divexact(const Poly& q) const {
  Poly quot;
  if (!try_divexact(q, &quot))
    throw NotDivisible("polynomial division is not exact: (" + str() + ") / (" + q.str() + ")");
  return quot;
}

Rational Poly::eval(const std::map<Var, Rational>& point) const {
  std::array<Rational, kNumVars> full;
  std::array<bool, kNumVars> have{false, false, false, false, false};
  for (const auto& [v, val] : point) {
    full[static_cast<int>(v)] = val;
    have[static_cast<int>(v)] = true;
  }
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < kNumVars; ++i)
      if (m.e[i] > 0 && !have[i])
        throw MissingVariable(std::string("unassigned variable ") + kVarNames[i]);
  return eval(full);
}

Rational Poly::eval(const std::array<Rational, kNumVars>& point) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < kNumVars; ++i)
      for (int k = 0; k < m.e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

Poly Poly::subst(Var v, const Poly& value) const {
  Poly out;
  const int vi = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    Mono rest = m;
    int k = rest.e[vi];
    rest.e[vi] = 0;
    Poly piece;
    piece.terms_.push_back({rest, c});
    out += piece * value.pow(static_cast<unsigned>(k));
  }
  return out;
}

namespace {

void append_power(std::ostream& os, const std::string& name, int p, bool& first) {
  if (p == 0) return;
  if (!first) os << "*";
  os << name;
  if (p > 1) os << "^" << p;
  first = false;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool lead = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (lead) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool first = true;
    if (a != Rational(1) || m.is_one()) {
      os << a.str();
      first = false;
    }
    int se = m.e[0];
    append_power(os, "s", se % 2, first);
    append_power(os, "lambda", se / 2, first);
    append_power(os, "a0", m.e[1], first);
    append_power(os, "b0", m.e[2], first);
    append_power(os, "g0", m.e[3], first);
    append_power(os, "t", m.e[4], first);
    lead = false;
  }
  return os.str();
}

std::string Poly::latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool lead = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (lead) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (a != Rational(1) || m.is_one()) {
      if (a.is_integer())
        os << a.num().get_str();
      else
        os << "\\tfrac{" << a.num().get_str() << "}{" << a.den().get_str() << "}";
      if (!m.is_one()) os << " ";
    }
    auto pw = [&os](const char* sym, int p) {
      if (p == 0) return;
      os << sym;
      if (p > 1) os << "^{" << p << "}";
    };
    pw("\\sqrt{\\lambda}", m.e[0] % 2 ? 1 : 0);
    pw("\\lambda", m.e[0] / 2);
    pw("\\alpha_0", m.e[1]);
    pw("\\beta_0", m.e[2]);
    pw("\\gamma_0", m.e[3]);
    pw("t", m.e[4]);
    lead = false;
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& src;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

int parse_uint(Lexer& lx) {
  lx.skip_ws();
  size_t start = lx.pos;
  while (lx.pos < lx.src.size() && std::isdigit(static_cast<unsigned char>(lx.src[lx.pos]))) ++lx.pos;
  if (lx.pos == start) throw ParseError("expected integer at offset " + std::to_string(start));
  return std::stoi(lx.src.substr(start, lx.pos - start));
}

Rational parse_coeff(Lexer& lx) {
  lx.skip_ws();
  size_t start = lx.pos;
  while (lx.pos < lx.src.size() && std::isdigit(static_cast<unsigned char>(lx.src[lx.pos]))) ++lx.pos;
  std::string num = lx.src.substr(start, lx.pos - start);
  if (lx.accept('/')) {
    lx.skip_ws();
    size_t dstart = lx.pos;
    while (lx.pos < lx.src.size() && std::isdigit(static_cast<unsigned char>(lx.src[lx.pos]))) ++lx.pos;
    std::string den = lx.src.substr(dstart, lx.pos - dstart);
    if (den.empty()) throw ParseError("expected denominator");
    return Rational::parse(num + "/" + den);
  }
  return Rational::parse(num);
}

std::string parse_ident(Lexer& lx) {
  lx.skip_ws();
  size_t start = lx.pos;
  while (lx.pos < lx.src.size() &&
         (std::isalnum(static_cast<unsigned char>(lx.src[lx.pos]))))
    ++lx.pos;
  return lx.src.substr(start, lx.pos - start);
}

// term := coeff? ('*'? factor)*  where factor := var ('^' uint)?
Poly parse_term(Lexer& lx) {
  Poly acc(1);
  bool anything = false;
  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    acc = Poly(parse_coeff(lx));
    anything = true;
  }
  for (;;) {
    if (lx.peek() == '*') {
      lx.accept('*');
    } else if (!std::isalpha(static_cast<unsigned char>(lx.peek()))) {
      break;
    }
    std::string name = parse_ident(lx);
    if (name.empty()) throw ParseError("expected variable at offset " + std::to_string(lx.pos));
    int power = 1;
    if (lx.accept('^')) power = parse_uint(lx);
    Poly v;
    if (name == "s")
      v = Poly::variable(Var::s, power);
    else if (name == "lambda")
      v = Poly::variable(Var::s, 2 * power);
    else if (name == "a0")
      v = Poly::variable(Var::a0, power);
    else if (name == "b0")
      v = Poly::variable(Var::b0, power);
    else if (name == "g0")
      v = Poly::variable(Var::g0, power);
    else if (name == "t")
      v = Poly::variable(Var::t, power);
    else
      throw ParseError("unknown variable '" + name + "'");
    acc *= v;
    anything = true;
  }
  if (!anything) throw ParseError("expected term at offset " + std::to_string(lx.pos));
  return acc;
}

}  // namespace

Poly Poly::parse(const std::string& text) {
  Lexer lx{text};
  Poly total;
  bool negative = false;
  if (lx.accept('-'))
    negative = true;
  else
    lx.accept('+');
  for (;;) {
    Poly term = parse_term(lx);
    total += negative ? -term : term;
    if (lx.eof()) break;
    if (lx.accept('+'))
      negative = false;
    else if (lx.accept('-'))
      negative = true;
    else
      throw ParseError("unexpected character '" + std::string(1, lx.peek()) + "' in '" + text + "'");
  }
  return total;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.str();
}

void LambdaFrac::normalize() {
  if (num_.is_zero()) {
    pow_ = 0;
    return;
  }
  const Poly lam = Poly::lambda();
  while (pow_ > 0) {
    Poly q;
    if (!num_.try_divexact(lam, &q)) break;
    num_ = std::move(q);
    --pow_;
  }
}

Poly LambdaFrac::as_poly() const {
  if (pow_ != 0)
    throw NotDivisible("value has a residual lambda denominator: " + str());
  return num_;
}

LambdaFrac operator+(const LambdaFrac& a, const LambdaFrac& b) {
  unsigned p = std::max(a.pow_, b.pow_);
  Poly num = a.num_ * Poly::lambda().pow(p - a.pow_) + b.num_ * Poly::lambda().pow(p - b.pow_);
  return LambdaFrac(std::move(num), p);
}

LambdaFrac operator-(const LambdaFrac& a, const LambdaFrac& b) {
  unsigned p = std::max(a.pow_, b.pow_);
  Poly num = a.num_ * Poly::lambda().pow(p - a.pow_) - b.num_ * Poly::lambda().pow(p - b.pow_);
  return LambdaFrac(std::move(num), p);
}

LambdaFrac operator*(const LambdaFrac& a, const LambdaFrac& b) {
  return LambdaFrac(a.num_ * b.num_, a.pow_ + b.pow_);
}

std::string LambdaFrac::str() const {
  if (pow_ == 0) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ") / lambda";
  if (pow_ > 1) os << "^" << pow_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LambdaFrac& f) {
  return os << f.str();
}

}  // namespace ucob
