#include "pisol/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace pisol {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::uint32_t degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("malformed rational '" + s + "'", 0); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& t, bool allow_sign) {
    std::size_t start = (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (t.size() <= start) return false;
    return std::all_of(t.begin() + static_cast<long>(start), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (!digits(num, true) || !digits(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'", slash);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

// ---------------------------------------------------------------- ParamSet

ParamSet::ParamSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

ParamSet::ParamSet(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw std::invalid_argument("invalid parameter name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate parameter name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> ParamSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

ParamSet ParamSet::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = *names_;
  all.insert(all.end(), extra.begin(), extra.end());
  return ParamSet(std::move(all));
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  auto da = degree(a), db = degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic: higher power of the earlier parameter first
}

// ------------------------------------------------------------------ Scalar

Scalar::Scalar(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Scalar Scalar::constant(const ParamSet& params, const Rational& c) {
  Scalar s;
  s.params_ = params;
  if (c != 0) s.terms_.emplace(Monomial(params.size(), 0), c);
  return s;
}

Scalar Scalar::variable(const ParamSet& params, std::size_t index) {
  if (index >= params.size()) throw std::out_of_range("parameter index out of range");
  Monomial m(params.size(), 0);
  m[index] = 1;
  Scalar s;
  s.params_ = params;
  s.terms_.emplace(std::move(m), Rational(1));
  return s;
}

Scalar Scalar::variable(const ParamSet& params, std::string_view name) {
  auto idx = params.index_of(name);
  if (!idx) throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
  return variable(params, *idx);
}

Scalar Scalar::from_terms(const ParamSet& params, Terms terms) {
  Scalar s;
  s.params_ = params;
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != params.size())
      throw std::invalid_argument("monomial length does not match parameter count");
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  s.terms_ = std::move(terms);
  return s;
}

bool Scalar::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

std::optional<Rational> Scalar::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

std::uint32_t Scalar::total_degree() const {
  // grlex puts the highest degree first
  return terms_.empty() ? 0 : degree(terms_.begin()->first);
}

std::uint32_t Scalar::degree_in(std::size_t index) const {
  std::uint32_t best = 0;
  for (const auto& [m, c] : terms_)
    if (index < m.size()) best = std::max(best, m[index]);
  return best;
}

ParamSet Scalar::unify(const Scalar& a, const Scalar& b) {
  if (a.params_ == b.params_) return a.params_;
  if (a.params_.empty() && a.is_constant()) return b.params_;
  if (b.params_.empty() && b.is_constant()) return a.params_;
  throw ParamMismatch("scalars are defined over different parameter sets");
}

void Scalar::rebase(const ParamSet& target) {
  if (params_ == target) return;
  // only reachable for parameter-free constants
  Terms moved;
  for (auto& [m, c] : terms_) moved.emplace(Monomial(target.size(), 0), c);
  terms_ = std::move(moved);
  params_ = target;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  ParamSet p = unify(*this, o);
  rebase(p);
  if (!(o.params_ == p)) {
    Scalar tmp = o;
    tmp.rebase(p);
    return *this += tmp;
  }
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  ParamSet p = Scalar::unify(a, b);
  Scalar r;
  r.params_ = p;
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = p.size();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        m[i] = (i < ma.size() ? ma[i] : 0) + (i < mb.size() ? mb[i] : 0);
      Rational c = ca * cb;
      auto [it, inserted] = r.terms_.emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.params_ == b.params_) return a.terms_ == b.terms_;
  // parameter-free constants compare by value against anything
  if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
  return false;
}

Scalar Scalar::div_rational(const Rational& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  Scalar r = *this;
  for (auto& [m, v] : r.terms_) v /= c;
  return r;
}

Scalar Scalar::lift(const ParamSet& superset) const {
  if (params_ == superset) return *this;
  std::vector<std::size_t> where(params_.size());
  for (std::size_t i = 0; i < params_.size(); ++i) {
    auto idx = superset.index_of(params_.name(i));
    if (!idx) throw ParamMismatch("parameter '" + params_.name(i) + "' missing from target set");
    where[i] = *idx;
  }
  Scalar r;
  r.params_ = superset;
  for (const auto& [m, c] : terms_) {
    Monomial lifted(superset.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) lifted[where[i]] = m[i];
    r.terms_.emplace(std::move(lifted), c);
  }
  return r;
}

Scalar Scalar::restrict_to(const ParamSet& subset) const {
  if (params_ == subset) return *this;
  std::vector<std::optional<std::size_t>> where(params_.size());
  for (std::size_t i = 0; i < params_.size(); ++i) where[i] = subset.index_of(params_.name(i));
  Scalar r;
  r.params_ = subset;
  for (const auto& [m, c] : terms_) {
    Monomial out(subset.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!where[i]) throw ParamMismatch("parameter '" + params_.name(i) + "' still occurs");
      out[*where[i]] = m[i];
    }
    r.terms_.emplace(std::move(out), c);
  }
  return r;
}

Scalar Scalar::substitute(const std::map<std::string, Rational>& values) const {
  Scalar r = Scalar::constant(params_, 0);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    Rational coeff = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto it = values.find(params_.name(i));
      if (it == values.end() || m[i] == 0) continue;
      mpq_class power = 1;
      for (std::uint32_t e = 0; e < m[i]; ++e) power *= it->second;
      coeff *= power;
      rest[i] = 0;
    }
    Terms single;
    single.emplace(std::move(rest), coeff);
    r += Scalar::from_terms(params_, std::move(single));
  }
  return r;
}

Scalar Scalar::substitute(std::size_t index, const Scalar& value) const {
  Scalar r = Scalar::constant(params_, 0);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    std::uint32_t e = index < m.size() ? m[index] : 0;
    if (index < rest.size()) rest[index] = 0;
    Terms single;
    single.emplace(std::move(rest), c);
    Scalar term = Scalar::from_terms(params_, std::move(single));
    for (std::uint32_t k = 0; k < e; ++k) term *= value;
    r += term;
  }
  return r;
}

Scalar Scalar::coefficient_of(std::size_t index, std::uint32_t power) const {
  Terms out;
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = index < m.size() ? m[index] : 0;
    if (e != power) continue;
    Monomial rest = m;
    if (index < rest.size()) rest[index] = 0;
    out.emplace(std::move(rest), c);
  }
  return Scalar::from_terms(params_, std::move(out));
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      std::string f = params_.name(i);
      if (m[i] > 1) f += "^" + std::to_string(m[i]);
      factors.push_back(std::move(f));
    }
    bool unit = mag == 1;
    if (!unit || factors.empty()) {
      os << pisol::to_string(mag);
      if (!factors.empty()) os << "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

// ------------------------------------------------------------------ parser

namespace {

class ExprParser {
public:
  ExprParser(std::string_view text, const ParamSet& params) : text_(text), params_(params) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        Scalar d = factor();
        auto c = d.constant_value();
        if (!c) {
          pos_ = at;
          fail("division by non-constant expression");
        }
        if (*c == 0) {
          pos_ = at;
          fail("division by zero");
        }
        v = v.div_rational(*c);
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected non-negative integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    Scalar r = Scalar::constant(params_, 1);
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && is_ident_start(text_[pos_]))
        fail("implicit multiplication is not allowed, use '*'");
      return Scalar::constant(params_, Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = params_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      return Scalar::variable(params_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const ParamSet& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse(std::string_view text, const ParamSet& params) { return ExprParser(text, params).run(); }

}  // namespace pisol
