#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pisol {

using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  /// Zero-based character offset of the offending token.
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class ParamMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered set of free parameter names. Copies share storage.
class ParamSet {
public:
  ParamSet();
  explicit ParamSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::vector<std::string>& names() const { return *names_; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// New set with `extra` appended (names must not collide).
  ParamSet extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const ParamSet& a, const ParamSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_identifier(std::string_view s);

/// Exponent vector, one entry per parameter.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order, largest first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial over the rationals in the parameters of a ParamSet.
///
/// Values are canonical: no zero coefficients are stored, so structural
/// equality is polynomial equality. A constant built without a ParamSet
/// adopts the parameter set of whatever it is combined with; two
/// non-empty, different parameter sets never mix.
class Scalar {
public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Scalar() = default;
  Scalar(const Rational& c);  // NOLINT: implicit by intent
  Scalar(long c) : Scalar(Rational(c)) {}  // NOLINT
  Scalar(int c) : Scalar(Rational(c)) {}   // NOLINT

  static Scalar constant(const ParamSet& params, const Rational& c);
  static Scalar variable(const ParamSet& params, std::size_t index);
  static Scalar variable(const ParamSet& params, std::string_view name);
  static Scalar from_terms(const ParamSet& params, Terms terms);

  const ParamSet& params() const { return params_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The rational value when is_constant().
  std::optional<Rational> constant_value() const;
  std::uint32_t total_degree() const;
  /// Highest power of parameter `index` occurring.
  std::uint32_t degree_in(std::size_t index) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact division by a nonzero rational constant.
  Scalar div_rational(const Rational& c) const;

  /// Re-expresses this value over `superset`, which must contain every
  /// parameter of params() (by name).
  Scalar lift(const ParamSet& superset) const;

  /// Inverse of lift(): re-expresses over `subset`. Throws ParamMismatch if
  /// a dropped parameter actually occurs.
  Scalar restrict_to(const ParamSet& subset) const;

  /// Replaces the named parameters by rationals; the ParamSet is kept.
  Scalar substitute(const std::map<std::string, Rational>& values) const;

  /// Replaces parameter `index` by the polynomial `value`.
  Scalar substitute(std::size_t index, const Scalar& value) const;

  /// Coefficient polynomial of param^power (other parameters kept).
  Scalar coefficient_of(std::size_t index, std::uint32_t power) const;

  /// Canonical text, parseable by parse(); "0" for zero.
  std::string to_string() const;

private:
  static ParamSet unify(const Scalar& a, const Scalar& b);
  void rebase(const ParamSet& target);

  ParamSet params_;
  Terms terms_;
};

inline Scalar operator*(const Rational& c, const Scalar& s) { return Scalar(c) * s; }

/// Parses a polynomial expression over `params`. Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*     divisor must be a nonzero constant
///   factor := ('-'|'+') factor | power
///   power  := atom ('^' integer)?
///   atom   := integer | identifier | '(' expr ')'
/// Implicit multiplication ("2p") is rejected.
Scalar parse(std::string_view text, const ParamSet& params);

}  // namespace pisol
