#pragma once

#include <map>
#include <string>
#include <string_view>

#include "abel/exact.hpp"
#include "abel/word.hpp"

namespace abel {

/// Noncommutative polynomial over the letter alphabet: a finite map from
/// words to exact rational coefficients. Zero coefficients are removed
/// eagerly, so term_count() and word_norm() are always meaningful, and
/// iteration follows the canonical word order.
///
/// Values are immutable in practice: all algebra below returns new
/// polynomials, so sharing across threads for reads is safe.
class NCPolynomial {
 public:
  using TermMap = std::map<Word, Rational>;

  NCPolynomial() = default;

  static NCPolynomial zero() { return {}; }
  /// The empty word with coefficient 1.
  static NCPolynomial one() { return monomial(Word{}); }
  static NCPolynomial letter(int i) { return monomial(Word::single(i)); }
  static NCPolynomial monomial(Word w, Rational c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// The scalar product <p, w>; zero for absent words.
  Rational coefficient(const Word& w) const;
  /// Sum of |coefficients| — the word count with multiplicities.
  Rational word_norm() const;
  /// Largest word length present; -1 for the zero polynomial.
  int max_degree() const;
  /// True when every stored word has length k.
  bool is_homogeneous(int k) const;

  void add_term(const Word& w, const Rational& c);

  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  NCPolynomial& operator*=(const Rational& c);

  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(NCPolynomial a, const Rational& c) { return a *= c; }
  friend NCPolynomial operator*(const Rational& c, NCPolynomial a) { return a *= c; }
  NCPolynomial operator-() const;

  /// Words of length exactly k.
  NCPolynomial homogeneous_part(int k) const;
  /// Words of length <= max_deg.
  NCPolynomial truncated(int max_deg) const;

  bool operator==(const NCPolynomial&) const = default;

  /// Canonical text form, e.g. "2 a0.a1.a1 + 1 a0.a0.a2"; zero is "0" and a
  /// bare coefficient stands for the empty word. Round-trips via from_text.
  std::string to_text() const;
  static NCPolynomial from_text(std::string_view s);

 private:
  TermMap terms_;
};

/// Bilinear extension of word juxtaposition; degrees add.
NCPolynomial concat(const NCPolynomial& p, const NCPolynomial& q);

/// The shuffle product: commutative, associative, unit 1, defined on words by
/// (vb) sh (wc) = (v sh wc).b + (vb sh w).c.
NCPolynomial shuffle(const NCPolynomial& p, const NCPolynomial& q);

/// m-fold shuffle power; m = 0 gives 1.
NCPolynomial shuffle_power(const NCPolynomial& p, unsigned m);

}  // namespace abel
