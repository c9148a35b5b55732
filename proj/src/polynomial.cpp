#include "abel/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace abel {

NCPolynomial NCPolynomial::monomial(Word w, Rational c) {
  NCPolynomial p;
  if (c != 0) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

Rational NCPolynomial::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational NCPolynomial::word_norm() const {
  Rational s = 0;
  for (const auto& [w, c] : terms_) s += abs(c);
  return s;
}

int NCPolynomial::max_degree() const {
  if (terms_.empty()) return -1;
  // canonical order sorts by length first, so the last key is longest
  return static_cast<int>(terms_.rbegin()->first.size());
}

bool NCPolynomial::is_homogeneous(int k) const {
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) != k) return false;
  return true;
}

void NCPolynomial::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPolynomial& NCPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPolynomial NCPolynomial::operator-() const {
  NCPolynomial p = *this;
  for (auto& [w, v] : p.terms_) v = -v;
  return p;
}

NCPolynomial NCPolynomial::homogeneous_part(int k) const {
  NCPolynomial p;
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == k) p.terms_.emplace(w, c);
  return p;
}

NCPolynomial NCPolynomial::truncated(int max_deg) const {
  NCPolynomial p;
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) <= max_deg) p.terms_.emplace(w, c);
  return p;
}

std::string NCPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    s += rational_to_string(mag);
    if (!w.empty()) {
      s += ' ';
      s += w.to_text();
    }
  }
  return s;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// One term: "<rational>", "<rational> <word>", or a bare "<word>" meaning 1.
void parse_term(std::string_view term, bool negate, NCPolynomial& out) {
  term = strip(term);
  if (term.empty()) throw std::invalid_argument("empty term in polynomial text");
  const auto space = term.find(' ');
  std::string_view coeff_text = term.substr(0, space);
  Rational c;
  Word w;
  if (coeff_text.front() == 'a') {
    c = 1;
    w = Word::from_text(term);
  } else {
    c = rational_from_string(coeff_text);
    if (space != std::string_view::npos) w = Word::from_text(strip(term.substr(space + 1)));
  }
  out.add_term(w, negate ? Rational(-c) : c);
}

}  // namespace

NCPolynomial NCPolynomial::from_text(std::string_view s) {
  s = strip(s);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  if (s == "0") return NCPolynomial::zero();
  NCPolynomial out;
  bool negate = false;
  if (s.front() == '-') {
    negate = true;
    s.remove_prefix(1);
  }
  std::size_t start = 0;
  while (true) {
    std::size_t sep = std::string_view::npos;
    for (std::size_t i = start; i + 2 < s.size(); ++i) {
      if (s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
        sep = i;
        break;
      }
    }
    if (sep == std::string_view::npos) {
      parse_term(s.substr(start), negate, out);
      break;
    }
    parse_term(s.substr(start, sep - start), negate, out);
    negate = s[sep + 1] == '-';
    start = sep + 3;
  }
  return out;
}

NCPolynomial concat(const NCPolynomial& p, const NCPolynomial& q) {
  NCPolynomial out;
  for (const auto& [v, a] : p.terms())
    for (const auto& [w, b] : q.terms()) out.add_term(concat(v, w), a * b);
  return out;
}

namespace {

using WordPair = std::pair<Word, Word>;
using ShuffleMemo = std::map<WordPair, NCPolynomial>;

// Recursive definition (vb) sh (wc) = (v sh wc).b + (vb sh w).c, memoized on
// prefix pairs. Coefficients here are the integer interleaving counts.
const NCPolynomial& shuffle_words(const Word& v, const Word& w, ShuffleMemo& memo) {
  WordPair key = w < v ? WordPair{w, v} : WordPair{v, w};  // the product commutes
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  NCPolynomial result;
  if (v.empty()) {
    result = NCPolynomial::monomial(w);
  } else if (w.empty()) {
    result = NCPolynomial::monomial(v);
  } else {
    const Word v_head = v.prefix(v.size() - 1);
    const Word w_head = w.prefix(w.size() - 1);
    for (const auto& [u, c] : shuffle_words(v_head, w, memo).terms()) result.add_term(u.appended(v.last()), c);
    for (const auto& [u, c] : shuffle_words(v, w_head, memo).terms()) result.add_term(u.appended(w.last()), c);
  }
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

NCPolynomial shuffle(const NCPolynomial& p, const NCPolynomial& q) {
  ShuffleMemo memo;
  NCPolynomial out;
  for (const auto& [v, a] : p.terms())
    for (const auto& [w, b] : q.terms()) {
      const Rational scale = a * b;
      for (const auto& [u, c] : shuffle_words(v, w, memo).terms()) out.add_term(u, scale * c);
    }
  return out;
}

NCPolynomial shuffle_power(const NCPolynomial& p, unsigned m) {
  NCPolynomial out = NCPolynomial::one();
  for (unsigned i = 0; i < m; ++i) out = shuffle(out, p);
  return out;
}

}  // namespace abel
