#include "abel/serialize.hpp"

#include <json.hpp>

namespace abel {

namespace {

using nlohmann::json;

json term_to_json(const Word& w, const Rational& c) {
  json t;
  t["word"] = w.letters();
  t["num"] = numerator(c).str();
  t["den"] = denominator(c).str();
  return t;
}

json polynomial_to_json_value(const NCPolynomial& p) {
  json terms = json::array();
  for (const auto& [w, c] : p.terms()) terms.push_back(term_to_json(w, c));
  return terms;
}

Rational rational_from_json(const json& t) {
  const auto read = [](const json& v) {
    return v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<long long>());
  };
  const Integer num = read(t.at("num"));
  const Integer den = t.contains("den") ? read(t.at("den")) : Integer(1);
  if (den == 0) throw std::invalid_argument("zero denominator in term");
  return Rational(num, den);
}

NCPolynomial polynomial_from_json_value(const json& terms) {
  NCPolynomial p;
  for (const auto& t : terms) {
    std::vector<Letter> letters;
    for (const auto& b : t.at("word")) {
      const int i = b.get<int>();
      if (i < 0 || i > kMaxLetterIndex) throw std::invalid_argument("letter index out of range");
      letters.push_back(static_cast<Letter>(i));
    }
    p.add_term(Word(std::move(letters)), rational_from_json(t));
  }
  return p;
}

}  // namespace

std::string polynomial_to_json(const NCPolynomial& p) { return polynomial_to_json_value(p).dump(); }

NCPolynomial polynomial_from_json(const std::string& text) {
  return polynomial_from_json_value(json::parse(text));
}

std::string series_to_json(const GradedSeries& s, int n) {
  json out;
  out["n"] = n;
  out["K"] = s.truncation_order();
  json parts = json::array();
  for (const auto& p : s.parts()) parts.push_back(polynomial_to_json_value(p));
  out["parts"] = std::move(parts);
  return out.dump(2);
}

SeriesWithAlphabet series_from_json(const std::string& text) {
  const json in = json::parse(text);
  const int K = in.at("K").get<int>();
  const auto& parts = in.at("parts");
  if (static_cast<int>(parts.size()) != K + 1)
    throw std::invalid_argument("series JSON: parts size does not match K");
  SeriesWithAlphabet out{GradedSeries(K), in.at("n").get<int>()};
  for (int k = 0; k <= K; ++k) out.series.set_part(k, polynomial_from_json_value(parts[static_cast<std::size_t>(k)]));
  return out;
}

}  // namespace abel
