#include "abel/word.hpp"

#include <stdexcept>

namespace abel {

namespace {
Letter checked_letter(int i) {
  if (i < 0 || i > kMaxLetterIndex) throw std::out_of_range("letter index out of range");
  return static_cast<Letter>(i);
}
}  // namespace

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int i : letters) letters_.push_back(checked_letter(i));
}

Word Word::single(int letter) { return Word{std::vector<Letter>{checked_letter(letter)}}; }

Word Word::prefix(std::size_t len) const {
  return Word{std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(len))};
}

Word Word::appended(Letter b) const {
  std::vector<Letter> out = letters_;
  out.push_back(b);
  return Word{std::move(out)};
}

int Word::max_letter() const {
  int m = -1;
  for (Letter b : letters_) m = std::max(m, static_cast<int>(b));
  return m;
}

std::string Word::to_text() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += '.';
    s += 'a';
    s += std::to_string(static_cast<int>(letters_[i]));
  }
  return s;
}

Word Word::from_text(std::string_view s) {
  if (s == "1") return Word{};
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'a') throw std::invalid_argument("bad word: '" + std::string(s) + "'");
    ++pos;
    std::size_t end = pos;
    while (end < s.size() && s[end] != '.') ++end;
    if (end == pos) throw std::invalid_argument("bad word: '" + std::string(s) + "'");
    letters.push_back(checked_letter(std::stoi(std::string(s.substr(pos, end - pos)))));
    pos = end < s.size() ? end + 1 : end;
    if (pos == s.size() && end < s.size()) throw std::invalid_argument("bad word: trailing '.'");
  }
  if (letters.empty()) throw std::invalid_argument("bad word: empty");
  return Word{std::move(letters)};
}

Word concat(const Word& v, const Word& w) {
  std::vector<Letter> out;
  out.reserve(v.size() + w.size());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().end());
  return Word{std::move(out)};
}

}  // namespace abel
