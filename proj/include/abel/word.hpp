#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace abel {

/// A letter is the index i of the control u_i. The alphabet size n+1 is a
/// runtime value; indices are validated against it wherever an alphabet is
/// known (equation specs, control grids, parsers).
using Letter = std::uint8_t;

inline constexpr int kMaxLetterIndex = 255;

/// Finite sequence of letters; the index of one iterated integral. The empty
/// word is the algebra unit. Words compare by length first, then
/// lexicographically by letter index — the canonical order used for all
/// deterministic output.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters);

  static Word single(int letter);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// First len letters.
  Word prefix(std::size_t len) const;
  /// w.b — this word with letter b appended.
  Word appended(Letter b) const;
  Letter last() const { return letters_.back(); }
  int max_letter() const;  // -1 for the empty word

  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
  }

  /// "a0.a1.a1"; the empty word renders as "1".
  std::string to_text() const;
  static Word from_text(std::string_view s);

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& v, const Word& w);

}  // namespace abel
