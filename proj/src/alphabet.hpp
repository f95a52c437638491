#pragma once

#include <string>
#include <vector>

namespace msokit {

// Ordered finite set of symbol names. Symbol order is fixed and used for
// every canonical encoding (letter indices, closure orders, JSON columns).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  // One single-character symbol per char, e.g. "ab" -> {a, b}.
  static Alphabet from_chars(const std::string& chars);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_[i]; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  // -1 when absent.
  int index_of(const std::string& symbol) const;

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
};

// Finite word: sequence of symbol indices over a fixed alphabet. The empty
// sequence is the empty word.
class Word {
 public:
  explicit Word(Alphabet alphabet, std::vector<int> letters = {});

  // Parses one single-character symbol per char; "" is the empty word.
  static Word parse(const Alphabet& alphabet, const std::string& text);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int letter(std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  Word prefix(std::size_t length) const;
  std::string str() const;

  bool operator==(const Word& other) const {
    return alphabet_ == other.alphabet_ && letters_ == other.letters_;
  }

 private:
  Alphabet alphabet_;
  std::vector<int> letters_;
};

// w followed by v; alphabets must agree.
Word concat(const Word& w, const Word& v);

// All words over `alphabet` with size <= max_length, shortlex order.
std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_length);

}  // namespace msokit
