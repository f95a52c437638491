#include "alphabet.hpp"

#include <set>

#include "errors.hpp"

namespace msokit {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InputError("alphabet must be nonempty");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw InputError("alphabet symbols must be nonempty");
    if (!seen.insert(s).second) throw InputError("duplicate alphabet symbol '" + s + "'");
  }
}

Alphabet Alphabet::from_chars(const std::string& chars) {
  std::vector<std::string> symbols;
  symbols.reserve(chars.size());
  for (char c : chars) symbols.emplace_back(1, c);
  return Alphabet(std::move(symbols));
}

int Alphabet::index_of(const std::string& symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == symbol) return static_cast<int>(i);
  }
  return -1;
}

Word::Word(Alphabet alphabet, std::vector<int> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l < 0 || static_cast<std::size_t>(l) >= alphabet_.size()) {
      throw InputError("letter index out of range");
    }
  }
}

Word Word::parse(const Alphabet& alphabet, const std::string& text) {
  std::vector<int> letters;
  letters.reserve(text.size());
  for (char c : text) {
    int idx = alphabet.index_of(std::string(1, c));
    if (idx < 0) {
      throw InputError(std::string("symbol '") + c + "' is not in the alphabet");
    }
    letters.push_back(idx);
  }
  return Word(alphabet, std::move(letters));
}

Word Word::prefix(std::size_t length) const {
  std::vector<int> letters(letters_.begin(),
                           letters_.begin() + static_cast<long>(std::min(length, letters_.size())));
  return Word(alphabet_, std::move(letters));
}

std::string Word::str() const {
  std::string out;
  for (int l : letters_) out += alphabet_.symbol(static_cast<std::size_t>(l));
  return out;
}

Word concat(const Word& w, const Word& v) {
  if (!(w.alphabet() == v.alphabet())) throw InputError("concat: alphabet mismatch");
  std::vector<int> letters = w.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(w.alphabet(), std::move(letters));
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_length) {
  std::vector<Word> out;
  out.emplace_back(alphabet);
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t s = 0; s < alphabet.size(); ++s) {
        std::vector<int> letters = out[i].letters();
        letters.push_back(static_cast<int>(s));
        out.emplace_back(alphabet, std::move(letters));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace msokit
