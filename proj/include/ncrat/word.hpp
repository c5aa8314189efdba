#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ncrat {

/// A word over the free semigroup on letters 1..d, stored in multiplication
/// order: Word{1,2} is the monomial z1*z2. The empty word is the unit.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<int> letters) : letters_(letters) {}

    static Word empty() { return Word(); }
    static Word letter(int j) { return Word({j}); }

    int length() const { return static_cast<int>(letters_.size()); }
    bool is_empty() const { return letters_.empty(); }
    int at(int i) const { return letters_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& letters() const { return letters_; }

    Word concat(const Word& other) const;
    Word reversed() const;
    Word prefix(int len) const;
    Word suffix_from(int start) const;

    /// All splittings w = u v, as (u, v) pairs in order of |u| = 0..|w|.
    std::vector<std::pair<Word, Word>> splittings() const;

    bool operator==(const Word& other) const { return letters_ == other.letters_; }
    bool operator!=(const Word& other) const { return letters_ != other.letters_; }

    /// Digit string, e.g. "121" for z1*z2*z1; empty word prints "".
    std::string to_string() const;

  private:
    std::vector<int> letters_;
};

/// Degree-lexicographic order with letter order 1 < 2 < ... < d; the
/// canonical ordering for serialization and coefficient maps.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const;
};

bool deglex_less(const Word& a, const Word& b);

/// All words of length exactly `len` over letters 1..d, in lex order.
std::vector<Word> words_of_length(int d, int len);

/// All words of length <= maxLen over letters 1..d, in deglex order.
std::vector<Word> words_up_to(int d, int maxLen);

}  // namespace ncrat
