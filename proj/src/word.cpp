#include "ncrat/word.hpp"

#include <algorithm>

namespace ncrat {

Word Word::concat(const Word& other) const {
    std::vector<int> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out));
}

Word Word::reversed() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    return Word(std::move(out));
}

Word Word::prefix(int len) const {
    return Word(std::vector<int>(letters_.begin(), letters_.begin() + len));
}

Word Word::suffix_from(int start) const {
    return Word(std::vector<int>(letters_.begin() + start, letters_.end()));
}

std::vector<std::pair<Word, Word>> Word::splittings() const {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(letters_.size() + 1);
    for (int k = 0; k <= length(); ++k) out.emplace_back(prefix(k), suffix_from(k));
    return out;
}

std::string Word::to_string() const {
    std::string s;
    for (int letter : letters_) s += std::to_string(letter);
    return s;
}

bool deglex_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.letters() < b.letters();
}

bool DegLexLess::operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }

std::vector<Word> words_of_length(int d, int len) {
    std::vector<Word> out;
    if (len == 0) {
        out.push_back(Word::empty());
        return out;
    }
    std::vector<Word> shorter = words_of_length(d, len - 1);
    for (const Word& w : shorter)
        for (int j = 1; j <= d; ++j) out.push_back(w.concat(Word::letter(j)));
    return out;
}

std::vector<Word> words_up_to(int d, int maxLen) {
    std::vector<Word> out;
    for (int len = 0; len <= maxLen; ++len) {
        std::vector<Word> layer = words_of_length(d, len);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace ncrat
