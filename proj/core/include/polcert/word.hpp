/*
   Copyright 2026 The polcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLCERT_WORD_HPP
#define POLCERT_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace polcert::fpgroup {

/// Freely reduced word over a generator alphabet. Letters are nonzero
/// signed indices: +k means generator k-1, -k its inverse. The empty word
/// is the identity. All constructors and operations reduce.
class Word {
  public:
    Word() = default;
    static Word identity() { return {}; }
    static Word gen(int index, bool inverse = false) {
        Word w;
        w.letters_.push_back(inverse ? -(index + 1) : index + 1);
        return w;
    }
    static Word from_letters(std::vector<std::int32_t> letters);

    const std::vector<std::int32_t>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    friend Word operator*(const Word& a, const Word& b);
    Word inverse() const;
    Word pow(long long k) const;
    /// by * w * by^-1.
    Word conjugated_by(const Word& by) const { return by * (*this) * by.inverse(); }
    Word cyclically_reduced() const;

    /// Replace letter +-k by images[k-1]^(+-1).
    Word substituted(const std::vector<Word>& images) const;

    /// Signed number of occurrences of generator `index` (0-based).
    long long exponent_sum(int index) const;

    /// Largest 0-based generator index used; -1 for the empty word.
    int max_generator() const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b);  // shortlex, a < a^-1 < b < ...

    /// Rendered with the given generator names, e.g. "a*b^-1*a".
    std::string to_string(const std::vector<std::string>& names) const;
    /// Rendered with default names a, b, c, ...
    std::string to_string() const;

  private:
    std::vector<std::int32_t> letters_;
    void append_reduced(std::int32_t letter);
};

/// x y x^-1 y^-1.
inline Word commutator(const Word& x, const Word& y) {
    return x * y * x.inverse() * y.inverse();
}

/// Rank of a letter in the shortlex alphabet order g1 < g1^-1 < g2 < g2^-1 < ...
inline int letter_rank(std::int32_t letter) {
    int idx = letter > 0 ? letter : -letter;
    return 2 * (idx - 1) + (letter < 0 ? 1 : 0);
}

}  // namespace polcert::fpgroup

#endif
