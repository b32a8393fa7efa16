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

#include "polcert/word.hpp"

#include <algorithm>
#include <sstream>

#include "polcert/error.hpp"

namespace polcert::fpgroup {

void Word::append_reduced(std::int32_t letter) {
    if (!letters_.empty() && letters_.back() == -letter)
        letters_.pop_back();
    else
        letters_.push_back(letter);
}

Word Word::from_letters(std::vector<std::int32_t> letters) {
    Word w;
    w.letters_.reserve(letters.size());
    for (std::int32_t l : letters) {
        require(l != 0, "Word: zero letter");
        w.append_reduced(l);
    }
    return w;
}

Word operator*(const Word& a, const Word& b) {
    Word w = a;
    w.letters_.reserve(a.letters_.size() + b.letters_.size());
    for (std::int32_t l : b.letters_) w.append_reduced(l);
    return w;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
    return w;
}

Word Word::pow(long long k) const {
    bool neg = k < 0;
    unsigned long long n = neg ? static_cast<unsigned long long>(-(k + 1)) + 1 : k;
    Word base = neg ? inverse() : *this;
    Word acc;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Word Word::cyclically_reduced() const {
    Word w = *this;
    while (w.letters_.size() >= 2 && w.letters_.front() == -w.letters_.back()) {
        w.letters_.erase(w.letters_.begin());
        w.letters_.pop_back();
    }
    return w;
}

Word Word::substituted(const std::vector<Word>& images) const {
    Word out;
    for (std::int32_t l : letters_) {
        int idx = (l > 0 ? l : -l) - 1;
        require(idx < static_cast<int>(images.size()), "Word::substituted: missing image");
        const Word& img = l > 0 ? images[idx] : images[idx].inverse();
        for (std::int32_t m : img.letters()) out.append_reduced(m);
    }
    return out;
}

long long Word::exponent_sum(int index) const {
    long long s = 0;
    for (std::int32_t l : letters_) {
        if (l == index + 1) ++s;
        if (l == -(index + 1)) --s;
    }
    return s;
}

int Word::max_generator() const {
    int m = -1;
    for (std::int32_t l : letters_) m = std::max(m, (l > 0 ? l : -l) - 1);
    return m;
}

bool operator<(const Word& a, const Word& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
    for (size_t i = 0; i < a.letters_.size(); ++i) {
        int ra = letter_rank(a.letters_[i]), rb = letter_rank(b.letters_[i]);
        if (ra != rb) return ra < rb;
    }
    return false;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < letters_.size();) {
        std::int32_t l = letters_[i];
        size_t j = i;
        while (j < letters_.size() && letters_[j] == l) ++j;
        int idx = (l > 0 ? l : -l) - 1;
        long long e = static_cast<long long>(j - i) * (l > 0 ? 1 : -1);
        if (i > 0) os << "*";
        if (idx < static_cast<int>(names.size()))
            os << names[idx];
        else
            os << "g" << idx;
        if (e != 1) os << "^" << e;
        i = j;
    }
    return os.str();
}

std::string Word::to_string() const {
    std::vector<std::string> names;
    for (int i = 0; i <= max_generator(); ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    return to_string(names);
}

}  // namespace polcert::fpgroup
