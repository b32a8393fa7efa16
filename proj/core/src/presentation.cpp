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

#include "polcert/presentation.hpp"

#include <cctype>
#include <sstream>

#include "polcert/error.hpp"

namespace polcert::fpgroup {

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> rels)
    : generator_count(static_cast<int>(generator_names.size())),
      names(std::move(generator_names)) {
    relators.reserve(rels.size());
    for (const Word& r : rels) {
        require(r.max_generator() < generator_count, "Presentation: relator uses unknown generator");
        relators.push_back(r.cyclically_reduced());
    }
}

std::string Presentation::to_string() const {
    std::ostringstream os;
    os << "gens:";
    for (const auto& n : names) os << " " << n;
    os << "\nrels: ";
    for (size_t i = 0; i < relators.size(); ++i) {
        if (i) os << ", ";
        os << relators[i].to_string(names);
    }
    os << "\n";
    return os.str();
}

namespace {

// Recursive-descent parser for the word grammar:
//   word   := factor ('*' factor)*
//   factor := atom ('^' int)?
//   atom   := name | '(' word ')' | '[' word ',' word ']'
struct WordParser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& names;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        skip_ws();
        require(pos < s.size() && s[pos] == c,
                std::string("word parse error: expected '") + c + "' at position " +
                    std::to_string(pos) + " in \"" + s + "\"");
        ++pos;
    }

    long long parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        require(pos > start && std::isdigit(static_cast<unsigned char>(s[pos - 1])),
                "word parse error: expected integer in \"" + s + "\"");
        return std::stoll(s.substr(start, pos - start));
    }

    Word parse_atom() {
        skip_ws();
        require(pos < s.size(), "word parse error: unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Word w = parse_word();
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos;
            Word x = parse_word();
            expect(',');
            Word y = parse_word();
            expect(']');
            return commutator(x, y);
        }
        if (c == '1') {  // identity
            ++pos;
            return Word::identity();
        }
        require(std::isalpha(static_cast<unsigned char>(c)) || c == '_',
                "word parse error: unexpected character '" + std::string(1, c) + "'");
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string name = s.substr(start, pos - start);
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return Word::gen(static_cast<int>(i));
        fail("word parse error: unknown generator \"" + name + "\"");
    }

    Word parse_factor() {
        Word w = parse_atom();
        skip_ws();
        if (peek_is('^')) {
            ++pos;
            w = w.pow(parse_int());
        }
        return w;
    }

    Word parse_word() {
        Word w = parse_factor();
        for (;;) {
            skip_ws();
            if (peek_is('*')) {
                ++pos;
                w = w * parse_factor();
            } else {
                return w;
            }
        }
    }
};

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Split on commas at bracket depth zero.
std::vector<std::string> split_relators(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty()) parts.push_back(cur);
    return parts;
}

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
    WordParser p{text, 0, names};
    Word w = p.parse_word();
    p.skip_ws();
    require(p.pos == text.size(), "word parse error: trailing input in \"" + text + "\"");
    return w;
}

Presentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> names;
    std::vector<Word> rels;
    bool saw_gens = false;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("gens:", 0) == 0) {
            std::istringstream gs(line.substr(5));
            std::string n;
            while (gs >> n) names.push_back(n);
            saw_gens = true;
        } else if (line.rfind("rels:", 0) == 0) {
            require(saw_gens, "presentation parse error: rels before gens");
            for (const std::string& part : split_relators(line.substr(5)))
                rels.push_back(parse_word(strip(part), names));
        } else {
            fail("presentation parse error: unexpected line \"" + line + "\"");
        }
    }
    require(saw_gens && !names.empty(), "presentation parse error: missing gens line");
    return Presentation(names, rels);
}

Presentation gamma_presentation() {
    return parse_presentation(
        "gens: a b\n"
        "rels: (b*a)^3, (a*b^-1*a)^3, [b*a, a*b^-1*a]\n");
}

Presentation pol2_presentation() {
    return parse_presentation(
        "gens: a b\n"
        "rels: a^9, b^9, b*a*b^-1*a^-4, a*b*a^-1*b^-4\n");
}

}  // namespace polcert::fpgroup
