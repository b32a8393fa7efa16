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

#include "polcert/finite_group.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "polcert/error.hpp"

namespace polcert::polymap {

FiniteGroup::FiniteGroup(std::vector<int> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
    double root = std::sqrt(static_cast<double>(table_.size()));
    n_ = static_cast<int>(root + 0.5);
    require(static_cast<size_t>(n_) * n_ == table_.size() && n_ > 0,
            "FiniteGroup: table is not square");
    for (int v : table_) require(v >= 0 && v < n_, "FiniteGroup: index out of range");

    // Find the two-sided identity.
    id_ = -1;
    for (int e = 0; e < n_; ++e) {
        bool ok = true;
        for (int x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) {
            id_ = e;
            break;
        }
    }
    require(id_ >= 0, "FiniteGroup: no identity element");

    inv_.assign(n_, -1);
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y)
            if (mul(x, y) == id_ && mul(y, x) == id_) {
                inv_[x] = y;
                break;
            }
        require(inv_[x] >= 0, "FiniteGroup: missing inverse");
    }

    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int i = 0; i < n_; ++i) labels_.push_back("e" + std::to_string(i));
    }
    require(static_cast<int>(labels_.size()) == n_, "FiniteGroup: wrong label count");
    validate();
}

void FiniteGroup::validate() const {
    if (n_ <= 64) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    require(mul(mul(a, b), c) == mul(a, mul(b, c)),
                            "FiniteGroup: associativity fails");
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> d(0, n_ - 1);
        for (int k = 0; k < 20000; ++k) {
            int a = d(rng), b = d(rng), c = d(rng);
            require(mul(mul(a, b), c) == mul(a, mul(b, c)),
                    "FiniteGroup: associativity fails (sampled)");
        }
    }
}

int FiniteGroup::pow(int g, long long k) const {
    if (k < 0) return pow(inverse(g), -k);
    int acc = id_;
    int base = g;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

int FiniteGroup::element_order(int g) const {
    int x = g, k = 1;
    while (x != id_) {
        x = mul(x, g);
        ++k;
    }
    return k;
}

long FiniteGroup::exponent() const {
    long e = 1;
    for (int g = 0; g < n_; ++g) e = std::lcm(e, static_cast<long>(element_order(g)));
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
    std::vector<bool> seen(n_, false);
    std::vector<int> queue{id_};
    seen[id_] = true;
    for (size_t head = 0; head < queue.size(); ++head)
        for (int g : gens) {
            int next = mul(queue[head], g);
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<int> FiniteGroup::small_generating_set() const {
    std::vector<int> gens;
    std::vector<int> have{id_};
    while (static_cast<int>(have.size()) < n_) {
        // first element not yet generated
        int next = -1;
        std::vector<bool> in(n_, false);
        for (int x : have) in[x] = true;
        for (int x = 0; x < n_; ++x)
            if (!in[x]) {
                next = x;
                break;
            }
        gens.push_back(next);
        have = generated_subgroup(gens);
    }
    return gens;
}

std::vector<int> FiniteGroup::order_profile() const {
    std::vector<int> prof(n_);
    for (int g = 0; g < n_; ++g) prof[g] = element_order(g);
    std::sort(prof.begin(), prof.end());
    return prof;
}

bool MapTable::is_homomorphism() const {
    int n = domain->order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (images[domain->mul(a, b)] != codomain->mul(images[a], images[b])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// constructors

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
    require(n >= 1, "cyclic: order must be positive");
    std::vector<int> t(static_cast<size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order() * b.order();
    std::vector<int> t(static_cast<size_t>(n) * n);
    std::vector<std::string> labels(n);
    auto code = [&](int x, int y) { return x * b.order() + y; };
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1) {
            labels[code(x1, y1)] = "(" + a.label(x1) + "," + b.label(y1) + ")";
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[static_cast<size_t>(code(x1, y1)) * n + code(x2, y2)] =
                        code(a.mul(x1, x2), b.mul(y1, y2));
        }
    return FiniteGroup(std::move(t), std::move(labels));
}

namespace {

std::vector<int> perm_mul(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
    return h;
}

std::string perm_key(const std::vector<int>& p) {
    std::string s;
    for (int v : p) s += std::to_string(v) + ",";
    return s;
}

std::string perm_cycles(const std::vector<int>& p) {
    std::string s;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        s += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) s += " ";
            first = false;
            s += std::to_string(j + 1);
            j = static_cast<size_t>(p[j]);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens, size_t degree) {
    std::map<std::string, int> index;
    std::vector<std::vector<int>> elems;
    std::vector<int> ident(degree);
    std::iota(ident.begin(), ident.end(), 0);
    elems.push_back(ident);
    index[perm_key(ident)] = 0;
    for (size_t head = 0; head < elems.size(); ++head)
        for (const auto& g : gens) {
            auto next = perm_mul(elems[head], g);
            auto key = perm_key(next);
            if (!index.count(key)) {
                index[key] = static_cast<int>(elems.size());
                elems.push_back(next);
            }
        }
    int n = static_cast<int>(elems.size());
    std::vector<int> t(static_cast<size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = perm_cycles(elems[a]);
        for (int b = 0; b < n; ++b)
            t[static_cast<size_t>(a) * n + b] = index.at(perm_key(perm_mul(elems[a], elems[b])));
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

}  // namespace

FiniteGroup FiniteGroup::symmetric3() {
    return group_from_permutations({{1, 2, 0}, {1, 0, 2}}, 3);  // (123), (12)
}

FiniteGroup FiniteGroup::c9_semidirect_c3() {
    // elements (i, j) in C9 x C3 with (i,j)(k,l) = (i + 4^j k, j + l)
    int n = 27;
    auto code = [](int i, int j) { return i * 3 + j; };
    int pow4[3] = {1, 4, 7};  // 4^j mod 9
    std::vector<int> t(static_cast<size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 3; ++j) {
            labels[code(i, j)] = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            for (int k = 0; k < 9; ++k)
                for (int l = 0; l < 3; ++l)
                    t[static_cast<size_t>(code(i, j)) * n + code(k, l)] =
                        code((i + pow4[j] * k) % 9, (j + l) % 3);
        }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::heisenberg27() {
    // upper unitriangular 3x3 over F3: (a, b, c) = I + a E12 + b E23 + c E13;
    // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')
    int n = 27;
    auto code = [](int a, int b, int c) { return a * 9 + b * 3 + c; };
    std::vector<int> t(static_cast<size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                labels[code(a, b, c)] = "[" + std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c) + "]";
                for (int a2 = 0; a2 < 3; ++a2)
                    for (int b2 = 0; b2 < 3; ++b2)
                        for (int c2 = 0; c2 < 3; ++c2)
                            t[static_cast<size_t>(code(a, b, c)) * n + code(a2, b2, c2)] =
                                code((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
            }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::from_closure(
    const std::vector<std::string>& generator_keys, const std::string& identity_key,
    const std::function<std::string(const std::string&, const std::string&)>& mul, int guard) {
    std::map<std::string, int> index;
    std::vector<std::string> elems{identity_key};
    index[identity_key] = 0;
    for (size_t head = 0; head < elems.size(); ++head)
        for (const auto& g : generator_keys) {
            std::string next = mul(elems[head], g);
            if (!index.count(next)) {
                require(static_cast<int>(elems.size()) < guard, "from_closure: guard exceeded");
                index[next] = static_cast<int>(elems.size());
                elems.push_back(next);
            }
        }
    int n = static_cast<int>(elems.size());
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<size_t>(a) * n + b] = index.at(mul(elems[a], elems[b]));
    return FiniteGroup(std::move(t), elems);
}

// ---------------------------------------------------------------------------
// ingestion

FiniteGroup FiniteGroup::parse(std::istream& in) {
    std::string kind;
    require(static_cast<bool>(in >> kind), "group parse error: empty input");
    if (kind == "order") {
        int n = 0;
        require(static_cast<bool>(in >> n) && n >= 1, "group parse error: bad order");
        std::vector<int> t(static_cast<size_t>(n) * n);
        for (size_t i = 0; i < t.size(); ++i)
            require(static_cast<bool>(in >> t[i]),
                    "group parse error: table entry " + std::to_string(i) + " missing");
        return FiniteGroup(std::move(t));
    }
    if (kind == "perm") {
        int degree = 0;
        require(static_cast<bool>(in >> degree) && degree >= 1, "group parse error: bad degree");
        std::vector<std::vector<int>> gens;
        std::string line;
        std::getline(in, line);  // rest of header line
        while (std::getline(in, line)) {
            // parse cycles like (1 2 3)(4 5); commas also accepted
            std::vector<int> p(degree);
            std::iota(p.begin(), p.end(), 0);
            size_t pos = 0;
            bool any = false;
            while (pos < line.size()) {
                if (line[pos] != '(') {
                    ++pos;
                    continue;
                }
                size_t close = line.find(')', pos);
                require(close != std::string::npos, "group parse error: unbalanced cycle");
                std::string body = line.substr(pos + 1, close - pos - 1);
                for (char& c : body)
                    if (c == ',') c = ' ';
                std::istringstream cs(body);
                std::vector<int> cyc;
                int v;
                while (cs >> v) {
                    require(v >= 1 && v <= degree, "group parse error: point out of range");
                    cyc.push_back(v - 1);
                }
                for (size_t i = 0; i < cyc.size(); ++i)
                    p[cyc[i]] = cyc[(i + 1) % cyc.size()];
                any = true;
                pos = close + 1;
            }
            if (any) gens.push_back(p);
        }
        require(!gens.empty(), "group parse error: no permutation generators");
        return group_from_permutations(gens, static_cast<size_t>(degree));
    }
    fail("group parse error: expected 'order' or 'perm', got \"" + kind + "\"");
}

FiniteGroup FiniteGroup::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

void FiniteGroup::write_table(std::ostream& out) const {
    out << "order " << n_ << "\n";
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) out << (b ? " " : "") << mul(a, b);
        out << "\n";
    }
}

}  // namespace polcert::polymap
