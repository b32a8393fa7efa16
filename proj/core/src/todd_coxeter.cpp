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

#include "polcert/todd_coxeter.hpp"

#include <numeric>

#include "polcert/error.hpp"

namespace polcert::fpgroup {

namespace {

class Enumerator {
  public:
    Enumerator(const Presentation& p, long max_cosets)
        : ngens_(p.generator_count), cols_(2 * p.generator_count), max_(max_cosets) {
        new_coset();  // coset 0 = the subgroup
    }

    bool overflowed() const { return overflow_; }
    long cosets_used() const { return static_cast<long>(tab_.size()); }

    static int column(std::int32_t letter) {
        int idx = (letter > 0 ? letter : -letter) - 1;
        return 2 * idx + (letter > 0 ? 0 : 1);
    }
    static int inverse_column(int col) { return col ^ 1; }

    long rep(long c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    bool live(long c) { return rep(c) == c; }

    // Entry lookup with representative compression.
    long get(long c, int col) {
        long t = tab_[c][col];
        if (t < 0) return -1;
        t = rep(t);
        tab_[c][col] = t;
        return t;
    }

    void run(const std::vector<Word>& relators, const std::vector<Word>& subgroup_generators) {
        for (const Word& w : subgroup_generators) {
            scan_and_fill(0, w);
            if (overflow_) return;
        }
        for (long alpha = 0; alpha < cosets_used(); ++alpha) {
            if (!live(alpha)) continue;
            for (const Word& r : relators) {
                scan_and_fill(alpha, r);
                if (overflow_) return;
                if (!live(alpha)) break;
            }
            if (!live(alpha)) continue;
            // Fill any column not touched by the relators so the table closes.
            for (int col = 0; col < cols_; ++col) {
                if (overflow_) return;
                if (get(alpha, col) < 0) define(alpha, col);
                if (!live(alpha)) break;
            }
        }
    }

    CosetTable extract(int ngens) {
        CosetTable out;
        out.generator_count = ngens;
        out.complete = !overflow_;
        out.max_cosets_used = cosets_used();
        if (overflow_) return out;

        // Compact live cosets, then renumber in breadth-first order with the
        // alphabet order g1 < g1^-1 < g2 < ... (standardized table).
        std::vector<long> live_ids;
        for (long c = 0; c < cosets_used(); ++c)
            if (live(c)) live_ids.push_back(c);

        std::vector<long> order;   // BFS order of live coset ids
        std::vector<long> number(tab_.size(), -1);
        order.push_back(rep(0));
        number[rep(0)] = 0;
        for (size_t head = 0; head < order.size(); ++head) {
            long c = order[head];
            for (int col = 0; col < cols_; ++col) {
                long t = get(c, col);
                require(t >= 0, "todd_coxeter: incomplete entry in completed table");
                if (number[t] < 0) {
                    number[t] = static_cast<long>(order.size());
                    order.push_back(t);
                }
            }
        }
        require(order.size() == live_ids.size(), "todd_coxeter: table not connected");

        out.rows.assign(order.size(), std::vector<long>(cols_, -1));
        for (size_t i = 0; i < order.size(); ++i)
            for (int col = 0; col < cols_; ++col) out.rows[i][col] = number[get(order[i], col)];
        return out;
    }

  private:
    int ngens_, cols_;
    long max_;
    bool overflow_ = false;
    std::vector<std::vector<long>> tab_;
    std::vector<long> parent_;

    long new_coset() {
        if (cosets_used() >= max_) {
            overflow_ = true;
            return -1;
        }
        tab_.emplace_back(cols_, -1);
        parent_.push_back(static_cast<long>(parent_.size()));
        return static_cast<long>(tab_.size()) - 1;
    }

    void set_edge(long a, int col, long b) {
        tab_[a][col] = b;
        tab_[b][inverse_column(col)] = a;
    }

    long define(long c, int col) {
        long n = new_coset();
        if (n < 0) return -1;
        set_edge(c, col, n);
        return n;
    }

    void coincide(long a, long b) {
        std::vector<long> queue;
        auto merge = [&](long x, long y) {
            x = rep(x);
            y = rep(y);
            if (x == y) return;
            if (x > y) std::swap(x, y);
            parent_[y] = x;
            queue.push_back(y);
        };
        merge(a, b);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            long dead = queue[qi];
            for (int col = 0; col < cols_; ++col) {
                long target = tab_[dead][col];
                if (target < 0) continue;
                tab_[dead][col] = -1;
                long t = rep(target);
                long s = rep(dead);
                long existing = tab_[s][col];
                if (existing >= 0 && rep(existing) != t) {
                    merge(existing, t);
                    continue;
                }
                // rep() targets may have moved during merging; re-read
                t = rep(t);
                s = rep(s);
                tab_[s][col] = t;
                long back = tab_[t][inverse_column(col)];
                if (back >= 0 && rep(back) != s)
                    merge(back, s);
                else
                    tab_[t][inverse_column(col)] = s;
            }
        }
    }

    void scan_and_fill(long alpha, const Word& w) {
        const auto& letters = w.letters();
        if (letters.empty()) return;
        long f = alpha;
        long b = alpha;
        long i = 0;
        long j = static_cast<long>(letters.size()) - 1;
        for (;;) {
            while (i <= j) {
                long t = get(f, column(letters[i]));
                if (t < 0) break;
                f = t;
                ++i;
            }
            if (i > j) {
                if (f != b) coincide(f, b);
                return;
            }
            while (j >= i) {
                long t = get(b, inverse_column(column(letters[j])));
                if (t < 0) break;
                b = t;
                --j;
            }
            if (j < i) {
                coincide(f, b);
                return;
            }
            if (j == i) {  // deduction closes the scan
                set_edge(f, column(letters[i]), b);
                return;
            }
            long n = define(f, column(letters[i]));  // fill the gap and continue
            if (n < 0) return;                       // overflow
            f = n;
            ++i;
        }
    }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators,
                        long max_cosets) {
    require(max_cosets >= 1, "todd_coxeter: max_cosets must be >= 1");
    Enumerator e(p, max_cosets);
    e.run(p.relators, subgroup_generators);
    return e.extract(p.generator_count);
}

bool verify_coset_table(const CosetTable& t, const Presentation& p,
                        const std::vector<Word>& subgroup_generators) {
    if (!t.complete) return false;
    long n = t.index();
    for (long c = 0; c < n; ++c) {
        for (int col = 0; col < 2 * t.generator_count; ++col) {
            long d = t.rows[c][col];
            if (d < 0 || d >= n) return false;
            if (t.rows[d][col ^ 1] != c) return false;
        }
    }
    for (const Word& r : p.relators)
        for (long c = 0; c < n; ++c)
            if (t.apply_word(c, r) != c) return false;
    for (const Word& g : subgroup_generators)
        if (t.apply_word(0, g) != 0) return false;
    return true;
}

}  // namespace polcert::fpgroup
