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

#include "polcert/polymap.hpp"

#include <algorithm>
#include <string>

#include "polcert/error.hpp"

namespace polcert::polymap {

MapTable delta(const MapTable& phi, int k) {
    const FiniteGroup& g = *phi.domain;
    const FiniteGroup& h = *phi.codomain;
    MapTable out{phi.domain, phi.codomain, std::vector<int>(g.order())};
    for (int x = 0; x < g.order(); ++x)
        out.images[x] = h.mul(phi(g.mul(k, x)), h.inverse(phi(x)));
    return out;
}

MapTable beta(const MapTable& phi, int k) {
    const FiniteGroup& h = *phi.codomain;
    MapTable d = delta(phi, k);
    int f = h.inverse(phi(k));
    for (int& img : d.images) img = h.mul(f, img);
    return d;
}

bool degree_at_most(const MapTable& phi, int d, DegreeMemo* memo) {
    require(d >= -1, "degree_at_most: d must be >= -1");
    if (d == -1) {
        int id = phi.codomain->identity();
        return std::all_of(phi.images.begin(), phi.images.end(),
                           [&](int img) { return img == id; });
    }
    DegreeMemo local;
    if (!memo) memo = &local;
    auto key = std::make_pair(phi.images, d);
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
    bool ok = true;
    for (int k = 0; k < phi.domain->order() && ok; ++k)
        ok = degree_at_most(delta(phi, k), d - 1, memo);
    (*memo)[key] = ok;
    return ok;
}

std::vector<MapTable> classify_unital_polynomial_maps(const FiniteGroup& g,
                                                      const FiniteGroup& h, int d,
                                                      std::uint64_t guard) {
    int n = g.order(), m = h.order();
    std::uint64_t total = 1;
    for (int i = 0; i < n - 1; ++i) {
        total *= static_cast<std::uint64_t>(m);
        require(total <= guard, "classify: size guard exceeded");
    }

    std::vector<int> free_slots;  // non-identity elements, increasing
    for (int x = 0; x < n; ++x)
        if (x != g.identity()) free_slots.push_back(x);

    std::vector<MapTable> found;
    DegreeMemo memo;
    for (std::uint64_t code = 0; code < total; ++code) {
        MapTable phi{&g, &h, std::vector<int>(n, h.identity())};
        std::uint64_t c = code;
        for (auto it = free_slots.rbegin(); it != free_slots.rend(); ++it) {
            phi.images[*it] = static_cast<int>(c % m);
            c /= m;
        }
        if (degree_at_most(phi, d, &memo)) found.push_back(std::move(phi));
    }
    return found;
}

// ---------------------------------------------------------------------------
// Pol2Model

namespace {

// Action of s^g on V in the basis e1 = alpha (x) s, e2 = beta (x) s, where
// alpha = s - 1, beta = s^2 - 1: s.alpha = beta - alpha, s.beta = -alpha,
// s^2.alpha = -beta, s^2.beta = alpha - beta.
void act(int g, int v0, int v1, int& w0, int& w1) {
    switch (g) {
        case 0: w0 = v0; w1 = v1; break;
        case 1: w0 = ((-v0 - v1) % 3 + 3) % 3; w1 = v0; break;
        default: w0 = v1; w1 = ((-v0 - v1) % 3 + 3) % 3; break;
    }
}

}  // namespace

std::pair<int, int> Pol2Model::psi(int g, int h) {
    // psi(s^g, s^h) = c(s^g) (x) h-bar; c(1) = 0, c(s) = alpha, c(s^2) = beta,
    // and h-bar = h * s-bar, so the coefficient is h on e1 (for g = 1) or
    // e2 (for g = 2).
    if (g == 0 || h == 0) return {0, 0};
    if (g == 1) return {h % 3, 0};
    return {0, h % 3};
}

int Pol2Model::encode(int v0, int v1, int g) const { return v0 + 3 * v1 + 9 * g; }

Pol2Model::Pol2Model()
    : group_([] {
          auto code = [](int v0, int v1, int g) { return v0 + 3 * v1 + 9 * g; };
          int n = 27;
          std::vector<int> t(static_cast<size_t>(n) * n);
          std::vector<std::string> labels(n);
          for (int g = 0; g < 3; ++g)
              for (int v0 = 0; v0 < 3; ++v0)
                  for (int v1 = 0; v1 < 3; ++v1) {
                      labels[code(v0, v1, g)] = "(" + std::to_string(v0) + "e1+" +
                                                std::to_string(v1) + "e2, s^" +
                                                std::to_string(g) + ")";
                      for (int h = 0; h < 3; ++h)
                          for (int w0 = 0; w0 < 3; ++w0)
                              for (int w1 = 0; w1 < 3; ++w1) {
                                  int a0, a1;
                                  act(g, w0, w1, a0, a1);
                                  auto [p0, p1] = psi(g, h);
                                  int r0 = (v0 + a0 + p0) % 3;
                                  int r1 = (v1 + a1 + p1) % 3;
                                  t[static_cast<size_t>(code(v0, v1, g)) * n +
                                    code(w0, w1, h)] = code(r0, r1, (g + h) % 3);
                              }
                  }
          return FiniteGroup(std::move(t), std::move(labels));
      }()) {
    a_ = encode(0, 0, 1);
    b_ = encode(0, 0, 2);
    const FiniteGroup& m = group_;

    // Structure checks; a failure signals a transcription bug.
    require(m.order() == 27, "Pol2Model: wrong order");
    require(m.mul(a_, a_) == encode(1, 0, 2), "Pol2Model: a^2 != (e1, s^2)");
    require(m.pow(a_, 3) == encode(1, 1, 0), "Pol2Model: a^3 != (e1+e2, 1)");
    require(m.pow(b_, 3) == encode(2, 2, 0), "Pol2Model: b^3 != (2e1+2e2, 1)");
    require(m.pow(a_, 9) == m.identity(), "Pol2Model: a^9 != 1");
    require(m.pow(b_, 9) == m.identity(), "Pol2Model: b^9 != 1");
    require(m.conjugate(a_, b_) == m.pow(a_, 4), "Pol2Model: bab^-1 != a^4");
    require(m.conjugate(b_, a_) == m.pow(b_, 4), "Pol2Model: aba^-1 != b^4");
    require(psi(1, 2) == std::make_pair(2, 0), "Pol2Model: psi(s, s^2) != 2e1");
    require(m.exponent() == 9, "Pol2Model: exponent != 9");
}

MapTable Pol2Model::universal_map(const FiniteGroup& c3) const {
    require(c3.order() == 3, "universal_map: domain must be C3");
    MapTable phi{&c3, &group_, std::vector<int>(3)};
    phi.images[c3.identity()] = group_.identity();
    // Non-identity elements of a cyclic(3) table are 1 = s and 2 = s^2.
    phi.images[1] = a_;
    phi.images[2] = b_;
    return phi;
}

// ---------------------------------------------------------------------------
// isomorphism testing

namespace {

struct IsoSearch {
    const FiniteGroup& g;
    const FiniteGroup& h;
    std::vector<int> gens;            // generating sequence of g
    std::vector<int> word_parent;     // BFS definition: elem = parent * gens[which]
    std::vector<int> word_gen;
    std::vector<int> bfs;             // BFS order, identity first
    std::uint64_t budget;

    explicit IsoSearch(const FiniteGroup& g_, const FiniteGroup& h_, std::uint64_t budget_)
        : g(g_), h(h_), budget(budget_) {
        gens = g.small_generating_set();
        word_parent.assign(g.order(), -1);
        word_gen.assign(g.order(), -1);
        std::vector<bool> seen(g.order(), false);
        bfs.push_back(g.identity());
        seen[g.identity()] = true;
        for (size_t head = 0; head < bfs.size(); ++head)
            for (size_t k = 0; k < gens.size(); ++k) {
                int next = g.mul(bfs[head], gens[k]);
                if (!seen[next]) {
                    seen[next] = true;
                    word_parent[next] = bfs[head];
                    word_gen[next] = static_cast<int>(k);
                    bfs.push_back(next);
                }
            }
    }

    bool images_work(const std::vector<int>& img_gens) {
        std::vector<int> f(g.order(), -1);
        f[g.identity()] = h.identity();
        for (int x : bfs) {
            if (x == g.identity()) continue;
            f[x] = h.mul(f[word_parent[x]], img_gens[word_gen[x]]);
        }
        // bijective?
        std::vector<bool> hit(h.order(), false);
        for (int y : f) {
            if (hit[y]) return false;
            hit[y] = true;
        }
        // homomorphism?
        for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < g.order(); ++y) {
                if (budget-- == 0) fail("is_isomorphic_small: work guard exceeded");
                if (f[g.mul(x, y)] != h.mul(f[x], f[y])) return false;
            }
        return true;
    }

    bool search(std::vector<int>& img_gens, size_t k) {
        if (k == gens.size()) return images_work(img_gens);
        int want = g.element_order(gens[k]);
        for (int y = 0; y < h.order(); ++y) {
            if (h.element_order(y) != want) continue;
            img_gens[k] = y;
            if (search(img_gens, k + 1)) return true;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic_small(const FiniteGroup& g, const FiniteGroup& h, std::uint64_t guard) {
    require(g.order() <= 100 && h.order() <= 100, "is_isomorphic_small: order > 100");
    if (g.order() != h.order()) return false;
    if (g.order_profile() != h.order_profile()) return false;
    IsoSearch s(g, h, guard);
    std::vector<int> img(s.gens.size(), 0);
    return s.search(img, 0);
}

std::vector<BatteryEntry> classification_battery() {
    std::vector<BatteryEntry> battery;
    battery.push_back({"S3", FiniteGroup::symmetric3()});
    battery.push_back({"C9xC3_semidirect", FiniteGroup::c9_semidirect_c3()});
    battery.push_back({"Heisenberg27", FiniteGroup::heisenberg27()});
    battery.push_back({"C9xC3", FiniteGroup::c9_times_c3()});
    return battery;
}

}  // namespace polcert::polymap
