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

#include "polcert/automorphism.hpp"

#include <algorithm>
#include <map>

namespace polcert::matrep {

IntertwinerResult automorphism_intertwiner_search(const std::vector<Mat3Gf3>& images1,
                                                  const std::vector<Mat3Gf3>& images2) {
    require(images1.size() == images2.size(),
            "intertwiner: image lists must have equal length");
    std::vector<Mat3Gf3> g1 = group_closure(images1);
    std::vector<Mat3Gf3> g2 = group_closure(images2);
    auto keys = [](const std::vector<Mat3Gf3>& v) {
        std::vector<int> k;
        for (const auto& m : v) k.push_back(gf3_code(m));
        std::sort(k.begin(), k.end());
        return k;
    };
    require(keys(g1) == keys(g2), "intertwiner: image lists generate different subgroups");

    IntertwinerResult out;
    out.group_order = g1.size();
    int n = static_cast<int>(g1.size());

    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[gf3_code(g1[static_cast<size_t>(i)])] = i;
    auto idx_of = [&](const Mat3Gf3& m) { return index.at(gf3_code(m)); };

    std::vector<int> table(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<size_t>(a) * n + b] =
                idx_of(g1[static_cast<size_t>(a)] * g1[static_cast<size_t>(b)]);
    auto mul = [&](int a, int b) { return table[static_cast<size_t>(a) * n + b]; };
    int ident = idx_of(Mat3Gf3::identity());

    auto closure_of = [&](const std::vector<int>& gens) {
        std::vector<bool> seen(static_cast<size_t>(n), false);
        std::vector<int> bfs{ident};
        seen[static_cast<size_t>(ident)] = true;
        for (size_t head = 0; head < bfs.size(); ++head)
            for (int g : gens) {
                int next = mul(bfs[head], g);
                if (!seen[static_cast<size_t>(next)]) {
                    seen[static_cast<size_t>(next)] = true;
                    bfs.push_back(next);
                }
            }
        return bfs;
    };

    // A generating pair (the image group is 2-generated for our use; fall
    // back to a longer greedy sequence if not).
    std::vector<int> gens;
    for (int x = 0; x < n && gens.empty(); ++x)
        for (int y = x; y < n; ++y)
            if (static_cast<int>(closure_of({x, y}).size()) == n) {
                gens = {x, y};
                break;
            }
    require(!gens.empty(), "intertwiner: group is not 2-generated");

    // BFS definition tree over the generating pair.
    std::vector<int> parent(static_cast<size_t>(n), -1), via(static_cast<size_t>(n), -1);
    std::vector<int> bfs{ident};
    {
        std::vector<bool> seen(static_cast<size_t>(n), false);
        seen[static_cast<size_t>(ident)] = true;
        for (size_t head = 0; head < bfs.size(); ++head)
            for (size_t k = 0; k < gens.size(); ++k) {
                int next = mul(bfs[head], gens[k]);
                if (!seen[static_cast<size_t>(next)]) {
                    seen[static_cast<size_t>(next)] = true;
                    parent[static_cast<size_t>(next)] = bfs[head];
                    via[static_cast<size_t>(next)] = static_cast<int>(k);
                    bfs.push_back(next);
                }
            }
    }

    std::vector<int> img1_idx, img2_idx;
    for (const auto& m : images1) img1_idx.push_back(idx_of(m));
    for (const auto& m : images2) img2_idx.push_back(idx_of(m));

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            // candidate automorphism: gens[0] -> x, gens[1] -> y
            std::vector<int> f(static_cast<size_t>(n), -1);
            f[static_cast<size_t>(ident)] = ident;
            int imgs[2] = {x, y};
            for (int e : bfs) {
                if (e == ident) continue;
                f[static_cast<size_t>(e)] =
                    mul(f[static_cast<size_t>(parent[static_cast<size_t>(e)])],
                        imgs[via[static_cast<size_t>(e)]]);
            }
            std::vector<bool> hit(static_cast<size_t>(n), false);
            bool bij = true;
            for (int v : f) {
                if (hit[static_cast<size_t>(v)]) {
                    bij = false;
                    break;
                }
                hit[static_cast<size_t>(v)] = true;
            }
            if (!bij) continue;
            bool hom = true;
            for (int a = 0; a < n && hom; ++a)
                for (int b = 0; b < n && hom; ++b)
                    hom = f[static_cast<size_t>(mul(a, b))] ==
                          mul(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]);
            if (!hom) continue;
            ++out.automorphism_count;
            bool intertwines = true;
            for (size_t k = 0; k < img1_idx.size() && intertwines; ++k)
                intertwines = f[static_cast<size_t>(img1_idx[k])] == img2_idx[k];
            if (intertwines && !out.intertwiner_exists) {
                out.intertwiner_exists = true;
                out.witness = f;
            }
        }
    return out;
}

}  // namespace polcert::matrep
