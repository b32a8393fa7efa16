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

#include "polcert/schreier.hpp"

#include "polcert/error.hpp"

namespace polcert::fpgroup {

int FiniteImage::image_of(const Word& w) const {
    int x = target->identity();
    for (std::int32_t l : w.letters()) {
        int idx = (l > 0 ? l : -l) - 1;
        int img = images[idx];
        x = target->mul(x, l > 0 ? img : target->inverse(img));
    }
    return x;
}

SubgroupData reidemeister_schreier(int generator_count, const FiniteImage& image) {
    const polymap::FiniteGroup& h = *image.target;
    require(static_cast<int>(image.images.size()) == generator_count,
            "reidemeister_schreier: image count mismatch");
    require(h.generates(image.images), "reidemeister_schreier: images do not generate the target");

    // Breadth-first search over the target group; visiting letters in the
    // order g1 < g1^-1 < g2 < ... makes representatives shortlex-minimal.
    std::vector<Word> rep(h.order());
    std::vector<bool> seen(h.order(), false);
    std::vector<int> bfs{h.identity()};
    seen[h.identity()] = true;
    for (size_t head = 0; head < bfs.size(); ++head) {
        int x = bfs[head];
        for (int g = 0; g < generator_count; ++g)
            for (int sign = 0; sign < 2; ++sign) {
                int img = sign == 0 ? image.images[g] : h.inverse(image.images[g]);
                int next = h.mul(x, img);
                if (!seen[next]) {
                    seen[next] = true;
                    rep[next] = rep[x] * Word::gen(g, sign == 1);
                    bfs.push_back(next);
                }
            }
    }

    SubgroupData out;
    for (int x : bfs) out.transversal.push_back(rep[x]);
    for (int x : bfs)
        for (int g = 0; g < generator_count; ++g) {
            int tg = h.mul(x, image.images[g]);
            Word s = rep[x] * Word::gen(g) * rep[tg].inverse();
            if (!s.empty()) out.schreier_generators.push_back(s);
        }
    return out;
}

}  // namespace polcert::fpgroup
