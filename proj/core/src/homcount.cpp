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

#include "polcert/homcount.hpp"

#include "polcert/error.hpp"

namespace polcert::fpgroup {

std::vector<std::vector<int>> relator_satisfying_tuples(const Presentation& p,
                                                        const polymap::FiniteGroup& h,
                                                        std::uint64_t guard) {
    int n = h.order();
    std::uint64_t total = 1;
    for (int g = 0; g < p.generator_count; ++g) {
        total *= static_cast<std::uint64_t>(n);
        require(total <= guard, "count_homs: size guard exceeded");
    }

    std::vector<std::vector<int>> found;
    std::vector<int> tuple(p.generator_count, 0);
    auto eval = [&](const Word& w) {
        int x = h.identity();
        for (std::int32_t l : w.letters()) {
            int img = tuple[(l > 0 ? l : -l) - 1];
            x = h.mul(x, l > 0 ? img : h.inverse(img));
        }
        return x;
    };
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int g = p.generator_count - 1; g >= 0; --g) {
            tuple[g] = static_cast<int>(c % n);
            c /= n;
        }
        bool ok = true;
        for (const Word& r : p.relators)
            if (eval(r) != h.identity()) {
                ok = false;
                break;
            }
        if (ok) found.push_back(tuple);
    }
    return found;
}

std::uint64_t count_homs(const Presentation& p, const polymap::FiniteGroup& h,
                         std::uint64_t guard) {
    return relator_satisfying_tuples(p, h, guard).size();
}

}  // namespace polcert::fpgroup
