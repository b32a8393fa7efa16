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

#ifndef POLCERT_FINITE_GROUP_HPP
#define POLCERT_FINITE_GROUP_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace polcert::polymap {

/// Finite group given by its multiplication table. Group axioms are
/// validated at construction (full associativity up to order 64, random
/// sampling beyond); a corrupt table throws.
class FiniteGroup {
  public:
    FiniteGroup(std::vector<int> table, std::vector<std::string> labels = {});

    int order() const { return n_; }
    int identity() const { return id_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inverse(int a) const { return inv_[a]; }
    int pow(int g, long long k) const;
    int element_order(int g) const;
    long exponent() const;  // lcm of element orders
    int conjugate(int g, int by) const { return mul(mul(by, g), inverse(by)); }
    int commutator(int x, int y) const {
        return mul(mul(x, y), mul(inverse(x), inverse(y)));
    }
    bool is_abelian() const;

    const std::string& label(int g) const { return labels_[g]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Sorted element list of the subgroup generated by gens.
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
    bool generates(const std::vector<int>& gens) const {
        return static_cast<int>(generated_subgroup(gens).size()) == n_;
    }
    /// Smallest generating sequence found greedily (not guaranteed minimal).
    std::vector<int> small_generating_set() const;

    /// Multiset of element orders, sorted (an isomorphism invariant).
    std::vector<int> order_profile() const;

    // --- constructors for the built-in battery ---
    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup symmetric3();
    /// C9 x| C3 with the C3 generator acting on C9 by multiplication by 4.
    static FiniteGroup c9_semidirect_c3();
    static FiniteGroup heisenberg27();
    static FiniteGroup c9_times_c3() { return direct_product(cyclic(9), cyclic(3)); }

    /// Closure of abstract generators under a multiplication callback; the
    /// callback works on opaque element keys (strings). Deterministic BFS
    /// element order; gens need not include the identity.
    static FiniteGroup from_closure(const std::vector<std::string>& generator_keys,
                                    const std::string& identity_key,
                                    const std::function<std::string(const std::string&,
                                                                    const std::string&)>& mul,
                                    int guard = 1 << 20);

    // --- ingestion file formats ---
    /// "order n" followed by n rows of n indices, or "perm n" followed by one
    /// generator per line in cycle notation, e.g. "(1 2 3)(4 5)".
    static FiniteGroup parse(std::istream& in);
    static FiniteGroup parse(const std::string& text);
    void write_table(std::ostream& out) const;

  private:
    int n_ = 0;
    int id_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    void validate() const;
};

/// Unital map between finite groups, stored as an image per domain element.
struct MapTable {
    const FiniteGroup* domain = nullptr;
    const FiniteGroup* codomain = nullptr;
    std::vector<int> images;

    bool is_unital() const {
        return images[domain->identity()] == codomain->identity();
    }
    bool is_homomorphism() const;
    int operator()(int g) const { return images[g]; }
    friend bool operator==(const MapTable& a, const MapTable& b) {
        return a.images == b.images;
    }
};

}  // namespace polcert::polymap

#endif
