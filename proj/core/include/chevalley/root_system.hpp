#pragma once

#include <string>
#include <vector>

#include "chevalley/labels.hpp"

namespace chevalley {

using RootVec = std::vector<int>;  // coordinates in the simple-root basis

/// Element of the Weyl group: a permutation of the root index set
/// together with a reduced word in simple reflections.
struct WeylElement {
    std::vector<int> perm;  // root index -> root index
    std::vector<int> word;  // simple reflection indices, reduced
    int length = 0;
    bool operator==(const WeylElement& o) const { return perm == o.perm; }
    bool is_identity() const;
};

/// Reduced irreducible root system at desk scale with exact integer
/// arithmetic.  Roots are integer vectors in the simple-root basis;
/// a root is positive iff its coordinates are (uniformly) nonnegative.
class RootSystem {
public:
    static const RootSystem& get(RootLabel label);  // cached per label
    static RootSystem build(RootLabel label);

    RootLabel label() const { return label_; }
    int rank() const { return rank_; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    const std::vector<RootVec>& roots() const { return roots_; }
    const RootVec& root(int i) const { return roots_[i]; }
    int index_of(const RootVec& v) const;  // -1 when absent
    int simple_root(int i) const { return simple_[i]; }

    bool is_positive(int i) const { return height(i) > 0; }
    int height(int i) const;
    int negative(int i) const { return neg_[i]; }
    int64_t norm2(int i) const;  // squared length, normalized so short = 2
    bool is_long(int i) const;
    int64_t bilinear(int i, int j) const;  // (root_i, root_j)
    int cartan(int i, int j) const { return cartan_[i][j]; }  // <alpha_i, alpha_j^vee>
    int pairing(int rootidx, int simpleidx) const;            // <root, alpha_j^vee>

    /// Index of s_{simple j}(root i).
    int reflect_simple(int j, int i) const;
    /// Index of s_{root a}(root b).
    int reflect(int a, int b) const;

    /// Sum alpha + beta as a root index, or -1.
    int root_sum(int a, int b) const;
    /// Root string through beta along alpha: (p, q) with beta - p*alpha
    /// ... beta + q*alpha all roots.
    std::pair<int, int> alpha_string(int a, int b) const;

    const std::vector<WeylElement>& weyl_elements() const;  // enumerated, length-sorted
    const WeylElement& identity_weyl() const;
    const WeylElement& longest() const;
    const WeylElement& simple_reflection(int j) const;
    int act(const WeylElement& w, int rootidx) const { return w.perm[rootidx]; }
    WeylElement compose(const WeylElement& a, const WeylElement& b) const;  // a after b
    WeylElement inverse(const WeylElement& w) const;
    WeylElement from_word(const std::vector<int>& word) const;
    int weyl_length(const WeylElement& w) const;  // #{alpha>0 : w(alpha)<0}

    std::string json() const;

private:
    RootLabel label_;
    int rank_ = 0;
    std::vector<RootVec> roots_;
    std::vector<int> simple_;
    std::vector<int> neg_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<int64_t>> bil_;  // bilinear form on simple roots
    std::vector<WeylElement> weyl_;
    int longest_ = 0;
};

}  // namespace chevalley
