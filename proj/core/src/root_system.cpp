#include "chevalley/root_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "chevalley/errors.hpp"

namespace chevalley {

bool WeylElement::is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

namespace {

// bilinear form (alpha_i, alpha_j) on simple roots, short roots normalized
// to squared length 2
std::vector<std::vector<int64_t>> simple_form(RootLabel l) {
    switch (l) {
        case RootLabel::A2: return {{2, -1}, {-1, 2}};
        case RootLabel::A3: return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
        // B2: alpha1 = e1-e2 (long, 4), alpha2 = e2 (short, 2), doubled so short = 2
        case RootLabel::B2: return {{4, -2}, {-2, 2}};
        case RootLabel::B3: return {{4, -2, 0}, {-2, 4, -2}, {0, -2, 2}};
        // C3: alpha1, alpha2 = e_i - e_{i+1} (short, 2), alpha3 = 2 e3 (long, 4)
        case RootLabel::C3: return {{2, -1, 0}, {-1, 2, -2}, {0, -2, 4}};
        // G2: alpha1 short (2), alpha2 long (6)
        case RootLabel::G2: return {{2, -3}, {-3, 6}};
        case RootLabel::F4: break;
    }
    throw UnsupportedTypeError("no desk-scale root data for " + to_string(l));
}

bool lex_less(const RootVec& a, const RootVec& b) { return a < b; }

}  // namespace

RootSystem RootSystem::build(RootLabel label) {
    RootSystem rs;
    rs.label_ = label;
    rs.rank_ = rank_of(label);
    rs.bil_ = simple_form(label);
    const int l = rs.rank_;

    rs.cartan_.assign(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int64_t num = 2 * rs.bil_[i][j];
            if (num % rs.bil_[j][j] != 0) throw Error("non-integral Cartan entry");
            rs.cartan_[i][j] = static_cast<int>(num / rs.bil_[j][j]);
        }

    // close the simple roots under simple reflections
    std::set<RootVec> seen;
    std::queue<RootVec> todo;
    for (int i = 0; i < l; ++i) {
        RootVec v(l, 0);
        v[i] = 1;
        seen.insert(v);
        todo.push(v);
    }
    auto pair_with_simple = [&](const RootVec& v, int j) {
        int s = 0;
        for (int i = 0; i < l; ++i) s += v[i] * rs.cartan_[i][j];
        return s;
    };
    while (!todo.empty()) {
        RootVec v = todo.front();
        todo.pop();
        for (int j = 0; j < l; ++j) {
            RootVec w = v;
            w[j] -= pair_with_simple(v, j);
            if (seen.insert(w).second) todo.push(w);
        }
    }

    rs.roots_.assign(seen.begin(), seen.end());
    // order: positives by (height asc, lex), then negatives mirrored
    auto ht = [](const RootVec& v) { return std::accumulate(v.begin(), v.end(), 0); };
    std::vector<RootVec> pos;
    for (auto& v : rs.roots_)
        if (ht(v) > 0) pos.push_back(v);
    std::sort(pos.begin(), pos.end(), [&](const RootVec& a, const RootVec& b) {
        if (ht(a) != ht(b)) return ht(a) < ht(b);
        return lex_less(a, b);
    });
    rs.roots_.clear();
    for (auto& v : pos) rs.roots_.push_back(v);
    for (auto& v : pos) {
        RootVec n = v;
        for (auto& c : n) c = -c;
        rs.roots_.push_back(n);
    }

    rs.simple_.assign(l, -1);
    for (int i = 0; i < rs.num_roots(); ++i) {
        if (ht(rs.roots_[i]) == 1) {
            for (int j = 0; j < l; ++j)
                if (rs.roots_[i][j] == 1) rs.simple_[j] = i;
        }
    }
    for (int j = 0; j < l; ++j)
        if (rs.simple_[j] < 0) throw Error("missing simple root");

    rs.neg_.assign(rs.num_roots(), -1);
    for (int i = 0; i < rs.num_roots(); ++i) {
        RootVec n = rs.roots_[i];
        for (auto& c : n) c = -c;
        rs.neg_[i] = rs.index_of(n);
        if (rs.neg_[i] < 0) throw Error("root system not closed under negation");
    }

    // enumerate the Weyl group by BFS over right multiplication
    const int nr = rs.num_roots();
    WeylElement id;
    id.perm.resize(nr);
    std::iota(id.perm.begin(), id.perm.end(), 0);
    id.length = 0;
    std::vector<WeylElement> simple_refl(l);
    for (int j = 0; j < l; ++j) {
        WeylElement s;
        s.perm.resize(nr);
        for (int i = 0; i < nr; ++i) s.perm[i] = rs.reflect_simple(j, i);
        s.word = {j};
        s.length = 1;
        simple_refl[j] = s;
    }
    std::map<std::vector<int>, int> index;
    rs.weyl_.push_back(id);
    index[id.perm] = 0;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int cur = bfs.front();
        bfs.pop();
        for (int j = 0; j < l; ++j) {
            WeylElement next;
            next.perm.resize(nr);
            // (w * s_j)(x) = w(s_j(x))
            for (int i = 0; i < nr; ++i) next.perm[i] = rs.weyl_[cur].perm[simple_refl[j].perm[i]];
            if (index.count(next.perm)) continue;
            next.word = rs.weyl_[cur].word;
            next.word.push_back(j);
            next.length = static_cast<int>(next.word.size());
            index[next.perm] = static_cast<int>(rs.weyl_.size());
            rs.weyl_.push_back(next);
            bfs.push(static_cast<int>(rs.weyl_.size()) - 1);
        }
    }
    std::stable_sort(rs.weyl_.begin(), rs.weyl_.end(),
                     [](const WeylElement& a, const WeylElement& b) {
                         if (a.length != b.length) return a.length < b.length;
                         return a.word < b.word;
                     });
    for (int i = 0; i < static_cast<int>(rs.weyl_.size()); ++i) {
        if (rs.weyl_[i].length != rs.weyl_length(rs.weyl_[i]))
            throw Error("reduced word length mismatch");
        if (rs.weyl_[i].length > rs.weyl_[rs.longest_].length) rs.longest_ = i;
    }
    return rs;
}

const RootSystem& RootSystem::get(RootLabel label) {
    static std::mutex mu;
    static std::map<RootLabel, RootSystem> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(label);
    if (it == cache.end()) it = cache.emplace(label, build(label)).first;
    return it->second;
}

int RootSystem::index_of(const RootVec& v) const {
    for (int i = 0; i < num_roots(); ++i)
        if (roots_[i] == v) return i;
    return -1;
}

int RootSystem::height(int i) const {
    return std::accumulate(roots_[i].begin(), roots_[i].end(), 0);
}

int64_t RootSystem::bilinear(int i, int j) const {
    int64_t s = 0;
    for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b) s += static_cast<int64_t>(roots_[i][a]) * roots_[j][b] * bil_[a][b];
    return s;
}

int64_t RootSystem::norm2(int i) const { return bilinear(i, i); }

bool RootSystem::is_long(int i) const {
    int64_t mn = norm2(simple_[0]);
    for (int j = 1; j < rank_; ++j) mn = std::min(mn, norm2(simple_[j]));
    return norm2(i) > mn;
}

int RootSystem::pairing(int rootidx, int j) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += roots_[rootidx][i] * cartan_[i][j];
    return s;
}

int RootSystem::reflect_simple(int j, int i) const {
    RootVec v = roots_[i];
    v[j] -= pairing(i, j);
    int k = index_of(v);
    if (k < 0) throw Error("reflection left the root system");
    return k;
}

int RootSystem::reflect(int a, int b) const {
    // s_a(b) = b - <b, a^vee> a
    int64_t num = 2 * bilinear(b, a);
    if (num % norm2(a) != 0) throw Error("non-integral reflection pairing");
    int64_t c = num / norm2(a);
    RootVec v = roots_[b];
    for (int i = 0; i < rank_; ++i) v[i] -= static_cast<int>(c) * roots_[a][i];
    int k = index_of(v);
    if (k < 0) throw Error("reflection left the root system");
    return k;
}

int RootSystem::root_sum(int a, int b) const {
    if (neg_[a] == b) return -1;
    RootVec v = roots_[a];
    for (int i = 0; i < rank_; ++i) v[i] += roots_[b][i];
    return index_of(v);
}

std::pair<int, int> RootSystem::alpha_string(int a, int b) const {
    if (a == b || neg_[a] == b) throw Error("alpha_string requires alpha != +-beta");
    int p = 0, q = 0;
    for (;;) {
        RootVec probe = roots_[b];
        for (int i = 0; i < rank_; ++i) probe[i] -= (p + 1) * roots_[a][i];
        if (index_of(probe) < 0) break;
        ++p;
    }
    for (;;) {
        RootVec probe = roots_[b];
        for (int i = 0; i < rank_; ++i) probe[i] += (q + 1) * roots_[a][i];
        if (index_of(probe) < 0) break;
        ++q;
    }
    return {p, q};
}

const std::vector<WeylElement>& RootSystem::weyl_elements() const { return weyl_; }

const WeylElement& RootSystem::identity_weyl() const { return weyl_[0]; }

const WeylElement& RootSystem::longest() const { return weyl_[longest_]; }

const WeylElement& RootSystem::simple_reflection(int j) const {
    for (auto& w : weyl_)
        if (w.length == 1 && w.word[0] == j) return w;
    throw Error("missing simple reflection");
}

WeylElement RootSystem::compose(const WeylElement& a, const WeylElement& b) const {
    WeylElement c;
    c.perm.resize(num_roots());
    for (int i = 0; i < num_roots(); ++i) c.perm[i] = a.perm[b.perm[i]];
    // canonical reduced word from the enumerated table
    for (auto& w : weyl_)
        if (w.perm == c.perm) return w;
    throw Error("composition left the enumerated Weyl group");
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
    WeylElement inv;
    inv.perm.resize(num_roots());
    for (int i = 0; i < num_roots(); ++i) inv.perm[w.perm[i]] = i;
    for (auto& x : weyl_)
        if (x.perm == inv.perm) return x;
    throw Error("inverse left the enumerated Weyl group");
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
    WeylElement acc = identity_weyl();
    for (int j : word) {
        if (j < 0 || j >= rank_) throw ParseError("bad simple reflection index");
        acc = compose(acc, simple_reflection(j));
    }
    return acc;
}

int RootSystem::weyl_length(const WeylElement& w) const {
    int n = 0;
    for (int i = 0; i < num_roots(); ++i)
        if (is_positive(i) && !is_positive(w.perm[i])) ++n;
    return n;
}

std::string RootSystem::json() const {
    std::ostringstream os;
    os << "{\"type\":\"" << to_string(label_) << "\",\"rank\":" << rank_ << ",\"roots\":[";
    for (int i = 0; i < num_roots(); ++i) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < rank_; ++j) {
            if (j) os << ",";
            os << roots_[i][j];
        }
        os << "]";
    }
    os << "],\"simple\":[";
    for (int j = 0; j < rank_; ++j) {
        if (j) os << ",";
        os << simple_[j];
    }
    os << "],\"lengths\":[";
    for (int i = 0; i < num_roots(); ++i) {
        if (i) os << ",";
        os << (is_long(i) ? "\"long\"" : "\"short\"");
    }
    os << "],\"cartan\":[";
    for (int i = 0; i < rank_; ++i) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < rank_; ++j) {
            if (j) os << ",";
            os << cartan_[i][j];
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace chevalley
