#include "chevalley/matrix.hpp"

#include <sstream>

namespace chevalley {

RingMatrix::RingMatrix(Ring r, int n) : ring_(std::move(r)), n_(n) {
    a_.assign(static_cast<size_t>(n) * n, ring_.zero());
}

RingMatrix RingMatrix::identity(const Ring& r, int n) {
    RingMatrix m(r, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = r.one();
    return m;
}

RingMatrix RingMatrix::from_int(const Ring& r, const std::vector<std::vector<int64_t>>& m) {
    RingMatrix out(r, static_cast<int>(m.size()));
    for (int i = 0; i < out.n(); ++i)
        for (int j = 0; j < out.n(); ++j) out.at(i, j) = r.from_int(m[i][j]);
    return out;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    if (ring_ != o.ring_ || n_ != o.n_) throw MixedRingsError("matrix product shape/ring mismatch");
    RingMatrix c(ring_, n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const RingElement& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const RingElement& y = o.at(k, j);
                if (y.is_zero()) continue;
                c.at(i, j) = c.at(i, j) + x * y;
            }
        }
    }
    return c;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    if (ring_ != o.ring_ || n_ != o.n_) throw MixedRingsError();
    RingMatrix c(ring_, n_);
    for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] + o.a_[i];
    return c;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
    if (ring_ != o.ring_ || n_ != o.n_) throw MixedRingsError();
    RingMatrix c(ring_, n_);
    for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] - o.a_[i];
    return c;
}

RingMatrix RingMatrix::scaled(const RingElement& c) const {
    RingMatrix out(ring_, n_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    return ring_ == o.ring_ && n_ == o.n_ && a_ == o.a_;
}

bool RingMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

RingMatrix RingMatrix::mapped(const Ring& target) const {
    RingMatrix out(target, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.at(i, j) = map_into(at(i, j), target);
    return out;
}

std::string RingMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < n_; ++j) os << at(i, j).str() << (j + 1 < n_ ? " " : "");
        os << (i + 1 < n_ ? "\n" : "]");
    }
    return os.str();
}

size_t RingMatrix::hash() const {
    size_t h = 14695981039346656037ull;
    for (auto& x : a_) {
        h ^= x.hash();
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace chevalley
