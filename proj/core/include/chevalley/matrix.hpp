#pragma once

#include <string>
#include <vector>

#include "chevalley/ring.hpp"

namespace chevalley {

/// Dense square matrix over a Ring.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(Ring r, int n);  // zero matrix
    static RingMatrix identity(const Ring& r, int n);
    /// Reduces an integer matrix into the ring.
    static RingMatrix from_int(const Ring& r, const std::vector<std::vector<int64_t>>& m);

    int n() const { return n_; }
    const Ring& ring() const { return ring_; }
    RingElement& at(int i, int j) { return a_[i * n_ + j]; }
    const RingElement& at(int i, int j) const { return a_[i * n_ + j]; }

    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    RingMatrix scaled(const RingElement& c) const;
    bool operator==(const RingMatrix& o) const;
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }
    bool is_identity() const;

    /// Image under an entrywise ring reduction.
    RingMatrix mapped(const Ring& target) const;

    std::string str() const;
    size_t hash() const;

private:
    Ring ring_;
    int n_ = 0;
    std::vector<RingElement> a_;
};

}  // namespace chevalley
