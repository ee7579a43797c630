#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chevalley/errors.hpp"
#include "chevalley/labels.hpp"
#include "chevalley/poly.hpp"

namespace chevalley {

enum class RingKind { Integers, IntegersMod, PrimeField, PolyQuot };

class RingElement;

/// Immutable commutative ring descriptor.  Cheap to copy (shared
/// representation); equality compares the underlying parameters.
class Ring {
public:
    static Ring integers();
    static Ring integers_mod(int64_t n);
    static Ring prime_field(int64_t p);
    /// Quotient Z[vars]/(relations).  At most one relation is supported
    /// (its own Groebner basis), and its leading coefficient must be +-1
    /// so normal forms are canonical.
    static Ring poly_quot(std::vector<std::string> vars, std::vector<Poly> relations);

    RingKind kind() const;
    int64_t modulus() const;  // IntegersMod / PrimeField
    bool is_field() const;
    bool is_finite() const;  // enumeration support
    const std::vector<std::string>& var_names() const;
    const std::vector<Poly>& relations() const;

    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(int64_t v) const;
    RingElement from_poly(const Poly& p) const;  // PolyQuot only
    RingElement var(int idx) const;              // PolyQuot only

    std::vector<RingElement> elements() const;  // finite rings only
    std::vector<RingElement> units() const;     // finite rings only

    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }
    std::string str() const;

    struct Rep;
    const Rep& rep() const { return *rep_; }

private:
    std::shared_ptr<const Rep> rep_;
    explicit Ring(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
};

/// Element of a concrete Ring, always held in canonical form.
class RingElement {
public:
    RingElement() = default;
    RingElement(Ring r, int64_t v);
    RingElement(Ring r, Poly p);

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;
    int64_t int_value() const;       // scalar kinds; PolyQuot requires constant
    const Poly& poly_value() const;  // PolyQuot only

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    bool is_unit() const;
    RingElement inv() const;  // throws NotAUnitError
    RingElement pow(int64_t k) const;

    std::string str() const;
    size_t hash() const;

private:
    Ring ring_;
    int64_t iv_ = 0;
    Poly pv_;
    void check_same(const RingElement& o) const;
};

/// Finitely generated ideal with decidable membership for the scalar rings.
class Ideal {
public:
    Ideal(Ring r, std::vector<RingElement> gens);
    const Ring& ring() const { return ring_; }
    const std::vector<RingElement>& generators() const { return gens_; }
    bool contains(const RingElement& x) const;
    /// Canonical single generator for Integers / IntegersMod / PrimeField.
    RingElement principal_generator() const;
    bool is_zero_ideal() const;
    bool is_unit_ideal() const;
    bool operator==(const Ideal& o) const;
    std::string str() const;

private:
    Ring ring_;
    std::vector<RingElement> gens_;
};

Ideal jacobson_radical(const Ring& r);

struct ConditionVerdict {
    bool ok;
    std::string reason;
};

/// Structure-constant invertibility condition for a type/ring pair.
ConditionVerdict check_condition(RootLabel label, const Ring& r);

/// Image of x under the canonical reduction into `target` (Z -> Z/n,
/// Z/n -> Z/m for m | n, anything -> itself).
RingElement map_into(const RingElement& x, const Ring& target);

/// True when the canonical reduction Ring -> target exists.
bool reduction_exists(const Ring& from, const Ring& target);

/// Evaluates a raw polynomial at the given variable images (all in the
/// same target ring).
RingElement eval_poly(const Poly& p, const std::vector<RingElement>& images, const Ring& target);

struct PitReport {
    bool equal = true;
    int points = 0;
    int degree = 0;
    int64_t prime = 0;
    double failure_bound = 0.0;  // probability bound when equal
    std::string path;            // "normal_form" or "pit"
};

/// Equality test for PolyQuot elements: exact when the normal forms are
/// small, otherwise probabilistic identity testing at random points of
/// the relation variety over GF(prime).
PitReport poly_quot_equal(const RingElement& a, const RingElement& b, int min_points, uint64_t seed);

}  // namespace chevalley
