#pragma once

// Sparse multivariate polynomials with exact coefficients over Z or F_2.
// Variables carry a (cohomological) degree, so the total degree of a
// monomial is the weighted sum of its exponents.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chowring/errors.hpp"

namespace chowring {

using Int = boost::multiprecision::cpp_int;

enum class Coeff { Z, F2 };

struct VarSpec {
    std::string name;
    int degree = 1; // >= 1

    friend bool operator==(const VarSpec&, const VarSpec&) = default;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Immutable variable context shared by all polynomials of one ring.
class PolyRing {
public:
    PolyRing(Coeff coeff, std::vector<VarSpec> vars);

    Coeff coeff() const { return coeff_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const VarSpec& var(int i) const { return vars_.at(i); }
    const std::vector<VarSpec>& vars() const { return vars_; }
    int var_index(const std::string& name) const; // -1 when absent

    bool same_as(const PolyRing& other) const;

private:
    Coeff coeff_;
    std::vector<VarSpec> vars_;
};

RingPtr make_ring(Coeff coeff, std::vector<VarSpec> vars);

// Exponent vector, stored sparse: (variable index, exponent > 0) pairs
// sorted by index. The weighted degree is cached at construction.
struct Monomial {
    std::vector<std::pair<int, int>> exps;
    int degree = 0;

    bool empty() const { return exps.empty(); }
    int exponent(int var) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial make_monomial(const PolyRing& ring, std::vector<std::pair<int, int>> exps);
Monomial mon_mul(const Monomial& a, const Monomial& b);

// Canonical term order: higher weighted degree first, ties broken
// lexicographically with variable 0 most significant. Returns +1 when a
// precedes b in print order, -1 when b precedes a, 0 when equal.
int mon_cmp(const Monomial& a, const Monomial& b);

struct MonBefore {
    bool operator()(const Monomial& a, const Monomial& b) const { return mon_cmp(a, b) > 0; }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Int, MonBefore>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, const Int& c);
    static Polynomial variable(RingPtr ring, int var);
    static Polynomial term(RingPtr ring, const Int& c, Monomial mon);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Largest weighted degree among the terms; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Int& scalar) const;
    Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
    Polynomial& operator-=(const Polynomial& rhs) { return *this = *this - rhs; }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    // Accumulate c * mon, normalizing the coefficient for the ring.
    void add_term(const Monomial& mon, const Int& c);

private:
    RingPtr ring_;
    TermMap terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_pow(const Polynomial& base, int exponent);

// e_k of the given polynomials; e_0 = 1. RangeError when k > args.size().
// The ring is inferred from args unless passed explicitly.
Polynomial elementary_symmetric(int k, const std::vector<Polynomial>& args,
                                RingPtr ring = nullptr);

// Ring homomorphism determined by images[var]. Every variable occurring in p
// must have an image, and all images must share one target ring. Z -> F2 is
// allowed (coefficients reduce mod 2); F2 -> Z is not.
Polynomial substitute(const Polynomial& p, const std::map<int, Polynomial>& images,
                      const RingPtr& target);

// Sum of the terms of weighted degree exactly d.
Polynomial graded_component(const Polynomial& p, int d);

std::string to_string(const Monomial& mon, const PolyRing& ring);
std::string to_string(const Polynomial& p);

} // namespace chowring
