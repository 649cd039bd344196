#pragma once

// Restriction homomorphisms of the classical-family Chow rings: to a maximal
// torus (detecting the free part) and to the finite 2-subgroups mu^n of O_n
// and Gamma_n of SO_n (detecting the 2-torsion part), together with the
// relation-vanishing verifier, the bounded-degree faithfulness checker, and
// the split-bundle calculus for the degree-m class y_m on BSO(2m).

#include <optional>
#include <string>
#include <vector>

#include "chowring/linalg.hpp"
#include "chowring/presentation.hpp"

namespace chowring {

// A*(BT) = Z[x1,...,x_rank] with deg x_i = 1, plus the generator images:
//   GL:  c_i |-> e_i(x_1..x_n)
//   SL:  c_i |-> e_i(x_1..x_{n-1}, -(x_1+...+x_{n-1}))       (rank n-1)
//   Sp:  c_{2i} |-> e_i(-x_1^2..-x_n^2)
//   O/SO: c_odd |-> 0, c_{2j} |-> e_j(-x_1^2..-x_m^2); for SO with n = 2m
//         additionally y |-> 2^{m-1} x_1...x_m
struct TorusTarget {
    Family family;
    int rank = 0;
    RingPtr ring;
    std::map<int, Polynomial> images; // formal-ring variable -> image
};

// F_2 target of the finite 2-subgroup restriction. For O the ring is
// F_2[e1..en] and c_i maps to the i-th elementary symmetric polynomial.
// For SO the subgroup is Gamma_n and the ring Z[eta]/(eta_1+...+eta_n) is
// realized, in positive degrees, as F_2[e1..e_{n-1}] with e_n eliminated.
// y has no image.
struct MuTarget {
    Family family;
    RingPtr ring;
    std::map<int, Polynomial> images;
};

TorusTarget make_torus_target(const Presentation& pres);
MuTarget make_mu_target(const Presentation& pres);

bool has_mu_target(const Presentation& pres); // O and SO only

Polynomial torus_image(const ChowElement& x);
// UndefinedRestrictionError when some monomial of x contains y, or the
// family has no mu target.
Polynomial mu_image(const ChowElement& x);

// Images of a formal polynomial in the generators (used on the defining
// relations, which are zero as ChowElements by construction).
Polynomial torus_image_formal(const Polynomial& p, const TorusTarget& target);
Polynomial mu_image_formal(const Polynomial& p, const MuTarget& target);

struct RelationCheck {
    std::string relation;
    std::string torus;
    std::optional<std::string> mu; // absent when the map is undefined
    bool vanishes = false;

    friend bool operator==(const RelationCheck&, const RelationCheck&) = default;
};

struct DegreeCheck {
    int degree = 0;
    long long free_basis = 0;
    long long torsion_basis = 0;
    bool injective = false;

    friend bool operator==(const DegreeCheck&, const DegreeCheck&) = default;
};

struct VerificationReport {
    std::string family;
    int n = 0;
    std::vector<RelationCheck> relations;
    std::vector<DegreeCheck> faithfulness;

    bool ok() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Stable JSON form:
// {"family","n","relations":[{"relation","torus_image","mu_image","vanishes"}],
//  "faithfulness":[{"degree","free_basis","torsion_basis","injective"}]}
std::string report_to_json(const VerificationReport& report, int indent = 2);

// Checks that every defining relation maps to zero under the torus
// restriction and, where defined, under the mu restriction.
VerificationReport verify_relations(const Presentation& pres);

// Degree-by-degree injectivity of the restrictions on the reduced-monomial
// basis: free monomials against the torus over Z (Smith normal form),
// torsion monomials against mu^n / Gamma_n over F_2. Degrees 1..max_degree
// are independent; they run under OpenMP unless parallel is false.
VerificationReport faithfulness_check(const Presentation& pres, int max_degree,
                                      bool parallel = true);

// Matrix of a restriction on a monomial basis: columns are the basis
// monomials in enumeration order, rows the target monomials occurring in
// their images (in canonical term order). Shared by the production checker
// and the serial reference checker.
IntMatrix restriction_matrix(const Presentation& pres, const std::vector<Monomial>& basis,
                             const std::map<int, Polynomial>& images, const RingPtr& target);

// A maximal isotropic subbundle of the split SO(2m)-bundle
// L_1 + ... + L_m + dual lines, selected line by line: +1 picks L_i
// (Chern root x_i), -1 picks its dual (Chern root -x_i).
struct SplitBundle {
    int m = 1;
    std::vector<int> signs; // length m, entries +1 / -1
};

struct IsotropicChern {
    bool admissible = false;
    Polynomial top_chern;
};

// Top Chern class (prod signs) * x_1...x_m; the subbundle is admissible
// exactly when the sign parity is +1 (the all-plus component is the
// distinguished one).
IsotropicChern split_isotropic_chern(const SplitBundle& b);

// The class y_m in the split model: 2^{m-1} x_1...x_m in Z[x_1..x_m].
Polynomial split_eg_class(int m);

// Divisor pushforward computation in Z[x_1..x_m]/(x_1^2...x_m^2) for the
// class identification on the punctured bundle: lhs = [Y1]*y(F1) +
// [Y2]*y(F2) with [Y1] = -x1, [Y2] = x1, y(F1) = 2^{m-2} x_2..x_m,
// y(F2) = -2^{m-2} x_2..x_m. rhs is the torus image of y_m; sign relates
// them (lhs == sign * rhs).
struct IdentifyClassResult {
    Polynomial lhs;
    Polynomial rhs;
    int sign = 0;
};
IdentifyClassResult verify_identify_class(int m); // m >= 2

// Reduction modulo the principal ideal (x_1^2...x_m^2): drops every term
// whose monomial is divisible by the full square.
Polynomial reduce_top_square(const Polynomial& p, int m);

} // namespace chowring
