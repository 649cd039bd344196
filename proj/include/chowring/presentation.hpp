#pragma once

// Generators-and-relations presentations of the Chow rings A*(BG) for the
// classical families GL_n, SL_n, Sp_n, O_n, SO_n, with canonical normal-form
// arithmetic in the presented rings.
//
// The relations of every constructible presentation are monomial-compatible,
// so elements have a normal form computed by a confluent rewrite system:
//   * torsion rule   k*g = 0   -> coefficients of monomials containing g
//                                 are reduced modulo k (gcd over factors);
//   * annihilation   g*h  = 0  -> monomials containing both g and h vanish;
//   * power rule     g^2 = c*M -> exponents of g above 1 are rewritten.

#include <optional>
#include <string>
#include <vector>

#include "chowring/polynomial.hpp"

namespace chowring {

enum class FamilyTag { GL, SL, Sp, O, SO };

struct Family {
    FamilyTag tag;
    int n = 1; // Sp: tautological representation has dimension 2n; O/SO: dim n

    int m() const { return n / 2; } // rank of the maximal torus for O/SO

    friend bool operator==(const Family&, const Family&) = default;
};

std::string family_name(FamilyTag tag);
std::optional<FamilyTag> parse_family(const std::string& name);

struct Generator {
    std::string name;
    int degree = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

struct GradedGroup {
    int degree = 0;
    long long free_rank = 0;
    long long torsion2_count = 0;

    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;
};

class Presentation {
public:
    // Derived rewrite rules, one entry per formal-ring variable.
    struct PowerRule {
        Int coef;     // g^2 -> coef * rhs
        Monomial rhs; // monomial over the formal ring, may be empty
    };

    const std::optional<Family>& family() const { return family_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Polynomial>& relations() const { return relations_; }

    // Formal polynomial ring over Z carrying the generators as variables.
    // Its variable order is internal (for SO with n even the y generator
    // comes first); display order is generators().
    const RingPtr& ring() const { return ring_; }
    int var_of_generator(const std::string& name) const; // -1 when absent
    const Generator& generator_of_var(int var) const;

    const std::vector<Int>& torsion_modulus() const { return torsion_; }
    const std::vector<std::optional<PowerRule>>& power_rules() const { return power_; }
    const std::vector<std::pair<int, int>>& annihilations() const { return annih_; }

    bool same_presentation(const Presentation& other) const;
    // Structural equality of the presented ring: generators and relations.
    bool operator==(const Presentation& other) const;

    friend Presentation make_presentation(std::optional<Family> family,
                                          std::vector<Generator> gens,
                                          std::vector<Polynomial> relations, RingPtr ring);

private:
    std::optional<Family> family_;
    std::vector<Generator> gens_; // display order
    RingPtr ring_;
    std::vector<int> gen_to_var_;     // display position -> formal-ring variable
    std::vector<Polynomial> relations_;

    std::vector<Int> torsion_;                        // per var; 0 = free
    std::vector<std::optional<PowerRule>> power_;     // per var
    std::vector<std::pair<int, int>> annih_;          // var pairs

    void derive_rules();
};

Presentation build_presentation(Family family);

// Assembles a presentation from parts; the relations must be homogeneous
// and classify under the rewrite system. Used by the named constructors
// and by tests that need deliberately altered relation sets.
Presentation make_presentation(std::optional<Family> family, std::vector<Generator> gens,
                               std::vector<Polynomial> relations, RingPtr ring);

// Presentation with generator `gen` removed and the relations rewritten
// with gen = 0. GeneratorError when `gen` is not a generator.
Presentation quotient_by_element(const Presentation& pres, const std::string& gen);

// Adds a degree-1 generator x with relation k*x (k >= 1).
Presentation adjoin_cyclic(const Presentation& pres, const Int& k);

// The presentation of the trivial group's ring: Z, no generators.
Presentation trivial_presentation();

// `Z[g1,...,gk]/(r1, r2, ...)`; plain `Z` when there are no generators.
std::string serialize(const Presentation& pres);

// Normal-form element of a presented ring: a coefficient map on reduced
// monomials. Torsion monomials carry their coefficient reduced into
// [1, modulus); free monomials carry any nonzero integer.
class ChowElement {
public:
    explicit ChowElement(Presentation pres) : pres_(std::move(pres)) {}

    const Presentation& presentation() const { return pres_; }
    const Polynomial::TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    bool operator==(const ChowElement& rhs) const;
    bool operator!=(const ChowElement& rhs) const { return !(*this == rhs); }

    friend ChowElement normal_form(const Polynomial& p, const Presentation& pres);

private:
    Presentation pres_;
    Polynomial::TermMap terms_;
};

// Canonical representative of a formal polynomial in the generators.
ChowElement normal_form(const Polynomial& p, const Presentation& pres);

ChowElement chow_add(const ChowElement& a, const ChowElement& b);
ChowElement chow_mul(const ChowElement& a, const ChowElement& b);

// Formal polynomial seen by the ambient ring (inverse of normal_form up to
// the relation ideal).
Polynomial to_polynomial(const ChowElement& x);

std::string to_string(const ChowElement& x);

// Additive structure of the degree-d piece: counts of free and Z/2 reduced
// monomials. UnsupportedError if some reduced monomial has torsion modulus
// other than 2 (possible for adjoin_cyclic(k) with k > 2).
GradedGroup hilbert_data(const Presentation& pres, int degree);

// Reduced monomials of the given degree, split by torsion. Enumeration
// order is deterministic and shared by hilbert_data and the faithfulness
// checker. Monomials with torsion modulus 1 are identically zero and are
// not listed.
struct ReducedBasis {
    std::vector<Monomial> free;
    std::vector<Monomial> torsion; // modulus 2 unless moduli is consulted
    std::vector<Int> torsion_modulus;
};
ReducedBasis reduced_monomials(const Presentation& pres, int degree);

} // namespace chowring
