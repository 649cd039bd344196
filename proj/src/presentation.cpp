#include "chowring/presentation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace chowring {

std::string family_name(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::GL: return "GL";
    case FamilyTag::SL: return "SL";
    case FamilyTag::Sp: return "Sp";
    case FamilyTag::O: return "O";
    case FamilyTag::SO: return "SO";
    }
    return "?";
}

std::optional<FamilyTag> parse_family(const std::string& name)
{
    if (name == "GL") return FamilyTag::GL;
    if (name == "SL") return FamilyTag::SL;
    if (name == "Sp") return FamilyTag::Sp;
    if (name == "O") return FamilyTag::O;
    if (name == "SO") return FamilyTag::SO;
    return std::nullopt;
}

int Presentation::var_of_generator(const std::string& name) const
{
    return ring_ ? ring_->var_index(name) : -1;
}

const Generator& Presentation::generator_of_var(int var) const
{
    const std::string& name = ring_->var(var).name;
    for (const auto& g : gens_)
        if (g.name == name)
            return g;
    throw GeneratorError("no generator for variable " + name);
}

bool Presentation::same_presentation(const Presentation& other) const
{
    return *this == other;
}

bool Presentation::operator==(const Presentation& other) const
{
    return gens_ == other.gens_ && relations_ == other.relations_;
}

// Translate each relation polynomial into a monomial rewrite rule. Every
// presentation reachable through build_presentation / quotient_by_element /
// adjoin_cyclic classifies; anything else is rejected.
void Presentation::derive_rules()
{
    const int nv = ring_->nvars();
    torsion_.assign(nv, Int(0));
    power_.assign(nv, std::nullopt);
    annih_.clear();

    for (const auto& rel : relations_) {
        if (rel.is_zero())
            throw UnsupportedError("zero relation");
        const auto& terms = rel.terms();
        if (terms.size() == 1) {
            const auto& [mon, coef] = *terms.begin();
            Int mag = coef < 0 ? Int(-coef) : coef;
            if (mon.exps.size() == 1 && mon.exps[0].second == 1) {
                // k * g = 0; k == 1 makes the generator identically zero.
                int v = mon.exps[0].first;
                Int cur = torsion_[v];
                torsion_[v] = cur == 0 ? mag : boost::multiprecision::gcd(cur, mag);
                continue;
            }
            if (mon.exps.size() == 2 && mon.exps[0].second == 1 &&
                mon.exps[1].second == 1 && mag == 1) {
                annih_.emplace_back(mon.exps[0].first, mon.exps[1].first);
                continue;
            }
            if (mon.exps.size() == 1 && mon.exps[0].second == 2 && mag == 1) {
                power_[mon.exps[0].first] = PowerRule{Int(0), Monomial{}};
                continue;
            }
            throw UnsupportedError("relation outside the rewrite system: " + to_string(rel));
        }
        if (terms.size() == 2) {
            // g^2 + a*M = 0 with unit leading coefficient.
            auto it = terms.begin();
            const auto& [m1, c1] = *it;
            ++it;
            const auto& [m2, c2] = *it;
            const Monomial* sq = nullptr;
            const Monomial* rhs = nullptr;
            Int lead, other;
            if (m1.exps.size() == 1 && m1.exps[0].second == 2) {
                sq = &m1; rhs = &m2; lead = c1; other = c2;
            } else if (m2.exps.size() == 1 && m2.exps[0].second == 2) {
                sq = &m2; rhs = &m1; lead = c2; other = c1;
            }
            if (sq && (lead == 1 || lead == -1) && rhs->exponent(sq->exps[0].first) == 0) {
                power_[sq->exps[0].first] = PowerRule{Int(-other * lead), *rhs};
                continue;
            }
        }
        throw UnsupportedError("relation outside the rewrite system: " + to_string(rel));
    }
}

Presentation make_presentation(std::optional<Family> family, std::vector<Generator> gens,
                               std::vector<Polynomial> relations, RingPtr ring)
{
    Presentation p;
    p.family_ = family;
    p.gens_ = std::move(gens);
    p.ring_ = std::move(ring);
    p.relations_ = std::move(relations);
    p.gen_to_var_.clear();
    for (const auto& g : p.gens_) {
        int v = p.ring_->var_index(g.name);
        if (v < 0)
            throw GeneratorError("generator missing from the formal ring: " + g.name);
        p.gen_to_var_.push_back(v);
    }
    for (const auto& rel : p.relations_)
        if (!rel.is_homogeneous())
            throw UnsupportedError("inhomogeneous relation: " + to_string(rel));
    p.derive_rules();
    return p;
}

namespace {

Polynomial gen_poly(const RingPtr& ring, const std::string& name)
{
    int v = ring->var_index(name);
    if (v < 0)
        throw GeneratorError("unknown generator " + name);
    return Polynomial::variable(ring, v);
}

Int pow2(int e)
{
    Int v = 1;
    return v << e;
}

} // namespace

Presentation build_presentation(Family family)
{
    if (family.n < 1)
        throw RangeError("family index n must be >= 1");
    const int n = family.n;
    std::vector<Generator> gens;
    std::vector<VarSpec> vars; // internal order
    auto add_c = [&](int i) {
        gens.push_back({"c" + std::to_string(i), i});
        vars.push_back({"c" + std::to_string(i), i});
    };

    switch (family.tag) {
    case FamilyTag::GL:
        for (int i = 1; i <= n; ++i)
            add_c(i);
        return make_presentation(family, gens, {}, make_ring(Coeff::Z, vars));
    case FamilyTag::SL:
        for (int i = 2; i <= n; ++i)
            add_c(i);
        return make_presentation(family, gens, {}, make_ring(Coeff::Z, vars));
    case FamilyTag::Sp:
        for (int i = 1; i <= n; ++i)
            add_c(2 * i);
        return make_presentation(family, gens, {}, make_ring(Coeff::Z, vars));
    case FamilyTag::O: {
        for (int i = 1; i <= n; ++i)
            add_c(i);
        RingPtr ring = make_ring(Coeff::Z, vars);
        std::vector<Polynomial> rels;
        for (int i = 1; i <= n; i += 2)
            rels.push_back(gen_poly(ring, "c" + std::to_string(i)) * Int(2));
        return make_presentation(family, gens, rels, ring);
    }
    case FamilyTag::SO: {
        if (n % 2 == 1) {
            for (int i = 2; i <= n; ++i)
                add_c(i);
            RingPtr ring = make_ring(Coeff::Z, vars);
            std::vector<Polynomial> rels;
            for (int i = 3; i <= n; i += 2)
                rels.push_back(gen_poly(ring, "c" + std::to_string(i)) * Int(2));
            return make_presentation(family, gens, rels, ring);
        }
        const int m = n / 2;
        // y first in the formal ring so that printed terms lead with it.
        vars.push_back({"y", m});
        for (int i = 2; i <= n; ++i)
            vars.push_back({"c" + std::to_string(i), i});
        for (int i = 2; i <= n; ++i)
            gens.push_back({"c" + std::to_string(i), i});
        gens.push_back({"y", m});
        RingPtr ring = make_ring(Coeff::Z, vars);

        Polynomial y = gen_poly(ring, "y");
        Polynomial cn = gen_poly(ring, "c" + std::to_string(n));
        Int scale = pow2(n - 2);
        if (m % 2 == 1)
            scale = -scale;
        std::vector<Polynomial> rels;
        rels.push_back(y * y - cn * scale); // y^2 - (-1)^m 2^(n-2) c_n
        for (int i = 3; i <= n; i += 2)
            rels.push_back(gen_poly(ring, "c" + std::to_string(i)) * Int(2));
        for (int i = 3; i <= n; i += 2)
            rels.push_back(y * gen_poly(ring, "c" + std::to_string(i)));
        return make_presentation(family, gens, rels, ring);
    }
    }
    throw RangeError("unknown family");
}

Presentation trivial_presentation()
{
    return make_presentation(std::nullopt, {}, {}, make_ring(Coeff::Z, {}));
}

Presentation quotient_by_element(const Presentation& pres, const std::string& gen)
{
    int victim = pres.var_of_generator(gen);
    bool listed = false;
    for (const auto& g : pres.generators())
        listed = listed || g.name == gen;
    if (victim < 0 || !listed)
        throw GeneratorError("not a generator: " + gen);

    const PolyRing& old = *pres.ring();
    std::vector<VarSpec> vars;
    std::vector<int> remap(old.nvars(), -1);
    for (int v = 0; v < old.nvars(); ++v)
        if (v != victim) {
            remap[v] = static_cast<int>(vars.size());
            vars.push_back(old.var(v));
        }
    RingPtr ring = make_ring(Coeff::Z, vars);

    std::vector<Generator> gens;
    for (const auto& g : pres.generators())
        if (g.name != gen)
            gens.push_back(g);

    // Rewrite each relation with gen = 0: terms containing it vanish.
    std::vector<Polynomial> rels;
    for (const auto& rel : pres.relations()) {
        Polynomial image = Polynomial::zero(ring);
        for (const auto& [mon, c] : rel.terms()) {
            if (mon.exponent(victim) > 0)
                continue;
            std::vector<std::pair<int, int>> exps;
            for (const auto& [v, e] : mon.exps)
                exps.emplace_back(remap[v], e);
            image.add_term(make_monomial(*ring, std::move(exps)), c);
        }
        if (!image.is_zero())
            rels.push_back(std::move(image));
    }
    return make_presentation(std::nullopt, gens, rels, ring);
}

Presentation adjoin_cyclic(const Presentation& pres, const Int& k)
{
    if (k < 1)
        throw RangeError("adjoin_cyclic needs k >= 1");
    const PolyRing& old = *pres.ring();
    std::string name = "x";
    for (int suffix = 2; old.var_index(name) >= 0; ++suffix)
        name = "x" + std::to_string(suffix);

    std::vector<VarSpec> vars = old.vars();
    vars.push_back({name, 1});
    RingPtr ring = make_ring(Coeff::Z, vars);
    const int xvar = ring->var_index(name);

    std::vector<Generator> gens = pres.generators();
    gens.push_back({name, 1});

    // Old relations transfer verbatim (variable indices are unchanged).
    std::vector<Polynomial> rels;
    for (const auto& rel : pres.relations()) {
        Polynomial moved = Polynomial::zero(ring);
        for (const auto& [mon, c] : rel.terms())
            moved.add_term(make_monomial(*ring, mon.exps), c);
        rels.push_back(std::move(moved));
    }
    rels.push_back(Polynomial::variable(ring, xvar) * k);
    return make_presentation(std::nullopt, gens, rels, ring);
}

std::string serialize(const Presentation& pres)
{
    std::ostringstream os;
    os << 'Z';
    if (!pres.generators().empty()) {
        os << '[';
        bool first = true;
        for (const auto& g : pres.generators()) {
            if (!first)
                os << ',';
            os << g.name;
            first = false;
        }
        os << ']';
    }
    if (!pres.relations().empty()) {
        os << "/(";
        bool first = true;
        for (const auto& rel : pres.relations()) {
            if (!first)
                os << ", ";
            os << to_string(rel);
            first = false;
        }
        os << ')';
    }
    return os.str();
}

namespace {

// Torsion modulus of a reduced monomial: gcd of the per-variable moduli,
// 0 when every variable is free.
Int monomial_modulus(const Presentation& pres, const Monomial& mon)
{
    Int g = 0;
    for (const auto& [v, e] : mon.exps) {
        const Int& t = pres.torsion_modulus()[v];
        if (t != 0)
            g = g == 0 ? t : boost::multiprecision::gcd(g, t);
    }
    return g;
}

bool annihilated(const Presentation& pres, const Monomial& mon)
{
    for (const auto& [a, b] : pres.annihilations())
        if (mon.exponent(a) > 0 && mon.exponent(b) > 0)
            return true;
    return false;
}

// Rewrite one term to reduced monomials, accumulating into `out`.
void reduce_term(const Presentation& pres, Monomial mon, Int coef,
                 Polynomial::TermMap& out)
{
    for (;;) {
        if (coef == 0)
            return;
        if (annihilated(pres, mon))
            return;
        int powered = -1;
        for (const auto& [v, e] : mon.exps)
            if (e >= 2 && pres.power_rules()[v]) {
                powered = v;
                break;
            }
        if (powered < 0)
            break;
        const auto& rule = *pres.power_rules()[powered];
        coef *= rule.coef;
        if (coef == 0)
            return;
        std::vector<std::pair<int, int>> exps;
        for (const auto& [v, e] : mon.exps)
            exps.emplace_back(v, v == powered ? e - 2 : e);
        Monomial stripped = make_monomial(*pres.ring(), std::move(exps));
        mon = mon_mul(stripped, rule.rhs);
    }

    Int modulus = monomial_modulus(pres, mon);
    if (modulus != 0) {
        coef = ((coef % modulus) + modulus) % modulus;
        if (coef == 0)
            return;
    }
    auto [it, inserted] = out.emplace(std::move(mon), coef);
    if (!inserted)
        it->second += coef;
}

// Post-accumulation cleanup: coefficients of torsion monomials reduced into
// [0, modulus), zero terms dropped.
void normalize_terms(const Presentation& pres, Polynomial::TermMap& terms)
{
    for (auto it = terms.begin(); it != terms.end();) {
        Int modulus = monomial_modulus(pres, it->first);
        if (modulus != 0)
            it->second = ((it->second % modulus) + modulus) % modulus;
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
}

} // namespace

ChowElement normal_form(const Polynomial& p, const Presentation& pres)
{
    if (!p.ring()->same_as(*pres.ring()))
        throw GeneratorError("polynomial does not live in the presentation's generator ring");
    ChowElement x(pres);
    for (const auto& [mon, c] : p.terms())
        reduce_term(pres, mon, c, x.terms_);
    normalize_terms(pres, x.terms_);
    return x;
}

int ChowElement::degree() const
{
    return terms_.empty() ? -1 : terms_.begin()->first.degree;
}

bool ChowElement::operator==(const ChowElement& rhs) const
{
    return pres_ == rhs.pres_ && terms_ == rhs.terms_;
}

ChowElement chow_add(const ChowElement& a, const ChowElement& b)
{
    if (!a.presentation().same_presentation(b.presentation()))
        throw ContextError("elements of different presentations");
    Polynomial sum = to_polynomial(a) + to_polynomial(b);
    return normal_form(sum, a.presentation());
}

ChowElement chow_mul(const ChowElement& a, const ChowElement& b)
{
    if (!a.presentation().same_presentation(b.presentation()))
        throw ContextError("elements of different presentations");
    Polynomial prod = to_polynomial(a) * to_polynomial(b);
    return normal_form(prod, a.presentation());
}

Polynomial to_polynomial(const ChowElement& x)
{
    Polynomial p = Polynomial::zero(x.presentation().ring());
    for (const auto& [mon, c] : x.terms())
        p.add_term(mon, c);
    return p;
}

std::string to_string(const ChowElement& x)
{
    return to_string(to_polynomial(x));
}

ReducedBasis reduced_monomials(const Presentation& pres, int degree)
{
    ReducedBasis basis;
    const PolyRing& ring = *pres.ring();
    const int nv = ring.nvars();
    std::vector<std::pair<int, int>> exps;

    std::function<void(int, int)> walk = [&](int var, int remaining) {
        if (var == nv) {
            if (remaining != 0)
                return;
            Monomial mon = make_monomial(ring, exps);
            if (annihilated(pres, mon))
                return;
            Int modulus = monomial_modulus(pres, mon);
            if (modulus == 1)
                return;
            if (modulus == 0)
                basis.free.push_back(std::move(mon));
            else {
                basis.torsion.push_back(std::move(mon));
                basis.torsion_modulus.push_back(modulus);
            }
            return;
        }
        const int d = ring.var(var).degree;
        int emax = remaining / d;
        if (pres.power_rules()[var])
            emax = std::min(emax, 1);
        for (int e = 0; e <= emax; ++e) {
            if (e > 0)
                exps.emplace_back(var, e);
            walk(var + 1, remaining - e * d);
            if (e > 0)
                exps.pop_back();
        }
    };
    walk(0, degree);
    return basis;
}

GradedGroup hilbert_data(const Presentation& pres, int degree)
{
    if (degree < 0)
        throw RangeError("negative degree");
    ReducedBasis basis = reduced_monomials(pres, degree);
    for (const Int& modulus : basis.torsion_modulus)
        if (modulus != 2)
            throw UnsupportedError("graded piece has torsion other than Z/2");
    GradedGroup g;
    g.degree = degree;
    g.free_rank = static_cast<long long>(basis.free.size());
    g.torsion2_count = static_cast<long long>(basis.torsion.size());
    return g;
}

} // namespace chowring
