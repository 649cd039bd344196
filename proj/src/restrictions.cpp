#include "chowring/restrictions.hpp"

#include <json.hpp>

#include <sstream>

namespace chowring {

namespace {

RingPtr degree_one_ring(Coeff coeff, const std::string& stem, int count)
{
    std::vector<VarSpec> vars;
    for (int i = 1; i <= count; ++i)
        vars.push_back({stem + std::to_string(i), 1});
    return make_ring(coeff, vars);
}

std::vector<Polynomial> ring_variables(const RingPtr& ring)
{
    std::vector<Polynomial> vars;
    for (int v = 0; v < ring->nvars(); ++v)
        vars.push_back(Polynomial::variable(ring, v));
    return vars;
}

Int pow2(int e)
{
    Int v = 1;
    return v << e;
}

const Family& family_or_throw(const Presentation& pres)
{
    if (!pres.family())
        throw UndefinedRestrictionError("no restriction targets for a constructed presentation");
    return *pres.family();
}

int chern_index(const Generator& gen)
{
    if (gen.name.size() > 1 && gen.name[0] == 'c')
        return std::stoi(gen.name.substr(1));
    return -1;
}

} // namespace

TorusTarget make_torus_target(const Presentation& pres)
{
    const Family& family = family_or_throw(pres);
    const int n = family.n;

    TorusTarget target;
    target.family = family;
    switch (family.tag) {
    case FamilyTag::GL: target.rank = n; break;
    case FamilyTag::SL: target.rank = n - 1; break;
    case FamilyTag::Sp: target.rank = n; break;
    case FamilyTag::O:
    case FamilyTag::SO: target.rank = family.m(); break;
    }
    target.ring = degree_one_ring(Coeff::Z, "x", target.rank);

    std::vector<Polynomial> roots; // Chern roots of the tautological bundle
    auto xs = ring_variables(target.ring);
    if (family.tag == FamilyTag::GL) {
        roots = xs;
    } else if (family.tag == FamilyTag::SL) {
        roots = xs;
        Polynomial last = Polynomial::zero(target.ring);
        for (const auto& x : xs)
            last -= x;
        roots.push_back(last); // x_n = -(x_1 + ... + x_{n-1})
    } else {
        for (const auto& x : xs)
            roots.push_back(-(x * x)); // -x_i^2, one per hyperbolic pair
    }

    for (const auto& gen : pres.generators()) {
        const int var = pres.var_of_generator(gen.name);
        if (gen.name == "y") {
            Monomial prod;
            std::vector<std::pair<int, int>> exps;
            for (int v = 0; v < target.rank; ++v)
                exps.emplace_back(v, 1);
            prod = make_monomial(*target.ring, exps);
            target.images.emplace(var, Polynomial::term(target.ring, pow2(family.m() - 1), prod));
            continue;
        }
        const int i = chern_index(gen);
        switch (family.tag) {
        case FamilyTag::GL:
        case FamilyTag::SL:
            target.images.emplace(var, elementary_symmetric(i, roots, target.ring));
            break;
        case FamilyTag::Sp:
        case FamilyTag::O:
        case FamilyTag::SO:
            if (i % 2 == 1)
                target.images.emplace(var, Polynomial::zero(target.ring));
            else
                target.images.emplace(var, elementary_symmetric(i / 2, roots, target.ring));
            break;
        }
    }
    return target;
}

bool has_mu_target(const Presentation& pres)
{
    if (!pres.family())
        return false;
    FamilyTag tag = pres.family()->tag;
    return tag == FamilyTag::O || tag == FamilyTag::SO;
}

MuTarget make_mu_target(const Presentation& pres)
{
    const Family& family = family_or_throw(pres);
    if (family.tag != FamilyTag::O && family.tag != FamilyTag::SO)
        throw UndefinedRestrictionError("mu restriction is defined for O and SO only");
    const int n = family.n;

    MuTarget target;
    target.family = family;

    std::vector<Polynomial> images_of_eta;
    if (family.tag == FamilyTag::O) {
        target.ring = degree_one_ring(Coeff::F2, "e", n);
        images_of_eta = ring_variables(target.ring);
    } else {
        // Gamma_n = mu^n cap SO; its ring is Z[eta_1..eta_n]/(eta_1+...+eta_n),
        // realized in positive degrees over F_2 by eliminating eta_n.
        target.ring = degree_one_ring(Coeff::F2, "e", n - 1);
        images_of_eta = ring_variables(target.ring);
        Polynomial last = Polynomial::zero(target.ring);
        for (const auto& e : images_of_eta)
            last += e;
        images_of_eta.push_back(last);
    }

    for (const auto& gen : pres.generators()) {
        if (gen.name == "y")
            continue; // no image
        const int i = chern_index(gen);
        target.images.emplace(pres.var_of_generator(gen.name),
                              elementary_symmetric(i, images_of_eta, target.ring));
    }
    return target;
}

Polynomial torus_image_formal(const Polynomial& p, const TorusTarget& target)
{
    return substitute(p, target.images, target.ring);
}

Polynomial mu_image_formal(const Polynomial& p, const MuTarget& target)
{
    for (const auto& [mon, c] : p.terms())
        for (const auto& [v, e] : mon.exps)
            if (target.images.find(v) == target.images.end())
                throw UndefinedRestrictionError(
                    "no mu image for generator " + p.ring()->var(v).name);
    return substitute(p, target.images, target.ring);
}

Polynomial torus_image(const ChowElement& x)
{
    TorusTarget target = make_torus_target(x.presentation());
    return torus_image_formal(to_polynomial(x), target);
}

Polynomial mu_image(const ChowElement& x)
{
    MuTarget target = make_mu_target(x.presentation());
    return mu_image_formal(to_polynomial(x), target);
}

bool VerificationReport::ok() const
{
    for (const auto& r : relations)
        if (!r.vanishes)
            return false;
    for (const auto& d : faithfulness)
        if (!d.injective)
            return false;
    return true;
}

VerificationReport verify_relations(const Presentation& pres)
{
    const Family& family = family_or_throw(pres);
    VerificationReport report;
    report.family = family_name(family.tag);
    report.n = family.n;

    TorusTarget torus = make_torus_target(pres);
    std::optional<MuTarget> mu;
    if (has_mu_target(pres))
        mu = make_mu_target(pres);

    const int yvar = pres.var_of_generator("y");
    for (const auto& rel : pres.relations()) {
        RelationCheck check;
        check.relation = to_string(rel);
        Polynomial t = torus_image_formal(rel, torus);
        check.torus = to_string(t);
        bool zero = t.is_zero();
        bool rel_has_y = false;
        for (const auto& [mon, c] : rel.terms())
            rel_has_y = rel_has_y || (yvar >= 0 && mon.exponent(yvar) > 0);
        if (mu && !rel_has_y) {
            Polynomial m2 = mu_image_formal(rel, *mu);
            check.mu = to_string(m2);
            zero = zero && m2.is_zero();
        }
        check.vanishes = zero;
        report.relations.push_back(std::move(check));
    }
    return report;
}

IntMatrix restriction_matrix(const Presentation& pres, const std::vector<Monomial>& basis,
                             const std::map<int, Polynomial>& images, const RingPtr& target)
{
    std::vector<Polynomial> cols;
    std::map<Monomial, int, MonBefore> row_of;
    for (const auto& mon : basis) {
        Polynomial p = Polynomial::term(pres.ring(), 1, mon);
        Polynomial img = substitute(p, images, target);
        for (const auto& [tm, c] : img.terms())
            row_of.emplace(tm, 0);
        cols.push_back(std::move(img));
    }
    int r = 0;
    for (auto& [tm, idx] : row_of)
        idx = r++;

    IntMatrix m(r, static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [tm, c] : cols[j].terms())
            m.at(row_of.at(tm), static_cast<int>(j)) = c;
    return m;
}

namespace {

DegreeCheck check_degree(const Presentation& pres, const TorusTarget& torus,
                         const MuTarget* mu, int degree)
{
    ReducedBasis basis = reduced_monomials(pres, degree);
    DegreeCheck check;
    check.degree = degree;
    check.free_basis = static_cast<long long>(basis.free.size());
    check.torsion_basis = static_cast<long long>(basis.torsion.size());

    bool free_ok = true;
    if (!basis.free.empty()) {
        IntMatrix m = restriction_matrix(pres, basis.free, torus.images, torus.ring);
        free_ok = kernel_is_zero(m, Modulus::None);
    }
    bool torsion_ok = true;
    if (!basis.torsion.empty()) {
        if (!mu)
            torsion_ok = false; // torsion with no mod-2 witness
        else {
            IntMatrix m = restriction_matrix(pres, basis.torsion, mu->images, mu->ring);
            torsion_ok = kernel_is_zero(m, Modulus::Two);
        }
    }
    check.injective = free_ok && torsion_ok;
    return check;
}

} // namespace

VerificationReport faithfulness_check(const Presentation& pres, int max_degree, bool parallel)
{
    if (max_degree < 1)
        throw RangeError("faithfulness_check needs max_degree >= 1");
    const Family& family = family_or_throw(pres);

    VerificationReport report;
    report.family = family_name(family.tag);
    report.n = family.n;
    report.faithfulness.resize(max_degree);

    TorusTarget torus = make_torus_target(pres);
    std::optional<MuTarget> mu;
    if (has_mu_target(pres))
        mu = make_mu_target(pres);
    const MuTarget* mu_ptr = mu ? &*mu : nullptr;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
    for (int d = 1; d <= max_degree; ++d)
        report.faithfulness[d - 1] = check_degree(pres, torus, mu_ptr, d);
    return report;
}

std::string report_to_json(const VerificationReport& report, int indent)
{
    nlohmann::ordered_json j;
    j["family"] = report.family;
    j["n"] = report.n;
    j["relations"] = nlohmann::ordered_json::array();
    for (const auto& r : report.relations) {
        nlohmann::ordered_json jr;
        jr["relation"] = r.relation;
        jr["torus_image"] = r.torus;
        if (r.mu)
            jr["mu_image"] = *r.mu;
        else
            jr["mu_image"] = nullptr;
        jr["vanishes"] = r.vanishes;
        j["relations"].push_back(std::move(jr));
    }
    j["faithfulness"] = nlohmann::ordered_json::array();
    for (const auto& d : report.faithfulness) {
        nlohmann::ordered_json jd;
        jd["degree"] = d.degree;
        jd["free_basis"] = d.free_basis;
        jd["torsion_basis"] = d.torsion_basis;
        jd["injective"] = d.injective;
        j["faithfulness"].push_back(std::move(jd));
    }
    return j.dump(indent);
}

IsotropicChern split_isotropic_chern(const SplitBundle& b)
{
    if (b.m < 1)
        throw RangeError("split bundle needs m >= 1");
    if (static_cast<int>(b.signs.size()) != b.m)
        throw RangeError("sign vector length must equal m");
    RingPtr ring = degree_one_ring(Coeff::Z, "x", b.m);

    int parity = 1;
    std::vector<std::pair<int, int>> exps;
    for (int i = 0; i < b.m; ++i) {
        if (b.signs[i] != 1 && b.signs[i] != -1)
            throw RangeError("sign entries must be +1 or -1");
        parity *= b.signs[i];
        exps.emplace_back(i, 1);
    }
    IsotropicChern out{parity == 1,
                       Polynomial::term(ring, parity, make_monomial(*ring, exps))};
    return out;
}

Polynomial split_eg_class(int m)
{
    if (m < 1)
        throw RangeError("split_eg_class needs m >= 1");
    RingPtr ring = degree_one_ring(Coeff::Z, "x", m);
    std::vector<std::pair<int, int>> exps;
    for (int i = 0; i < m; ++i)
        exps.emplace_back(i, 1);
    return Polynomial::term(ring, pow2(m - 1), make_monomial(*ring, exps));
}

Polynomial reduce_top_square(const Polynomial& p, int m)
{
    Polynomial out(p.ring());
    for (const auto& [mon, c] : p.terms()) {
        bool divisible = true;
        for (int v = 0; v < m; ++v)
            divisible = divisible && mon.exponent(v) >= 2;
        if (!divisible)
            out.add_term(mon, c);
    }
    return out;
}

IdentifyClassResult verify_identify_class(int m)
{
    if (m < 2)
        throw RangeError("verify_identify_class needs m >= 2");
    RingPtr ring = degree_one_ring(Coeff::Z, "x", m);
    Polynomial x1 = Polynomial::variable(ring, 0);

    std::vector<std::pair<int, int>> tail;
    for (int v = 1; v < m; ++v)
        tail.emplace_back(v, 1);
    Polynomial rest = Polynomial::term(ring, pow2(m - 2), make_monomial(*ring, tail));

    // [Y1]*y(F1) + [Y2]*y(F2) in Z[x]/(x_1^2...x_m^2); the first subbundle
    // is admissible, the second is not.
    Polynomial lhs = reduce_top_square((-x1) * rest + x1 * (-rest), m);

    Presentation so = build_presentation({FamilyTag::SO, 2 * m});
    TorusTarget torus = make_torus_target(so);
    Polynomial y = Polynomial::variable(so.ring(), so.var_of_generator("y"));
    Polynomial rhs_in_torus = torus_image_formal(y, torus);
    // Same variable layout: rebuild in the local ring for comparability.
    Polynomial rhs = Polynomial::zero(ring);
    for (const auto& [mon, c] : rhs_in_torus.terms())
        rhs.add_term(make_monomial(*ring, mon.exps), c);

    IdentifyClassResult out{lhs, rhs, 0};
    if (lhs == rhs)
        out.sign = 1;
    else if (lhs == -rhs)
        out.sign = -1;
    return out;
}

} // namespace chowring
