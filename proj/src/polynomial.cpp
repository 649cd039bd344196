#include "chowring/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace chowring {

PolyRing::PolyRing(Coeff coeff, std::vector<VarSpec> vars)
    : coeff_(coeff), vars_(std::move(vars))
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].degree < 1)
            throw RangeError("variable degree must be >= 1: " + vars_[i].name);
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i].name == vars_[j].name)
                throw ContextError("duplicate variable name: " + vars_[i].name);
    }
}

int PolyRing::var_index(const std::string& name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

bool PolyRing::same_as(const PolyRing& other) const
{
    return this == &other || (coeff_ == other.coeff_ && vars_ == other.vars_);
}

RingPtr make_ring(Coeff coeff, std::vector<VarSpec> vars)
{
    return std::make_shared<PolyRing>(coeff, std::move(vars));
}

static void check_same_ring(const Polynomial& a, const Polynomial& b)
{
    if (!a.ring()->same_as(*b.ring()))
        throw ContextError("polynomials live in different rings");
}

int Monomial::exponent(int var) const
{
    for (const auto& [v, e] : exps)
        if (v == var)
            return e;
    return 0;
}

Monomial make_monomial(const PolyRing& ring, std::vector<std::pair<int, int>> exps)
{
    std::sort(exps.begin(), exps.end());
    Monomial mon;
    for (const auto& [v, e] : exps) {
        if (v < 0 || v >= ring.nvars())
            throw RangeError("variable index out of range");
        if (e < 0)
            throw RangeError("negative exponent");
        if (e == 0)
            continue;
        if (!mon.exps.empty() && mon.exps.back().first == v)
            mon.exps.back().second += e;
        else
            mon.exps.emplace_back(v, e);
        mon.degree += e * ring.var(v).degree;
    }
    return mon;
}

Monomial mon_mul(const Monomial& a, const Monomial& b)
{
    Monomial out;
    out.degree = a.degree + b.degree;
    auto i = a.exps.begin();
    auto j = b.exps.begin();
    while (i != a.exps.end() && j != b.exps.end()) {
        if (i->first < j->first)
            out.exps.push_back(*i++);
        else if (j->first < i->first)
            out.exps.push_back(*j++);
        else {
            out.exps.emplace_back(i->first, i->second + j->second);
            ++i, ++j;
        }
    }
    out.exps.insert(out.exps.end(), i, a.exps.end());
    out.exps.insert(out.exps.end(), j, b.exps.end());
    return out;
}

int mon_cmp(const Monomial& a, const Monomial& b)
{
    if (a.degree != b.degree)
        return a.degree > b.degree ? 1 : -1;
    auto i = a.exps.begin();
    auto j = b.exps.begin();
    while (i != a.exps.end() && j != b.exps.end()) {
        if (i->first != j->first) // nonzero exponent at the earlier variable wins
            return i->first < j->first ? 1 : -1;
        if (i->second != j->second)
            return i->second > j->second ? 1 : -1;
        ++i, ++j;
    }
    if (i != a.exps.end())
        return 1;
    if (j != b.exps.end())
        return -1;
    return 0;
}

Polynomial Polynomial::zero(RingPtr ring)
{
    return Polynomial(std::move(ring));
}

Polynomial Polynomial::constant(RingPtr ring, const Int& c)
{
    Polynomial p(std::move(ring));
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var)
{
    Monomial mon = make_monomial(*ring, {{var, 1}});
    Polynomial p(std::move(ring));
    p.add_term(mon, 1);
    return p;
}

Polynomial Polynomial::term(RingPtr ring, const Int& c, Monomial mon)
{
    Polynomial p(std::move(ring));
    p.add_term(std::move(mon), c);
    return p;
}

int Polynomial::degree() const
{
    if (terms_.empty())
        return -1;
    return terms_.begin()->first.degree; // leading term has maximal degree
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    int d = terms_.begin()->first.degree;
    return terms_.rbegin()->first.degree == d;
}

void Polynomial::add_term(const Monomial& mon, const Int& c)
{
    Int v = c;
    if (ring_->coeff() == Coeff::F2)
        v = ((v % 2) + 2) % 2;
    if (v == 0)
        return;
    auto [it, inserted] = terms_.emplace(mon, v);
    if (!inserted) {
        it->second += v;
        if (ring_->coeff() == Coeff::F2)
            it->second = ((it->second % 2) + 2) % 2;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const
{
    if (ring_->coeff() == Coeff::F2)
        return *this;
    Polynomial out(ring_);
    for (const auto& [mon, c] : terms_)
        out.terms_.emplace(mon, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const
{
    return poly_add(*this, rhs);
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const
{
    return poly_add(*this, -rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const
{
    return poly_mul(*this, rhs);
}

Polynomial Polynomial::operator*(const Int& scalar) const
{
    Polynomial out(ring_);
    for (const auto& [mon, c] : terms_)
        out.add_term(mon, c * scalar);
    return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const
{
    return ring_->same_as(*rhs.ring_) && terms_ == rhs.terms_;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b)
{
    check_same_ring(a, b);
    Polynomial out = a;
    for (const auto& [mon, c] : b.terms())
        out.add_term(mon, c);
    return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b)
{
    check_same_ring(a, b);
    Polynomial out(a.ring());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(mon_mul(ma, mb), ca * cb);
    return out;
}

Polynomial poly_pow(const Polynomial& base, int exponent)
{
    if (exponent < 0)
        throw RangeError("negative exponent");
    Polynomial result = Polynomial::constant(base.ring(), 1);
    Polynomial sq = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1)
            result = poly_mul(result, sq);
        e >>= 1;
        if (e)
            sq = poly_mul(sq, sq);
    }
    return result;
}

Polynomial elementary_symmetric(int k, const std::vector<Polynomial>& args, RingPtr ring)
{
    if (k < 0 || static_cast<std::size_t>(k) > args.size())
        throw RangeError("elementary_symmetric: k out of range");
    if (!ring && !args.empty())
        ring = args.front().ring();
    if (!ring)
        throw RangeError("elementary_symmetric with no arguments needs an explicit ring");
    for (const auto& a : args)
        if (!a.ring()->same_as(*ring))
            throw ContextError("elementary_symmetric arguments in different rings");

    // Coefficients of t^0..t^k in prod (1 + t*args[i]).
    std::vector<Polynomial> e(static_cast<std::size_t>(k) + 1, Polynomial::zero(ring));
    e[0] = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < args.size(); ++i)
        for (int j = std::min<std::size_t>(k, i + 1); j >= 1; --j)
            e[j] += e[j - 1] * args[i];
    return e[k];
}

Polynomial substitute(const Polynomial& p, const std::map<int, Polynomial>& images,
                      const RingPtr& target)
{
    if (p.ring()->coeff() == Coeff::F2 && target->coeff() == Coeff::Z)
        throw ContextError("no ring homomorphism from F2 coefficients to Z");
    for (const auto& [var, img] : images)
        if (!img.ring()->same_as(*target))
            throw ContextError("substitution image lives outside the target ring");

    Polynomial out = Polynomial::zero(target);
    for (const auto& [mon, c] : p.terms()) {
        Polynomial value = Polynomial::constant(target, c);
        for (const auto& [var, exp] : mon.exps) {
            auto it = images.find(var);
            if (it == images.end())
                throw IncompleteMapError("no image for variable " + p.ring()->var(var).name);
            if (value.is_zero())
                break;
            value = poly_mul(value, poly_pow(it->second, exp));
        }
        out += value;
    }
    return out;
}

Polynomial graded_component(const Polynomial& p, int d)
{
    Polynomial out(p.ring());
    for (const auto& [mon, c] : p.terms())
        if (mon.degree == d)
            out.add_term(mon, c);
    return out;
}

std::string to_string(const Monomial& mon, const PolyRing& ring)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : mon.exps) {
        if (!first)
            os << '*';
        os << ring.var(v).name;
        if (e != 1)
            os << '^' << e;
        first = false;
    }
    return os.str();
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mon, c] : p.terms()) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mon.empty())
            os << mag;
        else {
            if (mag != 1)
                os << mag << '*';
            os << to_string(mon, *p.ring());
        }
        first = false;
    }
    return os.str();
}

} // namespace chowring
