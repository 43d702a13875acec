#include "steencob/cohomology.hpp"

#include "steencob/error.hpp"
#include "steencob/f2_matrix.hpp"

#include <functional>
#include <map>
#include <utility>

namespace steencob {

AlgebraPresentation::AlgebraPresentation(std::vector<Generator> generators, int total_dimension)
    : generators_(std::move(generators)), dimension_(total_dimension)
{
    if (dimension_ < 0)
        throw InvalidArgument("presentation: negative total dimension");
    for (const auto& g : generators_) {
        if (g.degree < 1)
            throw InvalidArgument("presentation: generator '" + g.name + "' must have degree >= 1");
        if (g.trunc < 1)
            throw InvalidArgument("presentation: generator '" + g.name + "' must have truncation >= 1");
    }
}

int AlgebraPresentation::degree(const Monomial& m) const
{
    if (m.exponents.size() != size())
        throw InvalidArgument("monomial has " + std::to_string(m.exponents.size()) + " exponents, ring has " +
                              std::to_string(size()) + " generators");
    int d = 0;
    for (std::size_t g = 0; g < size(); ++g)
        d += m.exponents[g] * generators_[g].degree;
    return d;
}

bool AlgebraPresentation::contains(const Monomial& m) const noexcept
{
    if (m.exponents.size() != size())
        return false;
    for (std::size_t g = 0; g < size(); ++g)
        if (m.exponents[g] < 0 || m.exponents[g] >= generators_[g].trunc)
            return false;
    return true;
}

Monomial AlgebraPresentation::generator(std::size_t g) const
{
    Monomial m = unit();
    m.exponents.at(g) = 1;
    return m;
}

Monomial AlgebraPresentation::top_monomial() const
{
    Monomial m = unit();
    for (std::size_t g = 0; g < size(); ++g)
        m.exponents[g] = generators_[g].trunc - 1;
    return m;
}

int AlgebraPresentation::top_degree() const
{
    return degree(top_monomial());
}

std::vector<Monomial> AlgebraPresentation::basis(int k) const
{
    std::vector<Monomial> out;
    if (k < 0)
        return out;
    Monomial cur = unit();
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int remaining) {
        if (g == size()) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        const int d = generators_[g].degree;
        for (int e = 0; e < generators_[g].trunc && e * d <= remaining; ++e) {
            cur.exponents[g] = e;
            rec(g + 1, remaining - e * d);
        }
        cur.exponents[g] = 0;
    };
    rec(0, k);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> AlgebraPresentation::betti_numbers() const
{
    const int top = top_degree();
    std::vector<long long> b(static_cast<std::size_t>(top) + 1, 0);
    b[0] = 1;
    for (const auto& g : generators_) {
        // multiply the Poincare polynomial by 1 + t^d + ... + t^{d(e-1)}
        std::vector<long long> next(b.size(), 0);
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (b[k] == 0)
                continue;
            for (int e = 0; e < g.trunc; ++e) {
                const std::size_t t = k + static_cast<std::size_t>(e * g.degree);
                if (t < next.size())
                    next[t] += b[k];
            }
        }
        b = std::move(next);
    }
    return b;
}

AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b)
{
    std::vector<Generator> gens = a.generators();
    std::map<std::string, int> used;
    for (const auto& g : gens)
        ++used[g.name];
    for (Generator g : b.generators()) {
        const std::string base = g.name;
        int& count = used[base];
        if (count > 0) {
            std::string candidate;
            do {
                candidate = base + "_" + std::to_string(++count);
            } while (used.count(candidate));
            g.name = candidate;
            ++used[candidate];
        }
        else {
            count = 1;
        }
        gens.push_back(std::move(g));
    }
    return {std::move(gens), a.total_dimension() + b.total_dimension()};
}

void ClassElement::toggle(const Monomial& m)
{
    auto [it, inserted] = terms_.insert(m);
    if (!inserted)
        terms_.erase(it);
}

ClassElement& ClassElement::operator+=(const ClassElement& rhs)
{
    for (const auto& m : rhs.terms_)
        toggle(m);
    return *this;
}

ClassElement ClassElement::embedded(std::size_t offset, std::size_t total) const
{
    ClassElement out;
    for (const auto& m : terms_) {
        if (offset + m.exponents.size() > total)
            throw InvalidArgument("embedded: target ring too small");
        Monomial e{std::vector<int>(total, 0)};
        std::copy(m.exponents.begin(), m.exponents.end(), e.exponents.begin() + static_cast<std::ptrdiff_t>(offset));
        out.toggle(e);
    }
    return out;
}

std::optional<int> degree_of(const ClassElement& x, const AlgebraPresentation& ring)
{
    std::optional<int> d;
    for (const auto& m : x.terms()) {
        if (!ring.contains(m))
            throw InvalidArgument("class element does not belong to this ring");
        const int dm = ring.degree(m);
        if (d && *d != dm)
            throw InvalidArgument("class element is not homogeneous");
        d = dm;
    }
    return d;
}

std::vector<ClassElement> graded_parts(const ClassElement& x, const AlgebraPresentation& ring)
{
    std::vector<ClassElement> parts;
    for (const auto& m : x.terms()) {
        if (!ring.contains(m))
            throw InvalidArgument("class element does not belong to this ring");
        const auto d = static_cast<std::size_t>(ring.degree(m));
        if (parts.size() <= d)
            parts.resize(d + 1);
        parts[d].toggle(m);
    }
    return parts;
}

SqRuleSet::SqRuleSet(const AlgebraPresentation& ring, std::vector<std::vector<ClassElement>> squares)
    : squares_(std::move(squares))
{
    if (squares_.size() != ring.size())
        throw InvalidArgument("rule set has " + std::to_string(squares_.size()) + " generators, ring has " +
                              std::to_string(ring.size()));
    for (std::size_t g = 0; g < ring.size(); ++g) {
        const auto& gen = ring.generators()[g];
        auto& rule = squares_[g];
        if (rule.size() > static_cast<std::size_t>(gen.degree) + 1)
            throw InvalidArgument("rule for '" + gen.name + "' gives Sq^i beyond the generator degree");
        rule.resize(static_cast<std::size_t>(gen.degree) + 1);
        ClassElement self;
        if (ring.contains(ring.generator(g)))
            self.toggle(ring.generator(g));
        if (rule[0] != self)
            throw InvalidArgument("rule for '" + gen.name + "' violates Sq^0 = 1");
        for (int i = 0; i <= gen.degree; ++i) {
            const auto d = degree_of(rule[static_cast<std::size_t>(i)], ring);
            if (d && *d != gen.degree + i)
                throw InvalidArgument("rule Sq^" + std::to_string(i) + "(" + gen.name + ") has wrong degree");
        }
        if (rule.back() != cup(self, self, ring))
            throw InvalidArgument("rule for '" + gen.name + "' violates Sq^{deg g}(g) = g^2");
    }
}

const ClassElement& SqRuleSet::square(std::size_t g, int i) const
{
    static const ClassElement zero;
    const auto& rule = squares_.at(g);
    if (i < 0 || static_cast<std::size_t>(i) >= rule.size())
        return zero;
    return rule[static_cast<std::size_t>(i)];
}

SqRuleSet tensor(const SqRuleSet& a, const AlgebraPresentation& ring_a, const SqRuleSet& b,
                 const AlgebraPresentation& ring_b)
{
    const AlgebraPresentation ring = tensor(ring_a, ring_b);
    std::vector<std::vector<ClassElement>> squares;
    for (const auto& rule : a.squares()) {
        auto& out = squares.emplace_back();
        for (const auto& x : rule)
            out.push_back(x.embedded(0, ring.size()));
    }
    for (const auto& rule : b.squares()) {
        auto& out = squares.emplace_back();
        for (const auto& x : rule)
            out.push_back(x.embedded(ring_a.size(), ring.size()));
    }
    return {ring, std::move(squares)};
}

namespace {

void require_member(const ClassElement& x, const AlgebraPresentation& ring)
{
    for (const auto& m : x.terms())
        if (!ring.contains(m))
            throw InvalidArgument("class element does not belong to this ring");
}

// Product of monomials with truncation; nullopt when the product is zero.
std::optional<Monomial> multiply_monomials(const Monomial& a, const Monomial& b, const AlgebraPresentation& ring)
{
    Monomial out = a;
    const auto& gens = ring.generators();
    for (std::size_t g = 0; g < out.exponents.size(); ++g) {
        out.exponents[g] += b.exponents[g];
        if (out.exponents[g] >= gens[g].trunc)
            return std::nullopt;
    }
    return out;
}

ClassElement cup_unchecked(const ClassElement& a, const ClassElement& b, const AlgebraPresentation& ring)
{
    ClassElement out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            if (auto p = multiply_monomials(x, y, ring))
                out.toggle(*p);
    return out;
}

// x^(2^power): in characteristic 2 the Frobenius map is additive, so each
// monomial is raised separately.
ClassElement frobenius(const ClassElement& x, int power, const AlgebraPresentation& ring)
{
    ClassElement out;
    const auto& gens = ring.generators();
    for (const auto& m : x.terms()) {
        Monomial r = m;
        bool alive = true;
        for (std::size_t g = 0; g < r.exponents.size() && alive; ++g) {
            r.exponents[g] <<= power;
            alive = r.exponents[g] < gens[g].trunc;
        }
        if (alive)
            out.toggle(r);
    }
    return out;
}

using Graded = std::vector<ClassElement>;  // index = Sq-degree

Graded graded_product(const Graded& a, const Graded& b, std::size_t max_grade, const AlgebraPresentation& ring)
{
    Graded out(max_grade + 1);
    for (std::size_t i = 0; i < a.size() && i <= max_grade; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size() && i + j <= max_grade; ++j)
            if (!b[j].is_zero())
                out[i + j] += cup_unchecked(a[i], b[j], ring);
    }
    return out;
}

// Graded pieces Sq^0(m), ..., Sq^{max_grade}(m). Cartan over generators,
// and Sq(g^e) = prod over set bits b of e of Sq(g)^(2^b).
Graded total_square_monomial(const Monomial& m, std::size_t max_grade, const AlgebraPresentation& ring,
                             const SqRuleSet& rules)
{
    Graded acc(max_grade + 1);
    acc[0].toggle(ring.unit());
    for (std::size_t g = 0; g < ring.size(); ++g) {
        const int e = m.exponents[g];
        const int deg = ring.generators()[g].degree;
        for (int bit = 0; (e >> bit) != 0; ++bit) {
            if (!((e >> bit) & 1))
                continue;
            Graded factor(max_grade + 1);
            for (int t = 0; t <= deg; ++t) {
                const std::size_t grade = static_cast<std::size_t>(t) << bit;
                if (grade > max_grade)
                    break;
                factor[grade] = frobenius(rules.square(g, t), bit, ring);
            }
            acc = graded_product(acc, factor, max_grade, ring);
        }
    }
    return acc;
}

void require_rules(const AlgebraPresentation& ring, const SqRuleSet& rules)
{
    if (rules.size() != ring.size())
        throw InvalidArgument("rule set does not match ring");
}

}  // namespace

ClassElement cup(const ClassElement& a, const ClassElement& b, const AlgebraPresentation& ring)
{
    require_member(a, ring);
    require_member(b, ring);
    return cup_unchecked(a, b, ring);
}

ClassElement sq(int i, const ClassElement& x, const AlgebraPresentation& ring, const SqRuleSet& rules)
{
    if (i < 0)
        throw InvalidArgument("sq: negative index");
    require_rules(ring, rules);
    const auto d = degree_of(x, ring);
    ClassElement out;
    if (!d || i > *d)
        return out;
    for (const auto& m : x.terms()) {
        auto pieces = total_square_monomial(m, static_cast<std::size_t>(i), ring, rules);
        out += pieces[static_cast<std::size_t>(i)];
    }
    return out;
}

ClassElement total_sq(const ClassElement& x, const AlgebraPresentation& ring, const SqRuleSet& rules)
{
    require_rules(ring, rules);
    require_member(x, ring);
    ClassElement out;
    for (const auto& m : x.terms()) {
        const auto d = static_cast<std::size_t>(ring.degree(m));
        for (const auto& piece : total_square_monomial(m, d, ring, rules))
            out += piece;
    }
    return out;
}

ClassElement apply_steenrod(const SteenrodElement& e, const ClassElement& x, const AlgebraPresentation& ring,
                            const SqRuleSet& rules)
{
    ClassElement out;
    for (const auto& word : e.terms()) {
        ClassElement cur = x;
        const auto& ex = word.exponents();
        for (auto it = ex.rbegin(); it != ex.rend() && !cur.is_zero(); ++it)
            cur = sq(*it, cur, ring, rules);
        out += cur;
    }
    return out;
}

bool pairing(const ClassElement& x, const AlgebraPresentation& ring)
{
    const auto d = degree_of(x, ring);
    if (!d)
        return false;
    if (*d != ring.total_dimension())
        throw InvalidArgument("pairing: class has degree " + std::to_string(*d) + ", fundamental class has degree " +
                              std::to_string(ring.total_dimension()));
    return x.contains(ring.top_monomial());
}

bool poincare_nondegenerate(const AlgebraPresentation& ring)
{
    const int n = ring.total_dimension();
    if (ring.top_degree() != n)
        return false;
    const Monomial top = ring.top_monomial();
    for (int k = 0; k <= n; ++k) {
        const auto lower = ring.basis(k);
        const auto upper = ring.basis(n - k);
        if (lower.size() != upper.size())
            return false;
        F2Matrix m(lower.size(), upper.size());
        for (std::size_t r = 0; r < lower.size(); ++r)
            for (std::size_t c = 0; c < upper.size(); ++c) {
                const auto p = multiply_monomials(lower[r], upper[c], ring);
                m.set(r, c, p && *p == top);
            }
        if (!m.invertible())
            return false;
    }
    return true;
}

std::string to_string(const Monomial& m, const AlgebraPresentation& ring)
{
    std::string s;
    for (std::size_t g = 0; g < m.exponents.size(); ++g) {
        const int e = m.exponents[g];
        if (e == 0)
            continue;
        if (!s.empty())
            s += ' ';
        s += g < ring.size() ? ring.generators()[g].name : "g" + std::to_string(g);
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const ClassElement& x, const AlgebraPresentation& ring)
{
    if (x.is_zero())
        return "0";
    // print by ascending degree, canonical order within a degree
    std::vector<std::pair<int, const Monomial*>> items;
    for (const auto& m : x.terms())
        items.emplace_back(ring.degree(m), &m);
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string s;
    for (const auto& [d, m] : items) {
        (void)d;
        if (!s.empty())
            s += " + ";
        s += to_string(*m, ring);
    }
    return s;
}

}  // namespace steencob
