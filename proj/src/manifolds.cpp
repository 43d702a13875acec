#include "steencob/manifolds.hpp"

#include "steencob/error.hpp"

#include <utility>

namespace steencob {

namespace {

// Sq rule entries for one generator, degree `deg`, given Sq^1..Sq^deg.
std::vector<ClassElement> rule_for(const AlgebraPresentation& ring, std::size_t g, std::vector<ClassElement> higher)
{
    std::vector<ClassElement> out;
    ClassElement self;
    if (ring.contains(ring.generator(g)))
        self.toggle(ring.generator(g));
    out.push_back(std::move(self));
    for (auto& x : higher)
        out.push_back(std::move(x));
    return out;
}

ClassElement monomial_or_zero(const AlgebraPresentation& ring, std::vector<int> exponents)
{
    Monomial m{std::move(exponents)};
    return ring.contains(m) ? ClassElement(m) : ClassElement();
}

std::string wrap_sum(const std::string& label)
{
    return label.find('+') == std::string::npos ? label : "(" + label + ")";
}

}  // namespace

ConnectedModel make_connected(std::string label, AlgebraPresentation ring, SqRuleSet rules, long long euler)
{
    if (!poincare_nondegenerate(ring))
        throw InvariantViolation("model '" + label + "' does not satisfy Poincare duality");
    ConnectedModel m{std::move(label), std::move(ring), std::move(rules), {}, euler};
    m.fundamental = m.ring.top_monomial();
    return m;
}

ManifoldModel::ManifoldModel(std::string label, std::vector<ConnectedModel> components)
    : label_(std::move(label)), components_(std::move(components))
{
    if (components_.empty())
        throw InvalidArgument("a manifold model needs at least one component");
    dimension_ = components_.front().dimension();
    for (const auto& c : components_)
        if (c.dimension() != dimension_)
            throw InvalidArgument("components of '" + label_ + "' have different dimensions");
}

ManifoldModel::ManifoldModel(ConnectedModel single) : ManifoldModel(single.label, {single}) {}

ManifoldModel point()
{
    return rp(0);
}

ManifoldModel rp(int n)
{
    if (n < 0)
        throw InvalidArgument("RP(n) needs n >= 0");
    const std::string label = "RP(" + std::to_string(n) + ")";
    if (n == 0)
        return ManifoldModel(make_connected(label, AlgebraPresentation{}, SqRuleSet{}, 1));
    AlgebraPresentation ring({{"a", 1, n + 1}}, n);
    SqRuleSet rules(ring, {rule_for(ring, 0, {monomial_or_zero(ring, {2})})});
    return ManifoldModel(make_connected(label, std::move(ring), std::move(rules), n % 2 == 0 ? 1 : 0));
}

ManifoldModel cp(int n)
{
    if (n < 0)
        throw InvalidArgument("CP(n) needs n >= 0");
    const std::string label = "CP(" + std::to_string(n) + ")";
    if (n == 0)
        return ManifoldModel(make_connected(label, AlgebraPresentation{}, SqRuleSet{}, 1));
    AlgebraPresentation ring({{"c", 2, n + 1}}, 2 * n);
    SqRuleSet rules(ring, {rule_for(ring, 0, {ClassElement(), monomial_or_zero(ring, {2})})});
    return ManifoldModel(make_connected(label, std::move(ring), std::move(rules), n + 1));
}

ManifoldModel dold(int m, int n)
{
    if (m < 0 || n < 0)
        throw InvalidArgument("Dold(m,n) needs m, n >= 0");
    const std::string label = "Dold(" + std::to_string(m) + "," + std::to_string(n) + ")";
    // generators of exponent bound 1 are zero and are left out
    std::vector<Generator> gens;
    if (m > 0)
        gens.push_back({"c", 1, m + 1});
    if (n > 0)
        gens.push_back({"d", 2, n + 1});
    AlgebraPresentation ring(gens, m + 2 * n);
    std::vector<std::vector<ClassElement>> squares;
    if (m > 0) {
        std::vector<int> c2(ring.size(), 0);
        c2[0] = 2;
        squares.push_back(rule_for(ring, 0, {monomial_or_zero(ring, c2)}));
    }
    if (n > 0) {
        const std::size_t d = ring.size() - 1;
        ClassElement sq1;
        if (m > 0)
            sq1 = monomial_or_zero(ring, {1, 1});
        std::vector<int> d2(ring.size(), 0);
        d2[d] = 2;
        squares.push_back(rule_for(ring, d, {sq1, monomial_or_zero(ring, d2)}));
    }
    SqRuleSet rules(ring, std::move(squares));
    const long long chi = (m % 2 == 0 ? 1 : 0) * static_cast<long long>(n + 1);
    return ManifoldModel(make_connected(label, std::move(ring), std::move(rules), chi));
}

ManifoldModel sphere(int n)
{
    if (n < 1)
        throw InvalidArgument("S(n) needs n >= 1; the 0-sphere is RP(0) + RP(0)");
    AlgebraPresentation ring({{"s", n, 2}}, n);
    std::vector<ClassElement> higher(static_cast<std::size_t>(n));
    SqRuleSet rules(ring, {rule_for(ring, 0, std::move(higher))});
    return ManifoldModel(
        make_connected("S(" + std::to_string(n) + ")", std::move(ring), std::move(rules), n % 2 == 0 ? 2 : 0));
}

ConnectedModel product(const ConnectedModel& a, const ConnectedModel& b)
{
    AlgebraPresentation ring = tensor(a.ring, b.ring);
    SqRuleSet rules = tensor(a.rules, a.ring, b.rules, b.ring);
    return make_connected(wrap_sum(a.label) + "*" + wrap_sum(b.label), std::move(ring), std::move(rules),
                          a.euler * b.euler);
}

ManifoldModel product(const ManifoldModel& a, const ManifoldModel& b)
{
    std::vector<ConnectedModel> parts;
    for (const auto& x : a.components())
        for (const auto& y : b.components())
            parts.push_back(product(x, y));
    return {wrap_sum(a.label()) + "*" + wrap_sum(b.label()), std::move(parts)};
}

ManifoldModel disjoint_union(const ManifoldModel& a, const ManifoldModel& b)
{
    if (a.dimension() != b.dimension())
        throw InvalidArgument("disjoint union of manifolds of dimensions " + std::to_string(a.dimension()) + " and " +
                              std::to_string(b.dimension()));
    std::vector<ConnectedModel> parts = a.components();
    parts.insert(parts.end(), b.components().begin(), b.components().end());
    return {a.label() + " + " + b.label(), std::move(parts)};
}

long long euler_characteristic(const ManifoldModel& m)
{
    long long chi = 0;
    for (const auto& c : m.components())
        chi += c.euler;
    return chi;
}

long long betti_euler(const AlgebraPresentation& ring)
{
    long long chi = 0;
    const auto b = ring.betti_numbers();
    for (std::size_t k = 0; k < b.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * b[k];
    return chi;
}

}  // namespace steencob
