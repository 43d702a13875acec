#include "steencob/json_io.hpp"

#include "steencob/error.hpp"

namespace steencob {

namespace {

template <class F>
auto guarded(const char* what, F&& f)
{
    try {
        return f();
    }
    catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

}  // namespace

json to_json(const SteenrodElement& e)
{
    json terms = json::array();
    for (const auto& m : e.terms())
        terms.push_back(m.exponents());
    return {{"terms", terms}};
}

SteenrodElement steenrod_from_json(const json& j)
{
    return guarded("Steenrod element", [&] {
        SteenrodElement e;
        for (const auto& t : j.at("terms"))
            e.toggle(SqMonomial(t.get<std::vector<int>>()));
        return e;
    });
}

json to_json(const AlgebraPresentation& ring)
{
    json gens = json::array();
    for (const auto& g : ring.generators())
        gens.push_back({{"name", g.name}, {"degree", g.degree}, {"trunc", g.trunc}});
    return {{"generators", gens}, {"dim", ring.total_dimension()}};
}

AlgebraPresentation presentation_from_json(const json& j)
{
    return guarded("presentation", [&] {
        std::vector<Generator> gens;
        for (const auto& g : j.at("generators"))
            gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>(), g.at("trunc").get<int>()});
        return AlgebraPresentation(std::move(gens), j.at("dim").get<int>());
    });
}

json to_json(const ClassElement& x)
{
    json out = json::array();
    for (const auto& m : x.terms())
        out.push_back(m.exponents);
    return out;
}

ClassElement class_from_json(const json& j, const AlgebraPresentation& ring)
{
    return guarded("class element", [&] {
        ClassElement x;
        for (const auto& m : j) {
            Monomial mono{m.get<std::vector<int>>()};
            if (mono.exponents.size() != ring.size())
                throw InvalidArgument("class element: exponent vector of wrong length");
            if (ring.contains(mono))
                x.toggle(mono);
        }
        return x;
    });
}

json to_json(const SqRuleSet& rules)
{
    json out = json::array();
    for (const auto& rule : rules.squares()) {
        json r = json::array();
        for (const auto& x : rule)
            r.push_back(to_json(x));
        out.push_back(r);
    }
    return out;
}

SqRuleSet rules_from_json(const json& j, const AlgebraPresentation& ring)
{
    return guarded("rule set", [&] {
        std::vector<std::vector<ClassElement>> squares;
        for (const auto& rule : j) {
            auto& out = squares.emplace_back();
            for (const auto& x : rule)
                out.push_back(class_from_json(x, ring));
        }
        return SqRuleSet(ring, std::move(squares));
    });
}

json to_json(const ConnectedModel& m)
{
    return {{"label", m.label},
            {"presentation", to_json(m.ring)},
            {"rules", to_json(m.rules)},
            {"euler", m.euler},
            {"dimension", m.dimension()},
            {"fundamental", m.fundamental.exponents}};
}

ConnectedModel connected_from_json(const json& j)
{
    return guarded("manifold", [&] {
        AlgebraPresentation ring = presentation_from_json(j.at("presentation"));
        SqRuleSet rules = rules_from_json(j.at("rules"), ring);
        return make_connected(j.value("label", std::string("M")), std::move(ring), std::move(rules),
                              j.at("euler").get<long long>());
    });
}

json to_json(const TotalClass& t)
{
    json out = json::array();
    for (const auto& p : t.parts())
        out.push_back(to_json(p));
    return out;
}

json to_json(const SWVector& v)
{
    json numbers = json::array();
    for (const auto& [p, value] : v.entries())
        numbers.push_back({{"partition", p.parts}, {"value", value ? 1 : 0}});
    return {{"dimension", v.dimension()}, {"numbers", numbers}};
}

json to_json(const ClassExpression& e)
{
    json monomials = json::array();
    for (const auto& m : e.monomials())
        monomials.push_back(m.parts);
    return {{"dimension", e.dimension()}, {"monomials", monomials}};
}

}  // namespace steencob
