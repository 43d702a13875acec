#include "oracles.hpp"

#include "steencob/binomial.hpp"
#include "steencob/cohomology.hpp"
#include "steencob/error.hpp"
#include "steencob/manifolds.hpp"
#include "steencob/steenrod.hpp"

#include <doctest.h>

using namespace steencob;

namespace {

// F2[t_1..t_r]/(t^trunc) with Sq t = t + t^2 for every generator.
struct Poly {
    AlgebraPresentation ring;
    SqRuleSet rules;
};

Poly poly_ring(int r, int trunc)
{
    std::vector<Generator> gens;
    for (int i = 0; i < r; ++i)
        gens.push_back({"t" + std::to_string(i + 1), 1, trunc});
    AlgebraPresentation ring(gens, r * (trunc - 1));
    std::vector<std::vector<ClassElement>> squares;
    for (int i = 0; i < r; ++i) {
        Monomial sq = ring.generator(i);
        sq.exponents[i] = 2;
        squares.push_back({ClassElement(ring.generator(i)), ClassElement(sq)});
    }
    SqRuleSet rules(ring, std::move(squares));
    return {ring, rules};
}

Monomial mono(std::vector<int> e)
{
    return Monomial{std::move(e)};
}

ClassElement cls(std::initializer_list<std::vector<int>> monos)
{
    ClassElement x;
    for (const auto& m : monos)
        x.toggle(Monomial{m});
    return x;
}

const ConnectedModel& only(const ManifoldModel& m)
{
    return m.components().front();
}

std::vector<ConnectedModel> catalog()
{
    std::vector<ConnectedModel> out;
    for (int n = 1; n <= 8; ++n)
        out.push_back(only(rp(n)));
    for (int n = 1; n <= 4; ++n)
        out.push_back(only(cp(n)));
    for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {3, 2}, {2, 1}, {1, 3}})
        out.push_back(only(dold(m, n)));
    for (int n = 1; n <= 5; ++n)
        out.push_back(only(sphere(n)));
    out.push_back(only(product(rp(2), rp(2))));
    out.push_back(only(product(rp(3), cp(1))));
    return out;
}

}  // namespace

TEST_CASE("cup products")
{
    const auto rp2 = only(rp(2));
    const ClassElement a = cls({{1}});
    CHECK(cup(a, a, rp2.ring) == cls({{2}}));
    CHECK(cup(cls({{2}}), a, rp2.ring).is_zero());

    const auto p = poly_ring(2, 3);
    const ClassElement s = cls({{1, 0}, {0, 1}});
    CHECK(cup(s, s, p.ring) == cls({{2, 0}, {0, 2}}));
    CHECK(cup(ClassElement(p.ring.unit()), s, p.ring) == s);
}

TEST_CASE("Steenrod squares on classes")
{
    const auto rp4 = only(rp(4));
    const ClassElement a = cls({{1}}), a2 = cls({{2}});
    CHECK(sq(1, a, rp4.ring, rp4.rules) == a2);
    CHECK(sq(0, a2, rp4.ring, rp4.rules) == a2);
    CHECK(sq(1, a2, rp4.ring, rp4.rules).is_zero());
    CHECK(sq(2, a2, rp4.ring, rp4.rules) == cls({{4}}));
    CHECK(sq(3, a2, rp4.ring, rp4.rules).is_zero());

    CHECK(total_sq(a, rp4.ring, rp4.rules) == a + a2);
    CHECK(total_sq(ClassElement(rp4.ring.unit()), rp4.ring, rp4.rules) == ClassElement(rp4.ring.unit()));
    CHECK(total_sq(a2, rp4.ring, rp4.rules) == a2 + cls({{4}}));

    CHECK_THROWS_AS(sq(1, a + a2, rp4.ring, rp4.rules), InvalidArgument);
}

TEST_CASE("apply_steenrod")
{
    const auto rp4 = only(rp(4));
    const ClassElement a = cls({{1}});
    CHECK(apply_steenrod(SteenrodElement(SqMonomial{1, 1}), a, rp4.ring, rp4.rules).is_zero());
    CHECK(apply_steenrod(SteenrodElement::unit(), a, rp4.ring, rp4.rules) == a);

    const auto p = poly_ring(3, 16);
    const ClassElement t123 = cls({{1, 1, 1}});
    const auto lhs = apply_steenrod(SteenrodElement(SqMonomial{2, 3}), t123, p.ring, p.rules);
    const auto rhs =
        apply_steenrod(SteenrodElement{SqMonomial{5}, SqMonomial{4, 1}}, t123, p.ring, p.rules);
    CHECK(lhs == rhs);
    CHECK_FALSE(lhs.is_zero());
}

TEST_CASE("module action is compatible with products")
{
    const auto p = poly_ring(3, 12);
    const std::vector<SteenrodElement> ops{SteenrodElement::sq(1), SteenrodElement::sq(3),
                                           SteenrodElement(SqMonomial{2, 1}), SteenrodElement::sq(2)};
    for (int k = 1; k <= 4; ++k)
        for (const auto& m : p.ring.basis(k)) {
            const ClassElement x(m);
            for (const auto& a : ops)
                for (const auto& b : ops)
                    REQUIRE(apply_steenrod(multiply(a, b), x, p.ring, p.rules) ==
                            apply_steenrod(a, apply_steenrod(b, x, p.ring, p.rules), p.ring, p.rules));
        }
}

TEST_CASE("pairing and Poincare duality")
{
    const auto rp2 = only(rp(2));
    CHECK(pairing(cls({{2}}), rp2.ring));
    CHECK_FALSE(pairing(ClassElement{}, rp2.ring));
    CHECK_THROWS_AS(pairing(cls({{1}}), rp2.ring), InvalidArgument);

    const auto rp2sq = only(product(rp(2), rp(2)));
    CHECK_THROWS_AS(pairing(cls({{2, 1}, {1, 2}}), rp2sq.ring), InvalidArgument);
    CHECK(pairing(cls({{2, 2}}), rp2sq.ring));

    CHECK(poincare_nondegenerate(only(rp(3)).ring));
    CHECK(poincare_nondegenerate(only(cp(2)).ring));
    CHECK_FALSE(poincare_nondegenerate(AlgebraPresentation({{"a", 1, 2}}, 3)));
}

TEST_CASE("Cartan identity on catalog rings")
{
    for (const auto& m : catalog()) {
        const auto& R = m.ring;
        for (int dx = 0; dx <= std::min(8, R.top_degree()); ++dx)
            for (int dy = 0; dx + dy <= std::min(8, R.top_degree()); ++dy)
                for (const auto& x : R.basis(dx))
                    for (const auto& y : R.basis(dy)) {
                        const ClassElement X(x), Y(y);
                        const ClassElement xy = cup(X, Y, R);
                        for (int k = 0; k <= 8; ++k) {
                            ClassElement rhs;
                            for (int i = 0; i <= k; ++i)
                                rhs += cup(sq(i, X, R, m.rules), sq(k - i, Y, R, m.rules), R);
                            REQUIRE_MESSAGE(sq(k, xy, R, m.rules) == rhs, m.label);
                        }
                    }
    }
}

TEST_CASE("instability on catalog rings")
{
    for (const auto& m : catalog()) {
        const auto& R = m.ring;
        for (int d = 0; d <= R.top_degree(); ++d)
            for (const auto& x : R.basis(d)) {
                const ClassElement X(x);
                for (int i = d + 1; i <= d + 4; ++i)
                    REQUIRE(sq(i, X, R, m.rules).is_zero());
                REQUIRE(sq(d, X, R, m.rules) == cup(X, X, R));
                REQUIRE(sq(0, X, R, m.rules) == X);
            }
    }
}

TEST_CASE("Adem relations hold in every catalog ring")
{
    auto check = [](const AlgebraPresentation& R, const SqRuleSet& rules, const std::string& label) {
        for (int j = 1; j <= 11; ++j)
            for (int i = 1; i < 2 * j && i + j <= 12; ++i) {
                const SteenrodElement word(SqMonomial{i, j});
                const SteenrodElement rel = adem_expand(i, j);
                for (int d = 0; d <= std::min(10, R.top_degree()); ++d)
                    for (const auto& x : R.basis(d))
                        REQUIRE_MESSAGE(apply_steenrod(word, ClassElement(x), R, rules) ==
                                            apply_steenrod(rel, ClassElement(x), R, rules),
                                        label << " Sq^" << i << " Sq^" << j);
            }
    };
    for (const auto& m : catalog())
        check(m.ring, m.rules, m.label);
    const auto p = poly_ring(3, 24);
    check(p.ring, p.rules, "F2[t1,t2,t3]");
}

TEST_CASE("binomial action law on powers of a degree-one class")
{
    const auto p = poly_ring(1, 40);
    const auto table = oracle::pascal_mod2(16);
    for (int m = 0; m <= 16; ++m)
        for (int i = 0; i <= 16; ++i) {
            const ClassElement x(mono({m}));
            ClassElement expected;
            if (i <= m && table[m][i])
                expected.toggle(mono({m + i}));
            REQUIRE(sq(i, x, p.ring, p.rules) == expected);
            REQUIRE((i <= m && table[m][i] == 1) == (binom_mod_p(m, i, 2) == 1));
        }
}

TEST_CASE("presentations")
{
    const AlgebraPresentation R({{"a", 1, 3}, {"b", 2, 2}}, 4);
    CHECK(R.top_monomial() == mono({2, 1}));
    CHECK(R.top_degree() == 4);
    CHECK(R.betti_numbers() == std::vector<long long>{1, 1, 2, 1, 1});
    CHECK(R.basis(2) == std::vector<Monomial>{mono({2, 0}), mono({0, 1})});
    CHECK_THROWS_AS(AlgebraPresentation({{"a", 0, 3}}, 0), InvalidArgument);

    const auto T = tensor(AlgebraPresentation({{"a", 1, 3}}, 2), AlgebraPresentation({{"a", 1, 3}}, 2));
    CHECK(T.generators()[1].name == "a_2");
    CHECK(T.total_dimension() == 4);
    CHECK(to_string(cls({{2, 1}, {0, 1}}), T) == "a_2 + a^2 a_2");

    CHECK_THROWS_AS(degree_of(cls({{1, 0}, {2, 0}}), T), InvalidArgument);
    CHECK(degree_of(ClassElement{}, T) == std::nullopt);
    CHECK(graded_parts(cls({{1, 0}, {2, 0}}), T).at(2) == cls({{2, 0}}));
}

TEST_CASE("rule sets are validated")
{
    const AlgebraPresentation R({{"a", 1, 3}}, 2);
    CHECK_THROWS_AS(SqRuleSet(R, {{ClassElement(mono({1})), ClassElement{}}}), InvalidArgument);
    CHECK_THROWS_AS(SqRuleSet(R, {{ClassElement{}, ClassElement(mono({2}))}}), InvalidArgument);
    CHECK_NOTHROW(SqRuleSet(R, {{ClassElement(mono({1})), ClassElement(mono({2}))}}));
}
