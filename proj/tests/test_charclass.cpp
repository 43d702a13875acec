#include "oracles.hpp"

#include "steencob/charclass.hpp"
#include "steencob/error.hpp"
#include "steencob/manifolds.hpp"

#include <doctest.h>

using namespace steencob;

namespace {

const ConnectedModel& only(const ManifoldModel& m)
{
    return m.components().front();
}

ClassElement cls(std::initializer_list<std::vector<int>> monos)
{
    ClassElement x;
    for (const auto& m : monos)
        x.toggle(Monomial{m});
    return x;
}

Partition P(std::vector<int> parts)
{
    return make_partition(std::move(parts));
}

std::vector<ManifoldModel> catalog_up_to_8()
{
    std::vector<ManifoldModel> out;
    for (int n = 1; n <= 8; ++n)
        out.push_back(rp(n));
    for (int n = 1; n <= 4; ++n)
        out.push_back(cp(n));
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; 2 * n + m <= 8; ++n)
            if (m + 2 * n >= 1)
                out.push_back(dold(m, n));
    for (int n = 1; n <= 8; ++n)
        out.push_back(sphere(n));
    out.push_back(product(rp(2), rp(2)));
    out.push_back(product(rp(1), rp(1)));
    out.push_back(product(cp(2), rp(2)));
    out.push_back(product(dold(1, 2), rp(3)));
    return out;
}

}  // namespace

TEST_CASE("Wu classes")
{
    CHECK(wu_classes(only(rp(2))).sum() == cls({{0}, {1}}));
    CHECK(wu_classes(only(sphere(6))).sum() == cls({{0}}));
    CHECK(wu_classes(only(cp(2))).sum() == cls({{0}, {1}}));
    CHECK(wu_classes(only(rp(4))).sum() == cls({{0}, {1}, {2}}));
}

TEST_CASE("total Stiefel-Whitney classes")
{
    CHECK(sw_total(only(rp(2))).sum() == cls({{0}, {1}, {2}}));
    CHECK(sw_total(only(cp(2))).sum() == cls({{0}, {1}, {2}}));
    CHECK(sw_total(only(sphere(5))).sum() == cls({{0}}));
    CHECK(sw_total(only(rp(3))).sum() == cls({{0}}));
}

TEST_CASE("projective total class equals (1 + a)^{n+1}")
{
    for (int n = 0; n <= 10; ++n) {
        const auto expected = oracle::one_plus_a_power(n + 1, n);
        ClassElement e;
        for (int d = 0; d <= n; ++d)
            if (expected[d])
                e.toggle(Monomial{{d}});
        if (n == 0)
            e = ClassElement(Monomial{});
        REQUIRE_MESSAGE(sw_total(only(rp(n))).sum() == e, "RP(" << n << ")");
    }
}

TEST_CASE("Wu classes vanish above half the dimension and square to w")
{
    for (const auto& M : catalog_up_to_8())
        for (const auto& c : M.components()) {
            const auto v = wu_classes(c);
            for (int k = c.dimension() / 2 + 1; k <= c.dimension(); ++k)
                REQUIRE(v.part(k).is_zero());
            REQUIRE(total_sq(v.sum(), c.ring, c.rules) == sw_total(c).sum());
        }
}

TEST_CASE("Stiefel-Whitney numbers")
{
    CHECK(sw_number(rp(2), P({1, 1})));
    CHECK_FALSE(sw_number(rp(3), P({3})));
    CHECK(sw_number(product(rp(2), rp(2)), P({2, 2})));
    CHECK_THROWS_AS(sw_number(rp(2), P({3})), InvalidArgument);

    auto vec = [](int n, std::vector<std::pair<std::vector<int>, bool>> vals) {
        SWVector v(n);
        for (auto& [p, b] : vals)
            v.set(P(p), b);
        return v;
    };
    CHECK(all_sw_numbers(rp(2)) == vec(2, {{{2}, true}, {{1, 1}, true}}));
    CHECK(all_sw_numbers(rp(4)) ==
          vec(4, {{{4}, true}, {{3, 1}, false}, {{2, 2}, false}, {{2, 1, 1}, false}, {{1, 1, 1, 1}, true}}));
    CHECK(all_sw_numbers(product(rp(2), rp(2))) ==
          vec(4, {{{4}, true}, {{3, 1}, false}, {{2, 2}, true}, {{2, 1, 1}, false}, {{1, 1, 1, 1}, false}}));
    CHECK(to_string(all_sw_numbers(rp(2))) == "w2 = 1\nw1 w1 = 1");

    const SWVector v(4);
    REQUIRE(v.entries().size() == 5);
    CHECK(v.entries()[0].first == P({4}));
    CHECK(v.entries()[4].first == P({1, 1, 1, 1}));
}

TEST_CASE("Euler parity")
{
    CHECK(euler_parity_check(rp(2)));
    CHECK(euler_parity_check(sphere(2)));
    CHECK(euler_parity_check(cp(2)));
    for (const auto& M : catalog_up_to_8())
        REQUIRE_MESSAGE(euler_parity_check(M), M.label());
}

TEST_CASE("Wu formula")
{
    CHECK(wu_formula_check(rp(4), 1, 1));
    const auto [lhs, rhs] = wu_formula_sides(only(rp(4)), 1, 1);
    CHECK(lhs == cls({{2}}));
    CHECK(rhs == cls({{2}}));
    CHECK(wu_formula_check(product(rp(2), rp(2)), 1, 2));
    for (const auto& M : catalog_up_to_8())
        for (int i = 0; i <= M.dimension(); ++i)
            for (int j = 0; i + j <= M.dimension(); ++j)
                REQUIRE_MESSAGE(wu_formula_check(M, i, j), M.label() << " i=" << i << " j=" << j);
}

TEST_CASE("boundaries have vanishing numbers")
{
    for (int n = 1; n <= 8; ++n)
        CHECK(all_sw_numbers(sphere(n)).is_zero());
    for (int n = 1; n <= 9; n += 2)
        CHECK(all_sw_numbers(rp(n)).is_zero());
    CHECK(all_sw_numbers(product(rp(1), rp(1))).is_zero());
}

TEST_CASE("Whitney products")
{
    const auto p = only(product(rp(2), rp(2)));
    const auto wa = embedded(sw_total(only(rp(2))), 0, 2);
    const auto wb = embedded(sw_total(only(rp(2))), 1, 2);
    const TotalClass one({ClassElement(Monomial{{0, 0}})});
    CHECK(whitney_sum_check(one, wb, p.ring, 4).sum() == wb.sum());
    const auto w = whitney_sum_check(wa, wb, p.ring, 4);
    CHECK(w.sum() == cls({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}, {2, 2}}));
    CHECK(w == sw_total(p));
}
