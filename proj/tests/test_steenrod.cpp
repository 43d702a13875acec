#include "oracles.hpp"

#include "steencob/binomial.hpp"
#include "steencob/error.hpp"
#include "steencob/steenrod.hpp"

#include <doctest.h>

#include <random>

using namespace steencob;

namespace {

SteenrodElement el(std::initializer_list<SqMonomial> terms)
{
    return SteenrodElement(terms);
}

// Every word of degree n with at most max_len factors.
void words_of_degree(int n, std::size_t max_len, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (cur.size() == max_len)
        return;
    for (int i = 1; i <= n; ++i) {
        cur.push_back(i);
        words_of_degree(n - i, max_len, cur, out);
        cur.pop_back();
    }
}

SteenrodElement random_element(std::mt19937& rng, int max_degree)
{
    std::uniform_int_distribution<int> nterms(0, 3), deg(0, max_degree), len(1, 4);
    SteenrodElement e;
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        int d = deg(rng);
        std::vector<int> w;
        const int l = len(rng);
        for (int f = 0; f < l && d > 0; ++f) {
            const int piece = f + 1 == l ? d : std::uniform_int_distribution<int>(1, d)(rng);
            w.push_back(piece);
            d -= piece;
        }
        e.toggle(SqMonomial(w));
    }
    return e;
}

}  // namespace

TEST_CASE("binomial coefficients mod p")
{
    CHECK(binom_mod_p(1, 1, 2) == 1);
    CHECK(binom_mod_p(2, 1, 2) == 0);
    CHECK(binom_mod_p(-1, 0, 2) == 0);
    CHECK(binom_mod_p(3, -1, 2) == 0);
    CHECK(binom_mod_p(3, 4, 2) == 0);
    CHECK_THROWS_AS(binom_mod_p(4, 2, 4), InvalidArgument);
    CHECK_THROWS_AS(binom_mod_p(4, 2, 1), InvalidArgument);

    for (int p : {2, 3, 5, 7}) {
        const auto table = oracle::pascal_mod(60, p);
        for (int n = 0; n <= 60; ++n)
            for (int k = 0; k <= n; ++k)
                REQUIRE(binom_mod_p(n, k, p) == table[n][k]);
    }
    const auto t2 = oracle::pascal_mod2(80);
    for (int n = 0; n <= 80; ++n)
        for (int k = 0; k <= n; ++k)
            REQUIRE(binom_odd(n, k) == (t2[n][k] == 1));

    CHECK(prime_of_prime_power(9) == 3);
    CHECK(prime_of_prime_power(8) == 2);
    CHECK(prime_of_prime_power(12) == 0);
    CHECK(prime_of_prime_power(1) == 0);
}

TEST_CASE("monomials")
{
    const SqMonomial m{4, 2};
    CHECK(m.degree() == 6);
    CHECK(m.admissible());
    CHECK(m.excess() == 2);
    CHECK_FALSE(SqMonomial({2, 3}).admissible());
    CHECK(SqMonomial({0, 3, 0}) == SqMonomial({3}));
    CHECK(SqMonomial({0}).is_unit());
    CHECK(SqMonomial{}.degree() == 0);
    CHECK_THROWS_AS(SqMonomial({-1}), InvalidArgument);
    CHECK(SqMonomial({2}).then(SqMonomial({3})) == SqMonomial({2, 3}));
}

TEST_CASE("adem_expand")
{
    CHECK(adem_expand(1, 1).is_zero());
    CHECK(adem_expand(1, 2) == el({{3}}));
    CHECK(adem_expand(2, 2) == el({{3, 1}}));
    CHECK(adem_expand(2, 3) == el({{5}, {4, 1}}));
    CHECK(adem_expand(3, 2).is_zero());
    CHECK_THROWS_AS(adem_expand(4, 2), PreconditionError);
    CHECK_THROWS_AS(adem_expand(0, 2), PreconditionError);

    for (int j = 1; j <= 15; ++j)
        for (int i = 1; i < 2 * j; ++i) {
            const auto rel = adem_expand(i, j);
            for (const auto& m : rel.terms()) {
                CHECK(m.degree() == i + j);
                CHECK(m.admissible());
            }
        }
}

TEST_CASE("adem_reduce")
{
    CHECK(adem_reduce(SqMonomial{2, 3}) == el({{5}, {4, 1}}));
    CHECK(adem_reduce(SqMonomial{1, 1, 1}).is_zero());
    CHECK(adem_reduce(SqMonomial{4, 2}) == el({{4, 2}}));
    CHECK(adem_reduce(SteenrodElement::unit()) == SteenrodElement::unit());
    CHECK(adem_reduce(SteenrodElement{}).is_zero());

    SUBCASE("idempotent on normal elements")
    {
        for (int n = 0; n <= 16; ++n)
            for (const auto& m : admissible_basis(n))
                REQUIRE(adem_reduce(m) == SteenrodElement(m));
    }
    SUBCASE("homogeneous inputs give homogeneous normal outputs")
    {
        std::vector<int> cur;
        std::vector<std::vector<int>> words;
        words_of_degree(12, 4, cur, words);
        for (const auto& w : words) {
            const auto r = adem_reduce(SqMonomial(w));
            REQUIRE(r.is_normal());
            for (const auto& m : r.terms())
                REQUIRE(m.degree() == 12);
        }
    }
}

TEST_CASE("admissible reduction agrees with a direct polynomial action")
{
    // The oracle applies each Sq^i through the binomial formula on monomials
    // of F2[t1, t2, t3], independently of the library's Cartan machinery.
    std::vector<oracle::PolyN> sources;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c)
                sources.push_back({{a, b, c}});
    for (int j = 1; j <= 8; ++j)
        for (int i = 1; i < 2 * j; ++i) {
            const auto reduced = adem_reduce(SqMonomial{i, j});
            for (const auto& x : sources) {
                oracle::PolyN rhs;
                for (const auto& m : reduced.terms())
                    for (const auto& y : oracle::word_on_poly(m.exponents(), x))
                        if (!rhs.erase(y))
                            rhs.insert(y);
                REQUIRE(oracle::word_on_poly({i, j}, x) == rhs);
            }
        }
}

TEST_CASE("termination measure decreases")
{
    for (int j = 1; j <= 12; ++j)
        for (int i = 1; i < 2 * j; ++i)
            for (const std::vector<int>& ctx : std::vector<std::vector<int>>{{}, {1}, {5, 2}}) {
                const auto rel = adem_expand(i, j);
                for (const auto& m : rel.terms()) {
                    std::vector<int> before = ctx, after = ctx;
                    before.push_back(i);
                    before.push_back(j);
                    after.insert(after.end(), m.exponents().begin(), m.exponents().end());
                    REQUIRE(rewrite_measure(SqMonomial(after)) < rewrite_measure(SqMonomial(before)));
                }
            }
}

TEST_CASE("all words of degree up to 40 with few factors reduce within fuel")
{
    for (int n : {24, 32, 40}) {
        std::vector<int> cur;
        std::vector<std::vector<int>> words;
        words_of_degree(n, 3, cur, words);
        for (const auto& w : words)
            REQUIRE(adem_reduce(SqMonomial(w)).is_normal());
    }
    adem_reduce(SqMonomial{1, 2, 4, 8});
    CHECK(last_reduction_steps() > 0);
}

TEST_CASE("multiply")
{
    CHECK(multiply(SteenrodElement::sq(1), SteenrodElement::sq(1)).is_zero());
    CHECK(multiply(SteenrodElement::unit(), SteenrodElement::sq(5)) == SteenrodElement::sq(5));
    CHECK(multiply(SteenrodElement::sq(2), SteenrodElement::sq(2)) == el({{3, 1}}));
    // Sq^{2^k} Sq^{2^k} against the relation itself
    for (int k = 0; k <= 4; ++k) {
        const int s = 1 << k;
        CHECK(multiply(SteenrodElement::sq(s), SteenrodElement::sq(s)) == adem_expand(s, s));
    }
    CHECK(multiply(SteenrodElement::sq(4), SteenrodElement::sq(4)) == el({{7, 1}, {6, 2}}));
}

TEST_CASE("coproduct")
{
    TensorElement psi1;
    psi1.toggle({SqMonomial{1}, SqMonomial{}});
    psi1.toggle({SqMonomial{}, SqMonomial{1}});
    CHECK(coproduct(SteenrodElement::sq(1)) == psi1);

    TensorElement psi_unit;
    psi_unit.toggle({SqMonomial{}, SqMonomial{}});
    CHECK(coproduct(SteenrodElement::unit()) == psi_unit);

    TensorElement psi2;
    psi2.toggle({SqMonomial{2}, SqMonomial{}});
    psi2.toggle({SqMonomial{1}, SqMonomial{1}});
    psi2.toggle({SqMonomial{}, SqMonomial{2}});
    CHECK(coproduct(SteenrodElement::sq(2)) == psi2);

    CHECK(to_string(psi1) == "Sq^1 (x) 1 + 1 (x) Sq^1");
}

TEST_CASE("bialgebra laws on random elements of degree <= 12")
{
    std::mt19937 rng(20261014);
    for (int trial = 0; trial < 150; ++trial) {
        const auto a = random_element(rng, 6);
        const auto b = random_element(rng, 6);
        const auto c = random_element(rng, 6);
        REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        const auto ab = multiply(a, b);
        REQUIRE(coproduct(ab) == multiply(coproduct(a), coproduct(b)));
        const auto pa = coproduct(a);
        REQUIRE(coproduct_left(pa) == coproduct_right(pa));
        REQUIRE(counit_left(pa) == adem_reduce(a));
        REQUIRE(multiply(a + b, c) == multiply(a, c) + multiply(b, c));
    }
}

TEST_CASE("admissible basis")
{
    CHECK(admissible_basis(0) == std::vector<SqMonomial>{SqMonomial{}});
    CHECK(admissible_basis(3) == std::vector<SqMonomial>{{3}, {2, 1}});
    CHECK(admissible_basis(6) == std::vector<SqMonomial>{{6}, {5, 1}, {4, 2}});
    // sizes: number of partitions of n into parts 2^k - 1
    auto count = [](int n) {
        std::vector<long long> ways(n + 1, 0);
        ways[0] = 1;
        for (int part = 1; part <= n; part = 2 * part + 1)
            for (int s = part; s <= n; ++s)
                ways[s] += ways[s - part];
        return ways[n];
    };
    for (int n = 0; n <= 30; ++n)
        REQUIRE(static_cast<long long>(admissible_basis(n).size()) == count(n));
}

TEST_CASE("general Adem expansion")
{
    using T = GeneralAdemTerm;
    CHECK(adem_expand_general(2, 2, 2) == std::vector<T>{{1, 3, 1}});
    CHECK(adem_expand_general(1, 1, 3) == std::vector<T>{{2, 2, 0}});
    CHECK(adem_expand_general(1, 2, 2) == std::vector<T>{{1, 3, 0}});
    CHECK_THROWS_AS(adem_expand_general(6, 2, 3), PreconditionError);
    CHECK_THROWS_AS(adem_expand_general(1, 1, 6), InvalidArgument);

    for (int j = 1; j <= 12; ++j)
        for (int i = 1; i < 2 * j; ++i) {
            SteenrodElement from_general;
            for (const auto& t : adem_expand_general(i, j, 2)) {
                CHECK(t.coefficient == 1);
                from_general.toggle(SqMonomial{t.first, t.second});
            }
            REQUIRE(from_general == adem_expand(i, j));
        }
}

TEST_CASE("printing")
{
    CHECK(to_string(el({{5}, {4, 1}})) == "Sq^5 + Sq^4 Sq^1");
    CHECK(to_string(SteenrodElement::unit()) == "1");
    CHECK(to_string(SteenrodElement{}) == "0");
}
