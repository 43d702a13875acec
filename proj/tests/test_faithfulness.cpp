#include "steencob/cohomology.hpp"
#include "steencob/f2_matrix.hpp"
#include "steencob/steenrod.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace steencob;

namespace {

// F2[t1, t2, t3] with each variable truncated far above every degree reached.
struct Ring3 {
    AlgebraPresentation ring;
    SqRuleSet rules;
    std::vector<Monomial> sources;  // exponents descending, degree 1..20
};

const Ring3& ring3()
{
    static const Ring3 r = [] {
        const int trunc = 64;
        AlgebraPresentation ring({{"t1", 1, trunc}, {"t2", 1, trunc}, {"t3", 1, trunc}}, 3 * (trunc - 1));
        std::vector<std::vector<ClassElement>> squares;
        for (std::size_t g = 0; g < 3; ++g) {
            Monomial t2 = ring.generator(g);
            t2.exponents[g] = 2;
            squares.push_back({ClassElement(ring.generator(g)), ClassElement(t2)});
        }
        SqRuleSet rules(ring, squares);
        // the action commutes with permuting variables, so sorted exponent
        // vectors represent every source up to symmetry
        std::vector<Monomial> sources;
        for (int d = 1; d <= 20; ++d)
            for (const auto& m : ring.basis(d))
                if (m.exponents[0] >= m.exponents[1] && m.exponents[1] >= m.exponents[2])
                    sources.push_back(m);
        return Ring3{ring, rules, sources};
    }();
    return r;
}

// Images of e on every source, as a set of (source index, monomial).
std::set<std::pair<std::size_t, Monomial>> action(const SteenrodElement& e)
{
    const auto& R = ring3();
    std::set<std::pair<std::size_t, Monomial>> out;
    for (std::size_t s = 0; s < R.sources.size(); ++s) {
        const ClassElement image = apply_steenrod(e, ClassElement(R.sources[s]), R.ring, R.rules);
        for (const auto& m : image.terms())
            out.insert({s, m});
    }
    return out;
}

}  // namespace

TEST_CASE("the admissible basis acts independently in every degree up to 20")
{
    for (int d = 1; d <= 20; ++d) {
        const auto basis = admissible_basis(d);
        std::vector<std::set<std::pair<std::size_t, Monomial>>> rows;
        std::map<std::pair<std::size_t, Monomial>, std::size_t> column;
        for (const auto& b : basis) {
            rows.push_back(action(SteenrodElement(b)));
            for (const auto& key : rows.back())
                column.emplace(key, column.size());
        }
        F2Matrix M(rows.size(), column.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& key : rows[r])
                M.set(r, column.at(key), true);
        REQUIRE_MESSAGE(M.rank() == basis.size(), "degree " << d);
    }
}

TEST_CASE("equal normal forms iff equal actions, random pairs")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> deg(1, 20), len(1, 4);
    auto random_word = [&](int d) {
        std::vector<int> w;
        const int l = len(rng);
        for (int f = 0; f < l && d > 0; ++f) {
            const int piece = f + 1 == l ? d : std::uniform_int_distribution<int>(1, d)(rng);
            w.push_back(piece);
            d -= piece;
        }
        return SqMonomial(w);
    };
    for (int trial = 0; trial < 60; ++trial) {
        const int d = deg(rng);
        SteenrodElement a, b;
        for (int t = 0; t < 2; ++t) {
            a.toggle(random_word(d));
            b.toggle(random_word(d));
        }
        if (trial % 3 == 0)
            b = adem_reduce(a) + SteenrodElement(random_word(d)) + SteenrodElement(random_word(d));
        if (trial % 3 == 1)
            b = adem_reduce(a);
        const bool same_form = adem_reduce(a) == adem_reduce(b);
        const bool same_action = action(a) == action(b);
        REQUIRE(same_form == same_action);
    }
}
