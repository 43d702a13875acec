#pragma once

// Graded-commutative F2 algebras of the form
//   F2[g_1, ..., g_r] / (g_1^{e_1}, ..., g_r^{e_r})
// with a Steenrod action fixed by the total square of each generator and
// extended to all classes through the Cartan formula.

#include "steencob/steenrod.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace steencob {

struct Generator {
    std::string name;
    int degree = 1;
    int trunc = 2;  // g^trunc = 0

    bool operator==(const Generator&) const = default;
};

// Exponent vector aligned with the generators of a presentation.
struct Monomial {
    std::vector<int> exponents;

    bool operator==(const Monomial&) const = default;
    // Descending lexicographic, so that a^2 sorts before a b.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        return std::lexicographical_compare_three_way(b.exponents.begin(), b.exponents.end(),
                                                      a.exponents.begin(), a.exponents.end());
    }
};

class AlgebraPresentation {
  public:
    AlgebraPresentation() = default;  // the point: F2 in degree 0
    AlgebraPresentation(std::vector<Generator> generators, int total_dimension);

    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    int total_dimension() const noexcept { return dimension_; }

    int degree(const Monomial& m) const;
    // True when m has the right length and every exponent is below its
    // truncation, i.e. m is a nonzero basis element.
    bool contains(const Monomial& m) const noexcept;

    Monomial unit() const { return Monomial{std::vector<int>(size(), 0)}; }
    Monomial generator(std::size_t g) const;
    // Product of g_i^{e_i - 1}: spans the top nonzero degree.
    Monomial top_monomial() const;
    int top_degree() const;

    // Monomial basis of H^k in canonical order.
    std::vector<Monomial> basis(int k) const;
    // dim H^k for 0 <= k <= top_degree().
    std::vector<long long> betti_numbers() const;

    bool operator==(const AlgebraPresentation&) const = default;

  private:
    std::vector<Generator> generators_;
    int dimension_ = 0;
};

// Tensor product; generator lists are concatenated and clashing names on
// the right get a numeric suffix (a, a_2, a_3, ...).
AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b);

class ClassElement {
  public:
    ClassElement() = default;
    explicit ClassElement(Monomial m) { terms_.insert(std::move(m)); }

    const std::set<Monomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

    void toggle(const Monomial& m);
    ClassElement& operator+=(const ClassElement& rhs);
    friend ClassElement operator+(ClassElement a, const ClassElement& b) { return a += b; }

    // Re-indexes into a tensor product with `total` generators, this
    // element's generators starting at `offset`.
    ClassElement embedded(std::size_t offset, std::size_t total) const;

    bool operator==(const ClassElement&) const = default;

  private:
    std::set<Monomial> terms_;
};

// Degree of a homogeneous element; nullopt for zero. Throws InvalidArgument
// for mixed degrees or monomials foreign to the ring.
std::optional<int> degree_of(const ClassElement& x, const AlgebraPresentation& ring);

// Splits x into homogeneous pieces, indexed by degree.
std::vector<ClassElement> graded_parts(const ClassElement& x, const AlgebraPresentation& ring);

class SqRuleSet {
  public:
    SqRuleSet() = default;
    // squares[g][i] = Sq^i(g_g) for 0 <= i <= deg(g_g). Validated against
    // the ring: Sq^0 g = g, Sq^{deg g} g = g^2, each piece homogeneous of
    // degree deg(g) + i.
    SqRuleSet(const AlgebraPresentation& ring, std::vector<std::vector<ClassElement>> squares);

    std::size_t size() const noexcept { return squares_.size(); }
    // Sq^i of generator g; zero for i > deg(g).
    const ClassElement& square(std::size_t g, int i) const;
    const std::vector<std::vector<ClassElement>>& squares() const noexcept { return squares_; }

    bool operator==(const SqRuleSet&) const = default;

  private:
    std::vector<std::vector<ClassElement>> squares_;
};

SqRuleSet tensor(const SqRuleSet& a, const AlgebraPresentation& ring_a, const SqRuleSet& b,
                 const AlgebraPresentation& ring_b);

ClassElement cup(const ClassElement& a, const ClassElement& b, const AlgebraPresentation& ring);

// Sq^i(x) for homogeneous x (zero allowed).
ClassElement sq(int i, const ClassElement& x, const AlgebraPresentation& ring, const SqRuleSet& rules);

// sum_i Sq^i(x); x need not be homogeneous.
ClassElement total_sq(const ClassElement& x, const AlgebraPresentation& ring, const SqRuleSet& rules);

// Each word acts right to left; the results are summed over terms.
ClassElement apply_steenrod(const SteenrodElement& e, const ClassElement& x, const AlgebraPresentation& ring,
                            const SqRuleSet& rules);

// Coefficient of the top monomial of a degree-n element, n = total_dimension.
bool pairing(const ClassElement& x, const AlgebraPresentation& ring);

// Full rank of H^k x H^{n-k} -> F2 for every 0 <= k <= n.
bool poincare_nondegenerate(const AlgebraPresentation& ring);

std::string to_string(const Monomial& m, const AlgebraPresentation& ring);
std::string to_string(const ClassElement& x, const AlgebraPresentation& ring);

}  // namespace steencob
