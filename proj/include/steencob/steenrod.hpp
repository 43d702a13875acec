#pragma once

// The mod-2 Steenrod algebra presented as a rewriting system on Sq-words.
//
// Words Sq^{i_1} ... Sq^{i_k} are composed left to right (the rightmost
// factor acts first). Adem relations rewrite every inadmissible adjacent pair
// (i < 2j) until only admissible words (i_j >= 2 i_{j+1}) remain; those form
// the Serre-Cartan basis, so the reduced form is a normal form.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace steencob {

class SqMonomial {
  public:
    SqMonomial() = default;  // the unit Sq^0 = 1

    // Zero exponents are Sq^0 = 1 factors and are dropped; negative
    // exponents throw InvalidArgument.
    explicit SqMonomial(std::vector<int> exponents);
    SqMonomial(std::initializer_list<int> exponents) : SqMonomial(std::vector<int>(exponents)) {}

    const std::vector<int>& exponents() const noexcept { return exponents_; }
    std::size_t length() const noexcept { return exponents_.size(); }
    bool is_unit() const noexcept { return exponents_.empty(); }
    int degree() const noexcept { return degree_; }
    bool admissible() const noexcept;

    // Excess i_1 - i_2 - ... - i_k; zero for the unit.
    int excess() const noexcept;

    // Concatenation: (*this) composed with rhs, rhs acting first.
    SqMonomial then(const SqMonomial& rhs) const;

    bool operator==(const SqMonomial&) const = default;

    // Canonical order: higher degree first, then exponent sequences in
    // descending lexicographic order. Sets of monomials iterate in this order.
    friend std::strong_ordering operator<=>(const SqMonomial& a, const SqMonomial& b);

  private:
    std::vector<int> exponents_;
    int degree_ = 0;
};

// A finite F2-linear combination of Sq-words.
class SteenrodElement {
  public:
    SteenrodElement() = default;  // zero
    explicit SteenrodElement(SqMonomial m) { terms_.insert(std::move(m)); }
    SteenrodElement(std::initializer_list<SqMonomial> terms);

    static SteenrodElement unit() { return SteenrodElement(SqMonomial{}); }
    static SteenrodElement sq(int i);

    const std::set<SqMonomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_normal() const noexcept;

    // Adds one copy of m; over F2 a second copy cancels the first.
    void toggle(const SqMonomial& m);

    SteenrodElement& operator+=(const SteenrodElement& rhs);
    friend SteenrodElement operator+(SteenrodElement a, const SteenrodElement& b) { return a += b; }

    bool operator==(const SteenrodElement&) const = default;

  private:
    std::set<SqMonomial> terms_;
};

// A finite F2-linear combination of pairs a (x) b.
class TensorElement {
  public:
    using Pair = std::pair<SqMonomial, SqMonomial>;

    const std::set<Pair>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void toggle(const Pair& p);

    TensorElement& operator+=(const TensorElement& rhs);
    bool operator==(const TensorElement&) const = default;

  private:
    std::set<Pair> terms_;
};

// Which inadmissible adjacent pair a reduction step rewrites.
enum class Strategy { leftmost, rightmost };

// Right-hand side of the Adem relation for Sq^i Sq^j with 1 <= i < 2j:
//   sum over 0 <= k <= i/2 with C(j-k-1, i-2k) odd of Sq^{i+j-k} Sq^k.
// Throws PreconditionError outside that range.
SteenrodElement adem_expand(int i, int j);

// Normal form in the admissible basis.
SteenrodElement adem_reduce(const SteenrodElement& e, Strategy strategy = Strategy::leftmost);
SteenrodElement adem_reduce(const SqMonomial& m, Strategy strategy = Strategy::leftmost);

// Number of rewriting steps taken by the last adem_reduce call on this thread.
std::uint64_t last_reduction_steps() noexcept;

// Position-weighted measure sum_j j * i_j (1-based). Every Adem step on a
// word strictly lowers it for each word it produces.
std::int64_t rewrite_measure(const SqMonomial& m) noexcept;

SteenrodElement multiply(const SteenrodElement& a, const SteenrodElement& b);

// psi(Sq^k) = sum_{i+j=k} Sq^i (x) Sq^j, extended multiplicatively and with
// both tensor factors reduced.
TensorElement coproduct(const SteenrodElement& e);

// (a (x) b)(c (x) d) = ac (x) bd, normalized.
TensorElement multiply(const TensorElement& a, const TensorElement& b);

// (psi (x) id) and (id (x) psi) applied to a tensor, returned as triples.
using TripleTerm = std::tuple<SqMonomial, SqMonomial, SqMonomial>;
std::set<TripleTerm> coproduct_left(const TensorElement& t);
std::set<TripleTerm> coproduct_right(const TensorElement& t);

// (epsilon (x) id): keeps the right factor of pairs whose left factor is 1.
SteenrodElement counit_left(const TensorElement& t);

// All admissible monomials of degree n in canonical order.
std::vector<SqMonomial> admissible_basis(int n);

struct GeneralAdemTerm {
    std::int64_t coefficient;  // in 1 .. p-1
    int first;                 // i + j - k
    int second;                // k; 0 means the single factor P^{i+j}
    bool operator==(const GeneralAdemTerm&) const = default;
};

// Right-hand side of P^i P^j for 1 <= i < q j, q = p^m:
//   sum_{0 <= k <= i/q} (-1)^{i-qk} C((q-1)(j-k)-1, i-qk) P^{i+j-k} P^k
// with coefficients reduced mod p; zero terms are omitted, k ascending.
std::vector<GeneralAdemTerm> adem_expand_general(int i, int j, int q);

std::string to_string(const SqMonomial& m);
std::string to_string(const SteenrodElement& e);
std::string to_string(const TensorElement& t);

}  // namespace steencob
