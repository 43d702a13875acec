#include "steencob/steenrod.hpp"

#include "steencob/binomial.hpp"
#include "steencob/error.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace steencob {

namespace {

// Far above anything needed for words of degree <= 64; reaching it means the
// rewriting loop is not terminating.
constexpr std::uint64_t kReductionFuel = 200'000'000;

thread_local std::uint64_t t_last_steps = 0;

template <class Set, class T>
void toggle_in(Set& s, const T& x)
{
    auto [it, inserted] = s.insert(x);
    if (!inserted)
        s.erase(it);
}

}  // namespace

SqMonomial::SqMonomial(std::vector<int> exponents)
{
    exponents_.reserve(exponents.size());
    for (int e : exponents) {
        if (e < 0)
            throw InvalidArgument("Sq exponent must be nonnegative, got " + std::to_string(e));
        if (e > 0) {
            exponents_.push_back(e);
            degree_ += e;
        }
    }
}

bool SqMonomial::admissible() const noexcept
{
    for (std::size_t p = 0; p + 1 < exponents_.size(); ++p)
        if (exponents_[p] < 2 * exponents_[p + 1])
            return false;
    return true;
}

int SqMonomial::excess() const noexcept
{
    if (exponents_.empty())
        return 0;
    return 2 * exponents_.front() - degree_;
}

SqMonomial SqMonomial::then(const SqMonomial& rhs) const
{
    std::vector<int> e = exponents_;
    e.insert(e.end(), rhs.exponents_.begin(), rhs.exponents_.end());
    return SqMonomial(std::move(e));
}

std::strong_ordering operator<=>(const SqMonomial& a, const SqMonomial& b)
{
    if (a.degree_ != b.degree_)
        return b.degree_ <=> a.degree_;
    return std::lexicographical_compare_three_way(b.exponents_.begin(), b.exponents_.end(),
                                                  a.exponents_.begin(), a.exponents_.end());
}

SteenrodElement::SteenrodElement(std::initializer_list<SqMonomial> terms)
{
    for (const auto& m : terms)
        toggle(m);
}

SteenrodElement SteenrodElement::sq(int i)
{
    return SteenrodElement(SqMonomial{i});
}

bool SteenrodElement::is_normal() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [](const SqMonomial& m) { return m.admissible(); });
}

void SteenrodElement::toggle(const SqMonomial& m)
{
    toggle_in(terms_, m);
}

SteenrodElement& SteenrodElement::operator+=(const SteenrodElement& rhs)
{
    for (const auto& m : rhs.terms_)
        toggle(m);
    return *this;
}

void TensorElement::toggle(const Pair& p)
{
    toggle_in(terms_, p);
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs)
{
    for (const auto& p : rhs.terms_)
        toggle(p);
    return *this;
}

SteenrodElement adem_expand(int i, int j)
{
    if (i < 1 || j < 1)
        throw PreconditionError("adem_expand: exponents must be positive");
    if (i >= 2 * j)
        throw PreconditionError("adem_expand: Sq^" + std::to_string(i) + " Sq^" + std::to_string(j) +
                                " is already admissible, no relation applies");
    SteenrodElement result;
    for (int k = 0; 2 * k <= i; ++k)
        if (binom_odd(j - k - 1, i - 2 * k))
            result.toggle(SqMonomial{i + j - k, k});
    return result;
}

std::int64_t rewrite_measure(const SqMonomial& m) noexcept
{
    std::int64_t total = 0;
    const auto& e = m.exponents();
    for (std::size_t p = 0; p < e.size(); ++p)
        total += static_cast<std::int64_t>(p + 1) * e[p];
    return total;
}

namespace {

std::optional<std::size_t> pick_pair(const std::vector<int>& e, Strategy strategy)
{
    if (e.size() < 2)
        return std::nullopt;
    if (strategy == Strategy::leftmost) {
        for (std::size_t p = 0; p + 1 < e.size(); ++p)
            if (e[p] < 2 * e[p + 1])
                return p;
    }
    else {
        for (std::size_t p = e.size() - 1; p-- > 0;)
            if (e[p] < 2 * e[p + 1])
                return p;
    }
    return std::nullopt;
}

}  // namespace

SteenrodElement adem_reduce(const SteenrodElement& e, Strategy strategy)
{
    SteenrodElement result;
    std::set<SqMonomial> pending;
    for (const auto& m : e.terms()) {
        if (m.admissible())
            result.toggle(m);
        else
            toggle_in(pending, m);
    }
    std::uint64_t steps = 0;
    while (!pending.empty()) {
        const SqMonomial word = *pending.begin();
        pending.erase(pending.begin());
        if (++steps > kReductionFuel)
            throw InvariantViolation("adem_reduce: fuel exhausted on " + to_string(word));
        const auto& ex = word.exponents();
        const std::size_t p = *pick_pair(ex, strategy);
        const SteenrodElement rhs = adem_expand(ex[p], ex[p + 1]);
        for (const auto& r : rhs.terms()) {
            std::vector<int> next(ex.begin(), ex.begin() + static_cast<std::ptrdiff_t>(p));
            next.insert(next.end(), r.exponents().begin(), r.exponents().end());
            next.insert(next.end(), ex.begin() + static_cast<std::ptrdiff_t>(p) + 2, ex.end());
            SqMonomial w(std::move(next));
            if (w.admissible())
                result.toggle(w);
            else
                toggle_in(pending, w);
        }
    }
    t_last_steps = steps;
    return result;
}

SteenrodElement adem_reduce(const SqMonomial& m, Strategy strategy)
{
    return adem_reduce(SteenrodElement(m), strategy);
}

std::uint64_t last_reduction_steps() noexcept
{
    return t_last_steps;
}

SteenrodElement multiply(const SteenrodElement& a, const SteenrodElement& b)
{
    SteenrodElement words;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            words.toggle(x.then(y));
    return adem_reduce(words);
}

namespace {

// psi of a single word: every split i_j = l_j + r_j contributes
// (Sq^{l_1}...Sq^{l_k}) (x) (Sq^{r_1}...Sq^{r_k}).
void coproduct_word(const SqMonomial& word, std::set<TensorElement::Pair>& acc)
{
    const auto& ex = word.exponents();
    std::vector<int> left(ex.size()), right(ex.size());
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == ex.size()) {
            toggle_in(acc, TensorElement::Pair{SqMonomial(left), SqMonomial(right)});
            return;
        }
        for (int l = 0; l <= ex[pos]; ++l) {
            left[pos] = l;
            right[pos] = ex[pos] - l;
            rec(pos + 1);
        }
    };
    rec(0);
}

TensorElement normalize(const std::set<TensorElement::Pair>& raw)
{
    TensorElement out;
    for (const auto& pair : raw) {
        const SteenrodElement l = adem_reduce(pair.first);
        if (l.is_zero())
            continue;
        const SteenrodElement r = adem_reduce(pair.second);
        for (const auto& x : l.terms())
            for (const auto& y : r.terms())
                out.toggle({x, y});
    }
    return out;
}

}  // namespace

TensorElement coproduct(const SteenrodElement& e)
{
    std::set<TensorElement::Pair> raw;
    for (const auto& m : e.terms())
        coproduct_word(m, raw);
    return normalize(raw);
}

TensorElement multiply(const TensorElement& a, const TensorElement& b)
{
    std::set<TensorElement::Pair> raw;
    for (const auto& [a1, a2] : a.terms())
        for (const auto& [b1, b2] : b.terms()) {
            toggle_in(raw, TensorElement::Pair{a1.then(b1), a2.then(b2)});
        }
    return normalize(raw);
}

std::set<TripleTerm> coproduct_left(const TensorElement& t)
{
    std::set<TripleTerm> out;
    for (const auto& [x, y] : t.terms()) {
        const TensorElement px = coproduct(SteenrodElement(x));
        for (const auto& [x1, x2] : px.terms())
            toggle_in(out, TripleTerm{x1, x2, y});
    }
    return out;
}

std::set<TripleTerm> coproduct_right(const TensorElement& t)
{
    std::set<TripleTerm> out;
    for (const auto& [x, y] : t.terms()) {
        const TensorElement py = coproduct(SteenrodElement(y));
        for (const auto& [y1, y2] : py.terms())
            toggle_in(out, TripleTerm{x, y1, y2});
    }
    return out;
}

SteenrodElement counit_left(const TensorElement& t)
{
    SteenrodElement out;
    for (const auto& [x, y] : t.terms())
        if (x.is_unit())
            out.toggle(y);
    return out;
}

std::vector<SqMonomial> admissible_basis(int n)
{
    if (n < 0)
        return {};
    std::vector<SqMonomial> out;
    std::vector<int> prefix;
    // Extends prefix by admissible tails of total degree `remaining` whose
    // first exponent is at most `cap`.
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(prefix);
            return;
        }
        for (int first = std::min(cap, remaining); first >= 1; --first) {
            // the tail after `first` has degree at most first - 1 (1 + 2 + 4 + ...)
            if (remaining - first > first - 1)
                break;
            prefix.push_back(first);
            rec(remaining - first, first / 2);
            prefix.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GeneralAdemTerm> adem_expand_general(int i, int j, int q)
{
    const std::int64_t p = prime_of_prime_power(q);
    if (p == 0)
        throw InvalidArgument("adem_expand_general: q = " + std::to_string(q) + " is not a prime power");
    if (i < 1 || j < 1)
        throw PreconditionError("adem_expand_general: exponents must be positive");
    if (static_cast<std::int64_t>(i) >= static_cast<std::int64_t>(q) * j)
        throw PreconditionError("adem_expand_general: i >= q*j, no relation applies");
    std::vector<GeneralAdemTerm> out;
    for (int k = 0; static_cast<std::int64_t>(q) * k <= i; ++k) {
        const std::int64_t bottom = i - static_cast<std::int64_t>(q) * k;
        const std::int64_t top = static_cast<std::int64_t>(q - 1) * (j - k) - 1;
        std::int64_t c = binom_mod_p(top, bottom, p);
        if (bottom % 2 == 1)
            c = (p - c) % p;
        if (c != 0)
            out.push_back({c, i + j - k, k});
    }
    return out;
}

std::string to_string(const SqMonomial& m)
{
    if (m.is_unit())
        return "1";
    std::string s;
    for (int e : m.exponents()) {
        if (!s.empty())
            s += ' ';
        s += "Sq^" + std::to_string(e);
    }
    return s;
}

std::string to_string(const SteenrodElement& e)
{
    if (e.is_zero())
        return "0";
    std::string s;
    for (const auto& m : e.terms()) {
        if (!s.empty())
            s += " + ";
        s += to_string(m);
    }
    return s;
}

std::string to_string(const TensorElement& t)
{
    if (t.is_zero())
        return "0";
    std::string s;
    for (const auto& [a, b] : t.terms()) {
        if (!s.empty())
            s += " + ";
        s += to_string(a) + " (x) " + to_string(b);
    }
    return s;
}

}  // namespace steencob
