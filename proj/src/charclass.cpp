#include "steencob/charclass.hpp"

#include "steencob/binomial.hpp"
#include "steencob/error.hpp"
#include "steencob/f2_matrix.hpp"

#include <algorithm>

namespace steencob {

const ClassElement& TotalClass::part(std::size_t k) const
{
    static const ClassElement zero;
    return k < parts_.size() ? parts_[k] : zero;
}

ClassElement TotalClass::sum() const
{
    ClassElement out;
    for (const auto& p : parts_)
        out += p;
    return out;
}

SWVector::SWVector(int dimension) : dimension_(dimension)
{
    for (auto& p : partitions(dimension))
        entries_.emplace_back(std::move(p), false);
}

namespace {

template <class Entries>
auto find_entry(Entries& entries, const Partition& p)
{
    auto it = std::lower_bound(entries.begin(), entries.end(), p,
                               [](const auto& e, const Partition& key) { return e.first < key; });
    if (it == entries.end() || it->first != p)
        throw InvalidArgument("partition " + to_string(p) + " is not a partition of the dimension");
    return it;
}

}  // namespace

bool SWVector::value(const Partition& p) const
{
    return find_entry(entries_, p)->second;
}

void SWVector::set(const Partition& p, bool v)
{
    find_entry(entries_, p)->second = v;
}

bool SWVector::is_zero() const noexcept
{
    return std::none_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second; });
}

SWVector& SWVector::operator+=(const SWVector& rhs)
{
    if (rhs.dimension_ != dimension_)
        throw InvalidArgument("adding SW vectors of different dimensions");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i].second = entries_[i].second != rhs.entries_[i].second;
    return *this;
}

TotalClass wu_classes(const ConnectedModel& m)
{
    const auto& ring = m.ring;
    const int n = m.dimension();
    std::vector<ClassElement> parts(static_cast<std::size_t>(n) + 1);
    parts[0] = ClassElement(ring.unit());
    for (int k = 1; 2 * k <= n; ++k) {
        const auto unknowns = ring.basis(k);
        const auto tests = ring.basis(n - k);
        if (unknowns.size() != tests.size())
            throw InvariantViolation("wu_classes: H^" + std::to_string(k) + " and H^" + std::to_string(n - k) +
                                     " of '" + m.label + "' differ in dimension");
        if (unknowns.empty())
            continue;
        F2Matrix a(tests.size(), unknowns.size());
        std::vector<bool> rhs(tests.size());
        for (std::size_t r = 0; r < tests.size(); ++r) {
            const ClassElement x(tests[r]);
            for (std::size_t c = 0; c < unknowns.size(); ++c)
                a.set(r, c, pairing(cup(ClassElement(unknowns[c]), x, ring), ring));
            rhs[r] = pairing(sq(k, x, ring, m.rules), ring);
        }
        if (!a.invertible())
            throw InvariantViolation("wu_classes: degenerate pairing on '" + m.label + "'");
        const auto sol = a.solve(rhs);
        for (std::size_t c = 0; c < unknowns.size(); ++c)
            if ((*sol)[c])
                parts[static_cast<std::size_t>(k)].toggle(unknowns[c]);
    }
    return TotalClass(std::move(parts));
}

TotalClass sw_total(const ConnectedModel& m)
{
    const TotalClass wu = wu_classes(m);
    const int n = m.dimension();
    std::vector<ClassElement> w(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const auto& v = wu.part(static_cast<std::size_t>(k));
        for (int i = 0; i <= k && k + i <= n; ++i)
            w[static_cast<std::size_t>(k + i)] += sq(i, v, m.ring, m.rules);
    }
    return TotalClass(std::move(w));
}

namespace {

bool sw_number_from(const TotalClass& w, const ConnectedModel& m, const Partition& p)
{
    ClassElement acc(m.ring.unit());
    for (int part : p.parts) {
        acc = cup(acc, w.part(static_cast<std::size_t>(part)), m.ring);
        if (acc.is_zero())
            return false;
    }
    return pairing(acc, m.ring);
}

void require_partition_of(const Partition& p, int n)
{
    if (p.sum() != n)
        throw InvalidArgument("partition " + to_string(p) + " does not sum to the dimension " + std::to_string(n));
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        if (p.parts[i] < 1 || (i > 0 && p.parts[i] > p.parts[i - 1]))
            throw InvalidArgument("partition " + to_string(p) + " is not in descending order");
}

}  // namespace

bool sw_number(const ConnectedModel& m, const Partition& p)
{
    require_partition_of(p, m.dimension());
    return sw_number_from(sw_total(m), m, p);
}

bool sw_number(const ManifoldModel& m, const Partition& p)
{
    require_partition_of(p, m.dimension());
    bool total = false;
    for (const auto& c : m.components())
        total = total != sw_number_from(sw_total(c), c, p);
    return total;
}

SWVector all_sw_numbers(const ConnectedModel& m)
{
    SWVector v(m.dimension());
    const TotalClass w = sw_total(m);
    for (const auto& [p, value] : v.entries())
        if (sw_number_from(w, m, p))
            v.set(p, true);
    return v;
}

SWVector all_sw_numbers(const ManifoldModel& m)
{
    SWVector v(m.dimension());
    for (const auto& c : m.components())
        v += all_sw_numbers(c);
    return v;
}

bool euler_parity_check(const ManifoldModel& m)
{
    const int n = m.dimension();
    if (n < 1)
        return true;
    const bool top = sw_number(m, Partition{{n}});
    return top == (euler_characteristic(m) % 2 != 0);
}

namespace {

// C(top, k) mod 2 for any integer top and k >= 0, with the generalized
// binomial C(top, k) = (-1)^k C(k - top - 1, k) for negative top.
bool generalized_binom_odd(std::int64_t top, std::int64_t k)
{
    if (k < 0)
        return false;
    if (top >= 0)
        return binom_odd(top, k);
    return binom_odd(k - top - 1, k);
}

}  // namespace

std::pair<ClassElement, ClassElement> wu_formula_sides(const ConnectedModel& m, int i, int j)
{
    if (i < 0 || j < 0)
        throw InvalidArgument("wu_formula: indices must be nonnegative");
    const TotalClass w = sw_total(m);
    const ClassElement left = sq(i, w.part(static_cast<std::size_t>(j)), m.ring, m.rules);
    ClassElement right;
    if (i <= j) {
        for (int k = 0; k <= i; ++k)
            if (generalized_binom_odd(j + k - i - 1, k))
                right += cup(w.part(static_cast<std::size_t>(i - k)), w.part(static_cast<std::size_t>(j + k)), m.ring);
    }
    return {left, right};
}

bool wu_formula_check(const ConnectedModel& m, int i, int j)
{
    const auto [left, right] = wu_formula_sides(m, i, j);
    return left == right;
}

bool wu_formula_check(const ManifoldModel& m, int i, int j)
{
    return std::all_of(m.components().begin(), m.components().end(),
                       [&](const ConnectedModel& c) { return wu_formula_check(c, i, j); });
}

TotalClass whitney_sum_check(const TotalClass& a, const TotalClass& b, const AlgebraPresentation& ring, int n)
{
    std::vector<ClassElement> out(static_cast<std::size_t>(std::max(n, 0)) + 1);
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = 0; q < b.size() && p + q < out.size(); ++q)
            out[p + q] += cup(a.part(p), b.part(q), ring);
    return TotalClass(std::move(out));
}

TotalClass embedded(const TotalClass& t, std::size_t offset, std::size_t total)
{
    std::vector<ClassElement> parts;
    for (const auto& p : t.parts())
        parts.push_back(p.embedded(offset, total));
    return TotalClass(std::move(parts));
}

std::string to_string(const TotalClass& t, const AlgebraPresentation& ring)
{
    return to_string(t.sum(), ring);
}

std::string to_string(const SWVector& v)
{
    std::string s;
    for (const auto& [p, value] : v.entries()) {
        if (!s.empty())
            s += '\n';
        std::string name;
        for (int part : p.parts)
            name += (name.empty() ? "" : " ") + std::string("w") + std::to_string(part);
        s += (name.empty() ? std::string("1") : name) + " = " + (value ? "1" : "0");
    }
    return s;
}

}  // namespace steencob
