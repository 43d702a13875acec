#pragma once

// Wu classes, Stiefel-Whitney classes and Stiefel-Whitney numbers of the
// catalog models. The Wu class v_k is the class representing Sq^k on
// H^{n-k} under Poincare duality; the total Stiefel-Whitney class is Sq(v).

#include "steencob/manifolds.hpp"
#include "steencob/partition.hpp"

#include <string>
#include <utility>
#include <vector>

namespace steencob {

// Graded pieces x_0 + x_1 + ... + x_n of a total class in one ring.
class TotalClass {
  public:
    TotalClass() = default;
    explicit TotalClass(std::vector<ClassElement> parts) : parts_(std::move(parts)) {}

    // dimension n: parts 0..n, all zero above n.
    std::size_t size() const noexcept { return parts_.size(); }
    const ClassElement& part(std::size_t k) const;
    const std::vector<ClassElement>& parts() const noexcept { return parts_; }
    ClassElement sum() const;

    bool operator==(const TotalClass&) const = default;

  private:
    std::vector<ClassElement> parts_;
};

// Complete Stiefel-Whitney number invariant, keyed by every partition of
// the dimension in canonical order.
class SWVector {
  public:
    SWVector() = default;
    explicit SWVector(int dimension);

    int dimension() const noexcept { return dimension_; }
    const std::vector<std::pair<Partition, bool>>& entries() const noexcept { return entries_; }
    bool value(const Partition& p) const;
    void set(const Partition& p, bool v);
    bool is_zero() const noexcept;

    SWVector& operator+=(const SWVector& rhs);
    bool operator==(const SWVector&) const = default;

  private:
    int dimension_ = 0;
    std::vector<std::pair<Partition, bool>> entries_;
};

TotalClass wu_classes(const ConnectedModel& m);
TotalClass sw_total(const ConnectedModel& m);

bool sw_number(const ConnectedModel& m, const Partition& p);
bool sw_number(const ManifoldModel& m, const Partition& p);
SWVector all_sw_numbers(const ConnectedModel& m);
SWVector all_sw_numbers(const ManifoldModel& m);

bool euler_parity_check(const ManifoldModel& m);

// Both sides of Sq^i(w_j) = sum_k C(j+k-i-1, k) w_{i-k} w_{j+k} in
// H^{i+j}. For i > j the left side vanishes by instability and the check
// compares it with zero.
std::pair<ClassElement, ClassElement> wu_formula_sides(const ConnectedModel& m, int i, int j);
bool wu_formula_check(const ConnectedModel& m, int i, int j);
// Holds on every component.
bool wu_formula_check(const ManifoldModel& m, int i, int j);

// Graded product w_A * w_B truncated to degrees <= n, both in `ring`.
TotalClass whitney_sum_check(const TotalClass& a, const TotalClass& b, const AlgebraPresentation& ring, int n);

// Re-indexes a total class into a tensor product ring.
TotalClass embedded(const TotalClass& t, std::size_t offset, std::size_t total);

std::string to_string(const TotalClass& t, const AlgebraPresentation& ring);
std::string to_string(const SWVector& v);

}  // namespace steencob
