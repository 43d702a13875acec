#pragma once

// Cohomological models of closed manifolds: projective spaces, Dold
// manifolds, spheres, and what products and disjoint unions build from them.

#include "steencob/cohomology.hpp"

#include <string>
#include <vector>

namespace steencob {

struct ConnectedModel {
    std::string label;
    AlgebraPresentation ring;
    SqRuleSet rules;
    Monomial fundamental;
    long long euler = 1;

    int dimension() const noexcept { return ring.total_dimension(); }
    bool operator==(const ConnectedModel&) const = default;
};

// Builds a connected model and checks it: Poincare duality, top class of
// the right degree. Throws InvariantViolation if the presentation cannot be
// a closed manifold.
ConnectedModel make_connected(std::string label, AlgebraPresentation ring, SqRuleSet rules, long long euler);

class ManifoldModel {
  public:
    ManifoldModel(std::string label, std::vector<ConnectedModel> components);
    explicit ManifoldModel(ConnectedModel single);

    const std::string& label() const noexcept { return label_; }
    int dimension() const noexcept { return dimension_; }
    const std::vector<ConnectedModel>& components() const noexcept { return components_; }
    bool connected() const noexcept { return components_.size() == 1; }

    bool operator==(const ManifoldModel&) const = default;

  private:
    std::string label_;
    int dimension_ = 0;
    std::vector<ConnectedModel> components_;
};

ManifoldModel point();
ManifoldModel rp(int n);
ManifoldModel cp(int n);
// P(m, n) = (S^m x CP^n) / involution; base RP^m, fibre CP^n, dimension m + 2n.
ManifoldModel dold(int m, int n);
ManifoldModel sphere(int n);

ConnectedModel product(const ConnectedModel& a, const ConnectedModel& b);
ManifoldModel product(const ManifoldModel& a, const ManifoldModel& b);
ManifoldModel disjoint_union(const ManifoldModel& a, const ManifoldModel& b);

long long euler_characteristic(const ManifoldModel& m);
// Sum (-1)^k dim H^k computed from the ring.
long long betti_euler(const AlgebraPresentation& ring);

}  // namespace steencob
