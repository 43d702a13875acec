#pragma once

// The unoriented cobordism ring in low degrees: ranks of Omega_n, boundary
// and cobordism decisions by Stiefel-Whitney numbers, and classification of
// a manifold as a polynomial in Dold's generators x_i (i != 2^k - 1).

#include "steencob/charclass.hpp"
#include "steencob/f2_matrix.hpp"
#include "steencob/partition.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace steencob {

inline constexpr int kDefaultClassifyCeiling = 8;

// Partitions of n with no part of the form 2^s - 1, canonical order.
std::vector<Partition> nondyadic_partitions(int n);
// dim over F2 of Omega_n.
long long omega_dim(int n);

bool is_null_cobordant(const ManifoldModel& m);
bool are_cobordant(const ManifoldModel& a, const ManifoldModel& b);

// x_i = RP^i for i even, x_i = P(2^r - 1, s 2^r) for i = 2^r (2s+1) - 1.
// Throws PreconditionError for i < 2 or i = 2^k - 1.
ManifoldModel dold_generator(int i);

// F2-combination of monomials in the x_i; each monomial is the descending
// multiset of generator degrees, e.g. x4 x2 x2 = [4,2,2].
class ClassExpression {
  public:
    explicit ClassExpression(int dimension = 0) : dimension_(dimension) {}

    int dimension() const noexcept { return dimension_; }
    const std::set<Partition>& monomials() const noexcept { return monomials_; }
    bool is_zero() const noexcept { return monomials_.empty(); }

    void toggle(const Partition& monomial);
    ClassExpression& operator+=(const ClassExpression& rhs);
    friend ClassExpression operator+(ClassExpression a, const ClassExpression& b) { return a += b; }

    bool operator==(const ClassExpression&) const = default;

  private:
    int dimension_;
    std::set<Partition> monomials_;
};

// Polynomial product in F2[x_i].
ClassExpression multiply(const ClassExpression& a, const ClassExpression& b);

// The product manifold x_{i_1} x ... x x_{i_r}; the empty monomial is a point.
ManifoldModel realize(const Partition& monomial);
// Disjoint union of the realized monomials; throws InvalidArgument for zero.
ManifoldModel realize(const ClassExpression& e);

std::string to_string(const ClassExpression& e);

// SW vectors of all generator monomials for each degree 1..max_dimension.
// Built completely by the constructor and read-only afterwards.
class GeneratorCatalog {
  public:
    static constexpr const char* kEngineVersion = "1";

    explicit GeneratorCatalog(int max_dimension = kDefaultClassifyCeiling);

    // Loads matrices for every degree up to max_dimension from
    // <dir>/generator-catalog-v<version>.json when present, computes the
    // missing ones and writes the file back. Loaded matrices are validated
    // (shape and invertibility); damage raises InvariantViolation.
    static GeneratorCatalog with_cache(int max_dimension, const std::string& dir);

    int max_dimension() const noexcept { return max_dimension_; }
    // Degree-n monomials in canonical order (the nondyadic partitions of n).
    const std::vector<Partition>& monomials(int n) const;
    // Row r = SW vector of monomials(n)[r], columns = partitions(n).
    const F2Matrix& matrix(int n) const;
    // Square restriction to the pivot columns of matrix(n): the first
    // partitions, in canonical order, whose SW numbers are independent on
    // the generator monomials.
    F2Matrix square_matrix(int n) const;
    std::vector<Partition> square_columns(int n) const;

    ClassExpression classify(const ManifoldModel& m) const;

  private:
    struct Degree {
        std::vector<Partition> monomials;
        F2Matrix matrix;
    };
    GeneratorCatalog(int max_dimension, std::map<int, Degree> degrees);
    static Degree build_degree(int n);
    static void validate(int n, const Degree& d);
    const Degree& at(int n) const;

    int max_dimension_;
    std::map<int, Degree> degrees_;
};

// Classification against a process-wide catalog with the default ceiling.
ClassExpression classify(const ManifoldModel& m);

// sum over r + s = degree of betti[r] * dim Omega_s.
long long bordism_of_space_dim(std::span<const long long> betti, int degree);
// Same sum, with the summation degree supplied by the caller.
long long weak_integral_bordism_dim(std::span<const long long> betti, int degree);

}  // namespace steencob
