#pragma once

// Recursive-descent parsers for manifold expressions and Steenrod words.
//
//   Expr := Term ('+' Term)*          disjoint union
//   Term := Atom ('*' Atom)*          cartesian product
//   Atom := NAME '(' INT (',' INT)? ')' | '(' Expr ')'
//   NAME := RP | CP | Dold | S        (case-insensitive)
//
//   Element := Word ('+' Word)*
//   Word    := '1' | '0' | Factor+
//   Factor  := 'Sq' '^'? INT          (INT >= 1)

#include "steencob/manifolds.hpp"
#include "steencob/steenrod.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace steencob {

struct ManifoldExpr;

struct CtorAtom {
    enum class Kind { rp, cp, dold, sphere };
    Kind kind;
    std::vector<int> args;

    bool operator==(const CtorAtom&) const = default;
};

struct GroupAtom {
    std::unique_ptr<ManifoldExpr> inner;

    explicit GroupAtom(ManifoldExpr e);
    GroupAtom(const GroupAtom& other);
    GroupAtom(GroupAtom&&) noexcept = default;
    GroupAtom& operator=(const GroupAtom& other);
    GroupAtom& operator=(GroupAtom&&) noexcept = default;
    ~GroupAtom();

    friend bool operator==(const GroupAtom& a, const GroupAtom& b);
};

using Atom = std::variant<CtorAtom, GroupAtom>;

struct Term {
    std::vector<Atom> atoms;
    bool operator==(const Term&) const = default;
};

struct ManifoldExpr {
    std::vector<Term> terms;
    bool operator==(const ManifoldExpr&) const = default;
};

ManifoldExpr parse_manifold(std::string_view input);

// Canonical source text: reparses to an identical tree.
std::string print(const ManifoldExpr& e);
// Tree form, e.g. Sum[RP(4), Product[RP(2), RP(2)]].
std::string debug_string(const ManifoldExpr& e);

// Throws InvalidArgument when summands have different dimensions.
ManifoldModel evaluate(const ManifoldExpr& e);

SteenrodElement parse_steenrod(std::string_view input);

}  // namespace steencob
