#pragma once

/**
 * @file dsl.hpp
 * @brief Expression language for classes.
 *
 *   expr    := sum
 *   sum     := prod ('+' prod)*
 *   prod    := twisted ('*' twisted)*
 *   twisted := primary ('{' int '}')*
 *   primary := int | atom | 'dual' '(' expr ')' | '(' expr ')'
 *   atom    := 'L' | 'Jac' | 'BGm' | 'BGmC' | 'P' '(' nat ')' | 'Sym' '(' nat ')' | 'Z' '(' int ')'
 */

#include "bunmot/curve.hpp"
#include "bunmot/error.hpp"
#include "bunmot/interval.hpp"
#include "bunmot/laurent.hpp"
#include "bunmot/motclass.hpp"
#include "bunmot/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bunmot {

struct Expr {
    enum class Kind { Int, L, Jac, BGm, BGmC, P, Sym, Z, Sum, Prod, Twist, Dual };

    Kind kind = Kind::Int;
    Integer value = 0;  ///< scalar for Int, argument for P/Sym/Z, amount for Twist
    std::vector<Expr> children;

    bool operator==(const Expr& other) const;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

Expr parse(const std::string& src);

/// Text that parses back to the same tree; n-ary sums and products stay flat.
std::string render(const Expr& e);

/// Region where the full value of e can have terms.
Region expr_support(const Expr& e, std::optional<int> genus);

/// Value of e, exact on `window`. Jac and dual need a genus.
MotClass eval(const Expr& e, std::optional<int> genus, const Region& window);

/// Point count of e through q^{-T}, evaluated on vd >= -T and twist >= -T.
LaurentQ realize(const Expr& e, const ValidatedCurve& c, std::int64_t T);

} // namespace bunmot
