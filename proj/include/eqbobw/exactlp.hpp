#pragma once

#include "eqbobw/model.hpp"
#include "eqbobw/rational.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace eqbobw::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize };

struct Constraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

/// Variable bounds. The default is the nonnegative orthant [0, +inf).
struct Bounds {
    std::optional<Rational> lower = Rational(0);
    std::optional<Rational> upper;

    static Bounds free() { return {std::nullopt, std::nullopt}; }
    static Bounds between(Rational lo, Rational hi) { return {std::move(lo), std::move(hi)}; }
};

struct LinearProgram {
    std::size_t variable_count = 0;
    std::vector<Constraint> constraints;
    std::vector<Rational> objective;
    Sense sense = Sense::Maximize;
    std::vector<Bounds> bounds;  // empty means default bounds for every variable

    explicit LinearProgram(std::size_t n = 0, Sense s = Sense::Maximize)
        : variable_count(n), objective(n, Rational(0)), sense(s), bounds(n) {}

    void add(std::vector<Rational> row, Relation rel, Rational rhs) {
        constraints.push_back({std::move(row), rel, std::move(rhs)});
    }
    const Bounds& bound(std::size_t j) const;

    /// Throws InputError on inconsistent row lengths.
    void validate() const;
};

/// Multipliers on constraint rows and on variable bounds. Entries for
/// absent bounds are zero. See verify_optimality / verify_farkas for the
/// sign conventions each certificate must satisfy.
struct Multipliers {
    std::vector<Rational> rows;
    std::vector<Rational> lower;
    std::vector<Rational> upper;
};

struct Optimal {
    std::vector<Rational> point;
    Rational value;
    /// Dual solution proving optimality by weak duality.
    Multipliers certificate;
};

struct Infeasible {
    /// Nonnegative combination of the constraints that reads 0 <= negative.
    Multipliers farkas_certificate;
};

struct Unbounded {
    std::vector<Rational> point;  // feasible start of the ray
    std::vector<Rational> ray;
};

using Result = std::variant<Optimal, Infeasible, Unbounded>;

/// Two-phase dense-tableau simplex with Bland's rule over exact rationals.
/// Every returned certificate has already been checked by the verifiers below.
Result solve(const LinearProgram& lp);

bool is_feasible_point(const LinearProgram& lp, const std::vector<Rational>& x);

/// For Maximize: rows with <= carry y >= 0, rows with >= carry y <= 0,
/// lower-bound multipliers are <= 0 and upper-bound multipliers >= 0 (signs
/// reverse for Minimize). The multipliers must reproduce the objective
/// exactly and their bound value must equal the objective value at x.
bool verify_optimality(const LinearProgram& lp, const std::vector<Rational>& x,
                       const Rational& value, const Multipliers& certificate);

/// Signs as for a Maximize certificate; combination of the left-hand sides
/// must vanish while the combined right-hand side is negative.
bool verify_farkas(const LinearProgram& lp, const Multipliers& certificate);

bool verify_ray(const LinearProgram& lp, const std::vector<Rational>& ray);

/// Nonzero c with sum_k c_k = 0 and sum_k c_k v^k = 0, or empty when the
/// vectors are affinely independent. Throws InputError on ragged input.
std::optional<std::vector<Rational>> affine_dependency(const std::vector<ValueProfile>& vectors);

/// A basis of the right null space of a dense matrix (rows x cols).
std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> matrix,
                                              std::size_t cols);

}  // namespace eqbobw::lp
