#include "eqbobw/exactlp.hpp"

#include "eqbobw/errors.hpp"

#include <stdexcept>

namespace eqbobw::lp {

const Bounds& LinearProgram::bound(std::size_t j) const {
    static const Bounds kDefault{};
    return bounds.empty() ? kDefault : bounds.at(j);
}

void LinearProgram::validate() const {
    if (objective.size() != variable_count) {
        throw InputError("objective has " + std::to_string(objective.size()) +
                         " coefficients for " + std::to_string(variable_count) + " variables");
    }
    if (!bounds.empty() && bounds.size() != variable_count) {
        throw InputError("bounds list does not match variable count");
    }
    for (std::size_t r = 0; r < constraints.size(); ++r) {
        if (constraints[r].coefficients.size() != variable_count) {
            throw InputError("constraint " + std::to_string(r) + " has " +
                             std::to_string(constraints[r].coefficients.size()) +
                             " coefficients for " + std::to_string(variable_count) +
                             " variables");
        }
    }
}

namespace {

// x_j = offset + z[col]   (Shift, finite lower bound)
// x_j = offset - z[col]   (Reflect, only an upper bound)
// x_j = z[col] - z[col2]  (Split, free)
enum class VarKind { Shift, Reflect, Split };

struct VarMap {
    VarKind kind;
    std::size_t col = 0;
    std::size_t col2 = 0;
    Rational offset;
};

struct RowInfo {
    bool from_upper_bound = false;
    std::size_t index = 0;  // constraint index or variable index
    int sign = 1;           // +1 unless the row was negated to make rhs >= 0
    std::size_t identity_col = 0;
};

struct Tableau {
    std::size_t cols = 0;                 // columns excluding the rhs
    std::vector<std::vector<Rational>> a;  // rows x (cols + 1)
    std::vector<std::size_t> basis;
    std::vector<Rational> obj;  // -(reduced costs); obj[cols] = objective value

    void pivot(std::size_t r, std::size_t c) {
        std::vector<Rational>& prow = a[r];
        const Rational piv = prow[c];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= cols; ++j) {
            if (prow[j] != 0) {
                if (piv != 1) {
                    prow[j] /= piv;
                }
                nz.push_back(j);
            }
        }
        auto eliminate = [&](std::vector<Rational>& row) {
            if (row[c] == 0) {
                return;
            }
            const Rational factor = row[c];
            for (std::size_t j : nz) {
                row[j] -= factor * prow[j];
            }
        };
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i != r) {
                eliminate(a[i]);
            }
        }
        eliminate(obj);
        basis[r] = c;
    }

    // Loads obj from a cost vector (maximize c.z) and prices out the basis.
    void set_objective(const std::vector<Rational>& cost) {
        obj.assign(cols + 1, Rational(0));
        for (std::size_t j = 0; j < cols; ++j) {
            obj[j] = -cost[j];
        }
        for (std::size_t r = 0; r < a.size(); ++r) {
            const Rational& cb = cost[basis[r]];
            if (cb == 0) {
                continue;
            }
            for (std::size_t j = 0; j <= cols; ++j) {
                if (a[r][j] != 0) {
                    obj[j] += cb * a[r][j];
                }
            }
        }
    }

    // Bland's rule. Returns the entering column of an unbounded edge, if any.
    std::optional<std::size_t> run(const std::vector<bool>& allowed) {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < cols; ++j) {
                if (allowed[j] && obj[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering) {
                return std::nullopt;
            }
            const std::size_t c = *entering;
            std::optional<std::size_t> leave;
            Rational best_ratio;
            for (std::size_t r = 0; r < a.size(); ++r) {
                if (a[r][c] <= 0) {
                    continue;
                }
                Rational ratio = a[r][cols] / a[r][c];
                if (!leave || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[*leave])) {
                    leave = r;
                    best_ratio = std::move(ratio);
                }
            }
            if (!leave) {
                return c;
            }
            pivot(*leave, c);
        }
    }
};

struct StandardForm {
    std::vector<VarMap> vars;
    std::vector<RowInfo> rows;
    std::size_t structural = 0;
    std::vector<bool> artificial;
    Tableau tab;
};

StandardForm build_standard_form(const LinearProgram& lp) {
    StandardForm sf;
    const std::size_t n = lp.variable_count;
    std::size_t k = 0;
    sf.vars.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Bounds& b = lp.bound(j);
        VarMap& vm = sf.vars[j];
        if (b.lower) {
            vm.kind = VarKind::Shift;
            vm.col = k++;
            vm.offset = *b.lower;
        } else if (b.upper) {
            vm.kind = VarKind::Reflect;
            vm.col = k++;
            vm.offset = *b.upper;
        } else {
            vm.kind = VarKind::Split;
            vm.col = k++;
            vm.col2 = k++;
        }
    }
    sf.structural = k;

    struct RawRow {
        std::vector<Rational> z;
        Relation rel;
        Rational rhs;
        RowInfo info;
    };
    std::vector<RawRow> raw;
    for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
        const Constraint& con = lp.constraints[r];
        RawRow row{std::vector<Rational>(k, Rational(0)), con.relation, con.rhs, {}};
        row.info.index = r;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& coef = con.coefficients[j];
            if (coef == 0) {
                continue;
            }
            const VarMap& vm = sf.vars[j];
            switch (vm.kind) {
                case VarKind::Shift:
                    row.z[vm.col] += coef;
                    row.rhs -= coef * vm.offset;
                    break;
                case VarKind::Reflect:
                    row.z[vm.col] -= coef;
                    row.rhs -= coef * vm.offset;
                    break;
                case VarKind::Split:
                    row.z[vm.col] += coef;
                    row.z[vm.col2] -= coef;
                    break;
            }
        }
        raw.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Bounds& b = lp.bound(j);
        if (b.lower && b.upper) {
            RawRow row{std::vector<Rational>(k, Rational(0)), Relation::LessEqual,
                       *b.upper - *b.lower, {}};
            row.z[sf.vars[j].col] = 1;
            row.info.from_upper_bound = true;
            row.info.index = j;
            raw.push_back(std::move(row));
        }
    }

    std::size_t slack_count = 0;
    std::size_t art_count = 0;
    for (auto& row : raw) {
        if (row.rhs < 0) {
            for (auto& x : row.z) {
                x = -x;
            }
            row.rhs = -row.rhs;
            row.info.sign = -1;
            if (row.rel == Relation::LessEqual) {
                row.rel = Relation::GreaterEqual;
            } else if (row.rel == Relation::GreaterEqual) {
                row.rel = Relation::LessEqual;
            }
        }
        if (row.rel != Relation::Equal) {
            ++slack_count;
        }
        if (row.rel != Relation::LessEqual) {
            ++art_count;
        }
    }

    Tableau& tab = sf.tab;
    tab.cols = k + slack_count + art_count;
    sf.artificial.assign(tab.cols, false);
    std::size_t next_slack = k;
    std::size_t next_art = k + slack_count;
    for (auto& row : raw) {
        std::vector<Rational> full(tab.cols + 1, Rational(0));
        for (std::size_t j = 0; j < k; ++j) {
            full[j] = row.z[j];
        }
        full[tab.cols] = row.rhs;
        if (row.rel == Relation::LessEqual) {
            full[next_slack] = 1;
            row.info.identity_col = next_slack++;
        } else {
            if (row.rel == Relation::GreaterEqual) {
                full[next_slack++] = -1;
            }
            full[next_art] = 1;
            sf.artificial[next_art] = true;
            row.info.identity_col = next_art++;
        }
        tab.basis.push_back(row.info.identity_col);
        tab.a.push_back(std::move(full));
        sf.rows.push_back(row.info);
    }
    return sf;
}

std::vector<Rational> to_original(const StandardForm& sf, const std::vector<Rational>& z,
                                  bool direction) {
    std::vector<Rational> x(sf.vars.size());
    for (std::size_t j = 0; j < sf.vars.size(); ++j) {
        const VarMap& vm = sf.vars[j];
        switch (vm.kind) {
            case VarKind::Shift:
                x[j] = direction ? z[vm.col] : vm.offset + z[vm.col];
                break;
            case VarKind::Reflect:
                x[j] = direction ? Rational(-z[vm.col]) : vm.offset - z[vm.col];
                break;
            case VarKind::Split:
                x[j] = z[vm.col] - z[vm.col2];
                break;
        }
    }
    return x;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) {
            s += a[i] * b[i];
        }
    }
    return s;
}

Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x) {
    return dot(lp.objective, x);
}

// The raw simplex result before any certificate work.
struct Core {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    StandardForm sf;
    std::vector<Rational> z;
    std::vector<Rational> cost;  // internal maximisation costs over z
    std::size_t unbounded_col = 0;
};

Core run_core(const LinearProgram& lp) {
    Core core{Core::Status::Optimal, build_standard_form(lp), {}, {}, 0};
    StandardForm& sf = core.sf;
    Tableau& tab = sf.tab;
    const std::size_t cols = tab.cols;

    // Phase one: maximise minus the sum of artificials.
    std::vector<Rational> phase1(cols, Rational(0));
    bool any_artificial = false;
    for (std::size_t j = 0; j < cols; ++j) {
        if (sf.artificial[j]) {
            phase1[j] = -1;
            any_artificial = true;
        }
    }
    if (any_artificial) {
        tab.set_objective(phase1);
        tab.run(std::vector<bool>(cols, true));
        if (tab.obj[cols] < 0) {
            core.status = Core::Status::Infeasible;
            return core;
        }
        for (std::size_t r = 0; r < tab.a.size(); ++r) {
            if (!sf.artificial[tab.basis[r]]) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                if (!sf.artificial[j] && tab.a[r][j] != 0) {
                    tab.pivot(r, j);
                    break;
                }
            }
            // A row with no usable column is redundant; its artificial stays at zero.
        }
    }

    core.cost.assign(cols, Rational(0));
    const Rational sign = lp.sense == Sense::Maximize ? 1 : -1;
    for (std::size_t j = 0; j < sf.vars.size(); ++j) {
        const Rational c = sign * lp.objective[j];
        if (c == 0) {
            continue;
        }
        const VarMap& vm = sf.vars[j];
        switch (vm.kind) {
            case VarKind::Shift:
                core.cost[vm.col] += c;
                break;
            case VarKind::Reflect:
                core.cost[vm.col] -= c;
                break;
            case VarKind::Split:
                core.cost[vm.col] += c;
                core.cost[vm.col2] -= c;
                break;
        }
    }
    tab.set_objective(core.cost);
    std::vector<bool> allowed(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        allowed[j] = !sf.artificial[j];
    }
    const auto unbounded = tab.run(allowed);

    core.z.assign(cols, Rational(0));
    for (std::size_t r = 0; r < tab.a.size(); ++r) {
        core.z[tab.basis[r]] = tab.a[r][cols];
    }
    if (unbounded) {
        core.status = Core::Status::Unbounded;
        core.unbounded_col = *unbounded;
    }
    return core;
}

Multipliers optimality_certificate(const LinearProgram& lp, const Core& core) {
    const StandardForm& sf = core.sf;
    const Tableau& tab = sf.tab;
    const std::size_t n = lp.variable_count;
    Multipliers cert{std::vector<Rational>(lp.constraints.size(), Rational(0)),
                     std::vector<Rational>(n, Rational(0)), std::vector<Rational>(n, Rational(0))};

    // y = c_B B^-1, with B^-1 read off the columns that started as identity.
    std::vector<Rational> residual(n);
    const Rational sign = lp.sense == Sense::Maximize ? 1 : -1;
    for (std::size_t j = 0; j < n; ++j) {
        residual[j] = sign * lp.objective[j];
    }
    for (std::size_t r = 0; r < sf.rows.size(); ++r) {
        Rational y = 0;
        const std::size_t id = sf.rows[r].identity_col;
        for (std::size_t i = 0; i < tab.a.size(); ++i) {
            const Rational& cb = core.cost[tab.basis[i]];
            if (cb != 0 && tab.a[i][id] != 0) {
                y += cb * tab.a[i][id];
            }
        }
        y *= sf.rows[r].sign;
        if (y == 0) {
            continue;
        }
        if (sf.rows[r].from_upper_bound) {
            const std::size_t j = sf.rows[r].index;
            cert.upper[j] += y;
            residual[j] -= y;
        } else {
            const std::size_t ci = sf.rows[r].index;
            cert.rows[ci] = y;
            const auto& coef = lp.constraints[ci].coefficients;
            for (std::size_t j = 0; j < n; ++j) {
                if (coef[j] != 0) {
                    residual[j] -= y * coef[j];
                }
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        switch (sf.vars[j].kind) {
            case VarKind::Shift:
                cert.lower[j] += residual[j];
                break;
            case VarKind::Reflect:
                cert.upper[j] += residual[j];
                break;
            case VarKind::Split:
                break;  // residual must already vanish; the verifier checks it
        }
    }
    if (lp.sense == Sense::Minimize) {
        for (auto* v : {&cert.rows, &cert.lower, &cert.upper}) {
            for (auto& x : *v) {
                x = -x;
            }
        }
    }
    return cert;
}

// Farkas multipliers are found as a feasible point of the alternative system.
Multipliers farkas_certificate(const LinearProgram& lp) {
    const std::size_t n = lp.variable_count;
    const std::size_t rows = lp.constraints.size();
    std::vector<std::size_t> lower_var;
    std::vector<std::size_t> upper_var;
    for (std::size_t j = 0; j < n; ++j) {
        if (lp.bound(j).lower) {
            lower_var.push_back(j);
        }
        if (lp.bound(j).upper) {
            upper_var.push_back(j);
        }
    }
    const std::size_t width = rows + lower_var.size() + upper_var.size();
    LinearProgram alt(width, Sense::Maximize);
    for (std::size_t r = 0; r < rows; ++r) {
        switch (lp.constraints[r].relation) {
            case Relation::LessEqual:
                alt.bounds[r] = Bounds{};
                break;
            case Relation::GreaterEqual:
                alt.bounds[r] = Bounds{std::nullopt, Rational(0)};
                break;
            case Relation::Equal:
                alt.bounds[r] = Bounds::free();
                break;
        }
    }
    for (std::size_t t = 0; t < lower_var.size(); ++t) {
        alt.bounds[rows + t] = Bounds{std::nullopt, Rational(0)};
    }
    for (std::size_t t = 0; t < upper_var.size(); ++t) {
        alt.bounds[rows + lower_var.size() + t] = Bounds{};
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> row(width, Rational(0));
        for (std::size_t r = 0; r < rows; ++r) {
            row[r] = lp.constraints[r].coefficients[j];
        }
        for (std::size_t t = 0; t < lower_var.size(); ++t) {
            if (lower_var[t] == j) {
                row[rows + t] = 1;
            }
        }
        for (std::size_t t = 0; t < upper_var.size(); ++t) {
            if (upper_var[t] == j) {
                row[rows + lower_var.size() + t] = 1;
            }
        }
        alt.add(std::move(row), Relation::Equal, 0);
    }
    std::vector<Rational> norm(width, Rational(0));
    for (std::size_t r = 0; r < rows; ++r) {
        norm[r] = lp.constraints[r].rhs;
    }
    for (std::size_t t = 0; t < lower_var.size(); ++t) {
        norm[rows + t] = *lp.bound(lower_var[t]).lower;
    }
    for (std::size_t t = 0; t < upper_var.size(); ++t) {
        norm[rows + lower_var.size() + t] = *lp.bound(upper_var[t]).upper;
    }
    alt.add(std::move(norm), Relation::Equal, -1);

    Core core = run_core(alt);
    if (core.status != Core::Status::Optimal) {
        throw std::logic_error("Farkas alternative system unexpectedly infeasible");
    }
    const auto y = to_original(core.sf, core.z, false);
    Multipliers cert{std::vector<Rational>(y.begin(), y.begin() + static_cast<long>(rows)),
                     std::vector<Rational>(n, Rational(0)), std::vector<Rational>(n, Rational(0))};
    for (std::size_t t = 0; t < lower_var.size(); ++t) {
        cert.lower[lower_var[t]] = y[rows + t];
    }
    for (std::size_t t = 0; t < upper_var.size(); ++t) {
        cert.upper[upper_var[t]] = y[rows + lower_var.size() + t];
    }
    return cert;
}

bool check_signs(const LinearProgram& lp, const Multipliers& m, int s) {
    if (m.rows.size() != lp.constraints.size() || m.lower.size() != lp.variable_count ||
        m.upper.size() != lp.variable_count) {
        return false;
    }
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        const Rational y = s * m.rows[r];
        switch (lp.constraints[r].relation) {
            case Relation::LessEqual:
                if (y < 0) return false;
                break;
            case Relation::GreaterEqual:
                if (y > 0) return false;
                break;
            case Relation::Equal:
                break;
        }
    }
    for (std::size_t j = 0; j < lp.variable_count; ++j) {
        const Bounds& b = lp.bound(j);
        if (!b.lower && m.lower[j] != 0) return false;
        if (!b.upper && m.upper[j] != 0) return false;
        if (s * m.lower[j] > 0) return false;
        if (s * m.upper[j] < 0) return false;
    }
    return true;
}

// Returns (sum_r y_r a_r + lower + upper, sum_r y_r b_r + lower.L + upper.U).
std::pair<std::vector<Rational>, Rational> combine(const LinearProgram& lp, const Multipliers& m) {
    std::vector<Rational> lhs(lp.variable_count, Rational(0));
    Rational rhs = 0;
    for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
        if (m.rows[r] == 0) {
            continue;
        }
        const auto& coef = lp.constraints[r].coefficients;
        for (std::size_t j = 0; j < lp.variable_count; ++j) {
            if (coef[j] != 0) {
                lhs[j] += m.rows[r] * coef[j];
            }
        }
        rhs += m.rows[r] * lp.constraints[r].rhs;
    }
    for (std::size_t j = 0; j < lp.variable_count; ++j) {
        lhs[j] += m.lower[j] + m.upper[j];
        if (m.lower[j] != 0) {
            rhs += m.lower[j] * *lp.bound(j).lower;
        }
        if (m.upper[j] != 0) {
            rhs += m.upper[j] * *lp.bound(j).upper;
        }
    }
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace

bool is_feasible_point(const LinearProgram& lp, const std::vector<Rational>& x) {
    if (x.size() != lp.variable_count) {
        return false;
    }
    for (const auto& con : lp.constraints) {
        const Rational lhs = dot(con.coefficients, x);
        switch (con.relation) {
            case Relation::LessEqual:
                if (lhs > con.rhs) return false;
                break;
            case Relation::GreaterEqual:
                if (lhs < con.rhs) return false;
                break;
            case Relation::Equal:
                if (lhs != con.rhs) return false;
                break;
        }
    }
    for (std::size_t j = 0; j < lp.variable_count; ++j) {
        const Bounds& b = lp.bound(j);
        if (b.lower && x[j] < *b.lower) return false;
        if (b.upper && x[j] > *b.upper) return false;
    }
    return true;
}

bool verify_optimality(const LinearProgram& lp, const std::vector<Rational>& x,
                       const Rational& value, const Multipliers& certificate) {
    const int s = lp.sense == Sense::Maximize ? 1 : -1;
    if (!is_feasible_point(lp, x) || objective_value(lp, x) != value ||
        !check_signs(lp, certificate, s)) {
        return false;
    }
    const auto [lhs, rhs] = combine(lp, certificate);
    return lhs == lp.objective && rhs == value;
}

bool verify_farkas(const LinearProgram& lp, const Multipliers& certificate) {
    if (!check_signs(lp, certificate, 1)) {
        return false;
    }
    const auto [lhs, rhs] = combine(lp, certificate);
    for (const auto& v : lhs) {
        if (v != 0) {
            return false;
        }
    }
    return rhs < 0;
}

bool verify_ray(const LinearProgram& lp, const std::vector<Rational>& ray) {
    if (ray.size() != lp.variable_count) {
        return false;
    }
    for (const auto& con : lp.constraints) {
        const Rational lhs = dot(con.coefficients, ray);
        if ((con.relation == Relation::LessEqual && lhs > 0) ||
            (con.relation == Relation::GreaterEqual && lhs < 0) ||
            (con.relation == Relation::Equal && lhs != 0)) {
            return false;
        }
    }
    for (std::size_t j = 0; j < lp.variable_count; ++j) {
        const Bounds& b = lp.bound(j);
        if ((b.lower && ray[j] < 0) || (b.upper && ray[j] > 0)) {
            return false;
        }
    }
    const Rational gain = objective_value(lp, ray);
    return lp.sense == Sense::Maximize ? gain > 0 : gain < 0;
}

Result solve(const LinearProgram& lp) {
    lp.validate();
    Core core = run_core(lp);
    switch (core.status) {
        case Core::Status::Infeasible: {
            Infeasible out{farkas_certificate(lp)};
            if (!verify_farkas(lp, out.farkas_certificate)) {
                throw std::logic_error("simplex produced an invalid Farkas certificate");
            }
            return out;
        }
        case Core::Status::Unbounded: {
            const StandardForm& sf = core.sf;
            std::vector<Rational> dz(sf.tab.cols, Rational(0));
            dz[core.unbounded_col] = 1;
            for (std::size_t r = 0; r < sf.tab.a.size(); ++r) {
                dz[sf.tab.basis[r]] = -sf.tab.a[r][core.unbounded_col];
            }
            Unbounded out{to_original(sf, core.z, false), to_original(sf, dz, true)};
            if (!is_feasible_point(lp, out.point) || !verify_ray(lp, out.ray)) {
                throw std::logic_error("simplex produced an invalid unbounded ray");
            }
            return out;
        }
        case Core::Status::Optimal:
            break;
    }
    Optimal out;
    out.point = to_original(core.sf, core.z, false);
    out.value = objective_value(lp, out.point);
    out.certificate = optimality_certificate(lp, core);
    if (!verify_optimality(lp, out.point, out.value, out.certificate)) {
        throw std::logic_error("simplex produced an invalid optimality certificate");
    }
    return out;
}

std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> matrix,
                                              std::size_t cols) {
    for (const auto& row : matrix) {
        if (row.size() != cols) {
            throw InputError("null_space: ragged matrix");
        }
    }
    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < matrix.size(); ++c) {
        std::size_t p = rank;
        while (p < matrix.size() && matrix[p][c] == 0) {
            ++p;
        }
        if (p == matrix.size()) {
            continue;
        }
        std::swap(matrix[rank], matrix[p]);
        const Rational piv = matrix[rank][c];
        for (auto& x : matrix[rank]) {
            x /= piv;
        }
        for (std::size_t i = 0; i < matrix.size(); ++i) {
            if (i == rank || matrix[i][c] == 0) {
                continue;
            }
            const Rational f = matrix[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                matrix[i][j] -= f * matrix[rank][j];
            }
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
            v[pivot_cols[r]] = -matrix[r][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> affine_dependency(const std::vector<ValueProfile>& vectors) {
    if (vectors.empty()) {
        return std::nullopt;
    }
    const std::size_t dim = vectors.front().size();
    for (const auto& v : vectors) {
        if (v.size() != dim) {
            throw InputError("affine_dependency: vectors differ in dimension");
        }
    }
    const std::size_t k = vectors.size();
    std::vector<std::vector<Rational>> m(dim + 1, std::vector<Rational>(k, Rational(0)));
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0; i < dim; ++i) {
            m[i][c] = vectors[c][i];
        }
        m[dim][c] = 1;
    }
    auto basis = null_space(std::move(m), k);
    if (basis.empty()) {
        return std::nullopt;
    }
    return basis.front();
}

}  // namespace eqbobw::lp
