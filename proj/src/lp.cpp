#include "zkmc/lp.hpp"

namespace zkmc {

namespace {

// Phase-I simplex over exact rationals with Bland's rule.
// Variables: y+ (d), y- (d), slack (k), artificial (k); minimize sum of
// artificials. Rows are normalized to nonnegative right-hand sides.
struct Tableau {
    size_t d, k;
    size_t ncols;  // 2d + 2k (+ rhs stored separately)
    std::vector<std::vector<mpq_class>> t;
    std::vector<mpq_class> rhs;
    std::vector<size_t> basis;
    std::vector<int> row_sign;  // normalization factor per row

    size_t col_slack(size_t i) const { return 2 * d + i; }
    size_t col_art(size_t i) const { return 2 * d + k + i; }
    bool is_art(size_t j) const { return j >= 2 * d + k; }
};

Tableau build(const IntMat& A, std::span<const int64_t> b) {
    Tableau tb;
    tb.d = A.cols;
    tb.k = A.rows;
    tb.ncols = 2 * tb.d + 2 * tb.k;
    tb.t.assign(tb.k, std::vector<mpq_class>(tb.ncols, 0));
    tb.rhs.resize(tb.k);
    tb.basis.resize(tb.k);
    tb.row_sign.resize(tb.k);
    for (size_t i = 0; i < tb.k; i++) {
        int sign = b[i] < 0 ? -1 : 1;
        tb.row_sign[i] = sign;
        for (size_t j = 0; j < tb.d; j++) {
            mpq_class v = mpq_class(sign) * A.at(i, j);
            tb.t[i][j] = v;
            tb.t[i][tb.d + j] = -v;
        }
        tb.t[i][tb.col_slack(i)] = sign;
        tb.t[i][tb.col_art(i)] = 1;
        tb.rhs[i] = mpq_class(sign) * b[i];
        tb.basis[i] = sign > 0 ? tb.col_slack(i) : tb.col_art(i);
    }
    return tb;
}

void pivot(Tableau& tb, size_t row, size_t col) {
    mpq_class p = tb.t[row][col];
    for (auto& v : tb.t[row]) v /= p;
    tb.rhs[row] /= p;
    for (size_t i = 0; i < tb.k; i++) {
        if (i == row) continue;
        mpq_class f = tb.t[i][col];
        if (f == 0) continue;
        for (size_t j = 0; j < tb.ncols; j++) tb.t[i][j] -= f * tb.t[row][j];
        tb.rhs[i] -= f * tb.rhs[row];
    }
    tb.basis[row] = col;
}

}  // namespace

LpResult lp_feasible(const IntMat& A, std::span<const int64_t> b) {
    if (A.rows != b.size()) throw Error("lp: row mismatch");
    LpResult res;
    if (A.rows == 0) {
        res.sat = true;
        res.point.assign(A.cols, 0);
        return res;
    }
    Tableau tb = build(A, b);

    // maintained reduced-cost row for min sum(artificials):
    // obj[j] = c_j - sum_{rows with artificial basic} T[i][j]
    std::vector<mpq_class> obj_row(tb.ncols, 0);
    mpq_class obj = 0;
    std::vector<char> is_basic(tb.ncols, 0);
    for (size_t i = 0; i < tb.k; i++) is_basic[tb.basis[i]] = 1;
    for (size_t j = 0; j < tb.ncols; j++) {
        if (tb.is_art(j)) obj_row[j] = 1;
        for (size_t i = 0; i < tb.k; i++)
            if (tb.is_art(tb.basis[i])) obj_row[j] -= tb.t[i][j];
    }
    for (;;) {
        // Bland: entering column = smallest index with negative reduced cost;
        // artificials never re-enter
        size_t enter = tb.ncols;
        for (size_t j = 0; j < 2 * tb.d + tb.k; j++) {
            if (is_basic[j]) continue;
            if (obj_row[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == tb.ncols) break;
        // ratio test, Bland tie-break on smallest basis index
        size_t leave = tb.k;
        mpq_class best;
        for (size_t i = 0; i < tb.k; i++) {
            if (tb.t[i][enter] <= 0) continue;
            mpq_class ratio = tb.rhs[i] / tb.t[i][enter];
            if (leave == tb.k || ratio < best ||
                (ratio == best && tb.basis[i] < tb.basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == tb.k) throw Error("lp: phase-one objective unbounded");
        is_basic[tb.basis[leave]] = 0;
        is_basic[enter] = 1;
        pivot(tb, leave, enter);
        mpq_class f = obj_row[enter];
        if (f != 0)
            for (size_t j = 0; j < tb.ncols; j++) obj_row[j] -= f * tb.t[leave][j];
    }
    obj = 0;
    for (size_t i = 0; i < tb.k; i++)
        if (tb.is_art(tb.basis[i])) obj += tb.rhs[i];

    if (obj == 0) {
        res.sat = true;
        std::vector<mpq_class> vals(tb.ncols, 0);
        for (size_t i = 0; i < tb.k; i++) vals[tb.basis[i]] = tb.rhs[i];
        res.point.resize(tb.d);
        for (size_t j = 0; j < tb.d; j++) res.point[j] = vals[j] - vals[tb.d + j];
        // exact re-substitution
        for (size_t i = 0; i < A.rows; i++) {
            mpq_class acc = 0;
            for (size_t j = 0; j < A.cols; j++) acc += mpq_class(A.at(i, j)) * res.point[j];
            if (acc > b[i]) throw Error("lp: satisfying point fails re-substitution");
        }
        return res;
    }

    // dual multipliers from the artificial columns: pi_i = sum over basic
    // artificial rows of T[r][art_i]; Farkas ray lambda_i = -sign_i * pi_i
    res.sat = false;
    res.ray.resize(tb.k);
    for (size_t i = 0; i < tb.k; i++) {
        mpq_class pi = 0;
        for (size_t r = 0; r < tb.k; r++)
            if (tb.is_art(tb.basis[r])) pi += tb.t[r][tb.col_art(i)];
        res.ray[i] = mpq_class(-tb.row_sign[i]) * pi;
    }
    // exact re-verification: ray >= 0, ray^T A = 0, ray^T b < 0
    mpq_class combo_b = 0;
    for (size_t i = 0; i < tb.k; i++) {
        if (res.ray[i] < 0) throw Error("lp: negative farkas multiplier");
        combo_b += res.ray[i] * b[i];
    }
    for (size_t j = 0; j < A.cols; j++) {
        mpq_class acc = 0;
        for (size_t i = 0; i < A.rows; i++) acc += res.ray[i] * A.at(i, j);
        if (acc != 0) throw Error("lp: farkas ray fails column check");
    }
    if (combo_b >= 0) throw Error("lp: farkas ray fails rhs check");
    return res;
}

bool FarkasWitness::reverify(const IntMat& As, std::span<const int64_t> bs, const IntMat& Gp,
                             std::span<const int64_t> hp) const {
    if (lambda.size() != As.rows || mu.size() != Gp.rows) return false;
    size_t d = std::max(As.cols, Gp.cols);
    for (size_t j = 0; j < d; j++) {
        mpz_class acc = 0;
        for (size_t i = 0; i < As.rows; i++)
            if (j < As.cols) acc += mpz_class(lambda[i]) * As.at(i, j);
        for (size_t i = 0; i < Gp.rows; i++)
            if (j < Gp.cols) acc += mpz_class(mu[i]) * Gp.at(i, j);
        if (acc != 0) return false;
    }
    mpz_class combo = 0;
    for (size_t i = 0; i < As.rows; i++) combo += mpz_class(lambda[i]) * bs[i];
    for (size_t i = 0; i < Gp.rows; i++) combo += mpz_class(mu[i]) * hp[i];
    return combo + 1 + mpz_class(slack) == 0;
}

FarkasOutcome farkas_witness(const IntMat& As, std::span<const int64_t> bs, const IntMat& Gp,
                             std::span<const int64_t> hp, uint64_t bound_m) {
    if (As.cols != Gp.cols) throw Error("farkas: column mismatch");
    IntMat stacked = IntMat::vstack(As, Gp);
    std::vector<int64_t> rhs(bs.begin(), bs.end());
    rhs.insert(rhs.end(), hp.begin(), hp.end());

    FarkasOutcome out;
    auto lp = lp_feasible(stacked, rhs);
    if (lp.sat) {
        out.error = FarkasError::NoWitness;
        out.sat_point = std::move(lp.point);
        return out;
    }

    // scale the rational ray to integers by the lcm of denominators
    mpz_class lcm = 1;
    for (const auto& q : lp.ray) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> scaled(lp.ray.size());
    mpz_class gcd = 0;
    for (size_t i = 0; i < lp.ray.size(); i++) {
        scaled[i] = lp.ray[i].get_num() * (lcm / lp.ray[i].get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled[i].get_mpz_t());
    }
    // witness minimization: the combined rhs stays a negative integer after
    // dividing by the common gcd, so the slack remains >= 0
    if (gcd > 1)
        for (auto& v : scaled) v /= gcd;

    mpz_class combo = 0;
    for (size_t i = 0; i < scaled.size(); i++) combo += scaled[i] * rhs[i];
    mpz_class slack = -combo - 1;

    mpz_class bound = mpz_class(uint32_t(bound_m >> 32));
    bound <<= 32;
    bound += uint32_t(bound_m);
    for (const auto& v : scaled)
        if (v > bound) {
            out.error = FarkasError::BoundExceeded;
            return out;
        }
    if (slack < 0 || slack > bound) {
        out.error = FarkasError::BoundExceeded;
        return out;
    }

    out.witness.lambda.resize(As.rows);
    out.witness.mu.resize(Gp.rows);
    for (size_t i = 0; i < As.rows; i++) out.witness.lambda[i] = scaled[i].get_ui();
    for (size_t i = 0; i < Gp.rows; i++) out.witness.mu[i] = scaled[As.rows + i].get_ui();
    out.witness.slack = slack.get_ui();
    if (!out.witness.reverify(As, bs, Gp, hp))
        throw Error("farkas: witness fails exact re-substitution");
    return out;
}

}  // namespace zkmc
