#include "zkmc/poly.hpp"

#include "zkmc/ops_counter.hpp"

namespace zkmc::poly {

Fr eval(std::span<const Fr> coeffs, const Fr& x) {
    Fr acc = Fr::zero();
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

std::vector<Fr> mul_naive(std::span<const Fr> a, std::span<const Fr> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Fr> out(a.size() + b.size() - 1, Fr::zero());
    ops::count_field(a.size() * b.size());
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

std::vector<Fr> from_roots(std::span<const Fr> roots) {
    if (roots.empty()) return {Fr::one()};
    // product tree keeps the factors balanced
    std::vector<std::vector<Fr>> level;
    level.reserve(roots.size());
    for (const Fr& r : roots) level.push_back({r.neg(), Fr::one()});
    while (level.size() > 1) {
        std::vector<std::vector<Fr>> next;
        next.reserve((level.size() + 1) / 2);
        for (size_t i = 0; i + 1 < level.size(); i += 2)
            next.push_back(mul_naive(level[i], level[i + 1]));
        if (level.size() & 1) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    return level[0];
}

std::vector<Fr> divide(std::span<const Fr> num, std::span<const Fr> monic_divisor,
                       std::vector<Fr>& remainder) {
    if (monic_divisor.empty() || monic_divisor.back() != Fr::one())
        throw Error("poly divide: divisor must be monic");
    size_t d = monic_divisor.size() - 1;
    std::vector<Fr> rem(num.begin(), num.end());
    if (rem.size() <= d) {
        remainder = std::move(rem);
        return {};
    }
    std::vector<Fr> q(rem.size() - d, Fr::zero());
    ops::count_field(q.size() * d);
    for (size_t i = q.size(); i-- > 0;) {
        Fr c = rem[i + d];
        q[i] = c;
        if (c.is_zero()) continue;
        for (size_t j = 0; j < d; j++) rem[i + j] = rem[i + j] - c * monic_divisor[j];
        rem[i + d] = Fr::zero();
    }
    rem.resize(d);
    remainder = std::move(rem);
    return q;
}

std::vector<Fr> interpolate(const EvalDomain& d, std::vector<Fr> values) {
    if (values.size() != d.size()) throw Error("interpolate: size mismatch");
    coset_ifft(values, d);
    return values;
}

}  // namespace zkmc::poly
