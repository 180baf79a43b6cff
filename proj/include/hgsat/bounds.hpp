#pragma once

#include <stdexcept>
#include <string>

#include "hgsat/cliques.hpp"
#include "hgsat/constructions.hpp"
#include "hgsat/graph.hpp"
#include "hgsat/hypergraph.hpp"
#include "hgsat/rational.hpp"

namespace hgsat {

/// Positive co-degree threshold: a saturated 3-graph with minimum positive
/// co-degree above f(l)*n is l-partite; 2/7 at l = 3, (3l-7)/(3l-1) beyond.
inline Rat f_threshold(int l) {
    if (l < 3) throw std::invalid_argument("f_threshold: need l >= 3");
    if (l == 3) return Rat(2, 7);
    return Rat(3 * l - 7, 3 * l - 1);
}

/// Minimum-degree threshold (3l-4)/(3l-1) above which a K_{l+1}-free graph is
/// l-partite.
inline Rat aes_threshold(int l) {
    if (l < 2) throw std::invalid_argument("aes_threshold: need l >= 2");
    return Rat(3 * l - 4, 3 * l - 1);
}

/// Explicit degree-stability slack
/// C(l-1,r-1) * (1/l^{r-1} - ((3l-4)/(3l^2-4l+1))^{r-1}), exact.
inline Rat degree_stability_epsilon(int l, int r) {
    if (r < 3 || l < r) throw std::invalid_argument("degree_stability_epsilon: need l >= r >= 3");
    Rat inner = Rat(1, checked_i64(checked_pow_u128(l, r - 1, "epsilon"), "epsilon")) -
                rat_pow(Rat(3 * l - 4, static_cast<i64>(3) * l * l - 4 * l + 1), r - 1);
    return Rat(binomial(l - 1, r - 1)) * inner;
}

/// Small-vertex slack 1 / (10^5 l^3 (3r-4)^3).
inline Rat eta_value(int l, int r) {
    if (r < 3 || l < r) throw std::invalid_argument("eta_value: need l >= r >= 3");
    i128 d = 100000;
    d *= static_cast<i128>(l) * l * l;
    i128 c = 3 * r - 4;
    d *= c * c * c;
    return Rat(1, checked_i64(d, "eta_value"));
}

/// Bound on the number of peeled vertices, 10^6 l^3 (3r-4)^3 * eps * n.
inline Rat peel_budget(int l, int r, const Rat& eps, long long n) {
    if (r < 3 || l < r) throw std::invalid_argument("peel_budget: need l >= r >= 3");
    i128 coef = 1000000;
    coef *= static_cast<i128>(l) * l * l;
    i128 c = 3 * r - 4;
    coef *= c * c * c;
    return Rat(checked_i64(coef, "peel_budget")) * eps * Rat(n);
}

enum class ThresholdKind { f, aes, epsilon, eta };

struct Threshold {
    ThresholdKind kind;
    int l = 0;
    int r = 0;
    Rat value;
};

inline Threshold make_threshold(ThresholdKind kind, int l, int r = 0) {
    switch (kind) {
        case ThresholdKind::f: return {kind, l, 0, f_threshold(l)};
        case ThresholdKind::aes: return {kind, l, 0, aes_threshold(l)};
        case ThresholdKind::epsilon: return {kind, l, r, degree_stability_epsilon(l, r)};
        case ThresholdKind::eta: return {kind, l, r, eta_value(l, r)};
    }
    throw std::logic_error("make_threshold: unknown kind");
}

/// Instance check of the degree stability implication: a K_{l+1}-free graph
/// with min degree strictly above (3l-4)/(3l-1)*n must be l-partite. A false
/// return witnesses a counterexample to the implication.
inline bool verify_aes_instance(const Graph& g, int l) {
    if (l < 2) throw std::invalid_argument("verify_aes_instance: need l >= 2");
    const long long n = g.order();
    const long long d = g.min_degree();
    // delta > (3l-4)/(3l-1) * n, cross multiplied
    if (d * (3 * l - 1) <= (3 * l - 4) * n) return true;
    if (find_kt(g, l + 1)) return true;
    return proper_coloring(g, l).has_value();
}

/// Exact verification of t_r(n,l) - C(l,r)(n/l)^r >= -l^2 r^{r+1} n^{r-2}.
inline bool turan_lower_bound_check(long long n, int l, int r) {
    if (r < 2 || l < r) throw std::invalid_argument("turan_lower_bound_check: need l >= r >= 2");
    // multiply through by l^r:  t*l^r - C(l,r)*n^r >= -l^{r+2} r^{r+1} n^{r-2}
    i128 t = turan_count(static_cast<int>(n), l, r);
    i128 lr = 1;
    for (int i = 0; i < r; ++i) lr *= l;
    i128 nr = 1;
    for (int i = 0; i < r; ++i) nr *= n;
    i128 lhs = t * lr - static_cast<i128>(binomial(l, r)) * nr;
    i128 rr = 1;
    for (int i = 0; i < r + 1; ++i) rr *= r;
    i128 nr2 = 1;
    for (int i = 0; i < r - 2; ++i) nr2 *= n;
    i128 rhs = -(lr * l * l) * rr * nr2;
    return lhs >= rhs;
}

/// |E_1| = l^2 + l - k^2/2 - k/2 - 1: the edge count of W_{l,k}.
inline long long e1_size(int l, int k) {
    if (l < 2 || k < 0 || k > l - 2) throw std::invalid_argument("e1_size: need 0 <= k <= l-2");
    return static_cast<long long>(l) * l + l - (static_cast<long long>(k) * k + k) / 2 - 1;
}

/// |E_2| = 2lk - 2k^2 + k: wheel edges with exactly one end in the shared set.
inline long long e2_size(int l, int k) {
    if (l < 2 || k < 0 || k > l - 2) throw std::invalid_argument("e2_size: need 0 <= k <= l-2");
    return 2LL * l * k - 2LL * k * k + k;
}

/// Exact check of  edges >= t_r(n,l) - C * n^{r-1+1/l}  where C is the
/// tightness coefficient C(l,r)cr/l^r + 4c^{l+1}C(l+1,2)C(l-1,r-1)/l^{r-2} + 1
/// at c = s / n^{1/l}. Substituting c leaves one irrational term, handled by
/// an l-th power comparison; everything else is exact rational arithmetic.
inline bool pss_lift_lower_bound_check(long long n, int l, int r, int s, long long edges) {
    if (r < 2 || l < r || s < 1 || n < 1)
        throw std::invalid_argument("pss_lift_lower_bound_check: bad parameters");
    i128 nr1 = 1;  // n^{r-1}
    for (int i = 0; i < r - 1; ++i) nr1 *= n;
    i128 nr2 = 1;  // n^{r-2}
    for (int i = 0; i < r - 2; ++i) nr2 *= n;
    i128 lr = 1;  // l^r
    for (int i = 0; i < r; ++i) lr *= l;
    i128 sl1 = 1;  // s^{l+1}
    for (int i = 0; i < l + 1; ++i) sl1 *= s;

    // term1 = C(l,r) r s n^{r-1} / l^r ; term2 = 4 C(l+1,2) C(l-1,r-1) s^{l+1} n^{r-2} / l^{r-2}
    Rat term1 = Rat::from_i128(static_cast<i128>(binomial(l, r)) * r * s * nr1, lr);
    Rat term2 = Rat::from_i128(
        static_cast<i128>(4) * binomial(l + 1, 2) * binomial(l - 1, r - 1) * sl1 * nr2,
        lr / (static_cast<i128>(l) * l));
    Rat lhs = Rat(turan_count(static_cast<int>(n), l, r)) - term1 - term2 - Rat(edges);
    // edges >= t - term1 - term2 - n^{r-1+1/l}  <=>  lhs <= n^{r-1+1/l}
    if (lhs.num <= 0) return true;
    // (p/q)^l <= n^{(r-1)l+1}
    u128 pl = checked_pow_u128(static_cast<u128>(lhs.num), l, "pss_lift_lower_bound_check");
    u128 ql = checked_pow_u128(static_cast<u128>(lhs.den), l, "pss_lift_lower_bound_check");
    u128 npow = checked_pow_u128(static_cast<u128>(n), (r - 1) * l + 1,
                                 "pss_lift_lower_bound_check");
    return pl <= checked_mul_u128(npow, ql, "pss_lift_lower_bound_check");
}

} // namespace hgsat
