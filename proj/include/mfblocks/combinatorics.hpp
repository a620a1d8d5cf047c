#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mfblocks/numeric.hpp"
#include "mfblocks/polynomial.hpp"

namespace mfblocks {

inline constexpr int kMaxNC = 12; // partition enumeration cap

// C_k = binom(2k, k) / (k+1).
BigInt catalan(int k);

// Multivariate Fuss-Narayana polynomial in d_0..d_p (variables 0..p):
//   P_k = sum over j_0+...+j_p = p*k+1, 0 <= j_i <= k of
//         (1/k) * prod_i binom(k, j_i) * d_0^(j_0 - 1) * d_1^j_1 * ... * d_p^j_p
// Requires k >= 1, p >= 1.
Poly fuss_narayana_multi(int k, int p);

// P_k evaluated at rational arguments d_0..d_p (d.size() == p+1).
Rational fuss_narayana_multi_at(int k, int p, std::span<const Rational> d);

// Narayana polynomial N_k(t) = sum_j (1/j) binom(k-1, j-1) binom(k, j-1) t^j.
template <class R>
R narayana(int k, const R& t);

// k-th moment of the Marchenko-Pastur law with ratio t: equals N_k(t).
Rational mp_moment(int k, const Rational& t);

// Fuss-Narayana polynomial of order p:
//   Q_k(t) = sum_j (1/j) binom(k-1, j-1) binom(p*k, j-1) t^j.
template <class R>
R fuss_narayana_q(int k, int p, const R& t);

// Non-crossing partition of {1..n}; blocks hold sorted elements and are
// ordered by least element.
struct NCPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    bool operator==(const NCPartition&) const = default;
};

bool is_noncrossing(const NCPartition& p);

// All non-crossing partitions of {1..n}, 1 <= n <= kMaxNC, in enumeration
// order; |NC(n)| = catalan(n).
std::vector<NCPartition> enumerate_nc(int n);

// Visitor form of the enumeration (avoids materializing large lists).
void for_each_nc(int n, const std::function<void(const NCPartition&)>& fn);

// Kreweras complement via the cycle map: blocks of pi as ascending cycles
// composed with the long cycle (1 2 ... n); |pi| + |kreweras(pi)| = n + 1.
NCPartition kreweras(const NCPartition& p);

// Free-moment/free-cumulant transforms over moment sequences m[0..K] with
// m[0] = 1 (index = order). Generic over a commutative ring R (rationals or
// polynomials) so identities can be checked formally.
template <class R>
std::vector<R> free_cumulants_to_moments(std::span<const R> kappa);

template <class R>
std::vector<R> moments_to_free_cumulants(std::span<const R> m);

// Moments of the free multiplicative convolution:
//   m_n(mu x nu) = sum over pi in NC(n) of kappa_pi(mu) * m_{Kr(pi)}(nu)
// for n = 0..K; inputs are moment sequences with m[0] = 1.
template <class R>
std::vector<R> boxtimes_moments(std::span<const R> mu_moments, std::span<const R> nu_moments, int K);

// Jacobi parameters with diagonal (alpha1, alpha2, alpha2, ...) and
// off-diagonal squares (beta1, beta2, beta2, ...); betas must be positive.
struct JacobiParams {
    Rational alpha1, alpha2;
    Rational beta1, beta2;
};

// m_k = <e_0, J^k e_0> computed by an exact tridiagonal walk.
Rational jacobi_moment(const JacobiParams& jp, int k);

// k-th moment of the Marchenko-Pastur density with ratio t > 0 by
// Gauss-Kronrod quadrature after the substitution x = c + h*cos(theta)
// (the atom at 0 contributes nothing for k >= 1). Throws on
// non-convergence.
double mp_quadrature_moment(int k, double t);

// --- template definitions ---

template <class R>
R narayana(int k, const R& t) {
    if (k < 1) throw std::invalid_argument("narayana: k must be >= 1");
    R acc(0);
    for (int j = 1; j <= k; ++j) {
        Rational c(binomial(k - 1, j - 1) * binomial(k, j - 1), j);
        R term(c);
        for (int e = 0; e < j; ++e) term *= t;
        acc += term;
    }
    return acc;
}

template <class R>
R fuss_narayana_q(int k, int p, const R& t) {
    if (k < 1 || p < 1) throw std::invalid_argument("fuss_narayana_q: k and p must be >= 1");
    R acc(0);
    for (int j = 1; j <= k; ++j) {
        Rational c(binomial(k - 1, j - 1) * binomial(static_cast<long>(p) * k, j - 1), j);
        R term(c);
        for (int e = 0; e < j; ++e) term *= t;
        acc += term;
    }
    return acc;
}

template <class R>
std::vector<R> free_cumulants_to_moments(std::span<const R> kappa) {
    const int K = static_cast<int>(kappa.size()) - 1;
    if (K < 0 || K > kMaxNC) throw std::invalid_argument("free_cumulants_to_moments: order out of range");
    std::vector<R> m(static_cast<size_t>(K) + 1, R(0));
    m[0] = R(1);
    for (int n = 1; n <= K; ++n) {
        R acc(0);
        for_each_nc(n, [&](const NCPartition& pi) {
            R prod(1);
            for (const auto& block : pi.blocks) prod *= kappa[block.size()];
            acc += prod;
        });
        m[n] = acc;
    }
    return m;
}

template <class R>
std::vector<R> moments_to_free_cumulants(std::span<const R> m) {
    const int K = static_cast<int>(m.size()) - 1;
    if (K < 0 || K > kMaxNC) throw std::invalid_argument("moments_to_free_cumulants: order out of range");
    if (!(m[0] == R(1))) throw std::invalid_argument("moments_to_free_cumulants: m[0] must be 1");
    std::vector<R> kappa(static_cast<size_t>(K) + 1, R(0));
    for (int n = 1; n <= K; ++n) {
        R rest(0);
        for_each_nc(n, [&](const NCPartition& pi) {
            if (pi.blocks.size() == 1) return; // the full block carries kappa_n itself
            R prod(1);
            for (const auto& block : pi.blocks) prod *= kappa[block.size()];
            rest += prod;
        });
        kappa[n] = m[n] - rest;
    }
    return kappa;
}

template <class R>
std::vector<R> boxtimes_moments(std::span<const R> mu_moments, std::span<const R> nu_moments, int K) {
    if (K < 0 || K > 10) throw std::invalid_argument("boxtimes_moments: K out of range");
    if (static_cast<int>(mu_moments.size()) <= K || static_cast<int>(nu_moments.size()) <= K)
        throw std::invalid_argument("boxtimes_moments: need moments up to order K");
    std::vector<R> kappa = moments_to_free_cumulants(mu_moments.subspan(0, static_cast<size_t>(K) + 1));
    std::vector<R> out(static_cast<size_t>(K) + 1, R(0));
    out[0] = R(1);
    for (int n = 1; n <= K; ++n) {
        R acc(0);
        for_each_nc(n, [&](const NCPartition& pi) {
            R prod(1);
            for (const auto& block : pi.blocks) prod *= kappa[block.size()];
            NCPartition kr = kreweras(pi);
            for (const auto& block : kr.blocks) prod *= nu_moments[block.size()];
            acc += prod;
        });
        out[n] = acc;
    }
    return out;
}

} // namespace mfblocks
