#include "mfblocks/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace mfblocks {

BigInt catalan(int k) {
    if (k < 0) throw std::invalid_argument("catalan: k must be >= 0");
    return binomial(2L * k, k) / (k + 1);
}

namespace {

// Visit admissible exponent tuples (j_0..j_p) with sum p*k+1, 0 <= j_i <= k.
template <class Emit>
void fuss_narayana_terms(int k, int p, Emit&& emit) {
    if (k < 1 || p < 1) throw std::invalid_argument("fuss_narayana: k and p must be >= 1");
    std::vector<int> j(static_cast<size_t>(p) + 1, 0);
    auto rec = [&](auto&& self, int index, long remaining) -> void {
        if (index == p) {
            if (remaining < 0 || remaining > k) return;
            j[static_cast<size_t>(p)] = static_cast<int>(remaining);
            BigInt prod = 1;
            for (int i = 0; i <= p; ++i) prod *= binomial(k, j[static_cast<size_t>(i)]);
            emit(j, Rational(prod, k));
            return;
        }
        long lo = std::max(0L, remaining - static_cast<long>(k) * (p - index));
        long hi = std::min(static_cast<long>(k), remaining);
        for (long v = lo; v <= hi; ++v) {
            j[static_cast<size_t>(index)] = static_cast<int>(v);
            self(self, index + 1, remaining - v);
        }
    };
    rec(rec, 0, static_cast<long>(p) * k + 1);
}

} // namespace

Poly fuss_narayana_multi(int k, int p) {
    Poly acc;
    fuss_narayana_terms(k, p, [&](const std::vector<int>& j, const Rational& coeff) {
        if (j[0] == 0) return; // binom(k,0) terms with j_0 = 0 would need d_0^{-1}; they never arise (sum forces j_0 >= 1)
        Poly term(coeff);
        for (unsigned e = 0; e + 1 < static_cast<unsigned>(j[0]); ++e) term *= Poly::var(0);
        for (size_t i = 1; i < j.size(); ++i)
            for (int e = 0; e < j[i]; ++e) term *= Poly::var(i);
        acc += term;
    });
    return acc;
}

Rational fuss_narayana_multi_at(int k, int p, std::span<const Rational> d) {
    if (static_cast<int>(d.size()) != p + 1)
        throw std::invalid_argument("fuss_narayana_multi_at: need exactly p+1 arguments");
    Rational acc = 0;
    fuss_narayana_terms(k, p, [&](const std::vector<int>& j, const Rational& coeff) {
        if (j[0] == 0) return;
        Rational term = coeff;
        for (int e = 0; e + 1 < j[0]; ++e) term *= d[0];
        for (size_t i = 1; i < j.size(); ++i)
            for (int e = 0; e < j[i]; ++e) term *= d[i];
        acc += term;
    });
    return acc;
}

Rational mp_moment(int k, const Rational& t) { return narayana<Rational>(k, t); }

bool is_noncrossing(const NCPartition& p) {
    if (p.n < 1) return false;
    const size_t n = static_cast<size_t>(p.n);
    std::vector<int> owner(n + 1, -1);
    std::vector<int> lo(p.blocks.size()), hi(p.blocks.size());
    for (size_t b = 0; b < p.blocks.size(); ++b) {
        if (p.blocks[b].empty()) return false;
        lo[b] = *std::min_element(p.blocks[b].begin(), p.blocks[b].end());
        hi[b] = *std::max_element(p.blocks[b].begin(), p.blocks[b].end());
        for (int x : p.blocks[b]) {
            if (x < 1 || x > p.n || owner[static_cast<size_t>(x)] != -1) return false;
            owner[static_cast<size_t>(x)] = static_cast<int>(b);
        }
    }
    for (size_t x = 1; x <= n; ++x)
        if (owner[x] == -1) return false;
    // A block must sit on top of the open-block stack whenever one of its
    // later elements appears, and it closes exactly at its maximum.
    std::vector<int> stack;
    for (int x = 1; x <= p.n; ++x) {
        int b = owner[static_cast<size_t>(x)];
        if (x == lo[static_cast<size_t>(b)])
            stack.push_back(b);
        else if (stack.empty() || stack.back() != b)
            return false;
        if (x == hi[static_cast<size_t>(b)]) stack.pop_back();
    }
    return stack.empty();
}

namespace {

using Blocks = std::vector<std::vector<int>>;
using Cont = std::function<void()>;

void enum_segment(const std::vector<int>& elems, Blocks& acc, const Cont& done);

void partition_segments(const std::vector<std::vector<int>>& segments, size_t idx, Blocks& acc, const Cont& done) {
    if (idx == segments.size()) {
        done();
        return;
    }
    enum_segment(segments[idx], acc, [&segments, idx, &acc, &done] { partition_segments(segments, idx + 1, acc, done); });
}

// Choose the rest of the block containing elems[0]; elements skipped between
// chosen members can only pair among themselves, so each gap is an
// independent segment.
void enum_first_block(const std::vector<int>& elems, size_t next, std::vector<int>& block,
                      std::vector<std::vector<int>>& segments, Blocks& acc, const Cont& done) {
    {
        segments.emplace_back(elems.begin() + static_cast<long>(next), elems.end());
        acc.push_back(block);
        partition_segments(segments, 0, acc, done);
        acc.pop_back();
        segments.pop_back();
    }
    for (size_t pick = next; pick < elems.size(); ++pick) {
        segments.emplace_back(elems.begin() + static_cast<long>(next), elems.begin() + static_cast<long>(pick));
        block.push_back(elems[pick]);
        enum_first_block(elems, pick + 1, block, segments, acc, done);
        block.pop_back();
        segments.pop_back();
    }
}

void enum_segment(const std::vector<int>& elems, Blocks& acc, const Cont& done) {
    if (elems.empty()) {
        done();
        return;
    }
    std::vector<int> block{elems[0]};
    std::vector<std::vector<int>> segments;
    enum_first_block(elems, 1, block, segments, acc, done);
}

} // namespace

void for_each_nc(int n, const std::function<void(const NCPartition&)>& fn) {
    if (n < 1 || n > kMaxNC) throw std::invalid_argument("for_each_nc: n outside 1.." + std::to_string(kMaxNC));
    std::vector<int> elems(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) elems[static_cast<size_t>(i)] = i + 1;
    Blocks acc;
    enum_segment(elems, acc, [&] {
        NCPartition p{n, acc};
        std::sort(p.blocks.begin(), p.blocks.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
        fn(p);
    });
}

std::vector<NCPartition> enumerate_nc(int n) {
    std::vector<NCPartition> out;
    for_each_nc(n, [&](const NCPartition& p) { out.push_back(p); });
    return out;
}

NCPartition kreweras(const NCPartition& p) {
    if (!is_noncrossing(p)) throw std::invalid_argument("kreweras: input is not a non-crossing partition");
    const int n = p.n;
    // Blocks as ascending cycles give a permutation pi; the cycles of
    // pi^{-1} composed with the long cycle (1 2 ... n) are the complement.
    std::vector<int> perm(static_cast<size_t>(n) + 1, 0);
    for (const auto& block : p.blocks) {
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size(); ++i)
            perm[static_cast<size_t>(sorted[i])] = sorted[(i + 1) % sorted.size()];
    }
    std::vector<int> inv(static_cast<size_t>(n) + 1, 0);
    for (int x = 1; x <= n; ++x) inv[static_cast<size_t>(perm[static_cast<size_t>(x)])] = x;
    auto gamma = [n](int x) { return x == n ? 1 : x + 1; };
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    NCPartition out;
    out.n = n;
    for (int x = 1; x <= n; ++x) {
        if (seen[static_cast<size_t>(x)]) continue;
        std::vector<int> cycle;
        int y = x;
        while (!seen[static_cast<size_t>(y)]) {
            seen[static_cast<size_t>(y)] = true;
            cycle.push_back(y);
            y = inv[static_cast<size_t>(gamma(y))];
        }
        std::sort(cycle.begin(), cycle.end());
        out.blocks.push_back(std::move(cycle));
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return out;
}

Rational jacobi_moment(const JacobiParams& jp, int k) {
    if (k < 0 || k > 64) throw std::invalid_argument("jacobi_moment: k outside 0..64");
    if (jp.beta1 <= 0 || jp.beta2 <= 0) throw std::invalid_argument("jacobi_moment: betas must be positive");
    // Walk on the matrix diagonally similar to J with upper entries 1 and
    // lower entries beta; an up-down excursion then weighs beta exactly once,
    // so <e_0, J^k e_0> stays rational.
    std::vector<Rational> v(static_cast<size_t>(k) + 2, Rational(0));
    v[0] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<Rational> w(v.size(), Rational(0));
        for (size_t level = 0; level < v.size(); ++level) {
            if (v[level] == 0) continue;
            const Rational& alpha = level == 0 ? jp.alpha1 : jp.alpha2;
            if (alpha != 0) w[level] += alpha * v[level];
            if (level + 1 < w.size()) {
                const Rational& beta = level == 0 ? jp.beta1 : jp.beta2;
                w[level + 1] += beta * v[level];
            }
            if (level > 0) w[level - 1] += v[level];
        }
        v = std::move(w);
    }
    return v[0];
}

double mp_quadrature_moment(int k, double t) {
    if (k < 1 || k > 64) throw std::invalid_argument("mp_quadrature_moment: k outside 1..64");
    if (t <= 0) throw std::invalid_argument("mp_quadrature_moment: t must be positive");
    const double a = (1.0 - std::sqrt(t)) * (1.0 - std::sqrt(t));
    const double b = (1.0 + std::sqrt(t)) * (1.0 + std::sqrt(t));
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    // x = c + h*cos(theta) turns sqrt((x-a)(b-x))/(2*pi*x) * x^k into a
    // smooth integrand; the possible atom at 0 contributes nothing for k >= 1.
    auto integrand = [&](double theta) {
        double x = c + h * std::cos(theta);
        double s = std::sin(theta);
        return std::pow(x, k - 1) * s * s;
    };
    double error = 0.0;
    double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, 0.0, std::numbers::pi, 12, 1e-12, &error);
    value *= h * h / (2.0 * std::numbers::pi);
    if (!std::isfinite(value) || error > 1e-8 * (std::abs(value) + 1.0))
        throw std::runtime_error("mp_quadrature_moment: quadrature failed to converge");
    return value;
}

} // namespace mfblocks
