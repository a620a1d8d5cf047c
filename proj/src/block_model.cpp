#include "mfblocks/block_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfblocks {

BlockStructure::BlockStructure(std::vector<Rational> dims, bool normalized_state)
    : r(static_cast<int>(dims.size())), d(std::move(dims)), normalized(normalized_state) {
    if (r == 0) throw std::invalid_argument("BlockStructure: needs at least one block");
    Rational sum = 0;
    for (const auto& x : d) {
        if (x < 0) throw std::invalid_argument("BlockStructure: negative dimension ratio");
        sum += x;
    }
    if (normalized && sum != 1)
        throw std::invalid_argument("BlockStructure: normalized ratios must sum to 1, got " + to_string(sum));
}

const Rational& BlockStructure::dim(int q) const {
    if (q < 1 || q > r) throw std::out_of_range("BlockStructure: block index out of range");
    return d[static_cast<size_t>(q - 1)];
}

void CovarianceProfile::validate(int r) const {
    for (const auto& [label, matrix] : v) {
        if (static_cast<int>(matrix.size()) != r)
            throw std::invalid_argument("CovarianceProfile: matrix for label '" + label + "' is not " +
                                        std::to_string(r) + "x" + std::to_string(r));
        for (const auto& row : matrix) {
            if (static_cast<int>(row.size()) != r)
                throw std::invalid_argument("CovarianceProfile: ragged matrix for label '" + label + "'");
            for (const auto& x : row)
                if (x < 0) throw std::invalid_argument("CovarianceProfile: negative variance for label '" + label + "'");
        }
        if (hermitian) {
            for (int p = 0; p < r; ++p)
                for (int q = 0; q < r; ++q)
                    if (matrix[p][q] != matrix[q][p])
                        throw std::invalid_argument("CovarianceProfile: hermitian profile requires symmetric v, label '" +
                                                    label + "'");
        }
    }
}

const Rational& CovarianceProfile::value(const std::string& label, int p, int q) const {
    auto it = v.find(label);
    if (it == v.end()) throw std::invalid_argument("CovarianceProfile: unknown label '" + label + "'");
    const auto& matrix = it->second;
    if (p < 1 || q < 1 || p > static_cast<int>(matrix.size()) || q > static_cast<int>(matrix.size()))
        throw std::out_of_range("CovarianceProfile: block index out of range");
    return matrix[static_cast<size_t>(p - 1)][static_cast<size_t>(q - 1)];
}

std::vector<std::vector<Rational>> scaled_covariance(const BlockStructure& s,
                                                     const std::vector<std::vector<Rational>>& v) {
    if (static_cast<int>(v.size()) != s.r) throw std::invalid_argument("scaled_covariance: size mismatch");
    std::vector<std::vector<Rational>> b(v.size());
    for (int p = 0; p < s.r; ++p) {
        if (static_cast<int>(v[p].size()) != s.r) throw std::invalid_argument("scaled_covariance: ragged matrix");
        b[p].reserve(v[p].size());
        for (const auto& x : v[p]) b[p].push_back(s.d[p] * x);
    }
    return b;
}

BlockKind classify_block(const BlockStructure& s, int p, int q) {
    bool dp = s.dim(p) > 0, dq = s.dim(q) > 0;
    if (dp && dq) return BlockKind::balanced;
    if (dp || dq) return BlockKind::unbalanced;
    return BlockKind::evanescent;
}

std::vector<int> finite_partition(int n, const BlockStructure& s, double alpha) {
    if (n < 1) throw std::invalid_argument("finite_partition: n must be positive");
    if (alpha <= 0.0 || alpha >= 1.0) throw std::invalid_argument("finite_partition: alpha must be in (0,1)");

    Rational positive_sum = 0;
    for (const auto& x : s.d) positive_sum += x;
    if (positive_sum == 0) throw std::invalid_argument("finite_partition: all ratios are zero");

    std::vector<int> dims(static_cast<size_t>(s.r), 0);
    long remaining = n;
    for (int q = 0; q < s.r; ++q) {
        if (s.d[q] == 0) {
            int rows = std::max(1, static_cast<int>(std::floor(std::pow(static_cast<double>(n), alpha) + 1e-9)));
            dims[q] = rows;
            remaining -= rows;
        }
    }

    int positive_blocks = 0;
    for (const auto& x : s.d)
        if (x > 0) ++positive_blocks;
    if (remaining < positive_blocks)
        throw std::invalid_argument("finite_partition: n too small to give every block at least one row");

    // Largest-remainder apportionment of the remaining rows, forcing a floor
    // of one row per positive block; ties go to the lowest block index.
    std::vector<Rational> ideal(static_cast<size_t>(s.r), Rational(0));
    long assigned = 0;
    for (int q = 0; q < s.r; ++q) {
        if (s.d[q] == 0) continue;
        ideal[q] = Rational(remaining) * s.d[q] / positive_sum;
        BigInt fl = boost::multiprecision::numerator(ideal[q]) / boost::multiprecision::denominator(ideal[q]);
        int base = std::max(1, fl.convert_to<int>());
        dims[q] = base;
        assigned += base;
    }
    if (assigned > remaining)
        throw std::invalid_argument("finite_partition: n too small to give every block at least one row");

    long seats = remaining - assigned;
    std::vector<int> order;
    for (int q = 0; q < s.r; ++q)
        if (s.d[q] > 0) order.push_back(q);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        Rational ra = ideal[a] - dims[a], rb = ideal[b] - dims[b];
        return ra > rb;
    });
    for (long i = 0; i < seats; ++i) dims[order[i % order.size()]] += 1;

    long total = 0;
    for (int x : dims) total += x;
    if (total != n) throw std::logic_error("finite_partition: internal accounting error");
    return dims;
}

std::vector<std::pair<int, int>> block_ranges(const std::vector<int>& dims) {
    std::vector<std::pair<int, int>> ranges;
    ranges.reserve(dims.size());
    int offset = 0;
    for (int d : dims) {
        ranges.emplace_back(offset, offset + d);
        offset += d;
    }
    return ranges;
}

} // namespace mfblocks
