#pragma once

#include <map>
#include <string>
#include <vector>

#include "mfblocks/numeric.hpp"

namespace mfblocks {

// Asymptotic block layout: r diagonal blocks with dimension ratios d_q >= 0.
// When `normalized` is set the ratios are required to sum to 1 (partial
// traces then combine into a single normalized trace); otherwise the d_q are
// free nonnegative ratios relative to an external normalizer.
struct BlockStructure {
    int r = 0;
    std::vector<Rational> d; // size r, indexed by block 1..r as d[q-1]
    bool normalized = false;

    BlockStructure() = default;
    BlockStructure(std::vector<Rational> dims, bool normalized_state);

    const Rational& dim(int q) const; // q in 1..r
};

// Per-label variance matrices v_{p,q}(u) >= 0. `hermitian` asserts symmetry
// of every matrix (required for Hermitian ensembles).
struct CovarianceProfile {
    std::map<std::string, std::vector<std::vector<Rational>>> v; // label -> r x r
    bool hermitian = false;

    void validate(int r) const;
    const Rational& value(const std::string& label, int p, int q) const;
};

enum class BlockKind { balanced, unbalanced, evanescent };

// b_{p,q}(u) = d_p * v_{p,q}(u) for one label's variance matrix.
std::vector<std::vector<Rational>> scaled_covariance(const BlockStructure& s,
                                                     const std::vector<std::vector<Rational>>& v);

// Zero-pattern of (d_p, d_q): both positive -> balanced, exactly one zero ->
// unbalanced, both zero -> evanescent.
BlockKind classify_block(const BlockStructure& s, int p, int q);

// Splits {1..n} into consecutive index ranges, one per block. Blocks with
// d_q > 0 share n minus the evanescent rows proportionally by largest
// remainder (ties go to the lowest block index); blocks with d_q = 0 get
// max(1, floor(n^alpha)) rows. Every block must end up with >= 1 row.
std::vector<int> finite_partition(int n, const BlockStructure& s, double alpha = 0.5);

// Half-open row ranges [begin, end) per block for a given partition.
std::vector<std::pair<int, int>> block_ranges(const std::vector<int>& dims);

} // namespace mfblocks
