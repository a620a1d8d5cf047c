#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "mfblocks/block_model.hpp"
#include "mfblocks/block_word.hpp"

namespace mfblocks {

using Matrix = Eigen::MatrixXcd;

// A concrete finite-n model: kind, row partition n_1 + ... + n_r = n, the
// per-label variance profile, and the RNG seed. Hermitian ensembles require
// a hermitian (symmetric) profile.
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::hermitian;
    std::vector<int> dims; // n_q per block
    CovarianceProfile profile;
    uint64_t seed = 0;

    int n() const;
    int r() const { return static_cast<int>(dims.size()); }
    void validate() const;
    int block_of_row(int i) const;                // 0-based row -> block in 1..r
    std::pair<int, int> range_of_block(int q) const; // [begin, end)
};

// Draws the full n x n Gaussian matrix Y(label) for one trial. Hermitian
// kind: independent complex entries above the diagonal with
// E|Y_ij|^2 = v_{p,q}/n, real diagonal with variance v_{q,q}/n, and
// Y_ji = conj(Y_ij). Ginibre kind: all entries independent complex with
// E|Y_ij|^2 = v_{p,q}/n. Deterministic in (seed, label, trial).
Matrix sample_matrix(const EnsembleSpec& spec, const std::string& label, uint64_t trial);

// S_{p,q} = D_p Y D_q as a full n x n matrix (zero outside the block).
Matrix block_extract(const EnsembleSpec& spec, const Matrix& y, int p, int q);

// T_{p,q} = S_{p,q} + S_{q,p} for p < q, S_{q,q} for p = q.
Matrix sym_block_extract(const EnsembleSpec& spec, const Matrix& y, int p, int q);

// Normalized partial trace tau_q(A) = (1/n_q) sum_{i in block q} A_ii.
std::complex<double> partial_trace(const EnsembleSpec& spec, const Matrix& a, int q);

struct MomentEstimate {
    std::complex<double> mean;
    double std_error = 0.0; // sample standard deviation / sqrt(trials)
    long trials = 0;
    int n = 0;
};

// Monte Carlo estimate of E tau_q(word) over independent trials. One matrix
// is drawn per distinct label per trial; stars conjugate-transpose the
// extracted block. Trials can be split across threads; per-trial values are
// deterministic, so only float-sum rounding depends on the thread count.
MomentEstimate estimate_moment(const EnsembleSpec& spec, const BlockWord& word, long trials, int threads = 1);

// Exact E tau_q(word) by Wick pairing over Gaussian entries, summing the
// delta-constrained index counts in closed form. Valid for any n; capped at
// word length <= 8 and n <= 16 to bound the pairing expansion.
Rational exact_moment_wick(const EnsembleSpec& spec, const BlockWord& word);

// Rectangular Gaussian product chain: X_j is dims[j-1] x dims[j] with
// independent complex (0, 1/n) entries, B = X_1 ... X_p, and the estimate is
// of (1/dims[0]) E Tr((B B*)^k).
MomentEstimate product_ensemble(const std::vector<int>& dims, int n, int k, long trials, uint64_t seed,
                                int threads = 1);

} // namespace mfblocks
