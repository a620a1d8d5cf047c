#include "mfblocks/rmt_sim.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "mfblocks/rng.hpp"

namespace mfblocks {

int EnsembleSpec::n() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

void EnsembleSpec::validate() const {
    if (dims.empty())
        throw std::invalid_argument("ensemble needs at least one block");
    for (int d : dims)
        if (d < 1)
            throw std::invalid_argument("every block needs at least one row");
    profile.validate(r());
    if (kind == EnsembleKind::hermitian && !profile.hermitian)
        throw std::invalid_argument("hermitian ensemble requires a symmetric covariance profile");
}

int EnsembleSpec::block_of_row(int i) const {
    int acc = 0;
    for (int q = 0; q < r(); ++q) {
        acc += dims[q];
        if (i < acc)
            return q + 1;
    }
    throw std::out_of_range("row index outside the matrix");
}

std::pair<int, int> EnsembleSpec::range_of_block(int q) const {
    if (q < 1 || q > r())
        throw std::out_of_range("block index outside 1..r");
    int begin = 0;
    for (int i = 0; i + 1 < q; ++i)
        begin += dims[i];
    return {begin, begin + dims[q - 1]};
}

Matrix sample_matrix(const EnsembleSpec& spec, const std::string& label, uint64_t trial) {
    spec.validate();
    const int n = spec.n();
    const int r = spec.r();
    const uint64_t stream = rng::fnv1a(label);

    // Per-block-pair standard deviations. Off-diagonal complex entries split
    // the variance v/n evenly between real and imaginary parts.
    std::vector<std::vector<double>> sd_half(r, std::vector<double>(r));
    std::vector<double> sd_diag(r);
    for (int p = 1; p <= r; ++p) {
        for (int q = 1; q <= r; ++q) {
            double v = to_double(spec.profile.value(label, p, q));
            sd_half[p - 1][q - 1] = std::sqrt(v / (2.0 * n));
            if (p == q)
                sd_diag[p - 1] = std::sqrt(v / n);
        }
    }

    std::vector<int> blk(n);
    for (int i = 0; i < n; ++i)
        blk[i] = spec.block_of_row(i);

    Matrix y(n, n);
    if (spec.kind == EnsembleKind::hermitian) {
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                auto g = rng::normals(rng::entry_key(spec.seed, stream, trial,
                                                     static_cast<uint64_t>(i) * n + j));
                if (i == j) {
                    y(i, i) = std::complex<double>(g.z1 * sd_diag[blk[i] - 1], 0.0);
                } else {
                    double s = sd_half[blk[i] - 1][blk[j] - 1];
                    y(i, j) = std::complex<double>(g.z1 * s, g.z2 * s);
                    y(j, i) = std::conj(y(i, j));
                }
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                auto g = rng::normals(rng::entry_key(spec.seed, stream, trial,
                                                     static_cast<uint64_t>(i) * n + j));
                double s = sd_half[blk[i] - 1][blk[j] - 1];
                y(i, j) = std::complex<double>(g.z1 * s, g.z2 * s);
            }
        }
    }
    return y;
}

Matrix block_extract(const EnsembleSpec& spec, const Matrix& y, int p, int q) {
    const int n = spec.n();
    auto [rb, re] = spec.range_of_block(p);
    auto [cb, ce] = spec.range_of_block(q);
    Matrix s = Matrix::Zero(n, n);
    s.block(rb, cb, re - rb, ce - cb) = y.block(rb, cb, re - rb, ce - cb);
    return s;
}

Matrix sym_block_extract(const EnsembleSpec& spec, const Matrix& y, int p, int q) {
    if (p > q)
        throw std::invalid_argument("symmetrized block needs p <= q");
    if (p == q)
        return block_extract(spec, y, q, q);
    return block_extract(spec, y, p, q) + block_extract(spec, y, q, p);
}

std::complex<double> partial_trace(const EnsembleSpec& spec, const Matrix& a, int q) {
    auto [b, e] = spec.range_of_block(q);
    std::complex<double> acc = 0.0;
    for (int i = b; i < e; ++i)
        acc += a(i, i);
    return acc / static_cast<double>(e - b);
}

namespace {

std::complex<double> one_trial(const EnsembleSpec& spec, const BlockWord& word, uint64_t trial) {
    std::map<std::string, Matrix> cache;
    const int n = spec.n();
    Matrix prod = Matrix::Identity(n, n);
    for (const BlockTerm& t : word.terms) {
        auto it = cache.find(t.label);
        if (it == cache.end())
            it = cache.emplace(t.label, sample_matrix(spec, t.label, trial)).first;
        Matrix blk = (t.symbol == 'T') ? sym_block_extract(spec, it->second, t.p, t.q)
                                       : block_extract(spec, it->second, t.p, t.q);
        if (t.star)
            prod = prod * blk.adjoint();
        else
            prod = prod * blk;
    }
    return partial_trace(spec, prod, word.sector);
}

MomentEstimate summarize(const std::vector<std::complex<double>>& values, int n) {
    const long t = static_cast<long>(values.size());
    std::complex<double> sum = 0.0;
    for (auto v : values)
        sum += v;
    std::complex<double> mean = sum / static_cast<double>(t);
    double ss = 0.0;
    for (auto v : values)
        ss += std::norm(v - mean);
    MomentEstimate est;
    est.mean = mean;
    est.std_error = (t > 1) ? std::sqrt(ss / (static_cast<double>(t - 1) * t)) : 0.0;
    est.trials = t;
    est.n = n;
    return est;
}

void run_chunked(long trials, int threads, const std::function<void(long)>& body) {
    if (threads <= 1) {
        for (long t = 0; t < trials; ++t)
            body(t);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        long lo = trials * w / threads;
        long hi = trials * (w + 1) / threads;
        pool.emplace_back([lo, hi, &body] {
            for (long t = lo; t < hi; ++t)
                body(t);
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace

MomentEstimate estimate_moment(const EnsembleSpec& spec, const BlockWord& word, long trials, int threads) {
    spec.validate();
    validate_word(word, spec.r());
    if (trials < 2)
        throw std::invalid_argument("moment estimation needs at least 2 trials");
    std::vector<std::complex<double>> values(trials);
    run_chunked(trials, threads,
                [&](long t) { values[t] = one_trial(spec, word, static_cast<uint64_t>(t)); });
    return summarize(values, spec.n());
}

namespace {

// One fully resolved factor S_{p,q}(label), possibly conjugate-transposed.
struct ResolvedTerm {
    int p = 0, q = 0;
    const std::string* label = nullptr;
    bool star = false;
};

// A Gaussian entry Y^label_{slot1, slot2} (or its conjugate) where slots are
// cyclic index variables of the trace. Hermitian entries are normalized to
// the plain orientation via conj(Y_ba) = Y_ab.
struct Atom {
    int s1 = 0, s2 = 0;
    const std::string* label = nullptr;
    bool conj = false;
};

struct UnionFind {
    std::vector<int> parent;
    std::vector<int> block; // 0 = unconstrained, else block index 1..r
    bool conflict = false;

    explicit UnionFind(int n) : parent(n), block(n, 0) {
        for (int i = 0; i < n; ++i)
            parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void constrain(int x, int b) {
        x = find(x);
        if (block[x] == 0)
            block[x] = b;
        else if (block[x] != b)
            conflict = true;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        parent[a] = b;
        if (block[a] != 0)
            constrain(b, block[a]);
    }
};

void enumerate_matchings(std::vector<int>& partner, int m, const std::vector<Atom>& atoms,
                         bool need_conj_pairing, std::vector<std::pair<int, int>>& pairs,
                         const std::function<void()>& emit) {
    int first = -1;
    for (int i = 0; i < m; ++i)
        if (partner[i] < 0) {
            first = i;
            break;
        }
    if (first < 0) {
        emit();
        return;
    }
    for (int j = first + 1; j < m; ++j) {
        if (partner[j] >= 0)
            continue;
        if (*atoms[first].label != *atoms[j].label)
            continue;
        if (need_conj_pairing && atoms[first].conj == atoms[j].conj)
            continue;
        partner[first] = j;
        partner[j] = first;
        pairs.emplace_back(first, j);
        enumerate_matchings(partner, m, atoms, need_conj_pairing, pairs, emit);
        pairs.pop_back();
        partner[first] = -1;
        partner[j] = -1;
    }
}

} // namespace

Rational exact_moment_wick(const EnsembleSpec& spec, const BlockWord& word) {
    spec.validate();
    validate_word(word, spec.r());
    const int m = static_cast<int>(word.terms.size());
    if (m == 0)
        return Rational(1);
    if (m > 8)
        throw std::invalid_argument("exact pairing expansion supports words of length at most 8");
    if (spec.n() > 16)
        throw std::invalid_argument("exact pairing expansion supports total dimension at most 16");
    if (m % 2 != 0)
        return Rational(0);

    const bool ginibre = spec.kind == EnsembleKind::ginibre;
    const Rational inv_n(1, spec.n());

    // Two S-choices per off-diagonal symmetrized factor.
    std::vector<int> split_pos;
    for (int i = 0; i < m; ++i) {
        const BlockTerm& t = word.terms[i];
        if (t.symbol == 'T' && t.p < t.q)
            split_pos.push_back(i);
    }

    Rational total(0);
    const uint64_t combos = uint64_t{1} << split_pos.size();
    for (uint64_t mask = 0; mask < combos; ++mask) {
        std::vector<ResolvedTerm> res(m);
        for (int i = 0; i < m; ++i) {
            const BlockTerm& t = word.terms[i];
            res[i] = {t.p, t.q, &t.label, t.star};
        }
        for (size_t b = 0; b < split_pos.size(); ++b)
            if (mask & (uint64_t{1} << b))
                std::swap(res[split_pos[b]].p, res[split_pos[b]].q);

        // Cyclic index variables j_0 .. j_{m-1}; factor i connects j_i to
        // j_{i+1 mod m}. Collect block indicators and Gaussian atoms.
        UnionFind base(m);
        base.constrain(0, word.sector);
        std::vector<Atom> atoms(m);
        for (int i = 0; i < m; ++i) {
            int row = i;
            int col = (i + 1) % m;
            const ResolvedTerm& t = res[i];
            if (t.star) {
                base.constrain(row, t.q);
                base.constrain(col, t.p);
                atoms[i] = {col, row, t.label, true};
            } else {
                base.constrain(row, t.p);
                base.constrain(col, t.q);
                atoms[i] = {row, col, t.label, false};
            }
            if (!ginibre && atoms[i].conj) {
                std::swap(atoms[i].s1, atoms[i].s2);
                atoms[i].conj = false;
            }
        }
        if (base.conflict)
            continue;

        std::vector<int> partner(m, -1);
        std::vector<std::pair<int, int>> pairs;
        enumerate_matchings(partner, m, atoms, ginibre, pairs, [&] {
            UnionFind uf = base;
            for (auto [a, b] : pairs) {
                if (ginibre) {
                    uf.unite(atoms[a].s1, atoms[b].s1);
                    uf.unite(atoms[a].s2, atoms[b].s2);
                } else {
                    uf.unite(atoms[a].s1, atoms[b].s2);
                    uf.unite(atoms[a].s2, atoms[b].s1);
                }
            }
            if (uf.conflict)
                return;
            Rational weight(1);
            for (auto [a, b] : pairs) {
                const Atom& ref = (ginibre && atoms[a].conj) ? atoms[b] : atoms[a];
                int pb = uf.block[uf.find(ref.s1)];
                int qb = uf.block[uf.find(ref.s2)];
                weight *= spec.profile.value(*ref.label, pb, qb) * inv_n;
            }
            for (int v = 0; v < m; ++v)
                if (uf.find(v) == v)
                    weight *= Rational(spec.dims[uf.block[v] - 1]);
            total += weight;
        });
    }
    return total / Rational(spec.dims[word.sector - 1]);
}

MomentEstimate product_ensemble(const std::vector<int>& dims, int n, int k, long trials, uint64_t seed,
                                int threads) {
    if (dims.size() < 2)
        throw std::invalid_argument("product chain needs at least two dimensions");
    for (int d : dims)
        if (d < 1)
            throw std::invalid_argument("every chain dimension must be positive");
    if (n < 1)
        throw std::invalid_argument("normalizer must be positive");
    if (k < 1)
        throw std::invalid_argument("moment order must be positive");
    if (trials < 2)
        throw std::invalid_argument("moment estimation needs at least 2 trials");

    const int p = static_cast<int>(dims.size()) - 1;
    const double sd = std::sqrt(1.0 / (2.0 * n));
    std::vector<uint64_t> streams(p);
    for (int j = 0; j < p; ++j)
        streams[j] = rng::fnv1a("X" + std::to_string(j + 1));

    std::vector<std::complex<double>> values(trials);
    run_chunked(trials, threads, [&](long t) {
        Matrix b;
        for (int j = 0; j < p; ++j) {
            Matrix x(dims[j], dims[j + 1]);
            for (int row = 0; row < dims[j]; ++row)
                for (int col = 0; col < dims[j + 1]; ++col) {
                    auto g = rng::normals(rng::entry_key(
                        seed, streams[j], static_cast<uint64_t>(t),
                        static_cast<uint64_t>(row) * dims[j + 1] + col));
                    x(row, col) = std::complex<double>(g.z1 * sd, g.z2 * sd);
                }
            b = (j == 0) ? std::move(x) : Matrix(b * x);
        }
        Matrix w = b * b.adjoint();
        Matrix pw = w;
        for (int i = 1; i < k; ++i)
            pw = pw * w;
        values[t] = pw.trace() / static_cast<double>(dims[0]);
    });
    return summarize(values, n);
}

} // namespace mfblocks
