#include <doctest.h>

#include <cmath>
#include <complex>
#include <tuple>
#include <vector>

#include "mfblocks/rmt_sim.hpp"

using namespace mfblocks;

namespace {

CovarianceProfile profile22(const Rational& v11, const Rational& v12, const Rational& v21,
                            const Rational& v22, bool hermitian) {
    CovarianceProfile p;
    p.hermitian = hermitian;
    p.v["1"] = {{v11, v12}, {v21, v22}};
    return p;
}

EnsembleSpec herm35() {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::hermitian;
    spec.dims = {3, 5};
    spec.profile = profile22(Rational(1), Rational(5, 7), Rational(5, 7), Rational(2, 3), true);
    spec.seed = 20240803;
    return spec;
}

EnsembleSpec gin35() {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::ginibre;
    spec.dims = {3, 5};
    spec.profile = profile22(Rational(1), Rational(5, 7), Rational(3, 2), Rational(2, 3), false);
    spec.seed = 77;
    return spec;
}

BlockWord make_word(char symbol, std::vector<std::tuple<int, int, bool>> pqs, int sector) {
    BlockWord w;
    for (auto [p, q, star] : pqs) {
        BlockTerm t;
        t.symbol = symbol;
        t.p = p;
        t.q = q;
        t.star = star;
        w.terms.push_back(t);
    }
    w.sector = sector;
    return w;
}

} // namespace

TEST_SUITE("rmt_sim") {

TEST_CASE("spec bookkeeping") {
    EnsembleSpec spec = herm35();
    CHECK(spec.n() == 8);
    CHECK(spec.r() == 2);
    CHECK(spec.block_of_row(0) == 1);
    CHECK(spec.block_of_row(2) == 1);
    CHECK(spec.block_of_row(3) == 2);
    CHECK(spec.block_of_row(7) == 2);
    CHECK_THROWS_AS(spec.block_of_row(8), std::out_of_range);
    CHECK(spec.range_of_block(1) == std::pair<int, int>{0, 3});
    CHECK(spec.range_of_block(2) == std::pair<int, int>{3, 8});
    CHECK_THROWS_AS(spec.range_of_block(3), std::out_of_range);

    EnsembleSpec bad = herm35();
    bad.profile.hermitian = false;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = herm35();
    bad.dims = {3, 0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("sampled matrices are deterministic in seed, label and trial") {
    EnsembleSpec spec = herm35();
    Matrix a = sample_matrix(spec, "1", 5);
    Matrix b = sample_matrix(spec, "1", 5);
    CHECK((a - b).norm() == 0.0);
    CHECK((a - sample_matrix(spec, "1", 6)).norm() != 0.0);
    EnsembleSpec other = spec;
    other.seed = spec.seed + 1;
    CHECK((a - sample_matrix(other, "1", 5)).norm() != 0.0);
    EnsembleSpec two_labels = spec;
    two_labels.profile.v["2"] = two_labels.profile.v["1"];
    CHECK((sample_matrix(two_labels, "1", 5) - sample_matrix(two_labels, "2", 5)).norm() != 0.0);
}

TEST_CASE("hermitian samples are hermitian with real diagonal") {
    EnsembleSpec spec = herm35();
    for (uint64_t t = 0; t < 4; ++t) {
        Matrix y = sample_matrix(spec, "1", t);
        CHECK((y - y.adjoint()).norm() == 0.0);
        for (int i = 0; i < spec.n(); ++i) CHECK(y(i, i).imag() == 0.0);
    }
    Matrix g = sample_matrix(gin35(), "1", 0);
    CHECK((g - g.adjoint()).norm() != 0.0);
}

TEST_CASE("blocks tile the matrix") {
    for (EnsembleSpec spec : {herm35(), gin35()}) {
        Matrix y = sample_matrix(spec, "1", 3);
        Matrix sum = Matrix::Zero(spec.n(), spec.n());
        for (int p = 1; p <= 2; ++p)
            for (int q = 1; q <= 2; ++q) sum += block_extract(spec, y, p, q);
        CHECK((sum - y).norm() == 0.0);
    }
    EnsembleSpec spec = herm35();
    Matrix y = sample_matrix(spec, "1", 3);
    Matrix sym = sym_block_extract(spec, y, 1, 1) + sym_block_extract(spec, y, 1, 2) +
                 sym_block_extract(spec, y, 2, 2);
    CHECK((sym - y).norm() == 0.0);
    CHECK((block_extract(spec, y, 2, 1) - block_extract(spec, y, 1, 2).adjoint()).norm() == 0.0);
    CHECK_THROWS_AS(sym_block_extract(spec, y, 2, 1), std::invalid_argument);
}

TEST_CASE("partial traces are normalized and recombine to the full trace") {
    EnsembleSpec spec = herm35();
    Matrix id = Matrix::Identity(spec.n(), spec.n());
    CHECK(partial_trace(spec, id, 1) == std::complex<double>(1.0, 0.0));
    CHECK(partial_trace(spec, id, 2) == std::complex<double>(1.0, 0.0));
    Matrix y = sample_matrix(spec, "1", 11);
    std::complex<double> weighted = .0;
    for (int q = 1; q <= 2; ++q)
        weighted += partial_trace(spec, y, q) * (static_cast<double>(spec.dims[q - 1]) / spec.n());
    CHECK(std::abs(weighted - y.trace() / static_cast<double>(spec.n())) < 1e-14);
}

TEST_CASE("entry variances match the profile") {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::hermitian;
    spec.dims = {2, 2};
    spec.profile = profile22(Rational(1), Rational(2), Rational(2), Rational(4), true);
    spec.seed = 99;
    const long trials = 20000;
    double acc11 = 0, acc12 = 0, accd = 0;
    for (long t = 0; t < trials; ++t) {
        Matrix y = sample_matrix(spec, "1", static_cast<uint64_t>(t));
        acc11 += std::norm(y(0, 1));
        acc12 += std::norm(y(0, 2)) + std::norm(y(0, 3)) + std::norm(y(1, 2)) + std::norm(y(1, 3));
        accd += y(0, 0).real() * y(0, 0).real();
    }
    CHECK(std::abs(acc11 / trials - 0.25) < 0.0125);       // v11/n
    CHECK(std::abs(acc12 / (4 * trials) - 0.5) < 0.025);   // v12/n
    CHECK(std::abs(accd / trials - 0.25) < 0.02);          // diagonal v11/n
}

TEST_CASE("distinct labels decorrelate") {
    EnsembleSpec spec = herm35();
    spec.profile.v["2"] = spec.profile.v["1"];
    const long trials = 20000;
    double cross = 0;
    for (long t = 0; t < trials; ++t) {
        Matrix a = sample_matrix(spec, "1", static_cast<uint64_t>(t));
        Matrix b = sample_matrix(spec, "2", static_cast<uint64_t>(t));
        cross += a(0, 4).real() * b(0, 4).real();
    }
    // Both factors have variance v12/(2n) = 5/112; the product mean must be
    // zero well within sampling error.
    CHECK(std::abs(cross / trials) < 5.0 * (5.0 / 112.0) / std::sqrt(static_cast<double>(trials)));
}

TEST_CASE("exact pairing values at finite n") {
    EnsembleSpec h = herm35();
    // tau_2(S_{2,1} S_{1,2}) = (n_1/n) v_{2,1}
    CHECK(exact_moment_wick(h, make_word('S', {{2, 1, false}, {1, 2, false}}, 2)) ==
          Rational(3, 8) * Rational(5, 7));
    // tau_q(T_{1,2}^2) = (n_other/n) v_{1,2}
    CHECK(exact_moment_wick(h, make_word('T', {{1, 2, false}, {1, 2, false}}, 2)) ==
          Rational(3, 8) * Rational(5, 7));
    CHECK(exact_moment_wick(h, make_word('T', {{1, 2, false}, {1, 2, false}}, 1)) ==
          Rational(5, 8) * Rational(5, 7));
    // tau_1(S_{1,1}^2) = (n_1/n) v_{1,1}
    CHECK(exact_moment_wick(h, make_word('S', {{1, 1, false}, {1, 1, false}}, 1)) == Rational(3, 8));
    // Fourth moment of one diagonal block: (2 n_1^2 + 1) (v_{1,1}/n)^2,
    // including the single non-planar pairing.
    CHECK(exact_moment_wick(
              h, make_word('S', {{1, 1, false}, {1, 1, false}, {1, 1, false}, {1, 1, false}}, 1)) ==
          Rational(19, 64));
    // Odd words vanish.
    CHECK(exact_moment_wick(h, make_word('S', {{1, 2, false}, {2, 1, false}, {1, 1, false}}, 1)) ==
          Rational(0));
    // Empty word is the identity.
    CHECK(exact_moment_wick(h, make_word('S', {}, 1)) == Rational(1));

    EnsembleSpec g = gin35();
    // tau_1(S_{1,2} S*_{1,2}) = (n_2/n) v_{1,2}
    CHECK(exact_moment_wick(g, make_word('S', {{1, 2, false}, {1, 2, true}}, 1)) ==
          Rational(5, 8) * Rational(5, 7));
    // Without a conjugate partner the expectation vanishes entrywise.
    CHECK(exact_moment_wick(g, make_word('S', {{1, 2, false}, {2, 1, false}}, 1)) == Rational(0));
    // tau_2(S*_{1,2} S*_{2,1} S_{2,1} S_{1,2}) = (n_1 n_2 / n^2) v_{1,2} v_{2,1}
    CHECK(exact_moment_wick(
              g, make_word('S', {{1, 2, true}, {2, 1, true}, {2, 1, false}, {1, 2, false}}, 2)) ==
          Rational(15, 64) * Rational(5, 7) * Rational(3, 2));

    // Caps and validation.
    CHECK_THROWS_AS(exact_moment_wick(h, make_word('S', {{1, 3, false}}, 1)), std::invalid_argument);
    BlockWord long_word = make_word('S', {}, 1);
    for (int i = 0; i < 9; ++i)
        long_word.terms.push_back(BlockTerm{'S', 1, 1, "1", false});
    CHECK_THROWS_AS(exact_moment_wick(h, long_word), std::invalid_argument);
    EnsembleSpec big = herm35();
    big.dims = {8, 9};
    CHECK_THROWS_AS(exact_moment_wick(big, make_word('S', {{1, 1, false}, {1, 1, false}}, 1)),
                    std::invalid_argument);
}

TEST_CASE("monte carlo agrees with the exact pairing expansion") {
    EnsembleSpec h = herm35();
    BlockWord tw = make_word('T', {{1, 2, false}, {1, 2, false}}, 2);
    MomentEstimate est = estimate_moment(h, tw, 2000);
    double wick = to_double(exact_moment_wick(h, tw));
    CHECK(std::abs(est.mean.real() - wick) <= 4.0 * est.std_error);
    CHECK(std::abs(est.mean.imag()) <= 4.0 * est.std_error);

    EnsembleSpec g = gin35();
    BlockWord gw = make_word('S', {{1, 2, true}, {2, 1, true}, {2, 1, false}, {1, 2, false}}, 2);
    MomentEstimate gest = estimate_moment(g, gw, 2000);
    double gwick = to_double(exact_moment_wick(g, gw));
    CHECK(std::abs(gest.mean.real() - gwick) <= 4.0 * gest.std_error);
    CHECK(std::abs(gest.mean.imag()) <= 4.0 * gest.std_error);
}

TEST_CASE("estimates are invariant under thread chunking") {
    EnsembleSpec h = herm35();
    BlockWord tw = make_word('T', {{1, 2, false}, {1, 2, false}}, 1);
    MomentEstimate a = estimate_moment(h, tw, 40, 1);
    MomentEstimate b = estimate_moment(h, tw, 40, 3);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.trials == 40);
    CHECK(a.n == 8);
    CHECK_THROWS_AS(estimate_moment(h, tw, 1), std::invalid_argument);
}

TEST_CASE("rectangular product chain") {
    MomentEstimate est = product_ensemble({8, 4}, 8, 1, 4000, 2024);
    // E (1/d0) Tr(X X*) = d1/n exactly, for every n.
    CHECK(std::abs(est.mean.real() - 0.5) <= 4.0 * est.std_error);
    CHECK(std::abs(est.mean.imag()) < 1e-12); // trace of a nonnegative matrix

    MomentEstimate t1 = product_ensemble({6, 3, 2}, 6, 2, 30, 5, 1);
    MomentEstimate t2 = product_ensemble({6, 3, 2}, 6, 2, 30, 5, 2);
    CHECK(t1.mean == t2.mean);

    CHECK_THROWS_AS(product_ensemble({4}, 4, 1, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(product_ensemble({4, 0}, 4, 1, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(product_ensemble({4, 2}, 0, 1, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(product_ensemble({4, 2}, 4, 0, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(product_ensemble({4, 2}, 4, 1, 1, 0), std::invalid_argument);
}

} // TEST_SUITE
