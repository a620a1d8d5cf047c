// Python bindings for the block-ensemble laboratory. Exact values cross the
// boundary as strings ("22", "5/21", polynomial text) so no precision is lost;
// the Python package wraps them into Fraction/int. Statistical estimates
// cross as (complex mean, float standard error) pairs.

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mfblocks/block_model.hpp"
#include "mfblocks/block_word.hpp"
#include "mfblocks/combinatorics.hpp"
#include "mfblocks/families.hpp"
#include "mfblocks/harness.hpp"
#include "mfblocks/numeric.hpp"
#include "mfblocks/operator_expr.hpp"
#include "mfblocks/rmt_sim.hpp"

namespace py = pybind11;
using namespace mfblocks;

namespace {

using ProfileDict = std::map<std::string, std::vector<std::vector<std::string>>>;

CovarianceProfile make_profile(const ProfileDict& v, bool hermitian) {
    CovarianceProfile prof;
    prof.hermitian = hermitian;
    for (const auto& [label, rows] : v) {
        std::vector<std::vector<Rational>> m;
        for (const auto& row : rows) {
            std::vector<Rational> out;
            for (const auto& cell : row)
                out.push_back(parse_rational(cell));
            m.push_back(std::move(out));
        }
        prof.v[label] = std::move(m);
    }
    return prof;
}

BlockWord make_word(const std::string& text, int q) {
    BlockWord w;
    w.terms = parse_word_terms(text);
    w.sector = q;
    return w;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    for (const auto& x : xs)
        out.push_back(parse_rational(x));
    return out;
}

std::vector<std::string> poly_names(int p) {
    std::vector<std::string> names;
    for (int i = 0; i <= p; ++i)
        names.push_back("d" + std::to_string(i));
    return names;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Block Gaussian ensemble laboratory: exact limit moments, "
              "combinatorial closed forms, and Monte Carlo estimates.";

    m.def("catalan", [](int k) { return catalan(k).str(); }, py::arg("k"),
          "Catalan number C_k as a decimal string.");

    m.def("mp_moment", [](int k, const std::string& t) { return to_string(mp_moment(k, parse_rational(t))); },
          py::arg("k"), py::arg("t"),
          "k-th Marchenko-Pastur moment at rational ratio t, as a rational string.");

    m.def("fuss_narayana", [](int k, int p) { return fuss_narayana_multi(k, p).str(poly_names(p)); }, py::arg("k"),
          py::arg("p"), "Multivariate polynomial P_k in d0..dp, rendered as text.");

    m.def("fuss_narayana_at",
          [](int k, int p, const std::vector<std::string>& d) {
              auto vals = parse_rationals(d);
              return to_string(fuss_narayana_multi_at(k, p, vals));
          },
          py::arg("k"), py::arg("p"), py::arg("d"),
          "P_k evaluated at rational d0..dp (list of p+1 rational strings).");

    m.def("boxtimes_mp_moment",
          [](const std::vector<std::string>& ts, int k) {
              if (ts.empty())
                  throw std::invalid_argument("need at least one ratio");
              std::vector<Rational> acc;
              bool first = true;
              for (const auto& tstr : ts) {
                  Rational t = parse_rational(tstr);
                  std::vector<Rational> mi{Rational(1)};
                  for (int j = 1; j <= k; ++j)
                      mi.push_back(mp_moment(j, t));
                  acc = first ? mi : boxtimes_moments<Rational>(acc, mi, k);
                  first = false;
              }
              return to_string(acc[static_cast<size_t>(k)]);
          },
          py::arg("ts"), py::arg("k"),
          "k-th moment of the free multiplicative convolution of Marchenko-Pastur "
          "laws with the given ratios, as a rational string.");

    m.def("jacobi_moment",
          [](const std::string& a1, const std::string& a2, const std::string& b1, const std::string& b2, int k) {
              JacobiParams jp{parse_rational(a1), parse_rational(a2), parse_rational(b1), parse_rational(b2)};
              return to_string(jacobi_moment(jp, k));
          },
          py::arg("a1"), py::arg("a2"), py::arg("b1"), py::arg("b2"), py::arg("k"),
          "Moment of the two-periodic Jacobi recurrence, as a rational string.");

    m.def("meixner_fock_moment",
          [](const std::string& a1, const std::string& a2, const std::string& b1, const std::string& b2, int k) {
              OperatorExpr gamma = meixner_gamma("1", parse_rational(a1), parse_rational(a2));
              CovarianceTable tbl = meixner_covariances("1", parse_rational(b1), parse_rational(b2));
              std::vector<OperatorExpr> word(static_cast<size_t>(k), gamma);
              return to_string(moment<SqrtSum>(word, 1, tbl).as_rational());
          },
          py::arg("a1"), py::arg("a2"), py::arg("b1"), py::arg("b2"), py::arg("k"),
          "The same moment computed through the two-block operator model.");

    m.def("mp_quadrature_moment", &mp_quadrature_moment, py::arg("k"), py::arg("t"),
          "k-th Marchenko-Pastur moment by numerical quadrature of the density.");

    m.def("limit_moment",
          [](const std::string& word, int q, const std::string& kind, const std::vector<std::string>& d,
             const ProfileDict& profile) {
              EnsembleKind ek = kind_from_name(kind);
              BlockStructure s(parse_rationals(d), true);
              CovarianceProfile prof = make_profile(profile, ek == EnsembleKind::hermitian);
              return to_string(limit_moment(make_word(word, q), ek, s, prof));
          },
          py::arg("word"), py::arg("q"), py::arg("kind"), py::arg("d"), py::arg("profile"),
          "Exact operator-model limit of the partial trace of a block word; d are "
          "rational block ratios summing to 1 and profile maps labels to variance "
          "matrices of rational strings.");

    m.def("wick_moment",
          [](const std::string& word, int q, const std::string& kind, const std::vector<int>& dims,
             const ProfileDict& profile) {
              EnsembleSpec spec;
              spec.kind = kind_from_name(kind);
              spec.dims = dims;
              spec.profile = make_profile(profile, spec.kind == EnsembleKind::hermitian);
              return to_string(exact_moment_wick(spec, make_word(word, q)));
          },
          py::arg("word"), py::arg("q"), py::arg("kind"), py::arg("dims"), py::arg("profile"),
          "Exact finite-n Gaussian pairing value of the partial trace, as a rational string.");

    m.def("estimate_moment",
          [](const std::string& word, int q, const std::string& kind, const std::vector<int>& dims,
             const ProfileDict& profile, uint64_t seed, long trials, int threads) {
              EnsembleSpec spec;
              spec.kind = kind_from_name(kind);
              spec.dims = dims;
              spec.profile = make_profile(profile, spec.kind == EnsembleKind::hermitian);
              spec.seed = seed;
              MomentEstimate est = estimate_moment(spec, make_word(word, q), trials, threads);
              return std::make_pair(est.mean, est.std_error);
          },
          py::arg("word"), py::arg("q"), py::arg("kind"), py::arg("dims"), py::arg("profile"), py::arg("seed"),
          py::arg("trials"), py::arg("threads") = 1,
          "Monte Carlo estimate of the partial-trace moment: (mean, standard error).");

    m.def("product_moment",
          [](const std::vector<int>& dims, int n, int k, long trials, uint64_t seed, int threads) {
              MomentEstimate est = product_ensemble(dims, n, k, trials, seed, threads);
              return std::make_pair(est.mean, est.std_error);
          },
          py::arg("dims"), py::arg("n"), py::arg("k"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1,
          "Monte Carlo estimate of tau_0((B B*)^k) for a rectangular Gaussian "
          "product chain: (mean, standard error).");

    m.def("render_word", [](const std::string& word, int q) { return render_word(make_word(word, q)); },
          py::arg("word"), py::arg("q") = 1, "Canonical text form of a block word.");
}
