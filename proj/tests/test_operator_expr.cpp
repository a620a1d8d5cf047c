#include <doctest.h>

#include <algorithm>
#include <vector>

#include "mfblocks/operator_expr.hpp"

using namespace mfblocks;

namespace {

CovarianceTable table_r2() {
    CovarianceTable tbl(2);
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q) {
            tbl.set(p, q, Label::plain("1"), Rational(p + q, 3));
            tbl.set(p, q, Label::prime("1"), Rational(p * q, 2));
        }
    return tbl;
}

OperatorExpr cr(int p, int q, Label u = Label::plain("1")) {
    return OperatorExpr::primitive(PrimitiveOp::creation(p, q, std::move(u)));
}

// Unsplit reference evaluation: apply the word right-to-left to the vacuum.
SqrtSum direct_moment(std::span<const OperatorExpr> word, int q, const CovarianceTable& tbl) {
    FockVector<SqrtSum> v = FockVector<SqrtSum>::unit(BasisWord::vacuum(q));
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = apply_expr(*it, v, tbl);
    return v.coefficient(BasisWord::vacuum(q));
}

} // namespace

TEST_SUITE("operator_expr") {

TEST_CASE("rendering is deterministic") {
    OperatorExpr z = cr(1, 2, Label::prime("u")) + cr(2, 1, Label::double_prime("u")).adjoint();
    CHECK(z.str() == "℘[1,2](u')+℘*[2,1](u'')");
    OperatorExpr z21 = cr(2, 1, Label::prime("u")) + cr(1, 2, Label::double_prime("u")).adjoint();
    CHECK(z21.str() == "℘[2,1](u')+℘*[1,2](u'')");
    CHECK(OperatorExpr::zero().str() == "0");
    CHECK(OperatorExpr::scalar(Rational(1)).str() == "1");
    CHECK((Rational(-2) * cr(1, 1)).str() == "-2*℘[1,1](1)");
    CHECK((cr(1, 2) * cr(2, 1)).str() == "℘[1,2](1)*℘[2,1](1)");
}

TEST_CASE("terms merge and cancel") {
    OperatorExpr e = cr(1, 2) + cr(1, 2);
    CHECK(e.equivalent(Rational(2) * cr(1, 2)));
    OperatorExpr zero = e + Rational(-2) * cr(1, 2);
    CHECK(zero.is_zero());
    CHECK((cr(1, 2) + cr(2, 1)).equivalent(cr(2, 1) + cr(1, 2)));
}

TEST_CASE("identity factors vanish in products") {
    OperatorExpr id = OperatorExpr::scalar(Rational(1));
    OperatorExpr e = cr(1, 2);
    CHECK((id * e).equivalent(e));
    CHECK((e * id).equivalent(e));
    CHECK((OperatorExpr::scalar(Rational(3)) * e).equivalent(Rational(3) * e));
}

TEST_CASE("adjoint is an involution that reverses products") {
    OperatorExpr e = cr(1, 2) * cr(2, 1) + Rational(1, 2) * cr(2, 2);
    CHECK(e.adjoint().adjoint().equivalent(e));
    CHECK(e.adjoint().str() == "℘*[2,1](1)*℘*[1,2](1)+1/2*℘*[2,2](1)");

    OperatorExpr proj = OperatorExpr::primitive(PrimitiveOp::projection(2));
    CHECK(proj.adjoint().equivalent(proj));
}

TEST_CASE("split evaluation equals the direct right-to-left action") {
    CovarianceTable tbl = table_r2();
    OperatorExpr w11 = cr(1, 1) + cr(1, 1).adjoint();
    OperatorExpr w12 = cr(1, 2) + cr(1, 2).adjoint();
    OperatorExpr w21p = cr(2, 1, Label::prime("1")) + cr(1, 2, Label::prime("1")).adjoint();
    OperatorExpr p1 = OperatorExpr::primitive(PrimitiveOp::projection(1));

    std::vector<std::vector<OperatorExpr>> words{
        {w12, w12},
        {w12, w21p, w21p, w12},
        {w11, w11, w11, w11},
        {w12, p1, w12},
        {w21p, w12, p1, w12, w21p},
        {w11, w12, w21p, w12, w11},
        {w12},
        {},
    };
    for (int q = 1; q <= 2; ++q)
        for (const auto& word : words)
            CHECK(moment<SqrtSum>(word, q, tbl) == direct_moment(word, q, tbl));
}

TEST_CASE("moment is invariant under reversed adjoints") {
    CovarianceTable tbl = table_r2();
    OperatorExpr a = cr(1, 2);
    OperatorExpr b = cr(2, 1, Label::prime("1"));
    std::vector<OperatorExpr> word{a.adjoint(), b.adjoint(), b, a};
    std::vector<OperatorExpr> rev{a.adjoint(), b.adjoint(), b, a};
    std::reverse(rev.begin(), rev.end());
    for (auto& e : rev)
        e = e.adjoint();
    for (int q = 1; q <= 2; ++q)
        CHECK(moment<SqrtSum>(word, q, tbl) == moment<SqrtSum>(rev, q, tbl));
}

TEST_CASE("weighted moment requires normalized ratios") {
    CovarianceTable tbl = table_r2();
    std::vector<OperatorExpr> word{cr(1, 2) + cr(1, 2).adjoint(), cr(1, 2) + cr(1, 2).adjoint()};
    BlockStructure good({Rational(1, 2), Rational(1, 2)}, true);
    CHECK(weighted_moment<SqrtSum>(good, word, tbl).is_rational());
    BlockStructure bad({Rational(1, 2), Rational(1, 4)}, false);
    CHECK_THROWS_AS(weighted_moment<SqrtSum>(bad, word, tbl), std::invalid_argument);
}

TEST_CASE("floating evaluation tracks the exact one") {
    CovarianceTable tbl = table_r2();
    OperatorExpr w12 = cr(1, 2) + cr(1, 2).adjoint();
    OperatorExpr w21 = cr(2, 1) + cr(2, 1).adjoint();
    std::vector<OperatorExpr> word{w12, w21, w21, w12};
    double approx = moment<double>(word, 2, tbl);
    double exact = moment<SqrtSum>(word, 2, tbl).to_double();
    CHECK(approx == doctest::Approx(exact).epsilon(1e-12));
}

} // TEST_SUITE
