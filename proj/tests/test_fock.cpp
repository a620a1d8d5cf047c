#include <doctest.h>

#include <vector>

#include "mfblocks/fock.hpp"

using namespace mfblocks;
using Vec = FockVector<SqrtSum>;

namespace {

// All basis words over sectors 1..r and the given labels, chain length <= max_len.
std::vector<BasisWord> all_words(int r, const std::vector<Label>& labels, int max_len) {
    std::vector<BasisWord> out;
    for (int q = 1; q <= r; ++q)
        out.push_back(BasisWord::vacuum(q));
    std::vector<std::vector<WordFactor>> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<WordFactor>> next;
        for (const auto& chain : frontier) {
            // Appended factors must chain from the previous right index.
            for (int left = 1; left <= r; ++left) {
                if (!chain.empty() && chain.back().right != left)
                    continue;
                for (int right = 1; right <= r; ++right) {
                    for (const Label& u : labels) {
                        auto c = chain;
                        c.push_back({left, right, u});
                        out.push_back(BasisWord::chain(c));
                        next.push_back(std::move(c));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

CovarianceTable small_table() {
    CovarianceTable tbl(2);
    Label u = Label::plain("1");
    Label w = Label::prime("1");
    tbl.set(1, 1, u, Rational(2));
    tbl.set(1, 2, u, Rational(4));
    tbl.set(2, 1, u, Rational(1, 3));
    tbl.set(2, 2, u, Rational(5));
    tbl.set(1, 1, w, Rational(7, 2));
    tbl.set(1, 2, w, Rational(1));
    tbl.set(2, 1, w, Rational(9));
    tbl.set(2, 2, w, Rational(3, 5));
    return tbl;
}

} // namespace

TEST_SUITE("fock") {

TEST_CASE("basis word structure") {
    BasisWord v = BasisWord::vacuum(2);
    CHECK(v.is_vacuum());
    CHECK(v.sector() == 2);
    CHECK(v.str() == "Ω_2");

    Label u = Label::plain("1");
    BasisWord c = BasisWord::chain({{1, 2, u}, {2, 2, u}});
    CHECK(c.sector() == 2);
    CHECK(c.leading_left() == 1);
    CHECK(c.length() == 2);
    CHECK(c.str() == "1,2,1 | 2,2,1");

    CHECK_THROWS_AS(BasisWord::chain({{1, 2, u}, {1, 2, u}}), std::invalid_argument);
    CHECK_THROWS_AS(BasisWord::vacuum(0), std::out_of_range);

    // Prepending keeps the sector; stripping the first factor restores it.
    BasisWord longer = c.prepended({2, 1, u});
    CHECK(longer.sector() == 2);
    CHECK(longer.length() == 3);
    CHECK(longer.without_first() == c);
    // Prepending onto a vacuum creates a sector-matching single-factor chain.
    CHECK(v.prepended({1, 2, u}) == BasisWord::chain({{1, 2, u}}));
}

TEST_CASE("label variants render distinctly") {
    CHECK(Label::plain("u").str() == "u");
    CHECK(Label::prime("u").str() == "u'");
    CHECK(Label::double_prime("u").str() == "u''");
    CHECK(Label::plain("u") != Label::prime("u"));
}

TEST_CASE("covariance table access") {
    CovarianceTable tbl = small_table();
    Label u = Label::plain("1");
    CHECK(tbl.get(1, 2, u) == Rational(4));
    CHECK(tbl.has(1, 2, u));
    CHECK_FALSE(tbl.has(1, 2, Label::double_prime("1")));
    CHECK_THROWS_AS(tbl.get(1, 2, Label::double_prime("1")), std::invalid_argument);
    CHECK_THROWS_AS(tbl.get(0, 1, u), std::out_of_range);
    CHECK_THROWS_AS(tbl.get(1, 3, u), std::out_of_range);
    CHECK_THROWS_AS(tbl.set(1, 1, u, Rational(-1)), std::invalid_argument);

    CovarianceTable other(2);
    other.set(1, 1, u, Rational(2)); // same value: fine
    CHECK_NOTHROW(other.merge(tbl));
    CovarianceTable conflict(2);
    conflict.set(1, 1, u, Rational(99));
    CHECK_THROWS_AS(conflict.merge(tbl), std::invalid_argument);
}

TEST_CASE("creation acts as the displayed map") {
    CovarianceTable tbl = small_table();
    Label u = Label::plain("1");

    // b_{1,2} = 4: the vacuum of sector 2 gains factor e_{1,2} with weight 2.
    Vec img = create(1, 2, u, Vec::unit(BasisWord::vacuum(2)), tbl);
    CHECK(img.support_size() == 1);
    CHECK(img.coefficient(BasisWord::chain({{1, 2, u}})) == SqrtSum(Rational(2)));

    // Mismatched vacuum goes to zero.
    CHECK(create(1, 2, u, Vec::unit(BasisWord::vacuum(1)), tbl).empty());

    // Chains with leading left index q gain a factor; others vanish.
    BasisWord chain21 = BasisWord::chain({{2, 1, u}});
    Vec pre = create(1, 2, u, Vec::unit(chain21), tbl);
    CHECK(pre.coefficient(BasisWord::chain({{1, 2, u}, {2, 1, u}})) == SqrtSum(Rational(2)));
    BasisWord chain11 = BasisWord::chain({{1, 1, u}});
    CHECK(create(1, 2, u, Vec::unit(chain11), tbl).empty());
}

TEST_CASE("annihilation strips exact leading factors") {
    CovarianceTable tbl = small_table();
    Label u = Label::plain("1");
    Label w = Label::prime("1");

    CHECK(annihilate(1, 2, u, Vec::unit(BasisWord::vacuum(2)), tbl).empty());

    Vec img = annihilate(1, 2, u, Vec::unit(BasisWord::chain({{1, 2, u}})), tbl);
    CHECK(img.coefficient(BasisWord::vacuum(2)) == SqrtSum(Rational(2)));

    // Label mismatch: annihilating with the primed label gives zero.
    CHECK(annihilate(1, 2, w, Vec::unit(BasisWord::chain({{1, 2, u}})), tbl).empty());
    // Index mismatch likewise.
    CHECK(annihilate(2, 2, u, Vec::unit(BasisWord::chain({{1, 2, u}})), tbl).empty());
}

TEST_CASE("zero covariance yields the zero operator") {
    CovarianceTable tbl(2);
    Label u = Label::plain("1");
    tbl.set(1, 2, u, Rational(0));
    CHECK(create(1, 2, u, Vec::unit(BasisWord::vacuum(2)), tbl).empty());
    CHECK(annihilate(1, 2, u, Vec::unit(BasisWord::chain({{1, 2, u}})), tbl).empty());
}

TEST_CASE("projection keeps words based at its sector") {
    Label u = Label::plain("1");
    CHECK(project(1, Vec::unit(BasisWord::vacuum(1))).support_size() == 1);
    CHECK(project(2, Vec::unit(BasisWord::vacuum(1))).empty());
    BasisWord based2 = BasisWord::chain({{2, 1, u}});
    CHECK(project(2, Vec::unit(based2)).support_size() == 1);
    CHECK(project(1, Vec::unit(based2)).empty());
}

TEST_CASE("adjointness: <create v, w> equals <v, annihilate w>") {
    CovarianceTable tbl = small_table();
    std::vector<Label> labels{Label::plain("1"), Label::prime("1")};
    auto words = all_words(2, labels, 3);
    REQUIRE(words.size() > 30);
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q)
            for (const Label& u : labels)
                for (const BasisWord& v : words)
                    for (const BasisWord& w : words) {
                        SqrtSum lhs = inner(create(p, q, u, Vec::unit(v), tbl), Vec::unit(w));
                        SqrtSum rhs = inner(Vec::unit(v), annihilate(p, q, u, Vec::unit(w), tbl));
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("primitives preserve the sector grading") {
    CovarianceTable tbl = small_table();
    std::vector<Label> labels{Label::plain("1"), Label::prime("1")};
    auto words = all_words(2, labels, 3);
    auto check_sector = [](const Vec& img, int sector) {
        for (const auto& [w, c] : img.coeffs())
            CHECK(w.sector() == sector);
    };
    for (const BasisWord& v : words) {
        for (int p = 1; p <= 2; ++p)
            for (int q = 1; q <= 2; ++q) {
                check_sector(create(p, q, labels[0], Vec::unit(v), tbl), v.sector());
                check_sector(annihilate(p, q, labels[0], Vec::unit(v), tbl), v.sector());
                check_sector(project(q, Vec::unit(v)), v.sector());
            }
    }
}

TEST_CASE("word evaluation on the vacuum") {
    CovarianceTable tbl = small_table();
    Label u = Label::plain("1");
    auto cr = PrimitiveOp::creation(1, 2, u);
    auto an = PrimitiveOp::annihilation(1, 2, u);

    std::vector<PrimitiveOp> pair{an, cr};
    CHECK(evaluate_word(pair, 2, tbl).as_rational() == Rational(4));

    std::vector<PrimitiveOp> id{PrimitiveOp::identity_op()};
    CHECK(evaluate_word(id, 2, tbl).as_rational() == Rational(1));

    std::vector<PrimitiveOp> lone{cr};
    CHECK(evaluate_word(lone, 2, tbl).is_zero());

    // Projections insert exactly like the matrix units they mimic.
    std::vector<PrimitiveOp> proj{PrimitiveOp::projection(2)};
    CHECK(evaluate_word(proj, 2, tbl).as_rational() == Rational(1));
    CHECK(evaluate_word(proj, 1, tbl).is_zero());

    CHECK_THROWS_AS(evaluate_word(pair, 3, tbl), std::out_of_range);
}

TEST_CASE("vacuum expectations of balanced words are rational") {
    CovarianceTable tbl = small_table();
    Label u = Label::plain("1");
    Label w = Label::prime("1");
    // A word mixing labels and sectors; exactness means as_rational succeeds.
    std::vector<PrimitiveOp> word{
        PrimitiveOp::annihilation(1, 2, u), PrimitiveOp::annihilation(2, 1, w),
        PrimitiveOp::projection(2),         PrimitiveOp::creation(2, 1, w),
        PrimitiveOp::creation(1, 2, u),
    };
    SqrtSum val = evaluate_word(word, 2, tbl);
    CHECK(val.is_rational());
    CHECK(val.as_rational() == Rational(4) * Rational(9)); // b_{1,2}(u) * b_{2,1}(u')
}

TEST_CASE("weighted state sums sector expectations") {
    CovarianceTable tbl = small_table();
    BlockStructure s({Rational(1, 4), Rational(3, 4)}, true);
    std::vector<PrimitiveOp> proj1{PrimitiveOp::projection(1)};
    CHECK(weighted_state(s, proj1, tbl).as_rational() == Rational(1, 4));
    std::vector<PrimitiveOp> id{PrimitiveOp::identity_op()};
    CHECK(weighted_state(s, id, tbl).as_rational() == Rational(1));

    BlockStructure bad({Rational(1, 4), Rational(1, 4)}, false);
    CHECK_THROWS_AS(weighted_state(bad, id, tbl), std::invalid_argument);
}

TEST_CASE("dump renders one coefficient per line") {
    CovarianceTable tbl = small_table();
    Label u = Label::plain("1");
    Vec img = create(1, 2, u, Vec::unit(BasisWord::vacuum(2)), tbl);
    CHECK(dump(img) == "2\t2\t1,2,1\n");
}

} // TEST_SUITE
