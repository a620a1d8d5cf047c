#pragma once

#include <span>
#include <string>
#include <vector>

#include "mfblocks/fock.hpp"

namespace mfblocks {

// Formal linear combination of products of primitive operators with rational
// coefficients. Products act left to right (factors[0] is applied last).
class OperatorExpr {
public:
    struct Term {
        Rational coeff = 1;
        std::vector<PrimitiveOp> factors; // empty product = identity
    };

    OperatorExpr() = default;
    static OperatorExpr zero() { return {}; }
    static OperatorExpr scalar(const Rational& c);
    static OperatorExpr primitive(PrimitiveOp op);

    OperatorExpr& operator+=(const OperatorExpr& o);
    friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
    friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
    friend OperatorExpr operator*(const Rational& c, const OperatorExpr& e);

    // Reverses every product, conjugates create <-> annihilate, and keeps
    // projections and identities fixed.
    OperatorExpr adjoint() const;

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Deterministic text form, e.g. "℘[2,1](u')+℘*[1,2](u'')".
    std::string str() const;

    bool equivalent(const OperatorExpr& o) const; // equality of normalized term lists

private:
    void add_term(Term t);

    std::vector<Term> terms_; // normalized: no zero coeffs, no duplicate factor lists
};

template <class S>
FockVector<S> apply_expr(const OperatorExpr& e, const FockVector<S>& v, const CovarianceTable& tbl);

// <Omega_q, word[0] word[1] ... word[m-1] Omega_q>, split in the middle so
// each side only builds chains of length about m/2.
template <class S = SqrtSum>
S moment(std::span<const OperatorExpr> word, int q, const CovarianceTable& tbl);

// sum_q d_q <Omega_q, ... Omega_q>; requires the ratios to sum to 1.
template <class S = SqrtSum>
S weighted_moment(const BlockStructure& s, std::span<const OperatorExpr> word, const CovarianceTable& tbl);

} // namespace mfblocks
