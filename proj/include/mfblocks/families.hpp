#pragma once

#include <span>
#include <string>

#include "mfblocks/block_model.hpp"
#include "mfblocks/block_word.hpp"
#include "mfblocks/operator_expr.hpp"

namespace mfblocks {

// The standing operator families over the block Fock space. With creation
// operators p_{p,q}(u) and their adjoints:
//   mf_gaussian    w_{p,q}(u)  = p_{p,q}(u) + p*_{p,q}(u)
//   sym_creation   sp_{p,q}(u) = p_{p,q}(u) + p_{q,p}(u) for p < q, p_{q,q}(u) for p = q
//   sym_gaussian   sw_{p,q}(u) = sp_{p,q}(u) + sp*_{p,q}(u)
//   r_circular     z_{p,q}(u)  = p_{p,q}(u') + p*_{q,p}(u'')
//   circular       c_{p,q}(u)  = sp_{p,q}(u') + sp*_{p,q}(u'')
//   herm_block     s_{p,q}(u)  = p_{p,q}(u) + p*_{q,p}(u)   (S-block limit, Hermitian case)
enum class FamilyTag { mf_gaussian, sym_creation, sym_gaussian, r_circular, circular, herm_block };

FamilyTag family_from_name(const std::string& name);
std::string family_name(FamilyTag tag);

// The displayed operator for one family member. sym_* require p <= q.
OperatorExpr family_operator(FamilyTag tag, int p, int q, const std::string& u);

// Covariance entries that make the family member the limit of its matrix
// model: Hermitian families set b_{p,q}(u) = d_p v_{p,q}(u) (plus the
// symmetrized partner entry), r_circular sets b_{p,q}(u') = d_p v_{p,q},
// b_{q,p}(u'') = d_q v_{p,q}, and circular takes the union over its two
// r_circular summands.
CovarianceTable assign_covariances(FamilyTag tag, int p, int q, const std::string& u, const BlockStructure& s,
                                   const CovarianceProfile& profile);

// Full covariance table for every block pair and every label of a profile:
// hermitian:  b_{a,b}(u)   = d_a v_{a,b}(u)
// ginibre:    b_{a,b}(u')  = d_a v_{a,b}(u),  b_{a,b}(u'') = d_a v_{b,a}(u)
// Per-family assignments are always sub-tables of this one.
CovarianceTable ensemble_table(EnsembleKind kind, const BlockStructure& s, const CovarianceProfile& profile);

// gamma(u) = w_{2,1}(u) + w_{2,2}(u) + alpha1*P_1 + alpha2*P_2 on a
// two-block structure with d = (0,1).
OperatorExpr meixner_gamma(const std::string& u, const Rational& alpha1, const Rational& alpha2);

// Covariances b_{2,1}(u) = beta1, b_{2,2}(u) = beta2 (betas must be > 0);
// the first-row entries are zero.
CovarianceTable meixner_covariances(const std::string& u, const Rational& beta1, const Rational& beta2);

// Operator realization of one block letter's large-n limit:
// hermitian S -> herm_block, hermitian T -> sym_gaussian,
// ginibre S -> r_circular, ginibre T -> circular; stars become adjoints.
OperatorExpr limit_operator(const BlockTerm& term, EnsembleKind kind);

// Exact limit of the partial trace of a block word: evaluates the mapped
// operators in the vacuum state of w.sector under ensemble_table(). The
// result of any such word is exactly rational.
Rational limit_moment(const BlockWord& w, EnsembleKind kind, const BlockStructure& s,
                      const CovarianceProfile& profile);

} // namespace mfblocks
