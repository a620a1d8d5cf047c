#include "mfblocks/families.hpp"

#include <stdexcept>
#include <vector>

namespace mfblocks {

namespace {

OperatorExpr creation(int p, int q, Label u) { return OperatorExpr::primitive(PrimitiveOp::creation(p, q, std::move(u))); }

OperatorExpr sym_creation_expr(int p, int q, const std::string& u, Label::Variant variant) {
    if (p > q) throw std::invalid_argument("sym_creation: needs p <= q");
    Label lab{u, variant};
    if (p == q) return creation(q, q, lab);
    return creation(p, q, lab) + creation(q, p, lab);
}

void require_indices(const BlockStructure& s, int p, int q) {
    if (p < 1 || q < 1 || p > s.r || q > s.r)
        throw std::out_of_range("family: block index outside 1.." + std::to_string(s.r));
}

} // namespace

FamilyTag family_from_name(const std::string& name) {
    if (name == "mf_gaussian") return FamilyTag::mf_gaussian;
    if (name == "sym_creation") return FamilyTag::sym_creation;
    if (name == "sym_gaussian") return FamilyTag::sym_gaussian;
    if (name == "r_circular") return FamilyTag::r_circular;
    if (name == "circular") return FamilyTag::circular;
    if (name == "herm_block") return FamilyTag::herm_block;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::mf_gaussian: return "mf_gaussian";
        case FamilyTag::sym_creation: return "sym_creation";
        case FamilyTag::sym_gaussian: return "sym_gaussian";
        case FamilyTag::r_circular: return "r_circular";
        case FamilyTag::circular: return "circular";
        case FamilyTag::herm_block: return "herm_block";
    }
    throw std::logic_error("family_name: unknown tag");
}

OperatorExpr family_operator(FamilyTag tag, int p, int q, const std::string& u) {
    switch (tag) {
        case FamilyTag::mf_gaussian: {
            OperatorExpr c = creation(p, q, Label::plain(u));
            return c + c.adjoint();
        }
        case FamilyTag::sym_creation: return sym_creation_expr(p, q, u, Label::Variant::plain);
        case FamilyTag::sym_gaussian: {
            OperatorExpr c = sym_creation_expr(p, q, u, Label::Variant::plain);
            return c + c.adjoint();
        }
        case FamilyTag::r_circular:
            return creation(p, q, Label::prime(u)) + creation(q, p, Label::double_prime(u)).adjoint();
        case FamilyTag::circular:
            return sym_creation_expr(p, q, u, Label::Variant::prime) +
                   sym_creation_expr(p, q, u, Label::Variant::double_prime).adjoint();
        case FamilyTag::herm_block:
            return creation(p, q, Label::plain(u)) + creation(q, p, Label::plain(u)).adjoint();
    }
    throw std::logic_error("family_operator: unknown tag");
}

CovarianceTable assign_covariances(FamilyTag tag, int p, int q, const std::string& u, const BlockStructure& s,
                                   const CovarianceProfile& profile) {
    require_indices(s, p, q);
    profile.validate(s.r);
    CovarianceTable tbl(s.r);
    auto v = [&](int a, int b) { return profile.value(u, a, b); };
    auto d = [&](int a) { return s.dim(a); };
    switch (tag) {
        case FamilyTag::mf_gaussian:
            tbl.set(p, q, Label::plain(u), d(p) * v(p, q));
            break;
        case FamilyTag::sym_creation:
        case FamilyTag::sym_gaussian:
        case FamilyTag::herm_block:
            if (!profile.hermitian)
                throw std::invalid_argument("assign_covariances: hermitian family over a non-hermitian profile");
            tbl.set(p, q, Label::plain(u), d(p) * v(p, q));
            tbl.set(q, p, Label::plain(u), d(q) * v(q, p));
            break;
        case FamilyTag::r_circular:
            tbl.set(p, q, Label::prime(u), d(p) * v(p, q));
            tbl.set(q, p, Label::double_prime(u), d(q) * v(p, q));
            break;
        case FamilyTag::circular:
            // Union over the r_circular summands z_{p,q} and z_{q,p}.
            tbl.set(p, q, Label::prime(u), d(p) * v(p, q));
            tbl.set(q, p, Label::double_prime(u), d(q) * v(p, q));
            tbl.set(q, p, Label::prime(u), d(q) * v(q, p));
            tbl.set(p, q, Label::double_prime(u), d(p) * v(q, p));
            break;
    }
    return tbl;
}

CovarianceTable ensemble_table(EnsembleKind kind, const BlockStructure& s, const CovarianceProfile& profile) {
    profile.validate(s.r);
    if (kind == EnsembleKind::hermitian && !profile.hermitian)
        throw std::invalid_argument("ensemble_table: hermitian ensemble needs a hermitian profile");
    CovarianceTable tbl(s.r);
    for (const auto& [label, matrix] : profile.v) {
        for (int a = 1; a <= s.r; ++a) {
            for (int b = 1; b <= s.r; ++b) {
                const Rational& vab = matrix[a - 1][b - 1];
                const Rational& vba = matrix[b - 1][a - 1];
                if (kind == EnsembleKind::hermitian) {
                    tbl.set(a, b, Label::plain(label), s.d[a - 1] * vab);
                } else {
                    tbl.set(a, b, Label::prime(label), s.d[a - 1] * vab);
                    tbl.set(a, b, Label::double_prime(label), s.d[a - 1] * vba);
                }
            }
        }
    }
    return tbl;
}

OperatorExpr meixner_gamma(const std::string& u, const Rational& alpha1, const Rational& alpha2) {
    OperatorExpr g = family_operator(FamilyTag::mf_gaussian, 2, 1, u) + family_operator(FamilyTag::mf_gaussian, 2, 2, u);
    g += alpha1 * OperatorExpr::primitive(PrimitiveOp::projection(1));
    g += alpha2 * OperatorExpr::primitive(PrimitiveOp::projection(2));
    return g;
}

CovarianceTable meixner_covariances(const std::string& u, const Rational& beta1, const Rational& beta2) {
    if (beta1 <= 0 || beta2 <= 0) throw std::invalid_argument("meixner_covariances: betas must be positive");
    CovarianceTable tbl(2);
    tbl.set(2, 1, Label::plain(u), beta1);
    tbl.set(2, 2, Label::plain(u), beta2);
    tbl.set(1, 1, Label::plain(u), 0);
    tbl.set(1, 2, Label::plain(u), 0);
    return tbl;
}

OperatorExpr limit_operator(const BlockTerm& term, EnsembleKind kind) {
    FamilyTag tag;
    if (kind == EnsembleKind::hermitian)
        tag = term.symbol == 'S' ? FamilyTag::herm_block : FamilyTag::sym_gaussian;
    else
        tag = term.symbol == 'S' ? FamilyTag::r_circular : FamilyTag::circular;
    OperatorExpr e = family_operator(tag, term.p, term.q, term.label);
    return term.star ? e.adjoint() : e;
}

Rational limit_moment(const BlockWord& w, EnsembleKind kind, const BlockStructure& s,
                      const CovarianceProfile& profile) {
    validate_word(w, s.r);
    for (const auto& t : w.terms)
        if (!profile.v.count(t.label))
            throw std::invalid_argument("limit_moment: word uses label '" + t.label + "' absent from the profile");
    CovarianceTable tbl = ensemble_table(kind, s, profile);
    std::vector<OperatorExpr> ops;
    ops.reserve(w.terms.size());
    for (const auto& t : w.terms) ops.push_back(limit_operator(t, kind));
    SqrtSum value = moment<SqrtSum>(ops, w.sector, tbl);
    return value.as_rational();
}

} // namespace mfblocks
