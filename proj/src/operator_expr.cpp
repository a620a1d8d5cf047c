#include "mfblocks/operator_expr.hpp"

#include <algorithm>
#include <sstream>

namespace mfblocks {

OperatorExpr OperatorExpr::scalar(const Rational& c) {
    OperatorExpr e;
    e.add_term({c, {}});
    return e;
}

OperatorExpr OperatorExpr::primitive(PrimitiveOp op) {
    OperatorExpr e;
    e.add_term({Rational(1), {std::move(op)}});
    return e;
}

void OperatorExpr::add_term(Term t) {
    if (t.coeff == 0) return;
    for (auto& existing : terms_) {
        if (existing.factors == t.factors) {
            existing.coeff += t.coeff;
            if (existing.coeff == 0) {
                terms_.erase(terms_.begin() + (&existing - terms_.data()));
            }
            return;
        }
    }
    terms_.push_back(std::move(t));
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
    for (const auto& t : o.terms_) add_term(t);
    return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr out;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            OperatorExpr::Term t;
            t.coeff = ta.coeff * tb.coeff;
            t.factors = ta.factors;
            std::vector<PrimitiveOp> rhs;
            for (const auto& f : tb.factors)
                if (f.kind != PrimitiveOp::Kind::identity) rhs.push_back(f);
            t.factors.erase(std::remove_if(t.factors.begin(), t.factors.end(),
                                           [](const PrimitiveOp& f) { return f.kind == PrimitiveOp::Kind::identity; }),
                            t.factors.end());
            t.factors.insert(t.factors.end(), rhs.begin(), rhs.end());
            out.add_term(std::move(t));
        }
    }
    return out;
}

OperatorExpr operator*(const Rational& c, const OperatorExpr& e) {
    OperatorExpr out;
    for (const auto& t : e.terms_) out.add_term({c * t.coeff, t.factors});
    return out;
}

OperatorExpr OperatorExpr::adjoint() const {
    OperatorExpr out;
    for (const auto& t : terms_) {
        Term adj;
        adj.coeff = t.coeff; // rational coefficients are their own conjugates
        adj.factors.reserve(t.factors.size());
        for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) adj.factors.push_back(it->adjoint());
        out.add_term(std::move(adj));
    }
    return out;
}

std::string OperatorExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
        if (!first) os << (t.coeff < 0 ? "-" : "+");
        else if (t.coeff < 0) os << "-";
        first = false;
        bool wrote_coeff = false;
        if (mag != 1 || t.factors.empty()) {
            os << mag;
            wrote_coeff = true;
        }
        for (size_t i = 0; i < t.factors.size(); ++i) {
            if (i > 0 || wrote_coeff) os << "*";
            os << t.factors[i].str();
        }
    }
    return os.str();
}

bool OperatorExpr::equivalent(const OperatorExpr& o) const {
    auto key = [](const OperatorExpr& e) {
        std::vector<std::pair<std::vector<PrimitiveOp>, Rational>> k;
        for (const auto& t : e.terms_) k.emplace_back(t.factors, t.coeff);
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(*this) == key(o);
}

template <class S>
FockVector<S> apply_expr(const OperatorExpr& e, const FockVector<S>& v, const CovarianceTable& tbl) {
    FockVector<S> out;
    for (const auto& t : e.terms()) {
        FockVector<S> w = v;
        for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) w = apply_primitive(*it, w, tbl);
        out += w.scaled(ScalarOps<S>::from_rational(t.coeff));
    }
    return out;
}

template <class S>
S moment(std::span<const OperatorExpr> word, int q, const CovarianceTable& tbl) {
    if (q < 1 || q > tbl.r()) throw std::out_of_range("moment: sector outside 1..r");
    const size_t m = word.size();
    const size_t half = m / 2;
    // <Omega, X_0...X_{m-1} Omega> = <(X_0...X_{half-1})* Omega, X_half...X_{m-1} Omega>
    FockVector<S> left = FockVector<S>::unit(BasisWord::vacuum(q));
    for (size_t i = 0; i < half; ++i) left = apply_expr(word[i].adjoint(), left, tbl);
    FockVector<S> right = FockVector<S>::unit(BasisWord::vacuum(q));
    for (size_t i = m; i > half; --i) right = apply_expr(word[i - 1], right, tbl);
    return inner(left, right);
}

template <class S>
S weighted_moment(const BlockStructure& s, std::span<const OperatorExpr> word, const CovarianceTable& tbl) {
    Rational sum = 0;
    for (const auto& x : s.d) sum += x;
    if (sum != 1)
        throw std::invalid_argument("weighted_moment: dimension ratios must sum to 1, got " + to_string(sum));
    S acc = ScalarOps<S>::from_rational(0);
    for (int sector = 1; sector <= s.r; ++sector) {
        if (s.dim(sector) == 0) continue;
        acc += moment<S>(word, sector, tbl) * ScalarOps<S>::from_rational(s.dim(sector));
    }
    return acc;
}

template FockVector<SqrtSum> apply_expr(const OperatorExpr&, const FockVector<SqrtSum>&, const CovarianceTable&);
template FockVector<double> apply_expr(const OperatorExpr&, const FockVector<double>&, const CovarianceTable&);
template SqrtSum moment<SqrtSum>(std::span<const OperatorExpr>, int, const CovarianceTable&);
template double moment<double>(std::span<const OperatorExpr>, int, const CovarianceTable&);
template SqrtSum weighted_moment<SqrtSum>(const BlockStructure&, std::span<const OperatorExpr>, const CovarianceTable&);
template double weighted_moment<double>(const BlockStructure&, std::span<const OperatorExpr>, const CovarianceTable&);

} // namespace mfblocks
