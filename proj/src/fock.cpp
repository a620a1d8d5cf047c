#include "mfblocks/fock.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mfblocks {

std::string Label::str() const {
    switch (variant) {
        case Variant::plain: return base;
        case Variant::prime: return base + "'";
        case Variant::double_prime: return base + "''";
    }
    return base;
}

BasisWord BasisWord::vacuum(int sector) {
    if (sector < 1) throw std::out_of_range("BasisWord: sector must be >= 1");
    BasisWord w;
    w.sector_ = sector;
    return w;
}

BasisWord BasisWord::chain(std::vector<WordFactor> factors) {
    if (factors.empty()) throw std::invalid_argument("BasisWord::chain: empty factor list");
    for (size_t i = 0; i + 1 < factors.size(); ++i)
        if (factors[i].right != factors[i + 1].left)
            throw std::invalid_argument("BasisWord::chain: factor " + std::to_string(i) +
                                        " does not chain into its successor");
    BasisWord w;
    w.sector_ = factors.back().right;
    w.factors_ = std::move(factors);
    return w;
}

int BasisWord::leading_left() const {
    if (factors_.empty()) throw std::logic_error("BasisWord::leading_left: vacuum word");
    return factors_.front().left;
}

BasisWord BasisWord::prepended(const WordFactor& f) const {
    BasisWord w;
    w.sector_ = is_vacuum() ? f.right : sector_;
    w.factors_.reserve(factors_.size() + 1);
    w.factors_.push_back(f);
    w.factors_.insert(w.factors_.end(), factors_.begin(), factors_.end());
    return w;
}

BasisWord BasisWord::without_first() const {
    if (factors_.empty()) throw std::logic_error("BasisWord::without_first: vacuum word");
    BasisWord w;
    w.sector_ = sector_;
    w.factors_.assign(factors_.begin() + 1, factors_.end());
    return w;
}

std::string BasisWord::str() const {
    if (is_vacuum()) return "Ω_" + std::to_string(sector_);
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " | ";
        os << factors_[i].left << "," << factors_[i].right << "," << factors_[i].label.str();
    }
    return os.str();
}

void CovarianceTable::check_range(int p, int q) const {
    if (p < 1 || q < 1 || p > r_ || q > r_)
        throw std::out_of_range("CovarianceTable: block index (" + std::to_string(p) + "," + std::to_string(q) +
                                ") outside 1.." + std::to_string(r_));
}

void CovarianceTable::set(int p, int q, const Label& u, const Rational& b) {
    check_range(p, q);
    if (b < 0) throw std::invalid_argument("CovarianceTable: negative covariance");
    entries_[{p, q, u}] = b;
}

const Rational& CovarianceTable::get(int p, int q, const Label& u) const {
    check_range(p, q);
    auto it = entries_.find({p, q, u});
    if (it == entries_.end())
        throw std::invalid_argument("CovarianceTable: missing entry b_{" + std::to_string(p) + "," +
                                    std::to_string(q) + "}(" + u.str() + ")");
    return it->second;
}

bool CovarianceTable::has(int p, int q, const Label& u) const {
    return entries_.count({p, q, u}) > 0;
}

void CovarianceTable::merge(const CovarianceTable& other) {
    if (r_ == 0) r_ = other.r_;
    if (other.r_ != r_) throw std::invalid_argument("CovarianceTable::merge: block count mismatch");
    for (const auto& [key, value] : other.entries_) {
        auto [it, inserted] = entries_.emplace(key, value);
        if (!inserted && it->second != value)
            throw std::invalid_argument("CovarianceTable::merge: conflicting entries");
    }
}

double ScalarOps<double>::sqrt(const Rational& b) { return std::sqrt(to_double(b)); }

std::string ScalarOps<double>::str(double s) {
    std::ostringstream os;
    os.precision(17);
    os << s;
    return os.str();
}

template <class S>
FockVector<S> create(int p, int q, const Label& u, const FockVector<S>& v, const CovarianceTable& tbl) {
    const Rational& b = tbl.get(p, q, u);
    FockVector<S> out;
    if (b == 0) return out;
    S root = ScalarOps<S>::sqrt(b);
    WordFactor f{p, q, u};
    for (const auto& [w, c] : v.coeffs()) {
        if (w.is_vacuum() ? (w.sector() == q) : (w.leading_left() == q)) out.add(w.prepended(f), c * root);
    }
    return out;
}

template <class S>
FockVector<S> annihilate(int p, int q, const Label& u, const FockVector<S>& v, const CovarianceTable& tbl) {
    const Rational& b = tbl.get(p, q, u);
    FockVector<S> out;
    if (b == 0) return out;
    S root = ScalarOps<S>::sqrt(b);
    WordFactor f{p, q, u};
    for (const auto& [w, c] : v.coeffs()) {
        if (!w.is_vacuum() && w.factors().front() == f) out.add(w.without_first(), c * root);
    }
    return out;
}

template <class S>
FockVector<S> project(int q, const FockVector<S>& v) {
    if (q < 1) throw std::out_of_range("project: sector must be >= 1");
    FockVector<S> out;
    for (const auto& [w, c] : v.coeffs()) {
        if (w.is_vacuum() ? (w.sector() == q) : (w.leading_left() == q)) out.add(w, c);
    }
    return out;
}

PrimitiveOp PrimitiveOp::adjoint() const {
    PrimitiveOp out = *this;
    if (kind == Kind::create)
        out.kind = Kind::annihilate;
    else if (kind == Kind::annihilate)
        out.kind = Kind::create;
    return out;
}

std::string PrimitiveOp::str() const {
    switch (kind) {
        case Kind::identity: return "1";
        case Kind::create:
            return "℘[" + std::to_string(p) + "," + std::to_string(q) + "](" + label.str() + ")";
        case Kind::annihilate:
            return "℘*[" + std::to_string(p) + "," + std::to_string(q) + "](" + label.str() + ")";
        case Kind::project: return "P[" + std::to_string(q) + "]";
    }
    return "?";
}

template <class S>
FockVector<S> apply_primitive(const PrimitiveOp& op, const FockVector<S>& v, const CovarianceTable& tbl) {
    switch (op.kind) {
        case PrimitiveOp::Kind::identity: return v;
        case PrimitiveOp::Kind::create: return create(op.p, op.q, op.label, v, tbl);
        case PrimitiveOp::Kind::annihilate: return annihilate(op.p, op.q, op.label, v, tbl);
        case PrimitiveOp::Kind::project:
            if (op.q > tbl.r()) throw std::out_of_range("project: sector outside 1..r");
            return project(op.q, v);
    }
    throw std::logic_error("apply_primitive: unknown kind");
}

template <class S>
S evaluate_word(std::span<const PrimitiveOp> ops, int q, const CovarianceTable& tbl) {
    if (q < 1 || q > tbl.r()) throw std::out_of_range("evaluate_word: sector outside 1..r");
    FockVector<S> v = FockVector<S>::unit(BasisWord::vacuum(q));
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = apply_primitive(*it, v, tbl);
    return v.coefficient(BasisWord::vacuum(q));
}

template <class S>
S weighted_state(const BlockStructure& s, std::span<const PrimitiveOp> ops, const CovarianceTable& tbl) {
    Rational sum = 0;
    for (const auto& x : s.d) sum += x;
    if (sum != 1)
        throw std::invalid_argument("weighted_state: dimension ratios must sum to 1, got " + to_string(sum));
    S acc = ScalarOps<S>::from_rational(0);
    for (int q = 1; q <= s.r; ++q) {
        if (s.dim(q) == 0) continue;
        acc += evaluate_word<S>(ops, q, tbl) * ScalarOps<S>::from_rational(s.dim(q));
    }
    return acc;
}

template <class S>
std::string dump(const FockVector<S>& v) {
    std::ostringstream os;
    for (const auto& [w, c] : v.coeffs())
        os << ScalarOps<S>::str(c) << "\t" << w.sector() << "\t" << w.str() << "\n";
    return os.str();
}

template FockVector<SqrtSum> create(int, int, const Label&, const FockVector<SqrtSum>&, const CovarianceTable&);
template FockVector<double> create(int, int, const Label&, const FockVector<double>&, const CovarianceTable&);
template FockVector<SqrtSum> annihilate(int, int, const Label&, const FockVector<SqrtSum>&, const CovarianceTable&);
template FockVector<double> annihilate(int, int, const Label&, const FockVector<double>&, const CovarianceTable&);
template FockVector<SqrtSum> project(int, const FockVector<SqrtSum>&);
template FockVector<double> project(int, const FockVector<double>&);
template FockVector<SqrtSum> apply_primitive(const PrimitiveOp&, const FockVector<SqrtSum>&, const CovarianceTable&);
template FockVector<double> apply_primitive(const PrimitiveOp&, const FockVector<double>&, const CovarianceTable&);
template SqrtSum evaluate_word<SqrtSum>(std::span<const PrimitiveOp>, int, const CovarianceTable&);
template double evaluate_word<double>(std::span<const PrimitiveOp>, int, const CovarianceTable&);
template SqrtSum weighted_state<SqrtSum>(const BlockStructure&, std::span<const PrimitiveOp>, const CovarianceTable&);
template double weighted_state<double>(const BlockStructure&, std::span<const PrimitiveOp>, const CovarianceTable&);
template std::string dump(const FockVector<SqrtSum>&);
template std::string dump(const FockVector<double>&);

} // namespace mfblocks
