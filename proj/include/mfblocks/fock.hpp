#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mfblocks/block_model.hpp"
#include "mfblocks/numeric.hpp"
#include "mfblocks/sqrt_sum.hpp"

namespace mfblocks {

// User label plus an internal variant; a creation operator family keyed by a
// user label u may internally use (u, prime) and (u, double_prime) streams.
struct Label {
    enum class Variant : uint8_t { plain, prime, double_prime };

    std::string base = "1";
    Variant variant = Variant::plain;

    static Label plain(std::string b) { return {std::move(b), Variant::plain}; }
    static Label prime(std::string b) { return {std::move(b), Variant::prime}; }
    static Label double_prime(std::string b) { return {std::move(b), Variant::double_prime}; }

    std::string str() const;
    auto operator<=>(const Label&) const = default;
};

// One tensor factor e_{left,right}(label) of a chain word.
struct WordFactor {
    int left = 0;
    int right = 0;
    Label label;

    auto operator<=>(const WordFactor&) const = default;
};

// Basis vector of the matricially free Fock space: either the vacuum of a
// sector, or a chain e_{p1,p2}(u1) (x) e_{p2,p3}(u2) (x) ... whose sector is
// the right index of the last factor. Consecutive factors must match
// (right of factor i == left of factor i+1).
class BasisWord {
public:
    static BasisWord vacuum(int sector);
    static BasisWord chain(std::vector<WordFactor> factors);

    bool is_vacuum() const { return factors_.empty(); }
    int sector() const { return sector_; }
    size_t length() const { return factors_.size(); }
    const std::vector<WordFactor>& factors() const { return factors_; }
    int leading_left() const; // requires a nonempty chain

    BasisWord prepended(const WordFactor& f) const;
    BasisWord without_first() const;

    std::string str() const; // "Omega_q" or "p1,q1,u1 | p2,q2,u2 | ..."
    auto operator<=>(const BasisWord&) const = default;

private:
    int sector_ = 0;
    std::vector<WordFactor> factors_;
};

// Covariances b_{p,q}(u) >= 0 of the creation operators, keyed by block pair
// and internal label. Entries may be zero (the operator is then trivial);
// looking up an absent entry is an error.
class CovarianceTable {
public:
    CovarianceTable() = default;
    explicit CovarianceTable(int r) : r_(r) {}

    int r() const { return r_; }
    void set(int p, int q, const Label& u, const Rational& b);
    const Rational& get(int p, int q, const Label& u) const;
    bool has(int p, int q, const Label& u) const;
    // Merge entries from another table; conflicting values throw.
    void merge(const CovarianceTable& other);

private:
    void check_range(int p, int q) const;

    int r_ = 0;
    std::map<std::tuple<int, int, Label>, Rational> entries_;
};

// Scalar abstraction so the engine runs in exact (SqrtSum) or floating mode.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<SqrtSum> {
    static SqrtSum from_rational(const Rational& c) { return SqrtSum(c); }
    static SqrtSum sqrt(const Rational& b) { return SqrtSum::sqrt_of(b); }
    static bool is_zero(const SqrtSum& s) { return s.is_zero(); }
    static std::string str(const SqrtSum& s) { return s.str(); }
};

template <>
struct ScalarOps<double> {
    static double from_rational(const Rational& c) { return to_double(c); }
    static double sqrt(const Rational& b);
    static bool is_zero(double s) { return s == 0.0; }
    static std::string str(double s);
};

// Finitely supported vector in the Fock space, coefficients indexed by basis
// word in canonical order (sector, then length, then factors).
template <class S>
class FockVector {
public:
    FockVector() = default;
    static FockVector unit(const BasisWord& w) {
        FockVector v;
        v.coeffs_.emplace(w, ScalarOps<S>::from_rational(1));
        return v;
    }

    void add(const BasisWord& w, const S& c) {
        if (ScalarOps<S>::is_zero(c)) return;
        auto [it, inserted] = coeffs_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (ScalarOps<S>::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& o) {
        for (const auto& [w, c] : o.coeffs_) add(w, c);
        return *this;
    }

    FockVector scaled(const S& c) const {
        FockVector out;
        if (ScalarOps<S>::is_zero(c)) return out;
        for (const auto& [w, x] : coeffs_) out.coeffs_.emplace(w, x * c);
        return out;
    }

    S coefficient(const BasisWord& w) const {
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? ScalarOps<S>::from_rational(0) : it->second;
    }

    bool empty() const { return coeffs_.empty(); }
    size_t support_size() const { return coeffs_.size(); }
    const std::map<BasisWord, S>& coeffs() const { return coeffs_; }

    bool operator==(const FockVector& o) const { return coeffs_ == o.coeffs_; }

private:
    std::map<BasisWord, S> coeffs_;
};

// Orthonormal-basis inner product (all scalars here are real).
template <class S>
S inner(const FockVector<S>& a, const FockVector<S>& b) {
    S acc = ScalarOps<S>::from_rational(0);
    const auto& small = a.support_size() <= b.support_size() ? a : b;
    const auto& large = a.support_size() <= b.support_size() ? b : a;
    for (const auto& [w, c] : small.coeffs()) {
        S other = large.coefficient(w);
        if (!ScalarOps<S>::is_zero(other)) acc += c * other;
    }
    return acc;
}

// Creation: maps Omega_q to sqrt(b_{p,q}(u)) e_{p,q}(u) and prepends
// e_{p,q}(u) to chains whose first factor has left index q; all other basis
// words go to zero.
template <class S>
FockVector<S> create(int p, int q, const Label& u, const FockVector<S>& v, const CovarianceTable& tbl);

// Adjoint of create: strips a leading factor e_{p,q}(u), scaling by
// sqrt(b_{p,q}(u)); the vacuum and unmatched chains go to zero.
template <class S>
FockVector<S> annihilate(int p, int q, const Label& u, const FockVector<S>& v, const CovarianceTable& tbl);

// Projection onto words "based at q": keeps Omega_q and chains whose first
// factor has left index q.
template <class S>
FockVector<S> project(int q, const FockVector<S>& v);

// Primitive operator symbols for word evaluation.
struct PrimitiveOp {
    enum class Kind : uint8_t { identity, create, annihilate, project };

    Kind kind = Kind::identity;
    int p = 0;
    int q = 0;
    Label label;

    static PrimitiveOp identity_op() { return {}; }
    static PrimitiveOp creation(int p, int q, Label u) { return {Kind::create, p, q, std::move(u)}; }
    static PrimitiveOp annihilation(int p, int q, Label u) { return {Kind::annihilate, p, q, std::move(u)}; }
    static PrimitiveOp projection(int q) { return {Kind::project, q, q, {}}; }

    PrimitiveOp adjoint() const;
    std::string str() const;
    auto operator<=>(const PrimitiveOp&) const = default;
};

template <class S>
FockVector<S> apply_primitive(const PrimitiveOp& op, const FockVector<S>& v, const CovarianceTable& tbl);

// <Omega_q, ops[0] ops[1] ... ops[m-1] Omega_q>: the sequence acts right to
// left, exactly (no truncation; a word of m operators only ever reaches
// basis words of length <= m).
template <class S = SqrtSum>
S evaluate_word(std::span<const PrimitiveOp> ops, int q, const CovarianceTable& tbl);

// Weighted vacuum state sum_q d_q <Omega_q, . Omega_q>; requires sum d = 1.
template <class S = SqrtSum>
S weighted_state(const BlockStructure& s, std::span<const PrimitiveOp> ops, const CovarianceTable& tbl);

// Debug rendering, one line per word in canonical order:
// coeff TAB sector TAB factors (vacuum words render as Omega_q).
template <class S>
std::string dump(const FockVector<S>& v);

} // namespace mfblocks
