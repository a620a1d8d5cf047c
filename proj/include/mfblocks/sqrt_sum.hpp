#pragma once

#include <map>
#include <ostream>
#include <string>

#include "mfblocks/numeric.hpp"

namespace mfblocks {

// Exact real scalar of the form sum_i a_i * sqrt(s_i) with rational a_i and
// distinct squarefree integers s_i >= 1 (s = 1 is the rational part). Closed
// under +, -, *: sqrt(s)*sqrt(t) reduces via gcd without any factoring, so
// factorization only happens in sqrt_of(). This keeps vacuum expectations of
// operator words exactly rational whenever the covariances are rational.
class SqrtSum {
public:
    SqrtSum() = default;
    SqrtSum(const Rational& r);
    SqrtSum(int n) : SqrtSum(Rational(n)) {}

    // sqrt(b) for rational b >= 0, normalized to (root/den) * sqrt(squarefree).
    static SqrtSum sqrt_of(const Rational& b);

    SqrtSum operator-() const;
    SqrtSum& operator+=(const SqrtSum& o);
    SqrtSum& operator-=(const SqrtSum& o);
    SqrtSum& operator*=(const SqrtSum& o);
    friend SqrtSum operator+(SqrtSum a, const SqrtSum& b) { return a += b; }
    friend SqrtSum operator-(SqrtSum a, const SqrtSum& b) { return a -= b; }
    friend SqrtSum operator*(const SqrtSum& a, const SqrtSum& b);

    bool operator==(const SqrtSum& o) const { return terms_ == o.terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // Throws std::domain_error if irrational terms remain.
    Rational as_rational() const;

    double to_double() const;
    std::string str() const;

    const std::map<BigInt, Rational>& terms() const { return terms_; }

    friend std::ostream& operator<<(std::ostream& os, const SqrtSum& s) { return os << s.str(); }

private:
    void add_term(const BigInt& radicand, const Rational& coeff);

    std::map<BigInt, Rational> terms_; // squarefree radicand -> coefficient
};

} // namespace mfblocks
