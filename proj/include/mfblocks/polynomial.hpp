#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mfblocks/numeric.hpp"

namespace mfblocks {

// Multivariate polynomial with rational coefficients. Monomials are exponent
// vectors with trailing zeros trimmed, so the variable count is implicit and
// polynomials over different variable sets mix freely.
class Poly {
public:
    using Monomial = std::vector<unsigned>;

    Poly() = default;
    Poly(const Rational& c);
    Poly(int c) : Poly(Rational(c)) {}
    static Poly var(size_t index);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t num_vars() const; // 1 + highest variable index used, 0 if constant

    // values.size() must cover num_vars().
    Rational eval(std::span<const Rational> values) const;
    // Substitute polynomials for variables (used for partial evaluation).
    Poly subst(std::span<const Poly> values) const;

    // Sorted by total degree, then lexicographically; e.g. "t + t^2" or
    // "d1*d2 + 1/2*d0*d1^2". Variable i is named names[i] if provided, else
    // prefix + i.
    std::string str(std::span<const std::string> names = {}, const std::string& prefix = "x") const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void add_term(Monomial m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

} // namespace mfblocks
