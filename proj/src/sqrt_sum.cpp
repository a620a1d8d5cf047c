#include "mfblocks/sqrt_sum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mfblocks {

SqrtSum::SqrtSum(const Rational& r) {
    if (r != 0) terms_.emplace(BigInt(1), r);
}

SqrtSum SqrtSum::sqrt_of(const Rational& b) {
    if (b < 0) throw std::domain_error("sqrt_of: negative radicand");
    SqrtSum out;
    if (b == 0) return out;
    BigInt num = boost::multiprecision::numerator(b);
    BigInt den = boost::multiprecision::denominator(b);
    auto [root, squarefree] = squarefree_decompose(num * den);
    out.terms_.emplace(squarefree, Rational(root, den));
    return out;
}

void SqrtSum::add_term(const BigInt& radicand, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SqrtSum SqrtSum::operator-() const {
    SqrtSum out;
    for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
    return out;
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

SqrtSum& SqrtSum::operator-=(const SqrtSum& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
}

SqrtSum operator*(const SqrtSum& a, const SqrtSum& b) {
    SqrtSum out;
    for (const auto& [s1, c1] : a.terms_) {
        for (const auto& [s2, c2] : b.terms_) {
            // s1, s2 squarefree => s1*s2 = g^2 * ((s1/g)*(s2/g)) with the
            // cofactors coprime and squarefree, so no factoring is needed.
            BigInt g = boost::multiprecision::gcd(s1, s2);
            out.add_term((s1 / g) * (s2 / g), c1 * c2 * g);
        }
    }
    return out;
}

SqrtSum& SqrtSum::operator*=(const SqrtSum& o) { return *this = *this * o; }

bool SqrtSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SqrtSum::as_rational() const {
    if (terms_.empty()) return 0;
    if (!is_rational()) throw std::domain_error("as_rational: irrational value " + str());
    return terms_.begin()->second;
}

double SqrtSum::to_double() const {
    double acc = 0.0;
    for (const auto& [s, c] : terms_) acc += mfblocks::to_double(c) * std::sqrt(s.convert_to<double>());
    return acc;
}

std::string SqrtSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << (c > 0 ? "+" : "");
        os << c;
        if (s != 1) os << "*sqrt(" << s << ")";
        first = false;
    }
    return os.str();
}

} // namespace mfblocks
