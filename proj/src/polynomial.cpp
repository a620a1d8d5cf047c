#include "mfblocks/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mfblocks {

namespace {

void trim(Poly::Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

unsigned total_degree(const Poly::Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

} // namespace

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(size_t index) {
    Poly p;
    Monomial m(index + 1, 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

void Poly::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    trim(m);
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [m1, c1] : a.terms_) {
        for (const auto& [m2, c2] : b.terms_) {
            Poly::Monomial m(std::max(m1.size(), m2.size()), 0);
            for (size_t i = 0; i < m1.size(); ++i) m[i] += m1[i];
            for (size_t i = 0; i < m2.size(); ++i) m[i] += m2[i];
            out.add_term(std::move(m), c1 * c2);
        }
    }
    return out;
}

size_t Poly::num_vars() const {
    size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return n;
}

Rational Poly::eval(std::span<const Rational> values) const {
    if (values.size() < num_vars()) throw std::invalid_argument("Poly::eval: not enough values");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) term *= values[i];
        acc += term;
    }
    return acc;
}

Poly Poly::subst(std::span<const Poly> values) const {
    if (values.size() < num_vars()) throw std::invalid_argument("Poly::subst: not enough values");
    Poly acc;
    for (const auto& [m, c] : terms_) {
        Poly term(c);
        for (size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) term *= values[i];
        acc += term;
    }
    return acc;
}

std::string Poly::str(std::span<const std::string> names, const std::string& prefix) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        unsigned da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da < db;
        return a->first < b->first;
    });

    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const auto& [m, c] = *t;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;

        std::ostringstream vars;
        bool any_var = false;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (any_var) vars << "*";
            if (i < names.size())
                vars << names[i];
            else
                vars << prefix << i;
            if (m[i] > 1) vars << "^" << m[i];
            any_var = true;
        }
        if (!any_var) {
            os << mag;
        } else if (mag == 1) {
            os << vars.str();
        } else {
            os << mag << "*" << vars.str();
        }
    }
    return os.str();
}

} // namespace mfblocks
