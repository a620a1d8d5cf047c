#include "mfblocks/numeric.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mfblocks {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad_number(std::string_view text) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad_number(text);

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_number(text);
        BigInt d{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        value = Rational(BigInt{std::string(num)}, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad_number(text);
        if (!whole.empty() && !all_digits(whole)) bad_number(text);
        if (!frac.empty() && !all_digits(frac)) bad_number(text);
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
        BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
        value = Rational(w * scale + f, scale);
    } else {
        if (!all_digits(s)) bad_number(text);
        value = Rational(BigInt(std::string(s)));
    }
    return negative ? -value : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::pair<BigInt, BigInt> squarefree_decompose(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("squarefree_decompose: negative input");
    if (n > BigInt("10000000000000000000")) // 10^19
        throw std::invalid_argument("squarefree_decompose: input too large to factor");
    if (n == 0) return {0, 1};
    BigInt root = 1, squarefree = 1, m = n;
    for (BigInt p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) root *= p;
        if (e % 2 == 1) squarefree *= p;
    }
    squarefree *= m; // leftover m is prime (or 1)
    return {root, squarefree};
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative input");
    BigInt result = 1;
    for (long i = 2; i <= n; ++i) result *= i;
    return result;
}

} // namespace mfblocks
