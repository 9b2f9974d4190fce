#pragma once

// Exact integer polynomial / rational function / truncated series arithmetic.
// Coefficients are arbitrary-precision (GMP); no floating point anywhere
// except the final refinement output of root isolation.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bimodal/errors.hpp"

namespace bimodal {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Dense integer polynomial, coefficients ascending by degree.
// Canonical form: no trailing zero coefficients (zero polynomial is empty).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(const BigInt& v) {
        IntPolynomial p;
        p.c_.push_back(v);
        p.trim();
        return p;
    }
    static IntPolynomial monomial(const BigInt& coeff, int k) {
        IntPolynomial p;
        if (coeff != 0) {
            p.c_.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
            p.c_[static_cast<std::size_t>(k)] = coeff;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return BigInt(0);
        return c_[static_cast<std::size_t>(k)];
    }
    const BigInt& leading() const { return c_.back(); }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator-(const IntPolynomial& a) {
        std::vector<BigInt> r(a.c_);
        for (auto& v : r) v = -v;
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial();
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(r));
    }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
        return !(a == b);
    }

    BigRat evaluate(const BigRat& x) const {
        BigRat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
        return acc;
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return IntPolynomial();
        std::vector<BigInt> r(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * BigInt(static_cast<long>(k));
        return IntPolynomial(std::move(r));
    }

    // gcd of all coefficients; 0 for the zero polynomial
    BigInt content() const {
        BigInt g(0);
        for (const auto& v : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
        return g;
    }

    // number of leading zero coefficients (valuation at t=0); degree+1 for zero poly
    int valuation() const {
        if (c_.empty()) return static_cast<int>(c_.size());
        int v = 0;
        while (v < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(v)] == 0) ++v;
        return v;
    }

    // lowest-degree nonzero coefficient (the first printed term)
    const BigInt& lowest() const { return c_[static_cast<std::size_t>(valuation())]; }

    IntPolynomial shifted_down(int k) const { // divide by t^k (requires valuation >= k)
        std::vector<BigInt> r(c_.begin() + k, c_.end());
        return IntPolynomial(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

namespace detail {

// Rational-coefficient polynomial helpers used for division, gcd and Sturm
// sequences; represented as ascending coefficient vectors with no trailing
// zeros.
using RatPoly = std::vector<BigRat>;

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly rp_from(const IntPolynomial& p) {
    RatPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return r;
}

inline RatPoly rp_derivative(const RatPoly& p) {
    RatPoly r;
    for (std::size_t k = 1; k < p.size(); ++k) r.push_back(p[k] * BigRat(static_cast<long>(k)));
    rp_trim(r);
    return r;
}

inline BigRat rp_eval(const RatPoly& p, const BigRat& x) {
    BigRat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// polynomial long division over Q; returns {quotient, remainder}
inline std::pair<RatPoly, RatPoly> rp_divmod(RatPoly a, const RatPoly& b) {
    rp_trim(a);
    if (b.empty()) throw DomainError("polynomial division by zero");
    RatPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, BigRat(0));
    while (a.size() >= b.size() && !a.empty()) {
        BigRat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        rp_trim(a);
        if (!a.empty() && a.size() >= b.size() && a.back() == 0) a.pop_back();
    }
    rp_trim(q);
    return {q, a};
}

inline RatPoly rp_monic(RatPoly p) {
    rp_trim(p);
    if (p.empty()) return p;
    BigRat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        auto [q, r] = rp_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return rp_monic(a);
}

// clear denominators and divide by content: primitive integer polynomial with
// positive leading coefficient (zero stays zero)
inline IntPolynomial rp_to_primitive(const RatPoly& p) {
    if (p.empty()) return IntPolynomial();
    BigInt lcm_den(1);
    for (const auto& c : p) {
        BigInt den = c.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<BigInt> ints;
    ints.reserve(p.size());
    for (const auto& c : p) {
        BigRat scaled = c * BigRat(lcm_den);
        ints.push_back(scaled.get_num());
    }
    IntPolynomial ip{std::move(ints)};
    BigInt g = ip.content();
    if (g == 0) return IntPolynomial();
    if (ip.leading() < 0) g = -g;
    std::vector<BigInt> out;
    out.reserve(ip.coeffs().size());
    for (const auto& c : ip.coeffs()) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        out.push_back(q);
    }
    return IntPolynomial(std::move(out));
}

} // namespace detail

// gcd over Q, returned as a primitive integer polynomial with positive
// leading coefficient
inline IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    return detail::rp_to_primitive(detail::rp_gcd(detail::rp_from(a), detail::rp_from(b)));
}

// exact division: a / b if the remainder is zero, nullopt otherwise
inline std::optional<IntPolynomial> poly_divide_exact(const IntPolynomial& a,
                                                      const IntPolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    auto [q, r] = detail::rp_divmod(detail::rp_from(a), detail::rp_from(b));
    if (!r.empty()) return std::nullopt;
    for (const auto& c : q)
        if (c.get_den() != 1) return std::nullopt;
    std::vector<BigInt> out;
    out.reserve(q.size());
    for (const auto& c : q) out.push_back(c.get_num());
    return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

// num/den with exact integer coefficients. Canonical form keeps the combined
// integer content at 1 and the denominator's lowest-degree coefficient
// positive (the sign convention the closed forms print with); common
// polynomial factors may remain, so equality is by cross-multiplication.
struct RationalFunction {
    IntPolynomial num;
    IntPolynomial den;

    RationalFunction() : num(IntPolynomial::zero()), den(IntPolynomial::constant(1)) {}
    RationalFunction(IntPolynomial n, IntPolynomial d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw DomainError("rational function with zero denominator");
        canonicalize();
    }

    static RationalFunction from_poly(IntPolynomial p) {
        return RationalFunction(std::move(p), IntPolynomial::constant(1));
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.num, a.den * b.den);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num.is_zero()) throw DomainError("rational function division by zero");
        return RationalFunction(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    // fully reduced copy (common polynomial factors removed)
    RationalFunction reduced() const {
        IntPolynomial n = num, d = den;
        for (;;) {
            IntPolynomial g = poly_gcd(n, d);
            if (g.degree() < 1) break;
            n = *poly_divide_exact(n, g);
            d = *poly_divide_exact(d, g);
        }
        return RationalFunction(std::move(n), std::move(d));
    }

private:
    void canonicalize() {
        if (num.is_zero()) {
            den = IntPolynomial::constant(1);
            return;
        }
        BigInt g = num.content();
        BigInt gd = den.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gd.get_mpz_t());
        if (den.lowest() < 0) g = -g; // first printed denominator term positive
        if (g != 1) {
            auto divide = [&](const IntPolynomial& p) {
                std::vector<BigInt> out;
                out.reserve(p.coeffs().size());
                for (const auto& c : p.coeffs()) {
                    BigInt q;
                    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
                    out.push_back(q);
                }
                return IntPolynomial(std::move(out));
            };
            num = divide(num);
            den = divide(den);
        }
    }
};

// ---------------------------------------------------------------------------
// Truncated power series
// ---------------------------------------------------------------------------

// Exact rational coefficients c[0..order]; valid through t^order.
struct TruncatedSeries {
    std::vector<BigRat> coeffs; // size = order + 1

    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : coeffs(static_cast<std::size_t>(order) + 1, BigRat(0)) {}
    explicit TruncatedSeries(std::vector<BigRat> c) : coeffs(std::move(c)) {}

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] - b.coeffs[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        TruncatedSeries r = a;
        for (auto& c : r.coeffs) c = -c;
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.coeffs.size(); ++i)
            for (std::size_t j = 0; i + j < r.coeffs.size() && j < b.coeffs.size(); ++j)
                if (i < a.coeffs.size()) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        return r;
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs == b.coeffs;
    }

    TruncatedSeries truncated(int new_order) const {
        TruncatedSeries r(new_order);
        for (int i = 0; i <= new_order && i <= order(); ++i)
            r.coeffs[static_cast<std::size_t>(i)] = coeffs[static_cast<std::size_t>(i)];
        return r;
    }

    // divide by a polynomial with nonzero constant term
    TruncatedSeries divided_by_poly(const IntPolynomial& d) const {
        if (d.is_zero() || d.coeff(0) == 0)
            throw DenominatorVanishesAtZero("series division requires d(0) != 0");
        TruncatedSeries r(order());
        BigRat d0{d.coeff(0)};
        for (int k = 0; k <= order(); ++k) {
            BigRat acc = coeffs[static_cast<std::size_t>(k)];
            for (int i = 1; i <= std::min(k, d.degree()); ++i)
                acc -= BigRat(d.coeff(i)) * r.coeffs[static_cast<std::size_t>(k - i)];
            r.coeffs[static_cast<std::size_t>(k)] = acc / d0;
        }
        return r;
    }
};

// Maclaurin expansion of num/den through t^order. Common powers of t are
// factored out first; after that den(0) must be nonzero.
inline TruncatedSeries series_of_rational(const RationalFunction& r, int order) {
    if (r.num.is_zero()) return TruncatedSeries(order);
    IntPolynomial num = r.num, den = r.den;
    int v = std::min(num.valuation(), den.valuation());
    if (v > 0) {
        num = num.shifted_down(v);
        den = den.shifted_down(v);
    }
    if (den.coeff(0) == 0)
        throw DenominatorVanishesAtZero("denominator vanishes at t = 0");
    TruncatedSeries n(order);
    for (int k = 0; k <= order; ++k) n.coeffs[static_cast<std::size_t>(k)] = BigRat(num.coeff(k));
    return n.divided_by_poly(den);
}

// ---------------------------------------------------------------------------
// Real root isolation (Sturm sequences + bisection)
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<RatPoly> sturm_chain(const RatPoly& f) {
    std::vector<RatPoly> chain;
    chain.push_back(f);
    chain.push_back(rp_derivative(f));
    while (!chain.back().empty() && chain.back().size() > 1) {
        auto [q, r] = rp_divmod(chain[chain.size() - 2], chain.back());
        (void)q;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_of(const BigRat& v) {
    return mpq_sgn(v.get_mpq_t());
}

inline int sturm_variations(const std::vector<RatPoly>& chain, const BigRat& x) {
    int prev = 0, var = 0;
    for (const auto& p : chain) {
        int s = sign_of(rp_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// square-free part of p as a rational-coefficient polynomial
inline RatPoly squarefree_part(const IntPolynomial& p) {
    RatPoly f = rp_from(p);
    RatPoly g = rp_gcd(f, rp_derivative(f));
    if (g.size() <= 1) return rp_monic(f);
    auto [q, r] = rp_divmod(f, g);
    (void)r;
    return rp_monic(q);
}

// least root of p in the open interval (lo, hi), refined to |result - root| <= tol;
// requires p(lo) != 0 and p(hi) != 0 after the caller's deflation
inline std::optional<double> least_root_in_open_interval(const IntPolynomial& p, const BigRat& lo0,
                                                         const BigRat& hi0, double tol) {
    RatPoly f = squarefree_part(p);
    if (f.size() <= 1) return std::nullopt;
    auto chain = sturm_chain(f);
    BigRat lo = lo0, hi = hi0;
    if (sign_of(rp_eval(f, lo)) == 0 || sign_of(rp_eval(f, hi)) == 0)
        throw DomainError("root isolation endpoints must not be roots");
    auto count_open = [&](const BigRat& a, const BigRat& b) {
        return sturm_variations(chain, a) - sturm_variations(chain, b);
    };
    if (count_open(lo, hi) <= 0) return std::nullopt;
    BigRat width = hi - lo;
    BigRat tol_rat(tol);
    while (width > tol_rat) {
        BigRat m = (lo + hi) / 2;
        // avoid landing exactly on a (rational) root
        int bump = 1;
        while (sign_of(rp_eval(f, m)) == 0) {
            m = m + (hi - m) / BigRat(1 << bump);
            ++bump;
        }
        if (count_open(lo, m) >= 1)
            hi = m;
        else
            lo = m;
        width = hi - lo;
    }
    BigRat mid = (lo + hi) / 2;
    return mid.get_d();
}

} // namespace detail

// Smallest real root of p in the open unit interval (0,1), to absolute
// precision tol, via exact Sturm isolation followed by rational bisection.
// Returns nullopt when there is no root in (0,1).
inline std::optional<double> least_root_in_unit_interval(const IntPolynomial& p, double tol) {
    if (p.is_zero()) throw DomainError("least_root_in_unit_interval: zero polynomial");
    if (tol <= 0) throw DomainError("least_root_in_unit_interval: tol must be positive");
    IntPolynomial q = p;
    int v = q.valuation();
    if (v > 0) q = q.shifted_down(v); // roots at t=0 are outside (0,1)
    // deflate roots at t=1 (outside the open interval)
    IntPolynomial t_minus_1{-1, 1};
    while (q.evaluate(BigRat(1)) == 0) q = *poly_divide_exact(q, t_minus_1);
    if (q.degree() < 1) return std::nullopt;
    return detail::least_root_in_open_interval(q, BigRat(0), BigRat(1), tol);
}

// Least positive root of p, searched over (0, B] for a Cauchy-style bound B.
// Used for spectral radii via det(I - tM); returns nullopt if p has no
// positive real root.
inline std::optional<double> least_positive_root(const IntPolynomial& p, double tol) {
    if (p.is_zero()) throw DomainError("least_positive_root: zero polynomial");
    IntPolynomial q = p;
    int v = q.valuation();
    if (v > 0) q = q.shifted_down(v);
    if (q.degree() < 1) return std::nullopt;
    // Cauchy bound: 1 + max |c_i| / |c_n|
    BigRat maxratio(0);
    BigRat lead{abs(q.leading())};
    for (int k = 0; k < q.degree(); ++k) {
        BigRat r = BigRat(abs(q.coeff(k))) / lead;
        if (r > maxratio) maxratio = r;
    }
    BigRat bound = maxratio + 2;
    while (q.evaluate(bound) == 0) bound += 1;
    // roots exactly at rational probe points are deflated into the interior
    // by choosing a bound that is not a root; 0 is excluded by valuation.
    return detail::least_root_in_open_interval(q, BigRat(0), bound, tol);
}

// ---------------------------------------------------------------------------
// Polynomial text format: ascending sparse form, e.g. "1 - 2*t - t^3"
// ---------------------------------------------------------------------------

inline std::string to_string(const IntPolynomial& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        BigInt c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        BigInt ac = abs(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mag = ac.get_str();
        if (k == 0) {
            out += mag;
        } else {
            if (ac != 1) out += mag + "*";
            out += var;
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline std::string to_string(const RationalFunction& r) {
    return "(" + to_string(r.num) + ")/(" + to_string(r.den) + ")";
}

// Parses the ascending sparse form; accepts arbitrary whitespace, signed
// integer coefficients, optional '*' between coefficient and variable, and
// repeated powers (summed).
inline IntPolynomial parse_polynomial(const std::string& text, const std::string& var = "t") {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    std::vector<BigInt> coeffs;
    auto add_term = [&](const BigInt& c, long k) {
        if (k < 0 || k > 100000) throw ParseError("exponent out of range", i);
        if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1, BigInt(0));
        coeffs[static_cast<std::size_t>(k)] += c;
    };
    skip_ws();
    if (i == n) throw ParseError("empty polynomial", i);
    bool first = true;
    while (true) {
        skip_ws();
        if (i == n) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", i);
        }
        first = false;
        // coefficient digits (optional when the term starts with the variable)
        std::string digits;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits.push_back(text[i++]);
        skip_ws();
        bool has_var = false;
        long expo = 0;
        if (i + var.size() <= n && text.compare(i, var.size(), var) == 0) {
            has_var = true;
            i += var.size();
            expo = 1;
        } else if (!digits.empty() && i < n && text[i] == '*') {
            ++i;
            skip_ws();
            if (i + var.size() <= n && text.compare(i, var.size(), var) == 0) {
                has_var = true;
                i += var.size();
                expo = 1;
            } else {
                throw ParseError("expected variable after '*'", i);
            }
        }
        if (has_var) {
            skip_ws();
            if (i < n && text[i] == '^') {
                ++i;
                skip_ws();
                std::string ed;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ed.push_back(text[i++]);
                if (ed.empty()) throw ParseError("expected exponent digits after '^'", i);
                expo = std::stol(ed);
            }
        } else if (digits.empty()) {
            throw ParseError("expected coefficient or variable", i);
        }
        BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
        if (sign < 0) c = -c;
        add_term(c, expo);
        skip_ws();
    }
    return IntPolynomial(std::move(coeffs));
}

} // namespace bimodal
