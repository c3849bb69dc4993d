#pragma once

// Multivariate polynomials with rational coefficients and the field of
// rational functions built on them.  Rational functions are kept in lowest
// terms (numerator and denominator coprime, denominator with leading
// coefficient 1 in lex order), so structural equality is field equality.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace clustermirror {

using Exponent = std::vector<int>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    Polynomial(std::size_t nvars, const Rat& c) : nvars_(nvars) {
        if (c != 0) terms_[Exponent(nvars, 0)] = c;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i) {
        Polynomial p(nvars);
        Exponent e(nvars, 0);
        e[i] = 1;
        p.terms_[e] = 1;
        return p;
    }
    static Polynomial monomial(std::size_t nvars, const Exponent& e, const Rat& c = 1) {
        Polynomial p(nvars);
        for (int x : e)
            if (x < 0) throw ValidationError("polynomial monomial with negative exponent");
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool zero() const { return terms_.empty(); }
    const std::map<Exponent, Rat>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_.begin()->first));
    }

    /// Leading term in lex order (largest exponent vector).
    const std::pair<const Exponent, Rat>& leading() const {
        if (terms_.empty()) throw InvariantError("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(a.nvars_);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    Polynomial scaled(const Rat& s) const {
        Polynomial out(nvars_);
        if (s == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_[e] = c * s;
        return out;
    }

    /// Exact division; throws if `d` does not divide this polynomial.
    Polynomial exact_div(const Polynomial& d) const {
        check(d);
        if (d.zero()) throw ValidationError("polynomial division by zero");
        Polynomial quotient(nvars_), rem = *this;
        const auto& [ld_e, ld_c] = d.leading();
        while (!rem.zero()) {
            const auto& [lr_e, lr_c] = rem.leading();
            Exponent e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) {
                e[i] = lr_e[i] - ld_e[i];
                if (e[i] < 0) throw InvariantError("polynomial division is not exact");
            }
            Polynomial t = monomial(nvars_, e, lr_c / ld_c);
            quotient += t;
            rem -= t * d;
        }
        return quotient;
    }

    /// Scale so the lex-leading coefficient is 1.
    Polynomial monic() const {
        if (zero()) return *this;
        return scaled(1 / leading().second);
    }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    static bool is_zero_exponent(const Exponent& e) {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }
    void check(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw ValidationError("polynomials over different variable sets");
    }
    void add_term(const Exponent& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t nvars_ = 0;
    std::map<Exponent, Rat> terms_;
};

namespace detail {

// View p as a polynomial in x_var with coefficients free of x_var.
inline std::map<int, Polynomial> split_by(const Polynomial& p, std::size_t var) {
    std::map<int, Polynomial> out;
    for (const auto& [e, c] : p.terms()) {
        Exponent rest = e;
        rest[var] = 0;
        auto [it, _] = out.try_emplace(e[var], Polynomial(p.nvars()));
        it->second += Polynomial::monomial(p.nvars(), rest, c);
    }
    return out;
}

inline Polynomial shift(const Polynomial& p, std::size_t var, int power) {
    Exponent e(p.nvars(), 0);
    e[var] = power;
    return p * Polynomial::monomial(p.nvars(), e);
}

Polynomial gcd_upto(const Polynomial& a, const Polynomial& b, std::size_t vars);

// gcd of the x_var-coefficients, as a polynomial in x_0..x_{var-1}.
inline Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial g(p.nvars());
    for (const auto& [deg, coeff] : split_by(p, var)) g = gcd_upto(g, coeff, var);
    return g;
}

// Pseudo-remainder of a by b as polynomials in x_var.
inline Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
    const int db = b.degree_in(var);
    const Polynomial lc = split_by(b, var).rbegin()->second;
    while (!a.zero() && a.degree_in(var) >= db) {
        const int da = a.degree_in(var);
        const Polynomial la = split_by(a, var).rbegin()->second;
        a = a * lc - shift(la * b, var, da - db);
    }
    return a;
}

// gcd over Q[x_0 .. x_{vars-1}]; inputs must not involve later variables.
inline Polynomial gcd_upto(const Polynomial& a, const Polynomial& b, std::size_t vars) {
    const std::size_t n = a.nvars();
    if (a.zero()) return b.monic();
    if (b.zero()) return a.monic();
    if (vars == 0) return Polynomial(n, Rat(1));
    const std::size_t var = vars - 1;
    if (a.degree_in(var) <= 0 && b.degree_in(var) <= 0) return gcd_upto(a, b, var);

    Polynomial ca = content_in(a, var), cb = content_in(b, var);
    Polynomial g_content = gcd_upto(ca, cb, var);
    Polynomial p = a.exact_div(ca), q = b.exact_div(cb);
    if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
    while (!q.zero()) {
        Polynomial r = pseudo_remainder(p, q, var);
        p = std::move(q);
        if (r.zero()) break;
        if (r.degree_in(var) <= 0) {  // constant in x_var: primitive gcd is 1
            p = Polynomial(n, Rat(1));
            break;
        }
        q = r.exact_div(content_in(r, var));
    }
    p = p.exact_div(content_in(p, var));
    return (p * g_content).monic();
}

} // namespace detail

inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw ValidationError("polynomials over different variable sets");
    return detail::gcd_upto(a, b, a.nvars());
}

inline std::string rational_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += rational_to_string(mag);
        } else if (mag != 1) {
            out += rational_to_string(mag) + "*" + mono;
        } else {
            out += mono;
        }
    }
    return out;
}

/// An element of Q(x_1, ..., x_n) in lowest terms.
class RationalFunction {
public:
    RationalFunction() : RationalFunction(0, Rat(0)) {}
    RationalFunction(std::size_t nvars, const Rat& c) : num_(nvars, c), den_(nvars, Rat(1)) {}
    // Constant conversion; the variable count is adopted on first arithmetic
    // with a non-constant operand.  Needed so generic matrix code can write F(0).
    RationalFunction(int c) : RationalFunction(0, Rat(c)) {}

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction variable(std::size_t nvars, std::size_t i) {
        return RationalFunction(Polynomial::variable(nvars, i), Polynomial(nvars, Rat(1)));
    }

    /// x^e with possibly negative exponents, times c.
    static RationalFunction laurent_monomial(std::size_t nvars, const std::vector<Int>& e, const Rat& c = 1) {
        Exponent pos(nvars, 0), neg(nvars, 0);
        for (std::size_t i = 0; i < nvars; ++i) {
            int v = static_cast<int>(e.at(i));
            (v >= 0 ? pos[i] : neg[i]) = v >= 0 ? v : -v;
        }
        return RationalFunction(Polynomial::monomial(nvars, pos, c), Polynomial::monomial(nvars, neg));
    }

    std::size_t nvars() const { return num_.nvars(); }
    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool zero() const { return num_.zero(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        if (a.nvars() != b.nvars()) {
            // Constants compare across variable counts.
            if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
            return false;
        }
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const {
        if (!is_constant()) throw InvariantError("rational function is not constant");
        if (num_.zero()) return 0;
        return num_.leading().second / den_.leading().second;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        auto [x, y] = align(a, b);
        return RationalFunction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        auto [x, y] = align(a, b);
        return RationalFunction(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        auto [x, y] = align(a, b);
        return RationalFunction(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.zero()) throw ValidationError("rational function division by zero");
        auto [x, y] = align(a, b);
        return RationalFunction(x.num_ * y.den_, x.den_ * y.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    std::string to_string(const std::vector<std::string>& names) const {
        if (den_.is_constant()) return num_.to_string(names);
        std::string n = num_.to_string(names);
        if (num_.terms().size() > 1) n = "(" + n + ")";
        std::string d = den_.to_string(names);
        if (den_.terms().size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

    /// Names x1, x2, ...
    std::string to_string() const {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < nvars(); ++i) names.push_back("x" + std::to_string(i + 1));
        return to_string(names);
    }

private:
    RationalFunction lifted(std::size_t nvars) const {
        if (nvars == this->nvars()) return *this;
        if (!is_constant()) throw ValidationError("rational functions over different variable sets");
        return RationalFunction(nvars, constant_value());
    }
    static std::pair<RationalFunction, RationalFunction> align(const RationalFunction& a,
                                                               const RationalFunction& b) {
        std::size_t n = std::max(a.nvars(), b.nvars());
        return {a.lifted(n), b.lifted(n)};
    }

    void normalize() {
        if (den_.zero()) throw ValidationError("rational function with zero denominator");
        if (num_.zero()) {
            den_ = Polynomial(num_.nvars(), Rat(1));
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        Rat lc = den_.leading().second;
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }

    Polynomial num_;
    Polynomial den_;
};

} // namespace clustermirror
