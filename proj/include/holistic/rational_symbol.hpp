#pragma once

#include <complex>

#include "holistic/polynomial.hpp"
#include "holistic/rational.hpp"

namespace holistic {

/// Exact rational function of the Fourier variable z = e^{i kappa}.
///
/// Stored as num(z)/den(z) in canonical form: both plain polynomials with a
/// nonzero constant term in the denominator chain (common z^k factors are
/// moved between them, legal since z never vanishes on the unit circle), the
/// polynomial gcd removed, and the denominator monic.  Equality of canonical
/// forms is therefore coefficient equality.
class RationalSymbol {
public:
    using Poly = Polynomial<Rational>;

    RationalSymbol() : num_(), den_(Poly::constant(Rational(1))) {}
    RationalSymbol(int v) : num_(Poly::constant(Rational(v))), den_(Poly::constant(Rational(1))) {
        if (v == 0) num_ = Poly();
    }
    explicit RationalSymbol(const Rational& v)
        : num_(v == 0 ? Poly() : Poly::constant(v)), den_(Poly::constant(Rational(1))) {}
    RationalSymbol(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    /// z^power with a possibly negative exponent.
    static RationalSymbol z_power(int power) {
        if (power >= 0) return {Poly::monomial(Rational(1), power), Poly::constant(Rational(1))};
        return {Poly::constant(Rational(1)), Poly::monomial(Rational(1), -power)};
    }

    bool is_zero() const { return num_.is_zero(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    friend RationalSymbol operator+(const RationalSymbol& a, const RationalSymbol& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalSymbol operator-(const RationalSymbol& a, const RationalSymbol& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    RationalSymbol operator-() const {
        RationalSymbol r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalSymbol operator*(const RationalSymbol& a, const RationalSymbol& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalSymbol operator/(const RationalSymbol& a, const RationalSymbol& b) {
        if (b.is_zero()) throw std::domain_error("RationalSymbol: division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalSymbol& operator+=(const RationalSymbol& b) { return *this = *this + b; }
    RationalSymbol& operator-=(const RationalSymbol& b) { return *this = *this - b; }
    RationalSymbol& operator*=(const RationalSymbol& b) { return *this = *this * b; }

    bool operator==(const RationalSymbol& b) const { return num_ == b.num_ && den_ == b.den_; }
    bool operator!=(const RationalSymbol& b) const { return !(*this == b); }

    /// Numerical value at z on the unit circle.
    std::complex<double> eval(const std::complex<double>& z) const {
        auto conv = [](const Rational& r) { return std::complex<double>(to_double(r), 0.0); };
        if (num_.is_zero()) return {0.0, 0.0};
        return num_.eval_with(z, conv) / den_.eval_with(z, conv);
    }

    std::complex<long double> eval(const std::complex<long double>& z) const {
        auto conv = [](const Rational& r) {
            return std::complex<long double>(to_long_double(r), 0.0L);
        };
        if (num_.is_zero()) return {0.0L, 0.0L};
        return num_.eval_with(z, conv) / den_.eval_with(z, conv);
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("RationalSymbol: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(Rational(1));
            return;
        }
        // Move pure z^k factors out (z != 0 on the unit circle).
        auto strip = [](Poly& p) {
            int k = 0;
            while (p.coeff(k) == Rational(0)) ++k;
            if (k > 0) {
                std::vector<Rational> c(p.coeffs().begin() + k, p.coeffs().end());
                p = Poly(std::move(c));
            }
            return k;
        };
        const int kn = strip(num_);
        const int kd = strip(den_);
        const int k = kn - kd;
        if (k > 0)
            num_ = num_ * Poly::monomial(Rational(1), k);
        else if (k < 0)
            den_ = den_ * Poly::monomial(Rational(1), -k);

        const Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            num_.divmod(g, q, r);
            num_ = q;
            den_.divmod(g, q, r);
            den_ = q;
        }
        const Rational lead = den_.coeffs().back();
        std::vector<Rational> nc = num_.coeffs(), dc = den_.coeffs();
        for (auto& v : nc) v /= lead;
        for (auto& v : dc) v /= lead;
        num_ = Poly(std::move(nc));
        den_ = Poly(std::move(dc));
    }

    Poly num_, den_;
};

/// Symbol of delta^2: z - 2 + z^{-1}.
inline RationalSymbol delta2_symbol() {
    return RationalSymbol::z_power(1) - RationalSymbol(2) + RationalSymbol::z_power(-1);
}

/// Symbol of S: 6 / (z + 4 + z^{-1}).
inline RationalSymbol s_symbol() {
    return RationalSymbol(6) /
           (RationalSymbol::z_power(1) + RationalSymbol(4) + RationalSymbol::z_power(-1));
}

}  // namespace holistic
