#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace holistic {

/// Dense univariate polynomial over an exact coefficient field T.
/// coeffs[k] multiplies x^k; the zero polynomial has an empty vector.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }
    static Polynomial monomial(T v, int power) {
        std::vector<T> c(power + 1, T(0));
        c[power] = std::move(v);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : T(0); }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
        for (size_t k = 0; k < p.c_.size(); ++k) r[k] += p.c_[k];
        for (size_t k = 0; k < q.c_.size(); ++k) r[k] += q.c_[k];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
        std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
        for (size_t k = 0; k < p.c_.size(); ++k) r[k] += p.c_[k];
        for (size_t k = 0; k < q.c_.size(); ++k) r[k] -= q.c_[k];
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<T> r(c_);
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<T> r(p.c_.size() + q.c_.size() - 1, T(0));
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& p) {
        std::vector<T> r(p.c_);
        for (auto& v : r) v = s * v;
        return Polynomial(std::move(r));
    }
    Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
    Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }

    bool operator==(const Polynomial& q) const { return c_ == q.c_; }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> r(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = T(int(k)) * c_[k];
        return Polynomial(std::move(r));
    }

    /// Antiderivative with zero constant term.
    Polynomial integral() const {
        if (is_zero()) return {};
        std::vector<T> r(c_.size() + 1, T(0));
        for (size_t k = 0; k < c_.size(); ++k) r[k + 1] = c_[k] / T(int(k) + 1);
        return Polynomial(std::move(r));
    }

    template <typename X>
    X eval(const X& x) const {
        X acc = X(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    /// Horner evaluation converting exact coefficients via `conv`.
    template <typename X, typename Conv>
    X eval_with(const X& x, Conv conv) const {
        X acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + conv(*it);
        return acc;
    }

    /// Polynomial division: *this = q * div + r with deg r < deg div.
    void divmod(const Polynomial& div, Polynomial& q, Polynomial& r) const {
        if (div.is_zero()) throw std::invalid_argument("Polynomial: division by zero");
        std::vector<T> rem = c_;
        std::vector<T> quot;
        const int dd = div.degree();
        while ((int)rem.size() - 1 >= dd && !rem.empty()) {
            const int k = (int)rem.size() - 1 - dd;
            T f = rem.back() / div.c_.back();
            if ((int)quot.size() < k + 1) quot.resize(k + 1, T(0));
            quot[k] = f;
            for (int i = 0; i <= dd; ++i) rem[k + i] -= f * div.c_[i];
            while (!rem.empty() && rem.back() == T(0)) rem.pop_back();
        }
        q = Polynomial(std::move(quot));
        r = Polynomial(std::move(rem));
    }

    /// Monic gcd by the Euclidean remainder sequence.
    static Polynomial gcd(Polynomial p, Polynomial q) {
        while (!q.is_zero()) {
            Polynomial quot, rem;
            p.divmod(q, quot, rem);
            p = std::move(q);
            q = std::move(rem);
        }
        if (p.is_zero()) return p;
        T lead = p.c_.back();
        for (auto& v : p.c_) v = v / lead;
        return p;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

}  // namespace holistic
