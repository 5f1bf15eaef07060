#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gradex/rational.hpp"

namespace gradex {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero scalar") {}
};

struct FieldMismatch : std::invalid_argument {
    FieldMismatch(unsigned a, unsigned b)
        : std::invalid_argument("scalars from different cyclotomic fields: N=" +
                                std::to_string(a) + " vs N=" + std::to_string(b)) {}
};

namespace detail {

/// Dense polynomial over Rational, coefficient of x^i at index i.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

/// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    poly_trim(a);
    if (b.empty()) throw std::invalid_argument("poly_divmod by zero polynomial");
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational coef = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
        poly_trim(a);
    }
    poly_trim(q);
    return {q, a};
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g.
inline void poly_xgcd(Poly a, Poly b, Poly& g, Poly& s, Poly& t) {
    Poly s0{Rational(1)}, s1, t0, t1{Rational(1)};
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        Poly qs = poly_mul(q, s1), qt = poly_mul(q, t1);
        Poly ns(std::max(s0.size(), qs.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) ns[i] = s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
        poly_trim(ns);
        Poly nt(std::max(t0.size(), qt.size()), Rational(0));
        for (std::size_t i = 0; i < t0.size(); ++i) nt[i] = t0[i];
        for (std::size_t i = 0; i < qt.size(); ++i) nt[i] -= qt[i];
        poly_trim(nt);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    g = std::move(a);
    s = std::move(s0);
    t = std::move(t0);
}

/// N-th cyclotomic polynomial, computed by exact division of x^N - 1 by all
/// Phi_d with d | N, d < N.
inline Poly cyclotomic_poly(unsigned n) {
    Poly num(n + 1, Rational(0));
    num[0] = Rational(-1);
    num[n] = Rational(1);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod(num, cyclotomic_poly(d));
        if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
        num = std::move(q);
    }
    return num;
}

}  // namespace detail

class Scalar;

/// The cyclotomic field Q(zeta_N), represented in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1) modulo the N-th cyclotomic polynomial.
/// Instances are immutable and shared process-wide per order N.
class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
public:
    using Ptr = std::shared_ptr<const CyclotomicField>;

    static Ptr get(unsigned n) {
        if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
        static std::mutex mu;
        static std::map<unsigned, Ptr> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        Ptr f(new CyclotomicField(n));
        cache.emplace(n, f);
        return f;
    }

    unsigned order() const { return n_; }
    unsigned degree() const { return phi_; }

    /// x^k reduced mod Phi_N, as a coefficient vector of length phi(N).
    const std::vector<Rational>& power(unsigned k) const { return powers_.at(k); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_rational(const Rational& r) const;
    Scalar from_int(long v) const;
    /// zeta_N^k (k may be negative).
    Scalar zeta(long k = 1) const;
    Scalar from_coeffs(std::vector<Rational> coeffs) const;

    const detail::Poly& minimal_polynomial() const { return minpoly_; }

private:
    explicit CyclotomicField(unsigned n) : n_(n) {
        minpoly_ = detail::cyclotomic_poly(n);
        phi_ = static_cast<unsigned>(minpoly_.size() - 1);
        unsigned top = std::max(2 * phi_ >= 2 ? 2 * phi_ - 2 : 0, n_ - 1);
        powers_.resize(top + 1);
        for (unsigned k = 0; k <= top; ++k) {
            if (k < phi_) {
                powers_[k].assign(phi_, Rational(0));
                powers_[k][k] = 1;
            } else {
                // x^k = x * x^(k-1), then fold the top coefficient.
                std::vector<Rational> v(phi_ + 1, Rational(0));
                for (unsigned i = 0; i < phi_; ++i) v[i + 1] = powers_[k - 1][i];
                Rational lead = v[phi_];
                v.pop_back();
                if (!is_zero(lead)) {
                    for (unsigned i = 0; i < phi_; ++i) v[i] -= lead * minpoly_[i];
                }
                powers_[k] = std::move(v);
            }
        }
    }

    unsigned n_ = 0;
    unsigned phi_ = 0;
    detail::Poly minpoly_;
    std::vector<std::vector<Rational>> powers_;
};

/// An element of Q(zeta_N). A default-constructed Scalar is the canonical
/// zero usable with any field; mixing nonzero scalars from different orders
/// throws FieldMismatch. Values are immutable in spirit: every operation
/// returns a canonical coefficient vector.
class Scalar {
public:
    Scalar() = default;
    Scalar(CyclotomicField::Ptr field, std::vector<Rational> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        if (field_ && c_.size() != field_->degree())
            throw std::invalid_argument("scalar coefficient vector has wrong length");
    }

    bool is_zero() const {
        if (!field_) return true;
        for (const auto& x : c_)
            if (!gradex::is_zero(x)) return false;
        return true;
    }

    const CyclotomicField::Ptr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// True when the value lies in Q (all non-constant coordinates vanish).
    bool is_rational() const {
        if (!field_) return true;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!gradex::is_zero(c_[i])) return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("scalar is not rational");
        return field_ ? c_[0] : Rational(0);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (!a.field_) return b;
        if (!b.field_) return a;
        const auto& f = joint_field(a, b);
        std::vector<Rational> r(a.c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.c_[i];
        return Scalar(f, std::move(r));
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    Scalar operator-() const {
        if (!field_) return {};
        std::vector<Rational> r(c_);
        for (auto& x : r) x = -x;
        return Scalar(field_, std::move(r));
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (!a.field_ || !b.field_) return {};
        const auto& f = joint_field(a, b);
        unsigned phi = f->degree();
        std::vector<Rational> conv(2 * phi - 1, Rational(0));
        for (unsigned i = 0; i < phi; ++i) {
            if (gradex::is_zero(a.c_[i])) continue;
            for (unsigned j = 0; j < phi; ++j) conv[i + j] += a.c_[i] * b.c_[j];
        }
        std::vector<Rational> r(phi, Rational(0));
        for (unsigned k = 0; k < conv.size(); ++k) {
            if (gradex::is_zero(conv[k])) continue;
            const auto& pk = f->power(k);
            for (unsigned i = 0; i < phi; ++i) r[i] += conv[k] * pk[i];
        }
        return Scalar(f, std::move(r));
    }

    friend Scalar operator*(const Rational& a, const Scalar& b) {
        if (!b.field_ || gradex::is_zero(a)) return b.field_ ? b.field_->zero() : Scalar{};
        std::vector<Rational> r(b.c_);
        for (auto& x : r) x *= a;
        return Scalar(b.field_, std::move(r));
    }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZero();
        detail::Poly a(c_.begin(), c_.end());
        detail::poly_trim(a);
        detail::Poly g, s, t;
        detail::poly_xgcd(a, field_->minimal_polynomial(), g, s, t);
        if (g.size() != 1) throw std::logic_error("cyclotomic polynomial not coprime to element");
        std::vector<Rational> r(field_->degree(), Rational(0));
        for (std::size_t i = 0; i < s.size(); ++i) r[i] = s[i] / g[0];
        return Scalar(field_, std::move(r));
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (!a.field_) return b.is_zero();
        if (!b.field_) return a.is_zero();
        joint_field(a, b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }

private:
    static const CyclotomicField::Ptr& joint_field(const Scalar& a, const Scalar& b) {
        if (a.field_->order() != b.field_->order())
            throw FieldMismatch(a.field_->order(), b.field_->order());
        return a.field_;
    }

    CyclotomicField::Ptr field_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

inline Scalar CyclotomicField::zero() const {
    return Scalar(shared_from_this(), std::vector<Rational>(phi_, Rational(0)));
}

inline Scalar CyclotomicField::one() const { return from_int(1); }

inline Scalar CyclotomicField::from_rational(const Rational& r) const {
    std::vector<Rational> c(phi_, Rational(0));
    c[0] = r;
    return Scalar(shared_from_this(), std::move(c));
}

inline Scalar CyclotomicField::from_int(long v) const { return from_rational(Rational(v)); }

inline Scalar CyclotomicField::zeta(long k) const {
    long m = k % static_cast<long>(n_);
    if (m < 0) m += n_;
    return Scalar(shared_from_this(), powers_.at(static_cast<unsigned>(m)));
}

inline Scalar CyclotomicField::from_coeffs(std::vector<Rational> coeffs) const {
    return Scalar(shared_from_this(), std::move(coeffs));
}

}  // namespace gradex
