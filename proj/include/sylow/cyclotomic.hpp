#pragma once

#include <stdexcept>
#include <vector>

#include "sylow/bigint.hpp"

namespace sylow {

// Element of Z[zeta] for zeta a primitive p^m-th root of unity, stored as
// an integer coefficient vector of length p^m and kept reduced modulo the
// p^m-th cyclotomic polynomial sum_{i<p} x^{i p^{m-1}}, so coefficients at
// degrees >= (p-1) p^{m-1} are zero.  m = 0 is the plain integers.
//
// Roots of unity of lower p-power order embed by multiplying exponents by
// the level gap; one ambient ring per level avoids ring-hopping.
template <typename T>
class Cyc {
  public:
    Cyc() = default;
    Cyc(int p, int m) : p_(p), m_(m) {
        c_.assign(size_t(order_of(p, m)), T(0));
    }

    static int order_of(int p, int m) {
        int r = 1;
        while (m-- > 0) r *= p;
        return r;
    }

    static Cyc integer(int p, int m, T v) {
        Cyc out(p, m);
        out.c_[0] = std::move(v);
        return out;
    }

    static Cyc zeta_pow(int p, int m, long long e) {
        Cyc out(p, m);
        int ord = out.order();
        e %= ord;
        if (e < 0) e += ord;
        out.c_[size_t(e)] = T(1);
        out.reduce();
        return out;
    }

    int prime() const { return p_; }
    int level() const { return m_; }
    int order() const { return int(c_.size()); }
    int reduced_degree() const {
        return m_ == 0 ? 1 : (p_ - 1) * (order() / p_);
    }
    const std::vector<T>& coeffs() const { return c_; }
    T& coeff(size_t i) { return c_[i]; }

    bool is_zero() const {
        for (const T& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    const T& rational() const {
        if (!is_rational())
            throw std::logic_error("cyclotomic value is not a rational integer");
        return c_[0];
    }

    void reduce() {
        if (m_ == 0) return;
        int ord = order();
        int deg = reduced_degree();
        int block = ord / p_;  // p^{m-1}
        for (int e = ord - 1; e >= deg; --e) {
            if (c_[size_t(e)] == 0) continue;
            T v = std::move(c_[size_t(e)]);
            c_[size_t(e)] = 0;
            for (int i = 0; i < p_ - 1; ++i)
                c_[size_t(e - deg + i * block)] -= v;
        }
    }

    Cyc conj() const {
        Cyc out(p_, m_);
        int ord = order();
        for (int e = 0; e < ord; ++e) {
            if (c_[size_t(e)] == 0) continue;
            out.c_[size_t((ord - e) % ord)] += c_[size_t(e)];
        }
        out.reduce();
        return out;
    }

    Cyc& operator+=(const Cyc& o) {
        check_ring(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    Cyc& operator-=(const Cyc& o) {
        check_ring(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }

    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        a.check_ring(b);
        Cyc out(a.p_, a.m_);
        int ord = a.order();
        for (int i = 0; i < ord; ++i) {
            if (a.c_[size_t(i)] == 0) continue;
            for (int j = 0; j < ord; ++j) {
                if (b.c_[size_t(j)] == 0) continue;
                out.c_[size_t((i + j) % ord)] += a.c_[size_t(i)] * b.c_[size_t(j)];
            }
        }
        out.reduce();
        return out;
    }

    Cyc& scale(const T& s) {
        for (T& v : c_) v *= s;
        return *this;
    }

    // this += v * s, with v possibly in a smaller coefficient type.
    template <typename TV, typename TS>
    void add_scaled(const Cyc<TV>& v, const TS& s) {
        if (order() != v.order() || prime() != v.prime())
            throw std::logic_error("cyclotomic ring mismatch");
        for (size_t i = 0; i < c_.size(); ++i) {
            if (v.coeffs()[i] == 0) continue;
            c_[i] += T(v.coeffs()[i]) * s;
        }
    }

    // Exact division by a rational integer; throws if any coefficient is
    // not divisible.
    Cyc& divide_exact(const T& d) {
        for (T& v : c_) {
            if (v % d != 0)
                throw std::logic_error("inexact cyclotomic division");
            v /= d;
        }
        return *this;
    }

    Cyc embed_into(int target_level) const {
        if (target_level < m_)
            throw std::logic_error("cannot embed into a smaller cyclotomic ring");
        if (target_level == m_) return *this;
        Cyc out(p_, target_level);
        int gap = 1;
        for (int i = 0; i < target_level - m_; ++i) gap *= p_;
        for (int e = 0; e < order(); ++e)
            if (c_[size_t(e)] != 0) out.c_[size_t(e) * size_t(gap)] = c_[size_t(e)];
        return out;  // a reduced source stays reduced
    }

    bool operator==(const Cyc& o) const {
        return p_ == o.p_ && m_ == o.m_ && c_ == o.c_;
    }

    template <typename U>
    Cyc<U> convert() const {
        Cyc<U> out(p_, m_);
        for (size_t i = 0; i < c_.size(); ++i) out.coeff(i) = U(c_[i]);
        return out;
    }

  private:
    void check_ring(const Cyc& o) const {
        if (p_ != o.p_ || m_ != o.m_)
            throw std::logic_error("cyclotomic ring mismatch");
    }

    int p_ = 0;
    int m_ = -1;
    std::vector<T> c_;
};

using CycI = Cyc<long long>;
using CycB = Cyc<Bint>;

}  // namespace sylow
