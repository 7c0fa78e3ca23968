#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hkt/polynomial.hpp"

namespace hkt {

// Quotient of two polynomials over a shared PolyRing, kept in a canonical
// reduced form: ring-registered factors and exact num/den divisibility are
// cancelled, the denominator is content-free with positive leading
// coefficient. Equality is decided by cross-multiplication, so values whose
// common factor is outside the registered basis still compare correctly.
//
// A default-constructed value is the null zero (compatible with any ring);
// a value built from a plain Rat is a ring-less constant that promotes when
// it meets a ringed operand.
class RatFun {
public:
    RatFun() = default;
    RatFun(const Rat& c);
    RatFun(long c) : RatFun(Rat(c)) {}
    RatFun(std::shared_ptr<const PolyRing> ring, Poly num, Poly den);
    RatFun(std::shared_ptr<const PolyRing> ring, Poly num);

    static RatFun variable(std::shared_ptr<const PolyRing> ring, int i);
    static RatFun constant(std::shared_ptr<const PolyRing> ring, const Rat& c);

    const std::shared_ptr<const PolyRing>& ring() const { return ring_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_null() || num_.is_zero(); }
    bool is_constant() const;
    Rat constant_value() const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }

    friend RatFun operator*(const RatFun& a, const Rat& c);
    friend RatFun operator*(const Rat& c, const RatFun& a) { return a * c; }

    // Exact equality by cross-multiplication.
    friend bool operator==(const RatFun& a, const RatFun& b);
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun derivative(int i) const;
    Rat eval(const std::vector<Rat>& point) const; // throws if denominator vanishes

    // x_i -> sum_j S[i][j] x_j over the target ring.
    RatFun subst_linear(const std::vector<std::vector<Rat>>& S,
                        std::shared_ptr<const PolyRing> target) const;

    void canonicalize();
    std::string str() const;

private:
    static void promote(RatFun& a, RatFun& b);

    std::shared_ptr<const PolyRing> ring_;
    Poly num_; // null when this is the null zero
    Poly den_;
};

} // namespace hkt
