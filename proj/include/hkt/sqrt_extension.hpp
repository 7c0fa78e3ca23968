#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hkt/rational_function.hpp"

namespace hkt {

// Variable context for scalars of the form a + b*r with r^2 = radicand.
// The radicand (a positive quadratic form in practice) is registered as a
// cancellation factor of the underlying PolyRing so powers of it cancel
// during canonicalization.
struct SqrtRing {
    std::shared_ptr<const PolyRing> poly_ring;
    Poly radicand;                 // nonconstant, not a perfect square
    std::vector<Poly> partials;    // d(radicand)/dx_i, precomputed

    static std::shared_ptr<const SqrtRing> make(std::shared_ptr<const PolyRing> pr, Poly radicand);
};

// Element a + b*r of the quadratic extension of the rational-function field,
// r^2 = radicand. Needed because odd powers of |x| are not rational
// functions. Equality and zero tests are componentwise (the radicand is not
// a square, so 1 and r are independent). Default constructed: null zero;
// constructed from Rat/RatFun: radical-free value that promotes on use.
class SqrtExt {
public:
    SqrtExt() = default;
    SqrtExt(const Rat& c) : a_(c) {}
    SqrtExt(long c) : a_(Rat(c)) {}
    SqrtExt(RatFun a) : a_(std::move(a)) {}
    SqrtExt(std::shared_ptr<const SqrtRing> ring, RatFun a, RatFun b);

    static SqrtExt root(std::shared_ptr<const SqrtRing> ring); // the element r
    // r^k for any integer k (negative allowed).
    static SqrtExt root_pow(std::shared_ptr<const SqrtRing> ring, int k);

    const std::shared_ptr<const SqrtRing>& ring() const { return ring_; }
    const RatFun& rational_part() const { return a_; }
    const RatFun& radical_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool has_radical() const { return !b_.is_zero(); }

    SqrtExt operator-() const;
    friend SqrtExt operator+(const SqrtExt& x, const SqrtExt& y);
    friend SqrtExt operator-(const SqrtExt& x, const SqrtExt& y);
    friend SqrtExt operator*(const SqrtExt& x, const SqrtExt& y);
    SqrtExt& operator+=(const SqrtExt& o) { *this = *this + o; return *this; }
    SqrtExt& operator-=(const SqrtExt& o) { *this = *this - o; return *this; }
    SqrtExt& operator*=(const SqrtExt& o) { *this = *this * o; return *this; }
    friend SqrtExt operator*(const SqrtExt& x, const Rat& c);
    friend SqrtExt operator*(const Rat& c, const SqrtExt& x) { return x * c; }

    friend bool operator==(const SqrtExt& x, const SqrtExt& y);
    friend bool operator!=(const SqrtExt& x, const SqrtExt& y) { return !(x == y); }

    // d/dx_i, using d(r)/dx_i = (d(radicand)/dx_i) * r / (2*radicand).
    SqrtExt derivative(int i) const;

    // Exact evaluation; requires radicand(point) to be a perfect rational
    // square when the radical part is present.
    Rat eval(const std::vector<Rat>& point) const;
    std::pair<Rat, Rat> eval_components(const std::vector<Rat>& point) const;

    // x -> S x, verifying radicand∘S = c^2 * radicand for rational c > 0
    // (r then maps to c*r). Throws if the radicand is not reproduced.
    SqrtExt subst_linear(const std::vector<std::vector<Rat>>& S,
                         std::shared_ptr<const SqrtRing> target) const;

    std::string str() const;

private:
    static void promote(SqrtExt& x, SqrtExt& y);

    std::shared_ptr<const SqrtRing> ring_; // null for radical-free values
    RatFun a_, b_;
};

} // namespace hkt
