#pragma once

#include <gmp.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace hkt {

// Arbitrary-precision rational, thin wrapper over GMP's mpq_t.
// Always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rat {
public:
    Rat() { mpq_init(v_); }
    Rat(long n) { mpq_init(v_); mpq_set_si(v_, n, 1); }
    Rat(long n, long d);
    Rat(const Rat& o) { mpq_init(v_); mpq_set(v_, o.v_); }
    Rat(Rat&& o) noexcept { mpq_init(v_); mpq_swap(v_, o.v_); }
    ~Rat() { mpq_clear(v_); }

    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }

    // Accepts "p", "-p", "p/q" with arbitrary-size decimal integers.
    static Rat parse(std::string_view s);

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    int sgn() const { return mpq_sgn(v_); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rat& operator-=(const Rat& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rat& operator*=(const Rat& o) { mpq_mul(v_, v_, o.v_); return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

    Rat abs() const;
    Rat inv() const;           // throws StructuralError on zero
    Rat pow(long e) const;     // e may be negative (nonzero base then)

    // gcd(a,c)/lcm(b,d) for a/b, c/d; gcd(x,0) = |x|. Used for content.
    static Rat gcd(const Rat& x, const Rat& y);

    // True iff this is the square of a rational; if so *root = positive root.
    bool perfect_square(Rat* root) const;

    std::string str() const;   // "p" or "p/q", canonical

    mpq_srcptr raw() const { return v_; }

private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace hkt
