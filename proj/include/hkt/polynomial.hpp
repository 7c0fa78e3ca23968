#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hkt/rational.hpp"

namespace hkt {

// Exponent vector; size equals the ambient variable count.
struct Monomial {
    std::vector<uint16_t> e;

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded lexicographic order (x1 > x2 > ...).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

// Sparse multivariate polynomial over Rat, graded-lex term order.
// A default-constructed Poly is the "null zero": a zero compatible with
// any variable count, so scalar accumulators need no ring context.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int i);          // 0-based
    static Poly monomial(int nvars, Monomial m, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_null() const { return nvars_ < 0; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.degree() == 0); }
    Rat constant_value() const;                      // requires is_constant
    int degree() const { return t_.empty() ? -1 : t_.rbegin()->first.degree(); }
    size_t term_count() const { return t_.size(); }
    const TermMap& terms() const { return t_; }

    const std::pair<const Monomial, Rat>& leading() const; // grlex-max term

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rat& c);
    friend Poly operator*(const Rat& c, const Poly& a) { return a * c; }
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned k) const;
    Poly derivative(int i) const;
    Rat eval(const std::vector<Rat>& point) const;

    // x_i -> sum_j S[i][j] * x_j; S has nvars rows, all rows of equal length,
    // which becomes the new variable count.
    Poly subst_linear(const std::vector<std::vector<Rat>>& S) const;

    // Positive gcd of all coefficients; 0 for the zero polynomial.
    Rat content() const;

    // Exact division: on success *quot = num/div and true is returned;
    // false means div does not divide num. div must be nonzero.
    static bool try_divide(const Poly& num, const Poly& div, Poly* quot);

    void add_term(const Monomial& m, const Rat& c); // skips zero, merges
    std::string str(const std::vector<std::string>* names = nullptr) const;

private:
    static void check_compat(const Poly& a, const Poly& b);

    int nvars_ = -1;
    TermMap t_;
};

// Variable context shared by rational functions: names plus the factors
// that canonicalization cancels greedily (a chart registers r^2 here).
struct PolyRing {
    int nvars = 0;
    std::vector<std::string> names;
    std::vector<Poly> cancel_factors;
};

} // namespace hkt
