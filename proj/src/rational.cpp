#include "hkt/rational.hpp"

#include <cctype>
#include <ostream>

#include "hkt/errors.hpp"

namespace hkt {

Rat::Rat(long n, long d) {
    mpq_init(v_);
    if (d == 0) throw StructuralError("rational with zero denominator");
    mpq_set_si(v_, n, 1);
    mpq_t den;
    mpq_init(den);
    mpq_set_si(den, d, 1);
    mpq_div(v_, v_, den);
    mpq_clear(den);
}

Rat Rat::parse(std::string_view s) {
    // mpq_set_str is permissive about whitespace; validate shape first.
    if (s.empty()) throw ParseError("empty rational literal");
    size_t i = 0;
    auto digits = [&](size_t from) {
        size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (s[i] == '-' || s[i] == '+') ++i;
    size_t j = digits(i);
    if (j == i) throw ParseError("bad rational literal: '" + std::string(s) + "'");
    if (j < s.size()) {
        if (s[j] != '/') throw ParseError("bad rational literal: '" + std::string(s) + "'");
        size_t k = digits(j + 1);
        if (k == j + 1 || k != s.size())
            throw ParseError("bad rational literal: '" + std::string(s) + "'");
    }
    Rat r;
    if (mpq_set_str(r.v_, std::string(s).c_str(), 10) != 0)
        throw ParseError("bad rational literal: '" + std::string(s) + "'");
    if (mpz_sgn(mpq_denref(r.v_)) == 0)
        throw ParseError("zero denominator in '" + std::string(s) + "'");
    mpq_canonicalize(r.v_);
    return r;
}

Rat Rat::operator-() const {
    Rat r;
    mpq_neg(r.v_, v_);
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw StructuralError("rational division by zero");
    mpq_div(v_, v_, o.v_);
    return *this;
}

Rat Rat::abs() const {
    Rat r;
    mpq_abs(r.v_, v_);
    return r;
}

Rat Rat::inv() const {
    if (is_zero()) throw StructuralError("inverse of zero");
    Rat r;
    mpq_inv(r.v_, v_);
    return r;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? *this : inv();
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), k);
    mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), k);
    mpq_canonicalize(r.v_);
    return r;
}

Rat Rat::gcd(const Rat& x, const Rat& y) {
    if (x.is_zero()) return y.abs();
    if (y.is_zero()) return x.abs();
    Rat r;
    mpz_gcd(mpq_numref(r.v_), mpq_numref(x.v_), mpq_numref(y.v_));
    mpz_lcm(mpq_denref(r.v_), mpq_denref(x.v_), mpq_denref(y.v_));
    mpq_canonicalize(r.v_);
    return r;
}

bool Rat::perfect_square(Rat* root) const {
    if (sgn() < 0) return false;
    if (mpz_perfect_square_p(mpq_numref(v_)) == 0) return false;
    if (mpz_perfect_square_p(mpq_denref(v_)) == 0) return false;
    if (root) {
        Rat r;
        mpz_sqrt(mpq_numref(r.v_), mpq_numref(v_));
        mpz_sqrt(mpq_denref(r.v_), mpq_denref(v_));
        *root = r;
    }
    return true;
}

std::string Rat::str() const {
    char* c = mpq_get_str(nullptr, 10, v_);
    std::string s(c);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(c, s.size() + 1);
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace hkt
