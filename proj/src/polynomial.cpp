#include "hkt/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hkt/errors.hpp"

namespace hkt {

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.t_.emplace(Monomial{std::vector<uint16_t>(nvars, 0)}, c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw StructuralError("variable index out of range");
    Monomial m{std::vector<uint16_t>(nvars, 0)};
    m.e[i] = 1;
    Poly p(nvars);
    p.t_.emplace(std::move(m), Rat(1));
    return p;
}

Poly Poly::monomial(int nvars, Monomial m, const Rat& c) {
    if (static_cast<int>(m.e.size()) != nvars) throw StructuralError("monomial arity mismatch");
    Poly p(nvars);
    if (!c.is_zero()) p.t_.emplace(std::move(m), c);
    return p;
}

Rat Poly::constant_value() const {
    if (t_.empty()) return Rat(0);
    if (!is_constant()) throw StructuralError("constant_value on non-constant polynomial");
    return t_.begin()->second;
}

const std::pair<const Monomial, Rat>& Poly::leading() const {
    if (t_.empty()) throw StructuralError("leading term of zero polynomial");
    return *t_.rbegin();
}

void Poly::check_compat(const Poly& a, const Poly& b) {
    if (a.nvars_ >= 0 && b.nvars_ >= 0 && a.nvars_ != b.nvars_)
        throw StructuralError("polynomial variable-count mismatch");
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compat(*this, o);
    if (nvars_ < 0) { *this = o; return *this; }
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compat(*this, o);
    if (nvars_ < 0) { *this = -o; return *this; }
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_compat(a, b);
    if (a.nvars_ < 0 || b.nvars_ < 0) return Poly(); // null zero
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.t_) {
        for (const auto& [mb, cb] : b.t_) {
            Monomial m = ma;
            for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = static_cast<uint16_t>(m.e[i] + mb.e[i]);
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly operator*(const Poly& a, const Rat& c) {
    if (c.is_zero()) return Poly(a.nvars_ < 0 ? Poly() : Poly(a.nvars_));
    Poly r(a);
    for (auto& [m, v] : r.t_) v *= c;
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ < 0 || b.nvars_ < 0) return a.t_.empty() && b.t_.empty();
    if (a.nvars_ != b.nvars_) return false;
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    auto ib = b.t_.begin();
    for (; ia != a.t_.end(); ++ia, ++ib)
        if (!(ia->first == ib->first) || ia->second != ib->second) return false;
    return true;
}

Poly Poly::pow(unsigned k) const {
    if (nvars_ < 0) return k == 0 ? constant(0, Rat(1)) : Poly();
    Poly r = constant(nvars_, Rat(1));
    Poly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

Poly Poly::derivative(int i) const {
    if (nvars_ < 0) return Poly();
    if (i < 0 || i >= nvars_) throw StructuralError("derivative index out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : t_) {
        if (m.e[i] == 0) continue;
        Monomial d = m;
        d.e[i] -= 1;
        r.add_term(d, c * Rat(m.e[i]));
    }
    return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (nvars_ < 0) return Rat(0);
    if (static_cast<int>(point.size()) != nvars_) throw StructuralError("eval arity mismatch");
    // power cache per variable
    std::vector<std::vector<Rat>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(Rat(1));
    Rat acc(0);
    for (const auto& [m, c] : t_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i) {
            unsigned k = m.e[i];
            auto& p = pows[i];
            while (p.size() <= k) p.push_back(p.back() * point[i]);
            if (k) term *= p[k];
        }
        acc += term;
    }
    return acc;
}

Poly Poly::subst_linear(const std::vector<std::vector<Rat>>& S) const {
    if (nvars_ < 0) return Poly();
    if (static_cast<int>(S.size()) != nvars_) throw StructuralError("substitution row count mismatch");
    int m = nvars_ == 0 ? 0 : static_cast<int>(S[0].size());
    for (const auto& row : S)
        if (static_cast<int>(row.size()) != m) throw StructuralError("ragged substitution matrix");
    std::vector<Poly> lin(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        Poly L(m);
        for (int j = 0; j < m; ++j)
            if (!S[i][j].is_zero()) L += Poly::variable(m, j) * S[i][j];
        lin[i] = L;
    }
    std::vector<std::vector<Poly>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(Poly::constant(m, Rat(1)));
    Poly r(m);
    for (const auto& [mo, c] : t_) {
        Poly term = Poly::constant(m, c);
        for (int i = 0; i < nvars_; ++i) {
            unsigned k = mo.e[i];
            auto& p = pows[i];
            while (p.size() <= k) p.push_back(p.back() * lin[i]);
            if (k) term = term * p[k];
        }
        r += term;
    }
    return r;
}

Rat Poly::content() const {
    Rat g(0);
    for (const auto& [m, c] : t_) g = Rat::gcd(g, c);
    return g;
}

bool Poly::try_divide(const Poly& num, const Poly& div, Poly* quot) {
    if (div.is_zero() || div.is_null()) throw StructuralError("division by zero polynomial");
    if (num.is_null() || num.is_zero()) {
        if (quot) *quot = num.is_null() ? Poly() : Poly(num.nvars_);
        return true;
    }
    check_compat(num, div);
    Poly q(num.nvars_);
    Poly rem = num;
    const auto& [dm, dc] = div.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (!dm.divides(rm)) return false;
        Monomial t = rm;
        for (size_t i = 0; i < t.e.size(); ++i) t.e[i] = static_cast<uint16_t>(t.e[i] - dm.e[i]);
        Rat c = rc / dc;
        Poly piece = Poly::monomial(num.nvars_, t, c);
        q += piece;
        rem -= piece * div;
    }
    if (quot) *quot = q;
    return true;
}

std::string Poly::str(const std::vector<std::string>* names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading terms first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c.abs();
        if (first) {
            if (c.sgn() < 0) os << "-";
            first = false;
        } else {
            os << (c.sgn() < 0 ? " - " : " + ");
        }
        bool unit = a.is_one();
        bool any_var = m.degree() > 0;
        if (!unit || !any_var) os << a.str();
        bool star = !unit || !any_var;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (star) os << "*";
            star = true;
            if (names && i < names->size()) os << (*names)[i];
            else os << "x" << (i + 1);
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
    }
    return os.str();
}

} // namespace hkt
