#include "hkt/rational_function.hpp"

#include <sstream>

#include "hkt/errors.hpp"

namespace hkt {

RatFun::RatFun(const Rat& c)
    : ring_(nullptr), num_(Poly::constant(0, c)), den_(Poly::constant(0, Rat(1))) {}

RatFun::RatFun(std::shared_ptr<const PolyRing> ring, Poly num, Poly den)
    : ring_(std::move(ring)), num_(std::move(num)), den_(std::move(den)) {
    if (!ring_) throw StructuralError("rational function needs a ring");
    if (den_.is_null() || den_.is_zero()) throw StructuralError("zero denominator");
    if (num_.is_null()) num_ = Poly(ring_->nvars);
    if (num_.nvars() != ring_->nvars || den_.nvars() != ring_->nvars)
        throw StructuralError("polynomial/ring variable-count mismatch");
    canonicalize();
}

RatFun::RatFun(std::shared_ptr<const PolyRing> ring, Poly num)
    : RatFun(ring, std::move(num), Poly::constant(ring ? ring->nvars : 0, Rat(1))) {}

RatFun RatFun::variable(std::shared_ptr<const PolyRing> ring, int i) {
    return RatFun(ring, Poly::variable(ring->nvars, i));
}

RatFun RatFun::constant(std::shared_ptr<const PolyRing> ring, const Rat& c) {
    return RatFun(ring, Poly::constant(ring->nvars, c));
}

bool RatFun::is_constant() const {
    if (is_zero()) return true;
    return num_.is_constant() && den_.is_constant();
}

Rat RatFun::constant_value() const {
    if (is_zero()) return Rat(0);
    if (!is_constant()) throw StructuralError("constant_value on non-constant rational function");
    return num_.constant_value() / den_.constant_value();
}

void RatFun::promote(RatFun& a, RatFun& b) {
    if (a.ring_ == b.ring_) return;
    auto lift = [](RatFun& c, const std::shared_ptr<const PolyRing>& ring) {
        Rat v = c.is_zero() ? Rat(0) : c.constant_value();
        c = RatFun(ring, Poly::constant(ring->nvars, v));
    };
    if (!a.ring_) { lift(a, b.ring_); return; }
    if (!b.ring_) { lift(b, a.ring_); return; }
    if (a.ring_->nvars != b.ring_->nvars)
        throw StructuralError("rational functions over different rings");
    b.ring_ = a.ring_;
}

void RatFun::canonicalize() {
    if (num_.is_null()) return;
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.nvars(), Rat(1));
        return;
    }
    if (ring_) {
        for (const auto& f : ring_->cancel_factors) {
            Poly qn, qd;
            while (!den_.is_constant() && Poly::try_divide(num_, f, &qn) &&
                   Poly::try_divide(den_, f, &qd)) {
                num_ = qn;
                den_ = qd;
            }
        }
    }
    Poly q;
    if (!den_.is_constant() && Poly::try_divide(num_, den_, &q)) {
        num_ = q;
        den_ = Poly::constant(num_.nvars(), Rat(1));
    } else if (!den_.is_constant() && !num_.is_constant() && Poly::try_divide(den_, num_, &q)) {
        den_ = q;
        num_ = Poly::constant(den_.nvars(), Rat(1));
    }
    Rat c = den_.content();
    if (den_.leading().second.sgn() < 0) c = -c;
    if (!c.is_one()) {
        Rat ic = c.inv();
        num_ = num_ * ic;
        den_ = den_ * ic;
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a0, const RatFun& b0) {
    RatFun a = a0, b = b0;
    RatFun::promote(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFun r;
    r.ring_ = a.ring_;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.canonicalize();
    return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a0, const RatFun& b0) {
    RatFun a = a0, b = b0;
    RatFun::promote(a, b);
    if (a.is_zero() || b.is_zero()) return RatFun();
    RatFun r;
    r.ring_ = a.ring_;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

RatFun operator/(const RatFun& a0, const RatFun& b0) {
    RatFun a = a0, b = b0;
    RatFun::promote(a, b);
    if (b.is_zero()) throw StructuralError("rational-function division by zero");
    if (a.is_zero()) return RatFun();
    RatFun r;
    r.ring_ = a.ring_;
    r.num_ = a.num_ * b.den_;
    r.den_ = a.den_ * b.num_;
    r.canonicalize();
    return r;
}

RatFun operator*(const RatFun& a, const Rat& c) {
    if (c.is_zero() || a.is_zero()) return RatFun();
    RatFun r = a;
    r.num_ = r.num_ * c;
    r.canonicalize();
    return r;
}

bool operator==(const RatFun& a0, const RatFun& b0) {
    if (a0.is_zero()) return b0.is_zero();
    if (b0.is_zero()) return false;
    RatFun a = a0, b = b0;
    RatFun::promote(a, b);
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RatFun RatFun::derivative(int i) const {
    if (is_zero()) return RatFun();
    if (!ring_) return RatFun(); // constants
    RatFun r;
    r.ring_ = ring_;
    r.num_ = num_.derivative(i) * den_ - num_ * den_.derivative(i);
    r.den_ = den_ * den_;
    r.canonicalize();
    return r;
}

Rat RatFun::eval(const std::vector<Rat>& point) const {
    if (is_zero()) return Rat(0);
    Rat d = den_.eval(point);
    if (d.is_zero()) throw StructuralError("rational function evaluated at a pole");
    return num_.eval(point) / d;
}

RatFun RatFun::subst_linear(const std::vector<std::vector<Rat>>& S,
                            std::shared_ptr<const PolyRing> target) const {
    if (is_zero()) return RatFun();
    Poly n = num_.subst_linear(S);
    Poly d = den_.subst_linear(S);
    if (d.is_zero()) throw StructuralError("substitution annihilates denominator");
    return RatFun(std::move(target), std::move(n), std::move(d));
}

std::string RatFun::str() const {
    if (is_zero()) return "0";
    const std::vector<std::string>* names = ring_ ? &ring_->names : nullptr;
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str(names);
    std::ostringstream os;
    os << "(" << num_.str(names) << ")/(" << den_.str(names) << ")";
    return os.str();
}

} // namespace hkt
