#include "hkt/sqrt_extension.hpp"

#include <sstream>

#include "hkt/errors.hpp"

namespace hkt {

std::shared_ptr<const SqrtRing> SqrtRing::make(std::shared_ptr<const PolyRing> pr, Poly radicand) {
    if (!pr) throw StructuralError("sqrt ring needs a polynomial ring");
    if (radicand.nvars() != pr->nvars) throw StructuralError("radicand variable-count mismatch");
    if (radicand.is_constant()) throw StructuralError("constant radicand not supported");
    auto r = std::make_shared<SqrtRing>();
    r->poly_ring = std::move(pr);
    r->partials.reserve(r->poly_ring->nvars);
    for (int i = 0; i < r->poly_ring->nvars; ++i) r->partials.push_back(radicand.derivative(i));
    r->radicand = std::move(radicand);
    return r;
}

SqrtExt::SqrtExt(std::shared_ptr<const SqrtRing> ring, RatFun a, RatFun b)
    : ring_(std::move(ring)), a_(std::move(a)), b_(std::move(b)) {
    if (!ring_) throw StructuralError("sqrt extension element needs a ring");
    // normalize components onto the ring's polynomial ring
    RatFun zero = RatFun::constant(ring_->poly_ring, Rat(0));
    a_ = a_ + zero;
    b_ = b_ + zero;
    if (b_.is_zero()) ring_ = ring_; // radical part may be zero; ring kept for context
}

SqrtExt SqrtExt::root(std::shared_ptr<const SqrtRing> ring) {
    RatFun one = RatFun::constant(ring->poly_ring, Rat(1));
    RatFun zero = RatFun::constant(ring->poly_ring, Rat(0));
    return SqrtExt(std::move(ring), zero, one);
}

SqrtExt SqrtExt::root_pow(std::shared_ptr<const SqrtRing> ring, int k) {
    const auto& pr = ring->poly_ring;
    const Poly& q = ring->radicand;
    Poly one = Poly::constant(pr->nvars, Rat(1));
    auto qpow = [&](int m) { return q.pow(static_cast<unsigned>(m)); };
    int m = k >= 0 ? k / 2 : (-k + 1) / 2; // |floor division| bookkeeping below
    if (k % 2 == 0) {
        int h = k / 2;
        RatFun a = h >= 0 ? RatFun(pr, qpow(h)) : RatFun(pr, one, qpow(-h));
        return SqrtExt(std::move(ring), a, RatFun::constant(pr, Rat(0)));
    }
    // odd: r^k = q^{(k-1)/2} * r  (k>0)  or  r / q^{(1-k)/2}  (k<0)
    RatFun b;
    if (k > 0) b = RatFun(pr, qpow((k - 1) / 2));
    else b = RatFun(pr, one, qpow((1 - k) / 2));
    (void)m;
    return SqrtExt(std::move(ring), RatFun::constant(pr, Rat(0)), b);
}

void SqrtExt::promote(SqrtExt& x, SqrtExt& y) {
    if (x.ring_ == y.ring_) return;
    if (!x.ring_ && !y.ring_) return; // both radical-free; RatFun promotion handles it
    if (!x.ring_) {
        x.ring_ = y.ring_;
        return;
    }
    if (!y.ring_) {
        y.ring_ = x.ring_;
        return;
    }
    throw StructuralError("sqrt-extension elements over different rings");
}

SqrtExt SqrtExt::operator-() const {
    SqrtExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

SqrtExt operator+(const SqrtExt& x0, const SqrtExt& y0) {
    SqrtExt x = x0, y = y0;
    SqrtExt::promote(x, y);
    SqrtExt r;
    r.ring_ = x.ring_;
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    return r;
}

SqrtExt operator-(const SqrtExt& x, const SqrtExt& y) { return x + (-y); }

SqrtExt operator*(const SqrtExt& x0, const SqrtExt& y0) {
    SqrtExt x = x0, y = y0;
    SqrtExt::promote(x, y);
    SqrtExt r;
    r.ring_ = x.ring_;
    if (!x.b_.is_zero() && !y.b_.is_zero()) {
        if (!r.ring_) throw StructuralError("radical product without ring");
        RatFun q(r.ring_->poly_ring, r.ring_->radicand);
        r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * q;
    } else {
        r.a_ = x.a_ * y.a_;
    }
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    return r;
}

SqrtExt operator*(const SqrtExt& x, const Rat& c) {
    SqrtExt r = x;
    r.a_ = r.a_ * c;
    r.b_ = r.b_ * c;
    return r;
}

bool operator==(const SqrtExt& x, const SqrtExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
}

SqrtExt SqrtExt::derivative(int i) const {
    SqrtExt r;
    r.ring_ = ring_;
    r.a_ = a_.derivative(i);
    if (b_.is_zero()) {
        r.b_ = b_;
        return r;
    }
    if (!ring_) throw StructuralError("radical derivative without ring");
    const auto& pr = ring_->poly_ring;
    RatFun corr(pr, ring_->partials[i], ring_->radicand * Rat(2));
    r.b_ = b_.derivative(i) + b_ * corr;
    return r;
}

Rat SqrtExt::eval(const std::vector<Rat>& point) const {
    Rat va = a_.eval(point);
    if (b_.is_zero()) return va;
    Rat qv = ring_->radicand.eval(point);
    Rat root;
    if (!qv.perfect_square(&root))
        throw StructuralError("radicand is not a perfect square at evaluation point");
    return va + b_.eval(point) * root;
}

std::pair<Rat, Rat> SqrtExt::eval_components(const std::vector<Rat>& point) const {
    return {a_.eval(point), b_.is_zero() ? Rat(0) : b_.eval(point)};
}

SqrtExt SqrtExt::subst_linear(const std::vector<std::vector<Rat>>& S,
                              std::shared_ptr<const SqrtRing> target) const {
    if (!target) throw StructuralError("substitution target ring required");
    const auto& pr = target->poly_ring;
    RatFun na = a_.is_zero() ? RatFun() : a_.subst_linear(S, pr);
    RatFun nb;
    if (!b_.is_zero()) {
        if (!ring_) throw StructuralError("radical substitution without ring");
        // radicand ∘ S must be c^2 * target radicand
        Poly qs = ring_->radicand.subst_linear(S);
        Poly ratio;
        if (!Poly::try_divide(qs, target->radicand, &ratio) || !ratio.is_constant())
            throw StructuralError("substitution does not preserve the radicand up to scale");
        Rat c2 = ratio.constant_value();
        Rat c;
        if (!c2.perfect_square(&c))
            throw StructuralError("radicand scale factor is not a perfect square");
        nb = b_.subst_linear(S, pr) * c;
    }
    SqrtExt r;
    r.ring_ = target;
    RatFun zero = RatFun::constant(pr, Rat(0));
    r.a_ = na + zero;
    r.b_ = nb + zero;
    return r;
}

std::string SqrtExt::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (!a_.is_zero()) os << a_.str();
    if (!b_.is_zero()) {
        if (!a_.is_zero()) os << " + ";
        os << "(" << b_.str() << ")*r";
    }
    return os.str();
}

} // namespace hkt
