#include "cskein/rational.hpp"

#include <sstream>

namespace cskein {

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (!same_context(num_.ctx(), den_.ctx()))
        throw ring_mismatch("numerator and denominator contexts differ");
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    normalize();
}

RationalFn RationalFn::zero(const Ctx& ctx) {
    return from_poly(LaurentPoly::zero(ctx));
}

RationalFn RationalFn::constant(const Ctx& ctx, Int c) {
    return from_poly(LaurentPoly::constant(ctx, std::move(c)));
}

RationalFn RationalFn::variable(const Ctx& ctx, int i) {
    return from_poly(LaurentPoly::variable(ctx, i));
}

RationalFn RationalFn::from_poly(LaurentPoly p) {
    RationalFn f;
    auto ctx = p.ctx();
    f.num_ = std::move(p);
    f.den_ = LaurentPoly::constant(ctx, 1);
    return f;
}

void RationalFn::normalize() {
    const Ctx& ctx = num_.ctx();
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(ctx, 1);
        return;
    }
    // (a) move the denominator's monomial content into the numerator
    Monomial mc = den_.monomial_content();
    bool nontrivial = false;
    for (auto e : mc) nontrivial |= (e != 0);
    if (nontrivial) {
        Monomial neg = mc;
        for (auto& e : neg) e = -e;
        den_ = den_.mul_monomial(neg, 1);
        num_ = num_.mul_monomial(neg, 1);
    }
    // (b) attempt exact division
    if (auto q = lp_exact_div(num_, den_)) {
        num_ = std::move(*q);
        den_ = LaurentPoly::constant(ctx, 1);
    }
    // (c) positive leading denominator coefficient over Z
    if (ctx->ring == CoeffRing::Integers && den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
    return RationalFn(num_ * o.den_, den_ * o.num_);
}

RationalFn RationalFn::operator-() const {
    RationalFn f = *this;
    f.num_ = -f.num_;
    return f;
}

bool RationalFn::operator==(const RationalFn& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFn acc = constant(ctx(), 1);
    RationalFn base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string RationalFn::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ") / (" << den_.to_string() << ")";
    return os.str();
}

bool rf_is_laurent(const RationalFn& f) {
    const LaurentPoly& d = f.den();
    if (!d.is_monomial()) return false;
    const Int& c = d.leading_coeff();
    return c == 1 || c == -1;
}

LaurentPoly rf_as_laurent(const RationalFn& f) {
    if (!rf_is_laurent(f)) throw std::logic_error("not a Laurent polynomial");
    Monomial neg = f.den().leading_monomial();
    for (auto& e : neg) e = -e;
    Int c = f.den().leading_coeff();  // +-1
    return f.num().mul_monomial(neg, c);
}

RationalFn rf_substitute(const RationalFn& f, const std::vector<RationalFn>& assignment) {
    const Ctx& src = f.ctx();
    if (assignment.size() != src->vars.size())
        throw std::invalid_argument("assignment does not cover the variable set");
    const Ctx tgt = assignment.empty() ? src : assignment[0].ctx();
    for (auto& v : assignment)
        if (!same_context(v.ctx(), tgt)) throw ring_mismatch("assignment values over mixed contexts");

    // cache powers per variable and sign
    std::vector<std::vector<RationalFn>> pos(assignment.size()), neg(assignment.size());
    auto power = [&](size_t i, int32_t e) -> RationalFn {
        if (e >= 0) {
            auto& tab = pos[i];
            if (tab.empty()) tab.push_back(RationalFn::constant(tgt, 1));
            while ((int32_t)tab.size() <= e) tab.push_back(tab.back() * assignment[i]);
            return tab[e];
        }
        auto& tab = neg[i];
        if (tab.empty()) tab.push_back(RationalFn::constant(tgt, 1));
        if (tab.size() == 1) tab.push_back(assignment[i].inverse());
        while ((int32_t)tab.size() <= -e) tab.push_back(tab.back() * tab[1]);
        return tab[-e];
    };
    auto eval_poly = [&](const LaurentPoly& p) -> RationalFn {
        RationalFn acc = RationalFn::zero(tgt);
        for (auto& [m, c] : p.terms()) {
            RationalFn t = RationalFn::constant(tgt, c);
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0) t = t * power(i, m[i]);
            acc = acc + t;
        }
        return acc;
    };
    RationalFn dn = eval_poly(f.den());
    if (dn.is_zero()) throw std::invalid_argument("substitution makes the denominator zero");
    return eval_poly(f.num()) / dn;
}

} // namespace cskein
