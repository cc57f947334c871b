#include "cskein/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cskein {

Ctx make_ctx(std::vector<std::string> vars, CoeffRing ring) {
    auto c = std::make_shared<PolyContext>();
    c->vars = std::move(vars);
    c->ring = ring;
    return c;
}

int64_t total_degree(const Monomial& m) {
    int64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

namespace {
struct DescLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return graded_lex_less(b, a);
    }
};
} // namespace

bool same_context(const Ctx& a, const Ctx& b) {
    if (a == b) return true;
    return a && b && a->ring == b->ring && a->vars == b->vars;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (!same_context(ctx_, o.ctx_))
        throw ring_mismatch("operands come from different polynomial contexts");
}

LaurentPoly LaurentPoly::zero(const Ctx& ctx) { return LaurentPoly(ctx); }

LaurentPoly LaurentPoly::constant(const Ctx& ctx, Int c) {
    LaurentPoly p(ctx);
    c = ring_reduce(std::move(c), ctx->ring);
    if (c != 0) p.terms_.emplace_back(Monomial(ctx->vars.size(), 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(const Ctx& ctx, int i) {
    Monomial m(ctx->vars.size(), 0);
    m.at(i) = 1;
    return monomial(ctx, std::move(m), 1);
}

LaurentPoly LaurentPoly::monomial(const Ctx& ctx, Monomial m, Int c) {
    if (m.size() != ctx->vars.size())
        throw ring_mismatch("monomial length does not match variable set");
    LaurentPoly p(ctx);
    c = ring_reduce(std::move(c), ctx->ring);
    if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].second == 1 &&
           total_degree(terms_[0].first) == 0 &&
           std::all_of(terms_[0].first.begin(), terms_[0].first.end(),
                       [](int32_t e) { return e == 0; });
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_[0].first.begin(), terms_[0].first.end(),
                       [](int32_t e) { return e == 0; });
}

const Monomial& LaurentPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front().first;
}

const Int& LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front().second;
}

LaurentPoly LaurentPoly::from_terms(const Ctx& ctx, std::vector<std::pair<Monomial, Int>> ts) {
    std::map<Monomial, Int, DescLess> acc;
    for (auto& [m, c] : ts) {
        if (m.size() != ctx->vars.size())
            throw ring_mismatch("monomial length does not match variable set");
        acc[std::move(m)] += c;
    }
    LaurentPoly p(ctx);
    for (auto& [m, c] : acc) {
        Int r = ring_reduce(c, ctx->ring);
        if (r != 0) p.terms_.emplace_back(m, std::move(r));
    }
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(ctx_);
    p.terms_.reserve(terms_.size());
    for (auto& [m, c] : terms_)
        p.terms_.emplace_back(m, ring_reduce(-c, ctx_->ring));
    if (ctx_->ring == CoeffRing::IntegersMod2) return *this;  // -1 == 1
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r(ctx_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    DescLess less;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first == o.terms_[j].first) {
            Int c = ring_reduce(terms_[i].second + o.terms_[j].second, ctx_->ring);
            if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i; ++j;
        } else if (less(terms_[i].first, o.terms_[j].first)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_compatible(o);
    std::map<Monomial, Int, DescLess> acc;
    const size_t n = ctx_->vars.size();
    Monomial m(n);
    for (auto& [ma, ca] : terms_) {
        for (auto& [mb, cb] : o.terms_) {
            for (size_t t = 0; t < n; ++t) m[t] = ma[t] + mb[t];
            acc[m] += ca * cb;
        }
    }
    LaurentPoly r(ctx_);
    for (auto& [mm, c] : acc) {
        Int v = ring_reduce(c, ctx_->ring);
        if (v != 0) r.terms_.emplace_back(mm, std::move(v));
    }
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    LaurentPoly acc = constant(ctx_, 1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

LaurentPoly LaurentPoly::mul_monomial(const Monomial& m, const Int& c) const {
    LaurentPoly r(ctx_);
    Int cr = ring_reduce(c, ctx_->ring);
    if (cr == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& [mm, cc] : terms_) {
        Monomial m2 = mm;
        for (size_t t = 0; t < m2.size(); ++t) m2[t] += m[t];
        Int c2 = ring_reduce(cc * cr, ctx_->ring);
        if (c2 != 0) r.terms_.emplace_back(std::move(m2), std::move(c2));
    }
    return r;
}

Monomial LaurentPoly::monomial_content() const {
    Monomial m(ctx_->vars.size(), 0);
    if (terms_.empty()) return m;
    m = terms_[0].first;
    for (auto& [mm, c] : terms_)
        for (size_t t = 0; t < m.size(); ++t) m[t] = std::min(m[t], mm[t]);
    return m;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) os << "*" << ctx_->vars[i] << "^" << m[i];
    }
    return os.str();
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

std::optional<LaurentPoly> lp_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const Ctx& ctx = a.ctx();
    if (!same_context(ctx, b.ctx()))
        throw ring_mismatch("operands come from different polynomial contexts");
    if (a.is_zero()) return LaurentPoly::zero(ctx);

    // strip monomial contents; the honest-polynomial quotient picks up the
    // monomial difference at the end
    Monomial ca = a.monomial_content(), cb = b.monomial_content();
    Monomial neg_ca = ca, neg_cb = cb;
    for (auto& e : neg_ca) e = -e;
    for (auto& e : neg_cb) e = -e;
    LaurentPoly r = a.mul_monomial(neg_ca, 1);
    LaurentPoly bb = b.mul_monomial(neg_cb, 1);

    Monomial shift(ca.size());
    for (size_t i = 0; i < ca.size(); ++i) shift[i] = ca[i] - cb[i];

    const bool z2 = ctx->ring == CoeffRing::IntegersMod2;
    std::vector<std::pair<Monomial, Int>> qterms;
    const Monomial& lmb = bb.leading_monomial();
    const Int& lcb = bb.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& lmr = r.leading_monomial();
        Monomial qm(lmr.size());
        for (size_t i = 0; i < lmr.size(); ++i) {
            qm[i] = lmr[i] - lmb[i];
            if (qm[i] < 0) return std::nullopt;  // leading term not divisible
        }
        Int qc;
        if (z2) {
            qc = 1;  // Z/2 is a field and lcb == 1
        } else {
            Int rem;
            mpz_fdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(),
                        r.leading_coeff().get_mpz_t(), lcb.get_mpz_t());
            if (rem != 0) return std::nullopt;
        }
        r = r - bb.mul_monomial(qm, qc);
        for (size_t i = 0; i < qm.size(); ++i) qm[i] += shift[i];
        qterms.emplace_back(std::move(qm), std::move(qc));
    }
    return LaurentPoly::from_terms(ctx, std::move(qterms));
}

} // namespace cskein
