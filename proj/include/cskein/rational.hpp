#ifndef CSKEIN_RATIONAL_HPP
#define CSKEIN_RATIONAL_HPP

#include "cskein/laurent.hpp"

namespace cskein {

// Normalized fraction of Laurent polynomials. Normal form:
//   (a) the denominator has trivial monomial content (it is moved into num),
//   (b) exact division num/den is applied whenever it succeeds,
//   (c) over Z the denominator's leading coefficient is positive.
// No multivariate gcd is attempted, so equality tests cross-multiply.
class RationalFn {
public:
    RationalFn() = default;
    RationalFn(LaurentPoly num, LaurentPoly den);

    static RationalFn zero(const Ctx& ctx);
    static RationalFn constant(const Ctx& ctx, Int c);
    static RationalFn variable(const Ctx& ctx, int i);
    static RationalFn from_poly(LaurentPoly p);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const Ctx& ctx() const { return num_.ctx(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn operator-() const;
    bool operator==(const RationalFn& o) const;  // cross-multiplication
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    RationalFn inverse() const;
    RationalFn pow(int64_t e) const;  // any sign

    std::string to_string() const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

// true iff f is a Laurent polynomial: after normalization the denominator is
// a unit times a monomial.
bool rf_is_laurent(const RationalFn& f);

// f as a Laurent polynomial; requires rf_is_laurent(f).
LaurentPoly rf_as_laurent(const RationalFn& f);

// Simultaneous substitution: variable i of f's context is replaced by
// assignment[i] (values over an arbitrary target context), then normalized.
RationalFn rf_substitute(const RationalFn& f, const std::vector<RationalFn>& assignment);

} // namespace cskein

#endif
