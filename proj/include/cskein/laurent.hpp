#ifndef CSKEIN_LAURENT_HPP
#define CSKEIN_LAURENT_HPP

#include "cskein/ring.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cskein {

// Variable set + coefficient ring shared by every value of a computation.
struct PolyContext {
    std::vector<std::string> vars;
    CoeffRing ring = CoeffRing::Integers;
};
using Ctx = std::shared_ptr<const PolyContext>;

Ctx make_ctx(std::vector<std::string> vars, CoeffRing ring = CoeffRing::Integers);

// contexts are interchangeable when they agree on variables and ring
bool same_context(const Ctx& a, const Ctx& b);

// Exponent vector; length = number of context variables, negatives allowed.
using Monomial = std::vector<int32_t>;

int64_t total_degree(const Monomial& m);
// Graded-lexicographic order: first by total degree, ties by exponent vector.
bool graded_lex_less(const Monomial& a, const Monomial& b);

// Exact multivariate Laurent polynomial. Terms are kept sorted in strictly
// decreasing graded-lex order with no zero coefficients, so equal polynomials
// have identical representations and serializations.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

    static LaurentPoly zero(const Ctx& ctx);
    static LaurentPoly constant(const Ctx& ctx, Int c);
    static LaurentPoly variable(const Ctx& ctx, int i);
    static LaurentPoly monomial(const Ctx& ctx, Monomial m, Int c);

    const Ctx& ctx() const { return ctx_; }
    const std::vector<std::pair<Monomial, Int>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;

    const Monomial& leading_monomial() const;
    const Int& leading_coeff() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(int64_t e) const;  // e >= 0
    LaurentPoly mul_monomial(const Monomial& m, const Int& c) const;

    // Componentwise-minimum exponent vector over all terms (zero poly -> zeros).
    Monomial monomial_content() const;

    std::string to_string() const;

    // assembles from unsorted term list, combining and dropping zeros
    static LaurentPoly from_terms(const Ctx& ctx, std::vector<std::pair<Monomial, Int>> ts);

private:
    Ctx ctx_;
    std::vector<std::pair<Monomial, Int>> terms_;
    void check_compatible(const LaurentPoly& o) const;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

// Exact division: returns q with q*b == a, or nullopt when a is not divisible.
// Algorithm: strip both monomial contents, then multivariate long division by
// the graded-lex leading term.
std::optional<LaurentPoly> lp_exact_div(const LaurentPoly& a, const LaurentPoly& b);

} // namespace cskein

#endif
