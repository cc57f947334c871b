#ifndef CSKEIN_SEED_HPP
#define CSKEIN_SEED_HPP

#include "cskein/rational.hpp"

#include <iosfwd>
#include <vector>

namespace cskein {

// Skew-symmetric integer exchange matrix.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    explicit ExchangeMatrix(int m) : n_(m), a_(m * m, 0) {}
    static ExchangeMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int size() const { return n_; }
    int at(int i, int j) const { return a_[i * n_ + j]; }
    int& at(int i, int j) { return a_[i * n_ + j]; }

    bool is_skew_symmetric() const;
    void require_skew_symmetric() const;
    bool operator==(const ExchangeMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const ExchangeMatrix& o) const { return !(*this == o); }

    std::string to_string() const;  // row-major, bit-exact integers

private:
    int n_ = 0;
    std::vector<int> a_;
};

ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, int k);

using MutationWord = std::vector<int>;

// Seed: cluster of m rational functions in the initial variables, exchange
// matrix, and the inverse coordinate change back_map (initial variable ->
// expression in the current cluster symbols).
struct Seed {
    Ctx ctx;                        // initial variables, also the symbol names
    std::vector<RationalFn> vars;   // cluster variables in initial variables
    ExchangeMatrix matrix;
    std::vector<RationalFn> back;   // initial var i in current cluster symbols

    static Seed initial(const Ctx& ctx, ExchangeMatrix B);
    int rank() const { return (int)vars.size(); }
};

Seed mutate_seed(const Seed& s, int k);
Seed apply_word(const Seed& s, const MutationWord& w);

// the exchange binomial prod_{b_jk>0} v_j^{b_jk} + prod_{b_jk<0} v_j^{-b_jk}
// evaluated on the supplied values
RationalFn exchange_binomial(const ExchangeMatrix& B, int k,
                             const std::vector<RationalFn>& values, const Ctx& ctx);

// Canonical key: sorted canonical serializations of the cluster variables.
std::string seed_key(const Seed& s);

// Checks that two seeds with equal keys carry consistent matrices under the
// index matching induced by sorting the variables; throws on mismatch.
void check_seed_consistency(const Seed& a, const Seed& b);

// seed file format:  m <int> / vars <names...> / matrix <m rows> / [cluster <m lines>]
Seed read_seed(std::istream& in);
void write_seed(std::ostream& out, const Seed& s);

} // namespace cskein

#endif
