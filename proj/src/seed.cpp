#include "cskein/seed.hpp"
#include "cskein/parse.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cskein {

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    ExchangeMatrix B((int)rows.size());
    for (int i = 0; i < B.size(); ++i) {
        if ((int)rows[i].size() != B.size())
            throw std::invalid_argument("matrix is not square");
        for (int j = 0; j < B.size(); ++j) B.at(i, j) = rows[i][j];
    }
    return B;
}

bool ExchangeMatrix::is_skew_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

void ExchangeMatrix::require_skew_symmetric() const {
    if (!is_skew_symmetric())
        throw std::invalid_argument("matrix is not skew-symmetric");
}

std::string ExchangeMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, int k) {
    const int m = B.size();
    if (k < 0 || k >= m) throw std::out_of_range("mutation direction out of range");
    B.require_skew_symmetric();
    ExchangeMatrix R(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == k || j == k) {
                R.at(i, j) = -B.at(i, j);
            } else {
                int corr = std::abs(B.at(i, k)) * B.at(k, j) + B.at(i, k) * std::abs(B.at(k, j));
                R.at(i, j) = B.at(i, j) + corr / 2;
            }
        }
    }
    return R;
}

Seed Seed::initial(const Ctx& ctx, ExchangeMatrix B) {
    B.require_skew_symmetric();
    if ((int)ctx->vars.size() != B.size())
        throw std::invalid_argument("matrix size does not match variable count");
    Seed s;
    s.ctx = ctx;
    s.matrix = std::move(B);
    for (int i = 0; i < (int)ctx->vars.size(); ++i) {
        s.vars.push_back(RationalFn::variable(ctx, i));
        s.back.push_back(RationalFn::variable(ctx, i));
    }
    return s;
}

RationalFn exchange_binomial(const ExchangeMatrix& B, int k,
                             const std::vector<RationalFn>& x, const Ctx& ctx) {
    RationalFn pos = RationalFn::constant(ctx, 1);
    RationalFn neg = RationalFn::constant(ctx, 1);
    for (int j = 0; j < B.size(); ++j) {
        int b = B.at(j, k);
        if (b > 0) pos = pos * x[j].pow(b);
        else if (b < 0) neg = neg * x[j].pow(-b);
    }
    return pos + neg;
}

Seed mutate_seed(const Seed& s, int k) {
    const int m = s.rank();
    if (k < 0 || k >= m) throw std::out_of_range("mutation direction out of range");
    Seed r = s;
    r.vars[k] = exchange_binomial(s.matrix, k, s.vars, s.ctx) / s.vars[k];
    r.matrix = mutate_matrix(s.matrix, k);
    // old k-th symbol in terms of the new cluster symbols: the same binomial
    // on the symbols divided by the new symbol
    std::vector<RationalFn> symbols;
    symbols.reserve(m);
    for (int i = 0; i < m; ++i) symbols.push_back(RationalFn::variable(s.ctx, i));
    RationalFn old_k = exchange_binomial(s.matrix, k, symbols, s.ctx) / symbols[k];
    std::vector<RationalFn> assign = symbols;
    assign[k] = old_k;
    for (int i = 0; i < m; ++i) r.back[i] = rf_substitute(s.back[i], assign);
    return r;
}

Seed apply_word(const Seed& s, const MutationWord& w) {
    Seed cur = s;
    for (int k : w) cur = mutate_seed(cur, k);
    return cur;
}

std::string seed_key(const Seed& s) {
    std::vector<std::string> keys;
    keys.reserve(s.vars.size());
    for (auto& v : s.vars) keys.push_back(v.to_string());
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (size_t i = 0; i < keys.size(); ++i) {
        if (i) out += " ; ";
        out += keys[i];
    }
    return out;
}

void check_seed_consistency(const Seed& a, const Seed& b) {
    const int m = a.rank();
    if (m != b.rank()) throw std::logic_error("seed rank mismatch");
    auto perm = [](const Seed& s) {
        std::vector<int> p(s.vars.size());
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::string> keys;
        for (auto& v : s.vars) keys.push_back(v.to_string());
        std::sort(p.begin(), p.end(), [&](int i, int j) { return keys[i] < keys[j]; });
        return p;
    };
    std::vector<int> pa = perm(a), pb = perm(b);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (a.matrix.at(pa[i], pa[j]) != b.matrix.at(pb[i], pb[j]))
                throw std::logic_error("seeds with equal clusters carry inconsistent matrices");
}

Seed read_seed(std::istream& in) {
    std::string tok;
    int m = -1;
    std::vector<std::string> names;
    std::vector<std::vector<int>> rows;
    std::vector<std::string> cluster;
    while (in >> tok) {
        if (tok == "m") {
            in >> m;
        } else if (tok == "vars") {
            for (int i = 0; i < m; ++i) {
                std::string v; in >> v; names.push_back(v);
            }
        } else if (tok == "matrix") {
            rows.assign(m, std::vector<int>(m));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) in >> rows[i][j];
        } else if (tok == "cluster") {
            std::string line;
            std::getline(in, line);
            for (int i = 0; i < m; ++i) {
                std::getline(in, line);
                cluster.push_back(line);
            }
        } else {
            throw std::invalid_argument("unknown seed file token '" + tok + "'");
        }
    }
    if (m <= 0 || (int)names.size() != m || (int)rows.size() != m)
        throw std::invalid_argument("incomplete seed file");
    Ctx ctx = make_ctx(names);
    Seed s = Seed::initial(ctx, ExchangeMatrix::from_rows(rows));
    if (!cluster.empty()) {
        for (int i = 0; i < m; ++i) s.vars[i] = parse_rational(cluster[i], ctx);
    }
    return s;
}

void write_seed(std::ostream& out, const Seed& s) {
    out << "m " << s.rank() << "\n";
    out << "vars";
    for (auto& v : s.ctx->vars) out << ' ' << v;
    out << "\nmatrix\n" << s.matrix.to_string();
    out << "cluster\n";
    for (auto& v : s.vars) out << v.to_string() << "\n";
}

} // namespace cskein
