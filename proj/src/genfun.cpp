#include "gmi/genfun.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmi {

std::string GenFactor::str() const {
    std::ostringstream os;
    os << (kind == Kind::F ? 'f' : 'g') << '(' << int(args[0]) << ',' << int(args[1]);
    if (arity == 3) os << ',' << int(args[2]);
    os << ')';
    return os.str();
}

void InvariantCore::add_f(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("labels must be positive");
    GenFactor f;
    f.kind = GenFactor::Kind::F;
    f.arity = 2;
    f.args = {std::uint8_t(std::min(i, j)), std::uint8_t(std::max(i, j)), 0};
    factors_.insert(std::upper_bound(factors_.begin(), factors_.end(), f), f);
}

void InvariantCore::add_g(int i, int j) {
    if (dim_ != 2) throw std::invalid_argument("g(i,j) requires dim 2");
    if (i < 1 || j < 1) throw std::invalid_argument("labels must be positive");
    if (i == j) throw std::invalid_argument("g(i,i) is identically zero");
    if (i > j) { std::swap(i, j); sign_ = -sign_; }
    GenFactor g;
    g.kind = GenFactor::Kind::G;
    g.arity = 2;
    g.args = {std::uint8_t(i), std::uint8_t(j), 0};
    factors_.insert(std::upper_bound(factors_.begin(), factors_.end(), g), g);
}

void InvariantCore::add_g(int i, int j, int k) {
    if (dim_ != 3) throw std::invalid_argument("g(i,j,k) requires dim 3");
    if (i < 1 || j < 1 || k < 1) throw std::invalid_argument("labels must be positive");
    if (i == j || j == k || i == k) throw std::invalid_argument("g needs three distinct labels");
    // bubble into ascending order, one sign flip per transposition
    if (i > j) { std::swap(i, j); sign_ = -sign_; }
    if (j > k) { std::swap(j, k); sign_ = -sign_; }
    if (i > j) { std::swap(i, j); sign_ = -sign_; }
    GenFactor g;
    g.kind = GenFactor::Kind::G;
    g.arity = 3;
    g.args = {std::uint8_t(i), std::uint8_t(j), std::uint8_t(k)};
    factors_.insert(std::upper_bound(factors_.begin(), factors_.end(), g), g);
}

int InvariantCore::count_f() const {
    return int(std::count_if(factors_.begin(), factors_.end(),
                             [](const GenFactor& f) { return f.kind == GenFactor::Kind::F; }));
}

int InvariantCore::count_g() const { return factor_count() - count_f(); }

std::vector<int> InvariantCore::occurrences() const {
    int maxlab = 0;
    for (const auto& f : factors_)
        for (int s = 0; s < f.arity; ++s) maxlab = std::max(maxlab, int(f.args[s]));
    std::vector<int> occ(std::size_t(maxlab) + 1, 0);
    for (const auto& f : factors_)
        for (int s = 0; s < f.arity; ++s) ++occ[f.args[s]];
    return occ;
}

int InvariantCore::degree() const {
    auto occ = occurrences();
    int n = 0;
    for (std::size_t l = 1; l < occ.size(); ++l)
        if (occ[l] > 0) ++n;
    return n;
}

int InvariantCore::order() const {
    auto occ = occurrences();
    int m = 0;
    for (std::size_t l = 1; l < occ.size(); ++l) m = std::max(m, occ[l]);
    return m;
}

void InvariantCore::validate() const {
    if (factors_.empty()) throw std::invalid_argument("empty core");
    auto occ = occurrences();
    for (std::size_t l = 1; l < occ.size(); ++l)
        if (occ[l] == 0)
            throw std::invalid_argument("labels must form a contiguous range 1..n; label " +
                                        std::to_string(l) + " unused");
}

std::string InvariantCore::str() const {
    if (factors_.empty()) return sign_ < 0 ? "-1" : "1";
    std::ostringstream os;
    if (sign_ < 0) os << "-";
    std::size_t i = 0;
    bool first = true;
    while (i < factors_.size()) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!first) os << "*";
        os << factors_[i].str();
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

InvariantCore InvariantCore::relabeled_canonical() const {
    int n = 0;
    for (const auto& f : factors_)
        for (int s = 0; s < f.arity; ++s) n = std::max(n, int(f.args[s]));
    if (n > 9) throw std::invalid_argument("relabeling canonicalization capped at 9 labels");

    std::vector<int> perm(std::size_t(n) + 1);
    std::iota(perm.begin(), perm.end(), 0);

    InvariantCore best = *this;
    bool have = false;
    do {
        InvariantCore cand(dim_);
        cand.sign_ = sign_;
        for (const auto& f : factors_) {
            if (f.kind == GenFactor::Kind::F) {
                cand.add_f(perm[f.args[0]], perm[f.args[1]]);
            } else if (f.arity == 2) {
                cand.add_g(perm[f.args[0]], perm[f.args[1]]);
            } else {
                cand.add_g(perm[f.args[0]], perm[f.args[1]], perm[f.args[2]]);
            }
        }
        if (!have || cand.factors_ < best.factors_) {
            best = cand;
            have = true;
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    best.sign_ = 1;  // the representative is the factor multiset alone
    return best;
}

std::string CoreSum::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [coeff, core] : terms) {
        Rational c = coeff * Rational(core.sign());
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        Rational mag = c.abs();
        if (mag != Rational(1)) os << mag.str() << "*";
        os << (core.sign() < 0 ? core.str().substr(1) : core.str());
    }
    return os.str();
}

InvariantCore parse_core(const std::string& text, int dim) {
    InvariantCore core(dim);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw std::invalid_argument("core syntax error at position " + std::to_string(i) +
                                        ": expected '" + c + "' in \"" + text + "\"");
        ++i;
    };
    auto number = [&]() -> int {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == start)
            throw std::invalid_argument("core syntax error at position " + std::to_string(start) +
                                        ": expected integer in \"" + text + "\"");
        return std::stoi(text.substr(start, i - start));
    };

    bool any = false;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (any) expect('*');
        skip_ws();
        if (i >= text.size())
            throw std::invalid_argument("core syntax error: trailing '*' in \"" + text + "\"");
        char kind = text[i];
        if (kind != 'f' && kind != 'g')
            throw std::invalid_argument("core syntax error at position " + std::to_string(i) +
                                        ": expected 'f' or 'g' in \"" + text + "\"");
        ++i;
        expect('(');
        std::vector<int> labels;
        labels.push_back(number());
        skip_ws();
        while (i < text.size() && text[i] == ',') {
            ++i;
            labels.push_back(number());
            skip_ws();
        }
        expect(')');
        int rep = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            rep = number();
            if (rep < 1) throw std::invalid_argument("exponent must be positive");
        }
        for (int r = 0; r < rep; ++r) {
            if (kind == 'f') {
                if (labels.size() != 2)
                    throw std::invalid_argument("f takes exactly two labels");
                core.add_f(labels[0], labels[1]);
            } else if (labels.size() == 2) {
                core.add_g(labels[0], labels[1]);
            } else if (labels.size() == 3) {
                core.add_g(labels[0], labels[1], labels[2]);
            } else {
                throw std::invalid_argument("g takes two labels in 2D or three in 3D");
            }
        }
        any = true;
    }
    if (!any) throw std::invalid_argument("empty core expression");
    return core;
}

namespace {

/// One additive term of a factor: coordinate slots to increment and a sign.
struct FactorTerm {
    int sign;
    // (point label, coordinate) increments
    std::array<std::pair<int, int>, 3> incs;
    int n_incs;
};

std::vector<FactorTerm> factor_terms(const GenFactor& f, int dim) {
    int i = f.args[0], j = f.args[1], k = f.args[2];
    std::vector<FactorTerm> out;
    if (f.kind == GenFactor::Kind::F) {
        for (int c = 0; c < dim; ++c)
            out.push_back({1, {std::make_pair(i, c), std::make_pair(j, c), {}}, 2});
    } else if (f.arity == 2) {
        out.push_back({1, {std::make_pair(i, 0), std::make_pair(j, 1), {}}, 2});
        out.push_back({-1, {std::make_pair(j, 0), std::make_pair(i, 1), {}}, 2});
    } else {
        // 3x3 determinant over rows i, j, k
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        const int signs[6] = {1, -1, -1, 1, 1, -1};
        const int rows[3] = {i, j, k};
        for (int p = 0; p < 6; ++p) {
            FactorTerm t{signs[p],
                         {std::make_pair(rows[0], perms[p][0]), std::make_pair(rows[1], perms[p][1]),
                          std::make_pair(rows[2], perms[p][2])},
                         3};
            out.push_back(t);
        }
    }
    return out;
}

}  // namespace

MomentPolynomial translate(const InvariantCore& core) {
    core.validate();
    const int dim = core.dim();
    const int n = core.degree();

    // exponent table per expansion term: n points x dim coordinates
    using Expo = std::vector<std::uint8_t>;
    std::map<Expo, Rational> state;
    state.emplace(Expo(std::size_t(n) * dim, 0), Rational(core.sign()));

    for (const auto& f : core.factors()) {
        std::map<Expo, Rational> next;
        for (const auto& term : factor_terms(f, dim)) {
            for (const auto& [expo, coeff] : state) {
                Expo e = expo;
                for (int t = 0; t < term.n_incs; ++t) {
                    auto [label, coord] = term.incs[t];
                    ++e[std::size_t(label - 1) * dim + coord];
                }
                Rational c = Rational(term.sign) * coeff;
                auto it = next.find(e);
                if (it == next.end()) {
                    next.emplace(std::move(e), c);
                } else {
                    it->second += c;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        }
        state = std::move(next);
    }

    MomentPolynomial poly(dim);
    for (const auto& [expo, coeff] : state) {
        MomentMonomial mono;
        mono.reserve(std::size_t(n));
        for (int p = 0; p < n; ++p) {
            int a = expo[std::size_t(p) * dim];
            int b = expo[std::size_t(p) * dim + 1];
            int c = dim == 3 ? expo[std::size_t(p) * dim + 2] : 0;
            if (a + b + c == 0) continue;
            mono.push_back(MomentIndex(a, b, c));
        }
        poly.add_term(std::move(mono), coeff);
    }
    return poly;
}

MomentPolynomial translate(const CoreSum& sum) {
    MomentPolynomial acc(sum.dim);
    for (const auto& [coeff, core] : sum.terms) acc = acc + coeff * translate(core);
    return acc;
}

std::pair<int, int> degree_order(const InvariantCore& core) {
    core.validate();
    return {core.degree(), core.order()};
}

int normalization_exponent(const InvariantCore& core, Group group) {
    core.validate();
    if (group == Group::Affine && core.count_f() > 0)
        throw std::invalid_argument("f not affine-covariant");
    if (group == Group::Affine) return core.degree() + core.count_g();
    return core.degree() + core.count_f() + core.count_g();
}

int normalization_exponent(const CoreSum& sum, Group group) {
    if (sum.terms.empty()) throw std::invalid_argument("empty core sum");
    int k = normalization_exponent(sum.terms.front().second, group);
    for (const auto& [c, core] : sum.terms)
        if (normalization_exponent(core, group) != k)
            throw std::invalid_argument("core sum mixes normalization exponents");
    return k;
}

}  // namespace gmi
