#include "gmi/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gmi {

MomentPolynomial MomentPolynomial::constant(int dim, const Rational& c) {
    MomentPolynomial p(dim);
    p.add_term({}, c);
    return p;
}

MomentPolynomial MomentPolynomial::symbol(int dim, const MomentIndex& idx) {
    MomentPolynomial p(dim);
    p.add_term({idx}, Rational(1));
    return p;
}

int MomentPolynomial::degree() const {
    std::size_t d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.size());
    return int(d);
}

int MomentPolynomial::order() const {
    int o = 0;
    for (const auto& [mono, c] : terms_)
        for (const auto& idx : mono) o = std::max(o, idx.order());
    return o;
}

void MomentPolynomial::add_term(MomentMonomial mono, const Rational& coeff) {
    if (coeff.is_zero()) return;
    std::sort(mono.begin(), mono.end());
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(std::move(mono), coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MomentPolynomial MomentPolynomial::operator-() const {
    MomentPolynomial r(dim_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

MomentPolynomial operator+(const MomentPolynomial& a, const MomentPolynomial& b) {
    MomentPolynomial r = a;
    for (const auto& [mono, c] : b.terms_) r.add_term(mono, c);
    return r;
}

MomentPolynomial operator-(const MomentPolynomial& a, const MomentPolynomial& b) {
    MomentPolynomial r = a;
    for (const auto& [mono, c] : b.terms_) r.add_term(mono, -c);
    return r;
}

MomentPolynomial operator*(const MomentPolynomial& a, const MomentPolynomial& b) {
    MomentPolynomial r(a.dim_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            MomentMonomial mono = ma;
            mono.insert(mono.end(), mb.begin(), mb.end());
            r.add_term(std::move(mono), ca * cb);
        }
    }
    return r;
}

MomentPolynomial operator*(const Rational& c, const MomentPolynomial& p) {
    MomentPolynomial r(p.dim_);
    if (c.is_zero()) return r;
    for (const auto& [mono, pc] : p.terms_) r.terms_.emplace(mono, c * pc);
    return r;
}

bool operator<(const MomentPolynomial& a, const MomentPolynomial& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    auto ai = a.terms_.begin(), bi = b.terms_.begin();
    for (; ai != a.terms_.end() && bi != b.terms_.end(); ++ai, ++bi) {
        if (ai->first != bi->first) return ai->first < bi->first;
        if (ai->second != bi->second) return ai->second < bi->second;
    }
    return bi != b.terms_.end();
}

MomentPolynomial MomentPolynomial::differentiate(const MomentIndex& symbol) const {
    MomentPolynomial r(dim_);
    for (const auto& [mono, c] : terms_) {
        auto it = std::find(mono.begin(), mono.end(), symbol);
        if (it == mono.end()) continue;
        auto count = std::count(mono.begin(), mono.end(), symbol);
        MomentMonomial reduced = mono;
        reduced.erase(std::find(reduced.begin(), reduced.end(), symbol));
        r.add_term(std::move(reduced), Rational(count) * c);
    }
    return r;
}

double MomentPolynomial::evaluate(const MomentVector& mv) const {
    if (mv.dim() != dim_) throw std::invalid_argument("dimension mismatch in evaluate");
    double total = 0.0;
    for (const auto& [mono, c] : terms_) {
        double t = c.to_double();
        for (const auto& idx : mono) t *= mv.at(idx);
        total += t;
    }
    return total;
}

MomentPolynomial MomentPolynomial::central_reduced() const {
    MomentPolynomial r(dim_);
    for (const auto& [mono, c] : terms_) {
        bool has_order1 = false;
        for (const auto& idx : mono)
            if (idx.order() == 1) { has_order1 = true; break; }
        if (!has_order1) r.terms_.emplace(mono, c);
    }
    return r;
}

std::string MomentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == Rational(1)) && !mono.empty();
        if (!unit) os << mag.str();
        std::size_t i = 0;
        while (i < mono.size()) {
            std::size_t j = i;
            while (j < mono.size() && mono[j] == mono[i]) ++j;
            if (!unit || i > 0) os << "*";
            os << mono[i].name(dim_);
            if (j - i > 1) os << "^" << (j - i);
            unit = false;
            i = j;
        }
    }
    return os.str();
}

MomentPolynomial canonicalize(const MomentPolynomial& p) {
    if (p.is_zero()) return p;
    const Rational& lead = p.terms().begin()->second;
    return (Rational(1) / lead) * p;
}

bool proportional(const MomentPolynomial& a, const MomentPolynomial& b, Rational& scalar) {
    if (a.dim() != b.dim()) return false;
    if (a.is_zero() && b.is_zero()) {
        scalar = Rational(1);
        return true;
    }
    if (a.is_zero() || b.is_zero()) return false;
    if (a.term_count() != b.term_count()) return false;
    scalar = a.terms().begin()->second / b.terms().begin()->second;
    auto ai = a.terms().begin();
    for (auto bi = b.terms().begin(); bi != b.terms().end(); ++ai, ++bi) {
        if (ai->first != bi->first) return false;
        if (ai->second != scalar * bi->second) return false;
    }
    return true;
}

}  // namespace gmi
