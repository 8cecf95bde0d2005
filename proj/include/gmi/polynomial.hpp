#pragma once

#include <map>
#include <string>
#include <vector>

#include "gmi/moment_index.hpp"
#include "gmi/moments.hpp"
#include "gmi/rational.hpp"

namespace gmi {

/// Product of moment symbols, kept as a sorted multiset of indices.
using MomentMonomial = std::vector<MomentIndex>;

/// Polynomial over moment symbols with exact rational coefficients.
/// Terms are keyed by canonical (sorted) monomials; zero coefficients are
/// never stored.
class MomentPolynomial {
public:
    using TermMap = std::map<MomentMonomial, Rational>;

    explicit MomentPolynomial(int dim = 2) : dim_(dim) {}

    static MomentPolynomial zero(int dim) { return MomentPolynomial(dim); }
    static MomentPolynomial constant(int dim, const Rational& c);
    static MomentPolynomial symbol(int dim, const MomentIndex& idx);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Max number of moment factors in any term.
    int degree() const;
    /// Max moment order appearing in any term.
    int order() const;

    void add_term(MomentMonomial mono, const Rational& coeff);

    MomentPolynomial operator-() const;
    friend MomentPolynomial operator+(const MomentPolynomial& a, const MomentPolynomial& b);
    friend MomentPolynomial operator-(const MomentPolynomial& a, const MomentPolynomial& b);
    friend MomentPolynomial operator*(const MomentPolynomial& a, const MomentPolynomial& b);
    friend MomentPolynomial operator*(const Rational& c, const MomentPolynomial& p);

    friend bool operator==(const MomentPolynomial& a, const MomentPolynomial& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MomentPolynomial& a, const MomentPolynomial& b) {
        return !(a == b);
    }
    friend bool operator<(const MomentPolynomial& a, const MomentPolynomial& b);

    /// Formal partial derivative with respect to one moment symbol.
    MomentPolynomial differentiate(const MomentIndex& symbol) const;

    /// Numeric value at a moment table; requires mv.max_order >= order().
    double evaluate(const MomentVector& mv) const;

    /// Terms containing an order-1 moment factor removed (central moments
    /// make those identically zero).
    MomentPolynomial central_reduced() const;

    /// "mu20*mu02 - mu11^2" style rendering, terms in canonical key order.
    std::string str() const;

private:
    int dim_;
    TermMap terms_;
};

/// Scalar-normalized form: coefficients divided by the leading coefficient so
/// the lexicographically-first term has coefficient +1. Zero stays zero.
MomentPolynomial canonicalize(const MomentPolynomial& p);

/// If a == s*b for a rational s, return s through `scalar` and true.
bool proportional(const MomentPolynomial& a, const MomentPolynomial& b, Rational& scalar);

}  // namespace gmi
