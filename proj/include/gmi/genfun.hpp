#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gmi/group.hpp"
#include "gmi/polynomial.hpp"
#include "gmi/rational.hpp"

namespace gmi {

/// One generating-function factor over abstract point labels:
///   F(i,j)   dot product of point vectors i and j (i == j allowed),
///   G(i,j)   2x2 determinant in 2D (distinct labels),
///   G(i,j,k) 3x3 determinant in 3D (distinct labels).
/// Arguments are kept sorted ascending; for G the sign of the implied
/// transpositions is returned by the constructor helpers.
struct GenFactor {
    enum class Kind : std::uint8_t { F, G };

    Kind kind = Kind::F;
    std::array<std::uint8_t, 3> args{0, 0, 0};  // labels, 1-based; args[2]==0 in 2D
    std::uint8_t arity = 2;

    friend bool operator==(const GenFactor& a, const GenFactor& b) {
        return a.kind == b.kind && a.arity == b.arity && a.args == b.args;
    }
    friend bool operator<(const GenFactor& a, const GenFactor& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.args < b.args;
    }

    std::string str() const;
};

/// Multiset of generating-function factors over labels 1..n, with the sign
/// accumulated from G argument canonicalization. Its translation is the
/// moment polynomial of the corresponding multiple integral.
class InvariantCore {
public:
    InvariantCore(int dim = 2) : dim_(dim) {}

    int dim() const { return dim_; }
    int sign() const { return sign_; }
    const std::vector<GenFactor>& factors() const { return factors_; }

    /// Append f(i,j); i == j allowed.
    void add_f(int i, int j);
    /// Append g(i,j) (2D); throws if i == j.
    void add_g(int i, int j);
    /// Append g(i,j,k) (3D); throws unless labels are distinct.
    void add_g(int i, int j, int k);

    int factor_count() const { return int(factors_.size()); }
    int count_f() const;
    int count_g() const;

    /// Number of distinct labels; labels must form 1..n.
    int degree() const;
    /// Highest occurrence of any single label over all argument slots.
    int order() const;
    /// Occurrences per label, 1-based.
    std::vector<int> occurrences() const;

    /// Labels must be contiguous 1..n; throws otherwise.
    void validate() const;

    /// Canonical text form, factors sorted, repeats grouped: "f(1,1)*g(1,2)^2".
    std::string str() const;

    /// Lexicographically minimal factor multiset over all label
    /// permutations (degree <= 9). The representative identifies the orbit
    /// only, so its sign is always +1.
    InvariantCore relabeled_canonical() const;

    friend bool operator==(const InvariantCore& a, const InvariantCore& b) {
        return a.dim_ == b.dim_ && a.sign_ == b.sign_ && a.factors_ == b.factors_;
    }
    friend bool operator<(const InvariantCore& a, const InvariantCore& b) {
        return a.factors_ < b.factors_;
    }

private:
    friend InvariantCore parse_core(const std::string&, int);
    int dim_;
    int sign_ = 1;
    std::vector<GenFactor> factors_;  // kept sorted
};

/// Rational combination of cores; carries sums such as Hu's bracketed
/// expressions where a single product is not enough.
struct CoreSum {
    int dim = 2;
    std::vector<std::pair<Rational, InvariantCore>> terms;

    CoreSum() = default;
    CoreSum(const InvariantCore& core) : dim(core.dim()) { terms.emplace_back(Rational(1), core); }

    void add(const Rational& coeff, const InvariantCore& core) { terms.emplace_back(coeff, core); }
    std::string str() const;
};

/// Parse "f(1,2)*g(1,2)^2" (whitespace insignificant, labels positive
/// integers, g(i,j,k) in 3D).
InvariantCore parse_core(const std::string& text, int dim = 2);

/// Expand the factor product into coordinate monomials and replace each
/// point's monomial with its moment symbol. Exact in rational arithmetic.
MomentPolynomial translate(const InvariantCore& core);
MomentPolynomial translate(const CoreSum& sum);

/// (degree, order) of a core: distinct labels, highest label occurrence.
std::pair<int, int> degree_order(const InvariantCore& core);

/// Power k of the mu00 divisor that makes the translated invariant absolute:
/// Affine: k = n + #g (f factors rejected); Similarity: k = n + #f + #g.
int normalization_exponent(const InvariantCore& core, Group group);
int normalization_exponent(const CoreSum& sum, Group group);

}  // namespace gmi
