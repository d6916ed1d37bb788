#pragma once

#include "cellsync/matrix.hpp"
#include "cellsync/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cellsync {

/// Univariate polynomial over Q. Coefficients are stored lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// x - root
    static Polynomial linear(const Rational& root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t k) const;
    Rational leading() const;

    Rational operator()(const Rational& x) const;
    Matrix evaluate(const Matrix& m) const;

    Polynomial monic() const;
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string(std::string_view var = "λ") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd, zero if both are zero.
Polynomial gcd(Polynomial a, Polynomial b);

/// Yun's algorithm. Returns (s_i, i) with p = c * prod s_i^i, each s_i monic and squarefree.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

/// Largest k with factor^k | p (p nonzero, factor nonconstant).
int multiplicity(const Polynomial& factor, Polynomial p);

/// Rational roots of a polynomial with rational coefficients (rational-root theorem).
std::vector<Rational> rational_roots(const Polynomial& p);

} // namespace cellsync
