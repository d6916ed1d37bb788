#include "cellsync/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cellsync {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Rational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const
{
    if (!m.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
    Matrix acc(m.rows(), m.cols());
    const Matrix id = Matrix::identity(m.rows());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it * id;
    return acc;
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x *= inv;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string(std::string_view var) const
{
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        Rational c = coeffs_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        if (k == 0 || c != 1) {
            if (c.get_den() != 1 && k > 0)
                out << '(' << c.get_str() << ')';
            else
                out << c.get_str();
        }
        if (k >= 1) out << var;
        if (k >= 2) out << '^' << k;
    }
    return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const auto& d = b.coefficients();
    if (rem.size() < d.size()) return {Polynomial(), a};
    std::vector<Rational> q(rem.size() - d.size() + 1);
    const Rational lead_inv = 1 / d.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational f = rem[k + d.size() - 1] * lead_inv;
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
    }
    rem.resize(d.size() - 1);
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p)
{
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() < 1) return out;
    Polynomial f = p.monic();
    Polynomial a = gcd(f, f.derivative());
    Polynomial b = divmod(f, a).first;
    Polynomial c = divmod(f.derivative(), a).first;
    Polynomial d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        Polynomial nb = divmod(b, g).first;
        c = divmod(d, g).first;
        b = std::move(nb);
        d = c - b.derivative();
    }
    return out;
}

int multiplicity(const Polynomial& factor, Polynomial p)
{
    if (factor.degree() < 1) throw std::invalid_argument("multiplicity of a constant factor");
    if (p.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
    int k = 0;
    while (true) {
        auto [q, r] = divmod(p, factor);
        if (!r.is_zero()) return k;
        p = std::move(q);
        ++k;
    }
}

namespace {

std::vector<Integer> divisors_up_to(const Integer& n, const Integer& limit)
{
    std::vector<Integer> out;
    for (Integer d = 1; d <= limit && d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

} // namespace

std::vector<Rational> rational_roots(const Polynomial& p)
{
    if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    std::vector<Rational> roots;
    // clear denominators
    Integer l = 1;
    for (const auto& c : p.coefficients()) l = lcm(l, Integer(c.get_den()));
    std::vector<Integer> a;
    for (const auto& c : p.coefficients()) a.push_back(Integer(c * l));
    std::size_t shift = 0;
    while (shift < a.size() && a[shift] == 0) ++shift;
    if (shift > 0) roots.emplace_back(0);
    a.erase(a.begin(), a.begin() + static_cast<long>(shift));
    if (a.size() <= 1) return roots;

    const Integer lead = abs(a.back()), tail = abs(a.front());
    // Cauchy bound on |root|
    Integer big = 0;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) big = std::max(big, Integer(abs(a[k])));
    Integer bound = big / lead + 2;
    Polynomial reduced(std::vector<Rational>(a.begin(), a.end()));
    for (const auto& q : divisors_up_to(lead, lead)) {
        Integer limit = bound * q;
        if (limit > 20000000) throw std::length_error("rational root search space too large");
        for (const auto& num : divisors_up_to(tail, limit)) {
            for (int sign : {-1, 1}) {
                Rational x(Integer(sign * num), q);
                x.canonicalize();
                if (x.get_den() != q) continue;   // already covered by a smaller q
                if (reduced(x) == 0) roots.push_back(x);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace cellsync
