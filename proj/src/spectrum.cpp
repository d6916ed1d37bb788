#include "cellsync/spectrum.hpp"

#include <algorithm>
#include <tuple>

namespace cellsync {

Polynomial char_poly(const Matrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    const Matrix id = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + c[n - k + 1] * id;
        c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(c));
}

std::optional<Rational> EigenClass::root() const
{
    if (factor.degree() != 1) return std::nullopt;
    return -factor.coefficient(0) / factor.coefficient(1);
}

std::string EigenClass::label() const
{
    if (auto r = root()) return "λ=" + r->get_str();
    return factor.to_string();
}

bool Spectrum::all_linear() const
{
    return std::all_of(classes.begin(), classes.end(), [](const EigenClass& c) { return c.factor.degree() == 1; });
}

std::size_t Spectrum::valency_class() const
{
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].is_valency) return i;
    throw SpectrumError("no valency class");
}

std::vector<int> conjugate_partition(const std::vector<int>& parts)
{
    std::vector<int> out;
    const int top = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
    for (int j = 1; j <= top; ++j)
        out.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [j](int p) { return p >= j; })));
    return out;
}

namespace {

struct Raw {
    EigenClass cls;
    std::vector<Matrix> powers;
};

Raw jordan_data(const Matrix& m, Polynomial factor, int mult, bool certified)
{
    Raw raw;
    raw.cls.factor = std::move(factor);
    raw.cls.algebraic_multiplicity = mult;
    raw.cls.certified = certified;
    const int deg = raw.cls.factor.degree();
    const std::size_t n = m.rows();
    const Matrix p = raw.cls.factor.evaluate(m);
    std::vector<int> at_least;   // blocks of size >= j
    Matrix power = Matrix::identity(n);
    std::size_t prev = 0;
    const std::size_t full = static_cast<std::size_t>(mult * deg);
    while (prev < full) {
        power = power * p;
        raw.powers.push_back(power);
        const std::size_t dj = n - rank(power);
        if (dj == prev) throw SpectrumError("kernel sequence stalled for " + raw.cls.factor.to_string());
        if ((dj - prev) % static_cast<std::size_t>(deg) != 0) {
            // only possible when the factor splits further
            if (certified)
                throw SpectrumError("kernel growth not divisible by factor degree for " + raw.cls.factor.to_string());
            raw.cls.block_sizes.clear();
            return raw;
        }
        at_least.push_back(static_cast<int>((dj - prev) / deg));
        prev = dj;
    }
    raw.cls.block_sizes = conjugate_partition(at_least);
    return raw;
}

} // namespace

Spectrum analyze_spectrum(const Matrix& m, std::int64_t valency)
{
    if (!m.is_square()) throw std::invalid_argument("spectrum of a non-square matrix");
    Spectrum spec;
    spec.characteristic = char_poly(m);
    const Rational v{static_cast<long>(valency)};
    if (spec.characteristic(v) != 0) throw SpectrumError("valency " + v.get_str() + " is not an eigenvalue");

    std::vector<Raw> raws;
    Polynomial residual = spec.characteristic;
    for (const auto& r : rational_roots(spec.characteristic)) {
        Polynomial lin = Polynomial::linear(r);
        const int k = multiplicity(lin, residual);
        for (int i = 0; i < k; ++i) residual = divmod(residual, lin).first;
        raws.push_back(jordan_data(m, lin, k, true));
        raws.back().cls.is_valency = (r == v);
    }
    for (auto& [factor, k] : squarefree_decomposition(residual)) {
        raws.push_back(jordan_data(m, factor, k, false));
        spec.warnings.push_back("irreducibility of factor " + factor.to_string() + " is not certified");
    }

    std::stable_sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) {
        const auto& x = a.cls;
        const auto& y = b.cls;
        if (x.is_valency != y.is_valency) return y.is_valency;
        auto key = [](const EigenClass& c) {
            return std::make_tuple(-c.algebraic_multiplicity, -c.largest_block(), c.factor.degree());
        };
        if (key(x) != key(y)) return key(x) < key(y);
        auto rx = x.root(), ry = y.root();
        if (rx && ry) return *rx < *ry;
        return x.factor.coefficients() < y.factor.coefficients();
    });
    for (auto& raw : raws) {
        if (raw.cls.is_valency && raw.cls.algebraic_multiplicity > 1)
            spec.warnings.push_back("valency eigenvalue has multiplicity " +
                                    std::to_string(raw.cls.algebraic_multiplicity) +
                                    " (network not connected); the whole class is treated as the valency slot");
        spec.classes.push_back(std::move(raw.cls));
        spec.powers.push_back(std::move(raw.powers));
    }
    return spec;
}

std::vector<EigenClass> eigen_classes(const Matrix& m, std::int64_t valency)
{
    return analyze_spectrum(m, valency).classes;
}

int chain_height(const Matrix& m, const Polynomial& p, const Vector& v)
{
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
        throw std::invalid_argument("chain height of the zero vector");
    const Matrix pm = p.evaluate(m);
    Vector w = v;
    for (std::size_t j = 1; j <= m.rows(); ++j) {
        w = pm.apply(w);
        if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; })) return static_cast<int>(j);
    }
    throw SpectrumError("vector is not in the generalized eigenspace of " + p.to_string());
}

} // namespace cellsync
