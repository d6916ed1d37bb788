#pragma once

#include "cellsync/matrix.hpp"
#include "cellsync/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellsync {

class SpectrumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// det(λI - m), via Faddeev–LeVerrier.
Polynomial char_poly(const Matrix& m);

/// One irreducible factor of the characteristic polynomial over Q.
struct EigenClass {
    Polynomial factor;                 // monic
    int algebraic_multiplicity = 0;
    std::vector<int> block_sizes;      // non-increasing
    bool is_valency = false;
    bool certified = true;             // false: factor may still split over Q

    std::optional<Rational> root() const;
    int largest_block() const { return block_sizes.empty() ? 0 : block_sizes.front(); }
    std::string label() const;
};

struct Spectrum {
    Polynomial characteristic;
    std::vector<EigenClass> classes;       // valency class last
    // powers[c][j-1] = p_c(A)^j for j = 1 .. largest block of class c
    std::vector<std::vector<Matrix>> powers;
    std::vector<std::string> warnings;

    bool all_linear() const;
    std::size_t valency_class() const;
};

Spectrum analyze_spectrum(const Matrix& m, std::int64_t valency);
std::vector<EigenClass> eigen_classes(const Matrix& m, std::int64_t valency);

/// Smallest j >= 0 with p(m)^j v = 0; throws if v is not in the generalized eigenspace.
int chain_height(const Matrix& m, const Polynomial& p, const Vector& v);

/// Non-increasing partition conjugate to `parts`.
std::vector<int> conjugate_partition(const std::vector<int>& parts);

} // namespace cellsync
