#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hprod/complex.hpp"

namespace hprod {

/// Tensor product (C1 (x) C2, d1 (x) I + P1 (x) d2, P1 (x) P2).
///
/// Basis order: pairs (i, j) with i indexing C1 and j indexing C2, row-major,
/// then stably partitioned so that all + elements precede all - elements.
/// C+ is therefore C1+ (x) C2+ followed by C1- (x) C2-, so a vector of C+
/// reads as two matrices (psi+, psi-) with rows indexed by C1.
class ProductComplex {
public:
    ProductComplex(InvolutiveComplex first, InvolutiveComplex second);

    [[nodiscard]] const InvolutiveComplex& first() const { return first_; }
    [[nodiscard]] const InvolutiveComplex& second() const { return second_; }
    [[nodiscard]] const InvolutiveComplex& complex() const { return product_; }

    /// Position of pair (i, j) in the product basis.
    [[nodiscard]] std::size_t index_of(std::size_t i, std::size_t j) const { return position_[i * second_.dim() + j]; }
    /// Pair (i, j) at a product basis position.
    [[nodiscard]] std::pair<std::size_t, std::size_t> pair_at(std::size_t pos) const;

    /// Splits a C+ vector into its (psi+, psi-) blocks.
    [[nodiscard]] std::pair<Matrix, Matrix> split_plus(const Vector& v) const;
    [[nodiscard]] Vector join_plus(const Matrix& psi_plus, const Matrix& psi_minus) const;

private:
    InvolutiveComplex first_;
    InvolutiveComplex second_;
    std::vector<std::size_t> position_;  // row-major pair index -> product basis index
    std::vector<std::size_t> pair_of_;   // product basis index -> row-major pair index
    InvolutiveComplex product_;
};

/// Throws std::invalid_argument on field mismatch or an invalid factor.
ProductComplex product(const InvolutiveComplex& c1, const InvolutiveComplex& c2);

/// Basis of ker(boundary) within C+.
std::vector<Vector> cycle_space_plus(const ProductComplex& p);

struct KunnethReport {
    HomologyDims factor1;
    HomologyDims factor2;
    std::size_t cycles_plus = 0;       ///< dim(ker d  within C+)
    std::size_t boundaries_plus = 0;   ///< dim(im d within C+)
    std::size_t homology_plus = 0;
    std::size_t cohomology_plus = 0;   ///< via the transposed blocks
    std::size_t homology_minus = 0;
    std::size_t expected_plus = 0;     ///< h1+ h2+ + h1- h2-
    std::size_t expected_minus = 0;    ///< h1+ h2- + h1- h2+
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Compares product homology against the factor homologies, exactly.
KunnethReport kunneth_check(const ProductComplex& p);

}  // namespace hprod
