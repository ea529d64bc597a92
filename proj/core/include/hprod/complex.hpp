#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hprod/linalg.hpp"
#include "hprod/matrix.hpp"
#include "hprod/rng.hpp"

namespace hprod {

/// Sector dimension n = H + 2L, shared by both sectors.
struct ComplexShape {
    std::size_t n = 0;
    std::size_t H = 0;  ///< homological dimension per sector
    std::size_t L = 0;  ///< rank of each boundary block

    static ComplexShape from_hl(std::size_t H, std::size_t L) { return {H + 2 * L, H, L}; }

    /// H = floor(rho n), raised by one when n - H is odd so that n = H + 2L.
    static ComplexShape from_rho(std::size_t n, double rho);
};

enum class Sector { plus, minus };

/// A space C = C+ (+) C- with boundary operator and the involution
/// P = diag(I, -I). The + basis vectors come first.
///
/// The boundary is stored as a full square matrix so that arbitrary (possibly
/// invalid) operators can be represented and checked by `validate`.
class InvolutiveComplex {
public:
    InvolutiveComplex(Field field, std::size_t dim_plus, std::size_t dim_minus, Matrix boundary);

    /// Assembles [[0, plus_minus], [minus_plus, 0]].
    /// plus_minus maps C- to C+ (dim_plus x dim_minus), minus_plus maps C+ to C-.
    static InvolutiveComplex from_blocks(const Matrix& plus_minus, const Matrix& minus_plus);

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::size_t dim_plus() const { return dim_plus_; }
    [[nodiscard]] std::size_t dim_minus() const { return dim_minus_; }
    [[nodiscard]] std::size_t dim() const { return dim_plus_ + dim_minus_; }
    [[nodiscard]] const Matrix& boundary() const { return boundary_; }

    /// Block C- -> C+ (columns are Z-type generators of the extracted code).
    [[nodiscard]] Matrix plus_minus() const { return boundary_.block(0, dim_plus_, dim_plus_, dim_minus_); }
    /// Block C+ -> C- (rows are X-type generators).
    [[nodiscard]] Matrix minus_plus() const { return boundary_.block(dim_plus_, 0, dim_minus_, dim_plus_); }

    [[nodiscard]] Matrix involution() const { return Matrix::signature(field_, dim_plus_, dim_minus_); }
    /// (I + P)/2 and (I - P)/2.
    [[nodiscard]] Matrix projector(Sector s) const;

    /// Same complex with the roles of the sectors exchanged (involution -P).
    [[nodiscard]] InvolutiveComplex swapped() const { return from_blocks(minus_plus(), plus_minus()); }

    friend bool operator==(const InvolutiveComplex&, const InvolutiveComplex&) = default;

private:
    Field field_;
    std::size_t dim_plus_;
    std::size_t dim_minus_;
    Matrix boundary_;
};

/// delta_0 = [[0,0,0],[0,0,I],[0,0,0]] with block sizes H, L, L.
Matrix standard_block(const ComplexShape& shape, const Field& field);

/// The standard complex: both off-diagonal blocks equal delta_0.
InvolutiveComplex standard_boundary(const ComplexShape& shape, const Field& field);

struct RandomComplex {
    InvolutiveComplex complex;
    Matrix u_plus;
    Matrix u_minus;
};

/// Conjugate of the standard complex by diag(U+, U-).
RandomComplex conjugate_standard(const ComplexShape& shape, const Matrix& u_plus, const Matrix& u_minus);

/// Conjugate of the standard complex by independent uniform U+, U- in GL(n, D).
RandomComplex random_boundary(const ComplexShape& shape, const Field& field, Rng& rng);

/// Empty iff boundary^2 = 0, P^2 = I, boundary P + P boundary = 0 and the
/// diagonal blocks of the boundary vanish.
std::vector<std::string> validate(const InvolutiveComplex& c);

struct HomologyDims {
    std::size_t plus = 0;
    std::size_t minus = 0;
    friend bool operator==(const HomologyDims&, const HomologyDims&) = default;
};

/// Throws std::invalid_argument when the complex does not validate.
HomologyDims homology_dimension(const InvolutiveComplex& c);

/// True iff neither sector kernel contains a nonzero vector supported on the
/// last n - n_prime coordinates of its sector.
bool is_good(const InvolutiveComplex& c, std::size_t n_prime);

/// Header `D n H L` (n = dim C+, H = homology of C+, L = rank of the C- -> C+
/// block), followed by the two blocks in matrix text format.
void write_complex(std::ostream& out, const InvolutiveComplex& c);
InvolutiveComplex read_complex(std::istream& in);

}  // namespace hprod
