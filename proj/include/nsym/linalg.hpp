#pragma once

#include "nsym/rational.hpp"

#include <vector>

namespace nsym {

/// Dense exact-arithmetic matrix over a field (Rat or GQ), with reduced
/// row echelon form and nullspace extraction. Pivoting follows the fixed
/// column order, so bases are deterministic.
template <class F>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const F& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    static bool is_zero(const Rat& v) { return sgn(v) == 0; }
    static bool is_zero(const GQ& v) { return v.is_zero(); }
    static Rat inv_of(const Rat& v) { return Rat(Rat(1) / v); }
    static GQ inv_of(const GQ& v) { return v.inv(); }

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref();

    /// Basis of the right nullspace, one vector per free column.
    std::vector<std::vector<F>> nullspace() const;

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;
};

using MatQ = Matrix<Rat>;
using MatGQ = Matrix<GQ>;

/// Reduces v against the rref rows (pivots as returned by rref); true when
/// v lies in the row space.
template <class F>
bool in_rowspace(const Matrix<F>& rref_mat,
                 const std::vector<std::size_t>& pivots, std::vector<F> v);

}  // namespace nsym
