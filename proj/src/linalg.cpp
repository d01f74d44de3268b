#include "nsym/linalg.hpp"

namespace nsym {

template <class F>
std::vector<std::size_t> Matrix<F>::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && is_zero(at(p, c))) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(at(p, k), at(r, k));
        F iv = inv_of(at(r, c));
        for (std::size_t k = c; k < cols_; ++k) at(r, k) = F(at(r, k) * iv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || is_zero(at(i, c))) continue;
            F f = at(i, c);
            for (std::size_t k = c; k < cols_; ++k)
                at(i, k) = F(at(i, k) - f * at(r, k));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::vector<std::vector<F>> Matrix<F>::nullspace() const {
    Matrix<F> m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (std::size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> v(cols_, F(0));
        v[fc] = F(1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = F(F(0) - m.at(pr, fc));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
bool in_rowspace(const Matrix<F>& rref_mat,
                 const std::vector<std::size_t>& pivots, std::vector<F> v) {
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
        const F& coef = v[pivots[pr]];
        if (Matrix<F>::is_zero(coef)) continue;
        for (std::size_t c = 0; c < rref_mat.cols(); ++c)
            v[c] = F(v[c] - coef * rref_mat.at(pr, c));
    }
    for (const auto& x : v)
        if (!Matrix<F>::is_zero(x)) return false;
    return true;
}

template class Matrix<Rat>;
template class Matrix<GQ>;
template bool in_rowspace<Rat>(const Matrix<Rat>&,
                               const std::vector<std::size_t>&,
                               std::vector<Rat>);
template bool in_rowspace<GQ>(const Matrix<GQ>&,
                              const std::vector<std::size_t>&, std::vector<GQ>);

}  // namespace nsym
