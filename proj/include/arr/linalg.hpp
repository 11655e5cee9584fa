#ifndef ARR_LINALG_HPP
#define ARR_LINALG_HPP

#include <vector>

#include "rational.hpp"

namespace arr {

/// Dense exact matrix, row major.
template <class K>
using Mat = std::vector<std::vector<K>>;

/// In-place reduced row echelon form.  Returns the pivot column of each
/// nonzero row, in order.
template <class K>
std::vector<int> rref(Mat<K>& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = (int)a.size();
    const int cols = (int)a[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        K inv = a[r][c].inv();
        for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            K f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return pivots;
}

template <class K>
int rank(Mat<K> a) {
    return (int)rref(a).size();
}

/// Basis of the right null space of a (vectors v with a v = 0).
template <class K>
std::vector<std::vector<K>> nullspace(Mat<K> a) {
    if (a.empty()) return {};
    const int cols = (int)a[0].size();
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<K> v(cols, K());
        v[c] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Does the row vector v lie in the row span of the (already RREF'd) rows?
template <class K>
bool in_row_span_rref(const Mat<K>& rr, const std::vector<int>& pivots, std::vector<K> v) {
    for (size_t r = 0; r < pivots.size(); ++r) {
        const K& f = v[pivots[r]];
        if (f.is_zero()) continue;
        K ff = f;
        for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - ff * rr[r][j];
    }
    for (const K& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace arr

#endif
