#ifndef ARR_ROOTSYS_HPP
#define ARR_ROOTSYS_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace arr {

enum class RootType { A, B2, D };

inline std::string root_type_name(RootType t, int rank) {
    switch (t) {
        case RootType::A: return "A" + std::to_string(rank);
        case RootType::B2: return "B2";
        case RootType::D: return "D" + std::to_string(rank);
    }
    return "?";
}

/// Positive roots of a crystallographic root system, stored as integer
/// coefficient vectors in an essential coordinate system of dimension rank:
///   A_l : simple-root coordinates u_i = x_i - x_{i+1}; the root x_i - x_j is
///         u_i + ... + u_{j-1}
///   B_2 : the plane (x, y) with roots x, y, x-y, x+y
///   D_l : standard coordinates with roots x_i - x_j and x_i + x_j, i < j
struct RootSystem {
    RootType type;
    int rank;
    std::vector<std::vector<int>> roots; // positive roots, canonical order
    std::vector<int> heights;            // sum of simple-root coefficients
    int coxeter_number;
    std::vector<int> exponents;          // Weyl exponents d_1 <= ... <= d_rank

    int count() const { return (int)roots.size(); }

    int highest_root_index() const {
        int best = 0;
        for (int i = 1; i < count(); ++i)
            if (heights[i] > heights[best]) best = i;
        return best;
    }
};

inline RootSystem positive_roots(RootType type, int rank) {
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    switch (type) {
        case RootType::A: {
            if (rank < 1) throw error("positive_roots: A rank must be >= 1");
            // root (i, j), 1 <= i < j <= rank+1, is u_i + ... + u_{j-1}
            for (int i = 0; i < rank; ++i) {
                for (int j = i + 1; j <= rank; ++j) {
                    std::vector<int> v(rank, 0);
                    for (int k = i; k < j; ++k) v[k] = 1;
                    rs.roots.push_back(std::move(v));
                    rs.heights.push_back(j - i);
                }
            }
            rs.coxeter_number = rank + 1;
            rs.exponents.resize(rank);
            std::iota(rs.exponents.begin(), rs.exponents.end(), 1);
            break;
        }
        case RootType::B2: {
            if (rank != 2) throw error("positive_roots: B2 has rank 2");
            rs.rank = 2;
            rs.roots = {{1, 0}, {0, 1}, {1, -1}, {1, 1}};
            // simple roots: x - y and y; so x = (x-y) + y, x + y = (x-y) + 2y
            rs.heights = {2, 1, 1, 3};
            rs.coxeter_number = 4;
            rs.exponents = {1, 3};
            break;
        }
        case RootType::D: {
            if (rank < 2) throw error("positive_roots: D rank must be >= 2");
            for (int i = 0; i < rank; ++i) {
                for (int j = i + 1; j < rank; ++j) {
                    std::vector<int> v(rank, 0);
                    v[i] = 1;
                    v[j] = -1;
                    rs.roots.push_back(v);
                    rs.heights.push_back(j - i);
                    v[j] = 1;
                    rs.roots.push_back(v);
                    rs.heights.push_back(2 * rank - i - j - 2);
                }
            }
            rs.coxeter_number = 2 * rank - 2;
            for (int i = 1; i <= rank - 1; ++i) rs.exponents.push_back(2 * i - 1);
            rs.exponents.push_back(rank - 1);
            std::sort(rs.exponents.begin(), rs.exponents.end());
            break;
        }
    }
    return rs;
}

inline RootSystem parse_root_type(const std::string& s) {
    if (s == "B2" || s == "b2") return positive_roots(RootType::B2, 2);
    if ((s[0] == 'A' || s[0] == 'a') && s.size() > 1) return positive_roots(RootType::A, std::stoi(s.substr(1)));
    if ((s[0] == 'D' || s[0] == 'd') && s.size() > 1) return positive_roots(RootType::D, std::stoi(s.substr(1)));
    throw parse_error("unsupported root system '" + s + "'");
}

/// Root indices sorted by non-increasing height; ties broken by decreasing
/// lexicographic order on the coefficient vectors.  The height order is what
/// the deletion chains need; the tie rule just pins determinism.
inline std::vector<int> roots_by_height_desc(const RootSystem& rs) {
    std::vector<int> idx(rs.count());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (rs.heights[a] != rs.heights[b]) return rs.heights[a] > rs.heights[b];
        return rs.roots[a] > rs.roots[b];
    });
    return idx;
}

} // namespace arr

#endif
