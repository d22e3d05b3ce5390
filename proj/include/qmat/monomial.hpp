#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qmat/error.hpp"

namespace qmat {

/// Generators x_{i,j} are numbered row-major: gen_id(i,j) = (i-1)*n + (j-1).
/// The reading order of PBW words is ascending gen_id, i.e. lexicographic
/// on (i,j): x_{1,1}, x_{1,2}, ..., x_{n,n}.
inline int gen_id(int n, int i, int j) { return (i - 1) * n + (j - 1); }
inline int gen_row(int n, int g) { return g / n + 1; }
inline int gen_col(int n, int g) { return g % n + 1; }

/// An ordered monomial in the generators of O_q(M_n): sparse exponent map,
/// entries (gen_id, exponent) sorted by gen_id with all exponents positive.
/// The empty monomial is the ring unit.
class PBWMonomial {
public:
    explicit PBWMonomial(int n) : n_(n) {
        if (n < 1) throw error("matrix size must be positive");
    }
    static PBWMonomial generator(int n, int i, int j);

    int n() const { return n_; }
    bool is_unit() const { return exps_.empty(); }
    int degree() const;
    int exponent(int gid) const;
    int exponent(int i, int j) const { return exponent(gen_id(n_, i, j)); }
    const std::vector<std::pair<int, int>>& factors() const { return exps_; }

    /// Smallest generator id in reading order; monomial must not be the unit.
    int lead() const;
    PBWMonomial with_exponent_bumped(int gid, int delta) const;
    /// Removes one factor of the leading generator.
    PBWMonomial without_lead() const;

    /// Generators with multiplicity, in reading order.
    std::vector<int> word() const;

    /// Exponent of x_{1,1}: the filtration degree of Section "x11 filtration".
    int x11_exponent() const { return exponent(0); }
    /// c(m): total exponent of the x_{1,j} and x_{i,1} with i,j >= 2.
    int corner_weight() const;

    /// Number of factors lying in each row / column (1-based, size n).
    std::vector<int> row_content() const;
    std::vector<int> col_content() const;

    /// Canonical order: total degree first, then the dense exponent vector
    /// lexicographically (so x[1,1]^d is the largest monomial of its degree).
    std::strong_ordering operator<=>(const PBWMonomial& o) const;
    bool operator==(const PBWMonomial& o) const { return n_ == o.n_ && exps_ == o.exps_; }

    /// "x[1,1]^2*x[1,2]"; "1" for the unit.
    std::string str() const;

private:
    int n_;
    std::vector<std::pair<int, int>> exps_;
};

} // namespace qmat
