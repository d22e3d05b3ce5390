#pragma once

#include <vector>

#include "qmat/ring.hpp"

namespace qmat {

/// A strictly increasing sequence of row (or column) indices in 1..n.
class IndexSet {
public:
    IndexSet(std::vector<int> idx, int n);

    size_t size() const { return idx_.size(); }
    int operator[](size_t k) const { return idx_[k]; }
    const std::vector<int>& indices() const { return idx_; }

    /// All subsets of {1..n} of size t, in lexicographic order.
    static std::vector<IndexSet> all(int n, int t);

private:
    std::vector<int> idx_;
};

/// A permutation of {1..t} with its Coxeter length (= inversion count).
struct Permutation {
    std::vector<int> images; // images[k] = s(k+1), 1-based values
    int length;

    static std::vector<Permutation> all(int t);
};

/// Quantum minor [I|J] = sum over S_t of (-q)^{l(s)} x_{i_1,j_{s(1)}} ... x_{i_t,j_{s(t)}}.
/// Rows are strictly increasing, so every summand is already PBW-ordered.
NormalElement quantum_minor(const Ring& ring, const IndexSet& rows, const IndexSet& cols);

/// det_q = [1..n | 1..n].
NormalElement quantum_det(const Ring& ring);

/// sigma_i: the sum of all principal i-by-i quantum minors. sigma_1 is the
/// quantum trace, sigma_n is det_q.
NormalElement sigma(const Ring& ring, int i);

/// Partitions of d with all parts <= max_part, each sorted descending,
/// listed smallest-part-profile first ((1,1,...,1) first, (d) last).
std::vector<std::vector<int>> partitions_with_max_part(int d, int max_part);

/// The products prod_i sigma_i^{e_i} over all partitions of d with parts <= n,
/// in the partition order above. List length = p_{<=n}(d).
std::vector<NormalElement> sigma_monomials(const Ring& ring, int d);

} // namespace qmat
