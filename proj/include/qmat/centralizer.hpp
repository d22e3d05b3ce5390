#pragma once

#include <string>
#include <vector>

#include "qmat/linalg.hpp"
#include "qmat/ring.hpp"

namespace qmat {

/// A monomial of the associated graded ring of the x_{1,1}-filtration:
/// y^d * tail, where y is the image of x_{1,1} and the tail avoids x_{1,1}.
/// weight caches c(m), the total exponent of first-row/first-column
/// generators in the tail; gr(ad sigma_1) scales by (1 - q^{-c(m)}).
struct GrMonomial {
    int d;
    PBWMonomial tail;
    int weight;

    GrMonomial(int d_, PBWMonomial tail_);
};

/// Image of a gr-basis monomial under gr(ad sigma_1): the scalar
/// (1 - q^{-c(m)}) and the monomial with d incremented. Zero iff c(m) = 0.
struct GrImage {
    QScalar scale;
    GrMonomial mono;
};
GrImage gr_ad_sigma1(const Ring& ring, const GrMonomial& m);

/// Checks the diagonality of gr(ad sigma_1) against the full engine: the
/// commutator [sigma_1, x_{1,1}^d m], with every term of x_{1,1}-exponent
/// <= d discarded, must equal the predicted scaled monomial. The tail m must
/// not contain x_{1,1}.
bool gr_consistency_check(const Ring& ring, int d, const PBWMonomial& tail);

/// Exact matrix of ad sigma_1 from the degree-d slice to the degree-(d+1)
/// slice, with rows/columns indexed by the canonical slice enumeration.
struct SliceMatrix {
    int n, d;
    std::vector<PBWMonomial> domain;   // degree d, canonical order
    std::vector<PBWMonomial> codomain; // degree d+1, canonical order
    QMatrix mat;
};

/// threads > 1 parallelizes the per-column commutators; the result is
/// independent of the thread count.
SliceMatrix build_slice_matrix(const Ring& ring, int d, int threads = 1);

/// Exact basis of ker(ad sigma_1) on the degree-d slice, as elements.
std::vector<NormalElement> kernel_basis(const Ring& ring, const SliceMatrix& sm);

/// Number of partitions of d into parts <= n, by dynamic programming. This
/// is the expected kernel dimension per degree slice.
long long count_partitions_max_part(int d, int n);

struct CentralizerReport {
    int n = 0;
    int d = 0;
    int slice_dim = 0;
    int kernel_dim = 0;
    long long partition_count = 0;
    int sigma_rank = 0;
    bool pass = false;
    std::string failed_check; // names the first violated check; empty if pass
};

/// Verifies, on the degree-d slice, that (a) dim ker(ad sigma_1) equals the
/// partition count, (b) every sigma-monomial of degree d commutes with
/// sigma_1, and (c) the sigma-monomials span the kernel (exact rank check).
CentralizerReport verify_centralizer_theorem(const Ring& ring, int d, int threads = 1);

} // namespace qmat
