#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qmat/qscalar.hpp"

namespace qmat {

/// Sparse exact matrix over Q(q). Elimination is fraction-free: rows are
/// cleared to Z[q] entries and updated by cross-multiplication, with the
/// content stripped after every update; division happens only at pivot
/// normalization during back-substitution. Pivot columns are the canonical
/// (leftmost) ones, so rank, kernel and solutions are deterministic.
class QMatrix {
public:
    QMatrix(int rows, int cols);

    int rows() const { return nrows_; }
    int cols() const { return ncols_; }

    void add(int r, int c, const QScalar& v);
    QScalar at(int r, int c) const;

    int rank() const;

    /// Canonical kernel basis: one vector per free column (ascending), with
    /// that free coordinate equal to 1 and all other free coordinates 0 --
    /// the reduced-echelon kernel basis.
    std::vector<std::vector<QScalar>> kernel_basis() const;

    /// Exact solution of M x = rhs with all free coordinates set to 0;
    /// nullopt when the system is inconsistent.
    std::optional<std::vector<QScalar>> solve(const std::vector<QScalar>& rhs) const;

private:
    int nrows_, ncols_;
    std::vector<std::map<int, QScalar>> rows_;

    struct Echelon; // forward elimination result
    Echelon eliminate(const std::vector<QScalar>* rhs) const;
};

} // namespace qmat
