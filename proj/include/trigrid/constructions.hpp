#pragma once

#include "trigrid/core.hpp"
#include "trigrid/geometric.hpp"

namespace trigrid {

/// The full 2 x 2 grid; the only nonempty diagram with n = 2.
CombinatorialTGD example_n2();
/// All cells off the main diagonal of the 3 x 3 grid.
CombinatorialTGD example_n3();

/// Cells (i, i) and (i, i + 1 mod n); b = n. Throws InvalidParameter for n < 2.
CombinatorialTGD staircase(int n);

/// k (odd) disjoint K4 blocks on the 2k grid: block t is the square
/// {t, t + k} x {t, t + k}. Each block uses its own two columns, rows and
/// diagonals, so Gamma is k copies of K4. Throws InvalidParameter for even
/// or non-positive k.
CombinatorialTGD squares_antidiagonal(int k);

/// 5 x 5 grid diagram of a trefoil.
GridDiagram trefoil_grid();
/// Two interleaved 2 x 2-spaced squares on a 4 x 4 grid: a Hopf link.
GridDiagram hopf_grid();

/// The grid plus a copy displaced northwest by an amount smaller than any
/// coordinate gap, each point diagonally paired with its copy. Column line i
/// sits at (4i+1)/(4n) + i*eps, row line j at (4j+1)/(4n) + j*eps^2, with
/// eps = 1/(64 n^3) and displacement eps^3, so all diagonal sums other than
/// point/copy pairs are distinct.
GeometricTGD pushoff(const GridDiagram& g);

}  // namespace trigrid
