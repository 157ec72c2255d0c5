// K x (D+1) encoding matrix built by the alternating row/column identity
// fill. The construction recurses on a shrinking bottom-right region; the
// resulting identity blocks tile the whole matrix and are recoverable from
// the quotient chain without scanning.
#pragma once

#include <vector>

#include "aircode/bitmatrix.hpp"
#include "aircode/chain.hpp"

namespace aircode {

// I_{m x n} for n | m: m/n stacked copies of the n x n identity, read
// row-wise. The transpose (side-by-side copies) is what the column fills use.
BitMatrix stacked_identity(int m, int n);

enum class SubmatrixKind { IdentityTop, Even, Odd };

// One identity block of the tiling.
//   IdentityTop: (D+1) x (D+1) at the origin.
//   Even i: lambda_{2i} rows x beta_{2i}*lambda_{2i} cols, side-by-side
//           copies of I_{lambda_{2i}}, flush to the bottom edge.
//   Odd i:  beta_{2i+1}*lambda_{2i+1} rows x lambda_{2i+1} cols, stacked
//           copies of I_{lambda_{2i+1}}, flush to the right edge.
struct SubmatrixRef {
    SubmatrixKind kind = SubmatrixKind::IdentityTop;
    int index = 0;  // the i above; 0 for IdentityTop
    int row_offset = 0;
    int col_offset = 0;
    int height = 0;
    int width = 0;

    bool contains(int j, int k) const {
        return j >= row_offset && j < row_offset + height && k >= col_offset &&
               k < col_offset + width;
    }
};

// Block list derived from the chain alone (never by scanning the matrix).
// Even block 0 is absent when beta_0 = 0.
std::vector<SubmatrixRef> submatrix_refs(const LambdaChain& chain);

// Reduced local coordinates of a cell, by the four reduction rules:
//   identity-top:  (j, k)
//   even 0:        (j mod (D+1), k)
//   even i >= 1:   (j mod (K - lambda_{2i}), k mod (D+1 - lambda_{2i-1}))
//   odd i:         (j mod (K - lambda_{2i}), k mod (D+1 - lambda_{2i+1}))
// with modulus 0 acting as the identity. The reduced row is a residue of the
// in-block row modulo the identity size, which is what the closed-form
// distance formulas consume.
struct Located {
    SubmatrixRef block;
    int j_r = 0;
    int k_r = 0;
};

Located locate_in(const LambdaChain& chain, const std::vector<SubmatrixRef>& blocks, int j, int k);

// Whether the cell at reduced coordinates holds a 1, from the block shape
// alone (no matrix needed).
bool block_entry_is_one(const LambdaChain& chain, const Located& loc);

class AirMatrix {
  public:
    AirMatrix(LambdaChain chain, BitMatrix bits);

    int K() const { return chain_.params.K; }
    int D() const { return chain_.params.D; }
    const ProblemParams& params() const { return chain_.params; }
    const LambdaChain& chain() const { return chain_; }
    const IntervalLayout& layout() const { return layout_; }
    const std::vector<SubmatrixRef>& blocks() const { return blocks_; }
    const BitMatrix& bits() const { return bits_; }

    bool at(int j, int k) const { return bits_.get(j, k); }
    int column_weight(int k) const;
    Located locate(int j, int k) const { return locate_in(chain_, blocks_, j, k); }

  private:
    LambdaChain chain_;
    BitMatrix bits_;
    IntervalLayout layout_;
    std::vector<SubmatrixRef> blocks_;
    std::vector<int> col_weights_;
};

// Runs the alternating fill on an explicit (row, col, height, width) region.
AirMatrix build_air(int K, int D);

// Diagnostic: GF(2) rank of the D+1 cyclically consecutive rows starting at
// `start`. Full rank (D+1) on every window is the adjacent-rows property the
// construction is believed to satisfy; exposed for inspection, not asserted.
int adjacent_row_rank(const AirMatrix& m, int start);

}  // namespace aircode
