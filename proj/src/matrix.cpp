#include "aircode/matrix.hpp"

#include <stdexcept>
#include <string>

namespace aircode {

BitMatrix stacked_identity(int m, int n) {
    if (m <= 0 || n <= 0)
        throw std::invalid_argument("stacked identity needs positive dimensions");
    if (m % n != 0)
        throw std::invalid_argument("stacked identity needs n | m, got m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
    BitMatrix b(m, n);
    for (int r = 0; r < m; ++r)
        b.set(r, r % n);
    return b;
}

std::vector<SubmatrixRef> submatrix_refs(const LambdaChain& chain) {
    const int K = chain.params.K;
    const int D = chain.params.D;
    const int l = chain.l;
    std::vector<SubmatrixRef> blocks;
    blocks.push_back({SubmatrixKind::IdentityTop, 0, 0, 0, D + 1, D + 1});
    for (int i = 0; i <= l / 2; ++i) {
        if (chain.beta_at(2 * i) == 0)
            continue;  // only beta_0 can vanish; then even block 0 does not exist
        blocks.push_back({SubmatrixKind::Even, i,
                          K - chain.lambda_at(2 * i),
                          D + 1 - chain.lambda_at(2 * i - 1),
                          chain.lambda_at(2 * i),
                          chain.beta_at(2 * i) * chain.lambda_at(2 * i)});
    }
    for (int i = 0; i <= (l + 1) / 2 - 1; ++i) {
        blocks.push_back({SubmatrixKind::Odd, i,
                          K - chain.lambda_at(2 * i),
                          D + 1 - chain.lambda_at(2 * i + 1),
                          chain.beta_at(2 * i + 1) * chain.lambda_at(2 * i + 1),
                          chain.lambda_at(2 * i + 1)});
    }
    return blocks;
}

Located locate_in(const LambdaChain& chain, const std::vector<SubmatrixRef>& blocks, int j, int k) {
    const int K = chain.params.K;
    const int D = chain.params.D;
    if (j < 0 || j >= K || k < 0 || k > D)
        throw std::out_of_range("cell (" + std::to_string(j) + "," + std::to_string(k) +
                                ") outside " + std::to_string(K) + "x" + std::to_string(D + 1));
    for (const SubmatrixRef& b : blocks) {
        if (!b.contains(j, k))
            continue;
        Located loc{b, j, k};
        switch (b.kind) {
            case SubmatrixKind::IdentityTop:
                break;
            case SubmatrixKind::Even:
                if (b.index == 0) {
                    loc.j_r = j % (D + 1);
                } else {
                    loc.j_r = j % (K - chain.lambda_at(2 * b.index));
                    loc.k_r = mod_or_self(k, D + 1 - chain.lambda_at(2 * b.index - 1));
                }
                break;
            case SubmatrixKind::Odd:
                loc.j_r = j % (K - chain.lambda_at(2 * b.index));
                loc.k_r = mod_or_self(k, D + 1 - chain.lambda_at(2 * b.index + 1));
                break;
        }
        return loc;
    }
    throw std::logic_error("submatrix tiling gap at (" + std::to_string(j) + "," +
                           std::to_string(k) + ")");
}

bool block_entry_is_one(const LambdaChain& chain, const Located& loc) {
    switch (loc.block.kind) {
        case SubmatrixKind::IdentityTop:
            return loc.j_r == loc.k_r;
        case SubmatrixKind::Even:
            return loc.k_r % chain.lambda_at(2 * loc.block.index) == loc.j_r;
        case SubmatrixKind::Odd:
            return loc.j_r % chain.lambda_at(2 * loc.block.index + 1) == loc.k_r;
    }
    return false;
}

AirMatrix::AirMatrix(LambdaChain chain, BitMatrix bits)
    : chain_(std::move(chain)), bits_(std::move(bits)) {
    layout_ = interval_layout(chain_);
    blocks_ = submatrix_refs(chain_);
    const int K = chain_.params.K;
    const int D = chain_.params.D;
    col_weights_.assign(D + 1, 0);
    for (int k = 0; k <= D; ++k)
        col_weights_[k] = bits_.col_weight(k);

    for (int j = 0; j <= D; ++j)
        if (bits_.row_weight(j) != 1 || !bits_.get(j, j))
            throw std::logic_error("rows [0:D] must form the identity");
    for (int j = 0; j < K; ++j)
        if (bits_.row_weight(j) == 0)
            throw std::logic_error("zero row " + std::to_string(j));
    for (int k = 0; k <= D; ++k)
        if (col_weights_[k] < 2)
            throw std::logic_error("column " + std::to_string(k) + " has weight < 2");
}

int AirMatrix::column_weight(int k) const {
    if (k < 0 || k > D())
        throw std::out_of_range("column index " + std::to_string(k));
    return col_weights_[k];
}

AirMatrix build_air(int K, int D) {
    LambdaChain chain = compute_chain(K, D);
    BitMatrix bits(K, D + 1);
    int row0 = 0, col0 = 0, h = K, w = D + 1;
    for (;;) {
        // Row step: stack h/w copies of I_w, leave h mod w rows.
        int q = h / w, r = h % w;
        for (int i = 0; i < q * w; ++i)
            bits.set(row0 + i, col0 + i % w);
        if (r == 0)
            break;
        row0 += q * w;
        h = r;
        // Column step: w/h side-by-side copies of I_h, leave w mod h columns.
        int q2 = w / h, r2 = w % h;
        for (int j = 0; j < q2 * h; ++j)
            bits.set(row0 + j % h, col0 + j);
        if (r2 == 0)
            break;
        col0 += q2 * h;
        w = r2;
    }
    return AirMatrix(std::move(chain), std::move(bits));
}

int adjacent_row_rank(const AirMatrix& m, int start) {
    const int K = m.K();
    const int D = m.D();
    if (start < 0 || start >= K)
        throw std::out_of_range("window start " + std::to_string(start));
    const int words = m.bits().words_per_row();
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<std::size_t>(D + 1) * words);
    for (int i = 0; i <= D; ++i) {
        const std::uint64_t* w = m.bits().row_words((start + i) % K);
        rows.insert(rows.end(), w, w + words);
    }
    int rank = 0;
    for (int c = 0; c <= D && rank <= D; ++c) {
        int piv = -1;
        for (int r = rank; r <= D; ++r)
            if ((rows[static_cast<std::size_t>(r) * words + (c >> 6)] >> (c & 63)) & 1u) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        for (int t = 0; t < words; ++t)
            std::swap(rows[static_cast<std::size_t>(piv) * words + t],
                      rows[static_cast<std::size_t>(rank) * words + t]);
        for (int r = 0; r <= D; ++r) {
            if (r == rank)
                continue;
            if ((rows[static_cast<std::size_t>(r) * words + (c >> 6)] >> (c & 63)) & 1u)
                for (int t = 0; t < words; ++t)
                    rows[static_cast<std::size_t>(r) * words + t] ^=
                        rows[static_cast<std::size_t>(rank) * words + t];
        }
        ++rank;
    }
    return rank;
}

}  // namespace aircode
