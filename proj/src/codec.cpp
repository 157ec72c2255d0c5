#include "aircode/codec.hpp"

#include <algorithm>
#include <stdexcept>

#include "aircode/instance.hpp"

namespace aircode {

const char* to_string(DecodeCase c) {
    switch (c) {
        case DecodeCase::I: return "I";
        case DecodeCase::II: return "II";
        case DecodeCase::III: return "III";
        case DecodeCase::IV: return "IV";
    }
    return "?";
}

DecodeCase decode_case_from_string(const std::string& s) {
    if (s == "I") return DecodeCase::I;
    if (s == "II") return DecodeCase::II;
    if (s == "III") return DecodeCase::III;
    if (s == "IV") return DecodeCase::IV;
    throw std::invalid_argument("unknown decode case '" + s + "'");
}

CaseInfo classify_receiver(const LambdaChain& chain, int k) {
    const int K = chain.params.K;
    if (k < 0 || k >= K)
        throw std::out_of_range("classify_receiver: receiver " + std::to_string(k));
    const int lambda0 = chain.lambdas[0];
    if (k < lambda0)
        return {DecodeCase::I, 0};
    // Shifted column interval containing k: [K - lambda_{2i-1} : K - lambda_{2i+1} - 1].
    int i = 0;
    while (k > K - 1 - chain.lambda_at(2 * i + 1))
        ++i;
    const int head = std::max(0, chain.beta_at(2 * i) - 1) * chain.lambda_at(2 * i);
    const int kprime = k - lambda0;
    if (k < K - chain.lambda_at(2 * i - 1) + head)
        return {DecodeCase::II, kprime};
    if (i <= (chain.l + 1) / 2 - 1)
        return {DecodeCase::III, kprime};
    return {DecodeCase::IV, kprime};
}

namespace {

std::vector<int> tau_for(const AirMatrix& m, const CaseInfo& info, int k) {
    switch (info.kase) {
        case DecodeCase::I:
            return {k % (m.D() + 1)};
        case DecodeCase::II: {
            const DistanceProfile prof = distance_profile(m, info.kprime);
            return {info.kprime, info.kprime + prof.mu};
        }
        case DecodeCase::III: {
            const DistanceProfile prof = distance_profile(m, info.kprime);
            std::vector<int> tau{info.kprime};
            for (int t : prof.t)
                tau.push_back(info.kprime + t);
            tau.push_back(info.kprime + prof.mu);
            return tau;
        }
        case DecodeCase::IV:
            return {info.kprime};
    }
    throw std::logic_error("tau_for: unreachable");
}

// XOR of the chosen matrix columns; the support away from k is the
// side-information the receiver must cancel.
std::vector<int> gamma_for(const AirMatrix& m, const std::vector<int>& tau, int k) {
    std::vector<char> acc(m.K(), 0);
    for (int j : tau)
        for (int r : m.bits().col_support(j))
            acc[r] ^= 1;
    if (!acc[k])
        throw std::logic_error("combination for receiver " + std::to_string(k) +
                               " misses its own message");
    acc[k] = 0;
    std::vector<int> gamma;
    for (int r = 0; r < m.K(); ++r)
        if (acc[r])
            gamma.push_back(r);
    return gamma;
}

}  // namespace

DecodingPlan build_plan(const AirMatrix& m) {
    DecodingPlan plan;
    plan.params = m.params();
    plan.receivers.reserve(m.K());
    for (int k = 0; k < m.K(); ++k) {
        const CaseInfo info = classify_receiver(m.chain(), k);
        ReceiverPlan rp;
        rp.kase = info.kase;
        rp.tau = tau_for(m, info, k);
        rp.gamma = gamma_for(m, rp.tau, k);
        for (int g : rp.gamma)
            if (in_interference(plan.params, k, g))
                throw std::logic_error("receiver " + std::to_string(k) +
                                       " would need interfering message " + std::to_string(g));
        plan.receivers.push_back(std::move(rp));
    }
    return plan;
}

int expected_tau_size(const AirMatrix& m, int k) {
    const CaseInfo info = classify_receiver(m.chain(), k);
    switch (info.kase) {
        case DecodeCase::I:
        case DecodeCase::IV:
            return 1;
        case DecodeCase::II:
            return 2;
        case DecodeCase::III:
            return distance_profile(m, info.kprime).p + 2;
    }
    throw std::logic_error("expected_tau_size: unreachable");
}

int expected_gamma_size(const AirMatrix& m, int k) {
    const CaseInfo info = classify_receiver(m.chain(), k);
    switch (info.kase) {
        case DecodeCase::I:
            return m.column_weight(k % (m.D() + 1)) - 1;
        case DecodeCase::IV:
            return m.column_weight(info.kprime) - 1;
        case DecodeCase::II: {
            const DistanceProfile prof = distance_profile(m, info.kprime);
            return m.column_weight(info.kprime) + m.column_weight(info.kprime + prof.mu) - 3;
        }
        case DecodeCase::III: {
            const DistanceProfile prof = distance_profile(m, info.kprime);
            int n = m.column_weight(info.kprime) + m.column_weight(info.kprime + prof.mu);
            for (int t : prof.t)
                n += m.column_weight(info.kprime + t);
            return n - 2 * prof.p - 3;
        }
    }
    throw std::logic_error("expected_gamma_size: unreachable");
}

Codeword encode(const MessageVector& x, const AirMatrix& m, const PrimeField& f) {
    if (static_cast<int>(x.x.size()) != m.K())
        throw std::invalid_argument("encode: expected " + std::to_string(m.K()) +
                                    " message symbols, got " + std::to_string(x.x.size()));
    Codeword cw;
    cw.c.assign(m.D() + 1, 0);
    for (int k = 0; k < m.K(); ++k) {
        const Symbol v = x.x[k] % f.modulus();
        if (v == 0)
            continue;
        for (int j : m.bits().row_support(k))
            cw.c[j] = f.add(cw.c[j], v);
    }
    return cw;
}

std::vector<Symbol> solve_receiver_coefficients(const AirMatrix& m, const std::vector<int>& tau,
                                                int k, const PrimeField& f) {
    // Unknowns: one coefficient per tau column. Equations: the combination is
    // 1 at row k and 0 at every interfering row.
    const std::vector<int> interf = interference_set(m.params(), k);
    const int ncols = static_cast<int>(tau.size());
    const int nrows = static_cast<int>(interf.size()) + 1;
    std::vector<std::vector<Symbol>> a(nrows, std::vector<Symbol>(ncols + 1, 0));
    auto fill_row = [&](int r, int matrix_row, Symbol rhs) {
        for (int c = 0; c < ncols; ++c)
            a[r][c] = m.at(matrix_row, tau[c]) ? 1 : 0;
        a[r][ncols] = rhs;
    };
    fill_row(0, k, 1);
    for (int r = 0; r < static_cast<int>(interf.size()); ++r)
        fill_row(r + 1, interf[r], 0);

    std::vector<int> pivot_col(nrows, -1);
    int rank = 0;
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[piv], a[rank]);
        const Symbol inv = f.inv(a[rank][c]);
        for (int cc = c; cc <= ncols; ++cc)
            a[rank][cc] = f.mul(a[rank][cc], inv);
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const Symbol factor = a[r][c];
            for (int cc = c; cc <= ncols; ++cc)
                a[r][cc] = f.sub(a[r][cc], f.mul(factor, a[rank][cc]));
        }
        pivot_col[rank] = c;
        ++rank;
    }
    for (int r = rank; r < nrows; ++r)
        if (a[r][ncols] != 0)
            throw DecodeError(k, "no combination of the planned code symbols isolates x_" +
                                     std::to_string(k) + " over GF(" +
                                     std::to_string(f.modulus()) + ")");
    std::vector<Symbol> alpha(ncols, 0);  // free unknowns pinned to zero
    for (int r = 0; r < rank; ++r)
        alpha[pivot_col[r]] = a[r][ncols];
    return alpha;
}

namespace {

// Combination vector w = L * alpha over the field, returned dense over rows.
std::vector<Symbol> combination_vector(const AirMatrix& m, const std::vector<int>& tau,
                                       const std::vector<Symbol>& alpha, const PrimeField& f) {
    std::vector<Symbol> w(m.K(), 0);
    for (std::size_t idx = 0; idx < tau.size(); ++idx) {
        if (alpha[idx] == 0)
            continue;
        for (int r : m.bits().col_support(tau[idx]))
            w[r] = f.add(w[r], alpha[idx]);
    }
    return w;
}

}  // namespace

Symbol decode(int k, const Codeword& c, const SideInfo& side, const DecodingPlan& plan,
              const AirMatrix& m, const PrimeField& f) {
    if (k < 0 || k >= m.K())
        throw std::out_of_range("decode: receiver " + std::to_string(k));
    if (static_cast<int>(c.c.size()) != m.D() + 1)
        throw std::invalid_argument("decode: expected " + std::to_string(m.D() + 1) +
                                    " code symbols, got " + std::to_string(c.c.size()));
    const ReceiverPlan& rp = plan.receivers.at(k);
    std::vector<Symbol> alpha;
    if (f.modulus() == 2)
        alpha.assign(rp.tau.size(), 1);
    else
        alpha = solve_receiver_coefficients(m, rp.tau, k, f);

    Symbol s = 0;
    for (std::size_t idx = 0; idx < rp.tau.size(); ++idx)
        s = f.add(s, f.mul(alpha[idx], c.c[rp.tau[idx]] % f.modulus()));

    const std::vector<Symbol> w = combination_vector(m, rp.tau, alpha, f);
    if (w[k] == 0)
        throw DecodeError(k, "combination has zero coefficient at the wanted message");
    for (int r = 0; r < m.K(); ++r) {
        if (r == k || w[r] == 0)
            continue;
        const std::optional<Symbol> v = side.get(r);
        if (!v)
            throw DecodeError(k, "missing side-information x_" + std::to_string(r));
        s = f.sub(s, f.mul(w[r], *v % f.modulus()));
    }
    return f.mul(s, f.inv(w[k]));
}

MessageVector decode_all(const Codeword& c, const MessageVector& truth, const DecodingPlan& plan,
                         const AirMatrix& m, const PrimeField& f) {
    if (static_cast<int>(truth.x.size()) != m.K())
        throw std::invalid_argument("decode_all: expected " + std::to_string(m.K()) +
                                    " message symbols");
    MessageVector out;
    out.x.assign(m.K(), 0);
    for (int k = 0; k < m.K(); ++k) {
        SideInfo side;
        for (int j : side_information_set(m.params(), k))
            side.put(j, truth.x[j] % f.modulus());
        out.x[k] = decode(k, c, side, plan, m, f);
    }
    return out;
}

Decoder::Decoder(const AirMatrix& m, const DecodingPlan& plan, const PrimeField& f)
    : m_(&m), plan_(&plan), field_(f) {
    const int K = m.K();
    if (static_cast<int>(plan.receivers.size()) != K)
        throw std::invalid_argument("Decoder: plan covers " +
                                    std::to_string(plan.receivers.size()) + " receivers, matrix " +
                                    std::to_string(K));
    tau_coeffs_.resize(K);
    gamma_terms_.resize(K);
    self_inv_.resize(K);
    for (int k = 0; k < K; ++k) {
        const ReceiverPlan& rp = plan.receivers[k];
        if (f.modulus() == 2)
            tau_coeffs_[k].assign(rp.tau.size(), 1);
        else
            tau_coeffs_[k] = solve_receiver_coefficients(m, rp.tau, k, f);
        const std::vector<Symbol> w = combination_vector(m, rp.tau, tau_coeffs_[k], f);
        if (w[k] == 0)
            throw DecodeError(k, "combination has zero coefficient at the wanted message");
        self_inv_[k] = f.inv(w[k]);
        for (int r = 0; r < K; ++r) {
            if (r == k || w[r] == 0)
                continue;
            if (in_interference(m.params(), k, r))
                throw DecodeError(k, "combination leaks interfering message x_" +
                                         std::to_string(r));
            gamma_terms_[k].push_back({r, w[r]});
        }
    }
}

Symbol Decoder::decode_one(int k, const Codeword& c, const MessageVector& x) const {
    const ReceiverPlan& rp = plan_->receivers[k];
    Symbol s = 0;
    for (std::size_t idx = 0; idx < rp.tau.size(); ++idx)
        s = field_.add(s, field_.mul(tau_coeffs_[k][idx], c.c[rp.tau[idx]]));
    for (const auto& [r, coeff] : gamma_terms_[k])
        s = field_.sub(s, field_.mul(coeff, x.x[r]));
    return field_.mul(s, self_inv_[k]);
}

MessageVector Decoder::decode_all(const Codeword& c, const MessageVector& x) const {
    if (static_cast<int>(x.x.size()) != m_->K() ||
        static_cast<int>(c.c.size()) != m_->D() + 1)
        throw std::invalid_argument("decode_all: size mismatch");
    MessageVector out;
    out.x.resize(m_->K());
    for (int k = 0; k < m_->K(); ++k)
        out.x[k] = decode_one(k, c, x);
    return out;
}

}  // namespace aircode
