#include "aircode/verify.hpp"

#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

namespace aircode {

std::string VerificationReport::rate() const {
    return "1/" + std::to_string(length);
}

namespace {

// Characteristic 2: rows are bit-packed, coefficient bits then one rhs bit.
bool consistent_gf2(const BitMatrix& bits, const std::vector<int>& rows_wanted,
                    const std::vector<char>& rhs) {
    const int ncols = bits.cols();
    const int words = (ncols + 1 + 63) / 64;
    const int nrows = static_cast<int>(rows_wanted.size());
    std::vector<std::uint64_t> a(static_cast<std::size_t>(nrows) * words, 0);
    for (int r = 0; r < nrows; ++r) {
        const std::uint64_t* src = bits.row_words(rows_wanted[r]);
        for (int t = 0; t < bits.words_per_row(); ++t)
            a[static_cast<std::size_t>(r) * words + t] = src[t];
        if (rhs[r])
            a[static_cast<std::size_t>(r) * words + (ncols >> 6)] |= std::uint64_t(1)
                                                                     << (ncols & 63);
    }
    int rank = 0;
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if ((a[static_cast<std::size_t>(r) * words + (c >> 6)] >> (c & 63)) & 1u) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        for (int t = 0; t < words; ++t)
            std::swap(a[static_cast<std::size_t>(piv) * words + t],
                      a[static_cast<std::size_t>(rank) * words + t]);
        for (int r = 0; r < nrows; ++r) {
            if (r == rank)
                continue;
            if ((a[static_cast<std::size_t>(r) * words + (c >> 6)] >> (c & 63)) & 1u)
                for (int t = 0; t < words; ++t)
                    a[static_cast<std::size_t>(r) * words + t] ^=
                        a[static_cast<std::size_t>(rank) * words + t];
        }
        ++rank;
    }
    for (int r = rank; r < nrows; ++r)
        if ((a[static_cast<std::size_t>(r) * words + (ncols >> 6)] >> (ncols & 63)) & 1u)
            return false;
    return true;
}

bool consistent_gfp(const BitMatrix& bits, const std::vector<int>& rows_wanted,
                    const std::vector<char>& rhs, const PrimeField& f) {
    const int ncols = bits.cols();
    const int nrows = static_cast<int>(rows_wanted.size());
    std::vector<std::vector<Symbol>> a(nrows, std::vector<Symbol>(ncols + 1, 0));
    for (int r = 0; r < nrows; ++r) {
        for (int c = 0; c < ncols; ++c)
            a[r][c] = bits.get(rows_wanted[r], c) ? 1 : 0;
        a[r][ncols] = rhs[r] ? 1 : 0;
    }
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
        if (inv != 1)
            for (int cc = c; cc <= ncols; ++cc)
                a[rank][cc] = f.mul(a[rank][cc], inv);
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const Symbol factor = a[r][c];
            for (int cc = c; cc <= ncols; ++cc)
                a[r][cc] = f.sub(a[r][cc], f.mul(factor, a[rank][cc]));
        }
        ++rank;
    }
    for (int r = rank; r < nrows; ++r)
        if (a[r][ncols] != 0)
            return false;
    return true;
}

}  // namespace

bool decodable_oracle(const BitMatrix& bits, const ProblemParams& params, int k,
                      const PrimeField& f) {
    if (k < 0 || k >= params.K)
        throw std::out_of_range("decodable_oracle: receiver " + std::to_string(k));
    std::vector<int> rows{k};
    std::vector<char> rhs{1};
    for (int j : interference_set(params, k)) {
        rows.push_back(j);
        rhs.push_back(0);
    }
    if (f.modulus() == 2)
        return consistent_gf2(bits, rows, rhs);
    return consistent_gfp(bits, rows, rhs, f);
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, int K, int D, Symbol p) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
    for (std::uint64_t v : {std::uint64_t(K), std::uint64_t(D), std::uint64_t(p)}) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return h;
}

bool roundtrip_matches(const AirMatrix& m, const Decoder& dec, const PrimeField& f,
                       const MessageVector& x, FieldReport& fr) {
    const Codeword c = encode(x, m, f);
    const MessageVector got = dec.decode_all(c, x);
    for (int k = 0; k < m.K(); ++k)
        if (got.x[k] != x.x[k] % f.modulus()) {
            fr.failures.push_back({k, "decoded " + std::to_string(got.x[k]) + ", wanted " +
                                          std::to_string(x.x[k] % f.modulus())});
            return false;
        }
    return true;
}

}  // namespace

VerificationReport verify_instance(int K, int D, const std::vector<Symbol>& fields,
                                   const VerifyOptions& opts) {
    VerificationReport report;
    report.params = derive_params(K, D);
    const AirMatrix m = build_air(K, D);
    const DecodingPlan plan = build_plan(m);
    report.length = D + 1;
    report.length_optimal = static_cast<int>(m.bits().cols()) == D + 1;

    for (int k = 0; k < K; ++k) {
        const ReceiverPlan& rp = plan.receivers[k];
        if (static_cast<int>(rp.tau.size()) != expected_tau_size(m, k))
            report.count_failures.push_back(
                {k, "|tau| = " + std::to_string(rp.tau.size()) + ", closed form says " +
                        std::to_string(expected_tau_size(m, k))});
        if (static_cast<int>(rp.gamma.size()) != expected_gamma_size(m, k))
            report.count_failures.push_back(
                {k, "|gamma| = " + std::to_string(rp.gamma.size()) + ", closed form says " +
                        std::to_string(expected_gamma_size(m, k))});
    }
    report.counts_ok = report.count_failures.empty();

    for (Symbol p : fields) {
        const PrimeField f(p);
        FieldReport fr;
        fr.p = p;
        for (int k = 0; k < K; ++k)
            if (!decodable_oracle(m.bits(), report.params, k, f)) {
                fr.oracle_ok = false;
                fr.failures.push_back({k, "oracle: not decodable over GF(" + std::to_string(p) +
                                              ")"});
            }
        try {
            const Decoder dec(m, plan, f);
            MessageVector x;
            x.x.assign(K, 0);
            for (int k = 0; k < K && fr.decode_ok; ++k) {
                x.x[k] = 1;  // basis vector e_k
                fr.decode_ok = roundtrip_matches(m, dec, f, x, fr);
                x.x[k] = 0;
            }
            std::mt19937_64 rng(mix_seed(opts.seed, K, D, p));
            std::uniform_int_distribution<Symbol> dist(0, p - 1);
            for (int r = 0; r < opts.random_vectors && fr.decode_ok; ++r) {
                for (auto& v : x.x)
                    v = dist(rng);
                fr.decode_ok = roundtrip_matches(m, dec, f, x, fr);
            }
        } catch (const DecodeError& e) {
            fr.decode_ok = false;
            fr.failures.push_back({e.receiver, e.what()});
        }
        report.pass = report.pass && fr.oracle_ok && fr.decode_ok;
        report.fields.push_back(std::move(fr));
    }
    report.pass = report.pass && report.counts_ok && report.length_optimal;
    return report;
}

bool column_deletion_breaks(const AirMatrix& m, const PrimeField& f) {
    for (int drop = 0; drop <= m.D(); ++drop) {
        BitMatrix reduced(m.K(), m.D());
        for (int r = 0; r < m.K(); ++r)
            for (int c = 0, cc = 0; c <= m.D(); ++c) {
                if (c == drop)
                    continue;
                if (m.bits().get(r, c))
                    reduced.set(r, cc);
                ++cc;
            }
        bool some_receiver_fails = false;
        for (int k = 0; k < m.K() && !some_receiver_fails; ++k)
            some_receiver_fails = !decodable_oracle(reduced, m.params(), k, f);
        if (!some_receiver_fails)
            return false;  // column `drop` was redundant
    }
    return true;
}

SweepReport sweep(int kmax, const std::vector<Symbol>& fields, const VerifyOptions& opts,
                  int jobs) {
    if (kmax < 3)
        throw std::invalid_argument("sweep: kmax must be at least 3");
    if (jobs < 1)
        throw std::invalid_argument("sweep: jobs must be at least 1");
    SweepReport report;
    report.kmax = kmax;
    report.fields = fields;

    std::vector<std::pair<int, int>> instances;
    for (int K = 3; K <= kmax; ++K)
        for (int D = 1; D <= K - 2; ++D)
            instances.push_back({K, D});
    report.instances = static_cast<int>(instances.size());

    std::vector<std::vector<SweepFailure>> failures(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= instances.size())
                return;
            const auto [K, D] = instances[i];
            const VerificationReport r = verify_instance(K, D, fields, opts);
            for (const ReceiverFailure& cf : r.count_failures)
                failures[i].push_back({K, D, 0, "k=" + std::to_string(cf.k) + ": " + cf.what});
            for (const FieldReport& fr : r.fields)
                for (const ReceiverFailure& rf : fr.failures)
                    failures[i].push_back(
                        {K, D, fr.p, "k=" + std::to_string(rf.k) + ": " + rf.what});
            if (!r.length_optimal)
                failures[i].push_back({K, D, 0, "length != D+1"});
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    for (auto& fs : failures)
        for (auto& f : fs)
            report.failures.push_back(std::move(f));
    report.pass = report.failures.empty();
    return report;
}

}  // namespace aircode
