#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aircode/codec.hpp"
#include "aircode/instance.hpp"

namespace aircode {

struct VerifyOptions {
    std::uint64_t seed = 1729;
    int random_vectors = 4;
};

struct ReceiverFailure {
    int k;
    std::string what;
};

struct FieldReport {
    Symbol p = 2;
    bool oracle_ok = true;  // every receiver decodable by independent elimination
    bool decode_ok = true;  // plan round-trips basis and random message vectors
    std::vector<ReceiverFailure> failures;
};

struct VerificationReport {
    ProblemParams params;
    int length = 0;              // code symbols per message round
    bool length_optimal = true;  // equals the outer-bound denominator D+1
    bool counts_ok = true;       // |tau|, |gamma| match their closed-form counts
    std::vector<ReceiverFailure> count_failures;
    std::vector<FieldReport> fields;
    bool pass = true;

    std::string rate() const;  // "1/<length>"
};

// True iff some combination of matrix columns is 1 at row k and 0 on every
// interfering row. Pure elimination; never consults a DecodingPlan.
bool decodable_oracle(const BitMatrix& bits, const ProblemParams& params, int k,
                      const PrimeField& f);

VerificationReport verify_instance(int K, int D, const std::vector<Symbol>& fields,
                                   const VerifyOptions& opts = {});

// Deleting any single code symbol leaves some receiver undecodable.
bool column_deletion_breaks(const AirMatrix& m, const PrimeField& f);

struct SweepFailure {
    int K = 0;
    int D = 0;
    Symbol p = 0;  // 0 marks a field-independent (count) failure
    std::string what;
};

struct SweepReport {
    int kmax = 0;
    std::vector<Symbol> fields;
    int instances = 0;
    std::vector<SweepFailure> failures;
    bool pass = true;
};

// All (K, D) with 3 <= K <= kmax, 1 <= D <= K-2. Instances are independent;
// jobs > 1 fans them out across threads with a deterministic merge.
SweepReport sweep(int kmax, const std::vector<Symbol>& fields, const VerifyOptions& opts = {},
                  int jobs = 1);

}  // namespace aircode
