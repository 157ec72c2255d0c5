#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "aircode/distances.hpp"
#include "aircode/field.hpp"
#include "aircode/matrix.hpp"

namespace aircode {

// Which of the four decoding patterns receiver k follows. The split mirrors
// the column groups of the matrix: I for k below the first stacked block,
// II/III for the repeated/last copies of the side-by-side blocks (shifted up
// by lambda_0), IV for the final gcd-sized tail.
enum class DecodeCase { I, II, III, IV };

const char* to_string(DecodeCase c);
DecodeCase decode_case_from_string(const std::string& s);

struct ReceiverPlan {
    DecodeCase kase = DecodeCase::I;
    std::vector<int> tau;    // code symbols to combine, sorted
    std::vector<int> gamma;  // side-information messages to cancel, sorted
};

struct DecodingPlan {
    ProblemParams params;
    std::vector<ReceiverPlan> receivers;  // indexed by k
};

// Receiver classification shared by the plan builder and the count formulas.
struct CaseInfo {
    DecodeCase kase = DecodeCase::I;
    int kprime = 0;  // k - lambda_0, meaningful for cases II-IV
};

CaseInfo classify_receiver(const LambdaChain& chain, int k);

DecodingPlan build_plan(const AirMatrix& m);

// Closed-form sizes that the plan's tau/gamma must reproduce.
int expected_tau_size(const AirMatrix& m, int k);
int expected_gamma_size(const AirMatrix& m, int k);

struct DecodeError : std::runtime_error {
    DecodeError(int receiver_, const std::string& what_)
        : std::runtime_error("receiver " + std::to_string(receiver_) + ": " + what_),
          receiver(receiver_) {}
    int receiver;
};

Codeword encode(const MessageVector& x, const AirMatrix& m, const PrimeField& f);

// Coefficients alpha over tau_k with (L * alpha) zero on the interference of
// R_k and nonzero at k itself; the particular solution with free unknowns
// pinned to zero. Throws DecodeError if no such alpha exists.
std::vector<Symbol> solve_receiver_coefficients(const AirMatrix& m, const std::vector<int>& tau,
                                                int k, const PrimeField& f);

Symbol decode(int k, const Codeword& c, const SideInfo& side, const DecodingPlan& plan,
              const AirMatrix& m, const PrimeField& f);

MessageVector decode_all(const Codeword& c, const MessageVector& truth, const DecodingPlan& plan,
                         const AirMatrix& m, const PrimeField& f);

// Per-receiver combination coefficients solved once so repeated decodes are
// plain dot products. Characteristic 2 needs no solve: all coefficients are 1.
class Decoder {
public:
    Decoder(const AirMatrix& m, const DecodingPlan& plan, const PrimeField& f);

    // Reads only the gamma_k positions of x.
    Symbol decode_one(int k, const Codeword& c, const MessageVector& x) const;
    MessageVector decode_all(const Codeword& c, const MessageVector& x) const;

    const PrimeField& field() const { return field_; }

private:
    const AirMatrix* m_;
    const DecodingPlan* plan_;
    PrimeField field_;
    std::vector<std::vector<Symbol>> tau_coeffs_;  // aligned with plan tau
    // Side-information terms actually hit by the solved combination. Equals
    // the plan's gamma over characteristic 2; over odd characteristic a
    // coefficient may vanish, so these are kept separately.
    std::vector<std::vector<std::pair<int, Symbol>>> gamma_terms_;
    std::vector<Symbol> self_inv_;  // 1 / coefficient at k
};

}  // namespace aircode
