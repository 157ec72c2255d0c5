#pragma once

#include <iosfwd>
#include <string>

#include "aircode/chain.hpp"
#include "aircode/codec.hpp"
#include "aircode/distances.hpp"
#include "aircode/verify.hpp"

namespace aircode {

// Machine-readable views. Keys keep insertion order and index sets are
// emitted sorted, so equal inputs always produce identical bytes.

std::string chain_json(const LambdaChain& chain);

void write_matrix_txt(std::ostream& os, const BitMatrix& bits);
void write_matrix_csv(std::ostream& os, const BitMatrix& bits);
void write_matrix_pbm(std::ostream& os, const BitMatrix& bits);

std::string profile_json(const ProblemParams& params, const DistanceProfile& prof);

std::string plan_json(const DecodingPlan& plan);
DecodingPlan parse_plan_json(const std::string& text);

// Fixed-width table, one row per receiver. Distance columns are recomputed
// from the (K, D) in the plan, so a parsed plan renders byte-identically.
std::string plan_table(const DecodingPlan& plan);

std::string report_json(const VerificationReport& report);
std::string sweep_json(const SweepReport& report);

}  // namespace aircode
