#include "aircode/render.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace aircode {

namespace {

using json = nlohmann::ordered_json;

json header(const ProblemParams& p) {
    return json{{"K", p.K}, {"D", p.D}, {"U", p.U}};
}

}  // namespace

std::string chain_json(const LambdaChain& chain) {
    json j = header(chain.params);
    j["lambdas"] = chain.lambdas;  // lambda_0 .. lambda_{l+1}
    j["betas"] = chain.betas;      // beta_0 .. beta_l
    j["l"] = chain.l;
    return j.dump(2) + "\n";
}

void write_matrix_txt(std::ostream& os, const BitMatrix& bits) {
    for (int r = 0; r < bits.rows(); ++r) {
        for (int c = 0; c < bits.cols(); ++c)
            os << (bits.get(r, c) ? '1' : '0');
        os << '\n';
    }
}

void write_matrix_csv(std::ostream& os, const BitMatrix& bits) {
    for (int r = 0; r < bits.rows(); ++r) {
        for (int c = 0; c < bits.cols(); ++c) {
            if (c)
                os << ',';
            os << (bits.get(r, c) ? '1' : '0');
        }
        os << '\n';
    }
}

void write_matrix_pbm(std::ostream& os, const BitMatrix& bits) {
    os << "P1\n" << bits.cols() << ' ' << bits.rows() << '\n';
    for (int r = 0; r < bits.rows(); ++r) {
        for (int c = 0; c < bits.cols(); ++c)
            os << (bits.get(r, c) ? '1' : '0');
        os << '\n';
    }
}

std::string profile_json(const ProblemParams& params, const DistanceProfile& prof) {
    json j = header(params);
    j["k"] = prof.k;
    j["d_down"] = prof.d_down;
    j["mu"] = prof.mu;
    j["p"] = prof.p;
    j["t"] = prof.t;
    return j.dump(2) + "\n";
}

std::string plan_json(const DecodingPlan& plan) {
    json j = header(plan.params);
    json receivers = json::array();
    for (std::size_t k = 0; k < plan.receivers.size(); ++k) {
        const ReceiverPlan& rp = plan.receivers[k];
        receivers.push_back(json{{"k", k},
                                 {"case", to_string(rp.kase)},
                                 {"tau", rp.tau},
                                 {"gamma", rp.gamma}});
    }
    j["receivers"] = std::move(receivers);
    return j.dump(2) + "\n";
}

DecodingPlan parse_plan_json(const std::string& text) {
    const json j = json::parse(text);
    DecodingPlan plan;
    plan.params = derive_params(j.at("K").get<int>(), j.at("D").get<int>());
    if (j.at("U").get<int>() != plan.params.U)
        throw std::invalid_argument("plan json: U does not match gcd(K, D+1) - 1");
    const json& receivers = j.at("receivers");
    plan.receivers.resize(plan.params.K);
    if (static_cast<int>(receivers.size()) != plan.params.K)
        throw std::invalid_argument("plan json: expected " + std::to_string(plan.params.K) +
                                    " receivers");
    for (const json& r : receivers) {
        const int k = r.at("k").get<int>();
        if (k < 0 || k >= plan.params.K)
            throw std::invalid_argument("plan json: receiver index " + std::to_string(k));
        ReceiverPlan& rp = plan.receivers[k];
        rp.kase = decode_case_from_string(r.at("case").get<std::string>());
        rp.tau = r.at("tau").get<std::vector<int>>();
        rp.gamma = r.at("gamma").get<std::vector<int>>();
    }
    return plan;
}

namespace {

std::string joined(const std::vector<int>& v, const char* prefix) {
    if (v.empty())
        return "-";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += prefix + std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::string plan_table(const DecodingPlan& plan) {
    const AirMatrix m = build_air(plan.params.K, plan.params.D);
    const int D = plan.params.D;

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"R_k", "case", "D_max", "mu", "t", "tau", "gamma"});
    for (std::size_t k = 0; k < plan.receivers.size(); ++k) {
        const ReceiverPlan& rp = plan.receivers[k];
        std::string dmax = "-", mu = "-", t = "-";
        if (static_cast<int>(k) <= D)
            dmax = std::to_string(down_distance_scan(m.bits(), static_cast<int>(k)));
        if (rp.kase == DecodeCase::II || rp.kase == DecodeCase::III) {
            const CaseInfo info = classify_receiver(m.chain(), static_cast<int>(k));
            const DistanceProfile prof = distance_profile(m, info.kprime);
            mu = std::to_string(prof.mu);
            if (!prof.t.empty())
                t = joined(prof.t, "");
        }
        rows.push_back({"R_" + std::to_string(k), to_string(rp.kase), dmax, mu, t,
                        joined(rp.tau, "c_"), joined(rp.gamma, "x_")});
    }

    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size())
                out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

namespace {

json failures_json(const std::vector<ReceiverFailure>& failures) {
    json arr = json::array();
    for (const ReceiverFailure& f : failures)
        arr.push_back(json{{"k", f.k}, {"what", f.what}});
    return arr;
}

}  // namespace

std::string report_json(const VerificationReport& report) {
    json j = header(report.params);
    j["length"] = report.length;
    j["rate"] = report.rate();
    j["length_optimal"] = report.length_optimal;
    j["counts_ok"] = report.counts_ok;
    j["count_failures"] = failures_json(report.count_failures);
    json fields = json::array();
    for (const FieldReport& fr : report.fields)
        fields.push_back(json{{"p", fr.p},
                              {"oracle_ok", fr.oracle_ok},
                              {"decode_ok", fr.decode_ok},
                              {"failures", failures_json(fr.failures)}});
    j["fields"] = std::move(fields);
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

std::string sweep_json(const SweepReport& report) {
    json j;
    j["kmax"] = report.kmax;
    j["fields"] = report.fields;
    j["instances"] = report.instances;
    json failures = json::array();
    for (const SweepFailure& f : report.failures)
        failures.push_back(json{{"K", f.K}, {"D", f.D}, {"p", f.p}, {"what", f.what}});
    j["failures"] = std::move(failures);
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

}  // namespace aircode
