#include "aircode/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aircode/render.hpp"

namespace aircode::cli {

namespace {

std::vector<Symbol> read_symbols(const std::string& path, int expected, const char* what) {
    std::ifstream is(path);
    if (!is)
        throw std::invalid_argument("cannot open " + path);
    std::vector<Symbol> v;
    long long value = 0;
    while (is >> value)
        v.push_back(Symbol(((value % (1ll << 31)) + (1ll << 31)) % (1ll << 31)));
    if (static_cast<int>(v.size()) != expected)
        throw std::invalid_argument(path + ": expected " + std::to_string(expected) + " " + what +
                                    " symbols, found " + std::to_string(v.size()));
    return v;
}

SideInfo read_side_info(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw std::invalid_argument("cannot open " + path);
    SideInfo side;
    int index = 0;
    long long value = 0;
    while (is >> index >> value)
        side.put(index, Symbol(((value % (1ll << 31)) + (1ll << 31)) % (1ll << 31)));
    return side;
}

void write_symbols(const std::string& path, const std::vector<Symbol>& v) {
    std::ofstream os(path);
    if (!os)
        throw std::invalid_argument("cannot open " + path + " for writing");
    for (Symbol s : v)
        os << s << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"index code toolkit for cyclic one-more-before interference"};
    app.require_subcommand(1);

    int K = 0, D = 0, column = 0, receiver = 0, vectors = 4, jobs = 1, kmax = 0;
    Symbol field = 2;
    std::vector<Symbol> fields{2};
    std::uint64_t seed = 1729;
    std::string format = "json";
    std::string in_path, out_path, code_path, side_path;

    auto add_kd = [&](CLI::App* cmd) {
        cmd->add_option("K", K, "number of messages")->required();
        cmd->add_option("D", D, "interfering messages after the wanted one")->required();
    };

    CLI::App* c_chain = app.add_subcommand("chain", "quotient chain of (K, D+1)");
    add_kd(c_chain);

    CLI::App* c_matrix = app.add_subcommand("matrix", "encoding matrix");
    add_kd(c_matrix);
    c_matrix->add_option("--format", format, "txt, csv or pbm")
        ->default_str("txt")
        ->check(CLI::IsMember({"txt", "csv", "pbm"}));
    c_matrix->add_option("--out", out_path, "write to a file instead of stdout");

    CLI::App* c_profile = app.add_subcommand("profile", "distance profile of one column");
    add_kd(c_profile);
    c_profile->add_option("--k", column, "column index")->required();

    CLI::App* c_plan = app.add_subcommand("plan", "per-receiver decoding plan");
    add_kd(c_plan);
    c_plan->add_option("--format", format, "json or table")
        ->default_str("json")
        ->check(CLI::IsMember({"json", "table"}));

    CLI::App* c_encode = app.add_subcommand("encode", "encode K message symbols");
    add_kd(c_encode);
    c_encode->add_option("--field", field, "prime modulus")->default_val(Symbol(2));
    c_encode->add_option("--in", in_path, "message symbols, one per line")->required();
    c_encode->add_option("--out", out_path, "codeword destination")->required();

    CLI::App* c_decode = app.add_subcommand("decode", "decode one receiver's message");
    add_kd(c_decode);
    c_decode->add_option("--field", field, "prime modulus")->default_val(Symbol(2));
    c_decode->add_option("--receiver", receiver, "receiver index")->required();
    c_decode->add_option("--code", code_path, "codeword, one symbol per line")->required();
    c_decode->add_option("--side", side_path, "side-information, 'index value' lines")
        ->required();

    CLI::App* c_verify = app.add_subcommand("verify", "check one instance end to end");
    add_kd(c_verify);
    c_verify->add_option("--fields", fields, "prime moduli")->delimiter(',');
    c_verify->add_option("--seed", seed, "seed for the random message vectors");
    c_verify->add_option("--vectors", vectors, "random message vectors per field");

    CLI::App* c_sweep = app.add_subcommand("sweep", "verify all instances up to a size");
    c_sweep->add_option("--kmax", kmax, "largest K")->required();
    c_sweep->add_option("--fields", fields, "prime moduli")->delimiter(',');
    c_sweep->add_option("--seed", seed, "seed for the random message vectors");
    c_sweep->add_option("--vectors", vectors, "random message vectors per field");
    c_sweep->add_option("--jobs", jobs, "worker threads");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (*c_chain) {
            out << chain_json(compute_chain(K, D));
        } else if (*c_matrix) {
            const AirMatrix m = build_air(K, D);
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file)
                    throw std::invalid_argument("cannot open " + out_path + " for writing");
            }
            std::ostream& os = out_path.empty() ? out : file;
            if (format == "csv")
                write_matrix_csv(os, m.bits());
            else if (format == "pbm")
                write_matrix_pbm(os, m.bits());
            else
                write_matrix_txt(os, m.bits());
        } else if (*c_profile) {
            const AirMatrix m = build_air(K, D);
            out << profile_json(m.params(), distance_profile(m, column));
        } else if (*c_plan) {
            const DecodingPlan plan = build_plan(build_air(K, D));
            out << (format == "table" ? plan_table(plan) : plan_json(plan));
        } else if (*c_encode) {
            const AirMatrix m = build_air(K, D);
            const PrimeField f(field);
            MessageVector x;
            x.x = read_symbols(in_path, K, "message");
            for (Symbol& s : x.x)
                s %= f.modulus();
            write_symbols(out_path, encode(x, m, f).c);
        } else if (*c_decode) {
            const AirMatrix m = build_air(K, D);
            const PrimeField f(field);
            const DecodingPlan plan = build_plan(m);
            Codeword cw;
            cw.c = read_symbols(code_path, D + 1, "code");
            const Symbol value = decode(receiver, cw, read_side_info(side_path), plan, m, f);
            nlohmann::ordered_json j{{"K", K}, {"D", D}, {"U", m.params().U},
                                     {"receiver", receiver}, {"value", value}};
            out << j.dump(2) << '\n';
        } else if (*c_verify) {
            derive_params(K, D);
            const VerificationReport report =
                verify_instance(K, D, fields, VerifyOptions{seed, vectors});
            out << report_json(report);
            return report.pass ? 0 : 1;
        } else if (*c_sweep) {
            const SweepReport report = sweep(kmax, fields, VerifyOptions{seed, vectors}, jobs);
            out << sweep_json(report);
            return report.pass ? 0 : 1;
        }
    } catch (const DecodeError& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace aircode::cli
