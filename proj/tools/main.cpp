#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "sylchar/classify.hpp"
#include "sylchar/closed_forms.hpp"
#include "sylchar/errors.hpp"
#include "sylchar/verify.hpp"
#include "sylchar/wreath.hpp"

namespace {

using nlohmann::json;
using sylchar::BigInt;
using sylchar::Rational;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

json rational_json(const Rational& r) {
    return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string token;
    for (const char c : csv) {
        if (c == ',') {
            if (!token.empty()) out.push_back(std::stoi(token));
            token.clear();
        } else {
            token += c;
        }
    }
    if (!token.empty()) out.push_back(std::stoi(token));
    if (out.empty()) throw sylchar::DomainError("expected a comma-separated integer list");
    return out;
}

std::vector<sylchar::chars::BitSeq> parse_rows(const std::string& csv) {
    std::vector<sylchar::chars::BitSeq> rows;
    std::string token;
    for (const char c : csv) {
        if (c == ',') {
            rows.push_back(sylchar::chars::parse_bits(token));
            token.clear();
        } else {
            token += c;
        }
    }
    rows.push_back(sylchar::chars::parse_bits(token));
    return rows;
}

std::int64_t default_budget() {
    if (const char* env = std::getenv("SYLCHAR_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw sylchar::DomainError("SYLCHAR_BUDGET is not a valid integer");
        }
    }
    return sylchar::sylow::kDefaultElementBudget;
}

/// Emits a flat result object in the requested format. All numeric values
/// are exact decimal strings.
void emit(const json& doc, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << doc.dump() << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> fields;
    std::function<void(const std::string&, const json&)> flatten =
        [&](const std::string& prefix, const json& node) {
            if (node.is_object()) {
                for (const auto& [key, value] : node.items())
                    flatten(prefix.empty() ? key : prefix + "." + key, value);
            } else if (node.is_array()) {
                std::string joined;
                for (const auto& value : node) {
                    if (!joined.empty()) joined += ";";
                    joined += value.is_string() ? value.get<std::string>() : value.dump();
                }
                fields.emplace_back(prefix, joined);
            } else if (node.is_string()) {
                fields.emplace_back(prefix, node.get<std::string>());
            } else {
                fields.emplace_back(prefix, node.dump());
            }
        };
    flatten("", doc);
    if (format == "csv") {
        for (size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
        out << "\n";
        for (size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].second;
        out << "\n";
    } else {  // table
        for (const auto& [key, value] : fields) out << key << " = " << value << "\n";
    }
}

struct GammaArgs {
    std::int64_t p = 0;
    int k = 0;
    std::string levels;
    std::string u;
    std::string mode = "closed";
    std::string format = "json";
    std::int64_t budget = 0;
    int threads = 0;
};

int run_gamma(const GammaArgs& args) {
    const auto levels = parse_int_list(args.levels);
    const auto u = sylchar::chars::parse_bits(args.u);
    const auto mode = sylchar::chars::parse_eval_mode(args.mode);

    const bool is_pair = levels.size() == 2 && levels[0] == levels[1];
    Rational value;
    std::string mode_used = sylchar::chars::eval_mode_name(mode);
    switch (mode) {
        case sylchar::chars::EvalMode::kClosed:
            value = is_pair ? sylchar::chars::gamma_pair(args.p, args.k, levels[0], u)
                            : sylchar::chars::gamma_closed(args.p, args.k, levels, u);
            break;
        case sylchar::chars::EvalMode::kRecursive:
            value = is_pair ? sylchar::chars::gamma_pair_recursive(args.p, args.k, levels[0], u)
                            : sylchar::chars::gamma_recursive(args.p, args.k, levels, u);
            break;
        case sylchar::chars::EvalMode::kOracle: {
            const auto buckets =
                sylchar::sylow::bucket_sylow(args.p, args.k, args.budget, args.threads);
            std::vector<std::int64_t> parts;
            for (const int l : levels)
                parts.push_back(sylchar::pow_int(args.p, static_cast<std::uint64_t>(l))
                                    .convert_to<std::int64_t>());
            const auto degree = sylchar::pow_int(args.p, static_cast<std::uint64_t>(args.k))
                                    .convert_to<std::int64_t>();
            BigInt length_sum = 0;
            for (const auto part : parts) length_sum += part;
            if (length_sum > degree) {
                value = 0;
            } else {
                const auto ct = sylchar::sylow::CycleType::with_fixed_points(degree, parts);
                const auto sums = sylchar::verify::row_class_sums(
                    buckets, u, std::vector<int>(static_cast<size_t>(args.k), 1));
                const auto it = sums.find(ct.parts);
                value = it == sums.end() ? Rational(0) : it->second;
            }
            break;
        }
        case sylchar::chars::EvalMode::kAuto:
            value = is_pair ? sylchar::chars::gamma_pair(args.p, args.k, levels[0], u)
                            : sylchar::chars::gamma_closed(args.p, args.k, levels, u);
            mode_used = "closed";
            break;
    }

    json doc;
    doc["p"] = args.p;
    doc["k"] = args.k;
    doc["levels"] = levels;
    doc["u"] = args.u;
    doc["value"] = rational_json(value);
    doc["mode"] = mode_used;
    emit(doc, args.format, std::cout);
    return kExitOk;
}

struct InduceArgs {
    std::int64_t p = 0;
    std::int64_t n = 0;
    std::string u;
    std::string cycle_type;
    std::string mode = "auto";
    std::string format = "json";
    std::int64_t budget = 0;
};

int run_induce(const InduceArgs& args) {
    const auto rows = parse_rows(args.u);
    const sylchar::chars::CharSpec spec(args.p, rows);
    if (spec.n() != args.n)
        throw sylchar::DomainError("--n " + std::to_string(args.n) +
                                   " does not equal a*p^k = " + std::to_string(spec.n()) +
                                   " implied by the rows");
    std::vector<std::int64_t> parts;
    for (const int part : parse_int_list(args.cycle_type)) parts.push_back(part);
    const auto ct = sylchar::sylow::CycleType::with_fixed_points(args.n, parts);
    const auto mode = sylchar::chars::parse_eval_mode(args.mode);
    const auto result = sylchar::chars::induced_value(spec, ct, mode, args.budget);

    json doc;
    doc["p"] = args.p;
    doc["n"] = args.n;
    doc["u"] = json::array();
    for (const auto& row : rows) {
        std::string bits;
        for (const auto b : row) bits += static_cast<char>('0' + b);
        doc["u"].push_back(bits);
    }
    doc["cycle_type"] = ct.nontrivial_parts();
    doc["fixed_points"] = ct.fixed_points();
    doc["value"] = rational_json(result.value);
    doc["mode"] = sylchar::chars::eval_mode_name(result.mode_used);
    emit(doc, args.format, std::cout);
    return kExitOk;
}

struct ClassifyArgs {
    std::int64_t p = 0;
    std::string s;
    std::string t;
    std::string format = "json";
};

int run_classify(const ClassifyArgs& args) {
    const sylchar::chars::CharSpec s(args.p, parse_rows(args.s));
    const sylchar::chars::CharSpec t(args.p, parse_rows(args.t));
    const bool conjugate = sylchar::classify::n_conjugate(s, t);
    const auto result = sylchar::classify::induced_equal(s, t);

    // Both facts are emitted on purpose: consumers can audit that they agree.
    json doc;
    doc["n_conjugate"] = conjugate;
    doc["induced_equal"] = result.equal;
    if (result.witness) {
        json witness;
        witness["cycle_type"] = result.witness->cycle_type.nontrivial_parts();
        witness["levels"] = result.witness->levels;
        witness["class_sums"] = json::array({rational_json(result.witness->class_sum_s),
                                             rational_json(result.witness->class_sum_t)});
        doc["witness"] = witness;
    } else {
        doc["witness"] = nullptr;
    }
    emit(doc, args.format, std::cout);
    return kExitOk;
}

struct VerifyArgs {
    std::string campaign;
    std::int64_t p = 3;
    int k_max = 2;
    std::int64_t n = 9;
    std::uint64_t seed = 7;
    std::int64_t budget = 0;
    int threads = 0;
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    sylchar::verify::VerificationReport report;
    if (args.campaign == "gamma") {
        report = sylchar::verify::sweep_gamma(args.p, args.k_max, args.budget, args.threads);
    } else if (args.campaign == "theorem-a") {
        report = sylchar::verify::certify_theorem_a(args.p, args.n, args.budget, args.threads);
    } else {
        sylchar::verify::SuitesConfig config;
        config.seed = args.seed;
        report = sylchar::verify::run_property_suites(config);
    }
    std::cout << sylchar::verify::report_table(report);
    if (!args.out.empty()) {
        std::ofstream file(args.out);
        if (!file) throw sylchar::DomainError("cannot open output file: " + args.out);
        file << sylchar::verify::report_json(report) << "\n";
    }
    return report.all_passed() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact values and equality classification of induced linear characters of "
                 "Sylow p-subgroups of symmetric groups"};
    app.require_subcommand(1);

    std::int64_t budget;
    try {
        budget = default_budget();
    } catch (const sylchar::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    GammaArgs gamma_args;
    gamma_args.budget = budget;
    auto* gamma = app.add_subcommand("gamma", "Class sum over one cycle type of P_{p^k}");
    gamma->add_option("--p", gamma_args.p, "prime p")->required();
    gamma->add_option("--k", gamma_args.k, "tower height k")->required();
    gamma->add_option("--levels", gamma_args.levels,
                      "comma-separated cycle levels l (cycle lengths p^l)")->required();
    gamma->add_option("--u", gamma_args.u, "0/1 sequence, leftmost bit = u_1")->required();
    gamma->add_option("--mode", gamma_args.mode, "closed|recursive|oracle|auto");
    gamma->add_option("--format", gamma_args.format, "json|csv|table");
    gamma->add_option("--budget", gamma_args.budget, "element budget for oracle mode");
    gamma->add_option("--threads", gamma_args.threads, "worker threads for oracle mode");

    InduceArgs induce_args;
    induce_args.budget = budget;
    auto* induce = app.add_subcommand("induce", "Induced character value at a cycle type");
    induce->add_option("--p", induce_args.p, "prime p")->required();
    induce->add_option("--n", induce_args.n, "degree n = a*p^k")->required();
    induce->add_option("--u", induce_args.u,
                       "rows of the character, comma-separated 0/1 strings")->required();
    induce->add_option("--cycle-type", induce_args.cycle_type,
                       "comma-separated nontrivial parts; fixed points inferred")->required();
    induce->add_option("--mode", induce_args.mode, "closed|recursive|oracle|auto");
    induce->add_option("--format", induce_args.format, "json|csv|table");
    induce->add_option("--budget", induce_args.budget, "element budget for oracle mode");

    ClassifyArgs classify_args;
    auto* classify = app.add_subcommand("classify",
                                        "Decide equality of two induced characters");
    classify->add_option("--p", classify_args.p, "prime p")->required();
    classify->add_option("--s", classify_args.s, "rows of the first character")->required();
    classify->add_option("--t", classify_args.t, "rows of the second character")->required();
    classify->add_option("--format", classify_args.format, "json|csv|table");

    VerifyArgs verify_args;
    verify_args.budget = budget;
    auto* verify = app.add_subcommand("verify", "Run a verification campaign");
    verify->require_subcommand(1);
    auto* verify_gamma = verify->add_subcommand("gamma", "closed vs recursive vs enumeration");
    verify_gamma->add_option("--p", verify_args.p, "prime p")->required();
    verify_gamma->add_option("--kmax", verify_args.k_max, "largest tower height")->required();
    auto* verify_thm = verify->add_subcommand("theorem-a", "equality classes vs N-conjugacy");
    verify_thm->add_option("--p", verify_args.p, "prime p")->required();
    verify_thm->add_option("--n", verify_args.n, "degree n = a*p^k")->required();
    auto* verify_suites = verify->add_subcommand("suites", "randomized property suites");
    verify_suites->add_option("--seed", verify_args.seed, "PRNG seed (recorded in the report)");
    for (auto* sub : {verify_gamma, verify_thm, verify_suites}) {
        sub->add_option("--budget", verify_args.budget, "element budget");
        sub->add_option("--threads", verify_args.threads, "worker threads");
        sub->add_option("--out", verify_args.out, "write the JSON report here");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gamma->parsed()) return run_gamma(gamma_args);
        if (induce->parsed()) return run_induce(induce_args);
        if (classify->parsed()) return run_classify(classify_args);
        if (verify->parsed()) {
            if (verify_gamma->parsed()) verify_args.campaign = "gamma";
            else if (verify_thm->parsed()) verify_args.campaign = "theorem-a";
            else verify_args.campaign = "suites";
            return run_verify(verify_args);
        }
    } catch (const sylchar::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const sylchar::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const sylchar::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
