// wdx: construct decreasing monomial codes and compute their weight
// distributions. Exit codes: 0 ok, 1 verification failed, 2 bad input,
// 3 internal inconsistency.

#include "wdx/wdx.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace {

using wdx::io::Json;

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kInconsistent = 3 };

struct Common {
    std::string format = "json";
    unsigned threads = 0;
    std::optional<unsigned> limit_k;
};

unsigned oracle_limit(const Common& c)
{
    return c.limit_k ? *c.limit_k : wdx::brute_limit_from_env(28);
}

wdx::OracleOptions oracle_options(const Common& c) { return {oracle_limit(c), c.threads}; }

std::string read_source(const std::string& source)
{
    if (source == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    if (!source.empty() && source.front() == '{')
        return source;
    std::ifstream in(source);
    if (!in)
        throw wdx::InputError("cannot open code file '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

wdx::CodeSpec load_code(const std::string& source)
{
    Json j;
    try {
        j = Json::parse(read_source(source));
    } catch (const Json::parse_error& e) {
        throw wdx::InputError(std::string("malformed JSON: ") + e.what());
    }
    if (j.contains("code"))
        j = j["code"];
    return wdx::io::code_from_json(j);
}

bool rm2_sandwich(const wdx::MonomialSet& set)
{
    if (set.max_degree() > 2 || !set.contains(wdx::Monomial::one(set.m())))
        return false;
    for (int i = 0; i < set.m(); ++i)
        if (!set.contains(wdx::Monomial(set.m(), 1u << i)))
            return false;
    return true;
}

/// Closed-form complete distribution, or nullopt when no closed form covers the code.
std::optional<wdx::WeightDistribution> closed_full(const wdx::CodeSpec& code)
{
    if (code.k() == 0) {
        wdx::WeightDistribution wd(code.n(), 0, true);
        wd.set(0, 1);
        return wd;
    }
    if (!rm2_sandwich(code.info_set()))
        return std::nullopt;
    return wdx::complete_wd_rm2_subcode(code.info_set());
}

/// Complete distribution by the requested method; auto cross-checks when it can.
wdx::WeightDistribution full_distribution(const wdx::CodeSpec& code, const std::string& method,
                                          const Common& common, Json& routes)
{
    std::optional<wdx::WeightDistribution> closed;
    std::optional<wdx::WeightDistribution> brute;
    if (method != "brute") {
        closed = closed_full(code);
        if (!closed && method == "closed")
            throw wdx::InputError("no closed form for the complete distribution: the code must lie between "
                                  "R(1,m) and R(2,m)");
        if (closed)
            routes.push_back("closed");
    }
    if (method == "brute" || (method == "auto" && code.k() <= oracle_limit(common))) {
        brute = wdx::brute_force_wd(code, oracle_options(common));
        routes.push_back("brute");
    }
    if (closed && brute && !(*closed == *brute))
        throw wdx::ConsistencyError("closed form and oracle disagree:\n  closed " + wdx::io::to_polynomial_text(*closed)
                                    + "\n  oracle " + wdx::io::to_polynomial_text(*brute));
    if (closed)
        return *closed;
    if (brute)
        return *brute;
    throw wdx::InputError("K=" + std::to_string(code.k()) + " exceeds the oracle limit "
                          + std::to_string(oracle_limit(common)) + " and no closed form applies");
}

void emit(const Json& j, const std::string& text, const Common& common)
{
    if (common.format == "text")
        std::cout << text;
    else
        std::cout << j.dump(2) << "\n";
}

std::string set_text(const wdx::MonomialSet& set)
{
    std::string out;
    for (const auto& f : set)
        out += (out.empty() ? "" : " ") + f.to_string();
    return out + "\n";
}

int cmd_construct(int m, std::optional<long long> k, const std::string& rule, std::optional<int> r, const Common& c)
{
    std::optional<wdx::CodeSpec> code;
    if (rule == "rm") {
        if (!r && !k)
            throw wdx::InputError("rule rm needs --r or --k");
        int degree = r.value_or(-1);
        if (!r) {
            for (int d = 0; d <= m && degree < 0; ++d)
                if (wdx::rm_dimension(m, d) == *k)
                    degree = d;
            if (degree < 0)
                throw wdx::InputError("K=" + std::to_string(*k) + " is not the dimension of any R(r," + std::to_string(m)
                                      + ")");
        }
        code = wdx::construct_rm(degree, m);
        if (k && static_cast<long long>(code->k()) != *k)
            throw wdx::InputError("R(" + std::to_string(degree) + "," + std::to_string(m) + ") has dimension "
                                  + std::to_string(code->k()) + ", not " + std::to_string(*k));
    } else {
        if (!k)
            throw wdx::InputError("rule " + rule + " needs --k");
        if (rule == "polar")
            code = wdx::construct_polar(m, *k);
        else if (rule == "rmxpolar")
            code = wdx::construct_rmxpolar(m, *k);
        else
            code = wdx::construct_wmin_beta(m, *k);
    }
    emit(wdx::io::to_json(*code), set_text(code->info_set()), c);
    return kOk;
}

int cmd_wdist(const std::string& source, const std::string& method, const std::string& range, const Common& c)
{
    const auto code = load_code(source);
    Json out;
    out["command"] = "wdist";
    out["method"] = method;
    out["range"] = range;
    out["code"] = wdx::io::to_json(code);
    Json routes = Json::array();
    std::string text;

    if (range == "full") {
        const auto wd = full_distribution(code, method, c, routes);
        out["routes"] = routes;
        out["distribution"] = wdx::io::to_json(wd);
        out["polynomial"] = wdx::io::to_polynomial_text(wd);
        text = wdx::io::to_polynomial_text(wd) + "\n";
    } else {
        std::vector<wdx::SpectrumEntry> spectrum;
        if (method == "brute") {
            const auto wd = wdx::brute_force_wd(code, oracle_options(c));
            routes.push_back("brute");
            if (code.k() > 0) {
                const auto wmin = *wd.min_nonzero_weight();
                for (std::size_t w = wmin; w < 2 * wmin; ++w)
                    if (wd.count(w) != 0)
                        spectrum.push_back({w, wd.count(w), true, w == wmin ? 1 : 0});
            }
        } else {
            spectrum = wdx::low_weight_spectrum(code.info_set());
            routes.push_back("closed");
            if (method == "auto" && code.k() <= oracle_limit(c)) {
                const auto wd = wdx::brute_force_wd(code, oracle_options(c));
                routes.push_back("brute");
                for (const auto& e : spectrum)
                    if (e.exact && wd.count(e.weight) != e.count)
                        throw wdx::ConsistencyError("weight " + std::to_string(e.weight) + ": closed form "
                                                    + e.count.str() + ", oracle " + wd.count(e.weight).str());
            }
        }
        Json caveats = Json::array();
        for (const auto& e : spectrum) {
            text += std::to_string(e.weight) + " " + e.count.str();
            if (!e.exact) {
                text += "  (Type II only; Type I codewords may add to this weight)";
                caveats.push_back("weight " + std::to_string(e.weight)
                                  + ": Type II count only, Type I codewords are not counted");
            }
            text += "\n";
        }
        out["routes"] = routes;
        out["spectrum"] = wdx::io::to_json(spectrum);
        out["caveats"] = caveats;
    }
    emit(out, text, c);
    return kOk;
}

int cmd_dual(const std::string& source, const std::string& method, const Common& c)
{
    const auto code = load_code(source);
    const wdx::CodeSpec dual(wdx::dual_set(code.info_set()));
    Json routes = Json::array();
    const auto direct = full_distribution(dual, method, c, routes);
    Json primal_routes = Json::array();
    const auto primal = full_distribution(code, method, c, primal_routes);
    const auto transformed = wdx::macwilliams_dual_wd(primal);
    if (!(direct == transformed))
        throw wdx::ConsistencyError("dual distribution disagrees with the MacWilliams transform:\n  dual set  "
                                    + wdx::io::to_polynomial_text(direct) + "\n  transform "
                                    + wdx::io::to_polynomial_text(transformed));
    routes.push_back("macwilliams");
    Json out;
    out["command"] = "dual";
    out["code"] = wdx::io::to_json(code);
    out["dual_code"] = wdx::io::to_json(dual);
    out["routes"] = routes;
    out["distribution"] = wdx::io::to_json(direct);
    out["polynomial"] = wdx::io::to_polynomial_text(direct);
    emit(out, set_text(dual.info_set()) + wdx::io::to_polynomial_text(direct) + "\n", c);
    return kOk;
}

int cmd_verify(int m, std::vector<std::string> suites, std::uint64_t seed, const Common& c)
{
    wdx::VerifyOptions opt;
    opt.m = m;
    opt.threads = c.threads;
    opt.seed = seed;
    if (c.limit_k)
        opt.max_k = *c.limit_k;
    if (suites.empty() || (suites.size() == 1 && suites[0] == "all"))
        suites = wdx::suite_names();
    Json out;
    out["command"] = "verify";
    out["m"] = m;
    Json reports = Json::array();
    std::string text;
    bool all = true;
    for (const auto& name : suites) {
        const auto rep = wdx::run_suite(name, opt);
        all = all && rep.passed();
        Json j;
        j["suite"] = rep.name;
        j["passed"] = rep.passed();
        j["checked"] = rep.checked;
        j["skipped"] = rep.skipped;
        j["notes"] = rep.notes;
        j["failures"] = rep.failures;
        reports.push_back(j);
        text += (rep.passed() ? "PASS " : "FAIL ") + rep.name + ": " + std::to_string(rep.checked) + " checked, "
                + std::to_string(rep.skipped) + " skipped\n";
        for (const auto& n : rep.notes)
            text += "  " + n + "\n";
        for (const auto& f : rep.failures)
            text += "  counterexample: " + f + "\n";
    }
    out["suites"] = reports;
    out["passed"] = all;
    emit(out, text, c);
    return all ? kOk : kVerifyFailed;
}

int cmd_order(int m, const Common& c)
{
    Json arr = Json::array();
    std::string text;
    for (const auto& f : wdx::blended_order(m)) {
        Json j;
        j["monomial"] = wdx::io::to_json(f);
        j["level"] = wdx::lambda_size(f);
        arr.push_back(j);
        text += f.to_string() + " " + std::to_string(wdx::lambda_size(f)) + "\n";
    }
    Json out;
    out["m"] = m;
    out["order"] = arr;
    emit(out, text, c);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decreasing monomial codes: construction and weight distributions"};
    app.require_subcommand(1);
    Common common;
    int m = 0;
    std::optional<long long> k;
    std::optional<int> r;
    std::string rule;
    std::string source;
    std::string method = "auto";
    std::string range = "full";
    std::vector<std::string> suites;
    std::uint64_t seed = 1;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
        sub->add_option("--limit-k", common.limit_k, "Largest dimension the oracle will enumerate");
    };

    auto* construct = app.add_subcommand("construct", "Build an information set");
    construct->add_option("--m", m, "Number of variables")->required();
    construct->add_option("--k", k, "Dimension");
    construct->add_option("--r", r, "Degree for rule rm");
    construct->add_option("--rule", rule, "Construction rule")
        ->required()
        ->check(CLI::IsMember({"rm", "polar", "rmxpolar", "wmin-beta"}));
    add_common(construct);

    const auto add_code = [&](CLI::App* sub) {
        sub->add_option("code", source, "Code JSON file, inline JSON, or - for stdin")->required();
        sub->add_option("--method", method, "closed, brute or auto")->check(CLI::IsMember({"closed", "brute", "auto"}));
    };
    auto* wdist = app.add_subcommand("wdist", "Weight distribution of a code");
    add_code(wdist);
    wdist->add_option("--range", range, "full or low")->check(CLI::IsMember({"full", "low"}));
    add_common(wdist);

    auto* dual = app.add_subcommand("dual", "Dual code and its distribution");
    add_code(dual);
    add_common(dual);

    auto* verify = app.add_subcommand("verify", "Run self-check suites");
    verify->add_option("--m", m, "Number of variables")->required();
    verify->add_option("--suite", suites, "Suite name, repeatable, or all");
    verify->add_option("--seed", seed, "Seed for sampled suites");
    add_common(verify);

    auto* order = app.add_subcommand("order", "Degree-2 monomials in blended order");
    order->add_option("--m", m, "Number of variables")->required();
    add_common(order);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        int status = kOk;
        if (*construct)
            status = cmd_construct(m, k, rule, r, common);
        else if (*wdist)
            status = cmd_wdist(source, method, range, common);
        else if (*dual)
            status = cmd_dual(source, method, common);
        else if (*verify)
            status = cmd_verify(m, suites, seed, common);
        else
            status = cmd_order(m, common);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::cerr << "elapsed " << elapsed.count() << " s\n";
        return status;
    } catch (const wdx::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const wdx::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const wdx::ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInconsistent;
    }
}
