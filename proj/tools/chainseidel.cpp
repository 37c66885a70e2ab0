// chainseidel: command-line front end for the chain-graph Seidel library.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <chainseidel/chainseidel.hpp>
#include <chainseidel/serialize.hpp>

using namespace chainseidel;

namespace {

enum class Format { json, text, csv };

struct Global {
    Format format = Format::json;
    unsigned threads = 1;
    std::uint64_t seed = 0;
    bool timing = false;
};

struct Payload {
    Json data;
    std::string table; // key of a row array for CSV, "." for the payload as one row, empty for key,value pairs
    bool ok = true;
};

Json spectrum_summary(const BlockString& b, const ExactSpectrum& sp) {
    const auto n = static_cast<long long>(b.n());
    return {{"string", b.render()},
            {"n", b.n()},
            {"k", b.k()},
            {"spectrum", to_json(sp)},
            {"distinctCount", sp.distinct_count()},
            {"minusOneMultiplicity", sp.multiplicity(-1)},
            {"integral", is_integral(sp)},
            {"traceZero", sp.power_sum(1) == Rational(0)},
            {"frobenius", sp.power_sum(2) == Rational(n * (n - 1))}};
}

Json equiangular_json(const ExactSpectrum& sp) {
    const auto eq = equiangular_params(sp);
    return {{"lines", eq.lines},
            {"dimension", eq.dimension},
            {"cosine", eq.cosine_string()},
            {"minEigenvalue", to_string(eq.min_eigenvalue)}};
}

Json pair_json(const CospectralPair& p) {
    const auto a = exact_spectrum(p.first);
    const auto b = exact_spectrum(p.second);
    return {{"r", p.r},
            {"m", p.m},
            {"n", p.n},
            {"first", p.first.render()},
            {"second", p.second.render()},
            {"predicted", to_json(p.predicted)},
            {"cospectral", a == b},
            {"matchesPredicted", a == p.predicted && b == p.predicted},
            {"lambdaMin", p.predicted_min()},
            {"spectralRadius", p.predicted_radius()},
            {"equiangular", equiangular_json(a)}};
}

std::string families_label(const std::vector<std::pair<IntegralFamily, long long>>& fams) {
    if (fams.empty()) return "unclassified";
    std::string out;
    for (const auto& [f, r] : fams) out += (out.empty() ? "" : " ") + std::string(to_string(f)) + ":" + std::to_string(r);
    return out;
}

DegreeProfile parse_profile(const std::string& text) {
    if (text == "regular") return DegreeProfile::regular();
    if (text == "biregular") return DegreeProfile::any_biregular();
    const std::string prefix = "biregular:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string rest = text.substr(prefix.size());
        const auto comma = rest.find(',');
        require(comma != std::string::npos, ErrorCode::invalid_argument, "profile must look like biregular:a,b");
        try {
            std::size_t used_a = 0, used_b = 0;
            const int a = std::stoi(rest.substr(0, comma), &used_a);
            const int b = std::stoi(rest.substr(comma + 1), &used_b);
            require(used_a == comma && used_b == rest.size() - comma - 1, ErrorCode::invalid_argument,
                    "profile must look like biregular:a,b");
            return DegreeProfile::biregular(a, b);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::invalid_argument, "profile must look like biregular:a,b");
        }
    }
    throw Error(ErrorCode::invalid_argument, "unknown profile \"" + text + "\"");
}

void emit(const Global& g, Json result, const std::string& table) {
    std::string out;
    switch (g.format) {
    case Format::json: out = result.dump(2) + "\n"; break;
    case Format::text: out = render_text(result); break;
    case Format::csv:
        if (table == "." && result.contains("payload"))
            out = render_csv_rows(Json::array({result["payload"]}));
        else if (!table.empty() && result.contains("payload") && result["payload"].contains(table) &&
            !result["payload"][table].empty())
            out = render_csv_rows(result["payload"][table]);
        else
            out = render_csv_flat(result);
        break;
    }
    std::fwrite(out.data(), 1, out.size(), stdout);
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::parse:
    case ErrorCode::invalid_argument:
    case ErrorCode::size_cap: return 2;
    default: return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seidel spectra, families and switching classes of chain graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Global global;
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--threads", global.threads, "Worker threads for switch-search and scans (0: all cores)");
    app.add_option("--seed", global.seed, "Reserved; no command uses randomness");
    app.add_flag("--timing", global.timing, "Add elapsedMillis to the result");

    std::string s1, s2, profile = "regular", mode = "iso", family;
    long long r = 0, max_n = 0, scan_n = 0;
    bool all = false;

    auto* spectrum = app.add_subcommand("spectrum", "Exact Seidel spectrum of a block string");
    spectrum->add_option("string", s1)->required();
    auto* quotient = app.add_subcommand("quotient", "Quotient matrix, its characteristic polynomial and spectrum");
    quotient->add_option("string", s1)->required();
    auto* equi = app.add_subcommand("equiangular", "Equiangular line parameters");
    equi->add_option("string", s1)->required();
    auto* cosp = app.add_subcommand("cospectral", "Cospectral pair for odd r, or all pairs up to n");
    auto* cosp_r = cosp->add_option("--r", r, "Odd parameter r >= 1");
    auto* cosp_n = cosp->add_option("--max-n", max_n, "All pairs with n <= N");
    cosp_r->excludes(cosp_n);
    cosp->require_option(1);
    auto* integral = app.add_subcommand("integral", "Integral family member, or a scan of 0 1^m 0^m 1^(n-2m-1)");
    auto* fam_opt = integral->add_option("--family", family, "F1..F6, S (sporadic index) or B (0^s 1^2s 0^2s 1^s)");
    auto* fam_r = integral->add_option("--r", r, "Family parameter");
    auto* scan_opt = integral->add_option("--scan", scan_n, "Scan all n <= N (N <= 500)");
    fam_opt->needs(fam_r);
    fam_r->needs(fam_opt);
    scan_opt->excludes(fam_opt);
    scan_opt->excludes(fam_r);
    auto* search = app.add_subcommand("switch-search", "Exhaustive degree-profile search of the switching class");
    search->add_option("string", s1)->required();
    search->add_option("--profile", profile, "regular | biregular | biregular:a,b");
    search->add_flag("--all", all, "List every witness instead of the first");
    auto* equiv = app.add_subcommand("equivalent", "Switching equivalence of two block strings");
    equiv->add_option("first", s1)->required();
    equiv->add_option("second", s2)->required();
    equiv->add_option("--mode", mode, "iso (up to relabeling) or plain (identity labeling)")
        ->check(CLI::IsMember({"iso", "plain"}));
    auto* tables = app.add_subcommand("verify-tables", "Recompute the reference spectra tables");
    auto* edges = app.add_subcommand("edges", "Edge list of the chain graph");
    edges->add_option("string", s1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        const Json err{{"status", "error"}, {"code", "usage_error"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 2;
    }
    global.format = format == "text" ? Format::text : format == "csv" ? Format::csv : Format::json;

    const auto start = std::chrono::steady_clock::now();
    std::string command = app.get_subcommands().front()->get_name();
    Payload out;
    try {
        if (*spectrum) {
            const auto b = parse_block_string(s1);
            out.data = spectrum_summary(b, exact_spectrum(b));
        } else if (*quotient) {
            const auto b = parse_block_string(s1);
            const auto q = quotient_matrix(b);
            Json rows = Json::array();
            for (std::size_t i = 0; i < q.size(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < q.size(); ++j) row.push_back(q(i, j));
                rows.push_back(row);
            }
            out.data = {{"string", b.render()},
                        {"cellSizes", q.cell_sizes()},
                        {"matrix", rows},
                        {"charPoly", char_poly(q).to_string()},
                        {"spectrum", to_json(quotient_spectrum(b))}};
        } else if (*equi) {
            const auto b = parse_block_string(s1);
            out.data = equiangular_json(exact_spectrum(b));
            out.data["string"] = b.render();
        } else if (*cosp) {
            if (*cosp_r) {
                out.data = pair_json(generate_cospectral_pair(r));
            } else {
                require(max_n >= 0 && max_n <= 100000, ErrorCode::size_cap, "--max-n must lie in 0..100000");
                Json pairs = Json::array();
                for (long long rr = 1;; rr += 2) {
                    const auto p = generate_cospectral_pair(rr);
                    if (p.n > max_n) break;
                    pairs.push_back(pair_json(p));
                }
                out.data = {{"maxN", max_n}, {"count", pairs.size()}, {"pairs", pairs}};
                out.table = "pairs";
            }
        } else if (*integral) {
            if (*scan_opt) {
                const auto hits = scan_seidel_integral(scan_n, global.threads);
                Json rows = Json::array();
                std::size_t unclassified = 0;
                for (const auto& h : hits) {
                    unclassified += h.families.empty();
                    rows.push_back({{"family", families_label(h.families)},
                                    {"n", h.n},
                                    {"m", h.m},
                                    {"string", apex_string(h.n, h.m).render()},
                                    {"spectrum", to_json(h.spectrum)},
                                    {"verified", h.verified}});
                }
                out.data = {{"nMax", scan_n}, {"count", hits.size()}, {"unclassified", unclassified}, {"hits", rows}};
                out.table = "hits";
            } else {
                require(!family.empty(), ErrorCode::invalid_argument, "integral needs --family and --r, or --scan");
                FamilyRecord rec;
                rec.family = family;
                rec.r = r;
                if (family == "B") {
                    const auto f = balanced_integral_family(r);
                    rec.n = static_cast<long long>(f.string.n());
                    rec.m = 2 * r;
                    rec.string = f.string;
                    rec.spectrum = exact_spectrum(f.string);
                    rec.verified = rec.spectrum == f.predicted;
                } else {
                    const auto p = integral_family_params(parse_integral_family(family), r);
                    rec.n = p.n;
                    rec.m = p.m;
                    rec.string = apex_string(p.n, p.m);
                    rec.spectrum = exact_spectrum(rec.string);
                    rec.verified = is_integral(rec.spectrum) && rec.spectrum == apex_spectrum(p.n, p.m) &&
                                   is_perfect_square(apex_discriminant(p.n, p.m));
                }
                out.data = to_json(rec);
                out.table = ".";
            }
        } else if (*search) {
            const auto b = parse_block_string(s1);
            const auto g = build_chain_graph(b);
            const auto prof = parse_profile(profile);
            const auto res = search_class_by_degree_profile(g, prof, {all, global.threads});
            Json ws = Json::array();
            for (const auto& w : res.witnesses) ws.push_back(to_json(w));
            out.data = {{"string", b.render()},
                        {"profile", prof.describe()},
                        {"subsetsExamined", res.subsets_examined},
                        {"matchCount", res.match_count},
                        {"witnesses", ws}};
        } else if (*equiv) {
            const auto a = parse_block_string(s1);
            const auto b = parse_block_string(s2);
            const auto ga = build_chain_graph(a).graph();
            const auto gb = build_chain_graph(b).graph();
            require(ga.order() == gb.order(), ErrorCode::invalid_argument, "strings have different orders");
            const bool iso = mode == "iso";
            out.data = {{"first", a.render()},
                        {"second", b.render()},
                        {"mode", iso ? "switching-isomorphism" : "switching-only"},
                        {"equivalent",
                         switching_equivalent(ga, gb,
                                              iso ? EquivalenceMode::switching_isomorphism
                                                  : EquivalenceMode::switching_only)}};
            if (iso) out.data["certificates"] = {to_json(class_certificate(ga)), to_json(class_certificate(gb))};
        } else if (*tables) {
            Json rows = Json::array();
            std::size_t pass[3] = {0, 0, 0}, total[3] = {0, 0, 0};
            for (const auto& c : verify_golden_tables()) {
                const std::size_t idx = c.group == "cospectral" ? 0 : c.group == "balanced" ? 1 : 2;
                ++total[idx];
                pass[idx] += c.pass;
                Json strings = Json::array();
                for (const auto& s : c.strings) strings.push_back(s.render());
                rows.push_back({{"group", c.group},
                                {"row", c.row},
                                {"strings", strings},
                                {"printed", to_json(c.printed)},
                                {"computed", to_json(c.computed.front())},
                                {"pass", c.pass},
                                {"note", c.note}});
            }
            auto frac = [&](std::size_t i) { return std::to_string(pass[i]) + "/" + std::to_string(total[i]); };
            out.data = {{"cospectral", frac(0)}, {"balanced", frac(1)}, {"apex", frac(2)}, {"rows", rows}};
            out.ok = pass[0] == total[0] && pass[1] == total[1] && pass[2] == total[2];
            out.table = "rows";
        } else if (*edges) {
            const auto b = parse_block_string(s1);
            const auto g = build_chain_graph(b);
            Json list = Json::array();
            for (const auto& [u, v] : g.graph().edges()) list.push_back({u, v});
            out.data = {{"string", b.render()}, {"n", g.order()}, {"edgeCount", g.graph().edge_count()}, {"edges", list}};
        }
    } catch (const Error& e) {
        Json err{{"status", "error"}, {"command", command}, {"code", to_string(e.code())}, {"message", e.what()}};
        emit(global, err, "");
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        Json err{{"status", "error"}, {"command", command}, {"code", "internal_error"}, {"message", e.what()}};
        emit(global, err, "");
        return 1;
    }

    Json result{{"status", out.ok ? "ok" : "error"}, {"command", command}};
    if (!out.ok) {
        result["code"] = "verification_failure";
        result["message"] = "recomputed spectra disagree with the reference rows";
    }
    result["payload"] = std::move(out.data);
    if (global.timing) {
        result["elapsedMillis"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    emit(global, std::move(result), out.table);
    return out.ok ? 0 : 1;
}
