// synpath: command-line front end. Results go to stdout (or --output),
// summaries and diagnostics to stderr.

#include "synpath/diagram.hpp"
#include "synpath/distributions.hpp"
#include "synpath/flow.hpp"
#include "synpath/realizability.hpp"
#include "synpath/sampling.hpp"
#include "synpath/serialize.hpp"
#include "synpath/verify.hpp"
#include "synpath/witness.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <numbers>

using namespace synpath;

namespace {

struct Common {
    std::string family = "kn";
    int n = 0;
    std::string output;
};

void add_common(CLI::App* cmd, Common& c, bool need_n) {
    cmd->add_option("--family", c.family, "kn or knn")->check(CLI::IsMember({"kn", "knn"}));
    auto* opt = cmd->add_option("--n", c.n, "N (vertices of K_N, party size of K_{N,N})");
    if (need_n) opt->required();
    cmd->add_option("-o,--output", c.output, "write the result here instead of stdout");
}

GraphSpec spec_of(const Common& c) {
    if (c.n < 1) throw InvalidInput("--n must be positive");
    return parse_family(c.family) == Family::CompleteN ? GraphSpec::complete(c.n) : GraphSpec::bipartite(c.n);
}

void emit(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + c.output);
    out << text;
}

// Infers N from the number of coordinates when --n is absent.
GraphSpec spec_for_values(const Common& c, const std::string& csv) {
    std::size_t count = 1 + static_cast<std::size_t>(std::count(csv.begin(), csv.end(), ','));
    if (c.n > 0) return spec_of(c);
    Common tmp = c;
    tmp.n = static_cast<int>(parse_family(c.family) == Family::CompleteN ? count : count / 2);
    return spec_of(tmp);
}

std::string row_text(const std::vector<BigInt>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Paths towards synchronization on K_N and K_{N,N}"};
    app.require_subcommand(1);

    // simulate
    Common sim;
    double eps = 1e-3, sigma = 1.0, step = 0.0;
    std::string flow = "laplacian", xs;
    std::uint64_t seed = 1;
    bool balanced = false;
    auto* simulate = app.add_subcommand("simulate", "integrate a flow and report its synchronization events");
    add_common(simulate, sim, false);
    simulate->add_option("--eps", eps, "synchronization threshold")->check(CLI::PositiveNumber);
    simulate->add_option("--flow", flow, "laplacian or kuramoto")->check(CLI::IsMember({"laplacian", "kuramoto"}));
    simulate->add_option("--sigma", sigma, "Kuramoto coupling")->check(CLI::PositiveNumber);
    simulate->add_option("--step", step, "Kuramoto RK4 step (0: automatic)");
    simulate->add_option("--x", xs, "initial condition, comma separated");
    simulate->add_option("--seed", seed, "seed for the sampled initial condition");
    simulate->add_flag("--balanced", balanced, "K_{N,N}: sample with equal party means");

    // encode
    Common enc;
    std::string enc_x, enc_eps = "1";
    auto* encode = app.add_subcommand("encode", "code of the eps-synchronized subnetwork of a configuration");
    add_common(encode, enc, false);
    encode->add_option("--x", enc_x, "configuration, comma separated (decimals or p/q)")->required();
    encode->add_option("--eps", enc_eps, "threshold (decimal or p/q)");

    // diagram
    Common dia;
    std::string format = "dot";
    std::size_t max_codes = kMaxDiagramCodes;
    auto* diagram = app.add_subcommand("diagram", "build and export the transition diagram");
    add_common(diagram, dia, true);
    diagram->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    diagram->add_option("--max-codes", max_codes, "size guard");

    // count
    Common cnt;
    bool cnt_balanced = false, cnt_json = false;
    int max_realizable = 6;
    auto* count = app.add_subcommand("count", "admissible and realizable path counts with bounds");
    add_common(count, cnt, true);
    count->add_flag("--balanced", cnt_balanced, "K_{N,N}: balanced initial conditions only");
    count->add_flag("--json", cnt_json, "JSON report");
    count->add_option("--max-realizable-n", max_realizable, "largest N for the realizable-path search");

    // dist
    Common dst;
    int bins = -1;
    std::string csv_path;
    bool dist_json = false;
    auto* dist = app.add_subcommand("dist", "path-length distribution F(l) and summary statistics");
    add_common(dist, dst, true);
    dist->add_option("--bins", bins, "density CSV with this many bins (0: one per length)");
    dist->add_option("--csv", csv_path, "write the density CSV to this file");
    dist->add_flag("--json", dist_json, "print the distribution as JSON");

    // witness
    Common wit;
    std::string code_text, wit_eps = "1";
    auto* witness_cmd = app.add_subcommand("witness", "initial condition realizing a code");
    add_common(witness_cmd, wit, false);
    witness_cmd->add_option("--code", code_text, "code, e.g. 2,2,4,4 or 1,2|1,2")->required();
    witness_cmd->add_option("--eps", wit_eps, "threshold (decimal or p/q)");

    // verify
    bool quick = false;
    std::string golden, report_path;
    std::vector<int> only;
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_flag("--quick", quick, "skip the slow N=6 Golomb count and distributions beyond N=8");
    verify->add_option("--golden-dir", golden, "golden table directory");
    verify->add_option("--report", report_path, "write the JSON report here");
    verify->add_option("--criterion", only, "run only these checks")->check(CLI::Range(1, kCriterionCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*simulate) {
            Configuration x;
            if (!xs.empty()) {
                auto spec = spec_for_values(sim, xs);
                x = to_double(parse_configuration(spec, xs));
            } else {
                auto spec = spec_of(sim);
                SplitMix64 rng(seed);
                SampleOptions opts;
                opts.balanced = balanced;
                if (flow == "kuramoto") opts.radius = std::numbers::pi / 8;
                x = sample_configuration(spec, rng, opts);
            }
            SyncSequence seq;
            if (flow == "kuramoto") {
                KuramotoParams p;
                p.sigma = sigma;
                p.step = step;
                seq = kuramoto_sequence(x, p, eps);
            } else {
                seq = laplacian_sequence(x, eps);
            }
            Json j = to_json(seq);
            j["initial_condition"] = to_json(x)["values"];
            emit(sim, j.dump(2) + "\n");
            std::cerr << seq.events.size() << " events, final code " << to_text(seq.final_code()) << "\n";
        } else if (*encode) {
            auto spec = spec_for_values(enc, enc_x);
            auto x = parse_configuration(spec, enc_x);
            Rational e = parse_rational(enc_eps);
            SyncCode code = spec.family == Family::CompleteN ? SyncCode(encode_kn(x, e)) : SyncCode(encode_knn(x, e));
            Json j;
            j["code"] = to_text(code);
            j["edges"] = Json::parse(edge_set_json(decode(code)));
            emit(enc, j.dump() + "\n");
        } else if (*diagram) {
            auto d = build_diagram(spec_of(dia), max_codes);
            emit(dia, format == "dot" ? export_dot(d) : export_json(d) + "\n");
            std::cerr << d.vertices.size() << " vertices, " << d.arrows.size() << " arrows, " << d.starts.size()
                      << " starts";
            if (d.spec.family == Family::BipartiteNN) {
                int flagged = 0;
                for (const auto& s : start_codes_knn(d.spec.n)) flagged += !s.balanced_compatible;
                std::cerr << " (" << flagged << " balanced-incompatible)";
            }
            std::cerr << "\n";
        } else if (*count) {
            auto spec = spec_of(cnt);
            const int N = spec.n;
            Json j;
            j["family"] = std::string(family_name(spec.family));
            j["n"] = N;
            auto d = build_diagram(spec);
            BigInt admissible = 0;
            for (int s : d.starts) admissible += count_admissible_paths(d, d.vertices[s]);
            j["admissible"] = to_string(admissible);
            if (spec.family == Family::CompleteN) {
                if (N > max_realizable)
                    throw ResourceLimit("realizable path search limited to N <= " + std::to_string(max_realizable) +
                                        " (raise --max-realizable-n)");
                j["realizable"] = to_string(count_realizable_paths_kn(N));
                if (N >= 2) {
                    auto b = golomb_bounds(N);
                    j["lower_bound"] = to_string(b.lower);
                    j["thrall_bound"] = to_string(b.thrall);
                    j["factorial_bound"] = to_string(b.factorial);
                }
            } else {
                j["orderings"] = enumerate_realizable_orderings_knn(N, cnt_balanced).size();
                j["balanced"] = cnt_balanced;
                try {
                    auto b = knn_path_upper_bound(N);
                    j["upper_bound"] = to_string(b.value);
                    if (b.degenerate) std::cerr << "warning: the path bound degenerates to 0 at N=1\n";
                } catch (const ResourceLimit& e) {
                    std::cerr << "note: " << e.what() << "\n";
                }
            }
            if (cnt_json) {
                emit(cnt, j.dump(2) + "\n");
            } else {
                std::string s;
                for (auto it = j.begin(); it != j.end(); ++it)
                    s += it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
                emit(cnt, s);
            }
        } else if (*dist) {
            auto spec = spec_of(dst);
            auto d = distribution_for(spec.family, spec.n);
            auto s = summary(d);
            std::string text;
            if (dist_json) {
                text = distribution_json(d) + "\n";
            } else {
                text = "F = " + row_text(d.counts) + "\n";
                text += "total = " + to_string(d.total()) + "\n";
                std::string am;
                for (int a : s.argmax) am += (am.empty() ? "" : ",") + std::to_string(a);
                text += "argmax = " + am + " (ratio " + to_decimal(s.argmax_ratio, 6) + ")\n";
                text += "mean = " + to_string(s.mean) + " (ratio " + to_decimal(s.mean_ratio, 6) + ")\n";
            }
            emit(dst, text);
            if (bins >= 0 || !csv_path.empty()) {
                std::string csv = density_csv(d, std::max(bins, 0));
                if (csv_path.empty()) std::cout << csv;
                else {
                    std::ofstream out(csv_path, std::ios::binary);
                    if (!out) throw InvalidInput("cannot write " + csv_path);
                    out << csv;
                }
            }
        } else if (*witness_cmd) {
            SyncCode code = parse_code(parse_family(wit.family), code_text);
            if (wit.n > 0 && synpath::spec_of(code).n != wit.n) throw InvalidInput("--n does not match the code length");
            Rational e = parse_rational(wit_eps);
            auto x = witness(code, e);
            SyncCode back = x.spec.family == Family::CompleteN ? SyncCode(encode_kn(x, e)) : SyncCode(encode_knn(x, e));
            if (back != code) throw Error("witness does not reproduce the code");
            Json j = to_json(x);
            j["eps"] = to_string(e);
            j["code"] = to_text(code);
            emit(wit, j.dump() + "\n");
            std::cerr << "roundtrip ok: encode(witness) = " << to_text(back) << "\n";
        } else if (*verify) {
            VerifyOptions opts;
            opts.quick = quick;
            opts.golden_dir = golden;
            std::vector<CheckResult> results;
            if (only.empty()) results = run_verify(opts);
            else
                for (int id : only) results.push_back(run_check(id, opts));
            for (const auto& r : results)
                std::cout << "[" << status_name(r.status) << "] " << r.id << " " << r.name << ": " << r.detail << "\n";
            if (!report_path.empty()) {
                std::ofstream out(report_path, std::ios::binary);
                if (!out) throw InvalidInput("cannot write " + report_path);
                out << report_json(results, quick).dump(2) << "\n";
            }
            return all_passed(results) ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.exit_code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
