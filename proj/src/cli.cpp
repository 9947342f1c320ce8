#include "xorsig/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "xorsig/error.hpp"
#include "xorsig/flashlight.hpp"
#include "xorsig/gf2.hpp"
#include "xorsig/hardness.hpp"
#include "xorsig/maxgen.hpp"
#include "xorsig/oracle.hpp"
#include "xorsig/random.hpp"
#include "xorsig/rb2xor.hpp"

namespace xorsig::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Raised when a produced solution fails its own consistency check.
struct InvariantBreach : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string format = "text";
    std::size_t limit = 0;  // 0: unlimited
    bool count_only = false;
    bool witness = false;
    bool stats = false;
};

// Streams solutions in the selected format, numbering them and timing the
// gap since the previous one.
class Emitter {
public:
    Emitter(const OutputOptions& opts, std::ostream& out) : opts_(opts), out_(out), last_(Clock::now()) {}

    // Returns false once the limit is reached.
    bool emit(const Signature& sig, const Assignment* witness) {
        auto now = Clock::now();
        auto delay = std::chrono::duration_cast<std::chrono::microseconds>(now - last_).count();
        last_ = now;
        ++count_;
        if (!opts_.count_only) {
            if (opts_.format == "ndjson") {
                nlohmann::json j;
                j["seq"] = count_;
                j["signature"] = sig.to_string();
                if (witness && opts_.witness) j["witness"] = witness->to_string();
                j["delay_us"] = delay;
                out_ << j.dump() << '\n';
            } else {
                out_ << sig.to_string() << '\n';
            }
            out_.flush();
        }
        return opts_.limit == 0 || count_ < opts_.limit;
    }

    void finish() {
        if (opts_.count_only) out_ << count_ << '\n';
        out_.flush();
    }

    std::size_t count() const { return count_; }

private:
    const OutputOptions& opts_;
    std::ostream& out_;
    Clock::time_point last_;
    std::size_t count_ = 0;
};

XorCnf load_xnf(const std::string& path) {
    if (path == "-") return parse_xnf(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_xnf(in);
}

hardness::Cnf load_dimacs(const std::string& path) {
    if (path == "-") return hardness::parse_dimacs(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return hardness::parse_dimacs(in);
}

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "ndjson"}));
    cmd->add_option("--limit", o.limit, "Stop after N solutions (0: no limit)");
    cmd->add_flag("--count-only", o.count_only, "Print only the number of solutions");
    cmd->add_flag("--stats", o.stats, "Print engine instrumentation to stderr");
}

int run_all(const std::string& path, const OutputOptions& opts, std::ostream& out, std::ostream& err) {
    XorCnf phi = load_xnf(path);
    Emitter emitter(opts, out);
    FlashlightStats st = enumerate_all(phi, [&](const Signature& sig) {
        if (!opts.witness) return emitter.emit(sig, nullptr);
        auto alpha = solve(restrict(phi, sig.one(), sig.zero()));
        if (!alpha || evaluate(phi, *alpha) != sig) throw InvariantBreach("no witness for emitted signature");
        return emitter.emit(sig, &*alpha);
    });
    emitter.finish();
    if (opts.stats) {
        err << "emitted=" << st.emitted << " oracle_calls=" << st.oracle_calls << " max_depth=" << st.max_depth
            << '\n';
    }
    return kOk;
}

int run_extreme(bool maximal, const std::string& path, const std::string& engine, std::size_t rank_cap,
                const OutputOptions& opts, std::ostream& out, std::ostream& err) {
    XorCnf phi = load_xnf(path);
    Emitter emitter(opts, out);
    auto sink = [&](const MaxSigRecord& rec) {
        if (evaluate(phi, rec.witness) != rec.signature) throw InvariantBreach("witness does not produce signature");
        return emitter.emit(rec.signature, &rec.witness);
    };

    if (engine == "exact" || engine == "supergraph") {
        MaxEngine e = engine == "exact" ? MaxEngine::Exact : MaxEngine::Supergraph;
        ExactOptions eo{rank_cap};
        EngineStats st = maximal ? enumerate_max(phi, sink, e, eo) : enumerate_min(phi, sink, e, eo);
        if (opts.stats) err << "emitted=" << st.emitted << " gc_calls=" << st.gc_calls << '\n';
    } else if (engine == "proximity") {
        rb::ProximityStats st = maximal ? rb::enumerate_max_2xor(phi, sink) : rb::enumerate_min_2xor(phi, sink);
        if (opts.stats) {
            err << "emitted=" << st.emitted << " gc_calls=" << st.gc_calls
                << " max_gc_between_outputs=" << st.max_gc_between_outputs << '\n';
        }
    } else {  // brute
        auto sigs = maximal ? oracle::brute_max(phi) : oracle::brute_min(phi);
        for (const auto& s : sigs) {
            auto alpha = solve(restrict(phi, s.one(), s.zero()));
            if (!alpha) throw InvariantBreach("brute-force signature without witness");
            if (!sink({s, *alpha})) break;
        }
    }
    emitter.finish();
    return kOk;
}

int run_check(const std::string& path, const std::string& bits, std::ostream& out, std::ostream& err) {
    XorCnf phi = load_xnf(path);
    if (bits.size() != phi.num_clauses() || bits.find_first_not_of("01") != std::string::npos) {
        err << "error: --sig must be a string of " << phi.num_clauses() << " characters 0/1\n";
        return kUsage;
    }
    Signature sig = Signature::from_string(bits);
    out << "signature=" << (is_signature(phi, sig) ? "true" : "false")
        << " maximal=" << (is_maximal(phi, sig) ? "true" : "false")
        << " minimal=" << (is_minimal(phi, sig) ? "true" : "false") << '\n';
    return kOk;
}

// Clauses sharing a variable belong to the same component.
std::size_t clause_components(const XorCnf& phi) {
    std::vector<std::size_t> parent(phi.num_clauses());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<Var, std::size_t> owner;
    for (std::size_t j = 0; j < phi.num_clauses(); ++j) {
        for (Var v : phi[j].vars) {
            auto [it, fresh] = owner.emplace(v, j);
            if (!fresh) parent[find(j)] = find(it->second);
        }
    }
    std::size_t count = 0;
    for (std::size_t j = 0; j < parent.size(); ++j) count += find(j) == j;
    return count;
}

int run_stats(const std::string& path, std::ostream& out) {
    XorCnf phi = load_xnf(path);
    out << "n=" << phi.num_vars() << " m=" << phi.num_clauses() << " rank=" << signature_span(phi).rank()
        << " components=" << clause_components(phi) << " max_width=" << phi.max_width()
        << " satisfiable=" << (satisfiable(phi) ? "true" : "false") << '\n';
    return kOk;
}

int run_reduce(const std::string& path, const std::string& format, bool decide, std::ostream& out) {
    hardness::Cnf cnf = load_dimacs(path);
    for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
        if (cnf.clauses[j].size() > 3) throw ParseError(0, "clause " + std::to_string(j + 1) + " has more than 3 literals");
    }
    auto inst = hardness::reduce_3sat(cnf);
    if (format == "xnf") {
        emit_xnf(out, hardness::as_disequalities(inst.graph));
    } else {
        hardness::emit_edge_dump(out, inst);
    }
    if (decide) {
        auto h = hardness::brute_extension(inst.graph, inst.must_have, inst.must_avoid);
        if (h) {
            out << "c witness " << h->to_string() << "\nc assignment " << hardness::decode_witness(inst, *h).to_string()
                << '\n';
        } else {
            out << "c witness none\n";
        }
    }
    return kOk;
}

struct BenchOptions {
    std::vector<std::uint64_t> seeds{1};
    std::size_t vars = 10;
    std::size_t clauses = 16;
    std::size_t width = 3;
    std::size_t reps = 3;
};

int run_bench(const BenchOptions& b, std::ostream& out) {
    for (auto seed : b.seeds) {
        gen::Rng rng(seed);
        XorCnf phi = gen::random_xor_cnf(rng, b.vars, b.clauses, b.width);
        auto time = [&](const std::string& name, auto&& body) {
            double best = 1e300;
            std::size_t count = 0;
            for (std::size_t r = 0; r < std::max<std::size_t>(b.reps, 1); ++r) {
                auto t0 = Clock::now();
                count = body();
                best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
            }
            out << "seed=" << seed << " engine=" << name << " count=" << count << " best_ms=" << best << '\n';
        };
        auto ignore = [](const auto&) { return true; };
        time("all", [&] { return enumerate_all(phi, ignore).emitted; });
        time("max-exact", [&] { return enumerate_max_exact(phi, ignore).emitted; });
        time("max-supergraph", [&] { return enumerate_max_supergraph(phi, ignore).emitted; });
        if (phi.max_width() <= 2) time("max-proximity", [&] { return rb::enumerate_max_2xor(phi, ignore).emitted; });
        if (phi.num_vars() <= oracle::kDefaultVarCap) time("max-brute", [&] { return oracle::brute_max(phi).size(); });
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate all, minimal and maximal signatures of XOR-CNF formulas", "xorsig"};
    app.require_subcommand(1);

    OutputOptions all_opts;
    std::string all_path;
    auto* all = app.add_subcommand("all", "All signatures (flashlight search)");
    all->add_option("file", all_path, "XNF formula, - for stdin")->required();
    add_output_flags(all, all_opts);
    all->add_flag("--witness", all_opts.witness, "Include a producing assignment (ndjson)");

    struct ExtremeArgs {
        OutputOptions opts;
        std::string path;
        std::string engine = "exact";
        std::size_t rank_cap = kDefaultRankCap;
        bool no_witness = false;
    };
    ExtremeArgs max_args, min_args;
    auto add_extreme = [&](const char* name, const char* help, ExtremeArgs& a) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("file", a.path, "XNF formula, - for stdin")->required();
        cmd->add_option("--engine", a.engine, "exact | supergraph | proximity | brute")
            ->check(CLI::IsMember({"exact", "supergraph", "proximity", "brute"}));
        cmd->add_option("--rank-cap", a.rank_cap,
                        "Rank cap: signature space for exact, largest maximal subsystem for supergraph");
        cmd->add_flag("--no-witness", a.no_witness, "Omit witnesses from ndjson output");
        add_output_flags(cmd, a.opts);
        return cmd;
    };
    auto* max = add_extreme("max", "Maximal signatures", max_args);
    auto* min = add_extreme("min", "Minimal signatures", min_args);

    std::string check_path, check_sig;
    auto* check = app.add_subcommand("check", "Signature / maximality / minimality verdicts");
    check->add_option("file", check_path, "XNF formula")->required();
    check->add_option("--sig", check_sig, "Bit string, clause order")->required();

    std::string reduce_path, reduce_format = "dump";
    bool reduce_decide = false;
    auto* reduce = app.add_subcommand("reduce3sat", "Build the extension instance of a 3-SAT formula");
    reduce->add_option("cnf", reduce_path, "DIMACS CNF, - for stdin")->required();
    reduce->add_option("--format", reduce_format, "dump | xnf")->check(CLI::IsMember({"dump", "xnf"}));
    reduce->add_flag("--decide", reduce_decide, "Search for an extension witness and decode it");

    std::string stats_path;
    auto* stats = app.add_subcommand("stats", "Formula statistics");
    stats->add_option("file", stats_path, "XNF formula")->required();

    BenchOptions bench_opts;
    auto* bench = app.add_subcommand("bench", "Time every engine on seeded random formulas");
    bench->add_option("--seeds", bench_opts.seeds, "Instance seeds")->delimiter(',');
    bench->add_option("--vars", bench_opts.vars);
    bench->add_option("--clauses", bench_opts.clauses);
    bench->add_option("--width", bench_opts.width, "Largest clause width");
    bench->add_option("--reps", bench_opts.reps);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*all) return run_all(all_path, all_opts, out, err);
        if (*max || *min) {
            bool is_max = static_cast<bool>(*max);
            ExtremeArgs& a = is_max ? max_args : min_args;
            a.opts.witness = !a.no_witness;
            return run_extreme(is_max, a.path, a.engine, a.rank_cap, a.opts, out, err);
        }
        if (*check) return run_check(check_path, check_sig, out, err);
        if (*reduce) return run_reduce(reduce_path, reduce_format, reduce_decide, out);
        if (*stats) return run_stats(stats_path, out);
        if (*bench) return run_bench(bench_opts, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const EngineRefusal& e) {
        err << "refused: " << e.what() << '\n';
        return kEngineRefusal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsage;
}

}  // namespace xorsig::cli
