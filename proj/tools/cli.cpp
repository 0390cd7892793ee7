#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <vector>

#include "intervalk/certify.hpp"
#include "intervalk/digraph.hpp"
#include "intervalk/io.hpp"
#include "intervalk/poset.hpp"

namespace intervalk::cli {

namespace {

void dump_graph(const RunConfig& cfg, const WeightedDigraph& g, const Poset& p) {
    if (!cfg.debug_graph) {
        return;
    }
    std::ofstream f(*cfg.debug_graph);
    if (!f) {
        throw Error(ErrorCode::Parse, "cannot write '" + *cfg.debug_graph + "'");
    }
    write_digraph(f, g, p);
}

int do_certify(const RunConfig& cfg, std::ostream& out) {
    const Poset p = read_poset_file(cfg.input_path);
    if (cfg.debug_graph) {
        dump_graph(cfg, build_gpk(p, cfg.k), p);
    }
    const Certificate c = certify(p, cfg.k);
    if (cfg.output_format == OutputFormat::Json) {
        auto j = certificate_to_json(c);
        j["k"] = cfg.k;
        out << j.dump(2) << '\n';
    } else {
        out << "k: " << cfg.k << '\n';
        write_certificate(out, c, {cfg.decimal});
    }
    return c.representable() ? kOk : kNegative;
}

int do_represent(const RunConfig& cfg, std::ostream& out) {
    const Poset p = read_poset_file(cfg.input_path);
    if (cfg.debug_graph) {
        dump_graph(cfg, build_gmn(p, cfg.m, cfg.n), p);
    }
    const GeneralResult r = represent_general(p, cfg.m, cfg.n);
    const auto* rep = std::get_if<IntervalRepresentation>(&r);
    if (cfg.output_format == OutputFormat::Json) {
        nlohmann::json j = rep ? representation_to_json(*rep) : nlohmann::json{{"result", "no-representation"}};
        j["m"] = cfg.m;
        j["n"] = cfg.n;
        out << j.dump(2) << '\n';
    } else {
        out << "m: " << cfg.m << "\nn: " << cfg.n << '\n';
        if (rep) {
            write_representation(out, *rep, {cfg.decimal});
        } else {
            out << "result: no-representation\n";
        }
    }
    return rep ? kOk : kNegative;
}

int do_validate(const RunConfig& cfg, std::ostream& out) {
    const Poset p = read_poset_file(cfg.input_path);
    const IntervalRepresentation rep = parse_representation(read_text_file(cfg.rep_path));
    const ValidationResult v = validate_representation(p, rep, Rational(1), Rational(cfg.k));
    if (cfg.output_format == OutputFormat::Json) {
        nlohmann::json j = {{"result", v ? "violation" : "valid"}, {"k", cfg.k}};
        if (v) {
            j["violation"] = v->message;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "k: " << cfg.k << "\nresult: " << (v ? "violation" : "valid") << '\n';
        if (v) {
            out << "violation: " << v->message << '\n';
        }
    }
    return v ? kNegative : kOk;
}

int do_oracle(const RunConfig& cfg, std::ostream& out) {
    const Poset p = read_poset_file(cfg.input_path);
    const auto f = oracle_forbidden(p, cfg.k);
    if (cfg.output_format == OutputFormat::Json) {
        nlohmann::json j = f ? forbidden_to_json(*f) : nlohmann::json{{"result", "no-forbidden-subposet"}};
        j["k"] = cfg.k;
        out << j.dump(2) << '\n';
    } else {
        out << "k: " << cfg.k << '\n';
        if (f) {
            write_forbidden(out, *f);
        } else {
            out << "result: no-forbidden-subposet\n";
        }
    }
    return f ? kNegative : kOk;
}

int do_gen(const RunConfig& cfg, std::ostream& out) {
    const Poset p = cfg.gen_kind == GenKind::ChainPlusOne ? make_chain_plus_one(cfg.gen_size)
                                                          : random_poset(cfg.gen_size, cfg.seed, cfg.orders);
    if (cfg.output_format == OutputFormat::Json) {
        out << poset_to_json(p).dump(2) << '\n';
    } else {
        write_poset(out, p);
    }
    return kOk;
}

// Empty string when certify and the direct search agree and both check out.
std::string check_one(const Poset& p, int k) {
    const Certificate c = certify(p, k);
    const auto oracle = oracle_forbidden(p, k);
    if (c.representable() == oracle.has_value()) {
        return c.representable() ? "certify found a representation but direct search found a forbidden subposet"
                                 : "certify found a forbidden subposet but direct search found none";
    }
    if (c.representable()) {
        if (auto v = validate_representation(p, c.representation(), Rational(1), Rational(k))) {
            return "representation failed validation: " + v->message;
        }
    } else if (!verify_forbidden(p, c.forbidden(), k)) {
        return "forbidden witness failed verification";
    }
    return {};
}

int do_selfcheck(const RunConfig& cfg, std::ostream& out) {
    if (cfg.max_n < 0 || cfg.max_n > kMaxEnumerationSize) {
        throw Error(ErrorCode::SizeTooLarge, "--max-n must be in [0, 6]");
    }
    if (cfg.k_max < 1) {
        throw Error(ErrorCode::InvalidK, "--k-max must be at least 1");
    }
    const auto threads = static_cast<std::size_t>(std::max(1, cfg.threads));
    std::size_t checked = 0;
    for (int size = 0; size <= cfg.max_n; ++size) {
        const std::vector<Poset> posets = enumerate_posets(size);
        // Each worker reports its first failing (poset, k); the smallest index wins.
        struct Failure {
            std::size_t index;
            int k;
            std::string why;
        };
        auto worker = [&](std::size_t begin, std::size_t step) -> std::optional<Failure> {
            for (std::size_t i = begin; i < posets.size(); i += step) {
                for (int k = 1; k <= cfg.k_max; ++k) {
                    if (std::string why = check_one(posets[i], k); !why.empty()) {
                        return Failure{i, k, why};
                    }
                }
            }
            return std::nullopt;
        };
        std::vector<std::future<std::optional<Failure>>> jobs;
        for (std::size_t t = 0; t < threads; ++t) {
            jobs.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async, worker, t, threads));
        }
        std::optional<Failure> first;
        for (auto& job : jobs) {
            if (auto f = job.get(); f && (!first || f->index < first->index)) {
                first = f;
            }
        }
        if (first) {
            out << "result: discrepancy\nk: " << first->k << "\nreason: " << first->why << '\n';
            write_poset(out, posets[first->index]);
            return kSelfcheckFailed;
        }
        checked += posets.size();
        out << "n=" << size << ": " << posets.size() << " posets x k=1.." << cfg.k_max << " agree\n";
    }
    out << "result: agree\nposets: " << checked << '\n';
    return kOk;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
        case Command::Certify: return do_certify(config, out);
        case Command::Represent: return do_represent(config, out);
        case Command::Validate: return do_validate(config, out);
        case Command::Oracle: return do_oracle(config, out);
        case Command::Gen: return do_gen(config, out);
        case Command::Selfcheck: return do_selfcheck(config, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("INTERVALK_FORMAT")) {
        const std::string value = env;
        if (value == "json") {
            cfg.output_format = OutputFormat::Json;
        } else if (value != "text" && !value.empty()) {
            err << "error: INTERVALK_FORMAT must be 'text' or 'json', got '" << value << "'\n";
            return kUsage;
        }
    }

    CLI::App app{"Interval representations with lengths in [1, k], or a forbidden subposet certificate"};
    app.require_subcommand(1);
    std::string format;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* certify_cmd = app.add_subcommand("certify", "Representation with lengths in [1, k] or a forbidden subposet");
    certify_cmd->add_option("--k", cfg.k, "Maximum interval length")->required()->check(CLI::PositiveNumber);
    certify_cmd->add_option("file", cfg.input_path, "Poset file ('-' for stdin)")->required();
    certify_cmd->add_flag("--decimal", cfg.decimal, "Also print approximate decimal endpoints");
    certify_cmd->add_option("--debug-graph", cfg.debug_graph, "Write the scaled digraph to PATH");

    auto* represent_cmd = app.add_subcommand("represent", "Representation with lengths in [m, n]");
    represent_cmd->add_option("--m", cfg.m, "Minimum interval length")->required()->check(CLI::PositiveNumber);
    represent_cmd->add_option("--n", cfg.n, "Maximum interval length")->required()->check(CLI::PositiveNumber);
    represent_cmd->add_option("file", cfg.input_path, "Poset file ('-' for stdin)")->required();
    represent_cmd->add_flag("--decimal", cfg.decimal, "Also print approximate decimal endpoints");
    represent_cmd->add_option("--debug-graph", cfg.debug_graph, "Write the scaled digraph to PATH");

    auto* validate_cmd = app.add_subcommand("validate", "Check a representation against a poset and [1, k]");
    validate_cmd->add_option("--k", cfg.k, "Maximum interval length")->required()->check(CLI::PositiveNumber);
    validate_cmd->add_option("file", cfg.input_path, "Poset file")->required();
    validate_cmd->add_option("repfile", cfg.rep_path, "Representation file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Direct search for 2+2 or (k+2)+1");
    oracle_cmd->add_option("--k", cfg.k, "Maximum interval length")->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("file", cfg.input_path, "Poset file ('-' for stdin)")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Emit a poset file");
    gen_cmd->require_subcommand(1);
    auto* gen_chain = gen_cmd->add_subcommand("chain-plus-one", "Chain of N elements plus one incomparable element");
    gen_chain->add_option("size", cfg.gen_size, "Chain length")->required()->check(CLI::PositiveNumber);
    auto* gen_random = gen_cmd->add_subcommand("random", "Intersection of random linear orders");
    gen_random->add_option("--n", cfg.gen_size, "Number of elements")->required()->check(CLI::NonNegativeNumber);
    gen_random->add_option("--seed", cfg.seed, "RNG seed");
    gen_random->add_option("--orders", cfg.orders, "Number of linear orders")->check(CLI::Range(2, 64));

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Exhaustive certify-versus-direct-search agreement");
    selfcheck_cmd->add_option("--max-n", cfg.max_n, "Largest poset size")->check(CLI::Range(0, kMaxEnumerationSize));
    selfcheck_cmd->add_option("--k-max", cfg.k_max, "Largest k")->check(CLI::PositiveNumber);
    selfcheck_cmd->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (format == "json") {
        cfg.output_format = OutputFormat::Json;
    } else if (format == "text") {
        cfg.output_format = OutputFormat::Text;
    }

    if (certify_cmd->parsed()) {
        cfg.command = Command::Certify;
    } else if (represent_cmd->parsed()) {
        cfg.command = Command::Represent;
        if (cfg.n < cfg.m) {
            err << "error: --n must be at least --m\n";
            return kUsage;
        }
    } else if (validate_cmd->parsed()) {
        cfg.command = Command::Validate;
    } else if (oracle_cmd->parsed()) {
        cfg.command = Command::Oracle;
    } else if (gen_cmd->parsed()) {
        cfg.command = Command::Gen;
        cfg.gen_kind = gen_random->parsed() ? GenKind::Random : GenKind::ChainPlusOne;
    } else {
        cfg.command = Command::Selfcheck;
    }
    return run(cfg, out, err);
}

} // namespace intervalk::cli
