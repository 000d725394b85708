#pragma once

// The hypsurf command line. run() is separate from main() so tests can drive
// it with in-memory streams.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypsurf/hypsurf.hpp"
#include "hypsurf/io.hpp"

namespace hypsurf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNumericFailure = 3;

struct CliConfig {
    std::string subcommand;
    int max_word_length = 4;
    double tol = 1e-3;
    double delta = 0.2;
    std::string output_format;  // empty: per-command default
    std::string output_path;
    std::uint64_t rng_seed = 1;

    // subcommand arguments
    std::string desc;
    std::string lengths;
    std::string sig;
    std::string plan_path;
    std::string group = "octagon";
    std::string mode = "axes";
    double separation = 4.0;
    double horocycle = kDefaultHorocycleLength;
    double internal_length = 1.0;
    std::string aut;
    int nielsen_moves = 3;
    bool check_identity = false;
    int m = 3;
    std::string report_path;
};

inline io::Json to_json(const CliConfig& c) {
    io::Json j{{"subcommand", c.subcommand},
               {"max_word_length", c.max_word_length},
               {"tol", c.tol},
               {"delta", c.delta},
               {"output_format", c.output_format},
               {"output_path", c.output_path},
               {"rng_seed", c.rng_seed}};
    if (c.subcommand == "chi" || c.subcommand == "classify" || c.subcommand == "double") j["desc"] = c.desc;
    if (c.subcommand == "pants") {
        j["lengths"] = c.lengths;
        j["horocycle"] = c.horocycle;
    }
    if (c.subcommand == "plan") {
        j["sig"] = c.sig;
        j["lengths"] = c.lengths;
        j["internal_length"] = c.internal_length;
    }
    if (c.subcommand == "realize") j["plan"] = c.plan_path;
    if (c.subcommand == "limit-set" || c.subcommand == "boundary-map") {
        j["group"] = c.group;
        j["separation"] = c.separation;
    }
    if (c.subcommand == "limit-set") j["mode"] = c.mode;
    if (c.subcommand == "boundary-map") {
        j["aut"] = c.aut;
        j["nielsen_moves"] = c.nielsen_moves;
        j["check_identity"] = c.check_identity;
        j["m"] = c.m;
        j["report"] = c.report_path;
    }
    return j;
}

namespace detail {

inline std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw Error(ErrorCode::InvalidInput, "not a number: '" + item + "'");
        out.push_back(x);
    }
    return out;
}

inline Signature parse_signature(const std::string& text) {
    Signature s;
    std::stringstream ss(text);
    std::string item;
    std::vector<std::uint32_t> v;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 7) {
            throw Error(ErrorCode::InvalidInput, "signature entries must be nonnegative integers: '" + item + "'");
        }
        v.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    if (v.size() != 4) throw Error(ErrorCode::InvalidInput, "--sig expects g,c,b,a");
    return Signature{v[0], v[1], v[2], v[3]};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Inline JSON when the argument starts with '{', otherwise a file path.
inline io::Json load_json(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return io::parse_json(arg);
    return io::parse_json(read_file(arg));
}

inline GroupRep make_group(const CliConfig& c) {
    if (c.group == "octagon") return octagon_group();
    if (c.group == "schottky") return schottky_rank2(c.separation);
    if (c.group == "cusped-torus") return cusped_torus_group();
    throw Error(ErrorCode::InvalidInput, "unknown group '" + c.group + "'");
}

inline std::string format_or(const CliConfig& c, const char* fallback) {
    const std::string f = c.output_format.empty() ? fallback : c.output_format;
    if (f != "json" && f != "csv") throw Error(ErrorCode::InvalidInput, "--format must be json or csv");
    return f;
}

inline void require_json(const CliConfig& c) {
    if (format_or(c, "json") != "json") {
        throw Error(ErrorCode::InvalidInput, "subcommand " + c.subcommand + " only supports --format json");
    }
}

inline void emit(const CliConfig& c, std::ostream& out, const std::string& text) {
    if (c.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + c.output_path + "'");
    f << text;
}

inline std::string line(const io::Json& j) { return io::dump(j) + "\n"; }

inline std::string run_subcommand(const CliConfig& c) {
    const std::string& cmd = c.subcommand;
    if (cmd == "chi") {
        const EulerCharacteristic chi = euler_characteristic(io::description_from_json(load_json(c.desc)));
        if (format_or(c, "json") == "csv") return "chi\n" + chi.to_string() + "\n";
        return line(io::Json{{"chi", io::to_json(chi)}});
    }
    if (cmd == "classify") {
        require_json(c);
        return line(io::to_json(is_standard(io::description_from_json(load_json(c.desc)))));
    }
    if (cmd == "double") {
        require_json(c);
        return line(io::to_json(double_surface(io::description_from_json(load_json(c.desc)))));
    }
    if (cmd == "thirteen") {
        if (format_or(c, "json") == "csv") {
            std::string s = "name,kind,g,c,b,a\n";
            for (const auto& e : thirteen_list()) {
                const Signature* sig = e.description.signature();
                s += std::string(e.name) + "," + io::to_json(e.description)["kind"].get<std::string>() + ",";
                s += sig ? std::to_string(sig->g) + "," + std::to_string(sig->c) + "," + std::to_string(sig->b) + "," +
                               std::to_string(sig->a)
                         : std::string(",,,");
                s += "\n";
            }
            return s;
        }
        return line(io::thirteen_json());
    }
    if (cmd == "pants") {
        require_json(c);
        const auto x = parse_reals(c.lengths);
        if (x.size() != 3) throw Error(ErrorCode::InvalidInput, "--lengths expects x1,x2,x3");
        return line(io::to_json(build_pants(CuffLengths{x[0], x[1], x[2]}, c.horocycle)));
    }
    if (cmd == "plan") {
        require_json(c);
        PlanOptions opts;
        opts.internal_length = c.internal_length;
        return line(io::to_json(plan_decomposition(parse_signature(c.sig), parse_reals(c.lengths), opts)));
    }
    if (cmd == "realize") {
        require_json(c);
        return line(io::to_json(realize(io::plan_from_json(load_json(c.plan_path)))));
    }
    if (cmd == "limit-set") {
        SampleMode mode;
        if (c.mode == "axes") mode = SampleMode::AxisEndpoints;
        else if (c.mode == "orbit") mode = SampleMode::OrbitProjection;
        else throw Error(ErrorCode::InvalidInput, "--mode must be orbit or axes");
        LimitSampleOptions opts;
        opts.delta = c.delta;
        const EndpointSample s = limit_sample(make_group(c), DiskPoint::origin(), c.max_word_length, mode, opts);
        if (format_or(c, "csv") == "csv") {
            std::ostringstream os;
            io::write_csv(os, s);
            return os.str();
        }
        return line(io::to_json(s));
    }
    if (cmd == "boundary-map") {
        const GroupRep rep = make_group(c);
        std::mt19937_64 rng(c.rng_seed);
        const FreeAutomorphism phi = c.aut == "random"
                                         ? random_nielsen_automorphism(rep.rank(), c.nielsen_moves, rng)
                                         : FreeAutomorphism::parse(c.aut, rep.rank());
        const CircleMapSample s = induced_boundary_sample(rep, phi, c.max_word_length);
        const OrderVerdict order = order_check(s, rep, phi);
        io::Json report{{"group", rep.label},
                        {"automorphism", phi.to_string()},
                        {"order", std::string(to_string(order.orientation))},
                        {"refined_triples", order.refined}};
        if (c.check_identity) report["identity"] = io::to_json(is_boundary_identity(s, rep, c.m, c.tol));
        if (!c.report_path.empty()) {
            std::ofstream f(c.report_path, std::ios::binary);
            if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + c.report_path + "'");
            f << line(report);
        }
        if (format_or(c, "csv") == "csv") {
            std::ostringstream os;
            io::write_csv(os, s);
            if (c.report_path.empty()) os << "# " << io::dump(report) << "\n";
            return os.str();
        }
        report["sample"] = io::to_json(s);
        return line(report);
    }
    throw Error(ErrorCode::InvalidInput, "unknown subcommand '" + cmd + "'");
}

inline void report_error(std::ostream& err, const std::string& code, const std::string& message) {
    err << io::dump(io::Json{{"error", code}, {"message", message}}) << "\n";
}

}  // namespace detail

/// Parses args (without the program name), runs the subcommand and returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig c;
    bool echo = false;
    CLI::App app{"Hyperbolic surfaces: topology, pants, limit sets and boundary maps", "hypsurf"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--n", c.max_word_length, "maximum word length")->check(CLI::Range(1, 64));
    app.add_option("--tol", c.tol, "tolerance for identity detection (radians)");
    app.add_option("--delta", c.delta, "orbit points kept when |z| > 1 - delta");
    app.add_option("--format", c.output_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", c.output_path, "write the result here instead of stdout");
    app.add_option("--seed", c.rng_seed, "seed for random automorphisms");
    app.add_flag("--echo-config", echo, "print the effective configuration as JSON and exit");

    auto desc_cmd = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("desc", c.desc, "surface description: JSON file or inline JSON")->required();
        s->fallthrough();
        return s;
    };
    desc_cmd("chi", "Euler characteristic");
    desc_cmd("classify", "standard / nonstandard verdict");
    desc_cmd("double", "double along the boundary");
    app.add_subcommand("thirteen", "the thirteen nonstandard surfaces")->fallthrough();
    auto* pants = app.add_subcommand("pants", "generalized pair of pants from cuff lengths")->fallthrough();
    pants->add_option("--lengths", c.lengths, "x1,x2,x3 (0 is a cusp)")->required();
    pants->add_option("--horocycle", c.horocycle, "cusp cut-off horocycle length");
    auto* plan = app.add_subcommand("plan", "pants decomposition plan")->fallthrough();
    plan->add_option("--sig", c.sig, "g,c,b,a")->required();
    plan->add_option("--lengths", c.lengths, "boundary lengths, comma separated");
    plan->add_option("--internal-length", c.internal_length, "length of every internal curve");
    auto* real = app.add_subcommand("realize", "check a plan and sum its area")->fallthrough();
    real->add_option("plan", c.plan_path, "plan JSON file or inline JSON")->required();
    auto* lim = app.add_subcommand("limit-set", "sample the limit set")->fallthrough();
    lim->add_option("--group", c.group)->check(CLI::IsMember({"octagon", "schottky", "cusped-torus"}));
    lim->add_option("--mode", c.mode)->check(CLI::IsMember({"orbit", "axes"}));
    lim->add_option("--separation", c.separation, "Schottky translation length");
    auto* bm = app.add_subcommand("boundary-map", "sample the induced boundary map")->fallthrough();
    bm->add_option("--group", c.group)->check(CLI::IsMember({"octagon", "schottky", "cusped-torus"}));
    bm->add_option("--separation", c.separation, "Schottky translation length");
    bm->add_option("--aut", c.aut, "\"A=AB,B=B\", \"id\", \"inner:w\" or \"random\"")->required();
    bm->add_option("--nielsen-moves", c.nielsen_moves, "transvections in a random automorphism")
        ->check(CLI::Range(0, 64));
    bm->add_flag("--check-identity", c.check_identity, "search inner corrections");
    bm->add_option("--m", c.m, "inner-correction search depth")->check(CLI::Range(0, 8));
    bm->add_option("--report", c.report_path, "write the verdict JSON here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        detail::report_error(err, "InvalidInput", e.what());
        return kExitInvalidInput;
    }
    c.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (echo) {
            out << detail::line(to_json(c));
            return kExitOk;
        }
        detail::emit(c, out, detail::run_subcommand(c));
        return kExitOk;
    } catch (const Error& e) {
        detail::report_error(err, std::string(to_string(e.code())), e.what());
        return e.category() == ErrorCategory::NumericFailure ? kExitNumericFailure : kExitInvalidInput;
    } catch (const std::exception& e) {
        detail::report_error(err, "NumericFailure", e.what());
        return kExitNumericFailure;
    }
}

}  // namespace hypsurf::cli
