// alcove: root-system data, characters on special grids, fusion tables and the identity suites.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error, 3 numerical-integrity error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alcove/alcove.hpp"
#include "alcove/io.hpp"

namespace {

using namespace alcove;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kConfig = 2, kIntegrity = 3 };

struct RunConfig {
    std::string series;
    int rank = 0;
    std::vector<Integer> levels;
    std::string grid = "shifted";
    double tolerance = 1e-8;
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    std::string format = "json";
    std::string out;
    // command specific
    std::string weight;
    std::string point;
    std::vector<std::string> pair;
    std::vector<std::string> systems;
    std::vector<std::string> suites;
    std::size_t cap = kDefaultFusionCap;
};

struct IntegrityFailure : Error {
    using Error::Error;
};

CartanType system_of(const RunConfig& cfg) {
    if (cfg.series.size() != 1) throw ConfigurationError("--series must be a single letter A-G");
    CartanType t{static_cast<char>(std::toupper(static_cast<unsigned char>(cfg.series[0]))), cfg.rank};
    cartan_matrix(t);  // validates
    return t;
}

Integer single_level(const RunConfig& cfg) {
    if (cfg.levels.size() != 1) throw ConfigurationError("exactly one --level is required");
    if (cfg.levels[0] < 0) throw ConfigurationError("--level must be nonnegative");
    return cfg.levels[0];
}

RationalVector parse_vector(const std::string& text, std::size_t rank, const std::string& what) {
    RationalVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(parse_rational(item));
        } catch (const std::exception&) {
            throw ConfigurationError("cannot parse " + what + " entry '" + item + "'");
        }
    }
    if (v.size() != rank) throw ConfigurationError(what + " needs " + std::to_string(rank) + " comma-separated entries");
    return v;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw ConfigurationError("cannot open output file " + cfg.out);
    f << text;
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

bool csv(const RunConfig& cfg) { return cfg.format == "csv"; }

int cmd_roots(const RunConfig& cfg) {
    CartanType t = system_of(cfg);
    RootSystem rs(t, cartan_matrix(t));
    emit(cfg, csv(cfg) ? io::roots_csv(rs) : dump(io::roots_json(rs)));
    return kOk;
}

int cmd_faces(const RunConfig& cfg) {
    CartanType t = system_of(cfg);
    RootSystem rs(t, cartan_matrix(t));
    emit(cfg, csv(cfg) ? io::faces_csv(rs) : dump(io::faces_json(rs)));
    return kOk;
}

int cmd_char(const RunConfig& cfg) {
    CartanType t = system_of(cfg);
    WeylGroup W(RootSystem(t, cartan_matrix(t)));
    const RootSystem& rs = W.root_system();
    Weight lambda(parse_vector(cfg.weight, rs.rank(), "--weight"));
    TorusPoint x(rs, Weight(parse_vector(cfg.point, rs.rank(), "--point")));
    ComplexValue v;
    try {
        v = character(W, lambda, x);
    } catch (const SingularPointError& e) {
        throw ConfigurationError(e.what());
    }
    if (csv(cfg)) {
        emit(cfg, io::csv_row({"weight", "point", "value"}) +
                      io::csv_row({to_string(lambda), to_string(x.mu_star()), io::csv_complex(v)}));
        return kOk;
    }
    io::Json j = io::header("char");
    j["type"] = t.name();
    j["weight"] = io::weight_json(lambda);
    j["point"] = io::weight_json(x.mu_star());
    j["regular"] = is_regular(rs, x);
    j["dimension"] = weyl_dimension(rs, lambda);
    j["value"] = io::complex_json(v);
    emit(cfg, dump(j));
    return kOk;
}

int cmd_grid(const RunConfig& cfg) {
    CartanType t = system_of(cfg);
    WeylGroup W(RootSystem(t, cartan_matrix(t)));
    CharacterTable table = character_table(W, single_level(cfg), parse_grid_mode(cfg.grid));
    emit(cfg, csv(cfg) ? io::grid_csv(table) : dump(io::grid_json(W.root_system(), table)));
    return kOk;
}

int cmd_fusion(const RunConfig& cfg) {
    CartanType t = system_of(cfg);
    WeylGroup W(RootSystem(t, cartan_matrix(t)));
    const RootSystem& rs = W.root_system();
    Integer k = single_level(cfg);
    VerlindeContext ctx(W, k);
    const std::size_t n = ctx.weights().size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    FusionTable table;
    if (!cfg.pair.empty()) {
        if (cfg.pair.size() != 2) throw ConfigurationError("--pair takes two weights");
        std::size_t a = 0, b = 0;
        try {
            a = ctx.table().row_of(Weight(parse_vector(cfg.pair[0], rs.rank(), "--pair")));
            b = ctx.table().row_of(Weight(parse_vector(cfg.pair[1], rs.rank(), "--pair")));
        } catch (const DomainError& e) {
            throw ConfigurationError(e.what());
        }
        table.level = k;
        table.weights = ctx.weights();
        for (std::size_t i = 0; i < n; ++i) table.contragredient.push_back(ctx.contragredient_index(i));
        table.entries.assign(n * n * n, 0);
        Extraction e = ctx.fusion_row(a, b);
        for (std::size_t c = 0; c < n; ++c) table.entries[(a * n + b) * n + c] = e.multiplicities[c];
        table.max_residual = e.max_residual;
        pairs.emplace_back(a, b);
    } else {
        table = fusion_table(ctx, cfg.cap);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) pairs.emplace_back(a, b);
    }
    if (csv(cfg)) {
        emit(cfg, io::fusion_csv(table, pairs));
    } else {
        io::Json j = io::fusion_json(rs, table, pairs);
        if (cfg.pair.size() == 2) j.erase("invariant_violations");
        emit(cfg, dump(j));
    }
    if (!(table.max_residual < kIntegralityResidual))
        throw IntegrityFailure("fusion coefficients are not integral (residual " + format_scientific(table.max_residual) + ")");
    if (cfg.pair.empty() && !fusion_invariant_violations(table).empty())
        throw IntegrityFailure("fusion table violates its invariants");
    return kOk;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyConfig v;
    if (!cfg.series.empty()) v.systems.push_back(system_of(cfg));
    for (const auto& name : cfg.systems) {
        CartanType t = parse_cartan_type(name);
        cartan_matrix(t);
        v.systems.push_back(t);
    }
    if (v.systems.empty()) v.systems = {CartanType{'A', 1}, CartanType{'A', 2}};
    if (!cfg.levels.empty()) v.levels = cfg.levels;
    for (Integer k : v.levels)
        if (k < 1) throw ConfigurationError("verification levels must be positive");
    v.samples = cfg.samples;
    v.seed = cfg.seed;
    v.tolerance = cfg.tolerance;
    v.grid = parse_grid_mode(cfg.grid);
    for (const auto& s : cfg.suites) {
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
            throw ConfigurationError("unknown suite '" + s + "'");
        v.suites.insert(s);
    }
    auto reports = run_verification(v);
    emit(cfg, csv(cfg) ? io::reports_csv(reports) : dump(io::reports_json(reports)));
    bool ok = std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed; });
    for (const auto& r : reports)
        if (!r.passed)
            std::cerr << "FAILED " << r.name << " " << r.system << (r.level >= 0 ? " k=" + std::to_string(r.level) : "")
                      << " max_residual=" << r.max_residual << "\n";
    return ok ? kOk : kVerifyFailed;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool needs_system, bool with_level) {
    auto* s = cmd->add_option("--series", cfg.series, "Cartan series A-G");
    auto* r = cmd->add_option("--rank", cfg.rank, "rank");
    if (needs_system) {
        s->required();
        r->required();
    }
    if (with_level) cmd->add_option("--level", cfg.levels, "level k (verify: repeatable)");
    cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", cfg.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alcove: characters, grids, fusion and identity checks for compact simple Lie groups"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* roots = app.add_subcommand("roots", "root-system data");
    add_common(roots, cfg, true, false);
    auto* faces = app.add_subcommand("faces", "faces of the alcove with stabilizer and isotropy data");
    add_common(faces, cfg, true, false);
    auto* chr = app.add_subcommand("char", "one character at one torus point");
    add_common(chr, cfg, true, false);
    chr->add_option("--weight", cfg.weight, "dominant weight, fundamental-weight coordinates, e.g. 1,0")->required();
    chr->add_option("--point", cfg.point, "point of t* in weight coordinates, e.g. 1/3,1/5")->required();
    auto* grid = app.add_subcommand("grid", "character table over a special grid");
    add_common(grid, cfg, true, true);
    grid->add_option("--grid", cfg.grid, "grid family")->check(CLI::IsMember({"shifted", "full"}));
    auto* fusion = app.add_subcommand("fusion", "level-k fusion coefficients");
    add_common(fusion, cfg, true, true);
    fusion->add_option("--pair", cfg.pair, "two weights a b")->expected(2);
    fusion->add_option("--cap", cfg.cap, "maximum number of table entries");
    auto* verify = app.add_subcommand("verify", "run the identity suites");
    add_common(verify, cfg, false, true);
    verify->add_option("--system", cfg.systems, "system name such as A2 (repeatable)");
    verify->add_option("--suite", cfg.suites, "restrict to these suites (repeatable)");
    verify->add_option("--grid", cfg.grid, "grid family for the orthogonality suite")
        ->check(CLI::IsMember({"shifted", "full"}));
    verify->add_option("--tolerance", cfg.tolerance, "residual tolerance");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--samples", cfg.samples, "random points per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (!(cfg.tolerance > 0)) throw ConfigurationError("--tolerance must be positive");
        if (*roots) return cmd_roots(cfg);
        if (*faces) return cmd_faces(cfg);
        if (*chr) return cmd_char(cfg);
        if (*grid) return cmd_grid(cfg);
        if (*fusion) return cmd_fusion(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const IntegrityFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const InconsistentInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const MismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kIntegrity;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    }
    return kConfig;
}
