// Command-line front end: generate adversarial damage patterns, extract
// certified structures from damaged grids and hypercubes, verify the
// certificates with the brute-force oracles, and render pictures.
//
// Exit codes: 0 success, 1 invalid certificate (or failed random search),
// 2 usage error, 3 internal guarantee miss.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridsalvage/errors.hpp"
#include "gridsalvage/highdim.hpp"
#include "gridsalvage/hypercube.hpp"
#include "gridsalvage/json_io.hpp"
#include "gridsalvage/oracle.hpp"
#include "gridsalvage/planar.hpp"
#include "gridsalvage/render.hpp"

namespace gs = gridsalvage;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidCert = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuaranteeMiss = 3;

struct ExitWith {
    int code;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gs::InvalidInputError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gs::InvalidInputError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw gs::InvalidInputError("failed writing '" + path + "'");
}

using AnyDamage = std::variant<gs::DamageSet, gs::hypercube::HypercubeDamage>;

// Grid damage files carry an "n" field; hypercube files list bit strings.
AnyDamage load_damage(const std::string& path) {
    const std::string text = read_file(path);
    ojson probe;
    try {
        probe = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw gs::ParseError(path + ": " + e.what());
    }
    if (probe.is_object() && probe.contains("n")) {
        return gs::parse_damage_set(text);
    }
    return gs::parse_hypercube_damage(text);
}

using AnyCert = std::variant<gs::MinorModel, gs::PathDecomposition,
                             std::pair<gs::SubgridRegion, gs::GridSpec>, gs::SubcubePattern>;

AnyCert load_certificate(const std::string& path) {
    const std::string text = read_file(path);
    ojson probe;
    try {
        probe = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw gs::ParseError(path + ": " + e.what());
    }
    if (probe.is_string()) return gs::parse_subcube_pattern(text);
    if (probe.is_object()) {
        if (probe.contains("branches")) return gs::parse_minor_model(text);
        if (probe.contains("bags")) return gs::parse_path_decomposition(text);
        if (probe.contains("origin")) return gs::parse_subgrid_region(text);
    }
    throw gs::ParseError(path + ": not a recognized certificate format");
}

void emit(bool json_mode, const ojson& machine, const std::string& human) {
    if (json_mode) {
        std::cout << machine.dump() << "\n";
    } else {
        std::cout << human;
    }
}

// ---------------------------------------------------------------- bounds --

int cmd_bounds(int d, int n, int m, std::optional<int> depth, bool json_mode) {
    const gs::BoundReport report = gs::highdim::bounds(d, n, m, depth);

    ojson machine;
    machine["d"] = d;
    machine["n"] = n;
    machine["m"] = m;
    if (depth) machine["depth"] = *depth;
    machine["subgraph_side"] = report.subgraph_side;
    machine["minor_side"] = report.minor_side;
    machine["shallow_side"] = report.shallow_side;
    machine["formulas"] = report.formulas_used;

    std::ostringstream human;
    human << "guarantees for a " << d << "-dimensional side-" << n << " grid with m = " << m
          << " damaged vertices:\n";
    human << "  subgraph_side  " << report.subgraph_side << "\n";
    human << "  minor_side     " << report.minor_side << "\n";
    if (depth) {
        human << "  shallow_side   " << report.shallow_side << "  (depth " << *depth << ")\n";
    }
    human << "formulas:\n";
    for (const std::string& f : report.formulas_used) human << "  - " << f << "\n";

    human << "adversaries:\n";
    ojson adversary = ojson::object();
    if (d == 2) {
        if (m > 0 && m <= n / 2) {
            adversary["minor_block_side"] = n - m;
            human << "  - corner-diagonal damage caps minors at side " << n - m << "\n";
        } else if (m > n / 2) {
            const int k = gs::planar::diagonal_blocking_side(n, m);
            adversary["minor_block_side"] = k;
            human << "  - diagonal-residue damage caps minors at side " << k
                  << " (k = ceil(n^2/2m - 1/2))\n";
        }
        adversary["subgraph_block_side"] = report.subgraph_side;
        human << "  - lattice damage caps subgraphs at side " << report.subgraph_side << "\n";
    } else {
        const std::uint64_t slice = [&] {
            std::uint64_t acc = 1;
            for (int i = 0; i < d - 1; ++i) acc *= static_cast<std::uint64_t>(n);
            return acc;
        }();
        if (static_cast<std::uint64_t>(m) >= slice) {
            const int h = static_cast<int>(static_cast<std::uint64_t>(m) / slice);
            const int thickness = (n + h) / (h + 1);
            adversary["minor_block_side"] = thickness;
            human << "  - " << h << " full hyperplanes cap minors at slab thickness " << thickness
                  << "\n";
        }
        adversary["subgraph_block_side"] = report.subgraph_side;
        human << "  - lattice damage caps subgraphs at side " << report.subgraph_side << "\n";
    }
    machine["adversary"] = adversary;

    emit(json_mode, machine, human.str());
    return kExitOk;
}

// ------------------------------------------------------------------- gen --

struct GenOptions {
    std::string pattern;
    std::string output;
    int d = 2;
    int n = 0;
    int m = 0;
    int k = 0;
    int depth = 1;
    std::optional<std::uint64_t> target;
    int max_attempts = 10000;
    std::uint64_t seed = 0;
    bool json_mode = false;
};

int cmd_gen(const GenOptions& opt) {
    std::string content;
    std::string guarantee;
    std::uint64_t size = 0;
    ojson machine;
    machine["pattern"] = opt.pattern;
    int exit_code = kExitOk;

    if (opt.pattern == "lattice") {
        const gs::DamageSet damage = gs::planar::lattice_damage(opt.n, opt.k);
        size = damage.size();
        content = gs::serialize(damage);
        guarantee = "largest undamaged subgrid has side exactly " + std::to_string(opt.k);
    } else if (opt.pattern == "corner-diagonal") {
        const gs::DamageSet damage = gs::planar::corner_diagonal_damage(opt.n, opt.m);
        size = damage.size();
        content = gs::serialize(damage);
        guarantee = "remaining graph has pathwidth at most " + std::to_string(opt.n - opt.m) +
                    ", so no minor above that side survives";
    } else if (opt.pattern == "diag-residue") {
        const gs::DamageSet damage = gs::planar::diagonal_residue_damage(opt.n, opt.k);
        size = damage.size();
        content = gs::serialize(damage);
        guarantee = "remaining components have pathwidth at most " + std::to_string(opt.k) +
                    "; no " + std::to_string(opt.k + 1) + "x" + std::to_string(opt.k + 1) +
                    " grid minor survives";
    } else if (opt.pattern == "shallow-segments") {
        const gs::DamageSet damage = gs::planar::shallow_segments_damage(opt.n, opt.m, opt.depth);
        size = damage.size();
        content = gs::serialize(damage);
        guarantee = std::to_string(opt.m / (2 * opt.depth + 1)) + " diagonal segments of " +
                    std::to_string(2 * opt.depth + 1) +
                    " vertices target depth-" + std::to_string(opt.depth) + " minors";
    } else if (opt.pattern == "hd-lattice") {
        const gs::DamageSet damage = gs::highdim::lattice_damage(opt.d, opt.n, opt.k);
        size = damage.size();
        content = gs::serialize(damage);
        guarantee = "largest undamaged cubical subgrid has side exactly " + std::to_string(opt.k);
    } else if (opt.pattern == "hd-hyperplane") {
        const gs::DamageSet damage = gs::highdim::hyperplane_damage(opt.d, opt.n, opt.m);
        size = damage.size();
        content = gs::serialize(damage);
        std::uint64_t slice = 1;
        for (int i = 0; i < opt.d - 1; ++i) slice *= static_cast<std::uint64_t>(opt.n);
        const int h = static_cast<int>(static_cast<std::uint64_t>(opt.m) / slice);
        guarantee = "remaining components are slabs of thickness at most " +
                    std::to_string((opt.n + h) / (h + 1));
    } else if (opt.pattern == "codim2") {
        const gs::hypercube::HypercubeDamage damage = gs::hypercube::codim2_damage(opt.m);
        size = damage.size();
        content = gs::serialize(damage);
        machine["d"] = damage.dim();
        guarantee = "no (d-2)-dimensional subcube of the " + std::to_string(damage.dim()) +
                    "-cube survives";
    } else if (opt.pattern == "random-blocking") {
        const auto result = gs::hypercube::random_blocking_damage(opt.d, opt.m, opt.target,
                                                                  opt.max_attempts, opt.seed);
        size = result.damage.size();
        content = gs::serialize(result.damage);
        machine["attempts"] = result.attempts;
        machine["target_vertices"] = result.target_size;
        machine["achieved_vertices"] = result.achieved_size;
        machine["success"] = result.success;
        if (result.success) {
            guarantee = "oracle-verified: largest damage-free subcube has " +
                        std::to_string(result.achieved_size) + " < " +
                        std::to_string(result.target_size) + " vertices (attempt " +
                        std::to_string(result.attempts) + ")";
        } else {
            guarantee = "target not met within " + std::to_string(result.attempts) +
                        " attempts; best set leaves a subcube of " +
                        std::to_string(result.achieved_size) + " vertices";
            exit_code = kExitInvalidCert;
        }
    } else {
        throw gs::InvalidInputError("unknown pattern '" + opt.pattern + "'");
    }

    write_file(opt.output, content);
    machine["file"] = opt.output;
    machine["size"] = size;
    machine["guarantee"] = guarantee;
    emit(opt.json_mode, machine,
         "wrote " + opt.output + ": " + std::to_string(size) + " damaged vertices\nguarantee: " +
             guarantee + "\n");
    return exit_code;
}

// ------------------------------------------------------------------ find --

int cmd_find(const std::string& kind, const std::string& input, const std::string& output,
             std::optional<int> depth, bool json_mode) {
    const AnyDamage damage = load_damage(input);
    const bool is_grid = std::holds_alternative<gs::DamageSet>(damage);

    if ((kind == "hc-subcube" || kind == "hc-minor") == is_grid) {
        throw gs::InvalidInputError(is_grid ? "'" + kind + "' needs a hypercube damage file"
                                            : "'" + kind + "' needs a grid damage file");
    }
    if (kind == "shallow" && !depth) {
        throw gs::InvalidInputError("'shallow' needs --depth");
    }
    if (kind != "shallow" && depth) {
        throw gs::InvalidInputError("--depth only applies to --kind shallow");
    }

    ojson machine;
    machine["kind"] = kind;
    std::ostringstream human;
    std::uint64_t achieved = 0;
    std::uint64_t guarantee = 0;

    try {
        if (kind == "subgraph") {
            const auto& grid = std::get<gs::DamageSet>(damage);
            guarantee = static_cast<std::uint64_t>(gs::highdim::subgraph_side_guarantee(
                grid.spec().dim(), grid.spec().side(), static_cast<int>(grid.size())));
            const gs::SubgridRegion region = grid.spec().dim() == 2
                                                 ? gs::planar::find_undamaged_subgrid(grid)
                                                 : gs::highdim::find_subgrid(grid);
            achieved = static_cast<std::uint64_t>(region.side);
            write_file(output, gs::serialize(region, grid.spec()));
            machine["achieved_side"] = region.side;
            machine["guarantee_side"] = guarantee;
            machine["depth"] = 0;
            human << "wrote " << output << ": undamaged subgrid of side " << region.side
                  << " (guarantee " << guarantee << "), depth 0\n";
        } else if (kind == "minor" || kind == "shallow") {
            const auto& grid = std::get<gs::DamageSet>(damage);
            const int d = grid.spec().dim();
            const int n = grid.spec().side();
            const int m = static_cast<int>(grid.size());
            gs::MinorModel model;
            if (kind == "minor") {
                guarantee = static_cast<std::uint64_t>(gs::highdim::minor_side_guarantee(d, n, m));
                model = d == 2 ? gs::planar::find_grid_minor(grid) : gs::highdim::find_minor(grid);
            } else {
                guarantee = static_cast<std::uint64_t>(
                    gs::highdim::shallow_side_guarantee(d, n, m, *depth));
                model = d == 2 ? gs::planar::find_shallow_minor(grid, *depth)
                               : gs::highdim::find_shallow_minor(grid, *depth);
            }
            achieved = static_cast<std::uint64_t>(model.minor.side());
            write_file(output, gs::serialize(model));
            machine["achieved_side"] = model.minor.side();
            machine["guarantee_side"] = guarantee;
            machine["depth"] = model.depth;
            human << "wrote " << output << ": grid minor of side " << model.minor.side()
                  << " (guarantee " << guarantee << "), depth " << model.depth << "\n";
        } else if (kind == "hc-subcube") {
            const auto& cube = std::get<gs::hypercube::HypercubeDamage>(damage);
            guarantee = gs::hypercube::subcube_guarantee(cube.dim(), cube.size());
            const gs::SubcubePattern pattern = gs::hypercube::find_subgraph(cube);
            achieved = pattern.vertex_count();
            write_file(output, gs::serialize(pattern));
            machine["achieved_dimension"] = pattern.dimension();
            machine["achieved_vertices"] = achieved;
            machine["guarantee_vertices"] = guarantee;
            machine["depth"] = 0;
            human << "wrote " << output << ": subcube of dimension " << pattern.dimension() << " ("
                  << achieved << " vertices; guarantee " << guarantee << " vertices), depth 0\n";
        } else if (kind == "hc-minor") {
            const auto& cube = std::get<gs::hypercube::HypercubeDamage>(damage);
            guarantee = gs::hypercube::minor_guarantee(cube.dim(), cube.size());
            gs::MinorModel model = gs::hypercube::find_minor(cube);
            achieved = model.minor.vertex_count();
            write_file(output, gs::serialize(model));
            machine["achieved_dimension"] = model.minor.dim();
            machine["achieved_vertices"] = achieved;
            machine["guarantee_vertices"] = guarantee;
            machine["depth"] = model.depth;
            human << "wrote " << output << ": hypercube minor with " << achieved
                  << " vertices (guarantee " << guarantee << "), depth " << model.depth << "\n";
        } else {
            throw gs::InvalidInputError("unknown kind '" + kind + "'");
        }
    } catch (const gs::EmptyResultError& e) {
        if (guarantee < 1) {
            emit(json_mode,
                 ojson{{"kind", kind}, {"achieved", nullptr}, {"guarantee", 0}, {"note", e.what()}},
                 std::string("no certificate: ") + e.what() + " (guarantee 0)\n");
            return kExitOk;
        }
        std::cerr << "error: empty result although the guarantee is " << guarantee << ": "
                  << e.what() << "\n";
        return kExitGuaranteeMiss;
    }

    machine["file"] = output;
    emit(json_mode, machine, human.str());
    if (achieved < guarantee) {
        std::cerr << "error: certificate achieves " << achieved << " but the guarantee is "
                  << guarantee << "\n";
        return kExitGuaranteeMiss;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify --

int cmd_verify(const std::string& cert_path, const std::string& damage_path, bool json_mode) {
    const AnyCert cert = load_certificate(cert_path);
    const AnyDamage damage = load_damage(damage_path);

    gs::oracle::ValidationReport report;
    std::string valid_line;

    if (const auto* model = std::get_if<gs::MinorModel>(&cert)) {
        const gs::DamageSet grid = std::holds_alternative<gs::DamageSet>(damage)
                                       ? std::get<gs::DamageSet>(damage)
                                       : std::get<gs::hypercube::HypercubeDamage>(damage).to_damage_set();
        report = gs::oracle::validate_minor_model(*model, grid);
        valid_line = "VALID (side " + std::to_string(report.side) + ", depth " +
                     std::to_string(report.depth) + ")";
    } else if (const auto* pd = std::get_if<gs::PathDecomposition>(&cert)) {
        const gs::DamageSet grid = std::holds_alternative<gs::DamageSet>(damage)
                                       ? std::get<gs::DamageSet>(damage)
                                       : std::get<gs::hypercube::HypercubeDamage>(damage).to_damage_set();
        report = gs::oracle::validate_path_decomposition(gs::oracle::remaining_graph(grid), *pd);
        valid_line = "VALID (width " + std::to_string(report.width) + ")";
    } else if (const auto* region_pair = std::get_if<std::pair<gs::SubgridRegion, gs::GridSpec>>(&cert)) {
        if (!std::holds_alternative<gs::DamageSet>(damage)) {
            throw gs::InvalidInputError("a subgrid certificate needs a grid damage file");
        }
        const auto& grid = std::get<gs::DamageSet>(damage);
        const auto& [region, host] = *region_pair;
        if (host != grid.spec()) {
            report.violations.push_back("certificate host grid does not match the damage grid");
        } else {
            for (const gs::Coord& v : grid.vertices()) {
                if (region.contains(v)) {
                    report.violations.push_back("region holds the damaged vertex (" +
                                                std::to_string(v[0]) + "," + std::to_string(v[1]) +
                                                ")");
                }
            }
        }
        report.side = region.side;
        report.depth = 0;
        valid_line = "VALID (side " + std::to_string(region.side) + ", depth 0)";
    } else {
        const auto& pattern = std::get<gs::SubcubePattern>(cert);
        if (!std::holds_alternative<gs::hypercube::HypercubeDamage>(damage)) {
            throw gs::InvalidInputError("a subcube certificate needs a hypercube damage file");
        }
        const auto& cube = std::get<gs::hypercube::HypercubeDamage>(damage);
        if (pattern.length() != cube.dim()) {
            report.violations.push_back("pattern length " + std::to_string(pattern.length()) +
                                        " does not match dimension " + std::to_string(cube.dim()));
        } else {
            for (std::uint64_t mask : cube.masks()) {
                if (pattern.matches(mask)) {
                    report.violations.push_back("subcube contains the damaged vertex " +
                                                cube.bit_string(mask));
                }
            }
        }
        report.side = pattern.dimension();
        report.depth = 0;
        valid_line = "VALID (dimension " + std::to_string(pattern.dimension()) + ", depth 0)";
    }

    ojson machine;
    machine["valid"] = report.valid();
    machine["side"] = report.side;
    machine["depth"] = report.depth;
    machine["width"] = report.width;
    machine["violations"] = report.violations;

    if (report.valid()) {
        emit(json_mode, machine, valid_line + "\n");
        return kExitOk;
    }
    std::ostringstream human;
    human << "INVALID:\n";
    for (const std::string& v : report.violations) human << "  - " << v << "\n";
    emit(json_mode, machine, human.str());
    return kExitInvalidCert;
}

// ------------------------------------------------------------- pathwidth --

int cmd_pathwidth(const std::string& input, bool json_mode) {
    const AnyDamage damage = load_damage(input);
    const gs::DamageSet grid = std::holds_alternative<gs::DamageSet>(damage)
                                   ? std::get<gs::DamageSet>(damage)
                                   : std::get<gs::hypercube::HypercubeDamage>(damage).to_damage_set();
    const int pw = gs::oracle::pathwidth_exact(gs::oracle::remaining_graph(grid));
    emit(json_mode, ojson{{"pathwidth", pw}}, "pathwidth " + std::to_string(pw) + "\n");
    return kExitOk;
}

// ---------------------------------------------------------------- render --

int cmd_render(const std::string& input, const std::string& cert_path, const std::string& format,
               const std::string& output, bool json_mode) {
    const AnyDamage damage = load_damage(input);
    std::string content;

    if (std::holds_alternative<gs::hypercube::HypercubeDamage>(damage)) {
        if (!cert_path.empty()) {
            throw gs::InvalidInputError("certificate overlays are not drawn on hypercube matrices");
        }
        const auto& cube = std::get<gs::hypercube::HypercubeDamage>(damage);
        content = format == "svg" ? gs::render::svg_hypercube(cube) : gs::render::ascii_hypercube(cube);
    } else {
        const auto& grid = std::get<gs::DamageSet>(damage);
        const gs::MinorModel* model = nullptr;
        const gs::SubgridRegion* region = nullptr;
        gs::MinorModel model_storage;
        gs::SubgridRegion region_storage;
        if (!cert_path.empty()) {
            const AnyCert cert = load_certificate(cert_path);
            if (const auto* m = std::get_if<gs::MinorModel>(&cert)) {
                model_storage = *m;
                model = &model_storage;
            } else if (const auto* rp = std::get_if<std::pair<gs::SubgridRegion, gs::GridSpec>>(&cert)) {
                if (rp->second != grid.spec()) {
                    throw gs::InvalidInputError("certificate host grid does not match the damage grid");
                }
                region_storage = rp->first;
                region = &region_storage;
            } else {
                throw gs::InvalidInputError("render overlays minor or subgrid certificates only");
            }
        }
        content = format == "svg" ? gs::render::svg_grid(grid, model, region)
                                  : gs::render::ascii_grid(grid, model, region);
    }

    write_file(output, content);
    emit(json_mode, ojson{{"file", output}, {"format", format}, {"bytes", content.size()}},
         "wrote " + output + " (" + format + ", " + std::to_string(content.size()) + " bytes)\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified structures in damaged grids and hypercubes"};
    app.require_subcommand(1);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "print the guarantee values for (d, n, m)");
    int b_d = 2, b_n = 0, b_m = 0;
    std::optional<int> b_depth;
    bool b_json = false;
    bounds->add_option("--d", b_d, "grid dimension")->required();
    bounds->add_option("--n", b_n, "side length")->required();
    bounds->add_option("--m", b_m, "damaged vertex count")->required();
    bounds->add_option("--depth", b_depth, "shallow minor depth bound");
    bounds->add_flag("--json", b_json, "machine-readable output");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an adversarial damage pattern");
    GenOptions g;
    gen->add_option("--pattern", g.pattern, "pattern name")
        ->required()
        ->check(CLI::IsMember({"lattice", "corner-diagonal", "diag-residue", "shallow-segments",
                               "hd-lattice", "hd-hyperplane", "codim2", "random-blocking"}));
    gen->add_option("-o,--output", g.output, "damage file to write")->required();
    gen->add_option("--d", g.d, "dimension (hd-* and random-blocking)");
    gen->add_option("--n", g.n, "side length");
    gen->add_option("--m", g.m, "damage budget");
    gen->add_option("--k", g.k, "target side / pathwidth parameter");
    gen->add_option("--depth", g.depth, "depth parameter (shallow-segments)");
    std::uint64_t g_target = 0;
    auto* target_opt = gen->add_option("--target", g_target, "blocking target in vertices");
    gen->add_option("--max-attempts", g.max_attempts, "sampling budget (random-blocking)");
    gen->add_option("--seed", g.seed, "random seed (default 0)");
    gen->add_flag("--json", g.json_mode, "machine-readable output");

    // find
    auto* find = app.add_subcommand("find", "extract a certified structure from a damage file");
    std::string f_kind, f_input, f_output;
    std::optional<int> f_depth;
    bool f_json = false;
    find->add_option("--kind", f_kind, "what to extract")
        ->required()
        ->check(CLI::IsMember({"subgraph", "minor", "shallow", "hc-subcube", "hc-minor"}));
    find->add_option("-i,--input", f_input, "damage file")->required();
    find->add_option("-o,--output", f_output, "certificate file to write")->required();
    find->add_option("--depth", f_depth, "depth bound (kind shallow)");
    find->add_flag("--json", f_json, "machine-readable output");

    // verify
    auto* verify = app.add_subcommand("verify", "validate a certificate against a damage file");
    std::string v_cert, v_damage;
    bool v_json = false;
    verify->add_option("--cert", v_cert, "certificate file")->required();
    verify->add_option("--damage", v_damage, "damage file")->required();
    verify->add_flag("--json", v_json, "machine-readable output");

    // pathwidth
    auto* pathwidth = app.add_subcommand("pathwidth", "exact pathwidth of the remaining graph");
    std::string p_input;
    bool p_json = false;
    pathwidth->add_option("-i,--input", p_input, "damage file")->required();
    pathwidth->add_flag("--json", p_json, "machine-readable output");

    // render
    auto* render = app.add_subcommand("render", "draw a damage file, optionally with a certificate");
    std::string r_input, r_cert, r_format = "ascii", r_output;
    bool r_json = false;
    render->add_option("-i,--input", r_input, "damage file")->required();
    render->add_option("--cert", r_cert, "certificate overlay");
    render->add_option("--format", r_format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("-o,--output", r_output, "file to write")->required();
    render->add_flag("--json", r_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(b_d, b_n, b_m, b_depth, b_json);
        if (gen->parsed()) {
            if (target_opt->count() > 0) g.target = g_target;
            return cmd_gen(g);
        }
        if (find->parsed()) return cmd_find(f_kind, f_input, f_output, f_depth, f_json);
        if (verify->parsed()) return cmd_verify(v_cert, v_damage, v_json);
        if (pathwidth->parsed()) return cmd_pathwidth(p_input, p_json);
        if (render->parsed()) return cmd_render(r_input, r_cert, r_format, r_output, r_json);
    } catch (const gs::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gs::InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gs::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gs::BoundNotApplicableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gs::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitGuaranteeMiss;
    }
    return kExitUsage;
}
