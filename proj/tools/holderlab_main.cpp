// holderlab: exact classification of self-similar fractals up to Lipschitz
// and strict Holder equivalence, with certified witnesses, a bounded-depth
// total-disconnectedness certifier, and PBM rendering.
//
// Subcommands: classify, check-td, verify, render, dimension. Every stdout
// payload is a single JSON document; diagnostics go to stderr. Exit codes:
// 0 success (any verdict), 1 certificate violation in verify, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "holderlab/holderlab.hpp"

namespace hl = holderlab;

namespace {

constexpr std::uint64_t kDefaultMaxPairs = 10000000;

std::uint64_t pair_budget() {
    if (const char* env = std::getenv("HOLDER_LAB_MAX_PAIRS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed HOLDER_LAB_MAX_PAIRS\n";
    }
    return kDefaultMaxPairs;
}

// Largest depth whose pair count stays inside the budget.
std::uint32_t default_verify_depth(std::int64_t alphabet, std::uint64_t budget) {
    std::uint64_t points = 1;
    std::uint32_t depth = 0;
    for (;;) {
        if (points > budget / static_cast<std::uint64_t>(alphabet)) break;
        std::uint64_t next = points * static_cast<std::uint64_t>(alphabet);
        if (next * (next - 1) / 2 > budget) break;
        points = next;
        ++depth;
    }
    return depth;
}

struct CubeWithStatus {
    hl::FractalCube cube;
    hl::TDStatus status;
};

CubeWithStatus resolve_cube(const hl::ManifestInstance& inst, bool assume_td) {
    const hl::FractalCube& cube = *inst.cube;
    if (assume_td) return {cube, hl::TDStatus{}};
    return {cube, hl::check_total_disconnectedness(cube)};
}

hl::Verdict classify_pair(const hl::InstanceManifest& manifest, const std::string& id_a,
                          const std::string& id_b, hl::ClassifyMode mode, bool assume_td) {
    const auto& a = manifest.find(id_a);
    const auto& b = manifest.find(id_b);
    if (a.kind != b.kind)
        throw std::invalid_argument("classify: instance kinds are not comparable (" + id_a +
                                    " vs " + id_b + ")");
    if (a.kind == hl::ManifestInstance::Kind::fractal_cube) {
        auto ca = resolve_cube(a, assume_td);
        auto cb = resolve_cube(b, assume_td);
        return mode == hl::ClassifyMode::lipschitz
                   ? hl::classify_cubes_lipschitz(ca.cube, ca.status, cb.cube, cb.status,
                                                  assume_td)
                   : hl::classify_cubes_holder(ca.cube, ca.status, cb.cube, cb.status, assume_td);
    }
    return hl::classify_self_similar(a.ratios, b.ratios, mode);
}

int run(int argc, char** argv) {
    CLI::App app{
        "holderlab: Lipschitz / strict Holder classification of self-similar fractals.\n"
        "self_similar instances are classified purely through their contraction-ratio\n"
        "vectors and implicitly promise the strong separation condition; the tool\n"
        "cannot check that promise."};
    app.require_subcommand(1);

    std::string manifest_path, id_a, id_b, id_single, mode_name = "holder", out_path;
    bool assume_td = false;
    std::int64_t td_max_depth = 8, td_max_cells = 4096;
    std::int64_t depth_flag = -1;

    auto* classify = app.add_subcommand("classify", "Classify a pair of instances");
    classify->add_option("manifest", manifest_path)->required();
    classify->add_option("id_a", id_a)->required();
    classify->add_option("id_b", id_b)->required();
    classify->add_option("--mode", mode_name, "lipschitz or holder")
        ->check(CLI::IsMember({"lipschitz", "holder"}));
    classify->add_flag("--assume-td", assume_td,
                       "treat cubes as totally disconnected without certification");

    auto* check_td = app.add_subcommand("check-td", "Certify total disconnectedness of a cube");
    check_td->add_option("manifest", manifest_path)->required();
    check_td->add_option("id", id_single)->required();
    check_td->add_option("--max-depth", td_max_depth);
    check_td->add_option("--max-cells", td_max_cells);

    auto* verify = app.add_subcommand("verify", "Verify a classification witness by enumeration");
    verify->add_option("manifest", manifest_path)->required();
    verify->add_option("id_a", id_a)->required();
    verify->add_option("id_b", id_b)->required();
    verify->add_option("--depth", depth_flag, "cylinder depth (default: fills the pair budget)");
    verify->add_flag("--assume-td", assume_td);

    auto* render = app.add_subcommand("render", "Render a cube approximation as plain PBM");
    render->add_option("manifest", manifest_path)->required();
    render->add_option("id", id_single)->required();
    render->add_option("--depth", depth_flag)->required();
    render->add_option("--out", out_path, "output file")->required();

    auto* dimension = app.add_subcommand("dimension", "Hausdorff dimension of an instance");
    dimension->add_option("manifest", manifest_path)->required();
    dimension->add_option("id", id_single)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage problems are input errors (exit 2); --help stays 0
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    hl::InstanceManifest manifest = hl::InstanceManifest::load(manifest_path);

    if (classify->parsed()) {
        hl::ClassifyMode mode = mode_name == "lipschitz" ? hl::ClassifyMode::lipschitz
                                                         : hl::ClassifyMode::holder;
        hl::Verdict v = classify_pair(manifest, id_a, id_b, mode, assume_td);
        std::cout << hl::verdict_to_json(v).dump(2) << "\n";
        return 0;
    }

    if (check_td->parsed()) {
        const auto& inst = manifest.find(id_single);
        if (inst.kind != hl::ManifestInstance::Kind::fractal_cube)
            throw std::invalid_argument("check-td: instance is not a fractal cube");
        hl::TDLimits limits;
        limits.max_depth = td_max_depth;
        limits.max_component_cells = static_cast<std::size_t>(td_max_cells);
        hl::TDStatus st = hl::check_total_disconnectedness(*inst.cube, limits);
        std::cout << hl::td_status_to_json(st).dump(2) << "\n";
        return 0;
    }

    if (verify->parsed()) {
        hl::Verdict v = classify_pair(manifest, id_a, id_b, hl::ClassifyMode::holder, assume_td);
        if (!v.witness) {
            std::cerr << "verify: no witness available for this pair (verdict " << v.kind_name()
                      << ")\n";
            return 2;
        }
        std::uint64_t budget = pair_budget();
        std::uint32_t depth = depth_flag >= 0
                                  ? static_cast<std::uint32_t>(depth_flag)
                                  : default_verify_depth(v.witness->source.alphabet(), budget);
        hl::VerificationReport report = hl::verify_witness(*v.witness, depth, budget);
        std::cout << hl::report_to_json(report).dump(2) << "\n";
        return report.pass ? 0 : 1;
    }

    if (render->parsed()) {
        const auto& inst = manifest.find(id_single);
        if (inst.kind != hl::ManifestInstance::Kind::fractal_cube)
            throw std::invalid_argument("render: instance is not a fractal cube");
        std::string pbm = hl::render_pbm(*inst.cube, static_cast<std::uint32_t>(depth_flag));
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("render: cannot open " + out_path);
        out << pbm;
        std::cout << nlohmann::json{{"written", out_path},
                                    {"bytes", pbm.size()}}.dump(2)
                  << "\n";
        return 0;
    }

    if (dimension->parsed()) {
        const auto& inst = manifest.find(id_single);
        hl::DimensionValue dim;
        if (inst.kind == hl::ManifestInstance::Kind::fractal_cube) {
            dim = hl::cube_dimension(*inst.cube);
        } else {
            bool uniform = true;
            for (const auto& r : inst.ratios) {
                if (!r.concrete())
                    throw std::invalid_argument(
                        "dimension: instance has an undeclared base; declare its value in the "
                        "manifest");
                uniform = uniform && r == inst.ratios.front();
            }
            if (uniform) {
                dim = hl::dimension_uniform(hl::SymbolicSpace::uniform(
                    static_cast<std::int64_t>(inst.ratios.size()), inst.ratios.front()));
            } else {
                std::vector<hl::Rational> ratios;
                bool all_rational = true;
                for (const auto& r : inst.ratios) {
                    auto q = r.to_exact().as_rational();
                    if (!q) {
                        all_rational = false;
                        break;
                    }
                    ratios.push_back(*q);
                }
                std::string form = "root of sum_i r_i^s = 1 over";
                for (const auto& r : inst.ratios) form += " " + r.to_string();
                if (all_rational) {
                    dim = {hl::dimension_moran(ratios), form};
                } else {
                    std::vector<double> vals;
                    for (const auto& r : inst.ratios) vals.push_back(r.value_or_nan());
                    double lo = 1e-9, hi = 64.0;
                    auto sum = [&vals](double s) {
                        double acc = 0;
                        for (double r : vals) acc += std::pow(r, s);
                        return acc;
                    };
                    while (sum(hi) > 1.0) hi *= 2.0;
                    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
                        double mid = 0.5 * (lo + hi);
                        (sum(mid) > 1.0 ? lo : hi) = mid;
                    }
                    dim = {0.5 * (lo + hi), form};
                }
            }
        }
        std::cout << hl::dimension_to_json(dim).dump(2) << "\n";
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hl::UncertifiedCubeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
