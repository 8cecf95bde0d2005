#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "gmi/catalog.hpp"
#include "gmi/discovery.hpp"
#include "gmi/independence.hpp"
#include "gmi/json_io.hpp"
#include "gmi/moments.hpp"
#include "gmi/point_set.hpp"
#include "gmi/rng.hpp"
#include "gmi/transform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
    std::string output;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--output", opts.output, "write result to a file instead of stdout");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
}

void emit(const CommonOpts& opts, const gmi::Json& doc, const std::string& table) {
    std::string text = opts.format == "json" ? doc.dump(2) + "\n" : table;
    if (opts.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open file: " + opts.output);
        out << text;
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int max_order_for_set(const std::string& set_name) {
    if (set_name == "hu" || set_name == "pi") return 3;
    if (set_name == "affine19") return 5;
    if (set_name == "3d") return 2;
    throw std::invalid_argument("unknown invariant set: " + set_name);
}

int cmd_moments(const std::string& input, int max_order, const CommonOpts& opts) {
    gmi::WeightedPointSet ps = gmi::load_shape(input);
    gmi::MomentVector raw = gmi::raw_moments(ps, max_order);
    gmi::MomentVector central = gmi::central_moments(ps, max_order);

    gmi::Json doc;
    doc["input"] = input;
    doc["dim"] = ps.dim;
    doc["points"] = ps.size();
    doc["max_order"] = max_order;
    doc["raw"] = gmi::moment_vector_json(raw);
    doc["central"] = gmi::moment_vector_json(central);

    std::string table = "index  raw  central\n";
    for (const auto& idx : raw.indices()) {
        std::string key = idx.name(ps.dim).substr(2);
        table += key + "  " + fmt(raw.at(idx)) + "  " + fmt(central.at(idx)) + "\n";
    }
    emit(opts, doc, table);
    return kExitOk;
}

int cmd_invariants(const std::string& input, const std::string& set_name, const CommonOpts& opts) {
    gmi::WeightedPointSet ps = gmi::load_shape(input);
    auto set = gmi::named_set(set_name);
    int max_order = max_order_for_set(set_name);
    if ((set_name == "3d") != (ps.dim == 3))
        throw std::runtime_error(set_name == "3d" ? "set 3d requires a 3D input"
                                                  : "2D invariant set on a 3D input");

    gmi::MomentVector mu = gmi::central_moments(ps, max_order);
    double m00 = mu.m00();
    if (m00 == 0.0) throw std::runtime_error("zero total weight");

    gmi::Json doc;
    doc["input"] = input;
    doc["set"] = set_name;
    gmi::Json values = gmi::Json::array();
    std::string table = "name  value  skew\n";
    for (const auto& inv : set) {
        double v = inv.reference.evaluate(mu) / std::pow(m00, inv.k);
        gmi::Json e;
        e["name"] = inv.name;
        e["value"] = v;
        e["k"] = inv.k;
        e["skew"] = inv.skew;
        values.push_back(e);
        table += inv.name + "  " + fmt(v) + (inv.skew ? "  skew\n" : "\n");
    }
    doc["values"] = values;
    emit(opts, doc, table);
    return kExitOk;
}

int cmd_verify(bool catalog, bool relations, bool invariance, std::uint64_t seed, double tol,
               const std::string& emit_catalog, const CommonOpts& opts) {
    if (!catalog && !relations && !invariance) catalog = relations = true;
    bool all_pass = true;
    gmi::Json doc;
    std::string table;

    if (catalog) {
        gmi::Json arr = gmi::Json::array();
        for (gmi::Group g : {gmi::Group::Similarity, gmi::Group::Affine, gmi::Group::Rotation3D}) {
            for (const auto& c : gmi::verify_catalog(g)) {
                gmi::Json e;
                e["name"] = c.name;
                e["group"] = gmi::to_string(g);
                e["match"] = c.match;
                e["scalar"] = c.scalar.str();
                if (!c.diff.empty()) e["diff"] = c.diff;
                arr.push_back(e);
                all_pass = all_pass && c.match;
                table += c.name + (c.match ? "  ok (scalar " + c.scalar.str() + ")\n"
                                           : "  MISMATCH\n");
            }
        }
        doc["catalog"] = arr;
    }
    if (relations) {
        gmi::Json arr = gmi::Json::array();
        for (const auto& r : gmi::verify_relations()) {
            gmi::Json e;
            e["identity"] = r.name;
            e["holds"] = r.holds;
            if (!r.holds) e["residual"] = r.residual.str();
            arr.push_back(e);
            all_pass = all_pass && r.holds;
            table += r.name + (r.holds ? "  ok\n" : "  FAILS, residual " + r.residual.str() + "\n");
        }
        doc["relations"] = arr;
    }
    if (invariance) {
        // seeded campaign over every catalog entry on a deterministic
        // random 20-point shape (30 points in 3D)
        gmi::Json arr = gmi::Json::array();
        for (gmi::Group g : {gmi::Group::Similarity, gmi::Group::Affine, gmi::Group::Rotation3D}) {
            int dim = g == gmi::Group::Rotation3D ? 3 : 2;
            gmi::WeightedPointSet ps(dim);
            gmi::SplitMix64 rng(seed ^ 0x5939aULL);
            int n_points = dim == 3 ? 30 : 20;
            for (int i = 0; i < n_points; ++i) {
                gmi::WeightedPoint p;
                for (int d = 0; d < dim; ++d) p.coords[d] = rng.uniform(-2.0, 2.0);
                p.weight = rng.uniform(0.5, 2.0);
                ps.points.push_back(p);
            }
            double group_tol = tol > 0 ? tol : (g == gmi::Group::Affine ? 1e-6 : 1e-8);
            for (const auto& inv : gmi::get_catalog(g)) {
                auto rep = gmi::invariance_check(inv.reference, inv.k, g, ps, 10, seed, group_tol);
                arr.push_back(gmi::invariance_report_json(inv.name, g, rep));
                all_pass = all_pass && rep.pass;
                table += inv.name + (rep.pass ? "  invariant\n" : "  NOT INVARIANT\n");
            }
        }
        doc["invariance"] = arr;
    }
    doc["pass"] = all_pass;
    table += all_pass ? "all checks pass\n" : "some checks fail\n";

    if (!emit_catalog.empty()) {
        std::ofstream out(emit_catalog, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open file: " + emit_catalog);
        out << gmi::catalog_json().dump(2) << "\n";
    }
    emit(opts, doc, table);
    return all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_independence(const std::string& set_name, const std::string& group_name, int order,
                     int trials, std::uint64_t seed, const CommonOpts& opts) {
    auto set = gmi::named_set(set_name);
    gmi::Group group = gmi::group_from_string(group_name);
    gmi::MomentVariableSpace space = gmi::MomentVariableSpace::make(group, order);

    std::vector<gmi::RankEntry> entries;
    for (const auto& inv : set) entries.emplace_back(inv.reference, inv.k);
    int rank = gmi::functional_rank(entries, space, trials, seed);
    auto kept = gmi::select_independent_subset(entries, space, int(entries.size()), trials, seed);

    gmi::Json doc;
    gmi::Json names = gmi::Json::array();
    for (const auto& inv : set) names.push_back(inv.name);
    doc["set"] = names;
    gmi::Json sp;
    sp["group"] = gmi::to_string(group);
    sp["max_order"] = order;
    sp["variables"] = int(space.variables.size());
    doc["space"] = sp;
    doc["trials"] = trials;
    doc["seed"] = seed;
    doc["rank"] = rank;

    gmi::Json kept_names = gmi::Json::array(), dropped = gmi::Json::array();
    std::vector<bool> is_kept(set.size(), false);
    for (std::size_t i : kept) is_kept[i] = true;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (is_kept[i]) {
            kept_names.push_back(set[i].name);
        } else {
            gmi::Json d;
            d["name"] = set[i].name;
            d["reason"] = "no rank increase over kept set";
            dropped.push_back(d);
        }
    }
    doc["kept"] = kept_names;
    doc["dropped"] = dropped;

    std::string table = "set " + set_name + ": rank " + std::to_string(rank) + " of " +
                        std::to_string(set.size()) + " in " +
                        std::to_string(space.variables.size()) + " variables\n";
    emit(opts, doc, table);
    return kExitOk;
}

int cmd_discover(const std::string& group_name, int dim, int order, int degree, int max_factors,
                 int target, bool allow_skew, std::uint64_t budget, int trials, std::uint64_t seed,
                 const CommonOpts& opts) {
    gmi::EnumerationSpec spec;
    spec.dim = dim;
    spec.group = gmi::group_from_string(group_name);
    spec.n_pnt = degree;
    spec.n_cnt = order;
    spec.max_factors = max_factors;
    spec.require_true_invariants = !allow_skew;
    spec.budget = budget;

    if (target <= 0) {
        gmi::MomentVariableSpace space = gmi::MomentVariableSpace::make(
            spec.group == gmi::Group::Affine ? gmi::Group::Affine : gmi::Group::Similarity,
            std::max(2, spec.n_cnt), spec.dim);
        target = gmi::max_independent_count(space);
    }

    gmi::DiscoveryReport rep = gmi::discover(spec, target, seed, trials);

    std::string table = "candidates " + std::to_string(rep.candidates.size()) + ", kept " +
                        std::to_string(rep.rank) + " of target " + std::to_string(rep.target) +
                        (rep.incomplete ? " (incomplete)\n" : "\n");
    for (std::size_t pos : rep.kept) table += "  " + rep.candidates[pos].core.str() + "\n";
    emit(opts, gmi::discovery_report_json(rep), table);
    return rep.incomplete ? kExitCheckFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generating-function construction and verification of geometric moment invariants"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string input, set_name = "hu", group_name = "similarity", emit_catalog_path;
    int max_order = 3, order = 3, degree = 3, max_factors = 0, target = 0, trials = 5, dim = 2;
    std::uint64_t seed = 0, budget = 1000000;
    bool flag_catalog = false, flag_relations = false, flag_invariance = false,
         allow_skew = false;
    double tol = 0.0;

    auto* c_moments = app.add_subcommand("moments", "raw and central moments of a shape");
    c_moments->add_option("--input", input, "point-set text file or PGM image")->required();
    c_moments->add_option("--max-order", max_order, "highest moment order");
    add_common(c_moments, opts);

    auto* c_inv = app.add_subcommand("invariants", "normalized invariant descriptor vector");
    c_inv->add_option("--input", input)->required();
    c_inv->add_option("--set", set_name, "hu | pi | affine19 | 3d");
    add_common(c_inv, opts);

    auto* c_verify = app.add_subcommand("verify", "re-derive the invariant tables and identities");
    c_verify->add_flag("--catalog", flag_catalog, "verify core translations against references");
    c_verify->add_flag("--relations", flag_relations, "verify linear identities");
    c_verify->add_flag("--invariance", flag_invariance,
                       "seeded invariance campaign over the whole catalog");
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--tol", tol, "override the per-group campaign tolerance");
    c_verify->add_option("--emit-catalog", emit_catalog_path, "write full catalog JSON here");
    add_common(c_verify, opts);

    auto* c_indep = app.add_subcommand("independence", "Jacobian-rank independence report");
    c_indep->add_option("--set", set_name, "hu | pi | affine19");
    c_indep->add_option("--group", group_name, "similarity | affine");
    c_indep->add_option("--order", order, "moment order of the variable space");
    c_indep->add_option("--trials", trials);
    c_indep->add_option("--seed", seed);
    add_common(c_indep, opts);

    auto* c_disc = app.add_subcommand("discover", "enumerate cores and extract an independent set");
    c_disc->add_option("--group", group_name, "similarity | affine");
    c_disc->add_option("--dim", dim, "2 or 3");
    c_disc->add_option("--order", order, "max occurrence of one point (N_cnt)");
    c_disc->add_option("--degree", degree, "max distinct points (N_pnt)");
    c_disc->add_option("--max-factors", max_factors, "cap on factors per core (0 = derive)");
    c_disc->add_option("--target", target, "independent set size to reach (0 = variable count)");
    c_disc->add_flag("--allow-skew", allow_skew, "keep odd-#g (skew) cores");
    c_disc->add_option("--budget", budget, "raw enumeration cap");
    c_disc->add_option("--trials", trials);
    c_disc->add_option("--seed", seed);
    add_common(c_disc, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_moments->parsed()) return cmd_moments(input, max_order, opts);
        if (c_inv->parsed()) return cmd_invariants(input, set_name, opts);
        if (c_verify->parsed())
            return cmd_verify(flag_catalog, flag_relations, flag_invariance, seed, tol,
                              emit_catalog_path, opts);
        if (c_indep->parsed())
            return cmd_independence(set_name, group_name, order, trials, seed, opts);
        if (c_disc->parsed())
            return cmd_discover(group_name, dim, order, degree, max_factors, target, allow_skew,
                                budget, trials, seed, opts);
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
