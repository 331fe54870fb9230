#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "lozenge/flips.hpp"
#include "lozenge/heights.hpp"
#include "lozenge/json_io.hpp"
#include "lozenge/kasteleyn.hpp"
#include "lozenge/quotients.hpp"
#include "lozenge/render.hpp"
#include "lozenge/tiling.hpp"
#include "lozenge/typegeom.hpp"
#include "lozenge/verify.hpp"

namespace {

using namespace lozenge;
using nlohmann::json;

// --basis a1,a2,b1,b2 lists the two basis columns a = (a1,a2), b = (b1,b2).
Basis parse_basis(const std::vector<Int>& v) { return {{v[0], v[1]}, {v[2], v[3]}}; }

json basis_json(const Basis& b) {
    return json::array({json::array({b.a.x, b.b.x}), json::array({b.a.y, b.b.y})});
}

json hnf_json(const HnfForm& h) { return {{"a", h.a}, {"b", h.b}, {"c", h.c}}; }

json type_json(TilingType t) { return {{"l", t.l}, {"d", t.d}, {"r", t.r}}; }

std::string triple_text(Int x, Int y, Int z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

std::string pair_text(Int x, Int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::string lattice_line(const Basis& basis, const HnfForm& h) {
    return "lattice " + triple_text(h.a, h.b, h.c) + " from basis a=" +
           pair_text(basis.a.x, basis.a.y) + " b=" + pair_text(basis.b.x, basis.b.y) +
           ", index " + std::to_string(h.index());
}

void cmd_genfun(const Basis& basis, Int cap, const std::string& format) {
    HnfForm h = hermite_normal_form(basis);
    Poly z = genfun(h, cap);
    BigInt total = z.eval_ones();
    if (format == "json") {
        json out{{"basis", basis_json(basis)},
                 {"hnf", hnf_json(h)},
                 {"index", h.index()},
                 {"poly", poly_to_json(z)},
                 {"eval_ones", static_cast<long long>(total)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << lattice_line(basis, h) << "\n";
        std::cout << "Z(L,D,R) = " << z.text() << "\n";
        std::cout << "Z(1,1,1) = " << total << "\n";
    }
}

void cmd_enumerate(const Basis& basis, Int cap, const std::string& format) {
    HnfForm h = hermite_normal_form(basis);
    std::vector<Tiling> tilings = enumerate_tilings(h, cap);
    if (format == "json") {
        json arr = json::array();
        for (const Tiling& t : tilings) {
            json e = tiling_to_json(t, basis);
            e["type"] = type_json(type_of(t));
            Fingerprint f = fingerprint(t, basis);
            e["fingerprint"] = json::array({f.d1, f.d2});
            arr.push_back(std::move(e));
        }
        json out{{"basis", basis_json(basis)},
                 {"hnf", hnf_json(h)},
                 {"count", tilings.size()},
                 {"tilings", std::move(arr)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << lattice_line(basis, h) << ": " << tilings.size() << " tilings\n";
        for (const Tiling& t : tilings) {
            TilingType ty = type_of(t);
            Fingerprint f = fingerprint(t, basis);
            std::cout << t.cells_string() << "  type " << triple_text(ty.l, ty.d, ty.r)
                      << "  fingerprint " << pair_text(f.d1, f.d2) << "\n";
        }
    }
}

void cmd_types(const Basis& basis, const std::string& format) {
    HnfForm h = hermite_normal_form(basis);
    FundamentalTriangle tri = triangle(basis);
    std::vector<std::pair<Fingerprint, TilingType>> pairs = all_types(basis);
    CountSummary cs = count_summary(basis);
    if (format == "json") {
        json arr = json::array();
        for (const auto& [f, ty] : pairs)
            arr.push_back({{"fingerprint", json::array({f.d1, f.d2})}, {"type", type_json(ty)}});
        json out{{"basis", basis_json(basis)},
                 {"hnf", hnf_json(h)},
                 {"index", h.index()},
                 {"triangle",
                  {{"l", json::array({tri.vl.d1, tri.vl.d2})},
                   {"d", json::array({tri.vd.d1, tri.vd.d2})},
                   {"r", json::array({tri.vr.d1, tri.vr.d2})}}},
                 {"types", std::move(arr)},
                 {"counts",
                  {{"boundary_dl", cs.boundary_dl},
                   {"boundary_lr", cs.boundary_lr},
                   {"boundary_rd", cs.boundary_rd},
                   {"interior", cs.interior},
                   {"monomials", cs.monomials}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << lattice_line(basis, h) << "\n";
        std::cout << "triangle L " << pair_text(tri.vl.d1, tri.vl.d2) << "  D "
                  << pair_text(tri.vd.d1, tri.vd.d2) << "  R " << pair_text(tri.vr.d1, tri.vr.d2)
                  << "\n";
        for (const auto& [f, ty] : pairs)
            std::cout << "fingerprint " << pair_text(f.d1, f.d2) << "  type "
                      << triple_text(ty.l, ty.d, ty.r) << "\n";
        std::cout << "boundary " << cs.boundary_dl << "/" << cs.boundary_lr << "/"
                  << cs.boundary_rd << ", interior " << cs.interior << ", monomials "
                  << cs.monomials << "\n";
    }
}

void cmd_classes(const Basis& basis, bool mod_involution, Int cap, const std::string& format) {
    HnfForm h = hermite_normal_form(basis);
    Poly p = mod_involution ? z2(basis, cap) : z1(basis, cap);
    BigInt total = p.eval_ones();
    std::string name = mod_involution ? "Z2" : "Z1";
    if (format == "json") {
        json out{{"basis", basis_json(basis)},
                 {"hnf", hnf_json(h)},
                 {"index", h.index()},
                 {"quotient", mod_involution ? "shift+involution" : "shift"},
                 {"poly", poly_to_json(p)},
                 {"classes", static_cast<long long>(total)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << lattice_line(basis, h) << "\n";
        std::cout << name << "(L,D,R) = " << p.text() << "\n";
        std::cout << name << "(1,1,1) = " << total << "\n";
    }
}

void cmd_flips(const Basis& basis, Fingerprint target, Int cap, const std::string& format) {
    HnfForm h = hermite_normal_form(basis);
    TilingType ty = fingerprint_to_type(basis, target);
    std::vector<Tiling> fiber;
    for (const Tiling& t : enumerate_tilings(h, cap))
        if (type_of(t) == ty) fiber.push_back(t);
    FlipGraphSummary g = flip_graph(basis, ty, cap);
    if (format == "json") {
        json arr = json::array();
        for (const Tiling& t : fiber) {
            Int na = 0, nb = 0;
            for (const FlipSite& s : flip_sites(t)) (s.config == FlipConfig::A ? na : nb)++;
            arr.push_back({{"cells", t.cells_string()}, {"sites_a", na}, {"sites_b", nb}});
        }
        json out{{"basis", basis_json(basis)},
                 {"hnf", hnf_json(h)},
                 {"fingerprint", json::array({target.d1, target.d2})},
                 {"type", type_json(ty)},
                 {"tilings", std::move(arr)},
                 {"graph",
                  {{"order", g.order}, {"size", g.size}, {"connected", g.connected}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << lattice_line(basis, h) << "\n";
        std::cout << "fingerprint " << pair_text(target.d1, target.d2) << " -> type "
                  << triple_text(ty.l, ty.d, ty.r) << "\n";
        for (const Tiling& t : fiber) {
            Int na = 0, nb = 0;
            for (const FlipSite& s : flip_sites(t)) (s.config == FlipConfig::A ? na : nb)++;
            std::cout << t.cells_string() << "  sites A=" << na << " B=" << nb << "\n";
        }
        std::cout << "flip graph: order " << g.order << ", size " << g.size << ", "
                  << (g.connected ? "connected" : "disconnected") << "\n";
    }
}

int cmd_verify(Int max_index, Int cap) {
    json report = run_verify(max_index, cap);
    std::cout << report.dump(2) << "\n";
    return report.at("all_pass").get<bool>() ? 0 : 1;
}

void cmd_render(const std::string& tiling_file, bool basis_given, const Basis& basis,
                bool fp_given, Fingerprint target, const RenderOptions& opts,
                const std::string& out_file) {
    Tiling t;
    if (!tiling_file.empty()) {
        std::ifstream in(tiling_file);
        if (!in) throw std::runtime_error("cannot open tiling file: " + tiling_file);
        auto [loaded, file_basis] = tiling_from_json(json::parse(in));
        t = std::move(loaded);
        if (basis_given && hermite_normal_form(basis) != t.hnf)
            throw std::invalid_argument("--basis does not match the tiling file");
    } else if (basis_given && fp_given) {
        t = tiling_for_fingerprint(basis, target);
    } else {
        throw CLI::RequiredError("--tiling FILE or --basis ... --fingerprint ...");
    }
    std::string svg = render_svg(t, opts);
    if (out_file.empty()) {
        std::cout << svg;
    } else {
        std::ofstream out(out_file);
        if (!out) throw std::runtime_error("cannot open output file: " + out_file);
        out << svg;
    }
}

// Per-subcommand option storage; only the parsed subcommand's values are read.
struct CommonFlags {
    std::vector<Int> basis;
    std::vector<Int> fingerprint;
    std::string format;
    Int cap = kDefaultEnumerationCap;
};

CLI::Option* add_basis(CLI::App* sub, CommonFlags& f, bool required = true) {
    CLI::Option* o = sub->add_option("--basis", f.basis,
                                     "basis columns a1,a2,b1,b2 (a = (a1,a2), b = (b1,b2))")
                         ->expected(4)
                         ->delimiter(',');
    if (required) o->required();
    return o;
}

CLI::Option* add_fingerprint(CLI::App* sub, CommonFlags& f, bool required = true) {
    CLI::Option* o = sub->add_option("--fingerprint", f.fingerprint, "fingerprint d1,d2")
                         ->expected(2)
                         ->delimiter(',');
    if (required) o->required();
    return o;
}

void add_format(CLI::App* sub, CommonFlags& f, const char* def) {
    f.format = def;
    sub->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str(def);
}

void add_cap(CLI::App* sub, CommonFlags& f, Int def) {
    f.cap = def;
    sub->add_option("--cap", f.cap, "enumeration size guard (lattice index)")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of doubly periodic lozenge tilings"};
    app.require_subcommand(1);

    int rc = 0;

    CLI::App* sc_genfun = app.add_subcommand("genfun", "Kasteleyn generating function Z(L,D,R)");
    CommonFlags fl_genfun;
    add_basis(sc_genfun, fl_genfun);
    add_format(sc_genfun, fl_genfun, "text");
    add_cap(sc_genfun, fl_genfun, kDefaultGenfunCap);
    sc_genfun->callback(
        [&] { cmd_genfun(parse_basis(fl_genfun.basis), fl_genfun.cap, fl_genfun.format); });

    CLI::App* sc_enum = app.add_subcommand("enumerate", "List all periodic tilings");
    CommonFlags fl_enum;
    add_basis(sc_enum, fl_enum);
    add_format(sc_enum, fl_enum, "text");
    add_cap(sc_enum, fl_enum, kDefaultEnumerationCap);
    sc_enum->callback(
        [&] { cmd_enumerate(parse_basis(fl_enum.basis), fl_enum.cap, fl_enum.format); });

    CLI::App* sc_types = app.add_subcommand("types", "Fundamental triangle and realizable types");
    CommonFlags fl_types;
    add_basis(sc_types, fl_types);
    add_format(sc_types, fl_types, "json");
    sc_types->callback([&] { cmd_types(parse_basis(fl_types.basis), fl_types.format); });

    CLI::App* sc_classes = app.add_subcommand("classes", "Count tilings modulo symmetries");
    CommonFlags fl_classes;
    bool mod_involution = false;
    add_basis(sc_classes, fl_classes);
    CLI::Option* mod_shift =
        sc_classes->add_flag("--mod-shift", "quotient by lattice shifts")->required();
    sc_classes->add_flag("--mod-involution", mod_involution, "also quotient by the involution")
        ->needs(mod_shift);
    add_format(sc_classes, fl_classes, "text");
    add_cap(sc_classes, fl_classes, kDefaultEnumerationCap);
    sc_classes->callback([&] {
        cmd_classes(parse_basis(fl_classes.basis), mod_involution, fl_classes.cap,
                    fl_classes.format);
    });

    CLI::App* sc_flips = app.add_subcommand("flips", "Flip sites and flip graph of one type");
    CommonFlags fl_flips;
    add_basis(sc_flips, fl_flips);
    add_fingerprint(sc_flips, fl_flips);
    add_format(sc_flips, fl_flips, "json");
    add_cap(sc_flips, fl_flips, kDefaultEnumerationCap);
    sc_flips->callback([&] {
        cmd_flips(parse_basis(fl_flips.basis), {fl_flips.fingerprint[0], fl_flips.fingerprint[1]},
                  fl_flips.cap, fl_flips.format);
    });

    CLI::App* sc_verify = app.add_subcommand("verify", "Cross-check suite over small lattices");
    CommonFlags fl_verify;
    Int max_index = 9;
    sc_verify->add_option("--max-index", max_index, "largest lattice index to sweep")
        ->check(CLI::PositiveNumber);
    add_cap(sc_verify, fl_verify, kDefaultEnumerationCap);
    sc_verify->callback([&] { rc = cmd_verify(max_index, fl_verify.cap); });

    CLI::App* sc_render = app.add_subcommand("render", "Render a tiling as SVG");
    CommonFlags fl_render;
    std::string tiling_file, out_file;
    RenderOptions opts;
    bool no_outline = false;
    sc_render->add_option("--tiling", tiling_file, "tiling JSON file")->check(CLI::ExistingFile);
    CLI::Option* render_basis = add_basis(sc_render, fl_render, false);
    CLI::Option* render_fp = add_fingerprint(sc_render, fl_render, false);
    render_fp->description("fingerprint of the tiling to build");
    sc_render->add_option("--out", out_file, "output file (default: stdout)");
    sc_render->add_option("--reps", opts.reps, "fundamental domains per axis")
        ->check(CLI::PositiveNumber);
    sc_render->add_option("--unit", opts.unit, "edge length in pixels")
        ->check(CLI::PositiveNumber);
    sc_render->add_flag("--no-outline", no_outline, "omit the domain outlines");
    sc_render->callback([&] {
        opts.outline = !no_outline;
        bool basis_given = render_basis->count() > 0;
        bool fp_given = render_fp->count() > 0;
        Basis b = basis_given ? parse_basis(fl_render.basis) : Basis{};
        Fingerprint f =
            fp_given ? Fingerprint{fl_render.fingerprint[0], fl_render.fingerprint[1]}
                     : Fingerprint{};
        cmd_render(tiling_file, basis_given, b, fp_given, f, opts, out_file);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
