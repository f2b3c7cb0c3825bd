#include "wallscope/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>

#include "wallscope/chern.hpp"
#include "wallscope/destab.hpp"
#include "wallscope/homalg.hpp"
#include "wallscope/ledger.hpp"
#include "wallscope/stability.hpp"
#include "wallscope/walls.hpp"

namespace wallscope::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json char_json(const Char3& c) {
    return ordered_json::array(
        {rat_str(c.ch0), rat_str(c.ch1), rat_str(c.ch2), rat_str(c.ch3)});
}

ordered_json wall_json(const WallLocus& w) {
    ordered_json j;
    j["center"] = rat_str(w.center);
    j["radius_sq"] = rat_str(w.radius_sq);
    return j;
}

EnumBounds bounds_from_flags(const Char3& v, int rank_min, int rank_max) {
    EnumBounds b = EnumBounds::defaults_for(v);
    b.rank_min = rank_min;
    b.rank_max = rank_max;
    return b;
}

int cmd_walls(const Char3& v, int rank_min, int rank_max, std::ostream& out) {
    const auto cands = truncated_wall_candidates(v, bounds_from_flags(v, rank_min, rank_max));
    ordered_json arr = ordered_json::array();
    for (const WallCandidate& c : cands) {
        ordered_json j = wall_json(c.wall);
        j["sub_ch"] = ordered_json::array(
            {rat_str(c.sub.ch0), rat_str(c.sub.ch1), rat_str(c.sub.ch2)});
        arr.push_back(std::move(j));
    }
    out << arr.dump() << "\n";
    return 0;
}

int cmd_hyperbola(const Char3& v, bool json, std::ostream& out) {
    const HyperbolaLocus h = hyperbola_locus(v);
    std::string normalized;
    if (h.a != 0) {
        const Rat b = h.b / h.a, c = h.c / h.a;
        std::ostringstream os;
        os << "beta^2";
        if (b != 0) os << " + (" << rat_str(b) << ")*beta";
        os << " - alpha^2 = " << rat_str(Rat(-c));
        normalized = os.str();
    } else if (h.b != 0) {
        normalized = "beta = " + rat_str(Rat(-h.c / h.b));
    } else {
        normalized = h.c == 0 ? "0 = 0" : "empty";
    }
    if (json) {
        ordered_json j;
        j["beta_sq"] = rat_str(h.a);
        j["beta"] = rat_str(h.b);
        j["const"] = rat_str(h.c);
        j["alpha_sq"] = rat_str(Rat(-h.a));
        j["normalized"] = normalized;
        out << j.dump() << "\n";
    } else {
        out << normalized << "\n";
    }
    return 0;
}

int cmd_destab(const Char3& v, int rank_min, int rank_max, bool json, std::ostream& out) {
    const auto pairs = enumerate_destab_pairs(v, bounds_from_flags(v, rank_min, rank_max));
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const DestabPair& p : pairs) {
            ordered_json j;
            j["sub"] = char_json(p.sub);
            j["quot"] = char_json(p.quot);
            j["wall"] = wall_json(p.wall);
            j["annotations"] =
                ordered_json{{"sub", p.sub_kind.text()}, {"quot", p.quot_kind.text()}};
            j["side_note"] = p.side_note;
            arr.push_back(std::move(j));
        }
        out << arr.dump() << "\n";
        return 0;
    }
    for (const DestabPair& p : pairs)
        out << p.wall << "  sub=(" << char3_str(p.sub) << ") " << p.sub_kind.text() << "  quot=("
            << char3_str(p.quot) << ") " << p.quot_kind.text() << "  [" << p.side_note << "]\n";
    return 0;
}

int cmd_dtpt(const Char3& v, bool json, std::ostream& out) {
    const auto splits = dtpt_splittings(v);
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const DtptSplitting& s : splits) {
            ordered_json j;
            j["ideal"] = char_json(s.ideal);
            j["torsion_length"] = s.torsion_length;
            arr.push_back(std::move(j));
        }
        out << arr.dump() << "\n";
        return 0;
    }
    for (const DtptSplitting& s : splits)
        out << "ideal=(" << char3_str(s.ideal) << ") torsion_length=" << s.torsion_length << "\n";
    return 0;
}

int cmd_euler(const Char3& e, const Char3& f, bool json, std::ostream& out) {
    const Rat chi = euler_pairing(e, f);
    if (json)
        out << ordered_json(rat_str(chi)).dump() << "\n";
    else
        out << rat_str(chi) << "\n";
    return 0;
}

int cmd_ext(const std::string& wall, bool json, std::ostream& out) {
    const std::vector<ExtTableEntry> table =
        wall.empty() ? full_ext_table() : curated_ext_table(parse_wall_id(wall));
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const ExtTableEntry& e : table) {
            ordered_json j;
            j["wall"] = wall_id_str(e.wall_id);
            j["direction"] = ext_direction_str(e.direction);
            j["stratum"] = e.stratum;
            j["dim"] = e.dim;
            arr.push_back(std::move(j));
        }
        out << arr.dump() << "\n";
        return 0;
    }
    for (const ExtTableEntry& e : table)
        out << std::left << std::setw(8) << wall_id_str(e.wall_id) << std::setw(4)
            << ext_direction_str(e.direction) << std::setw(30) << e.stratum << e.dim << "\n";
    return 0;
}

int cmd_points(long n, const std::string& pos, long deg, std::ostream& out) {
    PointPosition p;
    if (pos == "generic")
        p = PointPosition::Generic;
    else if (pos == "collinear")
        p = PointPosition::Collinear;
    else if (pos == "conic")
        p = PointPosition::OnSmoothConic;
    else
        throw CLI::ValidationError("--pos", "expected generic|collinear|conic");
    const PlaneCohomology h = points_plane_cohomology(PointConfig(n, p), deg);
    ordered_json j;
    j["h0"] = h.h0;
    j["h1"] = h.h1;
    out << j.dump() << "\n";
    return 0;
}

ordered_json component_json(const ComponentRecord& r) {
    ordered_json j;
    j["name"] = r.name;
    j["side"] = r.side == Side::PT ? "pt" : "hilb";
    j["fiber_dim"] = r.fiber_dim;
    j["base"] = r.base.name();
    j["base_dim"] = r.base.dim();
    j["total_dim"] = r.total_dim;
    j["provenance"] = r.provenance == Provenance::stated ? "stated" : "expected";
    j["description"] = r.description;
    return j;
}

void component_text(const ComponentRecord& r, std::ostream& out) {
    std::ostringstream fiber;
    if (r.fiber_dim >= 0)
        fiber << "P^" << r.fiber_dim;
    else
        fiber << "-";
    out << std::left << std::setw(7) << r.name << std::setw(6) << fiber.str() << std::setw(34)
        << r.base.name() << std::right << std::setw(3) << r.total_dim << "  " << std::left
        << std::setw(9) << (r.provenance == Provenance::stated ? "stated" : "expected")
        << r.description << "\n";
}

int cmd_components(const std::string& side, bool json, std::ostream& out) {
    std::vector<ComponentRecord> records;
    if (side.empty() || side == "pt")
        for (auto& r : pt_component_table()) records.push_back(r);
    if (side.empty() || side == "hilb")
        for (auto& r : hilb_component_table()) records.push_back(r);
    if (records.empty()) throw CLI::ValidationError("--side", "expected pt|hilb");
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const ComponentRecord& r : records) arr.push_back(component_json(r));
        out << arr.dump() << "\n";
        return 0;
    }
    for (const ComponentRecord& r : records) component_text(r, out);
    return 0;
}

int cmd_chambers(bool json, std::ostream& out) {
    const auto seq = chamber_sequence();
    const auto loci = destab_loci_table();
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& [name, count] : seq) {
            ordered_json j;
            j["chamber"] = name;
            j["components"] = count;
            ordered_json strata = ordered_json::array();
            for (const auto& [lname, ss] : loci)
                if (lname == name)
                    for (const DestabStratum& s : ss)
                        strata.push_back(ordered_json{{"fiber_dim", s.fiber_dim},
                                                      {"base_dim", s.base_dim},
                                                      {"total", s.total},
                                                      {"description", s.description}});
            j["destab_strata"] = std::move(strata);
            arr.push_back(std::move(j));
        }
        out << arr.dump() << "\n";
        return 0;
    }
    for (const auto& [name, count] : seq) out << name << " " << count << "\n";
    return 0;
}

int cmd_plot(const Char3& v, const ViewRect& view, int samples, const std::string& out_path,
             std::ostream& out) {
    const auto cands = truncated_wall_candidates(v, EnumBounds::defaults_for(v));
    std::vector<WallLocus> walls;
    for (const WallCandidate& c : cands) walls.push_back(c.wall);
    const std::string svg = render_svg(walls, hyperbola_locus(v), view, samples);
    if (out_path.empty()) {
        out << svg;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::domain_error("plot: cannot open output file '" + out_path + "'");
    file << svg;
    return 0;
}

int cmd_genus_bound(long deg, bool planar, std::ostream& out) {
    out << genus_bound(deg, planar) << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical wall-and-chamber toolkit for P^3"};
    app.name("wallscope");
    app.require_subcommand(1);

    std::string char_lit = "1,0,-6,15";
    std::string e_lit, f_lit, pos = "generic", side, wall, out_path;
    long n = 1, deg = 0;
    int rank_min = 0, rank_max = 1, samples = 256;
    bool json = false, planar = true;
    ViewRect view{-14.0, 0.0, 0.0, 7.0};

    auto add_char = [&](CLI::App* sub) { sub->add_option("--char", char_lit, "class r,c,d,e"); };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "JSON output"); };
    auto add_ranks = [&](CLI::App* sub) {
        sub->add_option("--rank-min", rank_min, "minimal subobject rank");
        sub->add_option("--rank-max", rank_max, "maximal subobject rank");
    };

    CLI::App* walls_cmd = app.add_subcommand("walls", "semicircular wall loci for a class");
    add_char(walls_cmd), add_json(walls_cmd), add_ranks(walls_cmd);

    CLI::App* hyp_cmd = app.add_subcommand("hyperbola", "Im Z = 0 locus for a class");
    add_char(hyp_cmd), add_json(hyp_cmd);

    CLI::App* destab_cmd = app.add_subcommand("destab", "destabilizing splittings at each wall");
    add_char(destab_cmd), add_json(destab_cmd), add_ranks(destab_cmd);

    CLI::App* dtpt_cmd = app.add_subcommand("dtpt", "ideal-plus-torsion splittings at Im Z = 0");
    add_char(dtpt_cmd), add_json(dtpt_cmd);

    CLI::App* euler_cmd = app.add_subcommand("euler", "Euler pairing chi(E, F)");
    euler_cmd->add_option("--e", e_lit, "first class")->required();
    euler_cmd->add_option("--f", f_lit, "second class")->required();
    add_json(euler_cmd);

    CLI::App* ext_cmd = app.add_subcommand("ext", "curated Ext^1 tables");
    ext_cmd->add_option("--wall", wall, "green|purple1|purple2|purple3|pink");
    add_json(ext_cmd);

    CLI::App* points_cmd = app.add_subcommand("points", "plane points cohomology model");
    points_cmd->add_option("--n", n, "number of points")->required();
    points_cmd->add_option("--pos", pos, "generic|collinear|conic");
    points_cmd->add_option("--deg", deg, "curve degree")->required();
    add_json(points_cmd);

    CLI::App* comp_cmd = app.add_subcommand("components", "moduli component tables");
    comp_cmd->add_option("--side", side, "pt|hilb");
    add_json(comp_cmd);

    CLI::App* chambers_cmd = app.add_subcommand("chambers", "chamber sequence and destab loci");
    add_json(chambers_cmd);

    CLI::App* plot_cmd = app.add_subcommand("plot", "SVG of walls and hyperbola");
    add_char(plot_cmd);
    plot_cmd->add_option("--out", out_path, "output SVG path");
    plot_cmd->add_option("--samples", samples, "polyline samples");
    plot_cmd->add_option("--beta-min", view.beta_min, "view beta min");
    plot_cmd->add_option("--beta-max", view.beta_max, "view beta max");
    plot_cmd->add_option("--alpha-min", view.alpha_min, "view alpha min");
    plot_cmd->add_option("--alpha-max", view.alpha_max, "view alpha max");

    CLI::App* genus_cmd = app.add_subcommand("genus-bound", "max arithmetic genus for a degree");
    genus_cmd->add_option("--deg", deg, "curve degree")->required();
    genus_cmd->add_flag("--planar,!--nonplanar", planar, "allow planar curves (default)");
    add_json(genus_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*walls_cmd) return cmd_walls(parse_char3(char_lit), rank_min, rank_max, out);
        if (*hyp_cmd) return cmd_hyperbola(parse_char3(char_lit), json, out);
        if (*destab_cmd) return cmd_destab(parse_char3(char_lit), rank_min, rank_max, json, out);
        if (*dtpt_cmd) return cmd_dtpt(parse_char3(char_lit), json, out);
        if (*euler_cmd) return cmd_euler(parse_char3(e_lit), parse_char3(f_lit), json, out);
        if (*ext_cmd) return cmd_ext(wall, json, out);
        if (*points_cmd) return cmd_points(n, pos, deg, out);
        if (*comp_cmd) return cmd_components(side, json, out);
        if (*chambers_cmd) return cmd_chambers(json, out);
        if (*plot_cmd) return cmd_plot(parse_char3(char_lit), view, samples, out_path, out);
        if (*genus_cmd) return cmd_genus_bound(deg, planar, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace wallscope::cli
