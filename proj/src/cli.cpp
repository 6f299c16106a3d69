#include "hexflip/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "hexflip/euclid.hpp"
#include "hexflip/farey.hpp"
#include "hexflip/report_json.hpp"
#include "hexflip/verify.hpp"

namespace hexflip {

namespace {

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw BadInput("expected an integer, got '" + s + "'");
    }
}

Mat parse_mat(const std::vector<std::string>& abcd, size_t offset = 0) {
    return Mat(parse_int(abcd[offset]), parse_int(abcd[offset + 1]),
               parse_int(abcd[offset + 2]), parse_int(abcd[offset + 3]));
}

void print_operator_summary(std::ostream& out, const Mat& a) {
    OperatorClass oc = classify(a);
    MinimizationResult mr = minimize(a);
    out << "class: " << oc.text() << "\n";
    out << "c(matrix) = " << matrix_complexity(a).get_str() << "\n";
    out << "c(operator) = " << mr.operator_complexity.get_str() << "\n";
    out << "minimal matrix: " << to_string(mr.minimal) << "\n";
    out << "conjugator: " << to_string(mr.conjugator) << "\n";
    out << "parity: " << parity(a) << "\n";
    out << "minimal matrices:";
    for (const auto& m : minimal_matrices(a)) out << " " << to_string(m);
    out << "\n";
}

void print_bundle_text(std::ostream& out, const TorusBundleReport& rep) {
    out << "matrix: " << to_string(rep.input_matrix) << "\n";
    out << "class: " << rep.operator_class.text() << "\n";
    out << "c(matrix) = " << rep.c_matrix.get_str()
        << ", c(operator) = " << rep.c_operator.get_str() << "\n";
    out << "minimal matrix: " << to_string(rep.minimal_matrix) << "\n";
    out << "conjectured complexity: " << rep.conjectured_complexity.get_str() << " ("
        << rep.upper_bound_source << ")\n";
    out << "homology: betti " << rep.homology.betti.get_str() << ", torsion [";
    for (size_t i = 0; i < rep.homology.torsion.size(); ++i)
        out << (i ? "," : "") << rep.homology.torsion[i].get_str();
    out << "], lower bound " << rep.lower_bound_homology.get_str() << "\n";
    if (rep.census) {
        out << "census: vertices " << rep.census->n_vertices.get_str() << ", edges "
            << rep.census->n_edges.get_str() << ", cells " << rep.census->n_cells.get_str()
            << ", pseudominimal " << (rep.census->pseudominimal ? "yes" : "no") << "\n";
    }
    if (!rep.flat_structure.empty())
        out << "flat fiber polyhedron: " << rep.flat_structure << "\n";
    out << "homeomorphism key: " << rep.homeo_key << "\n";
}

void print_census_text(std::ostream& out, const SpineCensus& census) {
    out << "vertices: " << census.n_vertices.get_str() << "\n";
    out << "edges: " << census.n_edges.get_str() << "\n";
    out << "cells: " << census.n_cells.get_str() << " (" << census.fiber_pentagons
        << " fiber pentagons + " << census.swept_cells.size() << " swept)\n";
    out << "fiber-adjacent swept cells: " << census.fiber_adjacent_count()
        << " (through cells: " << census.through_cell_count() << ")\n";
    for (const auto& cell : census.swept_cells) {
        out << "  cell flips " << cell.birth_flip << " -> " << cell.death_flip;
        if (cell.boundary_length)
            out << ", boundary " << cell.boundary_length->get_str();
        else
            out << ", boundary >= " << cell.boundary_at_least.get_str();
        out << (cell.touches_fiber ? ", touches fiber" : "") << "\n";
    }
    out << "pseudominimal: " << (census.pseudominimal ? "yes" : "no") << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact flip-tree complexity toolkit for SL(2,Z), torus bundles and lens spaces"};
    app.require_subcommand(1);

    std::vector<std::string> m1(4), m2(4);
    std::string p_arg, q_arg, p2_arg, q2_arg, r1_arg, r2_arg, suite_arg;
    bool json_flag = false, dot_flag = false, trace_flag = false;
    int window = 1, radius = 1;
    std::string pmax_arg = "500";
    std::uint64_t seed = 12345;
    int verify_radius = 8;

    auto add_matrix = [](CLI::App* sub, std::vector<std::string>& dst) {
        sub->add_option("a", dst[0], "row-major entry")->required();
        sub->add_option("b", dst[1], "row-major entry")->required();
        sub->add_option("c", dst[2], "row-major entry")->required();
        sub->add_option("d", dst[3], "row-major entry")->required();
    };

    auto* euclid_cmd = app.add_subcommand("euclid", "Euclid complexity of a coprime pair");
    euclid_cmd->add_option("P", p_arg)->required();
    euclid_cmd->add_option("Q", q_arg)->required();

    auto* cmat_cmd = app.add_subcommand("cmat", "matrix complexity c(A)");
    add_matrix(cmat_cmd, m1);
    cmat_cmd->add_flag("--trace", trace_flag, "print the descent path");

    auto* cop_cmd = app.add_subcommand("cop", "operator complexity and minimal matrices");
    add_matrix(cop_cmd, m1);

    auto* bundle_cmd = app.add_subcommand("bundle", "torus bundle report");
    add_matrix(bundle_cmd, m1);
    bundle_cmd->add_flag("--json", json_flag);

    auto* census_cmd = app.add_subcommand("census", "spine census for a minimal matrix");
    add_matrix(census_cmd, m1);
    census_cmd->add_flag("--json", json_flag);

    auto* hb_cmd = app.add_subcommand("homeo-bundle", "are two torus bundles homeomorphic");
    add_matrix(hb_cmd, m1);
    hb_cmd->add_option("a2", m2[0])->required();
    hb_cmd->add_option("b2", m2[1])->required();
    hb_cmd->add_option("c2", m2[2])->required();
    hb_cmd->add_option("d2", m2[3])->required();

    auto* lens_cmd = app.add_subcommand("lens", "lens space report");
    lens_cmd->add_option("P", p_arg)->required();
    lens_cmd->add_option("Q", q_arg)->required();
    lens_cmd->add_flag("--json", json_flag);

    auto* hl_cmd = app.add_subcommand("homeo-lens", "are two lens spaces homeomorphic");
    hl_cmd->add_option("P1", p_arg)->required();
    hl_cmd->add_option("Q1", q_arg)->required();
    hl_cmd->add_option("P2", p2_arg)->required();
    hl_cmd->add_option("Q2", q2_arg)->required();

    auto* dc_cmd = app.add_subcommand("dc", "counting distance between absolute points");
    dc_cmd->add_option("R1", r1_arg, "rational as p/q, an integer, or inf")->required();
    dc_cmd->add_option("R2", r2_arg)->required();

    auto* dct_cmd = app.add_subcommand("dc-triangle",
                                       "counting distance from the base triangle");
    dct_cmd->add_option("R", r1_arg)->required();

    auto* ball_cmd = app.add_subcommand("ball", "flip ball around the standard hexagon");
    ball_cmd->add_option("R", radius, "radius")->required();
    ball_cmd->add_flag("--dot", dot_flag, "emit DOT");

    auto* ms_cmd = app.add_subcommand("mainstream", "minimal-hexagon line of an operator");
    add_matrix(ms_cmd, m1);
    ms_cmd->add_option("--window", window, "fundamental domains on each side");
    ms_cmd->add_flag("--dot", dot_flag, "emit DOT");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("SUITE", suite_arg, "suite name or 'all'")->required();
    verify_cmd->add_option("--pmax", pmax_arg);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--radius", verify_radius);

    std::vector<std::string> argv_copy = args;
    try {
        std::reverse(argv_copy.begin(), argv_copy.end());
        app.parse(argv_copy);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (euclid_cmd->parsed()) {
            Int p = parse_int(p_arg), q = parse_int(q_arg);
            out << "E(" << p.get_str() << "," << q.get_str()
                << ") = " << euclid_complexity(p, q).get_str() << "\n";
            Int hi = std::max(p, q), lo = std::min(p, q);
            if (lo >= 1) {
                ContinuedFraction cf = continued_fraction(hi, lo);
                out << "continued fraction: [";
                for (size_t i = 0; i < cf.terms.size(); ++i)
                    out << (i ? "," : "") << cf.terms[i].get_str();
                out << "]\n";
                if (hi > lo) {
                    EuclidWord word = euclid_word(hi, lo);
                    out << "row word: " << word.text() << " = " << to_string(word.product)
                        << "\n";
                }
            }
        } else if (cmat_cmd->parsed()) {
            Mat a = parse_mat(m1);
            out << matrix_complexity(a).get_str() << "\n";
            if (trace_flag) {
                FlipPath path = descend_to_standard(Hexagon::standard().apply(a));
                for (const auto& h : path.hexagons) out << h.text() << "\n";
            }
        } else if (cop_cmd->parsed()) {
            print_operator_summary(out, parse_mat(m1));
        } else if (bundle_cmd->parsed()) {
            TorusBundleReport rep = torus_bundle_report(parse_mat(m1));
            if (json_flag) out << to_json(rep).dump(2) << "\n";
            else print_bundle_text(out, rep);
        } else if (census_cmd->parsed()) {
            SpineCensus census = spine_census(parse_mat(m1));
            if (json_flag) out << to_json(census).dump(2) << "\n";
            else print_census_text(out, census);
        } else if (hb_cmd->parsed()) {
            bool same = bundles_homeomorphic(parse_mat(m1), parse_mat(m2));
            out << (same ? "homeomorphic" : "not homeomorphic") << "\n";
        } else if (lens_cmd->parsed()) {
            LensReport rep = lens_report(parse_int(p_arg), parse_int(q_arg));
            if (json_flag) out << to_json(rep).dump(2) << "\n";
            else {
                out << "L(" << rep.p.get_str() << "," << rep.q.get_str() << "): canonical q "
                    << rep.canonical_q.get_str() << ", E = " << rep.euclid.get_str() << "\n";
                out << "conjectured complexity: " << rep.conjectured_complexity.get_str()
                    << (rep.special_small ? " (complexity-0 space)" : "") << "\n";
                out << "gluing matrix: " << to_string(rep.gluing_matrix) << "\n";
                out << "twist distance: " << rep.twist_distance.get_str()
                    << ", spine vertices: " << rep.spine_vertices.get_str() << "\n";
            }
        } else if (hl_cmd->parsed()) {
            bool same = lens_homeomorphic(parse_int(p_arg), parse_int(q_arg),
                                          parse_int(p2_arg), parse_int(q2_arg));
            out << (same ? "homeomorphic" : "not homeomorphic") << "\n";
        } else if (dc_cmd->parsed()) {
            out << dc_rationals(parse_rational(r1_arg), parse_rational(r2_arg)).get_str()
                << "\n";
        } else if (dct_cmd->parsed()) {
            out << dc_triangle_point(FareyTriangle::base(), parse_rational(r1_arg)).get_str()
                << "\n";
        } else if (ball_cmd->parsed()) {
            if (dot_flag) out << export_dot_ball(Hexagon::standard(), radius);
            else
                for (const auto& [hex, d] : bfs_ball(Hexagon::standard(), radius))
                    out << d << " " << hex.text() << "\n";
        } else if (ms_cmd->parsed()) {
            auto line = mainstream(parse_mat(m1), window);
            if (dot_flag) out << export_dot_chain(line);
            else
                for (const auto& hex : line) out << hex.text() << "\n";
        } else if (verify_cmd->parsed()) {
            SuiteOptions opt;
            opt.pmax = parse_int(pmax_arg);
            opt.seed = seed;
            opt.radius = verify_radius;
            auto results = run_suite(suite_arg, opt);
            bool all_pass = true;
            for (const auto& r : results) {
                out << (r.pass ? "[PASS] " : "[FAIL] ") << r.label;
                if (!r.detail.empty()) out << " -- " << r.detail;
                out << "\n";
                all_pass = all_pass && r.pass;
            }
            out << (all_pass ? "all checks passed" : "FAILURES FOUND") << "\n";
            return all_pass ? 0 : 1;
        }
        return 0;
    } catch (const DomainError& e) {
        err << "error " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace hexflip
