#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ct/enumerate.hpp"
#include "ct/harness.hpp"
#include "ct/moves.hpp"
#include "ct/witness.hpp"

namespace {

ct::Family parse_family(const std::string& s) {
    if (s == "segments") return ct::Family::Segments;
    if (s == "branching") return ct::Family::Branching;
    throw CLI::ValidationError("family must be segments or branching");
}

int cmd_enumerate(int n, int segments, int branching, const std::string& mode, int cap) {
    ct::EnumFilter f;
    if (segments >= 0) f = ct::EnumFilter::segments(segments);
    if (branching >= 0) f = ct::EnumFilter::branching(branching);
    ct::EnumOptions opt;
    opt.order_cap = cap;
    ct::TreeEnumerator e(n, f, opt);
    long long count = 0;
    while (auto t = e.next()) {
        ++count;
        if (mode == "codes") {
            std::cout << ct::canonical_code(*t).hex() << "\n";
        } else if (mode == "edgelists") {
            ct::write_edge_list(*t, std::cout);
            std::cout << "\n";
        }
    }
    if (mode == "count") std::cout << count << "\n";
    return 0;
}

int cmd_bounds(ct::Family fam, int n, int p, const std::string& index, bool as_json) {
    std::vector<ct::Index> idxs;
    if (index == "m1" || index == "both") idxs.push_back(ct::Index::M1);
    if (index == "m2" || index == "both") idxs.push_back(ct::Index::M2);
    std::ostringstream json;
    json << "{";
    bool first = true;
    for (ct::Index idx : idxs) {
        ct::BoundResult r = ct::max_value({fam, n, p, idx});
        if (as_json) {
            json << (first ? "" : ",") << "\"" << ct::index_name(idx) << "\":{\"value\":"
                 << r.value << ",\"regime\":\"" << r.regime << "\",\"equality_class\":\""
                 << r.equality_class << "\"}";
        } else {
            std::cout << ct::index_name(idx) << " max = " << r.value << "  regime: " << r.regime
                      << "  equality class: " << r.equality_class << "\n";
        }
        first = false;
    }
    if (as_json) std::cout << json.str() << "}\n";
    return 0;
}

int cmd_witness(ct::Family fam, int n, int p, const std::string& out_file) {
    ct::ChemicalTree t = ct::build_witness(fam, n, p);
    if (out_file.empty()) {
        ct::write_edge_list(t, std::cout);
    } else {
        std::ofstream out(out_file);
        if (!out) throw ct::IoError("cannot open " + out_file);
        ct::write_edge_list(t, out);
    }
    return 0;
}

int cmd_verify(const std::string& family, int n_min, int n_max, const std::string& index,
               const std::string& report_file, const std::string& format, int jobs,
               bool no_cache) {
    std::vector<ct::Family> fams;
    if (family == "both" || family == "segments") fams.push_back(ct::Family::Segments);
    if (family == "both" || family == "branching") fams.push_back(ct::Family::Branching);
    if (fams.empty()) throw CLI::ValidationError("family must be segments, branching or both");
    ct::VerifyOptions opts;
    opts.jobs = jobs;
    opts.use_cache = !no_cache;
    if (index == "m1") {
        opts.both_indices = false;
        opts.only_index = ct::Index::M1;
    } else if (index == "m2") {
        opts.both_indices = false;
        opts.only_index = ct::Index::M2;
    }
    ct::Report rep = ct::verify_family(fams, n_min, n_max, opts);
    ct::ReportFormat fmt = format == "json"  ? ct::ReportFormat::Json
                           : format == "csv" ? ct::ReportFormat::Csv
                                             : ct::ReportFormat::Text;
    std::string body = ct::emit_report(rep, fmt);
    if (report_file.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(report_file);
        if (!out) throw ct::IoError("cannot open " + report_file);
        out << body;
        std::cout << "report written to " << report_file << " (" << rep.pass_count() << " pass, "
                  << rep.fail_count() << " fail)\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_moves(const std::string& in_file, ct::Family fam, int apply_index) {
    std::ifstream in(in_file);
    if (!in) throw ct::IoError("cannot open " + in_file);
    ct::ChemicalTree t = ct::read_edge_list(in);
    std::vector<ct::MoveSpec> moves = ct::find_moves(t, fam);
    if (apply_index < 0) {
        int i = 0;
        for (const auto& m : moves) {
            std::cout << i++ << ": " << ct::move_kind_name(m.kind) << " sites";
            for (int s : m.sites) std::cout << " " << s;
            std::cout << "\n";
        }
        if (moves.empty()) std::cout << "no applicable moves\n";
        return 0;
    }
    if (apply_index >= static_cast<int>(moves.size()))
        throw ct::Error("move index out of range (have " + std::to_string(moves.size()) + ")");
    ct::ChemicalTree t2 = ct::apply_move(t, moves[apply_index]);
    std::cout << "before:\n";
    ct::write_edge_list(t, std::cout);
    std::cout << "after:\n";
    ct::write_edge_list(t2, std::cout);
    std::cout << "M1: " << ct::zagreb_m1(t) << " -> " << ct::zagreb_m1(t2)
              << " (delta " << ct::zagreb_m1(t2) - ct::zagreb_m1(t) << ")\n";
    std::cout << "M2: " << ct::zagreb_m2(t) << " -> " << ct::zagreb_m2(t2)
              << " (delta " << ct::zagreb_m2(t2) - ct::zagreb_m2(t) << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chemical tree enumeration, Zagreb index bounds and verification"};
    app.require_subcommand(1);

    // enumerate
    auto* enu = app.add_subcommand("enumerate", "enumerate chemical trees");
    int e_n = 0, e_seg = -1, e_br = -1, e_cap = 20;
    bool e_count = false, e_codes = false, e_edges = false;
    enu->add_option("--n", e_n, "number of vertices")->required();
    auto* segopt = enu->add_option("--segments", e_seg, "restrict to k segments");
    enu->add_option("--branching", e_br, "restrict to b branching vertices")->excludes(segopt);
    enu->add_flag("--count", e_count, "print the class size (default)");
    enu->add_flag("--codes", e_codes, "print canonical codes, one per line");
    enu->add_flag("--edgelists", e_edges, "print edge lists");
    enu->add_option("--cap", e_cap, "enumeration order cap (default 20)");

    // bounds
    auto* bnd = app.add_subcommand("bounds", "closed-form maximum for a class");
    std::string b_family, b_index = "both";
    int b_n = 0, b_p = 0;
    bool b_json = false;
    bnd->add_option("--family", b_family, "segments|branching")->required();
    bnd->add_option("--n", b_n, "number of vertices")->required();
    bnd->add_option("--p", b_p, "segment count k or branching count b")->required();
    bnd->add_option("--index", b_index, "m1|m2|both");
    bnd->add_flag("--json", b_json, "JSON output");

    // witness
    auto* wit = app.add_subcommand("witness", "construct an extremal tree");
    std::string w_family, w_out;
    int w_n = 0, w_p = 0;
    wit->add_option("--family", w_family, "segments|branching")->required();
    wit->add_option("--n", w_n, "number of vertices")->required();
    wit->add_option("--p", w_p, "segment count k or branching count b")->required();
    wit->add_option("--out", w_out, "write edge list to file (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "brute-force verification of the closed forms");
    std::string v_family = "both", v_index = "both", v_report, v_format = "text";
    int v_min = 4, v_max = 14, v_jobs = 1;
    bool v_nocache = false;
    ver->add_option("--family", v_family, "segments|branching|both");
    ver->add_option("--n-min", v_min, "smallest order");
    ver->add_option("--n-max", v_max, "largest order");
    ver->add_option("--index", v_index, "m1|m2|both");
    ver->add_option("--report", v_report, "write the report to a file");
    ver->add_option("--format", v_format, "json|csv|text");
    ver->add_option("--jobs", v_jobs, "parallel cell workers");
    ver->add_flag("--no-cache", v_nocache, "disable the canonical-code cache");

    // moves
    auto* mov = app.add_subcommand("moves", "list/apply index-increasing rewrites");
    std::string m_in, m_family;
    int m_apply = -1;
    mov->add_option("--in", m_in, "edge-list file")->required();
    mov->add_option("--family", m_family, "segments|branching")->required();
    mov->add_option("--apply", m_apply, "apply the i-th listed move");

    try {
        app.parse(argc, argv);
        if (*enu) {
            std::string mode = e_codes ? "codes" : e_edges ? "edgelists" : "count";
            (void)e_count;
            return cmd_enumerate(e_n, e_seg, e_br, mode, e_cap);
        }
        if (*bnd) return cmd_bounds(parse_family(b_family), b_n, b_p, b_index, b_json);
        if (*wit) return cmd_witness(parse_family(w_family), w_n, w_p, w_out);
        if (*ver)
            return cmd_verify(v_family, v_min, v_max, v_index, v_report, v_format, v_jobs,
                              v_nocache);
        if (*mov) return cmd_moves(m_in, parse_family(m_family), m_apply);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ct::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
