// Command-line front end: one subcommand per library operation, flat-file
// input and output, deterministic bytes for identical invocations.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdesign/amalgam.hpp"
#include "pdesign/canonical.hpp"
#include "pdesign/closure.hpp"
#include "pdesign/embedding.hpp"
#include "pdesign/enumeration.hpp"
#include "pdesign/errors.hpp"
#include "pdesign/io.hpp"
#include "pdesign/ramsey.hpp"
#include "pdesign/structure.hpp"

namespace {

using nlohmann::json;
using namespace pdesign;

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;

struct Options {
    bool json_output = false;
};

std::string vertices_string(VertexSet s) {
    std::string out;
    bool first = true;
    for (int v : to_vertices(s)) {
        if (!first) out += ' ';
        first = false;
        out += std::to_string(v);
    }
    return out;
}

std::vector<int> parse_vertex_list(const std::string& csv) {
    std::vector<int> out;
    std::string token;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!token.empty()) out.push_back(std::stoi(token));
            token.clear();
        } else {
            token += c;
        }
    }
    return out;
}

void emit(const Options& opts, const json& record, const std::string& text) {
    if (opts.json_output)
        std::cout << record.dump() << '\n';
    else
        std::cout << text;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write file: " + path);
    out << content;
}

int cmd_validate(const Options& opts, const std::string& file) {
    OrderedDesign d = read_design_file(file);
    ValidationReport report = validate(d.design);
    json record = {{"command", "validate"}, {"ok", report.ok}, {"violations", json::array()}};
    std::string text;
    if (report.ok) {
        text = "ok\n";
    } else {
        for (const Violation& v : report.violations) {
            record["violations"].push_back({{"rule", v.rule}, {"subset", to_vertices(v.subset)}});
            text += "violation " + v.rule + " " + vertices_string(v.subset) + "\n";
        }
    }
    emit(opts, record, text);
    return report.ok ? kExitHolds : kExitRefuted;
}

int cmd_encode(const Options&, const std::string& file, const std::string& out) {
    OrderedDesign d = read_design_file(file);
    write_output(out, write_structure(encode(d)));
    return kExitHolds;
}

int cmd_decode(const Options&, const std::string& file, const std::string& out) {
    OrderedStructure s = read_structure_file(file);
    OrderedDesign d;
    try {
        d = decode(s);
    } catch (const InconsistentStructure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    write_output(out, write_design(d));
    return kExitHolds;
}

int cmd_closure(const Options& opts, const std::string& file, const std::string& set_csv,
                bool check_only) {
    OrderedDesign d = read_design_file(file);
    VertexSet subset = from_vertices(parse_vertex_list(set_csv));
    if (!is_subset(subset, full_set(d.design.n))) throw InvalidInput("subset vertex out of range");
    if (check_only) {
        bool closed = is_closed(d.design, subset);
        emit(opts, {{"command", "closed"}, {"closed", closed}},
             closed ? "closed\n" : "not-closed\n");
        return closed ? kExitHolds : kExitRefuted;
    }
    VertexSet cl = closure_of(d.design, subset);
    emit(opts, {{"command", "closure"}, {"closure", to_vertices(cl)}}, vertices_string(cl) + "\n");
    return kExitHolds;
}

int cmd_copies(const Options& opts, const std::string& a_file, const std::string& b_file) {
    OrderedDesign a = read_design_file(a_file);
    OrderedDesign b = read_design_file(b_file);
    std::vector<Copy> copies = enumerate_copies(a, b);
    json record = {{"command", "copies"}, {"count", copies.size()}, {"copies", json::array()}};
    std::string text = std::to_string(copies.size()) + "\n";
    for (const Copy& c : copies) {
        record["copies"].push_back(to_vertices(c.vertices));
        text += vertices_string(c.vertices) + "\n";
    }
    emit(opts, record, text);
    return kExitHolds;
}

int cmd_canon(const Options& opts, const std::string& file, const std::string& emit_path,
              int bound) {
    OrderedDesign d = read_design_file(file);
    CanonicalResult canon = canonical_form(d.design, bound);
    std::string digest = hex_digest(canon.bytes);
    if (!emit_path.empty()) {
        OrderedDesign canonical = make_ordered(
            make_design(d.design.params, d.design.n, canon.blocks));
        write_design_file(emit_path, canonical);
    }
    emit(opts, {{"command", "canon"}, {"digest", digest}}, digest + "\n");
    return kExitHolds;
}

int cmd_amalgam(const Options& opts, const std::string& a_file, const std::string& b1_file,
                const std::string& b2_file, const std::string& m1_file, const std::string& m2_file,
                const std::string& out, bool certificate) {
    OrderedDesign a = read_design_file(a_file);
    OrderedDesign b1 = read_design_file(b1_file);
    OrderedDesign b2 = read_design_file(b2_file);
    OrderedAmalgamProblem p;
    p.alpha1 = read_map_file(m1_file, a.design.n);
    p.alpha2 = read_map_file(m2_file, a.design.n);
    p.base = std::move(a);
    p.left = std::move(b1);
    p.right = std::move(b2);
    OrderedAmalgamResult r = free_amalgam(p);
    write_output(out, write_design(r.amalgam));
    if (certificate && !opts.json_output) {
        std::cout << "certificate commutes ok\n"
                  << "certificate free ok\n"
                  << "certificate valid " << (validate(r.amalgam.design).ok ? "ok" : "FAIL") << "\n"
                  << "certificate beta1-closed "
                  << (is_closed(r.amalgam.design,
                                from_vertices(r.beta1))
                          ? "ok"
                          : "FAIL")
                  << "\n"
                  << "certificate beta2-closed "
                  << (is_closed(r.amalgam.design, from_vertices(r.beta2)) ? "ok" : "FAIL") << "\n";
    }
    return kExitHolds;
}

int cmd_joint(const Options&, const std::string& b1_file, const std::string& b2_file,
              const std::string& out) {
    OrderedDesign b1 = read_design_file(b1_file);
    OrderedDesign b2 = read_design_file(b2_file);
    OrderedAmalgamResult r = joint_embedding(b1, b2);
    write_output(out, write_design(r.amalgam));
    return kExitHolds;
}

int cmd_axioms(const Options& opts, int k, int t, int lambda, int bound, std::uint64_t budget) {
    ClassAxiomReport report = check_class_axioms(make_params(k, t, lambda), bound, budget);
    json record = {{"command", "axioms"},
                   {"hereditary", report.hereditary},
                   {"joint_embedding", report.joint_embedding},
                   {"amalgamation", report.amalgamation},
                   {"structures_checked", report.structures_checked},
                   {"problems_checked", report.problems_checked},
                   {"counterexamples", report.counterexamples}};
    std::string text;
    text += std::string("hereditary ") + (report.hereditary ? "ok" : "FAIL") + "\n";
    text += std::string("joint-embedding ") + (report.joint_embedding ? "ok" : "FAIL") + "\n";
    text += std::string("amalgamation ") + (report.amalgamation ? "ok" : "FAIL") + "\n";
    for (const std::string& c : report.counterexamples) text += "counterexample " + c + "\n";
    emit(opts, record, text);
    return report.all_hold() ? kExitHolds : kExitRefuted;
}

int cmd_orderings(const Options& opts, const std::string& file, bool distinct,
                  const std::string& out_dir, std::uint64_t budget) {
    OrderedDesign d = read_design_file(file);
    std::vector<OrderedDesign> all = orderings(d.design, distinct, budget);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < all.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof(name), "%06zu.design", i);
            write_design_file(out_dir + "/" + name, all[i]);
        }
    }
    emit(opts, {{"command", "orderings"}, {"count", all.size()}, {"distinct", distinct}},
         std::to_string(all.size()) + "\n");
    return kExitHolds;
}

int cmd_arrow(const Options& opts, const std::string& c_file, const std::string& b_file,
              const std::string& a_file, int r, std::uint64_t budget, bool naive) {
    OrderedDesign c = read_design_file(c_file);
    OrderedDesign b = read_design_file(b_file);
    OrderedDesign a = read_design_file(a_file);
    ArrowVerdict verdict = arrow_check(c, b, a, r, budget, naive);
    json record = {{"command", "arrow"},
                   {"holds", verdict.holds},
                   {"colorings_checked", verdict.colorings_checked}};
    std::string text;
    if (verdict.holds) {
        text = "holds\n";
    } else {
        record["witness"] = *verdict.witness;
        text = "refuted\n";
        for (std::size_t i = 0; i < verdict.witness->size(); ++i)
            text += std::to_string(i) + ":" + std::to_string((*verdict.witness)[i]) + "\n";
    }
    emit(opts, record, text);
    return verdict.holds ? kExitHolds : kExitRefuted;
}

int cmd_enumerate(const Options& opts, int k, int t, int lambda, int n, bool complete_only,
                  const std::string& out_dir, std::uint64_t budget) {
    EnumerationCensus census =
        enumerate_partial_designs(make_params(k, t, lambda), n, complete_only, budget);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < census.representatives.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof(name), "%06zu.design", i);
            write_design_file(out_dir + "/" + name, make_ordered(census.representatives[i]));
        }
    }
    emit(opts,
         {{"command", "enumerate"},
          {"n", census.n},
          {"classes", census.representatives.size()},
          {"labeled", census.labeled}},
         std::to_string(census.n) + " " + std::to_string(census.representatives.size()) + " " +
             std::to_string(census.labeled) + "\n");
    return kExitHolds;
}

int cmd_complete(const Options& opts, const std::string& file, int grow_n, const std::string& out,
                 std::uint64_t budget) {
    OrderedDesign d = read_design_file(file);
    std::optional<PartialDesign> completed =
        grow_n > 0 ? complete_design_growing(d.design, grow_n, budget)
                   : complete_design(d.design, budget);
    if (!completed) {
        emit(opts, {{"command", "complete"}, {"found", false}}, "no completion\n");
        return kExitRefuted;
    }
    write_output(out, write_design(make_ordered(*completed)));
    return kExitHolds;
}

int cmd_count_completions(const Options& opts, const std::string& file, std::uint64_t budget) {
    OrderedDesign d = read_design_file(file);
    std::uint64_t count = count_completions(d.design, budget);
    emit(opts, {{"command", "count-completions"}, {"count", count}}, std::to_string(count) + "\n");
    return kExitHolds;
}

int cmd_admissible(const Options& opts, int k, int t, int lambda, int n) {
    bool ok = divisibility_admissible(make_params(k, t, lambda), n);
    emit(opts, {{"command", "admissible"}, {"admissible", ok}},
         ok ? "admissible\n" : "inadmissible\n");
    return ok ? kExitHolds : kExitRefuted;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial (k,t,lambda)-design toolkit"};
    app.require_subcommand(1);
    Options opts;
    app.add_flag("--json", opts.json_output, "emit single-line JSON records");

    std::string file, out, out_dir, set_csv;
    std::string a_file, b_file, c_file, b1_file, b2_file, m1_file, m2_file, emit_path;
    int k = 0, t = 0, lambda = 0, n = 0, r = 0, bound = kDefaultCanonicalBound, grow_n = 0;
    std::uint64_t budget = 0;
    bool complete_only = false, distinct = false, naive = false, certificate = false;

    auto* validate_cmd = app.add_subcommand("validate", "check the design rules");
    validate_cmd->add_option("file", file)->required();

    auto* encode_cmd = app.add_subcommand("encode", "design file -> structure text");
    encode_cmd->add_option("file", file)->required();
    encode_cmd->add_option("-o,--out", out);

    auto* decode_cmd = app.add_subcommand("decode", "structure text -> design file");
    decode_cmd->add_option("file", file)->required();
    decode_cmd->add_option("-o,--out", out);

    auto* closure_cmd = app.add_subcommand("closure", "closure of a vertex subset");
    closure_cmd->add_option("file", file)->required();
    closure_cmd->add_option("--set", set_csv, "comma-separated vertex ids")->required();

    auto* closed_cmd = app.add_subcommand("closed", "is the subset closed?");
    closed_cmd->add_option("file", file)->required();
    closed_cmd->add_option("--set", set_csv)->required();

    auto* copies_cmd = app.add_subcommand("copies", "copies of A in B");
    copies_cmd->add_option("--A", a_file)->required();
    copies_cmd->add_option("--B", b_file)->required();

    auto* canon_cmd = app.add_subcommand("canon", "canonical form digest");
    canon_cmd->add_option("file", file)->required();
    canon_cmd->add_option("--emit", emit_path, "write the canonical design file");
    canon_cmd->add_option("--bound", bound, "canonicalization size bound");

    auto* amalgam_cmd = app.add_subcommand("amalgam", "free amalgam of B1, B2 over A");
    amalgam_cmd->add_option("--A", a_file)->required();
    amalgam_cmd->add_option("--B1", b1_file)->required();
    amalgam_cmd->add_option("--B2", b2_file)->required();
    amalgam_cmd->add_option("--alpha1", m1_file)->required();
    amalgam_cmd->add_option("--alpha2", m2_file)->required();
    amalgam_cmd->add_option("-o,--out", out);
    amalgam_cmd->add_flag("--certificate", certificate);

    auto* joint_cmd = app.add_subcommand("joint", "joint embedding (disjoint union)");
    joint_cmd->add_option("--B1", b1_file)->required();
    joint_cmd->add_option("--B2", b2_file)->required();
    joint_cmd->add_option("-o,--out", out);

    auto* axioms_cmd = app.add_subcommand("axioms", "verify the amalgamation-class axioms");
    axioms_cmd->add_option("-k", k)->required();
    axioms_cmd->add_option("-t", t)->required();
    axioms_cmd->add_option("-l,--lambda", lambda)->required();
    axioms_cmd->add_option("--bound", bound)->required();
    axioms_cmd->add_option("--budget", budget)->default_val(100000000ull);

    auto* orderings_cmd = app.add_subcommand("orderings", "all linear orderings");
    orderings_cmd->add_option("file", file)->required();
    orderings_cmd->add_flag("--distinct", distinct, "one per order-isomorphism class");
    orderings_cmd->add_option("--out-dir", out_dir);
    orderings_cmd->add_option("--budget", budget)->default_val(1000000ull);

    auto* arrow_cmd = app.add_subcommand("arrow", "check C -> (B)^A_r");
    arrow_cmd->add_option("--C", c_file)->required();
    arrow_cmd->add_option("--B", b_file)->required();
    arrow_cmd->add_option("--A", a_file)->required();
    arrow_cmd->add_option("-r", r)->required();
    arrow_cmd->add_option("--budget", budget)->default_val(50000000ull);
    arrow_cmd->add_flag("--naive", naive, "skip color-symmetry pruning");

    auto* enum_cmd = app.add_subcommand("enumerate", "census up to isomorphism");
    enum_cmd->add_option("-k", k)->required();
    enum_cmd->add_option("-t", t)->required();
    enum_cmd->add_option("-l,--lambda", lambda)->required();
    enum_cmd->add_option("-n", n)->required();
    enum_cmd->add_flag("--complete-only", complete_only);
    enum_cmd->add_option("--out", out_dir);
    enum_cmd->add_option("--budget", budget)->default_val(50000000ull);

    auto* complete_cmd = app.add_subcommand("complete", "complete a partial design");
    complete_cmd->add_option("file", file)->required();
    complete_cmd->add_option("--grow-n", grow_n, "also try universes up to n+grow-n");
    complete_cmd->add_option("-o,--out", out);
    complete_cmd->add_option("--budget", budget)->default_val(1000000000ull);

    auto* count_cmd = app.add_subcommand("count-completions", "number of labeled completions");
    count_cmd->add_option("file", file)->required();
    count_cmd->add_option("--budget", budget)->default_val(1000000000ull);

    auto* adm_cmd = app.add_subcommand("admissible", "divisibility admissibility");
    adm_cmd->add_option("-k", k)->required();
    adm_cmd->add_option("-t", t)->required();
    adm_cmd->add_option("-l,--lambda", lambda)->required();
    adm_cmd->add_option("-n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(opts, file);
        if (encode_cmd->parsed()) return cmd_encode(opts, file, out);
        if (decode_cmd->parsed()) return cmd_decode(opts, file, out);
        if (closure_cmd->parsed()) return cmd_closure(opts, file, set_csv, false);
        if (closed_cmd->parsed()) return cmd_closure(opts, file, set_csv, true);
        if (copies_cmd->parsed()) return cmd_copies(opts, a_file, b_file);
        if (canon_cmd->parsed()) return cmd_canon(opts, file, emit_path, bound);
        if (amalgam_cmd->parsed())
            return cmd_amalgam(opts, a_file, b1_file, b2_file, m1_file, m2_file, out, certificate);
        if (joint_cmd->parsed()) return cmd_joint(opts, b1_file, b2_file, out);
        if (axioms_cmd->parsed()) return cmd_axioms(opts, k, t, lambda, bound, budget);
        if (orderings_cmd->parsed()) return cmd_orderings(opts, file, distinct, out_dir, budget);
        if (arrow_cmd->parsed()) return cmd_arrow(opts, c_file, b_file, a_file, r, budget, naive);
        if (enum_cmd->parsed())
            return cmd_enumerate(opts, k, t, lambda, n, complete_only, out_dir, budget);
        if (complete_cmd->parsed()) return cmd_complete(opts, file, grow_n, out, budget);
        if (count_cmd->parsed()) return cmd_count_completions(opts, file, budget);
        if (adm_cmd->parsed()) return cmd_admissible(opts, k, t, lambda, n);
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const SizeLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitUsage;
}
