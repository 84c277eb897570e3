// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 bad input, 3 internal invariant violation.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zk/error.hpp"
#include "zk/io.hpp"
#include "zk/momentangle.hpp"
#include "zk/reference.hpp"
#include "zk/whitehead.hpp"

namespace {

using zk::Json;

enum Exit
{
    kOk = 0,
    kVerifyFailed = 1,
    kBadInput = 2,
    kInternal = 3
};

struct Options
{
    bool json = false;
    std::string file;
    std::string expr;
    bool by_subset = false;
    int dim = 0;
    int max_brackets = 2;
    int wdelta_brackets = 3;
};

std::string torsion_text(const zk::HomologyGroup& g)
{
    if (g.torsion.empty())
        return "-";
    std::string out;
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        out += (i ? "," : "") + g.torsion[i].str();
    return out;
}

void print_table(const zk::GradedHomology& h)
{
    std::cout << "degree | rank | torsion\n";
    for (const auto& [d, g] : h)
    {
        std::ostringstream row;
        row.width(6);
        row << d << " | ";
        row.width(4);
        row << g.rank << " | " << torsion_text(g);
        std::cout << row.str() << "\n";
    }
}

void print_report(const zk::EvidenceReport& r)
{
    std::cout << zk::to_string(r.verdict);
    if (r.extrapolated)
        std::cout << " (extrapolated criterion)";
    std::cout << "\n";
    for (const auto& c : r.certificates)
        std::cout << "  " << c.claim << ": " << c.witness << "\n";
}

int cmd_homology(const Options& o)
{
    zk::GradedHomology h = zk::reduced_simplicial_homology(zk::read_complex_file(o.file));
    if (o.json)
        std::cout << Json{{"command", "homology"}, {"groups", zk::to_json(h)}}.dump(2) << "\n";
    else
        print_table(h);
    return kOk;
}

int cmd_zk(const Options& o)
{
    zk::GradedHomology h = zk::zk_homology(zk::read_complex_file(o.file));
    const zk::HomologyGroup base = h.count(0) ? h.at(0) : zk::HomologyGroup{};
    zk::GradedHomology reduced = zk::reduced_part(h);
    if (o.json)
    {
        Json doc{{"command", "zk"}, {"groups", zk::to_json(reduced)}, {"degree_0_rank", base.rank}};
        std::cout << doc.dump(2) << "\n";
        return kOk;
    }
    print_table(reduced);
    std::cout << "degree 0: rank " << base.rank << " (basepoint class)\n";
    return kOk;
}

int cmd_hochster(const Options& o)
{
    zk::SimplicialComplex k = zk::read_complex_file(o.file);
    zk::HochsterDecomposition dec = zk::hochster_decomposition(k);
    zk::GradedHomology reduced = zk::reduced_part(dec.totals);
    if (o.json)
    {
        Json doc{{"command", "hochster"}, {"groups", zk::to_json(reduced)}};
        if (o.by_subset)
        {
            Json rows = Json::array();
            for (const auto& s : dec.summands)
                for (const auto& [q, g] : s.groups)
                {
                    Json torsion = Json::array();
                    for (const auto& t : g.torsion)
                        torsion.push_back(zk::to_json(t));
                    rows.push_back(Json{{"subset", zk::to_json(s.j)}, {"simplicial_degree", q}, {"degree", s.shifted(q)},
                                        {"rank", g.rank}, {"torsion", torsion}});
                }
            doc["by_subset"] = rows;
        }
        std::cout << doc.dump(2) << "\n";
        return kOk;
    }
    print_table(reduced);
    if (o.by_subset)
    {
        std::cout << "\nsubset | reduced homology of K_J | degree in Z_K\n";
        for (const auto& s : dec.summands)
            for (const auto& [q, g] : s.groups)
                std::cout << s.j.to_string() << " | H~_" << q << " = " << g.to_string() << " | " << s.shifted(q) << "\n";
    }
    return kOk;
}

int cmd_hurewicz(const Options& o)
{
    zk::WhiteheadExpr w = zk::parse_expr(o.expr);
    zk::KoszulChain chain = zk::hurewicz_chain(w);
    if (o.json)
    {
        Json doc{{"command", "hurewicz"}, {"expr", w.to_string()}, {"dimension", zk::dimension(w)}, {"chain", zk::to_json(chain)}};
        std::cout << doc.dump(2) << "\n";
    }
    else
        std::cout << w.to_string() << "  degree " << zk::dimension(w) << "\n" << chain.to_string() << "\n";
    return kOk;
}

int cmd_minimal(const Options& o)
{
    zk::MinimalComplex minimal = zk::minimal_complex(zk::parse_expr(o.expr));
    Json doc = zk::complex_document(minimal.complex);
    std::cout << (o.json ? doc.dump(2) : doc.dump()) << "\n";
    return kOk;
}

int report_command(const Options& o, const char* name, zk::EvidenceReport (*query)(const zk::WhiteheadExpr&, const zk::SimplicialComplex&))
{
    zk::WhiteheadExpr w = zk::parse_expr(o.expr);
    zk::EvidenceReport r = query(w, zk::read_complex_file(o.file));
    if (o.json)
    {
        Json doc{{"command", name}, {"expr", w.to_string()}};
        doc.update(zk::to_json(r));
        std::cout << doc.dump(2) << "\n";
    }
    else
    {
        std::cout << w.to_string() << ": ";
        print_report(r);
    }
    return kOk;
}

int cmd_enumerate(const Options& o)
{
    zk::SimplicialComplex k = zk::read_complex_file(o.file);
    auto products = zk::enumerate_products(k, o.dim, o.max_brackets);
    std::size_t candidates = 0;
    Json rows = Json::array();
    for (const auto& p : products)
    {
        candidates += p.candidate() ? 1 : 0;
        if (o.json)
        {
            Json inner = Json::array();
            for (const auto& [b, r] : p.inner)
                inner.push_back(Json{{"bracket", b.to_string()}, {"verdict", zk::to_string(r.verdict)},
                                     {"missing_face", r.missing_face ? zk::to_json(*r.missing_face) : Json(nullptr)}});
            rows.push_back(Json{{"expr", p.expr.to_string()}, {"defined", zk::to_json(p.defined)}, {"inner", inner},
                                {"candidate", p.candidate()}});
            continue;
        }
        std::cout << p.expr.to_string() << "  " << zk::to_string(p.defined.verdict);
        if (p.defined.missing_face)
            std::cout << " (missing " << p.defined.missing_face->to_string() << ")";
        for (const auto& [b, r] : p.inner)
            std::cout << "  inner " << b.to_string() << " " << zk::to_string(r.verdict);
        if (p.candidate())
            std::cout << "  candidate";
        std::cout << "\n";
    }
    if (o.json)
    {
        Json doc{{"command", "enumerate"}, {"dimension", o.dim}, {"max_brackets", o.max_brackets}, {"products", rows},
                 {"candidates", candidates}};
        std::cout << doc.dump(2) << "\n";
    }
    else
        std::cout << products.size() << " products, " << candidates << " defined with nontrivial inner brackets\n";
    return kOk;
}

int cmd_wdelta(const Options& o)
{
    zk::WDeltaReport r = zk::wdelta_evidence(zk::read_complex_file(o.file), o.wdelta_brackets);
    if (o.json)
    {
        Json blocks = Json::array();
        for (const auto& b : r.blocks)
        {
            Json basis = Json::array();
            for (const auto& w : b.basis)
                basis.push_back(w.to_string());
            blocks.push_back(Json{{"degree", b.degree}, {"support", zk::to_json(b.support)}, {"group", b.group.to_string()},
                                  {"rank", b.group.rank}, {"candidates", b.candidates.size()}, {"span_rank", b.span_rank},
                                  {"matched", b.matched}, {"basis", basis}});
        }
        Json doc{{"command", "wdelta"}, {"max_brackets", o.wdelta_brackets}, {"verdict", zk::to_string(r.report.verdict)},
                 {"unmatched_degrees", r.unmatched_degrees}, {"blocks", blocks}};
        std::cout << doc.dump(2) << "\n";
        return kOk;
    }
    print_report(r.report);
    return kOk;
}

int cmd_verify(const Options& o)
{
    auto results = zk::reference::run_reference_checks();
    bool all = true;
    Json rows = Json::array();
    for (const auto& r : results)
    {
        all = all && r.pass;
        if (o.json)
            rows.push_back(Json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        else
            std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  [" << r.detail << "]\n";
    }
    if (o.json)
        std::cout << Json{{"command", "verify-paper"}, {"pass", all}, {"checks", rows}}.dump(2) << "\n";
    return all ? kOk : kVerifyFailed;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homology of moment-angle complexes and higher Whitehead products"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Machine-readable output");

    auto file_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.file, "Complex document {\"m\":..., \"maximal_faces\":[[...]]}")->required();
        return sub;
    };
    auto expr_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("expr", o.expr, "Bracket expression, e.g. [1,2,[3,4,5]]")->required();
        return sub;
    };

    auto* homology = file_command("homology", "Reduced simplicial homology of K");
    auto* zk_cmd = file_command("zk", "H_*(Z_K) from the Koszul complex R_*(K)");
    auto* hochster = file_command("hochster", "H_*(Z_K) as a sum over full subcomplexes");
    hochster->add_flag("--by-subset", o.by_subset, "List the contribution of every subset J");
    auto* hurewicz = expr_command("hurewicz", "Hurewicz cellular chain of a nested product");
    auto* minimal = expr_command(
        "minimal", "Smallest complex realizing a nested product (leaf labels kept; J_n puts its new simplex on the lowest labels)");
    auto* defined = expr_command("defined", "Is the product defined in K");
    defined->add_option("file", o.file, "Complex document")->required();
    auto* realize = expr_command("realize", "Homology-level evidence that K realizes the product");
    realize->add_option("file", o.file, "Complex document")->required();
    auto* enumerate = file_command("enumerate", "All bracket trees of a given dimension on the vertices of K");
    enumerate->add_option("--dim", o.dim, "Target sphere dimension")->required()->check(CLI::Range(3, 1000));
    enumerate->add_option("--max-brackets", o.max_brackets, "Largest number of brackets")->check(CLI::Range(1, 64));
    auto* wdelta = file_command("wdelta", "Match a homology basis of Z_K by Hurewicz classes of nested products");
    wdelta->add_option("--max-brackets", o.wdelta_brackets, "Largest number of nested levels")->check(CLI::Range(1, 64));
    auto* verify = app.add_subcommand("verify-paper", "Rerun the built-in reference checks");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try
    {
        if (homology->parsed())
            return cmd_homology(o);
        if (zk_cmd->parsed())
            return cmd_zk(o);
        if (hochster->parsed())
            return cmd_hochster(o);
        if (hurewicz->parsed())
            return cmd_hurewicz(o);
        if (minimal->parsed())
            return cmd_minimal(o);
        if (defined->parsed())
            return report_command(o, "defined", zk::is_defined);
        if (realize->parsed())
            return report_command(o, "realize", zk::realize_evidence);
        if (enumerate->parsed())
            return cmd_enumerate(o);
        if (wdelta->parsed())
            return cmd_wdelta(o);
        if (verify->parsed())
            return cmd_verify(o);
    }
    catch (const zk::Error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == zk::ErrorKind::InternalInvariant ? kInternal : kBadInput;
    }
    catch (const std::exception& e)
    {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kBadInput;
}
