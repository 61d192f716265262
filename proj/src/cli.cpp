#include "cyclohecke/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "cyclohecke/blocks.hpp"
#include "cyclohecke/checks.hpp"
#include "cyclohecke/expr.hpp"
#include "cyclohecke/io.hpp"

namespace cyclohecke {

namespace {

using nlohmann::json;

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty entry in rational list");
        size_t b = item.find_last_not_of(" \t");
        out.push_back(parse_rat(item.substr(a, b - a + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

struct SpecOptions {
    int d = 0;
    int l = 0;  // 0 = not given
    std::string roots, coeffs;

    void attach(CLI::App* cmd, bool roots_required) {
        cmd->add_option("--d", d, "rank d")->required();
        cmd->add_option("--l", l, "level l (inferred from --roots/--coeffs when omitted)");
        auto* r = cmd->add_option("--roots", roots, "comma-separated rational roots q_1,..,q_l");
        auto* c = cmd->add_option("--coeffs", coeffs, "comma-separated coefficients c_1,..,c_l");
        if (roots_required)
            r->required();
        else
            r->excludes(c), c->excludes(r);
    }

    SpecPtr build() const {
        if (!roots.empty() && !coeffs.empty())
            throw std::invalid_argument("give exactly one of --roots and --coeffs");
        if (roots.empty() && coeffs.empty())
            throw std::invalid_argument("give exactly one of --roots and --coeffs");
        SpecPtr spec = roots.empty() ? CyclotomicSpec::from_coeffs(d, parse_rat_list(coeffs))
                                     : CyclotomicSpec::from_roots(d, parse_rat_list(roots));
        if (l != 0 && l != spec->l())
            throw std::invalid_argument("--l disagrees with the number of roots/coefficients");
        return spec;
    }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_nf(const SpecOptions& so, const std::string& expr_src, const std::string& format,
           std::ostream& out) {
    SpecPtr spec = so.build();
    HeckeElement e = evaluate(parse(expr_src), spec);
    if (format == "json")
        out << dump(element_to_json(e));
    else
        out << e.to_string() << "\n";
    return 0;
}

int cmd_graded_nf(int d, int l, const std::string& expr_src, const std::string& format,
                  std::ostream& out) {
    if (d < 1 || l < 1) throw std::invalid_argument("need d >= 1 and l >= 1");
    GradedElement e = evaluate_graded(parse(expr_src), d, l);
    if (format == "json")
        out << dump(graded_to_json(e));
    else
        out << e.to_string() << "\n";
    return 0;
}

int cmd_center(const SpecOptions& so, const std::string& format, std::ostream& out) {
    SpecPtr spec = so.build();
    auto basis = center_basis_bruteforce(spec);  // verifies dim and the p-span
    auto p_set = enumerate_p_set(spec->d(), spec->l());
    if (format == "json") {
        json j;
        j["spec"] = spec_to_json(*spec);
        json arr = json::array();
        for (const auto& mu : p_set) {
            json jb;
            jb["mu"] = partition_to_json(mu);
            jb["element"] = element_to_json(p_element(mu, spec));
            arr.push_back(std::move(jb));
        }
        j["basis"] = std::move(arr);
        out << dump(j);
    } else {
        out << "spec: " << spec->to_string() << "\n";
        out << "center dimension: " << basis.size() << "\n";
        for (const auto& mu : p_set)
            out << "p" << mu.to_string() << " = " << p_element(mu, spec).to_string() << "\n";
    }
    return 0;
}

int cmd_graded_center(int d, int l, const std::string& format, std::ostream& out) {
    if (d < 1 || l < 1) throw std::invalid_argument("need d >= 1 and l >= 1");
    auto mps = enumerate_multipartitions(d, l);
    // cross-check: the class sums must be an independent family spanning
    // the brute-force center
    {
        MonomialBasis basis(d, l);
        auto brute = center_basis_bruteforce(d, l);
        RowSpace span(basis.size());
        for (const auto& mp : mps)
            if (!span.insert(basis.to_vector(class_sum(mp, d, l).terms())))
                throw std::logic_error("class sums are linearly dependent");
        for (const auto& z : brute)
            if (!span.contains(basis.to_vector(z.terms())))
                throw std::logic_error("class sums do not span the graded center");
    }
    if (format == "json") {
        json j;
        j["d"] = d;
        j["l"] = l;
        json arr = json::array();
        for (const auto& mp : mps) {
            json jb;
            jb["lambda"] = multipartition_to_json(mp);
            jb["element"] = graded_to_json(class_sum(mp, d, l));
            arr.push_back(std::move(jb));
        }
        j["basis"] = std::move(arr);
        out << dump(j);
    } else {
        out << "d=" << d << " l=" << l << "\n";
        out << "center dimension: " << mps.size() << "\n";
        for (const auto& mp : mps)
            out << "z(" << mp.to_string() << ") = " << class_sum(mp, d, l).to_string() << "\n";
    }
    return 0;
}

int cmd_blocks(const SpecOptions& so, const std::string& format, std::ostream& out) {
    SpecPtr spec = so.build();
    auto blocks = block_idempotents(spec);
    block_center_dimensions(spec);  // cross-checks dims == fiber sizes
    if (format == "json") {
        out << dump(blocks_report_json(*spec, blocks));
    } else {
        out << "spec: " << spec->to_string() << "\n";
        int total = 0, k = 0;
        for (const auto& b : blocks) {
            out << "block " << ++k << ": residues=" << b.residues.to_string()
                << " fiber=" << b.fiber.size() << " center_dim=" << b.center_dimension << "\n";
            total += b.center_dimension;
        }
        out << "total_center_dim=" << total << "\n";
    }
    return 0;
}

int cmd_specht_char(const std::string& mp_text, const std::string& roots_csv,
                    const std::string& format, std::ostream& out) {
    Multipartition mp = parse_multipartition(mp_text);
    std::vector<Rat> q = parse_rat_list(roots_csv);
    if (static_cast<int>(q.size()) != mp.level())
        throw std::invalid_argument("number of roots must equal the multipartition level");
    int d = mp.total_size(), l = mp.level();
    Representation rep = dual_specht(mp, q);
    std::vector<ResidueMultiset> candidates;
    for (const auto& other : enumerate_multipartitions(d, l))
        candidates.push_back(residue_tuple(other, q));
    ResidueMultiset chi = central_character(rep, candidates);
    if (!(chi == residue_tuple(mp, q)))
        throw std::logic_error("central character disagrees with the residue multiset");
    if (format == "json") {
        json j;
        j["multipartition"] = multipartition_to_json(mp);
        json roots = json::array();
        for (const auto& r : q) roots.push_back(to_string(r));
        j["q"] = std::move(roots);
        j["d"] = d;
        j["dimension"] = rep.dim;
        j["residues"] = residues_to_json(chi);
        json mats;
        json s_arr = json::array(), x_arr = json::array();
        for (const auto& m : rep.s) s_arr.push_back(matrix_to_json(m));
        for (const auto& m : rep.x) x_arr.push_back(matrix_to_json(m));
        mats["s"] = std::move(s_arr);
        mats["x"] = std::move(x_arr);
        j["matrices"] = std::move(mats);
        out << dump(j);
    } else {
        out << "multipartition: " << mp.to_string() << "\n";
        out << "dimension: " << rep.dim << "\n";
        out << "residues: " << chi.to_string() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& format, std::ostream& out) {
    bool full = suite == "full";
    auto results = checks::run_suite(full);
    int failures = 0;
    for (const auto& r : results)
        if (!r.pass) ++failures;
    if (format == "json") {
        json j;
        j["suite"] = suite;
        json arr = json::array();
        for (const auto& r : results) {
            json jr;
            jr["name"] = r.name;
            jr["pass"] = r.pass;
            if (!r.detail.empty()) jr["detail"] = r.detail;
            arr.push_back(std::move(jr));
        }
        j["results"] = std::move(arr);
        j["failures"] = failures;
        out << dump(j);
    } else {
        for (const auto& r : results) {
            if (r.pass)
                out << "ok " << r.name << "\n";
            else
                out << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        }
        out << "passed " << (results.size() - failures) << "/" << results.size() << "\n";
        if (failures > 0) {
            json report;
            json failed = json::array();
            for (const auto& r : results)
                if (!r.pass) failed.push_back(r.name);
            report["failed"] = std::move(failed);
            out << report.dump() << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic kernel for degenerate cyclotomic Hecke algebras"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string expr_src, mp_text, roots_csv, suite = "small";
    int gd = 0, gl = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* nf = app.add_subcommand("nf", "PBW normal form of an expression in H_d^f");
    SpecOptions nf_spec;
    nf_spec.attach(nf, false);
    nf->add_option("expression", expr_src, "expression over x<i>, s<i>, rationals")->required();
    add_format(nf);

    auto* gnf = app.add_subcommand("graded-nf", "normal form in the graded algebra R_l[x] x| RS_d");
    gnf->add_option("--d", gd, "rank d")->required();
    gnf->add_option("--l", gl, "level l")->required();
    gnf->add_option("expression", expr_src, "expression over x<i>, s<i>, rationals")->required();
    add_format(gnf);

    auto* center = app.add_subcommand("center", "basis p_d(mu) of Z(H_d^f), brute-force verified");
    SpecOptions center_spec;
    center_spec.attach(center, false);
    add_format(center);

    auto* gcenter = app.add_subcommand("graded-center", "class-sum basis z_d(lambda) of the graded center");
    gcenter->add_option("--d", gd, "rank d")->required();
    gcenter->add_option("--l", gl, "level l")->required();
    add_format(gcenter);

    auto* blocks = app.add_subcommand("blocks", "block decomposition with central idempotents");
    SpecOptions blocks_spec;
    blocks_spec.attach(blocks, true);
    add_format(blocks);

    auto* schar = app.add_subcommand("specht-char", "dual Specht module and its central character");
    schar->add_option("--multipartition", mp_text, "e.g. \"(2,1)|(1)\"")->required();
    schar->add_option("--roots", roots_csv, "comma-separated rational roots")->required();
    add_format(schar);

    auto* verify = app.add_subcommand("verify", "run the oracle suite");
    verify->add_option("--suite", suite, "small or full")->check(CLI::IsMember({"small", "full"}));
    add_format(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // prints the right help text for --help, including on subcommands
        return app.exit(e, out, err);
    }

    try {
        if (nf->parsed()) return cmd_nf(nf_spec, expr_src, format, out);
        if (gnf->parsed()) return cmd_graded_nf(gd, gl, expr_src, format, out);
        if (center->parsed()) return cmd_center(center_spec, format, out);
        if (gcenter->parsed()) return cmd_graded_center(gd, gl, format, out);
        if (blocks->parsed()) return cmd_blocks(blocks_spec, format, out);
        if (schar->parsed()) return cmd_specht_char(mp_text, roots_csv, format, out);
        if (verify->parsed()) return cmd_verify(suite, format, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace cyclohecke
