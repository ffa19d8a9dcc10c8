// nhl -- exact-arithmetic toolkit for finite-dimensional n-Hom-Lie algebras.
//
// Every command reads JSON files (or the built-in fixtures fix-a, fix-b,
// fix-c in place of an algebra file), runs one kernel operation and emits a
// report. Exit codes: 0 the check passed, 1 it failed, 2 the input was
// unusable. --format json output is canonical: keys sorted, identical bytes
// for identical inputs.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nhl/derivation.hpp"
#include "nhl/fixtures.hpp"
#include "nhl/json_io.hpp"

namespace {

using namespace nhl;
using Alg = NHomLieAlgebra<Rational>;
using Rep = Representation<Rational>;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

Alg load_algebra(const std::string& source) {
    if (source == "fix-a" || source == "fix-b" || source == "fix-c") return fixture_by_name(source);
    return algebra_from_json(load_json_file(source));
}

// --rep adjoint | dual-adjoint | FILE
Rep load_rep(const Alg& alg, const std::string& choice) {
    if (choice == "adjoint") return adjoint(alg);
    if (choice == "dual-adjoint") return dual_representation(adjoint(alg));
    return representation_from_json(alg, load_json_file(choice));
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

void print_report_text(const json& j) {
    std::cout << "command: " << j["command"].get<std::string>() << "\n";
    std::cout << "verdict: " << j["verdict"].get<std::string>() << "\n";
    if (!j["metrics"].empty()) {
        std::cout << "metrics:\n";
        for (auto it = j["metrics"].begin(); it != j["metrics"].end(); ++it)
            std::cout << "  " << it.key() << ": " << it.value().get<std::string>() << "\n";
    }
    const auto& defects = j["defects"];
    if (defects.empty()) {
        std::cout << "defects: none\n";
        return;
    }
    std::cout << "defects (" << defects.size() << "):\n";
    for (const auto& d : defects) {
        std::cout << "  " << d["location"].get<std::string>();
        std::string exp = d["expected"].get<std::string>();
        std::string act = d["actual"].get<std::string>();
        if (!exp.empty() || !act.empty())
            std::cout << ": expected " << exp << ", got " << act;
        std::cout << "\n";
    }
}

int emit(const json& report_json, const std::string& format) {
    if (format == "json")
        std::cout << report_json.dump(2) << "\n";
    else
        print_report_text(report_json);
    std::string verdict = report_json["verdict"].get<std::string>();
    if (verdict == "pass") return 0;
    if (verdict == "fail") return 1;
    return 2;
}

struct Common {
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", c.out, "write the constructed object to this file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on n-Hom-Lie algebras given by structure constants"};
    app.require_subcommand(1);

    std::string alg_file, rep_spec = "adjoint", map_file, family_file, cochain_file;
    std::vector<std::string> lambda_strs;
    int degree = 1;
    bool naive = false;
    Common common;
    int exit_code = 0;

    auto run = [&](const std::string& name, auto&& body) {
        return [&, name, body]() {
            json out_json = body();
            exit_code = emit(out_json, common.format);
        };
    };

    // validate
    {
        auto* cmd = app.add_subcommand("validate",
                                       "automorphism, Hom-Fundamental and Hom-Leibniz checks");
        cmd->add_option("algebra", alg_file, "algebra JSON file or fix-a|fix-b|fix-c")->required();
        add_common(cmd, common);
        cmd->callback(run("validate", [&]() {
            Alg alg = load_algebra(alg_file);
            Report total;
            total.check = "validate";
            Report stage = check_automorphism(alg);
            std::string stages = stage.check;
            for (Defect& d : stage.defects) d.location = stage.check + ": " + d.location;
            total.defects = stage.defects;
            if (stage.pass()) {
                stage = check_hom_fundamental(alg);
                stages += "," + stage.check;
                for (Defect& d : stage.defects) d.location = stage.check + ": " + d.location;
                total.defects.insert(total.defects.end(), stage.defects.begin(), stage.defects.end());
                if (stage.pass()) {
                    stage = check_hom_leibniz_F(alg);
                    stages += "," + stage.check;
                    for (Defect& d : stage.defects) d.location = stage.check + ": " + d.location;
                    total.defects.insert(total.defects.end(), stage.defects.begin(),
                                         stage.defects.end());
                }
            }
            total.metrics["stages"] = stages;
            total.metrics["n"] = std::to_string(alg.arity());
            total.metrics["dim"] = std::to_string(alg.dim());
            if (!common.out.empty()) write_json_file(common.out, algebra_to_json(alg));
            return report_to_json(total, "validate");
        }));
    }

    // cohomology
    {
        auto* cmd = app.add_subcommand("cohomology", "dim C^p, Z^p, B^p, H^p");
        cmd->add_option("algebra", alg_file)->required();
        cmd->add_option("--rep", rep_spec, "adjoint | dual-adjoint | representation file");
        cmd->add_option("--p", degree, "cochain degree (>= 1)")->check(CLI::PositiveNumber);
        add_common(cmd, common);
        cmd->callback(run("cohomology", [&]() {
            Alg alg = load_algebra(alg_file);
            Rep rep = load_rep(alg, rep_spec);
            Report rc = check_representation(rep);
            if (!rc.pass()) return report_to_json(rc, "cohomology");
            Report out;
            out.check = "cohomology";
            long long z = cocycle_dim(alg, rep, degree);
            long long b = coboundary_dim(alg, rep, degree);
            out.metrics["p"] = std::to_string(degree);
            out.metrics["dim_C"] = std::to_string(cochain_space_dim(alg, rep.dimV(), degree));
            out.metrics["dim_Z"] = std::to_string(z);
            out.metrics["dim_B"] = std::to_string(b);
            out.metrics["dim_H"] = std::to_string(z - b);
            return report_to_json(out, "cohomology");
        }));
    }

    // derivations
    {
        auto* cmd = app.add_subcommand("derivations", "basis of Der(g) plus closure checks");
        cmd->add_option("algebra", alg_file)->required();
        add_common(cmd, common);
        cmd->callback(run("derivations", [&]() {
            Alg alg = load_algebra(alg_file);
            auto basis = derivation_basis(alg);
            Report out = check_der_subalgebra(alg);
            Report ideal = check_inn_ideal(alg);
            out.defects.insert(out.defects.end(), ideal.defects.begin(), ideal.defects.end());
            out.metrics["dim"] = std::to_string(basis.size());
            if (!common.out.empty()) {
                json arr = json::array();
                for (const auto& m : basis) arr.push_back(linear_map_to_json(m));
                write_json_file(common.out, arr);
            }
            return report_to_json(out, "derivations");
        }));
    }

    // deform
    {
        auto* cmd = app.add_subcommand("deform", "check an (n-1)-order deformation family");
        cmd->add_option("algebra", alg_file)->required();
        cmd->add_option("family", family_file, "deformation family JSON")->required();
        cmd->add_option("--lambda", lambda_strs,
                        "sample points; each deformed algebra is validated, the first one "
                        "is written to --out");
        add_common(cmd, common);
        cmd->callback(run("deform", [&]() {
            Alg alg = load_algebra(alg_file);
            DeformationFamily<Rational> fam = family_from_json(alg, load_json_file(family_file));
            Report out = check_deformation(alg, fam);
            if (lambda_strs.empty()) lambda_strs.push_back("1/1");
            for (const std::string& ls : lambda_strs) {
                Rational lam = Rational::parse(ls);
                Alg at = deformed_algebra(alg, fam, lam);
                out.metrics["lambda=" + lam.str()] =
                    check_hom_fundamental(at).pass() ? "pass" : "fail";
            }
            if (!common.out.empty()) {
                Rational lam = Rational::parse(lambda_strs.front());
                write_json_file(common.out, algebra_to_json(deformed_algebra(alg, fam, lam)));
            }
            return report_to_json(out, "deform");
        }));
    }

    // nijenhuis
    {
        auto* cmd = app.add_subcommand("nijenhuis", "Hom-Nijenhuis check; --out writes the family");
        cmd->add_option("algebra", alg_file)->required();
        cmd->add_option("operator", map_file, "linear map JSON for N")->required();
        add_common(cmd, common);
        cmd->callback(run("nijenhuis", [&]() {
            Alg alg = load_algebra(alg_file);
            Matrix<Rational> nmap = linear_map_from_json(load_json_file(map_file));
            Report out = is_hom_nijenhuis(alg, nmap);
            if (out.pass() && !common.out.empty())
                write_json_file(common.out, family_to_json(deform_from_nijenhuis(alg, nmap)));
            return report_to_json(out, "nijenhuis");
        }));
    }

    // o-operator
    {
        auto* cmd = app.add_subcommand("o-operator", "Hom-O-operator check; --out writes the lift");
        cmd->add_option("algebra", alg_file)->required();
        cmd->add_option("operator", map_file, "linear map JSON for T: V -> g")->required();
        cmd->add_option("--rep", rep_spec, "adjoint | dual-adjoint | representation file");
        add_common(cmd, common);
        cmd->callback(run("o-operator", [&]() {
            Alg alg = load_algebra(alg_file);
            Rep rep = load_rep(alg, rep_spec);
            Report rc = check_representation(rep);
            if (!rc.pass()) return report_to_json(rc, "o-operator");
            Matrix<Rational> t_map = linear_map_from_json(load_json_file(map_file));
            Report out = is_hom_o_operator(alg, rep, t_map);
            if (!common.out.empty())
                write_json_file(common.out, linear_map_to_json(o_operator_lift(alg, rep, t_map)));
            return report_to_json(out, "o-operator");
        }));
    }

    // extend
    {
        auto* cmd = app.add_subcommand(
            "extend", "generalized derivation check; --out writes the dim+1 extension");
        cmd->add_option("algebra", alg_file)->required();
        cmd->add_option("derivation", map_file, "generalized derivation JSON")->required();
        add_common(cmd, common);
        cmd->callback(run("extend", [&]() {
            Alg alg = load_algebra(alg_file);
            GeneralizedDerivation<Rational> gd = gderivation_from_json(alg, load_json_file(map_file));
            Report out = is_generalized_derivation(alg, gd);
            out.metrics["extension_dim"] = std::to_string(alg.dim() + 1);
            if (!common.out.empty()) write_json_file(common.out, algebra_to_json(extend(alg, gd)));
            return report_to_json(out, "extend");
        }));
    }

    // dual-rep
    {
        auto* cmd = app.add_subcommand("dual-rep", "dual representation; --naive for the raw rho*");
        cmd->add_option("algebra", alg_file)->required();
        cmd->add_option("--rep", rep_spec, "adjoint | dual-adjoint | representation file");
        cmd->add_flag("--naive", naive, "use the untwisted dual (generally not a representation)");
        add_common(cmd, common);
        cmd->callback(run("dual-rep", [&]() {
            Alg alg = load_algebra(alg_file);
            Rep rep = load_rep(alg, rep_spec);
            Report rc = check_representation(rep);
            if (!rc.pass()) return report_to_json(rc, "dual-rep");
            Rep dual = naive ? naive_dual(rep) : dual_representation(rep);
            Report out = check_representation(dual);
            out.metrics["construction"] = naive ? "naive" : "twisted";
            if (!common.out.empty()) write_json_file(common.out, representation_to_json(dual));
            return report_to_json(out, "dual-rep");
        }));
    }

    // semidirect
    {
        auto* cmd = app.add_subcommand("semidirect", "semidirect product algebra g x| V");
        cmd->add_option("algebra", alg_file)->required();
        cmd->add_option("--rep", rep_spec, "adjoint | dual-adjoint | representation file");
        add_common(cmd, common);
        cmd->callback(run("semidirect", [&]() {
            Alg alg = load_algebra(alg_file);
            Rep rep = load_rep(alg, rep_spec);
            Report rc = check_representation(rep);
            if (!rc.pass()) return report_to_json(rc, "semidirect");
            Alg sd = semidirect_product(rep);
            Report out = check_hom_fundamental(sd);
            out.metrics["dim"] = std::to_string(sd.dim());
            if (!common.out.empty()) write_json_file(common.out, algebra_to_json(sd));
            return report_to_json(out, "semidirect");
        }));
    }

    // coboundary
    {
        auto* cmd = app.add_subcommand("coboundary", "apply delta to a cochain file");
        cmd->add_option("algebra", alg_file)->required();
        cmd->add_option("cochain", cochain_file, "cochain JSON")->required();
        cmd->add_option("--rep", rep_spec, "adjoint | dual-adjoint | representation file");
        add_common(cmd, common);
        cmd->callback(run("coboundary", [&]() {
            Alg alg = load_algebra(alg_file);
            Rep rep = load_rep(alg, rep_spec);
            Report rc = check_representation(rep);
            if (!rc.pass()) return report_to_json(rc, "coboundary");
            Cochain<Rational> f = cochain_from_json(alg, rep.dimV(), load_json_file(cochain_file));
            Cochain<Rational> df = coboundary(alg, rep, f);
            Report out;
            out.check = "coboundary";
            out.metrics["p_in"] = std::to_string(f.p);
            out.metrics["p_out"] = std::to_string(df.p);
            out.metrics["is_cocycle"] = df.is_zero() ? "true" : "false";
            if (!common.out.empty()) write_json_file(common.out, cochain_to_json(df));
            return report_to_json(out, "coboundary");
        }));
    }

    // fixtures
    {
        auto* cmd = app.add_subcommand("fixtures", "emit the built-in algebras fix-a, fix-b, fix-c");
        add_common(cmd, common);
        cmd->callback([&]() {
            json all;
            all["fix-a"] = algebra_to_json(fix_a());
            all["fix-b"] = algebra_to_json(fix_b());
            all["fix-c"] = algebra_to_json(fix_c());
            if (!common.out.empty()) {
                write_json_file(common.out, all);
                Report out;
                out.check = "fixtures";
                out.metrics["written"] = common.out;
                exit_code = emit(report_to_json(out, "fixtures"), common.format);
            } else {
                std::cout << all.dump(2) << "\n";
                exit_code = 0;
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        Report err;
        err.check = "error";
        err.add_defect("input", "", e.what());
        emit(report_to_json(err, app.get_subcommands().empty()
                                     ? "error"
                                     : app.get_subcommands().front()->get_name(),
                            "error"),
             common.format);
        return 2;
    } catch (const structural_error& e) {
        Report err;
        err.check = "error";
        err.add_defect("structure", "", e.what());
        emit(report_to_json(err, app.get_subcommands().empty()
                                     ? "error"
                                     : app.get_subcommands().front()->get_name(),
                            "error"),
             common.format);
        return 2;
    }
    return exit_code;
}
