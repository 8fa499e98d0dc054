// Command line front end: means, hypergeometric values, theta constants,
// period vectors, the inverse period map, and the identity verification suites.
//
// Exit codes: 0 success, 1 failed verification, 2 usage error, 3 domain error.
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "qagm/identities.hpp"

using namespace qagm;
using nlohmann::json;

namespace {

MeanKind parse_kind(const std::string& s) {
    static const std::map<std::string, MeanKind> table = {
        {"gauss", MeanKind::Gauss2},
        {"borchardt", MeanKind::Borchardt4},
        {"borwein3", MeanKind::BorweinCubic2},
        {"borwein4", MeanKind::BorweinQuartic2},
        {"km", MeanKind::KatoMatsumoto4}};
    const auto it = table.find(s);
    if (it == table.end()) throw CLI::ValidationError("kind", "unknown mean kind: " + s);
    return it->second;
}

void write_trace_csv(const std::string& path, const AgmTrace& tr) {
    std::ofstream f(path);
    if (!f) throw domain_error("cannot open trace file: " + path);
    f << "n,a,b,c,d\n";
    f.precision(17);
    int n = 0;
    for (const auto& st : tr.states) {
        f << n++;
        for (std::size_t j = 0; j < 4; ++j)
            f << ',' << (j < st.terms.size() ? st.terms[j] : 0.0);
        f << '\n';
    }
}

json cplx_json(const Cplx& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

BallPoint point_from_reals(const std::vector<double>& w) {
    Eigen::Vector4cd v;
    for (int j = 0; j < 4; ++j) v(j) = Cplx(w[2 * static_cast<std::size_t>(j)],
                                            w[2 * static_cast<std::size_t>(j) + 1]);
    return BallPoint(v);
}

ResidualReport run_suite(const std::string& name, const BallPoint& v) {
    if (name == "thomae") return verify_thomae(v);
    if (name == "table") return verify_table_quartic(v);
    if (name == "chains") return verify_theta_sum_chains(v);
    if (name == "jacobi") return verify_jacobi(v);
    if (name == "mean") return verify_mean_transform(v, false);
    if (name == "transformations") return verify_theta_transformations(v);
    if (name == "roots") return verify_automorphy_roots(v);
    throw CLI::ValidationError("suite", "unknown suite: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternary arithmetic-geometric means, theta constants, and periods"};
    app.require_subcommand(1);
    std::cout.precision(15);

    // --- agm ---
    auto* agm = app.add_subcommand("agm", "iterate a coupled mean to its limit");
    std::string agm_kind;
    std::vector<double> agm_terms;
    std::string trace_path;
    agm->add_option("kind", agm_kind, "gauss|borchardt|borwein3|borwein4|km")->required();
    agm->add_option("terms", agm_terms, "2 or 4 positive start values")->required();
    agm->add_option("--trace", trace_path, "write the iteration as CSV (n,a,b,c,d)");

    // --- fd ---
    auto* fd = app.add_subcommand("fd", "Lauricella F_D(1/4,1/4,1/4,1/4,1; x1,x2,x3)");
    std::vector<double> fd_x;
    std::string fd_method = "series";
    fd->add_option("x", fd_x, "x1 x2 x3")->expected(3)->required();
    fd->add_option("--method", fd_method, "series|euler")
        ->check(CLI::IsMember({"series", "euler"}));

    // --- f21 ---
    auto* f21 = app.add_subcommand("f21", "Gauss 2F1(a,b,c;z)");
    std::vector<double> f21_args;
    f21->add_option("args", f21_args, "a b c z_re [z_im]")->expected(4, 5)->required();

    // --- theta ---
    auto* theta = app.add_subcommand("theta", "theta constant from the 12-entry table at a ball point");
    int theta_j = 0;
    std::vector<double> theta_v;
    std::vector<double> theta_tau1;
    theta->add_option("-j,--index", theta_j, "table index 0..11 (or 2a+b for genus 1)");
    theta->add_option("-v,--point", theta_v, "ball point as 8 reals (re,im interleaved)")
        ->expected(8);
    theta->add_option("--tau1", theta_tau1, "genus-1 tau as re im")->expected(2);

    // --- period ---
    auto* period = app.add_subcommand("period", "period vector of w^4 = z(z-x1)(z-x2)(z-x3)(z-1)");
    std::vector<double> period_x;
    period->add_option("x", period_x, "x1 x2 x3 in (0,1), increasing")->expected(3)->required();

    // --- invert ---
    auto* invert = app.add_subcommand("invert", "branch points from a ball point via theta quotients");
    std::vector<double> invert_v;
    invert->add_option("v", invert_v, "ball point as 8 reals (re,im interleaved)")
        ->expected(8)
        ->required();

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "run an identity verification suite");
    std::string suite;
    double perturb = 0.0;
    std::vector<double> verify_x = {0.2, 0.5, 0.8};
    verify->add_option("suite", suite,
                       "thomae|table|chains|jacobi|mean|transformations|roots|all")
        ->required();
    verify->add_option("--perturb", perturb, "offset added to v_2 (negative control)");
    verify->add_option("--x", verify_x, "chamber point x1 x2 x3")->expected(3);

    // --- constants ---
    auto* consts = app.add_subcommand("constants", "print the library's fixed constants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*agm) {
            const MeanKind kind = parse_kind(agm_kind);
            if (static_cast<int>(agm_terms.size()) != mean_arity(kind))
                throw domain_error("agm: wrong number of terms for this kind");
            std::vector<Real> terms(agm_terms.begin(), agm_terms.end());
            const AgmTrace tr = mean_limit(kind, AgmState{terms});
            if (!trace_path.empty()) write_trace_csv(trace_path, tr);
            json out = {{"kind", mean_name(kind)},
                        {"terms", agm_terms},
                        {"limit", tr.limit},
                        {"iterations", tr.iterations}};
            std::cout << out.dump(2) << '\n';
        } else if (*fd) {
            const FDParams p{0.25, {0.25, 0.25, 0.25}, 1.0};
            const std::vector<Cplx> z(fd_x.begin(), fd_x.end());
            const Cplx val = fd_method == "euler" ? lauricella_fd_euler(p, z)
                                                  : lauricella_fd(p, z);
            json out = {{"x", fd_x}, {"method", fd_method}, {"value", cplx_json(val)}};
            std::cout << out.dump(2) << '\n';
        } else if (*f21) {
            const Cplx z(f21_args[3], f21_args.size() > 4 ? f21_args[4] : 0.0);
            const Cplx val = gauss_2f1(f21_args[0], f21_args[1], f21_args[2], z);
            json out = {{"a", f21_args[0]}, {"b", f21_args[1]}, {"c", f21_args[2]},
                        {"z", cplx_json(z)},  {"value", cplx_json(val)}};
            std::cout << out.dump(2) << '\n';
        } else if (*theta) {
            json out;
            if (!theta_tau1.empty()) {
                const Cplx t(theta_tau1[0], theta_tau1[1]);
                const Cplx val = jacobi_theta(theta_j / 2, theta_j % 2, t);
                out = {{"genus", 1}, {"a", theta_j / 2}, {"b", theta_j % 2},
                       {"tau", cplx_json(t)}, {"value", cplx_json(val)}};
            } else {
                if (theta_v.size() != 8)
                    throw domain_error("theta: need --point with 8 reals or --tau1");
                const BallPoint v = point_from_reals(theta_v);
                out = {{"genus", 4}, {"index", theta_j},
                       {"value", cplx_json(theta_nu(theta_j, v))}};
            }
            std::cout << out.dump(2) << '\n';
        } else if (*period) {
            const BranchPoints bp(period_x[0], period_x[1], period_x[2]);
            const PeriodVector pv = period_vector(bp);
            json comps = json::array();
            for (int j = 0; j < 4; ++j) comps.push_back(cplx_json(pv.v(j)));
            json out = {{"x", period_x},
                        {"v", comps},
                        {"herm_form", pv.ball().herm_form()},
                        {"quad_error", pv.quad_error},
                        {"homology_residual", homology_residual(bp)},
                        {"calibration", period_calibration()}};
            std::cout << out.dump(2) << '\n';
        } else if (*invert) {
            const BallPoint v = point_from_reals(invert_v);
            const auto x = x_of_v(v);
            json out = {{"x1", cplx_json(x[0])}, {"x2", cplx_json(x[1])},
                        {"x3", cplx_json(x[2])}};
            std::cout << out.dump(2) << '\n';
        } else if (*verify) {
            Eigen::Vector4cd w =
                period_vector(BranchPoints(verify_x[0], verify_x[1], verify_x[2])).v;
            w(1) += perturb;
            const BallPoint v(w);
            bool all_pass = true;
            json out = json::array();
            if (suite == "all") {
                for (const char* s : {"thomae", "table", "chains", "jacobi", "mean",
                                      "transformations", "roots"}) {
                    const auto rep = run_suite(s, v);
                    all_pass = all_pass && rep.pass();
                    out.push_back(rep.to_json());
                }
            } else {
                const auto rep = run_suite(suite, v);
                all_pass = rep.pass();
                out = rep.to_json();
            }
            std::cout << out.dump(2) << '\n';
            if (!all_pass) return 1;
        } else if (*consts) {
            json out = {{"gamma34", gamma34()},
                        {"kappa", kappa()},
                        {"theta00i_pow4", theta00i_pow4()},
                        {"calibration", period_calibration()}};
            std::cout << out.dump(2) << '\n';
        }
    } catch (const CLI::ValidationError&) {
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const convergence_error& e) {
        std::cerr << "convergence error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
