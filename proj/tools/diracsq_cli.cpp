#include "diracsq/algebra.hpp"
#include "diracsq/basis_maps.hpp"
#include "diracsq/boundary.hpp"
#include "diracsq/json_io.hpp"
#include "diracsq/majorana.hpp"
#include "diracsq/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using dsq::Json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

Json verify_block(const dsq::SolutionSet& set, const dsq::GammaSet& g) {
    double residual = 0.0;
    for (const auto& col : set.columns)
        residual = std::max(residual, dsq::dirac_residual(col, g));
    const dsq::CMatrix4 eval = dsq::evaluate_set(set, 0.17, -0.4, 0.9, 0.31);
    return Json{{"max_dirac_residual", residual},
                {"rank", dsq::numerical_rank(eval)},
                {"det", dsq::json_complex(dsq::det4(eval))}};
}

struct BasesArgs {
    std::string rep = "spinor";
    std::string set = "squared";
    double k1 = 0.0, k2 = 0.0, k = 1.0, mass = 1.0, gamma = 0.0;
    bool verify = false;
    std::string out;
};

int run_bases(const BasesArgs& a) {
    dsq::Rep rep = dsq::Rep::Spinor;
    if (a.rep == "standard") rep = dsq::Rep::Standard;
    else if (a.rep == "majorana") rep = dsq::Rep::Majorana;
    const dsq::ModeParams m = dsq::make_mode(a.k1, a.k2, a.k, a.mass);
    const dsq::GammaSet g = dsq::build_gammas(rep);

    Json out;
    auto add = [&](const dsq::SolutionSet& set) {
        Json j = dsq::json_set(set);
        if (a.verify) j["verification"] = verify_block(set, g);
        out["sets"].push_back(j);
    };
    out["sets"] = Json::array();
    if (a.set == "squared") {
        add(dsq::squared_set(m, rep, a.gamma));
    } else if (a.set == "phi") {
        if (rep != dsq::Rep::Spinor)
            throw std::invalid_argument(
                "the momentum-helicity basis is generated in the spinor rep");
        add(dsq::phi_basis(m));
    } else if (a.set == "u") {
        if (rep != dsq::Rep::Spinor)
            throw std::invalid_argument(
                "the U/U' sets are generated in the spinor rep");
        const auto [u, up] = dsq::u_sets(m);
        add(u);
        add(up);
    } else {
        throw std::invalid_argument("unknown --set: " + a.set);
    }
    emit(dsq::dump(out), a.out);
    return 0;
}

struct QuantizeArgs {
    double k1 = 0.0, k2 = 0.0, mass = 1.0, a = 1.0;
    double rho = 0.0, sigma = 0.0, mu = 0.0, nu = 0.0;
    double phase_all = 0.0;
    bool phase_all_set = false;
    double kmax = 5.0;
    std::string basis = "planewave";
    std::string out;
};

int run_quantize_dirac(const QuantizeArgs& q) {
    dsq::BoundaryPhases ph{q.rho, q.sigma, q.mu, q.nu};
    if (q.phase_all_set) ph = {q.phase_all, q.phase_all, q.phase_all, q.phase_all};
    const dsq::BoundaryBasis which = q.basis == "squared"
                                         ? dsq::BoundaryBasis::Squared
                                         : dsq::BoundaryBasis::PlaneWave;
    if (q.basis != "squared" && q.basis != "planewave")
        throw std::invalid_argument("unknown --basis: " + q.basis);
    const auto spectrum = dsq::quantize_dirac(q.k1, q.k2, q.mass, {q.a}, ph,
                                              q.kmax, which);
    if (spectrum.empty()) std::cerr << "warning: empty spectrum\n";
    if (q.out.size() >= 4 && q.out.substr(q.out.size() - 4) == ".csv") {
        emit(dsq::csv_spectrum(spectrum), q.out);
    } else {
        Json out;
        out["equation"] = "dirac";
        out["basis"] = q.basis;
        out["params"] = Json{{"k1", q.k1}, {"k2", q.k2}, {"mass", q.mass},
                             {"a", q.a},   {"rho", ph.rho}, {"sigma", ph.sigma},
                             {"mu", ph.mu}, {"nu", ph.nu}, {"kmax", q.kmax}};
        out["roots"] = dsq::json_spectrum(spectrum);
        emit(dsq::dump(out), q.out);
    }
    return 0;
}

int run_quantize_weyl(const QuantizeArgs& q) {
    const auto spectrum =
        dsq::weyl_quantize(q.k1, q.k2, {q.a}, q.rho, q.sigma, q.kmax);
    if (spectrum.empty()) std::cerr << "warning: empty spectrum\n";
    if (q.out.size() >= 4 && q.out.substr(q.out.size() - 4) == ".csv") {
        emit(dsq::csv_spectrum(spectrum), q.out);
    } else {
        Json out;
        out["equation"] = "weyl";
        out["params"] = Json{{"k1", q.k1},   {"k2", q.k2},
                             {"a", q.a},     {"rho", q.rho},
                             {"sigma", q.sigma}, {"kmax", q.kmax}};
        out["roots"] = dsq::json_spectrum(spectrum);
        emit(dsq::dump(out), q.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Solution bases of the Dirac/Majorana/Weyl equations by the squaring "
        "method, and vanishing-current mode quantization between parallel "
        "planes"};
    app.set_config("--config");
    app.require_subcommand(0, 1);

    bool paper_check = false;
    app.add_flag("--paper-check", paper_check,
                 "emit the golden-display comparison report and exit");

    BasesArgs ba;
    auto* bases = app.add_subcommand("bases", "generate solution sets");
    bases->add_option("--rep", ba.rep, "spinor|standard|majorana");
    bases->add_option("--set", ba.set, "squared|phi|u");
    bases->add_option("--k1", ba.k1);
    bases->add_option("--k2", ba.k2);
    bases->add_option("--k", ba.k);
    bases->add_option("--mass", ba.mass)->required();
    bases->add_option("--gamma", ba.gamma, "seed phase");
    bases->add_flag("--verify", ba.verify);
    bases->add_option("--out", ba.out);

    double mk1 = 0.0, mk2 = 0.0, mk = 1.0, mmass = 1.0;
    std::string maps_out;
    auto* maps = app.add_subcommand("maps", "basis-change map report");
    maps->add_option("--k1", mk1);
    maps->add_option("--k2", mk2);
    maps->add_option("--k", mk);
    maps->add_option("--mass", mmass)->required();
    maps->add_option("--out", maps_out);

    double jk1 = 0.0, jk2 = 0.0, jk = 1.0, jmass = 1.0;
    std::string maj_out;
    std::vector<double> pt1{0.0, 0.0, 0.0, 0.1}, pt2{0.0, 0.0, 0.0, 0.47};
    auto* maj = app.add_subcommand("majorana",
                                   "real/imaginary families and map report");
    maj->add_option("--k1", jk1);
    maj->add_option("--k2", jk2);
    maj->add_option("--k", jk);
    maj->add_option("--mass", jmass)->required();
    maj->add_option("--point1", pt1, "t x y z")->expected(4);
    maj->add_option("--point2", pt2, "t x y z")->expected(4);
    maj->add_option("--out", maj_out);

    QuantizeArgs qa;
    auto* quant = app.add_subcommand("quantize", "boundary mode quantization");
    quant->require_subcommand(1);
    auto* qdirac = quant->add_subcommand("dirac");
    qdirac->add_option("--k1", qa.k1);
    qdirac->add_option("--k2", qa.k2);
    qdirac->add_option("--mass", qa.mass)->required();
    qdirac->add_option("--a", qa.a)->required();
    qdirac->add_option("--rho", qa.rho);
    qdirac->add_option("--sigma", qa.sigma);
    qdirac->add_option("--mu", qa.mu);
    qdirac->add_option("--nu", qa.nu);
    auto* pall = qdirac->add_option("--phase-all", qa.phase_all,
                                    "same phase on both plates (preset)");
    qdirac->add_option("--kmax", qa.kmax)->required();
    qdirac->add_option("--basis", qa.basis, "planewave|squared");
    qdirac->add_option("--out", qa.out, "spectrum .json or .csv path");
    auto* qweyl = quant->add_subcommand("weyl");
    qweyl->add_option("--k1", qa.k1);
    qweyl->add_option("--k2", qa.k2);
    qweyl->add_option("--a", qa.a)->required();
    qweyl->add_option("--rho", qa.rho);
    qweyl->add_option("--sigma", qa.sigma);
    qweyl->add_option("--kmax", qa.kmax)->required();
    qweyl->add_option("--out", qa.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (paper_check) {
            emit(dsq::dump(dsq::deviation_report()), "");
            return 0;
        }
        qa.phase_all_set = pall->count() > 0;
        if (bases->parsed()) return run_bases(ba);
        if (maps->parsed()) {
            emit(dsq::dump(dsq::map_report(
                     dsq::make_mode(mk1, mk2, mk, mmass))),
                 maps_out);
            return 0;
        }
        if (maj->parsed()) {
            emit(dsq::dump(dsq::majorana_report(
                     dsq::make_mode(jk1, jk2, jk, jmass),
                     {pt1[0], pt1[1], pt1[2], pt1[3]},
                     {pt2[0], pt2[1], pt2[2], pt2[3]})),
                 maj_out);
            return 0;
        }
        if (quant->parsed()) {
            if (qdirac->parsed()) return run_quantize_dirac(qa);
            return run_quantize_weyl(qa);
        }
        std::cerr << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
}
