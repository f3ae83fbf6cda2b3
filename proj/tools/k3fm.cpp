#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k3fm/checks.hpp"
#include "k3fm/errors.hpp"
#include "k3fm/families.hpp"
#include "k3fm/gcs.hpp"
#include "k3fm/mirror.hpp"
#include "k3fm/parser.hpp"
#include "k3fm/spinor.hpp"

using namespace k3fm;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string format = "text";
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string t;
    std::string zeta;
};

RunConfig base_config(const Options& opt) {
    RunConfig cfg;
    if (!opt.config.empty()) cfg = load_config(opt.config, cfg);
    if (opt.format == "structured") cfg.format = OutputFormat::Structured;
    else if (opt.format == "text") cfg.format = OutputFormat::Text;
    else throw ConfigError("unknown format '" + opt.format + "'");
    if (opt.seed) cfg.seed = *opt.seed;
    return cfg;
}

Rational parse_t(const std::string& src) {
    const GaussRational v = parse_constant(src);
    if (!v.is_real()) throw ConfigError("t must be real, got " + src);
    return v.re();
}

int report(const RunConfig& cfg, const std::vector<CheckDescriptor>& records) {
    std::cout << (cfg.format == OutputFormat::Structured ? format_structured(records) : format_text(records));
    return all_pass(records) ? kExitPass : kExitFail;
}

CheckDescriptor record(const std::string& name, const std::string& anchor, const std::string& params, bool pass,
                       const std::string& witness) {
    return {name, anchor, params, pass, pass ? "0" : witness};
}

std::string params_of(const GaussRational& z, const Rational& t) {
    return "t=" + t.get_str() + " zeta=" + z.to_string();
}

int cmd_verify(const Options& opt, const std::string& name) {
    RunConfig cfg = base_config(opt);
    if (!name.empty() && name != "all") cfg.filter = {name};
    if (opt.t == "symbolic" || opt.zeta == "symbolic") {
        cfg.sampled = false;
    }
    if (!opt.t.empty() && opt.t != "symbolic") {
        cfg.t_grid = {parse_t(opt.t)};
        cfg.symbolic = false;
    }
    if (!opt.zeta.empty() && opt.zeta != "symbolic") {
        cfg.zeta_grid = {parse_constant(opt.zeta)};
        cfg.symbolic = false;
    }
    return report(cfg, run_checks(cfg));
}

int cmd_transform(const std::string& map, const std::string& expr) {
    const ParsedClass x = parse_class_expr(expr, map == "phiOmega" ? ClassContext::Cohomology : ClassContext::Harmonic);
    if (map == "phiOmega") std::cout << phi_homega(std::get<CohClass>(x)).to_string() << "\n";
    else if (map == "phiHT") std::cout << phi_ht(std::get<HTClass>(x)).to_string() << "\n";
    else std::cout << phi_t(std::get<HTClass>(x)).to_string() << "\n";
    return kExitPass;
}

int cmd_eval(const Options& opt, const std::string& expr) {
    const bool has_t = !opt.t.empty(), has_z = !opt.zeta.empty();
    const Rational t0 = has_t ? parse_t(opt.t) : Rational(0);
    const GaussRational z0 = has_z ? parse_constant(opt.zeta) : GaussRational(0);
    const auto subst = [&](const Scalar& s) {
        Scalar out = s;
        if (has_t && has_z) return Scalar(out.eval(t0, z0));
        if (has_t) out = out.substitute_t(t0);
        if (has_z) throw ConfigError("--zeta requires --t");
        return out;
    };
    try {
        std::cout << subst(parse_scalar(expr)).to_string() << "\n";
        return kExitPass;
    } catch (const UnknownSymbol&) {
    } catch (const SyntaxError&) {
    }
    const ParsedClass x = parse_class_expr(expr);
    if (const auto* c = std::get_if<CohClass>(&x)) {
        std::cout << (has_t && has_z ? c->substitute(t0, z0) : *c).to_string() << "\n";
    } else {
        const auto& h = std::get<HTClass>(x);
        std::cout << (has_t && has_z ? h.substitute(t0, z0) : h).to_string() << "\n";
    }
    return kExitPass;
}

int cmd_gcs(const Options& opt, const std::string& check) {
    const RunConfig cfg = base_config(opt);
    const GaussRational z = parse_constant(opt.zeta);
    const Rational t = parse_t(opt.t);
    if (t <= 1) throw ConfigError("t must exceed 1");
    const GCStructure j = j_zeta(z, t);
    const std::string p = params_of(z, t);
    std::vector<CheckDescriptor> out;
    if (check == "square") {
        out.push_back(record("gcs-square", "J_zeta^2 = -Id", p, j.squares_to_minus_identity(),
                             (j.matrix() * j.matrix() + CMatrix::identity(8)).to_string()));
    } else if (check == "orthogonal") {
        const CMatrix g = natural_pairing();
        out.push_back(record("gcs-orthogonal", "J^T G J = G", p, j.is_orthogonal(),
                             (j.matrix().transpose() * g * j.matrix() - g).to_string()));
    } else if (check == "graph") {
        const CMatrix d = deformation_graph_Y(z, t) - deformation_graph_Y_closed_form(z, t);
        out.push_back(record("gcs-graph", "eigenbundle graph = (zeta/2)(-(1/t) sigma^-1 + t sigmabar)", p, d.is_zero(),
                             d.to_string()));
        const CMatrix e = twistor_pointwise_graph(z, t) - twistor_graph_closed_form(z);
        out.push_back(record("gcs-graph", "twistor graph = -2 zeta sigma^-1 omega_I", p, e.is_zero(), e.to_string()));
    } else {
        const bool ok = clifford_annihilator(family_spinor(z, t)) == eigenspace_i(j.matrix());
        out.push_back(record("gcs-spinor-match", "Ann(family spinor) = +i eigenspace of J_zeta", p, ok,
                             "subspaces differ"));
    }
    return report(cfg, out);
}

int cmd_spinor(const Options& opt, const std::string& check) {
    const RunConfig cfg = base_config(opt);
    const GaussRational z = parse_constant(opt.zeta);
    const Rational t = parse_t(opt.t);
    const Spinor rho = family_spinor(z, t);
    const std::string p = params_of(z, t);
    std::vector<CheckDescriptor> out;
    if (check == "purity") {
        const Subspace ann = clifford_annihilator(rho);
        out.push_back(record("spinor-purity", "dim Ann = 4 and Ann isotropic", p, ann.dim() == 4 && is_isotropic(ann),
                             "dim " + std::to_string(ann.dim())));
    } else if (check == "annihilator-match") {
        const bool ok = clifford_annihilator(rho) == eigenspace_i(j_zeta(z, t).matrix());
        out.push_back(record("spinor-annihilator-match", "Ann(family spinor) = +i eigenspace of J_zeta", p, ok,
                             "subspaces differ"));
    } else {
        const auto [b, w] = bfield_symplectic_data(z, t);
        const Spinor lhs = (2 * z) * wedge(exp_two_form(b), exp_two_form(GaussRational::i() * w));
        const Spinor d = lhs - rho;
        out.push_back(record("spinor-exp-identity", "2 zeta e^B e^{i omega} = family spinor", p, d.is_zero(),
                             d.to_string()));
    }
    return report(cfg, out);
}

int cmd_families(const Options& opt, bool full) {
    const RunConfig cfg = base_config(opt);
    const bool symbolic = opt.t.empty() || opt.t == "symbolic";
    const Scalar t = symbolic ? Scalar::t() : Scalar(parse_t(opt.t));
    const FamilyReport r = kahler_checks(t);
    std::vector<CheckDescriptor> out;
    for (const auto& [label, ok] : r.verdicts)
        out.push_back(record("families", label, "t=" + r.tag + ": " + label, ok, "identity fails"));
    if (full && cfg.format == OutputFormat::Text) {
        std::cout << "u_t = " << r.u.to_string() << "\n"
                  << "v_t = " << r.v.to_string() << "\n"
                  << "phi_T(u_t) - v_t = " << r.correction.to_string() << "\n";
    }
    return report(cfg, out);
}

int cmd_mirror(const Options& opt) {
    const RunConfig cfg = base_config(opt);
    const bool sym_t = opt.t.empty() || opt.t == "symbolic";
    const bool sym_z = opt.zeta.empty() || opt.zeta == "symbolic";
    const Scalar t = sym_t ? Scalar::t() : Scalar(parse_t(opt.t));
    const Scalar z = sym_z ? Scalar::zeta() : Scalar(parse_constant(opt.zeta));
    const MirrorIdentity r = verify_theorem4(t, z);
    const std::string p = "t=" + (sym_t ? std::string("t") : opt.t) + " zeta=" + (sym_z ? std::string("zeta") : opt.zeta);
    std::vector<CheckDescriptor> out{
        record("mirror", "mirror Kahler class = t sigma/(2 zeta) - zeta t sigmabar/2 mod F", p, r.holds,
               r.residual.to_string()),
    };
    if (cfg.format == OutputFormat::Text) std::cout << "F.Re(sigma_zeta) = " << r.normalizer.to_string() << "\n";
    return report(cfg, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Fourier-Mukai transforms of generalized complex K3 families", "k3fm"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--config", opt.config, "Key-value RunConfig file");
    app.add_option("--seed", opt.seed, "Seed for randomized property suites");

    std::string name = "all";
    auto* verify = app.add_subcommand("verify", "Run named verification suites");
    verify->add_option("name", name, "Suite name or 'all'");
    verify->add_option("--t", opt.t, "Rational t sample or 'symbolic'");
    verify->add_option("--zeta", opt.zeta, "Gaussian-rational zeta sample or 'symbolic'");

    std::string map, expr;
    auto* transform = app.add_subcommand("transform", "Apply a cohomological transform");
    transform->add_option("--map", map)->required()->check(CLI::IsMember({"phiOmega", "phiHT", "phiT"}));
    transform->add_option("--expr", expr)->required();

    auto* eval = app.add_subcommand("eval", "Parse and evaluate an expression");
    eval->add_option("--expr", expr)->required();
    eval->add_option("--t", opt.t);
    eval->add_option("--zeta", opt.zeta);

    std::string check;
    auto* gcs = app.add_subcommand("gcs", "Generalized complex structure checks at one sample");
    gcs->add_option("--zeta", opt.zeta)->required();
    gcs->add_option("--t", opt.t)->required();
    gcs->add_option("--check", check)->required()->check(CLI::IsMember({"square", "orthogonal", "graph", "spinor-match"}));

    auto* spinor = app.add_subcommand("spinor", "Pure spinor checks at one sample");
    spinor->add_option("--zeta", opt.zeta)->required();
    spinor->add_option("--t", opt.t)->required();
    spinor->add_option("--check", check)->required()->check(
        CLI::IsMember({"purity", "annihilator-match", "exp-identity"}));

    bool full = false;
    auto* families = app.add_subcommand("families", "Kahler-class arithmetic and deformation directions");
    families->add_option("--t", opt.t, "Rational t or 'symbolic'");
    families->add_flag("--report", full, "Print u_t, v_t and the correction");

    auto* mirror = app.add_subcommand("mirror", "Mirror identity for the twistor period");
    mirror->add_option("--t", opt.t, "Rational t or 'symbolic'");
    mirror->add_option("--zeta", opt.zeta, "Gaussian-rational zeta or 'symbolic'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(opt, name);
        if (*transform) return cmd_transform(map, expr);
        if (*eval) return cmd_eval(opt, expr);
        if (*gcs) return cmd_gcs(opt, check);
        if (*spinor) return cmd_spinor(opt, check);
        if (*families) return cmd_families(opt, full);
        if (*mirror) return cmd_mirror(opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownSymbol& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
