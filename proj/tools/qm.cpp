// qm: command-line front end for the quantized coordinate ring engine.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "qmat/centralizer.hpp"
#include "qmat/json_io.hpp"
#include "qmat/minors.hpp"
#include "qmat/morphisms.hpp"
#include "qmat/parser.hpp"
#include "qmat/sl2.hpp"
#include "qmat/suite.hpp"
#include "qmat/tensor.hpp"

namespace {

using namespace qmat;

int env_threads() {
    const char* v = std::getenv("QM_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t >= 1 ? t : 1;
}

Rational parse_q0(const std::string& text) {
    try {
        Rational r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw error("cannot parse q0 value '" + text + "'");
    }
}

bool is_root_of_unity(const Rational& q0) { return q0 == 1 || q0 == -1; }

QScalar ring_parameter(const std::optional<std::string>& q0_text, bool refuse_roots) {
    if (!q0_text) return QScalar::q();
    Rational q0 = parse_q0(*q0_text);
    if (q0 == 0) throw error("q0 must be nonzero");
    if (refuse_roots && is_root_of_unity(q0))
        throw error("q0 = " + q0.get_str() +
                    " is a root of unity; the centralizer theorem fails there and "
                    "symbolic runs at such values are refused");
    return QScalar(q0);
}

// Evaluation in O_q(GL_n): numerator plus a det_q power, so det^-1 (and
// inverses of det-multiples) are legal.
GLElement eval_gl(const Ring& ring, const Expr& e) {
    auto lift = [&](NormalElement x) { return GLElement(std::move(x), 0); };
    auto to_common =
        [&](const GLElement& a, const GLElement& b) -> std::pair<NormalElement, NormalElement> {
        const NormalElement det = quantum_det(ring);
        int k = std::max(a.det_power(), b.det_power());
        return {ring.multiply(a.numerator(), ring.power(det, k - a.det_power())),
                ring.multiply(b.numerator(), ring.power(det, k - b.det_power()))};
    };
    switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
        GLElement a = eval_gl(ring, e.children[0]);
        GLElement b = eval_gl(ring, e.children[1]);
        auto [na, nb] = to_common(a, b);
        int k = std::max(a.det_power(), b.det_power());
        return GLElement(e.kind == Expr::Kind::Add ? na + nb : na - nb, k);
    }
    case Expr::Kind::Mul: {
        GLElement a = eval_gl(ring, e.children[0]);
        GLElement b = eval_gl(ring, e.children[1]);
        return GLElement(ring.multiply(a.numerator(), b.numerator()),
                         a.det_power() + b.det_power());
    }
    case Expr::Kind::Comm: {
        GLElement a = eval_gl(ring, e.children[0]);
        GLElement b = eval_gl(ring, e.children[1]);
        NormalElement ab = ring.multiply(a.numerator(), b.numerator());
        NormalElement ba = ring.multiply(b.numerator(), a.numerator());
        return GLElement(ab - ba, a.det_power() + b.det_power());
    }
    case Expr::Kind::Neg: {
        GLElement a = eval_gl(ring, e.children[0]);
        return GLElement(-a.numerator(), a.det_power());
    }
    case Expr::Kind::Pow: {
        if (e.exponent >= 0) {
            GLElement a = eval_gl(ring, e.children[0]);
            NormalElement acc = NormalElement::unit(ring.n());
            for (long t = 0; t < e.exponent; ++t) acc = ring.multiply(acc, a.numerator());
            return GLElement(std::move(acc), a.det_power() * static_cast<int>(e.exponent));
        }
        // negative power: the base must reduce to c * det_q^m
        GLElement a = eval_gl(ring, e.children[0]).reduced(ring);
        NormalElement num = a.numerator();
        int m = 0;
        while (num.degree() > 0) {
            auto quot = divide_by_det(ring, num);
            if (!quot) throw error("negative power of a non-invertible element of O_q(GL_n)");
            num = std::move(*quot);
            ++m;
        }
        if (num.is_zero()) throw error("negative power of zero");
        QScalar c = num.terms().begin()->second;
        // a = c det^(m - k); a^e = c^e det^((m-k) e)
        long net = static_cast<long>(m - a.det_power()) * e.exponent;
        NormalElement scalar_part = NormalElement::scalar(ring.n(), c.pow(e.exponent));
        if (net >= 0)
            return GLElement(ring.multiply(scalar_part,
                                           ring.power(quantum_det(ring), static_cast<int>(net))),
                             0);
        return GLElement(std::move(scalar_part), static_cast<int>(-net));
    }
    case Expr::Kind::Div: {
        NormalElement denom = eval_expr(ring, e.children[1]);
        GLElement a = eval_gl(ring, e.children[0]);
        // reuse the scalar-division rule of the M_n evaluator
        Expr wrap{Expr::Kind::Div};
        wrap.children = {Expr{Expr::Kind::Scalar}, e.children[1]};
        wrap.children[0].scalar = QScalar(1);
        NormalElement inv = eval_expr(ring, wrap);
        QScalar c = inv.terms().empty() ? QScalar() : inv.terms().begin()->second;
        return GLElement(a.numerator().scaled(c), a.det_power());
    }
    default:
        return lift(eval_expr(ring, e));
    }
}

std::string gl_str(const Ring& ring, const GLElement& g) {
    GLElement r = g.reduced(ring);
    std::string s = r.numerator().str();
    if (r.det_power() > 0) {
        s = "(" + s + ") * det^-" + std::to_string(r.det_power());
    }
    return s;
}

int cmd_normalize(int n, const std::string& ring_kind, const std::optional<std::string>& q0,
                  bool json, const std::string& expr_text) {
    QScalar qv = ring_parameter(q0, /*refuse_roots=*/true);
    if (ring_kind == "sl2") {
        if (n != 2) throw error("--ring sl2 needs n = 2");
        Ring ring(2, qv);
        Expr e = parse(expr_text, 2, /*sl2_names=*/true);
        SL2Element nf = sl2_normal_form(ring, eval_expr(ring, e));
        std::cout << nf.str() << "\n";
        return 0;
    }
    Ring ring(n, qv);
    Expr e = parse(expr_text, n);
    if (ring_kind == "gl") {
        std::cout << gl_str(ring, eval_gl(ring, e)) << "\n";
        return 0;
    }
    NormalElement v = eval_expr(ring, e);
    if (json)
        std::cout << element_to_json(v).dump() << "\n";
    else
        std::cout << v.str() << "\n";
    return 0;
}

int cmd_cocommutative(int n, const std::string& expr_text) {
    Ring ring(n);
    NormalElement v = eval_expr(ring, parse(expr_text, n));
    std::optional<CocommutativityWitness> w;
    bool coc = is_cocommutative(ring, v, &w);
    std::cout << (coc ? "true" : "false") << "\n";
    if (!coc && w) {
        std::cout << "witness: at " << w->left.str() << " (x) " << w->right.str()
                  << ": coproduct coefficient " << w->delta_coeff.str()
                  << ", flipped coefficient " << w->flipped_coeff.str() << "\n";
    }
    return 0;
}

int cmd_map(int n, const std::string& via, const std::string& expr_text) {
    Ring ring(n);
    NormalElement v = eval_expr(ring, parse(expr_text, n));
    if (via == "eta") {
        std::cout << eta(v).str() << "\n";
    } else if (via == "phi") {
        std::cout << phi(v).str() << "\n";
    } else if (via == "delta") {
        std::cout << delta_map(phi(v)).str() << "\n";
    } else if (via == "gamma") {
        std::cout << gamma(ring, v).str() << "\n";
    } else {
        throw error("unknown map '" + via + "' (expected eta, phi, delta or gamma)");
    }
    return 0;
}

int cmd_sl_member(int n, const std::string& expr_text) {
    Ring ring(n);
    NormalElement v = eval_expr(ring, parse(expr_text, n));
    std::cout << (sl_ideal_member(ring, v) ? "true" : "false") << "\n";
    return 0;
}

int cmd_sl2_nf(const std::string& expr_text) {
    Ring ring(2);
    NormalElement v = eval_expr(ring, parse(expr_text, 2, /*sl2_names=*/true));
    std::cout << sl2_normal_form(ring, v).str() << "\n";
    return 0;
}

int cmd_sl2_oracle(const std::string& shape_name, int i, int k, int l) {
    Ring ring(2);
    SL2Shape shape;
    if (shape_name == "a-side")
        shape = SL2Shape::ASide;
    else if (shape_name == "d-side")
        shape = SL2Shape::DSide;
    else if (shape_name == "pure")
        shape = SL2Shape::Pure;
    else
        throw error("unknown shape '" + shape_name + "' (expected a-side, d-side or pure)");
    std::cout << sl2_trace_commutator_formula(ring, shape, i, k, l).str() << "\n";
    return 0;
}

int cmd_centralizer(int n, int deg, const std::optional<std::string>& q0, bool json,
                    int threads) {
    Ring ring(n, ring_parameter(q0, /*refuse_roots=*/true));
    CentralizerReport rep = verify_centralizer_theorem(ring, deg, threads);
    if (json) {
        std::cout << report_to_json(rep).dump() << "\n";
    } else {
        std::cout << "n=" << rep.n << " d=" << rep.d << " slice_dim=" << rep.slice_dim
                  << " kernel_dim=" << rep.kernel_dim
                  << " partition_count=" << rep.partition_count
                  << " sigma_rank=" << rep.sigma_rank << " pass=" << (rep.pass ? "true" : "false");
        if (!rep.pass) std::cout << " failed_check=\"" << rep.failed_check << "\"";
        std::cout << "\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_suite(int n, int max_deg, const std::optional<std::string>& q0, bool json, int threads) {
    SuiteConfig cfg;
    cfg.n = n;
    cfg.max_deg = max_deg;
    cfg.threads = threads;
    cfg.json = json;
    if (q0) {
        Rational r = parse_q0(*q0);
        if (r == 0) throw error("q0 must be nonzero");
        if (is_root_of_unity(r))
            throw error("q0 = " + r.get_str() + " is a root of unity; refusing to run the suite");
        cfg.q0 = r;
    }
    return run_suite(cfg, std::cout);
}

int cmd_eval_q(int n, const std::string& q0_text, const std::string& expr_text) {
    Rational q0 = parse_q0(q0_text);
    if (q0 == 0) throw error("q0 must be nonzero");
    if (is_root_of_unity(q0))
        std::cerr << "warning: q0 = " << q0
                  << " is a root of unity; centralizer results are invalid at such values\n";
    Ring ring(n);
    NormalElement v = eval_expr(ring, parse(expr_text, n));
    NormalElement out = v.mapped_coeffs([&](const QScalar& c) { return QScalar(c.eval(q0)); });
    std::cout << out.str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for the quantized coordinate rings of n x n matrices"};
    app.require_subcommand(1);

    int n = 2;
    int deg = 0, max_deg = 4;
    int threads = env_threads();
    bool json = false;
    std::string expr_text, ring_kind = "m", via, shape = "a-side", q0_text;
    std::optional<std::string> q0_opt;
    int oi = 1, ok = 0, ol = 0;

    auto add_n = [&](CLI::App* cmd) { cmd->add_option("--n", n, "matrix size"); };
    auto add_q0 = [&](CLI::App* cmd) {
        cmd->add_option("--q0", q0_text, "rational specialization point for q");
    };
    auto add_expr = [&](CLI::App* cmd) {
        cmd->add_option("expr", expr_text, "expression")->required();
    };

    CLI::App* c_norm = app.add_subcommand("normalize", "rewrite an expression into normal form");
    add_n(c_norm);
    add_q0(c_norm);
    c_norm->add_option("--ring", ring_kind, "m (default), gl, or sl2");
    c_norm->add_flag("--json", json, "emit JSON");
    add_expr(c_norm);

    CLI::App* c_coc = app.add_subcommand("cocommutative", "test cocommutativity");
    add_n(c_coc);
    add_expr(c_coc);

    CLI::App* c_map = app.add_subcommand("map", "apply eta, phi, delta or gamma");
    add_n(c_map);
    c_map->add_option("--via", via, "eta | phi | delta | gamma")->required();
    add_expr(c_map);

    CLI::App* c_mem = app.add_subcommand("sl-member", "membership in the ideal (det_q - 1)");
    add_n(c_mem);
    add_expr(c_mem);

    CLI::App* c_nf = app.add_subcommand("sl2-nf", "SL_2 basis normal form (accepts a,b,c,d)");
    add_expr(c_nf);

    CLI::App* c_or = app.add_subcommand("sl2-oracle", "closed-form trace commutator");
    c_or->add_option("--shape", shape, "a-side | d-side | pure")->required();
    c_or->add_option("-i", oi, "a-side or d-side exponent");
    c_or->add_option("-k", ok, "b exponent");
    c_or->add_option("-l", ol, "c exponent");

    CLI::App* c_cen = app.add_subcommand("centralizer", "verify the centralizer theorem on a slice");
    add_n(c_cen);
    add_q0(c_cen);
    c_cen->add_option("--deg", deg, "slice degree")->required();
    c_cen->add_flag("--json", json, "emit JSON");
    c_cen->add_option("--threads", threads, "worker threads (default: QM_THREADS or 1)");

    CLI::App* c_suite = app.add_subcommand("suite", "run the verification battery");
    add_n(c_suite);
    add_q0(c_suite);
    c_suite->add_option("--max-deg", max_deg, "max centralizer degree");
    c_suite->add_flag("--json", json, "emit JSON");
    c_suite->add_option("--threads", threads, "worker threads (default: QM_THREADS or 1)");

    CLI::App* c_eval = app.add_subcommand("eval-q", "evaluate coefficients at a rational q0");
    add_n(c_eval);
    c_eval->add_option("--q0", q0_text, "rational evaluation point")->required();
    add_expr(c_eval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (!q0_text.empty()) q0_opt = q0_text;

    try {
        if (n < 1) throw error("matrix size must be positive");
        if (deg < 0 || max_deg < 0) throw error("degree bound must be nonnegative");
        if (threads < 1) throw error("thread count must be positive");
        if (c_norm->parsed()) return cmd_normalize(n, ring_kind, q0_opt, json, expr_text);
        if (c_coc->parsed()) return cmd_cocommutative(n, expr_text);
        if (c_map->parsed()) return cmd_map(n, via, expr_text);
        if (c_mem->parsed()) return cmd_sl_member(n, expr_text);
        if (c_nf->parsed()) return cmd_sl2_nf(expr_text);
        if (c_or->parsed()) return cmd_sl2_oracle(shape, oi, ok, ol);
        if (c_cen->parsed()) return cmd_centralizer(n, deg, q0_opt, json, threads);
        if (c_suite->parsed()) return cmd_suite(n, max_deg, q0_opt, json, threads);
        if (c_eval->parsed()) return cmd_eval_q(n, q0_text, expr_text);
    } catch (const parse_error& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
