#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <string>

#include "rectline/parse.hpp"
#include "rectline/rectify.hpp"
#include "rectline/serialize.hpp"
#include "rectline/topology.hpp"

using namespace rectline;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotCoordinate = 10;
constexpr int kExitInputError = 2;

int max_degree_guard() {
    if (const char* v = std::getenv("RECT_MAX_DEGREE")) {
        int n = std::atoi(v);
        if (n > 0) return n;
    }
    return 512;
}

// A positional "-" means: read the polynomial from stdin (large inputs
// do not fit the argv length limit).
std::string resolve_poly_text(const std::string& text) {
    if (text != "-") return text;
    std::string data((std::istreambuf_iterator<char>(std::cin)),
                     std::istreambuf_iterator<char>());
    return data;
}

BiPoly parse_input(const std::string& raw) {
    BiPoly p = parse_bipoly(resolve_poly_text(raw));
    int guard = max_degree_guard();
    if (p.total_degree() > guard)
        throw std::invalid_argument("input degree " + std::to_string(p.total_degree()) +
                                    " exceeds RECT_MAX_DEGREE=" + std::to_string(guard));
    return p;
}

WeightPair parse_weights(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--weights expects \"k,l\"");
    long k = std::stol(text.substr(0, comma));
    long l = std::stol(text.substr(comma + 1));
    return WeightPair(k, l);
}

std::string describe_obstruction(const Obstruction& obs) {
    return std::visit(
        [](const auto& o) -> std::string {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, UnivariateNonlinear>) {
                return "univariate of degree >= 2";
            } else if constexpr (std::is_same_v<T, MultiplePointsAtInfinity>) {
                std::string w;
                if (o.witness_edge)
                    w = "edge with weights (" + std::to_string(o.witness_edge->weight.k) + "," +
                        std::to_string(o.witness_edge->weight.l) + ")";
                else if (o.witness_vertex)
                    w = "dominant vertex (" + std::to_string(o.witness_vertex->i) + "," +
                        std::to_string(o.witness_vertex->j) + ")";
                return "at least " + std::to_string(o.count) + " points at infinity (" + w + ")";
            } else {
                return "leading form (x^" + std::to_string(o.k) + " + c y^" + std::to_string(o.l) +
                       ")^" + std::to_string(o.n) + " with both weights >= 2, chi = " +
                       std::to_string(o.chi);
            }
        },
        obs);
}

std::string describe_step(const ElemAuto& step) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, JonquieresY>) {
                return "(x, y) -> (x, y + " + to_string(s.h, 'x') + ")";
            } else if constexpr (std::is_same_v<T, JonquieresX>) {
                return "(x, y) -> (x + " + to_string(s.g, 'y') + ", y)";
            } else {
                return "(x, y) -> (" + rational_to_string(s.a) + "*x + " + rational_to_string(s.b) +
                       "*y + " + rational_to_string(s.e) + ", " + rational_to_string(s.c) +
                       "*x + " + rational_to_string(s.d) + "*y + " + rational_to_string(s.f) + ")";
            }
        },
        step);
}

int cmd_rectify(const std::string& poly_text, bool as_json) {
    auto start = std::chrono::steady_clock::now();
    BiPoly p = parse_input(poly_text);
    Decision d = rectify(p);
    bool verified = d.is_coordinate && verify_certificate(p, *d.certificate);
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (as_json) {
        json out = decision_to_json(d, verified);
        out["command"] = "rectify " + poly_text;
        out["elapsed_ms"] = elapsed.count();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "input: " << to_string(p) << "\n";
        if (d.is_coordinate) {
            std::cout << "decision: coordinate (certificate verified: "
                      << (verified ? "true" : "false") << ")\n";
            int idx = 1;
            for (const auto& step : d.certificate->seq.steps)
                std::cout << "  step " << idx++ << ": " << describe_step(step) << "\n";
            std::cout << "target: y\n";
        } else {
            std::cout << "decision: not a coordinate\n";
            std::cout << "obstruction: " << describe_obstruction(*d.obstruction) << "\n";
        }
        std::cout << "elapsed: " << elapsed.count() << " ms\n";
    }
    return d.is_coordinate ? kExitOk : kExitNotCoordinate;
}

int cmd_leading(const std::string& poly_text, const std::string& weights) {
    BiPoly p = parse_input(poly_text);
    WeightPair w = parse_weights(weights);
    if (p.is_zero()) throw std::invalid_argument("leading: zero polynomial");
    std::cout << "weighted degree (k=" << w.k << ", l=" << w.l << "): " << weighted_degree(p, w)
              << "\n";
    std::cout << "leading part: " << to_string(leading_part(p, w)) << "\n";
    return kExitOk;
}

int cmd_newton(const std::string& poly_text) {
    BiPoly p = parse_input(poly_text);
    std::cout << "support:";
    for (const auto& [e, a] : p.terms()) std::cout << " (" << e.i << "," << e.j << ")";
    std::cout << "\n";
    auto edges = ne_edges(p);
    if (edges.empty()) {
        auto v = dominant_vertex(p);
        std::cout << "no NE edges; dominant vertex (" << v->i << "," << v->j << ")\n";
    }
    for (const auto& e : edges) {
        EdgeFactorization ef = edge_factorization(p, e);
        std::cout << "edge: weights (k=" << e.weight.k << ", l=" << e.weight.l << "), d=" << e.d_value
                  << ", from (" << e.i_min << "," << e.j_max << ") to (" << e.i_max() << ","
                  << e.j_min() << "), steps=" << e.steps << "\n";
        std::cout << "  f(t) = " << to_string(ef.f, 't') << ", distinct roots m=" << ef.m;
        if (ef.perfect_power)
            std::cout << ", perfect power (c=" << rational_to_string(ef.perfect_power->c)
                      << ", n=" << ef.perfect_power->n << ")";
        std::cout << "\n";
    }
    std::cout << "points-at-infinity lower bound: " << infinity_lower_bound(p) << "\n";
    return kExitOk;
}

int cmd_euler(long k, long l) {
    long a = euler_fermat(k, l);
    long b = euler_fermat_by_cover(k, l);
    std::cout << "chi(x^" << k << " + y^" << l << " = 1) = " << a << " (closed form), " << b
              << " (branched cover)\n";
    std::cout << "suzuki identity: " << (suzuki_identity_check(k, l) ? "holds" : "FAILS") << "\n";
    return kExitOk;
}

int cmd_deform(const std::string& poly_text, const std::string& weights,
               const std::string& at_value) {
    BiPoly q = parse_input(poly_text);
    WeightPair w = parse_weights(weights);
    DeformationFamily fam = deformation(q, w);
    std::cout << "weighted degree: " << fam.d_value << "\n";
    std::cout << "family: " << to_string(fam.P) << "\n";
    if (!at_value.empty()) {
        Rational a = rational_from_string(at_value);
        std::cout << "specialization at z=" << rational_to_string(a) << ": "
                  << to_string(specialize(fam.P, a)) << "\n";
    }
    return kExitOk;
}

int cmd_critical(const std::string& poly_text, const std::string& c_value) {
    BiPoly q = parse_input(poly_text);
    Rational c = rational_from_string(c_value);
    UniPoly R = critical_x_locus({q, c});
    std::cout << "Res_y(q - c, dq/dy) = " << to_string(R, 'x') << "\n";
    if (R.is_zero() || R.degree() < 1)
        std::cout << "cauchy radius: undefined (locus has no finite positive-degree part)\n";
    else
        std::cout << "cauchy radius: " << rational_to_string(cauchy_radius(R)) << "\n";
    return kExitOk;
}

int cmd_gen(std::uint64_t seed, int steps, int coeff_bound, int degree_bound, int count) {
    for (int idx = 0; idx < count; ++idx) {
        GeneratedCoordinate gc =
            random_coordinate(seed + static_cast<std::uint64_t>(idx), steps, coeff_bound, degree_bound);
        json entry;
        entry["index"] = idx;
        entry["seed"] = seed + static_cast<std::uint64_t>(idx);
        entry["poly"] = to_string(gc.p);
        entry["witness"] = seq_to_json(gc.witness);
        std::cout << entry.dump() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact recognizer of coordinate polynomials in Q[x,y]"};
    app.require_subcommand(1);

    std::string poly_text, weights, at_value, c_value;
    bool as_json = false;
    long euler_k = 0, euler_l = 0;
    std::uint64_t gen_seed = 1;
    int gen_steps = 4, gen_coeff = 10, gen_degree = 64, gen_count = 1;

    auto* rectify_cmd = app.add_subcommand("rectify", "decide whether a polynomial is a coordinate");
    rectify_cmd->add_option("poly", poly_text, "polynomial in x, y")->required();
    rectify_cmd->add_flag("--json", as_json, "emit the JSON certificate schema");

    auto* leading_cmd = app.add_subcommand("leading", "weighted degree and leading part");
    leading_cmd->add_option("poly", poly_text)->required();
    leading_cmd->add_option("--weights", weights, "coprime pair k,l")->required();

    auto* newton_cmd = app.add_subcommand("newton", "NE edges, factorizations, infinity bound");
    newton_cmd->add_option("poly", poly_text)->required();

    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristics of x^k + y^l = 1");
    euler_cmd->add_option("--k", euler_k)->required();
    euler_cmd->add_option("--l", euler_l)->required();

    auto* deform_cmd = app.add_subcommand("deform", "weighted homogenization family");
    deform_cmd->add_option("poly", poly_text)->required();
    deform_cmd->add_option("--weights", weights, "coprime pair k,l")->required();
    deform_cmd->add_option("--at", at_value, "rational z value to specialize at");

    auto* critical_cmd = app.add_subcommand("critical", "ramification locus over the x-axis");
    critical_cmd->add_option("poly", poly_text)->required();
    critical_cmd->add_option("--c", c_value, "rational fiber value")->required();

    auto* gen_cmd = app.add_subcommand("gen", "emit disguised coordinates with witnesses");
    gen_cmd->add_option("--seed", gen_seed);
    gen_cmd->add_option("--steps", gen_steps);
    gen_cmd->add_option("--coeff-bound", gen_coeff);
    gen_cmd->add_option("--degree-bound", gen_degree);
    gen_cmd->add_option("--count", gen_count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (rectify_cmd->parsed()) return cmd_rectify(poly_text, as_json);
        if (leading_cmd->parsed()) return cmd_leading(poly_text, weights);
        if (newton_cmd->parsed()) return cmd_newton(poly_text);
        if (euler_cmd->parsed()) return cmd_euler(euler_k, euler_l);
        if (deform_cmd->parsed()) return cmd_deform(poly_text, weights, at_value);
        if (critical_cmd->parsed()) return cmd_critical(poly_text, c_value);
        if (gen_cmd->parsed()) return cmd_gen(gen_seed, gen_steps, gen_coeff, gen_degree, gen_count);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
