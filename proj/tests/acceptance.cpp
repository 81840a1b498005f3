// Acceptance suite: one pass/fail line per criterion. The CLI binary path
// must be passed as argv[1] (criterion 9 shells out to it).
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "rectline/parse.hpp"
#include "rectline/rectify.hpp"
#include "rectline/serialize.hpp"
#include "rectline/topology.hpp"
#include "test_util.hpp"

using namespace rectline;
using namespace rectline::testutil;
using nlohmann::json;

namespace {

const BiPoly X = BiPoly::var_x();
const BiPoly Y = BiPoly::var_y();

std::string g_cli_path;
std::vector<std::string> g_failures;

void expect(bool ok, const std::string& what) {
    if (!ok) g_failures.push_back(what);
}

struct CorpusEntry {
    std::uint64_t seed;
    BiPoly p;
};

std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> out;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        int steps = 1 + static_cast<int>(seed % 8);  // <= 8
        out.push_back({seed, random_coordinate(seed, steps, 10, 64).p});
    }
    return out;
}

bool criterion1() {
    auto start = std::chrono::steady_clock::now();
    for (const auto& entry : corpus()) {
        Decision d = rectify(entry.p);
        expect(d.is_coordinate, "seed " + std::to_string(entry.seed) + ": not recognized");
        if (!d.is_coordinate) return false;
        expect(verify_certificate(entry.p, *d.certificate),
               "seed " + std::to_string(entry.seed) + ": certificate failed");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs < 60.0, "corpus run took " + std::to_string(secs) + "s (budget 60s)");
    return g_failures.empty();
}

bool criterion2() {
    for (long k = 2; k <= 9; ++k)
        for (long l = k + 1; l <= 9; ++l) {
            if (std::gcd(k, l) != 1) continue;
            Decision d = rectify(X.pow(static_cast<int>(k)) + Y.pow(static_cast<int>(l)));
            const auto* both =
                d.obstruction ? std::get_if<BothWeightsAtLeastTwo>(&*d.obstruction) : nullptr;
            bool ok = !d.is_coordinate && both && both->k == k && both->l == l && both->n == 1 &&
                      both->chi == 1 - (k - 1) * (l - 1);
            expect(ok, "x^" + std::to_string(k) + " + y^" + std::to_string(l));
        }

    auto is_univariate = [](const Decision& d) {
        return !d.is_coordinate && d.obstruction &&
               std::holds_alternative<UnivariateNonlinear>(*d.obstruction);
    };
    auto is_mpi = [](const Decision& d, bool vertex) {
        if (d.is_coordinate || !d.obstruction) return false;
        const auto* m = std::get_if<MultiplePointsAtInfinity>(&*d.obstruction);
        return m && m->count >= 2 && (vertex ? m->witness_vertex.has_value() : m->witness_edge.has_value());
    };
    expect(is_univariate(rectify(X * X)), "x^2 obstruction variant");
    expect(is_mpi(rectify(X * Y), true), "x*y obstruction variant");
    expect(is_mpi(rectify(X * (BiPoly::constant(1) + X * Y)), true), "x*(1+x*y) obstruction variant");
    expect(is_mpi(rectify(X * X + Y * Y), false), "x^2+y^2 obstruction variant");
    return g_failures.empty();
}

bool criterion3() {
    for (long k = 1; k <= 30; ++k)
        for (long l = 1; l <= 30; ++l) {
            if (std::gcd(k, l) != 1) continue;
            expect(euler_fermat(k, l) == euler_fermat_by_cover(k, l),
                   "chi mismatch at (" + std::to_string(k) + "," + std::to_string(l) + ")");
            if (k >= 2 && l >= 2)
                expect(euler_fermat(k, l) <= -1,
                       "chi not <= -1 at (" + std::to_string(k) + "," + std::to_string(l) + ")");
        }
    return g_failures.empty();
}

bool criterion4() {
    for (long k = 1; k <= 30; ++k)
        for (long l = 1; l <= 30; ++l)
            if (std::gcd(k, l) == 1)
                expect(suzuki_identity_check(k, l),
                       "suzuki fails at (" + std::to_string(k) + "," + std::to_string(l) + ")");
    return g_failures.empty();
}

bool criterion5() {
    std::mt19937_64 rng(500);
    for (int it = 0; it < 100; ++it) {
        BiPoly q = random_bipoly(rng, 6, 6, 8, true);
        WeightPair w = random_weights(rng);
        DeformationFamily fam = deformation(q, w);
        expect(specialize(fam.P, 1) == q, "z=1 specialization");
        expect(specialize(fam.P, 0) == leading_part(q, w), "z=0 specialization");
        for (const auto& [e, a] : fam.P.terms())
            expect(e.e >= 0 && w.l * e.i + w.k * e.j + e.e == fam.d_value, "z exponent bookkeeping");
        for (int t = 0; t < 3; ++t) {
            Rational a = make_rational(draw(rng, 1, 9), draw(rng, 1, 9));
            if (draw(rng, 0, 1)) a = -a;
            Rational al(1), ak(1), aD(1);
            for (long n = 0; n < w.l; ++n) al /= a;
            for (long n = 0; n < w.k; ++n) ak /= a;
            for (long n = 0; n < fam.d_value; ++n) aD *= a;
            expect(specialize(fam.P, a) == substitute(q, X * al, Y * ak) * aD,
                   "a-scaling consistency");
        }
    }
    return g_failures.empty();
}

bool criterion6() {
    std::mt19937_64 rng(600);
    for (int it = 0; it < 500; ++it) {
        BiPoly f = random_bipoly(rng, 5, 5, 6, true);
        BiPoly g = random_bipoly(rng, 5, 5, 6, true);
        WeightPair w = random_weights(rng);
        expect(weighted_degree(f * g, w) == weighted_degree(f, w) + weighted_degree(g, w),
               "d(f*g) = d(f) + d(g)");
        expect(leading_part(f * g, w) == leading_part(f, w) * leading_part(g, w),
               "hat(f*g) = hat(f)*hat(g)");
    }
    return g_failures.empty();
}

bool criterion7() {
    BiPoly p = Y + (X + Y * Y) * (X + Y * Y);
    Decision d = rectify(p);
    if (!d.is_coordinate || !d.certificate) {
        expect(false, "worked instance not recognized");
        return false;
    }
    const auto& steps = d.certificate->seq.steps;
    bool shape = steps.size() == 3 &&
                 std::holds_alternative<JonquieresX>(steps[0]) &&
                 std::get<JonquieresX>(steps[0]).g == UniPoly::monomial(-1, 2) &&
                 std::holds_alternative<JonquieresY>(steps[1]) &&
                 std::get<JonquieresY>(steps[1]).h == UniPoly::monomial(-1, 2) &&
                 std::holds_alternative<Affine>(steps[2]) &&
                 std::get<Affine>(steps[2]) == Affine::identity();
    expect(shape, "certificate is not the two-step reduction plus identity affine");
    expect(verify_certificate(p, *d.certificate), "worked certificate verifies");
    return g_failures.empty();
}

bool criterion8() {
    expect(critical_x_locus({Y * Y + X, Rational(0)}) == UniPoly::monomial(4, 1),
           "critical locus of y^2+x at c=0");
    expect(cauchy_radius(UniPoly::monomial(4, 1)) == 1, "cauchy radius of 4x");

    UniPoly R = critical_x_locus({X * X + Y * Y * Y, Rational(1)});
    UniPoly base({Rational(1), Rational(0), Rational(-2), Rational(0), Rational(1)});  // (x^2-1)^2
    bool const_multiple = !R.is_zero() && R.degree() == base.degree() &&
                          R == base * R.leading();
    expect(const_multiple, "critical locus of x^2+y^3 at c=1 is const*(x^2-1)^2");
    expect(cauchy_radius(R) >= 1, "cauchy radius of the Fermat locus");

    std::mt19937_64 rng(800);
    std::vector<Rational> grid;
    for (long n = -4; n <= 4; ++n) {
        grid.push_back(Rational(n));
        grid.push_back(make_rational(n, 2));
    }
    int done = 0;
    while (done < 50) {
        BiPoly q = random_bipoly(rng, 3, 4, 3);
        if (q.degree_y() < 2) continue;
        Rational c(draw(rng, -3, 3));
        UniPoly locus = critical_x_locus({q, c});
        if (locus.is_zero()) continue;
        BiPoly qy = partial_y(q);
        for (const auto& xv : grid)
            for (const auto& yv : grid)
                if (eval_at(q, xv, yv) == c && eval_at(qy, xv, yv) == 0)
                    expect(locus.eval(xv) == 0, "grid solution outside the resultant roots");
        ++done;
    }
    return g_failures.empty();
}

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args, const std::string& stdin_data = {}) {
    std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    std::string tmp;
    if (!stdin_data.empty()) {
        tmp = "/tmp/rectline_acceptance_input.txt";
        FILE* f = fopen(tmp.c_str(), "w");
        if (!f) return {-1, ""};
        fwrite(stdin_data.data(), 1, stdin_data.size(), f);
        fclose(f);
        cmd += " < " + tmp;
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool validate_schema(const json& j) {
    if (!j.contains("decision") || !j["decision"].is_string()) return false;
    std::string d = j["decision"].get<std::string>();
    if (d != "coordinate" && d != "not_coordinate") return false;
    if (!j.contains("steps") || !j["steps"].is_array()) return false;
    for (const auto& s : j["steps"]) {
        std::string type = s.at("type").get<std::string>();
        if (type == "jonquieres_x" || type == "jonquieres_y") {
            if (!s.contains("poly") || !s["poly"].is_string()) return false;
        } else if (type == "affine") {
            if (!s.contains("matrix") || s["matrix"].size() != 4) return false;
            if (!s.contains("translation") || s["translation"].size() != 2) return false;
        } else {
            return false;
        }
    }
    if (!j.contains("target") || j["target"] != "y") return false;
    if (!j.contains("verified") || !j["verified"].is_boolean()) return false;
    if (!j.contains("obstruction") || (!j["obstruction"].is_null() && !j["obstruction"].is_object()))
        return false;
    return (d == "coordinate") == j["verified"].get<bool>();
}

bool criterion9() {
    std::mt19937_64 rng(900);
    for (int it = 0; it < 500; ++it) {
        BiPoly p = random_bipoly(rng, 6, 8, 9) * make_rational(1, draw(rng, 1, 7));
        expect(parse_bipoly(to_string(p)) == p, "parse-print round trip");
    }

    bool saw0 = false, saw10 = false, saw2 = false;
    for (const auto& entry : corpus()) {
        CliResult res = run_cli("rectify - --json", to_string(entry.p));
        saw0 |= res.exit_code == 0;
        if (res.exit_code != 0) {
            expect(false, "seed " + std::to_string(entry.seed) + ": exit code " +
                              std::to_string(res.exit_code));
            continue;
        }
        json j = json::parse(res.output, nullptr, false);
        if (j.is_discarded() || !validate_schema(j)) {
            expect(false, "seed " + std::to_string(entry.seed) + ": schema violation");
            continue;
        }
        AutoSeq seq = seq_from_json(j["steps"]);
        expect(verify_certificate(entry.p, Certificate{seq}),
               "seed " + std::to_string(entry.seed) + ": deserialized certificate fails");
    }

    CliResult neg = run_cli("rectify 'x^2 + y^3' --json");
    saw10 |= neg.exit_code == 10;
    json nj = json::parse(neg.output, nullptr, false);
    expect(!nj.is_discarded() && validate_schema(nj) && nj["decision"] == "not_coordinate",
           "negative rectify schema");

    CliResult bad = run_cli("rectify 'x + ('");
    saw2 |= bad.exit_code == 2;
    CliResult badz = run_cli("rectify 'x + z'");
    saw2 &= true;
    expect(badz.exit_code == 2, "z rejection exit code");

    expect(saw0 && saw10 && saw2, "exit codes 0/10/2 all observed");
    return g_failures.empty();
}

int run_all() {
    struct Criterion {
        int id;
        const char* name;
        bool (*fn)();
    };
    const Criterion table[] = {
        {1, "rectification round trip on 200 generated coordinates", criterion1},
        {2, "known negatives with exact obstructions", criterion2},
        {3, "Euler characteristic cross-check (k,l <= 30)", criterion3},
        {4, "Suzuki identity (k,l <= 30)", criterion4},
        {5, "deformation family laws and a-scaling", criterion5},
        {6, "grading algebra on 500 random pairs", criterion6},
        {7, "worked instance certificate, exact steps", criterion7},
        {8, "critical locus instances and grid containment", criterion8},
        {9, "CLI contract: round trip, JSON schema, exit codes", criterion9},
    };
    int failures = 0;
    for (const auto& c : table) {
        g_failures.clear();
        bool ok = c.fn();
        std::cout << "criterion " << c.id << " [" << c.name << "]: " << (ok ? "PASS" : "FAIL")
                  << "\n";
        if (!ok) {
            ++failures;
            size_t shown = 0;
            for (const auto& f : g_failures) {
                std::cout << "    - " << f << "\n";
                if (++shown == 5) {
                    std::cout << "    - ... (" << g_failures.size() - shown << " more)\n";
                    break;
                }
            }
        }
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-rectline-cli>\n";
        return 2;
    }
    g_cli_path = argv[1];
    return run_all();
}
