#include "brst/scenario.hpp"

#include "brst/errors.hpp"
#include "brst/parse.hpp"
#include "brst/probes.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace brst {

namespace {

namespace pt = boost::property_tree;

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

template <class T>
T to_number(const std::string& s, const std::string& what)
{
    T v{};
    const std::string t = trim(s);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw ConfigError(what + ": expected an integer, got '" + s + "'");
    return v;
}

bool to_bool(const std::string& s, const std::string& what)
{
    const std::string t = trim(s);
    if (t == "true" || t == "yes" || t == "1")
        return true;
    if (t == "false" || t == "no" || t == "0")
        return false;
    throw ConfigError(what + ": expected true or false, got '" + s + "'");
}

// J<k> with k >= 1, returned 0-based.
std::size_t component_index(const std::string& key)
{
    if (key.size() < 2 || key[0] != 'J')
        throw ConfigError("moment map key must look like J1, J2, ...: '" + key + "'");
    const auto k = to_number<std::size_t>(key.substr(1), "moment map key");
    if (k == 0)
        throw ConfigError("moment map components are numbered from 1");
    return k - 1;
}

const pt::ptree* section(const pt::ptree& tree, const char* name)
{
    auto it = tree.find(name);
    return it == tree.not_found() ? nullptr : &it->second;
}

Scalar parse_constant(const std::string& text, const ContextPtr& ctx, const std::string& what)
{
    const Poly p = parse_polynomial(text, ctx);
    if (p.degree() > 0)
        throw ConfigError(what + " must be a constant: '" + text + "'");
    return p.constant_term();
}

} // namespace

ScenarioConfig parse_scenario_config(std::istream& in)
{
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("malformed INI: ") + e.what());
    }

    static const std::vector<std::string> known = {"scenario", "variables", "poisson", "lie",
                                                   "moment_map", "action", "invariants"};
    for (const auto& [name, sub] : tree)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw ConfigError("unknown section [" + name + "]");

    ScenarioConfig c;
    if (const auto* s = section(tree, "scenario")) {
        for (const auto& [key, node] : *s) {
            const std::string v = trim(node.data());
            if (key == "name") c.name = v;
            else if (key == "title") c.title = v;
            else if (key == "justification") c.justification = v;
            else if (key == "order") c.order = to_number<int>(v, key);
            else if (key == "degree") c.degree = to_number<int>(v, key);
            else if (key == "probes") c.probes = to_number<std::size_t>(v, key);
            else if (key == "light_probes") c.light_probes = to_number<std::size_t>(v, key);
            else if (key == "seed") c.seed = to_number<std::uint64_t>(v, key);
            else if (key == "reduction") c.reduction = to_bool(v, key);
            else if (key == "reduction_note") c.reduction_note = v;
            else if (key == "expect") c.expect = v;
            else if (key == "star_sign") {
                if (v == "koszul") c.sign = TensorSign::koszul;
                else if (v == "naive") c.sign = TensorSign::naive;
                else throw ConfigError("star_sign must be koszul or naive");
            } else
                throw ConfigError("unknown key '" + key + "' in [scenario]");
        }
    }
    if (c.name.empty())
        throw ConfigError("[scenario] name is required");

    const auto* vars = section(tree, "variables");
    if (!vars)
        throw ConfigError("[variables] section is required");
    for (const auto& [key, node] : *vars) {
        if (key == "names") {
            c.variables = split_ws(node.data());
        } else if (key == "weights") {
            for (const auto& row : split_on(node.data(), '|')) {
                std::vector<long> r;
                for (const auto& w : split_ws(row))
                    r.push_back(to_number<long>(w, "weight"));
                c.weights.push_back(std::move(r));
            }
        } else {
            throw ConfigError("unknown key '" + key + "' in [variables]");
        }
    }

    if (const auto* s = section(tree, "poisson")) {
        for (const auto& [key, node] : *s) {
            const auto names = split_ws(key);
            if (names.size() != 2)
                throw ConfigError("[poisson] keys name two variables: '" + key + "'");
            c.brackets.push_back({names[0], names[1], trim(node.data())});
        }
    }

    if (const auto* s = section(tree, "lie")) {
        for (const auto& [key, node] : *s) {
            if (key == "dim") {
                c.lie_dim = to_number<std::size_t>(node.data(), "lie dim");
                continue;
            }
            const auto idx = split_ws(key);
            if (idx.size() != 3)
                throw ConfigError("[lie] entries are 'a b c = value': '" + key + "'");
            std::size_t abc[3];
            for (int k = 0; k < 3; ++k) {
                abc[k] = to_number<std::size_t>(idx[k], "structure index");
                if (abc[k] == 0)
                    throw ConfigError("structure indices are numbered from 1");
                --abc[k];
            }
            c.structure.push_back({abc[0], abc[1], abc[2], trim(node.data())});
        }
    }

    if (const auto* s = section(tree, "moment_map")) {
        for (const auto& [key, node] : *s) {
            const std::size_t a = component_index(key);
            if (c.moment_map.size() <= a)
                c.moment_map.resize(a + 1);
            c.moment_map[a] = trim(node.data());
        }
        for (std::size_t a = 0; a < c.moment_map.size(); ++a)
            if (c.moment_map[a].empty())
                throw ConfigError("moment map component J" + std::to_string(a + 1) + " is missing");
    }
    if (c.lie_dim == 0)
        c.lie_dim = c.moment_map.size();

    if (const auto* s = section(tree, "action")) {
        for (const auto& [key, node] : *s) {
            const auto parts = split_ws(key);
            if (parts.size() != 2)
                throw ConfigError("[action] keys are 'J<k> variable': '" + key + "'");
            c.action[{component_index(parts[0]), parts[1]}] = trim(node.data());
        }
    }

    if (const auto* s = section(tree, "invariants")) {
        for (const auto& [key, node] : *s) {
            if (key == "degree") {
                c.invariant_degree = to_number<unsigned>(node.data(), "invariant degree");
            } else if (key == "generators") {
                const std::string v = trim(node.data());
                if (v != "derive")
                    for (const auto& g : split_on(v, ';'))
                        if (!trim(g).empty())
                            c.invariants.push_back(trim(g));
            } else {
                throw ConfigError("unknown key '" + key + "' in [invariants]");
            }
        }
    }
    return c;
}

ScenarioConfig parse_scenario_config_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_scenario_config(in);
}

ScenarioConfig read_scenario_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file " + path);
    return parse_scenario_config(in);
}

Scenario load_scenario(const ScenarioConfig& config)
{
    Scenario s;
    s.config = config;
    const auto& c = config;

    if (c.variables.empty())
        throw ConfigError("no variables declared");
    if (c.order < 0 || c.degree < 0)
        throw ConfigError("order and degree must be nonnegative");
    for (const auto& row : c.weights)
        if (row.size() != c.variables.size())
            throw ConfigError("weight row length differs from the number of variables");
    s.ctx = make_context(c.variables, c.weights);

    std::vector<PoissonData::Entry> pairs;
    for (const auto& b : c.brackets)
        pairs.push_back({s.ctx->index(b.x), s.ctx->index(b.y), parse_constant(b.value, s.ctx, "bracket {" + b.x + ", " + b.y + "}")});
    s.lambda = poisson_from_pairs(s.ctx, pairs);

    if (c.moment_map.empty())
        throw ConfigError("no moment map components declared");
    if (c.moment_map.size() != c.lie_dim)
        throw ConfigError("lie dim " + std::to_string(c.lie_dim) + " differs from the " +
                          std::to_string(c.moment_map.size()) + " moment map components");
    s.J.lie = LieAlgebraData(c.lie_dim);
    for (const auto& e : c.structure) {
        if (e.a >= c.lie_dim || e.b >= c.lie_dim || e.c >= c.lie_dim)
            throw ConfigError("structure index out of range");
        s.J.lie.set(e.a, e.b, e.c, parse_constant(e.value, s.ctx, "structure constant"));
    }
    for (const auto& text : c.moment_map)
        s.J.J.push_back(parse_polynomial(text, s.ctx));
    s.J.justification = c.justification;

    {
        Stopwatch clock;
        CheckRecord rec = make_record("lie-jacobi", "structure constants: antisymmetry and Jacobi identity");
        try {
            s.J.lie.validate();
        } catch (const ConfigError& e) {
            throw ConfigError("load check lie-jacobi failed: " + std::string(e.what()));
        }
        rec.wall_ms = clock.elapsed_ms();
        s.load_checks.push_back(rec);
    }

    // Declared action, or i w_a(v) x_v for a torus with weights.
    const std::size_t n = c.variables.size();
    if (!c.action.empty()) {
        s.action.assign(c.lie_dim, std::vector<Poly>(n, Poly(s.ctx)));
        for (const auto& [key, text] : c.action) {
            if (key.first >= c.lie_dim)
                throw ConfigError("action declared for a missing component J" + std::to_string(key.first + 1));
            s.action[key.first][s.ctx->index(key.second)] = parse_polynomial(text, s.ctx);
        }
    } else if (!c.weights.empty() && s.J.lie.abelian() && c.weights.size() == c.lie_dim) {
        s.action.assign(c.lie_dim, std::vector<Poly>(n, Poly(s.ctx)));
        for (std::size_t a = 0; a < c.lie_dim; ++a)
            for (std::size_t v = 0; v < n; ++v)
                s.action[a][v] = Poly::variable(s.ctx, v) * (Scalar::i() * Scalar(c.weights[a][v]));
    }

    {
        Stopwatch clock;
        CheckRecord rec = make_record("calibration", "declared action agrees with {J_a, x}");
        auto mismatch = [&](const PoissonData& lam) -> std::string {
            for (std::size_t a = 0; a < s.action.size(); ++a)
                for (std::size_t v = 0; v < n; ++v) {
                    const Poly got = poisson_bracket(s.J.J[a], Poly::variable(s.ctx, v), lam);
                    if (got != s.action[a][v])
                        return "{J" + std::to_string(a + 1) + ", " + c.variables[v] + "} = " + got.str() +
                               ", declared " + s.action[a][v].str();
                }
            return {};
        };
        if (s.action.empty()) {
            rec.status = Status::skipped;
            rec.detail = "no action declared";
        } else if (const std::string w = mismatch(s.lambda); w.empty()) {
            rec.detail = "Lambda as declared";
        } else if (mismatch(s.lambda.negated()).empty()) {
            s.lambda = s.lambda.negated();
            s.poisson_negated = true;
            rec.detail = "Lambda negated to match the declared action";
        } else {
            throw ConventionError("calibration failed for Lambda and -Lambda: " + w);
        }
        rec.probes = s.action.size() * n;
        rec.wall_ms = clock.elapsed_ms();
        s.load_checks.push_back(rec);
    }

    {
        CheckRecord rec = check_classical_equivariance(s.J, s.lambda);
        if (!rec.passed())
            throw ConfigError("load check classical-equivariance failed: " +
                              (rec.witnesses.empty() ? std::string() : rec.witnesses.front()));
        s.load_checks.push_back(rec);
    }

    if (!c.invariants.empty()) {
        for (const auto& text : c.invariants)
            s.invariant_candidates.push_back(parse_polynomial(text, s.ctx));
    } else if (!c.weights.empty()) {
        for (unsigned d = 0; d <= c.invariant_degree; ++d)
            for (const auto& m : monomials_of_degree(n, d)) {
                bool zero = true;
                for (const auto& row : c.weights)
                    zero = zero && m.weight(row) == 0;
                if (zero)
                    s.invariant_candidates.push_back(Poly::term(s.ctx, m, Scalar(1)));
            }
    }
    return s;
}

// ---------------------------------------------------------------- registry

namespace {

long int_param(const ScenarioParams& p, const std::string& key)
{
    return to_number<long>(p.at(key), key);
}

std::string zero_angular_momentum(const ScenarioParams& p)
{
    const long m = int_param(p, "m");
    if (m < 1 || 4 * m > static_cast<long>(kMaxVars))
        throw ConfigError("m must be between 1 and " + std::to_string(kMaxVars / 4));
    std::ostringstream o;
    o << "[scenario]\nname = zero-angular-momentum\n"
      << "title = " << m << " particles in the plane at zero total angular momentum\n"
      << "justification = circle weights of both signs occur on the support of J, so J generates the vanishing "
         "ideal of its zero level\n"
      << "order = 4\ndegree = 6\nseed = 11\n";
    std::string names, weights;
    for (const char* base : {"a", "b", "ab", "bb"})
        for (long i = 1; i <= m; ++i) {
            names += std::string(base) + std::to_string(i) + " ";
            weights += std::string(base).size() == 2 ? "-1 " : "1 ";
        }
    o << "[variables]\nnames = " << names << "\nweights = " << weights << "\n[poisson]\n";
    for (long i = 1; i <= m; ++i)
        o << "a" << i << " bb" << i << " = -2\nab" << i << " b" << i << " = -2\n";
    o << "[lie]\ndim = 1\n[moment_map]\nJ1 = ";
    for (long i = 1; i <= m; ++i)
        o << (i > 1 ? " + " : "") << "I/2*(a" << i << "*bb" << i << " - ab" << i << "*b" << i << ")";
    o << "\n";
    return o.str();
}

std::string circle_c4(const ScenarioParams&)
{
    return "[scenario]\nname = s1-c4\n"
           "title = circle acting on C^4 with weights (1, 1, -1, -1)\n"
           "justification = weights of both signs: J generates the vanishing ideal of its zero level\n"
           "order = 4\ndegree = 6\nseed = 21\n"
           "[variables]\nnames = z1 z2 z3 z4 zb1 zb2 zb3 zb4\nweights = 1 1 -1 -1 -1 -1 1 1\n"
           "[poisson]\nz1 zb1 = 2*I\nz2 zb2 = 2*I\nz3 zb3 = 2*I\nz4 zb4 = 2*I\n"
           "[lie]\ndim = 1\n"
           "[moment_map]\nJ1 = 1/2*(z3*zb3 + z4*zb4 - z1*zb1 - z2*zb2)\n";
}

std::string broken_sign(const ScenarioParams& p)
{
    std::string t = circle_c4(p);
    t.replace(t.find("name = s1-c4"), 12, "name = broken-sign");
    t.replace(t.find("title = "), 8, "title = negative control, Clifford product without the Koszul sign; ");
    t.replace(t.find("seed = 21\n"), 10, "seed = 23\nstar_sign = naive\nexpect = quantum-splitting\nreduction = false\n"
                                             "reduction_note = negative control stops after the quantum checks\n");
    return t;
}

std::string torus_c4(const ScenarioParams& p)
{
    const long alpha = int_param(p, "alpha");
    const long beta = int_param(p, "beta");
    if (alpha >= 0)
        throw ConfigError("alpha must be negative so that both weight signs occur for the first circle");
    std::ostringstream o;
    o << "[scenario]\nname = t2-c4\n"
      << "title = two-torus acting on C^4 with alpha = " << alpha << ", beta = " << beta << "\n"
      << "justification = alpha < 0 makes each weight row change sign on the support of J, so the components "
         "form a regular sequence generating the vanishing ideal\n"
      << "order = 4\ndegree = 6\nseed = 31\n"
      << "[variables]\nnames = z1 z2 z3 z4 zb1 zb2 zb3 zb4\n"
      << "weights = " << alpha << " 0 1 0 " << -alpha << " 0 -1 0 | " << beta << " -1 0 1 " << -beta << " 1 0 -1\n"
      << "[poisson]\nz1 zb1 = 2*I\nz2 zb2 = 2*I\nz3 zb3 = 2*I\nz4 zb4 = 2*I\n"
      << "[lie]\ndim = 2\n"
      << "[moment_map]\n"
      << "J1 = (" << -alpha << ")/2*z1*zb1 - 1/2*z3*zb3\n"
      << "J2 = (" << -beta << ")/2*z1*zb1 + 1/2*z2*zb2 - 1/2*z4*zb4\n";
    return o.str();
}

// Symmetric n x n matrices Q = (x_ij), P = (y_ij) with the trace pairing
// {tr AQ, tr BP} = tr AB, so {x_ii, y_ii} = 2 and {x_ij, y_ij} = 1 off the
// diagonal. J_(ij) = [Q, P]_ij for i < j, and the generator E_ij - E_ji acts
// by the matrix commutator on Q and on P.
std::string commuting_variety(std::size_t n)
{
    std::vector<std::string> names;
    for (const char* base : {"x", "y"})
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                names.push_back(base + std::to_string(i) + std::to_string(j));
    auto ctx = make_context(names);
    auto entry = [&](char base, std::size_t i, std::size_t j) {
        if (i > j)
            std::swap(i, j);
        return Poly::variable(ctx, ctx->index(std::string(1, base) + std::to_string(i + 1) + std::to_string(j + 1)));
    };
    using Matrix = std::vector<std::vector<Poly>>;
    auto sym = [&](char base) {
        Matrix m(n, std::vector<Poly>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = entry(base, i, j);
        return m;
    };
    auto mul = [&](const Matrix& a, const Matrix& b) {
        Matrix r(n, std::vector<Poly>(n, Poly(ctx)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    r[i][j] += a[i][k] * b[k][j];
        return r;
    };
    auto commutator = [&](const Matrix& a, const Matrix& b) {
        Matrix ab = mul(a, b), ba = mul(b, a);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                ab[i][j] -= ba[i][j];
        return ab;
    };
    const Matrix Q = sym('x'), P = sym('y'), QP = commutator(Q, P);

    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            gens.emplace_back(i, j);

    std::ostringstream o;
    o << "[scenario]\nname = commuting-n" << n << "\n"
      << "title = commuting variety of symmetric " << n << "x" << n << " matrices under SO(" << n << ")\n"
      << "justification = the off-diagonal commutator entries are taken as a complete intersection generating "
         "the vanishing ideal; the acyclicity check tests the complete intersection part up to the degree bound\n"
      << "order = 4\ndegree = " << (n == 2 ? 6 : 4) << "\nseed = " << 40 + n << "\n"
      << "reduction = false\n";
    if (n == 2)
        o << "reduction_note = the rotation action is not diagonal in these coordinates, so the Koszul homotopy is "
             "not equivariant; quantum reduction is not attempted\n";
    else
        o << "reduction_note = not attempted (scoped out): nonabelian quantum reduction\n";
    o << "[variables]\nnames =";
    for (const auto& v : names)
        o << " " << v;
    o << "\n[poisson]\n";
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            o << "x" << i << j << " y" << i << j << " = " << (i == j ? 2 : 1) << "\n";
    o << "[lie]\ndim = " << gens.size() << "\n";
    // {J_a, .} acts on the coordinates by x -> [A_a, x] with A_(ij) = E_ij - E_ji.
    // On linear functions these derivations compose in reverse order, so
    // f_ab^c is read off from [A_a, A_b] = -sum_c f_ab^c A_c.
    auto generator = [&](std::size_t a) {
        std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
        m[gens[a].first][gens[a].second] = 1;
        m[gens[a].second][gens[a].first] = -1;
        return m;
    };
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            const auto A = generator(a), B = generator(b);
            for (std::size_t cidx = 0; cidx < gens.size(); ++cidx) {
                const auto [i, j] = gens[cidx];
                long v = 0;
                for (std::size_t k = 0; k < n; ++k)
                    v += A[i][k] * B[k][j] - B[i][k] * A[k][j];
                if (v != 0)
                    o << a + 1 << " " << b + 1 << " " << cidx + 1 << " = " << -v << "\n";
            }
        }
    o << "[moment_map]\n";
    for (std::size_t a = 0; a < gens.size(); ++a)
        o << "J" << a + 1 << " = " << QP[gens[a].first][gens[a].second].str() << "\n";
    o << "[action]\n";
    for (std::size_t a = 0; a < gens.size(); ++a) {
        const auto A = generator(a);
        Matrix Am(n, std::vector<Poly>(n, Poly(ctx)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                Am[i][j] = Poly::constant(ctx, Scalar(A[i][j]));
        for (const Matrix* M : {&Q, &P}) {
            const Matrix C = commutator(Am, *M);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    if (!C[i][j].is_zero())
                        o << "J" << a + 1 << " " << (M == &Q ? "x" : "y") << i + 1 << j + 1 << " = " << C[i][j].str()
                          << "\n";
        }
    }
    return o.str();
}

std::string repeated_generator(const ScenarioParams&)
{
    return "[scenario]\nname = negative-control-qq\n"
           "title = negative control, the moment map (q, q)\n"
           "justification = none: a repeated component is not a regular sequence\n"
           "order = 4\ndegree = 6\nseed = 51\nexpect = koszul-acyclicity\nreduction = false\n"
           "reduction_note = the Koszul complex is not acyclic\n"
           "[variables]\nnames = q p\n"
           "[poisson]\nq p = 1\n"
           "[lie]\ndim = 2\n"
           "[moment_map]\nJ1 = q\nJ2 = q\n";
}

std::string cubic_control(const ScenarioParams&)
{
    return "[scenario]\nname = negative-control-cubic\n"
           "title = negative control, the cubic moment map q^2 + q^3\n"
           "justification = none: the component is inhomogeneous and its third derivative spoils strong invariance\n"
           "order = 4\ndegree = 6\nseed = 61\nexpect = strong-invariance\nreduction = false\n"
           "reduction_note = the Koszul complex needs homogeneous components\n"
           "[variables]\nnames = q p\n"
           "[poisson]\nq p = 1\n"
           "[lie]\ndim = 1\n"
           "[moment_map]\nJ1 = q^2 + q^3\n";
}

} // namespace

const std::vector<RegistryEntry>& scenario_registry()
{
    static const std::vector<RegistryEntry> entries = {
        {"zero-angular-momentum", "m particles in the plane, zero total angular momentum", {{"m", "2"}},
         zero_angular_momentum},
        {"s1-c4", "circle on C^4 with weights (1, 1, -1, -1)", {}, circle_c4},
        {"t2-c4", "two-torus on C^4", {{"alpha", "-1"}, {"beta", "1"}}, torus_c4},
        {"commuting-n2", "commuting variety of symmetric 2x2 matrices", {},
         [](const ScenarioParams&) { return commuting_variety(2); }},
        {"commuting-n3", "commuting variety of symmetric 3x3 matrices", {},
         [](const ScenarioParams&) { return commuting_variety(3); }},
        {"negative-control-qq", "repeated component (q, q)", {}, repeated_generator},
        {"broken-sign", "circle on C^4 with the Koszul sign dropped from the Clifford product", {}, broken_sign},
        {"negative-control-cubic", "inhomogeneous component q^2 + q^3", {}, cubic_control},
    };
    return entries;
}

const RegistryEntry& registry_entry(const std::string& name)
{
    for (const auto& e : scenario_registry())
        if (e.name == name)
            return e;
    throw ConfigError("unknown scenario '" + name + "'");
}

std::string registry_config_text(const std::string& name, const ScenarioParams& params)
{
    const RegistryEntry& e = registry_entry(name);
    ScenarioParams full = e.params;
    for (const auto& [k, v] : params) {
        if (!e.params.count(k))
            throw ConfigError("scenario '" + name + "' has no parameter '" + k + "'");
        full[k] = v;
    }
    return e.config_text(full);
}

ScenarioConfig registry_config(const std::string& name, const ScenarioParams& params)
{
    return parse_scenario_config_text(registry_config_text(name, params));
}

} // namespace brst
