// hardy: command-line front end for the sums, expansions, density
// constructions and verification suites.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or domain error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "hardy/cfe.hpp"
#include "hardy/density.hpp"
#include "hardy/sums.hpp"
#include "hardy/table.hpp"
#include "hardy/verify.hpp"

using namespace hardy;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char *schema_version = "1.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    double tol = 1e-8;
    int terms = 200;
    long max_c = 0;
};

// Collects one command's inputs, outputs and checks, then prints them as
// text or JSON.
class Output {
public:
    Output(std::string command, const Globals &g) : g_(g)
    {
        doc_["command"] = std::move(command);
        doc_["inputs"] = Json::object();
        doc_["outputs"] = Json::object();
        doc_["checks"] = Json::array();
        doc_["version"] = schema_version;
    }

    Json &inputs() { return doc_["inputs"]; }

    // A named result, printed as "name value" in text mode.
    void out(const std::string &name, const Json &value)
    {
        doc_["outputs"][name] = value;
        lines_.push_back(name + " " + (value.is_string() ? value.get<std::string>() : value.dump()));
    }

    // JSON only.
    void data(const std::string &name, const Json &value) { doc_["outputs"][name] = value; }

    void text(const std::string &line) { lines_.push_back(line); }

    void check(const std::string &name, bool pass, double error)
    {
        doc_["checks"].push_back({{"name", name}, {"pass", pass}, {"error", error}});
        all_pass_ = all_pass_ && pass;
    }

    int finish()
    {
        if (g_.json) {
            std::cout << doc_.dump(2) << '\n';
        } else {
            for (const auto &l : lines_) {
                std::cout << l << '\n';
            }
        }
        return all_pass_ ? 0 : 1;
    }

private:
    const Globals &g_;
    Json doc_;
    std::vector<std::string> lines_;
    bool all_pass_ = true;
};

Integer to_integer(const std::string &s)
{
    try {
        return parse_integer(s);
    } catch (const std::exception &) {
        throw UsageError("not an integer: '" + s + "'");
    }
}

Rational to_rational(const std::string &s)
{
    try {
        return Rational::parse(s);
    } catch (const std::exception &) {
        throw UsageError("not a rational p/q: '" + s + "'");
    }
}

SeriesParams series(const Globals &g)
{
    SeriesParams p;
    p.tol = g.tol;
    p.terms = g.terms;
    p.validate();
    return p;
}

// --- sum ---------------------------------------------------------------

struct SumArgs {
    std::string kind;
    std::string d, c;
    std::string method;
};

int cmd_sum(const SumArgs &a, const Globals &g)
{
    Output o("sum", g);
    const Integer d = to_integer(a.d), c = to_integer(a.c);
    std::string method = a.method;
    if (method.empty()) {
        method = a.kind == "s" ? "recursive" : "direct";
    }
    o.inputs() = {{"kind", a.kind}, {"d", d.get_str()}, {"c", c.get_str()}, {"method", method}};
    std::string value;
    if (a.kind == "hardy-s" || a.kind == "hardy-s4") {
        const bool s4 = a.kind == "hardy-s4";
        Integer v;
        if (method == "direct") {
            v = s4 ? hardy_s4_direct(d, c) : hardy_s_direct(d, c);
        } else if (method == "cfe") {
            v = s4 ? hardy_s4_from_cfe(d, c) : hardy_s_from_cfe(d, c);
        } else {
            throw UsageError("method '" + method + "' does not apply to " + a.kind + " (use direct or cfe)");
        }
        value = v.get_str();
    } else if (a.kind == "s") {
        if (method == "recursive") {
            value = dedekind_recursive(d, c).str();
        } else if (method == "hickerson") {
            value = dedekind_hickerson(d, c).str();
        } else if (method == "cotangent") {
            auto dl = to_int64(d), cl = to_int64(c);
            if (!dl || !cl || *cl <= 0 || *cl > 10000000) {
                throw UsageError("the cotangent sum needs 0 < c <= 10^7");
            }
            std::ostringstream os;
            os.precision(17);
            os << dedekind_cotangent_numeric(static_cast<long>(*dl), static_cast<long>(*cl));
            value = os.str();
        } else {
            throw UsageError("method '" + method + "' does not apply to s (use recursive, hickerson or cotangent)");
        }
    } else {
        throw UsageError("unknown sum '" + a.kind + "' (use s, hardy-s or hardy-s4)");
    }
    o.data("value", value);
    o.text(value);
    return o.finish();
}

// --- cfe -----------------------------------------------------------------

struct CfeArgs {
    std::string input;
    std::string kind = "all";
    bool convergents = false;
};

CfKind kind_from(const std::string &k)
{
    if (k == "theta") {
        return CfKind::ThetaNeg;
    }
    if (k == "gamma02") {
        return CfKind::Gamma02Pos;
    }
    if (k == "classical") {
        return CfKind::Classical;
    }
    throw UsageError("unknown expansion kind '" + k + "' (use theta, gamma02 or classical)");
}

Json convergent_list(const ContinuedFraction &cf)
{
    Json arr = Json::array();
    const Convergents cv = convergents(cf);
    for (std::size_t k = 1; k <= cv.pairs.size(); ++k) {
        arr.push_back(cv.value(k).str());
    }
    return arr;
}

int cmd_cfe(const CfeArgs &a, const Globals &g)
{
    Output o("cfe", g);
    o.inputs() = {{"input", a.input}, {"kind", a.kind}};
    if (!a.input.empty() && a.input.front() == '[') {
        ContinuedFraction cf;
        try {
            cf = a.kind == "all" ? parse_cf(a.input) : parse_cf(a.input, kind_from(a.kind));
        } catch (const std::exception &e) {
            throw UsageError(std::string("cannot read expansion: ") + e.what());
        }
        o.out("value", eval_cf(cf).str());
        if (cf.kind != CfKind::Classical) {
            o.out("parity", std::string(to_string(parity_of_length(cf))));
        }
        o.out("word", to_string(cf_to_word(cf)));
        if (a.convergents && cf.kind == CfKind::ThetaNeg && cf.head == 0) {
            o.out("convergents", convergent_list(cf));
        }
        return o.finish();
    }
    const Rational x = to_rational(a.input);
    const char *names[] = {"theta", "gamma02", "classical"};
    for (const char *name : names) {
        if (a.kind != "all" && a.kind != name) {
            continue;
        }
        const CfKind k = kind_from(name);
        std::optional<ContinuedFraction> cf;
        try {
            cf = k == CfKind::ThetaNeg ? expand_theta(x) : k == CfKind::Gamma02Pos ? expand_gamma02(x) : expand_classical(x);
        } catch (const ParityError &) {
        }
        o.out(name, cf ? format_cf(*cf) : "x");
        if (cf && a.convergents && k == CfKind::ThetaNeg) {
            o.out(std::string(name) + "_convergents", convergent_list(*cf));
        }
    }
    if (a.kind == "all" || a.kind == "theta" || a.kind == "gamma02") {
        // Hardy sums follow from the expansions when they exist.
        if (is_odd(x.num() + x.den())) {
            o.out("S", hardy_s_from_cfe(x.num(), x.den()).get_str());
        }
        if (is_odd(x.num())) {
            o.out("S4", hardy_s4_from_cfe(x.num(), x.den()).get_str());
        }
    }
    return o.finish();
}

// --- decompose -------------------------------------------------------------

struct DecomposeArgs {
    std::vector<std::string> entries;
    std::string group = "sl2";
};

int cmd_decompose(const DecomposeArgs &a, const Globals &g)
{
    Output o("decompose", g);
    if (a.entries.size() != 4) {
        throw UsageError("decompose needs the four entries a b c d");
    }
    const Mat2 m(to_integer(a.entries[0]), to_integer(a.entries[1]), to_integer(a.entries[2]),
                 to_integer(a.entries[3]));
    GroupTag tag;
    try {
        tag = parse_group_tag(a.group);
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
    o.inputs() = {{"matrix", m.str()}, {"group", std::string(to_string(tag))}};
    Json groups = Json::array();
    for (GroupTag t : {GroupTag::SL2, GroupTag::Theta, GroupTag::Gamma02}) {
        if (in_group(m, t)) {
            groups.push_back(std::string(to_string(t)));
        }
    }
    o.out("groups", groups);
    if (!in_group(m, tag)) {
        throw std::domain_error("matrix " + m.str() + " is not in " + std::string(to_string(tag)));
    }
    const GeneratorWord w = word_from_matrix(m, tag);
    o.out("word", to_string(w));
    o.check("word multiplies out to the matrix", evaluate(w) == m, 0);
    return o.finish();
}

// --- density ---------------------------------------------------------------

struct DensityArgs {
    std::string kind;
    std::string x, eps;
    std::string m = "0", m1 = "0", m2 = "1";
};

int cmd_density(const DensityArgs &a, const Globals &g)
{
    Output o("density", g);
    DensityRequest req;
    req.x = to_rational(a.x);
    req.epsilon = to_rational(a.eps);
    req.m = to_integer(a.m);
    req.m1 = to_integer(a.m1);
    req.m2 = to_integer(a.m2);
    o.inputs() = {{"kind", a.kind}, {"x", req.x.str()}, {"eps", req.epsilon.str()}};
    DensityWitness w;
    if (a.kind == "s") {
        o.inputs()["m"] = req.m.get_str();
        w = construct_s(req);
    } else if (a.kind == "s4") {
        o.inputs()["m"] = req.m.get_str();
        w = construct_s4(req);
    } else if (a.kind == "joint") {
        o.inputs()["m1"] = req.m1.get_str();
        o.inputs()["m2"] = req.m2.get_str();
        w = construct_joint(req);
    } else {
        throw UsageError("unknown construction '" + a.kind + "' (use s, s4 or joint)");
    }
    o.out("witness", w.value().str());
    o.out("expansion", format_cf(w.expansion));
    if (w.s) {
        o.out("S", w.s->get_str());
    }
    if (w.s4) {
        o.out("S4", w.s4->get_str());
    }
    o.out("distance", w.distance.str());

    // Independent re-checks of what was printed.
    const bool small = w.c <= 1000000;
    o.check("distance below eps", (req.x - w.value()).abs() == w.distance && w.distance < req.epsilon, 0);
    o.check("expansion evaluates to the witness", eval_cf(w.expansion) == w.value(), 0);
    if (w.s) {
        const Integer s = small ? hardy_s_direct(w.d, w.c) : hardy_s_from_cfe(w.d, w.c);
        o.check(small ? "S by the defining sum" : "S by partial quotients", s == *w.s, 0);
    }
    if (w.s4) {
        const Integer s4 = small ? hardy_s4_direct(w.d, w.c) : hardy_s4_from_cfe(w.d, w.c);
        o.check(small ? "S4 by the defining sum" : "S4 by partial quotients", s4 == *w.s4, 0);
    }
    return o.finish();
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    int words = 50;
    std::uint64_t seed = 1;
    bool unscaled = false;
};

int cmd_verify(const VerifyArgs &a, const Globals &g)
{
    Output o("verify", g);
    SuiteOptions opts;
    opts.max_c = g.max_c;
    opts.series = series(g);
    opts.words = a.words;
    opts.seed = a.seed;
    opts.form = a.unscaled ? ReciprocityForm::Unscaled : ReciprocityForm::Standard;
    if (opts.words < 1) {
        throw UsageError("--words must be positive");
    }
    std::vector<std::string> suites;
    if (a.suite == "all") {
        suites = suite_names();
    } else {
        suites.push_back(a.suite);
    }
    o.inputs() = {{"suite", a.suite}, {"max_c", g.max_c}, {"tol", g.tol}, {"terms", g.terms}, {"words", a.words},
                  {"seed", a.seed}};
    for (const auto &name : suites) {
        SuiteReport r;
        try {
            r = run_suite(name, opts);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        o.text(r.name + ": " + r.summary());
        for (const auto &n : r.notes) {
            o.text("  " + n);
        }
        Json rep = {{"cases", r.cases}, {"failures", r.failures}, {"seconds", r.seconds}};
        if (!r.first_failure.empty()) {
            rep["first_failure"] = r.first_failure;
        }
        if (r.max_error > 0) {
            rep["max_error"] = r.max_error;
        }
        // error: the largest deviation for numeric suites, else the failure count
        o.check(r.name, r.pass(), r.max_error > 0 ? r.max_error : static_cast<double>(r.failures));
        o.data(r.name, rep);
    }
    return o.finish();
}

// --- table -----------------------------------------------------------------

int cmd_table(bool csv, const Globals &g)
{
    const long max_c = g.max_c > 0 ? g.max_c : 10;
    const auto rows = build_table(max_c);
    if (!g.json) {
        std::cout << (csv ? format_table_csv(rows) : format_table_text(rows));
        return 0;
    }
    Output o("table", g);
    o.inputs() = {{"max_c", max_c}};
    Json arr = Json::array();
    for (const auto &r : rows) {
        auto cf = [](const std::optional<ContinuedFraction> &e) { return e ? Json(format_cf(*e)) : Json(nullptr); };
        auto num = [](const std::optional<Integer> &v) { return v ? Json(v->get_str()) : Json(nullptr); };
        arr.push_back({{"d", r.d.get_str()},
                       {"c", r.c.get_str()},
                       {"theta", cf(r.theta)},
                       {"S", num(r.s)},
                       {"gamma02", cf(r.gamma02)},
                       {"S4", num(r.s4)}});
    }
    o.out("rows", arr);
    return o.finish();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Hardy sums, Dedekind sums and their continued-fraction formulas"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Print a JSON report");
    app.add_option("--tol", g.tol, "Tolerance for numerical checks")->check(CLI::PositiveNumber);
    app.add_option("--terms", g.terms, "Series truncation N")->check(CLI::PositiveNumber);
    app.add_option("--max-c", g.max_c, "Largest denominator for table and sweeps")->check(CLI::PositiveNumber);

    SumArgs sum;
    auto *sum_cmd = app.add_subcommand("sum", "Evaluate s(d, c), S(d, c) or S4(d, c)");
    sum_cmd->add_option("kind", sum.kind, "s | hardy-s | hardy-s4")->required();
    sum_cmd->add_option("d", sum.d)->required();
    sum_cmd->add_option("c", sum.c)->required();
    sum_cmd->add_option("--method", sum.method, "direct | cfe (Hardy sums); recursive | hickerson | cotangent (s)");

    CfeArgs cfe;
    auto *cfe_cmd = app.add_subcommand("cfe", "Expand a rational, or evaluate an expansion given in brackets");
    cfe_cmd->add_option("input", cfe.input, "p/q, [[q1,...]], [a1,...] or [a0;a1,...]")->required();
    cfe_cmd->add_option("--kind", cfe.kind, "theta | gamma02 | classical | all");
    cfe_cmd->add_flag("--convergents", cfe.convergents, "Also list the convergents of a theta-type expansion");

    DecomposeArgs dec;
    auto *dec_cmd = app.add_subcommand("decompose", "Write a matrix as a word in the generators of a group");
    dec_cmd->add_option("entries", dec.entries, "a b c d")->required()->expected(4);
    dec_cmd->add_option("--group", dec.group, "sl2 | theta | gamma02");

    DensityArgs den;
    auto *den_cmd = app.add_subcommand("density", "Find d/c near x with prescribed sums");
    den_cmd->add_option("kind", den.kind, "s | s4 | joint")->required();
    den_cmd->add_option("--x", den.x, "Target, p/q")->required();
    den_cmd->add_option("--eps", den.eps, "Distance bound, p/q")->required();
    den_cmd->add_option("--m", den.m, "Target S (s) or S4 (s4)");
    den_cmd->add_option("--m1", den.m1, "Target S + S4 (joint), even");
    den_cmd->add_option("--m2", den.m2, "Target S4 (joint), odd");

    VerifyArgs ver;
    auto *ver_cmd = app.add_subcommand("verify", "Run a verification suite");
    ver_cmd->add_option("suite", ver.suite, "table | theorem1 | corollary | reciprocity | dedekind | density | "
                                            "qseries | cocycle | all")
        ->required();
    ver_cmd->add_option("--words", ver.words, "Random words per check and basepoint");
    ver_cmd->add_option("--seed", ver.seed, "Seed for the random words");
    ver_cmd->add_flag("--unscaled", ver.unscaled, "dedekind: use the recursion without the 1/12 factor");

    bool csv = false;
    auto *table_cmd = app.add_subcommand("table", "Print S, S4 and expansions for 1 <= d < c <= max-c");
    table_cmd->add_flag("--csv", csv, "Comma-separated output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sum_cmd->parsed()) {
            return cmd_sum(sum, g);
        }
        if (cfe_cmd->parsed()) {
            return cmd_cfe(cfe, g);
        }
        if (dec_cmd->parsed()) {
            return cmd_decompose(dec, g);
        }
        if (den_cmd->parsed()) {
            return cmd_density(den, g);
        }
        if (ver_cmd->parsed()) {
            return cmd_verify(ver, g);
        }
        if (table_cmd->parsed()) {
            return cmd_table(csv, g);
        }
    } catch (const std::exception &e) {
        // usage, parity and domain errors alike
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
