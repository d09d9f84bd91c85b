#pragma once

// Argument parsing, execution and report rendering for the hwpl binary.

#include "hwpl/error.hpp"
#include "hwpl/extbundle.hpp"
#include "hwpl/hall.hpp"
#include "hwpl/lgroup.hpp"
#include "hwpl/oracle/checks.hpp"
#include "hwpl/polyring.hpp"
#include "hwpl/quiverside.hpp"
#include "hwpl/sheafcat.hpp"
#include "hwpl/tubes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hwpl::cli {

/// Bad command line: unknown flag, missing argument, malformed value.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Job {
    std::string command;  ///< "f", "hall ext-lines", "verify", ...
    std::map<std::string, std::vector<std::string>> opts;
    std::vector<std::string> flags;
    std::string format = "text";
    std::string out;
    std::string help;  ///< nonempty when --help was requested

    bool has(const std::string& name) const { return opts.count(name) > 0; }
    bool flag(const std::string& name) const { return std::find(flags.begin(), flags.end(), name) != flags.end(); }
};

struct ReportValue {
    std::string name;
    std::string kind;  ///< poly, rational, integer, text
    std::string text;
    std::optional<LaurentPoly> poly;
    std::optional<RationalFn> rational;

    friend bool operator==(const ReportValue&, const ReportValue&) = default;
};

struct Report {
    std::string command;
    std::string anchor;
    std::vector<ReportValue> values;
    std::vector<oracle::CheckRecord> checks;
    std::string lhs_label = "lhs";
    std::string rhs_label = "rhs";
    int exit_code = 0;

    bool operator==(const Report& o) const {
        if (command != o.command || anchor != o.anchor || values != o.values || checks.size() != o.checks.size())
            return false;
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const auto &a = checks[i], &b = o.checks[i];
            if (a.suite != b.suite || a.instance != b.instance || a.lhs != b.lhs || a.rhs != b.rhs ||
                a.verdict != b.verdict)
                return false;
        }
        return true;
    }
};

struct CommandInfo {
    std::string_view name;
    std::string_view anchor;
};

inline constexpr std::array<CommandInfo, 13> commands{{
    {"f", "f_n: alternating polynomial with the three-term recurrence"},
    {"s", "s_n^(k): sum of automorphism counts over torsion of class n delta + sigma"},
    {"lgroup normal-form", "normal form sum l_i x_i + l c with 0 <= l_i < p_i"},
    {"euler", "Euler form <a, b> on the Grothendieck group"},
    {"hall line-torsion", "line bundle by torsion: F^{O(y)}_{S,O(x)} in {0, 1}"},
    {"hall split-middle", "line bundle by torsion with split middle term L' + S'"},
    {"hall split-both", "split middle term and split subobject L + S"},
    {"hall ext-lines", "extension bundle from two line bundles: f_{<L1,L2>}"},
    {"hall ext-homog", "extension bundle by homogeneous torsion: bracket in f"},
    {"hall ext-exceptional", "extension bundle by exceptional torsion: f_{N+1} - f_N + (-1)^N"},
    {"quiver weight", "tame quiver type to weight type"},
    {"quiver hall", "tame quiver Hall polynomials through sheaf-side data"},
    {"verify", "oracle sweeps: green, rp, assoc, s-enum, dims, auts, sweep-ext"},
}};

inline std::string anchor_of(std::string_view command) {
    for (const auto& c : commands)
        if (c.name == command) return std::string(c.anchor);
    return {};
}

struct SuiteInfo {
    std::string_view name;
    std::string_view anchor;
    std::string_view lhs;
    std::string_view rhs;
};

inline constexpr std::array<SuiteInfo, 7> suites{{
    {"green", "Green's formula on tube representations", "lhs", "rhs"},
    {"rp", "Riedtmann-Peng identity and derived-Hall rotation on heart objects", "lhs", "rhs"},
    {"assoc", "associativity of Hall numbers", "lhs", "rhs"},
    {"s-enum", "s_n^(k) by enumerating torsion sheaves over F_q", "enumerated", "closed-form"},
    {"dims", "tube Hom/Ext dimensions against intertwiner ranks", "formula", "brute"},
    {"auts", "tube automorphism counts against enumeration", "formula", "brute"},
    {"sweep-ext", "orthogonal pair (L(x), L(omega)) for every admissible offset", "computed", "expected"},
}};

inline const SuiteInfo& suite_info(std::string_view name) {
    for (const auto& s : suites)
        if (s.name == name) return s;
    throw UsageError("unknown suite '" + std::string(name) + "'");
}

inline std::string help_footer() {
    std::string s = "Commands:\n";
    for (const auto& c : commands) s += "  " + std::string(c.name) + " -- " + std::string(c.anchor) + "\n";
    s += "Quiver cases (--case):\n";
    for (const auto& c : quiver_cases) s += "  " + std::string(c.name) + " -- " + std::string(c.formula) + "\n";
    s += "Suites (--suite):\n";
    for (const auto& c : suites) s += "  " + std::string(c.name) + " -- " + std::string(c.anchor) + "\n";
    s += "Exit codes: 0 ok, 1 usage error, 2 precondition refused, 3 failed verdict or inconsistency.";
    return s;
}

namespace detail {

inline void add_opt(CLI::App* app, Job& job, const std::string& name, const std::string& desc) {
    app->add_option_function<std::vector<std::string>>(
           "--" + name, [&job, name](const std::vector<std::string>& v) { job.opts[name] = v; }, desc)
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->allow_extra_args(false);
}

inline void add_flag(CLI::App* app, Job& job, const std::string& name, const std::string& desc) {
    app->add_flag_callback("--" + name, [&job, name] { job.flags.push_back(name); }, desc);
}

inline void add_common(CLI::App* app, Job& job) {
    app->add_option("--format", job.format, "text, csv or records")->check(CLI::IsMember({"text", "csv", "records"}));
    app->add_option("--out", job.out, "write the report to PATH instead of stdout");
}

} // namespace detail

/// Parses argv (without the program name) into a Job; throws UsageError.
inline Job parse_args(const std::vector<std::string>& args) {
    Job job;
    CLI::App app{"hwpl: Hall polynomials on weighted projective lines", "hwpl"};
    app.require_subcommand(1);
    app.footer(help_footer());
    using detail::add_common;
    using detail::add_flag;
    using detail::add_opt;

    auto* f = app.add_subcommand("f", "f_n polynomial");
    add_opt(f, job, "n", "index n");
    auto* s = app.add_subcommand("s", "s_n^(k) rational function");
    add_opt(s, job, "n", "index n >= -1");
    add_opt(s, job, "k", "number of exceptional tubes, 0..3");

    auto* lg = app.add_subcommand("lgroup", "rank-one group L(p)");
    lg->require_subcommand(1);
    auto* nf = lg->add_subcommand("normal-form", "normal form of an element");
    add_opt(nf, job, "weights", "weight type p1,...,pt");
    add_opt(nf, job, "element", "element l1,...,lt;lc");

    auto* eu = app.add_subcommand("euler", "Euler form of two objects");
    add_opt(eu, job, "weights", "weight type");
    add_opt(eu, job, "a", "object: L:<element>, EB:<base>;<offset>, E:i,j,n or H:d,n joined by +");
    add_opt(eu, job, "b", "object, same grammar as --a");

    auto* hall = app.add_subcommand("hall", "closed-form Hall polynomials");
    hall->require_subcommand(1);
    auto* lt = hall->add_subcommand("line-torsion", "F^{O(y)}_{S,O(x)}");
    auto* sm = hall->add_subcommand("split-middle", "F^{L'+S'}_{S,L}");
    auto* sb = hall->add_subcommand("split-both", "F^{L'+S'}_{S'',L+S}");
    auto* el = hall->add_subcommand("ext-lines", "F^E_{L2,L1}");
    auto* eh = hall->add_subcommand("ext-homog", "F^E_{S,E'} for homogeneous S");
    auto* ee = hall->add_subcommand("ext-exceptional", "F^E_{S,E'} for exceptional S");
    for (auto* c : {lt, sm, sb, el, eh, ee}) add_opt(c, job, "weights", "weight type");
    for (auto* c : {lt, sm, sb, el}) {
        add_opt(c, job, "l1", "first line bundle twist");
        add_opt(c, job, "l2", "second line bundle twist");
    }
    add_opt(lt, job, "s", "torsion sheaf");
    add_opt(sm, job, "s", "indecomposable torsion sheaf S");
    add_opt(sm, job, "s-sub", "subobject S' of S (omit for zero)");
    add_opt(sb, job, "s", "torsion summand S of the subobject (omit for zero)");
    add_opt(sb, job, "s1", "torsion summand S' of the middle term (omit for zero)");
    add_opt(sb, job, "s2", "quotient S'' (omit for zero)");
    for (auto* c : {el, eh, ee}) {
        add_opt(c, job, "base", "base twist of E");
        add_opt(c, job, "offset", "offset x of E");
        add_opt(c, job, "e", "E as EB:<base>;<offset>");
    }
    for (auto* c : {eh, ee}) add_opt(c, job, "e2", "E' as EB:<base>;<offset> (omit for the bare formula)");
    add_opt(eh, job, "d", "point degree");
    add_opt(eh, job, "n", "torsion length");
    add_opt(ee, job, "s", "exceptional indecomposable S");
    add_opt(ee, job, "N", "N directly, instead of E and E'");

    auto* qv = app.add_subcommand("quiver", "tame quiver side");
    qv->require_subcommand(1);
    auto* qw = qv->add_subcommand("weight", "weight type of a quiver family");
    add_opt(qw, job, "type", "A~(p,q), D~(n), E~6, E~7 or E~8");
    auto* qh = qv->add_subcommand("hall", "Hall polynomial of one case");
    add_opt(qh, job, "case", "case name, see the list below");
    add_opt(qh, job, "type", "quiver family");
    add_opt(qh, job, "weights", "weight type, instead of --type");
    for (const char* name : {"l1", "l2", "s", "s-sub", "s1", "s2", "r", "r1", "e", "e2", "base", "offset", "n", "d",
                             "euler", "hom"})
        add_opt(qh, job, name, "case data");
    add_flag(qh, job, "assume-exists", "presume the exact sequence of a preinjective case exists");

    auto* vf = app.add_subcommand("verify", "oracle sweeps");
    add_opt(vf, job, "suite", "green, rp, assoc, s-enum, dims, auts or sweep-ext");
    for (const char* name : {"p", "q", "max-dim", "n", "k", "weights"}) add_opt(vf, job, name, "comma list");

    for (auto* c : {f, s, nf, eu, lt, sm, sb, el, eh, ee, qw, qh, vf}) add_common(c, job);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os, err;
        app.exit(e, os, err);
        job.help = os.str();
        return job;
    } catch (const CLI::CallForAllHelp& e) {
        std::ostringstream os, err;
        app.exit(e, os, err);
        job.help = os.str();
        return job;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    for (auto* c : {f, s, eu, vf}) {
        if (c->parsed()) job.command = c->get_name();
    }
    for (auto* c : {nf}) {
        if (c->parsed()) job.command = "lgroup " + c->get_name();
    }
    for (auto* c : {lt, sm, sb, el, eh, ee}) {
        if (c->parsed()) job.command = "hall " + c->get_name();
    }
    for (auto* c : {qw, qh}) {
        if (c->parsed()) job.command = "quiver " + c->get_name();
    }
    if (job.command.empty()) throw UsageError("missing subcommand");
    return job;
}

namespace detail {

inline const std::string& single(const Job& job, const std::string& name) {
    auto it = job.opts.find(name);
    if (it == job.opts.end()) throw UsageError(job.command + ": missing required --" + name);
    if (it->second.size() != 1) throw UsageError(job.command + ": --" + name + " given more than once");
    return it->second.front();
}

inline std::optional<std::string> maybe(const Job& job, const std::string& name) {
    if (!job.has(name)) return std::nullopt;
    return single(job, name);
}

inline std::int64_t integer(const Job& job, const std::string& name) {
    return hwpl::detail::parse_int(single(job, name), 0, "--" + name);
}

inline std::optional<std::int64_t> maybe_integer(const Job& job, const std::string& name) {
    if (!job.has(name)) return std::nullopt;
    return integer(job, name);
}

inline std::vector<int> int_list(const Job& job, const std::string& name, std::vector<int> fallback) {
    if (!job.has(name)) return fallback;
    std::vector<int> out;
    for (const auto& v : job.opts.at(name))
        for (auto [tok, off] : hwpl::detail::split(v, ','))
            out.push_back(static_cast<int>(hwpl::detail::parse_int(tok, off, "--" + name)));
    return out;
}

inline WeightType weights(const Job& job) { return WeightType::parse(single(job, "weights")); }

inline LElement element(const Job& job, const WeightType& w, const std::string& name) {
    return LElement::parse(w, single(job, name));
}

inline std::optional<TubeIndec> maybe_indec(const Job& job, const WeightType& w, const std::string& name) {
    if (!job.has(name)) return std::nullopt;
    const auto& text = single(job, name);
    if (text == "0") return std::nullopt;
    return TubeIndec::parse(w, text);
}

inline ExtensionBundle bundle(const Job& job, const WeightType& w, const std::string& whole) {
    if (job.has(whole)) return ExtensionBundle::parse(w, single(job, whole));
    return {element(job, w, "base"), element(job, w, "offset")};
}

inline K0Class object_class(const WeightType& w, const std::string& text) {
    if (text.rfind("L:", 0) == 0) return k0_class_line(LElement::parse(w, std::string_view(text).substr(2)));
    if (text.rfind("EB:", 0) == 0) return k0_class_ext(ExtensionBundle::parse(w, text));
    return k0_class_torsion(w, TorsionSheaf::parse(w, text));
}

inline ReportValue poly_value(std::string name, const LaurentPoly& p) {
    return {std::move(name), "poly", p.to_string(), p, std::nullopt};
}
inline ReportValue rational_value(std::string name, const RationalFn& r) {
    return {std::move(name), "rational", r.to_string(), std::nullopt, r};
}
inline ReportValue integer_value(std::string name, std::int64_t v) {
    return {std::move(name), "integer", std::to_string(v), std::nullopt, std::nullopt};
}
inline ReportValue text_value(std::string name, std::string v) {
    return {std::move(name), "text", std::move(v), std::nullopt, std::nullopt};
}

inline void add_hall(Report& r, const HallResult& h) {
    r.values.push_back(poly_value("F", h.value));
    if (!h.diagnostic.empty()) r.values.push_back(text_value("note", h.diagnostic));
}

inline oracle::SuiteReport run_suite(const Job& job, const std::string& suite) {
    using namespace oracle;
    const auto ps = int_list(job, "p", suite == "dims" || suite == "auts" ? std::vector<int>{2, 3} : std::vector<int>{1, 2});
    const auto qs_default = suite == "s-enum" ? std::vector<int>{5, 7, 11, 13} : std::vector<int>{2, 3};
    const auto qs = int_list(job, "q", qs_default);
    const int max_dim = static_cast<int>(maybe_integer(job, "max-dim").value_or(suite == "assoc" ? 3 : 4));
    if (max_dim < 0 || max_dim > 5) throw PreconditionError("--max-dim must lie in 0..5");
    std::vector<WeightType> ws;
    if (job.has("weights"))
        for (const auto& v : job.opts.at("weights")) ws.push_back(WeightType::parse(v));

    SuiteReport out{suite, {}};
    if (suite == "green" || suite == "assoc" || suite == "rp") {
        for (int p : ps)
            for (int q : qs) {
                const Catalog cat(p, q, max_dim);
                if (suite == "green") out.append(green_suite(cat));
                if (suite == "assoc") out.append(assoc_suite(cat));
                if (suite == "rp") {
                    out.append(rp_suite(cat));
                    out.append(rotation_suite(cat));
                }
            }
    } else if (suite == "dims") {
        out.append(dims_suite(ps, max_dim, qs));
    } else if (suite == "auts") {
        out.append(auts_suite(ps, max_dim, qs));
    } else if (suite == "s-enum") {
        if (ws.empty()) ws = {WeightType({2, 2, 2}), WeightType({2, 3, 5})};
        const auto ns = int_list(job, "n", {0, 1, 2});
        const auto ks = int_list(job, "k", {0, 1, 2, 3});
        for (const auto& w : ws) out.append(s_enum_suite(w, ns, ks, qs));
    } else if (suite == "sweep-ext") {
        if (ws.empty()) ws = {WeightType({2, 2, 2}), WeightType({2, 3, 5}), WeightType({2, 3, 7}), WeightType({3, 3, 4})};
        out.append(sweep_ext_suite(ws));
    }
    return out;
}

inline QuiverHallCase quiver_case(const Job& job) {
    QuiverHallCase c;
    c.tag = parse_quiver_case(single(job, "case"));
    if (job.has("type") && job.has("weights")) throw UsageError("quiver hall: give --type or --weights, not both");
    if (job.has("type")) c.weights = weight_of_type(QuiverFamily::parse(single(job, "type")));
    if (job.has("weights")) c.weights = weights(job);
    auto need_w = [&]() -> const WeightType& {
        if (!c.weights) throw UsageError("quiver hall: sheaf data needs --type or --weights");
        return *c.weights;
    };
    if (job.has("l1")) c.l1 = element(job, need_w(), "l1");
    if (job.has("l2")) c.l2 = element(job, need_w(), "l2");
    if (job.has("s")) c.s = TorsionSheaf::parse(need_w(), single(job, "s"));
    c.s_sub = job.has("s-sub") ? maybe_indec(job, need_w(), "s-sub") : std::nullopt;
    c.s1 = job.has("s1") ? maybe_indec(job, need_w(), "s1") : std::nullopt;
    c.s2 = job.has("s2") ? maybe_indec(job, need_w(), "s2") : std::nullopt;
    if (job.has("r")) {
        // R needs no weights when it is homogeneous
        const auto& text = single(job, "r");
        const WeightType fallback({2, 2});
        const auto sheaf = TorsionSheaf::parse(c.weights ? *c.weights : fallback, text);
        if (!c.weights)
            for (const auto& x : sheaf.summands())
                if (x.is_exceptional()) need_w();
        if (sheaf.summands().size() == 1) c.r = sheaf.summands().front();
        else c.s = sheaf;
    }
    if (job.has("r1")) c.r1 = TorsionSheaf::parse(need_w(), single(job, "r1"));
    if (job.has("e") || job.has("base")) c.e = bundle(job, need_w(), "e");
    if (job.has("e2")) c.e2 = ExtensionBundle::parse(need_w(), single(job, "e2"));
    c.n = maybe_integer(job, "n");
    c.d = maybe_integer(job, "d");
    c.euler = maybe_integer(job, "euler");
    c.hom = maybe_integer(job, "hom");
    c.assume_exists = job.flag("assume-exists");
    return c;
}

} // namespace detail

/// Runs a parsed job. Library errors propagate.
inline Report execute(const Job& job) {
    using namespace detail;
    Report r;
    r.command = job.command;
    r.anchor = anchor_of(job.command);
    const auto& cmd = job.command;
    if (cmd == "f") {
        const auto n = integer(job, "n");
        r.values.push_back(poly_value("f", f_poly(n)));
    } else if (cmd == "s") {
        const auto n = integer(job, "n");
        const auto k = integer(job, "k");
        r.values.push_back(rational_value("s", s_poly(n, static_cast<int>(k))));
    } else if (cmd == "lgroup normal-form") {
        const auto w = weights(job);
        r.values.push_back(text_value("normal-form", element(job, w, "element").to_string()));
    } else if (cmd == "euler") {
        const auto w = weights(job);
        const auto a = object_class(w, single(job, "a"));
        const auto b = object_class(w, single(job, "b"));
        r.values.push_back(integer_value("euler", euler_form(a, b)));
    } else if (cmd == "hall line-torsion") {
        const auto w = weights(job);
        add_hall(r, hall_line_quotient_torsion(element(job, w, "l1"), element(job, w, "l2"),
                                               TorsionSheaf::parse(w, single(job, "s"))));
    } else if (cmd == "hall split-middle") {
        const auto w = weights(job);
        const auto s = TubeIndec::parse(w, single(job, "s"));
        add_hall(r, hall_split_middle(element(job, w, "l1"), element(job, w, "l2"), s, maybe_indec(job, w, "s-sub")));
    } else if (cmd == "hall split-both") {
        const auto w = weights(job);
        add_hall(r, hall_split_both(element(job, w, "l1"), element(job, w, "l2"), maybe_indec(job, w, "s"),
                                    maybe_indec(job, w, "s1"), maybe_indec(job, w, "s2")));
    } else if (cmd == "hall ext-lines") {
        const auto w = weights(job);
        add_hall(r, hall_ext_from_lines(bundle(job, w, "e"), element(job, w, "l1"), element(job, w, "l2")));
    } else if (cmd == "hall ext-homog") {
        const auto d = integer(job, "d");
        const auto n = integer(job, "n");
        if (job.has("e2")) {
            const auto w = weights(job);
            add_hall(r, hall_ext_homog_torsion(bundle(job, w, "e"), ExtensionBundle::parse(w, single(job, "e2")), d, n));
        } else {
            add_hall(r, {homog_torsion_formula(d, n), {}});
        }
    } else if (cmd == "hall ext-exceptional") {
        if (job.has("N")) {
            add_hall(r, {except_torsion_formula(integer(job, "N")), {}});
        } else {
            const auto w = weights(job);
            const auto e = bundle(job, w, "e");
            const auto e2 = ExtensionBundle::parse(w, single(job, "e2"));
            const auto s = TubeIndec::parse(w, single(job, "s"));
            add_hall(r, hall_ext_except_torsion(e, e2, s));
            r.values.push_back(integer_value("N", n_invariant(e, e2)));
        }
    } else if (cmd == "quiver weight") {
        r.values.push_back(text_value("weights", weight_of_type(QuiverFamily::parse(single(job, "type"))).to_string()));
    } else if (cmd == "quiver hall") {
        const auto c = quiver_case(job);
        r.anchor += ": " + std::string(quiver_case_info(c.tag).formula);
        if (is_preinjective(c.tag)) add_hall(r, {quiver_hall_preinjective(c), {}});
        else add_hall(r, quiver_hall_preprojective(c));
    } else if (cmd == "verify") {
        const auto& suite = single(job, "suite");
        const auto& info = suite_info(suite);
        r.anchor = std::string(info.anchor);
        r.lhs_label = std::string(info.lhs);
        r.rhs_label = std::string(info.rhs);
        r.checks = run_suite(job, suite).records;
        for (const auto& c : r.checks)
            if (!c.verdict) r.exit_code = 3;
    } else {
        throw UsageError("unknown command '" + cmd + "'");
    }
    return r;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline nlohmann::json poly_json(const LaurentPoly& p) {
    auto arr = nlohmann::json::array();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        const auto& c = it->second;
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            arr.push_back({it->first, static_cast<std::int64_t>(c)});
        else
            arr.push_back({it->first, c.str()});
    }
    return arr;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, Integer>> terms;
    for (const auto& t : j) {
        const auto& c = t.at(1);
        terms.emplace_back(t.at(0).get<int>(), c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::int64_t>()));
    }
    return LaurentPoly::from_terms(terms);
}

} // namespace detail

inline std::string render_text(const Report& r) {
    std::string out;
    if (!r.checks.empty() || r.command == "verify") {
        std::size_t failures = 0;
        for (const auto& c : r.checks) {
            out += c.suite + " " + c.instance + ": " + r.lhs_label + " " + c.lhs + " vs " + r.rhs_label + " " + c.rhs +
                   ", verdict " + (c.verdict ? "true" : "false") + "\n";
            failures += c.verdict ? 0 : 1;
        }
        out += std::to_string(r.checks.size()) + " checks, " + std::to_string(failures) + " failed\n";
        return out;
    }
    for (std::size_t i = 0; i < r.values.size(); ++i)
        out += (i ? r.values[i].name + ": " : std::string()) + r.values[i].text + "\n";
    return out;
}

inline std::string render_csv(const Report& r) {
    using detail::csv_field;
    std::string out;
    if (!r.checks.empty() || r.command == "verify") {
        out += "suite,instance," + r.lhs_label + "," + r.rhs_label + ",verdict\n";
        for (const auto& c : r.checks)
            out += csv_field(c.suite) + "," + csv_field(c.instance) + "," + csv_field(c.lhs) + "," + csv_field(c.rhs) +
                   "," + (c.verdict ? "true" : "false") + "\n";
        return out;
    }
    out += "command,anchor,name,value\n";
    for (const auto& v : r.values)
        out += csv_field(r.command) + "," + csv_field(r.anchor) + "," + csv_field(v.name) + "," + csv_field(v.text) + "\n";
    return out;
}

inline std::string render_records(const Report& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["anchor"] = r.anchor;
    auto values = nlohmann::json::array();
    for (const auto& v : r.values) {
        nlohmann::json e{{"name", v.name}, {"kind", v.kind}};
        if (v.kind == "poly") e["terms"] = detail::poly_json(*v.poly);
        else if (v.kind == "rational") {
            e["num"] = detail::poly_json(v.rational->numerator());
            e["den"] = detail::poly_json(v.rational->denominator());
        } else
            e["value"] = v.text;
        values.push_back(e);
    }
    j["values"] = values;
    auto checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"suite", c.suite}, {"instance", c.instance}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"verdict", c.verdict}});
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

/// Inverse of render_records.
inline Report parse_records(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    r.anchor = j.at("anchor").get<std::string>();
    for (const auto& e : j.at("values")) {
        ReportValue v;
        v.name = e.at("name").get<std::string>();
        v.kind = e.at("kind").get<std::string>();
        if (v.kind == "poly") {
            v.poly = detail::poly_from_json(e.at("terms"));
            v.text = v.poly->to_string();
        } else if (v.kind == "rational") {
            v.rational = RationalFn(detail::poly_from_json(e.at("num")), detail::poly_from_json(e.at("den")));
            v.text = v.rational->to_string();
        } else {
            v.text = e.at("value").get<std::string>();
        }
        r.values.push_back(std::move(v));
    }
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("suite").get<std::string>(), c.at("instance").get<std::string>(),
                            c.at("lhs").get<std::string>(), c.at("rhs").get<std::string>(), c.at("verdict").get<bool>()});
    return r;
}

inline std::string render(const Report& r, const std::string& format) {
    if (format == "csv") return render_csv(r);
    if (format == "records") return render_records(r);
    return render_text(r);
}

/// Full command-line run: primary output to `out`, messages and timing to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto job = parse_args(args);
        if (!job.help.empty()) {
            out << job.help;
            return 0;
        }
        const auto report = execute(job);
        const auto text = render(report, job.format);
        if (job.out.empty()) {
            out << text;
        } else {
            std::ofstream f(job.out, std::ios::binary);
            if (!f) throw UsageError("cannot write " + job.out);
            f << text;
        }
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        err << "elapsed " << dt.count() << " s\n";
        return report.exit_code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "refused: " << e.what() << "\n";
        return 2;
    } catch (const ScaleError& e) {
        err << "refused: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace hwpl::cli
