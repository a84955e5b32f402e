#include "arcmodel/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "arcmodel/hom_ext.hpp"
#include "arcmodel/io.hpp"
#include "arcmodel/mutation.hpp"

namespace arcmodel {

using nlohmann::json;

namespace {

struct Options {
    std::string input;
    std::optional<int> n;
    std::string window;
    std::string format = "text";
    std::string out;
    std::string arcs;
    std::optional<int> degree;
    std::string set;
    std::string x;
    std::string y;
    std::string d;
    std::string highlight;
    std::string style = "svg";
    bool force = false;
};

/// What a command produced: an exit code, a JSON report and its text form.
struct Outcome {
    int exit_code = 0;
    json report;
    std::string text;
};

class Painter {
public:
    explicit Painter(bool color) : color_(color) {}
    std::string status(bool ok) const
    {
        if (!color_)
            return ok ? "PASS" : "FAIL";
        return ok ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
    }

private:
    bool color_;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ArcError(ErrorKind::ValidationError, "cannot read input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Document load(const Options& o)
{
    if (o.input.empty())
        throw ArcError(ErrorKind::ValidationError, "--input FILE is required");
    return parse_document(read_file(o.input), o.n);
}

ModelParams params_from(const Options& o)
{
    if (o.n)
        return ModelParams(*o.n);
    if (!o.input.empty())
        return load(o).params;
    throw ArcError(ErrorKind::ValidationError, "--n INT (or --input FILE) is required");
}

Window window_from(const Options& o)
{
    if (o.window.empty())
        throw ArcError(ErrorKind::ValidationError, "--window LO..HI is required");
    return parse_window(o.window);
}

std::string require_name(const std::string& value, const char* flag)
{
    if (value.empty())
        throw ArcError(ErrorKind::ValidationError, std::string(flag) + " NAME is required");
    return value;
}

std::vector<Arc> arcs_from(const Options& o, std::size_t count, const ModelParams& p)
{
    std::vector<Arc> arcs = parse_arc_list(o.arcs);
    if (arcs.size() != count)
        throw ArcError(ErrorKind::ValidationError,
                       "--arcs expects " + std::to_string(count) + " arcs, got " + std::to_string(arcs.size()));
    for (const Arc& a : arcs)
        if (!is_admissible(a, p))
            throw ArcError(ErrorKind::ValidationError,
                           "arc " + to_string(a) + " is not " + std::to_string(p.n()) + "-admissible");
    return arcs;
}

json arcs_json(const std::vector<Arc>& arcs)
{
    json out = json::array();
    for (const Arc& a : arcs)
        out.push_back(to_json(a));
    return out;
}

std::string arcs_text(const std::vector<Arc>& arcs)
{
    if (arcs.empty())
        return "{}";
    std::string s;
    for (const Arc& a : arcs) {
        if (!s.empty())
            s += ' ';
        s += to_string(a);
    }
    return s;
}

std::string set_text(const ArcSet& s)
{
    std::string out = "explicit " + arcs_text({s.explicit_arcs().begin(), s.explicit_arcs().end()});
    for (const FountainFamily& f : s.families())
        out += " + " + to_string(f);
    return out;
}

json base_report(const std::string& command, json inputs)
{
    return {{"command", command}, {"inputs", std::move(inputs)}, {"verdict", true}, {"witnesses", json::array()}};
}

json file_inputs(const Options& o)
{
    json in = {{"input", o.input}};
    if (o.n)
        in["n"] = *o.n;
    if (!o.window.empty())
        in["window"] = o.window;
    return in;
}

std::string report_text(const PairReport& r, const Painter& paint)
{
    std::ostringstream os;
    auto windowed = [&](const char* name, const WindowedCondition& c) {
        os << paint.status(c.holds) << "  " << name << " (windowed on " << to_string(r.window) << ")";
        if (!c.holds)
            os << "  witnesses: " << arcs_text(c.witnesses);
        os << '\n';
    };
    auto exact = [&](const char* name, const ExactCondition& c) {
        os << paint.status(c.holds) << "  " << name << " (exact)";
        if (c.witness)
            os << "  witness: " << *c.witness;
        os << '\n';
    };
    windowed("X = nc Y", r.x_equals_ncY);
    windowed("Y = nc X", r.y_equals_ncX);
    exact("right-fountains of X are left-fountains", r.x_contravariant);
    exact("left-fountains of Y are right-fountains", r.y_covariant);
    os << "verdict: " << (r.verdict ? "window-certified n-cotorsion pair" : "not an n-cotorsion pair") << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_ext(const Options& o, const Painter&)
{
    const ModelParams p = params_from(o);
    const auto arcs = arcs_from(o, 2, p);
    const Arc &x = arcs[0], &y = arcs[1];
    Outcome out;
    out.report = base_report("ext", {{"n", p.n()}, {"x", to_json(x)}, {"y", to_json(y)}});
    if (o.degree) {
        const int dim = ext_dim(x, y, *o.degree, p);
        out.report["inputs"]["degree"] = *o.degree;
        out.report["result"] = dim;
        out.text = std::to_string(dim) + "\n";
    } else {
        const auto profile = ext_profile(x, y, p);
        out.report["result"] = profile;
        std::ostringstream os;
        for (std::size_t i = 0; i < profile.size(); ++i)
            os << (i ? " " : "") << profile[i];
        out.text = os.str() + "\n";
    }
    return out;
}

Outcome cmd_hom(const Options& o, const Painter&)
{
    const ModelParams p = params_from(o);
    const auto arcs = arcs_from(o, 2, p);
    const int dim = hom_dim(arcs[0], arcs[1], p);
    Outcome out;
    out.report = base_report("hom", {{"n", p.n()}, {"x", to_json(arcs[0])}, {"y", to_json(arcs[1])}});
    out.report["result"] = dim;
    out.text = std::to_string(dim) + "\n";
    return out;
}

Outcome cmd_cross(const Options& o, const Painter&)
{
    const ModelParams p = params_from(o);
    const auto arcs = arcs_from(o, 2, p);
    const bool c = cross(arcs[0], arcs[1]);
    Outcome out;
    out.report = base_report("cross", {{"n", p.n()}, {"a", to_json(arcs[0])}, {"b", to_json(arcs[1])}});
    out.report["result"] = c;
    out.text = std::string(c ? "true" : "false") + "\n";
    return out;
}

Outcome cmd_nc(const Options& o, const Painter&)
{
    const Document doc = load(o);
    const std::string name = require_name(o.set, "--set");
    const Window w = window_from(o);
    const auto arcs = nc_window(doc.set(name), w);
    Outcome out;
    json in = file_inputs(o);
    in["set"] = name;
    out.report = base_report("nc", in);
    out.report["result"] = arcs_json(arcs);
    out.text = "nc " + name + " on " + to_string(w) + ": " + arcs_text(arcs) + "\n";
    return out;
}

Outcome cmd_fountains(const Options& o, const Painter& paint)
{
    const Document doc = load(o);
    const std::string name = require_name(o.set, "--set");
    const ArcSet& s = doc.set(name);
    const FountainLoci loci = fountain_loci(s);
    const FinitenessReport fin = finiteness_check(s);

    Outcome out;
    json in = file_inputs(o);
    in["set"] = name;
    out.report = base_report("fountains", in);
    out.report["result"] = {
        {"left_fountains", to_json(loci.left)},
        {"right_fountains", to_json(loci.right)},
        {"contravariantly_finite", fin.contravariant_ok},
        {"covariantly_finite", fin.covariant_ok},
    };
    if (fin.contravariant_witness)
        out.report["witnesses"].push_back({{"condition", "contravariant"}, {"point", *fin.contravariant_witness}});
    if (fin.covariant_witness)
        out.report["witnesses"].push_back({{"condition", "covariant"}, {"point", *fin.covariant_witness}});

    std::ostringstream os;
    os << "left-fountains:  " << loci.left.to_string() << '\n';
    os << "right-fountains: " << loci.right.to_string() << '\n';
    os << paint.status(fin.contravariant_ok) << "  contravariantly finite";
    if (fin.contravariant_witness)
        os << "  witness: " << *fin.contravariant_witness;
    os << '\n' << paint.status(fin.covariant_ok) << "  covariantly finite";
    if (fin.covariant_witness)
        os << "  witness: " << *fin.covariant_witness;
    os << '\n';
    out.text = os.str();
    return out;
}

Outcome cmd_frame(const Options& o, const Painter&)
{
    const Document doc = load(o);
    const std::string name = require_name(o.set, "--set");
    const Window w = window_from(o);
    const auto arcs = frame(doc.set(name), w);
    Outcome out;
    json in = file_inputs(o);
    in["set"] = name;
    out.report = base_report("frame", in);
    out.report["result"] = arcs_json(arcs);
    out.text = "frame of " + name + " on " + to_string(w) + ": " + arcs_text(arcs) + "\n";
    return out;
}

Outcome cmd_ptolemy(const Options& o, const Painter& paint)
{
    const Document doc = load(o);
    const std::string name = require_name(o.set, "--set");
    const Window w = window_from(o);
    const PtolemyResult r = is_ptolemy_window(doc.set(name), w);
    Outcome out;
    json in = file_inputs(o);
    in["set"] = name;
    out.report = base_report("ptolemy", in);
    out.report["verdict"] = r.ok;
    out.exit_code = r.ok ? 0 : 1;
    std::ostringstream os;
    os << paint.status(r.ok) << "  " << name << " is a Ptolemy diagram on " << to_string(w) << '\n';
    if (r.violation) {
        const auto& v = *r.violation;
        out.report["witnesses"].push_back({{"condition", "ptolemy"},
                                           {"arc", to_json(v.missing)},
                                           {"crossing_pair", json::array({to_json(v.first), to_json(v.second)})}});
        os << "  crossing " << to_string(v.first) << " x " << to_string(v.second) << " misses "
           << to_string(v.missing) << '\n';
    }
    out.text = os.str();
    return out;
}

Outcome cmd_check_pair(const Options& o, const Painter& paint)
{
    const Document doc = load(o);
    const std::string xn = require_name(o.x, "--x"), yn = require_name(o.y, "--y");
    const Window w = window_from(o);
    const PairReport r = check_pair(doc.set(xn), doc.set(yn), w);
    Outcome out;
    json in = file_inputs(o);
    in["x"] = xn;
    in["y"] = yn;
    out.report = base_report("check-pair", in);
    out.report["verdict"] = r.verdict;
    out.report["witnesses"] = witnesses_json(r);
    out.report["conditions"] = to_json(r);
    out.exit_code = r.verdict ? 0 : 1;
    out.text = report_text(r, paint);
    return out;
}

Outcome cmd_core(const Options& o, const Painter& paint)
{
    const Document doc = load(o);
    const std::string xn = require_name(o.x, "--x"), yn = require_name(o.y, "--y");
    const Window w = window_from(o);
    const auto arcs = core(doc.set(xn), doc.set(yn), w);
    const RigidityResult rigid = rigidity_check(arcs, doc.params);
    Outcome out;
    json in = file_inputs(o);
    in["x"] = xn;
    in["y"] = yn;
    out.report = base_report("core", in);
    out.report["result"] = arcs_json(arcs);
    out.report["verdict"] = rigid.rigid;
    if (rigid.witness)
        out.report["witnesses"].push_back(
            {{"condition", "rigid"}, {"arcs", json::array({to_json(rigid.witness->first), to_json(rigid.witness->second)})}});
    out.exit_code = rigid.rigid ? 0 : 1;
    out.text = "core on " + to_string(w) + ": " + arcs_text(arcs) + "\n" + paint.status(rigid.rigid) + "  rigid\n";
    return out;
}

Outcome cmd_mutate(const Options& o, const Painter& paint)
{
    const Document doc = load(o);
    const std::string xn = require_name(o.x, "--x"), yn = require_name(o.y, "--y"), dn = require_name(o.d, "--d");
    const Window w = window_from(o);
    const ArcSet& dset = doc.set(dn);
    if (!dset.is_finite())
        throw ArcError(ErrorKind::ValidationError, "divider set \"" + dn + "\" must be finite");
    const DividerSet d(doc.params, {dset.explicit_arcs().begin(), dset.explicit_arcs().end()});

    Outcome out;
    json in = file_inputs(o);
    in["x"] = xn;
    in["y"] = yn;
    in["d"] = dn;
    in["force"] = o.force;
    out.report = base_report("mutate", in);

    const ArcSet& x = doc.set(xn);
    const ArcSet& y = doc.set(yn);
    const PairReport before = check_pair(x, y, w);
    if (!before.verdict && !o.force) {
        out.exit_code = 1;
        out.report["verdict"] = false;
        out.report["witnesses"] = witnesses_json(before);
        out.report["input_pair"] = to_json(before);
        out.text = "input pair is not certified; pass --force to mutate anyway\n" + report_text(before, paint);
        return out;
    }

    const MutationResult m = mutate_pair(x, y, d, w, o.force);
    out.exit_code = m.report.verdict ? 0 : 1;
    out.report["verdict"] = m.report.verdict;
    out.report["witnesses"] = witnesses_json(m.report);
    out.report["result"] = {
        {"x", to_json(m.x)},
        {"y", to_json(m.y)},
        {"x_arcs", arcs_json(m.x.members_in(m.window))},
        {"y_arcs", arcs_json(m.y.members_in(m.window))},
        {"window", to_json(m.window)},
    };
    out.report["conditions"] = to_json(m.report);

    std::ostringstream os;
    os << "rotated X: " << set_text(m.x) << '\n';
    os << "rotated Y: " << set_text(m.y) << '\n';
    os << "rotated X on " << to_string(m.window) << ": " << arcs_text(m.x.members_in(m.window)) << '\n';
    os << "rotated Y on " << to_string(m.window) << ": " << arcs_text(m.y.members_in(m.window)) << '\n';
    os << report_text(m.report, paint);
    out.text = os.str();
    return out;
}

Outcome cmd_oracle(const Options& o, const Painter& paint)
{
    const ModelParams p = params_from(o);
    const Window w = o.window.empty() ? Window(-24, 24) : window_from(o);
    const auto arcs = admissible_arcs(w, p);
    const int n = p.n();

    long pairs = 0, crossing_mismatch = 0, serre_mismatch = 0, hom_mismatch = 0;
    json witnesses = json::array();
    auto note = [&](const char* condition, const Arc& a, const Arc& b) {
        if (witnesses.size() < 10)
            witnesses.push_back({{"condition", condition}, {"arcs", json::array({to_json(a), to_json(b)})}});
    };
    for (const Arc& a : arcs) {
        for (const Arc& b : arcs) {
            ++pairs;
            const auto ab = ext_profile(a, b, p);
            const bool ext_nonzero = std::find(ab.begin(), ab.end(), 1) != ab.end();
            if (cross(a, b) != ext_nonzero) {
                ++crossing_mismatch;
                note("crossing_vs_ext", a, b);
            }
            const auto ba = ext_profile(b, a, p);
            for (int i = 1; i <= n; ++i) {
                if (ab[i - 1] != ba[n - i]) {
                    ++serre_mismatch;
                    note("ext_serre_duality", a, b);
                }
            }
            if (hom_dim(a, b, p) != hom_dim(b, serre(a, p), p)) {
                ++hom_mismatch;
                note("hom_serre_duality", a, b);
            }
        }
    }
    const bool ok = crossing_mismatch == 0 && serre_mismatch == 0 && hom_mismatch == 0;
    Outcome out;
    out.exit_code = ok ? 0 : 1;
    out.report = base_report("oracle", {{"n", n}, {"window", to_json(w)}});
    out.report["verdict"] = ok;
    out.report["witnesses"] = witnesses;
    out.report["result"] = {{"arcs", arcs.size()},
                            {"pairs", pairs},
                            {"crossing_vs_ext_mismatches", crossing_mismatch},
                            {"ext_serre_mismatches", serre_mismatch},
                            {"hom_serre_mismatches", hom_mismatch}};
    std::ostringstream os;
    os << arcs.size() << " admissible arcs, " << pairs << " ordered pairs on " << to_string(w) << ", n = " << n << '\n';
    os << paint.status(crossing_mismatch == 0) << "  crossing <=> some Ext^i nonzero (" << crossing_mismatch
       << " mismatches)\n";
    os << paint.status(serre_mismatch == 0) << "  Ext^i(x,y) = Ext^(n+1-i)(y,x) (" << serre_mismatch << " mismatches)\n";
    os << paint.status(hom_mismatch == 0) << "  Hom(x,y) = Hom(y,Sx) (" << hom_mismatch << " mismatches)\n";
    out.text = os.str();
    return out;
}

void add_shared(CLI::App* sub, Options& o)
{
    sub->add_option("--input", o.input, "JSON document with named arc sets");
    sub->add_option("--n", o.n, "override n")->check(CLI::PositiveNumber);
    sub->add_option("--window", o.window, "inclusive window LO..HI");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "write output to FILE instead of stdout");
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args, bool color)
{
    Options o;
    CLI::App app{"Arc-model computations for n-cluster categories of type A-infinity", "arcmodel"};
    app.require_subcommand(1);

    using Handler = std::function<Outcome(const Options&, const Painter&)>;
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_shared(sub, o);
        commands.emplace_back(sub, std::move(h));
        return sub;
    };

    auto* ext = add("ext", "dimension of Ext^i between two arcs", cmd_ext);
    ext->add_option("--arcs", o.arcs, "\"(t,u) (t,u)\"")->required();
    ext->add_option("--degree", o.degree, "degree i >= 1 (all degrees when omitted)");
    add("hom", "dimension of Hom between two arcs", cmd_hom)->add_option("--arcs", o.arcs)->required();
    add("cross", "whether two arcs cross", cmd_cross)->add_option("--arcs", o.arcs)->required();
    add("nc", "arcs in the window crossing no member of a set", cmd_nc)->add_option("--set", o.set);
    add("fountains", "fountain loci and finiteness of a set", cmd_fountains)->add_option("--set", o.set);
    add("frame", "members of a set crossing no member", cmd_frame)->add_option("--set", o.set);
    add("ptolemy", "Ptolemy condition on the window", cmd_ptolemy)->add_option("--set", o.set);
    for (auto [name, help, handler] : {std::tuple{"check-pair", "verify an n-cotorsion pair", Handler(cmd_check_pair)},
                                       std::tuple{"core", "core of a pair and its rigidity", Handler(cmd_core)}}) {
        auto* sub = add(name, help, handler);
        sub->add_option("--x", o.x);
        sub->add_option("--y", o.y);
    }
    auto* mutate = add("mutate", "rotate a pair through a divider set", cmd_mutate);
    mutate->add_option("--x", o.x);
    mutate->add_option("--y", o.y);
    mutate->add_option("--d", o.d);
    mutate->add_flag("--force", o.force, "mutate even if the input pair is not certified");
    add("oracle", "brute-force crossing/Ext and Serre duality sweep", cmd_oracle);
    auto* render_cmd = add("render", "draw a set as SVG or text", nullptr);
    render_cmd->add_option("--set", o.set);
    render_cmd->add_option("--highlight", o.highlight);
    render_cmd->add_option("--style", o.style)->check(CLI::IsMember({"svg", "text"}));

    // Values such as "-20..20" would otherwise be read as flags.
    std::vector<std::string> argv;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if ((args[i] == "--window" || args[i] == "--arcs") && i + 1 < args.size()) {
            argv.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else {
            argv.push_back(args[i]);
        }
    }
    std::reverse(argv.begin(), argv.end());

    CommandResult result;
    std::ostringstream out, err;
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? 0 : 2;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    const Painter paint(color);
    const auto started = std::chrono::steady_clock::now();
    try {
        if (render_cmd->parsed()) {
            const Document doc = load(o);
            RenderSpec spec{require_name(o.set, "--set"), window_from(o),
                            o.style == "text" ? RenderStyle::Text : RenderStyle::Svg, std::nullopt};
            if (!o.highlight.empty())
                spec.highlight = o.highlight;
            const RenderOutput r = render(doc, spec);
            for (const auto& w : r.warnings)
                err << "warning: " << w << '\n';
            if (o.out.empty()) {
                out << r.bytes;
            } else {
                std::ofstream f(o.out, std::ios::binary);
                if (!f)
                    throw ArcError(ErrorKind::ValidationError, "cannot write " + o.out);
                f << r.bytes;
            }
        } else {
            for (const auto& [sub, handler] : commands) {
                if (!sub->parsed())
                    continue;
                Outcome outcome = handler(o, paint);
                const double elapsed =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
                outcome.report["timing_ms"] = elapsed;
                const std::string body = o.format == "json" ? outcome.report.dump(2) + "\n" : outcome.text;
                if (o.out.empty()) {
                    out << body;
                } else {
                    std::ofstream f(o.out, std::ios::binary);
                    if (!f)
                        throw ArcError(ErrorKind::ValidationError, "cannot write " + o.out);
                    f << body;
                }
                result.exit_code = outcome.exit_code;
            }
        }
    } catch (const ArcError& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        result.exit_code = 2;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace arcmodel
