// Acceptance suite: one PASS/FAIL line per criterion, exit code 1 if any fail.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arcmodel/cli.hpp"
#include "arcmodel/cotorsion.hpp"
#include "arcmodel/hom_ext.hpp"
#include "arcmodel/io.hpp"
#include "arcmodel/mutation.hpp"
#include "support.hpp"

using namespace arcmodel;
using nlohmann::json;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Detail {
public:
    template <class T>
    Detail& operator<<(const T& v)
    {
        os_ << v;
        return *this;
    }
    std::string str() const { return os_.str(); }

private:
    std::ostringstream os_;
};

const ModelParams n3(3);

std::vector<testsupport::FuzzCase> fuzz_corpus()
{
    std::mt19937 rng(20240917);
    std::vector<testsupport::FuzzCase> out;
    const int ns[] = {1, 2, 3, 4, 5};
    while (out.size() < 1000) {
        const int n = ns[out.size() % 5];
        if (auto c = testsupport::random_case(rng, n))
            out.push_back(*c);
    }
    return out;
}

const std::vector<testsupport::FuzzCase>& corpus()
{
    static const auto c = fuzz_corpus();
    return c;
}

std::size_t nested_cases()
{
    std::size_t count = 0;
    for (const auto& c : corpus()) {
        const auto& arcs = c.d.arcs();
        const bool nested = std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) {
            return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& b) { return a != b && a.nested_in(b); });
        });
        count += nested;
    }
    return count;
}

Outcome criterion_rotation()
{
    const auto started = std::chrono::steady_clock::now();
    const DividerSet d(n3, {Arc(-4, 6)});
    Outcome r;
    Detail det;
    auto expect = [&](const Arc& got, const Arc& want) {
        if (got != want) {
            r.ok = false;
            det << to_string(got) << " != " << to_string(want) << "; ";
        }
    };
    expect(rotate_arc(Arc(-4, 3), d), Arc(2, 6));
    expect(rotate_arc(Arc(-4, 9), d), Arc(-5, 8));
    expect(rotate_arc(Arc(-7, 6), d), Arc(-8, -4));
    const ArcSet rx = rotate_set(ArcSet(n3, {Arc(-4, 3), Arc(-4, 6)}), d);
    if (rx.explicit_arcs() != std::set<Arc>{Arc(2, 6), Arc(-4, 6)} || !rx.is_finite()) {
        r.ok = false;
        det << "rotate_set mismatch; ";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    r.ok = r.ok && seconds < 1.0;
    r.detail = det.str().empty() ? "rho(-4,3)=(2,6) rho(-4,9)=(-5,8) rho(-7,6)=(-8,-4) set {(2,6),(-4,6)}" : det.str();
    return r;
}

struct Sweep {
    long pairs = 0;
    long crossing = 0;
    long serre_ext = 0;
    long serre_hom = 0;
    double seconds = 0;
};

std::vector<std::pair<int, Sweep>> sweeps()
{
    static std::vector<std::pair<int, Sweep>> cache;
    if (!cache.empty())
        return cache;
    for (int n : {1, 2, 3, 5}) {
        const ModelParams p(n);
        Sweep s;
        const auto started = std::chrono::steady_clock::now();
        const auto arcs = admissible_arcs(Window(-24, 24), p);
        for (const Arc& a : arcs) {
            for (const Arc& b : arcs) {
                ++s.pairs;
                const auto ab = ext_profile(a, b, p);
                const bool some = std::find(ab.begin(), ab.end(), 1) != ab.end();
                s.crossing += cross(a, b) != some;
                const auto ba = ext_profile(b, a, p);
                for (int i = 1; i <= n; ++i)
                    s.serre_ext += ab[i - 1] != ba[n - i];
                s.serre_hom += hom_dim(a, b, p) != hom_dim(b, serre(a, p), p);
            }
        }
        s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        cache.emplace_back(n, s);
    }
    return cache;
}

Outcome criterion_crossing_ext()
{
    Outcome r;
    Detail det;
    for (const auto& [n, s] : sweeps()) {
        r.ok = r.ok && s.crossing == 0 && s.seconds < 10.0;
        det << "n=" << n << ": " << s.pairs << " pairs, " << s.crossing << " mismatches, " << s.seconds << " s; ";
    }
    r.detail = det.str();
    return r;
}

Outcome criterion_serre()
{
    Outcome r;
    Detail det;
    for (const auto& [n, s] : sweeps()) {
        r.ok = r.ok && s.serre_ext == 0 && s.serre_hom == 0;
        det << "n=" << n << ": ext " << s.serre_ext << ", hom " << s.serre_hom << "; ";
    }
    r.detail = det.str();
    return r;
}

Outcome criterion_involution()
{
    long failures = 0;
    for (const auto& c : corpus()) {
        const Arc img = rotate_arc(c.a, c.d);
        const bool compatible = !c.d.contains(img) && std::none_of(c.d.arcs().begin(), c.d.arcs().end(),
                                                                   [&](const Arc& e) { return cross(e, img); });
        if (rotate_arc_inverse(img, c.d) != c.a || !is_admissible(img, c.d.params()) || !compatible)
            ++failures;
    }
    Detail det;
    det << corpus().size() << " cases (" << nested_cases() << " with nested dividers), " << failures << " failures";
    return {failures == 0 && corpus().size() == 1000, det.str()};
}

Outcome criterion_cell_walk()
{
    long mismatches = 0;
    for (const auto& c : corpus()) {
        const testsupport::CellWalk walk(c.a, c.d.arcs());
        for (int p : {c.a.t(), c.a.u()})
            mismatches += predecessor(p, c.a, c.d) != walk.prev(p);
        const Arc img = rotate_arc(c.a, c.d);
        const testsupport::CellWalk back(img, c.d.arcs());
        for (int p : {img.t(), img.u()})
            mismatches += successor(p, img, c.d) != back.next(p);
    }
    Detail det;
    det << corpus().size() << " cases, " << mismatches << " mismatches";
    return {mismatches == 0, det.str()};
}

Outcome criterion_triangle()
{
    long mismatches = 0, outside = 0, nonzero = 0;
    for (const auto& c : corpus()) {
        try {
            const RotationResult r = mutation_via_triangle(c.a, c.d);
            for (const Arc& m : r.via_triangle.middle()) {
                ++nonzero;
                outside += !c.d.contains(m);
            }
        } catch (const ArcError& e) {
            if (e.kind() != ErrorKind::TriangleMismatch)
                throw;
            ++mismatches;
        }
    }
    Detail det;
    det << mismatches << " TriangleMismatch, " << nonzero << " nonzero middle summands, " << outside << " outside D";
    return {mismatches == 0 && outside == 0, det.str()};
}

Outcome criterion_ptolemy()
{
    const ArcSet x0(n3, {Arc(-4, 0), Arc(-4, 3), Arc(-1, 3)});
    const bool ptolemy = is_ptolemy_window(x0, Window(-20, 20)).ok;
    std::vector<Arc> found;
    for (const Arc& a : admissible_arcs(Window(-20, 20), n3))
        if (!contains(x0, a) && in_nc_nc(a, x0))
            found.push_back(a);
    const std::vector<Arc> pinned = {Arc(-3, 1), Arc(-2, 2)};
    Detail det;
    det << "ptolemy=" << (ptolemy ? "true" : "false") << ", nc-nc witnesses:";
    for (const Arc& a : found)
        det << ' ' << to_string(a);
    return {ptolemy && found == pinned, det.str()};
}

Outcome criterion_closed_ptolemy()
{
    std::mt19937 rng(99);
    int closed = 0, violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> size(1, 6), base(-10, 0);
        const int lo = base(rng), hi = lo + 20;
        std::vector<Arc> arcs;
        const int k = size(rng);
        for (int i = 0; i < k; ++i)
            arcs.push_back(testsupport::random_admissible(rng, lo, hi, 3));
        // Bias half the trials towards closed sets by adding the closure.
        ArcSet s(n3, arcs);
        if (trial % 2 == 0) {
            const auto [m, M] = *s.explicit_span();
            for (const Arc& a : admissible_arcs(Window(m, M), n3))
                if (in_nc_nc(a, s))
                    arcs.push_back(a);
            s = ArcSet(n3, arcs);
        }
        const auto [m, M] = *s.explicit_span();
        const Window w(m - 5, M + 5);
        bool is_closed = true;
        for (const Arc& a : admissible_arcs(w, n3))
            if (in_nc_nc(a, s) && !contains(s, a))
                is_closed = false;
        if (!is_closed)
            continue;
        ++closed;
        violations += !is_ptolemy_window(s, w).ok;
    }
    Detail det;
    det << "200 sets, " << closed << " nc-nc closed, " << violations << " non-Ptolemy";
    return {violations == 0 && closed > 0, det.str()};
}

struct Harness {
    ArcSet x{n3, {Arc(-4, 3), Arc(-4, 6)}};
    ArcSet y = nc_closure(x);
    DividerSet d{n3, {Arc(-4, 6)}};
    Window w{-20, 20};
};

Outcome criterion_pair_harness()
{
    const Harness h;
    const PairReport base = check_pair(h.x, h.y, h.w);
    const MutationResult m = mutate_pair(h.x, h.y, h.d, h.w);

    const ArcSet literal(n3, {Arc(-4, 3), Arc(-4, 6)}, {HalfLeft{-4}, HalfRight{6}, Band{-5, 7}});
    const PairReport lit = check_pair(h.x, literal, h.w);
    const auto& wit = lit.x_equals_ncY.witnesses;
    const bool literal_ok = !lit.verdict && lit.y_covariant.witness == -4 &&
                            std::find(wit.begin(), wit.end(), Arc(-1, 3)) != wit.end();
    Detail det;
    det << "closure pair " << (base.verdict ? "passes" : "fails") << " on " << to_string(h.w) << ", mutated pair "
        << (m.report.verdict ? "passes" : "fails") << " on " << to_string(m.window) << ", literal example fails with "
        << "covariance witness " << (lit.y_covariant.witness ? std::to_string(*lit.y_covariant.witness) : "none")
        << " and X=ncY witness (-1,3) " << (literal_ok ? "present" : "absent");
    return {base.verdict && m.report.verdict && literal_ok, det.str()};
}

Outcome criterion_core_frame()
{
    const Harness h;
    const MutationResult m = mutate_pair(h.x, h.y, h.d, h.w);
    struct Case {
        const ArcSet& x;
        const ArcSet& y;
        Window w;
    };
    const Case cases[] = {{h.x, h.y, h.w}, {m.x, m.y, m.window}};
    bool ok = true;
    Detail det;
    for (const Case& c : cases) {
        const auto k = core(c.x, c.y, c.w);
        const bool equal = k == frame(c.x, c.w);
        const bool rigid = rigidity_check(k, n3).rigid;
        ok = ok && equal && rigid;
        det << "core " << k.size() << " arcs " << (equal ? "= frame" : "!= frame") << (rigid ? ", rigid; " : ", not rigid; ");
    }
    return {ok, det.str()};
}

Outcome criterion_cli()
{
    const testsupport::SchemaChecker schema(json::parse(testsupport::slurp(ARCMODEL_SCHEMA_PATH)));
    const std::string literal = testsupport::data_path("set_builder_pair.json");
    const std::string harness = testsupport::data_path("rotation_pair.json");
    struct Run {
        std::vector<std::string> args;
        int expected_exit;
    };
    const std::vector<Run> runs = {
        {{"check-pair", "--input", literal, "--x", "X", "--y", "Y", "--window", "-20..20"}, 1},
        {{"check-pair", "--input", harness, "--x", "X", "--y", "Y", "--window", "-20..20"}, 0},
        {{"mutate", "--input", harness, "--x", "X", "--y", "Y", "--d", "D", "--window", "-20..20"}, 0},
        {{"ext", "--n", "3", "--arcs", "(2,9) (-1,6)", "--degree", "1"}, 0},
    };
    bool ok = true;
    Detail det;
    for (Run run : runs) {
        run.args.insert(run.args.end(), {"--format", "json"});
        const CommandResult r = run_command(run.args);
        std::string problem;
        try {
            problem = schema.check(json::parse(r.out));
        } catch (const json::exception& e) {
            problem = e.what();
        }
        const bool good = r.exit_code == run.expected_exit && problem.empty();
        ok = ok && good;
        det << run.args[0] << " exit " << r.exit_code << (problem.empty() ? "" : " " + problem) << "; ";
    }
    const CommandResult ext = run_command({"ext", "--n", "3", "--arcs", "(2,9) (-1,6)", "--degree", "1"});
    ok = ok && ext.out == "1\n";

    const std::vector<std::string> render_args = {"render", "--input", harness, "--set", "X", "--highlight", "D",
                                                  "--window", "-8..10"};
    const CommandResult first = run_command(render_args);
    const CommandResult second = run_command(render_args);
    const bool same = first.exit_code == 0 && !first.out.empty() && first.out == second.out;
    ok = ok && same;
    det << "svg " << (same ? "byte-identical" : "differs");
    return {ok, det.str()};
}

} // namespace

int main()
{
    using Check = std::function<Outcome()>;
    const std::vector<std::pair<std::string, Check>> criteria = {
        {"rotation regression", criterion_rotation},
        {"crossing <=> Ext oracle", criterion_crossing_ext},
        {"Serre duality", criterion_serre},
        {"mutation involution", criterion_involution},
        {"cell-walk oracle equivalence", criterion_cell_walk},
        {"triangle agreement", criterion_triangle},
        {"Ptolemy regression", criterion_ptolemy},
        {"nc-nc closed sets are Ptolemy", criterion_closed_ptolemy},
        {"cotorsion pair harness", criterion_pair_harness},
        {"core/frame agreement", criterion_core_frame},
        {"CLI contract", criterion_cli},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto started = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        failed += !r.ok;
        std::cout << (r.ok ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << criteria[i].first << " (" << ms
                  << " ms): " << r.detail << '\n';
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
