#include "arcmodel/io.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace arcmodel {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& locus, const std::string& what)
{
    throw ArcError(ErrorKind::ValidationError, locus + ": " + what);
}

int require_int(const json& obj, const std::string& key, const std::string& locus)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        invalid(locus, "missing integer field \"" + key + "\"");
    if (!it->is_number_integer())
        invalid(locus + "/" + key, "expected an integer");
    return it->get<int>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& locus)
{
    for (const auto& [key, value] : obj.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            invalid(locus + "/" + key, "unknown field");
    }
}

FountainFamily family_from_json(const json& j, const std::string& locus)
{
    if (!j.is_object())
        invalid(locus, "family must be an object");
    const auto kind_it = j.find("kind");
    if (kind_it == j.end() || !kind_it->is_string())
        invalid(locus, "family needs a string \"kind\"");
    const std::string kind = kind_it->get<std::string>();
    if (kind == "left_fan") {
        reject_unknown_keys(j, {"kind", "p", "s_max"}, locus);
        return LeftFan{require_int(j, "p", locus), require_int(j, "s_max", locus)};
    }
    if (kind == "right_fan") {
        reject_unknown_keys(j, {"kind", "p", "u_min"}, locus);
        return RightFan{require_int(j, "p", locus), require_int(j, "u_min", locus)};
    }
    if (kind == "band") {
        reject_unknown_keys(j, {"kind", "k_max", "l_min"}, locus);
        return Band{require_int(j, "k_max", locus), require_int(j, "l_min", locus)};
    }
    if (kind == "half_left") {
        reject_unknown_keys(j, {"kind", "p"}, locus);
        return HalfLeft{require_int(j, "p", locus)};
    }
    if (kind == "half_right") {
        reject_unknown_keys(j, {"kind", "q"}, locus);
        return HalfRight{require_int(j, "q", locus)};
    }
    invalid(locus + "/kind", "unknown family kind \"" + kind + "\"");
}

std::pair<int, int> line_and_column(std::string_view text, std::size_t byte)
{
    int line = 1, column = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

} // namespace

const ArcSet& Document::set(const std::string& name) const
{
    const auto it = sets.find(name);
    if (it == sets.end())
        throw ArcError(ErrorKind::ValidationError, "no set named \"" + name + "\" in the document");
    return it->second;
}

ArcSet arc_set_from_json(const json& j, const ModelParams& p, const std::string& locus)
{
    if (!j.is_object())
        invalid(locus, "set must be an object");
    reject_unknown_keys(j, {"explicit", "families"}, locus);

    std::vector<Arc> arcs;
    if (const auto it = j.find("explicit"); it != j.end()) {
        if (!it->is_array())
            invalid(locus + "/explicit", "expected an array of [t, u] pairs");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& pair = (*it)[i];
            const std::string here = locus + "/explicit/" + std::to_string(i);
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
                invalid(here, "expected [t, u] with integer endpoints");
            const int t = pair[0].get<int>(), u = pair[1].get<int>();
            if (t == u)
                invalid(here, "degenerate pair [" + std::to_string(t) + ", " + std::to_string(u) + "]");
            const Arc a(t, u);
            if (!is_admissible(a, p))
                invalid(here, "arc " + to_string(a) + " is not " + std::to_string(p.n()) + "-admissible");
            arcs.push_back(a);
        }
    }
    std::vector<FountainFamily> families;
    if (const auto it = j.find("families"); it != j.end()) {
        if (!it->is_array())
            invalid(locus + "/families", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
            families.push_back(family_from_json((*it)[i], locus + "/families/" + std::to_string(i)));
    }
    return ArcSet(p, arcs, families);
}

Document parse_document(std::string_view text, std::optional<int> n_override)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_and_column(text, e.byte);
        throw ArcError(ErrorKind::ParseError,
                       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
    }
    if (!root.is_object())
        invalid("", "document must be a JSON object");
    reject_unknown_keys(root, {"n", "sets"}, "");

    int n = 0;
    if (n_override)
        n = *n_override;
    else
        n = require_int(root, "n", "");
    if (n < 1)
        invalid("/n", "n must be >= 1");
    Document doc{ModelParams(n), {}};

    if (const auto it = root.find("sets"); it != root.end()) {
        if (!it->is_object())
            invalid("/sets", "expected an object of named sets");
        for (const auto& [name, value] : it->items())
            doc.sets.emplace(name, arc_set_from_json(value, doc.params, "/sets/" + name));
    }
    return doc;
}

json to_json(const Arc& a)
{
    return json::array({a.t(), a.u()});
}

json to_json(const FountainFamily& f)
{
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, LeftFan>)
                return {{"kind", "left_fan"}, {"p", x.p}, {"s_max", x.s_max}};
            else if constexpr (std::is_same_v<T, RightFan>)
                return {{"kind", "right_fan"}, {"p", x.p}, {"u_min", x.u_min}};
            else if constexpr (std::is_same_v<T, Band>)
                return {{"kind", "band"}, {"k_max", x.k_max}, {"l_min", x.l_min}};
            else if constexpr (std::is_same_v<T, HalfLeft>)
                return {{"kind", "half_left"}, {"p", x.p}};
            else
                return {{"kind", "half_right"}, {"q", x.q}};
        },
        f);
}

json to_json(const ArcSet& s)
{
    json arcs = json::array();
    for (const Arc& a : s.explicit_arcs())
        arcs.push_back(to_json(a));
    json families = json::array();
    for (const FountainFamily& f : s.families())
        families.push_back(to_json(f));
    return {{"explicit", arcs}, {"families", families}};
}

json to_json(const Window& w)
{
    return json::array({w.lo(), w.hi()});
}

json to_json(const IntRegion& r)
{
    json out = {{"points", json::array()}, {"left_ray", nullptr}, {"right_ray", nullptr}};
    for (int v : r.points())
        out["points"].push_back(v);
    if (r.left_ray())
        out["left_ray"] = *r.left_ray();
    if (r.right_ray())
        out["right_ray"] = *r.right_ray();
    return out;
}

json to_json(const PairReport& r)
{
    auto windowed = [](const WindowedCondition& c) {
        json arcs = json::array();
        for (const Arc& a : c.witnesses)
            arcs.push_back(to_json(a));
        return json{{"holds", c.holds}, {"mode", "windowed"}, {"witnesses", arcs}};
    };
    auto exact = [](const ExactCondition& c) {
        return json{{"holds", c.holds}, {"mode", "exact"}, {"witness", c.witness ? json(*c.witness) : json(nullptr)}};
    };
    return {
        {"window", to_json(r.window)},
        {"x_equals_ncY", windowed(r.x_equals_ncY)},
        {"y_equals_ncX", windowed(r.y_equals_ncX)},
        {"x_contravariant", exact(r.x_contravariant)},
        {"y_covariant", exact(r.y_covariant)},
        {"verdict", r.verdict},
    };
}

json witnesses_json(const PairReport& r)
{
    json out = json::array();
    for (const Arc& a : r.x_equals_ncY.witnesses)
        out.push_back({{"condition", "x_equals_ncY"}, {"arc", to_json(a)}});
    for (const Arc& a : r.y_equals_ncX.witnesses)
        out.push_back({{"condition", "y_equals_ncX"}, {"arc", to_json(a)}});
    if (r.x_contravariant.witness)
        out.push_back({{"condition", "x_contravariant"}, {"point", *r.x_contravariant.witness}});
    if (r.y_covariant.witness)
        out.push_back({{"condition", "y_covariant"}, {"point", *r.y_covariant.witness}});
    return out;
}

std::string serialize_document(const Document& doc)
{
    json root = {{"n", doc.params.n()}, {"sets", json::object()}};
    for (const auto& [name, s] : doc.sets)
        root["sets"][name] = to_json(s);
    return root.dump(2) + "\n";
}

Window parse_window(std::string_view text)
{
    static const std::regex pattern(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, pattern))
        throw ArcError(ErrorKind::ValidationError, "window must look like LO..HI, got \"" + std::string(text) + "\"");
    return Window(std::stoi(m[1].str()), std::stoi(m[2].str()));
}

std::vector<Arc> parse_arc_list(std::string_view text)
{
    static const std::regex pair(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    std::vector<Arc> out;
    std::string rest(text);
    std::smatch m;
    std::string leftover;
    auto begin = rest.cbegin();
    while (std::regex_search(begin, rest.cend(), m, pair)) {
        leftover.append(m.prefix().first, m.prefix().second);
        const int t = std::stoi(m[1].str()), u = std::stoi(m[2].str());
        out.push_back(Arc(t, u));
        begin = m.suffix().first;
    }
    leftover.append(begin, rest.cend());
    if (std::any_of(leftover.begin(), leftover.end(), [](unsigned char c) { return !std::isspace(c); }))
        throw ArcError(ErrorKind::ValidationError, "cannot parse arcs from \"" + std::string(text) + "\"");
    return out;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_svg(const std::vector<Arc>& arcs, const std::vector<Arc>& highlighted, const Window& w)
{
    constexpr int unit = 30;
    constexpr int margin = 30;
    const int half = unit / 2;

    std::set<Arc> hl(highlighted.begin(), highlighted.end());
    std::set<Arc> plain;
    for (const Arc& a : arcs)
        if (!hl.count(a))
            plain.insert(a);

    int longest = 0;
    for (const Arc& a : plain)
        longest = std::max(longest, a.length());
    for (const Arc& a : hl)
        longest = std::max(longest, a.length());

    const int width = (w.hi() - w.lo()) * unit + 2 * margin;
    const int baseline = longest * half + margin;
    const int height = baseline + margin + 20;
    auto x = [&](int v) { return margin + (v - w.lo()) * unit; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<style>"
          ".arc{fill:none;stroke:#000;stroke-width:2}"
          ".highlight{fill:none;stroke:#c00;stroke-width:3}"
          ".tick{fill:#000}"
          "text{font-family:sans-serif;font-size:11px;text-anchor:middle}"
          "</style>\n";
    os << "<line x1=\"" << x(w.lo()) << "\" y1=\"" << baseline << "\" x2=\"" << x(w.hi()) << "\" y2=\"" << baseline
       << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    for (int v = w.lo(); v <= w.hi(); ++v) {
        os << "<circle class=\"tick\" cx=\"" << x(v) << "\" cy=\"" << baseline << "\" r=\"3\"/>";
        os << "<text x=\"" << x(v) << "\" y=\"" << baseline + 18 << "\">" << v << "</text>\n";
    }
    auto path = [&](const Arc& a, const char* cls) {
        const int r = a.length() * half;
        os << "<path class=\"" << cls << "\" d=\"M " << x(a.t()) << ' ' << baseline << " A " << r << ' ' << r
           << " 0 0 1 " << x(a.u()) << ' ' << baseline << "\"/>\n";
    };
    for (const Arc& a : plain)
        path(a, "arc");
    for (const Arc& a : hl)
        path(a, "highlight");
    os << "</svg>\n";
    return os.str();
}

std::string render_text(const std::vector<Arc>& arcs, const ModelParams& p, const Window& w)
{
    const int n = p.n();
    std::vector<std::vector<Arc>> buckets(n);
    for (const Arc& a : arcs)
        buckets[component(a, p).idx].push_back(a);

    std::ostringstream os;
    os << "window " << to_string(w) << ", n = " << n << ", " << arcs.size() << " arcs\n";
    for (int c = 0; c < n; ++c) {
        std::sort(buckets[c].begin(), buckets[c].end());
        // Component c holds the arcs with u = c (mod n); Sigma maps it to c - 1.
        const int power = floor_mod(n - c, n);
        std::string label = power == 0 ? "R" : power == 1 ? "Sigma R" : "Sigma^" + std::to_string(power) + " R";
        os << "component " << c << " (" << label << "):";
        for (const Arc& a : buckets[c])
            os << ' ' << to_string(a);
        os << '\n';
    }
    return os.str();
}

RenderOutput render(const Document& doc, const RenderSpec& spec)
{
    const ArcSet& s = doc.set(spec.set);
    RenderOutput out;
    const std::vector<Arc> arcs = s.members_in(spec.window);
    if (arcs.empty() && !(s.explicit_arcs().empty() && s.families().empty())) {
        if (s.is_finite())
            throw ArcError(ErrorKind::WindowTooSmall,
                           "set \"" + spec.set + "\" has no arc inside " + to_string(spec.window));
        out.warnings.push_back("set \"" + spec.set + "\" has no arc inside " + to_string(spec.window)
                               + "; its families extend beyond the window");
    }
    std::vector<Arc> highlighted;
    if (spec.highlight)
        highlighted = doc.set(*spec.highlight).members_in(spec.window);

    if (spec.style == RenderStyle::Svg) {
        out.bytes = render_svg(arcs, highlighted, spec.window);
    } else {
        std::set<Arc> all(arcs.begin(), arcs.end());
        all.insert(highlighted.begin(), highlighted.end());
        out.bytes = render_text({all.begin(), all.end()}, doc.params, spec.window);
    }
    return out;
}

} // namespace arcmodel
