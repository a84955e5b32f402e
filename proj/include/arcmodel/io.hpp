#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arcmodel/arc_set.hpp"
#include "arcmodel/cotorsion.hpp"

namespace arcmodel {

/// Named arc sets sharing one n. On disk:
///   {"n": 3, "sets": {"X": {"explicit": [[-4,3],[-4,6]],
///                           "families": [{"kind": "half_left", "p": -4}]}}}
/// Family kinds: left_fan {p, s_max}, right_fan {p, u_min},
/// band {k_max, l_min}, half_left {p}, half_right {q}.
struct Document {
    ModelParams params{1};
    std::map<std::string, ArcSet> sets;

    const ArcSet& set(const std::string& name) const;
};

/// Throws ParseError for malformed JSON (with line and column) and
/// ValidationError for schema violations (with the JSON pointer of the field).
Document parse_document(std::string_view text, std::optional<int> n_override = std::nullopt);
std::string serialize_document(const Document& doc);

nlohmann::json to_json(const Arc& a);
nlohmann::json to_json(const FountainFamily& f);
nlohmann::json to_json(const ArcSet& s);
nlohmann::json to_json(const Window& w);
nlohmann::json to_json(const IntRegion& r);
/// Condition-by-condition view of a report, each tagged exact or windowed.
nlohmann::json to_json(const PairReport& r);
/// Flat witness list: {"condition", "arc"} or {"condition", "point"} objects.
nlohmann::json witnesses_json(const PairReport& r);

ArcSet arc_set_from_json(const nlohmann::json& j, const ModelParams& p, const std::string& locus);

/// Parses "LO..HI", inclusive on both ends.
Window parse_window(std::string_view text);
/// Parses a whitespace separated list of "(t,u)" pairs.
std::vector<Arc> parse_arc_list(std::string_view text);

enum class RenderStyle { Svg, Text };

struct RenderSpec {
    std::string set;
    Window window{0, 1};
    RenderStyle style = RenderStyle::Svg;
    std::optional<std::string> highlight;
};

struct RenderOutput {
    std::string bytes;
    std::vector<std::string> warnings;
};

/// SVG: a number line with one tick per integer of the window and each arc
/// drawn as a semicircle above it; highlighted arcs use a separate class.
/// Text: the arcs in the window bucketed by AR component.
/// Output depends only on the inputs (arcs are emitted sorted by (t, u)).
RenderOutput render(const Document& doc, const RenderSpec& spec);

std::string render_svg(const std::vector<Arc>& arcs, const std::vector<Arc>& highlighted, const Window& w);
std::string render_text(const std::vector<Arc>& arcs, const ModelParams& p, const Window& w);

} // namespace arcmodel
